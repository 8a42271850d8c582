//! `⟨5, 6⟩/3` three ways: direct sieve, the residue-tuple generator system,
//! and its minimal generators.

use nsq::quotient::{
    frobenius_quotient, generators_thm, minimal_quotient_generators, quotient_table, verify_generators,
};
use nsq::{Limits, QuotientSpec};

fn main() -> nsq::Result<()> {
    let limits = Limits::default();

    let q = QuotientSpec::from_slice(&[5, 6], 3)?;
    let table = quotient_table(&q, &limits)?;
    println!("⟨5,6⟩/3 members up to {}: {:?}", table.bound(), table.members());
    println!("generator system: {:?}", generators_thm(&q, &limits)?);
    println!("minimal generators: {:?}", minimal_quotient_generators(&q, &limits)?);
    println!("Frobenius number: {:?}", frobenius_quotient(&q, &limits)?);

    // residues 1 and 2 mod 3 pair up in T_3
    let q = QuotientSpec::from_slice(&[7, 11, 15], 3)?;
    let tp = q.tp_set(&limits)?;
    print!("T_3 over {:?}:\n{tp}", q.coprime_part());
    let report = verify_generators(&q, &limits)?;
    println!(
        "generators {:?} match the sieve up to {}: {}",
        report.generators, report.bound, report.passed
    );
    Ok(())
}
