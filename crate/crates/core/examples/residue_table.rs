//! Closed-form generator systems for three generators and p ∈ {2, 3}, looked
//! up by residue pattern and checked against the direct quotient.

use nsq::quotient::{minimal_quotient_generators, quotient_table, table1_generators, TABLE1};
use nsq::semigroup::build_membership;
use nsq::{GeneratorList, Limits, QuotientSpec};

fn main() -> nsq::Result<()> {
    let limits = Limits::default();
    println!("{} rows; residues (a1, a2, a3) mod p:", TABLE1.len());
    for row in &TABLE1 {
        println!("  p = {}  residues {:?}  {} generators", row.p, row.residues, row.terms.len());
    }

    for (gens, p) in [(vec![4, 11, 14], 3), (vec![3, 5, 7], 2), (vec![7, 10, 13], 3)] {
        let q = QuotientSpec::from_slice(&gens, p)?;
        let listed = table1_generators(&q)?;
        let same = quotient_table(&q, &limits)?.same_semigroup(&build_membership(
            &GeneratorList::new(&listed)?,
            None,
            &limits,
        )?)?;
        println!(
            "⟨{gens:?}⟩/{p}: table gives {listed:?}, minimal {:?}, equal to quotient: {same}",
            minimal_quotient_generators(&q, &limits)?
        );
    }
    Ok(())
}
