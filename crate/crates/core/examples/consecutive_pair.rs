//! `⟨a, a+1⟩/(a-1)`: a half-line semigroup whose closed form depends on the
//! parity of `a`.

use nsq::quotient::{frobenius_quotient, minimal_quotient_generators};
use nsq::rgf::rgf_rational;
use nsq::{Limits, QuotientSpec};

fn main() -> nsq::Result<()> {
    let limits = Limits::default();
    for a in 3..=12u64 {
        let q = QuotientSpec::from_slice(&[a, a + 1], a - 1)?;
        let r = rgf_rational(q.gens(), q.p(), &limits)?;
        let expected_frob = if a % 2 == 1 { (a - 1) / 2 } else { a / 2 };
        println!(
            "a = {a:2}: minimal {:?}, F = {:?} (expected {expected_frob})",
            minimal_quotient_generators(&q, &limits)?,
            frobenius_quotient(&q, &limits)?
        );
        println!("        RGF = {r}");
    }
    Ok(())
}
