//! Frobenius number, gaps, Apéry set and denumerants of a classical semigroup.

use nsq::semigroup::{apery, build_membership, denumerant, denumerant_series, frobenius, gaps, minimal_generators};
use nsq::{GeneratorList, Limits};

fn main() -> nsq::Result<()> {
    let limits = Limits::default();
    // the chicken-nugget semigroup
    let a = GeneratorList::new(&[6, 9, 20])?;

    let table = build_membership(&a, None, &limits)?;
    println!("A = {:?}, sieve bound {} (certified: {})", a.sorted(), table.bound(), table.is_certified());
    println!("Frobenius number: {:?}", frobenius(&a, &limits)?);
    println!("gaps: {:?}", gaps(&a, &limits)?);
    println!("Apéry set w.r.t. 6: {:?}", apery(&a, 6, &limits)?);

    let redundant = GeneratorList::new(&[6, 9, 12, 20, 26])?;
    println!("minimal generators of {:?}: {:?}", redundant.sorted(), minimal_generators(&redundant, &limits)?);

    println!("d(100; 6, 9, 20) = {}", denumerant(100, &a));
    let s = denumerant_series(&GeneratorList::new(&[3, 5])?, 15);
    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("d(n; 3, 5), n = 0..=15: {}", coeffs.join(" "));
    Ok(())
}
