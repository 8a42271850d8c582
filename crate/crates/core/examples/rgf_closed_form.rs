//! `RGF_p` as a series, as a certified closed form, and what it says about
//! the quotient.

use nsq::rgf::{frobenius_from_rgf, gens_from_rgf, rgf_rational, rgf_series};
use nsq::{GeneratorList, Limits, RgfRational};

fn main() -> nsq::Result<()> {
    let limits = Limits::default();

    for (gens, p) in [(vec![3, 5], 2), (vec![4, 11, 14], 3), (vec![5, 6], 3)] {
        let a = GeneratorList::new(&gens)?;
        let s = rgf_series(&a, p, 12, &limits)?;
        let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
        println!("A = {gens:?}, p = {p}");
        println!("  d(p·n), n = 0..=12: {}", coeffs.join(" "));

        let r = rgf_rational(&a, p, &limits)?;
        println!("  closed form: {r}");
        println!("  certified to x^{}", r.certified_to().unwrap_or(0));
        println!("  json: {}", r.to_json());
        println!("  generators from the form: {:?}", gens_from_rgf(&r)?);
        println!("  Frobenius of the quotient: {:?}", frobenius_from_rgf(&a, p, &limits)?);

        let back = RgfRational::from_json(&r.to_json())?;
        assert_eq!(back, r);
    }
    Ok(())
}
