//! Constant terms in λ by partial fractions, and `RGF_p` recovered as one.

use nsq::ctengine::{
    build_rgf_expr, ct_report, ct_rgf_closed_form, ct_rgf_rational, ct_series, lemma_zero_check, parse_expr,
    render_expr,
};
use nsq::rgf::rgf_rational;
use nsq::{Error, GeneratorList, Limits};

fn main() -> nsq::Result<()> {
    let e = parse_expr("1/((1 - x*L^-2)*(1 - L^3))")?;
    let rep = ct_report(&e)?;
    println!("{}", render_expr(&e).unwrap());
    for r in &rep.residues {
        println!("  factor {}: A(0) = {}  ({:?})", r.factor_index, r.a0, r.class);
    }
    println!("  primal = {}, dual = {:?}", rep.primal, rep.dual.as_ref().map(ToString::to_string));
    println!("  direct expansion: {}", ct_series(&e, 9)?.to_string_in("x"));

    // proper and vanishing at λ = 0: residues sum to zero
    let e = parse_expr("L/((1 - x*L)*(1 - x^3*L^2))")?;
    println!("zero-sum check on {}: {}", render_expr(&e).unwrap(), lemma_zero_check(&e)?);

    let limits = Limits::default();
    let a = GeneratorList::new(&[4, 11, 14])?;
    println!("{}", render_expr(&build_rgf_expr(&a, 3)?).unwrap());
    let f = ct_rgf_rational(&a, 3)?;
    if let Some(r) = ct_rgf_closed_form(&a, 3)? {
        println!("  CT = {r}");
    }
    println!("  same as the series closed form: {}", f == rgf_rational(&a, 3, &limits)?.to_rational_function());

    // reduced factors 1 - xλ and 1 - x^2λ^2 share the root λ = 1/x
    let a = GeneratorList::new(&[4, 8, 11])?;
    match ct_rgf_rational(&a, 3) {
        Err(Error::NonCoprimeFactors { first, second }) => {
            println!("⟨4,8,11⟩/3: factors {first} and {second} not coprime; series route instead:");
            println!("  {}", rgf_rational(&a, 3, &limits)?);
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
