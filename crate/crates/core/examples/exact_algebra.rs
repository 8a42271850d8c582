//! The exact polynomial, rational-function and series layer on its own.

use nsq::exactalg::{rat, Poly, RationalFunction};

fn main() -> nsq::Result<()> {
    let a = Poly::one_minus_x_pow(6);
    let b = Poly::one_minus_x_pow(4);
    println!("gcd({a}, {b}) = {}", a.gcd(&b));
    let (q, r) = a.divmod(&b)?;
    println!("({a}) = ({b})·({q}) + ({r})");

    let f = RationalFunction::new(Poly::from_ints(&[1, 0, 0, 0, 1]), &Poly::one_minus_x_pow(3) * &Poly::one_minus_x_pow(5))?;
    println!("f = {f}");
    let s = f.series(12)?;
    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("f = {} + …", coeffs.join(", "));

    let g = &f * &RationalFunction::from_poly(Poly::one_minus_x_pow(3));
    println!("f·(1 - x^3) = {g}");
    println!("(x/2)^-2 = {}", RationalFunction::monomial(rat(1) / rat(2), 1).powi(-2)?);
    Ok(())
}
