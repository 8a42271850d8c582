//! Constant terms in λ of Elliott-rational functions over ℚ(x).
//!
//! An expression is `λ^s · N(λ) / Π (1 - c_i·x^{e_i}·λ^{b_i})`, expanded in
//! the field of iterated Laurent series ℚ((λ))((x)). A monomial `x^e λ^b` is
//! *small* when `e > 0`, or `e = 0` and `b > 0`; small monomials expand as
//! geometric series directly, large ones after factoring themselves out.
//!
//! After normalizing every `b_i` to be nonnegative, the partial fraction
//! decomposition `E = P(λ) + Σ A_s(λ) / (1 - u_s λ^{b_s})` gives
//!
//! ```text
//! CT E = [λ^0] P + Σ_{small s} A_s(0)          (primal)
//!      = E|_{λ=0} - Σ_{large s} A_s(0)          (dual, when E has no pole at 0)
//! ```
//!
//! Both are computed and compared on every call.

mod expr;
mod grammar;
mod laurent;
mod residue;
mod series;

pub use expr::{classify_monomial, BinomialFactor, CtExpr, LambdaPoly, MonomialClass};
pub use grammar::{parse_expr, render_expr};
pub use residue::{ct_constant_term, ct_report, lemma_zero_check, residue_a0, CtReport, Residue};
pub use series::{ct_series, integer_coeffs, CtSeries};

use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;
use crate::rgf::RgfRational;
use crate::semigroup::GeneratorList;

pub fn normalize_expr(e: &CtExpr) -> CtExpr {
    e.normalize()
}

pub fn reduce_factor_mod(e: &CtExpr, s: usize) -> Result<CtExpr> {
    e.reduce_factor_mod(s)
}

/// `1 / ((1 - x·λ^{-p}) · Π (1 - λ^{a_i}))`, whose constant term in λ is
/// `RGF_p(x)`. Factor 0 is the x-factor; factor `i + 1` belongs to `a_i`.
pub fn build_rgf_expr(gens: &GeneratorList, p: u64) -> Result<CtExpr> {
    if p == 0 {
        return Err(Error::InvalidDivisor);
    }
    let to_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::PreconditionUnmet(format!("{v} exceeds i64")));
    let mut factors = vec![BinomialFactor::unit(1, -to_i64(p)?)];
    for &a in gens.original() {
        factors.push(BinomialFactor::unit(0, to_i64(a)?));
    }
    Ok(CtExpr::from_factors(factors))
}

/// `RGF_p` as the constant term of [`build_rgf_expr`].
///
/// The expression is first reduced modulo its single large factor, using
/// `λ^p ≡ x`: each `1 - λ^{a_i}` becomes `1 - x^{k_i}·λ^{t_i}` with
/// `a_i = k_i·p + t_i`. This leaves the constant term unchanged and turns
/// every divisible `a_i` into a λ-free factor. Fails with
/// `NonCoprimeFactors` when two reduced factors still share a root, as
/// `1 - x·λ` and `1 - x^2·λ^2` do for `A = (4, 8, 11)`, `p = 3`.
pub fn ct_rgf_rational(gens: &GeneratorList, p: u64) -> Result<RationalFunction> {
    let e = build_rgf_expr(gens, p)?;
    let reduced = e.reduce_factor_mod(0)?;
    ct_constant_term(&reduced)
}

/// [`ct_rgf_rational`] written over the denominator `Π (1 - x^{b_i})`,
/// `b_i = a_i / gcd(a_i, p)`, when the numerator comes out integral.
pub fn ct_rgf_closed_form(gens: &GeneratorList, p: u64) -> Result<Option<RgfRational>> {
    let f = ct_rgf_rational(gens, p)?;
    let den: Vec<u64> = gens.original().iter().map(|&a| a / num::integer::gcd(a, p)).collect();
    Ok(RgfRational::from_rational_function(&f, &den))
}
