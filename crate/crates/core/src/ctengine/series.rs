//! Constant term by direct expansion, truncated in x.
//!
//! Every factor is expanded as a geometric series of its small monomial
//! (`1/(1-m) = Σ m^k`, or `-Σ_{k≥1} m^{-k}` when `m` is large). Either way
//! the expansion uses only nonnegative powers of x, so truncating at a fixed
//! x-degree keeps finitely many terms per degree once λ is also bounded.

use num::{BigInt, BigRational, One, Zero};

use super::expr::{classify_monomial, BinomialFactor, CtExpr, MonomialClass};
use crate::error::{Error, Result};

/// `Σ coeffs[i]·x^{offset + i}`, exact through `x^{offset + coeffs.len() - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtSeries {
    pub x_offset: i64,
    pub coeffs: Vec<BigRational>,
}

impl CtSeries {
    /// Coefficient of `x^e`, or `None` beyond the truncation order.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e < self.x_offset {
            return Some(BigRational::zero());
        }
        self.coeffs.get((e - self.x_offset) as usize).cloned()
    }

    pub fn order(&self) -> i64 {
        self.x_offset + self.coeffs.len() as i64 - 1
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.x_offset + i as i64;
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => mono,
                (false, false) if *c == -BigRational::one() => format!("-{mono}"),
                (false, false) => format!("{c}*{mono}"),
            });
        }
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        format!("{body} + O({var}^{})", self.order() + 1)
    }
}

/// Sparse terms `(x_exp, λ_exp, coeff)`.
type Terms = Vec<(i64, i64, BigRational)>;

/// Terms of `1/(1 - c·x^e·λ^b)` with x-degree at most `n` and λ-degree at
/// most `hi`. Constant factors are handled by the caller.
fn factor_terms(f: &BinomialFactor, n: i64, hi: i64) -> Terms {
    let (c, e, b, lead) = match classify_monomial(f.x_exp, f.l_exp) {
        MonomialClass::Small => (f.coeff.clone(), f.x_exp, f.l_exp, false),
        MonomialClass::Large => (f.coeff.recip(), -f.x_exp, -f.l_exp, true),
        MonomialClass::One => unreachable!("constant factors are scalars"),
    };
    // expansion Σ_{k ≥ k0} (sign)·(c x^e λ^b)^k, with e ≥ 0 and b > 0 when e = 0
    let (k0, sign) = if lead { (1, -BigRational::one()) } else { (0, BigRational::one()) };
    let mut out = Vec::new();
    let mut k = k0;
    let mut ck = num::pow(c.clone(), k0 as usize);
    loop {
        let (xe, le) = (e * k, b * k);
        if xe > n || (e == 0 && le > hi) {
            break;
        }
        if le <= hi {
            out.push((xe, le, &sign * &ck));
        }
        k += 1;
        ck = &ck * &c;
    }
    out
}

/// Lowest λ-exponent among the terms of `factor_terms(f, n, ∞)`.
fn factor_low(f: &BinomialFactor, n: i64) -> i64 {
    let (e, b, k0) = match classify_monomial(f.x_exp, f.l_exp) {
        MonomialClass::Small => (f.x_exp, f.l_exp, 0),
        MonomialClass::Large => (-f.x_exp, -f.l_exp, 1),
        MonomialClass::One => return 0,
    };
    if b >= 0 {
        return b * k0;
    }
    // e > 0 here, so k ≤ n / e
    b * (n / e).max(k0)
}

/// Numerator terms; each coefficient must be a Laurent polynomial in x.
fn numerator_terms(e: &CtExpr) -> Result<Terms> {
    let mut out = Vec::new();
    for (i, c) in e.numerator().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let den = c.den();
        let v = den.valuation();
        if den.degree() != Some(v) {
            return Err(Error::PreconditionUnmet(
                "series expansion needs numerator coefficients that are Laurent polynomials in x".into(),
            ));
        }
        let scale = den.coeff(v).recip();
        for (j, a) in c.num().coeffs().iter().enumerate() {
            if !a.is_zero() {
                out.push((j as i64 - v as i64, i as i64 + e.shift(), a * &scale));
            }
        }
    }
    Ok(out)
}

/// Constant term in λ of `e`, as a power series in x through `x^order`.
pub fn ct_series(e: &CtExpr, order: i64) -> Result<CtSeries> {
    let num = numerator_terms(e)?;
    let mut scalar = BigRational::one();
    let mut lam = Vec::new();
    for f in e.factors() {
        if f.x_exp == 0 && f.l_exp == 0 {
            scalar = scalar / (BigRational::one() - &f.coeff);
        } else {
            lam.push(f);
        }
    }
    if num.is_empty() {
        return Ok(CtSeries {
            x_offset: order,
            coeffs: vec![BigRational::zero()],
        });
    }
    let x_off = num.iter().map(|t| t.0).min().unwrap();
    if order < x_off {
        return Ok(CtSeries {
            x_offset: order,
            coeffs: vec![BigRational::zero()],
        });
    }
    let n = order - x_off;
    let num_low = num.iter().map(|t| t.1).min().unwrap();
    let low: i64 = num_low.min(0) + lam.iter().map(|f| factor_low(f, n).min(0)).sum::<i64>();
    let hi = -low;
    let width = (hi - low + 1) as usize;
    let rows = (n + 1) as usize;

    // acc[j][l - low]: coefficient of x^{x_off + j} λ^l
    let mut acc = vec![vec![BigRational::zero(); width]; rows];
    for (xe, le, c) in &num {
        if *le <= hi {
            let cell = &mut acc[(xe - x_off) as usize][(le - low) as usize];
            *cell = &*cell + c;
        }
    }
    for f in lam {
        let terms = factor_terms(f, n, hi - low);
        let mut next = vec![vec![BigRational::zero(); width]; rows];
        for (j, row) in acc.iter().enumerate() {
            for (li, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let l = li as i64 + low;
                for (xe, le, c) in &terms {
                    let (jj, ll) = (j as i64 + xe, l + le);
                    if jj > n || ll > hi || ll < low {
                        continue;
                    }
                    let cell = &mut next[jj as usize][(ll - low) as usize];
                    *cell = &*cell + &(a * c);
                }
            }
        }
        acc = next;
    }
    let coeffs = acc.iter().map(|row| &row[(-low) as usize] * &scalar).collect();
    Ok(CtSeries { x_offset: x_off, coeffs })
}

/// Integer view of a series, when every coefficient is integral.
pub fn integer_coeffs(s: &CtSeries) -> Option<Vec<BigInt>> {
    s.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctengine::grammar::parse_expr;
    use crate::exactalg::rat;

    fn ints(s: &CtSeries) -> Vec<i64> {
        s.coeffs.iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn rgf_shape_counts_representations() {
        // CT = Σ_n d(3n; 5, 6) x^n
        let e = parse_expr("1/((1 - x*L^-3)*(1 - L^5)*(1 - L^6))").unwrap();
        let s = ct_series(&e, 8).unwrap();
        assert_eq!(s.x_offset, 0);
        assert_eq!(ints(&s), vec![1, 0, 1, 0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn two_factor_example() {
        let e = parse_expr("1/((1 - x*L^-2)*(1 - L^3))").unwrap();
        assert_eq!(ints(&ct_series(&e, 6).unwrap()), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn large_factor_and_offset() {
        // λ^-1/(1 - xλ) has constant term x
        let e = parse_expr("L^-1/(1 - x*L)").unwrap();
        assert_eq!(ints(&ct_series(&e, 3).unwrap()), vec![0, 1, 0, 0]);
        // x^-2/(1 - L^-1): large factor, all λ-exponents positive, CT 0
        let e = parse_expr("x^-2/(1 - L^-1)").unwrap();
        let s = ct_series(&e, 1).unwrap();
        assert_eq!(s.x_offset, -2);
        assert!(s.coeffs.iter().all(Zero::is_zero));
    }

    #[test]
    fn scalar_factor() {
        let e = CtExpr::from_factors(vec![BinomialFactor::new(rat(2), 0, 0).unwrap()]);
        assert_eq!(ct_series(&e, 0).unwrap().coeffs, vec![rat(-1)]);
    }

    #[test]
    fn rendering() {
        let e = parse_expr("1/((1 - x*L^-2)*(1 - L^3))").unwrap();
        assert_eq!(ct_series(&e, 4).unwrap().to_string_in("x"), "1 + x^3 + O(x^5)");
    }
}
