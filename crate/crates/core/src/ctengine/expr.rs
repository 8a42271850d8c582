use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{DensePoly, RationalFunction};

/// Polynomial in λ with coefficients in ℚ(x).
pub type LambdaPoly = DensePoly<RationalFunction>;

/// Position of a monomial `x^e λ^b` in the ordering of ℚ((λ))((x)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialClass {
    Small,
    Large,
    One,
}

/// Small iff `e > 0`, or `e = 0` and `b > 0`.
pub fn classify_monomial(x_exp: i64, l_exp: i64) -> MonomialClass {
    match (x_exp, l_exp) {
        (0, 0) => MonomialClass::One,
        (e, _) if e > 0 => MonomialClass::Small,
        (0, b) if b > 0 => MonomialClass::Small,
        _ => MonomialClass::Large,
    }
}

/// The factor `1 - c·x^e·λ^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialFactor {
    pub coeff: BigRational,
    pub x_exp: i64,
    pub l_exp: i64,
}

impl BinomialFactor {
    pub fn new(coeff: BigRational, x_exp: i64, l_exp: i64) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::PreconditionUnmet("factor monomial must be nonzero".into()));
        }
        if x_exp == 0 && l_exp == 0 && coeff.is_one() {
            return Err(Error::PreconditionUnmet("factor 1 - 1 is zero".into()));
        }
        Ok(BinomialFactor { coeff, x_exp, l_exp })
    }

    /// `1 - x^e·λ^b`
    pub fn unit(x_exp: i64, l_exp: i64) -> Self {
        Self::new(BigRational::one(), x_exp, l_exp).expect("x^e λ^b ≠ 1")
    }

    /// The λ-free part `u = c·x^e`.
    pub fn u(&self) -> RationalFunction {
        RationalFunction::monomial(self.coeff.clone(), self.x_exp)
    }

    pub fn class(&self) -> MonomialClass {
        classify_monomial(self.x_exp, self.l_exp)
    }

    pub fn is_lambda_free(&self) -> bool {
        self.l_exp == 0
    }

    /// `1 - u·λ^b` as a λ-polynomial; requires `b ≥ 0`.
    pub fn to_lambda_poly(&self) -> LambdaPoly {
        assert!(self.l_exp >= 0, "negative λ-exponent; normalize first");
        let one = LambdaPoly::one();
        &one - &LambdaPoly::monomial(self.u(), self.l_exp as usize)
    }

    /// `(1 - u)` for a λ-free factor.
    pub fn scalar(&self) -> RationalFunction {
        debug_assert!(self.is_lambda_free());
        &RationalFunction::one() - &self.u()
    }

    /// `(c·x^e)^{-1}` as `(1/c, -e)`.
    fn inverse_monomial(&self) -> (BigRational, i64) {
        (self.coeff.recip(), -self.x_exp)
    }
}

/// `λ^shift · numerator(λ) / Π factors`, an Elliott-rational function in λ
/// over ℚ(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtExpr {
    pub(crate) numerator: LambdaPoly,
    pub(crate) shift: i64,
    pub(crate) factors: Vec<BinomialFactor>,
}

impl CtExpr {
    pub fn new(numerator: LambdaPoly, shift: i64, factors: Vec<BinomialFactor>) -> Self {
        CtExpr {
            numerator,
            shift,
            factors,
        }
    }

    /// `1 / Π factors`
    pub fn from_factors(factors: Vec<BinomialFactor>) -> Self {
        Self::new(LambdaPoly::one(), 0, factors)
    }

    /// `c·x^e·λ^b / Π factors`
    pub fn monomial_over(coeff: BigRational, x_exp: i64, l_exp: i64, factors: Vec<BinomialFactor>) -> Self {
        let num = LambdaPoly::constant(RationalFunction::monomial(coeff, x_exp));
        Self::new(num, l_exp, factors)
    }

    pub fn numerator(&self) -> &LambdaPoly {
        &self.numerator
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn factors(&self) -> &[BinomialFactor] {
        &self.factors
    }

    /// Indices of factors that actually involve λ.
    pub fn lambda_factors(&self) -> Vec<usize> {
        (0..self.factors.len()).filter(|&i| !self.factors[i].is_lambda_free()).collect()
    }

    /// Rewrite every `1 - u·λ^{-m}` (m > 0) as `-u·λ^{-m}·(1 - u^{-1}·λ^m)`,
    /// moving `-u^{-1}·λ^m` into the numerator, then pull any power of λ out
    /// of the numerator into `shift`. Factor order is preserved; λ-free
    /// factors stay in the list.
    pub fn normalize(&self) -> CtExpr {
        let mut num = self.numerator.clone();
        let mut shift = self.shift;
        let mut factors = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            if f.l_exp < 0 {
                let (c, e) = f.inverse_monomial();
                let scale = -RationalFunction::monomial(c.clone(), e);
                num = num.scale(&scale);
                shift -= f.l_exp;
                factors.push(BinomialFactor {
                    coeff: c,
                    x_exp: e,
                    l_exp: -f.l_exp,
                });
            } else {
                factors.push(f.clone());
            }
        }
        if num.is_zero() {
            shift = 0;
        } else {
            let v = num.valuation();
            if v > 0 {
                num = num.unshift(v);
                shift += v as i64;
            }
        }
        CtExpr {
            numerator: num,
            shift,
            factors,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.factors.iter().all(|f| f.l_exp >= 0)
            && (self.numerator.is_zero() && self.shift == 0
                || !self.numerator.is_zero() && !self.numerator.coeff(0).is_zero())
    }

    /// Total λ-degree of the denominator (normalized form).
    pub(crate) fn denominator_degree(&self) -> i64 {
        self.factors.iter().map(|f| f.l_exp.max(0)).sum()
    }

    /// Reduce every other factor and the numerator modulo `1 - u_s·λ^{b_s}`.
    ///
    /// The relation is `λ^{|b_s|} ≡ w` with `w = u_s^{-1}` when `b_s > 0` and
    /// `w = u_s` when `b_s < 0`. Each λ-exponent `b` is written `q·|b_s| + r`
    /// with `0 ≤ r < |b_s|` and replaced by `w^q·λ^r`. The result is congruent
    /// to `self` modulo the ideal, so the residue at factor `s` is unchanged.
    pub fn reduce_factor_mod(&self, s: usize) -> Result<CtExpr> {
        let fs = self
            .factors
            .get(s)
            .ok_or_else(|| Error::PreconditionUnmet(format!("no factor {s}")))?;
        if fs.l_exp == 0 {
            return Err(Error::PreconditionUnmet(format!("factor {s} is free of λ")));
        }
        let m = fs.l_exp.abs();
        let (wc, we) = if fs.l_exp > 0 {
            fs.inverse_monomial()
        } else {
            (fs.coeff.clone(), fs.x_exp)
        };
        let w_pow = |q: i64| -> (BigRational, i64) {
            let c = if q >= 0 {
                num::pow(wc.clone(), q as usize)
            } else {
                num::pow(wc.recip(), q.unsigned_abs() as usize)
            };
            (c, we * q)
        };

        let mut factors = Vec::with_capacity(self.factors.len());
        for (j, f) in self.factors.iter().enumerate() {
            if j == s || (0..m).contains(&f.l_exp) {
                factors.push(f.clone());
                continue;
            }
            let (q, r) = (f.l_exp.div_euclid(m), f.l_exp.rem_euclid(m));
            let (c, e) = w_pow(q);
            let coeff = &f.coeff * &c;
            let x_exp = f.x_exp + e;
            if r == 0 && x_exp == 0 && coeff.is_one() {
                // factor j vanishes on every root of factor s
                return Err(Error::NonCoprimeFactors {
                    first: s.min(j),
                    second: s.max(j),
                });
            }
            factors.push(BinomialFactor { coeff, x_exp, l_exp: r });
        }

        let mut coeffs = vec![RationalFunction::zero(); m as usize];
        for (i, c) in self.numerator.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = i as i64 + self.shift;
            let (q, r) = (exp.div_euclid(m), exp.rem_euclid(m));
            let (wc, we) = w_pow(q);
            let term = c * &RationalFunction::monomial(wc, we);
            coeffs[r as usize] = &coeffs[r as usize] + &term;
        }
        Ok(CtExpr {
            numerator: LambdaPoly::from_coeffs(coeffs),
            shift: 0,
            factors,
        })
    }
}
