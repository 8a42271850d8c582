use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::{series_from_rational, Field, Poly, TruncatedSeries};
use crate::error::{Error, Result};

/// Element of ℚ(x), kept as `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// Negative powers of `x` live in the denominator as `x^k`; there are no
/// negative exponent indices anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// `c · x^e`, for any integer `e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let k = e.unsigned_abs() as usize;
        if e >= 0 {
            Self::from_poly(Poly::monomial(c, k))
        } else {
            RationalFunction {
                num: Poly::constant(c),
                den: Poly::monomial(BigRational::one(), k),
            }
        }
    }

    pub fn x_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
        // num and den stay coprime under powers
        Ok(Self::monic_den(base.num.pow(n), base.den.pow(n)))
    }

    /// Value at `x = 0`, when `x = 0` is not a pole.
    pub fn value_at_zero(&self) -> Option<BigRational> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            None
        } else {
            Some(self.num.coeff(0) / d0)
        }
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries<BigRational>> {
        series_from_rational(self, order)
    }

    /// True if this is a polynomial in `x`.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// `self = num / den` after normalization, as a display string.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.to_string_in(var);
        }
        // scale so the denominator's lowest term is 1, as in 1/(1 - x^3)
        let low = self.den.coeff(self.den.valuation()).recip();
        let (n, d) = (self.num.scale(&low), self.den.scale(&low));
        let n = n.to_string_in(var);
        let n = if n.contains(' ') { format!("({n})") } else { n };
        format!("{n}/({})", d.to_string_in(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &Poly, g: &Poly| {
            if g.degree() == Some(0) {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        RationalFunction::monic_den(num, den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: Self) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, DensePoly};

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        // (1 - x^2)/(1 - x) = 1 + x
        assert_eq!(rf(&[1, 0, -1], &[1, -1]), rf(&[1, 1], &[1]));
        // monic denominator: 1/(1 - x^3) = -1/(x^3 - 1)
        let f = rf(&[1], &[1, 0, 0, -1]);
        assert_eq!(f.den(), &Poly::from_ints(&[-1, 0, 0, 1]));
        assert_eq!(f.num(), &Poly::from_ints(&[-1]));
        // idempotent
        let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Poly::one(), Poly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn field_operations() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[1], &[1, 1]);
        // 1/(1-x) + 1/(1+x) = 2/(1-x^2)
        assert_eq!(&a + &b, rf(&[2], &[1, 0, -1]));
        assert_eq!(&a * &b, rf(&[1], &[1, 0, -1]));
        assert_eq!(&(&a / &b) * &b, a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_monomials() {
        let xm3 = RationalFunction::x_pow(-3);
        assert_eq!(xm3.den(), &Poly::monomial(rat(1), 3));
        assert_eq!(&xm3 * &RationalFunction::x_pow(3), RationalFunction::one());
        assert_eq!(xm3.value_at_zero(), None);
        assert_eq!(RationalFunction::x_pow(2).powi(-2).unwrap(), RationalFunction::x_pow(-4));
    }

    #[test]
    fn gcd_in_lambda_over_rational_functions() {
        let x = |e| RationalFunction::x_pow(e);
        // 1 - x·λ  and  1 - x^3·λ^2 are coprime
        let f = DensePoly::from_coeffs(vec![RationalFunction::one(), -x(1)]);
        let g = DensePoly::from_coeffs(vec![RationalFunction::one(), RationalFunction::zero(), -x(3)]);
        assert_eq!(f.gcd(&g), DensePoly::one());
        // 1 - x·λ divides 1 - x^2·λ^2
        let h = DensePoly::from_coeffs(vec![RationalFunction::one(), RationalFunction::zero(), -x(2)]);
        assert_eq!(f.gcd(&h).degree(), Some(1));
    }
}
