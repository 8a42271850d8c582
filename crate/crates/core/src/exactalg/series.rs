use std::ops::Mul;

use num::{BigRational, Zero};

use super::RationalFunction;
use crate::error::{Error, Result};

/// Coefficients `c_0..=c_N` of a power series truncated at order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C> TruncatedSeries<C> {
    /// Panics on an empty coefficient list; a series always has order ≥ 0.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn map<D>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Keep `c_0..=c_order`.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }
}

impl<C: Clone + Zero + Mul<Output = C>> TruncatedSeries<C> {
    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * other.coeffs[k - i].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Taylor coefficients `c_0..=c_order` of `f` about `x = 0`.
pub fn series_from_rational(f: &RationalFunction, order: usize) -> Result<TruncatedSeries<BigRational>> {
    let den = f.den().coeffs();
    let d0 = den.first().filter(|c| !c.is_zero()).ok_or(Error::PoleAtZero)?;
    let d0_inv = d0.recip();
    let num = f.num();
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for (j, d) in den.iter().enumerate().skip(1).take(n) {
            if !d.is_zero() {
                acc -= d * &out[n - j];
            }
        }
        out.push(acc * &d0_inv);
    }
    Ok(TruncatedSeries::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Poly};

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn geometric() {
        let f = RationalFunction::new(Poly::one(), Poly::one_minus_x_pow(1)).unwrap();
        assert_eq!(f.series(4).unwrap().coeffs(), rats(&[1, 1, 1, 1, 1]));
        let g = RationalFunction::new(Poly::one(), Poly::one_minus_x_pow(3)).unwrap();
        assert_eq!(g.series(5).unwrap().coeffs(), rats(&[1, 0, 0, 1, 0, 0]));
    }

    #[test]
    fn rgf_shape() {
        // (1 + x^4)/((1 - x^3)(1 - x^5)), long division by hand
        let den = &Poly::one_minus_x_pow(3) * &Poly::one_minus_x_pow(5);
        let f = RationalFunction::new(Poly::from_ints(&[1, 0, 0, 0, 1]), den).unwrap();
        assert_eq!(f.series(6).unwrap().coeffs(), rats(&[1, 0, 0, 1, 1, 1, 1]));
    }

    #[test]
    fn pole_at_zero() {
        assert_eq!(RationalFunction::x_pow(-1).series(3), Err(Error::PoleAtZero));
    }

    #[test]
    fn cauchy_product() {
        let s = |v: &[i64]| TruncatedSeries::new(rats(v));
        assert_eq!(s(&[1, 1, 1]).mul(&s(&[1, 0, 0])), s(&[1, 1, 1]));
        assert_eq!(s(&[1, 1]).mul(&s(&[1, -1])), s(&[1, 0]));
        assert_eq!(s(&[1, 0, 1]).mul(&s(&[1, 2, 0])), s(&[1, 2, 1]));
        // mixed orders truncate to the smaller one
        assert_eq!(s(&[1, 1, 1, 1]).mul(&s(&[1, 1])).order(), 1);
    }
}
