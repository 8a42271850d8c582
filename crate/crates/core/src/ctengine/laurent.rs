//! Sparse Laurent polynomials in x, and polynomials in λ over them.
//!
//! Residues only ever multiply by monomials and binomials in x, so working in
//! ℚ[x, x⁻¹] with one common denominator avoids a polynomial gcd per step.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::exactalg::{Poly, RationalFunction};

/// `c·x^e`
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    pub c: BigRational,
    pub e: i64,
}

impl Mono {
    pub fn new(c: BigRational, e: i64) -> Self {
        Mono { c, e }
    }

    pub fn is_one(&self) -> bool {
        self.e == 0 && self.c.is_one()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono::new(&self.c * &o.c, self.e + o.e)
    }

    pub fn inv(&self) -> Mono {
        Mono::new(self.c.recip(), -self.e)
    }

    pub fn pow(&self, k: i64) -> Mono {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let k = k.unsigned_abs() as usize;
        Mono::new(num::pow(base.c, k), base.e * k as i64)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Laurent(BTreeMap<i64, BigRational>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::mono(&Mono::new(BigRational::one(), 0))
    }

    pub fn mono(m: &Mono) -> Self {
        let mut t = BTreeMap::new();
        if !m.c.is_zero() {
            t.insert(m.e, m.c.clone());
        }
        Laurent(t)
    }

    /// `1 - m`
    pub fn one_minus(m: &Mono) -> Self {
        let mut l = Self::one();
        l.add_term(m.e, -m.c.clone());
        l
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        let slot = self.0.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add_assign(&mut self, o: &Laurent) {
        for (&e, c) in &o.0 {
            self.add_term(e, c.clone());
        }
    }

    pub fn sub_assign(&mut self, o: &Laurent) {
        for (&e, c) in &o.0 {
            self.add_term(e, -c.clone());
        }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.0 {
            for (&e2, c2) in &o.0 {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> Laurent {
        Laurent(self.0.iter().map(|(&e, c)| (e + m.e, c * &m.c)).collect())
    }

    pub fn from_poly(p: &Poly) -> Laurent {
        let mut out = Laurent::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.0.insert(i as i64, c.clone());
            }
        }
        out
    }

    /// `(self, x^-v)` with `self·x^v` a polynomial.
    fn split(&self) -> (Poly, i64) {
        let low = self.0.keys().next().copied().unwrap_or(0).min(0);
        let top = self.0.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); (top - low + 1).max(1) as usize];
        for (&e, c) in &self.0 {
            coeffs[(e - low) as usize] = c.clone();
        }
        (Poly::from_coeffs(coeffs), -low)
    }

    /// `self / den` as an element of ℚ(x); `den` must be nonzero.
    pub fn over(&self, den: &Laurent) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let (n, vn) = self.split();
        let (d, vd) = den.split();
        let num = if vd > vn { n.shift((vd - vn) as usize) } else { n };
        let den = if vn > vd { d.shift((vn - vd) as usize) } else { d };
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

/// Polynomial in λ with coefficients in ℚ[x, x⁻¹], ascending.
pub(crate) type LPoly = Vec<Laurent>;

pub(crate) fn lpoly_trim(mut p: LPoly) -> LPoly {
    while p.last().is_some_and(Laurent::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn lpoly_mul(a: &LPoly, b: &LPoly) -> LPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Laurent::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j].add_assign(&x.mul(y));
            }
        }
    }
    lpoly_trim(out)
}

/// `1 - m·λ^b`
pub(crate) fn lpoly_binomial(m: &Mono, b: usize) -> LPoly {
    let mut p = vec![Laurent::zero(); b + 1];
    p[0] = Laurent::one();
    p[b].add_assign(&Laurent::mono(&Mono::new(-m.c.clone(), m.e)));
    p
}

/// Reduce `λ^shift·p` modulo `λ^b - w`.
pub(crate) fn lpoly_reduce(p: &LPoly, shift: i64, b: usize, w: &Mono) -> LPoly {
    let bi = b as i64;
    let mut out = vec![Laurent::zero(); b];
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = i as i64 + shift;
        let (q, r) = (exp.div_euclid(bi), exp.rem_euclid(bi));
        out[r as usize].add_assign(&c.mul_mono(&w.pow(q)));
    }
    out
}

/// `a·b` modulo `λ^b - w`.
pub(crate) fn lpoly_mulmod(a: &LPoly, b: &LPoly, deg: usize, w: &Mono) -> LPoly {
    lpoly_reduce(&lpoly_mul(a, b), 0, deg, w)
}

/// Exact quotient of `m` by `1 - u·λ^b`, or `None` if it leaves a remainder.
pub(crate) fn lpoly_div_binomial(m: &LPoly, u: &Mono, b: usize) -> Option<LPoly> {
    let m = lpoly_trim(m.clone());
    if m.is_empty() {
        return Some(m);
    }
    if m.len() <= b {
        return None;
    }
    let n = m.len() - b;
    // m = W - u·λ^b·W, solved from the bottom up
    let mut w: LPoly = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = m[i].clone();
        if i >= b {
            c.add_assign(&w[i - b].mul_mono(u));
        }
        w.push(c);
    }
    for i in n..m.len() {
        let mut r = m[i].clone();
        if i >= b {
            r.add_assign(&w[i - b].mul_mono(u));
        }
        if !r.is_zero() {
            return None;
        }
    }
    Some(w)
}

/// Inverse of `1 - v·λ^a` modulo `λ^b - w`, as `(G, c)` with the inverse
/// equal to `G / (1 - c)`. Returns `None` when the two share a root.
///
/// With `λ^a ≡ w^q·λ^r` and `d = gcd(r, b)`, `m = b/d`, the element
/// `y = v·w^q·λ^r` satisfies `y^m = c`, a scalar; so
/// `1/(1 - y) = (1 + y + … + y^{m-1}) / (1 - c)`.
pub(crate) fn inverse_binomial(v: &Mono, a: usize, b: usize, w: &Mono) -> Option<(LPoly, Mono)> {
    let (q, r) = (a / b, a % b);
    let vq = v.mul(&w.pow(q as i64));
    let d = num::integer::gcd(r, b);
    let m = b / d;
    let c = vq.pow(m as i64).mul(&w.pow((r / d) as i64));
    if c.is_one() {
        return None;
    }
    let mut g = vec![Laurent::zero(); b];
    let mut y = Mono::new(BigRational::one(), 0);
    for k in 0..m {
        let exp = r * k;
        let t = y.mul(&w.pow((exp / b) as i64));
        g[exp % b].add_assign(&Laurent::mono(&t));
        y = y.mul(&vq);
    }
    Some((g, c))
}
