use num::{One, Zero};

use super::expr::{BinomialFactor, CtExpr, LambdaPoly, MonomialClass};
use super::laurent::{
    inverse_binomial, lpoly_binomial, lpoly_div_binomial, lpoly_mul, lpoly_mulmod, lpoly_reduce, LPoly, Laurent,
    Mono,
};
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RationalFunction};

/// `A_s(0)` for one λ-dependent factor of a normalized expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub factor_index: usize,
    pub a0: RationalFunction,
    /// Whether the factor's monomial is small (primal side) or large (dual side).
    pub class: MonomialClass,
}

/// Everything the constant-term computation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtReport {
    /// `[λ^0]` of the Laurent-polynomial part plus the small residues.
    pub primal: RationalFunction,
    /// `E|_{λ=0}` minus the large residues, when `E` has no pole at λ = 0.
    pub dual: Option<RationalFunction>,
    pub residues: Vec<Residue>,
    pub laurent_constant: RationalFunction,
    pub proper: bool,
}

impl CtReport {
    pub fn value(&self) -> &RationalFunction {
        &self.primal
    }
}

/// Product of the λ-free factors, inverted.
fn scalar_part(e: &CtExpr) -> Result<RationalFunction> {
    let mut s = RationalFunction::one();
    for f in e.factors().iter().filter(|f| f.is_lambda_free()) {
        s = &s * &f.scalar().inv()?;
    }
    Ok(s)
}

/// A normalized expression in common-denominator form:
/// `E = scalar · λ^shift · num(λ) / (q · Π f_s)` with Laurent coefficients.
struct Prepared {
    n: CtExpr,
    dep: Vec<usize>,
    scalar: RationalFunction,
    num: LPoly,
    q: Laurent,
    /// Per λ-factor: `A_s = scalar · h / (q · k)`, `h` of λ-degree below `b_s`.
    parts: Vec<(LPoly, Laurent)>,
}

fn monomial_of(f: &BinomialFactor) -> Mono {
    Mono::new(f.coeff.clone(), f.x_exp)
}

/// Clear the denominators of the numerator's coefficients.
fn common_denominator(p: &LambdaPoly) -> (LPoly, Laurent) {
    let mut q = Poly::one();
    for c in p.coeffs() {
        if !c.is_zero() {
            let g = q.gcd(c.den());
            q = &q * &c.den().div_exact(&g).expect("gcd divides");
        }
    }
    let num = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                Laurent::zero()
            } else {
                Laurent::from_poly(&(c.num() * &q.div_exact(c.den()).expect("lcm")))
            }
        })
        .collect();
    (num, Laurent::from_poly(&q))
}

/// Partial-fraction numerators over every λ-factor of the normalized `e`.
///
/// Modulo `1 - u_s·λ^{b_s}` every other factor is inverted by a geometric
/// sum; a factor sharing a root with `1 - u_s·λ^{b_s}` makes that fail.
fn prepare(e: &CtExpr) -> Result<Prepared> {
    let n = e.normalize();
    let dep = n.lambda_factors();
    let scalar = scalar_part(&n)?;
    let (num, q) = common_denominator(n.numerator());
    let mut parts = Vec::with_capacity(dep.len());
    for &s in &dep {
        let fs = &n.factors()[s];
        let b = fs.l_exp as usize;
        let w = monomial_of(fs).inv();
        let mut h = lpoly_reduce(&num, n.shift(), b, &w);
        let mut k = Laurent::one();
        for &j in &dep {
            if j == s {
                continue;
            }
            let fj = &n.factors()[j];
            let (g, c) = inverse_binomial(&monomial_of(fj), fj.l_exp as usize, b, &w).ok_or(
                Error::NonCoprimeFactors {
                    first: s.min(j),
                    second: s.max(j),
                },
            )?;
            h = lpoly_mulmod(&h, &g, b, &w);
            k = k.mul(&Laurent::one_minus(&c));
        }
        parts.push((h, k));
    }
    Ok(Prepared {
        n,
        dep,
        scalar,
        num,
        q,
        parts,
    })
}

impl Prepared {
    fn a0(&self, k: usize) -> RationalFunction {
        let (h, den) = &self.parts[k];
        let c0 = h.first().cloned().unwrap_or_default();
        &c0.over(&self.q.mul(den)) * &self.scalar
    }

    fn residues(&self) -> Vec<Residue> {
        self.dep
            .iter()
            .enumerate()
            .map(|(k, &s)| Residue {
                factor_index: s,
                a0: self.a0(k),
                class: self.n.factors()[s].class(),
            })
            .collect()
    }

    /// `[λ^0]` of the Laurent polynomial `E - Σ A_s / f_s`, by exact division.
    fn laurent_constant(&self) -> Result<RationalFunction> {
        let fs: Vec<(Mono, usize)> = self
            .dep
            .iter()
            .map(|&i| {
                let f = &self.n.factors()[i];
                (monomial_of(f), f.l_exp as usize)
            })
            .collect();
        let k_all = self.parts.iter().fold(Laurent::one(), |acc, (_, k)| acc.mul(k));
        let mut partial: LPoly = Vec::new();
        for (s, (h, _)) in self.parts.iter().enumerate() {
            let mut term = h.clone();
            for (t, (_, kt)) in self.parts.iter().enumerate() {
                if t != s {
                    term = term.iter().map(|c| c.mul(kt)).collect();
                    term = lpoly_mul(&term, &lpoly_binomial(&fs[t].0, fs[t].1));
                }
            }
            lpoly_add_assign(&mut partial, &term);
        }
        let scaled: LPoly = self.num.iter().map(|c| c.mul(&k_all)).collect();
        let sh = self.n.shift();
        let (mut m, offset) = if sh >= 0 {
            let mut m = lpoly_shift(&scaled, sh as usize);
            lpoly_sub_assign(&mut m, &partial);
            (m, 0usize)
        } else {
            let k = sh.unsigned_abs() as usize;
            let mut m = scaled;
            lpoly_sub_assign(&mut m, &lpoly_shift(&partial, k));
            (m, k)
        };
        for (u, b) in &fs {
            m = lpoly_div_binomial(&m, u, *b).ok_or_else(|| {
                Error::InternalMismatch("remainder after partial fractions is not a Laurent polynomial".into())
            })?;
        }
        let c = m.get(offset).cloned().unwrap_or_default();
        Ok(&c.over(&self.q.mul(&k_all)) * &self.scalar)
    }
}

fn lpoly_shift(p: &LPoly, k: usize) -> LPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Laurent::zero(); k];
    out.extend(p.iter().cloned());
    out
}

fn lpoly_add_assign(a: &mut LPoly, b: &LPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), Laurent::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        x.add_assign(y);
    }
}

fn lpoly_sub_assign(a: &mut LPoly, b: &LPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), Laurent::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        x.sub_assign(y);
    }
}

fn lambda_index(e: &CtExpr, s: usize) -> Result<()> {
    match e.factors().get(s) {
        None => Err(Error::PreconditionUnmet(format!("no factor {s}"))),
        Some(f) if f.is_lambda_free() => Err(Error::PreconditionUnmet(format!("factor {s} is free of λ"))),
        Some(_) => Ok(()),
    }
}

/// `A_s(0)`: the constant coefficient of the partial-fraction numerator over
/// factor `s`. The expression is normalized first; factor indices are kept.
pub fn residue_a0(e: &CtExpr, s: usize) -> Result<Residue> {
    lambda_index(&e.normalize(), s)?;
    let prep = prepare(e)?;
    let k = prep.dep.iter().position(|&i| i == s).expect("λ-factor");
    Ok(Residue {
        factor_index: s,
        a0: prep.a0(k),
        class: prep.n.factors()[s].class(),
    })
}

/// Constant term in λ, computed both ways, with the agreement enforced.
pub fn ct_report(e: &CtExpr) -> Result<CtReport> {
    let prep = prepare(e)?;
    let residues = prep.residues();
    let laurent_constant = prep.laurent_constant()?;
    let (n, scalar) = (&prep.n, &prep.scalar);
    let sh = n.shift();
    let num = n.numerator().scale(scalar);

    let small_sum = residues
        .iter()
        .filter(|r| r.class == MonomialClass::Small)
        .fold(RationalFunction::zero(), |acc, r| &acc + &r.a0);
    let large_sum = residues
        .iter()
        .filter(|r| r.class == MonomialClass::Large)
        .fold(RationalFunction::zero(), |acc, r| &acc + &r.a0);
    let primal = &laurent_constant + &small_sum;

    let dual = if sh >= 0 {
        let at_zero = if sh == 0 { num.coeff(0) } else { RationalFunction::zero() };
        Some(&at_zero - &large_sum)
    } else {
        None
    };
    if let Some(d) = &dual {
        if d != &primal {
            return Err(Error::InternalMismatch(format!(
                "primal {} and dual {} constant terms differ",
                primal, d
            )));
        }
    }
    let proper = n.numerator().is_zero()
        || sh + (n.numerator().degree().unwrap_or(0) as i64) < n.denominator_degree();
    Ok(CtReport {
        primal,
        dual,
        residues,
        laurent_constant,
        proper,
    })
}

pub fn ct_constant_term(e: &CtExpr) -> Result<RationalFunction> {
    ct_report(e).map(|r| r.primal)
}

/// For a proper expression vanishing at λ = 0, the residues `A_s(0)` sum to
/// zero. Returns whether they do.
pub fn lemma_zero_check(e: &CtExpr) -> Result<bool> {
    let n = e.normalize();
    let vanishes = n.numerator().is_zero() || n.shift() > 0;
    if !vanishes {
        return Err(Error::PreconditionUnmet("expression does not vanish at λ = 0".into()));
    }
    let proper = n.numerator().is_zero()
        || n.shift() + (n.numerator().degree().unwrap_or(0) as i64) < n.denominator_degree();
    if !proper {
        return Err(Error::PreconditionUnmet("expression is not proper in λ".into()));
    }
    let prep = prepare(&n)?;
    let total = (0..prep.dep.len()).fold(RationalFunction::zero(), |acc, k| &acc + &prep.a0(k));
    Ok(total.is_zero())
}
