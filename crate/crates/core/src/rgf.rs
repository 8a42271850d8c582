//! Representation generating functions `RGF_p(x) = Σ_n d(p·n; A) x^n`.
//!
//! The series comes from one denumerant pass to order `p·N` followed by a
//! `p`-step multisection. The closed form is found by guessing the
//! denominator `Π (1 - x^{b_i})` with `b_i = a_i / gcd(a_i, p)`, reading the
//! numerator off `series × denominator`, and checking that the remaining
//! coefficients vanish up to a horizon. When that guess fails the always-valid
//! `(1 - x^Q)^k` denominator is tried instead. Results carry the horizon they
//! were checked to as `certified_to`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, BigUint, Integer, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{Poly, RationalFunction, TruncatedSeries};
use crate::semigroup::{denumerant_series, frobenius, GeneratorList, Limits};

/// `c_n = d(p·n; A)` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgfSeries {
    pub p: u64,
    pub series: TruncatedSeries<BigUint>,
}

impl RgfSeries {
    pub fn coeffs(&self) -> &[BigUint] {
        self.series.coeffs()
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

pub fn rgf_series(gens: &GeneratorList, p: u64, order: u64, limits: &Limits) -> Result<RgfSeries> {
    if p == 0 {
        return Err(Error::InvalidDivisor);
    }
    let full = order.checked_mul(p).ok_or(Error::CapExceeded {
        what: "denumerant series",
        requested: u64::MAX,
        cap: limits.sieve_cells,
    })?;
    limits.check_sieve(full + 1)?;
    let all = denumerant_series(gens, full);
    let coeffs = all.coeffs().iter().step_by(p as usize).cloned().collect();
    Ok(RgfSeries {
        p,
        series: TruncatedSeries::new(coeffs),
    })
}

/// `numerator(x) / Π (1 - x^{b_i})` with an integer numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgfRational {
    numerator: Vec<BigInt>,
    denominator: Vec<u64>,
    certified_to: Option<u64>,
}

impl RgfRational {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<u64>, certified_to: Option<u64>) -> Result<Self> {
        if denominator.is_empty() || denominator.contains(&0) {
            return Err(Error::PreconditionUnmet(
                "denominator factors must be nonempty and positive".into(),
            ));
        }
        let mut numerator = numerator;
        while numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        Ok(RgfRational {
            numerator,
            denominator,
            certified_to,
        })
    }

    /// Dense numerator coefficients, ascending.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Exponents `b_i` of the factors `(1 - x^{b_i})`.
    pub fn denominator(&self) -> &[u64] {
        &self.denominator
    }

    /// Series agreement horizon; `None` for forms derived exactly.
    pub fn certified_to(&self) -> Option<u64> {
        self.certified_to
    }

    /// Nonzero numerator exponents with their coefficients.
    pub fn numerator_terms(&self) -> Vec<(usize, &BigInt)> {
        self.numerator
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Expand to order `order` using integer arithmetic only.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..=order)
            .map(|i| self.numerator.get(i).cloned().unwrap_or_default())
            .collect();
        for &b in &self.denominator {
            let b = b as usize;
            for n in b..=order {
                let (lo, hi) = c.split_at_mut(n);
                hi[0] += &lo[n - b];
            }
        }
        c
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let num = Poly::from_coeffs(
            self.numerator
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        let den = self
            .denominator
            .iter()
            .fold(Poly::one(), |acc, &b| &acc * &Poly::one_minus_x_pow(b as usize));
        RationalFunction::new(num, den).expect("denominator is nonzero")
    }

    /// Write `f` over the given denominator factors, if the numerator comes
    /// out as an integer polynomial.
    pub fn from_rational_function(f: &RationalFunction, denominator: &[u64]) -> Option<Self> {
        let den = denominator
            .iter()
            .fold(Poly::one(), |acc, &b| &acc * &Poly::one_minus_x_pow(b as usize));
        let scaled = f * &RationalFunction::from_poly(den);
        if !scaled.is_polynomial() || !scaled.num().is_integral() {
            return None;
        }
        let lc = scaled.den().coeff(0);
        let numerator = scaled
            .num()
            .coeffs()
            .iter()
            .map(|c| (c / &lc).to_integer())
            .collect();
        RgfRational::new(numerator, denominator.to_vec(), None).ok()
    }

    pub fn numerator_string(&self) -> String {
        let p = Poly::from_coeffs(
            self.numerator
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        p.to_string()
    }

    pub fn denominator_string(&self) -> String {
        self.denominator
            .iter()
            .map(|&b| if b == 1 { "(1-x)".to_string() } else { format!("(1-x^{b})") })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// `{"num": {"<exp>": coeff, …}, "den": [b…], "certified_to": N}`.
    pub fn to_json(&self) -> Value {
        let num: serde_json::Map<String, Value> = self
            .numerator_terms()
            .into_iter()
            .map(|(e, c)| (e.to_string(), bigint_json(c)))
            .collect();
        json!({
            "num": num,
            "den": self.denominator,
            "certified_to": self.certified_to,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("rgf json: {what}"));
        let num = v.get("num").and_then(Value::as_object).ok_or_else(|| bad("num"))?;
        let mut terms = BTreeMap::new();
        for (k, c) in num {
            let e: usize = k.parse().map_err(|_| bad("exponent"))?;
            let c = match c {
                Value::Number(n) => n.as_i64().map(BigInt::from),
                Value::String(s) => s.parse::<BigInt>().ok(),
                _ => None,
            }
            .ok_or_else(|| bad("coefficient"))?;
            terms.insert(e, c);
        }
        let len = terms.keys().next_back().map_or(0, |e| e + 1);
        let mut numerator = vec![BigInt::zero(); len];
        for (e, c) in terms {
            numerator[e] = c;
        }
        let den = v
            .get("den")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("den"))?
            .iter()
            .map(|b| b.as_u64().ok_or_else(|| bad("den entry")))
            .collect::<Result<Vec<_>>>()?;
        let certified_to = match v.get("certified_to") {
            None | Some(Value::Null) => None,
            Some(n) => Some(n.as_u64().ok_or_else(|| bad("certified_to"))?),
        };
        RgfRational::new(numerator, den, certified_to)
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

impl fmt::Display for RgfRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_string();
        if self.numerator_terms().len() > 1 {
            write!(f, "({num})/({})", self.denominator_string())
        } else {
            write!(f, "{num}/({})", self.denominator_string())
        }
    }
}

fn lcm_checked(values: &[u64]) -> Option<u64> {
    values.iter().try_fold(1u64, |acc, &a| {
        let g = acc.gcd(&a);
        (acc / g).checked_mul(a)
    })
}

/// Numerator of `series × Π (1 - x^{b})` if it has degree ≤ `Σ b` and the
/// remaining coefficients up to `horizon` vanish.
fn try_denominator(series: &[BigInt], denominator: &[u64], horizon: usize) -> Option<Vec<BigInt>> {
    let mut c: Vec<BigInt> = series[..=horizon].to_vec();
    for &b in denominator {
        let b = b as usize;
        for n in (b..=horizon).rev() {
            let (lo, hi) = c.split_at_mut(n);
            hi[0] -= &lo[n - b];
        }
    }
    let degree: usize = denominator.iter().map(|&b| b as usize).sum();
    if c.iter().skip(degree + 1).all(Zero::is_zero) {
        c.truncate(degree + 1);
        Some(c)
    } else {
        None
    }
}

/// Certified closed form of `RGF_p`.
pub fn rgf_rational(gens: &GeneratorList, p: u64, limits: &Limits) -> Result<RgfRational> {
    if p == 0 {
        return Err(Error::InvalidDivisor);
    }
    let frob = frobenius(gens, limits)?.unwrap_or(0);
    let too_big = || Error::CapExceeded {
        what: "closed-form period",
        requested: u64::MAX,
        cap: limits.sieve_cells,
    };
    let l = lcm_checked(gens.original()).ok_or_else(too_big)?;
    let period = l / l.gcd(&p);
    let k = gens.original().len() as u64;
    let transient = frob.div_ceil(p);

    let guess: Vec<u64> = gens.original().iter().map(|&a| a / a.gcd(&p)).collect();
    let fallback = vec![period; k as usize];

    let mut last_horizon = 0;
    for den in [guess, fallback] {
        let degree: u64 = den.iter().sum();
        let horizon = degree
            .checked_add(period)
            .and_then(|h| h.checked_add(transient + 1))
            .ok_or_else(too_big)?;
        last_horizon = horizon;
        let s = rgf_series(gens, p, horizon, limits)?;
        let s: Vec<BigInt> = s.coeffs().iter().map(|c| BigInt::from(c.clone())).collect();
        if let Some(num) = try_denominator(&s, &den, horizon as usize) {
            return RgfRational::new(num, den, Some(horizon));
        }
    }
    Err(Error::CertificationFailed { horizon: last_horizon })
}

/// Frobenius number of `⟨A⟩/p` read from the zero coefficients of `RGF_p`.
///
/// The largest zero is certified by a following run of `min(A)` positive
/// coefficients (the quotient contains `min(A)`).
pub fn frobenius_from_rgf(gens: &GeneratorList, p: u64, limits: &Limits) -> Result<Option<u64>> {
    gens.require_gcd_one()?;
    if p == 0 {
        return Err(Error::InvalidDivisor);
    }
    let m = gens.min() as usize;
    let mut order = gens.max() + gens.min();
    loop {
        let s = rgf_series(gens, p, order, limits)?;
        let c = s.coeffs();
        let mut run = 0usize;
        for (n, v) in c.iter().enumerate() {
            if v.is_zero() {
                run = 0;
                continue;
            }
            run += 1;
            if run == m {
                let start = n + 1 - m;
                return Ok(c[..start].iter().rposition(Zero::is_zero).map(|i| i as u64));
            }
        }
        order = order.checked_mul(2).ok_or(Error::CapExceeded {
            what: "denumerant series",
            requested: u64::MAX,
            cap: limits.sieve_cells,
        })?;
    }
}

/// Generators of `⟨A⟩/p` from a closed form with a nonnegative numerator:
/// the denominator exponents plus every exponent in the numerator's support.
pub fn gens_from_rgf(r: &RgfRational) -> Result<Vec<u64>> {
    if let Some(e) = r.numerator.iter().position(Signed::is_negative) {
        return Err(Error::NegativeNumerator { exponent: e });
    }
    let mut gens: Vec<u64> = r
        .denominator
        .iter()
        .copied()
        .chain(r.numerator_terms().into_iter().map(|(e, _)| e as u64).filter(|&e| e > 0))
        .collect();
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}
