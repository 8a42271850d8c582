//! Brute-force reference computations, written independently of the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

/// `n ∈ ⟨A⟩` for all `n ≤ bound`, by forward closure from 0.
pub fn members_upto(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut m = vec![false; bound as usize + 1];
    m[0] = true;
    for n in 0..=bound as usize {
        if m[n] {
            for &a in gens {
                if let Some(x) = m.get_mut(n + a as usize) {
                    *x = true;
                }
            }
        }
    }
    m
}

/// Largest gap, scanning far enough that `max(A)` consecutive members settle it.
pub fn frobenius_brute(gens: &[u64]) -> Option<u64> {
    let max = *gens.iter().max().unwrap();
    let bound = max * max + max;
    let m = members_upto(gens, bound);
    m.iter().rposition(|&b| !b).map(|i| i as u64)
}

/// Number of `x ∈ ℕ^k` with `Σ x_i a_i = n`, by recursion over the last generator.
pub fn denumerant_brute(n: u64, gens: &[u64]) -> u64 {
    match gens.split_last() {
        None => u64::from(n == 0),
        Some((&a, rest)) => (0..=n / a).map(|k| denumerant_brute(n - k * a, rest)).sum(),
    }
}

/// `pn ∈ ⟨A⟩` straight from the definition.
pub fn quotient_members_upto(gens: &[u64], p: u64, bound: u64) -> Vec<bool> {
    let m = members_upto(gens, p * bound);
    (0..=bound).map(|n| m[(p * n) as usize]).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn gcd_all(v: &[u64]) -> u64 {
    v.iter().fold(0, |g, &a| gcd(g, a))
}

/// Whether two generator lists give the same numerical semigroup, comparing
/// far past both Frobenius numbers.
pub fn same_semigroup(a: &[u64], b: &[u64]) -> bool {
    let fa = frobenius_brute(a).unwrap_or(0);
    let fb = frobenius_brute(b).unwrap_or(0);
    let bound = fa.max(fb) + a.iter().chain(b).max().unwrap() + 1;
    members_upto(a, bound) == members_upto(b, bound)
}

/// A monomial factor `1 - c·x^e·λ^b` of a constant-term expression.
#[derive(Clone, Debug)]
pub struct Fac {
    pub c: i64,
    pub e: i64,
    pub b: i64,
}

/// `[x^j] CT_λ  c0·x^{e0}·λ^{b0} / Π (1 - c_i x^{e_i} λ^{b_i})` for
/// `j ≤ hi`, by enumerating every exponent vector of the geometric
/// expansions in ℚ((λ))((x)).
///
/// A factor whose monomial is small contributes `(c x^e λ^b)^k`, `k ≥ 0`;
/// a large one contributes `-(c x^e λ^b)^{-k}`, `k ≥ 1`. Factors with no x
/// in their small monomial are enumerated while the running λ-degree stays
/// at most `lam_cap`, which must bound what the remaining factors can take
/// away.
pub fn ct_brute(num: (i64, i64, i64), facs: &[Fac], hi: i64, lam_cap: i64) -> BTreeMap<i64, BigRational> {
    // (x step, λ step, coefficient ratio, first k, sign)
    let steps: Vec<(i64, i64, BigRational, i64, i64)> = facs
        .iter()
        .map(|f| {
            let small = f.e > 0 || (f.e == 0 && f.b > 0);
            let c = BigRational::from_integer(BigInt::from(f.c));
            if small {
                (f.e, f.b, c, 0, 1)
            } else {
                (-f.e, -f.b, c.recip(), 1, -1)
            }
        })
        .collect();
    let mut out = BTreeMap::new();
    let start = BigRational::from_integer(BigInt::from(num.0));
    walk(&steps, 0, num.1, num.2, start, hi, lam_cap, &mut out);
    out.retain(|_, v| !v.is_zero());
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    steps: &[(i64, i64, BigRational, i64, i64)],
    i: usize,
    xe: i64,
    le: i64,
    coeff: BigRational,
    hi: i64,
    lam_cap: i64,
    out: &mut BTreeMap<i64, BigRational>,
) {
    if xe > hi {
        return;
    }
    if i == steps.len() {
        if le == 0 {
            let slot = out.entry(xe).or_insert_with(BigRational::zero);
            *slot += coeff;
        }
        return;
    }
    let (dx, dl, r, k0, sign) = &steps[i];
    let mut k = *k0;
    let mut c = num::pow(r.clone(), *k0 as usize);
    if *sign < 0 {
        c = -c;
    }
    loop {
        let (x, l) = (xe + dx * k, le + dl * k);
        // steps with no x always raise the λ-degree
        if x > hi || (*dx == 0 && l > lam_cap) {
            break;
        }
        walk(steps, i + 1, x, l, &coeff * &c, hi, lam_cap, out);
        k += 1;
        c = &c * r;
    }
}

pub fn one() -> BigRational {
    BigRational::one()
}
