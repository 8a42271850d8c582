//! Quotients `⟨A⟩/p = {n ∈ ℕ : p·n ∈ ⟨A⟩}`.
//!
//! Two independent routes to the same semigroup live here: a direct sieve
//! (`quotient_membership`, `quotient_table`) and an explicit generator system
//! built from the residues of `A` modulo `p` (`generators_thm`). Generators
//! divisible by `p` contribute `a/p` directly; the remaining ones contribute
//! themselves plus `(Σ x_i a_i)/p` for every residue tuple in `T_p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{build_membership, extend_membership, GeneratorList, Limits, MembershipTable};

/// Generators `A` with `gcd(A) = 1` together with a divisor `p ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpec {
    gens: GeneratorList,
    p: u64,
}

impl QuotientSpec {
    pub fn new(gens: GeneratorList, p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidDivisor);
        }
        gens.require_gcd_one()?;
        Ok(QuotientSpec { gens, p })
    }

    pub fn from_slice(gens: &[u64], p: u64) -> Result<Self> {
        Self::new(GeneratorList::new(gens)?, p)
    }

    pub fn gens(&self) -> &GeneratorList {
        &self.gens
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Generators divisible by `p`, input order.
    pub fn divisible_part(&self) -> Vec<u64> {
        self.gens.original().iter().copied().filter(|a| a % self.p == 0).collect()
    }

    /// Generators not divisible by `p`, input order.
    pub fn coprime_part(&self) -> Vec<u64> {
        self.gens.original().iter().copied().filter(|a| a % self.p != 0).collect()
    }

    /// `T_p` for the part of `A` not divisible by `p`.
    pub fn tp_set(&self, limits: &Limits) -> Result<TpSet> {
        enumerate_tp(&self.coprime_part(), self.p, limits)
    }
}

/// Residue tuples `x ∈ [0, p-1]^n` with `Σ x_i t_i > 0` and `p | Σ x_i t_i`,
/// paired with the quotient element `(Σ x_i a_i)/p` each one produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpSet {
    pub p: u64,
    pub tuples: Vec<Vec<u64>>,
    pub values: Vec<u64>,
}

impl TpSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

impl fmt::Display for TpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.tuples.iter().zip(&self.values) {
            let parts: Vec<String> = t.iter().map(u64::to_string).collect();
            writeln!(f, "({}) -> {}", parts.join(","), v)?;
        }
        Ok(())
    }
}

/// Enumerate `T_p` over `part` in lexicographic tuple order.
///
/// Every entry of `part` must be non-divisible by `p` (its residue lies in
/// `[1, p-1]`). For `p = 1` the tuple range is `{0}` and the set is empty.
pub fn enumerate_tp(part: &[u64], p: u64, limits: &Limits) -> Result<TpSet> {
    let empty = TpSet {
        p,
        tuples: Vec::new(),
        values: Vec::new(),
    };
    if p == 0 {
        return Err(Error::InvalidDivisor);
    }
    if p == 1 || part.is_empty() {
        return Ok(empty);
    }
    if let Some(&a) = part.iter().find(|&&a| a % p == 0) {
        return Err(Error::NotCoprimePart { value: a, p });
    }
    let total = u32::try_from(part.len())
        .ok()
        .and_then(|n| p.checked_pow(n))
        .filter(|&t| t <= limits.tp_tuples)
        .ok_or(Error::CapExceeded {
            what: "T_p enumeration",
            requested: p.saturating_pow(part.len().min(64) as u32),
            cap: limits.tp_tuples,
        })?;

    let residues: Vec<u64> = part.iter().map(|a| a % p).collect();
    let mut out = empty;
    let mut x = vec![0u64; part.len()];
    // skip the all-zero tuple
    for _ in 1..total {
        let mut i = x.len() - 1;
        loop {
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i -= 1;
        }
        let rsum: u64 = x.iter().zip(&residues).map(|(xi, ti)| xi * ti).sum();
        if rsum % p == 0 {
            let asum: u64 = x.iter().zip(part).map(|(xi, ai)| xi * ai).sum();
            out.tuples.push(x.clone());
            out.values.push(asum / p);
        }
    }
    Ok(out)
}

/// Sieve of the quotient on `0..=bound`, derived from the sieve of `⟨A⟩`
/// up to `p·bound`. Certified only if the flags hold a certifying run.
pub fn quotient_membership(q: &QuotientSpec, bound: u64, limits: &Limits) -> Result<MembershipTable> {
    let base_bound = bound.checked_mul(q.p).ok_or(Error::CapExceeded {
        what: "membership sieve",
        requested: u64::MAX,
        cap: limits.sieve_cells,
    })?;
    let base = build_membership(&q.gens, Some(base_bound), limits)?;
    let p = q.p as usize;
    let flags = (0..=bound as usize).map(|n| base.flags()[n * p]).collect();
    Ok(MembershipTable::from_flags(flags))
}

/// The quotient as a certified membership table.
pub fn quotient_table(q: &QuotientSpec, limits: &Limits) -> Result<MembershipTable> {
    let base = build_membership(&q.gens, None, limits)?;
    let conductor = base.gaps()?.last().map_or(0, |f| f + 1);
    // indices n with p·n ≥ conductor are all members; keep min(gens) of them
    // so the run certifies (the quotient contains min(gens))
    let bound = conductor.div_ceil(q.p) + q.gens.min();
    let base = extend_membership(&base, &q.gens, bound * q.p, limits)?;
    let p = q.p as usize;
    let flags = (0..=bound as usize).map(|n| base.flags()[n * p]).collect();
    let table = MembershipTable::from_flags(flags);
    debug_assert!(table.is_certified());
    Ok(table)
}

/// Generator system `{a/p : p | a} ∪ {a : p ∤ a} ∪ T_p values`, sorted, deduplicated.
pub fn generators_thm(q: &QuotientSpec, limits: &Limits) -> Result<Vec<u64>> {
    let tp = q.tp_set(limits)?;
    let mut gens: Vec<u64> = q
        .divisible_part()
        .into_iter()
        .map(|a| a / q.p)
        .chain(q.coprime_part())
        .chain(tp.values)
        .collect();
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Minimal generating set of the quotient, read off its certified sieve.
pub fn minimal_quotient_generators(q: &QuotientSpec, limits: &Limits) -> Result<Vec<u64>> {
    quotient_table(q, limits)?.minimal_generators()
}

pub fn frobenius_quotient(q: &QuotientSpec, limits: &Limits) -> Result<Option<u64>> {
    quotient_table(q, limits)?.frobenius()
}

/// Outcome of checking `generators_thm` against the direct sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub generators: Vec<u64>,
    /// Both semigroups were compared on `0..=bound`; past it both are all of ℕ.
    pub bound: u64,
    pub passed: bool,
}

pub fn verify_generators(q: &QuotientSpec, limits: &Limits) -> Result<VerifyReport> {
    let generators = generators_thm(q, limits)?;
    let direct = quotient_table(q, limits)?;
    let list = GeneratorList::new(&generators)?;
    if list.gcd() != 1 {
        return Ok(VerifyReport {
            generators,
            bound: direct.bound(),
            passed: false,
        });
    }
    let generated = build_membership(&list, None, limits)?;
    let bound = direct.bound().max(generated.bound());
    let passed = direct.same_semigroup(&generated)?;
    Ok(VerifyReport {
        generators,
        bound,
        passed,
    })
}

/// One row of the `p ∈ {2,3}`, three-generator table.
///
/// `terms[j] = (x1, x2, x3)` stands for the generator `(x1·a1 + x2·a2 + x3·a3)/p`,
/// where `a1, a2, a3` are the generators sorted by residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub p: u64,
    pub residues: [u64; 3],
    pub terms: &'static [[u64; 3]],
}

const P3_ALL_EQUAL: &[[u64; 3]] = &[
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

pub const TABLE1: [Table1Row; 12] = [
    Table1Row { p: 2, residues: [0, 0, 1], terms: &[[1, 0, 0], [0, 1, 0], [0, 0, 2]] },
    Table1Row { p: 2, residues: [0, 1, 1], terms: &[[1, 0, 0], [0, 2, 0], [0, 0, 2], [0, 1, 1]] },
    Table1Row {
        p: 2,
        residues: [1, 1, 1],
        terms: &[[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]],
    },
    Table1Row { p: 3, residues: [0, 0, 1], terms: &[[1, 0, 0], [0, 1, 0], [0, 0, 3]] },
    Table1Row { p: 3, residues: [0, 0, 2], terms: &[[1, 0, 0], [0, 1, 0], [0, 0, 3]] },
    Table1Row {
        p: 3,
        residues: [0, 1, 1],
        terms: &[[1, 0, 0], [0, 3, 0], [0, 0, 3], [0, 1, 2], [0, 2, 1]],
    },
    Table1Row { p: 3, residues: [0, 1, 2], terms: &[[1, 0, 0], [0, 3, 0], [0, 0, 3], [0, 1, 1]] },
    Table1Row {
        p: 3,
        residues: [0, 2, 2],
        terms: &[[1, 0, 0], [0, 3, 0], [0, 0, 3], [0, 2, 1], [0, 1, 2]],
    },
    Table1Row { p: 3, residues: [1, 1, 1], terms: P3_ALL_EQUAL },
    Table1Row {
        p: 3,
        residues: [1, 1, 2],
        terms: &[[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 0, 1], [0, 1, 1], [2, 1, 0], [1, 2, 0]],
    },
    Table1Row {
        p: 3,
        residues: [1, 2, 2],
        terms: &[[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 0], [1, 0, 1], [0, 2, 1], [0, 1, 2]],
    },
    Table1Row { p: 3, residues: [2, 2, 2], terms: P3_ALL_EQUAL },
];

/// Instantiate the matching table row at `A`, in the row's formula order.
///
/// Generators are first sorted by residue mod `p` (stable, so ties keep
/// input order) to line up with the row's `a1, a2, a3`.
pub fn table1_generators(q: &QuotientSpec) -> Result<Vec<u64>> {
    let orig = q.gens.original();
    if orig.len() != 3 {
        return Err(Error::NoMatchingRow {
            reason: format!("needs exactly 3 generators, got {}", orig.len()),
        });
    }
    let p = q.p;
    let mut a = [orig[0], orig[1], orig[2]];
    a.sort_by_key(|v| v % p);
    let t = [a[0] % p, a[1] % p, a[2] % p];
    let row = TABLE1
        .iter()
        .find(|r| r.p == p && r.residues == t)
        .ok_or_else(|| Error::NoMatchingRow {
            reason: format!("p = {p}, residues {t:?}"),
        })?;
    Ok(row
        .terms
        .iter()
        .map(|x| {
            let s = x[0] * a[0] + x[1] * a[1] + x[2] * a[2];
            debug_assert_eq!(s % p, 0);
            s / p
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(gens: &[u64], p: u64) -> QuotientSpec {
        QuotientSpec::from_slice(gens, p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(QuotientSpec::from_slice(&[4, 6], 3), Err(Error::GcdNotOne { gcd: 2 }));
        assert_eq!(QuotientSpec::from_slice(&[3, 5], 0), Err(Error::InvalidDivisor));
        let s = q(&[6, 7, 11], 3);
        assert_eq!(s.divisible_part(), vec![6]);
        assert_eq!(s.coprime_part(), vec![7, 11]);
    }

    #[test]
    fn membership_examples() {
        let t = quotient_membership(&q(&[5, 6], 3), 6, &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 2, 4, 5, 6]);
        let t = quotient_membership(&q(&[3, 5], 2), 6, &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 3, 4, 5, 6]);
        let a = GeneratorList::new(&[3, 5]).unwrap();
        assert_eq!(
            quotient_membership(&q(&[3, 5], 1), 12, &lim()).unwrap(),
            build_membership(&a, Some(12), &lim()).unwrap()
        );
    }

    #[test]
    fn tp_examples() {
        let tp = enumerate_tp(&[1, 2], 3, &lim()).unwrap();
        assert_eq!(tp.tuples, vec![vec![1, 1], vec![2, 2]]);
        let tp = enumerate_tp(&[3, 5], 2, &lim()).unwrap();
        assert_eq!(tp.tuples, vec![vec![1, 1]]);
        assert_eq!(tp.values, vec![4]);
        assert!(enumerate_tp(&[3, 5, 7], 1, &lim()).unwrap().is_empty());
        assert_eq!(
            enumerate_tp(&[4, 6], 3, &lim()),
            Err(Error::NotCoprimePart { value: 6, p: 3 })
        );
        let tiny = Limits { tp_tuples: 8, ..lim() };
        assert!(matches!(enumerate_tp(&[1, 1, 1, 1], 2, &tiny), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn tp_display_rows() {
        let tp = enumerate_tp(&[1, 2], 3, &lim()).unwrap();
        assert_eq!(tp.to_string(), "(1,1) -> 1\n(2,2) -> 2\n");
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generators_thm(&q(&[5, 6], 3), &lim()).unwrap(), vec![2, 5]);
        assert_eq!(generators_thm(&q(&[4, 7], 2), &lim()).unwrap(), vec![2, 7]);
        let g = generators_thm(&q(&[4, 11, 14], 3), &lim()).unwrap();
        for v in [4, 5, 6, 11, 12, 13, 14] {
            assert!(g.contains(&v), "missing {v} in {g:?}");
        }
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_quotient_generators(&q(&[5, 6], 3), &lim()).unwrap(), vec![2, 5]);
        assert_eq!(minimal_quotient_generators(&q(&[3, 5], 2), &lim()).unwrap(), vec![3, 4, 5]);
        assert_eq!(minimal_quotient_generators(&q(&[3, 5], 1), &lim()).unwrap(), vec![3, 5]);
    }

    #[test]
    fn verify_examples() {
        let r = verify_generators(&q(&[5, 6], 3), &lim()).unwrap();
        assert!(r.passed);
        let r = verify_generators(&q(&[3, 5], 8), &lim()).unwrap();
        assert!(r.passed);
        assert!(r.generators.contains(&1));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_quotient(&q(&[5, 6], 3), &lim()).unwrap(), Some(3));
        assert_eq!(frobenius_quotient(&q(&[5, 6], 4), &lim()).unwrap(), Some(2));
        assert_eq!(frobenius_quotient(&q(&[3, 5], 8), &lim()).unwrap(), None);
    }

    #[test]
    fn table1_examples() {
        assert_eq!(table1_generators(&q(&[3, 5, 7], 2)).unwrap(), vec![3, 5, 7, 4, 5, 6]);
        assert_eq!(table1_generators(&q(&[3, 6, 7], 3)).unwrap(), vec![1, 2, 7]);
        assert_eq!(table1_generators(&q(&[6, 7, 11], 3)).unwrap(), vec![2, 7, 11, 6]);
        // input order does not matter
        assert_eq!(table1_generators(&q(&[11, 6, 7], 3)).unwrap(), vec![2, 7, 11, 6]);
        assert!(matches!(table1_generators(&q(&[3, 5], 2)), Err(Error::NoMatchingRow { .. })));
        assert!(matches!(table1_generators(&q(&[3, 5, 7], 5)), Err(Error::NoMatchingRow { .. })));
    }
}
