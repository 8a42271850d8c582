//! Classical numerical-semigroup computations.
//!
//! Every answer here comes from a boolean representability sieve, a
//! [`MembershipTable`], which is *certified* once it contains a run of `m`
//! consecutive members where `m` is the smallest positive member: adding `m`
//! repeatedly then covers every larger integer. The rest of the crate treats
//! these results as the brute-force reference.

use num::{BigUint, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::TruncatedSeries;

/// Resource caps for sieves and tuple enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of cells in one membership sieve.
    pub sieve_cells: u64,
    /// Maximum number of tuples visited by the T_p odometer.
    pub tp_tuples: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            sieve_cells: 100_000_000,
            tp_tuples: 10_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_sieve(&self, cells: u64) -> Result<()> {
        if cells > self.sieve_cells {
            Err(Error::CapExceeded {
                what: "membership sieve",
                requested: cells,
                cap: self.sieve_cells,
            })
        } else {
            Ok(())
        }
    }
}

/// A validated sequence of generators `a_1, …, a_k`.
///
/// Keeps the input order (with repeats) for residue bookkeeping and the
/// denumerant, and a sorted, deduplicated view for semigroup questions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorList {
    original: Vec<u64>,
    sorted: Vec<u64>,
    gcd: u64,
}

impl GeneratorList {
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let gcd = sorted.iter().fold(0u64, |g, &a| g.gcd(&a));
        Ok(GeneratorList {
            original: gens.to_vec(),
            sorted,
            gcd,
        })
    }

    /// Generators in input order, repeats included.
    pub fn original(&self) -> &[u64] {
        &self.original
    }

    /// Strictly increasing, deduplicated generators.
    pub fn sorted(&self) -> &[u64] {
        &self.sorted
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn min(&self) -> u64 {
        self.sorted[0]
    }

    pub fn max(&self) -> u64 {
        *self.sorted.last().expect("nonempty")
    }

    /// `t_i = a_i mod p`, in input order.
    pub fn residues(&self, p: u64) -> Vec<u64> {
        self.original.iter().map(|a| a % p).collect()
    }

    /// `k_i = (a_i - t_i) / p`, in input order.
    pub fn quotients(&self, p: u64) -> Vec<u64> {
        self.original.iter().map(|a| a / p).collect()
    }

    pub(crate) fn require_gcd_one(&self) -> Result<()> {
        if self.gcd == 1 {
            Ok(())
        } else {
            Err(Error::GcdNotOne { gcd: self.gcd })
        }
    }
}

/// Representability flags for `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTable {
    bits: Vec<bool>,
    /// Start of the first run of `m` consecutive members, if any.
    run_start: Option<usize>,
}

impl MembershipTable {
    /// Wrap raw flags; `flags[0]` must be true.
    pub fn from_flags(flags: Vec<bool>) -> Self {
        assert!(flags.first() == Some(&true), "0 is always a member");
        let run_start = find_certifying_run(&flags);
        MembershipTable { bits: flags, run_start }
    }

    pub fn bound(&self) -> u64 {
        (self.bits.len() - 1) as u64
    }

    pub fn flags(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_certified(&self) -> bool {
        self.run_start.is_some()
    }

    /// `Some(true/false)` when known, `None` past an uncertified bound.
    pub fn contains(&self, n: u64) -> Option<bool> {
        match self.bits.get(n as usize) {
            Some(&b) => Some(b),
            None if self.is_certified() => Some(true),
            None => None,
        }
    }

    /// Members in `0..=bound`, ascending.
    pub fn members(&self) -> Vec<u64> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// Smallest positive member inside the table.
    pub fn multiplicity(&self) -> Option<u64> {
        self.bits.iter().skip(1).position(|&b| b).map(|i| i as u64 + 1)
    }

    fn certified(&self) -> Result<usize> {
        self.run_start.ok_or(Error::Uncertified { bound: self.bound() })
    }

    /// Sorted list of non-members.
    pub fn gaps(&self) -> Result<Vec<u64>> {
        let start = self.certified()?;
        Ok((0..start as u64).filter(|&n| !self.bits[n as usize]).collect())
    }

    /// Largest non-member; `None` when the semigroup is ℕ.
    pub fn frobenius(&self) -> Result<Option<u64>> {
        let start = self.certified()?;
        Ok((0..start).rev().find(|&n| !self.bits[n]).map(|n| n as u64))
    }

    /// Least member in each residue class mod `m`, indexed by residue.
    pub fn apery(&self, m: u64) -> Result<Vec<u64>> {
        self.certified()?;
        if m == 0 || self.contains(m) != Some(true) {
            return Err(Error::NotAMember { m });
        }
        Ok((0..m)
            .map(|r| {
                let mut n = r;
                while self.contains(n) != Some(true) {
                    n += m;
                }
                n
            })
            .collect())
    }

    /// The unique minimal generating set.
    ///
    /// A positive member is a minimal generator iff it is not the sum of two
    /// positive members. Apart from the multiplicity `m`, every candidate lies
    /// in the Apéry set of `m`, and a decomposable Apéry element always splits
    /// into two Apéry elements, so only those pairs need checking.
    pub fn minimal_generators(&self) -> Result<Vec<u64>> {
        self.certified()?;
        let m = match self.multiplicity() {
            Some(m) => m,
            None => return Ok(Vec::new()),
        };
        if m == 1 {
            return Ok(vec![1]);
        }
        let mut ap: Vec<u64> = self.apery(m)?.into_iter().filter(|&w| w != 0).collect();
        ap.sort_unstable();
        let mut gens = vec![m];
        for (i, &w) in ap.iter().enumerate() {
            let decomposable = ap[..i]
                .iter()
                .any(|&v| self.contains(w - v) == Some(true));
            if !decomposable {
                gens.push(w);
            }
        }
        gens.sort_unstable();
        Ok(gens)
    }

    /// Whether two certified tables describe the same semigroup.
    pub fn same_semigroup(&self, other: &MembershipTable) -> Result<bool> {
        let a = self.certified()?;
        let b = other.certified()?;
        let horizon = a.max(b) as u64;
        Ok((0..=horizon).all(|n| self.contains(n) == other.contains(n)))
    }
}

fn find_certifying_run(bits: &[bool]) -> Option<usize> {
    let m = bits.iter().skip(1).position(|&b| b)? + 1;
    let mut run = 0usize;
    for (n, &b) in bits.iter().enumerate() {
        if b {
            run += 1;
            if run == m {
                return Some(n + 1 - m);
            }
        } else {
            run = 0;
        }
    }
    None
}

fn sieve_into(bits: &mut Vec<bool>, gens: &[u64], bound: usize) {
    if bits.is_empty() {
        bits.push(true);
    }
    for n in bits.len()..=bound {
        let hit = gens
            .iter()
            .map(|&g| g as usize)
            .take_while(|&g| g <= n)
            .any(|g| bits[n - g]);
        bits.push(hit);
    }
}

/// Representability flags for `⟨gens⟩`.
///
/// With an explicit `bound` the table covers exactly `0..=bound` and may or
/// may not be certified. Without one, the bound starts at `max(gens)^2` and
/// doubles until the table certifies, which requires `gcd = 1`.
pub fn build_membership(gens: &GeneratorList, bound: Option<u64>, limits: &Limits) -> Result<MembershipTable> {
    let sorted = gens.sorted();
    match bound {
        Some(b) => {
            limits.check_sieve(b + 1)?;
            let mut bits = Vec::with_capacity(b as usize + 1);
            sieve_into(&mut bits, sorted, b as usize);
            Ok(MembershipTable::from_flags(bits))
        }
        None => {
            gens.require_gcd_one()?;
            let mut b = gens.max().saturating_mul(gens.max()).max(1);
            let mut bits = Vec::new();
            loop {
                limits.check_sieve(b + 1)?;
                sieve_into(&mut bits, sorted, b as usize);
                if let Some(start) = find_certifying_run(&bits) {
                    return Ok(MembershipTable { bits, run_start: Some(start) });
                }
                b = b.saturating_mul(2);
            }
        }
    }
}

/// Extend a table of `⟨gens⟩` to a larger bound, returning a new table.
pub fn extend_membership(
    table: &MembershipTable,
    gens: &GeneratorList,
    bound: u64,
    limits: &Limits,
) -> Result<MembershipTable> {
    limits.check_sieve(bound + 1)?;
    let mut bits = table.bits.clone();
    sieve_into(&mut bits, gens.sorted(), bound as usize);
    Ok(MembershipTable::from_flags(bits))
}

/// Largest integer outside `⟨gens⟩`; `None` when the semigroup is ℕ.
pub fn frobenius(gens: &GeneratorList, limits: &Limits) -> Result<Option<u64>> {
    build_membership(gens, None, limits)?.frobenius()
}

pub fn gaps(gens: &GeneratorList, limits: &Limits) -> Result<Vec<u64>> {
    build_membership(gens, None, limits)?.gaps()
}

pub fn apery(gens: &GeneratorList, m: u64, limits: &Limits) -> Result<Vec<u64>> {
    build_membership(gens, None, limits)?.apery(m)
}

pub fn minimal_generators(gens: &GeneratorList, limits: &Limits) -> Result<Vec<u64>> {
    build_membership(gens, None, limits)?.minimal_generators()
}

/// Whether `⟨a⟩ = ⟨b⟩`, compared up to `max(F(a), F(b)) + max generator + 1`.
pub fn semigroup_equal(a: &GeneratorList, b: &GeneratorList, limits: &Limits) -> Result<bool> {
    let ta = build_membership(a, None, limits)?;
    let tb = build_membership(b, None, limits)?;
    let f = ta.frobenius()?.unwrap_or(0).max(tb.frobenius()?.unwrap_or(0));
    let horizon = f + a.max().max(b.max()) + 1;
    Ok((0..=horizon).all(|n| ta.contains(n) == tb.contains(n)))
}

/// `d(n; a_1..a_k)` for `n = 0..=order`, over the input sequence with repeats.
///
/// Unbounded-knapsack prefix recurrence, one pass per generator.
pub fn denumerant_series(gens: &GeneratorList, order: u64) -> TruncatedSeries<BigUint> {
    let n = order as usize;
    let mut c = vec![BigUint::zero(); n + 1];
    c[0] = BigUint::one();
    for &a in gens.original() {
        let a = a as usize;
        for i in a..=n {
            let (lo, hi) = c.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }
    TruncatedSeries::new(c)
}

/// Number of `(x_1..x_k) ∈ ℕ^k` with `Σ x_i a_i = a0`.
pub fn denumerant(a0: u64, gens: &GeneratorList) -> BigUint {
    denumerant_series(gens, a0).into_coeffs().pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[u64]) -> GeneratorList {
        GeneratorList::new(v).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn generator_list_validation() {
        assert_eq!(GeneratorList::new(&[]), Err(Error::EmptyGenerators));
        assert_eq!(GeneratorList::new(&[3, 0]), Err(Error::ZeroGenerator));
        let a = g(&[6, 4, 6, 9]);
        assert_eq!(a.sorted(), &[4, 6, 9]);
        assert_eq!(a.original(), &[6, 4, 6, 9]);
        assert_eq!(a.gcd(), 1);
        assert_eq!(a.residues(4), vec![2, 0, 2, 1]);
        assert_eq!(a.quotients(4), vec![1, 1, 1, 2]);
    }

    #[test]
    fn membership_of_5_6() {
        let t = build_membership(&g(&[5, 6]), Some(20), &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 5, 6, 10, 11, 12, 15, 16, 17, 18, 20]);
        assert!(!t.is_certified());
        assert_eq!(t.contains(21), None);
    }

    #[test]
    fn membership_small_cases() {
        let t = build_membership(&g(&[1]), Some(3), &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 1, 2, 3]);
        assert!(t.is_certified());
        let t = build_membership(&g(&[3, 5]), Some(10), &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 3, 5, 6, 8, 9, 10]);
        assert!(t.is_certified());
    }

    #[test]
    fn auto_bound_needs_gcd_one() {
        assert_eq!(
            build_membership(&g(&[4, 6]), None, &lim()),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        // explicit bounds are fine for any gcd
        let t = build_membership(&g(&[4, 6]), Some(12), &lim()).unwrap();
        assert_eq!(t.members(), vec![0, 4, 6, 8, 10, 12]);
    }

    #[test]
    fn cap_is_enforced() {
        let tiny = Limits { sieve_cells: 10, ..lim() };
        assert!(matches!(
            build_membership(&g(&[7, 11]), None, &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn extension_is_monotone() {
        let a = g(&[5, 7]);
        let t = build_membership(&a, Some(10), &lim()).unwrap();
        let u = extend_membership(&t, &a, 40, &lim()).unwrap();
        assert_eq!(&u.flags()[..11], t.flags());
        assert!(u.is_certified());
        assert_eq!(u.frobenius().unwrap(), Some(23));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(&g(&[3, 5]), &lim()).unwrap(), Some(7));
        assert_eq!(frobenius(&g(&[1]), &lim()).unwrap(), None);
        assert_eq!(frobenius(&g(&[5, 6]), &lim()).unwrap(), Some(19));
        assert_eq!(frobenius(&g(&[2, 4]), &lim()), Err(Error::GcdNotOne { gcd: 2 }));
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(gaps(&g(&[3, 5]), &lim()).unwrap(), vec![1, 2, 4, 7]);
        assert_eq!(gaps(&g(&[1]), &lim()).unwrap(), Vec::<u64>::new());
        assert_eq!(gaps(&g(&[2, 5]), &lim()).unwrap(), vec![1, 3]);
    }

    #[test]
    fn apery_examples() {
        assert_eq!(apery(&g(&[3, 5]), 3, &lim()).unwrap(), vec![0, 10, 5]);
        assert_eq!(apery(&g(&[1]), 1, &lim()).unwrap(), vec![0]);
        assert_eq!(apery(&g(&[2, 5]), 2, &lim()).unwrap(), vec![0, 5]);
        assert_eq!(apery(&g(&[3, 5]), 4, &lim()), Err(Error::NotAMember { m: 4 }));
        assert_eq!(apery(&g(&[3, 5]), 0, &lim()), Err(Error::NotAMember { m: 0 }));
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(minimal_generators(&g(&[2, 4, 5]), &lim()).unwrap(), vec![2, 5]);
        assert_eq!(minimal_generators(&g(&[3, 4, 5]), &lim()).unwrap(), vec![3, 4, 5]);
        assert_eq!(minimal_generators(&g(&[1, 7]), &lim()).unwrap(), vec![1]);
    }

    #[test]
    fn equality_examples() {
        assert!(semigroup_equal(&g(&[2, 5]), &g(&[2, 5, 4]), &lim()).unwrap());
        assert!(semigroup_equal(&g(&[3, 5]), &g(&[3, 5, 8]), &lim()).unwrap());
        assert!(!semigroup_equal(&g(&[3, 5]), &g(&[3, 7]), &lim()).unwrap());
    }

    #[test]
    fn denumerant_examples() {
        assert_eq!(denumerant(0, &g(&[3, 5])), BigUint::one());
        assert_eq!(denumerant(15, &g(&[3, 5])), BigUint::from(2u32));
        assert_eq!(denumerant(7, &g(&[3, 5])), BigUint::zero());
        let s = |v: &[u64], n| -> Vec<u64> {
            denumerant_series(&g(v), n)
                .coeffs()
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(s(&[3, 5], 8), vec![1, 0, 0, 1, 0, 1, 1, 0, 1]);
        assert_eq!(s(&[1], 3), vec![1, 1, 1, 1]);
        assert_eq!(s(&[5, 6], 11), vec![1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1]);
    }

    #[test]
    fn uncertified_table_refuses_global_questions() {
        let t = build_membership(&g(&[5, 6]), Some(20), &lim()).unwrap();
        assert_eq!(t.frobenius(), Err(Error::Uncertified { bound: 20 }));
    }
}
