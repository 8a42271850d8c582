mod common;

use common::{ct_brute, gcd_all, Fac};
use nsq::ctengine::{
    build_rgf_expr, ct_report, ct_rgf_rational, ct_series, lemma_zero_check, parse_expr, reduce_factor_mod,
    render_expr, residue_a0, BinomialFactor, CtExpr,
};
use nsq::exactalg::{BigRational, RationalFunction};
use nsq::rgf::rgf_rational;
use nsq::{Error, GeneratorList, Limits};
use num::{BigInt, Zero};
use proptest::prelude::*;

const HI: i64 = 10;

fn fac() -> impl Strategy<Value = Fac> {
    (prop_oneof![Just(1i64), Just(1), Just(-1), Just(2)], -2i64..=2, -4i64..=4)
        .prop_filter("not constant", |(_, e, b)| !(*e == 0 && *b == 0))
        .prop_map(|(c, e, b)| Fac { c, e, b })
}

fn to_expr(num: (i64, i64, i64), facs: &[Fac]) -> CtExpr {
    let factors = facs
        .iter()
        .map(|f| BinomialFactor::new(BigRational::from_integer(BigInt::from(f.c)), f.e, f.b).unwrap())
        .collect();
    CtExpr::monomial_over(BigRational::from_integer(BigInt::from(num.0)), num.1, num.2, factors)
}

/// Most λ-degree the numerator and the x-carrying expansions can remove.
fn lam_cap(num: (i64, i64, i64), facs: &[Fac]) -> i64 {
    let mut cap = (-num.2).max(0);
    for f in facs {
        let small = f.e > 0 || (f.e == 0 && f.b > 0);
        let (dx, dl) = if small { (f.e, f.b) } else { (-f.e, -f.b) };
        if dx > 0 && dl < 0 {
            cap += -dl * (HI / dx);
        }
    }
    cap
}

fn brute_vec(num: (i64, i64, i64), facs: &[Fac]) -> Vec<BigRational> {
    let m = ct_brute(num, facs, HI, lam_cap(num, facs));
    (0..=HI).map(|j| m.get(&j).cloned().unwrap_or_else(BigRational::zero)).collect()
}

fn series_of(f: &RationalFunction) -> Vec<BigRational> {
    f.series(HI as usize).unwrap().into_coeffs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn residue_method_matches_enumeration(
        facs in prop::collection::vec(fac(), 1..=3),
        e0 in 0i64..=2,
        b0 in -3i64..=3,
    ) {
        let num = (1, e0, b0);
        let e = to_expr(num, &facs);
        match ct_report(&e) {
            Ok(rep) => {
                if let Some(d) = &rep.dual {
                    prop_assert_eq!(d, &rep.primal);
                }
                prop_assert_eq!(series_of(&rep.primal), brute_vec(num, &facs));
            }
            Err(Error::NonCoprimeFactors { .. }) => {}
            Err(err) => prop_assert!(false, "{err}"),
        }
    }

    #[test]
    fn direct_expansion_matches_enumeration(
        facs in prop::collection::vec(fac(), 1..=3),
        e0 in 0i64..=2,
        b0 in -3i64..=3,
    ) {
        let num = (1, e0, b0);
        let s = ct_series(&to_expr(num, &facs), HI).unwrap();
        prop_assert_eq!(s.x_offset, e0);
        let brute = brute_vec(num, &facs);
        for j in 0..=HI {
            prop_assert_eq!(s.coeff(j).unwrap(), brute[j as usize].clone());
        }
    }

    #[test]
    fn normalization_is_idempotent_and_value_preserving(facs in prop::collection::vec(fac(), 1..=3), b0 in -3i64..=3) {
        let e = to_expr((1, 0, b0), &facs);
        let n = e.normalize();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.normalize(), n.clone());
        let (a, b) = (ct_series(&n, HI).unwrap(), ct_series(&e, HI).unwrap());
        // offsets may differ; the coefficients may not
        for j in a.x_offset.min(b.x_offset)..=HI {
            prop_assert_eq!(a.coeff(j), b.coeff(j));
        }
    }

    #[test]
    fn grammar_round_trip(facs in prop::collection::vec(fac(), 0..=4), c in -3i64..=3, e0 in -2i64..=2, b0 in -3i64..=3) {
        prop_assume!(c != 0);
        let e = to_expr((c, e0, b0), &facs);
        let text = render_expr(&e).unwrap();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(render_expr(&back).unwrap(), text);
    }

    #[test]
    fn reduction_keeps_the_residue(facs in prop::collection::vec(fac(), 2..=3), s in 0usize..3) {
        let s = s % facs.len();
        prop_assume!(facs[s].b != 0);
        let e = to_expr((1, 0, 0), &facs).normalize();
        let r = match reduce_factor_mod(&e, s) {
            Ok(r) => r,
            Err(Error::NonCoprimeFactors { .. }) => return Ok(()),
            Err(err) => return Err(TestCaseError::fail(err.to_string())),
        };
        match (residue_a0(&e, s), residue_a0(&r, s)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.a0, b.a0),
            (Err(Error::NonCoprimeFactors { .. }), _) | (_, Err(Error::NonCoprimeFactors { .. })) => {}
            (a, b) => prop_assert!(false, "{a:?} / {b:?}"),
        }
    }

    #[test]
    fn residues_of_proper_vanishing_expressions_sum_to_zero(
        facs in prop::collection::vec((1i64..=2, -2i64..=2, 1i64..=4).prop_map(|(c, e, b)| Fac { c, e, b }), 1..=4),
        shift in 1i64..=12,
    ) {
        let total: i64 = facs.iter().map(|f| f.b).sum();
        prop_assume!(shift < total);
        let e = to_expr((1, 0, shift), &facs);
        match lemma_zero_check(&e) {
            Ok(ok) => prop_assert!(ok),
            Err(Error::NonCoprimeFactors { .. }) => {}
            Err(err) => prop_assert!(false, "{err}"),
        }
    }

    #[test]
    fn rgf_through_constant_terms(v in prop::collection::vec(1u64..=15, 2..=3), p in 2u64..=4) {
        prop_assume!(gcd_all(&v) == 1);
        let a = GeneratorList::new(&v).unwrap();
        match ct_rgf_rational(&a, p) {
            Ok(f) => prop_assert_eq!(f, rgf_rational(&a, p, &Limits::default()).unwrap().to_rational_function()),
            Err(Error::NonCoprimeFactors { .. }) => {
                // the direct expansion still works
                let s = ct_series(&build_rgf_expr(&a, p).unwrap(), 8).unwrap();
                let r = rgf_rational(&a, p, &Limits::default()).unwrap().expand(8);
                for (x, y) in s.coeffs.iter().zip(r) {
                    prop_assert_eq!(x.clone(), BigRational::from_integer(y));
                }
            }
            Err(err) => prop_assert!(false, "{err}"),
        }
    }
}

#[test]
fn worked_examples() {
    let e = parse_expr("1/((1 - x*L^-2)*(1 - L^3))").unwrap();
    let rep = ct_report(&e).unwrap();
    let expect = RationalFunction::new(
        nsq::exactalg::Poly::one(),
        nsq::exactalg::Poly::one_minus_x_pow(3),
    )
    .unwrap();
    assert_eq!(rep.primal, expect);
    assert_eq!(residue_a0(&e, 0).unwrap().a0, -expect.clone());
    assert_eq!(residue_a0(&e, 1).unwrap().a0, expect);

    let a = GeneratorList::new(&[4, 8, 11]).unwrap();
    assert!(matches!(ct_rgf_rational(&a, 3), Err(Error::NonCoprimeFactors { .. })));
}
