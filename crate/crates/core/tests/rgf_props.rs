mod common;

use common::{denumerant_brute, gcd_all, members_upto, quotient_members_upto};
use nsq::quotient::{frobenius_quotient, QuotientSpec};
use nsq::rgf::{frobenius_from_rgf, gens_from_rgf, rgf_rational, rgf_series};
use nsq::{Error, GeneratorList, Limits, RgfRational};
use num::{BigInt, BigUint};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (Vec<u64>, u64)> {
    (prop::collection::vec(1u64..=20, 2..=3), 2u64..=5).prop_filter("gcd 1", |(v, _)| gcd_all(v) == 1)
}

fn gl(v: &[u64]) -> GeneratorList {
    GeneratorList::new(v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_is_multisected_denumerant((v, p) in instance()) {
        let s = rgf_series(&gl(&v), p, 15, &Limits::default()).unwrap();
        for n in 0..=15u64 {
            prop_assert_eq!(&s.coeffs()[n as usize], &BigUint::from(denumerant_brute(p * n, &v)));
        }
    }

    #[test]
    fn closed_form_expands_to_series((v, p) in instance()) {
        let l = Limits::default();
        let r = rgf_rational(&gl(&v), p, &l).unwrap();
        let h = r.certified_to().unwrap();
        let order = 2 * h;
        let s = rgf_series(&gl(&v), p, order, &l).unwrap();
        let e = r.expand(order as usize);
        for (a, b) in s.coeffs().iter().zip(&e) {
            prop_assert_eq!(&BigInt::from(a.clone()), b);
        }
        prop_assert_eq!(RgfRational::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn generators_from_closed_form((v, p) in instance()) {
        let r = rgf_rational(&gl(&v), p, &Limits::default()).unwrap();
        match gens_from_rgf(&r) {
            Ok(g) => {
                let f = common::frobenius_brute(&g).unwrap_or(0);
                let bound = f + g.iter().max().unwrap() + 20;
                prop_assert_eq!(members_upto(&g, bound), quotient_members_upto(&v, p, bound));
            }
            Err(Error::NegativeNumerator { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn frobenius_read_from_zeros((v, p) in instance()) {
        let l = Limits::default();
        let q = QuotientSpec::from_slice(&v, p).unwrap();
        prop_assert_eq!(frobenius_from_rgf(&gl(&v), p, &l).unwrap(), frobenius_quotient(&q, &l).unwrap());
    }
}

#[test]
fn odd_pair_by_two() {
    let l = Limits::default();
    for (a1, a2) in [(3u64, 5u64), (5, 7), (3, 11), (7, 9), (9, 25)] {
        let r = rgf_rational(&gl(&[a1, a2]), 2, &l).unwrap();
        let mut num = vec![BigInt::from(0); ((a1 + a2) / 2 + 1) as usize];
        num[0] = BigInt::from(1);
        num[((a1 + a2) / 2) as usize] = BigInt::from(1);
        assert_eq!(r, RgfRational::new(num, vec![a1, a2], r.certified_to()).unwrap());
    }
}

#[test]
fn display_and_json() {
    let r = rgf_rational(&gl(&[3, 5]), 2, &Limits::default()).unwrap();
    assert_eq!(r.to_string(), "(1 + x^4)/((1-x^3)*(1-x^5))");
    let j = r.to_json();
    assert_eq!(j["num"], serde_json::json!({"0": 1, "4": 1}));
    assert_eq!(j["den"], serde_json::json!([3, 5]));
    let r = rgf_rational(&gl(&[5, 6]), 3, &Limits::default()).unwrap();
    assert_eq!(r.to_string(), "1/((1-x^5)*(1-x^2))");
}

#[test]
fn negative_numerator_is_rejected() {
    let r = RgfRational::new(vec![BigInt::from(1), BigInt::from(-1)], vec![2], None).unwrap();
    assert_eq!(gens_from_rgf(&r), Err(Error::NegativeNumerator { exponent: 1 }));
}
