use nsq::exactalg::{rat, BigRational, Poly, RationalFunction, TruncatedSeries};
use num::{One, Zero};
use proptest::prelude::*;

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|v| Poly::from_ints(&v))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly_strategy(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Denominators with a nonzero constant term, so series exist.
fn unit_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    (1i64..=3, prop::collection::vec(-4i64..=4, 0..max_len)).prop_map(|(c0, rest)| {
        let mut v = vec![c0];
        v.extend(rest);
        Poly::from_ints(&v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in poly_strategy(6), b in poly_strategy(6), c in poly_strategy(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn degree_of_product(a in nonzero_poly(6), b in nonzero_poly(6)) {
        prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn division_identity(a in poly_strategy(8), b in nonzero_poly(5)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_bezout(a in nonzero_poly(6), b in nonzero_poly(6), c in nonzero_poly(3)) {
        // plant a common factor
        let (a, b) = (&a * &c, &b * &c);
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
        prop_assert!(c.rem(&g).unwrap().is_zero() || g.degree() >= c.degree());
        prop_assert_eq!(g.leading().cloned(), Some(BigRational::one()));
        let (g2, s, t) = a.ext_gcd(&b);
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn rational_function_field(n1 in poly_strategy(4), d1 in unit_poly(4), n2 in nonzero_poly(4), d2 in unit_poly(4)) {
        let f = RationalFunction::new(n1, d1).unwrap();
        let g = RationalFunction::new(n2, d2).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&(&f * &g) / &g, f.clone());
        prop_assert_eq!(&g * &g.inv().unwrap(), RationalFunction::one());
        // normalized: monic denominator, coprime parts
        prop_assert_eq!(f.den().leading().cloned(), Some(BigRational::one()));
        prop_assert_eq!(f.num().gcd(f.den()).degree(), Some(0));
    }

    #[test]
    fn series_is_multiplicative(n1 in poly_strategy(4), d1 in unit_poly(4), n2 in poly_strategy(4), d2 in unit_poly(4)) {
        let f = RationalFunction::new(n1, d1).unwrap();
        let g = RationalFunction::new(n2, d2).unwrap();
        let order = 12;
        let lhs = (&f * &g).series(order).unwrap();
        let rhs = f.series(order).unwrap().mul(&g.series(order).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_times_denominator_is_numerator(n in poly_strategy(5), d in unit_poly(5)) {
        let f = RationalFunction::new(n, d).unwrap();
        let order = 15;
        let s = f.series(order).unwrap();
        let den = TruncatedSeries::new((0..=order).map(|i| f.den().coeff(i)).collect::<Vec<_>>());
        let back = s.mul(&den);
        for i in 0..=order {
            prop_assert_eq!(&back.coeffs()[i], &f.num().coeff(i));
        }
    }
}

#[test]
fn geometric_identity() {
    // (1 - x^b) · Σ x^{bk} = 1
    for b in 1..6 {
        let f = RationalFunction::new(Poly::one(), Poly::one_minus_x_pow(b)).unwrap();
        let s = f.series(20).unwrap();
        for (i, c) in s.coeffs().iter().enumerate() {
            assert_eq!(*c, if i % b == 0 { rat(1) } else { rat(0) });
        }
    }
}

#[test]
fn monomial_powers() {
    let half_x = RationalFunction::monomial(rat(1) / rat(2), 1);
    assert_eq!(half_x.powi(3).unwrap(), RationalFunction::monomial(rat(1) / rat(8), 3));
    assert_eq!(half_x.powi(-2).unwrap(), RationalFunction::monomial(rat(4), -2));
    assert!(RationalFunction::zero().inv().is_err());
}
