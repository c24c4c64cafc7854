use num_traits::Zero;
use proptest::prelude::*;
use qcheb::chebyshev::{cheb_det, ChebTables, Kind};
use qcheb::qcomb::QBinomialTable;
use qcheb::tiling::{enumerate, oracle_u, oracle_u_total, oracle_v, tiling_count, WeightSpec};
use qcheb::{Mono, QPoly, QRational, QValue, Rational, Var, XsPoly, ZSeries};

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-3i64..=3, 0..9).prop_map(|c| QPoly::from_coeffs(&c))
}

fn nonzero_qpoly() -> impl Strategy<Value = QPoly> {
    qpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qrat() -> impl Strategy<Value = QRational> {
    (qpoly(), nonzero_qpoly()).prop_map(|(n, d)| QRational::new(n, d).unwrap())
}

fn small_qrat() -> impl Strategy<Value = QRational> {
    prop_oneof![
        (-3i64..=3).prop_map(QRational::from_int),
        (0i64..3).prop_map(QRational::q_pow),
        (qpoly(), prop::sample::select(vec![vec![1, 1], vec![1, 0, 1], vec![1, 1, 1]]))
            .prop_map(|(n, d)| QRational::new(n, QPoly::from_coeffs(&d)).unwrap()),
    ]
}

fn xspoly() -> impl Strategy<Value = XsPoly> {
    prop::collection::vec(((0u32..9, 0u32..9, 0u32..2), small_qrat()), 0..4).prop_map(|terms| {
        XsPoly::from_terms(terms.into_iter().map(|((x, s, r), c)| (Mono::new(x, s, r), c)))
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn admissible_q() -> impl Strategy<Value = Rational> {
    rational().prop_filter("q = -1 is excluded", |q| *q != -Rational::from_integer(1.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qrational_field_axioms(a in qrat(), b in qrat(), c in qrat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.checked_div(&a).unwrap(), QRational::one());
            prop_assert_eq!(a.recip().unwrap().recip().unwrap(), a.clone());
        }
    }

    #[test]
    fn qrational_canonical_form(a in qrat(), k in nonzero_qpoly()) {
        let again = QRational::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        let widened = QRational::new(a.num() * &k, a.den() * &k).unwrap();
        prop_assert_eq!(&widened, &a);
        prop_assert!(a.den().leading_coeff().unwrap() > &Rational::zero());
        prop_assert!(a.den().is_integral());
        prop_assert_eq!(a.to_string(), widened.to_string());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in qrat(), b in qrat(), q in rational()) {
        if let (Ok(x), Ok(y)) = (a.eval(&q), b.eval(&q)) {
            prop_assert_eq!((&a + &b).eval(&q).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).eval(&q).unwrap(), &x * &y);
        }
    }

    #[test]
    fn inversion_of_q_is_an_involution(a in qrat()) {
        let inv = a.subst_q(&QValue::Inverse).unwrap();
        prop_assert_eq!(inv.subst_q(&QValue::Inverse).unwrap(), a);
    }

    #[test]
    fn xspoly_ring_axioms(a in xspoly(), b in xspoly(), c in xspoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &XsPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in xspoly(), b in xspoly()) {
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(a in xspoly(), b in xspoly(), v in xspoly(), q in admissible_q()) {
        for var in [Var::X, Var::S, Var::R] {
            prop_assert_eq!((&a * &b).subst(var, &v), a.subst(var, &v) * b.subst(var, &v));
            prop_assert_eq!((&a + &b).subst(var, &v), a.subst(var, &v) + b.subst(var, &v));
        }
        if let (Ok(x), Ok(y)) = (a.at_q(&q), b.at_q(&q)) {
            prop_assert_eq!((&a * &b).at_q(&q).unwrap(), x * y);
        }
        prop_assert_eq!((&a * &b).eta(1), a.eta(1) * b.eta(1));
    }

    #[test]
    fn series_product_is_convolution(a in prop::collection::vec(xspoly(), 1..5), b in prop::collection::vec(xspoly(), 1..5)) {
        let order = 5;
        let (sa, sb) = (ZSeries::new(a.clone(), order), ZSeries::new(b.clone(), order));
        let p = &sa * &sb;
        for k in 0..=order {
            let conv: XsPoly = (0..=k)
                .filter(|&i| i < a.len() && k - i < b.len())
                .map(|i| &a[i] * &b[k - i])
                .sum();
            prop_assert_eq!(p.coeff(k), &conv);
        }
    }

    #[test]
    fn series_division_inverts_product(a in prop::collection::vec(xspoly(), 1..4), b in prop::collection::vec(small_qrat(), 1..4)) {
        prop_assume!(!b[0].is_zero());
        let order = 4;
        let sa = ZSeries::new(a, order);
        let sb = ZSeries::new(b.into_iter().map(XsPoly::constant).collect(), order);
        prop_assert_eq!((&sa * &sb).div(&sb).unwrap(), sa);
    }

    #[test]
    fn chebyshev_determinant_matches_recurrence_at_rational_q(n in 0usize..12, q in admissible_q()) {
        let tables = ChebTables::new(n);
        for kind in [Kind::T, Kind::U] {
            let p = tables.family(kind).get(n as i64);
            prop_assert_eq!(cheb_det(kind, n).at_q(&q).unwrap(), p.at_q(&q).unwrap());
        }
    }

    #[test]
    fn tiling_oracle_matches_u(n in 0usize..9) {
        let tables = ChebTables::new(n);
        prop_assert_eq!(enumerate(n, 16).unwrap().count() as u64, tiling_count(n));
        prop_assert_eq!(&oracle_u_total(n, WeightSpec::W, 16).unwrap(), tables.u.get(n as i64));
    }

    #[test]
    fn q_binomial_symmetry(n in 0i64..=20, k in 0i64..=20) {
        prop_assume!(k <= n);
        let b = QBinomialTable::new(20);
        prop_assert_eq!(b.get(n, k), b.get(n, n - k));
    }

    #[test]
    fn chebyshev_monomial_shape(n in 0usize..=20) {
        let tables = ChebTables::new(n);
        for kind in [Kind::T, Kind::U] {
            for (m, _) in tables.family(kind).get(n as i64).terms() {
                prop_assert_eq!(m.r, 0);
                prop_assert_eq!(m.x + 2 * m.s, n as u32);
            }
        }
    }

    #[test]
    fn tiling_classes_partition_the_board(n in 0usize..9) {
        let cap = 16;
        let by_k: XsPoly = (0..=n / 2).map(|k| oracle_u(n, k, WeightSpec::Wr, cap).unwrap()).sum();
        prop_assert_eq!(by_k, oracle_u_total(n, WeightSpec::Wr, cap).unwrap());
        for k in 0..=n / 2 {
            let by_l: XsPoly = (0..=n - 2 * k).map(|l| oracle_v(n, k, l, cap).unwrap()).sum();
            prop_assert_eq!(by_l, oracle_u(n, k, WeightSpec::Wr, cap).unwrap());
        }
    }
}
