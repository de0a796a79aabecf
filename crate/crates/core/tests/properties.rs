use proptest::prelude::*;

use cubic_torsion::cubic_field::{sqrt_in_field, CubicField, FieldElement};
use cubic_torsion::elliptic::{CurvePoint, EllipticCurve};
use cubic_torsion::exact::{int, rat, resultant, sylvester_resultant, RatFunc};
use cubic_torsion::families::FamilyLabel;
use cubic_torsion::obstruction::{build_obstruction, search_rational_points};
use cubic_torsion::report::{verify, Status, VerifyOptions};
use cubic_torsion::{Rational, RationalPoly};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(small_rational(), 1..=max_len).prop_map(RationalPoly::new)
}

fn nonconstant(max_len: usize) -> impl Strategy<Value = RationalPoly> {
    poly(max_len).prop_filter("nonconstant", |p| !p.is_constant())
}

fn field() -> CubicField {
    CubicField::new(RationalPoly::from_desc(&[1, 0, -1, -1])).unwrap()
}

fn element() -> impl Strategy<Value = FieldElement> {
    [small_rational(), small_rational(), small_rational()].prop_map(|c| field().element(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_display_parses_back(p in poly(7)) {
        let back: RationalPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn squarefree_certificate_matches_gcd(f in nonconstant(5), g in nonconstant(3), square in any::<bool>()) {
        let f = if square { f * g.clone() * g } else { f };
        let by_gcd = f.gcd(&f.derivative()).is_constant();
        prop_assert_eq!(f.is_squarefree(), by_gcd);
        prop_assert!(f.squarefree_part().is_squarefree());
    }

    #[test]
    fn resultant_agrees_with_sylvester_and_is_antisymmetric(f in nonconstant(5), g in nonconstant(5)) {
        let r = resultant(&f, &g).unwrap();
        prop_assert_eq!(&r, &sylvester_resultant(&f, &g).unwrap());
        let sign = if (f.degree().unwrap() * g.degree().unwrap()) % 2 == 1 { int(-1) } else { int(1) };
        prop_assert_eq!(resultant(&g, &f).unwrap(), sign * r);
    }

    #[test]
    fn rational_function_composition_commutes_with_evaluation(
        f in poly(4), g in nonconstant(3), d in nonconstant(3), x in small_rational()
    ) {
        let outer = RatFunc::poly(f);
        let inner = RatFunc::new(g, d);
        if let Some(y) = inner.eval(&x) {
            match (outer.compose(&inner).eval(&x), outer.eval(&y)) {
                (Some(a), Some(b)) => prop_assert_eq!(a, b),
                (a, b) => prop_assert!(false, "pole mismatch {:?} {:?}", a, b),
            }
        }
    }

    #[test]
    fn field_arithmetic_is_a_field(a in element(), b in element(), c in element()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!((a.clone() * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!((a.clone() + &b).trace(), a.trace() + b.trace());
        if !num_traits::Zero::is_zero(&a) {
            let inv = a.inverse().unwrap();
            prop_assert!(num_traits::One::is_one(&(a * &inv)));
        }
    }

    #[test]
    fn square_roots_round_trip(a in element()) {
        let k = field();
        let sq = a.clone() * &a;
        let r = sqrt_in_field(&sq, &k).unwrap().expect("a square has a root");
        prop_assert!(r == a || r == -a.clone());
        prop_assert_eq!(r.clone() * &r, sq);
    }

    #[test]
    fn group_law_on_multiples(m in -6i64..=6, n in -6i64..=6) {
        // y² = x³ - 2 has the point (3, 5) of infinite order.
        let e = EllipticCurve::short(int(0), int(-2)).unwrap();
        let p = e.point(int(3), int(5)).unwrap();
        let (mp, np) = (e.mul(m, &p), e.mul(n, &p));
        prop_assert_eq!(e.add(&mp, &np), e.mul(m + n, &p));
        prop_assert_eq!(e.add(&mp, &np), e.add(&np, &mp));
        prop_assert!(e.contains(&e.mul(m * n, &p)));
        prop_assert_eq!(e.add(&mp, &e.neg(&mp)), CurvePoint::Infinity);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn point_search_is_monotone_in_height(lo in 1u64..=8, extra in 0u64..=8, genus3 in any::<bool>()) {
        let family = if genus3 { FamilyLabel::F18Kubert9 } else { FamilyLabel::F14Kubert7 };
        let c = build_obstruction(family).unwrap().curve;
        let small = search_rational_points(&c, lo);
        let large = search_rational_points(&c, lo + extra);
        prop_assert!(small.iter().all(|p| large.contains(p)));
        prop_assert!(small.iter().all(|p| c.contains(p)));
    }

    #[test]
    fn random_members_never_violate(n in -20i64..=20, d in 1i64..=6, cyclic in any::<bool>()) {
        let family = if cyclic { FamilyLabel::F18Cyclic } else { FamilyLabel::F14Kubert7 };
        let r = verify(family, Some(&rat(n, d)), &VerifyOptions::default()).unwrap();
        prop_assert!(matches!(r.status, Status::Verified | Status::Excluded(_)), "{}", r.line());
    }
}
