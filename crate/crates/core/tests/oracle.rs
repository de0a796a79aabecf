//! Values frozen from an independent computer-algebra computation, and
//! published values the constructions must reproduce.

use cubic_torsion::cubic_field::{CubicField, GaloisType, RationalField};
use cubic_torsion::elliptic::{torsion_subgroup, EllipticCurve, TorsionGroup};
use cubic_torsion::exact::{discriminant, format_rational, int, is_square_rational, parse_rational, resultant};
use cubic_torsion::families::{cubic_factor_discriminant, member, FamilyLabel};
use cubic_torsion::obstruction::{build_obstruction, fiber_analysis, obstruction_report, HyperPoint};
use cubic_torsion::{Rational, RationalPoly};

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

/// `(family, parameter, j-invariant, squarefree class of the field discriminant)`,
/// computed from the closed-form models independently of this crate.
const MEMBERS: &[(&str, &str, &str, Option<i64>)] = &[
    ("F13", "2", "152303/24576", Some(1)),
    ("F13", "3", "2072735744/1594323", Some(1)),
    ("F13", "1/2", "-140246460241/73728", Some(1)),
    ("F13", "-2", "-140246460241/73728", Some(1)),
    ("F13", "5/3", "-2884469907460304896/56439656982421875", Some(1)),
    ("F14_KUBERT7", "2", "-2146689/1664", None),
    ("F14_KUBERT7", "3", "-117649/8118144", None),
    ("F14_KUBERT7", "-1", "-2146689/1664", None),
    ("F14_KUBERT7", "1/3", "-6329617441/279936", None),
    ("F14_KUBERT7", "7", "40251338884511/2997011332224", None),
    ("F14_KUBERT7", "8", "801581275315909089/70810888830976", None),
    ("F18_KUBERT9", "2", "-1167051/512", None),
    ("F18_KUBERT9", "3", "139233463487/58763045376", None),
    ("F18_KUBERT9", "-1", "-1167051/512", None),
    ("F18_KUBERT9", "6", "350792849898814825511281/11141148807000000000", None),
    ("F18_CYCLIC", "2", "-15625/28", Some(1)),
    ("F18_CYCLIC", "-1", "128787625/98", Some(1)),
    ("F18_CYCLIC", "1/2", "189208196468929/834928640", Some(1)),
    ("F18_CYCLIC", "4", "52492168638015625/293197968", Some(1)),
    ("F18_CYCLIC", "-2", "326355561310674169/465699780", Some(1)),
    ("F2x14", "2", "3555482626044769/78364164096", None),
    ("F2x14", "3", "42396561/16384", None),
    ("F2x14", "1/2", "466605634012857470786111041/2158266938906640384", None),
    ("F2x14", "-2", "37484312805940950481/13243543732224", None),
];

#[test]
fn member_j_invariants_and_discriminant_classes() {
    for &(family, param, j, class) in MEMBERS {
        let m = member(family.parse().unwrap(), Some(&q(param))).unwrap();
        assert_eq!(format_rational(m.curve.j_invariant()), j, "{family} at {param}");
        if let Some(c) = class {
            let product = m.field.disc() * int(c);
            assert!(is_square_rational(&product).is_some(), "{family} at {param}: disc {}", m.field.disc());
        }
    }
}

#[test]
fn division_polynomials_of_a_short_curve() {
    // y² = x³ - 2x + 5; the lowest four coefficients and the degree of
    // ψₙ (odd n) or ψₙ/ψ₂ (even n).
    let expected: [(u32, [i64; 4], usize); 7] = [
        (3, [-4, 60, -12, 0], 4),
        (4, [-384, 80, -40, 200], 6),
        (5, [-153536, 152000, -22400, -196800], 12),
        (6, [1203968, -18913280, 16656384, -5985280], 16),
        (7, [22659067904, -32727080960, 32135892992, -82292940800], 24),
        (8, [9044751286272, -19469383106560, 10821781225472, 43368876277760], 30),
        (9, [-41746364890087424, 727388466079334400, -1755055330169978880, 2026877124775772160], 40),
    ];
    let e = EllipticCurve::short(int(-2), int(5)).unwrap();
    for (n, low, degree) in expected {
        let psi = e.division_polynomial(n).unwrap();
        assert_eq!(psi.degree(), Some(degree), "ψ{n}");
        let got: Vec<Rational> = (0..4).map(|i| psi.coeff(i)).collect();
        assert_eq!(got, low.map(int).to_vec(), "ψ{n}");
    }
}

#[test]
fn resultants_and_discriminants() {
    let g = RationalPoly::from_desc(&[3, 0, -2, 5]);
    let h = RationalPoly::from_desc(&[1, -4, 0, 7, -1]);
    assert_eq!(resultant(&g, &h).unwrap(), int(16659));
    assert_eq!(discriminant(&g).unwrap(), int(-5979));
    assert_eq!(discriminant(&h).unwrap(), int(25893));
    assert_eq!(discriminant(&RationalPoly::from_desc(&[1, 2, -1, -1])).unwrap(), int(49));
}

#[test]
fn norm_and_characteristic_polynomial() {
    let k = CubicField::new(RationalPoly::from_desc(&[1, 0, -1, -1])).unwrap();
    let a = k.from_ints([-3, 2, 1]);
    assert_eq!(a.charpoly(), RationalPoly::from_desc(&[1, 7, 6, -25]));
    assert_eq!(a.norm(), int(25));
    assert_eq!(a.trace(), int(-7));
}

#[test]
fn fixed_curves_of_conductor_49() {
    let a3 = member(FamilyLabel::Fixed49A3, None).unwrap();
    let a4 = member(FamilyLabel::Fixed49A4, None).unwrap();
    assert_eq!(a3.curve.j_invariant(), &int(-3375));
    assert_eq!(a4.curve.j_invariant(), &int(16581375));
    for m in [&a3, &a4] {
        assert_eq!(m.field.classify().galois_type, GaloisType::Cyclic);
        assert_eq!(m.field.disc(), &int(49));
        assert_eq!(torsion_subgroup(&m.curve, &m.field).unwrap(), TorsionGroup::cyclic(14));
        assert_eq!(torsion_subgroup(&m.curve, &RationalField).unwrap(), TorsionGroup::cyclic(2));
    }
}

#[test]
fn cubic_factor_discriminant_closed_form() {
    for s in ["0", "1", "-2", "1/3", "7/5"] {
        let s = q(s);
        let inner = &s * &s + int(3) * &s + int(3);
        let closed = int(4096 * 81) * &inner * &inner;
        assert_eq!(cubic_factor_discriminant(&s).unwrap(), closed);
    }
}

#[test]
fn obstruction_curves() {
    let genus2 = build_obstruction(FamilyLabel::F14Kubert7).unwrap();
    assert_eq!(genus2.curve.genus(), 2);
    assert_eq!(genus2.curve.h(), &RationalPoly::from_desc(&[-3, 27, -39, 12, 3, 0]));
    let genus3 = build_obstruction(FamilyLabel::F18Kubert9).unwrap();
    assert_eq!(genus3.curve.genus(), 3);
    let h3 = RationalPoly::from_desc(&[-3, 3, 0])
        * RationalPoly::from_desc(&[1, -1, 1])
        * RationalPoly::from_desc(&[1, -6, 3, 1]);
    assert_eq!(genus3.curve.h(), &h3);

    let known = vec![HyperPoint::Affine(int(0), int(0)), HyperPoint::Affine(int(1), int(0)), HyperPoint::Infinity];
    for family in [FamilyLabel::F14Kubert7, FamilyLabel::F18Kubert9] {
        let r = obstruction_report(family, 100).unwrap();
        assert_eq!(r.points_found, known, "{family}");
        assert!(r.substitution_identity && r.known_points_excluded);
    }
}

#[test]
fn quotient_elliptic_curve_has_six_rational_points() {
    let r = fiber_analysis().unwrap();
    assert_eq!(r.torsion, TorsionGroup::cyclic(6));
    assert!(r.points_match && r.rational_points_lie_over_origin);
}
