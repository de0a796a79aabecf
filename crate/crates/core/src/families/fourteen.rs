use num_traits::Zero;

use crate::cubic_field::{CubicField, FieldClass, FieldElement};
use crate::elliptic::{EllipticCurve, TorsionGroup};
use crate::exact::{int, rat};
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

use super::interval::IntervalClass;
use super::table::kubert7;
use super::{curve_of, eval, eval_all, field_of, FamilyError, FamilyLabel, FamilyMember, CYCLIC};

/// ℚ(ζ₇)⁺, defined by `x³ + 2x² - x - 1`.
pub fn real_cyclotomic_7() -> CubicField {
    CubicField::new(RationalPoly::from_desc(&[1, 2, -1, -1])).expect("x³ + 2x² - x - 1 is irreducible")
}

/// 49A3: `y² + xy = x³ - x² - 107x + 552`.
pub fn curve_49a3() -> EllipticCurve<Rational> {
    EllipticCurve::new([1, -1, 0, -107, 552].map(int)).expect("49A3 is nonsingular")
}

/// 49A4: `y² + xy = x³ - x² - 1822x + 30393`.
pub fn curve_49a4() -> EllipticCurve<Rational> {
    EllipticCurve::new([1, -1, 0, -1822, 30393].map(int)).expect("49A4 is nonsingular")
}

/// 49A3 and 49A4 over ℚ(ζ₇)⁺, where both acquire ℤ/14.
pub fn fixed_14() -> Result<[FamilyMember; 2], FamilyError> {
    let field = real_cyclotomic_7();
    let m = |label, curve| FamilyMember {
        label,
        parameter: None,
        curve,
        field: field.clone(),
        expected_torsion: TorsionGroup::cyclic(14),
        expected_rational_torsion: Some(TorsionGroup::cyclic(2)),
        expected_class: CYCLIC,
    };
    Ok([m(FamilyLabel::Fixed49A3, curve_49a3()), m(FamilyLabel::Fixed49A4, curve_49a4())])
}

/// `X₁(14): y² + (x² + x)y + x = 0`.
pub fn on_x1_14<T: Scalar>(x: &T, y: &T) -> bool {
    (y.square() + &((x.square() + x) * y) + x).is_zero()
}

/// `X₀(14): v² + (u + 3)v + u³ + 6u + 8 = 0`.
pub fn on_x0_14<T: Scalar>(u: &T, v: &T) -> bool {
    let three = T::from_int(3);
    (v.square() + &((u.clone() + &three) * v) + &u.pow(3) + &(T::from_int(6) * u) + &T::from_int(8)).is_zero()
}

/// The natural map `X₁(14) → X₀(14)`,
/// `(x, y) ↦ ((y³ - y - 1)/y², (-1 - x² - x³ - y - y³ - 3xy - xy²)/(xy))`.
pub fn eval_phi<T: Scalar>(x: &T, y: &T) -> Result<(T, T), FamilyError> {
    if x.is_zero() || y.is_zero() {
        return Err(FamilyError::InvalidInput("φ needs x ≠ 0 and y ≠ 0".into()));
    }
    let one = T::one();
    let u = (y.pow(3) - y - &one) / &y.square();
    let num = -one - &x.square() - &x.pow(3) - y - &y.pow(3) - &(T::from_int(3) * x * y) - &(x.clone() * &y.square());
    let v = num / &(x.clone() * y);
    Ok((u, v))
}

/// The non-cuspidal rational points of `X₀(14)`, points above them on
/// `X₁(14)` over ℚ(ζ₇)⁺, and the curves those points classify.
#[derive(Clone, Debug)]
pub struct Modular14 {
    pub field: CubicField,
    pub q1: (FieldElement, FieldElement),
    pub q2: (FieldElement, FieldElement),
    pub p1: (Rational, Rational),
    pub p2: (Rational, Rational),
    /// The curve attached to `Q₁`; isomorphic to 49A3 over the field.
    pub e1: EllipticCurve<FieldElement>,
    /// The curve attached to `Q₂`; isomorphic to 49A4 over the field.
    pub e2: EllipticCurve<FieldElement>,
}

/// `y² + (1 - c)xy - by = x³ - bx²`.
fn tate_normal(
    k: &CubicField,
    one_minus_c: FieldElement,
    b: FieldElement,
) -> Result<EllipticCurve<FieldElement>, FamilyError> {
    let zero = k.from_rational(&int(0));
    Ok(EllipticCurve::new([one_minus_c, -b.clone(), -b, zero.clone(), zero])?)
}

pub fn modular14_models() -> Result<Modular14, FamilyError> {
    let k = real_cyclotomic_7();
    let e = |c: [Rational; 3]| k.element(c);
    let q1 = (e([int(1), int(-1), int(-1)]), k.alpha());
    let q2 = (e([int(-3), int(2), int(2)]), e([int(1), int(0), int(-2)]));
    let e1 = tate_normal(&k, e([rat(3, 7), rat(2, 7), rat(5, 7)]), -e([rat(-3, 7), rat(-1, 7), int(1)]))?;
    let e2 = tate_normal(&k, -e([rat(-23, 7), rat(22, 7), rat(13, 7)]), e([int(1), rat(12, 7), rat(4, 7)]))?;
    Ok(Modular14 { q1, q2, p1: (int(-2), int(3)), p2: (int(-9), int(-25)), e1, e2, field: k })
}

/// `E_u: y² - (u² - u - 1)xy - (u³ - u²)y = x³ - (u³ - u²)x²`, with a
/// rational point of order 7 and ℤ/14 over the non-Galois field of its
/// 2-torsion.
pub fn family_14_kubert(u: &Rational) -> Result<FamilyMember, FamilyError> {
    kubert_member(
        FamilyLabel::F14Kubert7,
        u,
        &IntervalClass::kubert7(),
        eval(&kubert7::discriminant(), u)?,
        eval_all(&kubert7::long(), u)?,
        eval_all(&kubert7::short(), u)?,
        (14, 7),
    )
}

/// A Kubert member: the long model, the field of `x³ + Ax + B`, and the
/// field type from the side of the parameter.
pub(super) fn kubert_member(
    label: FamilyLabel,
    u: &Rational,
    intervals: &IntervalClass,
    disc: Rational,
    long: [Rational; 5],
    [a, b]: [Rational; 2],
    (over_k, over_q): (u32, u32),
) -> Result<FamilyMember, FamilyError> {
    if disc.is_zero() {
        return Err(FamilyError::Excluded(format!("Δ_u = 0 at u = {}", crate::exact::format_rational(u))));
    }
    let side = intervals.side(u).expect("Δ_u ≠ 0 places u off the roots, 0 and 1");
    let curve = curve_of(long)?;
    let field = field_of(RationalPoly::new(vec![b, a, int(0), int(1)]))?;
    Ok(FamilyMember {
        label,
        parameter: Some(u.clone()),
        curve,
        field,
        expected_torsion: TorsionGroup::cyclic(over_k),
        expected_rational_torsion: Some(TorsionGroup::cyclic(over_q)),
        expected_class: FieldClass { galois_type: side.galois_type(), pure_candidate: false },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::{GaloisType, RationalField};
    use crate::elliptic::is_isomorphic_over;

    #[test]
    fn modular_points_map_down() {
        let m = modular14_models().unwrap();
        for (q, p) in [(&m.q1, &m.p1), (&m.q2, &m.p2)] {
            assert!(on_x1_14(&q.0, &q.1));
            assert!(on_x0_14(&p.0, &p.1));
            let (u, v) = eval_phi(&q.0, &q.1).unwrap();
            assert_eq!((u, v), (m.field.from_rational(&p.0), m.field.from_rational(&p.1)));
        }
        assert!(eval_phi(&int(0), &int(1)).is_err());
    }

    #[test]
    fn modular_curves_are_49a() {
        let m = modular14_models().unwrap();
        assert_eq!(*m.e1.j_invariant(), m.field.from_rational(&int(-3375)));
        assert_eq!(*m.e2.j_invariant(), m.field.from_rational(&int(16581375)));
        let a3 = curve_49a3().map(|c| m.field.from_rational(c)).unwrap();
        let a4 = curve_49a4().map(|c| m.field.from_rational(c)).unwrap();
        assert!(is_isomorphic_over(&m.e1, &a3, &m.field).unwrap().is_some());
        assert!(is_isomorphic_over(&m.e2, &a4, &m.field).unwrap().is_some());
    }

    #[test]
    fn kubert_short_model_matches_long() {
        for u in [int(2), int(3), int(-1), rat(1, 3), int(7), int(8)] {
            let m = family_14_kubert(&u).unwrap();
            let [a, b] = eval_all(&kubert7::short(), &u).unwrap();
            let short = EllipticCurve::short(a, b).unwrap();
            assert!(is_isomorphic_over(&m.curve, &short, &RationalField).unwrap().is_some(), "u = {u}");
            assert_eq!(m.expected_class.galois_type, m.field.classify().galois_type, "u = {u}");
        }
        assert_eq!(family_14_kubert(&int(2)).unwrap().expected_class.galois_type, GaloisType::Complex);
        assert!(matches!(family_14_kubert(&int(1)), Err(FamilyError::Excluded(_))));
    }
}
