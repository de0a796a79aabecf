use num_traits::{One, Zero};

use crate::elliptic::{EllipticCurve, TorsionGroup};
use crate::exact::format_rational;
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

use super::fourteen::kubert_member;
use super::interval::IntervalClass;
use super::table::{kubert9, nine};
use super::{cubic_poly, eval, eval_all, field_of, short_curve, FamilyError, FamilyLabel, FamilyMember, CYCLIC};

/// `y² = x³ + A₉(t, U)x + B₉(t, U)`, the curves with a rational 9-isogeny.
/// Singular at `t ∈ {0, -1}`.
pub fn isogeny9_model(t: &Rational, twist: &Rational) -> Result<EllipticCurve<Rational>, FamilyError> {
    if twist.is_zero() {
        return Err(FamilyError::Excluded("U = 0".into()));
    }
    let a = eval(&nine::a9(), t)? * twist.square();
    let b = eval(&nine::b9(), t)? * twist.pow(3);
    short_curve(a, b)
}

/// `x + 81t³ + 243t² + 243t + 81`, a factor of `ψ₃` of `E_{t,1}`.
pub fn three_torsion_linear_factor(t: &Rational) -> Result<RationalPoly, FamilyError> {
    let x0 = eval(&nine::three_torsion_x(), t)?;
    Ok(RationalPoly::new(vec![-x0, Rational::one()]))
}

/// `E_s: y² = x³ + A(s)x + B(s)`, with a rational point of order 3.
pub fn curve_with_rational_3torsion(s: &Rational) -> Result<EllipticCurve<Rational>, FamilyError> {
    if *s == -Rational::one() {
        return Err(FamilyError::Excluded("s = -1".into()));
    }
    let [a, b] = eval_all(&nine::with_three_torsion(), s)?;
    short_curve(a, b)
}

/// `F_s(x)`, a cubic factor of the 9-division polynomial of `E_s`.
pub fn cubic_factor_f(s: &Rational) -> Result<RationalPoly, FamilyError> {
    cubic_poly(&nine::cubic_factor(), s)
}

/// `2¹²·3⁴(s² + 3s + 3)²`, the closed form of `disc(F_s)`.
pub fn cubic_factor_discriminant(s: &Rational) -> Result<Rational, FamilyError> {
    eval(&nine::cubic_factor_discriminant(), s)
}

/// `s(u) = (u³ - 3u²)/(3u - 3)`, which gives `E_s` a rational 2-torsion point.
pub fn s_of_u(u: &Rational) -> Result<Rational, FamilyError> {
    if u.is_one() {
        return Err(FamilyError::Excluded("u = 1".into()));
    }
    eval(&nine::substitution(), u)
}

/// `E_u: y² = x³ + A(u)x + B(u)` with ℤ/18 over the cyclic field `K_u` and
/// ℤ/6 over ℚ. Singular at `u ∈ {0, 1, 3}`.
pub fn family_18_cyclic(u: &Rational) -> Result<FamilyMember, FamilyError> {
    s_of_u(u)?;
    let [a, b] = eval_all(&nine::family(), u)?;
    let curve = short_curve(a, b).map_err(|e| FamilyError::Excluded(format!("{e} at u = {}", format_rational(u))))?;
    let field = field_of(cubic_poly(&nine::family_cubic(), u)?)?;
    Ok(FamilyMember {
        label: FamilyLabel::F18Cyclic,
        parameter: Some(u.clone()),
        curve,
        field,
        expected_torsion: TorsionGroup::cyclic(18),
        expected_rational_torsion: Some(TorsionGroup::cyclic(6)),
        expected_class: CYCLIC,
    })
}

/// `E_u: y² - (u³ - u² - 1)xy - u²(u - 1)(u² - u + 1)y = x³ - u²(u - 1)(u² - u + 1)x²`,
/// with a rational point of order 9 and ℤ/18 over the non-Galois field of
/// its 2-torsion.
pub fn family_18_kubert9(u: &Rational) -> Result<FamilyMember, FamilyError> {
    kubert_member(
        FamilyLabel::F18Kubert9,
        u,
        &IntervalClass::kubert9(),
        eval(&kubert9::discriminant(), u)?,
        eval_all(&kubert9::long(), u)?,
        eval_all(&kubert9::short(), u)?,
        (18, 9),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::{BaseField, GaloisType, RationalField};
    use crate::elliptic::is_isomorphic_over;
    use crate::exact::{discriminant, int, rat};

    #[test]
    fn three_torsion_factor_divides_psi3() {
        for t in [int(1), int(2), rat(-1, 2), int(5)] {
            let e = isogeny9_model(&t, &int(1)).unwrap();
            let psi3 = e.division_polynomial(3).unwrap();
            assert!(three_torsion_linear_factor(&t).unwrap().divides(&psi3), "t = {t}");
        }
        assert!(matches!(isogeny9_model(&int(0), &int(1)), Err(FamilyError::Excluded(_))));
    }

    #[test]
    fn e_s_is_the_twist_by_minus_three_s_plus_one() {
        for s in [int(1), int(2), rat(1, 2), int(-3)] {
            let e = curve_with_rational_3torsion(&s).unwrap();
            let twisted = isogeny9_model(&s, &(int(-3) * (s.clone() + int(1)))).unwrap();
            assert!(is_isomorphic_over(&e, &twisted, &RationalField).unwrap().is_some(), "s = {s}");
        }
        assert!(curve_with_rational_3torsion(&int(-1)).is_err());
    }

    #[test]
    fn cubic_factor_has_square_discriminant_and_a_point() {
        for s in [int(1), int(2), rat(1, 2), int(-2)] {
            let f = cubic_factor_f(&s).unwrap();
            let expected = cubic_factor_discriminant(&s).unwrap();
            assert_eq!(discriminant(&f).unwrap(), expected, "s = {s}");
            let e = curve_with_rational_3torsion(&s).unwrap();
            assert!(f.divides(&e.division_polynomial(9).unwrap()), "s = {s}");
            if let Ok(k) = field_of(f.clone()) {
                assert_eq!(k.classify().galois_type, GaloisType::Cyclic);
                let (a, b) = e.short_coeffs().unwrap();
                let x = k.alpha();
                let y2 = x.pow(3) + &(x.clone() * &k.embed(a)) + &k.embed(b);
                assert!(k.sqrt(&y2).unwrap().is_some(), "s = {s}");
            }
        }
    }

    #[test]
    fn substitution_gives_rational_two_torsion() {
        for u in [int(2), int(-1), rat(1, 2), int(4)] {
            let s = s_of_u(&u).unwrap();
            let e = curve_with_rational_3torsion(&s).unwrap();
            let m = family_18_cyclic(&u).unwrap();
            assert!(is_isomorphic_over(&e, &m.curve, &RationalField).unwrap().is_some(), "u = {u}");
        }
        for u in [int(0), int(1), int(3)] {
            assert!(matches!(family_18_cyclic(&u), Err(FamilyError::Excluded(_))), "u = {u}");
        }
    }

    #[test]
    fn kubert9_members() {
        for u in [int(2), int(3), int(-1), int(6)] {
            let m = family_18_kubert9(&u).unwrap();
            let [a, b] = eval_all(&kubert9::short(), &u).unwrap();
            let short = EllipticCurve::short(a, b).unwrap();
            assert!(is_isomorphic_over(&m.curve, &short, &RationalField).unwrap().is_some(), "u = {u}");
            assert_eq!(m.expected_class.galois_type, m.field.classify().galois_type, "u = {u}");
        }
        assert!(matches!(family_18_kubert9(&int(1)), Err(FamilyError::Excluded(_))));
    }
}
