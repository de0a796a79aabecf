use num_traits::{One, Zero};

use crate::cubic_field::{CubicField, FieldElement};
use crate::elliptic::{
    bn_normalize, is_isomorphic_over, torsion_points, CoordChange, CurvePoint, EllipticCurve, TorsionGroup,
};
use crate::exact::format_rational;
use crate::scalar::Scalar;
use crate::Rational;

use super::table::two_fourteen as tbl;
use super::{
    cubic_poly, curve_of, eval, eval_all, field_of, short_curve, FamilyError, FamilyLabel, FamilyMember, CYCLIC,
};

fn check_parameter(u: &Rational) -> Result<(), FamilyError> {
    if u.square().is_one() {
        return Err(FamilyError::Excluded(format!("u² = 1 at u = {}", format_rational(u))));
    }
    if eval(&tbl::p6(), u)?.is_zero() {
        return Err(FamilyError::Excluded("u⁶ + 4u⁵ + 13u⁴ - 40u³ + 19u² + 36u + 31 = 0".into()));
    }
    Ok(())
}

/// The long model `y² + xy = x³ + A₂x² + A₄x + A₆` and the short model
/// `y² = x³ + Ax + B` of `E_u`.
pub fn family_2x14_models(u: &Rational) -> Result<(EllipticCurve<Rational>, EllipticCurve<Rational>), FamilyError> {
    check_parameter(u)?;
    let long = curve_of(eval_all(&tbl::long(), u)?)?;
    let [a, b] = eval_all(&tbl::short(), u)?;
    Ok((long, short_curve(a, b)?))
}

/// `E_u` with ℤ/2 × ℤ/14 over the cyclic field cut out by `f(x, u)`.
pub fn family_2x14(u: &Rational) -> Result<FamilyMember, FamilyError> {
    let (curve, _) = family_2x14_models(u)?;
    let field = field_of(cubic_poly(&tbl::defining(), u)?)?;
    Ok(FamilyMember {
        label: FamilyLabel::F2x14,
        parameter: Some(u.clone()),
        curve,
        field,
        expected_torsion: TorsionGroup::new(2, 14),
        expected_rational_torsion: None,
        expected_class: CYCLIC,
    })
}

/// The models obtained by normalizing the short model of `E_u` at each of
/// its points of order 7.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub parameter: Rational,
    pub models: Vec<EllipticCurve<Rational>>,
    /// Every normalized model is ℚ-isomorphic to the long model.
    pub all_isomorphic: bool,
    /// Some point of order 7 reproduces the long model coefficient for coefficient.
    pub exact_match: bool,
}

pub fn normalize_2x14(u: &Rational) -> Result<Normalization, FamilyError> {
    let member = family_2x14(u)?;
    let (long, short) = family_2x14_models(u)?;
    let k = &member.field;
    let data = torsion_points(&short, k)?;
    let short_k = short.map(|c| k.from_rational(c))?;
    let mut models = Vec::new();
    for p in data.points.iter().filter(|p| short_k.order(p, 7) == Some(7)) {
        let n = bn_normalize(&short_k, p)?;
        if !models.contains(&n.curve) {
            models.push(n.curve);
        }
    }
    if models.is_empty() {
        return Err(FamilyError::InvalidInput(format!("no point of order 7 over {k}")));
    }
    let mut all_isomorphic = true;
    for m in &models {
        all_isomorphic &= is_isomorphic_over(m, &long, &crate::cubic_field::RationalField)?.is_some();
    }
    let exact_match = models.contains(&long);
    Ok(Normalization { parameter: u.clone(), models, all_isomorphic, exact_match })
}

/// The printed point of order 7 on the short model `E_t` over `K_t`.
///
/// `E_t` itself is not printed; it is recovered from the long model and the
/// printed change `X = p²x + r`, `Y = p³y + p²qx + s`.
#[derive(Clone, Debug)]
pub struct PrintedPoint {
    pub parameter: Rational,
    pub field: CubicField,
    pub curve: EllipticCurve<FieldElement>,
    pub point: CurvePoint<FieldElement>,
    /// The recovered `E_t` is in short form.
    pub is_short: bool,
    pub on_curve: bool,
    pub order_seven: bool,
    /// The `m ∈ {1, …, 6}` for which the printed change sends `mP, 2mP, 4mP`
    /// to `y = 0` and `3mP, 5mP, 6mP` to `y = -x`. The printed formulas give
    /// `m = 3`: the roles of the two triples are swapped.
    pub normalized_at: Option<i64>,
    /// Normalizing `E_t` at `normalized_at·P` reproduces the long model exactly.
    pub reproduces_long_model: bool,
}

pub fn printed_torsion_point(t: &Rational) -> Result<PrintedPoint, FamilyError> {
    let member = family_2x14(t)?;
    let k = member.field.clone();
    let elem = |c: [Rational; 3]| k.element(c);
    let (pc, [q, r, s]) = tbl::change();
    let p = elem(eval_all(&pc, t)?);
    let change = CoordChange {
        u: p,
        r: k.from_rational(&eval(&r, t)?),
        s: k.from_rational(&eval(&q, t)?),
        t: k.from_rational(&eval(&s, t)?),
    };
    let long = member.curve.map(|c| k.from_rational(c))?;
    let curve = long.change(&change);
    let [x, y] = tbl::seven_torsion();
    let point = CurvePoint::Affine(elem(eval_all(&x, t)?), elem(eval_all(&y, t)?));
    let on_curve = curve.contains(&point);
    let order_seven = on_curve && curve.order(&point, 7) == Some(7);
    let back = change.inverse();
    let on_line = |q: &CurvePoint<FieldElement>, slope: i64| match back.apply(q) {
        CurvePoint::Affine(x, y) => y == x * &k.from_rational(&Rational::from_int(slope)),
        CurvePoint::Infinity => false,
    };
    let normalized_at = if order_seven {
        (1..7).find(|&m| {
            let q = curve.mul(m, &point);
            [1, 2, 4].iter().all(|&i| on_line(&curve.mul(i, &q), 0))
                && [3, 5, 6].iter().all(|&i| on_line(&curve.mul(i, &q), -1))
        })
    } else {
        None
    };
    let reproduces_long_model = match normalized_at {
        Some(m) => bn_normalize(&curve, &curve.mul(m, &point))?.curve == member.curve,
        None => false,
    };
    Ok(PrintedPoint {
        parameter: t.clone(),
        is_short: curve.is_short(),
        field: k,
        curve,
        point,
        on_curve,
        order_seven,
        normalized_at,
        reproduces_long_model,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::RationalField;
    use crate::exact::{int, rat};

    #[test]
    fn long_and_short_models_agree() {
        for u in [int(2), int(3), rat(1, 2), int(-2), int(5), rat(-1, 3)] {
            let (long, short) = family_2x14_models(&u).unwrap();
            assert!(is_isomorphic_over(&long, &short, &RationalField).unwrap().is_some(), "u = {u}");
        }
        for u in [int(1), int(-1)] {
            assert!(matches!(family_2x14(&u), Err(FamilyError::Excluded(_))));
        }
    }

    #[test]
    fn printed_point_has_order_seven() {
        for t in [int(2), int(3)] {
            let p = printed_torsion_point(&t).unwrap();
            assert!(p.is_short && p.on_curve && p.order_seven, "t = {t}");
            assert_eq!(p.normalized_at, Some(3), "t = {t}");
            assert!(p.reproduces_long_model, "t = {t}");
        }
    }

    #[test]
    fn defining_polynomial_at_two() {
        let m = family_2x14(&int(2)).unwrap();
        assert_eq!(m.field.minpoly(), &crate::RationalPoly::from_desc(&[3, -4, -27, 4]));
        assert_eq!(m.field.classify().galois_type, crate::cubic_field::GaloisType::Cyclic);
    }

    #[test]
    fn normalization_recovers_the_long_model() {
        let n = normalize_2x14(&int(2)).unwrap();
        assert!(n.all_isomorphic);
        assert!(n.exact_match);
    }
}
