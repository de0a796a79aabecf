use num_traits::Zero;

use crate::cubic_field::{CubicField, FieldElement};
use crate::elliptic::{CurvePoint, EllipticCurve, TorsionGroup};
use crate::exact::format_rational;
use crate::scalar::Scalar;
use crate::Rational;

use super::table::thirteen as tbl;
use super::{cubic_poly, eval, eval_all, field_of, short_curve, FamilyError, FamilyLabel, FamilyMember, CYCLIC};

fn nonzero_t(t: &Rational) -> Result<(), FamilyError> {
    if t.is_zero() {
        return Err(FamilyError::Excluded("t = 0".into()));
    }
    Ok(())
}

/// `y² = x³ + A₁₃(t, U)x + B₁₃(t, U)`, the curves with a rational 13-isogeny.
pub fn isogeny13_model(t: &Rational, twist: &Rational) -> Result<EllipticCurve<Rational>, FamilyError> {
    nonzero_t(t)?;
    if twist.is_zero() {
        return Err(FamilyError::Excluded("U = 0".into()));
    }
    let a = eval(&tbl::a13(), t)? * twist.square();
    let b = eval(&tbl::b13(), t)? * twist.pow(3);
    short_curve(a, b)
}

/// `K_{t,U}`, cut out by `a₃(t,U)x³ + a₂(t,U)x² + a₁(t,U)x + a₀(t,U)`.
pub fn isogeny13_field(t: &Rational, twist: &Rational) -> Result<CubicField, FamilyError> {
    nonzero_t(t)?;
    let f = cubic_poly(&tbl::isogeny_cubic(), t)?;
    let scaled: Vec<Rational> = (0..4).map(|i| f.coeff(i) * twist.pow(3 - i as i32)).collect();
    field_of(crate::RationalPoly::new(scaled))
}

/// `U(t) = -1/((t² + 1)(t⁴ - t³ + 5t² + t + 1))`.
pub fn twist13_u(t: &Rational) -> Result<Rational, FamilyError> {
    eval(&tbl::twist(), t)
}

/// The outcome of checking the twist that makes the 13-torsion rational.
#[derive(Clone, Debug)]
pub struct TwistIdentity {
    pub parameter: Rational,
    pub field: CubicField,
    pub twist: Rational,
    /// `X³ + A₁₃X + B₁₃ = t¹²·β_t²` for `X = t⁴α_t`, with `β_t²` given by
    /// its printed coordinates: the root of the cubic is the x-coordinate
    /// of a 13-torsion point only after scaling by `t⁴`.
    pub beta_squared_consistent: bool,
    /// `U(t)·β_t² = (b₁(t)α_t + b₀(t))²` in `K_t`.
    pub identity_holds: bool,
    /// The resulting `K_t`-rational point on `E_{t,U(t)}`.
    pub point: CurvePoint<FieldElement>,
    /// Whether that point has order exactly 13.
    pub point_has_order_13: bool,
}

/// Verifies in `K_t = K_{t,1}` the identity that determines `U(t)`.
pub fn verify_twist13_identity(t: &Rational) -> Result<TwistIdentity, FamilyError> {
    nonzero_t(t)?;
    let one = Rational::from_int(1);
    let k = isogeny13_field(t, &one)?;
    let alpha = k.alpha();
    let elem = |c: [Rational; 3]| k.element(c);
    let beta2 = elem(eval_all(&tbl::beta_squared(), t)?);
    let [b0, b1] = eval_all(&tbl::beta_root(), t)?;
    let u = twist13_u(t)?;

    let t4 = t.pow(4);
    let x = alpha.clone() * &k.from_rational(&t4);
    let (a13, b13) = (eval(&tbl::a13(), t)?, eval(&tbl::b13(), t)?);
    let rhs = x.pow(3) + &(x.clone() * &k.from_rational(&a13)) + &k.from_rational(&b13);
    let beta_squared_consistent = rhs == beta2.clone() * &k.from_rational(&t.pow(12));

    let root = alpha * &k.from_rational(&b1) + &k.from_rational(&b0);
    let identity_holds = beta2 * &k.from_rational(&u) == root.square();

    // On E_{t,U}: x = U·X and y = U·t⁶·(b₁α + b₀).
    let e = isogeny13_model(t, &u)?.map(|c| k.from_rational(c))?;
    let point = CurvePoint::Affine(x * &k.from_rational(&u), root * &k.from_rational(&(u.clone() * t.pow(6))));
    let point_has_order_13 = e.contains(&point) && e.order(&point, 13) == Some(13);
    Ok(TwistIdentity {
        parameter: t.clone(),
        field: k,
        twist: u,
        beta_squared_consistent,
        identity_holds,
        point,
        point_has_order_13,
    })
}

/// `E_u: y² = x³ + A(u)x + B(u)` over the cyclic field `K_u`, with a
/// `K_u`-rational point of order 13.
pub fn family_13(u: &Rational) -> Result<FamilyMember, FamilyError> {
    if u.is_zero() || eval(&tbl::p4(), u)?.is_zero() {
        return Err(FamilyError::Excluded(format!("u(u⁴ - u³ + 5u² + u + 1) = 0 at u = {}", format_rational(u))));
    }
    let [a, b] = eval_all(&tbl::family(), u)?;
    let curve = short_curve(a, b)?;
    let field = field_of(cubic_poly(&tbl::family_cubic(), u)?)?;
    Ok(FamilyMember {
        label: FamilyLabel::F13,
        parameter: Some(u.clone()),
        curve,
        field,
        expected_torsion: TorsionGroup::cyclic(13),
        expected_rational_torsion: Some(TorsionGroup::cyclic(1)),
        expected_class: CYCLIC,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::GaloisType;
    use crate::exact::{int, rat};

    #[test]
    fn twist_identity_at_small_parameters() {
        for t in [int(2), int(3), int(-1), rat(1, 2)] {
            let r = verify_twist13_identity(&t).unwrap();
            assert!(r.beta_squared_consistent, "t = {t}");
            assert!(r.identity_holds, "t = {t}");
            assert!(r.point_has_order_13, "t = {t}");
        }
        assert!(matches!(verify_twist13_identity(&int(0)), Err(FamilyError::Excluded(_))));
    }

    #[test]
    fn family_members() {
        let m = family_13(&int(2)).unwrap();
        assert_eq!(m.field.classify().galois_type, GaloisType::Cyclic);
        assert!(matches!(family_13(&int(0)), Err(FamilyError::Excluded(_))));
    }

    #[test]
    fn final_family_is_the_twist() {
        // E_u is E_{u,U(u)} up to scaling by u²+1 and P₄(u).
        let u = int(3);
        let m = family_13(&u).unwrap();
        let e = isogeny13_model(&u, &twist13_u(&u).unwrap()).unwrap();
        assert_eq!(m.curve.j_invariant(), e.j_invariant());
        let q = crate::cubic_field::RationalField;
        assert!(crate::elliptic::is_isomorphic_over(&m.curve, &e, &q).unwrap().is_some());
    }
}
