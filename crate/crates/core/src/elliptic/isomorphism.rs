use crate::cubic_field::BaseField;
use num_traits::Zero;

use super::{CoordChange, CurveError, EllipticCurve};

/// A witness that two curves are isomorphic.
#[derive(Clone, Debug, PartialEq)]
pub struct Isomorphism<T> {
    /// The scaling `u` between the short models: `A₂ = A₁/u⁴`, `B₂ = B₁/u⁶`.
    pub scale: T,
    /// A change of variables carrying the first model to the second.
    pub change: CoordChange<T>,
}

/// Decides whether `e1` and `e2` are isomorphic over `k`.
///
/// On the short models `y² = x³ + Aᵢx + Bᵢ` an isomorphism is a scaling
/// with `u⁴ = A₁/A₂` and `u⁶ = B₁/B₂`: for `j ∉ {0, 1728}` this asks
/// whether `u² = B₁A₂/(A₁B₂)` is a square in `k`, for `j = 0` for a sixth
/// root and for `j = 1728` for a fourth root.
pub fn is_isomorphic_over<F: BaseField>(
    e1: &EllipticCurve<F::Elem>,
    e2: &EllipticCurve<F::Elem>,
    k: &F,
) -> Result<Option<Isomorphism<F::Elem>>, CurveError> {
    if e1.j_invariant() != e2.j_invariant() {
        return Ok(None);
    }
    let (s1, c1) = e1.to_short();
    let (s2, c2) = e2.to_short();
    let (a1, b1) = s1.short_coeffs()?;
    let (a2, b2) = s2.short_coeffs()?;
    let u = if a1.is_zero() {
        k.nth_root(&k.adopt(&(b1.clone() / b2)), 6)?
    } else if b1.is_zero() {
        k.nth_root(&k.adopt(&(a1.clone() / a2)), 4)?
    } else {
        k.sqrt(&k.adopt(&(b1.clone() * a2 / &(a1.clone() * b2))))?
    };
    let Some(u) = u else { return Ok(None) };
    let change = c1.then(&CoordChange::scaling(u.clone())).then(&c2.inverse());
    if &e1.change(&change) != e2 {
        return Err(CurveError::Contract("isomorphism witness does not map the curves".into()));
    }
    Ok(Some(Isomorphism { scale: u, change }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::{CubicField, RationalField};
    use crate::exact::int;
    use crate::{Rational, RationalPoly};

    fn curve(a: [i64; 5]) -> EllipticCurve<Rational> {
        EllipticCurve::new(a.map(int)).unwrap()
    }

    #[test]
    fn self_isomorphism_has_trivial_witness() {
        for a in [[1, -1, 0, -107, 552], [0, 0, 0, 0, 1], [0, 0, 0, -1, 0]] {
            let e = curve(a);
            let iso = is_isomorphic_over(&e, &e, &RationalField).unwrap().unwrap();
            assert_eq!(iso.scale, int(1));
        }
    }

    #[test]
    fn twist_by_minus_seven_is_not_isomorphic_over_q() {
        let (s, _) = curve([1, -1, 0, -107, 552]).to_short();
        let t = s.quadratic_twist(&int(-7)).unwrap();
        assert_eq!(is_isomorphic_over(&s, &t, &RationalField).unwrap(), None);
        let sq = s.quadratic_twist(&int(9)).unwrap();
        assert!(is_isomorphic_over(&s, &sq, &RationalField).unwrap().is_some());
    }

    #[test]
    fn special_j_invariants() {
        // 64 = 2⁶ but 8 is not a sixth power; 16 = 2⁴ but 4 is not a fourth power.
        let e = curve([0, 0, 0, 0, 1]);
        assert!(is_isomorphic_over(&e, &curve([0, 0, 0, 0, 64]), &RationalField).unwrap().is_some());
        assert!(is_isomorphic_over(&e, &curve([0, 0, 0, 0, 8]), &RationalField).unwrap().is_none());
        let f = curve([0, 0, 0, -1, 0]);
        assert!(is_isomorphic_over(&f, &curve([0, 0, 0, -16, 0]), &RationalField).unwrap().is_some());
        assert!(is_isomorphic_over(&f, &curve([0, 0, 0, -4, 0]), &RationalField).unwrap().is_none());
        // Over ℚ(∛2), y² = x³ + 1 and y² = x³ + 4 become isomorphic: 4 = (∛2)⁶.
        let k = CubicField::new(RationalPoly::from_desc(&[1, 0, 0, -2])).unwrap();
        let ek = e.map(|c| k.embed(c)).unwrap();
        let e4 = curve([0, 0, 0, 0, 4]).map(|c| k.embed(c)).unwrap();
        let iso = is_isomorphic_over(&ek, &e4, &k).unwrap().unwrap();
        assert_eq!(ek.change(&iso.change), e4);
    }
}
