//! The genus-3 curve `C: v² = -3u(u - 1)(u² - u + 1)(u³ - 6u² + 3u + 1)`,
//! its automorphism `σ` of order 3, and the quotient `φ: C → E` onto
//! `E: y² = x³ + 1`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cubic_field::RationalField;
use crate::elliptic::{torsion_points, CurvePoint, EllipticCurve, TorsionGroup};
use crate::exact::{int, rational_roots, RatFunc};
use crate::families::FamilyLabel;
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

use super::{build_obstruction, ObstructionError};

/// `(u, v) ↦ (U(u), M(u)·v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveMap {
    pub u: RatFunc,
    pub multiplier: RatFunc,
}

impl CurveMap {
    pub fn identity() -> Self {
        CurveMap { u: RatFunc::var(), multiplier: RatFunc::one() }
    }

    /// The hyperelliptic involution `(u, v) ↦ (u, -v)`.
    pub fn involution() -> Self {
        CurveMap { u: RatFunc::var(), multiplier: -RatFunc::one() }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &CurveMap) -> CurveMap {
        CurveMap { u: self.u.compose(&inner.u), multiplier: self.multiplier.compose(&inner.u) * &inner.multiplier }
    }

    /// `h(U)·1 = M²·h` as rational functions, i.e. the map sends
    /// `v² = h(u)` into itself.
    pub fn preserves(&self, h: &RationalPoly) -> bool {
        let h = RatFunc::poly(h.clone());
        h.compose(&self.u) == self.multiplier.square() * &h
    }
}

/// `σ(u, v) = ((u⁴ - u³)/u⁴, v/u⁴)`.
pub fn sigma() -> CurveMap {
    let u = RatFunc::var();
    let u4 = u.pow(4);
    CurveMap { u: (u4.clone() - &u.pow(3)) / &u4, multiplier: RatFunc::one() / &u4 }
}

/// `E: y² = x³ + 1`.
pub fn quotient_curve() -> EllipticCurve<crate::Rational> {
    EllipticCurve::short(int(0), int(1)).expect("y² = x³ + 1 is nonsingular")
}

/// `φ(u, v) = (X(u), Y(u)·v)` with `X = -(u³ - 3u² + 1)/(3u(u - 1))` and
/// `Y = (u² - u + 1)/(9u²(u - 1)²)`.
fn phi() -> (RatFunc, RatFunc) {
    let u = RatFunc::var();
    let u1 = u.clone() - &RatFunc::one();
    let x = -RatFunc::poly(RationalPoly::from_desc(&[1, -3, 0, 1])) / &(RatFunc::from_int(3) * &u * &u1);
    let y = RatFunc::poly(RationalPoly::from_desc(&[1, -1, 1])) / &(RatFunc::from_int(9) * &u.square() * &u1.square());
    (x, y)
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaPhiReport {
    /// `σ` maps `C` to itself.
    pub sigma_preserves_curve: bool,
    pub sigma_is_not_identity: bool,
    pub sigma_squared_is_not_identity: bool,
    pub sigma_cubed_is_identity: bool,
    /// `σ` commutes with `(u, v) ↦ (u, -v)`, so together they generate a
    /// group of order 6.
    pub commutes_with_involution: bool,
    /// `Y²h - X³ - 1 = 0`: `φ` maps `C` into `E`, using `v² = h(u)`.
    pub phi_maps_into_e: bool,
    /// `φ ∘ σ = φ`: `φ` factors through the quotient by `σ`.
    pub phi_is_sigma_invariant: bool,
}

impl SigmaPhiReport {
    pub fn all_hold(&self) -> bool {
        self.sigma_preserves_curve
            && self.sigma_is_not_identity
            && self.sigma_squared_is_not_identity
            && self.sigma_cubed_is_identity
            && self.commutes_with_involution
            && self.phi_maps_into_e
            && self.phi_is_sigma_invariant
    }
}

pub fn verify_sigma_and_phi() -> Result<SigmaPhiReport, ObstructionError> {
    let h = build_obstruction(FamilyLabel::F18Kubert9)?.curve.h().clone();
    let s = sigma();
    let s2 = s.after(&s);
    let s3 = s2.after(&s);
    let id = CurveMap::identity();
    let (x, y) = phi();
    let hf = RatFunc::poly(h.clone());
    let phi_maps_into_e = y.square() * &hf - &x.pow(3) - &RatFunc::one() == RatFunc::zero();
    let phi_is_sigma_invariant = x.compose(&s.u) == x && y.compose(&s.u) * &s.multiplier == y;
    Ok(SigmaPhiReport {
        sigma_preserves_curve: s.preserves(&h),
        sigma_is_not_identity: s != id,
        sigma_squared_is_not_identity: s2 != id,
        sigma_cubed_is_identity: s3 == id,
        commutes_with_involution: s.after(&CurveMap::involution()) == CurveMap::involution().after(&s),
        phi_maps_into_e,
        phi_is_sigma_invariant,
    })
}

/// The parameters `u` with `X(u) = x₀`.
#[derive(Clone, Debug, Serialize)]
pub struct Fiber {
    #[serde(with = "crate::exact::serde_rational")]
    pub x: Rational,
    /// `u³ - 3u² + 1 + 3x₀u(u - 1)`.
    #[serde(serialize_with = "super::serialize_display")]
    pub cubic: RationalPoly,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub rational_roots: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub torsion: TorsionGroup,
    /// `E(ℚ)` as computed, in the order `O, (-1, 0), (0, ±1), (2, ±3)`
    /// when it matches.
    pub points: Vec<String>,
    /// The computed points are exactly `O, (-1, 0), (0, ±1), (2, ±3)`.
    pub points_match: bool,
    /// Fibers over the distinct x-coordinates of the nonzero points.
    pub fibers: Vec<Fiber>,
    /// No fiber over a nonzero point has a rational `u`, so `C(ℚ)` lies over
    /// `O`, i.e. at the poles `u ∈ {0, 1, ∞}` of `φ`.
    pub rational_points_lie_over_origin: bool,
}

/// `E(ℚ)` is finite, so `C(ℚ)` is the union of the fibers of `φ` over it.
pub fn fiber_analysis() -> Result<FiberReport, ObstructionError> {
    let e = quotient_curve();
    let data = torsion_points(&e, &RationalField)?;
    let listed: Vec<CurvePoint<Rational>> = std::iter::once(CurvePoint::Infinity)
        .chain([(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)].map(|(x, y)| CurvePoint::Affine(int(x), int(y))))
        .collect();
    let points_match = data.points.len() == listed.len() && listed.iter().all(|p| data.points.contains(p));
    let (x, _) = phi();
    let mut fibers = Vec::new();
    for x0 in [-1, 0, 2].map(int) {
        let cubic = (x.clone() - &RatFunc::constant(&x0)).num().monic();
        let mut roots = rational_roots(&cubic).map_err(|e| ObstructionError::InvalidInput(e.to_string()))?;
        roots.dedup();
        fibers.push(Fiber { x: x0, cubic, rational_roots: roots });
    }
    let rational_points_lie_over_origin = fibers.iter().all(|f| f.rational_roots.is_empty());
    Ok(FiberReport {
        torsion: data.group,
        points: if points_match { &listed } else { &data.points }.iter().map(point_string).collect(),
        points_match,
        fibers,
        rational_points_lie_over_origin,
    })
}

fn point_string(p: &CurvePoint<Rational>) -> String {
    match p {
        CurvePoint::Infinity => "O".into(),
        CurvePoint::Affine(x, y) => format!("({x}, {y})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_has_order_three() {
        let r = verify_sigma_and_phi().unwrap();
        assert!(r.all_hold(), "{r:?}");
        // 1 - 1/u ↦ -1/(u - 1) ↦ u.
        let s2 = sigma().after(&sigma());
        assert_eq!(s2.u, -RatFunc::one() / &(RatFunc::var() - &RatFunc::one()));
    }

    #[test]
    fn fibers_are_empty() {
        let r = fiber_analysis().unwrap();
        assert_eq!(r.torsion, TorsionGroup::cyclic(6));
        assert!(r.points_match);
        let cubics: Vec<RationalPoly> = r.fibers.iter().map(|f| f.cubic.clone()).collect();
        assert_eq!(cubics, [[1, -6, 3, 1], [1, -3, 0, 1], [1, 3, -6, 1]].map(|c| RationalPoly::from_desc(&c)).to_vec());
        assert!(r.rational_points_lie_over_origin);
    }
}
