//! Why the Kubert families never produce pure cubic fields.
//!
//! A Kubert member's cubic field has discriminant `Δ_u` up to squares, and
//! a pure cubic field has discriminant `-27k²`. Solving `-27k² = Δ_u` is
//! finding rational points on a hyperelliptic curve `C: v² = h(u)`. The
//! genus-2 curve for ℤ/14 and the genus-3 curve for ℤ/18 have only the
//! points `(0, 0)`, `(1, 0)` and `∞`, which lie over excluded parameters.
//!
//! We search `C(ℚ)` up to a height bound. For genus 3 the search is
//! completed by the quotient map to `y² = x³ + 1` (see [`fiber_analysis`]);
//! for genus 2 completeness rests on Chabauty's method, which is cited and
//! not re-implemented.

mod quotient;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{format_rational, is_square_rational, RatFunc};
use crate::families::{member, FamilyError, FamilyLabel};
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

pub use quotient::{
    fiber_analysis, quotient_curve, sigma, verify_sigma_and_phi, CurveMap, Fiber, FiberReport, SigmaPhiReport,
};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ObstructionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Curve(#[from] crate::elliptic::CurveError),
}

/// `v² = h(u)` with `h` squarefree of degree at least 3.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperCurve {
    #[serde(serialize_with = "serialize_display")]
    h: RationalPoly,
    genus: usize,
}

fn serialize_display<T: fmt::Display, S: Serializer>(t: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(t)
}

impl HyperCurve {
    pub fn new(h: RationalPoly) -> Result<Self, ObstructionError> {
        let d = h.degree().unwrap_or(0);
        if d < 3 {
            return Err(ObstructionError::InvalidInput(format!("v² = {h} has degree below 3")));
        }
        if !h.is_squarefree() {
            return Err(ObstructionError::InvalidInput(format!("{h} is not squarefree")));
        }
        Ok(HyperCurve { h, genus: (d - 1) / 2 })
    }

    pub fn h(&self) -> &RationalPoly {
        &self.h
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Odd degree: a single rational point at infinity.
    pub fn has_rational_point_at_infinity(&self) -> bool {
        self.h.degree().is_some_and(|d| d % 2 == 1)
    }

    pub fn contains(&self, p: &HyperPoint) -> bool {
        match p {
            HyperPoint::Affine(u, v) => v.square() == self.h.eval(u),
            HyperPoint::Infinity => self.has_rational_point_at_infinity(),
        }
    }
}

impl fmt::Display for HyperCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^2 = {}", self.h)
    }
}

/// A rational point of a [`HyperCurve`]; affine points sort by `(u, v)`
/// and precede `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HyperPoint {
    Affine(Rational, Rational),
    Infinity,
}

impl fmt::Display for HyperPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperPoint::Affine(u, v) => write!(f, "({}, {})", format_rational(u), format_rational(v)),
            HyperPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for HyperPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every rational point with `u = p/q`, `|p|, q ≤ H`, plus `∞` for odd degree.
pub fn search_rational_points(c: &HyperCurve, height: u64) -> Vec<HyperPoint> {
    let h = height as i64;
    let mut points: Vec<HyperPoint> = (1..=h)
        .into_par_iter()
        .flat_map_iter(|q| {
            (-h..=h).filter(move |p| p.gcd(&q).is_one()).flat_map(move |p| {
                let u = Rational::new(p.into(), q.into());
                let found = match is_square_rational(&c.h.eval(&u)) {
                    Some(v) if v.is_zero() => vec![HyperPoint::Affine(u, v)],
                    Some(v) => vec![HyperPoint::Affine(u.clone(), -v.clone()), HyperPoint::Affine(u, v)],
                    None => Vec::new(),
                };
                found.into_iter()
            })
        })
        .collect();
    if c.has_rational_point_at_infinity() {
        points.push(HyperPoint::Infinity);
    }
    points.sort();
    points
}

/// The curve `C` attached to a Kubert family together with the
/// substitution that produces it.
#[derive(Clone, Debug, Serialize)]
pub struct Obstruction {
    pub family: FamilyLabel,
    pub curve: HyperCurve,
    /// `Δ_u` as printed.
    #[serde(serialize_with = "serialize_ratfunc")]
    pub delta: RatFunc,
    /// `s(u)` with `v = 9k/s(u)`.
    #[serde(serialize_with = "serialize_ratfunc")]
    pub denominator: RatFunc,
    /// `-27k² - Δ_u = -(s²/3)(v² - h)` in ℚ(u)[k, v] after substituting `k = s·v/9`.
    pub substitution_identity: bool,
}

fn serialize_ratfunc<S: Serializer>(f: &RatFunc, s: S) -> Result<S::Ok, S::Error> {
    if f.den().is_constant() {
        s.collect_str(f.num())
    } else {
        s.collect_str(&format_args!("({}) / ({})", f.num(), f.den()))
    }
}

fn poly(desc: &[i64]) -> RationalPoly {
    RationalPoly::from_desc(desc)
}

/// `u(u - 1)`.
fn u_u1() -> RationalPoly {
    poly(&[1, -1, 0])
}

/// Builds `C` for [`FamilyLabel::F14Kubert7`] (genus 2) or
/// [`FamilyLabel::F18Kubert9`] (genus 3) and checks the substitution.
pub fn build_obstruction(family: FamilyLabel) -> Result<Obstruction, ObstructionError> {
    let u = RatFunc::var();
    let u1 = RatFunc::poly(poly(&[1, -1]));
    let (cubic, extra, delta, denominator) = match family {
        FamilyLabel::F14Kubert7 => {
            let cubic = poly(&[1, -8, 5, 1]);
            let delta = u.pow(7) * &u1.pow(7) * &RatFunc::poly(cubic.clone());
            (cubic, RationalPoly::one(), delta, u.pow(3) * &u1.pow(3))
        }
        FamilyLabel::F18Kubert9 => {
            let cubic = poly(&[1, -6, 3, 1]);
            let q = poly(&[1, -1, 1]);
            let delta = u.pow(9) * &u1.pow(9) * &RatFunc::poly(q.clone()).pow(3) * &RatFunc::poly(cubic.clone());
            (cubic, q.clone(), delta, u.pow(4) * &u1.pow(4) * &RatFunc::poly(q))
        }
        other => {
            return Err(ObstructionError::InvalidInput(format!(
                "{other} has no pure-cubic obstruction curve (expected F14_KUBERT7 or F18_KUBERT9)"
            )))
        }
    };
    let h = &(&u_u1() * &extra) * &cubic;
    let h = h.scale(&Rational::from_int(-3));
    // With k = s·v/9, -27k² - Δ is a polynomial in v: [v⁰, v²] coefficients.
    let k_over_v = denominator.clone() / &RatFunc::from_int(9);
    let lhs = [-delta.clone(), RatFunc::from_int(-27) * &k_over_v.square()];
    let factor = lhs[1].clone();
    let rhs = [factor.clone() * &-RatFunc::poly(h.clone()), factor];
    let substitution_identity = lhs == rhs;
    Ok(Obstruction { family, curve: HyperCurve::new(h)?, delta, denominator, substitution_identity })
}

/// Whether `C` passes through a point over `u`: exactly when `Δ_u = -27k²`
/// for a rational `k`.
pub fn on_obstruction_curve(o: &Obstruction, u: &Rational) -> bool {
    is_square_rational(&o.curve.h.eval(u)).is_some()
}

/// One sample comparing the curve `C` with the discriminant test of the
/// member's cubic field.
#[derive(Clone, Debug, Serialize)]
pub struct PureCheck {
    #[serde(serialize_with = "serialize_display_rational")]
    pub parameter: Rational,
    /// `h(u)` is a rational square.
    pub on_curve: bool,
    /// The member's field has discriminant `-27d²`.
    pub pure_candidate: bool,
}

fn serialize_display_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

impl PureCheck {
    pub fn consistent(&self) -> bool {
        self.on_curve == self.pure_candidate
    }
}

/// Compares the two sides at each non-excluded parameter.
pub fn pure_candidate_consistency(o: &Obstruction, params: &[Rational]) -> Result<Vec<PureCheck>, ObstructionError> {
    let mut out = Vec::new();
    for u in params {
        let m = match member(o.family, Some(u)) {
            Ok(m) => m,
            Err(FamilyError::Excluded(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        out.push(PureCheck {
            parameter: u.clone(),
            on_curve: on_obstruction_curve(o, u),
            pure_candidate: m.field.classify().pure_candidate,
        });
    }
    Ok(out)
}

/// The points `(0, 0)` and `(1, 0)` sit over `u = 0` and `u = 1`, where the
/// family is singular, so they give no cubic field; `∞` is not a parameter.
pub fn known_points_excluded(family: FamilyLabel) -> bool {
    [0, 1].iter().all(|&n| matches!(member(family, Some(&Rational::from_int(n))), Err(FamilyError::Excluded(_))))
}

/// The three points every search must return.
pub fn expected_points() -> Vec<HyperPoint> {
    vec![
        HyperPoint::Affine(Rational::zero(), Rational::zero()),
        HyperPoint::Affine(Rational::one(), Rational::zero()),
        HyperPoint::Infinity,
    ]
}

/// A bounded search over `C(ℚ)` and how far it can be trusted.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub family: FamilyLabel,
    pub curve: HyperCurve,
    pub genus: usize,
    pub height: u64,
    pub substitution_identity: bool,
    pub points_found: Vec<HyperPoint>,
    pub matches_expected: bool,
    pub known_points_excluded: bool,
    pub external_completeness_citation: String,
}

pub fn obstruction_report(family: FamilyLabel, height: u64) -> Result<ObstructionReport, ObstructionError> {
    if height == 0 {
        return Err(ObstructionError::InvalidInput("height bound must be at least 1".into()));
    }
    let o = build_obstruction(family)?;
    let points_found = search_rational_points(&o.curve, height);
    let citation = match o.curve.genus {
        2 => format!(
            "J(C) has rank 0 and Chabauty's method gives C(Q) = {{(0, 0), (1, 0), inf}}; \
             external result, not re-proved. Search consistent up to height {height}."
        ),
        _ => format!(
            "C(Q) maps to E(Q) = Z/6 for E: y^2 = x^3 + 1 under the quotient by an automorphism \
             of order 3; the fibers over the five nonzero points have no rational points \
             (checked by fiber analysis). Search consistent up to height {height}."
        ),
    };
    Ok(ObstructionReport {
        family,
        genus: o.curve.genus,
        matches_expected: points_found == expected_points(),
        known_points_excluded: known_points_excluded(family),
        substitution_identity: o.substitution_identity,
        curve: o.curve,
        height,
        points_found,
        external_completeness_citation: citation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn genus_two_model() {
        let o = build_obstruction(FamilyLabel::F14Kubert7).unwrap();
        assert!(o.substitution_identity);
        assert_eq!(o.curve.genus(), 2);
        assert_eq!(o.curve.h(), &poly(&[-3, 27, -39, 12, 3, 0]));
    }

    #[test]
    fn genus_three_model() {
        let o = build_obstruction(FamilyLabel::F18Kubert9).unwrap();
        assert!(o.substitution_identity);
        assert_eq!(o.curve.genus(), 3);
        let expected = &(&(&u_u1() * &poly(&[1, -1, 1])) * &poly(&[1, -6, 3, 1])) * &poly(&[-3]);
        assert_eq!(o.curve.h(), &expected);
    }

    #[test]
    fn delta_is_the_curve_discriminant() {
        for f in [FamilyLabel::F14Kubert7, FamilyLabel::F18Kubert9] {
            let o = build_obstruction(f).unwrap();
            for u in [int(2), int(-3), rat(1, 3)] {
                let m = member(f, Some(&u)).unwrap();
                assert_eq!(m.curve.discriminant(), &o.delta.eval(&u).unwrap(), "{f} at {u}");
            }
        }
    }

    #[test]
    fn other_families_have_no_curve() {
        assert!(build_obstruction(FamilyLabel::F13).is_err());
    }

    #[test]
    fn searches_at_small_height() {
        for f in [FamilyLabel::F14Kubert7, FamilyLabel::F18Kubert9] {
            let o = build_obstruction(f).unwrap();
            assert_eq!(search_rational_points(&o.curve, 1), expected_points());
            assert_eq!(search_rational_points(&o.curve, 12), expected_points());
        }
    }

    #[test]
    fn search_finds_both_signs() {
        // v² = u³ + 1 has (2, ±3) and (0, ±1).
        let c = HyperCurve::new(poly(&[1, 0, 0, 1])).unwrap();
        let pts = search_rational_points(&c, 3);
        for p in [(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)] {
            assert!(pts.contains(&HyperPoint::Affine(int(p.0), int(p.1))), "{p:?}");
        }
        assert!(pts.iter().all(|p| c.contains(p)));
    }

    #[test]
    fn rejects_repeated_factors() {
        assert!(HyperCurve::new(poly(&[1, 2, 1, 0])).is_err());
        assert!(HyperCurve::new(poly(&[1, 0, 1])).is_err());
    }

    #[test]
    fn pure_candidates_agree() {
        for f in [FamilyLabel::F14Kubert7, FamilyLabel::F18Kubert9] {
            let o = build_obstruction(f).unwrap();
            let params: Vec<Rational> = (-10..=10).map(|n| rat(n, 3)).collect();
            let checks = pure_candidate_consistency(&o, &params).unwrap();
            assert!(checks.len() >= 15);
            assert!(checks.iter().all(PureCheck::consistent));
            assert!(known_points_excluded(f));
        }
    }
}
