//! Elliptic curves in long Weierstrass form over ℚ, a cubic field, or any
//! other exact [`Scalar`] field.

mod curve;
mod divpoly;
mod isomorphism;
mod normalize;
mod torsion;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cubic_field::FieldError;

pub use curve::{CoordChange, CurvePoint, EllipticCurve};
pub use divpoly::DivisionPolynomials;
pub use isomorphism::{is_isomorphic_over, Isomorphism};
pub use normalize::{bn_normalize, NormalizedModel};
pub use torsion::{torsion_points, torsion_subgroup, TorsionData};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular curve (discriminant zero)")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("curve is not in short Weierstrass form")]
    NotShort,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An internal consistency check failed: a result contradicts a
    /// theorem the computation relies on.
    #[error("contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The group ℤ/a × ℤ/b with `a | b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionGroup {
    pub a: u32,
    pub b: u32,
}

/// Mazur's list of torsion groups of elliptic curves over ℚ.
pub const MAZUR: [TorsionGroup; 15] = [
    TorsionGroup::cyclic(1),
    TorsionGroup::cyclic(2),
    TorsionGroup::cyclic(3),
    TorsionGroup::cyclic(4),
    TorsionGroup::cyclic(5),
    TorsionGroup::cyclic(6),
    TorsionGroup::cyclic(7),
    TorsionGroup::cyclic(8),
    TorsionGroup::cyclic(9),
    TorsionGroup::cyclic(10),
    TorsionGroup::cyclic(12),
    TorsionGroup::new(2, 2),
    TorsionGroup::new(2, 4),
    TorsionGroup::new(2, 6),
    TorsionGroup::new(2, 8),
];

/// Najman's list of torsion groups of rational elliptic curves over cubic fields.
pub const NAJMAN: [TorsionGroup; 20] = [
    TorsionGroup::cyclic(1),
    TorsionGroup::cyclic(2),
    TorsionGroup::cyclic(3),
    TorsionGroup::cyclic(4),
    TorsionGroup::cyclic(5),
    TorsionGroup::cyclic(6),
    TorsionGroup::cyclic(7),
    TorsionGroup::cyclic(8),
    TorsionGroup::cyclic(9),
    TorsionGroup::cyclic(10),
    TorsionGroup::cyclic(12),
    TorsionGroup::cyclic(13),
    TorsionGroup::cyclic(14),
    TorsionGroup::cyclic(18),
    TorsionGroup::cyclic(21),
    TorsionGroup::new(2, 2),
    TorsionGroup::new(2, 4),
    TorsionGroup::new(2, 6),
    TorsionGroup::new(2, 8),
    TorsionGroup::new(2, 14),
];

impl TorsionGroup {
    pub const fn new(a: u32, b: u32) -> Self {
        TorsionGroup { a, b }
    }

    pub const fn cyclic(b: u32) -> Self {
        TorsionGroup { a: 1, b }
    }

    pub fn order(&self) -> u32 {
        self.a * self.b
    }

    pub fn in_mazur(&self) -> bool {
        MAZUR.contains(self)
    }

    pub fn in_najman(&self) -> bool {
        NAJMAN.contains(self)
    }

    /// Whether `self` embeds in `other` as a subgroup (componentwise divisibility).
    pub fn divides(&self, other: &TorsionGroup) -> bool {
        other.a.is_multiple_of(self.a) && other.b.is_multiple_of(self.b)
    }

    /// Parses `"Z/b"` or `"Z/a x Z/b"`.
    pub fn parse(s: &str) -> Option<TorsionGroup> {
        let parts: Vec<&str> = s.split('x').map(str::trim).collect();
        let n = |p: &str| p.strip_prefix("Z/")?.parse::<u32>().ok();
        match parts.as_slice() {
            [b] => Some(TorsionGroup::cyclic(n(b)?)),
            [a, b] => Some(TorsionGroup::new(n(a)?, n(b)?)),
            _ => None,
        }
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 1 {
            write!(f, "Z/{}", self.b)
        } else {
            write!(f, "Z/{} x Z/{}", self.a, self.b)
        }
    }
}

impl Serialize for TorsionGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
