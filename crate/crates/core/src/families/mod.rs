//! Closed-form families of rational elliptic curves whose torsion grows to
//! a group not occurring over ℚ when the base is extended to a cubic
//! field, together with the fixed curves 49A3 and 49A4.
//!
//! Every constructor returns the curve over ℚ, the cubic field, and the
//! torsion and field type the construction predicts; verification is left
//! to the caller. Parameters violating a family's hypotheses yield
//! [`FamilyError::Excluded`] with the reason.

mod eighteen;
mod fourteen;
mod interval;
mod table;
mod thirteen;
mod two_fourteen;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cubic_field::{CubicField, FieldClass, FieldError, GaloisType};
use crate::elliptic::{CurveError, EllipticCurve, TorsionGroup};
use crate::exact::{format_rational, int, rat, RatFunc};
use crate::{Rational, RationalPoly};

pub use eighteen::{
    cubic_factor_discriminant, cubic_factor_f, curve_with_rational_3torsion, family_18_cyclic, family_18_kubert9,
    isogeny9_model, s_of_u, three_torsion_linear_factor,
};
pub use fourteen::{
    curve_49a3, curve_49a4, eval_phi, family_14_kubert, fixed_14, modular14_models, on_x0_14, on_x1_14,
    real_cyclotomic_7, Modular14,
};
pub use interval::{IntervalClass, Side};
pub use thirteen::{family_13, isogeny13_field, isogeny13_model, twist13_u, verify_twist13_identity, TwistIdentity};
pub use two_fourteen::{
    family_2x14, family_2x14_models, normalize_2x14, printed_torsion_point, Normalization, PrintedPoint,
};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum FamilyError {
    /// The parameter violates a hypothesis of the family.
    #[error("excluded: {0}")]
    Excluded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyLabel {
    F13,
    F14Isog,
    F14Kubert7,
    F18Cyclic,
    F18Kubert9,
    F2x14,
    Fixed49A3,
    Fixed49A4,
}

impl FamilyLabel {
    pub const ALL: [FamilyLabel; 8] = [
        FamilyLabel::F13,
        FamilyLabel::F14Isog,
        FamilyLabel::F14Kubert7,
        FamilyLabel::F18Cyclic,
        FamilyLabel::F18Kubert9,
        FamilyLabel::F2x14,
        FamilyLabel::Fixed49A3,
        FamilyLabel::Fixed49A4,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyLabel::F13 => "F13",
            FamilyLabel::F14Isog => "F14_ISOG",
            FamilyLabel::F14Kubert7 => "F14_KUBERT7",
            FamilyLabel::F18Cyclic => "F18_CYCLIC",
            FamilyLabel::F18Kubert9 => "F18_KUBERT9",
            FamilyLabel::F2x14 => "F2x14",
            FamilyLabel::Fixed49A3 => "FIXED_49A3",
            FamilyLabel::Fixed49A4 => "FIXED_49A4",
        }
    }

    /// Whether members are indexed by a rational parameter.
    pub fn is_parametric(&self) -> bool {
        matches!(
            self,
            FamilyLabel::F13
                | FamilyLabel::F14Kubert7
                | FamilyLabel::F18Cyclic
                | FamilyLabel::F18Kubert9
                | FamilyLabel::F2x14
        )
    }

    /// The parameters swept by default.
    pub fn default_parameters(&self) -> Vec<Rational> {
        match self {
            FamilyLabel::F13 => vec![int(2), int(3), rat(1, 2), int(-2), rat(5, 3)],
            FamilyLabel::F14Kubert7 => vec![int(2), int(3), int(-1), rat(1, 3), int(7), int(8)],
            FamilyLabel::F18Cyclic => vec![int(2), int(-1), rat(1, 2), int(4), int(-2)],
            FamilyLabel::F18Kubert9 => vec![int(2), int(3), int(-1), int(6)],
            FamilyLabel::F2x14 => vec![int(2), int(3), rat(1, 2), int(-2)],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyLabel::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(s)).ok_or_else(|| {
            let names: Vec<&str> = FamilyLabel::ALL.iter().map(|l| l.name()).collect();
            format!("unknown family '{s}' (expected one of {})", names.join(", "))
        })
    }
}

impl Serialize for FamilyLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A rational curve, a cubic field, and the torsion the construction predicts.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    pub label: FamilyLabel,
    #[serde(serialize_with = "serialize_parameter")]
    pub parameter: Option<Rational>,
    pub curve: EllipticCurve<Rational>,
    pub field: CubicField,
    pub expected_torsion: TorsionGroup,
    /// Torsion over ℚ, where the construction pins it down.
    pub expected_rational_torsion: Option<TorsionGroup>,
    pub expected_class: FieldClass,
}

fn serialize_parameter<S: Serializer>(p: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(q) => s.serialize_str(&format_rational(q)),
        None => s.serialize_none(),
    }
}

/// Constructs a member of a family; fixed families take no parameter.
pub fn member(label: FamilyLabel, parameter: Option<&Rational>) -> Result<FamilyMember, FamilyError> {
    let need = |p: Option<&Rational>| {
        p.cloned().ok_or_else(|| FamilyError::InvalidInput(format!("{label} needs a parameter")))
    };
    match label {
        FamilyLabel::F13 => family_13(&need(parameter)?),
        FamilyLabel::F14Kubert7 => family_14_kubert(&need(parameter)?),
        FamilyLabel::F18Cyclic => family_18_cyclic(&need(parameter)?),
        FamilyLabel::F18Kubert9 => family_18_kubert9(&need(parameter)?),
        FamilyLabel::F2x14 => family_2x14(&need(parameter)?),
        FamilyLabel::Fixed49A3 | FamilyLabel::Fixed49A4 => {
            let [a3, a4] = fixed_14()?;
            Ok(if label == FamilyLabel::Fixed49A3 { a3 } else { a4 })
        }
        FamilyLabel::F14Isog => {
            Err(FamilyError::InvalidInput("F14_ISOG is a set of modular-curve checks, not a curve family".into()))
        }
    }
}

const CYCLIC: FieldClass = FieldClass { galois_type: GaloisType::Cyclic, pure_candidate: false };

/// Evaluates a coefficient, treating a pole as an excluded parameter.
fn eval(f: &RatFunc, u: &Rational) -> Result<Rational, FamilyError> {
    f.eval(u).ok_or_else(|| FamilyError::Excluded(format!("pole of a coefficient at {}", format_rational(u))))
}

fn eval_all<const N: usize>(fs: &[RatFunc; N], u: &Rational) -> Result<[Rational; N], FamilyError> {
    let v: Vec<Rational> = fs.iter().map(|f| eval(f, u)).collect::<Result<_, _>>()?;
    Ok(v.try_into().expect("length preserved"))
}

fn cubic_poly(cubic: &table::Cubic, u: &Rational) -> Result<RationalPoly, FamilyError> {
    let c = eval_all(cubic, u)?;
    if num_traits::Zero::is_zero(&c[3]) {
        return Err(FamilyError::Excluded("leading coefficient of the cubic vanishes".into()));
    }
    Ok(RationalPoly::new(c.to_vec()))
}

/// The field defined by an irreducible cubic; reducibility is an exclusion.
fn field_of(f: RationalPoly) -> Result<CubicField, FamilyError> {
    CubicField::new(f).map_err(|e| match e {
        FieldError::Reducible(r) => {
            FamilyError::Excluded(format!("cubic is reducible (rational root {})", format_rational(&r)))
        }
        other => FamilyError::Field(other),
    })
}

/// A curve from coefficients; a singular one is an exclusion.
fn curve_of(a: [Rational; 5]) -> Result<EllipticCurve<Rational>, FamilyError> {
    EllipticCurve::new(a).map_err(|e| match e {
        CurveError::Singular => FamilyError::Excluded("singular curve".into()),
        other => FamilyError::Curve(other),
    })
}

fn short_curve(a: Rational, b: Rational) -> Result<EllipticCurve<Rational>, FamilyError> {
    curve_of([int(0), int(0), int(0), a, b])
}
