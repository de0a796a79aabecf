//! Exact verification of torsion growth of rational elliptic curves over
//! cubic fields.
//!
//! The building blocks are generic over an exact [`Scalar`] field, so the
//! same curve and polynomial code runs over ℚ, over a cubic field, and over
//! the rational function field ℚ(u) when family identities are checked
//! symbolically. The aliases below name the concrete instances.

pub mod cubic_field;
pub mod elliptic;
pub mod exact;
pub mod families;
pub mod numeric;
pub mod obstruction;
pub mod report;
pub mod scalar;

pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type RationalPoly = exact::Poly<Rational>;

/// A curve over ℚ.
pub type RationalCurve = elliptic::EllipticCurve<Rational>;
/// A curve over a cubic field.
pub type FieldCurve = elliptic::EllipticCurve<cubic_field::FieldElement>;
pub type RationalPoint = elliptic::CurvePoint<Rational>;
pub type FieldPoint = elliptic::CurvePoint<cubic_field::FieldElement>;
/// A polynomial with coefficients in a cubic field.
pub type FieldPoly = exact::Poly<cubic_field::FieldElement>;
