use std::fmt;

use crate::exact::{rational_nth_root, rational_roots};
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

use super::{CubicField, FieldElement, FieldError};

/// A base field for curves: ℚ itself or a cubic field, with the exact root
/// extraction the torsion and isomorphism machinery needs.
pub trait BaseField: Clone + fmt::Debug + Send + Sync {
    type Elem: Scalar;

    fn degree(&self) -> usize;

    /// `"Q"` or the defining polynomial, for reports.
    fn describe(&self) -> String;

    fn embed(&self, q: &Rational) -> Self::Elem;

    /// Attaches an element to this field (a no-op over ℚ).
    fn adopt(&self, e: &Self::Elem) -> Self::Elem;

    /// The distinct roots of a rational polynomial lying in the field.
    fn roots(&self, f: &RationalPoly) -> Result<Vec<Self::Elem>, FieldError>;

    /// An `n`-th root of `c` if one exists; deterministic choice of root.
    fn nth_root(&self, c: &Self::Elem, n: u32) -> Result<Option<Self::Elem>, FieldError>;

    fn sqrt(&self, c: &Self::Elem) -> Result<Option<Self::Elem>, FieldError> {
        self.nth_root(c, 2)
    }

    /// The cubic field, if this is one.
    fn cubic(&self) -> Option<&CubicField> {
        None
    }
}

/// The rational numbers as a [`BaseField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl BaseField for RationalField {
    type Elem = Rational;

    fn degree(&self) -> usize {
        1
    }

    fn describe(&self) -> String {
        "Q".into()
    }

    fn embed(&self, q: &Rational) -> Rational {
        q.clone()
    }

    fn adopt(&self, e: &Rational) -> Rational {
        e.clone()
    }

    fn roots(&self, f: &RationalPoly) -> Result<Vec<Rational>, FieldError> {
        let mut r = rational_roots(f)?;
        r.dedup();
        Ok(r)
    }

    fn nth_root(&self, c: &Rational, n: u32) -> Result<Option<Rational>, FieldError> {
        if n == 0 {
            return Err(FieldError::InvalidInput("zeroth root".into()));
        }
        Ok(rational_nth_root(c, n))
    }
}

impl BaseField for CubicField {
    type Elem = FieldElement;

    fn degree(&self) -> usize {
        3
    }

    fn describe(&self) -> String {
        self.minpoly().to_string()
    }

    fn embed(&self, q: &Rational) -> FieldElement {
        self.from_rational(q)
    }

    fn adopt(&self, e: &FieldElement) -> FieldElement {
        self.element(e.coords().clone())
    }

    fn roots(&self, f: &RationalPoly) -> Result<Vec<FieldElement>, FieldError> {
        CubicField::roots(self, f)
    }

    fn nth_root(&self, c: &FieldElement, n: u32) -> Result<Option<FieldElement>, FieldError> {
        CubicField::nth_root(self, c, n)
    }

    fn cubic(&self) -> Option<&CubicField> {
        Some(self)
    }
}
