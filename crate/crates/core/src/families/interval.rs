use num_traits::Zero;
use serde::Serialize;

use crate::cubic_field::GaloisType;
use crate::exact::sign;
use crate::numeric::{polynomial_roots, DEFAULT_BITS};
use crate::{Rational, RationalPoly};

use super::table::{kubert7, kubert9};

/// Which of the two unions of intervals cut out by a Kubert cubic a
/// parameter lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `(-∞, r₁) ∪ (0, r₂) ∪ (1, r₃)`: the discriminant is negative.
    I,
    /// The complement in ℝ minus the roots, 0 and 1: the discriminant is positive.
    J,
}

impl Side {
    pub fn galois_type(self) -> GaloisType {
        match self {
            Side::I => GaloisType::Complex,
            Side::J => GaloisType::TotallyRealNonGalois,
        }
    }
}

/// The real roots `r₁ < 0 < r₂ < 1 < r₃` of a cubic `c(u)` and the split of
/// the real line into `I` and `J`.
///
/// Membership is decided exactly from the signs of `u`, `u - 1` and `c(u)`;
/// the roots are numeric and for display only.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalClass {
    #[serde(skip)]
    pub cubic: RationalPoly,
    pub roots: [f64; 3],
}

impl IntervalClass {
    fn new(cubic: RationalPoly) -> Self {
        let approx = polynomial_roots(&cubic.primitive_integer_coeffs(), DEFAULT_BITS, None);
        let mut roots: Vec<f64> = approx.values.iter().map(|z| z.to_f64().0).collect();
        roots.sort_by(f64::total_cmp);
        IntervalClass { cubic, roots: [roots[0], roots[1], roots[2]] }
    }

    /// `u³ - 8u² + 5u + 1`, for ℤ/14.
    pub fn kubert7() -> Self {
        Self::new(kubert7::delta_cubic().num().clone())
    }

    /// `u³ - 6u² + 3u + 1`, for ℤ/18.
    pub fn kubert9() -> Self {
        Self::new(kubert9::delta_cubic().num().clone())
    }

    /// Certifies `r₁ < 0 < r₂ < 1 < r₃` by sign changes of a monic cubic.
    pub fn roots_separated(&self) -> bool {
        let at = |u: i64| sign(&self.cubic.eval(&Rational::from_integer(u.into())));
        self.cubic.lc().is_some_and(|c| sign(c) > 0) && at(0) > 0 && at(1) < 0
    }

    /// `None` at `u ∈ {0, 1}` and at the roots.
    pub fn side(&self, u: &Rational) -> Option<Side> {
        let c = self.cubic.eval(u);
        let one = Rational::from_integer(1.into());
        if u.is_zero() || *u == one || c.is_zero() {
            return None;
        }
        let negative = sign(&c) < 0;
        let inside = if sign(u) < 0 || *u > one { negative } else { !negative };
        Some(if inside { Side::I } else { Side::J })
    }
}
