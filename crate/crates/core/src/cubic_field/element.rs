use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::exact::{format_rational, Poly};
use crate::scalar::Scalar;
use crate::Rational;

use super::{CubicField, FieldError};

/// An element `c₀ + c₁α + c₂α²` of a cubic field.
///
/// Rational constants may be created without a field (as the [`Scalar`]
/// trait requires); they adopt the field of whatever they are combined
/// with. Mixing elements of two different fields panics.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Option<CubicField>,
    coords: [Rational; 3],
}

impl FieldElement {
    pub fn new(field: &CubicField, coords: [Rational; 3]) -> Self {
        FieldElement { field: Some(field.clone()), coords }
    }

    pub fn rational(q: Rational) -> Self {
        FieldElement { field: None, coords: [q, Rational::zero(), Rational::zero()] }
    }

    pub fn field(&self) -> Option<&CubicField> {
        self.field.as_ref()
    }

    /// Coordinates in the power basis `1, α, α²`.
    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1].is_zero() && self.coords[2].is_zero()
    }

    /// The lift `c₀ + c₁x + c₂x²` to ℚ[x].
    pub fn lift(&self) -> Poly<Rational> {
        Poly::new(self.coords.to_vec())
    }

    fn merged(&self, other: &FieldElement) -> Option<CubicField> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                assert!(a == b, "arithmetic between elements of different cubic fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    /// Multiplicative inverse via the extended gcd of the lift with the
    /// minimal polynomial.
    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(FieldElement {
                field: self.field.clone(),
                coords: [self.coords[0].recip(), Rational::zero(), Rational::zero()],
            });
        }
        let field = self.field.as_ref().expect("irrational elements carry their field");
        let (g, s, _) = self.lift().ext_gcd(field.minpoly());
        debug_assert!(g.is_constant());
        Ok(field.reduce(&s))
    }

    /// The matrix of multiplication by `self` on the basis `1, α, α²`,
    /// stored by columns.
    pub fn multiplication_matrix(&self) -> [[Rational; 3]; 3] {
        let field = match &self.field {
            Some(f) => f,
            None => {
                let z = Rational::zero;
                let c = self.coords[0].clone();
                return [[c.clone(), z(), z()], [z(), c.clone(), z()], [z(), z(), c]];
            }
        };
        let alpha = field.alpha();
        let c0 = self.clone();
        let c1 = &c0 * &alpha;
        let c2 = &c1 * &alpha;
        [c0.coords, c1.coords, c2.coords]
    }

    /// Characteristic polynomial of multiplication by `self`, a monic cubic
    /// over ℚ whose roots are the conjugates of `self`.
    pub fn charpoly(&self) -> Poly<Rational> {
        let m = self.multiplication_matrix();
        // m[col][row]
        let a = |r: usize, c: usize| m[c][r].clone();
        let trace = a(0, 0) + a(1, 1) + a(2, 2);
        let minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) + a(1, 1) * a(2, 2)
            - a(1, 2) * a(2, 1);
        let det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        Poly::new(vec![-det, minors, -trace, Rational::one()])
    }

    pub fn norm(&self) -> Rational {
        -self.charpoly().coeff(0)
    }

    pub fn trace(&self) -> Rational {
        -self.charpoly().coeff(2)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.field, &other.field) {
            if a != b {
                return false;
            }
        }
        self.coords == other.coords
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::rational(Rational::one())
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let [a, b, c] = self.coords;
        FieldElement { field: self.field, coords: [-a, -b, -c] }
    }
}

impl Add<&FieldElement> for FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        let field = self.merged(o);
        let [a, b, c] = self.coords;
        FieldElement { field, coords: [a + &o.coords[0], b + &o.coords[1], c + &o.coords[2]] }
    }
}

impl Sub<&FieldElement> for FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        let field = self.merged(o);
        let [a, b, c] = self.coords;
        FieldElement { field, coords: [a - &o.coords[0], b - &o.coords[1], c - &o.coords[2]] }
    }
}

impl Mul<&FieldElement> for FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        let field = self.merged(o);
        if o.is_rational() {
            let k = &o.coords[0];
            let [a, b, c] = self.coords;
            return FieldElement { field, coords: [a * k, b * k, c * k] };
        }
        if self.is_rational() {
            let k = &self.coords[0];
            let [a, b, c] = &o.coords;
            return FieldElement { field, coords: [a * k, b * k, c * k] };
        }
        let field = field.expect("irrational elements carry their field");
        let (x, y) = (&self.coords, &o.coords);
        let mut prod = vec![Rational::zero(); 5];
        for i in 0..3 {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                prod[i + j] += &x[i] * &y[j];
            }
        }
        field.reduce_coeffs(prod)
    }
}

impl Div<&FieldElement> for FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &FieldElement) -> FieldElement {
        let inv = o.inverse().expect("division by zero in a cubic field");
        self * &inv
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                self.$m(&o)
            }
        }
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.clone().$m(o)
            }
        }
    )*};
}
by_value!(Add add, Sub sub, Mul mul, Div div);

impl Scalar for FieldElement {
    fn from_rational(q: &Rational) -> Self {
        FieldElement::rational(q.clone())
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .zip(["", "*a", "*a^2"])
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| format!("{}{}", format_rational(c), m))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.coords {
            seq.serialize_element(&format_rational(c))?;
        }
        seq.end()
    }
}
