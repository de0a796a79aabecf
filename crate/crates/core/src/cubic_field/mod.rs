//! Cubic number fields ℚ(α) and exact arithmetic inside them.

mod base;
mod element;
mod roots;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{discriminant, integer_sqrt, is_square_rational, rational_roots, trial_factor, ExactError, Poly};
use crate::numeric::{self, Complex};
use crate::{Rational, RationalPoly};

pub use base::{BaseField, RationalField};
pub use element::FieldElement;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("not a cubic: {0}")]
    NotCubic(String),
    #[error("reducible cubic with rational root {0}")]
    Reducible(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("undecided: {0}")]
    Undecided(String),
}

impl From<ExactError> for FieldError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::Undecided(s) => FieldError::Undecided(s),
            ExactError::InvalidInput(s) | ExactError::Parse(s) => FieldError::InvalidInput(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GaloisType {
    Cyclic,
    TotallyRealNonGalois,
    Complex,
}

impl fmt::Display for GaloisType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisType::Cyclic => "CYCLIC",
            GaloisType::TotallyRealNonGalois => "TOTALLY_REAL_NON_GALOIS",
            GaloisType::Complex => "COMPLEX",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldClass {
    pub galois_type: GaloisType,
    /// Whether the discriminant has the shape `-27d²` that every pure
    /// cubic field ℚ(∛n) exhibits. Necessary, not sufficient.
    pub pure_candidate: bool,
}

/// Galois type and pure-cubic candidacy from the discriminant alone.
pub fn classify_discriminant(disc: &Rational) -> FieldClass {
    let galois_type = if disc.is_negative() {
        GaloisType::Complex
    } else if is_square_rational(disc).is_some() {
        GaloisType::Cyclic
    } else {
        GaloisType::TotallyRealNonGalois
    };
    let pure_candidate = is_square_rational(&(-disc / Rational::from_integer(27.into()))).is_some();
    FieldClass { galois_type, pure_candidate }
}

struct FieldData {
    minpoly: RationalPoly,
    monic: [Rational; 3],
    disc: Rational,
    /// `θ = scale·α` is an algebraic integer.
    scale: BigInt,
    /// Coefficients of the monic integer minimal polynomial of `θ`.
    theta_poly: Vec<BigInt>,
    /// Every algebraic integer in the field lies in `(1/denominator_bound)·ℤ[θ]`.
    denominator_bound: BigInt,
    bits: usize,
}

/// The field ℚ[x]/(f) for an irreducible cubic `f`.
///
/// `f` need not be monic or integral; internally the generator is scaled
/// to an algebraic integer `θ = a₃α` for numerical work.
#[derive(Clone)]
pub struct CubicField(Arc<FieldData>);

impl CubicField {
    pub fn new(minpoly: RationalPoly) -> Result<Self, FieldError> {
        Self::with_bits(minpoly, numeric::DEFAULT_BITS)
    }

    /// As [`CubicField::new`], starting numerical reconstruction at `bits`.
    pub fn with_bits(minpoly: RationalPoly, bits: usize) -> Result<Self, FieldError> {
        if minpoly.degree() != Some(3) {
            return Err(FieldError::NotCubic(minpoly.to_string()));
        }
        if let Some(r) = rational_roots(&minpoly)?.into_iter().next() {
            return Err(FieldError::Reducible(r));
        }
        let disc = discriminant(&minpoly)?;
        let m = minpoly.monic();
        let monic = [m.coeff(0), m.coeff(1), m.coeff(2)];
        let ints = minpoly.primitive_integer_coeffs();
        let scale = ints[3].clone();
        // θ = a₃α satisfies θ³ + a₂θ² + a₁a₃θ + a₀a₃² = 0.
        let theta_poly = vec![&ints[0] * &scale * &scale, &ints[1] * &scale, ints[2].clone(), BigInt::one()];
        let theta_disc = discriminant(&Poly::from_integers(&theta_poly))?.to_integer();
        let denominator_bound = square_part_bound(&theta_disc);
        Ok(CubicField(Arc::new(FieldData {
            minpoly,
            monic,
            disc,
            scale,
            theta_poly,
            denominator_bound,
            bits: bits.max(64),
        })))
    }

    pub fn minpoly(&self) -> &RationalPoly {
        &self.0.minpoly
    }

    pub fn disc(&self) -> &Rational {
        &self.0.disc
    }

    pub fn bits(&self) -> usize {
        self.0.bits
    }

    /// The same field with a different starting precision.
    pub fn rebit(&self, bits: usize) -> Self {
        let d = &self.0;
        CubicField(Arc::new(FieldData {
            minpoly: d.minpoly.clone(),
            monic: d.monic.clone(),
            disc: d.disc.clone(),
            scale: d.scale.clone(),
            theta_poly: d.theta_poly.clone(),
            denominator_bound: d.denominator_bound.clone(),
            bits: bits.max(64),
        }))
    }

    pub fn classify(&self) -> FieldClass {
        classify_discriminant(&self.0.disc)
    }

    pub fn alpha(&self) -> FieldElement {
        FieldElement::new(self, [Rational::zero(), Rational::one(), Rational::zero()])
    }

    pub fn element(&self, coords: [Rational; 3]) -> FieldElement {
        FieldElement::new(self, coords)
    }

    pub fn from_rational(&self, q: &Rational) -> FieldElement {
        FieldElement::new(self, [q.clone(), Rational::zero(), Rational::zero()])
    }

    pub fn from_ints(&self, c: [i64; 3]) -> FieldElement {
        self.element(c.map(|n| Rational::from_integer(n.into())))
    }

    /// Reduces a polynomial in α modulo the minimal polynomial.
    pub fn reduce(&self, p: &RationalPoly) -> FieldElement {
        self.reduce_coeffs(p.coeffs().to_vec())
    }

    pub(crate) fn reduce_coeffs(&self, mut c: Vec<Rational>) -> FieldElement {
        let m = &self.0.monic;
        while c.len() > 3 {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = c.len() - 3;
            for (i, mi) in m.iter().enumerate() {
                c[k + i] -= &top * mi;
            }
        }
        c.resize(3, Rational::zero());
        let [a, b, d]: [Rational; 3] = c.try_into().unwrap();
        FieldElement::new(self, [a, b, d])
    }

    /// The three complex roots of the integral model, in the order of
    /// [`CubicField::embeddings`].
    fn theta_roots(&self, bits: usize) -> numeric::RootApprox {
        numeric::separated_roots(&self.0.theta_poly, bits, bits.max(numeric::MAX_BITS))
            .map(sort_embeddings)
            .expect("roots of a squarefree cubic separate")
    }

    /// The images of α under the three complex embeddings, to `bits`
    /// of precision: real roots ascending, then the complex pair by
    /// increasing imaginary part.
    pub fn embeddings(&self, bits: usize) -> Vec<Complex> {
        let bits = bits.max(64);
        let s = numeric::float_from_int(&self.0.scale, bits + 16);
        self.theta_roots(bits + 16)
            .values
            .iter()
            .map(|z| Complex::new(&z.re / &s, &z.im / &s).with_precision(bits))
            .collect()
    }

    /// Sign of `σ₁(β)` for nonzero `β`; the first embedding is always real.
    pub(crate) fn first_embedding_sign(&self, b: &FieldElement) -> i32 {
        let mut bits = self.bits();
        loop {
            let a = &self.embeddings(bits)[0].re;
            let c = b.coords();
            let v = numeric::float_from_rational(&c[2], bits);
            let v = &v * a + numeric::float_from_rational(&c[1], bits);
            let v = &v * a + numeric::float_from_rational(&c[0], bits);
            let mag: f64 = c
                .iter()
                .map(|q| numeric::log2_abs(&numeric::float_from_rational(q, 64)))
                .fold(f64::NEG_INFINITY, f64::max)
                + 2.0 * numeric::log2_abs(a).max(0.0);
            if numeric::log2_abs(&v) > mag - bits as f64 + 8.0 {
                return if v.repr().sign() == dashu_int::Sign::Negative { -1 } else { 1 };
            }
            bits *= 2;
        }
    }
}

/// `∏ p^⌊e/2⌋` over small primes `p`, times whatever cofactor might still
/// hide a square. The index `[O_K : ℤ[θ]]` divides the result, because its
/// square divides the discriminant of `θ`.
fn square_part_bound(d: &BigInt) -> BigInt {
    let limit = 10_000u32;
    let (small, n) = trial_factor(d, limit);
    let mut bound = BigInt::one();
    for (p, e) in small {
        bound *= BigInt::from(p).pow(e / 2);
    }
    if n.is_one() {
        return bound;
    }
    if let Some(r) = integer_sqrt(&n) {
        return bound * r;
    }
    // Every prime factor of n now exceeds the limit, so a non-square n
    // with a repeated prime factor p is at least p²·p > limit³.
    if n < BigInt::from(limit).pow(3) {
        return bound;
    }
    bound * n
}

fn sort_embeddings(mut r: numeric::RootApprox) -> numeric::RootApprox {
    let mut idx: Vec<usize> = (0..r.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ra, rb) = (r.real[a], r.real[b]);
        let (za, zb) = (r.values[a].to_f64(), r.values[b].to_f64());
        rb.cmp(&ra).then(if ra { za.0.total_cmp(&zb.0) } else { za.1.total_cmp(&zb.1) })
    });
    r.values = idx.iter().map(|&i| r.values[i].clone()).collect();
    r.radius = idx.iter().map(|&i| r.radius[i]).collect();
    r.real = idx.iter().map(|&i| r.real[i]).collect();
    r
}

impl PartialEq for CubicField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl fmt::Debug for CubicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicField({})", self.0.minpoly)
    }
}

impl fmt::Display for CubicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0.minpoly)
    }
}

impl Serialize for CubicField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.minpoly.serialize(s)
    }
}

pub fn classify(k: &CubicField) -> FieldClass {
    k.classify()
}

pub fn element_inverse(a: &FieldElement) -> Result<FieldElement, FieldError> {
    a.inverse()
}

pub fn embeddings(k: &CubicField, bits: usize) -> Vec<Complex> {
    k.embeddings(bits)
}

pub fn roots_in_field(f: &RationalPoly, k: &CubicField) -> Result<Vec<FieldElement>, FieldError> {
    k.roots(f)
}

pub fn sqrt_in_field(c: &FieldElement, k: &CubicField) -> Result<Option<FieldElement>, FieldError> {
    k.sqrt(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn field(cs: &[i64]) -> CubicField {
        CubicField::new(Poly::from_desc(cs)).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = field(&[1, 2, -1, -1]).classify();
        assert_eq!(c.galois_type, GaloisType::Cyclic);
        assert!(!c.pure_candidate);
        let p = field(&[1, 0, 0, -2]).classify();
        assert_eq!(p, FieldClass { galois_type: GaloisType::Complex, pure_candidate: true });
        let t = field(&[1, 0, -4, -1]);
        assert_eq!(t.disc(), &int(229));
        assert_eq!(t.classify().galois_type, GaloisType::TotallyRealNonGalois);
    }

    #[test]
    fn rejects_bad_minpolys() {
        assert_eq!(CubicField::new(Poly::from_desc(&[1, 0, -3, -2])).unwrap_err(), FieldError::Reducible(int(-1)));
        assert!(matches!(CubicField::new(Poly::from_desc(&[1, 0, 1])), Err(FieldError::NotCubic(_))));
    }

    #[test]
    fn inverse_examples() {
        let k = field(&[1, 0, 0, -2]);
        let a = k.alpha();
        assert_eq!(a.inverse().unwrap(), k.element([int(0), int(0), rat(1, 2)]));
        assert_eq!(k.from_ints([1, 0, 0]).inverse().unwrap(), k.from_ints([1, 0, 0]));
        let c = field(&[1, 2, -1, -1]);
        let b = c.from_ints([1, 1, 0]);
        let inv = b.inverse().unwrap();
        assert_eq!(&b * &inv, c.from_ints([1, 0, 0]));
        assert_eq!(k.from_ints([0, 0, 0]).inverse(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn arithmetic_reduces_modulo_minpoly() {
        let k = field(&[1, 0, 0, -2]);
        let a = k.alpha();
        assert_eq!(&(&a * &a) * &a, k.from_ints([2, 0, 0]));
        // Non-monic generator: 2α³ - 3 = 0.
        let m = field(&[2, 0, 0, -3]);
        let b = m.alpha();
        assert_eq!(&(&b * &b) * &b, m.element([rat(3, 2), int(0), int(0)]));
        assert_eq!(b.charpoly(), Poly::new(vec![rat(-3, 2), int(0), int(0), int(1)]));
        assert_eq!(b.norm(), rat(3, 2));
    }

    #[test]
    fn embeddings_examples() {
        let e = field(&[1, 2, -1, -1]).embeddings(128);
        let expected = [-2.2469796037174667, -0.5549581320873711, 0.8019377358048383];
        for (z, x) in e.iter().zip(expected) {
            let (re, im) = z.to_f64();
            assert!((re - x).abs() < 1e-12 && im == 0.0);
        }
        let p = field(&[1, 0, 0, -2]).embeddings(128);
        assert!((p[0].to_f64().0 - 1.2599210498948732).abs() < 1e-12);
        assert!(p[1].to_f64().1 < 0.0 && p[2].to_f64().1 > 0.0);
        // Scaled generator: 8α³ - 2 has real root 4^(-1/3).
        let s = field(&[8, 0, 0, -2]).embeddings(64);
        assert!((s[0].to_f64().0 - 0.6299605249474366).abs() < 1e-12);
    }

    #[test]
    fn classify_is_invariant_under_rescaling() {
        for cs in [[1, 2, -1, -1], [1, 0, 0, -2], [1, 0, -4, -1], [3, -4, -27, 4]] {
            let k = field(&cs);
            let scaled = field(&[cs[0], cs[1] * 5, cs[2] * 25, cs[3] * 125]);
            assert_eq!(k.classify().galois_type, scaled.classify().galois_type);
        }
    }

    #[test]
    fn square_part_bound_covers_index() {
        assert_eq!(square_part_bound(&BigInt::from(49)), BigInt::from(7));
        assert_eq!(square_part_bound(&BigInt::from(-108)), BigInt::from(6));
        assert_eq!(square_part_bound(&BigInt::from(229)), BigInt::from(1));
        let p = BigInt::from(1_000_003u64);
        assert_eq!(square_part_bound(&(&p * &p * 3)), p);
    }
}
