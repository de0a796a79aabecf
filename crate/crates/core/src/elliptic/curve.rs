use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cubic_field::FieldElement;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{format_rational, trial_factor};
use crate::scalar::Scalar;
use crate::Rational;

use super::CurveError;

/// `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆` with nonzero discriminant.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticCurve<T> {
    a: [T; 5],
    disc: T,
    j: T,
}

/// A point in affine coordinates, or the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint<T> {
    Infinity,
    Affine(T, T),
}

impl<T> CurvePoint<T> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&T> {
        match self {
            CurvePoint::Affine(x, _) => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&T> {
        match self {
            CurvePoint::Affine(_, y) => Some(y),
            CurvePoint::Infinity => None,
        }
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> CurvePoint<S> {
        match self {
            CurvePoint::Affine(x, y) => CurvePoint::Affine(f(x), f(y)),
            CurvePoint::Infinity => CurvePoint::Infinity,
        }
    }
}

/// The substitution `x = u²x' + r`, `y = u³y' + su²x' + t`, taking a
/// model in `(x, y)` to one in `(x', y')`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordChange<T> {
    pub u: T,
    pub r: T,
    pub s: T,
    pub t: T,
}

impl<T: Scalar> CoordChange<T> {
    pub fn identity() -> Self {
        CoordChange { u: T::one(), r: T::zero(), s: T::zero(), t: T::zero() }
    }

    /// Scaling only: `x = u²x'`, `y = u³y'`.
    pub fn scaling(u: T) -> Self {
        CoordChange { u, r: T::zero(), s: T::zero(), t: T::zero() }
    }

    /// Image of a point of the old model on the new one.
    pub fn apply(&self, p: &CurvePoint<T>) -> CurvePoint<T> {
        let CurvePoint::Affine(x, y) = p else { return CurvePoint::Infinity };
        let u2 = self.u.square();
        let dx = x.clone() - &self.r;
        let y_new = (y.clone() - &(self.s.clone() * &dx) - &self.t) / &(u2.clone() * &self.u);
        CurvePoint::Affine(dx / &u2, y_new)
    }

    /// Applying `self` and then `next`.
    pub fn then(&self, next: &CoordChange<T>) -> CoordChange<T> {
        let u2 = self.u.square();
        CoordChange {
            u: self.u.clone() * &next.u,
            r: u2.clone() * &next.r + &self.r,
            s: self.s.clone() + &(self.u.clone() * &next.s),
            t: self.t.clone() + &(self.s.clone() * &u2 * &next.r) + &(u2 * &self.u * &next.t),
        }
    }

    pub fn inverse(&self) -> CoordChange<T> {
        let ui = self.u.recip();
        let ui2 = ui.square();
        CoordChange {
            u: ui.clone(),
            r: -(self.r.clone() * &ui2),
            s: -(self.s.clone() * &ui),
            t: (self.r.clone() * &self.s - &self.t) * &ui2 * &ui,
        }
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> CoordChange<S> {
        CoordChange { u: f(&self.u), r: f(&self.r), s: f(&self.s), t: f(&self.t) }
    }
}

impl<T: Scalar> EllipticCurve<T> {
    /// The curve with coefficients `[a₁, a₂, a₃, a₄, a₆]`.
    pub fn new(a: [T; 5]) -> Result<Self, CurveError> {
        let [b2, b4, b6, b8] = b_invariants(&a);
        let disc = -(b2.square() * &b8) - &(T::from_int(8) * &b4.pow(3)) - &(T::from_int(27) * &b6.square())
            + &(T::from_int(9) * &b2 * &b4 * &b6);
        if disc.is_zero() {
            return Err(CurveError::Singular);
        }
        let c4 = b2.square() - &(T::from_int(24) * &b4);
        let j = c4.pow(3) / &disc;
        Ok(EllipticCurve { a, disc, j })
    }

    /// `y² = x³ + Ax + B`.
    pub fn short(a: T, b: T) -> Result<Self, CurveError> {
        Self::new([T::zero(), T::zero(), T::zero(), a, b])
    }

    pub fn coeffs(&self) -> &[T; 5] {
        &self.a
    }

    pub fn a1(&self) -> &T {
        &self.a[0]
    }
    pub fn a2(&self) -> &T {
        &self.a[1]
    }
    pub fn a3(&self) -> &T {
        &self.a[2]
    }
    pub fn a4(&self) -> &T {
        &self.a[3]
    }
    pub fn a6(&self) -> &T {
        &self.a[4]
    }

    pub fn b_invariants(&self) -> [T; 4] {
        b_invariants(&self.a)
    }

    pub fn c4(&self) -> T {
        let [b2, b4, ..] = self.b_invariants();
        b2.square() - &(T::from_int(24) * &b4)
    }

    pub fn c6(&self) -> T {
        let [b2, b4, b6, _] = self.b_invariants();
        -b2.pow(3) + &(T::from_int(36) * &b2 * &b4) - &(T::from_int(216) * &b6)
    }

    pub fn discriminant(&self) -> &T {
        &self.disc
    }

    pub fn j_invariant(&self) -> &T {
        &self.j
    }

    pub fn is_short(&self) -> bool {
        self.a[0].is_zero() && self.a[1].is_zero() && self.a[2].is_zero()
    }

    /// `(A, B)` for a curve in short form.
    pub fn short_coeffs(&self) -> Result<(&T, &T), CurveError> {
        if self.is_short() {
            Ok((&self.a[3], &self.a[4]))
        } else {
            Err(CurveError::NotShort)
        }
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> Result<EllipticCurve<S>, CurveError> {
        EllipticCurve::new(self.a.clone().map(|c| f(&c)))
    }

    /// The same curve over ℚ, if every coefficient is rational.
    pub fn to_rational(&self) -> Option<EllipticCurve<Rational>> {
        let a = [
            self.a[0].to_rational()?,
            self.a[1].to_rational()?,
            self.a[2].to_rational()?,
            self.a[3].to_rational()?,
            self.a[4].to_rational()?,
        ];
        EllipticCurve::new(a).ok()
    }

    /// The model obtained by the coordinate change.
    pub fn change(&self, c: &CoordChange<T>) -> EllipticCurve<T> {
        let [a1, a2, a3, a4, a6] = &self.a;
        let CoordChange { u, r, s, t } = c;
        let two = T::from_int(2);
        let three = T::from_int(3);
        let ui = u.recip();
        let ui2 = ui.square();
        let ui3 = ui2.clone() * &ui;
        let n1 = a1.clone() + &(two.clone() * s);
        let n2 = a2.clone() - &(s.clone() * a1) + &(three.clone() * r) - &s.square();
        let n3 = a3.clone() + &(r.clone() * a1) + &(two.clone() * t);
        let n4 = a4.clone() - &(s.clone() * a3) + &(two.clone() * r * a2) - &((t.clone() + &(r.clone() * s)) * a1)
            + &(three * &r.square())
            - &(two * s * t);
        let n6 = a6.clone() + &(r.clone() * a4) + &(r.square() * a2) + &r.pow(3)
            - &(t.clone() * a3)
            - &t.square()
            - &(r.clone() * t * a1);
        let a = [n1 * &ui, n2 * &ui2, n3 * &ui3, n4 * &ui2.square(), n6 * &ui3.square()];
        let disc = self.disc.clone() * &ui2.pow(6);
        EllipticCurve { a, disc, j: self.j.clone() }
    }

    /// The change to the short model `y² = x³ − 27c₄x − 54c₆`.
    pub fn to_short_change(&self) -> CoordChange<T> {
        let [b2, ..] = self.b_invariants();
        let half = T::from_rational(&Rational::new(1.into(), 2.into()));
        CoordChange {
            u: T::from_rational(&Rational::new(1.into(), 6.into())),
            r: -(b2.clone() / &T::from_int(12)),
            s: -(self.a[0].clone() * &half),
            t: self.a[0].clone() * &b2 / &T::from_int(24) - &(self.a[2].clone() * &half),
        }
    }

    /// The short model `y² = x³ − 27c₄x − 54c₆` and the change reaching it.
    pub fn to_short(&self) -> (EllipticCurve<T>, CoordChange<T>) {
        let c = self.to_short_change();
        (self.change(&c), c)
    }

    /// `y² = x³ + AU²x + BU³` for a short curve; `(x, y) ↦ (Ux, U^{3/2}y)`
    /// identifies it with the original over any field containing `√U`.
    pub fn quadratic_twist(&self, u: &T) -> Result<EllipticCurve<T>, CurveError> {
        let (a, b) = self.short_coeffs()?;
        if u.is_zero() {
            return Err(CurveError::InvalidInput("twist by zero".into()));
        }
        EllipticCurve::short(a.clone() * &u.square(), b.clone() * &u.pow(3))
    }

    /// Left side minus right side of the curve equation at `(x, y)`.
    fn residual(&self, x: &T, y: &T) -> T {
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs = y.clone() * &(y.clone() + &(a1.clone() * x) + a3);
        let rhs = ((x.clone() + a2) * x + a4) * x + a6;
        lhs - &rhs
    }

    pub fn contains(&self, p: &CurvePoint<T>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => self.residual(x, y).is_zero(),
        }
    }

    /// The point `(x, y)`, checked to lie on the curve.
    pub fn point(&self, x: T, y: T) -> Result<CurvePoint<T>, CurveError> {
        let p = CurvePoint::Affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    /// The right-hand side `x³ + a₂x² + a₄x + a₆` plus `((a₁x + a₃)/2)²`,
    /// whose square roots give the two points above `x`.
    pub fn y_squared_shifted(&self, x: &T) -> T {
        let [a1, a2, a3, a4, a6] = &self.a;
        let h = (a1.clone() * x + a3) / &T::from_int(2);
        ((x.clone() + a2) * x + a4) * x + a6 + &h.square()
    }

    pub fn neg(&self, p: &CurvePoint<T>) -> CurvePoint<T> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                CurvePoint::Affine(x.clone(), -y.clone() - &(self.a[0].clone() * x) - &self.a[2])
            }
        }
    }

    pub fn add(&self, p: &CurvePoint<T>, q: &CurvePoint<T>) -> CurvePoint<T> {
        let (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) = (p, q) else {
            return if p.is_infinity() { q.clone() } else { p.clone() };
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let (lambda, nu) = if x1 == x2 {
            let denom = y1.clone() + y2 + &(a1.clone() * x2) + a3;
            if denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let two = T::from_int(2);
            let d = two.clone() * y1 + &(a1.clone() * x1) + a3;
            let num = T::from_int(3) * &x1.square() + &(two.clone() * a2 * x1) + a4 - &(a1.clone() * y1);
            let nu = -x1.pow(3) + &(a4.clone() * x1) + &(two * a6) - &(a3.clone() * y1);
            (num / &d, nu / &d)
        } else {
            let dx = x2.clone() - x1;
            ((y2.clone() - y1) / &dx, (y1.clone() * x2 - &(y2.clone() * x1)) / &dx)
        };
        let x3 = lambda.square() + &(a1.clone() * &lambda) - a2 - x1 - x2;
        let y3 = -((lambda + a1) * &x3) - &nu - a3;
        CurvePoint::Affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint<T>) -> CurvePoint<T> {
        self.add(p, p)
    }

    /// `n·P` by double-and-add; negative `n` negates.
    pub fn mul(&self, n: i64, p: &CurvePoint<T>) -> CurvePoint<T> {
        let mut k = n.unsigned_abs();
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    /// The order of `p` if it is at most `bound`.
    pub fn order(&self, p: &CurvePoint<T>, bound: u32) -> Option<u32> {
        let mut q = p.clone();
        for n in 1..=bound {
            if q.is_infinity() {
                return Some(n);
            }
            q = self.add(&q, p);
        }
        None
    }

    /// Validating versions of the group law.
    pub fn checked_add(&self, p: &CurvePoint<T>, q: &CurvePoint<T>) -> Result<CurvePoint<T>, CurveError> {
        if !self.contains(p) || !self.contains(q) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(self.add(p, q))
    }

    pub fn checked_mul(&self, n: i64, p: &CurvePoint<T>) -> Result<CurvePoint<T>, CurveError> {
        if !self.contains(p) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(self.mul(n, p))
    }
}

fn b_invariants<T: Scalar>(a: &[T; 5]) -> [T; 4] {
    let [a1, a2, a3, a4, a6] = a;
    let four = T::from_int(4);
    let b2 = a1.square() + &(four.clone() * a2);
    let b4 = T::from_int(2) * a4 + &(a1.clone() * a3);
    let b6 = a3.square() + &(four.clone() * a6);
    let b8 =
        a1.square() * a6 + &(four * a2 * a6) - &(a1.clone() * a3 * a4) + &(a2.clone() * &a3.square()) - &a4.square();
    [b2, b4, b6, b8]
}

impl EllipticCurve<Rational> {
    /// A short model `y² = x³ + Ax + B` with integral `A, B`, reduced at the
    /// primes up to `10⁴` (no `p⁴ | A` together with `p⁶ | B`), and the
    /// change reaching it.
    ///
    /// Division polynomials of an integral model have leading coefficient
    /// `n` or `n/2`, which keeps their roots cheap to resolve numerically.
    pub fn integral_short(&self) -> (EllipticCurve<Rational>, CoordChange<Rational>) {
        const LIMIT: u32 = 10_000;
        let (short, to_short) = self.to_short();
        let (a, b) = (short.a[3].clone(), short.a[4].clone());
        let (fa, ca) = trial_factor(a.denom(), LIMIT);
        let (fb, cb) = trial_factor(b.denom(), LIMIT);
        let mut d = num_integer::lcm(ca, cb);
        let exponent = |fs: &[(u32, u32)], p: u32, w: u32| fs.iter().find(|f| f.0 == p).map_or(0, |f| f.1.div_ceil(w));
        let mut primes: Vec<u32> = fa.iter().chain(&fb).map(|f| f.0).collect();
        primes.sort_unstable();
        primes.dedup();
        for p in primes {
            d *= BigInt::from(p).pow(exponent(&fa, p, 4).max(exponent(&fb, p, 6)));
        }
        let dq = Rational::from_integer(d);
        let (mut ai, mut bi) = ((a * dq.pow(4)).to_integer(), (b * dq.pow(6)).to_integer());
        let mut e = BigInt::one();
        let (common, _) = trial_factor(&num_integer::gcd(ai.clone(), bi.clone()), LIMIT);
        for (p, _) in common {
            let (p4, p6) = (BigInt::from(p).pow(4), BigInt::from(p).pow(6));
            while (&ai % &p4).is_zero() && (&bi % &p6).is_zero() && !(ai.is_zero() && bi.is_zero()) {
                ai /= &p4;
                bi /= &p6;
                e *= p;
            }
        }
        let change = CoordChange::scaling(Rational::from_integer(e) / dq);
        let model = EllipticCurve::short(Rational::from_integer(ai), Rational::from_integer(bi))
            .expect("a rescaled nonsingular curve is nonsingular");
        debug_assert_eq!(short.change(&change), model);
        (model, to_short.then(&change))
    }
}

impl Serialize for EllipticCurve<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EllipticCurve", 2)?;
        st.serialize_field("base", "Q")?;
        let a: Vec<String> = self.a.iter().map(format_rational).collect();
        st.serialize_field("a", &a)?;
        st.end()
    }
}

impl Serialize for EllipticCurve<FieldElement> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EllipticCurve", 2)?;
        match self.a.iter().find_map(FieldElement::field) {
            Some(k) => st.serialize_field("base", k)?,
            None => st.serialize_field("base", "Q")?,
        }
        st.serialize_field("a", &self.a)?;
        st.end()
    }
}

impl<T: Serialize> Serialize for CurvePoint<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CurvePoint::Infinity => s.serialize_str("O"),
            CurvePoint::Affine(x, y) => (x, y).serialize(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn curve(a: [i64; 5]) -> EllipticCurve<Rational> {
        EllipticCurve::new(a.map(int)).unwrap()
    }

    fn pt(x: i64, y: i64) -> CurvePoint<Rational> {
        CurvePoint::Affine(int(x), int(y))
    }

    #[test]
    fn invariants_of_49a3_and_49a4() {
        let e3 = curve([1, -1, 0, -107, 552]);
        assert_eq!(e3.j_invariant(), &int(-3375));
        assert_eq!(e3.discriminant(), &int(-40353607));
        let e4 = curve([1, -1, 0, -1822, 30393]);
        assert_eq!(e4.j_invariant(), &int(16581375));
        assert_eq!(curve([0, 0, 0, 0, 1]).j_invariant(), &int(0));
        assert_eq!(EllipticCurve::short(int(0), int(0)), Err(CurveError::Singular));
    }

    #[test]
    fn group_law_on_x3_plus_1() {
        let e = curve([0, 0, 0, 0, 1]);
        let p = pt(2, 3);
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.mul(2, &p), pt(0, 1));
        assert_eq!(e.mul(3, &p), pt(-1, 0));
        assert_eq!(e.mul(6, &p), CurvePoint::Infinity);
        assert_eq!(e.mul(-1, &p), pt(2, -3));
        assert_eq!(e.order(&p, 20), Some(6));
        assert_eq!(e.checked_add(&pt(1, 1), &p), Err(CurveError::NotOnCurve));
    }

    #[test]
    fn coordinate_changes_compose_and_invert() {
        let e = curve([1, -1, 0, -107, 552]);
        let c = CoordChange { u: rat(2, 3), r: int(5), s: int(-1), t: rat(1, 2) };
        let d = CoordChange { u: int(3), r: int(-2), s: rat(1, 3), t: int(7) };
        assert_eq!(e.change(&c).change(&d), e.change(&c.then(&d)));
        assert_eq!(e.change(&c).change(&c.inverse()), e);
        let p = e.point(int(-12), int(6)).unwrap();
        let f = e.change(&c);
        assert!(f.contains(&c.apply(&p)));
        assert_eq!(c.inverse().apply(&c.apply(&p)), p);
        assert_eq!(e.order(&p, 10), Some(2));
    }

    #[test]
    fn short_model() {
        let e = curve([1, -1, 0, -107, 552]);
        let (s, c) = e.to_short();
        assert!(s.is_short());
        assert_eq!(s.a4(), &(int(-27) * e.c4()));
        assert_eq!(s.a6(), &(int(-54) * e.c6()));
        assert_eq!(s.j_invariant(), e.j_invariant());
        let t = c.apply(&pt(-12, 6));
        assert!(s.contains(&t));
        assert_eq!(c.inverse().apply(&t), pt(-12, 6));
    }

    #[test]
    fn twists() {
        let e = curve([0, 0, 0, -2, 3]);
        assert_eq!(e.quadratic_twist(&int(1)).unwrap(), e);
        let t = e.quadratic_twist(&int(-7)).unwrap();
        assert_eq!(t.j_invariant(), e.j_invariant());
        assert!(e.quadratic_twist(&int(0)).is_err());
        assert_eq!(curve([1, 0, 0, 0, 1]).quadratic_twist(&int(2)), Err(CurveError::NotShort));
    }
}
