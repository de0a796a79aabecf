use std::collections::HashMap;

use crate::exact::Poly;
use crate::scalar::Scalar;

use super::{CurveError, EllipticCurve};

/// Division polynomials of `y² = x³ + Ax + B` as polynomials in `x`.
///
/// For odd `n` this is `ψₙ`; for even `n` it is `ψₙ/ψ₂` with `ψ₂ = 2y`,
/// so its roots are the x-coordinates of points with `nP = O`, `2P ≠ O`.
/// Values are cached, since the recurrence reuses neighbouring indices.
pub struct DivisionPolynomials<T: Scalar> {
    a: T,
    b: T,
    /// `ψ₂² = 4(x³ + Ax + B)`.
    s: Poly<T>,
    cache: HashMap<u32, Poly<T>>,
}

impl<T: Scalar> DivisionPolynomials<T> {
    pub fn new(a: T, b: T) -> Self {
        let four = T::from_int(4);
        let s = Poly::new(vec![four.clone() * &b, four.clone() * &a, T::zero(), four]);
        DivisionPolynomials { a, b, s, cache: HashMap::new() }
    }

    pub fn for_curve(e: &EllipticCurve<T>) -> Result<Self, CurveError> {
        let (a, b) = e.short_coeffs()?;
        Ok(Self::new(a.clone(), b.clone()))
    }

    /// `x³ + Ax + B`, whose roots are the x-coordinates of 2-torsion points.
    pub fn two_torsion(&self) -> Poly<T> {
        Poly::new(vec![self.b.clone(), self.a.clone(), T::zero(), T::one()])
    }

    pub fn get(&mut self, n: u32) -> Poly<T> {
        if let Some(p) = self.cache.get(&n) {
            return p.clone();
        }
        let p = self.compute(n);
        self.cache.insert(n, p.clone());
        p
    }

    fn compute(&mut self, n: u32) -> Poly<T> {
        let c = |k: i64| T::from_int(k);
        let (a, b) = (&self.a, &self.b);
        match n {
            0 => Poly::zero(),
            1 | 2 => Poly::one(),
            3 => Poly::new(vec![-a.square(), c(12) * b, c(6) * a, T::zero(), c(3)]),
            4 => Poly::new(vec![
                c(-16) * &b.square() - &(c(2) * &a.pow(3)),
                c(-8) * a * b,
                c(-10) * &a.square(),
                c(40) * b,
                c(10) * a,
                T::zero(),
                c(2),
            ]),
            _ if n % 2 == 1 => {
                let m = n / 2;
                let (hm2, hm, hm1, hp1) = (self.get(m + 2), self.get(m), self.get(m - 1), self.get(m + 1));
                let s2 = &self.s * &self.s;
                let first = &(&hm2 * &hm) * &(&hm * &hm);
                let second = &(&hm1 * &hp1) * &(&hp1 * &hp1);
                if m.is_multiple_of(2) {
                    &(&s2 * &first) - &second
                } else {
                    &first - &(&s2 * &second)
                }
            }
            _ => {
                let m = n / 2;
                let (hm2, hm1, hm, hp1, hp2) =
                    (self.get(m - 2), self.get(m - 1), self.get(m), self.get(m + 1), self.get(m + 2));
                let inner = &(&hp2 * &(&hm1 * &hm1)) - &(&hm2 * &(&hp1 * &hp1));
                &hm * &inner
            }
        }
    }
}

impl<T: Scalar> EllipticCurve<T> {
    /// The x-only division polynomial of a short curve (see [`DivisionPolynomials`]).
    pub fn division_polynomial(&self, n: u32) -> Result<Poly<T>, CurveError> {
        if n == 0 {
            return Err(CurveError::InvalidInput("division polynomial of index 0".into()));
        }
        Ok(DivisionPolynomials::for_curve(self)?.get(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational_roots};
    use crate::{Rational, RationalPoly};

    #[test]
    fn psi3_of_x3_plus_1() {
        let e = EllipticCurve::short(int(0), int(1)).unwrap();
        assert_eq!(e.division_polynomial(3).unwrap(), RationalPoly::from_desc(&[3, 0, 0, 12, 0]));
    }

    #[test]
    fn degrees() {
        let mut d = DivisionPolynomials::new(int(-2), int(3));
        for n in 1..=13u32 {
            let expected = if n % 2 == 1 { (n * n - 1) / 2 } else { (n * n - 4) / 2 };
            assert_eq!(d.get(n).degree(), Some(expected as usize), "n = {n}");
            assert_eq!(d.get(n).lc(), Some(&int(if n % 2 == 1 { n as i64 } else { n as i64 / 2 })));
        }
    }

    #[test]
    fn divisibility() {
        let mut d = DivisionPolynomials::new(int(-2), int(3));
        for (m, n) in [(3, 6), (3, 9), (2, 8), (4, 8), (5, 10), (3, 12)] {
            assert!(d.get(m).divides(&d.get(n)), "psi_{m} | psi_{n}");
        }
    }

    #[test]
    fn roots_match_group_law() {
        // y² = x³ + 1: the 3-torsion points have x = 0.
        let e = EllipticCurve::short(int(0), int(1)).unwrap();
        let r: Vec<Rational> = rational_roots(&e.division_polynomial(3).unwrap()).unwrap();
        assert!(r.contains(&int(0)));
        assert_eq!(e.mul(3, &e.point(int(0), int(1)).unwrap()), super::super::CurvePoint::Infinity);
        // 6-torsion point (2, 3) has 2P ≠ O, so x = 2 is a root of the even cofactor.
        assert!(e.division_polynomial(6).unwrap().eval(&int(2)) == int(0));
    }
}
