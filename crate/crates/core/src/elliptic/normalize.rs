use crate::scalar::Scalar;
use crate::Rational;

use super::{CoordChange, CurveError, CurvePoint, EllipticCurve};

/// The model singled out by a point `P` of order 7.
#[derive(Clone, Debug)]
pub struct NormalizedModel<T> {
    /// The model over ℚ.
    pub curve: EllipticCurve<Rational>,
    /// The change of variables from the input model.
    pub change: CoordChange<T>,
    /// The image of `P`.
    pub point: CurvePoint<T>,
}

/// The line `y = λx + ν` through two points with distinct x-coordinates.
fn line<T: Scalar>(p: &CurvePoint<T>, q: &CurvePoint<T>) -> Result<(T, T), CurveError> {
    let (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) = (p, q) else {
        return Err(CurveError::InvalidInput("point at infinity on a chord".into()));
    };
    let dx = x2.clone() - x1;
    if dx.is_zero() {
        return Err(CurveError::InvalidInput("vertical chord".into()));
    }
    let lambda = (y2.clone() - y1) / &dx;
    let nu = y1.clone() - &(lambda.clone() * x1);
    Ok((lambda, nu))
}

fn on_line<T: Scalar>(l: &(T, T), p: &CurvePoint<T>) -> bool {
    match p {
        CurvePoint::Affine(x, y) => (l.0.clone() * x + &l.1) == *y,
        CurvePoint::Infinity => false,
    }
}

/// Moves `P, 2P, 4P` onto `y = 0` and `3P, 5P, 6P` onto `y = −x`.
///
/// Since `P + 2P + 4P = O` and `3P + 5P + 6P = O`, each triple is
/// collinear. Translating the intersection `(x₀, y₀)` of the two lines to
/// the origin and taking `s = λ₁`, `u = λ₁ − λ₂` gives the unique model with
/// that shape. For a curve over a cubic field with torsion ℤ/2 × ℤ/14 the
/// result is defined over ℚ; anything else is reported as a contract
/// violation.
pub fn bn_normalize<T: Scalar>(e: &EllipticCurve<T>, p: &CurvePoint<T>) -> Result<NormalizedModel<T>, CurveError> {
    if !e.contains(p) {
        return Err(CurveError::NotOnCurve);
    }
    if e.order(p, 7) != Some(7) {
        return Err(CurveError::InvalidInput("point does not have order 7".into()));
    }
    let m: Vec<CurvePoint<T>> = (0..=6).map(|k| e.mul(k, p)).collect();
    let l1 = line(&m[1], &m[2])?;
    let l2 = line(&m[3], &m[5])?;
    if !on_line(&l1, &m[4]) || !on_line(&l2, &m[6]) {
        return Err(CurveError::Contract("multiples of P are not collinear".into()));
    }
    let u = l1.0.clone() - &l2.0;
    let x0 = (l2.1.clone() - &l1.1) / &u;
    let y0 = l1.0.clone() * &x0 + &l1.1;
    let change = CoordChange { u, r: x0, s: l1.0.clone(), t: y0 };
    let model = e.change(&change);
    let curve = model
        .to_rational()
        .ok_or_else(|| CurveError::Contract(format!("normalized model is not rational: {:?}", model.coeffs())))?;
    let point = change.apply(p);
    Ok(NormalizedModel { curve, change, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn rational_seven_torsion_is_normalized_over_q() {
        // The Kubert curve y² - (u²-u-1)xy - (u³-u²)y = x³ - (u³-u²)x² at
        // u = 2, with P = (0, 0).
        let (a1, a3) = (int(-1), int(-4));
        let e = EllipticCurve::new([a1, int(-4), a3, int(0), int(0)]).unwrap();
        let p = CurvePoint::Affine(int(0), int(0));
        assert_eq!(e.order(&p, 10), Some(7));
        let n = bn_normalize(&e, &p).unwrap();
        assert_eq!(n.curve.j_invariant(), e.j_invariant());
        let n2 = bn_normalize(&n.curve, &n.point).unwrap();
        assert_eq!(n2.curve, n.curve);
        assert_eq!(n2.change, CoordChange::identity());
        assert!(bn_normalize(&e, &e.mul(7, &p)).is_err());
    }
}
