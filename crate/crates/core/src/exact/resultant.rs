use crate::scalar::Scalar;
use crate::Rational;

use super::{ExactError, Poly};

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let (da, db) = (a.degree().unwrap_or(0), b.degree().expect("nonzero divisor"));
    let lc = b.lc().unwrap().clone();
    let mut r = a.coeffs().to_vec();
    for k in (0..=da.saturating_sub(db)).rev() {
        if r.len() <= k + db {
            for c in r.iter_mut() {
                *c = c.clone() * &lc;
            }
            continue;
        }
        let lead = r[k + db].clone();
        for c in r.iter_mut() {
            *c = c.clone() * &lc;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            r[k + j] = r[k + j].clone() - lead.clone() * bc;
        }
        r.truncate(k + db);
    }
    Poly::new(r)
}

/// Resultant by the subresultant pseudo-remainder sequence.
///
/// Works over any integral domain, so coefficient growth stays polynomial
/// even though every division performed is exact.
pub fn resultant<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Result<T, ExactError> {
    if f.is_zero() && g.is_zero() {
        return Err(ExactError::InvalidInput("resultant of two zero polynomials".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(T::zero());
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        negate = a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1;
    }
    if b.degree() == Some(0) {
        let r = b.lc().unwrap().pow(a.degree().unwrap() as u32);
        return Ok(if negate { -r } else { r });
    }
    let (mut gg, mut h) = (T::one(), T::one());
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = gg.clone() * &h.pow(delta);
        b = r.scale(&divisor.recip());
        gg = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => gg.pow(d) / &h.pow(d - 1),
        };
        match b.degree() {
            None => return Ok(T::zero()),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().unwrap() as u32;
    let lb = b.lc().unwrap().clone();
    let res = if da == 1 { lb } else { lb.pow(da) / &h.pow(da - 1) };
    Ok(if negate { -res } else { res })
}

/// Resultant as the determinant of the Sylvester matrix.
///
/// Cubic in the matrix size; kept as an independent cross-check of
/// [`resultant`].
pub fn sylvester_resultant<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Result<T, ExactError> {
    if f.is_zero() && g.is_zero() {
        return Err(ExactError::InvalidInput("resultant of two zero polynomials".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(T::zero());
    }
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return Ok(T::one());
    }
    let mut rows = vec![vec![T::zero(); size]; size];
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(determinant(rows))
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant<T: Scalar>(mut rows: Vec<Vec<T>>) -> T {
    let n = rows.len();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return T::zero();
        };
        if p != col {
            rows.swap(p, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det = det * &pivot;
        let inv = pivot.recip();
        let (top, below) = rows.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = row[col].clone() * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - p.clone() * &factor;
            }
        }
    }
    det
}

/// `(-1)^(n(n-1)/2) · Res(f, f') / lc(f)` for `n = deg f ≥ 2`.
pub fn discriminant(f: &Poly<Rational>) -> Result<Rational, ExactError> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(ExactError::InvalidInput("discriminant needs degree at least 2".into())),
    };
    let r = resultant(f, &f.derivative())? / f.lc().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    type P = Poly<Rational>;

    #[test]
    fn resultant_examples() {
        let f = P::from_desc(&[1, 0, 0, -2]);
        let g = P::from_desc(&[3, 0, 0]);
        assert_eq!(resultant(&f, &g).unwrap(), int(108));
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), int(108));
        assert_eq!(resultant(&f, &P::one()).unwrap(), int(1));
        let shared = resultant(&P::from_desc(&[1, 0, -1]), &P::from_desc(&[1, -1])).unwrap();
        assert_eq!(shared, int(0));
        assert!(resultant(&P::zero(), &P::zero()).is_err());
        assert_eq!(resultant(&P::zero(), &f).unwrap(), int(0));
    }

    #[test]
    fn resultant_with_constant_and_linear() {
        let f = P::from_desc(&[2, 3, 1]);
        assert_eq!(resultant(&P::from_ints(&[5]), &f).unwrap(), int(25));
        // Res(f, x - a) = (-1)^deg f · f(a)
        let lin = P::from_desc(&[1, -3]);
        assert_eq!(resultant(&f, &lin).unwrap(), f.eval(&int(3)));
        assert_eq!(resultant(&lin, &f).unwrap(), f.eval(&int(3)));
    }

    #[test]
    fn resultant_with_gaps_in_degree_sequence() {
        let f = P::from_desc(&[1, 0, 0, 0, 0, 3, -1]);
        let g = P::from_desc(&[2, 0, 0, 7]);
        assert_eq!(resultant(&f, &g).unwrap(), sylvester_resultant(&f, &g).unwrap());
        let h = P::new(vec![rat(1, 2), int(0), rat(-5, 3), int(0), int(2)]);
        assert_eq!(resultant(&f, &h).unwrap(), sylvester_resultant(&f, &h).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&P::from_desc(&[1, 0, 0, -2])).unwrap(), int(-108));
        assert_eq!(discriminant(&P::from_desc(&[1, 2, -1, -1])).unwrap(), int(49));
        let f0 = P::from_desc(&[1, -33, 219, -323]);
        assert_eq!(discriminant(&f0).unwrap(), int(2985984));
        assert_eq!(discriminant(&P::from_desc(&[1, 0, -4, -1])).unwrap(), int(229));
        assert_eq!(discriminant(&P::from_desc(&[2, 3, 1])).unwrap(), int(1));
        assert_eq!(discriminant(&P::from_desc(&[1, -3, -2])).unwrap(), int(17));
        assert_eq!(discriminant(&P::from_desc(&[1, 0, -3, -2])).unwrap(), int(0));
        assert!(discriminant(&P::from_desc(&[1, 1])).is_err());
    }
}
