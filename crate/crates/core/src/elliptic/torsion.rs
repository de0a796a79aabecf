use rayon::prelude::*;

use crate::cubic_field::BaseField;
use crate::exact::Poly;
use crate::{Rational, RationalPoly};
use num_traits::Zero;

use super::{CoordChange, CurveError, CurvePoint, DivisionPolynomials, EllipticCurve, TorsionGroup, MAZUR, NAJMAN};

/// Primes that can divide the order of a torsion point of a rational curve
/// over a field of degree at most three, with the largest exponent the
/// classification allows for a cyclic factor.
const PRIME_CAPS: [(u32, u32); 5] = [(2, 3), (3, 2), (5, 1), (7, 1), (13, 1)];

/// Torsion group and points of a rational curve over a base field.
#[derive(Clone, Debug)]
pub struct TorsionData<E> {
    pub group: TorsionGroup,
    /// Every torsion point, on the model the curve was given in.
    pub points: Vec<CurvePoint<E>>,
}

/// The ℓ-primary torsion: points (on the short model) and the exponents
/// `(α, β)` of `ℤ/ℓ^α × ℤ/ℓ^β`.
struct Primary<E> {
    prime: u32,
    points: Vec<CurvePoint<E>>,
    exps: (u32, u32),
}

fn primary_part<F: BaseField>(
    a: &Rational,
    b: &Rational,
    k: &F,
    prime: u32,
    cap: u32,
) -> Result<Primary<F::Elem>, CurveError> {
    let mut psi = DivisionPolynomials::new(a.clone(), b.clone());
    let rhs = psi.two_torsion();
    let mut points = vec![CurvePoint::Infinity];
    let mut exps = (0, 0);
    let mut prev: RationalPoly = Poly::one();
    for level in 1..=cap {
        let n = prime.pow(level);
        // The even polynomials omit the factor ψ₂, whose roots are
        // handled by the 2-torsion cubic at the first level.
        let full = if n == 2 { rhs.clone() } else { psi.get(n) };
        let fresh = full.exact_div(&prev).expect("lower division polynomials divide higher ones");
        prev = if n == 2 { psi.get(2) } else { full };
        let before = points.len();
        for x in k.roots(&fresh)? {
            let y2 = rhs.eval_in(&x);
            let Some(y) = k.sqrt(&y2)? else { continue };
            if y.is_zero() {
                points.push(CurvePoint::Affine(x, y));
            } else {
                points.push(CurvePoint::Affine(x.clone(), -y.clone()));
                points.push(CurvePoint::Affine(x, y));
            }
        }
        let grew = points.len() / before;
        if grew == 1 {
            break;
        }
        if points.len() % before != 0 || (grew != prime as usize && grew != (prime * prime) as usize) {
            return Err(CurveError::Contract(format!(
                "{}-power torsion of order {} is not a group",
                prime,
                points.len()
            )));
        }
        exps.1 += 1;
        if grew == (prime * prime) as usize {
            exps.0 += 1;
        }
    }
    Ok(Primary { prime, points, exps })
}

/// The groups a rational curve can have over a field of this degree.
fn allowed(k_degree: usize) -> &'static [TorsionGroup] {
    if k_degree == 1 {
        &MAZUR
    } else {
        &NAJMAN
    }
}

fn partial_group<E>(parts: &[Primary<E>]) -> TorsionGroup {
    let (mut a, mut b) = (1u32, 1u32);
    for p in parts {
        a *= p.prime.pow(p.exps.0);
        b *= p.prime.pow(p.exps.1);
    }
    TorsionGroup::new(a, b)
}

/// The ℓ-primary parts on the integral short model, and the change back.
type Primaries<E> = (Vec<Primary<E>>, CoordChange<Rational>);

/// The ℓ-primary parts. ℓ = 13 is searched only when the classification
/// leaves room for it next to the parts already found: ψ₁₃ has degree 84,
/// and the only listed group with a point of order 13 is ℤ/13 itself.
fn primaries<F: BaseField>(e: &EllipticCurve<Rational>, k: &F) -> Result<Primaries<F::Elem>, CurveError> {
    let (short, change) = e.integral_short();
    let (a, b) = short.short_coeffs()?;
    let (cheap, costly): (Vec<_>, Vec<_>) = PRIME_CAPS.iter().partition(|(p, _)| *p != 13);
    let mut parts = cheap.par_iter().map(|&&(p, cap)| primary_part(a, b, k, p, cap)).collect::<Result<Vec<_>, _>>()?;
    for &(p, cap) in costly {
        let found = partial_group(&parts);
        if allowed(k.degree()).iter().any(|g| g.b % p == 0 && found.divides(g)) {
            parts.push(primary_part(a, b, k, p, cap)?);
        }
    }
    Ok((parts, change))
}

fn assemble<E>(parts: &[Primary<E>], k_degree: usize) -> Result<TorsionGroup, CurveError> {
    let group = partial_group(parts);
    if !allowed(k_degree).contains(&group) {
        return Err(CurveError::Contract(format!("torsion {group} is outside the classification")));
    }
    Ok(group)
}

/// The torsion subgroup of a rational curve over `k`.
///
/// Each ℓ-primary part is found by extracting roots of `ψ_{ℓ^i}/ψ_{ℓ^(i-1)}`
/// in `k` and testing the y-coordinates for squareness, one level at a time.
pub fn torsion_subgroup<F: BaseField>(e: &EllipticCurve<Rational>, k: &F) -> Result<TorsionGroup, CurveError> {
    let (parts, _) = primaries(e, k)?;
    assemble(&parts, k.degree())
}

/// The torsion subgroup together with all of its points.
pub fn torsion_points<F: BaseField>(e: &EllipticCurve<Rational>, k: &F) -> Result<TorsionData<F::Elem>, CurveError> {
    let (parts, change) = primaries(e, k)?;
    let group = assemble(&parts, k.degree())?;
    let short = e.integral_short().0.map(|c| k.embed(c))?;
    let mut points = vec![CurvePoint::Infinity];
    for part in &parts {
        let mut next = Vec::with_capacity(points.len() * part.points.len());
        for p in &points {
            for q in &part.points {
                next.push(short.add(p, q));
            }
        }
        points = next;
    }
    let back = change.inverse().map(|c| k.embed(c));
    let points = points.iter().map(|p| back.apply(p)).collect();
    Ok(TorsionData { group, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic_field::{CubicField, RationalField};
    use crate::exact::int;

    fn curve(a: [i64; 5]) -> EllipticCurve<Rational> {
        EllipticCurve::new(a.map(int)).unwrap()
    }

    #[test]
    fn torsion_over_q() {
        let q = RationalField;
        assert_eq!(torsion_subgroup(&curve([0, 0, 0, 0, 1]), &q).unwrap(), TorsionGroup::cyclic(6));
        assert_eq!(torsion_subgroup(&curve([1, -1, 0, -107, 552]), &q).unwrap(), TorsionGroup::cyclic(2));
        // y² = x³ - x has full 2-torsion.
        assert_eq!(torsion_subgroup(&curve([0, 0, 0, -1, 0]), &q).unwrap(), TorsionGroup::new(2, 2));
        // 11a3: y² + y = x³ - x² has a point of order 5.
        assert_eq!(torsion_subgroup(&curve([0, -1, 1, 0, 0]), &q).unwrap(), TorsionGroup::cyclic(5));
    }

    #[test]
    fn points_of_x3_plus_1() {
        let data = torsion_points(&curve([0, 0, 0, 0, 1]), &RationalField).unwrap();
        assert_eq!(data.points.len(), 6);
        let e = curve([0, 0, 0, 0, 1]);
        for (x, y) in [(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)] {
            assert!(data.points.contains(&CurvePoint::Affine(int(x), int(y))));
            assert!(e.mul(6, &CurvePoint::Affine(int(x), int(y))).is_infinity());
        }
    }

    #[test]
    fn growth_over_cyclic_field() {
        let k = CubicField::new(RationalPoly::from_desc(&[1, 2, -1, -1])).unwrap();
        let e = curve([1, -1, 0, -107, 552]);
        let data = torsion_points(&e, &k).unwrap();
        assert_eq!(data.group, TorsionGroup::cyclic(14));
        let ek = e.map(|c| k.embed(c)).unwrap();
        for p in &data.points {
            assert!(ek.contains(p));
            assert!(ek.mul(14, p).is_infinity());
        }
    }
}
