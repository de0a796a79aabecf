//! Exact roots of rational polynomials inside a cubic field.
//!
//! A root β ∈ K of a squarefree integer polynomial g generates K, so its
//! three conjugates are roots of g forming a rational cubic factor, and its
//! images under the three embeddings of K are exactly those conjugates.
//! Numerically we look for triples of roots whose elementary symmetric
//! functions are integers, confirm the factor exactly, and then solve for
//! the power-basis coordinates by interpolation over the embeddings. With
//! `y = a_n·β` an algebraic integer, `D·y ∈ ℤ[θ]` for the denominator bound
//! `D`, so the coordinates are recovered by rounding and verified exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{integer_candidates, rational_nth_root, rational_roots, refine, Poly, Refined};
use crate::numeric::{self, log2_sum, Complex, Nearest, RootApprox};
use crate::scalar::Scalar;
use crate::{Rational, RationalPoly};

use super::{CubicField, FieldElement, FieldError};

/// A numeric value with a bound on its error, both as base-2 logarithms
/// where a magnitude is needed.
struct Approx {
    z: Complex,
    err: f64,
}

impl Approx {
    fn rounding(&self, bits: usize) -> f64 {
        self.z.log2_abs() - bits as f64 + 8.0
    }

    fn total_err(&self, bits: usize) -> f64 {
        log2_sum(self.err, self.rounding(bits))
    }

    fn add(&self, o: &Approx, bits: usize) -> Approx {
        Approx { z: &self.z + &o.z, err: log2_sum(self.total_err(bits), o.total_err(bits)) }
    }

    fn mul(&self, o: &Approx, bits: usize) -> Approx {
        let e = log2_sum(self.total_err(bits) + o.z.log2_abs(), o.total_err(bits) + self.z.log2_abs());
        Approx { z: &self.z * &o.z, err: log2_sum(e, self.total_err(bits) + o.total_err(bits)) }
    }
}

enum Outcome<T> {
    Decided(T),
    Unsure,
}

/// Decides whether an approximate complex value is a (real) integer.
fn integer_value(a: &Approx, bits: usize) -> Nearest {
    let err = a.total_err(bits);
    if numeric::log2_abs(&a.z.im) > err + 1.0 {
        return if err > -3.0 { Nearest::Unsure } else { Nearest::NotInteger };
    }
    numeric::nearest_integer(&a.z.re, err)
}

impl CubicField {
    /// The distinct roots of `f` lying in the field.
    ///
    /// Fails with [`FieldError::Undecided`] rather than reporting absence
    /// when the numerical stage cannot separate the candidates at the
    /// maximum precision.
    pub fn roots(&self, f: &RationalPoly) -> Result<Vec<FieldElement>, FieldError> {
        if f.is_zero() {
            return Err(FieldError::InvalidInput("roots of the zero polynomial".into()));
        }
        let mut out = Vec::new();
        let mut f = f.clone();
        if f.degree().unwrap_or(0) > 0 && f.coeff(0).is_zero() {
            out.push(self.from_rational(&Rational::zero()));
            while f.coeff(0).is_zero() {
                f = f.div_rem(&Poly::x()).0;
            }
        }
        if f.degree().unwrap_or(0) < 3 {
            let mut r = rational_roots(&f)?;
            r.dedup();
            out.extend(r.iter().map(|q| self.from_rational(q)));
            return Ok(out);
        }
        // Try the input as given first: separated roots certify that it is
        // squarefree, and the gcd with f' is costly at high degree.
        let g = f.primitive_integer_coeffs();
        let found = match refine(&g, self.bits(), false, |a| self.decide(&f, &g, a)) {
            Refined::Ambiguous => {
                let f = if f.is_squarefree() { f.clone() } else { f.squarefree_part() };
                let g = f.primitive_integer_coeffs();
                refine(&g, self.bits(), true, |a| self.decide(&f, &g, a))
            }
            other => other,
        };
        match found {
            Refined::Found(roots) => {
                out.extend(roots);
                Ok(out)
            }
            _ => Err(FieldError::Undecided(format!(
                "roots of a degree-{} polynomial in {} not resolved at {} bits",
                g.len() - 1,
                self,
                numeric::MAX_BITS
            ))),
        }
    }

    /// Rational roots are read off directly; the remaining approximations
    /// are grouped into conjugate triples.
    fn decide(&self, f: &RationalPoly, g: &[BigInt], approx: &RootApprox) -> Option<Vec<FieldElement>> {
        let lc = g.last().unwrap();
        let lc_log = numeric::log2_abs(&numeric::float_from_int(lc, 64));
        let rational = integer_candidates(g, lc, lc_log, approx)?;
        let mut rest = f.clone();
        for (_, r) in &rational {
            rest = rest.exact_div(&Poly::new(vec![-r.clone(), Rational::one()]))?;
        }
        let mut out: Vec<FieldElement> = rational.iter().map(|(_, r)| self.from_rational(r)).collect();
        if rest.degree().unwrap_or(0) < 3 {
            return Some(out);
        }
        let keep: Vec<usize> = (0..approx.len()).filter(|k| !rational.iter().any(|(i, _)| i == k)).collect();
        let sub = RootApprox {
            values: keep.iter().map(|&k| approx.values[k].clone()).collect(),
            radius: keep.iter().map(|&k| approx.radius[k]).collect(),
            real: keep.iter().map(|&k| approx.real[k]).collect(),
            ambiguous: false,
            bits: approx.bits,
        };
        let rest_lc = rest.primitive_integer_coeffs().pop().unwrap();
        match self.match_factors(&rest, &rest_lc, &sub) {
            Outcome::Decided(found) => {
                out.extend(found);
                Some(out)
            }
            Outcome::Unsure => None,
        }
    }

    fn match_factors(&self, g_poly: &RationalPoly, lc: &BigInt, approx: &RootApprox) -> Outcome<Vec<FieldElement>> {
        let bits = approx.bits;
        let lc_f = numeric::float_from_int(lc, bits);
        let lc_log = numeric::log2_abs(&lc_f);
        let ys: Vec<Approx> = approx
            .values
            .iter()
            .zip(&approx.radius)
            .map(|(z, r)| Approx { z: z.scale(&lc_f), err: r + lc_log })
            .collect();
        let theta = self.theta_roots(bits);
        let theta: Vec<Approx> =
            theta.values.iter().zip(&theta.radius).map(|(z, r)| Approx { z: z.clone(), err: *r }).collect();
        let totally_real = self.classify().galois_type != super::GaloisType::Complex;

        let n = ys.len();
        let reals: Vec<usize> = (0..n).filter(|&k| approx.real[k]).collect();
        let mut triples: Vec<[usize; 3]> = Vec::new();
        if totally_real {
            for (i, &a) in reals.iter().enumerate() {
                for (j, &b) in reals.iter().enumerate().skip(i + 1) {
                    for &c in &reals[j + 1..] {
                        triples.push([a, b, c]);
                    }
                }
            }
        } else {
            for k in 0..n {
                if approx.real[k] || approx.values[k].im.repr().sign() == dashu_int::Sign::Negative {
                    continue;
                }
                let target = approx.values[k].conj();
                let partner = (0..n).filter(|&j| j != k && !approx.real[j]).min_by(|&a, &b| {
                    let da = (&approx.values[a] - &target).log2_abs();
                    let db = (&approx.values[b] - &target).log2_abs();
                    da.total_cmp(&db)
                });
                let Some(partner) = partner else { return Outcome::Unsure };
                for &r in &reals {
                    triples.push([r, partner, k]);
                }
            }
        }

        let mut found: Vec<FieldElement> = Vec::new();
        for t in triples {
            let [a, b, c] = t.map(|i| &ys[i]);
            let e1 = a.add(b, bits).add(c, bits);
            let ab = a.mul(b, bits);
            let e2 = ab.add(&a.mul(c, bits), bits).add(&b.mul(c, bits), bits);
            let e3 = ab.mul(c, bits);
            let mut es = Vec::with_capacity(3);
            for e in [&e1, &e2, &e3] {
                match integer_value(e, bits) {
                    Nearest::Unsure => return Outcome::Unsure,
                    Nearest::NotInteger => break,
                    Nearest::Candidate(m) => es.push(m),
                }
            }
            if es.len() < 3 {
                continue;
            }
            // C(Y) = Y³ - e1 Y² + e2 Y - e3 with Y = lc·x.
            let monic_factor = Poly::from_integers(&[-es[2].clone(), es[1].clone(), -es[0].clone(), BigInt::one()]);
            let lc_q = Rational::from_integer(lc.clone());
            let factor = monic_factor.compose(&Poly::new(vec![Rational::zero(), lc_q.clone()]));
            if !factor.divides(g_poly) {
                continue;
            }
            let assignments: Vec<[usize; 3]> = if totally_real {
                vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
            } else {
                // `t` is (real, lower, upper) and so are the embeddings;
                // the swapped order covers the conjugate labelling.
                vec![[0, 1, 2], [0, 2, 1]]
            };
            for perm in assignments {
                let values = [&ys[t[perm[0]]], &ys[t[perm[1]]], &ys[t[perm[2]]]];
                match self.interpolate(&values, &theta, bits) {
                    Outcome::Unsure => return Outcome::Unsure,
                    Outcome::Decided(None) => {}
                    Outcome::Decided(Some(y)) => {
                        let beta = y * &FieldElement::rational(Rational::new(BigInt::one(), lc.clone()));
                        let beta = self.element(beta.coords().clone());
                        if factor.eval_in(&beta).is_zero() && !found.contains(&beta) {
                            found.push(beta);
                        }
                    }
                }
            }
        }
        found.sort_by(|x, y| x.coords().cmp(y.coords()));
        Outcome::Decided(found)
    }

    /// The element `y` of ℤ[θ]/D whose embeddings are `values`, if the
    /// interpolated coordinates round to integers.
    fn interpolate(&self, values: &[&Approx; 3], theta: &[Approx], bits: usize) -> Outcome<Option<FieldElement>> {
        let d = &self.0.denominator_bound;
        let d_f = numeric::float_from_int(d, bits);
        let d_log = numeric::log2_abs(&d_f);
        let one = Approx { z: Complex::real(numeric::float_from_i64(1, bits), bits), err: f64::NEG_INFINITY };
        let neg = |a: &Approx| Approx { z: -&a.z, err: a.err };
        let mut coeffs = [
            Approx { z: Complex::zero(bits), err: f64::NEG_INFINITY },
            Approx { z: Complex::zero(bits), err: f64::NEG_INFINITY },
            Approx { z: Complex::zero(bits), err: f64::NEG_INFINITY },
        ];
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let dij = theta[i].add(&neg(&theta[j]), bits);
            let dik = theta[i].add(&neg(&theta[k]), bits);
            let denom = dij.mul(&dik, bits);
            let inv = Approx { z: &one.z / &denom.z, err: denom.total_err(bits) - 2.0 * denom.z.log2_abs() + 1.0 };
            let w = values[i].mul(&inv, bits);
            let sum_jk = theta[j].add(&theta[k], bits);
            let prod_jk = theta[j].mul(&theta[k], bits);
            coeffs[2] = coeffs[2].add(&w, bits);
            coeffs[1] = coeffs[1].add(&neg(&w.mul(&sum_jk, bits)), bits);
            coeffs[0] = coeffs[0].add(&w.mul(&prod_jk, bits), bits);
        }
        let mut ints = Vec::with_capacity(3);
        for c in &coeffs {
            let scaled = Approx { z: c.z.scale(&d_f), err: c.total_err(bits) + d_log };
            match integer_value(&scaled, bits) {
                Nearest::Unsure => return Outcome::Unsure,
                Nearest::NotInteger => return Outcome::Decided(None),
                Nearest::Candidate(m) => ints.push(m),
            }
        }
        let s = Rational::from_integer(self.0.scale.clone());
        let dq = Rational::from_integer(d.clone());
        let coords = [
            Rational::from_integer(ints[0].clone()) / &dq,
            Rational::from_integer(ints[1].clone()) * &s / &dq,
            Rational::from_integer(ints[2].clone()) * &s * &s / &dq,
        ];
        Outcome::Decided(Some(self.element(coords)))
    }

    /// A square root of `c` in the field, if one exists: the one whose
    /// first (real) embedding is positive.
    pub fn sqrt(&self, c: &FieldElement) -> Result<Option<FieldElement>, FieldError> {
        self.nth_root(c, 2)
    }

    /// An `n`-th root of `c` in the field, if one exists. For even `n`
    /// the root with positive first embedding is returned.
    pub fn nth_root(&self, c: &FieldElement, n: u32) -> Result<Option<FieldElement>, FieldError> {
        if n == 0 {
            return Err(FieldError::InvalidInput("zeroth root".into()));
        }
        let c = self.element(c.coords().clone());
        if c.is_zero() {
            return Ok(Some(c));
        }
        if let Some(q) = c.to_rational() {
            if let Some(r) = rational_nth_root(&q, n) {
                return Ok(Some(self.from_rational(&r)));
            }
            if n.is_power_of_two() {
                // Such a root would generate an extension of 2-power degree.
                return Ok(None);
            }
        }
        let x_n = Poly::monomial(Rational::one(), n as usize);
        let norm_poly = c.charpoly().compose(&x_n);
        let mut candidates: Vec<FieldElement> = self.roots(&norm_poly)?.into_iter().filter(|r| r.pow(n) == c).collect();
        if n.is_multiple_of(2) {
            candidates.retain(|r| self.first_embedding_sign(r) > 0);
        }
        Ok(candidates.into_iter().next())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn field(cs: &[i64]) -> CubicField {
        CubicField::new(Poly::from_desc(cs)).unwrap()
    }

    #[test]
    fn cyclic_minpoly_splits() {
        let k = field(&[1, 2, -1, -1]);
        let roots = k.roots(k.minpoly()).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(k.minpoly().eval_in(r).is_zero());
        }
        assert!(roots.contains(&k.alpha()));
    }

    #[test]
    fn no_complex_roots_in_totally_real_field() {
        let k = field(&[1, 2, -1, -1]);
        assert!(k.roots(&Poly::from_desc(&[1, 1, 1])).unwrap().is_empty());
    }

    #[test]
    fn pure_cubic_has_one_cube_root() {
        let k = field(&[1, 0, 0, -2]);
        assert_eq!(k.roots(k.minpoly()).unwrap(), vec![k.alpha()]);
    }

    #[test]
    fn non_monic_generator() {
        // The field of 3x³ - 4x² - 27x + 4.
        let k = field(&[3, -4, -27, 4]);
        let roots = k.roots(k.minpoly()).unwrap();
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert!(k.minpoly().eval_in(&r).is_zero());
        }
    }

    #[test]
    fn mixed_rational_and_field_roots() {
        let k = field(&[1, 0, 0, -2]);
        let f = &Poly::from_desc(&[1, 0, 0, -2]) * &Poly::from_desc(&[2, -3]);
        let roots = k.roots(&f).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&k.from_rational(&crate::exact::rat(3, 2))));
    }

    #[test]
    fn square_roots() {
        let k = field(&[1, 2, -1, -1]);
        let c = k.from_ints([1, 1, 0]);
        let s = k.sqrt(&c.square()).unwrap().unwrap();
        assert!(s == c || s == -c.clone());
        assert_eq!(k.first_embedding_sign(&s), 1);
        assert_eq!(k.sqrt(&k.from_ints([2, 0, 0])).unwrap(), None);
        assert_eq!(k.sqrt(&k.from_ints([4, 0, 0])).unwrap(), Some(k.from_ints([2, 0, 0])));
        assert_eq!(k.sqrt(&k.alpha()).unwrap(), None);
    }

    #[test]
    fn cube_root_of_rational_in_pure_field() {
        let k = field(&[1, 0, 0, -2]);
        assert_eq!(k.nth_root(&k.from_ints([2, 0, 0]), 3).unwrap(), Some(k.alpha()));
        assert_eq!(k.nth_root(&k.from_ints([4, 0, 0]), 6).unwrap(), Some(k.alpha()));
        assert_eq!(k.nth_root(&k.from_ints([3, 0, 0]), 3).unwrap(), None);
        let r = k.nth_root(&k.from_ints([4, 0, 0]), 3).unwrap().unwrap();
        assert_eq!(r, k.element([int(0), int(0), int(1)]));
    }
}
