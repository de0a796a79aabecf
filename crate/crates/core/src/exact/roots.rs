use num_bigint::BigInt;
use num_traits::Zero;

use crate::numeric::{self, Nearest, RootApprox};
use crate::Rational;

use super::rational::is_square_rational;
use super::{ExactError, Poly};

/// All rational roots of `f`, with multiplicity, in ascending order.
///
/// Works on the primitive integer model `a_n x^n + … + a_0`: every
/// rational root is `m / a_n` for an integer `m` that is a root of the
/// monic model. Candidates for `m` come from the real roots (located
/// numerically, which scales to the 2000-bit constant terms of high
/// division polynomials where divisor enumeration cannot), and each one
/// is confirmed by exact evaluation. Degrees one and two are solved exactly.
pub fn rational_roots(f: &Poly<Rational>) -> Result<Vec<Rational>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::InvalidInput("rational roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    let mut f = f.clone();
    while f.degree().unwrap_or(0) > 0 && f.coeff(0).is_zero() {
        out.push(Rational::zero());
        f = f.div_rem(&Poly::x()).0;
    }
    if f.degree().unwrap_or(0) >= 3 {
        // Disjoint inclusion discs certify that f is squarefree, which
        // saves the gcd with f' on the large inputs.
        let g = f.primitive_integer_coeffs();
        let lc = g.last().unwrap().clone();
        let lc_log = numeric::log2_abs(&numeric::float_from_int(&lc, 64));
        let found = refine(&g, numeric::DEFAULT_BITS, false, |a| integer_candidates(&g, &lc, lc_log, a));
        match found {
            Refined::Found(roots) => {
                out.extend(roots.into_iter().map(|(_, r)| r));
                out.sort();
                return Ok(out);
            }
            Refined::Exhausted => return Err(undecided(g.len() - 1)),
            Refined::Ambiguous => {}
        }
    }
    let sf = if f.is_squarefree() { f.clone() } else { f.squarefree_part() };
    let mut distinct = distinct_rational_roots(&sf)?;
    distinct.sort();
    for r in distinct {
        let lin = Poly::new(vec![-r.clone(), Rational::from_integer(1.into())]);
        let mut g = f.clone();
        while let Some(q) = g.exact_div(&lin) {
            out.push(r.clone());
            g = q;
        }
    }
    out.sort();
    Ok(out)
}

fn undecided(degree: usize) -> ExactError {
    ExactError::Undecided(format!(
        "rational roots of a degree-{degree} polynomial not separated at {} bits",
        numeric::MAX_BITS
    ))
}

fn distinct_rational_roots(sqf: &Poly<Rational>) -> Result<Vec<Rational>, ExactError> {
    let deg = sqf.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    if sqf.coeff(0).is_zero() {
        let (q, _) = sqf.div_rem(&Poly::x());
        let mut rest = distinct_rational_roots(&q)?;
        rest.push(Rational::zero());
        return Ok(rest);
    }
    let lc = sqf.lc().unwrap().clone();
    match deg {
        1 => return Ok(vec![-sqf.coeff(0) / lc]),
        2 => {
            let (a, b, c) = (lc, sqf.coeff(1), sqf.coeff(0));
            let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
            return Ok(match is_square_rational(&disc) {
                Some(s) => {
                    let two_a = Rational::from_integer(2.into()) * &a;
                    vec![(-&b - &s) / &two_a, (-b + s) / two_a]
                }
                None => Vec::new(),
            });
        }
        _ => {}
    }
    let g = sqf.primitive_integer_coeffs();
    let lc = g.last().unwrap().clone();
    let lc_log = numeric::log2_abs(&numeric::float_from_int(&lc, 64));
    match refine(&g, numeric::DEFAULT_BITS, true, |a| integer_candidates(&g, &lc, lc_log, a)) {
        Refined::Found(roots) => Ok(roots.into_iter().map(|(_, r)| r).collect()),
        _ => Err(undecided(g.len() - 1)),
    }
}

pub(crate) enum Refined<T> {
    Found(T),
    /// The roots were not separated and the input is not known to be
    /// squarefree.
    Ambiguous,
    Exhausted,
}

/// Approximates the roots of `g` with increasing precision until `decide`
/// succeeds on a separated approximation. Unless `squarefree` is known,
/// the first unseparated approximation ends the search, since it usually
/// signals a repeated root.
pub(crate) fn refine<T>(
    g: &[BigInt],
    start_bits: usize,
    squarefree: bool,
    mut decide: impl FnMut(&RootApprox) -> Option<T>,
) -> Refined<T> {
    let mut bits = start_bits;
    let mut prev: Option<RootApprox> = None;
    loop {
        let approx = numeric::polynomial_roots(g, bits, prev.as_ref().map(|p| p.values.as_slice()));
        if approx.ambiguous && !squarefree {
            return Refined::Ambiguous;
        }
        if !approx.ambiguous {
            if let Some(found) = decide(&approx) {
                return Refined::Found(found);
            }
        }
        if bits >= numeric::MAX_BITS {
            return Refined::Exhausted;
        }
        bits = (bits * 2).min(numeric::MAX_BITS);
        prev = Some(approx);
    }
}

/// The rational roots among the real approximations, with their indices;
/// `None` when the approximation is too coarse to decide.
pub(crate) fn integer_candidates(
    g: &[BigInt],
    lc: &BigInt,
    lc_log: f64,
    approx: &RootApprox,
) -> Option<Vec<(usize, Rational)>> {
    let lc_f = numeric::float_from_int(lc, approx.bits);
    let mut out = Vec::new();
    for (k, z) in approx.values.iter().enumerate() {
        if !approx.real[k] {
            continue;
        }
        let y = &z.re * &lc_f;
        match numeric::nearest_integer(&y, approx.radius[k] + lc_log) {
            Nearest::Unsure => return None,
            Nearest::NotInteger => {}
            Nearest::Candidate(m) => {
                let r = Rational::new(m, lc.clone());
                if eval_integer_poly(g, &r).is_zero() {
                    out.push((k, r));
                }
            }
        }
    }
    Some(out)
}

/// Exact evaluation of an integer polynomial at a rational point, scaled
/// by `denominator^deg` so that only integer arithmetic is needed.
pub(crate) fn eval_integer_poly(g: &[BigInt], r: &Rational) -> BigInt {
    let (p, q) = (r.numer(), r.denom());
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::from(1);
    // Homogenised Horner: sum g_i p^i q^(n-i).
    for c in g.iter().rev() {
        acc = acc * p + c * &qpow;
        qpow *= q;
    }
    acc
}
