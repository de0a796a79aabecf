//! Multiprecision complex root approximation.
//!
//! Numbers here only ever *propose* candidates; every conclusion drawn
//! from them is re-checked with exact arithmetic before it is reported.
//! Error bounds are tracked as base-2 logarithms in `f64`, which is ample
//! for deciding whether a value is near an integer.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, Sign as DSign, UBig};
use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

pub type Float = FBig<HalfEven, 2>;

pub const DEFAULT_BITS: usize = 128;
pub const MAX_BITS: usize = 1024;

pub fn to_ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = UBig::from_le_bytes(&bytes);
    match sign {
        Sign::Minus => IBig::from_parts(DSign::Negative, mag),
        _ => IBig::from(mag),
    }
}

pub fn from_ibig(n: &IBig) -> BigInt {
    let (sign, mag) = n.clone().into_parts();
    let m = BigInt::from_bytes_le(Sign::Plus, &mag.to_le_bytes());
    if sign == DSign::Negative {
        -m
    } else {
        m
    }
}

pub fn float_from_int(n: &BigInt, bits: usize) -> Float {
    Float::from(to_ibig(n)).with_precision(bits).value()
}

pub fn float_from_i64(n: i64, bits: usize) -> Float {
    Float::from(IBig::from(n)).with_precision(bits).value()
}

pub fn float_from_rational(q: &Rational, bits: usize) -> Float {
    float_from_int(q.numer(), bits) / float_from_int(q.denom(), bits)
}

pub fn float_from_f64(x: f64, bits: usize) -> Float {
    Float::try_from(x).expect("finite f64").with_precision(bits).value()
}

/// `2^l` to within f64 accuracy, without overflowing for large `l`.
pub fn float_pow2(l: f64, bits: usize) -> Float {
    let e = l.floor();
    let frac = float_from_f64((l - e).exp2(), bits);
    shift(&frac, e as isize)
}

/// `x · 2^e`.
pub fn shift(x: &Float, e: isize) -> Float {
    x.clone() << e
}

/// `log2 |x|`, or `-inf` at zero.
pub fn log2_abs(x: &Float) -> f64 {
    let repr = x.repr();
    let sig = repr.significand();
    if sig.is_zero() {
        return f64::NEG_INFINITY;
    }
    let m = from_ibig(sig).abs();
    let bits = m.bits() as i64;
    let top = if bits > 60 { &m >> (bits - 60) as usize } else { m.clone() };
    let lead = top.to_f64().unwrap_or(1.0);
    let shift = if bits > 60 { bits - 60 } else { 0 };
    lead.log2() + shift as f64 + repr.exponent() as f64
}

/// Nearest integer.
pub fn round_to_int(x: &Float) -> BigInt {
    from_ibig(&x.round().to_int().value())
}

pub fn to_f64(x: &Float) -> f64 {
    x.to_f64().value()
}

/// `log2(2^a + 2^b)`.
pub fn log2_sum(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (1.0 + (lo - hi).exp2()).log2()
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Float, bits: usize) -> Self {
        Complex { re, im: float_from_i64(0, bits) }
    }

    pub fn zero(bits: usize) -> Self {
        Complex::real(float_from_i64(0, bits), bits)
    }

    pub fn from_f64(re: f64, im: f64, bits: usize) -> Self {
        Complex::new(float_from_f64(re, bits), float_from_f64(im, bits))
    }

    pub fn with_precision(&self, bits: usize) -> Self {
        Complex::new(self.re.clone().with_precision(bits).value(), self.im.clone().with_precision(bits).value())
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `log2 |z|`.
    pub fn log2_abs(&self) -> f64 {
        log2_sum(2.0 * log2_abs(&self.re), 2.0 * log2_abs(&self.im)) / 2.0
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    pub fn scale(&self, c: &Float) -> Self {
        Complex::new(&self.re * c, &self.im * c)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        let d = o.norm_sqr();
        Complex::new((&self.re * &o.re + &self.im * &o.im) / &d, (&self.im * &o.re - &self.re * &o.im) / &d)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re.clone(), -self.im.clone())
    }
}

/// Approximations to all complex roots of a squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct RootApprox {
    pub values: Vec<Complex>,
    /// `log2` of a radius around each value that contains a true root.
    pub radius: Vec<f64>,
    /// Whether each root is real (its imaginary part is then exactly zero).
    pub real: Vec<bool>,
    /// True when the inclusion discs overlap or conjugate pairs fail to
    /// match, i.e. the precision was too low to separate the roots.
    pub ambiguous: bool,
    pub bits: usize,
}

impl RootApprox {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

struct Evaluator {
    coeffs: Vec<Float>,
    deriv: Vec<Float>,
    abs_log2: Vec<f64>,
    bits: usize,
}

impl Evaluator {
    fn new(coeffs: &[BigInt], bits: usize) -> Self {
        let fc: Vec<Float> = coeffs.iter().map(|c| float_from_int(c, bits)).collect();
        let deriv =
            coeffs.iter().enumerate().skip(1).map(|(i, c)| float_from_int(&(c * BigInt::from(i)), bits)).collect();
        let abs_log2 = fc.iter().map(log2_abs).collect();
        Evaluator { coeffs: fc, deriv, abs_log2, bits }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn horner(cs: &[Float], z: &Complex, bits: usize) -> Complex {
        let mut acc = Complex::zero(bits);
        for c in cs.iter().rev() {
            acc = &acc * z;
            acc.re = &acc.re + c;
        }
        acc
    }

    fn eval(&self, z: &Complex) -> (Complex, Complex) {
        (Self::horner(&self.coeffs, z, self.bits), Self::horner(&self.deriv, z, self.bits))
    }

    /// `log2` of the rounding noise in evaluating `p` at a point of modulus `2^lz`.
    fn noise(&self, lz: f64) -> f64 {
        let n = self.degree() as f64;
        let mut acc = f64::NEG_INFINITY;
        for (i, &l) in self.abs_log2.iter().enumerate() {
            acc = log2_sum(acc, l + i as f64 * lz.max(-1e6));
        }
        acc - self.bits as f64 + (n + 1.0).log2() + 3.0
    }
}

/// Initial points on circles whose radii come from the Newton polygon of
/// the coefficient magnitudes (Bini's starting strategy).
fn initial_points(abs_log2: &[f64], bits: usize) -> Vec<Complex> {
    let n = abs_log2.len() - 1;
    let pts: Vec<(usize, f64)> =
        abs_log2.iter().enumerate().filter(|(_, l)| l.is_finite()).map(|(i, &l)| (i, l)).collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let ((i, li), (j, lj)) = (w[0], w[1]);
        let k = j - i;
        let log_r = (li - lj) / k as f64;
        let r = float_pow2(log_r, bits);
        for m in 0..k {
            let angle = 2.0 * PI * m as f64 / k as f64 + 2.0 * PI * i as f64 / n as f64 + sigma;
            let dir = Complex::from_f64(angle.cos(), angle.sin(), bits);
            out.push(dir.scale(&r));
        }
    }
    // Zero roots (a_0 = 0) never occur for the squarefree inputs used here,
    // but keep the count right regardless.
    while out.len() < n {
        out.push(Complex::from_f64(0.5, 0.5, bits));
    }
    out
}

/// A complex number `m·2^e` with `f64` mantissa and unbounded exponent, so
/// that polynomials with huge coefficients can be evaluated in hardware
/// floating point.
#[derive(Clone, Copy)]
struct Scaled {
    m: Complex64,
    e: i64,
}

fn ldexp(x: f64, mut k: i64) -> f64 {
    let mut x = x;
    while k > 1000 {
        x *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        x *= 2f64.powi(-1000);
        k += 1000;
        if x == 0.0 {
            return 0.0;
        }
    }
    x * 2f64.powi(k as i32)
}

impl Scaled {
    const ZERO: Scaled = Scaled { m: Complex64::new(0.0, 0.0), e: 0 };

    fn from_int(n: &BigInt) -> Scaled {
        let shift = n.bits().saturating_sub(60);
        let m = (n >> shift).to_f64().unwrap_or(0.0);
        Scaled { m: Complex64::new(m, 0.0), e: shift as i64 }.normalized()
    }

    fn normalized(self) -> Scaled {
        let big = self.m.re.abs().max(self.m.im.abs());
        if big == 0.0 || !big.is_finite() {
            return Scaled { m: self.m, e: if big == 0.0 { 0 } else { self.e } };
        }
        let k = big.log2().floor() as i64;
        Scaled { m: self.m * ldexp(1.0, -k), e: self.e + k }
    }

    fn mul_add(self, z: Complex64, c: &Scaled) -> Scaled {
        let p = Scaled { m: self.m * z, e: self.e }.normalized();
        if p.m == Complex64::new(0.0, 0.0) {
            return *c;
        }
        if c.m == Complex64::new(0.0, 0.0) {
            return p;
        }
        let (hi, lo) = if p.e >= c.e { (p, *c) } else { (*c, p) };
        Scaled { m: hi.m + lo.m * ldexp(1.0, lo.e - hi.e), e: hi.e }.normalized()
    }
}

/// Aberth–Ehrlich iteration in double precision, used to seed the
/// multiprecision refinement. Gives up (returning `None`) when the roots
/// are outside the range of `f64` or the iteration stalls.
fn aberth_f64(coeffs: &[BigInt], abs_log2: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let cs: Vec<Scaled> = coeffs.iter().map(Scaled::from_int).collect();
    let ds: Vec<Scaled> =
        coeffs.iter().enumerate().skip(1).map(|(i, c)| Scaled::from_int(&(c * BigInt::from(i)))).collect();
    let abs_cs: Vec<Scaled> = cs.iter().map(|c| Scaled { m: Complex64::new(c.m.norm(), 0.0), e: c.e }).collect();
    let horner = |cs: &[Scaled], z: Complex64| cs.iter().rev().fold(Scaled::ZERO, |acc, c| acc.mul_add(z, c));
    // log2 of the rounding noise when evaluating at z.
    let noise = |z: Complex64| {
        let a = horner(&abs_cs, Complex64::new(z.norm(), 0.0));
        a.m.re.log2() + a.e as f64 - 52.0 + (n as f64).log2() + 4.0
    };
    let mut z: Vec<Complex64> = initial_points(abs_log2, 64)
        .iter()
        .map(|c| {
            let (re, im) = c.to_f64();
            Complex64::new(re, im)
        })
        .collect();
    if z.iter().any(|w| !w.norm().is_finite() || w.norm() > 1e250 || w.norm() < 1e-250) {
        return None;
    }
    let mut done = vec![false; n];
    for _ in 0..(500 + 10 * n) {
        if done.iter().all(|&d| d) {
            return Some(z);
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let p = horner(&cs, z[k]);
            let dp = horner(&ds, z[k]);
            if p.m == Complex64::new(0.0, 0.0) || p.m.norm().log2() + (p.e as f64) <= noise(z[k]) {
                done[k] = true;
                continue;
            }
            if dp.m == Complex64::new(0.0, 0.0) {
                let nudge = Complex64::new(1e-3, 1e-3) * (1.0 + z[k].norm());
                z[k] += nudge;
                continue;
            }
            let ratio = p.m / dp.m * ldexp(1.0, p.e - dp.e);
            let sum: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let denom = Complex64::new(1.0, 0.0) - ratio * sum;
            let w = if denom.norm() == 0.0 { ratio } else { ratio / denom };
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[k] -= w;
            if w.norm() <= 1e-15 * z[k].norm() {
                done[k] = true;
            }
        }
    }
    // Stalled roots are still reasonable starting points.
    Some(z)
}

/// Approximates all roots of the polynomial with the given integer
/// coefficients (constant term first), which must be squarefree with a
/// nonzero leading coefficient.
///
/// `start` optionally seeds the iteration, e.g. with approximations from
/// a lower precision.
pub fn polynomial_roots(coeffs: &[BigInt], bits: usize, start: Option<&[Complex]>) -> RootApprox {
    let n = coeffs.len().saturating_sub(1);
    assert!(n >= 1 && !coeffs[n].is_zero(), "root finding needs degree ≥ 1");
    if n == 1 {
        let v = float_from_int(&-coeffs[0].clone(), bits) / float_from_int(&coeffs[1], bits);
        return RootApprox {
            values: vec![Complex::real(v, bits)],
            radius: vec![f64::NEG_INFINITY],
            real: vec![true],
            ambiguous: false,
            bits,
        };
    }
    let ev = Evaluator::new(coeffs, bits);
    let mut z: Vec<Complex> = match start {
        Some(s) if s.len() == n => s.iter().map(|c| c.with_precision(bits)).collect(),
        _ => match aberth_f64(coeffs, &ev.abs_log2) {
            Some(z) => z.iter().map(|w| Complex::from_f64(w.re, w.im, bits)).collect(),
            None => initial_points(&ev.abs_log2, bits),
        },
    };
    let one = Complex::real(float_from_i64(1, bits), bits);
    let mut done = vec![false; n];
    let max_iter = 200 + 4 * n;
    for _ in 0..max_iter {
        if done.iter().all(|&d| d) {
            break;
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = ev.eval(&z[k]);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            if dp.is_zero() {
                // Perturb off a critical point.
                let nudge = Complex::from_f64(1e-3, 1e-3, bits);
                z[k] = &z[k] + &nudge;
                continue;
            }
            let ratio = &p / &dp;
            let mut sum = Complex::zero(bits);
            for j in 0..n {
                if j != k {
                    let d = &z[k] - &z[j];
                    if !d.is_zero() {
                        sum = &sum + &(&one / &d);
                    }
                }
            }
            let denom = &one - &(&ratio * &sum);
            let w = if denom.is_zero() { ratio } else { &ratio / &denom };
            z[k] = &z[k] - &w;
            let lw = w.log2_abs();
            let lz = z[k].log2_abs();
            let scale = if lz.is_finite() { lz.max(-(bits as f64) / 2.0) } else { 0.0 };
            // Converged, or the value is already at the rounding noise of
            // the evaluation and cannot improve.
            if lw < scale - bits as f64 + 6.0 || p.log2_abs() <= ev.noise(lz) + 2.0 {
                done[k] = true;
            }
        }
    }
    finish(&ev, z)
}

fn finish(ev: &Evaluator, mut z: Vec<Complex>) -> RootApprox {
    let n = z.len();
    let bits = ev.bits;
    let mut radius = Vec::with_capacity(n);
    for zk in &z {
        let (p, dp) = ev.eval(zk);
        let lz = zk.log2_abs();
        let lp = log2_sum(p.log2_abs(), ev.noise(lz));
        let ldp = dp.log2_abs();
        // The disc of radius n|p/p'| about z contains a root of p.
        radius.push(lp - ldp + (n as f64).log2() + 1.0);
    }
    let mut real = vec![false; n];
    for k in 0..n {
        if log2_abs(&z[k].im) <= radius[k] {
            real[k] = true;
            z[k].im = float_from_i64(0, bits);
        }
    }
    let mut ambiguous = radius.iter().any(|r| !r.is_finite() && *r > 0.0);
    // Inclusion discs must be pairwise disjoint.
    'outer: for a in 0..n {
        for b in a + 1..n {
            let d = (&z[a] - &z[b]).log2_abs();
            if d <= log2_sum(radius[a], radius[b]) {
                ambiguous = true;
                break 'outer;
            }
        }
    }
    // Non-real roots must come in conjugate pairs.
    if !ambiguous {
        for a in 0..n {
            if real[a] {
                continue;
            }
            let c = z[a].conj();
            let paired =
                (0..n).any(|b| b != a && !real[b] && (&z[b] - &c).log2_abs() <= log2_sum(radius[a], radius[b]));
            if !paired {
                ambiguous = true;
                break;
            }
        }
    }
    RootApprox { values: z, radius, real, ambiguous, bits }
}

/// Roots at increasing precision until they are unambiguous, starting at
/// `bits` and doubling up to `max_bits`.
pub fn separated_roots(coeffs: &[BigInt], bits: usize, max_bits: usize) -> Option<RootApprox> {
    let mut b = bits;
    let mut prev: Option<RootApprox> = None;
    loop {
        let r = polynomial_roots(coeffs, b, prev.as_ref().map(|p| p.values.as_slice()));
        if !r.ambiguous {
            return Some(r);
        }
        if b >= max_bits {
            return None;
        }
        b = (b * 2).min(max_bits);
        prev = Some(r);
    }
}

/// Outcome of asking whether an approximate real number is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nearest {
    /// Within error of this integer: a candidate for exact checking.
    Candidate(BigInt),
    /// Certainly not an integer.
    NotInteger,
    /// The error bound is too large to tell.
    Unsure,
}

/// Classifies `x`, known to within `2^err` of a true value.
pub fn nearest_integer(x: &Float, err: f64) -> Nearest {
    if err > -3.0 {
        return Nearest::Unsure;
    }
    let n = round_to_int(x);
    let dist = log2_abs(&(x - float_from_int(&n, x.precision().max(64))));
    if dist <= err + 1.0 {
        Nearest::Candidate(n)
    } else {
        Nearest::NotInteger
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn bigint_round_trip() {
        for s in ["0", "-1", "123456789012345678901234567890", "-98765432109876543210"] {
            let n: BigInt = s.parse().unwrap();
            assert_eq!(from_ibig(&to_ibig(&n)), n);
        }
    }

    #[test]
    fn log2_and_rounding() {
        let x = float_from_i64(1024, 128);
        assert!((log2_abs(&x) - 10.0).abs() < 1e-9);
        let y = float_from_rational(&Rational::new(7.into(), 2.into()), 128);
        assert_eq!(round_to_int(&y), BigInt::from(4));
        assert!((log2_abs(&float_pow2(300.5, 128)) - 300.5).abs() < 1e-9);
    }

    #[test]
    fn cubic_roots() {
        let r = polynomial_roots(&ints(&[-1, -1, 2, 1]), 128, None);
        assert!(!r.ambiguous);
        let mut reals: Vec<f64> = r.values.iter().map(|z| z.to_f64().0).collect();
        reals.sort_by(f64::total_cmp);
        let expected = [-2.2469796037174667, -0.5549581320873711, 0.8019377358048383];
        for (a, b) in reals.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(r.real.iter().all(|&x| x));
        assert!(r.radius.iter().all(|&l| l < -100.0));
    }

    #[test]
    fn complex_pair_detected() {
        let r = polynomial_roots(&ints(&[-2, 0, 0, 1]), 128, None);
        assert!(!r.ambiguous);
        assert_eq!(r.real.iter().filter(|&&x| x).count(), 1);
    }

    #[test]
    fn large_coefficients() {
        // (x - 10^30)(x + 3)(x^2 + 1)
        let big: BigInt = "1000000000000000000000000000000".parse().unwrap();
        let c0 = BigInt::from(-3) * &big;
        let c1 = BigInt::from(3) - &big;
        let c2 = BigInt::from(-3) * &big + 1;
        let c3 = BigInt::from(3) - &big;
        let r = polynomial_roots(&[c0, c1, c2, c3, BigInt::from(1)], 256, None);
        assert!(!r.ambiguous);
        let found =
            r.values.iter().zip(&r.real).filter(|(_, re)| **re).map(|(z, _)| round_to_int(&z.re)).collect::<Vec<_>>();
        assert!(found.contains(&big));
        assert!(found.contains(&BigInt::from(-3)));
    }

    #[test]
    fn nearest_integer_decisions() {
        let x = float_from_rational(&Rational::new(5.into(), 1.into()), 128);
        assert_eq!(nearest_integer(&x, -100.0), Nearest::Candidate(BigInt::from(5)));
        let y = float_from_rational(&Rational::new(11.into(), 2.into()), 128);
        assert_eq!(nearest_integer(&y, -100.0), Nearest::NotInteger);
        assert_eq!(nearest_integer(&y, 0.0), Nearest::Unsure);
    }
}
