use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;
use crate::Rational;

use super::rational::{common_denominator, content, format_rational, parse_rational};
use super::ExactError;

/// Dense univariate polynomial, constant term first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * &T::from_int(i as i64)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// `Some(q)` with `self = q·d`, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match r0.lc().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self / gcd(self, self')`: the product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    /// Whether no irreducible factor is repeated.
    ///
    /// Certified first modulo a large prime not dividing the leading
    /// coefficient, where `gcd(f, f') = 1` forces `disc(f) ≠ 0`; this
    /// sidesteps the coefficient growth of the gcd over ℚ.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => return false,
            Some(0 | 1) => return true,
            _ => {}
        }
        let g = self.primitive_integer_coeffs();
        for p in CERTIFYING_PRIMES {
            let f = modp::reduce(&g, p);
            if f.len() == g.len() && modp::gcd(f.clone(), modp::derivative(&f, p), p).len() == 1 {
                return true;
            }
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// From integer coefficients, constant term first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// From integer coefficients, leading term first, as polynomials are usually written.
    pub fn from_desc(cs: &[i64]) -> Self {
        Self::new(cs.iter().rev().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// The primitive integer multiple with positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let den = common_denominator(&self.coeffs);
        let mut ns: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let g = content(&ns);
        if g.is_zero() {
            return ns;
        }
        let g = if ns.last().is_some_and(|c| c.is_negative()) { -g } else { g };
        for n in &mut ns {
            *n /= &g;
        }
        ns
    }

    /// Evaluates at a point of any field containing ℚ.
    pub fn eval_in<F: Scalar>(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x + &F::from_rational(c))
    }

    /// The same polynomial with coefficients viewed in a larger field.
    pub fn embed<F: Scalar>(&self) -> Poly<F> {
        self.map(F::from_rational)
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + c;
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&a))?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses sums of terms `c*x^n` in `x`, as printed by `Display`: the `*`
/// and the coefficient 1 are optional, e.g. `"x^3 + 2x^2 - x - 1/2"`.
impl FromStr for Poly<Rational> {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (c, n) = match body.split_once('x') {
                Some((c, e)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let c = if c.is_empty() { Rational::one() } else { parse_rational(c)? };
                    let n = match e.strip_prefix('^') {
                        Some(n) => n.parse::<usize>().map_err(|_| bad())?,
                        None if e.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, n)
                }
                None if !body.is_empty() => (parse_rational(body)?, 0),
                None => return Err(bad()),
            };
            if coeffs.len() <= n {
                coeffs.resize(n + 1, Rational::zero());
            }
            coeffs[n] += if negative { -c } else { c };
        }
        Ok(Poly::new(coeffs))
    }
}

impl Serialize for Poly<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        super::rational::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

const CERTIFYING_PRIMES: [u64; 4] = [2147483647, 2147483629, 2147483587, 2147483579];

/// Dense polynomials over 𝔽_p for `p < 2³²`, constant term first and trimmed.
mod modp {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inverse(a: u64, p: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a, p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    pub fn reduce(g: &[BigInt], p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        trim(g.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p")).collect())
    }

    pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
        trim(f.iter().enumerate().skip(1).map(|(i, c)| c * (i as u64 % p) % p).collect())
    }

    fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        let inv = inverse(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let q = a.last().unwrap() * inv % p;
            let k = a.len() - b.len();
            for (i, bi) in b.iter().enumerate() {
                a[k + i] = (a[k + i] + p - q * bi % p) % p;
            }
            a = trim(a);
        }
        a
    }

    /// A gcd, not normalized; only its length is meaningful to callers.
    pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        while !b.is_empty() {
            let r = rem(a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    type P = Poly<Rational>;

    #[test]
    fn parse_round_trips_display() {
        for cs in [&[1, 2, -1, -1][..], &[3, 0, -2, 5], &[-1], &[1, 0, 0, 0, 0]] {
            let f = P::from_desc(cs);
            assert_eq!(f.to_string().parse::<P>().unwrap(), f);
        }
        let f: P = "x^3 + 2x^2 - x - 1/2".parse().unwrap();
        assert_eq!(f, P::new(vec![rat(-1, 2), int(-1), int(2), int(1)]));
        assert_eq!("-x+x".parse::<P>().unwrap(), P::zero());
        for bad in ["", "x^", "2y", "x^-1", "1/0"] {
            assert!(bad.parse::<P>().is_err(), "{bad}");
        }
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = P::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(P::from_ints(&[0, 0]).is_zero());
        assert_eq!(P::zero().degree(), None);
        assert_eq!(P::from_desc(&[1, 0, -2]), P::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn arithmetic() {
        let a = P::from_ints(&[1, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, P::from_ints(&[-1, 0, 1]));
        assert_eq!(&a + &b, P::from_ints(&[0, 2]));
        assert_eq!(&a - &a, P::zero());
        assert_eq!(a.pow(3), P::from_ints(&[1, 3, 3, 1]));
        assert_eq!(a.eval(&int(4)), int(5));
        assert_eq!(P::from_ints(&[5, 0, 3]).derivative(), P::from_ints(&[0, 6]));
    }

    #[test]
    fn division_and_gcd() {
        let f = P::from_ints(&[-1, 0, 0, 1]);
        let g = P::from_ints(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, P::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let h = P::from_ints(&[-1, 0, 1]);
        assert_eq!(f.gcd(&h), g);
        let (d, s, t) = f.ext_gcd(&h);
        assert_eq!(&(&s * &f) + &(&t * &h), d);
        let (q, r) = P::from_ints(&[1, 0, 2]).div_rem(&P::from_ints(&[0, 3]));
        assert_eq!(q, P::new(vec![int(0), rat(2, 3)]));
        assert_eq!(r, P::from_ints(&[1]));
    }

    #[test]
    fn squarefree_certificate() {
        let f = P::from_ints(&[-2, -3, 0, 1]);
        assert!(!f.is_squarefree());
        assert!(f.squarefree_part().is_squarefree());
        assert!(P::from_ints(&[1, 0, 1]).is_squarefree());
        assert!(!(&P::from_ints(&[1, 1]) * &P::from_ints(&[1, 1])).is_squarefree());
        assert!(!P::zero().is_squarefree());
    }

    #[test]
    fn composition_and_squarefree() {
        let f = P::from_ints(&[0, 0, 1]);
        let g = P::from_ints(&[1, 1]);
        assert_eq!(f.compose(&g), P::from_ints(&[1, 2, 1]));
        let sq = P::from_ints(&[-2, -3, 0, 1]).squarefree_part();
        assert_eq!(sq, P::from_ints(&[-2, -1, 1]));
    }

    #[test]
    fn integer_model() {
        let p = P::new(vec![rat(-1, 2), int(0), rat(-3, 4)]);
        let ns = p.primitive_integer_coeffs();
        assert_eq!(ns, vec![BigInt::from(2), BigInt::from(0), BigInt::from(3)]);
    }

    #[test]
    fn display_and_json() {
        let p = P::from_desc(&[1, 2, -1, -1]);
        assert_eq!(p.to_string(), "x^3 + 2*x^2 - x - 1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1","-1","2","1"]"#);
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(P::new(vec![rat(1, 2)]).to_string(), "1/2");
    }
}
