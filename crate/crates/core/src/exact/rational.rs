use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::Rational;

use super::ExactError;

/// `n/d` as a reduced rational; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or `"p"`, tolerating surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// The exact integer square root of `n`, if `n` is a perfect square.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// The exact integer `k`-th root of `n`, if one exists.
pub fn integer_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if k == 0 {
        return None;
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return integer_nth_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// `Some(r)` with `r ≥ 0` and `r² = q` when `q` is the square of a rational.
pub fn is_square_rational(q: &Rational) -> Option<Rational> {
    rational_nth_root(q, 2)
}

/// A rational `k`-th root of `q` (the non-negative one for even `k`).
pub fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = integer_nth_root(q.numer(), k)?;
    let d = integer_nth_root(q.denom(), k)?;
    Some(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()))
}

/// Greatest common divisor of integers (zero for an empty list).
pub fn content(ns: &[BigInt]) -> BigInt {
    ns.iter().fold(BigInt::zero(), |acc, n| num_integer::gcd(acc, n.clone()))
}

/// The sign of a rational as -1, 0 or 1.
pub fn sign(q: &Rational) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// The primes up to `limit`.
pub fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = Vec::new();
    for p in 2..=limit {
        if !sieve[p as usize] {
            continue;
        }
        out.push(p);
        let mut q = p * p;
        while q <= limit {
            sieve[q as usize] = false;
            q += p;
        }
    }
    out
}

/// The factorization of `|n|` over the primes up to `limit`, and the
/// remaining cofactor, whose prime factors all exceed `limit`.
pub fn trial_factor(n: &BigInt, limit: u32) -> (Vec<(u32, u32)>, BigInt) {
    let mut n = n.abs();
    let mut found = Vec::new();
    if n.is_zero() {
        return (found, n);
    }
    for p in small_primes(limit) {
        if n.is_one() {
            break;
        }
        let pb = BigInt::from(p);
        let mut e = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            found.push((p, e));
        }
    }
    (found, n)
}

/// Serde adapters that encode rationals as `"p/q"` strings.
pub mod serde_rational {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{format_rational, parse_rational};
        use crate::Rational;

        pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(qs.len()))?;
            for q in qs {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?.iter().map(|s| parse_rational(s).map_err(de::Error::custom)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-7/3", "12/8"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert_eq!(format_rational(&parse_rational("12/8").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational(" -4/2 ").unwrap()), "-2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, -5);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn squares() {
        assert_eq!(is_square_rational(&int(49)), Some(int(7)));
        assert_eq!(is_square_rational(&int(0)), Some(int(0)));
        assert_eq!(is_square_rational(&(rat(-108, 1) / rat(-27, 1))), Some(int(2)));
        assert_eq!(is_square_rational(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(is_square_rational(&int(2)), None);
        assert_eq!(is_square_rational(&int(-4)), None);
        assert_eq!(is_square_rational(&rat(1, 2)), None);
    }

    #[test]
    fn higher_roots() {
        assert_eq!(rational_nth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(rational_nth_root(&rat(16, 81), 4), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&int(-16), 4), None);
        assert_eq!(rational_nth_root(&int(64), 6), Some(int(2)));
        assert_eq!(rational_nth_root(&int(63), 6), None);
    }
}
