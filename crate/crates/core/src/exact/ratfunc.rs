use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::Rational;

use super::Poly;

/// A rational function in one variable over ℚ, kept in lowest terms with
/// a monic denominator, so equality is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap());
        let lc = d.lc().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn poly(p: Poly<Rational>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        let apply = |p: &Poly<Rational>| -> RatFunc {
            p.coeffs().iter().rev().fold(RatFunc::zero(), |acc, c| acc * inner + RatFunc::constant(c))
        };
        apply(&self.num) / apply(&self.den)
    }

    pub fn constant(c: &Rational) -> Self {
        Self::poly(Poly::constant(c.clone()))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::poly(Poly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::poly(Poly::one())
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den);
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o.clone())
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        assert!(!o.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    )*};
}
by_value!(Add add, Sub sub, Mul mul, Div div);

impl Scalar for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    #[test]
    fn lowest_terms() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(f.num(), &Poly::new(vec![crate::exact::rat(1, 2), crate::exact::rat(1, 2)]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn order_three_moebius() {
        // u -> 1 - 1/u has order 3.
        let u = RatFunc::var();
        let s = RatFunc::one() - RatFunc::one() / u.clone();
        assert_ne!(s, u);
        let s2 = s.compose(&s);
        assert_ne!(s2, u);
        assert_eq!(s2.compose(&s), u);
    }

    #[test]
    fn evaluation() {
        let f = RatFunc::new(p(&[1, 1]), p(&[0, 1]));
        assert_eq!(f.eval(&int(2)), Some(crate::exact::rat(3, 2)));
        assert_eq!(f.eval(&int(0)), None);
        assert_eq!(RatFunc::constant(&int(5)).to_rational(), Some(int(5)));
        assert_eq!(f.to_rational(), None);
    }
}
