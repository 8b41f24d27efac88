use std::fmt;

use crate::algebra::{Field, Rational, Ring, UniPoly};
use crate::error::{Error, Result};

use super::laurent::LaurentPoly1;

/// Univariate rational function `num / den` in lowest terms with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc1 {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc1 {
    /// Build and reduce `num / den`.
    ///
    /// # Panics
    /// If `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = UniPoly::constant(lc.inv());
            num = num.mul(&inv);
            den = den.mul(&inv);
        }
        RatFunc1 { num, den }
    }

    /// `num / den` already in lowest terms; only the denominator is made
    /// monic.
    fn normalized(mut num: UniPoly, mut den: UniPoly) -> Self {
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc1 { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc1 {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn from_laurent(p: &LaurentPoly1) -> Self {
        let (v, poly) = p.to_poly_shifted();
        if v >= 0 {
            Self::from_poly(poly.shift_up(v as usize))
        } else {
            Self::new(poly, UniPoly::monomial(Rational::one(), (-v) as usize))
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `None` when the denominator vanishes at `at`.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        d.try_inv().map(|di| self.num.eval(at).mul(&di))
    }

    /// Substitute `x -> 1/x`.
    pub fn reflect(&self) -> Self {
        let n = LaurentPoly1::from_poly(&self.num).reflect();
        let d = LaurentPoly1::from_poly(&self.den).reflect();
        Self::from_laurent(&n).mul(&Self::from_laurent(&d).inv())
    }

    pub fn to_laurent(&self) -> Result<LaurentPoly1> {
        ratfunc_to_laurent(self)
    }

    pub fn is_laurent(&self) -> bool {
        self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
    }
}

/// Exact quotient in `Q[x, 1/x]`; fails with the remainder when the
/// denominator has a factor other than a power of `x`.
pub fn ratfunc_to_laurent(r: &RatFunc1) -> Result<LaurentPoly1> {
    if r.is_laurent() {
        let k = r.den.degree().unwrap_or(0) as i32;
        return Ok(LaurentPoly1::from_poly(&r.num).shift(-k));
    }
    let v = r.den.coeffs().iter().take_while(|c| c.is_zero()).count();
    let unit_free = UniPoly::new(r.den.coeffs()[v..].to_vec());
    Err(Error::InexactDivision {
        remainder: r.num.rem(&unit_free).display_in("x"),
    })
}

impl Ring for RatFunc1 {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            return Self::normalized(
                self.num.mul(&other.den).add(&other.num.mul(&self.den)),
                self.den.mul(&other.den),
            );
        }
        let d1 = self.den.div_rem(&g).0;
        let d2 = other.den.div_rem(&g).0;
        let t = self.num.mul(&d2).add(&other.num.mul(&d1));
        if t.is_zero() {
            return Self::zero();
        }
        let h = t.gcd(&g);
        Self::normalized(t.div_rem(&h).0, d1.mul(&other.den.div_rem(&h).0))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let cut = |p: &UniPoly, g: &UniPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_rem(g).0
            }
        };
        Self::normalized(
            cut(&self.num, &g1).mul(&cut(&other.num, &g2)),
            cut(&self.den, &g2).mul(&cut(&other.den, &g1)),
        )
    }
    fn neg(&self) -> Self {
        RatFunc1 {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(UniPoly::constant(q.clone()))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RatFunc1 {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }
}

impl Field for RatFunc1 {}

impl fmt::Display for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display_in("x"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_in("x"),
                self.den.display_in("x")
            )
        }
    }
}

impl fmt::Debug for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc1({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    #[test]
    fn exact_quotients() {
        let r = RatFunc1::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(
            ratfunc_to_laurent(&r).unwrap(),
            LaurentPoly1::from_ints(&[(0, 1), (1, 1)])
        );
        let s = LaurentPoly1::from_ints(&[(-1, 1), (1, 1)]);
        let q = RatFunc1::from_laurent(&s).mul(&RatFunc1::from_laurent(&s).inv());
        assert_eq!(q.to_laurent().unwrap(), LaurentPoly1::one());
        assert_eq!(RatFunc1::from_laurent(&s).to_laurent().unwrap(), s);
    }

    #[test]
    fn inexact_reports_remainder() {
        let r = RatFunc1::new(p(&[1]), p(&[1, 1]));
        match r.to_laurent() {
            Err(Error::InexactDivision { remainder }) => assert_eq!(remainder, "1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reduction_normalises() {
        let r = RatFunc1::new(p(&[2, 2]), p(&[4, 4]));
        assert_eq!(r, RatFunc1::from_rational(&crate::algebra::rat(1, 2)));
        let c = RatFunc1::new(p(&[1, 0, 1]), p(&[0, 1, 1, 1]));
        assert_eq!(c.reflect(), RatFunc1::new(p(&[0, 1, 0, 1]), p(&[1, 1, 1])));
    }
}
