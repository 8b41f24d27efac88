use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{is_negative, Domain, Field, Rational, Ring};

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and the last entry is the leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial with rational coefficients.
pub type UniPoly = Poly<Rational>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable `X`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(
            cs.iter()
                .map(|&c| R::from_rational(&super::ring::int(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation in any ring that the coefficients embed into.
    pub fn eval_with<S: Ring>(&self, at: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul(at).add(&embed(c)))
    }

    pub fn eval(&self, at: &R) -> R {
        self.eval_with(at, R::clone)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&super::ring::int(k as i64)))
                .collect(),
        )
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].try_inv().map(Self::constant)
        } else {
            None
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv_lc = d.lc().inv();
        let mut rem = self.coeffs.clone();
        let Some(ds) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if ds < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let c = rem[k + dd].mul(&inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic normalisation; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        Self::new(self.coeffs.iter().map(|c| c.mul(&inv)).collect())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Extended Euclid: `(g, s, t)` with `s * self + t * other = g`, `g`
    /// monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        let k = Self::constant(inv);
        (r0.mul(&k), s0.mul(&k), t0.mul(&k))
    }

    /// Largest squarefree divisor, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl<F: Field> Domain for Poly<F> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl UniPoly {
    /// Integer-coefficient scalar multiple with content 1 and positive
    /// leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if is_negative(&self.lc()) {
            content = -content;
        }
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        )
    }

    /// Render with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = One::is_one(&abs);
            match k {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&abs.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::int;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    #[test]
    fn gcd_examples() {
        // x^2 - 1 and x - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // gcd(0, 3x + 3) = x + 1
        assert_eq!(UniPoly::zero().gcd(&p(&[3, 3])), p(&[1, 1]));
        let chi8 = p(&[1, 9, 31, 62, 77, 62, 31, 9, 1]);
        let phi8 = p(&[1, 0, 0, 0, 1]);
        assert_eq!(chi8.gcd(&phi8), UniPoly::one());
    }

    #[test]
    fn division_identity() {
        let a = p(&[3, -2, 0, 5, 1]);
        let d = p(&[1, 2, 3]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[2, 3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn primitive_and_squarefree() {
        let q = UniPoly::new(vec![
            crate::algebra::rat(-1, 2),
            int(0),
            crate::algebra::rat(-3, 4),
        ]);
        assert_eq!(q.primitive(), p(&[2, 0, 3]));
        // (x-1)^2 (x+2)
        let sq = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(sq.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -9, 0, 1]).to_string(), "X^3 - 9*X + 1");
        assert_eq!(p(&[-2]).display_in("a"), "-2");
    }
}
