use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p / q` as a [`Rational`].
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A commutative ring containing the rationals.
///
/// Every coefficient ring in the crate (rationals, polynomials, Laurent
/// polynomials, rational functions) is a Q-algebra, so scalars embed through
/// [`Ring::from_rational`].
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    /// Multiplicative inverse, when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self {
        self.try_inv().expect("division by zero")
    }
}

/// An integral domain with exact division (used by fraction-free
/// elimination).
pub trait Domain: Ring {
    /// `self / d` when `d` divides `self` exactly.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for Rational {}

impl Domain for Rational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
}

/// Sign-aware absolute value helper kept here so callers need not import
/// `num_traits::Signed`.
pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}
