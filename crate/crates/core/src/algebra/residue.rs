use std::sync::Arc;

use super::poly::UniPoly;
use super::ring::{Field, Rational, Ring};
use crate::error::{Error, Result};

/// Element of `Q[a]/(p)`, stored as its reduced representative.
///
/// Scalars created through [`Ring::zero`], [`Ring::one`] or
/// [`Ring::from_rational`] carry no modulus; they pick one up the first time
/// they meet an element that has one. Mixing two different moduli is a logic
/// error.
#[derive(Clone, Debug)]
pub struct AlgebraicResidue {
    value: UniPoly,
    modulus: Option<Arc<UniPoly>>,
}

impl AlgebraicResidue {
    /// Reduce `value` modulo `modulus` (which must be non-constant).
    pub fn new(value: UniPoly, modulus: Arc<UniPoly>) -> Self {
        assert!(
            !modulus.is_constant(),
            "residue modulus must have positive degree"
        );
        let value = value.rem(&modulus);
        AlgebraicResidue {
            value,
            modulus: Some(modulus),
        }
    }

    /// The class of the generator `a`.
    pub fn generator(modulus: Arc<UniPoly>) -> Self {
        Self::new(UniPoly::x(), modulus)
    }

    pub fn value(&self) -> &UniPoly {
        &self.value
    }

    pub fn modulus(&self) -> Option<&UniPoly> {
        self.modulus.as_deref()
    }

    fn join(&self, other: &Self) -> Option<Arc<UniPoly>> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => {
                debug_assert!(Arc::ptr_eq(a, b) || a == b, "mixed residue moduli");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(value: UniPoly, modulus: Option<Arc<UniPoly>>) -> Self {
        match modulus {
            Some(m) => Self::new(value, m),
            None => AlgebraicResidue {
                value,
                modulus: None,
            },
        }
    }

    /// Inverse modulo `p`, or the common factor that prevents it.
    pub fn invert(&self) -> Result<Self> {
        let Some(m) = &self.modulus else {
            return self
                .value
                .try_inv()
                .map(|value| AlgebraicResidue {
                    value,
                    modulus: None,
                })
                .ok_or_else(|| Error::NotInvertible { factor: "0".into() });
        };
        if self.value.is_zero() {
            return Err(Error::NotInvertible {
                factor: m.display_in("a"),
            });
        }
        let (g, s, _) = self.value.ext_gcd(m);
        if !g.is_constant() {
            return Err(Error::NotInvertible {
                factor: g.display_in("a"),
            });
        }
        Ok(Self::new(s, m.clone()))
    }
}

impl PartialEq for AlgebraicResidue {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Ring for AlgebraicResidue {
    fn zero() -> Self {
        Self::build(UniPoly::zero(), None)
    }
    fn one() -> Self {
        Self::build(UniPoly::one(), None)
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self::build(self.value.add(&other.value), self.join(other))
    }
    fn sub(&self, other: &Self) -> Self {
        Self::build(self.value.sub(&other.value), self.join(other))
    }
    fn mul(&self, other: &Self) -> Self {
        Self::build(self.value.mul(&other.value), self.join(other))
    }
    fn neg(&self) -> Self {
        AlgebraicResidue {
            value: self.value.neg(),
            modulus: self.modulus.clone(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::build(UniPoly::constant(q.clone()), None)
    }
    fn try_inv(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn scale(&self, q: &Rational) -> Self {
        AlgebraicResidue {
            value: self.value.scale(q),
            modulus: self.modulus.clone(),
        }
    }
}

impl Field for AlgebraicResidue {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_quartic_extension() {
        // a^3 * (1 + a) = a^4 + a^3 = 1 modulo a^4 + a^3 - 1
        let m = Arc::new(UniPoly::from_ints(&[-1, 0, 0, 1, 1]));
        let a = AlgebraicResidue::generator(m.clone());
        let inv = a.pow(3).invert().unwrap();
        assert_eq!(inv.value(), &UniPoly::from_ints(&[1, 1]));
        assert!(a.pow(3).mul(&inv).is_one());
    }

    #[test]
    fn zero_divisor_reports_factor() {
        let m = Arc::new(UniPoly::from_ints(&[-1, 0, 1]));
        let e = AlgebraicResidue::new(UniPoly::from_ints(&[-1, 1]), m);
        match e.invert() {
            Err(Error::NotInvertible { factor }) => assert_eq!(factor, "a - 1"),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn scalars_adopt_modulus() {
        let m = Arc::new(UniPoly::from_ints(&[-2, 0, 1]));
        let a = AlgebraicResidue::generator(m);
        let sq = a.mul(&a).add(&AlgebraicResidue::one());
        assert_eq!(sq.value(), &UniPoly::from_ints(&[3]));
    }
}
