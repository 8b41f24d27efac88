use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::algebra::{Rational, Ring, UniPoly};

/// Which exponents [`Laurent::part`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// Exponent `> 0`.
    Positive,
    /// Exponent `>= 0`.
    NonNegative,
    /// Exponent `< 0`.
    Negative,
    /// Exponent `<= 0`.
    NonPositive,
}

impl Part {
    pub fn keeps(self, e: i32) -> bool {
        match self {
            Part::Positive => e > 0,
            Part::NonNegative => e >= 0,
            Part::Negative => e < 0,
            Part::NonPositive => e <= 0,
        }
    }

    pub fn complement(self) -> Part {
        match self {
            Part::Positive => Part::NonPositive,
            Part::NonNegative => Part::Negative,
            Part::Negative => Part::NonNegative,
            Part::NonPositive => Part::Positive,
        }
    }
}

/// Sparse Laurent polynomial in one variable over a coefficient ring.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i32, C>,
}

/// Laurent polynomial with rational coefficients.
pub type LaurentPoly1 = Laurent<Rational>;

impl<C: Ring> Laurent<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            let slot = out.entry(e).or_insert_with(C::zero);
            *slot = slot.add(&c);
        }
        out.retain(|_, c: &mut C| !c.is_zero());
        Laurent { terms: out }
    }

    pub fn monomial(c: C, e: i32) -> Self {
        Self::from_terms([(e, c)])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// The inverse of the variable.
    pub fn var_inv() -> Self {
        Self::monomial(C::one(), -1)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn coeff(&self, e: i32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Keep the terms selected by `part`.
    pub fn part(&self, part: Part) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| part.keeps(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Multiply by the `k`-th power of the variable.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute the inverse variable.
    pub fn reflect(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.mul(c))))
    }

    /// Evaluate at `at`, whose inverse `at_inv` is used for negative
    /// exponents.
    pub fn eval_with<S: Ring>(&self, at: &S, at_inv: &S, embed: impl Fn(&C) -> S) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 { at_inv } else { at };
            acc = acc.add(&embed(c).mul(&base.pow(e.unsigned_abs())));
        }
        acc
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(slot) => {
                    *slot = slot.add(c);
                    if slot.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(*e, c.clone());
                }
            }
        }
        Laurent { terms }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i32, C> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let p = c1.mul(c2);
                let slot = terms.entry(e1 + e2).or_insert_with(C::zero);
                *slot = slot.add(&p);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Laurent { terms }
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        c.try_inv().map(|ci| Self::monomial(ci, -e))
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.scale(q))))
    }
}

impl LaurentPoly1 {
    pub fn from_ints(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, crate::algebra::int(c))))
    }

    /// Split as `x^v * p(x)` with `p` an ordinary polynomial, `v` the
    /// valuation (0 for the zero polynomial).
    pub fn to_poly_shifted(&self) -> (i32, UniPoly) {
        let v = self.valuation().unwrap_or(0);
        let mut coeffs =
            vec![<Rational as Ring>::zero(); self.degree().map_or(0, |d| (d - v + 1) as usize)];
        for (e, c) in self.terms() {
            coeffs[(e - v) as usize] = c.clone();
        }
        (v, UniPoly::new(coeffs))
    }

    pub fn from_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i32, c.clone())),
        )
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.eval_with(at, &at.recip(), Rational::clone)
    }

    /// Render with `var` for the variable and `var` followed by `^-k` for
    /// inverse powers.
    pub fn display_in(&self, var: &str) -> String {
        render_terms(self.terms().rev(), |e| match e {
            0 => String::new(),
            1 => var.to_string(),
            e => format!("{var}^{e}"),
        })
    }
}

pub(crate) fn render_terms<'a, E: Copy + 'a>(
    terms: impl Iterator<Item = (E, &'a Rational)>,
    mono: impl Fn(E) -> String,
) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let m = mono(e);
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if m.is_empty() {
            out.push_str(&abs.to_string());
        } else if One::is_one(&abs) {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{abs}*{m}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<C: fmt::Debug> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
