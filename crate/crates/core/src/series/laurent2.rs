use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::algebra::{int, Rational, Ring};

use super::laurent::{render_terms, Laurent, LaurentPoly1, Part};
use super::ratfunc::RatFunc1;

const DENSE_PRODUCT_THRESHOLD: usize = 256;

type IntTerms = Vec<((i32, i32), BigInt)>;

/// Coefficients over a common denominator.
fn integral_parts(p: &LaurentPoly2) -> (BigInt, IntTerms) {
    let den = p
        .terms
        .values()
        .fold(<BigInt as num_traits::One>::one(), |acc: BigInt, c| {
            acc.lcm(c.denom())
        });
    let terms = p
        .terms
        .iter()
        .map(|(e, c)| (*e, c.numer() * (&den / c.denom())))
        .collect();
    (den, terms)
}

/// Product accumulated on a dense integer grid, avoiding a gcd per term.
fn dense_product(a: &LaurentPoly2, b: &LaurentPoly2) -> LaurentPoly2 {
    let (Some((ax, ay)), Some((bx, by))) = (a.min_exponents(), b.min_exponents()) else {
        return LaurentPoly2::zero();
    };
    let (mx, my) = a.max_exponents().unwrap();
    let (nx, ny) = b.max_exponents().unwrap();
    let width = ((my - ay) + (ny - by) + 1) as usize;
    let height = ((mx - ax) + (nx - bx) + 1) as usize;
    let (da, ta) = integral_parts(a);
    let (db, tb) = integral_parts(b);
    let mut grid = vec![<BigInt as num_traits::Zero>::zero(); width * height];
    for ((i1, j1), c1) in &ta {
        for ((i2, j2), c2) in &tb {
            let r = (i1 - ax + i2 - bx) as usize;
            let c = (j1 - ay + j2 - by) as usize;
            grid[r * width + c] += c1 * c2;
        }
    }
    let den = da * db;
    let mut terms = BTreeMap::new();
    for (k, v) in grid.into_iter().enumerate() {
        if !num_traits::Zero::is_zero(&v) {
            let e = ((k / width) as i32 + ax + bx, (k % width) as i32 + ay + by);
            terms.insert(e, Rational::new(v, den.clone()));
        }
    }
    LaurentPoly2 { terms }
}

/// Sparse Laurent polynomial in `x` and `y` with rational coefficients,
/// keyed by `(i, j)` for the monomial `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl LaurentPoly2 {
    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), Rational)>) -> Self {
        let mut out: BTreeMap<(i32, i32), Rational> = BTreeMap::new();
        for (e, c) in terms {
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot = Ring::add(slot, &c);
        }
        out.retain(|_, c| !Ring::is_zero(c));
        LaurentPoly2 { terms: out }
    }

    pub fn from_ints(terms: &[((i32, i32), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    pub fn monomial(c: Rational, i: i32, j: i32) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `x^i y^j` with coefficient 1.
    pub fn xy_pow(i: i32, j: i32) -> Self {
        Self::monomial(Rational::one(), i, j)
    }

    pub fn coeff(&self, i: i32, j: i32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Embed a Laurent polynomial in `x`.
    pub fn from_x(p: &LaurentPoly1) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    /// Embed a Laurent polynomial in `y`.
    pub fn from_y(p: &LaurentPoly1) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    /// Coefficient of `y^j`, a Laurent polynomial in `x`.
    pub fn y_coeff(&self, j: i32) -> LaurentPoly1 {
        Laurent::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b == j)
                .map(|((a, _), c)| (*a, c.clone())),
        )
    }

    /// Coefficient of `x^i`, a Laurent polynomial in `y`.
    pub fn x_coeff(&self, i: i32) -> LaurentPoly1 {
        Laurent::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| *a == i)
                .map(|((_, b), c)| (*b, c.clone())),
        )
    }

    /// View as a Laurent polynomial in `y` with coefficients in `x`.
    pub fn y_slices(&self) -> Laurent<LaurentPoly1> {
        let mut out: BTreeMap<i32, Vec<(i32, Rational)>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            out.entry(*j).or_default().push((*i, c.clone()));
        }
        Laurent::from_terms(out.into_iter().map(|(j, v)| (j, Laurent::from_terms(v))))
    }

    /// View as a Laurent polynomial in `x` with coefficients in `y`.
    pub fn x_slices(&self) -> Laurent<LaurentPoly1> {
        self.swap_xy().y_slices()
    }

    /// Inverse of [`LaurentPoly2::y_slices`].
    pub fn from_y_slices(p: &Laurent<LaurentPoly1>) -> Self {
        Self::from_terms(
            p.terms()
                .flat_map(|(j, c)| c.terms().map(move |(i, a)| ((i, j), a.clone()))),
        )
    }

    /// Coefficients in `Q(x)`, as a Laurent polynomial in `y`.
    pub fn to_y_ratfunc(&self) -> Laurent<RatFunc1> {
        self.y_slices().map(RatFunc1::from_laurent)
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((*j, *i), c.clone()))
                .collect(),
        }
    }

    /// Apply an integer linear map to exponents: `(i, j) -> (a i + b j, c i + d j)`.
    pub fn map_exponents(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| (f(*i, *j), c.clone())))
    }

    pub fn shift(&self, di: i32, dj: i32) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Keep terms whose `x` exponent satisfies `part`.
    pub fn part_x(&self, part: Part) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| part.keeps(*i))
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    /// Keep terms whose `y` exponent satisfies `part`.
    pub fn part_y(&self, part: Part) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| part.keeps(*j))
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    /// `(min i, min j)` over the support.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let mi = self.terms.keys().map(|e| e.0).min()?;
        let mj = self.terms.keys().map(|e| e.1).min()?;
        Some((mi, mj))
    }

    /// `(max i, max j)` over the support.
    pub fn max_exponents(&self) -> Option<(i32, i32)> {
        let mi = self.terms.keys().map(|e| e.0).max()?;
        let mj = self.terms.keys().map(|e| e.1).max()?;
        Some((mi, mj))
    }

    /// Partial derivative in `x`.
    pub fn diff_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((i, j), c)| ((i - 1, *j), c * Rational::from_integer((*i).into()))),
        )
    }

    /// Partial derivative in `y`.
    pub fn diff_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((i, j), c)| ((*i, j - 1), c * Rational::from_integer((*j).into()))),
        )
    }

    /// Evaluate at `(x, y)` in any ring, given the inverses for negative
    /// exponents.
    pub fn eval_with<S: Ring>(&self, x: (&S, &S), y: (&S, &S)) -> S {
        let mut acc = S::zero();
        for ((i, j), c) in &self.terms {
            let xi = if *i < 0 { x.1 } else { x.0 }.pow(i.unsigned_abs());
            let yj = if *j < 0 { y.1 } else { y.0 }.pow(j.unsigned_abs());
            acc = acc.add(&xi.mul(&yj).scale(c));
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_with((x, &x.recip()), (y, &y.recip()))
    }
}

impl Ring for LaurentPoly2 {
    fn zero() -> Self {
        LaurentPoly2::default()
    }
    fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(slot) => {
                    *slot = Ring::add(slot, c);
                    if Ring::is_zero(slot) {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(*e, c.clone());
                }
            }
        }
        LaurentPoly2 { terms }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.terms.len() * other.terms.len() > DENSE_PRODUCT_THRESHOLD {
            return dense_product(self, other);
        }
        let mut terms: BTreeMap<(i32, i32), Rational> = BTreeMap::new();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                let slot = terms
                    .entry((i1 + i2, j1 + j2))
                    .or_insert_with(Rational::zero);
                *slot += c1 * c2;
            }
        }
        terms.retain(|_, c| !Ring::is_zero(c));
        LaurentPoly2 { terms }
    }
    fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::monomial(q.clone(), 0, 0)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((i, j), c) = self.terms.iter().next().unwrap();
        c.try_inv().map(|ci| Self::monomial(ci, -i, -j))
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * q)))
    }
}

fn mono_xy(i: i32, j: i32) -> String {
    let part = |v: &str, e: i32| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    match (part("x", i), part("y", j)) {
        (a, b) if a.is_empty() => b,
        (a, b) if b.is_empty() => a,
        (a, b) => format!("{a}*{b}"),
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest total degree first, then by x exponent.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(*i)));
        f.write_str(&render_terms(
            terms.into_iter().map(|(e, c)| (*e, c)),
            |(i, j)| mono_xy(i, j),
        ))
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}
