use std::fmt;

use crate::algebra::{rat, Rational, Ring};
use crate::error::{Error, Result};

use super::laurent::{render_terms, Laurent, LaurentPoly1};
use super::ratfunc::RatFunc1;

const EXACT: i32 = i32::MAX;

/// Power series in `t` known up to (excluding) a truncation order.
///
/// Coefficients are stored densely from `start`; stored entries past the
/// end and below the order are zero. Entries at or above the order are
/// unknown. A series built from a polynomial in `t` can be marked exact, in
/// which case it has no truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<C> {
    start: i32,
    coeffs: Vec<C>,
    order: i32,
}

impl<C: Ring> TruncSeries<C> {
    fn normalized(mut start: i32, mut coeffs: Vec<C>, order: i32) -> Self {
        if order != EXACT {
            let keep = (order - start).max(0) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            coeffs.drain(..lead);
            start += lead as i32;
        }
        if coeffs.is_empty() {
            start = 0;
        }
        TruncSeries {
            start,
            coeffs,
            order,
        }
    }

    /// Coefficients of `t^start, t^(start+1), ...`, known below `order`.
    pub fn new(start: i32, coeffs: Vec<C>, order: i32) -> Self {
        Self::normalized(start, coeffs, order)
    }

    /// Series `c_0 + c_1 t + ...` known below `order`.
    pub fn from_coeffs(coeffs: Vec<C>, order: i32) -> Self {
        Self::normalized(0, coeffs, order)
    }

    /// Polynomial in `t` with the given coefficients from `t^start`.
    pub fn exact(start: i32, coeffs: Vec<C>) -> Self {
        Self::normalized(start, coeffs, EXACT)
    }

    pub fn constant(c: C) -> Self {
        Self::exact(0, vec![c])
    }

    /// `c t^k`, exact.
    pub fn monomial(c: C, k: i32) -> Self {
        Self::exact(k, vec![c])
    }

    /// The series variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `O(t^order)`.
    pub fn zero_to(order: i32) -> Self {
        Self::normalized(0, Vec::new(), order)
    }

    /// `None` when exact.
    pub fn order(&self) -> Option<i32> {
        (self.order != EXACT).then_some(self.order)
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Coefficient of `t^n`.
    ///
    /// # Panics
    /// If `n` is at or past the truncation order.
    pub fn coeff(&self, n: i32) -> C {
        assert!(
            n < self.order,
            "coefficient t^{n} is beyond O(t^{})",
            self.order
        );
        if n < self.start {
            return C::zero();
        }
        self.coeffs
            .get((n - self.start) as usize)
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Lowest index with a nonzero known coefficient.
    pub fn valuation(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// `(n, c_n)` for every stored (nonzero-range) coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.start + k as i32, c))
    }

    /// Coefficients `c_0..c_{n-1}`.
    pub fn coeff_vec(&self, n: i32) -> Vec<C> {
        (0..n).map(|k| self.coeff(k)).collect()
    }

    pub fn truncate(&self, order: i32) -> Self {
        Self::normalized(self.start, self.coeffs.clone(), order.min(self.order))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        let order = if self.order == EXACT {
            EXACT
        } else {
            self.order + k
        };
        Self::normalized(self.start + k, self.coeffs.clone(), order)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries::normalized(self.start, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Multiply every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// True when both series agree wherever both are known.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let lo = self.start.min(other.start);
        let hi = (self.start + self.coeffs.len() as i32)
            .max(other.start + other.coeffs.len() as i32)
            .min(order);
        (lo..hi).all(|n| self.coeff(n) == other.coeff(n))
    }

    /// Lowest index that may be nonzero: the valuation, or the order when
    /// nothing nonzero is known.
    fn low(&self) -> i32 {
        self.valuation().unwrap_or(self.order)
    }

    /// `t^va O(t^Tb) + t^vb O(t^Ta)` bounds what a product knows.
    fn order_for_product(&self, other: &Self) -> i32 {
        let bound = |a: &Self, b: &Self| {
            if a.order == EXACT || b.low() == EXACT {
                EXACT
            } else {
                a.order + b.low()
            }
        };
        bound(self, other).min(bound(other, self))
    }

    /// Inverse, for a series whose lowest known coefficient is invertible.
    ///
    /// If `self = t^v g` is known to order `T`, the inverse is known to order
    /// `T - 2v`.
    pub fn inverse(&self) -> Result<Self> {
        if self.order == EXACT {
            return Err(Error::InvalidArgument(
                "inverse of an exact series needs a truncation order".into(),
            ));
        }
        let v = self.valuation().ok_or(Error::NonInvertibleSeries)?;
        let inv0 = self.coeffs[0].try_inv().ok_or(Error::NonInvertibleSeries)?;
        let len = (self.order - v).max(0) as usize;
        let g = |k: usize| self.coeffs.get(k).cloned().unwrap_or_else(C::zero);
        let mut h: Vec<C> = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                h.push(inv0.clone());
                continue;
            }
            let mut acc = C::zero();
            for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                let gk = g(k);
                if !gk.is_zero() {
                    acc = acc.add(&gk.mul(&h[n - k]));
                }
            }
            h.push(acc.mul(&inv0).neg());
        }
        Ok(Self::normalized(-v, h, self.order - 2 * v))
    }

    /// Square root with constant term 1, by Newton iteration
    /// `s <- (s + f / s) / 2` with doubling precision.
    pub fn sqrt(&self) -> Result<Self> {
        if self.order == EXACT {
            return Err(Error::InvalidArgument(
                "square root of an exact series needs a truncation order".into(),
            ));
        }
        if self.start < 0 || !self.coeff(0).is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let target = self.order;
        let half = rat(1, 2);
        let mut s = Self::from_coeffs(vec![C::one()], 1);
        let mut prec = 1;
        while prec < target {
            prec = (2 * prec).min(target);
            let f = self.truncate(prec);
            let s_ext = Self::normalized(s.start, s.coeffs.clone(), prec);
            let q = f.mul(&s_ext.inverse()?);
            s = s_ext.add(&q).scale(&half).truncate(prec);
        }
        Ok(s)
    }

    /// Solve `y = f(y)` t-adically by direct iteration from `y = 0`.
    ///
    /// Each pass must fix at least one more coefficient; otherwise the map
    /// is not contracting and [`Error::Divergence`] reports the index that
    /// failed to settle.
    pub fn fixed_point(order: i32, f: impl Fn(&Self) -> Self) -> Result<Self> {
        let mut y = Self::zero_to(order);
        let mut settled = i32::MIN;
        loop {
            let next = f(&y).truncate(order);
            if next.order < order {
                return Err(Error::InvalidArgument(format!(
                    "fixed-point map loses precision: O(t^{}) < O(t^{order})",
                    next.order
                )));
            }
            let diff = next.sub(&y);
            let Some(first) = diff.valuation() else {
                return Ok(next);
            };
            if first <= settled {
                return Err(Error::Divergence(first));
            }
            settled = first;
            y = next;
        }
    }
}

impl<C: Ring> Ring for TruncSeries<C> {
    fn zero() -> Self {
        Self::exact(0, Vec::new())
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        if self.coeffs.is_empty() {
            return other.truncate(order);
        }
        if other.coeffs.is_empty() {
            return self.truncate(order);
        }
        let start = self.start.min(other.start);
        let end = (self.start + self.coeffs.len() as i32)
            .max(other.start + other.coeffs.len() as i32)
            .min(order);
        let coeffs = (start..end.max(start))
            .map(|n| {
                let a = self.stored(n);
                let b = other.stored(n);
                match (a, b) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => C::zero(),
                }
            })
            .collect();
        Self::normalized(start, coeffs, order)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let order = self.order_for_product(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero_to(order);
        }
        let start = self.start + other.start;
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = if order == EXACT {
            full
        } else {
            full.min((order - start).max(0) as usize)
        };
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self::normalized(start, coeffs, order)
    }
    fn neg(&self) -> Self {
        TruncSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
            order: self.order,
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.order == EXACT {
            if self.coeffs.len() == 1 {
                return self.coeffs[0]
                    .try_inv()
                    .map(|c| Self::monomial(c, -self.start));
            }
            return None;
        }
        self.inverse().ok()
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::normalized(
            self.start,
            self.coeffs.iter().map(|c| c.scale(q)).collect(),
            self.order,
        )
    }
}

impl<C: Ring> TruncSeries<C> {
    fn stored(&self, n: i32) -> Option<&C> {
        if n < self.start {
            None
        } else {
            self.coeffs.get((n - self.start) as usize)
        }
    }
}

impl TruncSeries<LaurentPoly1> {
    /// Coefficientwise conversion to rational-function coefficients.
    pub fn to_ratfunc(&self) -> TruncSeries<RatFunc1> {
        self.map(RatFunc1::from_laurent)
    }

    /// Substitute a rational value for the coefficient variable.
    pub fn eval_x(&self, x: &Rational) -> TruncSeries<Rational> {
        self.map(|c| c.eval(x))
    }

    /// Coefficient of `x^k` in every `t`-coefficient.
    pub fn x_coeff(&self, k: i32) -> TruncSeries<Rational> {
        self.map(|c| c.coeff(k))
    }
}

impl TruncSeries<RatFunc1> {
    /// Coefficientwise exact conversion back to Laurent polynomials.
    pub fn to_laurent(&self) -> Result<TruncSeries<LaurentPoly1>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(RatFunc1::to_laurent)
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries::normalized(self.start, coeffs, self.order))
    }
}

impl<C: Ring> TruncSeries<Laurent<C>> {
    /// Apply [`Laurent::part`] to every coefficient.
    pub fn part(&self, part: super::Part) -> Self {
        self.map(|c| c.part(part))
    }
}

impl fmt::Display for TruncSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = render_terms(self.terms(), |n| match n {
            0 => String::new(),
            1 => "t".to_string(),
            n => format!("t^{n}"),
        });
        if self.order == EXACT {
            f.write_str(&body)
        } else if self.coeffs.is_empty() {
            write!(f, "O(t^{})", self.order)
        } else {
            write!(f, "{body} + O(t^{})", self.order)
        }
    }
}

impl<C: fmt::Debug> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries")
            .field("start", &self.start)
            .field("coeffs", &self.coeffs)
            .field(
                "order",
                &if self.order == EXACT {
                    None
                } else {
                    Some(self.order)
                },
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    type Q = TruncSeries<Rational>;

    fn ints(cs: &[i64], order: i32) -> Q {
        Q::from_coeffs(cs.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn geometric_inverse() {
        let f = ints(&[1, -1], 8);
        assert_eq!(f.inverse().unwrap(), ints(&[1; 8], 8));
        assert_eq!(ints(&[1], 5).inverse().unwrap(), ints(&[1], 5));
    }

    #[test]
    fn inverse_of_shifted_series() {
        // 1 / (t - t^2) = t^-1 (1 + t + t^2 + ...), known to order T - 2
        let f = Q::new(1, vec![int(1), int(-1)], 6);
        let inv = f.inverse().unwrap();
        assert_eq!(inv.order(), Some(4));
        assert_eq!(inv.coeff(-1), int(1));
        assert!(f.mul(&inv).agrees_with(&Q::one()));
        assert_eq!(f.mul(&inv).order(), Some(5));
    }

    #[test]
    fn sqrt_catalan_like() {
        let f = ints(&[1, -4], 8);
        let s = f.sqrt().unwrap();
        assert_eq!(s, ints(&[1, -2, -2, -4, -10, -28, -84, -264], 8));
        assert!(s.mul(&s).agrees_with(&f));
        assert!(matches!(
            ints(&[2, 1], 4).sqrt(),
            Err(Error::SqrtConstantTerm)
        ));
    }

    #[test]
    fn fixed_points() {
        // W = t (2 + W^3)
        let w = Q::fixed_point(10, |w| Q::t().mul(&Q::constant(int(2)).add(&w.pow(3)))).unwrap();
        assert_eq!(w, ints(&[0, 2, 0, 0, 8, 0, 0, 96, 0, 0], 10));
        let y = Q::fixed_point(6, |y| Q::t().mul(&Q::one().add(y))).unwrap();
        assert_eq!(y, ints(&[0, 1, 1, 1, 1, 1], 6));
        assert!(matches!(
            Q::fixed_point(4, |y| y.add(&Q::one())),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn truncation_tracks_minimum() {
        let a = ints(&[1, 1], 3);
        let b = ints(&[1, 2, 3, 4, 5], 6);
        assert_eq!(a.add(&b).order(), Some(3));
        assert_eq!(a.mul(&b).order(), Some(3));
        let t = Q::t();
        assert_eq!(t.mul(&b).order(), Some(7));
        assert_eq!(Q::t().mul(&Q::t()).order(), None);
        assert_eq!(ints(&[1, 2], 4).to_string(), "1 + 2*t + O(t^4)");
    }
}
