//! The kernel `K(x, y; t) = 1 - t S(x, y)` and the series attached to it.
//!
//! As a polynomial in `y`, `y K(x, y) = y - t (A₋₁ + A₀ y + A₁ y²)` has two
//! roots: `Y₀`, a power series in `t` with Laurent polynomial coefficients,
//! and `Y₁ = A₋₁ / (A₁ Y₀)`, which starts at `t⁻¹`. The discriminant
//! `Δ(x) = (1 - t A₀)² - 4 t² A₋₁ A₁` factors uniquely as `Δ₀ Δ₋(x̄) Δ₊(x)`
//! over power series in `t`; the factors are obtained by lifting the
//! factorisation of `x^δ Δ` at `t = 0`.

use crate::algebra::{int, Rational, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::series::{Laurent, LaurentPoly1, LaurentPoly2, RatFunc1, TruncSeries};
use crate::stepset::StepSet;

/// Exact data of the kernel of one model.
#[derive(Clone, Debug)]
pub struct KernelData {
    pub model: StepSet,
    /// `1 - t S(x, y)`: the step polynomial `S`.
    pub steps: LaurentPoly2,
    /// `Δ` as a polynomial of degree 2 in `t`.
    pub delta: TruncSeries<LaurentPoly1>,
    /// `-val_x Δ` and `deg_x Δ`; both are at least 0 since `Δ(x; 0) = 1`.
    pub delta_low: i32,
    pub delta_high: i32,
}

impl KernelData {
    pub fn new(s: StepSet) -> Self {
        let (am, a0, ap) = (s.a(-1), s.a(0), s.a(1));
        let one = LaurentPoly1::one();
        let delta = TruncSeries::exact(
            0,
            vec![
                one,
                a0.scale(&int(-2)),
                a0.mul(&a0).sub(&am.mul(&ap).scale(&int(4))),
            ],
        );
        let (mut lo, mut hi) = (0, 0);
        for (_, c) in delta.terms() {
            lo = lo.min(c.valuation().unwrap_or(0));
            hi = hi.max(c.degree().unwrap_or(0));
        }
        KernelData {
            model: s,
            steps: s.poly(),
            delta,
            delta_low: -lo,
            delta_high: hi,
        }
    }

    /// `1 - t (A₋₁ / Y + A₀ + A₁ Y)` for a candidate root `Y`.
    pub fn kernel_at(&self, y: &TruncSeries<RatFunc1>) -> Result<TruncSeries<RatFunc1>> {
        let s = self.model;
        let r = |p: LaurentPoly1| RatFunc1::from_laurent(&p);
        let inner = y
            .inverse()?
            .mul_coeff(&r(s.a(-1)))
            .add(&TruncSeries::constant(r(s.a(0))))
            .add(&y.mul_coeff(&r(s.a(1))));
        Ok(TruncSeries::one().sub(&TruncSeries::t().mul(&inner)))
    }

    /// `√Δ` to `O(t^order)`.
    pub fn sqrt_delta(&self, order: i32) -> Result<TruncSeries<LaurentPoly1>> {
        self.delta.truncate(order).sqrt()
    }
}

/// The two roots of the kernel in `y`.
#[derive(Clone, Debug)]
pub struct YRoots {
    /// `Y₀ = t A₋₁ + O(t²)`, to `O(t^order)`.
    pub y0: TruncSeries<LaurentPoly1>,
    /// `Y₁ = 1/(t A₁) + ...`, to `O(t^(order - 2))`.
    pub y1: TruncSeries<RatFunc1>,
}

/// `Y₀` solves `Y = t (A₋₁ + A₀ Y + A₁ Y²)`; `Y₁ = (A₋₁/A₁) / Y₀`.
pub fn y_roots(s: StepSet, order: i32) -> Result<YRoots> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "y_roots needs order >= 2, got {order}"
        )));
    }
    let (am, a0, ap) = (s.a(-1), s.a(0), s.a(1));
    if am.is_zero() || ap.is_zero() {
        return Err(Error::OutOfScope(format!(
            "{s} has no step in one y direction"
        )));
    }
    let y0 = TruncSeries::fixed_point(order, |y: &TruncSeries<LaurentPoly1>| {
        let inner = TruncSeries::constant(am.clone())
            .add(&y.mul_coeff(&a0))
            .add(&y.mul(y).mul_coeff(&ap));
        TruncSeries::t().mul(&inner)
    })?;
    let ratio = RatFunc1::from_laurent(&am).mul(&RatFunc1::from_laurent(&ap).try_inv().unwrap());
    let y1 = y0.to_ratfunc().inverse()?.mul_coeff(&ratio);
    Ok(YRoots { y0, y1 })
}

/// `[y^j] 1/K` computed from the roots: `Y₀^{-j} / √Δ` for `j ≤ 0` and
/// `Y₁^{-j} / √Δ` for `j ≥ 0`, to `O(t^order)`.
pub fn inv_kernel_ycoeff(s: StepSet, j: i32, order: i32) -> Result<TruncSeries<LaurentPoly1>> {
    let data = KernelData::new(s);
    let inv_sqrt = data.sqrt_delta(order)?.inverse()?;
    let roots = y_roots(s, order.max(2))?;
    let k = j.unsigned_abs();
    let power = if j <= 0 {
        roots.y0.to_ratfunc().pow(k)
    } else {
        // 1/Y₁ = Y₀ A₁ / A₋₁ has valuation 1, like Y₀.
        let ratio = RatFunc1::from_laurent(&s.a(1))
            .mul(&RatFunc1::from_laurent(&s.a(-1)).try_inv().unwrap());
        roots.y0.to_ratfunc().mul_coeff(&ratio).pow(k)
    };
    power
        .mul(&inv_sqrt.to_ratfunc())
        .truncate(order)
        .to_laurent()
}

/// `[y^j] 1/K` from the geometric series `Σ tⁿ Sⁿ`, to `O(t^order)`.
pub fn inv_kernel_ycoeff_direct(s: StepSet, j: i32, order: i32) -> TruncSeries<LaurentPoly1> {
    let step = s.poly();
    let mut power = LaurentPoly2::one();
    let mut coeffs = Vec::with_capacity(order.max(0) as usize);
    for _ in 0..order {
        coeffs.push(power.y_coeff(j));
        power = power.mul(&step);
    }
    TruncSeries::from_coeffs(coeffs, order)
}

/// Compare both expansions of `[y^j] 1/K` for `|j| < order`.
pub fn verify_kernel_inverse(s: StepSet, order: i32) -> Result<bool> {
    for j in -(order - 1)..order {
        if inv_kernel_ycoeff(s, j, order)? != inv_kernel_ycoeff_direct(s, j, order) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δ = Δ₀ Δ₋(x̄) Δ₊(x)` to `O(t^order)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalFactorization {
    pub delta0: TruncSeries<Rational>,
    /// Coefficients are polynomials in `x̄`.
    pub minus: TruncSeries<LaurentPoly1>,
    /// Coefficients are polynomials in `x`.
    pub plus: TruncSeries<LaurentPoly1>,
    pub order: i32,
}

impl CanonicalFactorization {
    pub fn product(&self) -> TruncSeries<LaurentPoly1> {
        self.minus
            .mul(&self.plus)
            .mul(&self.delta0.map(|c| LaurentPoly1::constant(c.clone())))
    }
}

/// Lift `f = g h` with `f ≡ x^δ` at `t = 0`, `g = x^δ + (degree < δ)` and
/// `h ≡ 1`, order by order. Coefficients of `f` are polynomials in `x`.
fn lift(f: &[UniPoly], delta: usize, order: usize) -> (Vec<UniPoly>, Vec<UniPoly>) {
    let mut g = vec![UniPoly::monomial(int(1), delta)];
    let mut h = vec![UniPoly::one()];
    for k in 1..order {
        let mut r = f.get(k).cloned().unwrap_or_else(UniPoly::zero);
        for i in 1..k {
            r = r.sub(&g[i].mul(&h[k - i]));
        }
        let coeffs = r.coeffs();
        let low = UniPoly::new(coeffs.iter().take(delta).cloned().collect());
        let high = UniPoly::new(coeffs.iter().skip(delta).cloned().collect());
        g.push(low);
        h.push(high);
    }
    (g, h)
}

fn series_from(polys: Vec<UniPoly>, shift: i32, order: i32) -> TruncSeries<LaurentPoly1> {
    TruncSeries::from_coeffs(
        polys
            .into_iter()
            .map(|p| LaurentPoly1::from_poly(&p).shift(shift))
            .collect(),
        order,
    )
}

/// Split `x^δ Δ` (or its reversal) and normalise: returns the factor that
/// is polynomial in the reversed variable, `Δ₀`, and the factor with
/// constant term 1 that is polynomial in the lifting variable.
fn factor_once(
    delta: &TruncSeries<LaurentPoly1>,
    low: i32,
    order: i32,
) -> Result<(
    TruncSeries<LaurentPoly1>,
    TruncSeries<Rational>,
    TruncSeries<LaurentPoly1>,
)> {
    let f: Vec<UniPoly> = (0..=2)
        .map(|k| {
            let c = delta.coeff(k).shift(low);
            let (v, p) = c.to_poly_shifted();
            if c.is_zero() {
                UniPoly::zero()
            } else {
                p.shift_up(v as usize)
            }
        })
        .collect();
    let (g, h) = lift(&f, low as usize, order as usize);
    let g = series_from(g, -low, order);
    let h = series_from(h, 0, order);
    let delta0 = h.map(|c| c.coeff(0));
    let inv0 = delta0.inverse()?.map(|c| LaurentPoly1::constant(c.clone()));
    let plus = h.mul(&inv0).truncate(order);
    Ok((g, delta0, plus))
}

/// `Δ₀`, `Δ₋`, `Δ₊` by lifting `x^δ Δ = g h` over power series in `t`.
pub fn canonical_factorization(s: StepSet, order: i32) -> Result<CanonicalFactorization> {
    canonical_factorization_with(&KernelData::new(s), order, Lifting::Direct)
}

/// Which polynomial the lifting runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lifting {
    /// `x^δ Δ(x)`, lifting the `x̄` factor.
    Direct,
    /// `x^d Δ(x̄)`, lifting the `x` factor.
    Reversed,
}

pub fn canonical_factorization_with(
    data: &KernelData,
    order: i32,
    lifting: Lifting,
) -> Result<CanonicalFactorization> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!(
            "factorisation needs order >= 1, got {order}"
        )));
    }
    if data.delta_low == 0 && data.delta_high == 0 {
        return Ok(CanonicalFactorization {
            delta0: data.delta.map(|c| c.coeff(0)).truncate(order),
            minus: TruncSeries::one().truncate(order),
            plus: TruncSeries::one().truncate(order),
            order,
        });
    }
    let out = match lifting {
        Lifting::Direct => {
            let (minus, delta0, plus) = factor_once(&data.delta, data.delta_low, order)?;
            CanonicalFactorization {
                delta0,
                minus,
                plus,
                order,
            }
        }
        Lifting::Reversed => {
            let reversed = data.delta.map(Laurent::reflect);
            let (plus, delta0, minus) = factor_once(&reversed, data.delta_high, order)?;
            CanonicalFactorization {
                delta0,
                minus: minus.map(Laurent::reflect),
                plus: plus.map(Laurent::reflect),
                order,
            }
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    #[test]
    fn kreweras_small_root() {
        let r = y_roots(s("W,S,NE"), 5).unwrap();
        assert!(r.y0.coeff(0).is_zero());
        assert_eq!(r.y0.coeff(1), LaurentPoly1::one());
        assert_eq!(r.y0.coeff(2), LaurentPoly1::from_ints(&[(-1, 1)]));
        // t³: x̄² from A₀², plus x from A₁.
        assert_eq!(r.y0.coeff(3), LaurentPoly1::from_ints(&[(-2, 1), (1, 1)]));
    }

    #[test]
    fn simple_walk_first_y_coefficient() {
        let c = inv_kernel_ycoeff(s("N,S,E,W"), 1, 3).unwrap();
        assert!(c.coeff(0).is_zero());
        assert_eq!(c.coeff(1), LaurentPoly1::one());
        assert_eq!(c.coeff(2), LaurentPoly1::from_ints(&[(-1, 2), (1, 2)]));
        assert_eq!(c, inv_kernel_ycoeff_direct(s("N,S,E,W"), 1, 3));
    }

    #[test]
    fn far_coefficients_vanish() {
        let c = inv_kernel_ycoeff(s("N,S,E,W"), 6, 5).unwrap();
        assert_eq!(c.valuation(), None);
    }

    #[test]
    fn trivial_factorization_when_constant() {
        // N and S only: Δ does not depend on x.
        let f = canonical_factorization(s("N,S"), 6).unwrap();
        assert_eq!(f.minus, TruncSeries::one().truncate(6));
        assert!(f
            .product()
            .agrees_with(&KernelData::new(s("N,S")).delta.truncate(6)));
    }
}
