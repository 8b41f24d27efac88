//! Algebraic solutions for the three `x/y`-symmetric models with a finite
//! group, obtained from the half-orbit identity
//!
//! ```text
//! √Δ₋(x̄) (x/t − x̄ A₁(x) Q_d(x̄))
//!     = (x(1 − tA₀)/t − x̄A₁ − 2t x A₋₁ A₁ Q(x,0) + tεA₁ Q(0,0)) / √(Δ₀ Δ₊(x))
//! ```
//!
//! by separating powers of `x`. Everything is a truncated series in `t`; the
//! closed forms in terms of the algebraic series `W`, `Z` and `N` are
//! evaluated the same way and compared coefficientwise.

use serde::Serialize;

use crate::algebra::{int, rat, Rational, Ring};
use crate::counter::{
    count_dp, CountTable, DOUBLE_KREWERAS, DOUBLE_TANDEM, KREWERAS, REVERSE_KREWERAS, TANDEM,
};
use crate::error::{Error, Result};
use crate::kernel::{canonical_factorization, CanonicalFactorization};
use crate::series::{LaurentPoly1, Part, TruncSeries};
use crate::stepset::StepSet;

type Series = TruncSeries<Rational>;
type XSeries = TruncSeries<LaurentPoly1>;

/// Extra `t`-precision carried through divisions by powers of `t`.
const GUARD: i32 = 6;

/// The algebraic series parametrising the solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlgebraicName {
    W,
    Z,
    N,
}

impl AlgebraicName {
    pub fn relation(self) -> &'static str {
        match self {
            AlgebraicName::W => "W = t(2 + W^3)",
            AlgebraicName::Z => "Z = t(1 - 2Z + 6Z^2 - 2Z^3 + Z^4)/(1 - Z)^2",
            AlgebraicName::N => "N = t(1 + 2N + 4N^2)",
        }
    }

    /// Right-hand side of the defining relation `y = t f(y)`.
    fn rhs(self, y: &Series) -> Series {
        let poly = |cs: &[i64]| {
            cs.iter().rev().fold(Series::zero(), |acc, &c| {
                acc.mul(y).add(&Series::constant(int(c)))
            })
        };
        let f = match self {
            AlgebraicName::W => poly(&[2, 0, 0, 1]),
            AlgebraicName::N => poly(&[1, 2, 4]),
            AlgebraicName::Z => {
                let den = Series::one()
                    .sub(y)
                    .pow(2)
                    .inverse()
                    .expect("1 - Z is a unit");
                poly(&[1, -2, 6, -2, 1]).mul(&den)
            }
        };
        f.shift(1)
    }
}

/// The unique solution without constant term of a relation `y = t f(y)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicSeries {
    pub name: AlgebraicName,
    #[serde(serialize_with = "rational_series")]
    pub series: Series,
}

impl AlgebraicSeries {
    /// Solve to `O(t^order)`.
    ///
    /// # Panics
    /// If `order` is 0.
    pub fn new(name: AlgebraicName, order: usize) -> Self {
        assert!(order >= 1, "algebraic series need order >= 1");
        let series =
            Series::fixed_point(order as i32, |y| name.rhs(y)).expect("y = t f(y) is contracting");
        AlgebraicSeries { name, series }
    }

    pub fn relation(&self) -> &'static str {
        self.name.relation()
    }

    /// `y - t f(y)`, which vanishes to the truncation order.
    pub fn residual(&self) -> Series {
        self.series.sub(&self.name.rhs(&self.series))
    }

    pub fn verify(&self) -> bool {
        self.residual().valuation().is_none() && self.series.coeff(0).is_zero()
    }
}

pub fn series_w(order: usize) -> AlgebraicSeries {
    AlgebraicSeries::new(AlgebraicName::W, order)
}

pub fn series_z(order: usize) -> AlgebraicSeries {
    AlgebraicSeries::new(AlgebraicName::Z, order)
}

pub fn series_n(order: usize) -> AlgebraicSeries {
    AlgebraicSeries::new(AlgebraicName::N, order)
}

/// The models solved here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfOrbitModel {
    /// `W, S, NE`.
    Kreweras,
    /// `E, N, SW`.
    ReverseKreweras,
    /// The union of both.
    DoubleKreweras,
}

/// Which slice of the half-orbit identity is read first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Boundary {
    /// The positive part alone gives `Q(x, 0)`; `Q(0, 0)` is its constant term.
    PositivePart,
    /// The `x⁰` slice gives `Q(0, 0)`, after which the non-negative part
    /// gives `Q(x, 0)`.
    ConstantSliceFirst,
}

impl HalfOrbitModel {
    pub const ALL: [HalfOrbitModel; 3] = [
        HalfOrbitModel::Kreweras,
        HalfOrbitModel::ReverseKreweras,
        HalfOrbitModel::DoubleKreweras,
    ];

    pub fn step_set(self) -> StepSet {
        let text = match self {
            HalfOrbitModel::Kreweras => KREWERAS,
            HalfOrbitModel::ReverseKreweras => REVERSE_KREWERAS,
            HalfOrbitModel::DoubleKreweras => DOUBLE_KREWERAS,
        };
        text.parse().expect("valid step set")
    }

    pub fn from_step_set(s: StepSet) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.step_set() == s)
            .ok_or_else(|| Error::NotApplicable(format!("no half-orbit solution for {s}")))
    }

    fn boundary(self) -> Boundary {
        match self {
            HalfOrbitModel::Kreweras => Boundary::PositivePart,
            _ => Boundary::ConstantSliceFirst,
        }
    }
}

/// `Q(x,0)`, `Q_d(x)`, `Q(0,0)` and `Q(1,1)` to `O(t^order)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfOrbitSolution {
    pub model: HalfOrbitModel,
    pub order: usize,
    /// Coefficients are polynomials in `x`.
    pub q_x0: XSeries,
    /// Walks ending on the diagonal, `Σ q(i,i;n) xⁱ tⁿ`.
    pub q_diag: XSeries,
    pub q00: Series,
    pub q11: Series,
}

/// One named series, coefficients of `t⁰, t¹, ...` rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTable {
    pub model: StepSet,
    pub series: String,
    pub coefficients: Vec<String>,
}

impl HalfOrbitSolution {
    pub fn series_tables(&self) -> Vec<SeriesTable> {
        let model = self.model.step_set();
        let n = self.order as i32;
        let x_table = |name: &str, s: &XSeries| SeriesTable {
            model,
            series: name.into(),
            coefficients: (0..n).map(|k| s.coeff(k).to_string()).collect(),
        };
        let table = |name: &str, s: &Series| SeriesTable {
            model,
            series: name.into(),
            coefficients: (0..n).map(|k| s.coeff(k).to_string()).collect(),
        };
        vec![
            x_table("Q(x,0)", &self.q_x0),
            x_table("Q_d(x)", &self.q_diag),
            table("Q(0,0)", &self.q00),
            table("Q(1,1)", &self.q11),
        ]
    }
}

fn lift(s: &Series) -> XSeries {
    s.map(|c| LaurentPoly1::constant(c.clone()))
}

fn x() -> LaurentPoly1 {
    LaurentPoly1::var()
}

fn xpoly(terms: &[(i32, i64)]) -> LaurentPoly1 {
    LaurentPoly1::from_ints(terms)
}

/// Multiply every coefficient by `x^k`.
fn x_shift(s: &XSeries, k: i32) -> XSeries {
    s.map(|c| c.shift(k))
}

fn div_laurent(a: &LaurentPoly1, d: &LaurentPoly1) -> Result<LaurentPoly1> {
    if a.is_zero() {
        return Ok(LaurentPoly1::zero());
    }
    let (av, ap) = a.to_poly_shifted();
    let (dv, dp) = d.to_poly_shifted();
    let (q, r) = ap.div_rem(&dp);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            remainder: LaurentPoly1::from_poly(&r).to_string(),
        });
    }
    Ok(LaurentPoly1::from_poly(&q).shift(av - dv))
}

/// Exact division of every `t`-coefficient by a Laurent polynomial in `x`.
fn div_coeffs(a: &XSeries, d: &LaurentPoly1) -> Result<XSeries> {
    let coeffs = a
        .terms()
        .map(|(_, c)| div_laurent(c, d))
        .collect::<Result<Vec<_>>>()?;
    let start = a.valuation().unwrap_or(0);
    Ok(match a.order() {
        Some(o) => XSeries::new(start, coeffs, o),
        None => XSeries::exact(start, coeffs),
    })
}

fn supported_in(s: &XSeries, part: Part) -> bool {
    s.terms()
        .all(|(_, c)| c.terms().all(|(e, _)| part.keeps(e)))
}

fn truncated<C: Ring>(s: &TruncSeries<C>, order: usize, what: &str) -> Result<TruncSeries<C>> {
    let order = order as i32;
    match s.order() {
        Some(o) if o < order => Err(Error::InvalidArgument(format!(
            "{what} is only known to O(t^{o}), below O(t^{order})"
        ))),
        _ => Ok(s.truncate(order)),
    }
}

/// Solve one of the three models from its half-orbit identity.
pub fn half_orbit_solve(model: HalfOrbitModel, order: usize) -> Result<HalfOrbitSolution> {
    if order < 1 {
        return Err(Error::InvalidArgument(
            "half-orbit solving needs order >= 1".into(),
        ));
    }
    let s = model.step_set();
    let work = order as i32 + GUARD;
    let fact = canonical_factorization(s, work)?;
    let root_minus = fact.minus.sqrt()?;
    let outer = fact.plus.mul(&lift(&fact.delta0)).sqrt()?;
    let r = outer.inverse()?;

    let (am, a0, ap) = (s.a(-1), s.a(0), s.a(1));
    let eps = int(s.epsilon());
    // x(1 - t A₀)/t - x̄ A₁
    let p = XSeries::exact(-1, vec![x(), x().mul(&a0).add(&ap.shift(-1)).neg()]);
    let rp = r.mul(&p);
    let weight = am.mul(&ap).shift(1);
    let x_over_t = XSeries::monomial(x(), -1);

    // With F = 2t x A₋₁ A₁ Q(x,0) - tεA₁ Q(0,0), F(0) = α Q(0,0).
    let alpha = Series::monomial(int(2).mul(&weight.coeff(0)).sub(&eps.mul(&ap.coeff(0))), 1);
    let beta = ap.coeff(1);
    let r0 = r.x_coeff(0);
    // The x⁰ slice reads c (β - R(0) α) = [x⁻¹]√Δ₋ / t - [x⁰] R P.
    let slice_rhs = root_minus.x_coeff(-1).shift(-1).sub(&rp.x_coeff(0));
    let slice_coeff = Series::constant(beta).sub(&r0.mul(&alpha));
    let positive = rp.part(Part::Positive).sub(&x_over_t);

    let solve_axis = |f: &XSeries, c: &Series| -> Result<XSeries> {
        let numerator = f.add(&lift(&c.shift(1).scale(&eps)).mul_coeff(&ap));
        div_coeffs(&numerator.shift(-1), &weight.scale(&int(2)))
    };
    let (q_x0, c) = match model.boundary() {
        Boundary::PositivePart => {
            debug_assert!(alpha.valuation().is_none() && eps.is_zero());
            let f = positive.mul(&outer);
            let q_x0 = solve_axis(&f, &Series::zero())?;
            let c = q_x0.x_coeff(0);
            (q_x0, c)
        }
        Boundary::ConstantSliceFirst => {
            let c = slice_rhs.mul(&slice_coeff.inverse()?);
            let f = positive.add(&lift(&r0.mul(&alpha).mul(&c))).mul(&outer);
            (solve_axis(&f, &c)?, c)
        }
    };
    if !supported_in(&q_x0, Part::NonNegative) {
        return Err(Error::TheoremViolation(format!(
            "{s}: Q(x,0) has negative powers of x"
        )));
    }
    if !c.mul(&slice_coeff).agrees_with(&slice_rhs) {
        return Err(Error::TheoremViolation(format!(
            "{s}: the x^0 slice is violated"
        )));
    }

    let f_full = q_x0
        .mul_coeff(&weight.scale(&int(2)))
        .shift(1)
        .sub(&lift(&c.shift(1).scale(&eps)).mul_coeff(&ap));
    let rhs = r.mul(&p.sub(&f_full));
    let scaled_qd = x_over_t.sub(&rhs.mul(&root_minus.inverse()?));
    let qd_bar = div_coeffs(&scaled_qd, &ap.shift(-1))?;
    if !supported_in(&qd_bar, Part::NonPositive) {
        return Err(Error::TheoremViolation(format!(
            "{s}: Q_d(1/x) has positive powers of x"
        )));
    }
    let q_diag = qd_bar.map(LaurentPoly1::reflect);
    if !q_diag.x_coeff(0).agrees_with(&c) {
        return Err(Error::TheoremViolation(format!(
            "{s}: Q_d(0) differs from Q(0,0)"
        )));
    }

    // K(1,1) Q(1,1) = 1 - 2t A₋₁(1) Q(1,0) + tε Q(0,0), using Q(0,y) = Q(y,0).
    let one = int(1);
    let q10 = q_x0.eval_x(&one);
    let kernel = Series::from_coeffs(vec![one.clone(), int(-(s.len() as i64))], work);
    let q11 = Series::one()
        .sub(&q10.shift(1).scale(&am.eval(&one).mul(&int(2))))
        .add(&c.shift(1).scale(&eps))
        .mul(&kernel.inverse()?);

    Ok(HalfOrbitSolution {
        model,
        order,
        q_x0: truncated(&q_x0, order, "Q(x,0)")?,
        q_diag: truncated(&q_diag, order, "Q_d(x)")?,
        q00: truncated(&c, order, "Q(0,0)")?,
        q11: truncated(&q11, order, "Q(1,1)")?,
    })
}

/// Closed-form expressions in `W` or `Z`, evaluated as truncated series.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedSolution {
    pub model: HalfOrbitModel,
    pub q_x0: XSeries,
    pub q_diag: XSeries,
    pub q00: Series,
    pub factorization: CanonicalFactorization,
}

/// `√(1 + c₁ x + c₂ x²)` with `t`-series coefficients `c₁`, `c₂`.
fn sqrt_quadratic(c1: &Series, c2: &Series, xk: i32) -> Result<XSeries> {
    XSeries::one()
        .add(&lift(c1).mul_coeff(&xpoly(&[(xk, 1)])))
        .add(&lift(c2).mul_coeff(&xpoly(&[(2 * xk, 1)])))
        .sqrt()
}

pub fn closed_solution(model: HalfOrbitModel, order: usize) -> Result<ClosedSolution> {
    let work = order as i32 + GUARD;
    let k = |n: i64| Series::constant(int(n));
    let t = Series::t();
    let xbar = xpoly(&[(-1, 1)]);
    let sol = match model {
        HalfOrbitModel::Kreweras | HalfOrbitModel::ReverseKreweras => {
            let w = series_w(work as usize).series;
            let w2 = w.pow(2);
            let w3 = w.pow(3);
            let w_inv = w.inverse()?;
            // 1 - x W(W³+4)/4 + x² W²/4 and 1 - x W²
            let big = |xk| {
                sqrt_quadratic(
                    &w.mul(&w3.add(&k(4))).scale(&rat(-1, 4)),
                    &w2.scale(&rat(1, 4)),
                    xk,
                )
            };
            let small = |xk| sqrt_quadratic(&w2.neg(), &Series::zero(), xk);
            let delta0 = k(4).mul(&t.pow(2)).mul(&w_inv.pow(2));
            let plain = |xk: i32| {
                XSeries::one()
                    .add(
                        &lift(&w.mul(&w3.add(&k(4))).scale(&rat(-1, 4)))
                            .mul_coeff(&xpoly(&[(xk, 1)])),
                    )
                    .add(&lift(&w2.scale(&rat(1, 4))).mul_coeff(&xpoly(&[(2 * xk, 1)])))
            };
            let plain_small =
                |xk: i32| XSeries::one().sub(&lift(&w2).mul_coeff(&xpoly(&[(xk, 1)])));
            if model == HalfOrbitModel::Kreweras {
                // (1/(tx)) (1/(2t) - x̄ - (1/W - x̄) √(1 - x W²))
                let inner = XSeries::monomial(LaurentPoly1::constant(rat(1, 2)), -1)
                    .sub(&XSeries::constant(xbar.clone()))
                    .sub(
                        &lift(&w_inv)
                            .sub(&XSeries::constant(xbar.clone()))
                            .mul(&small(1)?),
                    );
                let q_x0 = x_shift(&inner.shift(-1), -1);
                // (W - x̄) / (t √(1 - xW(1 + W³/4) + x²W²/4)) + x̄/t
                let q_diag = lift(&w)
                    .sub(&XSeries::constant(xbar.clone()))
                    .mul(&big(1)?.inverse()?)
                    .add(&XSeries::constant(xbar.clone()))
                    .shift(-1);
                let q00 = q_x0.x_coeff(0);
                ClosedSolution {
                    model,
                    q_x0,
                    q_diag,
                    q00,
                    factorization: CanonicalFactorization {
                        delta0,
                        minus: plain(-1),
                        plus: plain_small(1),
                        order: work,
                    },
                }
            } else {
                // W(4 - W³)/(16t) - (t - x² + t x³)/(2x t²)
                //   - (2x² - xW² - W) √(1 - xW(W³+4)/4 + x²W²/4) / (2t x W)
                let first = lift(&w.mul(&k(4).sub(&w3)).scale(&rat(1, 16)).shift(-1));
                let second = x_shift(
                    &XSeries::exact(0, vec![xpoly(&[(2, -1)]), xpoly(&[(0, 1), (3, 1)])]),
                    -1,
                )
                .scale(&rat(1, 2))
                .shift(-2);
                let third = XSeries::constant(xpoly(&[(2, 2)]))
                    .sub(&lift(&w2).mul_coeff(&x()))
                    .sub(&lift(&w))
                    .mul(&big(1)?)
                    .mul(&lift(&w_inv));
                let third = x_shift(&third, -1).scale(&rat(1, 2)).shift(-1);
                let q_x0 = first.sub(&second).sub(&third);
                // (xW(x + W) - 2) / (2t x² √(1 - xW²)) + 1/(t x²)
                let num = lift(&w)
                    .mul_coeff(&xpoly(&[(2, 1)]))
                    .add(&lift(&w2).mul_coeff(&x()))
                    .sub(&XSeries::constant(xpoly(&[(0, 2)])));
                let q_diag = x_shift(
                    &num.mul(&small(1)?.inverse()?)
                        .scale(&rat(1, 2))
                        .add(&XSeries::one())
                        .shift(-1),
                    -2,
                );
                let q00 = q_x0.x_coeff(0);
                ClosedSolution {
                    model,
                    q_x0,
                    q_diag,
                    q00,
                    factorization: CanonicalFactorization {
                        delta0,
                        minus: plain_small(-1),
                        plus: plain(1),
                        order: work,
                    },
                }
            }
        }
        HalfOrbitModel::DoubleKreweras => {
            let z = series_z(work as usize).series;
            let z2 = z.pow(2);
            let omz = Series::one().sub(&z);
            let omz2_inv = omz.pow(2).inverse()?;
            // Δ₊(x) = 1 - 2Z(1 + Z²)/(1 - Z)² x + Z² x²
            let lin = z
                .mul(&Series::one().add(&z2))
                .mul(&omz2_inv)
                .scale(&int(-2));
            let quad = |xk: i32| {
                XSeries::one()
                    .add(&lift(&lin).mul_coeff(&xpoly(&[(xk, 1)])))
                    .add(&lift(&z2).mul_coeff(&xpoly(&[(2 * xk, 1)])))
            };
            let root = quad(1).truncate(work).sqrt()?;
            let one_plus_x_sq = xpoly(&[(0, 1), (1, 2), (2, 1)]);

            // Q(x,0) over the common denominator 2t x Z (1-Z)² (1+x)².
            let a = lift(&z.mul(&omz))
                .add(&lift(&z.scale(&int(2))).mul_coeff(&x()))
                .sub(&lift(&omz).mul_coeff(&xpoly(&[(2, 1)])));
            let b = lift(&z.mul(&omz.pow(2)))
                .add(
                    &lift(
                        &z.mul(
                            &z.pow(3)
                                .add(&z2.scale(&int(4)))
                                .sub(&z.scale(&int(5)))
                                .add(&k(2)),
                        ),
                    )
                    .mul_coeff(&x()),
                )
                .sub(
                    &lift(
                        &Series::one()
                            .sub(&z.scale(&int(2)))
                            .add(&z2.scale(&int(7)))
                            .sub(&z.pow(3).scale(&int(4))),
                    )
                    .mul_coeff(&xpoly(&[(2, 1)])),
                )
                .add(&lift(&z.mul(&omz.pow(2))).mul_coeff(&xpoly(&[(3, 1)])));
            let numerator = a.mul(&root).mul(&lift(&omz)).sub(&b);
            let scaled = numerator
                .mul(&lift(&z.mul(&omz.pow(2)).inverse()?))
                .scale(&rat(1, 2))
                .shift(-1);
            let q_x0 = div_coeffs(&x_shift(&scaled, -1), &one_plus_x_sq)?;

            // Q_d(x) = (A/√Δ₊ + (Z - 1)) / ((Z - 1) t x (1 + x)),
            // A = 1 - Z - 2xZ + x²Z(Z - 1).
            let zm1 = z.sub(&Series::one());
            let a_d = lift(&omz)
                .sub(&lift(&z.scale(&int(2))).mul_coeff(&x()))
                .add(&lift(&z.mul(&zm1)).mul_coeff(&xpoly(&[(2, 1)])));
            let m = a_d.mul(&root.inverse()?).add(&lift(&zm1));
            let m = m.mul(&lift(&zm1.inverse()?)).shift(-1);
            let q_diag = div_coeffs(&m, &xpoly(&[(1, 1), (2, 1)]))?;
            // Z(1 - 2Z - Z²) / (t (1 - Z)²)
            let q00 = z
                .mul(&Series::one().sub(&z.scale(&int(2))).sub(&z2))
                .mul(&omz2_inv)
                .shift(-1);
            ClosedSolution {
                model,
                q_x0,
                q_diag,
                q00,
                factorization: CanonicalFactorization {
                    delta0: t.pow(2).mul(&z.inverse()?.pow(2)),
                    minus: quad(-1),
                    plus: quad(1),
                    order: work,
                },
            }
        }
    };
    Ok(ClosedSolution {
        q_x0: truncated(&sol.q_x0, order, "closed Q(x,0)")?,
        q_diag: truncated(&sol.q_diag, order, "closed Q_d(x)")?,
        q00: truncated(&sol.q00, order, "closed Q(0,0)")?,
        factorization: CanonicalFactorization {
            delta0: sol.factorization.delta0.truncate(order as i32),
            minus: sol.factorization.minus.truncate(order as i32),
            plus: sol.factorization.plus.truncate(order as i32),
            order: order as i32,
        },
        ..sol
    })
}

/// `Q(x,0)`, `Q_d(x)`, `Q(0,0)` and `Q(1,1)` read off a count table.
pub fn series_from_table(table: &CountTable, order: usize) -> (XSeries, XSeries, Series, Series) {
    let o = order as i32;
    let q = table.series();
    let q_x0 = q.map(|c| c.y_coeff(0)).truncate(o);
    let q_diag = XSeries::from_coeffs(
        (0..order)
            .map(|n| {
                LaurentPoly1::from_terms(
                    (0..=n).map(|i| (i as i32, Rational::from_integer(table.get(i, i, n).into()))),
                )
            })
            .collect(),
        o,
    );
    let q00 = q.map(|c| c.coeff(0, 0)).truncate(o);
    let q11 = Series::from_coeffs(
        (0..order)
            .map(|n| Rational::from_integer(table.total(n).into()))
            .collect(),
        o,
    );
    (q_x0, q_diag, q00, q11)
}

/// The closed forms, the half-orbit solution and the counting
/// oracle agree on every exposed series to `O(t^order)`, and the closed
/// canonical factors match the lifted ones.
pub fn verify_closed_solutions(model: HalfOrbitModel, order: usize) -> Result<bool> {
    let solved = half_orbit_solve(model, order)?;
    let closed = closed_solution(model, order)?;
    let table = count_dp(model.step_set(), order.saturating_sub(1));
    let (q_x0, q_diag, q00, q11) = series_from_table(&table, order);
    let lifted = canonical_factorization(model.step_set(), order as i32)?;
    let f = &closed.factorization;
    Ok(solved.q_x0 == q_x0
        && closed.q_x0 == q_x0
        && solved.q_diag == q_diag
        && closed.q_diag == q_diag
        && solved.q00 == q00
        && closed.q00 == q00
        && solved.q11 == q11
        && f.delta0 == lifted.delta0.truncate(order as i32)
        && f.minus == lifted.minus.truncate(order as i32)
        && f.plus == lifted.plus.truncate(order as i32))
}

/// Outcome of one series identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

fn totals(table: &CountTable, order: usize) -> Series {
    series_from_table(table, order).3
}

/// `Q(x, 1/x)` from a table: `Σ q(i,j;n) x^(i-j) tⁿ`.
fn anti_diagonal(table: &CountTable, order: usize) -> XSeries {
    table
        .series()
        .map(|c| LaurentPoly1::from_terms(c.terms().map(|((i, j), q)| (i - j, q.clone()))))
        .truncate(order as i32)
}

/// The algebraic identities satisfied by specialisations of `Q`, each
/// checked to `O(t^order)` against the counting oracle.
pub fn algebraic_identities(order: usize) -> Result<Vec<IdentityCheck>> {
    if order < 8 {
        return Err(Error::InvalidArgument(format!(
            "identities need order >= 8, got {order}"
        )));
    }
    let o = order as i32;
    let work = o + GUARD;
    let step = |text: &str| -> StepSet { text.parse().expect("valid step set") };
    let k = |n: i64| Series::constant(int(n));
    let t = Series::t();
    let mut checks = Vec::new();
    let mut push = |name: &'static str, holds: bool| checks.push(IdentityCheck { name, holds });

    let dk = count_dp(step(DOUBLE_KREWERAS), order);
    let q = totals(&dk, order);
    let tq = q.shift(1);
    let quartic = q.mul(&Series::one().add(&tq)).mul(
        &Series::one()
            .add(&tq.scale(&int(2)))
            .add(&tq.pow(2).scale(&int(2))),
    );
    let geometric = Series::from_coeffs(vec![int(1), int(-6)], o).inverse()?;
    push(
        "double-kreweras-total-quartic",
        quartic.truncate(o) == geometric,
    );

    let n = series_n(work as usize).series;
    let ratio = Series::one()
        .add(&n.scale(&int(2)))
        .mul(&Series::one().sub(&n.scale(&int(2))).inverse()?);
    let q11_n = ratio
        .sqrt()?
        .sub(&Series::one())
        .scale(&rat(1, 2))
        .shift(-1);
    push("double-kreweras-total-via-n", q11_n.truncate(o) == q);

    let one_4n = Series::one().add(&n.scale(&int(4)));
    let q00_n = one_4n
        .mul(&one_4n.sqrt()?)
        .mul(&n.inverse()?)
        .scale(&rat(1, 2))
        .shift(-1)
        .sub(&Series::monomial(rat(1, 2), -2))
        .sub(&Series::monomial(int(2), -1));
    push(
        "double-kreweras-origin-via-n",
        q00_n.truncate(o) == series_from_table(&dk, order).2,
    );

    let tandem = count_dp(step(TANDEM), order);
    let double_tandem = count_dp(step(DOUBLE_TANDEM), order);
    push(
        "n-counts-double-tandem-walks",
        n.shift(-1).truncate(o) == totals(&double_tandem, order),
    );

    // (1 - t - √((1 + t)(1 - 3t))) / (2t²)
    let motzkin = |a: i64, b: i64, scale: i64| -> Result<Series> {
        let disc = Series::from_coeffs(vec![int(1), int(a)], work)
            .mul(&Series::from_coeffs(vec![int(1), int(b)], work));
        Ok(Series::one()
            .add(&t.scale(&int((a + b) / 2)))
            .sub(&disc.sqrt()?)
            .scale(&rat(1, scale))
            .shift(-2))
    };
    push(
        "tandem-total-motzkin",
        motzkin(1, -3, 2)?.truncate(o) == totals(&tandem, order),
    );
    push(
        "double-tandem-total-motzkin",
        motzkin(2, -6, 8)?.truncate(o) == totals(&double_tandem, order),
    );

    // (1 - t x̄ - √(1 - 2x̄t + t²x̄² - 4t²x)) / (2x t²)
    let xbar = xpoly(&[(-1, 1)]);
    let disc = XSeries::from_coeffs(
        vec![
            LaurentPoly1::one(),
            xbar.scale(&int(-2)),
            xpoly(&[(-2, 1), (1, -4)]),
        ],
        work,
    );
    let spec = XSeries::one()
        .sub(&XSeries::monomial(xbar.clone(), 1))
        .sub(&disc.sqrt()?)
        .scale(&rat(1, 2))
        .shift(-2);
    push(
        "tandem-anti-diagonal",
        x_shift(&spec, -1).truncate(o) == anti_diagonal(&tandem, order),
    );

    // (1 - t(x + x̄) - √((1 - t(x + x̄))² - 4t²(1 + x)(1 + x̄))) / (2t²(1 + x)(1 + x̄))
    let s1 = xpoly(&[(-1, 1), (1, 1)]);
    let disc = XSeries::from_coeffs(
        vec![
            LaurentPoly1::one(),
            s1.scale(&int(-2)),
            s1.mul(&s1).sub(&xpoly(&[(-1, 4), (0, 8), (1, 4)])),
        ],
        work,
    );
    let num = XSeries::one()
        .sub(&XSeries::monomial(s1, 1))
        .sub(&disc.sqrt()?)
        .scale(&rat(1, 2))
        .shift(-2);
    let spec = div_coeffs(&num, &xpoly(&[(-1, 1), (0, 2), (1, 1)]))?;
    push(
        "double-tandem-anti-diagonal",
        spec.truncate(o) == anti_diagonal(&double_tandem, order),
    );

    let kre = half_orbit_solve(HalfOrbitModel::Kreweras, order)?;
    let rev = half_orbit_solve(HalfOrbitModel::ReverseKreweras, order)?;
    push("kreweras-origin-coincidence", kre.q00 == rev.q00);
    let w = series_w(work as usize).series;
    let q00_w = w.mul(&k(4).sub(&w.pow(3))).scale(&rat(1, 8)).shift(-1);
    push("kreweras-origin-via-w", q00_w.truncate(o) == kre.q00);

    for (name, model) in [
        ("kreweras-axis-symmetry", KREWERAS),
        ("reverse-kreweras-axis-symmetry", REVERSE_KREWERAS),
        ("double-kreweras-axis-symmetry", DOUBLE_KREWERAS),
    ] {
        let series = count_dp(step(model), order).series();
        push(
            name,
            series.map(|c| c.y_coeff(0)) == series.map(|c| c.x_coeff(0)),
        );
    }
    Ok(checks)
}

pub fn verify_algebraic_identities(order: usize) -> Result<bool> {
    Ok(algebraic_identities(order)?.iter().all(|c| c.holds))
}

fn rational_series<S: serde::Serializer>(
    s: &Series,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let order = s.order().unwrap_or(0).max(0);
    let coeffs: Vec<String> = (0..order).map(|n| s.coeff(n).to_string()).collect();
    let mut st = ser.serialize_struct("Series", 2)?;
    st.serialize_field("order", &order)?;
    st.serialize_field("coefficients", &coeffs)?;
    st.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series, n: i32) -> Vec<i64> {
        (0..n)
            .map(|k| {
                let c = s.coeff(k);
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn w_expansion() {
        let w = series_w(10);
        assert!(w.verify());
        assert_eq!(ints(&w.series, 10), vec![0, 2, 0, 0, 8, 0, 0, 96, 0, 0]);
    }

    #[test]
    fn z_expansion() {
        let z = series_z(5);
        assert!(z.verify());
        assert_eq!(ints(&z.series, 5), vec![0, 1, 0, 5, 8]);
    }

    #[test]
    fn n_counts_scaled_motzkin_paths() {
        let n = series_n(6);
        assert!(n.verify());
        assert_eq!(ints(&n.series, 6), vec![0, 1, 2, 8, 32, 144]);
    }

    #[test]
    fn kreweras_origin() {
        let sol = half_orbit_solve(HalfOrbitModel::Kreweras, 10).unwrap();
        assert_eq!(ints(&sol.q00, 10), vec![1, 0, 0, 2, 0, 0, 16, 0, 0, 192]);
    }

    #[test]
    fn double_kreweras_origin_and_totals() {
        let sol = half_orbit_solve(HalfOrbitModel::DoubleKreweras, 6).unwrap();
        assert_eq!(ints(&sol.q00, 6), vec![1, 0, 3, 4, 26, 80]);
        assert_eq!(ints(&sol.q11, 5), vec![1, 3, 14, 67, 342]);
        assert!(sol.q_diag.x_coeff(0) == sol.q00);
    }

    #[test]
    fn unsupported_model() {
        let s: StepSet = "N,S,E,W".parse().unwrap();
        assert!(matches!(
            HalfOrbitModel::from_step_set(s),
            Err(Error::NotApplicable(_))
        ));
    }
}
