//! The involutions `Φ`, `Ψ` attached to a step set and the orbit of
//! `(x, y)` under the group they generate.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{int, Field, Rational, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::series::{Laurent, LaurentPoly1, LaurentPoly2, RatFunc1};
use crate::stepset::StepSet;

/// Spans above this skip the content gcds during reduction.
const GCD_SPAN_LIMIT: i32 = 48;

/// Rational function in `x` and `y`, a quotient of Laurent polynomials.
///
/// Kept with a polynomial denominator whose largest term has coefficient 1,
/// with common monomials and common univariate contents removed.
#[derive(Clone)]
pub struct RatFunc2 {
    num: LaurentPoly2,
    den: LaurentPoly2,
}

fn span(p: &LaurentPoly2) -> i32 {
    match (p.min_exponents(), p.max_exponents()) {
        (Some((a, b)), Some((c, d))) => (c - a) + (d - b),
        _ => 0,
    }
}

/// The polynomial in `x` that divides every `y`-slice of the polynomial
/// `p`.
fn x_content(p: &LaurentPoly2) -> UniPoly {
    let mut g = UniPoly::zero();
    for (_, slice) in p.y_slices().terms() {
        let (v, poly) = slice.to_poly_shifted();
        g = g.gcd(&poly.shift_up(v as usize));
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_x_content(p: &LaurentPoly2, g: &UniPoly) -> LaurentPoly2 {
    let slices = p.y_slices().map(|slice| {
        let (v, poly) = slice.to_poly_shifted();
        let q = poly.shift_up(v as usize).div_rem(g).0;
        LaurentPoly1::from_poly(&q)
    });
    LaurentPoly2::from_y_slices(&slices)
}

impl RatFunc2 {
    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc2 { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        Self::new(p, LaurentPoly2::one())
    }

    pub fn x() -> Self {
        Self::from_poly(LaurentPoly2::x())
    }

    pub fn y() -> Self {
        Self::from_poly(LaurentPoly2::y())
    }

    pub fn num(&self) -> &LaurentPoly2 {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly2 {
        &self.den
    }

    /// Largest total-degree span of numerator and denominator.
    pub fn degree(&self) -> i32 {
        span(&self.num).max(span(&self.den))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly2::one();
            return;
        }
        let (ni, nj) = self.num.min_exponents().unwrap();
        let (di, dj) = self.den.min_exponents().unwrap();
        let mut n = self.num.shift(-ni, -nj);
        let mut d = self.den.shift(-di, -dj);
        if span(&n).max(span(&d)) <= GCD_SPAN_LIMIT && d.len() > 1 {
            for swap in [false, true] {
                let (nn, dd) = if swap {
                    (n.swap_xy(), d.swap_xy())
                } else {
                    (n.clone(), d.clone())
                };
                let g = x_content(&dd).gcd(&x_content(&nn));
                if !g.is_constant() {
                    let (nn, dd) = (divide_x_content(&nn, &g), divide_x_content(&dd, &g));
                    (n, d) = if swap {
                        (nn.swap_xy(), dd.swap_xy())
                    } else {
                        (nn, dd)
                    };
                }
            }
        }
        let (ni2, nj2) = n.min_exponents().unwrap();
        let (di2, dj2) = d.min_exponents().unwrap();
        let n = n.shift(ni - di - ni2 + di2, nj - dj - nj2 + dj2);
        let d = d.shift(-di2, -dj2);
        let lead = d.terms().last().map(|(_, c)| c.clone()).unwrap();
        let inv = lead.recip();
        self.num = n.scale(&inv);
        self.den = d.scale(&inv);
    }

    /// Substitute rational functions for `x` and `y`.
    pub fn substitute(&self, x: &RatFunc2, y: &RatFunc2) -> Result<RatFunc2> {
        let xi = x
            .try_inv()
            .ok_or_else(|| Error::InvalidArgument("x -> 0".into()))?;
        let yi = y
            .try_inv()
            .ok_or_else(|| Error::InvalidArgument("y -> 0".into()))?;
        let n: RatFunc2 = self.num.eval_with((x, &xi), (y, &yi));
        let d: RatFunc2 = self.den.eval_with((x, &xi), (y, &yi));
        d.try_inv()
            .map(|di| n.mul(&di))
            .ok_or_else(|| Error::InvalidArgument("denominator vanishes after substitution".into()))
    }

    pub fn diff_x(&self) -> RatFunc2 {
        let n = self
            .num
            .diff_x()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.diff_x()));
        RatFunc2::new(n, self.den.mul(&self.den))
    }

    pub fn diff_y(&self) -> RatFunc2 {
        let n = self
            .num
            .diff_y()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.diff_y()));
        RatFunc2::new(n, self.den.mul(&self.den))
    }

    /// Evaluate in any ring, given `x`, `y` and their inverses; `None` if
    /// the denominator is not invertible there.
    pub fn eval_with<S: Ring>(&self, x: (&S, &S), y: (&S, &S)) -> Option<S> {
        let n = self.num.eval_with(x, y);
        let d = self.den.eval_with(x, y);
        d.try_inv().map(|di| n.mul(&di))
    }

    /// Exchange `x` and `y`.
    pub fn swap_xy(&self) -> RatFunc2 {
        RatFunc2::new(self.num.swap_xy(), self.den.swap_xy())
    }

    /// Write as a Laurent polynomial in `y` with coefficients in `Q(x)`,
    /// possible when the denominator involves a single power of `y`.
    pub fn to_y_laurent(&self) -> Option<Laurent<RatFunc1>> {
        let dslices = self.den.y_slices();
        if dslices.len() != 1 {
            return None;
        }
        let (j0, dx) = dslices.terms().next().unwrap();
        let dinv = RatFunc1::from_laurent(dx).try_inv()?;
        Some(Laurent::from_terms(
            self.num
                .y_slices()
                .terms()
                .map(|(j, nx)| (j - j0, RatFunc1::from_laurent(nx).mul(&dinv)))
                .collect::<Vec<_>>(),
        ))
    }

    /// Parse an expression in `x`, `y`, integers, `+ - * / ^` and
    /// parentheses. Exponents may be negative integers.
    pub fn parse(text: &str) -> Result<RatFunc2> {
        let mut p = ExprParser {
            s: text.as_bytes(),
            pos: 0,
        };
        let r = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!(
                "unexpected `{}` in `{text}`",
                &text[p.pos..]
            )));
        }
        Ok(r)
    }
}

impl PartialEq for RatFunc2 {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for RatFunc2 {
    fn zero() -> Self {
        RatFunc2 {
            num: LaurentPoly2::zero(),
            den: LaurentPoly2::one(),
        }
    }
    fn one() -> Self {
        RatFunc2 {
            num: LaurentPoly2::one(),
            den: LaurentPoly2::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc2::new(self.num.add(&other.num), self.den.clone());
        }
        RatFunc2::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc2::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc2 {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc2::from_poly(LaurentPoly2::from_rational(q))
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| RatFunc2::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(inv) = self.den.try_inv() {
            return write!(f, "{}", self.num.mul(&inv));
        }
        let wrap = |p: &LaurentPoly2| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc2({self})")
    }
}

impl Serialize for RatFunc2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<RatFunc2> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc2> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = if op == b'*' {
                acc.mul(&f)
            } else {
                acc.mul(&f.try_inv().ok_or_else(|| self.err("division by zero"))?)
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc2> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
        let p = base.pow(e);
        if neg {
            p.try_inv()
                .ok_or_else(|| self.err("zero to a negative power"))
        } else {
            Ok(p)
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<RatFunc2> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(RatFunc2::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(RatFunc2::y())
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc2::from_rational(&int(self.integer()?))),
            _ => Err(self.err("expected a number, `x`, `y` or `(`")),
        }
    }
}

/// A birational map, stored as the image `(X(x, y), Y(x, y))` of `(x, y)`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BiRationalMap {
    pub x: RatFunc2,
    pub y: RatFunc2,
}

impl BiRationalMap {
    pub fn identity() -> Self {
        BiRationalMap {
            x: RatFunc2::x(),
            y: RatFunc2::y(),
        }
    }

    /// `self ∘ inner`: the point `inner(x, y)` fed into `self`.
    pub fn after(&self, inner: &BiRationalMap) -> Result<BiRationalMap> {
        Ok(BiRationalMap {
            x: self.x.substitute(&inner.x, &inner.y)?,
            y: self.y.substitute(&inner.x, &inner.y)?,
        })
    }

    pub fn degree(&self) -> i32 {
        self.x.degree().max(self.y.degree())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl fmt::Display for BiRationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn nonzero(p: LaurentPoly1, what: &str) -> Result<LaurentPoly1> {
    if p.is_zero() {
        Err(Error::OutOfScope(format!("{what} is zero")))
    } else {
        Ok(p)
    }
}

fn quotient_in(var: fn() -> RatFunc2, num: &LaurentPoly1, den: &LaurentPoly1) -> RatFunc2 {
    let embed = |p: &LaurentPoly1| {
        let v = var();
        let vi = v.try_inv().unwrap();
        p.eval_with(&v, &vi, RatFunc2::from_rational)
    };
    embed(num).mul(&embed(den).try_inv().unwrap())
}

/// `Φ(x, y) = (x̄ B₋₁(y) / B₁(y), y)`.
pub fn make_phi(s: StepSet) -> Result<BiRationalMap> {
    let bm = nonzero(s.b(-1), "B_-1")?;
    let bp = nonzero(s.b(1), "B_1")?;
    let xinv = RatFunc2::x().try_inv().unwrap();
    Ok(BiRationalMap {
        x: xinv.mul(&quotient_in(RatFunc2::y, &bm, &bp)),
        y: RatFunc2::y(),
    })
}

/// `Ψ(x, y) = (x, ȳ A₋₁(x) / A₁(x))`.
pub fn make_psi(s: StepSet) -> Result<BiRationalMap> {
    let am = nonzero(s.a(-1), "A_-1")?;
    let ap = nonzero(s.a(1), "A_1")?;
    let yinv = RatFunc2::y().try_inv().unwrap();
    Ok(BiRationalMap {
        x: RatFunc2::x(),
        y: yinv.mul(&quotient_in(RatFunc2::x, &am, &ap)),
    })
}

/// `Θ = Ψ ∘ Φ`.
pub fn make_theta(s: StepSet) -> Result<BiRationalMap> {
    make_psi(s)?.after(&make_phi(s)?)
}

/// An orbit element: the image of `(x, y)` under a group word, with the
/// parity of the word's length.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitElement {
    pub image: BiRationalMap,
    pub sign: i8,
}

/// The orbit of `(x, y)`, in the order `(x,y), Φ(x,y), Ψ∘Φ(x,y), ...`.
#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    pub elements: Vec<OrbitElement>,
}

impl Orbit {
    /// Order of the group, equal to the orbit length.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// One line per element.
    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.image.to_string()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundReason {
    /// `Θ^n` was not the identity for any `n` up to the bound.
    Iterations,
    /// The next image would exceed the degree cap.
    DegreeCap,
}

/// Evidence, not proof, that the group is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceedsBound {
    /// Number of `Θ` iterations completed.
    pub iterations: usize,
    pub reason: BoundReason,
    pub degree: i32,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum OrbitOutcome {
    Closed(Orbit),
    ExceedsBound(ExceedsBound),
}

impl OrbitOutcome {
    pub fn orbit(&self) -> Option<&Orbit> {
        match self {
            OrbitOutcome::Closed(o) => Some(o),
            OrbitOutcome::ExceedsBound(_) => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.orbit().map(Orbit::order)
    }
}

/// Limits for [`orbit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitLimits {
    pub max_iterations: usize,
    pub degree_cap: i32,
}

impl Default for OrbitLimits {
    fn default() -> Self {
        OrbitLimits {
            max_iterations: 30,
            degree_cap: 200,
        }
    }
}

/// `d^k P(n/d)` for a polynomial `P` of degree at most `k`.
fn homogenize(p: &UniPoly, k: usize, n: &LaurentPoly2, d: &LaurentPoly2) -> LaurentPoly2 {
    let mut acc = LaurentPoly2::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if Ring::is_zero(c) {
            continue;
        }
        acc = acc.add(&n.pow(i as u32).mul(&d.pow((k - i) as u32)).scale(c));
    }
    acc
}

/// `Φ` or `Ψ`: the moving coordinate `u` goes to `ū R(v)` where `v` is the
/// other coordinate and `R` is a reduced univariate ratio.
struct Involution {
    moves_x: bool,
    ratio: RatFunc1,
}

impl Involution {
    fn new(moves_x: bool, minus: LaurentPoly1, plus: LaurentPoly1) -> Self {
        let ratio = RatFunc1::from_laurent(&minus).mul(&RatFunc1::from_laurent(&plus).inv());
        Involution { moves_x, ratio }
    }

    fn parts<'a>(&self, p: &'a BiRationalMap) -> (&'a RatFunc2, &'a RatFunc2) {
        if self.moves_x {
            (&p.x, &p.y)
        } else {
            (&p.y, &p.x)
        }
    }

    fn ratio_degree(&self) -> usize {
        let deg = |q: &UniPoly| q.degree().unwrap_or(0);
        deg(self.ratio.num()).max(deg(self.ratio.den()))
    }

    fn apply(&self, p: &BiRationalMap) -> BiRationalMap {
        let (moving, fixed) = self.parts(p);
        let k = self.ratio_degree();
        let top = homogenize(self.ratio.num(), k, &fixed.num, &fixed.den);
        let bottom = homogenize(self.ratio.den(), k, &fixed.num, &fixed.den);
        let moved = RatFunc2::new(moving.den.mul(&top), moving.num.mul(&bottom));
        if self.moves_x {
            BiRationalMap {
                x: moved,
                y: p.y.clone(),
            }
        } else {
            BiRationalMap {
                x: p.x.clone(),
                y: moved,
            }
        }
    }

    /// Upper bound on the degree of the image of `p`.
    fn predicted_degree(&self, p: &BiRationalMap) -> i32 {
        let (moving, fixed) = self.parts(p);
        moving.degree() + self.ratio_degree() as i32 * fixed.degree()
    }
}

/// Apply `Φ`, `Ψ` alternately to `(x, y)` until the identity reappears.
pub fn orbit(s: StepSet, limits: OrbitLimits) -> Result<OrbitOutcome> {
    let gens = [
        Involution::new(true, nonzero(s.b(-1), "B_-1")?, nonzero(s.b(1), "B_1")?),
        Involution::new(false, nonzero(s.a(-1), "A_-1")?, nonzero(s.a(1), "A_1")?),
    ];
    let mut current = BiRationalMap::identity();
    let mut elements = vec![OrbitElement {
        image: current.clone(),
        sign: 1,
    }];
    for step in 0..2 * limits.max_iterations {
        let gen = &gens[step % 2];
        if gen.predicted_degree(&current) > limits.degree_cap {
            return Ok(OrbitOutcome::ExceedsBound(ExceedsBound {
                iterations: step / 2,
                reason: BoundReason::DegreeCap,
                degree: current.degree(),
            }));
        }
        current = gen.apply(&current);
        if step % 2 == 1 && current.is_identity() {
            return Ok(OrbitOutcome::Closed(Orbit { elements }));
        }
        elements.push(OrbitElement {
            image: current.clone(),
            sign: if step % 2 == 0 { -1 } else { 1 },
        });
    }
    Ok(OrbitOutcome::ExceedsBound(ExceedsBound {
        iterations: limits.max_iterations,
        reason: BoundReason::Iterations,
        degree: current.degree(),
    }))
}

/// `Σ sign(g) X_g Y_g` over the orbit, as a Laurent polynomial in `y` with
/// coefficients in `Q(x)`.
pub fn orbit_sum_poly(s: StepSet) -> Result<Laurent<RatFunc1>> {
    let outcome = orbit(s, OrbitLimits::default())?;
    let orbit = outcome.orbit().ok_or(Error::InfiniteGroup)?;
    orbit_sum_of(orbit)
}

pub fn orbit_sum_of(orbit: &Orbit) -> Result<Laurent<RatFunc1>> {
    let mut acc = Laurent::zero();
    for e in &orbit.elements {
        let prod = e.image.x.mul(&e.image.y);
        let term = prod.to_y_laurent().ok_or_else(|| {
            Error::OutOfScope(format!("orbit element {} is not Laurent in y", e.image))
        })?;
        acc = if e.sign > 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    Ok(acc)
}

/// Substitute an orbit element into a polynomial in `x`, `y`, returning a
/// Laurent polynomial in `y` over `Q(x)`.
pub fn substitute_in_y_laurent(
    p: &LaurentPoly2,
    image: &BiRationalMap,
) -> Result<Laurent<RatFunc1>> {
    let to_l = |r: &RatFunc2| {
        r.to_y_laurent()
            .ok_or_else(|| Error::OutOfScope(format!("{r} is not Laurent in y")))
    };
    let u = to_l(&image.x)?;
    let v = to_l(&image.y)?;
    let (umin, vmin) = p.min_exponents().unwrap_or((0, 0));
    if umin < 0 || vmin < 0 {
        return Err(Error::InvalidArgument(
            "substitution needs a polynomial with nonnegative exponents".into(),
        ));
    }
    let (imax, jmax) = p.max_exponents().unwrap_or((0, 0));
    let upow = powers(&u, imax as usize);
    let vpow = powers(&v, jmax as usize);
    let mut acc = Laurent::zero();
    for ((i, j), c) in p.terms() {
        let t = upow[i as usize].mul(&vpow[j as usize]).scale(c);
        acc = acc.add(&t);
    }
    Ok(acc)
}

pub(crate) fn powers<R: Ring>(base: &R, n: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(R::one());
    for k in 1..=n {
        let next = out[k - 1].mul(base);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> BiRationalMap {
        BiRationalMap {
            x: RatFunc2::parse(a).unwrap(),
            y: RatFunc2::parse(b).unwrap(),
        }
    }

    #[test]
    fn generators() {
        let t = s("W,N,SE");
        assert_eq!(make_phi(t).unwrap(), pair("y/x", "y"));
        assert_eq!(make_psi(t).unwrap(), pair("x", "x/y"));
        let sw = s("N,S,E,W");
        assert_eq!(make_phi(sw).unwrap(), pair("1/x", "y"));
        for set in [t, sw, s("NE,S,W,NW"), s("N,SE,SW,W")] {
            let phi = make_phi(set).unwrap();
            let psi = make_psi(set).unwrap();
            assert!(phi.after(&phi).unwrap().is_identity());
            assert!(psi.after(&psi).unwrap().is_identity());
        }
    }

    #[test]
    fn small_orbits() {
        let o = orbit(s("N,S,E,W"), OrbitLimits::default()).unwrap();
        let o = o.orbit().unwrap();
        let want = [
            pair("x", "y"),
            pair("1/x", "y"),
            pair("1/x", "1/y"),
            pair("x", "1/y"),
        ];
        assert_eq!(o.order(), 4);
        for (e, w) in o.elements.iter().zip(&want) {
            assert_eq!(&e.image, w);
        }
        let t = orbit(s("W,N,SE"), OrbitLimits::default()).unwrap();
        let t = t.orbit().unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.elements[5].image, pair("x", "x/y"));
        let gessel = orbit(s("E,W,NE,SW"), OrbitLimits::default()).unwrap();
        assert_eq!(gessel.order(), Some(8));
    }

    #[test]
    fn simple_walk_orbit_sum() {
        let sum = orbit_sum_poly(s("N,S,E,W")).unwrap();
        // (x - 1/x)(y - 1/y)
        let xm = RatFunc1::from_laurent(&LaurentPoly1::from_ints(&[(1, 1), (-1, -1)]));
        let want = Laurent::from_terms([(1, xm.clone()), (-1, xm.neg())]);
        assert_eq!(sum, want);
    }

    #[test]
    fn parsing() {
        let r = RatFunc2::parse("(x+1+x^-1)/(x + 1/x) * y^-1").unwrap();
        let expect = RatFunc2::new(
            LaurentPoly2::from_ints(&[((2, 0), 1), ((1, 0), 1), ((0, 0), 1)]),
            LaurentPoly2::from_ints(&[((2, 1), 1), ((0, 1), 1)]),
        );
        assert_eq!(r, expect);
        assert!(RatFunc2::parse("x +").is_err());
        assert_eq!(RatFunc2::parse("-2*x^2/x").unwrap().to_string(), "-2*x");
    }

    #[test]
    fn infinite_orbit_hits_bound() {
        let out = orbit(s("N,E,SE,SW"), OrbitLimits::default()).unwrap();
        assert!(out.orbit().is_none());
    }
}
