//! Certificates that a model's group is finite or infinite.
//!
//! Finite groups are certified by a closed orbit. Infinite groups are
//! certified either by an unbounded orbit of the piecewise-linear maps that
//! `Φ` and `Ψ` induce on valuations, or by a fixed point of `Θ = Ψ∘Φ` whose
//! Jacobian has no root of unity among its eigenvalues. Both properties are
//! invariant under the symmetries of the square, so a certificate for one
//! image of a model covers all of them.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{
    has_cyclotomic_factor, resultant, AlgebraicResidue, Poly, Rational, Ring, UniPoly,
};
use crate::error::{Error, Result};
use crate::fixtures::{self, Coordinate, FixedPointRow};
use crate::group::{make_theta, orbit, BiRationalMap, Orbit, OrbitLimits, OrbitOutcome, RatFunc2};
use crate::par::Exec;
use crate::series::{LaurentPoly1, RatFunc1};
use crate::stepset::{StepSet, Symmetry};

/// Number of distinct points after which a valuation orbit counts as escaping.
pub const VALUATION_THRESHOLD: usize = 100;

/// Spacing of the norm samples checked for growth along a valuation orbit.
const NORM_SAMPLE_STRIDE: usize = 10;

/// The maps induced by `Φ` and `Ψ` on the valuations `(val x, val y)` of a
/// pair of Laurent series with positive trailing coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValuationMap {
    /// Valuation and degree of `B₋₁` and `B₁`, for `φ`.
    pub y_minus: (i32, i32),
    pub y_plus: (i32, i32),
    /// Valuation and degree of `A₋₁` and `A₁`, for `ψ`.
    pub x_minus: (i32, i32),
    pub x_plus: (i32, i32),
}

fn val_deg(p: &LaurentPoly1, what: &str) -> Result<(i32, i32)> {
    match (p.valuation(), p.degree()) {
        (Some(v), Some(d)) => Ok((v, d)),
        _ => Err(Error::OutOfScope(format!("{what} is zero"))),
    }
}

impl ValuationMap {
    pub fn new(s: StepSet) -> Result<Self> {
        Ok(ValuationMap {
            y_minus: val_deg(&s.b(-1), "B_-1")?,
            y_plus: val_deg(&s.b(1), "B_1")?,
            x_minus: val_deg(&s.a(-1), "A_-1")?,
            x_plus: val_deg(&s.a(1), "A_1")?,
        })
    }

    /// Valuation of `B(y)` for `y` of valuation `b`: the lowest term wins
    /// when `b > 0`, the highest when `b < 0`.
    fn val_at(vd: (i32, i32), b: i32) -> i32 {
        if b >= 0 {
            b * vd.0
        } else {
            b * vd.1
        }
    }

    pub fn phi(&self, (a, b): (i32, i32)) -> (i32, i32) {
        (
            -a + Self::val_at(self.y_minus, b) - Self::val_at(self.y_plus, b),
            b,
        )
    }

    pub fn psi(&self, (a, b): (i32, i32)) -> (i32, i32) {
        (
            a,
            -b + Self::val_at(self.x_minus, a) - Self::val_at(self.x_plus, a),
        )
    }
}

/// Outcome of [`valuation_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuationOutcome {
    /// The points `start, φ(start), ψφ(start), ...` in order.
    Escapes {
        start: (i32, i32),
        trace: Vec<(i32, i32)>,
    },
    Inconclusive,
}

fn norm((a, b): (i32, i32)) -> i32 {
    a.abs().max(b.abs())
}

/// Follow the alternating word `φ, ψ, φ, ...` from `start`.
///
/// The orbit escapes when more than `bound` distinct points are visited
/// without repetition and the max-norm grows strictly along every
/// [`NORM_SAMPLE_STRIDE`]-th point.
pub fn valuation_certificate(s: StepSet, start: (i32, i32), bound: usize) -> ValuationOutcome {
    let Ok(map) = ValuationMap::new(s) else {
        return ValuationOutcome::Inconclusive;
    };
    let mut seen = HashSet::new();
    let mut trace = vec![start];
    seen.insert(start);
    let mut p = start;
    while seen.len() <= bound {
        p = if trace.len() % 2 == 1 {
            map.phi(p)
        } else {
            map.psi(p)
        };
        if !seen.insert(p) {
            return ValuationOutcome::Inconclusive;
        }
        trace.push(p);
    }
    let samples: Vec<i32> = trace
        .iter()
        .step_by(NORM_SAMPLE_STRIDE)
        .map(|&q| norm(q))
        .collect();
    if samples.windows(2).all(|w| w[0] < w[1]) {
        ValuationOutcome::Escapes { start, trace }
    } else {
        ValuationOutcome::Inconclusive
    }
}

/// Where a fixed point specification came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "row")]
pub enum SpecSource {
    /// Row of the shipped fixed-point table.
    Tabulated(u32),
    /// A point where a power of the Jacobian is the identity.
    Degenerate,
    User,
}

/// A point `(a, b)` with one coordinate a root of `condition` and the other
/// a rational function of it.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointSpec {
    condition: UniPoly,
    variable: Coordinate,
    partner: RatFunc1,
    source: SpecSource,
}

impl FixedPointSpec {
    pub fn new(
        condition: UniPoly,
        variable: Coordinate,
        partner: RatFunc1,
        source: SpecSource,
    ) -> Result<Self> {
        if condition.is_constant() {
            return Err(Error::InvalidArgument(
                "fixed point condition is constant".into(),
            ));
        }
        let g = partner.den().gcd(&condition);
        if !g.is_constant() {
            return Err(Error::NotInvertible {
                factor: g.display_in("a"),
            });
        }
        Ok(FixedPointSpec {
            condition,
            variable,
            partner,
            source,
        })
    }

    pub fn from_row(row: &FixedPointRow) -> Result<Self> {
        let source = match row.row {
            Some(r) => SpecSource::Tabulated(r),
            None => SpecSource::Degenerate,
        };
        Self::new(
            UniPoly::from_ints(&row.condition),
            row.variable,
            RatFunc1::new(
                UniPoly::from_ints(&row.partner.num),
                UniPoly::from_ints(&row.partner.den),
            ),
            source,
        )
    }

    pub fn condition(&self) -> &UniPoly {
        &self.condition
    }

    pub fn variable(&self) -> Coordinate {
        self.variable
    }

    pub fn partner(&self) -> &RatFunc1 {
        &self.partner
    }

    pub fn source(&self) -> &SpecSource {
        &self.source
    }

    fn names(&self) -> (&'static str, &'static str) {
        match self.variable {
            Coordinate::X => ("a", "b"),
            Coordinate::Y => ("b", "a"),
        }
    }

    /// The point as a pair of residues modulo the condition.
    pub fn point(&self) -> Result<(AlgebraicResidue, AlgebraicResidue)> {
        let m = Arc::new(self.condition.clone());
        let root = AlgebraicResidue::generator(m.clone());
        let embed = |p: &UniPoly| AlgebraicResidue::new(p.clone(), m.clone());
        let other = embed(self.partner.num()).mul(&embed(self.partner.den()).invert()?);
        Ok(match self.variable {
            Coordinate::X => (root, other),
            Coordinate::Y => (other, root),
        })
    }
}

impl fmt::Display for FixedPointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v, w) = self.names();
        let num = self.partner.num().display_in(v);
        let partner = if self.partner.den().is_one() {
            num
        } else {
            format!("({num})/({})", self.partner.den().display_in(v))
        };
        write!(f, "{} = 0, {w} = {partner}", self.condition.display_in(v))
    }
}

impl Serialize for FixedPointSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let (v, w) = self.names();
        let mut m = ser.serialize_map(Some(4))?;
        m.serialize_entry("variable", v)?;
        m.serialize_entry("condition", &self.condition.display_in(v))?;
        m.serialize_entry(
            "partner",
            &format!(
                "{w} = ({})/({})",
                self.partner.num().display_in(v),
                self.partner.den().display_in(v)
            ),
        )?;
        m.serialize_entry("source", &self.source)?;
        m.end()
    }
}

fn eval_at(
    f: &RatFunc2,
    (a, b): &(AlgebraicResidue, AlgebraicResidue),
) -> Result<AlgebraicResidue> {
    let (ai, bi) = (a.invert()?, b.invert()?);
    let n = f.num().eval_with((a, &ai), (b, &bi));
    let d = f.den().eval_with((a, &ai), (b, &bi));
    Ok(n.mul(&d.invert()?))
}

/// `Θ(a, b) = (a, b)` in `Q[a]/(p)`.
///
/// A denominator that vanishes at the point is an error carrying the common
/// factor.
pub fn verify_fixed_point(s: StepSet, spec: &FixedPointSpec) -> Result<bool> {
    let theta = make_theta(s)?;
    verify_with(&theta, spec)
}

fn verify_with(theta: &BiRationalMap, spec: &FixedPointSpec) -> Result<bool> {
    let pt = spec.point()?;
    let image = (eval_at(&theta.x, &pt)?, eval_at(&theta.y, &pt)?);
    Ok(image.0.sub(&pt.0).is_zero() && image.1.sub(&pt.1).is_zero())
}

/// Trace and determinant of the Jacobian of `Θ` at the point, as residues.
#[derive(Clone, Debug)]
pub struct JacobianInvariants {
    pub trace: AlgebraicResidue,
    pub det: AlgebraicResidue,
}

impl JacobianInvariants {
    /// `X² - tr X + det` with coefficients in `Q[a]`, as a polynomial in `a`
    /// whose coefficients are polynomials in `X`.
    fn charpoly_in_a(&self) -> Poly<UniPoly> {
        let n = self
            .trace
            .value()
            .coeffs()
            .len()
            .max(self.det.value().coeffs().len())
            .max(1);
        let coeff = |p: &UniPoly, k: usize| p.coeff(k);
        Poly::new(
            (0..n)
                .map(|k| {
                    let x2 = if k == 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    UniPoly::new(vec![
                        coeff(self.det.value(), k),
                        coeff(self.trace.value(), k).neg(),
                        x2,
                    ])
                })
                .collect(),
        )
    }
}

pub fn jacobian_invariants(s: StepSet, spec: &FixedPointSpec) -> Result<JacobianInvariants> {
    let theta = make_theta(s)?;
    invariants_with(&theta, spec)
}

fn invariants_with(theta: &BiRationalMap, spec: &FixedPointSpec) -> Result<JacobianInvariants> {
    let pt = spec.point()?;
    let j11 = eval_at(&theta.x.diff_x(), &pt)?;
    let j12 = eval_at(&theta.y.diff_x(), &pt)?;
    let j21 = eval_at(&theta.x.diff_y(), &pt)?;
    let j22 = eval_at(&theta.y.diff_y(), &pt)?;
    Ok(JacobianInvariants {
        trace: j11.add(&j22),
        det: j11.mul(&j22).sub(&j12.mul(&j21)),
    })
}

/// `χ̄(X)`: the characteristic polynomial of the Jacobian of `Θ` at the
/// point, with the algebraic coordinate eliminated by a resultant against
/// the condition. Squarefree, primitive, positive leading coefficient.
pub fn jacobian_charpoly_eliminated(s: StepSet, spec: &FixedPointSpec) -> Result<UniPoly> {
    let theta = make_theta(s)?;
    eliminated_with(&theta, spec)
}

fn eliminated_with(theta: &BiRationalMap, spec: &FixedPointSpec) -> Result<UniPoly> {
    let inv = invariants_with(theta, spec)?;
    let p: Poly<UniPoly> = spec.condition.map(|c| UniPoly::constant(c.clone()));
    let chi = inv.charpoly_in_a();
    let r = if chi.is_constant() {
        // No dependence on the root: the resultant is a power of χ.
        chi.coeff(0)
    } else {
        resultant(&p, &chi)
    };
    Ok(r.squarefree_part().primitive())
}

/// Outcome of [`fixedpoint_certificate`].
#[derive(Clone, Debug, PartialEq)]
pub enum FixedPointOutcome {
    Certified {
        chi_bar: UniPoly,
    },
    /// The point is not fixed, or `χ̄` has the given cyclotomic factor.
    Inconclusive {
        cyclotomic: Option<u64>,
    },
}

pub fn fixedpoint_certificate(s: StepSet, spec: &FixedPointSpec) -> Result<FixedPointOutcome> {
    let theta = make_theta(s)?;
    match verify_with(&theta, spec) {
        Ok(true) => {}
        Ok(false) | Err(Error::NotInvertible { .. }) => {
            return Ok(FixedPointOutcome::Inconclusive { cyclotomic: None })
        }
        Err(e) => return Err(e),
    }
    let chi_bar = eliminated_with(&theta, spec)?;
    Ok(match has_cyclotomic_factor(&chi_bar) {
        None => FixedPointOutcome::Certified { chi_bar },
        Some(n) => FixedPointOutcome::Inconclusive {
            cyclotomic: Some(n),
        },
    })
}

/// Why a group is finite or infinite.
#[derive(Clone, Debug)]
pub enum GroupCertificate {
    Finite {
        order: usize,
        orbit: Orbit,
    },
    InfiniteValuation {
        start: (i32, i32),
        trace: Vec<(i32, i32)>,
    },
    InfiniteFixedPoint {
        spec: FixedPointSpec,
        chi_bar: UniPoly,
    },
    /// The certificate of `base = symmetry(model)` transports back.
    InfiniteBySymmetry {
        symmetry: Symmetry,
        base: StepSet,
        certificate: Box<GroupCertificate>,
    },
    Undetermined,
}

impl GroupCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupCertificate::Finite { .. } => "finite",
            GroupCertificate::InfiniteValuation { .. } => "infinite_valuation",
            GroupCertificate::InfiniteFixedPoint { .. } => "infinite_fixed_point",
            GroupCertificate::InfiniteBySymmetry { .. } => "infinite_by_symmetry",
            GroupCertificate::Undetermined => "undetermined",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupCertificate::Finite { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(
            self,
            GroupCertificate::InfiniteValuation { .. }
                | GroupCertificate::InfiniteFixedPoint { .. }
                | GroupCertificate::InfiniteBySymmetry { .. }
        )
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            GroupCertificate::Finite { order, .. } => Some(*order),
            _ => None,
        }
    }

    /// The certificate at the end of a chain of symmetry transports.
    pub fn root(&self) -> &GroupCertificate {
        match self {
            GroupCertificate::InfiniteBySymmetry { certificate, .. } => certificate.root(),
            c => c,
        }
    }
}

/// A certificate attached to the model it is about.
#[derive(Clone, Debug)]
pub struct Decision {
    pub model: StepSet,
    pub certificate: GroupCertificate,
}

impl Serialize for Decision {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(None)?;
        m.serialize_entry("model", &self.model)?;
        m.serialize_entry("kind", self.certificate.kind())?;
        match &self.certificate {
            GroupCertificate::Finite { order, orbit } => {
                m.serialize_entry("order", order)?;
                m.serialize_entry("orbit", &orbit.render())?;
            }
            GroupCertificate::InfiniteValuation { start, trace } => {
                m.serialize_entry("start", start)?;
                m.serialize_entry("trace", trace)?;
            }
            GroupCertificate::InfiniteFixedPoint { spec, chi_bar } => {
                m.serialize_entry("spec", spec)?;
                m.serialize_entry("chi_bar", &chi_bar.display_in("X"))?;
            }
            GroupCertificate::InfiniteBySymmetry {
                symmetry,
                base,
                certificate,
            } => {
                m.serialize_entry("symmetry", symmetry)?;
                m.serialize_entry(
                    "base",
                    &Decision {
                        model: *base,
                        certificate: (**certificate).clone(),
                    },
                )?;
            }
            GroupCertificate::Undetermined => {}
        }
        m.end()
    }
}

fn transported(g: Symmetry, base: StepSet, c: GroupCertificate) -> GroupCertificate {
    if g == Symmetry::Identity {
        c
    } else {
        GroupCertificate::InfiniteBySymmetry {
            symmetry: g,
            base,
            certificate: Box::new(c),
        }
    }
}

/// Run the full pipeline on one model: closed orbit, then valuation escape
/// from `(1, 2)` on the model and its images, then the shipped fixed points
/// on the model and its images.
pub fn decide(s: StepSet) -> Result<GroupCertificate> {
    if let OrbitOutcome::Closed(o) = orbit(s, OrbitLimits::default())? {
        return Ok(GroupCertificate::Finite {
            order: o.order(),
            orbit: o,
        });
    }
    for g in Symmetry::ALL {
        let image = s.apply(g);
        if let ValuationOutcome::Escapes { start, trace } =
            valuation_certificate(image, (1, 2), VALUATION_THRESHOLD)
        {
            return Ok(transported(
                g,
                image,
                GroupCertificate::InfiniteValuation { start, trace },
            ));
        }
    }
    for g in Symmetry::ALL {
        let image = s.apply(g);
        for row in fixtures::fixed_points()
            .rows
            .iter()
            .filter(|r| r.mask == image)
        {
            let spec = FixedPointSpec::from_row(row)?;
            if let FixedPointOutcome::Certified { chi_bar } = fixedpoint_certificate(image, &spec)?
            {
                return Ok(transported(
                    g,
                    image,
                    GroupCertificate::InfiniteFixedPoint { spec, chi_bar },
                ));
            }
        }
    }
    Ok(GroupCertificate::Undetermined)
}

/// [`decide`] over many models.
pub fn decide_all(models: &[StepSet], exec: Exec) -> Result<Vec<Decision>> {
    exec.map(models, |&s| {
        decide(s).map(|certificate| Decision {
            model: s,
            certificate,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    fn row1() -> FixedPointSpec {
        FixedPointSpec::from_row(&fixtures::fixed_points().rows[0]).unwrap()
    }

    #[test]
    fn valuation_trace_on_simple_walk_cycles() {
        let nsew = s("N,S,E,W");
        for start in [(1, 2), (0, 0), (-3, 5), (7, -1)] {
            assert_eq!(
                valuation_certificate(nsew, start, 100),
                ValuationOutcome::Inconclusive
            );
        }
        let kreweras = s("W,S,NE");
        assert_eq!(
            valuation_certificate(kreweras, (1, 2), 100),
            ValuationOutcome::Inconclusive
        );
    }

    #[test]
    fn valuation_maps_are_involutions() {
        for m in StepSet::iter_all().filter(|m| ValuationMap::new(*m).is_ok()) {
            let v = ValuationMap::new(m).unwrap();
            for a in -4..=4 {
                for b in -4..=4 {
                    assert_eq!(v.phi(v.phi((a, b))), (a, b));
                    assert_eq!(v.psi(v.psi((a, b))), (a, b));
                }
            }
        }
    }

    #[test]
    fn row_one_is_fixed_and_perturbation_is_not() {
        let m = s("10101100");
        assert!(verify_fixed_point(m, &row1()).unwrap());
        let wrong = FixedPointSpec::new(
            UniPoly::from_ints(&[-1, 0, 0, 1, 1]),
            Coordinate::X,
            RatFunc1::new(UniPoly::one(), UniPoly::x()),
            SpecSource::User,
        )
        .unwrap();
        assert!(!verify_fixed_point(m, &wrong).unwrap());
    }

    #[test]
    fn row_one_characteristic_polynomial() {
        let m = s("10101100");
        let inv = jacobian_invariants(m, &row1()).unwrap();
        // χ = X² + (1 + a⁴) X + a³ + a⁴ with a⁴ = 1 - a³.
        let p = Arc::new(UniPoly::from_ints(&[-1, 0, 0, 1, 1]));
        let r = |c: &[i64]| AlgebraicResidue::new(UniPoly::from_ints(c), p.clone());
        assert_eq!(inv.trace.value(), r(&[-1, 0, 0, 0, -1]).value());
        assert_eq!(inv.det.value(), r(&[0, 0, 0, 1, 1]).value());
        assert_eq!(
            jacobian_charpoly_eliminated(m, &row1()).unwrap(),
            UniPoly::from_ints(&[1, 9, 31, 62, 77, 62, 31, 9, 1])
        );
    }

    #[test]
    fn spec_rejects_shared_denominator() {
        let bad = FixedPointSpec::new(
            UniPoly::from_ints(&[0, 1, 1]),
            Coordinate::X,
            RatFunc1::new(UniPoly::one(), UniPoly::from_ints(&[1, 1])),
            SpecSource::User,
        );
        assert!(matches!(bad, Err(Error::NotInvertible { .. })));
        let constant = FixedPointSpec::new(
            UniPoly::constant(int(3)),
            Coordinate::X,
            RatFunc1::one(),
            SpecSource::User,
        );
        assert!(constant.is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let d = Decision {
            model: s("10101100"),
            certificate: GroupCertificate::InfiniteFixedPoint {
                spec: row1(),
                chi_bar: UniPoly::from_ints(&[1, 1, 1]),
            },
        };
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["model"], "10101100");
        assert_eq!(v["kind"], "infinite_fixed_point");
        assert_eq!(v["chi_bar"], "X^2 + X + 1");
        assert_eq!(v["spec"]["condition"], "a^4 + a^3 - 1");
    }
}
