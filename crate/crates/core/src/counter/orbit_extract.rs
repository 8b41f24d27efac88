use num_bigint::{BigInt, BigUint};

use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::group::orbit_sum_poly;
use crate::series::{ratfunc_to_laurent, Laurent, RatFunc1};
use crate::stepset::StepSet;

/// Finite-group models whose orbit sum does not determine `Q`: for the
/// three `x/y`-symmetric ones it vanishes, and for the fourth it is zero
/// as a whole.
pub const ORBIT_SUM_EXCEPTIONS: [&str; 4] = ["W,S,NE", "E,N,SW", "W,S,NE,E,N,SW", "E,W,NE,SW"];

pub fn is_orbit_sum_exception(s: StepSet) -> bool {
    ORBIT_SUM_EXCEPTIONS
        .iter()
        .any(|e| e.parse::<StepSet>().unwrap().canonical() == s.canonical())
}

/// Extracts `q(i, j; n) = [x^(i+1) y^(j+1)] O(x, y) S(x, y)ⁿ`, where `O` is
/// the orbit sum `Σ sign(g) g(xy)`.
///
/// Powers `O Sⁿ` are built on demand and kept. Models whose orbit sum is
/// only Laurent in `x` are handled through their mirror image.
pub struct OrbitExtractor {
    model: StepSet,
    transposed: bool,
    step: Laurent<RatFunc1>,
    products: Vec<Laurent<RatFunc1>>,
}

impl OrbitExtractor {
    pub fn new(s: StepSet) -> Result<Self> {
        if is_orbit_sum_exception(s) {
            return Err(Error::NotApplicable(format!(
                "the orbit sum of {s} does not determine its counts"
            )));
        }
        let (work, transposed, sum) = match orbit_sum_poly(s) {
            Ok(sum) => (s, false, sum),
            Err(Error::OutOfScope(_)) => (s.mirror(), true, orbit_sum_poly(s.mirror())?),
            Err(e) => return Err(e),
        };
        Ok(OrbitExtractor {
            model: s,
            transposed,
            step: work.poly().to_y_ratfunc(),
            products: vec![sum],
        })
    }

    pub fn model(&self) -> StepSet {
        self.model
    }

    fn product(&mut self, n: usize) -> &Laurent<RatFunc1> {
        while self.products.len() <= n {
            let next = self.products.last().unwrap().mul(&self.step);
            self.products.push(next);
        }
        &self.products[n]
    }

    /// `q(i, j; n)`. A non-Laurent coefficient or a negative value means a
    /// theorem failed and is reported as [`Error::TheoremViolation`].
    pub fn count(&mut self, i: usize, j: usize, n: usize) -> Result<BigUint> {
        let model = self.model;
        let (i, j) = if self.transposed { (j, i) } else { (i, j) };
        let slice = self.product(n).coeff(j as i32 + 1);
        let laurent = ratfunc_to_laurent(&slice).map_err(|e| {
            Error::TheoremViolation(format!(
                "{model}: [y^{}] O S^{n} is not Laurent: {e}",
                j + 1
            ))
        })?;
        let c = laurent.coeff(i as i32 + 1);
        if !c.is_integer() {
            return Err(Error::TheoremViolation(format!(
                "{model}: q({i},{j};{n}) = {c} is not an integer"
            )));
        }
        let value: BigInt = c.to_integer();
        BigUint::try_from(value).map_err(|e| {
            Error::TheoremViolation(format!("{model}: q({i},{j};{n}) is negative: {e}"))
        })
    }
}

/// One-shot [`OrbitExtractor::count`].
pub fn q_orbit(s: StepSet, i: usize, j: usize, n: usize) -> Result<BigUint> {
    OrbitExtractor::new(s)?.count(i, j, n)
}
