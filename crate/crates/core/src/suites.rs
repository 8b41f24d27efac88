//! Named verification suites shared by the command-line tool and the
//! acceptance tests. Each suite is a list of exact checks; a check that
//! errors counts as a failure and keeps its message.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::{has_cyclotomic_factor, Ring, UniPoly};
use crate::algebraic::{
    algebraic_identities, closed_solution, verify_closed_solutions, HalfOrbitModel,
};
use crate::counter::{
    count_dp, gosper, is_orbit_sum_exception, orbit_sum_sides, verify_functional_equation,
    verify_orbit_sum, ClosedForm, OrbitExtractor, GESSEL, GOUYOU_BEAUCHAMPS, KREWERAS,
    REVERSE_KREWERAS, TANDEM,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::group::{orbit, OrbitLimits};
use crate::kernel::{canonical_factorization, verify_kernel_inverse, y_roots, KernelData};
use crate::par::Exec;
use crate::prover::{
    decide_all, fixedpoint_certificate, jacobian_charpoly_eliminated, verify_fixed_point,
    FixedPointOutcome, FixedPointSpec,
};
use crate::stepset::{enumerate_models, model_histogram, pipeline_waypoints, StepSet};

/// One verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Classification,
    Groups,
    FixedPoints,
    Sequences,
    OrbitExtraction,
    Identities,
    ClosedForms,
    Gosper,
    Kernel,
    Algebraic,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Classification,
        Suite::Groups,
        Suite::FixedPoints,
        Suite::Sequences,
        Suite::OrbitExtraction,
        Suite::Identities,
        Suite::ClosedForms,
        Suite::Gosper,
        Suite::Kernel,
        Suite::Algebraic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classification => "classification",
            Suite::Groups => "groups",
            Suite::FixedPoints => "fixed-points",
            Suite::Sequences => "sequences",
            Suite::OrbitExtraction => "orbit-extraction",
            Suite::Identities => "identities",
            Suite::ClosedForms => "closed-forms",
            Suite::Gosper => "gosper",
            Suite::Kernel => "kernel",
            Suite::Algebraic => "algebraic",
        }
    }

    /// Suites selected by a name: a single suite, or one of the groups
    /// `table5` (fixed points), `orbit-sums` (extraction and identities)
    /// and `all`.
    pub fn select(name: &str) -> Result<Vec<Suite>> {
        match name {
            "all" => Ok(Suite::ALL.to_vec()),
            "table5" => Ok(vec![Suite::FixedPoints]),
            "orbit-sums" => Ok(vec![Suite::OrbitExtraction, Suite::Identities]),
            other => other.parse().map(|s| vec![s]),
        }
    }

    pub fn run(self) -> SuiteReport {
        let start = Instant::now();
        let mut checks = Vec::new();
        let mut add = |name: &str, outcome: Result<(bool, String)>| {
            checks.push(match outcome {
                Ok((passed, detail)) => Check {
                    name: name.to_string(),
                    passed,
                    detail,
                },
                Err(e) => Check {
                    name: name.to_string(),
                    passed: false,
                    detail: format!("error: {e}"),
                },
            })
        };
        match self {
            Suite::Classification => classification(&mut add),
            Suite::Groups => groups(&mut add),
            Suite::FixedPoints => fixed_points(&mut add),
            Suite::Sequences => sequences(&mut add),
            Suite::OrbitExtraction => orbit_extraction(&mut add),
            Suite::Identities => identities(&mut add),
            Suite::ClosedForms => closed_forms(&mut add),
            Suite::Gosper => gosper_suite(&mut add),
            Suite::Kernel => kernel(&mut add),
            Suite::Algebraic => algebraic(&mut add),
        }
        SuiteReport {
            suite: self,
            checks,
            elapsed: start.elapsed(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Wall-clock time; left out of serialised reports so they stay
    /// reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Add<'a> = dyn FnMut(&str, Result<(bool, String)>) + 'a;

fn finite_models() -> Vec<StepSet> {
    fixtures::finite_models().map(|m| m.canonical()).collect()
}

fn step(text: &str) -> StepSet {
    text.parse().expect("valid step set")
}

fn classification(add: &mut Add) {
    let models = enumerate_models();
    add(
        "79 models",
        Ok((models.len() == 79, format!("{} models", models.len()))),
    );
    let hist = model_histogram(&models);
    let expected = UniPoly::from_ints(&[0, 0, 0, 7, 23, 27, 16, 5, 1]);
    add(
        "sizes 3 to 8 occur 7, 23, 27, 16, 5, 1 times",
        Ok((
            hist == expected,
            format!("histogram {}", hist.display_in("z")),
        )),
    );
    let w = pipeline_waypoints();
    add(
        "reduction waypoints 161, 153, 138",
        Ok((w == [161, 153, 138], format!("{w:?}"))),
    );
    let mut tabulated: Vec<StepSet> = fixtures::models().iter().map(|m| m.canonical()).collect();
    tabulated.sort();
    let mut sorted = models.clone();
    sorted.sort();
    add(
        "tables list the same 79 models",
        Ok((
            tabulated == sorted,
            format!("{} tabulated", tabulated.len()),
        )),
    );
}

fn groups(add: &mut Add) {
    let models = enumerate_models();
    let decisions = match decide_all(&models, Exec::default()) {
        Ok(d) => d,
        Err(e) => return add("decide all models", Err(e)),
    };
    let count = |f: &dyn Fn(&crate::prover::GroupCertificate) -> bool| {
        decisions.iter().filter(|d| f(&d.certificate)).count()
    };
    let by_order = |k| count(&|c| c.order() == Some(k));
    let tally = [
        by_order(4),
        by_order(6),
        by_order(8),
        count(&|c| c.is_infinite()),
        count(&|c| !c.is_finite() && !c.is_infinite()),
    ];
    add(
        "orders 4, 6, 8, infinite, undetermined: 16, 5, 2, 56, 0",
        Ok((tally == [16, 5, 2, 56, 0], format!("{tally:?}"))),
    );
    let mismatches: Vec<String> = decisions
        .iter()
        .filter(|d| {
            let tab = fixtures::model_for(d.model).and_then(|m| m.group_order);
            tab.map(|o| o as usize) != d.certificate.order()
        })
        .map(|d| d.model.to_string())
        .collect();
    add(
        "decisions agree with the tables",
        Ok((mismatches.is_empty(), format!("mismatches: {mismatches:?}"))),
    );
}

fn fixed_points(add: &mut Add) {
    let table = fixtures::fixed_points();
    for row in &table.rows {
        let name = format!("row {}", row.row.unwrap_or(0));
        let outcome = (|| -> Result<(bool, String)> {
            let spec = FixedPointSpec::from_row(row)?;
            if !verify_fixed_point(row.mask, &spec)? {
                return Ok((false, "not a fixed point".into()));
            }
            let chi = jacobian_charpoly_eliminated(row.mask, &spec)?;
            if let Some(n) = has_cyclotomic_factor(&chi) {
                return Ok((false, format!("cyclotomic factor Φ_{n}")));
            }
            if let Some(tab) = &row.chi_bar {
                let tab = UniPoly::from_ints(tab).squarefree_part().primitive();
                if tab != chi {
                    return Ok((
                        false,
                        format!("χ̄ = {} differs from the table", chi.display_in("X")),
                    ));
                }
            }
            let certified = matches!(
                fixedpoint_certificate(row.mask, &spec)?,
                FixedPointOutcome::Certified { .. }
            );
            Ok((certified, format!("χ̄ = {}", chi.display_in("X"))))
        })();
        add(&name, outcome);
    }
    add(
        "14 tabulated rows",
        Ok((table.rows.len() == 14, format!("{} rows", table.rows.len()))),
    );
    let row1 = table.rows.iter().find(|r| r.row == Some(1));
    let outcome = row1
        .ok_or_else(|| Error::Fixture("row 1 missing".into()))
        .and_then(|row| {
            let spec = FixedPointSpec::from_row(row)?;
            let chi = jacobian_charpoly_eliminated(row.mask, &spec)?;
            let expected = UniPoly::from_ints(&[1, 9, 31, 62, 77, 62, 31, 9, 1]);
            Ok((chi == expected, chi.display_in("X")))
        });
    add(
        "row 1 χ̄ = X^8 + 9X^7 + 31X^6 + 62X^5 + 77X^4 + 62X^3 + 31X^2 + 9X + 1",
        outcome,
    );
    for row in &table.degenerate {
        let outcome = FixedPointSpec::from_row(row).and_then(|spec| {
            let fixed = verify_fixed_point(row.mask, &spec)?;
            let outcome = fixedpoint_certificate(row.mask, &spec)?;
            let inconclusive = matches!(
                outcome,
                FixedPointOutcome::Inconclusive {
                    cyclotomic: Some(_)
                }
            );
            Ok((fixed && inconclusive, format!("{outcome:?}")))
        });
        add(&format!("degenerate point of {}", row.mask), outcome);
    }
}

fn sequences(add: &mut Add) {
    for entry in fixtures::finite_models() {
        let m = entry.canonical();
        let table = count_dp(m, 9);
        let check = |seq: &Option<fixtures::Sequence>, f: &dyn Fn(usize) -> BigUint| {
            let Some(seq) = seq else {
                return (false, "no tabulated terms".to_string());
            };
            let n = seq.terms.len().min(10);
            let bad = (0..n).find(|&k| f(k) != BigUint::from(seq.terms[k]));
            match bad {
                None => (true, format!("{n} terms")),
                Some(k) => (
                    false,
                    format!("differs at n = {k}: {} vs {}", f(k), seq.terms[k]),
                ),
            }
        };
        add(
            &format!("{} {m} totals", entry.id()),
            Ok(check(&entry.totals, &|n| table.total(n))),
        );
        add(
            &format!("{} {m} returns to the origin", entry.id()),
            Ok(check(&entry.origin, &|n| table.get(0, 0, n))),
        );
    }
    let simple = count_dp(step("N,S,E,W"), 9).totals();
    let expected: Vec<BigUint> = [1u64, 2, 6, 18, 60, 200, 700, 2450, 8820, 31752]
        .into_iter()
        .map(BigUint::from)
        .collect();
    add(
        "simple walk totals 1, 2, 6, 18, 60, ...",
        Ok((simple == expected, format!("{simple:?}"))),
    );
}

fn orbit_extraction(add: &mut Add) {
    let models: Vec<StepSet> = finite_models()
        .into_iter()
        .filter(|m| !is_orbit_sum_exception(*m))
        .collect();
    add(
        "19 models are solved by their orbit sum",
        Ok((models.len() == 19, format!("{} models", models.len()))),
    );
    let outcomes = Exec::default().map(&models, |&m| -> Result<usize> {
        let table = count_dp(m, 12);
        let mut ex = OrbitExtractor::new(m)?;
        let mut mismatches = 0;
        for n in 0..=12 {
            for i in 0..=8 {
                for j in 0..=8 {
                    if ex.count(i, j, n)? != table.get(i, j, n) {
                        mismatches += 1;
                    }
                }
            }
        }
        Ok(mismatches)
    });
    for (m, outcome) in models.iter().zip(outcomes) {
        add(
            &format!("{m}: orbit extraction equals the oracle on i, j <= 8, n <= 12"),
            outcome.map(|bad| (bad == 0, format!("{bad} mismatches"))),
        );
    }
}

fn identities(add: &mut Add) {
    let models = enumerate_models();
    let failed: Vec<String> = models
        .iter()
        .zip(Exec::default().map(&models, |&m| verify_functional_equation(m, 12)))
        .filter(|(_, ok)| !ok)
        .map(|(m, _)| m.to_string())
        .collect();
    add(
        "functional equation to O(t^12) on all 79 models",
        Ok((failed.is_empty(), format!("failures: {failed:?}"))),
    );
    let finite = finite_models();
    let outcomes = Exec::default().map(&finite, |&m| verify_orbit_sum(m, 8));
    for (m, outcome) in finite.iter().zip(outcomes) {
        add(
            &format!("{m}: orbit sum to O(t^8)"),
            outcome.map(|ok| (ok, String::new())),
        );
    }
    let gessel = step(GESSEL);
    let outcome = orbit(gessel, OrbitLimits::default()).and_then(|o| {
        let orb = o.orbit().ok_or(Error::InfiniteGroup)?;
        let (lhs, _) = orbit_sum_sides(gessel, orb, &count_dp(gessel, 7), 8)?;
        Ok((lhs.iter().all(|c| c.is_zero()), String::new()))
    });
    add("the orbit sum of E, W, NE, SW vanishes", outcome);
}

fn closed_forms(add: &mut Add) {
    let models = [
        TANDEM,
        GOUYOU_BEAUCHAMPS,
        KREWERAS,
        REVERSE_KREWERAS,
        GESSEL,
    ]
    .map(step);
    let tables = Exec::default().map(&models, |&m| count_dp(m, 18));
    let instances = ClosedForm::instances(18);
    let mut bad = Vec::new();
    for c in &instances {
        let table = tables
            .iter()
            .find(|t| t.model() == c.model())
            .expect("table for model");
        match c.evaluate() {
            Ok(v) if v == c.from_table(table) => {}
            Ok(v) => bad.push(format!("{c:?}: {v} vs {}", c.from_table(table))),
            Err(e) => bad.push(e.to_string()),
        }
    }
    add(
        "closed forms equal the oracle for n <= 18",
        Ok((
            bad.is_empty(),
            format!("{} instances, failures: {bad:?}", instances.len()),
        )),
    );
    let spots = [
        (ClosedForm::Tandem { i: 0, j: 0, n: 6 }, 5u32),
        (ClosedForm::GouyouBeauchamps { i: 0, j: 0, n: 4 }, 3),
        (ClosedForm::GouyouTotal { n: 3 }, 6),
        (ClosedForm::GesselAtOrigin { n: 4 }, 11),
        (ClosedForm::KrewerasOnAxis { i: 0, n: 6 }, 16),
    ];
    for (c, v) in spots {
        add(
            &format!("{c:?} = {v}"),
            c.evaluate()
                .map(|got| (got == BigUint::from(v), got.to_string())),
        );
    }
}

fn gosper_suite(add: &mut Add) {
    let failure = gosper::first_failure(10, 6, 6);
    add(
        "seven telescoping identities on m <= 10, i, j <= 6",
        Ok((failure.is_none(), format!("first failure: {failure:?}"))),
    );
}

fn kernel(add: &mut Add) {
    let finite = finite_models();
    let outcomes = Exec::default().map(&finite, |&m| -> Result<bool> {
        let data = KernelData::new(m);
        let roots = y_roots(m, 17)?;
        let k = data.kernel_at(&roots.y0.to_ratfunc())?;
        Ok(k.order().is_some_and(|o| o >= 15) && k.terms().all(|(n, c)| n >= 15 || c.is_zero()))
    });
    let bad: Vec<String> = finite
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| !matches!(o, Ok(true)))
        .map(|(m, o)| format!("{m}: {o:?}"))
        .collect();
    add(
        "K(x, Y0) = O(t^15) on the 23 finite models",
        Ok((bad.is_empty(), format!("failures: {bad:?}"))),
    );
    for m in [
        "N,S,E,W",
        "W,S,NE",
        "E,W,NE,SW",
        "N,S,NE,SW,NW,SE",
        "NW,NE,S",
    ] {
        add(
            &format!("{m}: three-term 1/K expansion to O(t^10)"),
            verify_kernel_inverse(step(m), 10).map(|ok| (ok, String::new())),
        );
    }
    let outcomes = Exec::default().map(&finite, |&m| -> Result<bool> {
        let data = KernelData::new(m);
        let f = canonical_factorization(m, 20)?;
        Ok(f.product().agrees_with(&data.delta.truncate(20)))
    });
    let bad: Vec<String> = finite
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| !matches!(o, Ok(true)))
        .map(|(m, o)| format!("{m}: {o:?}"))
        .collect();
    add(
        "Δ0 Δ- Δ+ = Δ to O(t^20) on the 23 finite models",
        Ok((bad.is_empty(), format!("failures: {bad:?}"))),
    );
    let outcome = (|| -> Result<(bool, String)> {
        let lifted = canonical_factorization(step(KREWERAS), 20)?;
        let closed = closed_solution(HalfOrbitModel::Kreweras, 20)?.factorization;
        Ok((
            lifted.plus == closed.plus && lifted.delta0 == closed.delta0,
            String::new(),
        ))
    })();
    add(
        "W,S,NE: Δ+ = 1 - xW^2 and Δ0 = 4t^2/W^2 to O(t^20)",
        outcome,
    );
}

fn algebraic(add: &mut Add) {
    for model in HalfOrbitModel::ALL {
        add(
            &format!("{model:?}: half-orbit solution, closed forms and oracle agree to O(t^14)"),
            verify_closed_solutions(model, 14).map(|ok| (ok, String::new())),
        );
    }
    // The quartic is checked to O(t^30), everything else to O(t^20).
    const QUARTIC: &str = "double-kreweras-total-quartic";
    for (order, quartic) in [(20, false), (30, true)] {
        match algebraic_identities(order) {
            Ok(checks) => {
                for c in checks.iter().filter(|c| (c.name == QUARTIC) == quartic) {
                    add(
                        &format!("{} to O(t^{order})", c.name),
                        Ok((c.holds, String::new())),
                    );
                }
            }
            Err(e) => add(&format!("algebraic identities to O(t^{order})"), Err(e)),
        }
    }
}
