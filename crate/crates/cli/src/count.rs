//! The three ways of producing counts and their cross-check.

use anyhow::{bail, Result};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde::Serialize;

use qpwalks::counter::{
    count_dp, ClosedForm, OrbitExtractor, GESSEL, GOUYOU_BEAUCHAMPS, KREWERAS, REVERSE_KREWERAS,
    TANDEM,
};
use qpwalks::stepset::StepSet;
use qpwalks::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Step-by-step dynamic programming.
    Dp,
    /// Coefficient extraction from the orbit sum.
    Orbit,
    /// Product formulas.
    Closed,
}

/// Which counts to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Selector {
    /// Every `q(i, j; n)` with `i, j ≤ n`.
    Table,
    /// `q(i, j; n)` for each `n`.
    At { i: usize, j: usize },
    /// Walks ending at height `j`.
    Row { j: usize },
    /// Walks ending at abscissa `i`.
    Col { i: usize },
    /// All walks.
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counts {
    /// `(n, i, j, count)`.
    Table(Vec<(usize, usize, usize, BigUint)>),
    /// One count per length `0..=N`.
    Sequence(Vec<BigUint>),
}

impl Counts {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Counts::Table(rows) => {
                out.push_str("n,i,j,count\n");
                for (n, i, j, c) in rows {
                    out.push_str(&format!("{n},{i},{j},{c}\n"));
                }
            }
            Counts::Sequence(values) => {
                out.push_str("n,count\n");
                for (n, c) in values.iter().enumerate() {
                    out.push_str(&format!("{n},{c}\n"));
                }
            }
        }
        out
    }
}

impl Serialize for Counts {
    /// Counts are decimal strings so that no consumer truncates them.
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            n: usize,
            i: usize,
            j: usize,
            count: String,
        }
        match self {
            Counts::Table(rows) => ser.collect_seq(rows.iter().map(|(n, i, j, c)| Entry {
                n: *n,
                i: *i,
                j: *j,
                count: c.to_string(),
            })),
            Counts::Sequence(values) => ser.collect_seq(values.iter().map(|c| c.to_string())),
        }
    }
}

pub fn compute(s: StepSet, max_len: usize, selector: Selector, method: Method) -> Result<Counts> {
    match method {
        Method::Dp => Ok(by_dp(s, max_len, selector)),
        Method::Orbit => by_orbit(s, max_len, selector),
        Method::Closed => by_closed(s, max_len, selector),
    }
}

/// Whether `method` can produce `selector` for `s` at all.
pub fn applicable(s: StepSet, selector: Selector, method: Method) -> bool {
    match method {
        Method::Dp => true,
        Method::Orbit => OrbitExtractor::new(s).is_ok(),
        Method::Closed => closed_form(s, selector, 0).is_some(),
    }
}

fn by_dp(s: StepSet, max_len: usize, selector: Selector) -> Counts {
    let t = count_dp(s, max_len);
    let seq = |f: &dyn Fn(usize) -> BigUint| Counts::Sequence((0..=max_len).map(f).collect());
    match selector {
        Selector::Table => Counts::Table(
            t.entries()
                .map(|(n, i, j, c)| (n, i, j, c.clone()))
                .collect(),
        ),
        Selector::At { i, j } => seq(&|n| t.get(i, j, n)),
        Selector::Row { j } => seq(&|n| t.ending_at_height(j, n)),
        Selector::Col { i } => seq(&|n| t.ending_at_abscissa(i, n)),
        Selector::Total => seq(&|n| t.total(n)),
    }
}

fn by_orbit(s: StepSet, max_len: usize, selector: Selector) -> Result<Counts> {
    let mut ex = match OrbitExtractor::new(s) {
        Ok(ex) => ex,
        Err(e @ (Error::NotApplicable(_) | Error::InfiniteGroup | Error::OutOfScope(_))) => {
            bail!("orbit extraction does not apply to {s}: {e}")
        }
        Err(e) => return Err(e.into()),
    };
    let mut seq = Vec::with_capacity(max_len + 1);
    let mut rows = Vec::new();
    for n in 0..=max_len {
        let v = match selector {
            Selector::Table => {
                for i in 0..=n {
                    for j in 0..=n {
                        rows.push((n, i, j, ex.count(i, j, n)?));
                    }
                }
                continue;
            }
            Selector::At { i, j } => ex.count(i, j, n)?,
            Selector::Row { j } => sum((0..=n).map(|i| ex.count(i, j, n)))?,
            Selector::Col { i } => sum((0..=n).map(|j| ex.count(i, j, n)))?,
            Selector::Total => {
                let mut acc = BigUint::default();
                for i in 0..=n {
                    for j in 0..=n {
                        acc += ex.count(i, j, n)?;
                    }
                }
                acc
            }
        };
        seq.push(v);
    }
    Ok(match selector {
        Selector::Table => Counts::Table(rows),
        _ => Counts::Sequence(seq),
    })
}

fn sum(values: impl Iterator<Item = qpwalks::Result<BigUint>>) -> Result<BigUint> {
    let mut acc = BigUint::default();
    for v in values {
        acc += v?;
    }
    Ok(acc)
}

fn is(s: StepSet, name: &str) -> bool {
    name.parse::<StepSet>().is_ok_and(|m| m == s)
}

/// The product formula for one count, if there is one.
fn closed_form(s: StepSet, selector: Selector, n: usize) -> Option<ClosedForm> {
    let n = n as i64;
    let c = |k: usize| k as i64;
    match selector {
        Selector::At { i, j } if is(s, TANDEM) => Some(ClosedForm::Tandem {
            i: c(i),
            j: c(j),
            n,
        }),
        Selector::At { i, j } if is(s, GOUYOU_BEAUCHAMPS) => Some(ClosedForm::GouyouBeauchamps {
            i: c(i),
            j: c(j),
            n,
        }),
        Selector::At { i, j: 0 } if is(s, KREWERAS) => {
            Some(ClosedForm::KrewerasOnAxis { i: c(i), n })
        }
        Selector::At { i, j } if i == j && is(s, REVERSE_KREWERAS) => {
            Some(ClosedForm::ReverseKrewerasOnDiagonal { i: c(i), n })
        }
        Selector::At { i: 0, j: 0 } if is(s, GESSEL) => Some(ClosedForm::GesselAtOrigin { n }),
        Selector::Row { j } if is(s, GOUYOU_BEAUCHAMPS) => {
            Some(ClosedForm::GouyouEndingAtHeight { j: c(j), n })
        }
        Selector::Col { i } if is(s, GOUYOU_BEAUCHAMPS) => {
            Some(ClosedForm::GouyouEndingAtAbscissa { i: c(i), n })
        }
        Selector::Total if is(s, GOUYOU_BEAUCHAMPS) => Some(ClosedForm::GouyouTotal { n }),
        Selector::Table if is(s, TANDEM) || is(s, GOUYOU_BEAUCHAMPS) => {
            closed_form(s, Selector::At { i: 0, j: 0 }, c(0) as usize)
        }
        _ => None,
    }
}

fn by_closed(s: StepSet, max_len: usize, selector: Selector) -> Result<Counts> {
    if closed_form(s, selector, 0).is_none() {
        bail!("no closed form for {} of {s}", describe(selector));
    }
    let eval = |sel: Selector, n: usize| -> Result<BigUint> {
        let f = closed_form(s, sel, n).expect("formula exists");
        Ok(f.evaluate()?)
    };
    if selector == Selector::Table {
        let mut rows = Vec::new();
        for n in 0..=max_len {
            for i in 0..=n {
                for j in 0..=n {
                    rows.push((n, i, j, eval(Selector::At { i, j }, n)?));
                }
            }
        }
        return Ok(Counts::Table(rows));
    }
    Ok(Counts::Sequence(
        (0..=max_len)
            .map(|n| eval(selector, n))
            .collect::<Result<_>>()?,
    ))
}

pub fn describe(selector: Selector) -> String {
    match selector {
        Selector::Table => "the full table".into(),
        Selector::At { i, j } => format!("q({i},{j};n)"),
        Selector::Row { j } => format!("q(-,{j};n)"),
        Selector::Col { i } => format!("q({i},-;n)"),
        Selector::Total => "q(-,-;n)".into(),
    }
}

/// Outcome of running several methods on the same request.
#[derive(Debug, Serialize)]
pub struct CrossCheck {
    pub methods: Vec<Method>,
    pub skipped: Vec<Method>,
    pub agree: bool,
}

/// Run every applicable method; the counts are those of the dynamic
/// programme, and `agree` holds only if every method produced them.
pub fn cross_check(s: StepSet, max_len: usize, selector: Selector) -> Result<(Counts, CrossCheck)> {
    let reference = by_dp(s, max_len, selector);
    let mut methods = vec![Method::Dp];
    let mut skipped = Vec::new();
    let mut agree = true;
    for m in [Method::Orbit, Method::Closed] {
        if !applicable(s, selector, m) {
            skipped.push(m);
            continue;
        }
        methods.push(m);
        agree &= compute(s, max_len, selector, m)? == reference;
    }
    Ok((
        reference,
        CrossCheck {
            methods,
            skipped,
            agree,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    fn values(c: &Counts) -> Vec<u64> {
        match c {
            Counts::Sequence(v) => v.iter().map(|x| x.try_into().unwrap()).collect(),
            Counts::Table(_) => panic!("expected a sequence"),
        }
    }

    #[test]
    fn gessel_by_formula() {
        let c = compute(s(GESSEL), 8, Selector::At { i: 0, j: 0 }, Method::Closed).unwrap();
        assert_eq!(values(&c), vec![1, 0, 2, 0, 11, 0, 85, 0, 782]);
    }

    #[test]
    fn all_methods_agree_on_tandem() {
        let (_, check) = cross_check(s(TANDEM), 9, Selector::Table).unwrap();
        assert_eq!(
            check.methods,
            vec![Method::Dp, Method::Orbit, Method::Closed]
        );
        assert!(check.agree);
    }

    #[test]
    fn inapplicable_methods_are_reported() {
        assert!(compute(s(KREWERAS), 4, Selector::Total, Method::Orbit).is_err());
        assert!(compute(s("N,S,E,W"), 4, Selector::Total, Method::Closed).is_err());
        let (_, check) = cross_check(s(KREWERAS), 9, Selector::At { i: 2, j: 0 }).unwrap();
        assert_eq!(check.methods, vec![Method::Dp, Method::Closed]);
        assert_eq!(check.skipped, vec![Method::Orbit]);
    }

    #[test]
    fn orbit_matches_dp_on_marginals() {
        let m = s("N,S,E,W");
        for sel in [
            Selector::Row { j: 1 },
            Selector::Col { i: 2 },
            Selector::Total,
        ] {
            assert_eq!(
                compute(m, 8, sel, Method::Orbit).unwrap(),
                compute(m, 8, sel, Method::Dp).unwrap()
            );
        }
    }
}
