use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};
use crate::stepset::StepSet;

use super::dp::CountTable;

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `1/n!`, taken as 0 for negative `n`.
fn inv_fact(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), fact(n))
    }
}

fn f(n: i64) -> Rational {
    Rational::from_integer(fact(n))
}

fn binom(n: i64, k: i64) -> Rational {
    if n < 0 || k < 0 || k > n {
        return Rational::zero();
    }
    Rational::from_integer(fact(n) / (fact(k) * fact(n - k)))
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(a)_n = a (a+1) ... (a+n-1)`.
fn pochhammer(a: &Rational, n: i64) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (a + r(k)))
}

/// `n = 3m + s` with `m ≥ 0`.
fn third(n: i64, s: i64) -> Option<i64> {
    let d = n - s;
    (d >= 0 && d % 3 == 0).then_some(d / 3)
}

/// `n = 2m + s` with `m ≥ 0`.
fn half(n: i64, s: i64) -> Option<i64> {
    let d = n - s;
    (d >= 0 && d % 2 == 0).then_some(d / 2)
}

/// A counting formula for one family of walks. Lengths outside the
/// formula's congruence class give 0, which is also the true count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "formula")]
pub enum ClosedForm {
    /// `q(i, j; n)` for the steps `W, N, SE`.
    Tandem { i: i64, j: i64, n: i64 },
    /// `q(i, j; n)` for the steps `E, W, NW, SE`.
    GouyouBeauchamps { i: i64, j: i64, n: i64 },
    /// `q(-, j; n)` for the same steps.
    GouyouEndingAtHeight { j: i64, n: i64 },
    /// `q(i, -; n)`.
    GouyouEndingAtAbscissa { i: i64, n: i64 },
    /// `q(-, -; n)`.
    GouyouTotal { n: i64 },
    /// `q(i, 0; n)` for the steps `W, S, NE`.
    KrewerasOnAxis { i: i64, n: i64 },
    /// `q(i, i; n)` for the steps `E, N, SW`.
    ReverseKrewerasOnDiagonal { i: i64, n: i64 },
    /// `q(0, 0; n)` for the steps `E, W, NE, SW`.
    GesselAtOrigin { n: i64 },
}

pub const TANDEM: &str = "W,N,SE";
pub const GOUYOU_BEAUCHAMPS: &str = "E,W,NW,SE";
pub const KREWERAS: &str = "W,S,NE";
pub const REVERSE_KREWERAS: &str = "E,N,SW";
pub const GESSEL: &str = "E,W,NE,SW";
pub const DOUBLE_KREWERAS: &str = "W,S,NE,E,N,SW";
pub const DOUBLE_TANDEM: &str = "W,N,SE,E,S,NW";

impl ClosedForm {
    /// The step set the formula counts walks of.
    pub fn model(&self) -> StepSet {
        let name = match self {
            ClosedForm::Tandem { .. } => TANDEM,
            ClosedForm::GouyouBeauchamps { .. }
            | ClosedForm::GouyouEndingAtHeight { .. }
            | ClosedForm::GouyouEndingAtAbscissa { .. }
            | ClosedForm::GouyouTotal { .. } => GOUYOU_BEAUCHAMPS,
            ClosedForm::KrewerasOnAxis { .. } => KREWERAS,
            ClosedForm::ReverseKrewerasOnDiagonal { .. } => REVERSE_KREWERAS,
            ClosedForm::GesselAtOrigin { .. } => GESSEL,
        };
        name.parse().unwrap()
    }

    /// The formula's value as a rational number.
    pub fn value(&self) -> Rational {
        match *self {
            ClosedForm::Tandem { i, j, n } => tandem(i, j, n),
            ClosedForm::GouyouBeauchamps { i, j, n } => gouyou(i, j, n),
            ClosedForm::GouyouEndingAtHeight { j, n } => gouyou_height(j, n),
            ClosedForm::GouyouEndingAtAbscissa { i, n } => gouyou_abscissa(i, n),
            ClosedForm::GouyouTotal { n } => gouyou_total(n),
            ClosedForm::KrewerasOnAxis { i, n } => kreweras_axis(i, n),
            ClosedForm::ReverseKrewerasOnDiagonal { i, n } => reverse_kreweras_diagonal(i, n),
            ClosedForm::GesselAtOrigin { n } => gessel_origin(n),
        }
    }

    /// The value as a count; non-integral or negative values are theorem
    /// violations.
    pub fn evaluate(&self) -> Result<BigUint> {
        let v = self.value();
        if !v.is_integer() || v.is_negative() {
            return Err(Error::TheoremViolation(format!(
                "{self:?} evaluates to {v}"
            )));
        }
        Ok(v.to_integer().try_into().unwrap())
    }

    /// The same quantity read off a counting table.
    pub fn from_table(&self, t: &CountTable) -> BigUint {
        let u = |k: i64| k.max(0) as usize;
        match *self {
            ClosedForm::Tandem { i, j, n } | ClosedForm::GouyouBeauchamps { i, j, n } => {
                t.get(u(i), u(j), u(n))
            }
            ClosedForm::GouyouEndingAtHeight { j, n } => t.ending_at_height(u(j), u(n)),
            ClosedForm::GouyouEndingAtAbscissa { i, n } => t.ending_at_abscissa(u(i), u(n)),
            ClosedForm::GouyouTotal { n } => t.total(u(n)),
            ClosedForm::KrewerasOnAxis { i, n } => t.get(u(i), 0, u(n)),
            ClosedForm::ReverseKrewerasOnDiagonal { i, n } => t.get(u(i), u(i), u(n)),
            ClosedForm::GesselAtOrigin { n } => t.get(0, 0, u(n)),
        }
    }

    /// Every instance of every formula with lengths up to `max_len` and
    /// positions up to `max_len`.
    pub fn instances(max_len: i64) -> Vec<ClosedForm> {
        let mut out = Vec::new();
        for n in 0..=max_len {
            out.push(ClosedForm::GouyouTotal { n });
            out.push(ClosedForm::GesselAtOrigin { n });
            for a in 0..=n {
                out.push(ClosedForm::GouyouEndingAtHeight { j: a, n });
                out.push(ClosedForm::GouyouEndingAtAbscissa { i: a, n });
                out.push(ClosedForm::KrewerasOnAxis { i: a, n });
                out.push(ClosedForm::ReverseKrewerasOnDiagonal { i: a, n });
                for b in 0..=n {
                    out.push(ClosedForm::Tandem { i: a, j: b, n });
                    out.push(ClosedForm::GouyouBeauchamps { i: a, j: b, n });
                }
            }
        }
        out
    }
}

fn tandem(i: i64, j: i64, n: i64) -> Rational {
    let Some(m) = third(n, 2 * i + j) else {
        return Rational::zero();
    };
    r((i + 1) * (j + 1) * (i + j + 2))
        * f(n)
        * inv_fact(m)
        * inv_fact(m + i + 1)
        * inv_fact(m + i + j + 2)
}

/// `q(i, j; 2m+i)` for the Gouyou-Beauchamps steps.
pub fn gouyou(i: i64, j: i64, n: i64) -> Rational {
    let Some(m) = half(n, i) else {
        return Rational::zero();
    };
    let k = 2 * m + i;
    Rational::new(
        ((i + 1) * (j + 1) * (i + j + 2) * (i + 2 * j + 3)).into(),
        ((k + 1) * (k + 2) * (k + 3) * (k + 3)).into(),
    ) * binom(k + 3, m - j)
        * binom(k + 3, m + 1)
}

fn gouyou_height(j: i64, n: i64) -> Rational {
    let m = n / 2;
    if n % 2 == 0 {
        r(j + 1)
            * f(2 * m)
            * f(2 * m + 2)
            * inv_fact(m - j)
            * inv_fact(m + 1)
            * inv_fact(m + 1)
            * inv_fact(m + j + 2)
    } else {
        r(2 * (j + 1))
            * f(2 * m + 1)
            * f(2 * m + 2)
            * inv_fact(m - j)
            * inv_fact(m + 1)
            * inv_fact(m + 2)
            * inv_fact(m + j + 2)
    }
}

fn gouyou_abscissa(i: i64, n: i64) -> Rational {
    let Some(m) = half(n, i) else {
        return Rational::zero();
    };
    r(i + 1)
        * f(n)
        * f(n + 2)
        * inv_fact(m)
        * inv_fact(m + 1)
        * inv_fact(m + i + 1)
        * inv_fact(m + i + 2)
}

fn gouyou_total(n: i64) -> Rational {
    let m = n / 2;
    if n % 2 == 0 {
        f(2 * m) * f(2 * m + 1) * inv_fact(m) * inv_fact(m) * inv_fact(m + 1) * inv_fact(m + 1)
    } else {
        f(2 * m + 1)
            * f(2 * m + 2)
            * inv_fact(m)
            * inv_fact(m + 1)
            * inv_fact(m + 1)
            * inv_fact(m + 2)
    }
}

fn four_pow(m: i64) -> Rational {
    Rational::from_integer(BigInt::from(4).pow(m as u32))
}

fn kreweras_axis(i: i64, n: i64) -> Rational {
    let Some(m) = third(n, 2 * i) else {
        return Rational::zero();
    };
    four_pow(m)
        * Rational::new(
            (2 * i + 1).into(),
            ((m + i + 1) * (2 * m + 2 * i + 1)).into(),
        )
        * binom(2 * i, i)
        * binom(n, m)
}

fn reverse_kreweras_diagonal(i: i64, n: i64) -> Rational {
    let Some(m) = third(n, 2 * i) else {
        return Rational::zero();
    };
    four_pow(m)
        * Rational::new(
            ((i + 1) * (i + 1)).into(),
            ((m + i + 1) * (2 * m + 2 * i + 1)).into(),
        )
        * binom(2 * i + 1, i)
        * binom(n, m)
}

fn gessel_origin(n: i64) -> Rational {
    let Some(k) = half(n, 0) else {
        return Rational::zero();
    };
    Rational::from_integer(BigInt::from(16).pow(k as u32))
        * pochhammer(&rat(5, 6), k)
        * pochhammer(&rat(1, 2), k)
        / (pochhammer(&rat(5, 3), k) * pochhammer(&r(2), k))
}

/// Antidifferences of the Gouyou-Beauchamps counts and their marginals.
pub mod gosper {
    use super::*;

    pub fn g1(i: i64, j: i64, m: i64) -> Rational {
        r(2 * (1 + j) * (m + 1 + 2 * i * (i + 1 + j)))
            * f(2 * m)
            * f(2 * m + 1)
            * inv_fact(m - i - j)
            * inv_fact(m - i + 1)
            * inv_fact(m + i + 1)
            * inv_fact(m + i + j + 2)
    }

    pub fn g2(i: i64, j: i64, m: i64) -> Rational {
        r(2 * (1 + j) * (m + 1 + j * (1 + 2 * i) + 2 * (1 + i) * (1 + i)))
            * f(2 * m + 1)
            * f(2 * m + 2)
            * inv_fact(m - i - j)
            * inv_fact(m - i + 1)
            * inv_fact(m + i + 2)
            * inv_fact(m + i + j + 3)
    }

    pub fn g3(i: i64, j: i64, m: i64) -> Rational {
        r((1 + i) * (m + 1 + (i + j + 1) * (1 + j)))
            * f(2 * m + i)
            * f(2 * m + i + 2)
            * inv_fact(m - j)
            * inv_fact(m + 1)
            * inv_fact(m + i + 2)
            * inv_fact(m + i + j + 2)
    }

    pub fn g4(i: i64, m: i64) -> Rational {
        f(2 * m)
            * f(2 * m + 1)
            * inv_fact(m - i)
            * inv_fact(m - i + 1)
            * inv_fact(m + i)
            * inv_fact(m + i + 1)
    }

    pub fn g5(i: i64, m: i64) -> Rational {
        f(2 * m + 1)
            * f(2 * m + 2)
            * inv_fact(m - i)
            * inv_fact(m - i + 1)
            * inv_fact(m + i + 1)
            * inv_fact(m + i + 2)
    }

    pub fn g6(j: i64, m: i64) -> Rational {
        f(2 * m)
            * f(2 * m + 1)
            * inv_fact(m - j)
            * inv_fact(m)
            * inv_fact(m + 1)
            * inv_fact(m + j + 1)
    }

    pub fn g7(j: i64, m: i64) -> Rational {
        f(2 * m + 1)
            * f(2 * m + 2)
            * inv_fact(m - j)
            * inv_fact(m + 1)
            * inv_fact(m + 2)
            * inv_fact(m + j + 1)
    }

    fn height_sum(j: i64, n: i64) -> Rational {
        (0..=n).map(|i| gouyou(i, j, n)).sum()
    }

    fn abscissa_sum(i: i64, n: i64) -> Rational {
        (0..=n).map(|j| gouyou(i, j, n)).sum()
    }

    /// The identity that failed first, if any, as `(name, i, j, m)`.
    pub fn first_failure(
        m_max: i64,
        i_max: i64,
        j_max: i64,
    ) -> Option<(&'static str, i64, i64, i64)> {
        for m in 0..=m_max {
            for i in 0..=i_max {
                for j in 0..=j_max {
                    if gouyou(2 * i, j, 2 * m) != g1(i, j, m) - g1(i + 1, j, m) {
                        return Some(("g1", i, j, m));
                    }
                    if gouyou(2 * i + 1, j, 2 * m + 1) != g2(i, j, m) - g2(i + 1, j, m) {
                        return Some(("g2", i, j, m));
                    }
                    if gouyou(i, j, 2 * m + i) != g3(i, j, m) - g3(i, j + 1, m) {
                        return Some(("g3", i, j, m));
                    }
                }
                if abscissa_sum(2 * i, 2 * m) != g4(i, m) - g4(i + 1, m) {
                    return Some(("g4", i, 0, m));
                }
                if abscissa_sum(2 * i + 1, 2 * m + 1) != g5(i, m) - g5(i + 1, m) {
                    return Some(("g5", i, 0, m));
                }
            }
            for j in 0..=j_max {
                if height_sum(j, 2 * m) != g6(j, m) - g6(j + 1, m) {
                    return Some(("g6", 0, j, m));
                }
                if height_sum(j, 2 * m + 1) != g7(j, m) - g7(j + 1, m) {
                    return Some(("g7", 0, j, m));
                }
            }
        }
        None
    }

    /// All seven telescoping identities on `m ≤ m_max`, `i ≤ i_max`,
    /// `j ≤ j_max`.
    pub fn certificates_check(m_max: i64, i_max: i64, j_max: i64) -> bool {
        first_failure(m_max, i_max, j_max).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: ClosedForm) -> u64 {
        c.evaluate().unwrap().try_into().unwrap()
    }

    #[test]
    fn spot_values() {
        assert_eq!(ev(ClosedForm::Tandem { i: 0, j: 0, n: 6 }), 5);
        assert_eq!(ev(ClosedForm::GouyouBeauchamps { i: 0, j: 0, n: 4 }), 3);
        assert_eq!(ev(ClosedForm::GouyouTotal { n: 2 }), 3);
        assert_eq!(ev(ClosedForm::GouyouTotal { n: 3 }), 6);
        assert_eq!(ev(ClosedForm::GesselAtOrigin { n: 4 }), 11);
        assert_eq!(ev(ClosedForm::KrewerasOnAxis { i: 0, n: 6 }), 16);
        assert_eq!(ev(ClosedForm::Tandem { i: 0, j: 0, n: 5 }), 0);
    }

    #[test]
    fn gouyou_origin_matches_factorial_form() {
        // 6 (2m)! (2m+2)! / (m! (m+1)! (m+2)! (m+3)!) at m = 2.
        let m = 2;
        let v = r(6)
            * f(2 * m)
            * f(2 * m + 2)
            * inv_fact(m)
            * inv_fact(m + 1)
            * inv_fact(m + 2)
            * inv_fact(m + 3);
        assert_eq!(v, ClosedForm::GouyouBeauchamps { i: 0, j: 0, n: 4 }.value());
    }

    #[test]
    fn g1_at_a_point() {
        let lhs = gouyou(2, 1, 6);
        assert_eq!(lhs, gosper::g1(1, 1, 3) - gosper::g1(2, 1, 3));
    }

    #[test]
    fn totals_two_ways() {
        for m in 0..=10 {
            assert_eq!(gosper::g4(0, m), gosper::g6(0, m));
            assert_eq!(gosper::g5(0, m), gosper::g7(0, m));
            assert_eq!(gosper::g4(0, m), gouyou_total(2 * m));
        }
    }
}
