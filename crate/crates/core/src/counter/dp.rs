use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::Rational;
use crate::par::Exec;
use crate::series::{LaurentPoly2, TruncSeries};
use crate::stepset::StepSet;

/// Exact counts `q(i, j; n)` of quadrant walks for `n ≤ N`.
///
/// Layer `n` is stored densely for `0 ≤ i, j ≤ n`; a walk of length `n`
/// cannot leave that square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    model: StepSet,
    max_len: usize,
    layers: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn model(&self) -> StepSet {
        self.model
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `q(i, j; n)`, zero outside the table.
    pub fn get(&self, i: usize, j: usize, n: usize) -> BigUint {
        if n > self.max_len || i > n || j > n {
            return BigUint::zero();
        }
        self.layers[n][i * (n + 1) + j].clone()
    }

    /// Overwrite one entry; used to build corrupted tables in tests.
    pub fn set(&mut self, i: usize, j: usize, n: usize, value: BigUint) {
        assert!(
            n <= self.max_len && i <= n && j <= n,
            "entry outside the table"
        );
        self.layers[n][i * (n + 1) + j] = value;
    }

    /// `q(-, j; n)`: walks ending at height `j`.
    pub fn ending_at_height(&self, j: usize, n: usize) -> BigUint {
        (0..=n).map(|i| self.get(i, j, n)).sum()
    }

    /// `q(i, -; n)`: walks ending at abscissa `i`.
    pub fn ending_at_abscissa(&self, i: usize, n: usize) -> BigUint {
        (0..=n).map(|j| self.get(i, j, n)).sum()
    }

    /// `q(-, -; n)`: all walks of length `n`.
    pub fn total(&self, n: usize) -> BigUint {
        if n > self.max_len {
            return BigUint::zero();
        }
        self.layers[n].iter().sum()
    }

    pub fn totals(&self) -> Vec<BigUint> {
        (0..=self.max_len).map(|n| self.total(n)).collect()
    }

    pub fn at_origin(&self) -> Vec<BigUint> {
        (0..=self.max_len).map(|n| self.get(0, 0, n)).collect()
    }

    /// The entries `(n, i, j, count)` with `i, j ≤ n`, ordered by `n`,
    /// then `i`, then `j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &BigUint)> + '_ {
        self.layers.iter().enumerate().flat_map(|(n, layer)| {
            (0..=n).flat_map(move |i| (0..=n).map(move |j| (n, i, j, &layer[i * (n + 1) + j])))
        })
    }

    /// CSV with header `n,i,j,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,i,j,count\n");
        for (n, i, j, c) in self.entries() {
            writeln!(out, "{n},{i},{j},{c}").unwrap();
        }
        out
    }

    /// `Q(x, y; t)` to `O(t^(N+1))`.
    pub fn series(&self) -> TruncSeries<LaurentPoly2> {
        let coeffs = (0..=self.max_len)
            .map(|n| {
                LaurentPoly2::from_terms((0..=n).flat_map(|i| {
                    (0..=n).filter_map(move |j| {
                        let c = &self.layers[n][i * (n + 1) + j];
                        (!c.is_zero()).then(|| {
                            (
                                (i as i32, j as i32),
                                Rational::from_integer(c.clone().into()),
                            )
                        })
                    })
                }))
            })
            .collect();
        TruncSeries::from_coeffs(coeffs, self.max_len as i32 + 1)
    }
}

impl Serialize for CountTable {
    /// Counts are decimal strings: they outgrow 64-bit integers quickly.
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            n: usize,
            i: usize,
            j: usize,
            count: String,
        }
        let entries: Vec<Entry> = self
            .entries()
            .filter(|(_, _, _, c)| !c.is_zero())
            .map(|(n, i, j, c)| Entry {
                n,
                i,
                j,
                count: c.to_string(),
            })
            .collect();
        let totals: Vec<String> = self.totals().iter().map(|c| c.to_string()).collect();
        let mut st = ser.serialize_struct("CountTable", 4)?;
        st.serialize_field("model", &self.model)?;
        st.serialize_field("max_length", &self.max_len)?;
        st.serialize_field("totals", &totals)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Count walks step by step: `q(i, j; n+1)` sums `q(i-p, j-q; n)` over the
/// steps `(p, q)` whose predecessor lies in the quadrant.
pub fn count_dp(s: StepSet, max_len: usize) -> CountTable {
    count_dp_with(s, max_len, Exec::Sequential)
}

/// [`count_dp`], with each layer's rows filled according to `exec`.
pub fn count_dp_with(s: StepSet, max_len: usize, exec: Exec) -> CountTable {
    let steps: Vec<(i32, i32)> = s.steps().collect();
    let mut layers = vec![vec![BigUint::from(1u32)]];
    for n in 0..max_len {
        let prev = &layers[n];
        let w = n + 2;
        let rows = exec.map_range(n + 2, |i| {
            let mut row = vec![BigUint::zero(); w];
            for (j, cell) in row.iter_mut().enumerate() {
                for &(p, q) in &steps {
                    let (pi, pj) = (i as i32 - p, j as i32 - q);
                    if pi < 0 || pj < 0 || pi as usize > n || pj as usize > n {
                        continue;
                    }
                    *cell += &prev[pi as usize * (n + 1) + pj as usize];
                }
            }
            row
        });
        layers.push(rows.into_iter().flatten().collect());
    }
    CountTable {
        model: s,
        max_len,
        layers,
    }
}

/// Tables for many models at once.
pub fn count_many(models: &[StepSet], max_len: usize, exec: Exec) -> Vec<CountTable> {
    exec.map(models, |&s| count_dp(s, max_len))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    fn nums(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn simple_walk_totals() {
        let t = count_dp(s("N,S,E,W"), 4);
        assert_eq!(nums(&t.totals()), vec![1, 2, 6, 18, 60]);
    }

    #[test]
    fn kreweras_returns_to_origin() {
        let t = count_dp(s("W,S,NE"), 6);
        assert_eq!(nums(&t.at_origin()), vec![1, 0, 0, 2, 0, 0, 16]);
    }

    #[test]
    fn csv_layout() {
        let t = count_dp(s("N,E"), 1);
        assert_eq!(
            t.to_csv(),
            "n,i,j,count\n0,0,0,1\n1,0,0,0\n1,0,1,1\n1,1,0,1\n1,1,1,0\n"
        );
    }

    #[test]
    fn strategies_agree() {
        let m = s("N,S,E,W,NE,SW");
        assert_eq!(count_dp_with(m, 12, Exec::Parallel), count_dp(m, 12));
    }
}
