//! Step sets, the symmetries of the square, and the reduction of the 256
//! small-step sets to the 79 models worth studying.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{int, UniPoly};
use crate::error::{Error, Result};
use crate::series::{LaurentPoly1, LaurentPoly2};

/// Steps in bit order: bit `k` of a mask is `STEPS[k]`.
pub const STEPS: [(i32, i32); 8] = [
    (0, 1),
    (1, 1),
    (1, 0),
    (1, -1),
    (0, -1),
    (-1, -1),
    (-1, 0),
    (-1, 1),
];

/// Compass names in bit order.
pub const COMPASS: [&str; 8] = ["N", "NE", "E", "SE", "S", "SW", "W", "NW"];

fn bit_of(step: (i32, i32)) -> u8 {
    STEPS
        .iter()
        .position(|&s| s == step)
        .expect("not a small step") as u8
}

/// A set of small steps, stored as an 8-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StepSet(u8);

impl StepSet {
    pub const fn from_mask(mask: u8) -> Self {
        StepSet(mask)
    }

    pub fn from_steps(steps: impl IntoIterator<Item = (i32, i32)>) -> Self {
        StepSet(steps.into_iter().fold(0, |m, s| m | 1 << bit_of(s)))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, step: (i32, i32)) -> bool {
        STEPS
            .iter()
            .position(|&s| s == step)
            .is_some_and(|k| self.0 >> k & 1 == 1)
    }

    pub fn steps(self) -> impl Iterator<Item = (i32, i32)> {
        (0..8)
            .filter(move |k| self.0 >> k & 1 == 1)
            .map(|k| STEPS[k])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Eight characters, character `k` is bit `k`.
    pub fn to_binary(self) -> String {
        (0..8)
            .map(|k| if self.0 >> k & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Comma-separated compass names in bit order.
    pub fn to_compass(self) -> String {
        (0..8)
            .filter(|k| self.0 >> k & 1 == 1)
            .map(|k| COMPASS[k])
            .collect::<Vec<_>>()
            .join(",")
    }

    /// `S(x, y)`, the sum of `x^i y^j` over the steps.
    pub fn poly(self) -> LaurentPoly2 {
        LaurentPoly2::from_terms(self.steps().map(|(i, j)| ((i, j), int(1))))
    }

    /// `A_k(x)`: the coefficient of `y^k` in `S(x, y)`.
    pub fn a(self, k: i32) -> LaurentPoly1 {
        self.poly().y_coeff(k)
    }

    /// `B_k(y)`: the coefficient of `x^k` in `S(x, y)`.
    pub fn b(self, k: i32) -> LaurentPoly1 {
        self.poly().x_coeff(k)
    }

    /// 1 when the south-west step is allowed.
    pub fn epsilon(self) -> i64 {
        i64::from(self.contains((-1, -1)))
    }

    pub fn apply(self, g: Symmetry) -> Self {
        StepSet::from_steps(self.steps().map(|s| g.act(s)))
    }

    /// Reflection in the first diagonal, which exchanges `x` and `y`.
    pub fn mirror(self) -> Self {
        self.apply(Symmetry::Diagonal)
    }

    /// True when the set is invariant under the `x/y` exchange.
    pub fn is_xy_symmetric(self) -> bool {
        self.mirror() == self
    }

    /// The representative whose binary string is smaller, among the set and
    /// its mirror.
    pub fn canonical(self) -> Self {
        let m = self.mirror();
        if m.to_binary() < self.to_binary() {
            m
        } else {
            self
        }
    }

    pub fn is_canonical(self) -> bool {
        self.canonical() == self
    }

    pub fn classify(self) -> Classification {
        Classification {
            label: label_of(self),
            dedup: if self.is_canonical() {
                Dedup::Canonical
            } else {
                Dedup::MirrorOfCanonical
            },
        }
    }

    pub fn iter_all() -> impl Iterator<Item = StepSet> {
        (0..=255u8).map(StepSet)
    }
}

impl FromStr for StepSet {
    type Err = Error;

    /// Accepts comma-separated compass names or an 8-character binary mask.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.len() == 8 && text.bytes().all(|b| b == b'0' || b == b'1') {
            let mask = text
                .bytes()
                .enumerate()
                .fold(0u8, |m, (k, b)| m | u8::from(b == b'1') << k);
            return Ok(StepSet(mask));
        }
        let mut mask = 0u8;
        for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let upper = token.to_ascii_uppercase();
            let k = COMPASS
                .iter()
                .position(|&c| c == upper)
                .ok_or_else(|| Error::Parse(format!("unknown step `{token}`")))?;
            if mask >> k & 1 == 1 {
                return Err(Error::Parse(format!("duplicate step `{token}`")));
            }
            mask |= 1 << k;
        }
        Ok(StepSet(mask))
    }
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepSet({} {{{}}})", self.to_binary(), self.to_compass())
    }
}

impl Serialize for StepSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_binary())
    }
}

impl<'de> Deserialize<'de> for StepSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The eight symmetries of the square, acting on steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    /// Quarter turn counterclockwise.
    Rot90,
    Rot180,
    Rot270,
    /// `(i, j) -> (-i, j)`.
    ReflectVertical,
    /// `(i, j) -> (i, -j)`.
    ReflectHorizontal,
    /// `(i, j) -> (j, i)`, the `x/y` exchange.
    Diagonal,
    /// `(i, j) -> (-j, -i)`.
    AntiDiagonal,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::ReflectVertical,
        Symmetry::ReflectHorizontal,
        Symmetry::Diagonal,
        Symmetry::AntiDiagonal,
    ];

    /// Integer matrix `[[a, b], [c, d]]` acting as `(i, j) -> (a i + b j, c i + d j)`.
    pub fn matrix(self) -> [[i32; 2]; 2] {
        match self {
            Symmetry::Identity => [[1, 0], [0, 1]],
            Symmetry::Rot90 => [[0, -1], [1, 0]],
            Symmetry::Rot180 => [[-1, 0], [0, -1]],
            Symmetry::Rot270 => [[0, 1], [-1, 0]],
            Symmetry::ReflectVertical => [[-1, 0], [0, 1]],
            Symmetry::ReflectHorizontal => [[1, 0], [0, -1]],
            Symmetry::Diagonal => [[0, 1], [1, 0]],
            Symmetry::AntiDiagonal => [[0, -1], [-1, 0]],
        }
    }

    fn from_matrix(m: [[i32; 2]; 2]) -> Self {
        *Self::ALL
            .iter()
            .find(|g| g.matrix() == m)
            .expect("matrix outside the dihedral group")
    }

    pub fn act(self, (i, j): (i32, i32)) -> (i32, i32) {
        let [[a, b], [c, d]] = self.matrix();
        (a * i + b * j, c * i + d * j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        let [[a, b], [c, d]] = self.matrix();
        let [[e, f], [g, h]] = other.matrix();
        Self::from_matrix([
            [a * e + b * g, a * f + b * h],
            [c * e + d * g, c * f + d * h],
        ])
    }

    pub fn inverse(self) -> Symmetry {
        *Self::ALL
            .iter()
            .find(|g| self.compose(**g) == Symmetry::Identity)
            .unwrap()
    }
}

/// Why a step set is, or is not, a genuine quarter-plane problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassLabel {
    /// No step moves right: a half-line problem in `y`.
    NoXPos,
    /// No step moves up.
    NoYPos,
    /// No step moves left: a half-plane problem.
    NoXNeg,
    /// No step moves down.
    NoYNeg,
    /// Only the empty walk stays in the quarter plane.
    OnlyEmptyWalk,
    /// Every step lies weakly above the first diagonal; the `x` constraint
    /// implies the `y` constraint.
    SuperDiagonal,
    /// Mirror image of the previous case.
    SubDiagonal,
    GenuineQuarterPlane,
}

impl ClassLabel {
    /// Image of the label under the `x/y` exchange.
    pub fn mirrored(self) -> ClassLabel {
        match self {
            ClassLabel::NoXPos => ClassLabel::NoYPos,
            ClassLabel::NoYPos => ClassLabel::NoXPos,
            ClassLabel::NoXNeg => ClassLabel::NoYNeg,
            ClassLabel::NoYNeg => ClassLabel::NoXNeg,
            ClassLabel::SuperDiagonal => ClassLabel::SubDiagonal,
            ClassLabel::SubDiagonal => ClassLabel::SuperDiagonal,
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    Canonical,
    MirrorOfCanonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub label: ClassLabel,
    pub dedup: Dedup,
}

/// `{SE, S, SW, W, NW}`: no step of a subset of these stays in the quarter
/// plane when taken first.
const EMPTY_WALK_STEPS: u8 = 0b1111_1000;
/// Steps on or above the first diagonal: `{W, N, NE, NW, SW}`.
const SUPER_DIAGONAL_STEPS: u8 = 0b1110_0011;
/// Steps on or below the first diagonal: `{S, E, NE, SE, SW}`.
const SUB_DIAGONAL_STEPS: u8 = 0b0011_1110;

fn label_of(s: StepSet) -> ClassLabel {
    let any = |p: fn((i32, i32)) -> bool| s.steps().any(p);
    let subset = |allowed: u8| s.0 & !allowed == 0;
    if !any(|(i, _)| i > 0) {
        ClassLabel::NoXPos
    } else if !any(|(_, j)| j > 0) {
        ClassLabel::NoYPos
    } else if !any(|(i, _)| i < 0) {
        ClassLabel::NoXNeg
    } else if !any(|(_, j)| j < 0) {
        ClassLabel::NoYNeg
    } else if subset(EMPTY_WALK_STEPS) {
        ClassLabel::OnlyEmptyWalk
    } else if subset(SUPER_DIAGONAL_STEPS) {
        ClassLabel::SuperDiagonal
    } else if subset(SUB_DIAGONAL_STEPS) {
        ClassLabel::SubDiagonal
    } else {
        ClassLabel::GenuineQuarterPlane
    }
}

/// The canonical representatives of genuine quarter-plane models, in mask
/// order.
pub fn enumerate_models() -> Vec<StepSet> {
    StepSet::iter_all()
        .filter(|s| {
            let c = s.classify();
            c.label == ClassLabel::GenuineQuarterPlane && c.dedup == Dedup::Canonical
        })
        .collect()
}

/// Survivor counts after each stage of the reduction: sets with steps in
/// all four directions, then without the empty-walk sets, then without the
/// diagonal sets.
pub fn pipeline_waypoints() -> [usize; 3] {
    let labels: Vec<ClassLabel> = StepSet::iter_all().map(label_of).collect();
    let after = |stage: &[ClassLabel]| labels.iter().filter(|l| !stage.contains(l)).count();
    use ClassLabel::*;
    let four = [NoXPos, NoYPos, NoXNeg, NoYNeg];
    let five = [NoXPos, NoYPos, NoXNeg, NoYNeg, OnlyEmptyWalk];
    let all = [
        NoXPos,
        NoYPos,
        NoXNeg,
        NoYNeg,
        OnlyEmptyWalk,
        SuperDiagonal,
        SubDiagonal,
    ];
    [after(&four), after(&five), after(&all)]
}

/// Generating polynomials, by cardinality, of the sets that survive each
/// stage, for all sets and for `x/y`-symmetric sets.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingPolynomials {
    pub p1: UniPoly,
    pub p2: UniPoly,
    pub p3: UniPoly,
    pub p1_sym: UniPoly,
    pub p2_sym: UniPoly,
    pub p3_sym: UniPoly,
}

/// Computed by direct enumeration of all 256 sets.
pub fn generating_polynomials() -> GeneratingPolynomials {
    use ClassLabel::*;
    let count = |excluded: &[ClassLabel], sym_only: bool| {
        let mut by_size = vec![0i64; 9];
        for s in StepSet::iter_all() {
            if excluded.contains(&label_of(s)) || (sym_only && !s.is_xy_symmetric()) {
                continue;
            }
            by_size[s.len()] += 1;
        }
        UniPoly::from_ints(&by_size)
    };
    let stage1 = [NoXPos, NoYPos, NoXNeg, NoYNeg];
    let stage2 = [NoXPos, NoYPos, NoXNeg, NoYNeg, OnlyEmptyWalk];
    let stage3 = [
        NoXPos,
        NoYPos,
        NoXNeg,
        NoYNeg,
        OnlyEmptyWalk,
        SuperDiagonal,
        SubDiagonal,
    ];
    GeneratingPolynomials {
        p1: count(&stage1, false),
        p2: count(&stage2, false),
        p3: count(&stage3, false),
        p1_sym: count(&stage1, true),
        p2_sym: count(&stage2, true),
        p3_sym: count(&stage3, true),
    }
}

/// Number of canonical models by cardinality, as a polynomial in `z`.
pub fn model_histogram(models: &[StepSet]) -> UniPoly {
    let mut by_size = vec![0i64; 9];
    for s in models {
        by_size[s.len()] += 1;
    }
    UniPoly::from_ints(&by_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    #[test]
    fn parsing() {
        let p = s("W,N,SE").poly();
        assert_eq!(
            p,
            LaurentPoly2::from_ints(&[((-1, 0), 1), ((0, 1), 1), ((1, -1), 1)])
        );
        assert!(s("").is_empty());
        assert_eq!(s("10000000"), StepSet::from_steps([(0, 1)]));
        assert!("Q,Z".parse::<StepSet>().is_err());
        assert!("N,N".parse::<StepSet>().is_err());
        assert_eq!(s("n, e").to_compass(), "N,E");
    }

    #[test]
    fn decomposition_identities() {
        for set in StepSet::iter_all() {
            let p = set.poly();
            let by_y = LaurentPoly2::from_x(&set.a(-1))
                .mul(&LaurentPoly2::xy_pow(0, -1))
                .add(&LaurentPoly2::from_x(&set.a(0)))
                .add(&LaurentPoly2::from_x(&set.a(1)).mul(&LaurentPoly2::y()));
            let by_x = LaurentPoly2::from_y(&set.b(-1))
                .mul(&LaurentPoly2::xy_pow(-1, 0))
                .add(&LaurentPoly2::from_y(&set.b(0)))
                .add(&LaurentPoly2::from_y(&set.b(1)).mul(&LaurentPoly2::x()));
            assert_eq!(by_y, p);
            assert_eq!(by_x, p);
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(s("NE").classify().label, ClassLabel::NoXNeg);
        assert_eq!(
            s("NW,SE,NE").classify().label,
            ClassLabel::GenuineQuarterPlane
        );
        assert_eq!(s("NW,SW,NE,N").classify().label, ClassLabel::SuperDiagonal);
    }

    #[test]
    fn symmetries() {
        assert_eq!(s("W,N,SE").mirror(), s("S,E,NW"));
        assert_eq!(s("E").apply(Symmetry::ReflectVertical), s("W"));
        assert_eq!(s("E,SW").apply(Symmetry::Identity), s("E,SW"));
        for g in Symmetry::ALL {
            assert_eq!(g.compose(g.inverse()), Symmetry::Identity);
            for h in Symmetry::ALL {
                for set in [s("N,SE,W"), s("NE,S,W,NW")] {
                    assert_eq!(set.apply(h).apply(g), set.apply(g.compose(h)));
                }
            }
        }
        assert_eq!(Symmetry::Rot90.compose(Symmetry::Rot90), Symmetry::Rot180);
    }
}
