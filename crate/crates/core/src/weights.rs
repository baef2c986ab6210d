//! The SL(n) weight lattice `Z^n / (1,…,1)`.
//!
//! A [`Weight`] is stored by its canonical coset representative, the unique
//! translate whose minimum coordinate is zero. With this choice a weight is
//! dominant exactly when its coordinates are weakly decreasing, and equality
//! of weights is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, input, Result};

/// Outcome of comparing two weights in the dominance partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Dominance {
    pub fn is_le(self) -> bool {
        matches!(self, Dominance::Less | Dominance::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, Dominance::Greater | Dominance::Equal)
    }

    pub fn reverse(self) -> Dominance {
        match self {
            Dominance::Less => Dominance::Greater,
            Dominance::Greater => Dominance::Less,
            other => other,
        }
    }

    /// Folds componentwise verdicts into a single partial-order verdict.
    pub fn combine(self, other: Dominance) -> Dominance {
        use Dominance::*;
        match (self, other) {
            (Incomparable, _) | (_, Incomparable) => Incomparable,
            (Equal, x) | (x, Equal) => x,
            (Less, Less) => Less,
            (Greater, Greater) => Greater,
            _ => Incomparable,
        }
    }
}

/// An element of the SL(n) weight lattice in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    coords: Vec<i32>,
}

impl Weight {
    /// Translates `raw` by a multiple of `(1,…,1)` so the minimum coordinate is 0.
    pub fn canonicalize(n: usize, raw: &[i64]) -> Result<Weight> {
        if n < 2 {
            return input(format!("rank parameter must be at least 2, got {n}"));
        }
        if raw.len() != n {
            return input(format!("expected {n} coordinates, got {}", raw.len()));
        }
        let min = raw.iter().copied().min().unwrap_or(0);
        let coords = raw
            .iter()
            .map(|&c| i32::try_from(c - min).map_err(|_| crate::Error::Overflow("weight")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { coords })
    }

    fn from_raw(mut coords: Vec<i32>) -> Weight {
        let min = coords.iter().copied().min().unwrap_or(0);
        if min != 0 {
            coords.iter_mut().for_each(|c| *c -= min);
        }
        Weight { coords }
    }

    pub fn zero(n: usize) -> Weight {
        Weight { coords: vec![0; n] }
    }

    /// The fundamental weight `ω_k`; index 0 (and n) is the zero weight.
    pub fn fundamental(n: usize, k: usize) -> Weight {
        let k = k % n;
        Weight {
            coords: (0..n).map(|i| i32::from(i < k)).collect(),
        }
    }

    /// Builds `Σ c_k ω_k` from fundamental-weight coefficients `c_1..c_{n-1}`.
    pub fn from_fundamental(n: usize, coefficients: &[i64]) -> Result<Weight> {
        if coefficients.len() + 1 != n {
            return input(format!(
                "expected {} fundamental coefficients, got {}",
                n - 1,
                coefficients.len()
            ));
        }
        let mut raw = vec![0i64; n];
        for (k, &c) in coefficients.iter().enumerate() {
            for slot in raw.iter_mut().take(k + 1) {
                *slot += c;
            }
        }
        Weight::canonicalize(n, &raw)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Coefficients on `ω_1..ω_{n-1}`: `c_j - c_{j+1}`.
    pub fn fundamental_coefficients(&self) -> Vec<i64> {
        self.coords
            .windows(2)
            .map(|w| i64::from(w[0]) - i64::from(w[1]))
            .collect()
    }

    /// Coordinate sum modulo n, the class of the weight in `Z/n`.
    pub fn residue(&self) -> usize {
        let n = self.n() as i64;
        let s: i64 = self.coords.iter().map(|&c| i64::from(c)).sum();
        s.rem_euclid(n) as usize
    }

    /// Dominance comparison: `a ≤ b` when `b - a` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominance_cmp(&self, other: &Weight) -> Result<Dominance> {
        check_rank(self.n(), other.n())?;
        Ok(self.dominance_cmp_unchecked(other))
    }

    pub(crate) fn dominance_cmp_unchecked(&self, other: &Weight) -> Dominance {
        let n = self.n() as i64;
        let sa: i64 = self.coords.iter().map(|&c| i64::from(c)).sum();
        let sb: i64 = other.coords.iter().map(|&c| i64::from(c)).sum();
        let diff = sb - sa;
        if diff.rem_euclid(n) != 0 {
            return Dominance::Incomparable;
        }
        let shift = diff / n;
        let mut prefix = 0i64;
        let (mut pos, mut neg) = (false, false);
        for i in 0..self.n() - 1 {
            prefix += i64::from(other.coords[i]) - (i64::from(self.coords[i]) + shift);
            match prefix.cmp(&0) {
                Ordering::Greater => pos = true,
                Ordering::Less => neg = true,
                Ordering::Equal => {}
            }
        }
        match (pos, neg) {
            (false, false) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (true, true) => Dominance::Incomparable,
        }
    }

    /// `Some(k)` when some translate of the weight is a 0/1 vector with k ones.
    pub fn orbit_class(&self) -> Option<usize> {
        if self.coords.iter().all(|&c| c == 0 || c == 1) {
            let k = self.coords.iter().filter(|&&c| c == 1).count();
            (k >= 1 && k < self.n()).then_some(k)
        } else {
            None
        }
    }

    /// Renders the weight as a sum of fundamental weights, e.g. `w1+w3`, `2w2`, `0`.
    /// Only meaningful for dominant weights; other weights fall back to coordinates.
    pub fn fundamental_string(&self) -> String {
        if !self.is_dominant() {
            return self.to_string();
        }
        let parts: Vec<String> = self
            .fundamental_coefficients()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                if c == 1 {
                    format!("w{}", k + 1)
                } else {
                    format!("{c}w{}", k + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_owned()
        } else {
            parts.join("+")
        }
    }

    /// Parses `0`, `w1+w3`, `2w2`, `[2,1,1,0]` or `(2,1,1,0)`.
    pub fn parse(n: usize, text: &str) -> Result<Weight> {
        let text = text.trim();
        if text.starts_with('[') || text.starts_with('(') {
            let inner = text.trim_matches(|c| matches!(c, '[' | ']' | '(' | ')'));
            let raw = inner
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| crate::Error::Input(format!("bad coordinate in {text:?}: {e}")))?;
            return Weight::canonicalize(n, &raw);
        }
        if text == "0" {
            return Ok(Weight::zero(n));
        }
        let mut coefficients = vec![0i64; n - 1];
        for term in text.split('+') {
            let term = term.trim();
            let Some(pos) = term.find(['w', 'ω']) else {
                return input(format!("cannot parse weight term {term:?}"));
            };
            let mult: i64 = if pos == 0 {
                1
            } else {
                term[..pos]
                    .parse()
                    .map_err(|_| crate::Error::Input(format!("bad multiplicity in {term:?}")))?
            };
            let index: usize = term[pos..]
                .trim_start_matches(['w', 'ω'])
                .parse()
                .map_err(|_| crate::Error::Input(format!("bad fundamental index in {term:?}")))?;
            if index == 0 || index >= n {
                return input(format!(
                    "fundamental index {index} out of range for SL({n})"
                ));
            }
            coefficients[index - 1] += mult;
        }
        Weight::from_fundamental(n, &coefficients)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = crate::Error;

    fn try_from(raw: Vec<i64>) -> Result<Weight> {
        Weight::canonicalize(raw.len(), &raw)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Vec<i64> {
        w.coords.into_iter().map(i64::from).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n(), "adding weights of different rank");
        Weight::from_raw(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n(), "subtracting weights of different rank");
        Weight::from_raw(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight::from_raw(self.coords.iter().map(|c| -c).collect())
    }
}

/// A weight in the Weyl orbit of some fundamental weight `ω_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitWeight {
    weight: Weight,
    class: usize,
}

/// Which of the interleaved index lists starts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LrOrder {
    RightFirst,
    LeftFirst,
}

/// `ω = Σ ω_{r_i} − Σ ω_{l_i}` with strictly interleaving index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrDecomposition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub order: LrOrder,
}

impl LrDecomposition {
    /// All indices in increasing order, tagged `true` for right indices.
    pub fn merged(&self) -> Vec<(usize, bool)> {
        let mut all: Vec<(usize, bool)> = self
            .left
            .iter()
            .map(|&l| (l, false))
            .chain(self.right.iter().map(|&r| (r, true)))
            .collect();
        all.sort_unstable();
        all
    }
}

impl OrbitWeight {
    pub fn new(weight: Weight) -> Option<OrbitWeight> {
        weight
            .orbit_class()
            .map(|class| OrbitWeight { weight, class })
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn decompose_lr(&self) -> LrDecomposition {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (j, c) in self
            .weight
            .fundamental_coefficients()
            .into_iter()
            .enumerate()
        {
            match c {
                1 => right.push(j + 1),
                -1 => left.push(j + 1),
                _ => {}
            }
        }
        let order = match (left.first(), right.first()) {
            (Some(l), Some(r)) if l < r => LrOrder::LeftFirst,
            (Some(_), None) => LrOrder::LeftFirst,
            _ => LrOrder::RightFirst,
        };
        LrDecomposition { left, right, order }
    }
}

impl fmt::Display for OrbitWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.weight.fmt(f)
    }
}

/// All `C(n,k)` elements of the orbit `Wω_k`, in decreasing lexicographic order.
pub fn weyl_orbit(n: usize, k: usize) -> Result<Vec<OrbitWeight>> {
    if n < 2 {
        return input(format!("rank parameter must be at least 2, got {n}"));
    }
    if k == 0 || k >= n {
        return input(format!("orbit class {k} out of range 1..{}", n - 1));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            let coords = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as i32).collect();
            out.push(OrbitWeight {
                weight: Weight { coords },
                class: k,
            });
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Reduces a fundamental-weight index modulo n into `0..n`.
pub fn label_mod(n: usize, x: i64) -> u32 {
    x.rem_euclid(n as i64) as u32
}

/// The dual label `n - i` (0 stays 0).
pub fn dual_label(n: usize, label: u32) -> u32 {
    label_mod(n, -i64::from(label))
}
