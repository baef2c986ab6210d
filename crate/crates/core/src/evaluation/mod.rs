//! Exact evaluation of webs as invariant tensors.
//!
//! A web with boundary `(ω_{λ_1}, …, ω_{λ_k})` evaluates to a vector `Ψ` in
//! `Λ^{λ_1} ⊗ … ⊗ Λ^{λ_k}` of the standard representation, written in the
//! basis `e_{S_1} ⊗ … ⊗ e_{S_k}` of wedge monomials. `Ψ` is computed as a
//! state sum: each edge carries a subset, each vertex contributes a sign.
//!
//! Evaluation runs a frontier contraction over a greedy vertex order with
//! checked `i128` arithmetic. Non-normalized webs evaluate to the same
//! vector as their normalization.

mod kim;
mod rank;
pub mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::webs::{End, VertexKind, Web};
use tensor::{complement, full, subsets_of, Leg, Subset};

pub use kim::{kim_rewrite, kim_sites, KimMove, KimSite};
pub use rank::{certify_rank, rank, RankCertificate, RankMethod};
pub use tensor::{cap, local_tensor, subset_string};

/// Default cap on the ambient dimension and on live partial states.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "WEBBASIS_EVAL_BUDGET";

/// Sign convention for the vertex tensors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    #[default]
    Canonical,
    /// Every vertex reads its rotation from a seeded starting leg and gets a
    /// seeded sign. Evaluations change by a global sign per web only, so
    /// ranks must not change.
    Perturbed(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub budget: u128,
    pub convention: Convention,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            budget: budget_from_env(),
            convention: Convention::Canonical,
        }
    }
}

/// [`DEFAULT_BUDGET`], unless [`BUDGET_ENV`] holds a positive integer.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// Dimension of `Λ^{λ_1} ⊗ … ⊗ Λ^{λ_k}`.
pub fn ambient_dimension(n: usize, boundary: &[usize]) -> u128 {
    boundary
        .iter()
        .map(|&k| binomial(n, k))
        .try_fold(1u128, |acc, c| acc.checked_mul(c))
        .unwrap_or(u128::MAX)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A vector in a tensor product of wedge powers, keyed by one subset per
/// boundary point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    n: usize,
    boundary: Vec<usize>,
    terms: BTreeMap<Vec<Subset>, BigRational>,
}

impl InvariantVector {
    pub fn zero(n: usize, boundary: Vec<usize>) -> InvariantVector {
        InvariantVector {
            n,
            boundary,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a vector from `(key, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        n: usize,
        boundary: Vec<usize>,
        terms: impl IntoIterator<Item = (Vec<Subset>, BigRational)>,
    ) -> Result<InvariantVector> {
        let mut v = InvariantVector::zero(n, boundary);
        for (key, c) in terms {
            if key.len() != v.boundary.len()
                || key
                    .iter()
                    .zip(&v.boundary)
                    .any(|(&s, &k)| s & !full(n) != 0 || s.count_ones() as usize != k)
            {
                return crate::error::input(format!(
                    "key {key:?} does not fit boundary {:?}",
                    v.boundary
                ));
            }
            v.add_term(key, c);
        }
        Ok(v)
    }

    fn add_term(&mut self, key: Vec<Subset>, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn get(&self, key: &[Subset]) -> BigRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Subset>, &BigRational)> {
        self.terms.iter()
    }

    pub fn scaled(&self, c: &BigRational) -> InvariantVector {
        let mut out = InvariantVector::zero(self.n, self.boundary.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// The scalar `c` with `other = c·self`, if there is one. `None` also
    /// when either vector is zero.
    pub fn ratio(&self, other: &InvariantVector) -> Option<BigRational> {
        if self.boundary != other.boundary || self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (k0, v0) = self.terms.iter().next()?;
        let c = other.terms.get(k0)? / v0;
        self.terms
            .iter()
            .all(|(k, v)| other.terms.get(k) == Some(&(v * &c)))
            .then_some(c)
    }

    /// Applies `E_{i,j}` (sending `e_j` to `e_i`, 1-based) as a derivation
    /// on the tensor product.
    pub fn apply_elementary(&self, i: usize, j: usize) -> InvariantVector {
        let (bi, bj) = (1u32 << (i - 1), 1u32 << (j - 1));
        let lo = i.min(j);
        let hi = i.max(j);
        let between: Subset = if hi - lo > 1 {
            full(hi - 1) & !full(lo)
        } else {
            0
        };
        let mut out = InvariantVector::zero(self.n, self.boundary.clone());
        for (key, c) in &self.terms {
            for p in 0..key.len() {
                let s = key[p];
                if s & bj == 0 || (s & bi != 0 && i != j) {
                    continue;
                }
                let mut k = key.clone();
                k[p] = (s & !bj) | bi;
                let sign = if (s & between).count_ones().is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                out.add_term(k, c * BigRational::from_integer(BigInt::from(sign)));
            }
        }
        out
    }

    /// `F_a = E_{a+1,a}`, for `a` in `1..n`.
    pub fn lower(&self, a: usize) -> InvariantVector {
        self.apply_elementary(a + 1, a)
    }

    /// `E_a = E_{a,a+1}`, for `a` in `1..n`.
    pub fn raise(&self, a: usize) -> InvariantVector {
        self.apply_elementary(a, a + 1)
    }

    /// Every key has weight zero: each of `1..n` occurs equally often.
    pub fn has_weight_zero(&self) -> bool {
        self.terms.keys().all(|key| {
            let count = |b: usize| key.iter().filter(|&&s| s >> b & 1 == 1).count();
            let c0 = count(0);
            (1..self.n).all(|b| count(b) == c0)
        })
    }

    /// Annihilated by every simple raising and lowering operator.
    pub fn is_invariant(&self) -> bool {
        self.has_weight_zero()
            && (1..self.n).all(|a| self.lower(a).is_zero() && self.raise(a).is_zero())
    }

    /// Multiplies by the least common denominator and divides by the gcd of
    /// the numerators, with a positive leading coefficient.
    pub fn primitive(&self) -> Vec<(Vec<Subset>, BigInt)> {
        use num_integer::Integer;
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<(Vec<Subset>, BigInt)> = self
            .terms
            .iter()
            .map(|(k, v)| {
                (
                    k.clone(),
                    (v * BigRational::from_integer(lcm.clone())).to_integer(),
                )
            })
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        if g.is_zero() {
            return ints;
        }
        let flip = ints.first().is_some_and(|(_, v)| v.is_negative());
        ints.into_iter()
            .map(|(k, v)| {
                let v = v / &g;
                (k, if flip { -v } else { v })
            })
            .collect()
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (key, c) in &self.terms {
            let parts: Vec<String> = key.iter().map(|&s| subset_string(s)).collect();
            writeln!(f, "{c}\t{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Evaluates with default options.
pub fn evaluate(web: &Web) -> Result<InvariantVector> {
    evaluate_with(web, &EvalOptions::default())
}

pub fn evaluate_with(web: &Web, options: &EvalOptions) -> Result<InvariantVector> {
    let n = web.n();
    if !(2..=31).contains(&n) {
        return crate::error::input(format!("evaluation supports 2 <= n <= 31, got {n}"));
    }
    let boundary = web.boundary();
    let ambient = ambient_dimension(n, &boundary);
    if ambient > options.budget {
        return Err(Error::Budget {
            needed: ambient,
            budget: options.budget,
        });
    }
    if let Some(e) = web.edges().iter().position(|e| e.tail == e.head) {
        return Err(Error::Corruption(format!("edge {e} is a loop")));
    }
    let k = boundary.len();
    let mut position = vec![usize::MAX; web.vertices().len()];
    for (p, &b) in web.boundary_vertices().iter().enumerate() {
        position[b] = p;
    }
    let ne = web.edges().len();
    const UNSET: Subset = u32::MAX;
    let mut entries: HashMap<Vec<Subset>, i128> = HashMap::new();
    entries.insert(vec![UNSET; k + ne], 1);
    let mut seen = vec![0u8; ne];
    for v in contraction_order(web) {
        let vertex = web.vertex(v);
        let darts = rotated(&vertex.rotation, v, options.convention);
        let sign = vertex_sign(v, options.convention);
        let legs: Vec<Leg> = darts
            .iter()
            .map(|d| Leg {
                label: web.edge(d.edge).label,
                is_head: d.end == End::Head,
            })
            .collect();
        // Edges whose state is first chosen at this vertex.
        let mut fresh: Vec<usize> = Vec::new();
        for d in &darts {
            if seen[d.edge] == 0 && !fresh.contains(&d.edge) {
                fresh.push(d.edge);
            }
        }
        for d in &darts {
            seen[d.edge] += 1;
        }
        let mut next: HashMap<Vec<Subset>, i128> = HashMap::new();
        for (key, coeff) in &entries {
            let known: Vec<Option<Subset>> = darts
                .iter()
                .map(|d| {
                    let s = key[k + d.edge];
                    (s != UNSET).then_some(s)
                })
                .collect();
            let assignments = if vertex.kind == VertexKind::Boundary {
                boundary_states(n, legs[0], known[0])
            } else {
                internal_states(n, &legs, &known)?
            };
            for states in assignments {
                let received: Vec<Subset> = legs
                    .iter()
                    .zip(&states)
                    .map(|(l, &s)| l.received(n, s))
                    .collect();
                let mut value: i128 = if vertex.kind == VertexKind::Boundary {
                    i128::from(tensor::cap_sign(n, received[0]))
                } else {
                    i128::from(tensor::vertex_value(n, &legs, &received)? * sign)
                };
                if value == 0 {
                    continue;
                }
                let mut new_key = key.clone();
                for (d, &s) in darts.iter().zip(&states) {
                    if fresh.contains(&d.edge) && new_key[k + d.edge] == UNSET {
                        let label = web.edge(d.edge).label as usize;
                        value *= i128::from(tensor::edge_factor(n, label, s));
                        new_key[k + d.edge] = s;
                    }
                }
                for d in &darts {
                    if seen[d.edge] == 2 {
                        new_key[k + d.edge] = UNSET - 1;
                    }
                }
                if vertex.kind == VertexKind::Boundary {
                    new_key[position[v]] = complement(n, received[0]);
                }
                let term = coeff
                    .checked_mul(value)
                    .ok_or(Error::Overflow("evaluation"))?;
                let slot = next.entry(new_key).or_insert(0);
                *slot = slot
                    .checked_add(term)
                    .ok_or(Error::Overflow("evaluation"))?;
            }
        }
        next.retain(|_, c| *c != 0);
        if next.len() as u128 > options.budget {
            return Err(Error::Budget {
                needed: next.len() as u128,
                budget: options.budget,
            });
        }
        entries = next;
    }
    let terms = entries.into_iter().map(|(key, c)| {
        let key = key[..k].to_vec();
        (key, BigRational::from_integer(BigInt::from(c)))
    });
    InvariantVector::from_terms(n, boundary, terms)
}

/// States `S` for the single edge at a boundary vertex.
fn boundary_states(n: usize, leg: Leg, known: Option<Subset>) -> Vec<Vec<Subset>> {
    match known {
        Some(s) => vec![vec![s]],
        None => subsets_of(full(n), leg.label as usize)
            .into_iter()
            .map(|s| vec![s])
            .collect(),
    }
}

/// Edge states at an internal vertex consistent with the known ones and on
/// which the vertex functional can be nonzero.
fn internal_states(n: usize, legs: &[Leg], known: &[Option<Subset>]) -> Result<Vec<Vec<Subset>>> {
    let live: Vec<usize> = (0..legs.len()).filter(|&i| legs[i].label != 0).collect();
    let total: usize = live.iter().map(|&i| legs[i].inflow(n)).sum();
    // Received sets partition {1..n} directly (inflow n) or after
    // complementing (inflow 2n).
    let dual = match (live.len(), total) {
        (0, _) => false,
        (2, t) if t == n => false,
        (3, t) if t == n => false,
        (3, t) if t == 2 * n => true,
        (d, t) if d <= 3 => {
            return Err(Error::Corruption(format!(
                "vertex with {d} nonzero legs and inflow {t}"
            )));
        }
        (d, _) => return Err(Error::Corruption(format!("vertex of degree {d}"))),
    };
    let to_part = |leg: Leg, s: Subset| {
        let r = leg.received(n, s);
        if dual {
            complement(n, r)
        } else {
            r
        }
    };
    let from_part = |leg: Leg, p: Subset| {
        let r = if dual { complement(n, p) } else { p };
        if leg.is_head {
            r
        } else {
            complement(n, r)
        }
    };
    let mut base: Vec<Option<Subset>> = known.to_vec();
    for i in 0..legs.len() {
        if legs[i].label == 0 {
            match base[i] {
                Some(s) if s != 0 => return Ok(Vec::new()),
                _ => base[i] = Some(0),
            }
        }
    }
    let mut used = 0u32;
    let mut free: Vec<usize> = Vec::new();
    for &i in &live {
        match base[i] {
            Some(s) => {
                let p = to_part(legs[i], s);
                if used & p != 0 {
                    return Ok(Vec::new());
                }
                used |= p;
            }
            None => free.push(i),
        }
    }
    if live.is_empty() {
        return Ok(vec![base
            .into_iter()
            .map(|s| s.expect("zero leg"))
            .collect()]);
    }
    let pool = full(n) & !used;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Subset, Vec<Option<Subset>>)> = vec![(0, pool, base)];
    while let Some((idx, rest, states)) = stack.pop() {
        if idx == free.len() {
            if rest == 0 {
                out.push(states.into_iter().map(|s| s.expect("assigned")).collect());
            }
            continue;
        }
        let i = free[idx];
        let size = if dual {
            n - legs[i].inflow(n)
        } else {
            legs[i].inflow(n)
        };
        let choices = if idx + 1 == free.len() {
            if rest.count_ones() as usize == size {
                vec![rest]
            } else {
                Vec::new()
            }
        } else {
            subsets_of(rest, size)
        };
        for p in choices {
            let mut s = states.clone();
            s[i] = Some(from_part(legs[i], p));
            stack.push((idx + 1, rest & !p, s));
        }
    }
    Ok(out)
}

fn mix(seed: u64, v: usize) -> u64 {
    let mut z = seed ^ (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn rotated(
    rotation: &[crate::webs::Dart],
    v: usize,
    convention: Convention,
) -> Vec<crate::webs::Dart> {
    match convention {
        Convention::Perturbed(seed) if rotation.len() == 3 => {
            let shift = (mix(seed, v) >> 1) as usize % 3;
            (0..3).map(|i| rotation[(i + shift) % 3]).collect()
        }
        _ => rotation.to_vec(),
    }
}

fn vertex_sign(v: usize, convention: Convention) -> i32 {
    match convention {
        Convention::Perturbed(seed) if mix(seed, v) & 1 == 1 => -1,
        _ => 1,
    }
}

/// Greedy order: next is the vertex with most already-open edges, then
/// fewest new ones, starting at the first boundary vertex.
fn contraction_order(web: &Web) -> Vec<usize> {
    let nv = web.vertices().len();
    let mut done = vec![false; nv];
    let mut order = Vec::with_capacity(nv);
    let neighbours: Vec<Vec<usize>> = web
        .vertices()
        .iter()
        .map(|vx| {
            vx.rotation
                .iter()
                .map(|d| web.vertex_of(d.twin()))
                .collect()
        })
        .collect();
    if let Some(&b) = web.boundary_vertices().first() {
        done[b] = true;
        order.push(b);
    }
    while order.len() < nv {
        let best = (0..nv)
            .filter(|&v| !done[v])
            .max_by_key(|&v| {
                let open = neighbours[v].iter().filter(|&&w| done[w] && w != v).count() as i64;
                let new = neighbours[v].len() as i64 - open;
                (open, -new, std::cmp::Reverse(v))
            })
            .expect("vertices remain");
        done[best] = true;
        order.push(best);
    }
    order
}
