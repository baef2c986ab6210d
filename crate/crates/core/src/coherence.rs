//! Weight-valued geodesics on dual diskoids and the coherence conditions.
//!
//! A walk in the dual diskoid pays `ω_i` for following a dual edge labelled
//! `i` and `ω_{n-i}` for walking it backwards. So every walk weight is a sum
//! of fundamental weights, and any two walks between the same endpoints
//! differ by a root-lattice element. The distance between two vertices is
//! the set of minimal walk weights under dominance.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::littelmann::MinusculePath;
use crate::webs::{DualDiskoid, Web};
use crate::weights::Weight;

/// Minimal walk weights from `source` to `target`, pairwise incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceAntichain {
    pub source: usize,
    pub target: usize,
    pub minima: Vec<Weight>,
}

impl DistanceAntichain {
    pub fn is_coherent(&self) -> bool {
        self.minima.len() == 1
    }

    /// The distance when it is a single weight.
    pub fn single(&self) -> Option<&Weight> {
        match self.minima.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }
}

/// Cost of crossing dual edge `e` starting from its `from` end (`forward`)
/// or its `to` end.
pub fn traversal_cost(d: &DualDiskoid, e: usize, forward: bool) -> Weight {
    let n = d.n();
    let label = d.edges()[e].label as usize;
    Weight::fundamental(n, if forward { label } else { n - label })
}

/// `⟨w, 2ρ⟩`, strictly monotone in the dominance order.
fn height(w: &Weight) -> i64 {
    let n = w.n() as i64;
    w.fundamental_coefficients()
        .iter()
        .zip(1i64..)
        .map(|(&c, j)| c * j * (n - j))
        .sum()
}

fn le(a: &Weight, b: &Weight) -> bool {
    a.dominance_cmp_unchecked(b).is_le()
}

/// Outgoing steps of every dual vertex: `(neighbour, cost, dual edge)`.
pub(crate) fn adjacency(d: &DualDiskoid) -> Vec<Vec<(usize, Weight, usize)>> {
    let mut adj = vec![Vec::new(); d.vertex_count()];
    for (e, edge) in d.edges().iter().enumerate() {
        adj[edge.from].push((edge.to, traversal_cost(d, e, true), e));
        adj[edge.to].push((edge.from, traversal_cost(d, e, false), e));
    }
    adj
}

/// Distance antichains from `source` to every dual vertex.
///
/// Labels are settled in order of height. A walk that repeats a vertex is
/// strictly heavier than the walk with the loop cut out, which has smaller
/// height and is settled first, so only simple-path weights survive.
pub fn distances_from(d: &DualDiskoid, source: usize) -> Vec<Vec<Weight>> {
    distances_with(&adjacency(d), d.n(), source)
}

fn distances_with(
    adj: &[Vec<(usize, Weight, usize)>],
    n: usize,
    source: usize,
) -> Vec<Vec<Weight>> {
    let mut minima: Vec<Vec<Weight>> = vec![Vec::new(); adj.len()];
    let zero = Weight::zero(n);
    minima[source].push(zero.clone());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, source, zero)));
    while let Some(Reverse((_, v, w))) = heap.pop() {
        if !minima[v].contains(&w) {
            continue;
        }
        for (u, cost, _) in &adj[v] {
            let next = &w + cost;
            if minima[*u].iter().any(|m| le(m, &next)) {
                continue;
            }
            minima[*u].retain(|m| !le(&next, m));
            minima[*u].push(next.clone());
            heap.push(Reverse((height(&next), *u, next)));
        }
    }
    for m in &mut minima {
        m.sort();
    }
    minima
}

pub fn distance_antichain(
    d: &DualDiskoid,
    source: usize,
    target: usize,
) -> Result<DistanceAntichain> {
    let count = d.vertex_count();
    if source >= count || target >= count {
        return crate::error::input(format!("dual vertex out of range 0..{count}"));
    }
    let minima = distances_from(d, source).swap_remove(target);
    if minima.is_empty() {
        return Err(Error::Corruption(format!(
            "dual vertex {target} is unreachable from {source}"
        )));
    }
    Ok(DistanceAntichain {
        source,
        target,
        minima,
    })
}

/// A geodesic from `source` to `target` as a list of dual vertices, when the
/// distances along the way are single weights.
pub fn geodesic(d: &DualDiskoid, source: usize, target: usize) -> Option<Vec<usize>> {
    let adj = adjacency(d);
    let dist = distances_with(&adj, d.n(), source);
    let mut path = vec![target];
    let mut v = target;
    while v != source {
        let [here] = dist[v].as_slice() else {
            return None;
        };
        // Walk back along an edge u → v that is tight.
        let prev = adj[v].iter().find_map(|&(u, _, e)| {
            let edge = &d.edges()[e];
            let cost = traversal_cost(d, e, edge.from == u && edge.to == v);
            match dist[u].as_slice() {
                [there] if &(there + &cost) == here && height(there) < height(here) => Some(u),
                _ => None,
            }
        })?;
        path.push(prev);
        v = prev;
    }
    path.reverse();
    Some(path)
}

/// Outcome of the three coherence conditions for a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    /// Every distance from the marked vertex is a single weight.
    pub cond1: bool,
    /// Every internal face lies on a geodesic from the marked vertex to a
    /// boundary sector.
    pub cond2: bool,
    /// Across every dual edge labelled `γ` the distance changes by an
    /// element of `Wω_γ`.
    pub cond3: bool,
    /// First dual vertex with several minimal distances.
    pub cond1_witness: Option<(usize, Vec<Weight>)>,
    /// First internal dual vertex on no geodesic.
    pub cond2_witness: Option<usize>,
    /// First dual edge breaking the step rule.
    pub cond3_witness: Option<usize>,
    pub distances: Vec<Vec<Weight>>,
    pub associated: Option<MinusculePath>,
}

impl CoherenceReport {
    pub fn is_coherent(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        writeln!(f, "cond1 (single distances): {}", mark(self.cond1))?;
        if let Some((v, ws)) = &self.cond1_witness {
            let ws: Vec<String> = ws.iter().map(Weight::fundamental_string).collect();
            writeln!(f, "  dual vertex {v} has minima {{{}}}", ws.join(", "))?;
        }
        writeln!(f, "cond2 (faces on geodesics): {}", mark(self.cond2))?;
        if let Some(v) = self.cond2_witness {
            writeln!(f, "  dual vertex {v} is on no geodesic to the boundary")?;
        }
        writeln!(f, "cond3 (steps in the orbit): {}", mark(self.cond3))?;
        if let Some(e) = self.cond3_witness {
            writeln!(
                f,
                "  dual edge {e} changes the distance by a non-orbit weight"
            )?;
        }
        match &self.associated {
            Some(p) => writeln!(f, "associated path: {p}"),
            None => writeln!(f, "associated path: none"),
        }
    }
}

pub fn is_coherent(web: &Web) -> CoherenceReport {
    let d = web.dual_diskoid();
    let adj = adjacency(&d);
    let n = d.n();
    let mark = d.marked();
    let dist = distances_with(&adj, n, mark);

    let cond1_witness = dist
        .iter()
        .enumerate()
        .find(|(_, m)| m.len() != 1)
        .map(|(v, m)| (v, m.clone()));
    let cond1 = cond1_witness.is_none();

    let single = |v: usize| match dist[v].as_slice() {
        [w] => Some(w),
        _ => None,
    };

    let internal: Vec<usize> = d.internal_vertices().collect();
    let on_geodesic: Vec<bool> = internal
        .par_iter()
        .map(|&u| {
            let from_u = distances_with(&adj, n, u);
            d.external().iter().any(|&v| {
                let Some(target) = single(v) else {
                    return false;
                };
                dist[u]
                    .iter()
                    .any(|w1| from_u[v].iter().any(|w2| &(w1 + w2) == target))
            })
        })
        .collect();
    let cond2_witness = internal
        .iter()
        .zip(&on_geodesic)
        .find(|(_, ok)| !**ok)
        .map(|(&u, _)| u);
    let cond2 = cond2_witness.is_none();

    let cond3_witness =
        d.edges()
            .iter()
            .position(|edge| match (single(edge.from), single(edge.to)) {
                (Some(a), Some(b)) => (b - a).orbit_class() != Some(edge.label as usize),
                _ => true,
            });
    let cond3 = cond3_witness.is_none();

    let associated = if cond1 && cond2 && cond3 {
        let points = d.external().iter().map(|&v| dist[v][0].clone()).collect();
        MinusculePath::new(points).ok()
    } else {
        None
    };
    CoherenceReport {
        cond1,
        cond2,
        cond3,
        cond1_witness,
        cond2_witness,
        cond3_witness,
        distances: dist,
        associated,
    }
}

/// `μ_i = d(•, v_i)` over the boundary sectors.
pub fn associated_path(web: &Web) -> Result<MinusculePath> {
    let d = web.dual_diskoid();
    let dist = distances_from(&d, d.marked());
    let mut points = Vec::with_capacity(d.external().len());
    for (i, &v) in d.external().iter().enumerate() {
        match dist[v].as_slice() {
            [w] => points.push(w.clone()),
            many => {
                let ws: Vec<String> = many.iter().map(Weight::fundamental_string).collect();
                return Err(Error::Incoherent(format!(
                    "sector {i} has minimal distances {{{}}}",
                    ws.join(", ")
                )));
            }
        }
    }
    MinusculePath::new(points)
        .map_err(|e| Error::Incoherent(format!("sector distances do not form a path: {e}")))
}
