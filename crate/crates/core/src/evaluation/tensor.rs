//! Local tensors: subset signs, vertex functionals and caps.
//!
//! Subsets of `{1..n}` are bit masks, bit `i-1` for element `i`. An edge
//! labelled `i` carries an `i`-subset `S` from tail to head. A vertex sees
//! `S` at a head end and `S^c` at a tail end; these "received" sets have size
//! equal to the flow into the vertex.

use crate::error::{input, Error, Result};

pub type Subset = u32;

pub fn full(n: usize) -> Subset {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn complement(n: usize, s: Subset) -> Subset {
    full(n) & !s
}

/// Sign of the permutation that lists `parts[0]` ascending, then
/// `parts[1]`, and so on. The parts must be disjoint.
pub fn shuffle_sign(parts: &[Subset]) -> i32 {
    let mut inversions = 0u32;
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            let mut rest = a;
            while rest != 0 {
                let x = rest.trailing_zeros();
                inversions += (b & ((1u32 << x) - 1)).count_ones();
                rest &= rest - 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `σ(S, S^c)`: the sign of `e_S ∧ e_{S^c}` against `e_1 ∧ … ∧ e_n`.
pub fn cap_sign(n: usize, s: Subset) -> i32 {
    shuffle_sign(&[s, complement(n, s)])
}

/// `(-1)^{i(n-i)}`, the sign picked up by `σ` when the two halves swap.
pub fn swap_sign(n: usize, i: usize) -> i32 {
    if (i * (n - i)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Normalisation of the edge copairing. Chosen so that reversing an edge and
/// dualising its label leaves the copairing unchanged whenever possible:
/// `κ_i = κ_{n-i}·(-1)^{i(n-i)}`. Only `i = n/2` with odd `i` cannot satisfy
/// this; there orientation is visible as a sign.
pub fn kappa(n: usize, label: usize) -> i32 {
    if 2 * label <= n {
        1
    } else {
        swap_sign(n, label)
    }
}

/// Coefficient of the edge copairing on state `S`.
pub fn edge_factor(n: usize, label: usize, s: Subset) -> i32 {
    kappa(n, label) * cap_sign(n, s)
}

/// The subsets of `pool` with `size` elements, in increasing order.
pub fn subsets_of(pool: Subset, size: usize) -> Vec<Subset> {
    let bits: Vec<u32> = (0..32).filter(|&b| pool >> b & 1 == 1).collect();
    let mut out = Vec::new();
    if size > bits.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().fold(0u32, |m, &i| m | 1 << bits[i]));
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + bits.len() - size) else {
            break;
        };
        idx[pos] += 1;
        for p in pos + 1..size {
            idx[p] = idx[p - 1] + 1;
        }
    }
    out
}

/// One leg of a vertex as seen by the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Leg {
    pub label: u32,
    /// The vertex holds the head end of the edge.
    pub is_head: bool,
}

impl Leg {
    /// Flow into the vertex, i.e. the size of the received set.
    pub fn inflow(self, n: usize) -> usize {
        if self.is_head {
            self.label as usize
        } else {
            n - self.label as usize
        }
    }

    pub fn received(self, n: usize, state: Subset) -> Subset {
        if self.is_head {
            state
        } else {
            complement(n, state)
        }
    }
}

/// Value of an internal vertex on its received sets, legs in rotation order.
///
/// Legs with label 0 are ignored. Three legs with inflow `n` give the
/// determinant sign; inflow `2n` dualises each leg first. Two legs give the
/// identity, signed so that smoothing the vertex away is exact.
pub fn vertex_value(n: usize, legs: &[Leg], received: &[Subset]) -> Result<i32> {
    let live: Vec<usize> = (0..legs.len()).filter(|&i| legs[i].label != 0).collect();
    for i in 0..legs.len() {
        if legs[i].label == 0 && received[i] != legs[i].received(n, 0) {
            return Ok(0);
        }
    }
    let total: usize = live.iter().map(|&i| legs[i].inflow(n)).sum();
    match live.len() {
        0 => Ok(1),
        2 => {
            let (i0, i1) = (live[0], live[1]);
            let (r0, r1) = (received[i0], received[i1]);
            if total != n || r0 & r1 != 0 || (r0 | r1) != full(n) {
                return Ok(0);
            }
            let l = legs[i0].label as usize;
            if 2 * l == n && swap_sign(n, l) < 0 {
                let twist = if legs[i1].is_head { -1 } else { 1 };
                Ok(shuffle_sign(&[r0, r1]) * twist)
            } else {
                let x = if legs[i0].inflow(n) == l { r0 } else { r1 };
                Ok(kappa(n, l) * cap_sign(n, x))
            }
        }
        3 => {
            let r: Vec<Subset> = live.iter().map(|&i| received[i]).collect();
            if total == n {
                Ok(partition_sign(n, &r))
            } else if total == 2 * n {
                let c: Vec<Subset> = r.iter().map(|&s| complement(n, s)).collect();
                let hodge: i32 = r
                    .iter()
                    .zip(&c)
                    .map(|(&s, &sc)| shuffle_sign(&[sc, s]))
                    .product();
                Ok(partition_sign(n, &c) * hodge)
            } else {
                Err(Error::Corruption(format!(
                    "vertex with inflow {total} is not balanced"
                )))
            }
        }
        d => Err(Error::Corruption(format!("vertex with {d} nonzero legs"))),
    }
}

fn partition_sign(n: usize, parts: &[Subset]) -> i32 {
    let mut union = 0;
    for &p in parts {
        if union & p != 0 {
            return 0;
        }
        union |= p;
    }
    if union != full(n) {
        return 0;
    }
    shuffle_sign(parts)
}

/// Sparse table of a vertex functional over edge states, for legs given as
/// `(label, incoming)`.
pub fn local_tensor(n: usize, signature: &[(u32, bool)]) -> Result<Vec<(Vec<Subset>, i32)>> {
    if signature.iter().any(|&(l, _)| l as usize >= n) {
        return input(format!("labels must lie in 0..{n}"));
    }
    let legs: Vec<Leg> = signature
        .iter()
        .map(|&(label, incoming)| Leg {
            label,
            is_head: incoming,
        })
        .collect();
    let flow: usize = legs.iter().map(|l| l.inflow(n)).sum();
    if !flow.is_multiple_of(n) {
        return input(format!(
            "signature is unbalanced: inflow {flow} is not a multiple of {n}"
        ));
    }
    let mut rows: Vec<Vec<Subset>> = vec![Vec::new()];
    for leg in &legs {
        let mut next = Vec::new();
        for row in &rows {
            for s in subsets_of(full(n), leg.label as usize) {
                let mut r = row.clone();
                r.push(s);
                next.push(r);
            }
        }
        rows = next;
    }
    let mut out = Vec::new();
    for states in rows {
        let received: Vec<Subset> = legs
            .iter()
            .zip(&states)
            .map(|(l, &s)| l.received(n, s))
            .collect();
        let v = vertex_value(n, &legs, &received)?;
        if v != 0 {
            out.push((states, v));
        }
    }
    Ok(out)
}

/// The cap `Σ_S σ(S, S^c)·(S, S^c)` between `V_k` and `V_{n-k}`.
pub fn cap(n: usize, k: usize) -> Vec<(Subset, Subset, i32)> {
    subsets_of(full(n), k)
        .into_iter()
        .map(|s| (s, complement(n, s), cap_sign(n, s)))
        .collect()
}

/// Renders a subset as `{1,3}`.
pub fn subset_string(s: Subset) -> String {
    let items: Vec<String> = (0..32)
        .filter(|&b| s >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[u32]) -> Subset {
        items.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    #[test]
    fn determinant_signs() {
        let t = local_tensor(3, &[(1, true), (1, true), (1, true)]).unwrap();
        let get = |a: &[Subset]| t.iter().find(|(k, _)| k == a).map(|(_, v)| *v);
        assert_eq!(get(&[set(&[1]), set(&[2]), set(&[3])]), Some(1));
        assert_eq!(get(&[set(&[2]), set(&[1]), set(&[3])]), Some(-1));
        assert_eq!(t.len(), 6);
    }

    #[test]
    fn partition_support() {
        let t = local_tensor(4, &[(1, true), (1, true), (2, true)]).unwrap();
        assert_eq!(t.len(), 12);
        for (k, v) in &t {
            assert_eq!(k[0] & k[1], 0);
            assert_eq!(k[0] & k[2], 0);
            assert_eq!(k[1] & k[2], 0);
            assert_eq!(k[0] | k[1] | k[2], full(4));
            assert_eq!(v.abs(), 1);
        }
    }

    #[test]
    fn caps() {
        let c = cap(4, 2);
        assert_eq!(c.len(), 6);
        assert!(c
            .iter()
            .all(|&(s, sc, v)| s | sc == full(4) && v.abs() == 1));
        assert_eq!(cap(2, 1), vec![(1, 2, 1), (2, 1, -1)]);
    }

    #[test]
    fn unbalanced_signature_is_rejected() {
        assert!(local_tensor(4, &[(1, true), (1, true), (1, true)]).is_err());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets_of(0b1011, 2), vec![0b0011, 0b1001, 0b1010]);
        assert_eq!(subsets_of(0b111, 0), vec![0]);
        assert!(subsets_of(0b1, 2).is_empty());
        assert_eq!(subsets_of(full(6), 3).len(), 20);
    }

    #[test]
    fn kappa_makes_reversal_invisible() {
        for n in 2..=8 {
            for i in 1..n {
                for s in subsets_of(full(n), i) {
                    let forward = edge_factor(n, i, s);
                    let backward = edge_factor(n, n - i, complement(n, s));
                    if 2 * i == n && swap_sign(n, i) < 0 {
                        assert_eq!(forward, -backward);
                    } else {
                        assert_eq!(forward, backward, "n={n} i={i}");
                    }
                }
            }
        }
    }
}
