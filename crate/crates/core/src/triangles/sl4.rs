//! Variant selection for SL(4).
//!
//! The weights `(1,0,1,0)` and `(0,1,0,1)` have two irreducible length-one
//! diagrams each (three side edges, two on one side). Every other SL(4) orbit
//! weight has at most one edge per side and either variant gives the same
//! vertex count, so those steps stay [`Variant::Standard`].
//!
//! For `ν_i = (1,0,1,0)` the window `ν_{i+1}, …, ν_j` is grown while the left
//! side of `T_{i+1} ⊗ … ⊗ T_j` carries only `ω2` edges. The first ω1-type
//! edge to appear on the left of `T_{i+1} ⊗ … ⊗ T_{j+1}` decides the variant
//! of `T_i`. If two appear, `ν_{j+1} = (0,1,0,1)` and the two steps are a
//! pair: both orderings give the minimum, so both are emitted. A
//! `(0,1,0,1)` step that is not a pair partner scans backwards the same way
//! on right sides.

use crate::error::{input, Result};
use crate::littelmann::MinusculePath;
use crate::weights::OrbitWeight;

use super::{length_one, product, TriangularDiagram, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// `(1,0,1,0)`: left `[2]`, right `{1, 3}`.
    Up,
    /// `(0,1,0,1)`: left `{1, 3}`, right `[2]`.
    Down,
    Plain,
}

fn kind(w: &OrbitWeight) -> Kind {
    match w.weight().coords() {
        [1, 0, 1, 0] => Kind::Up,
        [0, 1, 0, 1] => Kind::Down,
        _ => Kind::Plain,
    }
}

/// An ω1 edge crossing the scanned side left to right (label 1) picks the
/// reversed diagram, one crossing right to left (label 3) the standard one.
fn variant_for(seen: u32) -> Variant {
    if seen == 1 {
        Variant::Reversed
    } else {
        Variant::Standard
    }
}

fn block(steps: &[OrbitWeight], n: usize) -> TriangularDiagram {
    steps.iter().fold(TriangularDiagram::empty(n), |t, s| {
        product(&t, &length_one(s, Variant::Standard)).expect("same rank")
    })
}

fn oriented(labels: &[u32]) -> Vec<u32> {
    labels.iter().copied().filter(|&l| l != 2).collect()
}

/// Variant assignments for the steps of an SL(4) path that minimise the
/// vertex count of `T_μ`. One assignment, or two per ambiguous pair.
pub fn sl4_select_variants(path: &MinusculePath) -> Result<Vec<Vec<Variant>>> {
    if path.n() != 4 {
        return input(format!(
            "variant selection is for SL(4), got n = {}",
            path.n()
        ));
    }
    let steps = path.steps();
    let kinds: Vec<Kind> = steps.iter().map(kind).collect();
    let mut base = vec![Variant::Standard; steps.len()];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut partner = vec![false; steps.len()];
    for i in 0..steps.len() {
        if kinds[i] != Kind::Up {
            continue;
        }
        for j in i + 1..steps.len() {
            let left = oriented(block(&steps[i + 1..=j], 4).left());
            match left.len() {
                0 => continue,
                1 => base[i] = variant_for(left[0]),
                _ => {
                    if kinds[j] == Kind::Down && !partner[j] {
                        pairs.push((i, j));
                        partner[j] = true;
                    }
                }
            }
            break;
        }
    }
    for j in 0..steps.len() {
        if kinds[j] != Kind::Down || partner[j] {
            continue;
        }
        for i in (0..j).rev() {
            let right = oriented(block(&steps[i..j], 4).right());
            if right.is_empty() {
                continue;
            }
            if right.len() == 1 {
                base[j] = variant_for(right[0]);
            }
            break;
        }
    }
    let mut out = vec![base];
    for &(i, j) in &pairs {
        out = out
            .into_iter()
            .flat_map(|a| {
                [Variant::Standard, Variant::Reversed]
                    .into_iter()
                    .map(move |v| {
                        let mut a = a.clone();
                        a[i] = v;
                        a[j] = v;
                        a
                    })
            })
            .collect();
    }
    Ok(out)
}
