//! Triangular diagrams and the growth algorithm.
//!
//! A [`TriangularDiagram`] is a web fragment drawn in a triangle standing on
//! its apex. Its boundary, read clockwise from the apex, is the left side
//! (bottom→top), the top (left→right) and the right side (top→bottom).
//! Side labels record the flow crossing the side from left to right, so left
//! labels flow into the triangle and right labels flow out of it; top labels
//! record the flow into the triangle.

pub mod sl4;

pub use sl4::sl4_select_variants;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, input, Error, Result};
use crate::littelmann::MinusculePath;
use crate::webs::render::Frame;
use crate::webs::{Dart, Draft, EdgeId, End, VertexId, VertexKind, Web};
use crate::weights::{label_mod, OrbitWeight, Weight};

/// Order of the side labels in a length-one diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Labels increase from the bottom up.
    Standard,
    /// Labels decrease from the bottom up.
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One side edge of a length-one diagram and the spine edge directly above
/// where it attaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpineItem {
    pub side: Side,
    pub label: u32,
    /// Label of the spine edge above, oriented upward for left items and
    /// downward for right items.
    pub f: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularDiagram {
    web: Web,
    left: Vec<u32>,
    top: Vec<u32>,
    right: Vec<u32>,
    left_weight: Weight,
    right_weight: Weight,
}

fn side_weight(n: usize, labels: &[u32]) -> Weight {
    labels.iter().fold(Weight::zero(n), |acc, &l| {
        &acc + &Weight::fundamental(n, l as usize)
    })
}

impl TriangularDiagram {
    /// The diagram with no edges, the unit of the product.
    pub fn empty(n: usize) -> TriangularDiagram {
        TriangularDiagram::assemble(Web::empty(n), Vec::new(), Vec::new(), Vec::new())
    }

    fn assemble(web: Web, left: Vec<u32>, top: Vec<u32>, right: Vec<u32>) -> TriangularDiagram {
        let n = web.n();
        debug_assert_eq!(
            web.boundary_vertices().len(),
            left.len() + top.len() + right.len()
        );
        TriangularDiagram {
            left_weight: side_weight(n, &left),
            right_weight: side_weight(n, &right),
            web,
            left,
            top,
            right,
        }
    }

    pub fn n(&self) -> usize {
        self.web.n()
    }

    pub fn web(&self) -> &Web {
        &self.web
    }

    /// The underlying web, marked at the apex.
    pub fn to_web(&self) -> Web {
        self.web.clone()
    }

    pub fn into_web(self) -> Web {
        self.web
    }

    /// Left side labels, bottom→top.
    pub fn left(&self) -> &[u32] {
        &self.left
    }

    /// Top labels, left→right.
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// Right side labels, bottom→top.
    pub fn right(&self) -> &[u32] {
        &self.right
    }

    pub fn length(&self) -> usize {
        self.top.len()
    }

    pub fn left_weight(&self) -> &Weight {
        &self.left_weight
    }

    pub fn right_weight(&self) -> &Weight {
        &self.right_weight
    }

    pub fn vertex_count(&self) -> usize {
        self.web.internal_vertex_count()
    }

    pub fn frame(&self) -> Frame {
        Frame::Triangle {
            left: self.left.len(),
            top: self.top.len(),
            right: self.right.len(),
        }
    }

    fn left_port(&self, i: usize) -> VertexId {
        self.web.boundary_vertices()[i]
    }

    fn right_port(&self, i: usize) -> VertexId {
        let b = self.web.boundary_vertices();
        b[b.len() - 1 - i]
    }
}

/// Side edges of a length-one diagram from the bottom up, with the spine
/// labels above each.
pub fn spine(w: &OrbitWeight, variant: Variant) -> Vec<SpineItem> {
    let n = w.n();
    let mut items = w.decompose_lr().merged();
    if variant == Variant::Reversed {
        items.reverse();
    }
    let mut u = 0i64;
    items
        .into_iter()
        .map(|(label, is_right)| {
            let label = label as u32;
            if is_right {
                u -= i64::from(label);
                SpineItem {
                    side: Side::Right,
                    label,
                    f: label_mod(n, -u),
                }
            } else {
                u += i64::from(label);
                SpineItem {
                    side: Side::Left,
                    label,
                    f: label_mod(n, u),
                }
            }
        })
        .collect()
}

/// The irreducible length-one diagram `T_ω` for an orbit weight.
pub fn length_one(w: &OrbitWeight, variant: Variant) -> TriangularDiagram {
    let n = w.n();
    let items = spine(w, variant);
    let m = items.len();
    let mut d = Draft::new(n);
    let lefts: Vec<usize> = (0..m).filter(|&i| items[i].side == Side::Left).collect();
    let rights: Vec<usize> = (0..m).filter(|&i| items[i].side == Side::Right).collect();
    let mut port = vec![usize::MAX; m];
    for &i in &lefts {
        port[i] = d.add_vertex(VertexKind::Boundary);
    }
    let top_port = d.add_vertex(VertexKind::Boundary);
    for &i in rights.iter().rev() {
        port[i] = d.add_vertex(VertexKind::Boundary);
    }
    let mut boundary: Vec<VertexId> = lefts.iter().map(|&i| port[i]).collect();
    boundary.push(top_port);
    boundary.extend(rights.iter().rev().map(|&i| port[i]));

    // spine[i] is the vertex where item i attaches (none for item 0); the
    // edge above item i is g[i], whose lower end is port[0] for i = 0.
    let spine_v: Vec<VertexId> = (0..m)
        .map(|i| {
            if i == 0 {
                usize::MAX
            } else {
                d.add_vertex(VertexKind::Internal)
            }
        })
        .collect();
    let lower = |i: usize| if i == 0 { port[0] } else { spine_v[i] };
    let upper = |i: usize| if i + 1 == m { top_port } else { spine_v[i + 1] };
    let mut g: Vec<(EdgeId, bool)> = Vec::with_capacity(m);
    for (i, item) in items.iter().enumerate() {
        let upward = item.side == Side::Left;
        let e = if upward {
            d.add_edge(lower(i), upper(i), item.f)
        } else {
            d.add_edge(upper(i), lower(i), item.f)
        };
        g.push((e, upward));
    }
    let below_end =
        |(e, upward): (EdgeId, bool)| Dart::new(e, if upward { End::Tail } else { End::Head });
    let above_end =
        |(e, upward): (EdgeId, bool)| Dart::new(e, if upward { End::Head } else { End::Tail });
    // Item 0's port holds the bottom end of g[0]; the top port holds the top of g[m-1].
    d.set_rotation(port[0], vec![below_end(g[0])]);
    d.set_rotation(top_port, vec![above_end(g[m - 1])]);
    for i in 1..m {
        let up = below_end(g[i]);
        let down = above_end(g[i - 1]);
        match items[i].side {
            Side::Left => {
                let e = d.add_edge(port[i], spine_v[i], items[i].label);
                d.set_rotation(port[i], vec![Dart::tail(e)]);
                d.set_rotation(spine_v[i], vec![up, Dart::head(e), down]);
            }
            Side::Right => {
                let e = d.add_edge(spine_v[i], port[i], items[i].label);
                d.set_rotation(port[i], vec![Dart::head(e)]);
                d.set_rotation(spine_v[i], vec![up, down, Dart::tail(e)]);
            }
        }
    }
    d.set_boundary(boundary);
    let web = d.finish().expect("length-one diagrams are well formed");
    let left = lefts.iter().map(|&i| items[i].label).collect();
    let right = rights.iter().map(|&i| items[i].label).collect();
    TriangularDiagram::assemble(web, left, vec![w.class() as u32], right)
}

/// The region between two diagrams, filled by the crossing rule.
///
/// Port order in `web`, clockwise from the bottom corner: lower-left
/// (bottom→top), upper-left (bottom→top), upper-right (top→bottom),
/// lower-right (top→bottom). Lower ports with nothing left to carry are
/// removed by normalization.
#[derive(Clone, Debug)]
pub struct Diamond {
    pub web: Web,
    pub new_left: Vec<u32>,
    pub new_right: Vec<u32>,
    pub upper_left: usize,
    pub upper_right: usize,
}

/// Fills the diamond below `A` (right side `a`) and `B` (left side `b`).
///
/// Crossings `(s, t)` are visited from the top corner down. The a-strand
/// arriving from the north-west and the b-strand leaving to the north-east
/// either cancel (equal labels: nothing continues below) or both pass, joined
/// by a rung of label `b - a`.
pub fn fill_diamond(n: usize, a: &[u32], b: &[u32]) -> Result<Diamond> {
    if let Some(&bad) = a.iter().chain(b).find(|&&x| x == 0 || x as usize >= n) {
        return input(format!("side label {bad} out of range 1..{}", n - 1));
    }
    let (la, lb) = (a.len(), b.len());
    let mut d = Draft::new(n);
    let ll: Vec<_> = (0..lb)
        .map(|_| d.add_vertex(VertexKind::Boundary))
        .collect();
    let ul: Vec<_> = (0..la)
        .map(|_| d.add_vertex(VertexKind::Boundary))
        .collect();
    let ur: Vec<_> = (0..lb)
        .map(|_| d.add_vertex(VertexKind::Boundary))
        .collect();
    let lr: Vec<_> = (0..la)
        .map(|_| d.add_vertex(VertexKind::Boundary))
        .collect();
    let mut boundary = ll.clone();
    boundary.extend(&ul);
    boundary.extend(ur.iter().rev());
    boundary.extend(lr.iter().rev());
    let (new_left, new_right);
    if la == 0 || lb == 0 {
        for t in 0..lb {
            let e = d.add_edge(ll[t], ur[t], b[t]);
            d.set_rotation(ll[t], vec![Dart::tail(e)]);
            d.set_rotation(ur[t], vec![Dart::head(e)]);
        }
        for s in 0..la {
            let e = d.add_edge(ul[s], lr[s], a[s]);
            d.set_rotation(ul[s], vec![Dart::tail(e)]);
            d.set_rotation(lr[s], vec![Dart::head(e)]);
        }
        new_left = b.to_vec();
        new_right = a.to_vec();
    } else {
        let mut a_cur = a.to_vec();
        let mut b_cur = b.to_vec();
        let mut se = vec![vec![0u32; lb]; la];
        let mut sw = vec![vec![0u32; lb]; la];
        let mut rung = vec![vec![0u32; lb]; la];
        for s in (0..la).rev() {
            for t in (0..lb).rev() {
                let (nw, ne) = (a_cur[s], b_cur[t]);
                if nw != ne {
                    se[s][t] = nw;
                    sw[s][t] = ne;
                }
                rung[s][t] = label_mod(n, i64::from(ne) - i64::from(nw));
                a_cur[s] = se[s][t];
                b_cur[t] = sw[s][t];
            }
        }
        let up: Vec<Vec<_>> = (0..la)
            .map(|_| {
                (0..lb)
                    .map(|_| d.add_vertex(VertexKind::Internal))
                    .collect()
            })
            .collect();
        let lo: Vec<Vec<_>> = (0..la)
            .map(|_| {
                (0..lb)
                    .map(|_| d.add_vertex(VertexKind::Internal))
                    .collect()
            })
            .collect();
        let rungs: Vec<Vec<_>> = (0..la)
            .map(|s| {
                (0..lb)
                    .map(|t| d.add_edge(lo[s][t], up[s][t], rung[s][t]))
                    .collect()
            })
            .collect();
        // a-strands: into the top of each H, out of the bottom.
        let mut nw_edge = vec![vec![0; lb]; la];
        let mut se_edge = vec![vec![0; lb]; la];
        for s in 0..la {
            let e = d.add_edge(ul[s], up[s][lb - 1], a[s]);
            d.set_rotation(ul[s], vec![Dart::tail(e)]);
            nw_edge[s][lb - 1] = e;
            for t in (1..lb).rev() {
                let e = d.add_edge(lo[s][t], up[s][t - 1], se[s][t]);
                se_edge[s][t] = e;
                nw_edge[s][t - 1] = e;
            }
            let e = d.add_edge(lo[s][0], lr[s], se[s][0]);
            d.set_rotation(lr[s], vec![Dart::head(e)]);
            se_edge[s][0] = e;
        }
        // b-strands: into the bottom of each H, out of the top.
        let mut sw_edge = vec![vec![0; lb]; la];
        let mut ne_edge = vec![vec![0; lb]; la];
        for t in 0..lb {
            let e = d.add_edge(ll[t], lo[0][t], sw[0][t]);
            d.set_rotation(ll[t], vec![Dart::tail(e)]);
            sw_edge[0][t] = e;
            for s in 0..la - 1 {
                let e = d.add_edge(up[s][t], lo[s + 1][t], sw[s + 1][t]);
                ne_edge[s][t] = e;
                sw_edge[s + 1][t] = e;
            }
            let e = d.add_edge(up[la - 1][t], ur[t], b[t]);
            d.set_rotation(ur[t], vec![Dart::head(e)]);
            ne_edge[la - 1][t] = e;
        }
        for s in 0..la {
            for t in 0..lb {
                d.set_rotation(
                    up[s][t],
                    vec![
                        Dart::tail(ne_edge[s][t]),
                        Dart::head(nw_edge[s][t]),
                        Dart::head(rungs[s][t]),
                    ],
                );
                d.set_rotation(
                    lo[s][t],
                    vec![
                        Dart::tail(rungs[s][t]),
                        Dart::head(sw_edge[s][t]),
                        Dart::tail(se_edge[s][t]),
                    ],
                );
            }
        }
        new_left = (0..lb).map(|t| sw[0][t]).filter(|&x| x != 0).collect();
        new_right = (0..la).map(|s| se[s][0]).filter(|&x| x != 0).collect();
    }
    d.set_boundary(boundary);
    d.normalize()?;
    Ok(Diamond {
        web: d.finish()?,
        new_left,
        new_right,
        upper_left: la,
        upper_right: lb,
    })
}

/// `A ⊗ B`: `A` upper left, `B` upper right, the diamond between and below.
pub fn product(a: &TriangularDiagram, b: &TriangularDiagram) -> Result<TriangularDiagram> {
    check_rank(a.n(), b.n())?;
    let n = a.n();
    let diamond = fill_diamond(n, &a.right, &b.left)?;
    let mut d = Draft::new(n);
    let oa = d.absorb(&a.web).vertex;
    let ob = d.absorb(&b.web).vertex;
    let od = d.absorb(&diamond.web).vertex;
    let db = diamond.web.boundary_vertices();
    let (nl, nr) = (diamond.new_left.len(), diamond.new_right.len());
    let (la, lb) = (diamond.upper_left, diamond.upper_right);
    debug_assert_eq!(db.len(), nl + la + lb + nr);
    for s in 0..la {
        d.glue(oa + a.right_port(s), od + db[nl + s])?;
    }
    for t in 0..lb {
        d.glue(od + db[nl + la + (lb - 1 - t)], ob + b.left_port(t))?;
    }
    let ab = a.web.boundary_vertices();
    let bb = b.web.boundary_vertices();
    let mut boundary: Vec<VertexId> = db[..nl].iter().map(|&v| od + v).collect();
    boundary.extend(ab[..a.left.len() + a.top.len()].iter().map(|&v| oa + v));
    boundary.extend(bb[b.left.len()..].iter().map(|&v| ob + v));
    boundary.extend(db[nl + la + lb..].iter().map(|&v| od + v));
    d.set_boundary(boundary);
    let web = d.finish()?;
    let mut left = diamond.new_left;
    left.extend(&a.left);
    let mut top = a.top.clone();
    top.extend(&b.top);
    let mut right = diamond.new_right;
    right.extend(&b.right);
    Ok(TriangularDiagram::assemble(web, left, top, right))
}

/// `T_μ`: the left-associated product of the length-one diagrams of the
/// steps of `μ`, with `choices[i]` picking the variant for step `i`.
pub fn from_path(path: &MinusculePath, choices: &[Variant]) -> Result<TriangularDiagram> {
    if choices.len() != path.len() {
        return input(format!(
            "{} variant choices given for a path with {} steps",
            choices.len(),
            path.len()
        ));
    }
    let mut t = TriangularDiagram::empty(path.n());
    for (step, &v) in path.steps().iter().zip(choices) {
        t = product(&t, &length_one(step, v))?;
    }
    Ok(t)
}

/// `T_μ` with every step in the standard variant.
pub fn from_path_standard(path: &MinusculePath) -> Result<TriangularDiagram> {
    from_path(path, &vec![Variant::Standard; path.len()])
}

/// The closed web of a dominant path ending at 0.
pub fn basis_web(path: &MinusculePath, choices: &[Variant]) -> Result<Web> {
    if !path.is_dominant() || !path.is_closed() {
        return input("basis webs come from dominant paths ending at 0");
    }
    let t = from_path(path, choices)?;
    if !t.left.is_empty() || !t.right.is_empty() {
        return Err(Error::Corruption(
            "a closed dominant path left edges on a side".into(),
        ));
    }
    Ok(t.into_web())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::littelmann::enumerate_paths;
    use crate::weights::weyl_orbit;
    use proptest::prelude::*;

    fn orbit(n: usize, coords: &[i64]) -> OrbitWeight {
        OrbitWeight::new(Weight::canonicalize(n, coords).unwrap()).unwrap()
    }

    fn multiset(mut v: Vec<u32>) -> Vec<u32> {
        v.sort_unstable();
        v
    }

    #[test]
    fn sl4_length_one_standard() {
        let t = length_one(&orbit(4, &[1, 0, 1, 0]), Variant::Standard);
        let fs: Vec<u32> = spine(&orbit(4, &[1, 0, 1, 0]), Variant::Standard)
            .iter()
            .map(|i| i.f)
            .collect();
        assert_eq!(fs, [1, 1, 2]);
        assert_eq!(t.left(), [2]);
        assert_eq!(t.right(), [1, 3]);
        assert_eq!(t.top(), [2]);
        assert_eq!(t.vertex_count(), 2);
        assert!(t.web().validate().is_valid());
        assert_eq!(t.web().boundary(), [2, 2, 1, 3]);
    }

    #[test]
    fn arcs_for_single_labels() {
        let t = length_one(&orbit(2, &[1, 0]), Variant::Standard);
        assert_eq!(
            (t.left(), t.top(), t.right()),
            (&[][..], &[1][..], &[1][..])
        );
        assert_eq!(t.vertex_count(), 0);
        let t = length_one(&orbit(4, &[1, 1, 1, 0]), Variant::Standard);
        assert_eq!(
            (t.left(), t.top(), t.right()),
            (&[][..], &[3][..], &[3][..])
        );
        assert_eq!(t.web().edges().len(), 1);
        let t = length_one(&orbit(3, &[0, 0, 1]), Variant::Standard);
        assert_eq!(
            (t.left(), t.top(), t.right()),
            (&[2][..], &[1][..], &[][..])
        );
    }

    #[test]
    fn spine_bounds() {
        for n in 2..=8 {
            for k in 1..n {
                for o in weyl_orbit(n, k).unwrap() {
                    for variant in [Variant::Standard, Variant::Reversed] {
                        let items = spine(&o, variant);
                        for it in &items {
                            assert!(it.f > 0, "{o} {variant:?}");
                            if variant == Variant::Standard {
                                assert!(it.f <= it.label, "{o}");
                            }
                        }
                        // The top edge carries ω_k into the triangle.
                        let top = items.last().unwrap();
                        let inflow = match top.side {
                            Side::Left => n as u32 - top.f,
                            Side::Right => top.f,
                        };
                        assert_eq!(inflow as usize, k);
                        let t = length_one(&o, variant);
                        let report = t.web().validate();
                        assert!(report.is_valid(), "{o} {variant:?}: {report}");
                        assert_eq!(&(t.right_weight() - t.left_weight()), o.weight());
                    }
                }
            }
        }
    }

    #[test]
    fn diamond_examples() {
        let d = fill_diamond(2, &[1], &[1]).unwrap();
        assert!(d.new_left.is_empty() && d.new_right.is_empty());
        assert_eq!(d.web.edges().len(), 1);
        assert_eq!(d.web.internal_vertex_count(), 0);

        let d = fill_diamond(4, &[1, 3], &[3]).unwrap();
        assert_eq!((d.new_left.clone(), d.new_right.clone()), (vec![], vec![1]));
        assert_eq!(d.web.internal_vertex_count(), 0);
        assert_eq!(d.web.edges().len(), 2);

        let d = fill_diamond(4, &[1, 3], &[3, 1]).unwrap();
        assert!(d.new_left.is_empty() && d.new_right.is_empty());
        assert!(d.web.validate().is_valid(), "{}", d.web.validate());
        assert_eq!(d.web.internal_vertex_count(), 2);
    }

    fn words(labels: &[u32], len: usize) -> Vec<Vec<u32>> {
        (0..len).fold(vec![vec![]], |acc, _| {
            acc.iter()
                .flat_map(|w| labels.iter().map(move |&x| [&w[..], &[x]].concat()))
                .collect()
        })
    }

    #[test]
    fn diamonds_are_valid_webs() {
        for n in 2..=5u32 {
            let labels: Vec<u32> = (1..n).collect();
            for la in 0..=3 {
                for lb in 0..=3 {
                    for a in words(&labels, la) {
                        for b in words(&labels, lb) {
                            let d = fill_diamond(n as usize, &a, &b).unwrap();
                            let report = d.web.validate();
                            assert!(report.is_valid(), "n={n} a={a:?} b={b:?}: {report}");
                            let mut rest_a = multiset(a.clone());
                            let mut rest_b = multiset(b.clone());
                            for x in &b {
                                if let Some(p) = rest_a.iter().position(|y| y == x) {
                                    rest_a.remove(p);
                                }
                            }
                            for x in &a {
                                if let Some(p) = rest_b.iter().position(|y| y == x) {
                                    rest_b.remove(p);
                                }
                            }
                            assert_eq!(
                                multiset(d.new_right.clone()),
                                rest_a,
                                "n={n} a={a:?} b={b:?}"
                            );
                            assert_eq!(
                                multiset(d.new_left.clone()),
                                rest_b,
                                "n={n} a={a:?} b={b:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_cup_from_product() {
        let up = length_one(&orbit(2, &[1, 0]), Variant::Standard);
        let down = length_one(&orbit(2, &[0, 1]), Variant::Standard);
        let t = product(&up, &down).unwrap();
        assert!(t.left().is_empty() && t.right().is_empty());
        assert_eq!(t.top(), [1, 1]);
        assert!(t.web().isomorphic(&Web::arc(2, 1)));
    }

    #[test]
    fn figure_boundary_paths_give_both_cup_pairs() {
        // The maximal path nests the two arcs, the other puts them side by side.
        let paths = enumerate_paths(4, &[1, 3, 1, 3], &Weight::zero(4)).unwrap();
        let webs: Vec<Web> = paths
            .iter()
            .map(|p| basis_web(p, &[Variant::Standard; 4]).unwrap())
            .collect();
        for w in &webs {
            assert_eq!(w.boundary(), [1, 3, 1, 3]);
            assert_eq!(w.internal_vertex_count(), 0);
            assert!(w.validate().is_valid());
        }
        assert!(!webs[0].isomorphic(&webs[1]));
        let nested = paths
            .iter()
            .position(|p| p.points()[2] == Weight::parse(4, "w1+w3").unwrap())
            .unwrap();
        let w = &webs[nested];
        let first = w.boundary_vertices()[0];
        let last = *w.boundary_vertices().last().unwrap();
        assert!(w
            .edges()
            .iter()
            .any(|e| (e.tail, e.head) == (first, last) || (e.tail, e.head) == (last, first)));
    }

    #[test]
    fn nonminimal_figure_path() {
        let pts: Vec<Weight> = ["0", "w1", "w1+w3", "w2+w3", "w2", "0"]
            .iter()
            .map(|s| Weight::parse(4, s).unwrap())
            .collect();
        let path = MinusculePath::new(pts).unwrap();
        let t = from_path_standard(&path).unwrap();
        assert_eq!(t.length(), 5);
        assert_eq!(t.web().boundary(), path.type_indices());
        assert!(t.left().is_empty() && t.right().is_empty());
    }

    #[test]
    fn open_paths_keep_a_right_side() {
        let paths = enumerate_paths(3, &[1, 1], &Weight::parse(3, "w2").unwrap()).unwrap();
        let t = from_path_standard(&paths[0]).unwrap();
        assert!(t.left().is_empty());
        assert_eq!(t.right_weight(), &Weight::parse(3, "w2").unwrap());
    }

    #[test]
    fn choice_count_is_checked() {
        let paths = enumerate_paths(2, &[1, 1], &Weight::zero(2)).unwrap();
        assert!(from_path(&paths[0], &[Variant::Standard]).is_err());
    }

    fn arb_orbit(n: usize) -> impl Strategy<Value = OrbitWeight> {
        (1..n).prop_flat_map(move |k| {
            let orbit = weyl_orbit(n, k).unwrap();
            (0..orbit.len()).prop_map(move |i| orbit[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn products_are_valid_and_sum_correctly(
            steps in (3usize..=5).prop_flat_map(|n| prop::collection::vec(arb_orbit(n), 1..6)),
            reversed in prop::collection::vec(any::<bool>(), 6),
        ) {
            let n = steps[0].n();
            let choices: Vec<Variant> = (0..steps.len())
                .map(|i| if reversed[i] { Variant::Reversed } else { Variant::Standard })
                .collect();
            let ws: Vec<Weight> = steps.iter().map(|s| s.weight().clone()).collect();
            let path = MinusculePath::from_steps(n, &ws).unwrap();
            let t = from_path(&path, &choices).unwrap();
            let report = t.web().validate();
            prop_assert!(report.is_valid(), "{}", report);
            prop_assert_eq!(&(t.right_weight() - t.left_weight()), path.endpoint());
            prop_assert_eq!(t.top().iter().map(|&x| x as usize).collect::<Vec<_>>(), path.type_indices());
        }
    }
}
