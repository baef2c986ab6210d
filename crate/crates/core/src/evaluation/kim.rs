//! The two SL(4) local moves under which evaluations agree up to sign.
//!
//! `SquareFlip`: a 4-face bounded by ω1 edges whose corners carry ω2 legs.
//! Reversing the four ω1 edges turns sources into sinks and back.
//!
//! `HSlide`: an ω2 edge `u-v` whose four other legs are ω1 edges, all
//! pointing in or all pointing out. The edge is turned a quarter so that the
//! legs are regrouped: `[e,a,b] / [e,c,d]` becomes `[e,d,a] / [e,b,c]`.

use crate::error::{Error, Result};
use crate::webs::{AugmentedMap, Dart, EdgeId, End, VertexId, VertexKind, Web};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KimMove {
    SquareFlip,
    HSlide,
}

/// A place where a move applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KimSite {
    pub kind: KimMove,
    /// Square corners in face order, or the two ends of the ω2 edge.
    pub vertices: Vec<VertexId>,
    /// The square's edges, or the single ω2 edge.
    pub edges: Vec<EdgeId>,
}

fn is_trivalent(web: &Web, v: VertexId) -> bool {
    let vx = web.vertex(v);
    vx.kind == VertexKind::Internal && vx.rotation.len() == 3
}

fn oriented(label: u32) -> bool {
    label == 1 || label == 3
}

/// Every site of either move, squares first.
pub fn kim_sites(web: &Web) -> Vec<KimSite> {
    if web.n() != 4 {
        return Vec::new();
    }
    let mut out: Vec<KimSite> = Vec::new();
    let map = AugmentedMap::new(web);
    for cycle in map.faces().cycles {
        if cycle.len() != 4 || !cycle.iter().all(|&h| map.is_web_half_edge(h)) {
            continue;
        }
        let darts: Vec<Dart> = cycle.iter().map(|&h| Dart::from_half_edge(h)).collect();
        if let Some(site) = square_site(web, &darts) {
            out.push(site);
        }
    }
    for (e, edge) in web.edges().iter().enumerate() {
        if let Some(site) = h_site(web, e, edge.tail, edge.head) {
            out.push(site);
        }
    }
    out
}

fn square_site(web: &Web, darts: &[Dart]) -> Option<KimSite> {
    let vertices: Vec<VertexId> = darts.iter().map(|&d| web.vertex_of(d)).collect();
    let edges: Vec<EdgeId> = darts.iter().map(|d| d.edge).collect();
    let distinct = |xs: &[usize]| (0..xs.len()).all(|i| !xs[i + 1..].contains(&xs[i]));
    if !distinct(&vertices) || !distinct(&edges) {
        return None;
    }
    if !vertices.iter().all(|&v| is_trivalent(web, v))
        || !edges.iter().all(|&e| oriented(web.edge(e).label))
    {
        return None;
    }
    let legs_ok = vertices.iter().all(|&v| {
        web.vertex(v)
            .rotation
            .iter()
            .any(|d| !edges.contains(&d.edge) && web.edge(d.edge).label == 2)
    });
    legs_ok.then_some(KimSite {
        kind: KimMove::SquareFlip,
        vertices,
        edges,
    })
}

/// Rotation of `v` starting at the dart of `e`.
fn from_edge(web: &Web, v: VertexId, e: EdgeId) -> Option<Vec<Dart>> {
    let rot = &web.vertex(v).rotation;
    let i = rot.iter().position(|d| d.edge == e)?;
    Some((0..rot.len()).map(|k| rot[(i + k) % rot.len()]).collect())
}

fn h_site(web: &Web, e: EdgeId, u: VertexId, v: VertexId) -> Option<KimSite> {
    if web.edge(e).label != 2 || u == v || !is_trivalent(web, u) || !is_trivalent(web, v) {
        return None;
    }
    let ru = from_edge(web, u, e)?;
    let rv = from_edge(web, v, e)?;
    let legs = [ru[1], ru[2], rv[1], rv[2]];
    let flows: Vec<u32> = legs.iter().map(|&d| web.flow_out(d)).collect();
    if !(flows.iter().all(|&f| f == 1) || flows.iter().all(|&f| f == 3)) {
        return None;
    }
    let far_ok = legs.iter().all(|&d| {
        let w = web.vertex_of(d.twin());
        w != u && w != v
    });
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| legs[i].edge != legs[j].edge));
    (far_ok && distinct).then(|| KimSite {
        kind: KimMove::HSlide,
        vertices: vec![u, v],
        edges: vec![e],
    })
}

/// Applies the move at `site`. Fails with `PatternMismatch` if the site
/// does not describe an instance of the move in this web.
pub fn kim_rewrite(web: &Web, site: &KimSite) -> Result<Web> {
    let mismatch =
        || Error::PatternMismatch(format!("{:?} at vertices {:?}", site.kind, site.vertices));
    if web.n() != 4 {
        return Err(Error::PatternMismatch(format!(
            "moves are for SL(4), got n = {}",
            web.n()
        )));
    }
    let valid_ids = site.vertices.iter().all(|&v| v < web.vertices().len())
        && site.edges.iter().all(|&e| e < web.edges().len());
    if !valid_ids || !kim_sites(web).contains(site) {
        return Err(mismatch());
    }
    let mut vertices = web.vertices().to_vec();
    let mut edges = web.edges().to_vec();
    match site.kind {
        KimMove::SquareFlip => {
            for &e in &site.edges {
                let edge = &mut edges[e];
                std::mem::swap(&mut edge.tail, &mut edge.head);
            }
            for vx in &mut vertices {
                for d in &mut vx.rotation {
                    if site.edges.contains(&d.edge) {
                        *d = d.twin();
                    }
                }
            }
        }
        KimMove::HSlide => {
            let (e, u, v) = (site.edges[0], site.vertices[0], site.vertices[1]);
            let ru = from_edge(web, u, e).ok_or_else(mismatch)?;
            let rv = from_edge(web, v, e).ok_or_else(mismatch)?;
            let (a, b, c, d) = (ru[1], ru[2], rv[1], rv[2]);
            let mut move_end = |dart: Dart, to: VertexId| match dart.end {
                End::Tail => edges[dart.edge].tail = to,
                End::Head => edges[dart.edge].head = to,
            };
            move_end(d, u);
            move_end(b, v);
            vertices[u].rotation = vec![ru[0], d, a];
            vertices[v].rotation = vec![rv[0], b, c];
        }
    }
    let out = Web::from_parts(4, vertices, edges, web.boundary_vertices().to_vec())?;
    let report = out.validate();
    if !report.is_valid() {
        return Err(Error::Corruption(format!(
            "move produced an invalid web: {report}"
        )));
    }
    Ok(out)
}
