#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use webbasis::coherence::traversal_cost;
use webbasis::littelmann::{enumerate_paths, MinusculePath};
use webbasis::webs::json::from_json;
use webbasis::webs::{Dart, Draft, DualDiskoid, Edge, Vertex, VertexKind, Web};
use webbasis::weights::{Dominance, Weight};

pub fn figure() -> Web {
    from_json(include_str!("../data/sl4_figure.json")).unwrap()
}

pub fn weight(n: usize, text: &str) -> Weight {
    Weight::parse(n, text).unwrap()
}

/// All words of the given length over `letters`.
pub fn words(letters: &[usize], len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.iter()
            .flat_map(|w| letters.iter().map(move |&x| [&w[..], &[x]].concat()))
            .collect()
    })
}

/// A random closed dominant path with boundary length in `1..=max_len`.
pub fn random_closed_path(rng: &mut impl Rng, n: usize, max_len: usize) -> MinusculePath {
    loop {
        let len = rng.gen_range(1..=max_len);
        let b: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
        let paths = enumerate_paths(n, &b, &Weight::zero(n)).unwrap();
        if let Some(p) = paths.choose(rng) {
            return p.clone();
        }
    }
}

/// Splits edge `e` with a 2-valent vertex; each half may be stored in the
/// opposite direction with the dual label.
pub fn subdivide(web: &Web, e: usize, flips: [bool; 2], swap_rotation: bool) -> Web {
    let mut vertices = web.vertices().to_vec();
    let mut edges = web.edges().to_vec();
    let old = edges[e];
    let m = vertices.len();
    let f = edges.len();
    edges[e].head = m;
    edges.push(Edge {
        tail: m,
        head: old.head,
        label: old.label,
    });
    for d in &mut vertices[old.head].rotation {
        if *d == Dart::head(e) {
            *d = Dart::head(f);
        }
    }
    let mut rotation = vec![Dart::head(e), Dart::tail(f)];
    if swap_rotation {
        rotation.reverse();
    }
    vertices.push(Vertex {
        kind: VertexKind::Internal,
        rotation,
    });
    let w = Web::from_parts(web.n(), vertices, edges, web.boundary_vertices().to_vec()).unwrap();
    w.with_reversed_edges(|x| (x == e && flips[0]) || (x == f && flips[1]))
}

/// Splits edge `e` twice and joins the two new vertices by a 0-labelled
/// chord running beside the middle piece.
pub fn add_zero_chord(web: &Web, e: usize) -> Web {
    let once = subdivide(web, e, [false; 2], false);
    let m1 = once.vertices().len() - 1;
    let f = once.edges().len() - 1;
    let twice = subdivide(&once, f, [false; 2], false);
    let m2 = twice.vertices().len() - 1;
    let g = twice.edges().len() - 1;
    let mut draft = Draft::from_web(&twice);
    let z = draft.add_edge(m1, m2, 0);
    draft.set_rotation(m1, vec![Dart::tail(f), Dart::tail(z), Dart::head(e)]);
    draft.set_rotation(m2, vec![Dart::tail(g), Dart::head(z), Dart::head(f)]);
    draft.finish().unwrap()
}

/// A random non-normalized web with the same normalization as `web`. Runs
/// of several 2-valent vertices with arbitrary directions are only made
/// when the odd self-dual label cannot occur, since there the direction of
/// a smoothed run is visible as a sign.
pub fn denormalize(rng: &mut impl Rng, web: &Web) -> Web {
    let n = web.n();
    let mut out = web.clone();
    for e in 0..web.edges().len() {
        match rng.gen_range(0..4) {
            0 => {}
            1 => out = subdivide(&out, e, [rng.gen(), rng.gen()], rng.gen()),
            2 if n % 4 != 2 => {
                out = subdivide(&out, e, [rng.gen(), rng.gen()], rng.gen());
                let f = out.edges().len() - 1;
                out = subdivide(&out, f, [rng.gen(), rng.gen()], rng.gen());
            }
            _ => out = add_zero_chord(&out, e),
        }
    }
    out
}

/// Minimal elements of a set of weights in dominance order, sorted.
pub fn minimal(mut ws: Vec<Weight>) -> Vec<Weight> {
    ws.sort();
    ws.dedup();
    let keep: Vec<Weight> = ws
        .iter()
        .filter(|a| {
            !ws.iter()
                .any(|b| b.dominance_cmp(a).unwrap() == Dominance::Less)
        })
        .cloned()
        .collect();
    keep
}

/// Costs of every simple path from `s` to `t`, by depth-first search.
pub fn simple_path_costs(d: &DualDiskoid, s: usize, t: usize) -> Vec<Weight> {
    let mut adjacent: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); d.vertex_count()];
    for (i, e) in d.edges().iter().enumerate() {
        adjacent[e.from].push((e.to, i, true));
        adjacent[e.to].push((e.from, i, false));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; d.vertex_count()];
    fn walk(
        d: &DualDiskoid,
        adjacent: &[Vec<(usize, usize, bool)>],
        v: usize,
        t: usize,
        cost: Weight,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Weight>,
    ) {
        if v == t {
            out.push(cost);
            return;
        }
        on_path[v] = true;
        for &(w, e, forward) in &adjacent[v] {
            if !on_path[w] {
                let c = &cost + &traversal_cost(d, e, forward);
                walk(d, adjacent, w, t, c, on_path, out);
            }
        }
        on_path[v] = false;
    }
    walk(
        d,
        &adjacent,
        s,
        t,
        Weight::zero(d.n()),
        &mut on_path,
        &mut out,
    );
    out
}
