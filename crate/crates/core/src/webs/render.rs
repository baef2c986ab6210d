//! DOT and TikZ output.
//!
//! The TikZ drawing places boundary points on the frame (a circle, or a
//! triangle with its apex at the bottom) and internal vertices by Tutte's
//! barycentric embedding, which is planar for the 3-connected pieces that
//! occur and readable for the rest. The self-dual middle label `2i = n` is
//! drawn with a doubled stroke when n ≥ 4 (for n = 2 every edge would be).

use std::fmt::Write as _;

use super::{VertexKind, Web};

/// Where the boundary points go in a TikZ drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// A circle with the marked point at the bottom.
    Disk,
    /// A triangle with apex at the bottom; the counts split the boundary
    /// into left side (bottom→top), top cells and right side (top→bottom).
    Triangle {
        left: usize,
        top: usize,
        right: usize,
    },
}

fn is_doubled(n: usize, label: u32) -> bool {
    n >= 4 && 2 * label as usize == n
}

pub fn dot(web: &Web) -> String {
    let mut out = String::new();
    let boundary: Vec<String> = web.boundary().iter().map(|i| format!("w{i}")).collect();
    let _ = writeln!(out, "digraph web {{");
    let _ = writeln!(
        out,
        "  // SL({}) web, boundary {} read clockwise from the mark",
        web.n(),
        boundary.join(",")
    );
    let _ = writeln!(out, "  node [shape=point];");
    let _ = writeln!(out, "  mark [shape=diamond, label=\"\", width=0.15];");
    for (pos, &b) in web.boundary_vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{b} [shape=box, label=\"b{pos}\"];");
    }
    if let Some(&first) = web.boundary_vertices().first() {
        let _ = writeln!(out, "  mark -> v{first} [style=dotted, arrowhead=none];");
    }
    for edge in web.edges() {
        let doubled = is_doubled(web.n(), edge.label);
        let _ = write!(
            out,
            "  v{} -> v{} [label=\"w{}\"",
            edge.tail, edge.head, edge.label
        );
        if doubled {
            let _ = write!(out, ", color=\"black:invis:black\"");
        }
        let _ = writeln!(out, "];");
    }
    let _ = writeln!(out, "}}");
    out
}

fn frame_positions(web: &Web, frame: Frame) -> Vec<(f64, f64)> {
    let k = web.boundary_vertices().len();
    match frame {
        Frame::Disk => (0..k)
            .map(|i| {
                let t = (-90.0 - 360.0 * (i + 1) as f64 / (k + 1) as f64).to_radians();
                (2.5 * t.cos(), 2.5 * t.sin())
            })
            .collect(),
        Frame::Triangle { left, top, right } => {
            let m = top.max(1) as f64;
            let half = m / 2.0;
            let h = m;
            let mut pts = Vec::with_capacity(k);
            for j in 0..left {
                let t = (j as f64 + 0.5) / left as f64;
                pts.push((-half * t, h * t));
            }
            for j in 0..top {
                pts.push((-half + j as f64 + 0.5, h));
            }
            for j in 0..right {
                let t = 1.0 - (j as f64 + 0.5) / right as f64;
                pts.push((half * t, h * t));
            }
            pts
        }
    }
}

/// Tutte layout: boundary pinned, every internal vertex at the mean of its
/// neighbours.
fn layout(web: &Web, frame: Frame) -> Vec<(f64, f64)> {
    let mut pos = vec![(0.0, 0.0); web.vertices().len()];
    let pinned = frame_positions(web, frame);
    let start = match frame {
        Frame::Disk => (0.0, 0.0),
        Frame::Triangle { top, .. } => (0.0, top.max(1) as f64 * 0.6),
    };
    for p in pos.iter_mut() {
        *p = start;
    }
    for (&b, &p) in web.boundary_vertices().iter().zip(&pinned) {
        pos[b] = p;
    }
    let neighbours: Vec<Vec<usize>> = web
        .vertices()
        .iter()
        .map(|v| v.rotation.iter().map(|d| web.vertex_of(d.twin())).collect())
        .collect();
    for _ in 0..4000 {
        let mut moved = 0.0f64;
        for (v, vertex) in web.vertices().iter().enumerate() {
            if vertex.kind == VertexKind::Boundary || neighbours[v].is_empty() {
                continue;
            }
            let c = neighbours[v].len() as f64;
            let x = neighbours[v].iter().map(|&u| pos[u].0).sum::<f64>() / c;
            let y = neighbours[v].iter().map(|&u| pos[u].1).sum::<f64>() / c;
            moved = moved.max((x - pos[v].0).abs() + (y - pos[v].1).abs());
            pos[v] = (x, y);
        }
        if moved < 1e-9 {
            break;
        }
    }
    pos
}

fn coord(p: (f64, f64)) -> String {
    // Avoid "-0.000".
    let fix = |x: f64| {
        let r = (x * 1000.0).round() / 1000.0;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    format!("({:.3},{:.3})", fix(p.0), fix(p.1))
}

pub fn tikz(web: &Web) -> String {
    tikz_framed(web, Frame::Disk)
}

pub fn tikz_framed(web: &Web, frame: Frame) -> String {
    let pos = layout(web, frame);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\begin{{tikzpicture}}[ar/.style={{postaction={{decorate,decoration={{markings,mark=at position .5 with {{\\arrow{{>}}}}}}}}}},scale=0.5]"
    );
    match frame {
        Frame::Disk => {
            let _ = writeln!(out, "\\draw (0,0) circle(2.5);");
            let _ = writeln!(out, "\\fill (270:2.5) circle(3pt);");
        }
        Frame::Triangle { top, .. } => {
            let m = top.max(1) as f64;
            let _ = writeln!(
                out,
                "\\draw {} -- {} -- {} -- cycle;",
                coord((0.0, 0.0)),
                coord((-m / 2.0, m)),
                coord((m / 2.0, m))
            );
            for j in 1..top {
                let x = -m / 2.0 + j as f64;
                let _ = writeln!(
                    out,
                    "\\draw[dotted] {} -- {};",
                    coord((x, m)),
                    coord((x, m + 0.3))
                );
            }
            let _ = writeln!(out, "\\fill (0,0) circle(3pt);");
        }
    }
    let mut seen: Vec<((usize, usize), usize)> = Vec::new();
    for edge in web.edges() {
        let key = (edge.tail.min(edge.head), edge.tail.max(edge.head));
        let repeat = match seen.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => {
                *c += 1;
                *c
            }
            None => {
                seen.push((key, 0));
                0
            }
        };
        let mut style = String::from("ar");
        if is_doubled(web.n(), edge.label) {
            style.push_str(",double");
        }
        let path = if repeat == 0 {
            "--".to_owned()
        } else {
            let side = if repeat % 2 == 1 { "left" } else { "right" };
            format!("to[bend {side}={}]", 20 * repeat.div_ceil(2))
        };
        let _ = writeln!(
            out,
            "\\draw[{style}] {} {path} {} node[midway,auto] {{$\\omega_{}$}};",
            coord(pos[edge.tail]),
            coord(pos[edge.head]),
            edge.label
        );
    }
    let _ = writeln!(out, "\\end{{tikzpicture}}");
    out
}
