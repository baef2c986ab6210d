//! Webs as marked planar maps.
//!
//! A [`Web`] is a rotation system: every vertex lists its darts in
//! counterclockwise order, and every edge is directed and labelled by a
//! fundamental-weight index in `0..n`. Boundary vertices are univalent and
//! listed clockwise starting just after the marked point.
//!
//! The flow carried by a dart out of its vertex is the edge label when the
//! dart is the tail and `n - label` when it is the head, so an edge
//! `(i, tail→head)` and `(n-i, head→tail)` carry the same flows.

mod faces;
pub mod json;
pub mod render;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::dual_label;

pub use faces::{AugmentedMap, DualDiskoid, DualEdge, FaceSet};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One end of an edge, seen from the vertex it is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

impl Dart {
    pub fn new(edge: EdgeId, end: End) -> Dart {
        Dart { edge, end }
    }

    pub fn tail(edge: EdgeId) -> Dart {
        Dart {
            edge,
            end: End::Tail,
        }
    }

    pub fn head(edge: EdgeId) -> Dart {
        Dart {
            edge,
            end: End::Head,
        }
    }

    pub fn twin(self) -> Dart {
        Dart {
            edge: self.edge,
            end: self.end.other(),
        }
    }

    /// Half-edge id `2·edge + end`, used by the JSON schema.
    pub fn half_edge(self) -> usize {
        2 * self.edge + usize::from(self.end == End::Head)
    }

    pub fn from_half_edge(h: usize) -> Dart {
        Dart {
            edge: h / 2,
            end: if h.is_multiple_of(2) {
                End::Tail
            } else {
                End::Head
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Internal,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub rotation: Vec<Dart>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: u32,
}

impl Edge {
    pub fn endpoint(&self, end: End) -> VertexId {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }

    fn endpoint_mut(&mut self, end: End) -> &mut VertexId {
        match end {
            End::Tail => &mut self.tail,
            End::Head => &mut self.head,
        }
    }
}

/// Something wrong with a web, as found by [`Web::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Structural problem in the rotation system.
    Rotation(String),
    LabelOutOfRange {
        edge: EdgeId,
        label: u32,
    },
    /// Inflow minus outflow at the vertex, mod n.
    Unbalanced {
        vertex: VertexId,
        excess: u32,
    },
    NotTrivalent {
        vertex: VertexId,
        degree: usize,
    },
    ZeroLabel {
        edge: EdgeId,
    },
    /// Some part of the web does not reach the boundary.
    Disconnected {
        components: usize,
    },
    /// The rotation system is not a planar map of the disk.
    Euler {
        characteristic: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Rotation(msg) => write!(f, "rotation system: {msg}"),
            Violation::LabelOutOfRange { edge, label } => {
                write!(f, "edge {edge} has label {label} out of range")
            }
            Violation::Unbalanced { vertex, excess } => {
                write!(
                    f,
                    "vertex {vertex} is unbalanced (inflow - outflow = {excess} mod n)"
                )
            }
            Violation::NotTrivalent { vertex, degree } => {
                write!(f, "internal vertex {vertex} has degree {degree}")
            }
            Violation::ZeroLabel { edge } => write!(f, "edge {edge} has label 0"),
            Violation::Disconnected { components } => {
                write!(
                    f,
                    "{components} components; every component must touch the boundary"
                )
            }
            Violation::Euler { characteristic } => {
                write!(
                    f,
                    "V - E + F = {characteristic} on the framed map, expected 2"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A web in the disk with a marked boundary point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    boundary: Vec<VertexId>,
}

impl Web {
    /// Assembles a web, rejecting structurally inconsistent rotation systems.
    pub fn from_parts(
        n: usize,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        boundary: Vec<VertexId>,
    ) -> Result<Web> {
        let web = Web {
            n,
            vertices,
            edges,
            boundary,
        };
        let problems = web.structural_violations();
        if problems.is_empty() {
            Ok(web)
        } else {
            let msg: Vec<String> = problems.iter().map(ToString::to_string).collect();
            Err(Error::Corruption(msg.join("; ")))
        }
    }

    pub fn empty(n: usize) -> Web {
        Web {
            n,
            vertices: Vec::new(),
            edges: Vec::new(),
            boundary: Vec::new(),
        }
    }

    /// A single vertex-free arc between two boundary points, directed from
    /// the first to the second.
    pub fn arc(n: usize, label: u32) -> Web {
        let port = |end| Vertex {
            kind: VertexKind::Boundary,
            rotation: vec![Dart::new(0, end)],
        };
        Web {
            n,
            vertices: vec![port(End::Tail), port(End::Head)],
            edges: vec![Edge {
                tail: 0,
                head: 1,
                label,
            }],
            boundary: vec![0, 1],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    /// Boundary vertices, clockwise from the marked point.
    pub fn boundary_vertices(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Internal)
            .count()
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.edges[d.edge].endpoint(d.end)
    }

    /// Flow carried by `d` away from its vertex.
    pub fn flow_out(&self, d: Dart) -> u32 {
        let label = self.edges[d.edge].label;
        match d.end {
            End::Tail => label,
            End::Head => dual_label(self.n, label),
        }
    }

    /// The boundary type: the inward flow at each boundary point, clockwise
    /// from the marked point. An edge pointing into the disk with label `i`
    /// reads `ω_i`; one pointing out reads `ω_{n-i}`.
    pub fn boundary(&self) -> Vec<usize> {
        self.boundary
            .iter()
            .map(|&b| self.flow_out(self.vertices[b].rotation[0]) as usize)
            .collect()
    }

    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let nv = self.vertices.len();
        if self.n < 2 {
            out.push(Violation::Rotation(format!(
                "rank parameter {} is below 2",
                self.n
            )));
        }
        let mut seen = vec![[false; 2]; self.edges.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.tail >= nv || edge.head >= nv {
                out.push(Violation::Rotation(format!(
                    "edge {e} has an endpoint out of range"
                )));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (v, vertex) in self.vertices.iter().enumerate() {
            for d in &vertex.rotation {
                if d.edge >= self.edges.len() {
                    out.push(Violation::Rotation(format!(
                        "vertex {v} lists unknown edge {}",
                        d.edge
                    )));
                    continue;
                }
                if self.vertex_of(*d) != v {
                    out.push(Violation::Rotation(format!(
                        "vertex {v} lists a dart of edge {} that ends elsewhere",
                        d.edge
                    )));
                }
                let slot = &mut seen[d.edge][usize::from(d.end == End::Head)];
                if *slot {
                    out.push(Violation::Rotation(format!(
                        "dart of edge {} listed twice",
                        d.edge
                    )));
                }
                *slot = true;
            }
        }
        for (e, s) in seen.iter().enumerate() {
            if !(s[0] && s[1]) {
                out.push(Violation::Rotation(format!(
                    "edge {e} is missing from a rotation"
                )));
            }
        }
        let mut on_boundary = vec![false; nv];
        for &b in &self.boundary {
            if b >= nv {
                out.push(Violation::Rotation(format!(
                    "boundary vertex {b} out of range"
                )));
                continue;
            }
            if on_boundary[b] {
                out.push(Violation::Rotation(format!(
                    "boundary vertex {b} listed twice"
                )));
            }
            on_boundary[b] = true;
        }
        for (v, vertex) in self.vertices.iter().enumerate() {
            let listed = on_boundary[v];
            match vertex.kind {
                VertexKind::Boundary if !listed => out.push(Violation::Rotation(format!(
                    "boundary vertex {v} missing from the boundary order"
                ))),
                VertexKind::Internal if listed => out.push(Violation::Rotation(format!(
                    "internal vertex {v} listed on the boundary"
                ))),
                VertexKind::Boundary if vertex.rotation.len() != 1 => {
                    out.push(Violation::Rotation(format!(
                        "boundary vertex {v} has degree {}",
                        vertex.rotation.len()
                    )))
                }
                _ => {}
            }
        }
        out
    }

    /// Full check: rotation system, labels, balance, trivalence, planarity.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.structural_violations();
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.label as usize >= self.n {
                violations.push(Violation::LabelOutOfRange {
                    edge: e,
                    label: edge.label,
                });
            } else if edge.label == 0 {
                violations.push(Violation::ZeroLabel { edge: e });
            }
        }
        for (v, vertex) in self.vertices.iter().enumerate() {
            if vertex.kind != VertexKind::Internal {
                continue;
            }
            if vertex.rotation.len() != 3 {
                violations.push(Violation::NotTrivalent {
                    vertex: v,
                    degree: vertex.rotation.len(),
                });
            }
            let out: u64 = vertex
                .rotation
                .iter()
                .map(|&d| u64::from(self.flow_out(d)))
                .sum();
            let excess = (self.n as u64 - out % self.n as u64) % self.n as u64;
            if excess != 0 {
                violations.push(Violation::Unbalanced {
                    vertex: v,
                    excess: excess as u32,
                });
            }
        }
        let map = AugmentedMap::new(self);
        let components = map.components();
        if components > 1 {
            violations.push(Violation::Disconnected { components });
        }
        let chi = map.euler_characteristic();
        if chi != 1 + components as i64 {
            violations.push(Violation::Euler {
                characteristic: chi,
            });
        }
        ValidationReport { violations }
    }

    /// Deletes 0-labelled edges and smooths the resulting 2-valent vertices.
    pub fn normalize(&self) -> Result<Web> {
        let mut draft = Draft::from_web(self);
        draft.normalize()?;
        draft.finish()
    }

    pub fn dual_diskoid(&self) -> DualDiskoid {
        DualDiskoid::new(self)
    }

    pub fn faces(&self) -> FaceSet {
        AugmentedMap::new(self).faces()
    }

    /// Number of edges around each face that does not touch the boundary.
    pub fn internal_face_degrees(&self) -> Vec<usize> {
        let map = AugmentedMap::new(self);
        let faces = map.faces();
        faces
            .cycles
            .iter()
            .filter(|c| c.iter().all(|&h| map.is_web_half_edge(h)))
            .map(Vec::len)
            .collect()
    }

    /// A code that is equal for two webs exactly when they are isomorphic as
    /// marked rotation systems with matching flows.
    pub fn canonical_code(&self) -> Vec<u64> {
        let map = AugmentedMap::new(self);
        let nv = map.vertex_count();
        let mut index = vec![usize::MAX; nv];
        let mut entry = vec![0usize; nv];
        let mut queue = VecDeque::new();
        let root = map.mark();
        index[root] = 0;
        entry[root] = map.outer_start();
        queue.push_back(root);
        let mut next_index = 1;
        let mut code = vec![self.n as u64, nv as u64, map.half_edge_count() as u64];
        while let Some(v) = queue.pop_front() {
            let rot = map.rotation(v);
            let start = map.position(entry[v]);
            code.push(rot.len() as u64);
            for i in 0..rot.len() {
                let h = rot[(start + i) % rot.len()];
                let twin = h ^ 1;
                let w = map.vertex_of(twin);
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    entry[w] = twin;
                    next_index += 1;
                    queue.push_back(w);
                }
                let label = if map.is_web_half_edge(h) {
                    u64::from(self.flow_out(Dart::from_half_edge(h)))
                } else {
                    u64::MAX
                };
                code.push(label);
                code.push(index[w] as u64);
            }
        }
        code
    }

    /// Marked-point-preserving isomorphism up to `(i, →) ≡ (n-i, ←)`.
    pub fn isomorphic(&self, other: &Web) -> bool {
        self.n == other.n
            && self.vertices.len() == other.vertices.len()
            && self.edges.len() == other.edges.len()
            && self.boundary() == other.boundary()
            && self.canonical_code() == other.canonical_code()
    }

    /// Same web with every edge whose label is in `flip` stored reversed with
    /// the dual label.
    pub fn with_reversed_edges(&self, flip: impl Fn(EdgeId) -> bool) -> Web {
        let mut web = self.clone();
        for (e, edge) in web.edges.iter_mut().enumerate() {
            if flip(e) {
                std::mem::swap(&mut edge.tail, &mut edge.head);
                edge.label = dual_label(self.n, edge.label);
            }
        }
        for vertex in &mut web.vertices {
            for d in &mut vertex.rotation {
                if flip(d.edge) {
                    *d = d.twin();
                }
            }
        }
        web
    }
}

/// Offsets of an absorbed web inside a [`Draft`].
#[derive(Clone, Copy, Debug)]
pub struct Offsets {
    pub vertex: usize,
    pub edge: usize,
}

/// A mutable web under construction. Deleted items stay as tombstones until
/// [`Draft::finish`], so vertex ids remain stable while editing.
#[derive(Clone, Debug)]
pub struct Draft {
    n: usize,
    vertices: Vec<Option<Vertex>>,
    edges: Vec<Option<Edge>>,
    boundary: Vec<VertexId>,
}

impl Draft {
    pub fn new(n: usize) -> Draft {
        Draft {
            n,
            vertices: Vec::new(),
            edges: Vec::new(),
            boundary: Vec::new(),
        }
    }

    pub fn from_web(web: &Web) -> Draft {
        let mut d = Draft::new(web.n);
        d.absorb(web);
        d.boundary = web.boundary.clone();
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VertexId {
        self.vertices.push(Some(Vertex {
            kind,
            rotation: Vec::new(),
        }));
        self.vertices.len() - 1
    }

    /// Adds an edge without touching rotations; see [`Draft::set_rotation`].
    pub fn add_edge(&mut self, tail: VertexId, head: VertexId, label: u32) -> EdgeId {
        self.edges.push(Some(Edge { tail, head, label }));
        self.edges.len() - 1
    }

    pub fn set_rotation(&mut self, v: VertexId, rotation: Vec<Dart>) {
        self.vertex_mut(v).rotation = rotation;
    }

    pub fn set_boundary(&mut self, boundary: Vec<VertexId>) {
        self.boundary = boundary;
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.vertices.get(v).is_some_and(Option::is_some)
    }

    /// Copies `web` in; its ids are shifted by the returned offsets. The
    /// boundary order of the draft is left alone.
    pub fn absorb(&mut self, web: &Web) -> Offsets {
        let off = Offsets {
            vertex: self.vertices.len(),
            edge: self.edges.len(),
        };
        for v in &web.vertices {
            self.vertices.push(Some(Vertex {
                kind: v.kind,
                rotation: v
                    .rotation
                    .iter()
                    .map(|d| Dart::new(d.edge + off.edge, d.end))
                    .collect(),
            }));
        }
        for e in &web.edges {
            self.edges.push(Some(Edge {
                tail: e.tail + off.vertex,
                head: e.head + off.vertex,
                label: e.label,
            }));
        }
        off
    }

    fn vertex_mut(&mut self, v: VertexId) -> &mut Vertex {
        self.vertices[v].as_mut().expect("live vertex")
    }

    fn vertex(&self, v: VertexId) -> &Vertex {
        self.vertices[v].as_ref().expect("live vertex")
    }

    fn edge(&self, e: EdgeId) -> &Edge {
        self.edges[e].as_ref().expect("live edge")
    }

    fn flow_out(&self, d: Dart) -> u32 {
        let label = self.edge(d.edge).label;
        match d.end {
            End::Tail => label,
            End::Head => dual_label(self.n, label),
        }
    }

    fn port_dart(&self, v: VertexId) -> Result<Dart> {
        let vertex = self
            .vertices
            .get(v)
            .and_then(Option::as_ref)
            .ok_or_else(|| Error::Corruption(format!("vertex {v} does not exist")))?;
        if vertex.kind != VertexKind::Boundary || vertex.rotation.len() != 1 {
            return Err(Error::Corruption(format!(
                "vertex {v} is not a boundary port"
            )));
        }
        Ok(vertex.rotation[0])
    }

    /// Joins two boundary ports: the edge into `x` and the edge out of `y`
    /// become one edge and both ports disappear. The flow arriving at `x`
    /// must equal the flow leaving `y`.
    pub fn glue(&mut self, x: VertexId, y: VertexId) -> Result<()> {
        let dx = self.port_dart(x)?;
        let dy = self.port_dart(y)?;
        if dx.edge == dy.edge {
            return Err(Error::Corruption(format!(
                "gluing ports {x} and {y} would close a loop"
            )));
        }
        let arriving = self.flow_out(dx.twin());
        let leaving = self.flow_out(dy);
        if arriving != leaving {
            return Err(Error::Corruption(format!(
                "glued flows disagree: {arriving} arrives at port {x}, {leaving} leaves port {y}"
            )));
        }
        let far = dy.twin();
        let q = self.edge(far.edge).endpoint(far.end);
        *self.edges[dx.edge]
            .as_mut()
            .expect("live edge")
            .endpoint_mut(dx.end) = q;
        for d in &mut self.vertex_mut(q).rotation {
            if *d == far {
                *d = dx;
            }
        }
        self.edges[dy.edge] = None;
        self.vertices[x] = None;
        self.vertices[y] = None;
        self.boundary.retain(|&b| b != x && b != y);
        Ok(())
    }

    fn delete_edge(&mut self, e: EdgeId) {
        let edge = self.edges[e].take().expect("live edge");
        for v in [edge.tail, edge.head] {
            if let Some(vertex) = self.vertices[v].as_mut() {
                vertex.rotation.retain(|d| d.edge != e);
            }
        }
    }

    /// Removes every 0-labelled edge (ports included), drops isolated
    /// vertices, and smooths 2-valent vertices into single edges. Smoothing
    /// keeps the label and direction of the edge listed first in the
    /// vertex's rotation.
    pub fn normalize(&mut self) -> Result<()> {
        for e in 0..self.edges.len() {
            if self.edges[e].is_some_and(|edge| edge.label == 0) {
                self.delete_edge(e);
            }
        }
        for v in 0..self.vertices.len() {
            let Some(vertex) = &self.vertices[v] else {
                continue;
            };
            match (vertex.kind, vertex.rotation.len()) {
                (_, 0) => {
                    self.vertices[v] = None;
                    self.boundary.retain(|&b| b != v);
                }
                (VertexKind::Internal, 1) => {
                    return Err(Error::Corruption(format!(
                        "vertex {v} is left dangling by normalization"
                    )));
                }
                _ => {}
            }
        }
        for v in 0..self.vertices.len() {
            let Some(vertex) = &self.vertices[v] else {
                continue;
            };
            if vertex.kind == VertexKind::Internal && vertex.rotation.len() == 2 {
                self.smooth(v)?;
            }
        }
        Ok(())
    }

    fn smooth(&mut self, v: VertexId) -> Result<()> {
        let [d0, d1] = self.vertex(v).rotation[..] else {
            unreachable!("caller checks degree")
        };
        if d0.edge == d1.edge {
            return Err(Error::Corruption(format!(
                "vertex {v} carries a closed loop"
            )));
        }
        if !((self.flow_out(d0) + self.flow_out(d1)) as usize).is_multiple_of(self.n) {
            return Err(Error::Corruption(format!(
                "2-valent vertex {v} joins edges with inconsistent labels"
            )));
        }
        let far = d1.twin();
        let q = self.edge(far.edge).endpoint(far.end);
        *self.edges[d0.edge]
            .as_mut()
            .expect("live edge")
            .endpoint_mut(d0.end) = q;
        for d in &mut self.vertex_mut(q).rotation {
            if *d == far {
                *d = d0;
            }
        }
        self.edges[d1.edge] = None;
        self.vertices[v] = None;
        Ok(())
    }

    /// Compacts ids and checks the rotation system.
    pub fn finish(self) -> Result<Web> {
        let mut vmap = vec![usize::MAX; self.vertices.len()];
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if let Some(edge) = edge {
                emap[e] = edges.len();
                edges.push(*edge);
            }
        }
        for (v, vertex) in self.vertices.iter().enumerate() {
            if vertex.is_some() {
                vmap[v] = vertices.len();
                vertices.push(Vertex {
                    kind: VertexKind::Internal,
                    rotation: Vec::new(),
                });
            }
        }
        for (v, vertex) in self.vertices.into_iter().enumerate() {
            if let Some(vertex) = vertex {
                let mut rotation = Vec::with_capacity(vertex.rotation.len());
                for d in vertex.rotation {
                    if emap[d.edge] == usize::MAX {
                        return Err(Error::Corruption(format!(
                            "vertex {v} refers to a deleted edge"
                        )));
                    }
                    rotation.push(Dart::new(emap[d.edge], d.end));
                }
                vertices[vmap[v]] = Vertex {
                    kind: vertex.kind,
                    rotation,
                };
            }
        }
        for edge in &mut edges {
            if vmap[edge.tail] == usize::MAX || vmap[edge.head] == usize::MAX {
                return Err(Error::Corruption(
                    "an edge refers to a deleted vertex".into(),
                ));
            }
            edge.tail = vmap[edge.tail];
            edge.head = vmap[edge.head];
        }
        let boundary = self
            .boundary
            .iter()
            .map(|&b| {
                if vmap[b] == usize::MAX {
                    Err(Error::Corruption(format!(
                        "boundary vertex {b} was deleted"
                    )))
                } else {
                    Ok(vmap[b])
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Web::from_parts(self.n, vertices, edges, boundary)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn figure_web_is_valid() {
        let w = sl4_figure();
        let report = w.validate();
        assert!(report.is_valid(), "{report}");
        assert_eq!(w.boundary(), [1, 3, 1, 3]);
        assert_eq!(w.internal_vertex_count(), 4);
    }

    #[test]
    fn cup_is_valid() {
        let w = sl2_cup();
        assert!(w.validate().is_valid());
        assert_eq!(w.boundary(), [1, 1]);
    }

    #[test]
    fn unbalanced_vertex_is_reported() {
        let mut d = Draft::new(4);
        let b: Vec<_> = (0..3).map(|_| d.add_vertex(VertexKind::Boundary)).collect();
        let x = d.add_vertex(VertexKind::Internal);
        let e: Vec<_> = (0..3).map(|i| d.add_edge(b[i], x, 1)).collect();
        for i in 0..3 {
            d.set_rotation(b[i], vec![Dart::tail(e[i])]);
        }
        d.set_rotation(x, e.iter().rev().map(|&e| Dart::head(e)).collect());
        d.set_boundary(b);
        let w = d.finish().unwrap();
        let report = w.validate();
        assert_eq!(
            report.violations,
            [Violation::Unbalanced {
                vertex: 3,
                excess: 3
            }]
        );
    }

    #[test]
    fn broken_rotation_is_rejected() {
        let mut v = sl2_cup().vertices.clone();
        v[1].rotation = vec![Dart::tail(0)];
        assert!(matches!(
            Web::from_parts(2, v, sl2_cup().edges.clone(), vec![0, 1]),
            Err(Error::Corruption(_))
        ));
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // Reversing the cyclic order at one corner makes the map non-planar.
        let w = sl4_figure();
        let mut vertices = w.vertices.clone();
        vertices[5].rotation.swap(1, 2);
        let bad = Web::from_parts(4, vertices, w.edges.clone(), w.boundary.clone()).unwrap();
        assert!(bad
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Euler { .. })));
    }

    #[test]
    fn normalize_without_zero_edges_is_identity() {
        let w = sl4_figure();
        assert_eq!(w.normalize().unwrap(), w);
    }

    #[test]
    fn normalize_smooths_zero_crossings() {
        // A b-strand with two 2-valent vertices left by a 0-rung.
        let mut d = Draft::new(4);
        let p = d.add_vertex(VertexKind::Boundary);
        let q = d.add_vertex(VertexKind::Boundary);
        let u = d.add_vertex(VertexKind::Internal);
        let l = d.add_vertex(VertexKind::Internal);
        let z = d.add_vertex(VertexKind::Boundary);
        let e_in = d.add_edge(p, l, 2);
        let rung = d.add_edge(l, u, 2);
        let e_out = d.add_edge(u, q, 2);
        let zero = d.add_edge(z, u, 0);
        d.set_rotation(p, vec![Dart::tail(e_in)]);
        d.set_rotation(q, vec![Dart::head(e_out)]);
        d.set_rotation(z, vec![Dart::tail(zero)]);
        d.set_rotation(
            u,
            vec![Dart::tail(e_out), Dart::head(zero), Dart::head(rung)],
        );
        d.set_rotation(l, vec![Dart::tail(rung), Dart::head(e_in)]);
        d.set_boundary(vec![p, z, q]);
        let w = d.finish().unwrap();
        let n = w.normalize().unwrap();
        assert_eq!(n.edges().len(), 1);
        assert_eq!(n.internal_vertex_count(), 0);
        assert_eq!(n.boundary(), [2, 2]);
        assert!(n.validate().is_valid());
    }

    #[test]
    fn normalize_rejects_inconsistent_smoothing() {
        let mut d = Draft::new(4);
        let p = d.add_vertex(VertexKind::Boundary);
        let q = d.add_vertex(VertexKind::Boundary);
        let v = d.add_vertex(VertexKind::Internal);
        let a = d.add_edge(p, v, 1);
        let b = d.add_edge(v, q, 2);
        d.set_rotation(p, vec![Dart::tail(a)]);
        d.set_rotation(q, vec![Dart::head(b)]);
        d.set_rotation(v, vec![Dart::head(a), Dart::tail(b)]);
        d.set_boundary(vec![p, q]);
        let w = d.finish().unwrap();
        assert!(matches!(w.normalize(), Err(Error::Corruption(_))));
    }

    #[test]
    fn isomorphism_ignores_storage_direction() {
        let w = sl4_figure();
        assert!(w.isomorphic(&w));
        let flipped = w.with_reversed_edges(|e| e % 2 == 1);
        assert_ne!(flipped, w);
        assert!(w.isomorphic(&flipped));
    }

    #[test]
    fn isomorphism_sees_the_marked_point() {
        let w = sl4_figure();
        let mut shifted = w.clone();
        shifted.boundary.rotate_left(1);
        assert!(!w.isomorphic(&shifted));
    }

    #[test]
    fn glue_merges_edges() {
        let mut d = Draft::new(3);
        let a = d.absorb(&Web::arc(3, 1));
        let b = d.absorb(&Web::arc(3, 1));
        d.glue(a.vertex + 1, b.vertex).unwrap();
        d.set_boundary(vec![a.vertex, b.vertex + 1]);
        let w = d.finish().unwrap();
        assert_eq!(w.edges().len(), 1);
        assert_eq!(w.boundary(), [1, 2]);

        let mut d = Draft::new(3);
        let a = d.absorb(&Web::arc(3, 1));
        let b = d.absorb(&Web::arc(3, 2));
        assert!(d.glue(a.vertex + 1, b.vertex).is_err());
    }
}
