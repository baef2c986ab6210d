//! Faces of a web and its dual diskoid.
//!
//! Faces are traced on a framed map: the web plus a mark vertex `M` and
//! frame edges `M → b_0 → … → b_{k-1} → M` running clockwise around the
//! boundary. The frame closes the disk, so every face of the web is a face
//! of an ordinary planar map. The face outside the frame is discarded.

use super::{Dart, VertexKind, Web};

/// The web with its boundary framed, as half-edge rotations.
///
/// Half-edges `0..2E` are the web's darts (`2e + end`); frame edge `f_i`
/// has half-edges `2(E+i)` (tail) and `2(E+i)+1` (head).
#[derive(Clone, Debug)]
pub struct AugmentedMap {
    rot: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    pos: Vec<usize>,
    web_half_edges: usize,
    mark: usize,
}

/// The faces of an [`AugmentedMap`].
#[derive(Clone, Debug)]
pub struct FaceSet {
    /// Face to the left of each half-edge.
    pub face_of: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub outer: usize,
    /// `sectors[i]` is the face just inside frame edge `f_i`, so
    /// `sectors[0] = sectors[k]` is the marked sector.
    pub sectors: Vec<usize>,
}

impl AugmentedMap {
    pub fn new(web: &Web) -> AugmentedMap {
        let e = web.edges.len();
        let k = web.boundary.len();
        let nv = web.vertices.len() + 1;
        let mark = web.vertices.len();
        let frame = |i: usize| 2 * (e + i);
        let mut rot: Vec<Vec<usize>> = web
            .vertices
            .iter()
            .map(|v| v.rotation.iter().map(|d| d.half_edge()).collect())
            .collect();
        for (i, &b) in web.boundary.iter().enumerate() {
            debug_assert_eq!(web.vertices[b].kind, VertexKind::Boundary);
            let dart = web.vertices[b].rotation[0].half_edge();
            rot[b] = vec![frame(i) + 1, dart, frame(i + 1)];
        }
        rot.push(vec![frame(k) + 1, frame(0)]);
        let h = 2 * (e + k + 1);
        let mut vertex_of = vec![usize::MAX; h];
        let mut pos = vec![usize::MAX; h];
        for (v, r) in rot.iter().enumerate() {
            for (i, &he) in r.iter().enumerate() {
                vertex_of[he] = v;
                pos[he] = i;
            }
        }
        debug_assert_eq!(rot.len(), nv);
        AugmentedMap {
            rot,
            vertex_of,
            pos,
            web_half_edges: 2 * e,
            mark,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    /// The clockwise frame half-edge leaving the mark.
    pub fn outer_start(&self) -> usize {
        self.web_half_edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn position(&self, h: usize) -> usize {
        self.pos[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    pub fn is_web_half_edge(&self, h: usize) -> bool {
        h < self.web_half_edges
    }

    /// Next half-edge around the face on the left of `h`.
    pub fn next(&self, h: usize) -> usize {
        let t = h ^ 1;
        let r = &self.rot[self.vertex_of[t]];
        r[(self.pos[t] + r.len() - 1) % r.len()]
    }

    pub fn faces(&self) -> FaceSet {
        let h = self.half_edge_count();
        let mut face_of = vec![usize::MAX; h];
        let mut cycles = Vec::new();
        for start in 0..h {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cycle = Vec::new();
            let mut cur = start;
            while face_of[cur] == usize::MAX {
                face_of[cur] = id;
                cycle.push(cur);
                cur = self.next(cur);
            }
            cycles.push(cycle);
        }
        let frames = (h - self.web_half_edges) / 2;
        let sectors = (0..frames)
            .map(|i| face_of[self.web_half_edges + 2 * i + 1])
            .collect();
        FaceSet {
            outer: face_of[self.outer_start()],
            face_of,
            cycles,
            sectors,
        }
    }

    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for he in (0..self.half_edge_count()).step_by(2) {
            let (a, b) = (
                find(&mut parent, self.vertex_of[he]),
                find(&mut parent, self.vertex_of[he + 1]),
            );
            parent[a] = b;
        }
        (0..self.vertex_count())
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let v = self.vertex_count() as i64;
        let e = (self.half_edge_count() / 2) as i64;
        let f = self.faces().cycles.len() as i64;
        v - e + f
    }
}

/// A directed, labelled edge of the dual diskoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub from: usize,
    pub to: usize,
    pub label: u32,
}

/// The dual graph of a web: one vertex per face inside the disk, one edge
/// per web edge.
///
/// The dual of a web edge runs from the face on its right to the face on
/// its left and keeps its label. Dual vertices are numbered with the
/// boundary sectors first, in clockwise order from the marked sector.
#[derive(Clone, Debug)]
pub struct DualDiskoid {
    n: usize,
    vertex_count: usize,
    edges: Vec<DualEdge>,
    external: Vec<usize>,
    is_sector: Vec<bool>,
}

impl DualDiskoid {
    pub fn new(web: &Web) -> DualDiskoid {
        let map = AugmentedMap::new(web);
        let faces = map.faces();
        let mut id = vec![usize::MAX; faces.cycles.len()];
        let mut count = 0;
        let mut external = Vec::with_capacity(faces.sectors.len());
        for &f in &faces.sectors {
            if id[f] == usize::MAX {
                id[f] = count;
                count += 1;
            }
            external.push(id[f]);
        }
        let sector_count = count;
        for (f, slot) in id.iter_mut().enumerate() {
            if f != faces.outer && *slot == usize::MAX {
                *slot = count;
                count += 1;
            }
        }
        let edges = web
            .edges
            .iter()
            .enumerate()
            .map(|(e, edge)| DualEdge {
                from: id[faces.face_of[Dart::head(e).half_edge()]],
                to: id[faces.face_of[Dart::tail(e).half_edge()]],
                label: edge.label,
            })
            .collect();
        DualDiskoid {
            n: web.n,
            vertex_count: count,
            edges,
            external,
            is_sector: (0..count).map(|v| v < sector_count).collect(),
        }
    }

    /// Builds a diskoid directly; used by tests and by callers that already
    /// have a dual graph.
    pub fn from_parts(
        n: usize,
        vertex_count: usize,
        edges: Vec<DualEdge>,
        external: Vec<usize>,
    ) -> DualDiskoid {
        let mut is_sector = vec![false; vertex_count];
        for &v in &external {
            is_sector[v] = true;
        }
        DualDiskoid {
            n,
            vertex_count,
            edges,
            external,
            is_sector,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dual edge `e` is dual to web edge `e`.
    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    pub fn marked(&self) -> usize {
        self.external[0]
    }

    /// `v_0 = •, v_1, …, v_k = •`, clockwise.
    pub fn external(&self) -> &[usize] {
        &self.external
    }

    pub fn is_sector(&self, v: usize) -> bool {
        self.is_sector[v]
    }

    /// Dual vertices that are faces away from the boundary.
    pub fn internal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(|&v| !self.is_sector[v])
    }
}

#[cfg(test)]
mod tests {
    use crate::webs::fixtures::{sl2_cup, sl4_figure};
    use crate::webs::Web;

    #[test]
    fn figure_diskoid_shape() {
        let w = sl4_figure();
        let d = w.dual_diskoid();
        assert_eq!(d.vertex_count(), 5);
        assert_eq!(d.edges().len(), w.edges().len());
        assert_eq!(d.external().len(), 5);
        assert_eq!(d.external()[0], d.external()[4]);
        assert_eq!(d.internal_vertices().count(), 1);
        assert_eq!(w.internal_face_degrees(), [4]);
    }

    #[test]
    fn chirality_of_the_west_side() {
        // The web edge running down the west side of the square (NW→SW)
        // dualizes to an edge from the west sector into the central face.
        let w = sl4_figure();
        let d = w.dual_diskoid();
        let center = d.internal_vertices().next().unwrap();
        let west = d.external()[1];
        let e = &d.edges()[5];
        assert_eq!((w.edge(5).label, e.from, e.to), (1, west, center));
    }

    #[test]
    fn cup_diskoid() {
        let d = sl2_cup().dual_diskoid();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edges().len(), 1);
        assert_eq!(d.external(), [0, 1, 0]);
    }

    #[test]
    fn empty_web_has_one_sector() {
        let w = Web::empty(3);
        assert!(w.validate().is_valid());
        let d = w.dual_diskoid();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.external(), [0]);
    }
}
