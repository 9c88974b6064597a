//! Combinatorial plane embeddings: rotation systems, face traversal,
//! duals, Hamiltonian duals, and face stacking.
//!
//! No planarity testing happens here. Every embedded graph enters with an
//! explicit rotation system (from a constructor or a `.rot` file) and the
//! genus is verified by the Euler count. Face traversal convention: from
//! the directed edge (u, v), the next directed edge is (v, w) where w is
//! the successor of u in v's rotation. Rotations are read as clockwise
//! neighbor orders; a reflected embedding yields an isomorphic dual.

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, HamCycle, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("rotation of vertex {0} is not a permutation of its neighbors")]
    RotationMismatch(VertexId),
    #[error("embedding is not genus zero")]
    NotGenusZero,
    #[error("graph is not maximal planar")]
    NotMaximalPlanar,
    #[error("face {0} has length {1}, expected a triangle")]
    NonTriangularFace(usize, usize),
    #[error("dual has a loop at face {0} (bridge in the primal graph)")]
    DualLoop(usize),
    #[error("dual has parallel edges between faces {0} and {1} (they share two or more edges)")]
    DualNotSimple(usize, usize),
    #[error("embedded graph must be connected")]
    NotConnected,
    #[error("rot format error on line {line}: {msg}")]
    RotParse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One face of an embedding: a closed walk of directed edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    edges: Vec<(VertexId, VertexId)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn directed_edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Vertices in walk order (tails of the directed edges).
    pub fn vertices(&self) -> Vec<VertexId> {
        self.edges.iter().map(|&(u, _)| u).collect()
    }

    pub fn contains_undirected(&self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        self.edges
            .iter()
            .any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
    }
}

/// Which side of a Hamiltonian cycle a face lies on. `Inside` is the side
/// of the face to the left of the first cycle edge; the names are a
/// convention, not a geometric claim.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CycleSide {
    Inside,
    Outside,
}

/// One side of a Hamiltonian dual: the subgraph of the dual induced by
/// the faces on that side, with the face index each dual vertex stands for.
#[derive(Clone, Debug)]
pub struct SidePart {
    pub graph: Graph,
    pub faces: Vec<usize>,
    /// True when two faces of this side share two or more edges; the
    /// simple `graph` field cannot represent that, and the side is then
    /// certainly not a tree.
    pub has_parallel_edges: bool,
}

#[derive(Clone, Debug)]
pub struct HamiltonianDual {
    pub side_of_face: Vec<CycleSide>,
    pub inside: SidePart,
    pub outside: SidePart,
}

/// A graph together with a rotation system (cyclic neighbor order per
/// vertex). Immutable; operations return new embeddings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddedGraph {
    graph: Graph,
    rot: Vec<Vec<VertexId>>,
}

impl EmbeddedGraph {
    pub fn new(graph: Graph, rot: Vec<Vec<VertexId>>) -> Result<EmbeddedGraph, EmbedError> {
        if rot.len() != graph.order() {
            return Err(EmbedError::RotationMismatch(rot.len().min(graph.order())));
        }
        for v in graph.vertices() {
            let mut sorted = rot[v].clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbedError::RotationMismatch(v));
            }
        }
        Ok(EmbeddedGraph { graph, rot })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Successor of `u` in the rotation at `v`.
    fn succ(&self, v: VertexId, u: VertexId) -> VertexId {
        let list = &self.rot[v];
        let pos = list
            .iter()
            .position(|&w| w == u)
            .expect("u must be a neighbor of v");
        list[(pos + 1) % list.len()]
    }

    /// All faces, each starting at its least directed edge, listed in
    /// order of those least edges.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.order();
        let mut visited = vec![false; n * n];
        let mut out = Vec::new();
        for u in self.graph.vertices() {
            for &v in self.graph.neighbors(u) {
                if visited[u * n + v] {
                    continue;
                }
                let mut edges = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    visited[a * n + b] = true;
                    edges.push((a, b));
                    let next = self.succ(b, a);
                    a = std::mem::replace(&mut b, next);
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                out.push(Face { edges });
            }
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Euler check: n - e + f = 2 under face traversal (connected graphs).
    pub fn check_genus_zero(&self) -> bool {
        self.graph.is_connected()
            && self.order() + self.face_count() == self.graph.size() + 2
    }

    /// Genus zero, connected, order >= 3, every face a triangle.
    pub fn is_maximal_planar(&self) -> bool {
        self.order() >= 3
            && self.check_genus_zero()
            && self.faces().iter().all(|f| f.len() == 3)
    }

    /// 4-connected maximal planar graph.
    pub fn is_4mp(&self) -> bool {
        self.is_maximal_planar() && self.graph.vertex_connectivity() >= 4
    }

    /// Dual of a 4-connected maximal planar graph: 3-connected cubic
    /// planar with no nontrivial 3-edge cut.
    pub fn is_4mp_dual(&self) -> bool {
        self.graph.is_cubic()
            && self.check_genus_zero()
            && self.graph.vertex_connectivity() >= 3
            && !self
                .graph
                .has_nontrivial_3_edge_cut()
                .expect("cubic and connected checked above")
    }

    /// Planar dual: one vertex per face, adjacency per shared edge, with
    /// the rotation induced by face boundary order. Errors when the dual
    /// would not be simple.
    pub fn dual(&self) -> Result<EmbeddedGraph, EmbedError> {
        if !self.check_genus_zero() {
            return Err(EmbedError::NotGenusZero);
        }
        let n = self.order();
        let faces = self.faces();
        let mut face_of = vec![usize::MAX; n * n];
        for (i, f) in faces.iter().enumerate() {
            for &(u, v) in f.directed_edges() {
                face_of[u * n + v] = i;
            }
        }
        let mut rot = Vec::with_capacity(faces.len());
        let mut edges = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            let mut ring = Vec::with_capacity(f.len());
            for &(u, v) in f.directed_edges() {
                let j = face_of[v * n + u];
                if j == i {
                    return Err(EmbedError::DualLoop(i));
                }
                if ring.contains(&j) {
                    return Err(EmbedError::DualNotSimple(i.min(j), i.max(j)));
                }
                ring.push(j);
                if i < j {
                    edges.push((i, j));
                }
            }
            rot.push(ring);
        }
        let dual_graph = Graph::from_edges(faces.len(), &edges)?;
        let dual = EmbeddedGraph::new(dual_graph, rot)?;
        debug_assert!(dual.check_genus_zero(), "dual of a genus-zero embedding");
        Ok(dual)
    }

    /// Splits the dual along a Hamiltonian cycle: faces are classified by
    /// side (dual edges crossing the cycle are those whose shared primal
    /// edge lies on the cycle), and each side's induced dual subgraph is
    /// returned.
    pub fn hamiltonian_dual(&self, c: &HamCycle) -> Result<HamiltonianDual, EmbedError> {
        if !self.check_genus_zero() {
            return Err(EmbedError::NotGenusZero);
        }
        // revalidate the cycle against this graph
        let c = HamCycle::new(&self.graph, c.vertices().to_vec())?;
        let n = self.order();
        let faces = self.faces();
        let mut face_of = vec![usize::MAX; n * n];
        for (i, f) in faces.iter().enumerate() {
            for &(u, v) in f.directed_edges() {
                face_of[u * n + v] = i;
            }
        }
        let mut on_cycle = vec![false; n * n];
        for e in c.edges() {
            let (u, v) = e.endpoints();
            on_cycle[u * n + v] = true;
            on_cycle[v * n + u] = true;
        }
        // flood fill across non-crossing dual edges
        let mut side: Vec<Option<CycleSide>> = vec![None; faces.len()];
        let (c0, c1) = (c.vertices()[0], c.vertices()[1]);
        let seed = face_of[c0 * n + c1];
        let mut stack = vec![seed];
        side[seed] = Some(CycleSide::Inside);
        while let Some(i) = stack.pop() {
            for &(u, v) in faces[i].directed_edges() {
                if on_cycle[u * n + v] {
                    continue;
                }
                let j = face_of[v * n + u];
                if side[j].is_none() {
                    side[j] = side[i];
                    stack.push(j);
                }
            }
        }
        let other = face_of[c1 * n + c0];
        if side[other].is_some() {
            // the cycle does not separate the faces; not a genus-zero
            // Hamiltonian cycle situation
            return Err(EmbedError::NotGenusZero);
        }
        side[other] = Some(CycleSide::Outside);
        let mut stack = vec![other];
        while let Some(i) = stack.pop() {
            for &(u, v) in faces[i].directed_edges() {
                if on_cycle[u * n + v] {
                    continue;
                }
                let j = face_of[v * n + u];
                if side[j].is_none() {
                    side[j] = side[i];
                    stack.push(j);
                }
            }
        }
        let side_of_face: Vec<CycleSide> = side
            .iter()
            .map(|s| s.expect("every face is reached from one of the two seeds"))
            .collect();

        let build = |want: CycleSide| -> SidePart {
            let members: Vec<usize> = (0..faces.len())
                .filter(|&i| side_of_face[i] == want)
                .collect();
            let index_of = |i: usize| members.binary_search(&i).expect("member face");
            let mut edges = Vec::new();
            let mut parallel = false;
            for &i in &members {
                for &(u, v) in faces[i].directed_edges() {
                    if on_cycle[u * n + v] {
                        continue;
                    }
                    let j = face_of[v * n + u];
                    debug_assert_eq!(side_of_face[j], want, "non-crossing edges stay inside");
                    if i < j {
                        let pair = (index_of(i), index_of(j));
                        if edges.contains(&pair) {
                            parallel = true;
                        } else {
                            edges.push(pair);
                        }
                    }
                }
            }
            SidePart {
                graph: Graph::from_edges(members.len(), &edges)
                    .expect("side subgraph is well formed"),
                faces: members,
                has_parallel_edges: parallel,
            }
        };
        Ok(HamiltonianDual {
            inside: build(CycleSide::Inside),
            outside: build(CycleSide::Outside),
            side_of_face,
        })
    }

    /// Stacks one vertex into the face with the given index (the face must
    /// be a triangle), producing the embedding with that vertex joined to
    /// the face's three corners.
    pub fn stack_face(&self, face_idx: usize) -> Result<EmbeddedGraph, EmbedError> {
        let faces = self.faces();
        let f = faces
            .get(face_idx)
            .ok_or(EmbedError::NonTriangularFace(face_idx, 0))?;
        if f.len() != 3 {
            return Err(EmbedError::NonTriangularFace(face_idx, f.len()));
        }
        self.stack_faces_impl(&faces, &[face_idx])
    }

    /// Stacks a new degree-3 vertex into every face; requires a maximal
    /// planar input so that every face is a triangle.
    pub fn stack_all_faces(&self) -> Result<EmbeddedGraph, EmbedError> {
        if !self.is_maximal_planar() {
            return Err(EmbedError::NotMaximalPlanar);
        }
        let faces = self.faces();
        let all: Vec<usize> = (0..faces.len()).collect();
        self.stack_faces_impl(&faces, &all)
    }

    fn stack_faces_impl(
        &self,
        faces: &[Face],
        chosen: &[usize],
    ) -> Result<EmbeddedGraph, EmbedError> {
        let n = self.order();
        // new vertex for the k-th chosen face; face_of maps directed
        // edges of chosen faces to their new vertex
        let mut new_vertex_of = vec![usize::MAX; n * n];
        for (k, &fi) in chosen.iter().enumerate() {
            let f = &faces[fi];
            if f.len() != 3 {
                return Err(EmbedError::NonTriangularFace(fi, f.len()));
            }
            for &(u, v) in f.directed_edges() {
                new_vertex_of[u * n + v] = n + k;
            }
        }
        let total = n + chosen.len();
        let mut edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .map(|e| e.endpoints())
            .collect();
        let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(total);
        for v in 0..n {
            let old = &self.rot[v];
            let mut ring = Vec::with_capacity(old.len() * 2);
            for &u in old {
                ring.push(u);
                // the face at the corner after u (walking u -> v -> succ)
                let w = new_vertex_of[u * n + v];
                if w != usize::MAX {
                    ring.push(w);
                }
            }
            rot.push(ring);
        }
        for (k, &fi) in chosen.iter().enumerate() {
            let walk = faces[fi].vertices();
            let w = n + k;
            for &x in &walk {
                edges.push((w, x));
            }
            // reversed walk keeps the three new triangles as faces
            rot.push(vec![walk[2], walk[1], walk[0]]);
        }
        let graph = Graph::from_edges(total, &edges)?;
        EmbeddedGraph::new(graph, rot)
    }

    /// Serializes in rot format: `rot <n>` then one `<i>: <neighbors>`
    /// line per vertex, clockwise cyclic order.
    pub fn to_rot_string(&self) -> String {
        let mut out = format!("rot {}\n", self.order());
        for v in self.graph.vertices() {
            let nbrs: Vec<String> = self.rot[v].iter().map(|w| w.to_string()).collect();
            out.push_str(&format!("{}: {}\n", v, nbrs.join(" ")));
        }
        out
    }

    pub fn parse_rot(text: &str) -> Result<EmbeddedGraph, EmbedError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines.next().ok_or(EmbedError::RotParse {
            line: 0,
            msg: "empty input".into(),
        })?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("rot") {
            return Err(EmbedError::RotParse {
                line: line_no,
                msg: "expected header `rot <n>`".into(),
            });
        }
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EmbedError::RotParse {
                line: line_no,
                msg: "expected vertex count after `rot`".into(),
            })?;
        if parts.next().is_some() {
            return Err(EmbedError::RotParse {
                line: line_no,
                msg: "unexpected tokens after vertex count".into(),
            });
        }
        let mut rot: Vec<Option<Vec<VertexId>>> = vec![None; n];
        for (line_no, line) in lines {
            let (head, tail) = line.split_once(':').ok_or(EmbedError::RotParse {
                line: line_no,
                msg: "expected `<vertex>: <neighbors>`".into(),
            })?;
            let v: usize = head.trim().parse().map_err(|_| EmbedError::RotParse {
                line: line_no,
                msg: format!("invalid vertex id `{}`", head.trim()),
            })?;
            if v >= n {
                return Err(EmbedError::RotParse {
                    line: line_no,
                    msg: format!("vertex {v} out of range for order {n}"),
                });
            }
            if rot[v].is_some() {
                return Err(EmbedError::RotParse {
                    line: line_no,
                    msg: format!("vertex {v} listed twice"),
                });
            }
            let mut nbrs = Vec::new();
            for tok in tail.split_whitespace() {
                let w: usize = tok.parse().map_err(|_| EmbedError::RotParse {
                    line: line_no,
                    msg: format!("invalid neighbor `{tok}`"),
                })?;
                nbrs.push(w);
            }
            rot[v] = Some(nbrs);
        }
        let mut rows = Vec::with_capacity(n);
        for (v, r) in rot.into_iter().enumerate() {
            rows.push(r.ok_or(EmbedError::RotParse {
                line: 0,
                msg: format!("vertex {v} missing"),
            })?);
        }
        let mut edges = Vec::new();
        for (v, row) in rows.iter().enumerate() {
            for &w in row {
                if w >= n {
                    return Err(EmbedError::RotParse {
                        line: 0,
                        msg: format!("neighbor {w} out of range for order {n}"),
                    });
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges)?;
        EmbeddedGraph::new(graph, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4_embedded() -> EmbeddedGraph {
        // tetrahedron: 3 outer vertices and a center
        let g = Graph::complete(4);
        let rot = vec![vec![1, 2, 3], vec![2, 0, 3], vec![0, 1, 3], vec![0, 2, 1]];
        EmbeddedGraph::new(g, rot).unwrap()
    }

    fn cube_embedded() -> EmbeddedGraph {
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        // outer square 0..3 drawn around inner square 4..7
        let rot = vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ];
        EmbeddedGraph::new(g, rot).unwrap()
    }

    #[test]
    fn k4_has_four_triangular_faces() {
        let eg = k4_embedded();
        let faces = eg.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(eg.check_genus_zero());
        assert!(eg.is_maximal_planar());
    }

    #[test]
    fn cube_faces_and_genus() {
        let eg = cube_embedded();
        assert_eq!(eg.face_count(), 6);
        assert!(eg.check_genus_zero());
        assert!(!eg.is_maximal_planar());
        assert!(eg.is_4mp_dual());
    }

    #[test]
    fn k5_is_not_genus_zero() {
        let g = Graph::complete(5);
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|v| (0..5).filter(|&w| w != v).collect())
            .collect();
        let eg = EmbeddedGraph::new(g, rot).unwrap();
        assert!(!eg.check_genus_zero());
    }

    #[test]
    fn k4_is_self_dual() {
        let eg = k4_embedded();
        let d = eg.dual().unwrap();
        assert_eq!(d.order(), 4);
        assert!(d.graph().is_cubic());
        assert!(crate::canon::are_isomorphic(eg.graph(), d.graph()));
    }

    #[test]
    fn dual_is_an_involution_on_the_cube() {
        let eg = cube_embedded();
        let dd = eg.dual().unwrap().dual().unwrap();
        assert!(crate::canon::are_isomorphic(eg.graph(), dd.graph()));
    }

    #[test]
    fn dual_rejects_bridges() {
        // path of length 1: single edge, one face using it twice
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let eg = EmbeddedGraph::new(g, vec![vec![1], vec![0]]).unwrap();
        assert!(matches!(eg.dual(), Err(EmbedError::DualLoop(_))));
    }

    #[test]
    fn stacking_k4_gives_order_eight_triangulation() {
        let eg = k4_embedded();
        let stacked = eg.stack_all_faces().unwrap();
        assert_eq!(stacked.order(), 8);
        assert!(stacked.is_maximal_planar());
        for v in 4..8 {
            assert_eq!(stacked.graph().degree(v), 3);
        }
    }

    #[test]
    fn rot_round_trip() {
        let eg = cube_embedded();
        let text = eg.to_rot_string();
        let back = EmbeddedGraph::parse_rot(&text).unwrap();
        assert_eq!(back, eg);
    }

    #[test]
    fn rot_parse_errors() {
        assert!(EmbeddedGraph::parse_rot("").is_err());
        assert!(EmbeddedGraph::parse_rot("rot").is_err());
        assert!(EmbeddedGraph::parse_rot("rot 2\n0: 1\n").is_err());
        assert!(EmbeddedGraph::parse_rot("rot 1\n0: 5\n").is_err());
    }

    #[test]
    fn rotation_validation() {
        let g = Graph::complete(3);
        assert!(EmbeddedGraph::new(g, vec![vec![1, 2], vec![0], vec![0, 1]]).is_err());
    }
}
