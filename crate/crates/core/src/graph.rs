//! Simple undirected graphs over dense integer vertex ids.
//!
//! Graphs are immutable after construction; operations that look like
//! mutation return new graphs. Adjacency lists are kept sorted so that
//! derived objects (induced subgraphs, certificates, encodings) come out
//! deterministic.

use std::collections::VecDeque;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present in graph")]
    MissingEdge(usize, usize),
    #[error("operation requires a cubic graph")]
    NotCubic,
    #[error("operation requires a connected graph")]
    NotConnected,
    #[error("graph order {0} exceeds the supported maximum {1} for this operation")]
    TooLarge(usize, usize),
    #[error("sequence is not a Hamiltonian cycle: {0}")]
    NotHamiltonianCycle(String),
}

/// Undirected edge stored with its endpoints ordered.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Panics on loops; endpoint order does not matter.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        assert_ne!(u, v, "loop edges are not allowed");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        if v == self.a {
            self.b
        } else {
            assert_eq!(v, self.b, "vertex {v} is not an endpoint of {self:?}");
            self.a
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Shape of the subgraph induced by a vertex set.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InducedShape {
    Empty,
    /// Connected, acyclic, max degree <= 2. A single vertex counts as a path.
    Path,
    /// Connected, acyclic, some vertex of degree >= 3.
    TreeNotPath,
    CycleContaining,
    Disconnected,
}

/// Simple undirected graph: order plus sorted per-vertex neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph is well formed")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    /// All edges, sorted by endpoint pair.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn is_cubic(&self) -> bool {
        self.order() > 0 && self.adj.iter().all(|l| l.len() == 3)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() == n - 1)
    }

    /// Per-vertex adjacency bitmasks; requires order <= 64.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>, GraphError> {
        let n = self.order();
        if n > 64 {
            return Err(GraphError::TooLarge(n, 64));
        }
        let mut masks = vec![0u64; n];
        for u in self.vertices() {
            for &v in &self.adj[u] {
                masks[u] |= 1 << v;
            }
        }
        Ok(masks)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut comps: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    /// Subgraph induced by `s`, plus the map from new ids to the original
    /// ids (new id `i` corresponds to `map[i]`; `s` is deduplicated and
    /// sorted first).
    pub fn induced(&self, s: &[VertexId]) -> Result<(Graph, Vec<VertexId>), GraphError> {
        let n = self.order();
        let mut map: Vec<VertexId> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        let mut back = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && back[w] != usize::MAX {
                    edges.push((i, back[w]));
                }
            }
        }
        Ok((Graph::from_edges(map.len(), &edges)?, map))
    }

    /// Classifies the subgraph induced by `s`. Precedence when several
    /// descriptions apply: Empty, then CycleContaining, then Disconnected.
    ///
    /// Panics on out-of-range vertices.
    pub fn classify_induced(&self, s: &[VertexId]) -> InducedShape {
        let mut members: Vec<VertexId> = s.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return InducedShape::Empty;
        }
        let n = self.order();
        let mut in_set = vec![false; n];
        for &v in &members {
            assert!(v < n, "vertex {v} out of range for order {n}");
            in_set[v] = true;
        }
        let mut max_deg = 0usize;
        for &v in &members {
            let d = self.adj[v].iter().filter(|&&w| in_set[w]).count();
            max_deg = max_deg.max(d);
        }

        if has_cycle_within(self, &members, &in_set) {
            return InducedShape::CycleContaining;
        }

        // connectivity within the set
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([members[0]]);
        seen[members[0]] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if in_set[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached != members.len() {
            return InducedShape::Disconnected;
        }
        if max_deg <= 2 {
            InducedShape::Path
        } else {
            InducedShape::TreeNotPath
        }
    }

    /// Exact vertex connectivity via vertex-capacity max-flow over all
    /// non-adjacent pairs; `n - 1` for complete graphs, 0 when disconnected
    /// or of order < 2.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n < 2 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(max_vertex_disjoint_paths(self, s, t));
                }
            }
        }
        best
    }

    /// Whether some 3-edge cut splits the graph into two components each
    /// with at least two vertices. Exhaustive over all edge triples;
    /// defined for connected cubic graphs only.
    pub fn has_nontrivial_3_edge_cut(&self) -> Result<bool, GraphError> {
        if !self.is_cubic() {
            return Err(GraphError::NotCubic);
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let edges = self.edges();
        let m = edges.len();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let banned = [edges[i], edges[j], edges[k]];
                    if splits_into_two_nontrivial(self, &banned) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }
}

/// A spanning cycle, stored as a vertex sequence of length `n` that closes
/// up. Validated against a graph at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HamCycle {
    seq: Vec<VertexId>,
}

impl HamCycle {
    pub fn new(g: &Graph, seq: Vec<VertexId>) -> Result<HamCycle, GraphError> {
        let n = g.order();
        if seq.len() != n || n < 3 {
            return Err(GraphError::NotHamiltonianCycle(format!(
                "length {} does not span order {}",
                seq.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if seen[v] {
                return Err(GraphError::NotHamiltonianCycle(format!(
                    "vertex {v} repeated"
                )));
            }
            seen[v] = true;
        }
        for i in 0..n {
            let (u, v) = (seq[i], seq[(i + 1) % n]);
            if !g.has_edge(u, v) {
                return Err(GraphError::NotHamiltonianCycle(format!(
                    "consecutive vertices {u} and {v} not adjacent"
                )));
            }
        }
        Ok(HamCycle { seq })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        (0..self.seq.len())
            .map(|i| Edge::new(self.seq[i], self.seq[(i + 1) % self.seq.len()]))
            .collect()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }
}

fn has_cycle_within(g: &Graph, members: &[VertexId], in_set: &[bool]) -> bool {
    // DFS per component with parent-edge exclusion
    let n = g.order();
    let mut seen = vec![false; n];
    for &start in members {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        seen[start] = true;
        let mut verts = 0usize;
        let mut edges = 0usize;
        while let Some((u, _parent)) = stack.pop() {
            verts += 1;
            for &v in g.neighbors(u) {
                if !in_set[v] {
                    continue;
                }
                edges += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, u));
                }
            }
        }
        if edges / 2 >= verts {
            return true;
        }
    }
    false
}

fn splits_into_two_nontrivial(g: &Graph, banned: &[Edge; 3]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            let e = Edge::new(u, v);
            if banned.contains(&e) || seen[v] {
                continue;
            }
            seen[v] = true;
            count += 1;
            queue.push_back(v);
        }
    }
    if count == n {
        return false;
    }
    // exactly-two-components check with both sides of order >= 2
    if count < 2 || n - count < 2 {
        return false;
    }
    let other = seen.iter().position(|&s| !s).expect("some vertex unseen");
    let mut seen2 = vec![false; n];
    let mut queue = VecDeque::from([other]);
    seen2[other] = true;
    let mut count2 = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            let e = Edge::new(u, v);
            if banned.contains(&e) || seen2[v] {
                continue;
            }
            seen2[v] = true;
            count2 += 1;
            queue.push_back(v);
        }
    }
    count + count2 == n
}

/// Maximum number of internally vertex-disjoint s-t paths (s, t
/// non-adjacent), by unit-capacity max-flow on the split graph.
fn max_vertex_disjoint_paths(g: &Graph, s: VertexId, t: VertexId) -> usize {
    let n = g.order();
    // node 2v = v_in, 2v+1 = v_out; interior vertices have capacity 1
    let nn = 2 * n;
    let mut cap = vec![vec![0u8; nn]; nn];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { u8::MAX } else { 1 };
    }
    for u in 0..n {
        for &v in g.neighbors(u) {
            cap[2 * u + 1][2 * v] = 1;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0usize;
    loop {
        // BFS augmenting path
        let mut prev = vec![usize::MAX; nn];
        let mut queue = VecDeque::from([source]);
        prev[source] = source;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..nn {
                if cap[u][v] > 0 && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Graph {
        // two 4-cycles 0..3 and 4..7 plus vertical edges
        Graph::from_edges(
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
        .unwrap()
    }

    fn octahedron() -> Graph {
        // 4-cycle 0..3 joined to hubs 4 and 5
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 0),
                (5, 1),
                (5, 2),
                (5, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        ));
    }

    #[test]
    fn cubic_checks() {
        assert!(cube().is_cubic());
        assert!(Graph::complete(4).is_cubic());
        assert!(!octahedron().is_cubic());
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(Graph::complete(4).vertex_connectivity(), 3);
        assert_eq!(octahedron().vertex_connectivity(), 4);
        assert_eq!(cube().vertex_connectivity(), 3);
        // two K4s sharing a triangle 0,1,2 with apexes 3 and 4
        let glued = Graph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 0),
                (3, 1),
                (3, 2),
                (4, 0),
                (4, 1),
                (4, 2),
            ],
        )
        .unwrap();
        assert_eq!(glued.vertex_connectivity(), 3);
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disconnected.vertex_connectivity(), 0);
    }

    #[test]
    fn three_edge_cuts() {
        assert_eq!(cube().has_nontrivial_3_edge_cut(), Ok(false));
        // two triangles joined by a perfect matching (the 3-prism):
        // the matching is a nontrivial 3-cut
        let prism3 = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(prism3.has_nontrivial_3_edge_cut(), Ok(true));
        assert!(octahedron().has_nontrivial_3_edge_cut().is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let g = cube();
        let (empty, map) = g.induced(&[]).unwrap();
        assert_eq!(empty.order(), 0);
        assert!(map.is_empty());

        let (tri, map) = Graph::complete(4).induced(&[1, 2, 3]).unwrap();
        assert_eq!(tri.order(), 3);
        assert_eq!(tri.size(), 3);
        assert_eq!(map, vec![1, 2, 3]);

        assert!(g.induced(&[99]).is_err());
    }

    #[test]
    fn classify_shapes() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.classify_induced(&[0, 1, 2]), InducedShape::Path);
        assert_eq!(
            c6.classify_induced(&[0, 1, 2, 3, 4, 5]),
            InducedShape::CycleContaining
        );
        assert_eq!(c6.classify_induced(&[0, 2]), InducedShape::Disconnected);
        assert_eq!(c6.classify_induced(&[]), InducedShape::Empty);
        assert_eq!(c6.classify_induced(&[4]), InducedShape::Path);

        // a claw inside a larger graph
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(
            star.classify_induced(&[0, 1, 2, 3]),
            InducedShape::TreeNotPath
        );
    }
}
