//! Exact decision engine for two-part vertex partitions of cubic graphs
//! where each side must induce a prescribed shape (path or tree).
//!
//! The engine is a complete branch-and-prune over vertex assignments in
//! breadth-first order from vertex 0. Every pruning rule preserves all
//! completions: a cycle inside a part, a vertex of induced degree >= 3 in
//! a path part, more than two frozen path endpoints, part size beyond n/2
//! (cubic graphs force equal sides when both shapes are trees), a part
//! whose assigned vertices cannot be reconnected through the unassigned
//! ones, and fewer free slots than the ceil((c-1)/2) connector vertices a
//! cubic graph needs to merge c components. SAT answers carry a
//! certificate; `verify_certificate` re-checks it with no search state.

use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, InducedShape, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("constraint edge {0} is not an edge of the graph")]
    ConstraintEdgeNotInGraph(Edge),
    #[error("edge {0} listed as both required-internal and required-crossing")]
    ConflictingConstraint(Edge),
    #[error("oracle supports order <= {1}, got {0}")]
    OracleTooLarge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Shape {
    Path,
    Tree,
}

impl Shape {
    pub fn accepts(self, actual: InducedShape) -> bool {
        match self {
            Shape::Path => actual == InducedShape::Path,
            Shape::Tree => matches!(actual, InducedShape::Path | InducedShape::TreeNotPath),
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Path => write!(f, "path"),
            Shape::Tree => write!(f, "tree"),
        }
    }
}

/// Required shapes per side plus optional edge constraints: a
/// required-internal edge must end up with both endpoints in one part
/// (either part), a required-crossing edge with its endpoints in
/// different parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionSpec {
    pub left: Shape,
    pub right: Shape,
    pub required_internal: Vec<Edge>,
    pub required_crossing: Vec<Edge>,
}

impl PartitionSpec {
    pub fn new(left: Shape, right: Shape) -> Self {
        PartitionSpec {
            left,
            right,
            required_internal: Vec::new(),
            required_crossing: Vec::new(),
        }
    }

    pub fn path_tree() -> Self {
        Self::new(Shape::Path, Shape::Tree)
    }

    pub fn path_path() -> Self {
        Self::new(Shape::Path, Shape::Path)
    }

    pub fn tree_tree() -> Self {
        Self::new(Shape::Tree, Shape::Tree)
    }

    fn validate(&self, g: &Graph) -> Result<(), PartitionError> {
        for &e in self.required_internal.iter().chain(&self.required_crossing) {
            let (u, v) = e.endpoints();
            if !g.has_edge(u, v) {
                return Err(PartitionError::ConstraintEdgeNotInGraph(e));
            }
        }
        for &e in &self.required_internal {
            if self.required_crossing.contains(&e) {
                return Err(PartitionError::ConflictingConstraint(e));
            }
        }
        Ok(())
    }

    /// Swapping the sides leaves the spec unchanged.
    fn side_symmetric(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionCertificate {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub left_shape: Shape,
    pub right_shape: Shape,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum UnsatReason {
    OddOrder,
    Disconnected,
    Exhausted,
}

impl std::fmt::Display for UnsatReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnsatReason::OddOrder => write!(f, "odd-order"),
            UnsatReason::Disconnected => write!(f, "disconnected"),
            UnsatReason::Exhausted => write!(f, "search-exhausted"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionOutcome {
    Sat(PartitionCertificate),
    Unsat(UnsatReason),
}

impl PartitionOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, PartitionOutcome::Sat(_))
    }

    pub fn certificate(&self) -> Option<&PartitionCertificate> {
        match self {
            PartitionOutcome::Sat(c) => Some(c),
            PartitionOutcome::Unsat(_) => None,
        }
    }
}

#[derive(Copy, Clone, Default, Debug, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
}

/// Checks a certificate against graph and spec using only induced-shape
/// classification and set arithmetic; shares no state with the search.
pub fn verify_certificate(g: &Graph, cert: &PartitionCertificate, spec: &PartitionSpec) -> bool {
    let n = g.order();
    let mut seen = vec![0u8; n];
    for &v in &cert.left {
        if v >= n || seen[v] != 0 {
            return false;
        }
        seen[v] = 1;
    }
    for &v in &cert.right {
        if v >= n || seen[v] != 0 {
            return false;
        }
        seen[v] = 2;
    }
    if seen.iter().any(|&s| s == 0) {
        return false;
    }
    if !spec.left.accepts(g.classify_induced(&cert.left)) {
        return false;
    }
    if !spec.right.accepts(g.classify_induced(&cert.right)) {
        return false;
    }
    for &e in &spec.required_internal {
        let (u, v) = e.endpoints();
        if seen[u] != seen[v] {
            return false;
        }
    }
    for &e in &spec.required_crossing {
        let (u, v) = e.endpoints();
        if seen[u] == seen[v] {
            return false;
        }
    }
    true
}

/// Complete single-threaded search. Deterministic: vertices are assigned
/// in breadth-first order from vertex 0, left side first, and vertex 0 is
/// pinned to the left part when the spec is side-symmetric.
pub fn find_partition(
    g: &Graph,
    spec: &PartitionSpec,
) -> Result<(PartitionOutcome, SearchStats), PartitionError> {
    find_partition_threaded(g, spec, 1)
}

/// Like [`find_partition`] but splitting the search frontier across
/// `threads` workers. SAT/UNSAT is thread-count invariant; the returned
/// certificate may be any valid one when `threads > 1`.
pub fn find_partition_threaded(
    g: &Graph,
    spec: &PartitionSpec,
    threads: usize,
) -> Result<(PartitionOutcome, SearchStats), PartitionError> {
    spec.validate(g)?;
    let n = g.order();
    let mut stats = SearchStats::default();
    if n % 2 == 1 {
        return Ok((PartitionOutcome::Unsat(UnsatReason::OddOrder), stats));
    }
    if !g.is_connected() || n == 0 {
        return Ok((PartitionOutcome::Unsat(UnsatReason::Disconnected), stats));
    }
    let engine = Engine::new(g, spec)?;
    let root = NodeState::root(n);

    if threads <= 1 {
        let found = engine.search(root, 0, &mut stats, &AtomicBool::new(false));
        return Ok(match found {
            Some(cert) => (PartitionOutcome::Sat(cert), stats),
            None => (PartitionOutcome::Unsat(UnsatReason::Exhausted), stats),
        });
    }

    // frontier split: expand breadth-first until enough open branches
    let mut frontier = vec![(root, 0usize)];
    let want = threads * 32;
    while frontier.len() < want {
        let Some(pos) = frontier.iter().position(|&(_, d)| d < n) else {
            break;
        };
        let (st, depth) = frontier.remove(pos);
        stats.nodes += 1;
        if depth == engine.n {
            frontier.push((st, depth));
            break;
        }
        for &side in engine.branch_sides(depth) {
            let mut child = st.clone();
            if engine.assign(&mut child, engine.order[depth], side) {
                frontier.push((child, depth + 1));
            } else {
                stats.pruned += 1;
            }
        }
        if frontier.is_empty() {
            return Ok((PartitionOutcome::Unsat(UnsatReason::Exhausted), stats));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction");
    let stop = AtomicBool::new(false);
    let results: Vec<(Option<PartitionCertificate>, SearchStats)> = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|(st, depth)| {
                let mut local = SearchStats::default();
                let found = engine.search(st, depth, &mut local, &stop);
                (found, local)
            })
            .collect()
    });
    for (_, local) in &results {
        stats.nodes += local.nodes;
        stats.pruned += local.pruned;
    }
    let cert = results.into_iter().find_map(|(c, _)| c);
    Ok(match cert {
        Some(c) => (PartitionOutcome::Sat(c), stats),
        None => (PartitionOutcome::Unsat(UnsatReason::Exhausted), stats),
    })
}

#[derive(Clone)]
struct NodeState {
    side_mask: [u64; 2],
    parent: [Vec<u32>; 2],
    comp_count: [u32; 2],
}

impl NodeState {
    fn root(n: usize) -> NodeState {
        NodeState {
            side_mask: [0, 0],
            parent: [
                (0..n as u32).collect::<Vec<u32>>(),
                (0..n as u32).collect::<Vec<u32>>(),
            ],
            comp_count: [0, 0],
        }
    }

    fn find(&self, s: usize, v: u32) -> u32 {
        let mut v = v;
        while self.parent[s][v as usize] != v {
            v = self.parent[s][v as usize];
        }
        v
    }
}

struct Engine<'a> {
    g: &'a Graph,
    n: usize,
    full: u64,
    adj: Vec<u64>,
    order: Vec<VertexId>,
    shapes: [Shape; 2],
    cubic: bool,
    half: usize,
    symmetric: bool,
    // per-vertex constraints: (other endpoint, must-cross)
    cons_at: Vec<Vec<(VertexId, bool)>>,
    spec: &'a PartitionSpec,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, spec: &'a PartitionSpec) -> Result<Engine<'a>, PartitionError> {
        let n = g.order();
        let adj = g.adjacency_masks()?;
        // breadth-first assignment order from vertex 0
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        debug_assert_eq!(order.len(), n, "connected input");
        let mut cons_at = vec![Vec::new(); n];
        for (&e, crossing) in spec
            .required_internal
            .iter()
            .zip(std::iter::repeat(false))
            .chain(spec.required_crossing.iter().zip(std::iter::repeat(true)))
        {
            let (u, v) = e.endpoints();
            cons_at[u].push((v, crossing));
            cons_at[v].push((u, crossing));
        }
        Ok(Engine {
            g,
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            adj,
            order,
            shapes: [spec.left, spec.right],
            cubic: g.is_cubic(),
            half: n / 2,
            symmetric: spec.side_symmetric(),
            cons_at,
            spec,
        })
    }

    fn branch_sides(&self, depth: usize) -> &'static [usize] {
        if depth == 0 && self.symmetric {
            &[0]
        } else {
            &[0, 1]
        }
    }

    /// Applies one assignment and runs every pruning rule. Returns false
    /// when the branch is dead.
    fn assign(&self, st: &mut NodeState, v: VertexId, s: usize) -> bool {
        let vb = 1u64 << v;
        st.side_mask[s] |= vb;
        let assigned = st.side_mask[0] | st.side_mask[1];

        for &(other, crossing) in &self.cons_at[v] {
            let ob = 1u64 << other;
            if assigned & ob != 0 {
                let same = st.side_mask[s] & ob != 0;
                if crossing == same {
                    return false;
                }
            }
        }

        // cycle detection and component bookkeeping
        let mut nbrs = self.adj[v] & st.side_mask[s];
        let mut roots: [u32; 3] = [u32::MAX; 3];
        let mut nroots = 0usize;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            let r = st.find(s, w);
            if roots[..nroots].contains(&r) {
                return false; // second connection to one component closes a cycle
            }
            if nroots == roots.len() {
                // more than three same-side neighbors: only possible on
                // non-cubic inputs; treat every extra root separately
                let vroot = st.find(s, v as u32);
                if vroot == r {
                    return false;
                }
                st.parent[s][r as usize] = vroot;
                st.comp_count[s] -= 1;
                continue;
            }
            roots[nroots] = r;
            nroots += 1;
        }
        st.comp_count[s] += 1;
        for &r in &roots[..nroots] {
            st.parent[s][r as usize] = v as u32;
            st.comp_count[s] -= 1;
        }

        // path parts never exceed induced degree 2
        if self.shapes[s] == Shape::Path {
            let nbrs_in = self.adj[v] & st.side_mask[s] & !vb;
            if nbrs_in.count_ones() > 2 {
                return false;
            }
            let mut scan = nbrs_in;
            while scan != 0 {
                let w = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if (self.adj[w] & st.side_mask[s]).count_ones() > 2 {
                    return false;
                }
            }
        }

        // equal-size law: cubic graphs with tree-shaped sides split n/2 : n/2
        if self.cubic {
            let size = st.side_mask[s].count_ones() as usize;
            if size > self.half {
                return false;
            }
            // a new vertex of degree 3 merges at most two extra components
            let c = st.comp_count[s] as usize;
            if c > 1 && (c - 1).div_ceil(2) > self.half - size {
                return false;
            }
        }

        let unassigned = self.full & !assigned;
        for side in 0..2 {
            let mask = st.side_mask[side];
            if mask == 0 {
                continue;
            }
            // all assigned vertices of a side must stay connectable
            // through unassigned territory
            let allowed = mask | unassigned;
            let mut reach = mask & mask.wrapping_neg(); // lowest assigned bit
            loop {
                let mut grow = reach;
                let mut scan = reach;
                while scan != 0 {
                    let w = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    grow |= self.adj[w] & allowed;
                }
                if grow == reach {
                    break;
                }
                reach = grow;
            }
            if mask & !reach != 0 {
                return false;
            }
            // frozen endpoints: a path has at most two vertices of induced
            // degree <= 1, and a vertex with no unassigned neighbors can
            // never gain degree
            if self.shapes[side] == Shape::Path {
                let mut frozen = 0;
                let mut scan = mask;
                while scan != 0 {
                    let w = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    if self.adj[w] & unassigned == 0
                        && (self.adj[w] & mask & !(1u64 << w)).count_ones() <= 1
                    {
                        frozen += 1;
                        if frozen > 2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn search(
        &self,
        st: NodeState,
        depth: usize,
        stats: &mut SearchStats,
        stop: &AtomicBool,
    ) -> Option<PartitionCertificate> {
        if stop.load(Ordering::Relaxed) {
            return None;
        }
        stats.nodes += 1;
        if depth == self.n {
            let cert = self.certificate(&st);
            if verify_certificate(self.g, &cert, self.spec) {
                stop.store(true, Ordering::Relaxed);
                return Some(cert);
            }
            return None;
        }
        let v = self.order[depth];
        for &s in self.branch_sides(depth) {
            let mut child = st.clone();
            if self.assign(&mut child, v, s) {
                if let Some(cert) = self.search(child, depth + 1, stats, stop) {
                    return Some(cert);
                }
            } else {
                stats.pruned += 1;
            }
        }
        None
    }

    fn certificate(&self, st: &NodeState) -> PartitionCertificate {
        let collect = |mask: u64| -> Vec<VertexId> {
            (0..self.n).filter(|&v| mask & (1 << v) != 0).collect()
        };
        PartitionCertificate {
            left: collect(st.side_mask[0]),
            right: collect(st.side_mask[1]),
            left_shape: self.spec.left,
            right_shape: self.spec.right,
        }
    }
}

/// Anti-bug oracle: enumerates bipartitions outright, with no pruning
/// beyond the equal-size law on cubic inputs, and classifies both sides.
/// Supports order <= 26.
pub fn oracle_find_partition(
    g: &Graph,
    spec: &PartitionSpec,
) -> Result<(PartitionOutcome, u64), PartitionError> {
    const MAX: usize = 26;
    spec.validate(g)?;
    let n = g.order();
    if n > MAX {
        return Err(PartitionError::OracleTooLarge(n, MAX));
    }
    let mut examined = 0u64;
    if n % 2 == 1 {
        return Ok((PartitionOutcome::Unsat(UnsatReason::OddOrder), examined));
    }
    if !g.is_connected() || n == 0 {
        return Ok((PartitionOutcome::Unsat(UnsatReason::Disconnected), examined));
    }
    let adj = g.adjacency_masks()?;
    let full: u64 = (1u64 << n) - 1;

    let try_split = |left: u64, examined: &mut u64| -> Option<PartitionCertificate> {
        *examined += 1;
        let right = full & !left;
        if right == 0 || left == 0 {
            return None;
        }
        let orders = if spec.side_symmetric() {
            vec![(left, right)]
        } else {
            vec![(left, right), (right, left)]
        };
        for (l, r) in orders {
            if mask_shape_ok(&adj, l, spec.left)
                && mask_shape_ok(&adj, r, spec.right)
                && mask_constraints_ok(l, spec)
            {
                let collect =
                    |mask: u64| -> Vec<VertexId> { (0..n).filter(|&v| mask & (1 << v) != 0).collect() };
                return Some(PartitionCertificate {
                    left: collect(l),
                    right: collect(r),
                    left_shape: spec.left,
                    right_shape: spec.right,
                });
            }
        }
        None
    };

    if g.is_cubic() {
        // balanced bipartitions with vertex 0 on the left; the mirrored
        // order is checked inside try_split
        let k = n / 2 - 1; // choose the rest of the left side among 1..n
        let mut mask: u64 = (1 << k) - 1;
        let limit: u64 = 1 << (n - 1);
        if k == 0 {
            if let Some(cert) = try_split(1, &mut examined) {
                return Ok((PartitionOutcome::Sat(cert), examined));
            }
        } else {
            while mask < limit {
                let left = (mask << 1) | 1;
                if let Some(cert) = try_split(left, &mut examined) {
                    return Ok((PartitionOutcome::Sat(cert), examined));
                }
                // Gosper's hack: next mask with the same popcount
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
    } else {
        for left in 1..full {
            if left & 1 == 0 {
                continue; // fix vertex 0 on the left; mirrored order checked inside
            }
            if let Some(cert) = try_split(left, &mut examined) {
                return Ok((PartitionOutcome::Sat(cert), examined));
            }
        }
    }
    Ok((PartitionOutcome::Unsat(UnsatReason::Exhausted), examined))
}

fn mask_shape_ok(adj: &[u64], mask: u64, shape: Shape) -> bool {
    let count = mask.count_ones() as u64;
    if count == 0 {
        return false;
    }
    let mut edges = 0u64;
    let mut maxdeg = 0u32;
    let mut scan = mask;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let d = (adj[v] & mask).count_ones();
        maxdeg = maxdeg.max(d);
        edges += d as u64;
    }
    edges /= 2;
    if edges != count - 1 {
        return false; // wrong edge count for a tree
    }
    // connectivity
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut grow = reach;
        let mut scan = reach;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            grow |= adj[v] & mask;
        }
        if grow == reach {
            break;
        }
        reach = grow;
    }
    if reach != mask {
        return false;
    }
    match shape {
        Shape::Path => maxdeg <= 2,
        Shape::Tree => true,
    }
}

fn mask_constraints_ok(left: u64, spec: &PartitionSpec) -> bool {
    for &e in &spec.required_internal {
        let (u, v) = e.endpoints();
        let lu = left & (1 << u) != 0;
        let lv = left & (1 << v) != 0;
        if lu != lv {
            return false;
        }
    }
    for &e in &spec.required_crossing {
        let (u, v) = e.endpoints();
        let lu = left & (1 << u) != 0;
        let lv = left & (1 << v) != 0;
        if lu == lv {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube, gk, h22, prism, prism_spokes};

    #[test]
    fn cube_has_path_path_partition() {
        let g = cube().graph().clone();
        let (outcome, _) = find_partition(&g, &PartitionSpec::path_path()).unwrap();
        let cert = outcome.certificate().expect("cube splits into two paths");
        assert!(verify_certificate(&g, cert, &PartitionSpec::path_path()));
        assert_eq!(cert.left.len(), 4);
        assert_eq!(cert.right.len(), 4);
    }

    #[test]
    fn odd_and_disconnected_inputs_are_unsat() {
        let odd = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (outcome, _) = find_partition(&odd, &PartitionSpec::path_path()).unwrap();
        assert_eq!(outcome, PartitionOutcome::Unsat(UnsatReason::OddOrder));

        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (outcome, _) = find_partition(&disc, &PartitionSpec::path_path()).unwrap();
        assert_eq!(outcome, PartitionOutcome::Unsat(UnsatReason::Disconnected));
    }

    #[test]
    fn constraint_edges_must_exist() {
        let g = cube().graph().clone();
        let mut spec = PartitionSpec::path_path();
        spec.required_internal.push(Edge::new(0, 5));
        assert!(matches!(
            find_partition(&g, &spec),
            Err(PartitionError::ConstraintEdgeNotInGraph(_))
        ));
    }

    #[test]
    fn prism_spoke_constraints_are_satisfiable() {
        let r = 5;
        let g = prism(r).unwrap().graph().clone();
        let spokes = prism_spokes(r);
        let mut spec = PartitionSpec::path_path();
        spec.required_internal = vec![spokes[0], spokes[2]];
        let (outcome, _) = find_partition(&g, &spec).unwrap();
        let cert = outcome.certificate().expect("prism admits spoke-internal split");
        assert!(verify_certificate(&g, cert, &spec));
    }

    #[test]
    fn gk4_path_tree_unsat_engine() {
        let g = gk(4).unwrap().graph().clone();
        let (outcome, stats) = find_partition(&g, &PartitionSpec::path_tree()).unwrap();
        assert_eq!(outcome, PartitionOutcome::Unsat(UnsatReason::Exhausted));
        assert!(stats.nodes > 0);
    }

    #[test]
    fn gk4_tree_tree_sat() {
        let g = gk(4).unwrap().graph().clone();
        let (outcome, _) = find_partition(&g, &PartitionSpec::tree_tree()).unwrap();
        let cert = outcome.certificate().expect("every 4MP dual splits into two trees");
        assert!(verify_certificate(&g, cert, &PartitionSpec::tree_tree()));
        assert_eq!(cert.left.len(), 12);
    }

    #[test]
    fn h22_path_tree_sat_and_path_path_unsat() {
        let g = h22().graph().clone();
        let (outcome, _) = find_partition(&g, &PartitionSpec::path_tree()).unwrap();
        let cert = outcome.certificate().expect("h22 has a path-tree split");
        assert!(verify_certificate(&g, cert, &PartitionSpec::path_tree()));

        let (outcome, _) = find_partition(&g, &PartitionSpec::path_path()).unwrap();
        assert_eq!(outcome, PartitionOutcome::Unsat(UnsatReason::Exhausted));
    }

    #[test]
    fn thread_count_does_not_change_the_answer() {
        let g = h22().graph().clone();
        let (seq, _) = find_partition(&g, &PartitionSpec::path_tree()).unwrap();
        let (par, _) = find_partition_threaded(&g, &PartitionSpec::path_tree(), 4).unwrap();
        assert!(seq.is_sat() && par.is_sat());
        if let PartitionOutcome::Sat(cert) = par {
            assert!(verify_certificate(&g, &cert, &PartitionSpec::path_tree()));
        }

        let (seq, _) = find_partition(&g, &PartitionSpec::path_path()).unwrap();
        let (par, _) = find_partition_threaded(&g, &PartitionSpec::path_path(), 4).unwrap();
        assert!(!seq.is_sat() && !par.is_sat());
    }

    #[test]
    fn oracle_agrees_on_small_fixtures() {
        let g = cube().graph().clone();
        for spec in [
            PartitionSpec::path_path(),
            PartitionSpec::path_tree(),
            PartitionSpec::tree_tree(),
        ] {
            let (engine, _) = find_partition(&g, &spec).unwrap();
            let (oracle, _) = oracle_find_partition(&g, &spec).unwrap();
            assert_eq!(engine.is_sat(), oracle.is_sat(), "spec {spec:?}");
        }
    }

    #[test]
    fn certificate_tampering_is_detected() {
        let g = cube().graph().clone();
        let spec = PartitionSpec::path_path();
        let (outcome, _) = find_partition(&g, &spec).unwrap();
        let cert = outcome.certificate().unwrap().clone();

        let mut overlapping = cert.clone();
        overlapping.right = overlapping.left.clone();
        assert!(!verify_certificate(&g, &overlapping, &spec));

        // some one-vertex swap must break the certificate
        let mut falsified = false;
        for i in 0..cert.left.len() {
            for j in 0..cert.right.len() {
                let mut swapped = cert.clone();
                std::mem::swap(&mut swapped.left[i], &mut swapped.right[j]);
                if !verify_certificate(&g, &swapped, &spec) {
                    falsified = true;
                }
            }
        }
        assert!(falsified);
    }

    use crate::graph::Graph;
}
