//! Constructors, with embeddings, for the named graph families, plus
//! structural counters (bricks).
//!
//! Ring-based families are embedded by drawing vertices on concentric
//! circles and sorting each neighborhood clockwise by angle, which yields
//! a crossing-free rotation system for these layouts. Index mapping for
//! `gk`: the construction uses 0-based rings a_0..a_{2k-1}, b_i, c_i with
//! spokes a_i-c_i, b_i-c_i and chords c_i-c_{i+1} for odd i (mod 2k), so
//! the chord pairs are (c_1,c_2), (c_3,c_4), ..., (c_{2k-1},c_0).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embed::EmbeddedGraph;
use crate::graph::{Edge, Graph, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {msg}")]
    BadParameter { family: &'static str, msg: String },
    #[error("k-tree step {step}: {msg}")]
    BadKTreeStep { step: usize, msg: String },
}

fn bad(family: &'static str, msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        msg: msg.into(),
    }
}

/// Rotation system from straight-line coordinates: neighbors sorted
/// clockwise (descending angle) around each vertex.
fn rotations_from_coords(g: &Graph, coords: &[(f64, f64)]) -> Vec<Vec<VertexId>> {
    g.vertices()
        .map(|v| {
            let (x0, y0) = coords[v];
            let mut nbrs: Vec<VertexId> = g.neighbors(v).to_vec();
            nbrs.sort_by(|&a, &b| {
                let ta = (coords[a].1 - y0).atan2(coords[a].0 - x0);
                let tb = (coords[b].1 - y0).atan2(coords[b].0 - x0);
                tb.partial_cmp(&ta).expect("angles are finite")
            });
            nbrs
        })
        .collect()
}

fn ring_coords(count: usize, radius: f64) -> Vec<(f64, f64)> {
    (0..count)
        .map(|i| {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / count as f64;
            (radius * theta.cos(), radius * theta.sin())
        })
        .collect()
}

/// Embedded K4 (the tetrahedron).
pub fn k4() -> EmbeddedGraph {
    let g = Graph::complete(4);
    let mut coords = ring_coords(3, 1.0);
    coords.push((0.0, 0.0));
    let rot = rotations_from_coords(&g, &coords);
    EmbeddedGraph::new(g, rot).expect("k4 embedding is valid")
}

/// Embedded cycle C_n.
pub fn cycle(n: usize) -> Result<EmbeddedGraph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", format!("n = {n} must be at least 3")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let g = Graph::from_edges(n, &edges).expect("cycle is well formed");
    let rot = rotations_from_coords(&g, &ring_coords(n, 1.0));
    Ok(EmbeddedGraph::new(g, rot).expect("cycle embedding is valid"))
}

/// Prism over an r-cycle: two chordless r-cycles joined by spokes.
/// Vertices 0..r form the outer cycle, r..2r the inner cycle, and vertex
/// i is joined to i + r (the spokes). prism(4) is the cube.
pub fn prism(r: usize) -> Result<EmbeddedGraph, FamilyError> {
    if r < 3 {
        return Err(bad("prism", format!("r = {r} must be at least 3")));
    }
    let mut edges = Vec::new();
    for i in 0..r {
        edges.push((i, (i + 1) % r));
        edges.push((r + i, r + (i + 1) % r));
        edges.push((i, r + i));
    }
    let g = Graph::from_edges(2 * r, &edges).expect("prism is well formed");
    let mut coords = ring_coords(r, 2.0);
    coords.extend(ring_coords(r, 1.0));
    let rot = rotations_from_coords(&g, &coords);
    Ok(EmbeddedGraph::new(g, rot).expect("prism embedding is valid"))
}

/// The spokes of a prism built by [`prism`].
pub fn prism_spokes(r: usize) -> Vec<Edge> {
    (0..r).map(|i| Edge::new(i, r + i)).collect()
}

pub fn cube() -> EmbeddedGraph {
    prism(4).expect("r = 4 is valid")
}

/// Double wheel C_{n-2} + two nonadjacent hubs: rim 0..n-2, inner hub
/// n-2, outer hub n-1. Maximal planar; 4-connected for n >= 6.
pub fn double_wheel(n: usize) -> Result<EmbeddedGraph, FamilyError> {
    if n < 6 {
        return Err(bad("double-wheel", format!("n = {n} must be at least 6")));
    }
    let m = n - 2;
    let hub_in = m;
    let hub_out = m + 1;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, hub_in));
        edges.push((i, hub_out));
    }
    let g = Graph::from_edges(n, &edges).expect("double wheel is well formed");
    let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    for i in 0..m {
        rot.push(vec![hub_in, (i + 1) % m, hub_out, (i + m - 1) % m]);
    }
    rot.push((0..m).rev().collect());
    rot.push((0..m).collect());
    Ok(EmbeddedGraph::new(g, rot).expect("double wheel embedding is valid"))
}

/// Three concentric rings of 2k vertices: inner cycle a_i = i, outer
/// cycle b_i = 2k + i, middle ring c_i = 4k + i carrying no cycle edges.
/// Edges: both 2k-cycles, spokes a_i-c_i and b_i-c_i, chords c_i-c_{i+1}
/// for odd i (mod 2k). Cubic of order 6k.
pub fn gk(k: usize) -> Result<EmbeddedGraph, FamilyError> {
    if k < 2 {
        return Err(bad("gk", format!("k = {k} must be at least 2")));
    }
    let m = 2 * k;
    let a = |i: usize| i % m;
    let b = |i: usize| m + i % m;
    let c = |i: usize| 2 * m + i % m;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((a(i), a(i + 1)));
        edges.push((b(i), b(i + 1)));
        edges.push((a(i), c(i)));
        edges.push((b(i), c(i)));
        if i % 2 == 1 {
            edges.push((c(i), c(i + 1)));
        }
    }
    let g = Graph::from_edges(6 * k, &edges).expect("gk is well formed");
    let mut coords = ring_coords(m, 1.0);
    coords.extend(ring_coords(m, 2.0));
    coords.extend(ring_coords(m, 1.5));
    let rot = rotations_from_coords(&g, &coords);
    Ok(EmbeddedGraph::new(g, rot).expect("gk embedding is valid"))
}

/// Cubic graph of order 22: two 8-cycles (a_i = i inner, b_i = 8 + i
/// outer), c-vertices between them at positions 0,1,2,3,5,6 with
/// a_i-c_i-b_i, chords c_0-c_1, c_2-c_3, c_5-c_6, and two spokes a_4-b_4
/// and a_7-b_7.
pub fn h22() -> EmbeddedGraph {
    let positions = [0usize, 1, 2, 3, 5, 6];
    let a = |i: usize| i % 8;
    let b = |i: usize| 8 + i % 8;
    let c_of = |i: usize| -> usize {
        16 + positions
            .iter()
            .position(|&p| p == i)
            .expect("c vertex exists at this position")
    };
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((a(i), a(i + 1)));
        edges.push((b(i), b(i + 1)));
    }
    for &i in &positions {
        edges.push((a(i), c_of(i)));
        edges.push((b(i), c_of(i)));
    }
    edges.push((a(4), b(4)));
    edges.push((a(7), b(7)));
    edges.push((c_of(0), c_of(1)));
    edges.push((c_of(2), c_of(3)));
    edges.push((c_of(5), c_of(6)));
    let g = Graph::from_edges(22, &edges).expect("h22 is well formed");
    let mut coords = ring_coords(8, 0.5);
    coords.extend(ring_coords(8, 1.5));
    let full = ring_coords(8, 1.0);
    coords.extend(positions.iter().map(|&p| full[p]));
    let rot = rotations_from_coords(&g, &coords);
    EmbeddedGraph::new(g, rot).expect("h22 embedding is valid")
}

/// The spokes of [`h22`].
pub fn h22_spokes() -> Vec<Edge> {
    vec![Edge::new(4, 8 + 4), Edge::new(7, 8 + 7)]
}

/// k-tree from an explicit construction: start with K_k on 0..k, then
/// each step attaches vertex k + i to the k-clique it names.
pub fn k_tree(k: usize, additions: &[Vec<VertexId>]) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(bad("ktree", "k must be positive"));
    }
    let n = k + additions.len();
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    for (step, clique) in additions.iter().enumerate() {
        let new = k + step;
        if clique.len() != k {
            return Err(FamilyError::BadKTreeStep {
                step,
                msg: format!("attachment names {} vertices, expected {k}", clique.len()),
            });
        }
        for (i, &u) in clique.iter().enumerate() {
            if u >= new {
                return Err(FamilyError::BadKTreeStep {
                    step,
                    msg: format!("vertex {u} does not exist yet"),
                });
            }
            for &v in &clique[i + 1..] {
                if !adj[u][v] {
                    return Err(FamilyError::BadKTreeStep {
                        step,
                        msg: format!("named set is not a clique: {u} and {v} not adjacent"),
                    });
                }
            }
        }
        for &u in clique {
            edges.push((new, u));
            adj[new][u] = true;
            adj[u][new] = true;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("k-tree sequence produced valid edges"))
}

/// Random k-tree of order n: each new vertex attaches to a k-clique
/// picked uniformly from all k-cliques of the current graph. Seeded
/// ChaCha8 stream, so fixtures reproduce across runs and platforms.
pub fn random_k_tree(n: usize, k: usize, seed: u64) -> Result<Graph, FamilyError> {
    if k == 0 || n < k {
        return Err(bad("ktree", format!("need n >= k >= 1, got n = {n}, k = {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cliques: Vec<Vec<VertexId>> = vec![(0..k).collect()];
    let mut additions = Vec::new();
    for step in 0..n - k {
        let new = k + step;
        let chosen = cliques
            .choose(&mut rng)
            .expect("clique list is never empty")
            .clone();
        for i in 0..k {
            let mut next: Vec<VertexId> = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            next.push(new);
            cliques.push(next);
        }
        additions.push(chosen);
    }
    k_tree(k, &additions)
}

/// Random maximal k-degenerate graph: start with K_k and add vertices of
/// degree k whose neighbors need not induce a clique.
pub fn random_maximal_k_degenerate(n: usize, k: usize, seed: u64) -> Result<Graph, FamilyError> {
    if k == 0 || n < k {
        return Err(bad(
            "maxkdeg",
            format!("need n >= k >= 1, got n = {n}, k = {k}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    for new in k..n {
        let mut targets: Vec<VertexId> = Vec::with_capacity(k);
        while targets.len() < k {
            let t = rng.gen_range(0..new);
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            edges.push((new, t));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generator produced valid edges"))
}

/// A 6-cycle with one chord joining opposite vertices, found as an
/// induced subgraph. `vertices` lists the cycle order starting at one
/// chord endpoint, so the chord joins positions 0 and 3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Brick {
    pub vertices: [VertexId; 6],
    pub chord: Edge,
}

/// All vertex subsets inducing exactly the brick pattern, each reported
/// once. Anchored on the chord edge: a brick is its chord plus two
/// disjoint 3-edge paths between the chord's endpoints.
pub fn bricks(g: &Graph) -> Vec<Brick> {
    let mut found: Vec<Brick> = Vec::new();
    let mut seen: Vec<[VertexId; 6]> = Vec::new();
    for e in g.edges() {
        let (u, w) = e.endpoints();
        for &x1 in g.neighbors(u) {
            if x1 == w {
                continue;
            }
            for &x2 in g.neighbors(w) {
                if x2 == u || x2 == x1 || !g.has_edge(x1, x2) {
                    continue;
                }
                for &y1 in g.neighbors(u) {
                    if y1 == w || y1 == x1 || y1 == x2 {
                        continue;
                    }
                    for &y2 in g.neighbors(w) {
                        if y2 == u || y2 == x1 || y2 == x2 || y2 == y1 || !g.has_edge(y1, y2) {
                            continue;
                        }
                        let members = [u, x1, x2, w, y2, y1];
                        let mut key = members;
                        key.sort_unstable();
                        if seen.contains(&key) {
                            continue;
                        }
                        if induced_edge_count(g, &members) != 7 {
                            continue;
                        }
                        seen.push(key);
                        found.push(Brick {
                            vertices: members,
                            chord: e,
                        });
                    }
                }
            }
        }
    }
    found
}

pub fn count_bricks(g: &Graph) -> usize {
    bricks(g).len()
}

fn induced_edge_count(g: &Graph, members: &[VertexId; 6]) -> usize {
    let mut count = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            if g.has_edge(members[i], members[j]) {
                count += 1;
            }
        }
    }
    count
}

/// Family name plus integer parameters, as exposed on the command line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    K4,
    Cycle { n: usize },
    Prism { r: usize },
    DoubleWheel { n: usize },
    Cube,
    Gk { k: usize },
    H22,
    KTree { n: usize, k: usize, seed: u64 },
    MaxKDeg { n: usize, k: usize, seed: u64 },
}

/// What a family constructor yields: ring families come with embeddings,
/// random k-trees and k-degenerate graphs are abstract.
#[derive(Clone, Debug)]
pub enum FamilyOutput {
    Embedded(EmbeddedGraph),
    Abstract(Graph),
}

impl FamilyOutput {
    pub fn graph(&self) -> &Graph {
        match self {
            FamilyOutput::Embedded(eg) => eg.graph(),
            FamilyOutput::Abstract(g) => g,
        }
    }

    pub fn embedded(&self) -> Option<&EmbeddedGraph> {
        match self {
            FamilyOutput::Embedded(eg) => Some(eg),
            FamilyOutput::Abstract(_) => None,
        }
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<FamilyOutput, FamilyError> {
        Ok(match *self {
            FamilySpec::K4 => FamilyOutput::Embedded(k4()),
            FamilySpec::Cycle { n } => FamilyOutput::Embedded(cycle(n)?),
            FamilySpec::Prism { r } => FamilyOutput::Embedded(prism(r)?),
            FamilySpec::DoubleWheel { n } => FamilyOutput::Embedded(double_wheel(n)?),
            FamilySpec::Cube => FamilyOutput::Embedded(cube()),
            FamilySpec::Gk { k } => FamilyOutput::Embedded(gk(k)?),
            FamilySpec::H22 => FamilyOutput::Embedded(h22()),
            FamilySpec::KTree { n, k, seed } => FamilyOutput::Abstract(random_k_tree(n, k, seed)?),
            FamilySpec::MaxKDeg { n, k, seed } => {
                FamilyOutput::Abstract(random_maximal_k_degenerate(n, k, seed)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prism_basics() {
        let p4 = prism(4).unwrap();
        assert_eq!(p4.order(), 8);
        assert!(p4.graph().is_cubic());
        assert!(p4.check_genus_zero());
        assert_eq!(p4.face_count(), 6);

        let p6 = prism(6).unwrap();
        assert_eq!(p6.order(), 12);
        assert_eq!(p6.face_count(), 8);
        // two hexagonal faces, six quadrilaterals
        let mut lengths: Vec<usize> = p6.faces().iter().map(|f| f.len()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![4, 4, 4, 4, 4, 4, 6, 6]);

        assert!(prism(2).is_err());
    }

    #[test]
    fn double_wheel_basics() {
        let dw6 = double_wheel(6).unwrap();
        assert_eq!(dw6.order(), 6);
        assert!(dw6.is_maximal_planar());
        assert!(dw6.is_4mp());
        assert!(double_wheel(5).is_err());

        let dw8 = double_wheel(8).unwrap();
        assert!(dw8.is_4mp());
    }

    #[test]
    fn dual_of_double_wheel_is_prism() {
        for n in 6..=12 {
            let dw = double_wheel(n).unwrap();
            let d = dw.dual().unwrap();
            let p = prism(n - 2).unwrap();
            assert!(
                crate::canon::are_isomorphic(d.graph(), p.graph()),
                "dual of double wheel {n} should be prism {}",
                n - 2
            );
        }
    }

    #[test]
    fn gk_basics() {
        let g4 = gk(4).unwrap();
        assert_eq!(g4.order(), 24);
        assert_eq!(g4.graph().size(), 36);
        assert!(g4.graph().is_cubic());
        assert!(g4.check_genus_zero());
        assert_eq!(g4.face_count(), 14);
        assert!(gk(1).is_err());

        // the a-ring induces a 2k-cycle
        let ring: Vec<usize> = (0..8).collect();
        let (induced, _) = g4.graph().induced(&ring).unwrap();
        assert_eq!(induced.size(), 8);
        assert!(induced.vertices().all(|v| induced.degree(v) == 2));
    }

    #[test]
    fn gk_brick_counts() {
        for k in 3..=5 {
            let g = gk(k).unwrap();
            assert_eq!(count_bricks(g.graph()), k, "gk({k}) should contain {k} bricks");
        }
        // k = 2 wraps the rings so tightly that the a- and b-cycles form
        // bricks of their own; Aut(G_2) is transitive on all six brick
        // subsets, so 6 is the only invariant answer here.
        assert_eq!(count_bricks(gk(2).unwrap().graph()), 6);
    }

    #[test]
    fn h22_basics() {
        let h = h22();
        assert_eq!(h.order(), 22);
        assert_eq!(h.graph().size(), 33);
        assert!(h.graph().is_cubic());
        assert!(h.check_genus_zero());
        assert_eq!(count_bricks(h.graph()), 3);
        for e in h22_spokes() {
            let (u, v) = e.endpoints();
            assert!(h.graph().has_edge(u, v));
        }
    }

    #[test]
    fn cube_brick_count() {
        // every edge of the cube is the chord of exactly one induced
        // C6-plus-opposite-chord subset
        assert_eq!(count_bricks(cube().graph()), 12);
    }

    #[test]
    fn k_tree_construction() {
        let t = k_tree(3, &[]).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.size(), 3);

        // vertex 3 does not exist yet when step 1 runs
        assert!(k_tree(2, &[vec![0, 1], vec![0, 3]]).is_err());
        let t = k_tree(2, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.size(), 5);
    }

    #[test]
    fn random_k_tree_size_formula() {
        let t = random_k_tree(10, 2, 7).unwrap();
        assert_eq!(t.order(), 10);
        assert_eq!(t.size(), 17);
        assert_eq!(random_k_tree(10, 2, 7).unwrap(), t);
        let t = random_k_tree(9, 3, 1).unwrap();
        assert_eq!(t.size(), 3 * 9 - 6);
    }

    #[test]
    fn random_maximal_k_degenerate_size() {
        let g = random_maximal_k_degenerate(5, 2, 3).unwrap();
        assert_eq!(g.size(), 7);
        let g = random_maximal_k_degenerate(12, 3, 9).unwrap();
        assert_eq!(g.size(), 3 * 12 - 6);
    }
}
