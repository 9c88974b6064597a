//! Canonical labeling by color refinement plus individualization.
//!
//! The canonical form of a graph is the lexicographically least relabeled
//! edge list over all leaves of the individualization-refinement tree, so
//! equal forms mean isomorphic graphs. Correctness is attested by the
//! brute-force permutation oracle in the test suite rather than argued
//! here; the graphs this crate handles stay at desk scale.

use crate::graph::Graph;

/// Canonical edge list under a canonical vertex relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    order: usize,
    edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        Graph::from_edges(self.order, &edges).expect("canonical form is a valid graph")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            order: 0,
            edges: Vec::new(),
        };
    }
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best: Option<Vec<(u32, u32)>> = None;
    search(g, &colors, &mut best);
    CanonicalForm {
        order: n,
        edges: best.expect("at least one labeling exists"),
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// 1-WL color refinement to a fixpoint. Color ids are assigned by sorted
/// signature rank, so the result is isomorphism-invariant.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            nbr.sort_unstable();
            signatures.push((colors[v], nbr));
        }
        let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let old_count = count_colors(colors);
        for v in 0..n {
            colors[v] = distinct
                .binary_search(&&signatures[v])
                .expect("own signature present") as u32;
        }
        if count_colors(colors) == old_count {
            return;
        }
    }
}

fn count_colors(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn search(g: &Graph, colors: &[u32], best: &mut Option<Vec<(u32, u32)>>) {
    let n = g.order();
    // first non-singleton color class, by color value
    let mut target: Option<u32> = None;
    let mut counts = vec![0usize; n + 1];
    for &c in colors {
        counts[c as usize] += 1;
    }
    for (c, &cnt) in counts.iter().enumerate() {
        if cnt > 1 {
            target = Some(c as u32);
            break;
        }
    }
    let Some(cell) = target else {
        // discrete: color value is the canonical label
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(g.size());
        for u in 0..n {
            for &v in g.neighbors(u) {
                if u < v {
                    let (a, b) = (colors[u], colors[v]);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        match best {
            Some(b) if *b <= edges => {}
            _ => *best = Some(edges),
        }
        return;
    };
    for v in 0..n {
        if colors[v] != cell {
            continue;
        }
        // individualize v: split it below its class, keeping class order
        let mut child: Vec<u32> = colors.iter().map(|&c| c * 2 + 1).collect();
        child[v] = colors[v] * 2;
        refine(g, &mut child);
        search(g, &child, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_have_equal_forms() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        // relabel by the permutation 0->3, 1->0, 2->4, 3->1, 4->2
        let p = [3usize, 0, 4, 1, 2];
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                (p[u], p[v])
            })
            .collect();
        let h = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn different_graphs_have_unequal_forms() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&path), canonical_form(&star));
        assert!(!are_isomorphic(&path, &star));
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let g = Graph::from_edges(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (1, 4)]).unwrap();
        let c = canonical_form(&g).to_graph();
        assert_eq!(canonical_form(&c), canonical_form(&g));
    }
}
