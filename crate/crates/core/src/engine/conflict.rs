use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::graph::{EdgeId, Graph};

/// The square of the line graph: one node per edge of the source graph, two
/// nodes adjacent iff the edges cannot both lie in an induced matching.
///
/// Edges `e` and `f` conflict iff they share an endpoint or an edge of the
/// source graph joins an endpoint of `e` to an endpoint of `f`. Induced
/// matchings of the source are exactly the independent sets here.
#[derive(Debug, Clone)]
pub struct ConflictGraph<'g> {
    source: &'g Graph,
    rows: Vec<BitSet>,
    closed: Vec<BitSet>,
}

impl<'g> ConflictGraph<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let k = g.edge_count();
        let mut rows = Vec::with_capacity(k);
        let mut closed = Vec::with_capacity(k);
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            // f conflicts with e iff f touches N[a] ∪ N[b].
            let mut row = BitSet::new(k);
            let reach = [a, b].into_iter().chain(g.neighbors(a).iter().copied()).chain(g.neighbors(b).iter().copied());
            for v in reach {
                for &f in g.incident_edges(v) {
                    row.insert(f);
                }
            }
            let closed_row = row.clone();
            row.remove(id);
            rows.push(row);
            closed.push(closed_row);
        }
        ConflictGraph {
            source: g,
            rows,
            closed,
        }
    }

    pub fn source(&self) -> &'g Graph {
        self.source
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    pub fn conflicts(&self, e: EdgeId, f: EdgeId) -> bool {
        self.rows[e].contains(f)
    }

    /// Open conflict neighborhood of `e`.
    pub fn neighbors(&self, e: EdgeId) -> &BitSet {
        &self.rows[e]
    }

    /// Conflict neighborhood of `e` including `e`.
    pub fn closed_neighbors(&self, e: EdgeId) -> &BitSet {
        &self.closed[e]
    }

    pub fn degree(&self, e: EdgeId) -> usize {
        self.rows[e].count()
    }

    pub fn conflict_pairs(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_independent(&self, nodes: &[EdgeId]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &e)| nodes[i + 1..].iter().all(|&f| e != f && !self.conflicts(e, f)))
    }

    /// Conflict-free set with every node.
    pub fn all_nodes(&self) -> BitSet {
        BitSet::full(self.node_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};

    #[test]
    fn p3_has_one_conflict() {
        let g = path(3).unwrap();
        let cg = ConflictGraph::new(&g);
        assert_eq!(cg.node_count(), 2);
        assert_eq!(cg.conflict_pairs(), 1);
    }

    #[test]
    fn p4_is_a_triangle() {
        let g = path(4).unwrap();
        let cg = ConflictGraph::new(&g);
        assert_eq!(cg.conflict_pairs(), 3);
        assert!(cg.conflicts(0, 2));
    }

    #[test]
    fn star_is_complete() {
        for m in 2..9 {
            let g = star(m).unwrap();
            let cg = ConflictGraph::new(&g);
            assert_eq!(cg.conflict_pairs(), (m - 1) * (m - 2) / 2);
            assert!((0..m - 1).all(|e| cg.degree(e) == m - 2));
        }
    }

    #[test]
    fn p5_outer_edges_are_free() {
        let g = path(5).unwrap();
        let cg = ConflictGraph::new(&g);
        assert!(!cg.conflicts(0, 3));
        assert!(cg.is_independent(&[0, 3]));
        assert!(!cg.is_independent(&[0, 0]));
        assert!(cg.closed_neighbors(1).contains(1));
        assert!(!cg.neighbors(1).contains(1));
    }
}
