//! Maximum induced matchings via the conflict-graph reduction.
//!
//! Every routine here works on the [`ConflictGraph`] of its input: induced
//! matchings of `g` are the independent sets of that graph. Witnesses are
//! always returned as certified [`Matching`]s.

mod budget;
mod conflict;
mod matching;
mod search;

use alloc::vec::Vec;

pub use budget::{Budget, NodeLimit, Unlimited};
pub use conflict::ConflictGraph;
pub use matching::{is_induced_matching, Matching, Provenance, Validity, Violation};

use crate::graph::{EdgeId, Graph};
use crate::{Error, Result};
use search::{for_each_of_size, greedy_independent, BranchAndBound};

/// Largest edge count [`im_bruteforce`] accepts.
pub const BRUTE_FORCE_EDGE_CAP: usize = 24;

pub fn conflict_graph(g: &Graph) -> ConflictGraph<'_> {
    ConflictGraph::new(g)
}

/// Result of a budgeted exact search. When `optimal` is false the budget ran
/// out and `matching` is only a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub matching: Matching,
    pub optimal: bool,
    /// Branch-and-bound nodes visited.
    pub explored: u64,
}

/// Exhaustive enumeration of all independent sets of the conflict graph.
///
/// Returns the lexicographically smallest maximum edge-id set. Refuses graphs
/// with more than [`BRUTE_FORCE_EDGE_CAP`] edges.
pub fn im_bruteforce(g: &Graph) -> Result<Matching> {
    let k = g.edge_count();
    if k > BRUTE_FORCE_EDGE_CAP {
        return Err(Error::BruteForceCap {
            edges: k,
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    let cg = ConflictGraph::new(g);
    let masks: Vec<u32> = (0..k)
        .map(|e| cg.neighbors(e).iter().fold(0u32, |m, f| m | 1 << f))
        .collect();

    // Include-before-exclude visits equal-size sets in lexicographic order,
    // so the first strictly larger set found is the lexicographic minimum.
    fn visit(masks: &[u32], i: usize, set: u32, blocked: u32, best: &mut u32) {
        if i == masks.len() {
            if set.count_ones() > best.count_ones() {
                *best = set;
            }
            return;
        }
        if blocked & (1 << i) == 0 {
            visit(masks, i + 1, set | 1 << i, blocked | masks[i], best);
        }
        visit(masks, i + 1, set, blocked, best);
    }
    let mut best = 0u32;
    visit(&masks, 0, 0, 0, &mut best);

    let ids: Vec<EdgeId> = (0..k).filter(|&e| best & (1 << e) != 0).collect();
    Matching::certify(g, &ids, Provenance::BruteForce)
}

/// Branch-and-bound maximum induced matching.
pub fn im_exact<B: Budget + ?Sized>(g: &Graph, budget: &mut B) -> ExactResult {
    let cg = ConflictGraph::new(g);
    let outcome = BranchAndBound::run(&cg, &[], cg.all_nodes(), budget);
    ExactResult {
        matching: Matching::certify(g, &outcome.nodes, Provenance::BranchAndBound)
            .expect("independent sets of the conflict graph are induced matchings"),
        optimal: outcome.optimal,
        explored: outcome.explored,
    }
}

/// Maximum induced matching that contains every edge of `required`.
///
/// Fails with [`Error::NotInduced`] if `required` is not itself an induced
/// matching.
pub fn im_exact_forced<B: Budget + ?Sized>(
    g: &Graph,
    required: &[EdgeId],
    budget: &mut B,
) -> Result<ExactResult> {
    let fixed = Matching::certify(g, required, Provenance::BranchAndBound)?;
    let cg = ConflictGraph::new(g);
    let mut cand = cg.all_nodes();
    for &e in fixed.edge_ids() {
        cand.difference_with(cg.closed_neighbors(e));
    }
    let outcome = BranchAndBound::run(&cg, fixed.edge_ids(), cand, budget);
    Ok(ExactResult {
        matching: Matching::certify(g, &outcome.nodes, Provenance::BranchAndBound)?,
        optimal: outcome.optimal,
        explored: outcome.explored,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Maximum induced matchings in lexicographic edge-id order.
    pub matchings: Vec<Matching>,
    /// The cap was hit before enumeration finished.
    pub truncated: bool,
}

/// Every maximum induced matching of `g`, up to `cap` of them.
///
/// Runs an unbudgeted exact solve first, so keep inputs at desk scale.
pub fn enumerate_mims(g: &Graph, cap: usize) -> Enumeration {
    let target = im_exact(g, &mut Unlimited).matching.size();
    let cg = ConflictGraph::new(g);
    let mut matchings = Vec::new();
    let mut truncated = false;
    if cap == 0 {
        return Enumeration {
            matchings,
            truncated: true,
        };
    }
    for_each_of_size(&cg, &mut Vec::new(), cg.all_nodes(), target, &mut |set| {
        if matchings.len() == cap {
            truncated = true;
            return false;
        }
        matchings.push(
            Matching::certify(g, set, Provenance::BranchAndBound)
                .expect("independent sets of the conflict graph are induced matchings"),
        );
        true
    });
    Enumeration {
        matchings,
        truncated,
    }
}

/// Min-conflict-degree greedy. Fast, always valid, not necessarily maximum.
pub fn greedy_lower_bound(g: &Graph) -> Matching {
    let cg = ConflictGraph::new(g);
    let ids = greedy_independent(&cg, &cg.all_nodes());
    Matching::certify(g, &ids, Provenance::Greedy)
        .expect("independent sets of the conflict graph are induced matchings")
}
