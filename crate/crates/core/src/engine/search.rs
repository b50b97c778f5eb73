//! Maximum independent set search on a [`ConflictGraph`].

use alloc::vec::Vec;

use super::budget::Budget;
use super::conflict::ConflictGraph;
use crate::bitset::BitSet;

/// Greedy clique cover of `cand`; the number of cliques bounds any
/// independent set inside `cand` from above.
pub(crate) fn clique_cover_bound(cg: &ConflictGraph<'_>, cand: &BitSet) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0;
    while let Some(u) = rest.first() {
        rest.remove(u);
        let mut extend = rest.clone();
        extend.intersect_with(cg.neighbors(u));
        while let Some(w) = extend.first() {
            rest.remove(w);
            extend.remove(w);
            extend.intersect_with(cg.neighbors(w));
        }
        cliques += 1;
    }
    cliques
}

/// Min-degree greedy inside `cand`: repeatedly pick the node with the fewest
/// conflicts among the remaining candidates (lowest id on ties) and drop its
/// closed neighborhood.
pub(crate) fn greedy_independent(cg: &ConflictGraph<'_>, cand: &BitSet) -> Vec<usize> {
    let mut rest = cand.clone();
    let mut picked = Vec::new();
    while !rest.is_empty() {
        let v = rest
            .iter()
            .min_by_key(|&v| (cg.neighbors(v).intersection_count(&rest), v))
            .expect("nonempty");
        picked.push(v);
        rest.difference_with(cg.closed_neighbors(v));
    }
    picked.sort_unstable();
    picked
}

pub(crate) struct Outcome {
    pub nodes: Vec<usize>,
    pub optimal: bool,
    pub explored: u64,
}

/// Branch and bound: isolated candidates are taken outright; otherwise branch
/// on the candidate with the most conflicts inside the candidate set (lowest
/// id on ties), "take" before "leave"; prune when the current size plus the
/// clique-cover bound cannot beat the incumbent.
pub(crate) struct BranchAndBound<'a, 'g, B: ?Sized> {
    cg: &'a ConflictGraph<'g>,
    budget: &'a mut B,
    current: Vec<usize>,
    best: Vec<usize>,
    aborted: bool,
    explored: u64,
}

impl<'a, 'g, B: Budget + ?Sized> BranchAndBound<'a, 'g, B> {
    pub fn run(
        cg: &'a ConflictGraph<'g>,
        fixed: &[usize],
        cand: BitSet,
        budget: &'a mut B,
    ) -> Outcome {
        let mut best = fixed.to_vec();
        best.extend(greedy_independent(cg, &cand));
        let mut search = BranchAndBound {
            cg,
            budget,
            current: fixed.to_vec(),
            best,
            aborted: false,
            explored: 0,
        };
        search.expand(cand);
        let mut nodes = search.best;
        nodes.sort_unstable();
        Outcome {
            nodes,
            optimal: !search.aborted,
            explored: search.explored,
        }
    }

    fn expand(&mut self, mut cand: BitSet) {
        if self.aborted {
            return;
        }
        self.explored += 1;
        if self.budget.tick() {
            self.aborted = true;
            return;
        }

        let depth = self.current.len();
        let mut pivot = None;
        let mut pivot_degree = 0;
        let isolated: Vec<usize> = cand
            .iter()
            .filter(|&v| {
                let d = self.cg.neighbors(v).intersection_count(&cand);
                if d > pivot_degree {
                    pivot = Some(v);
                    pivot_degree = d;
                }
                d == 0
            })
            .collect();
        for &v in &isolated {
            cand.remove(v);
            self.current.push(v);
        }

        match pivot {
            None => {
                if self.current.len() > self.best.len() {
                    self.best.clone_from(&self.current);
                }
            }
            Some(v) => {
                if self.current.len() + clique_cover_bound(self.cg, &cand) > self.best.len() {
                    let mut take = cand.clone();
                    take.difference_with(self.cg.closed_neighbors(v));
                    self.current.push(v);
                    self.expand(take);
                    self.current.pop();

                    cand.remove(v);
                    self.expand(cand);
                }
            }
        }
        self.current.truncate(depth);
    }
}

/// Calls `visit` with every independent set of exactly `target` nodes inside
/// `cand`, extending `prefix`, in lexicographic order. Stops early when
/// `visit` returns `false`. Prunes with the clique-cover bound, so `target`
/// should be the maximum.
pub(crate) fn for_each_of_size<F>(
    cg: &ConflictGraph<'_>,
    prefix: &mut Vec<usize>,
    cand: BitSet,
    target: usize,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if prefix.len() == target {
        return visit(prefix);
    }
    if prefix.len() + clique_cover_bound(cg, &cand) < target {
        return true;
    }
    let Some(v) = cand.first() else {
        return true;
    };
    let mut take = cand.clone();
    take.difference_with(cg.closed_neighbors(v));
    prefix.push(v);
    let go_on = for_each_of_size(cg, prefix, take, target, visit);
    prefix.pop();
    if !go_on {
        return false;
    }
    let mut leave = cand;
    leave.remove(v);
    for_each_of_size(cg, prefix, leave, target, visit)
}
