//! Explicit induced matchings on stacked books, each machine-certified.
//!
//! Columns and positions follow [`BookLabeling`]: `(i, 1)` is the center of
//! column `i`, `(i, j)` for `j ≥ 2` its leaves. Star edges always use leaf 2.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::engine::{greedy_lower_bound, is_induced_matching, Matching, Provenance};
use crate::families::{stacked_book, BookLabeling};
use crate::formula::{im_book_exact, im_book_lower_bound};
use crate::graph::{EdgeId, Graph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// One star edge in column 1.
    SingleStar,
    /// Leaf cross edges between columns 1 and 2.
    CrossLeaves,
    /// Leaf cross edges between columns 2 and 3.
    MiddleCrossLeaves,
    /// Leaf cross edges between columns 1 and 2 plus a star edge in column 4.
    CrossLeavesAndStar,
    /// Leaf cross edges 1–2 and 4–5: two edges on every row path.
    TwoPerRow,
    /// Leaf cross-edge blocks at columns `c ≡ 1 (mod 4)`.
    Period4,
    /// [`Scheme::Period4`] plus every star edge the checker admits.
    Period4WithStars,
    Greedy,
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::SingleStar => "single_star",
            Scheme::CrossLeaves => "cross_leaves",
            Scheme::MiddleCrossLeaves => "middle_cross_leaves",
            Scheme::CrossLeavesAndStar => "cross_leaves_and_star",
            Scheme::TwoPerRow => "two_per_row",
            Scheme::Period4 => "period4",
            Scheme::Period4WithStars => "period4_with_stars",
            Scheme::Greedy => "greedy",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub labeling: BookLabeling,
    pub matching: Matching,
    /// What the matching closed form promises for this instance.
    pub claimed_size: u64,
    pub achieved_size: usize,
    pub scheme: Scheme,
}

fn need_m3(m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::FamilyParameter {
            family: "construction",
            reason: format!("m = {m}: constructions need m >= 3"),
        });
    }
    Ok(())
}

fn edge(g: &Graph, book: &BookLabeling, (i, j): (usize, usize), (k, l): (usize, usize)) -> EdgeId {
    g.edge_id(book.vertex(i, j), book.vertex(k, l))
        .expect("construction only names edges of the book")
}

/// Leaf cross edges `(c, j)–(c + 1, j)` for `j ∈ [2, m]`.
fn cross_leaves<'g>(g: &'g Graph, book: &BookLabeling, c: usize) -> impl Iterator<Item = EdgeId> + 'g {
    let book = *book;
    (2..=book.m()).map(move |j| edge(g, &book, (c, j), (c + 1, j)))
}

fn star_edge(g: &Graph, book: &BookLabeling, c: usize) -> EdgeId {
    edge(g, book, (c, 1), (c, 2))
}

fn finish(
    graph: Graph,
    labeling: BookLabeling,
    ids: &[EdgeId],
    claimed_size: u64,
    scheme: Scheme,
) -> Result<ConstructionResult> {
    let matching = Matching::certify(&graph, ids, Provenance::Construction)?;
    Ok(ConstructionResult {
        achieved_size: matching.size(),
        graph,
        labeling,
        matching,
        claimed_size,
        scheme,
    })
}

fn claimed(m: usize, n: usize) -> Result<u64> {
    Ok(im_book_exact(m as u64, n as u64)?.value)
}

/// `G_{m,1}`: a single star edge.
pub fn construct_n1(m: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    let (g, book) = stacked_book(m, 1)?;
    let ids = [star_edge(&g, &book, 1)];
    finish(g, book, &ids, claimed(m, 1)?, Scheme::SingleStar)
}

/// `G_{m,2}`: `{(1, j)–(2, j) : j ∈ [2, m]}`, size `m − 1`.
pub fn construct_n2(m: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    let (g, book) = stacked_book(m, 2)?;
    let ids: Vec<_> = cross_leaves(&g, &book, 1).collect();
    finish(g, book, &ids, claimed(m, 2)?, Scheme::CrossLeaves)
}

/// `G_{m,3}`: `{(2, j)–(3, j) : j ∈ [2, m]}`, size `m − 1`; touches no center.
pub fn construct_n3(m: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    let (g, book) = stacked_book(m, 3)?;
    let ids: Vec<_> = cross_leaves(&g, &book, 2).collect();
    finish(g, book, &ids, claimed(m, 3)?, Scheme::MiddleCrossLeaves)
}

/// `G_{m,4}`: leaf cross edges between columns 1 and 2 plus the star edge
/// `(4, 1)–(4, 2)`, size `m`.
pub fn construct_n4(m: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    let (g, book) = stacked_book(m, 4)?;
    let mut ids: Vec<_> = cross_leaves(&g, &book, 1).collect();
    ids.push(star_edge(&g, &book, 4));
    finish(g, book, &ids, claimed(m, 4)?, Scheme::CrossLeavesAndStar)
}

/// `G_{m,5}`: on each leaf row `j`, the path `(1,j)…(5,j)` contributes its
/// edges 1–2 and 4–5. Size `2(m − 1)`.
pub fn construct_n5(m: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    let (g, book) = stacked_book(m, 5)?;
    let ids: Vec<_> = cross_leaves(&g, &book, 1)
        .chain(cross_leaves(&g, &book, 4))
        .collect();
    finish(g, book, &ids, claimed(m, 5)?, Scheme::TwoPerRow)
}

/// Best certified matching for `n ≥ 6` among three schemes, tried in order
/// (ties keep the earlier one):
///
/// 1. [`Scheme::Period4`]: leaf cross-edge blocks at columns 1, 5, 9, …
///    separated by two spacer columns.
/// 2. [`Scheme::Period4WithStars`]: scheme 1 plus, column by column, every
///    star edge `(c, 1)–(c, 2)` the checker still admits.
/// 3. [`Scheme::Greedy`] on the whole graph.
///
/// `claimed_size` is the general lower-bound formula; `achieved_size` may
/// fall short of it.
pub fn construct_general(m: usize, n: usize) -> Result<ConstructionResult> {
    need_m3(m)?;
    if n < 6 {
        return Err(Error::FamilyParameter {
            family: "construction",
            reason: format!("n = {n}: the general construction needs n >= 6"),
        });
    }
    let claimed_size = im_book_lower_bound(m as u64, n as u64)?.value;
    let (g, book) = stacked_book(m, n)?;

    let tiling: Vec<EdgeId> = (1..n)
        .step_by(4)
        .flat_map(|c| cross_leaves(&g, &book, c))
        .collect();

    let mut augmented = tiling.clone();
    for c in 1..=n {
        augmented.push(star_edge(&g, &book, c));
        if !is_induced_matching(&g, &augmented)?.is_valid() {
            augmented.pop();
        }
    }

    let greedy = greedy_lower_bound(&g);

    let mut best = (Scheme::Period4, tiling);
    for candidate in [
        (Scheme::Period4WithStars, augmented),
        (Scheme::Greedy, greedy.edge_ids().to_vec()),
    ] {
        if candidate.1.len() > best.1.len() {
            best = candidate;
        }
    }
    finish(g, book, &best.1, claimed_size, best.0)
}

/// Construction for any stacked book: the fixed-column builders for
/// `n ≤ 5`, [`construct_general`] beyond, and greedy when `m < 3`.
pub fn construct_for(m: usize, n: usize) -> Result<ConstructionResult> {
    if m < 3 {
        let (g, book) = stacked_book(m, n)?;
        let ids = greedy_lower_bound(&g).edge_ids().to_vec();
        let claimed = ids.len() as u64;
        return finish(g, book, &ids, claimed, Scheme::Greedy);
    }
    match n {
        1 => construct_n1(m),
        2 => construct_n2(m),
        3 => construct_n3(m),
        4 => construct_n4(m),
        5 => construct_n5(m),
        _ => construct_general(m, n),
    }
}
