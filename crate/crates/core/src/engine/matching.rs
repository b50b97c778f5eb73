use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::{Error, Result};

/// Which routine produced a [`Matching`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BruteForce,
    BranchAndBound,
    Greedy,
    Construction,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::BruteForce => "brute_force",
            Provenance::BranchAndBound => "branch_and_bound",
            Provenance::Greedy => "greedy",
            Provenance::Construction => "construction",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why an edge set is not an induced matching: edges `first < second` either
/// share an endpoint (`link` is `None`) or are joined by the edge `link`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub first: EdgeId,
    pub second: EdgeId,
    pub link: Option<EdgeId>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.link {
            None => write!(f, "edges {} and {} share an endpoint", self.first, self.second),
            Some(link) => write!(
                f,
                "edge {link} joins endpoints of edges {} and {}",
                self.first, self.second
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Violation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks the induced-matching definition directly against `g`: members are
/// pairwise vertex-disjoint and no edge of `g` joins endpoints of two distinct
/// members. Duplicate ids are treated as one. Reports the first offending pair
/// in `(first, second)` order.
pub fn is_induced_matching(g: &Graph, edge_ids: &[EdgeId]) -> Result<Validity> {
    let mut ids = edge_ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let ends = ids
        .iter()
        .map(|&id| g.edge(id))
        .collect::<Result<Vec<_>>>()?;

    for (i, &(a, b)) in ends.iter().enumerate() {
        for (j, &(c, d)) in ends.iter().enumerate().skip(i + 1) {
            let mut violation = Violation {
                first: ids[i],
                second: ids[j],
                link: None,
            };
            if a == c || a == d || b == c || b == d {
                return Ok(Validity::Invalid(violation));
            }
            let link = [(a, c), (a, d), (b, c), (b, d)]
                .into_iter()
                .filter_map(|(x, y)| g.edge_id(x, y))
                .min();
            if link.is_some() {
                violation.link = link;
                return Ok(Validity::Invalid(violation));
            }
        }
    }
    Ok(Validity::Valid)
}

/// A certified induced matching: the only way to build one is through
/// [`Matching::certify`], which runs [`is_induced_matching`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edge_ids: Vec<EdgeId>,
    provenance: Provenance,
}

impl Matching {
    pub fn certify(g: &Graph, edge_ids: &[EdgeId], provenance: Provenance) -> Result<Self> {
        match is_induced_matching(g, edge_ids)? {
            Validity::Valid => {
                let mut edge_ids = edge_ids.to_vec();
                edge_ids.sort_unstable();
                edge_ids.dedup();
                Ok(Matching {
                    edge_ids,
                    provenance,
                })
            }
            Validity::Invalid(v) => Err(Error::NotInduced(v)),
        }
    }

    pub fn empty(provenance: Provenance) -> Self {
        Matching {
            edge_ids: Vec::new(),
            provenance,
        }
    }

    /// Sorted edge ids.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn size(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.edge_ids.binary_search(&edge).is_ok()
    }

    /// Endpoint pairs of the members, in edge-id order.
    pub fn edges<'g>(&'g self, g: &'g Graph) -> impl Iterator<Item = (Vertex, Vertex)> + 'g {
        self.edge_ids.iter().map(move |&id| g.edges()[id])
    }

    pub fn saturates(&self, g: &Graph, v: Vertex) -> bool {
        self.edges(g).any(|(a, b)| a == v || b == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path;

    #[test]
    fn p4_outer_edges_are_bridged() {
        let g = path(4).unwrap();
        let verdict = is_induced_matching(&g, &[0, 2]).unwrap();
        assert_eq!(
            verdict,
            Validity::Invalid(Violation {
                first: 0,
                second: 2,
                link: Some(1)
            })
        );
    }

    #[test]
    fn p5_outer_edges_are_induced() {
        let g = path(5).unwrap();
        let ids = [g.edge_id(0, 1).unwrap(), g.edge_id(3, 4).unwrap()];
        assert!(is_induced_matching(&g, &ids).unwrap().is_valid());
    }

    #[test]
    fn empty_set_is_valid() {
        let g = path(3).unwrap();
        assert!(is_induced_matching(&g, &[]).unwrap().is_valid());
        assert_eq!(Matching::certify(&g, &[], Provenance::Greedy).unwrap().size(), 0);
    }

    #[test]
    fn shared_endpoint_and_bad_id() {
        let g = path(3).unwrap();
        assert_eq!(
            is_induced_matching(&g, &[1, 0]).unwrap(),
            Validity::Invalid(Violation {
                first: 0,
                second: 1,
                link: None
            })
        );
        assert!(matches!(
            is_induced_matching(&g, &[5]),
            Err(Error::InvalidEdgeId { edge: 5, .. })
        ));
        assert!(matches!(
            Matching::certify(&g, &[0, 1], Provenance::Construction),
            Err(Error::NotInduced(_))
        ));
    }

    #[test]
    fn saturation() {
        let g = path(5).unwrap();
        let m = Matching::certify(&g, &[3, 0, 0], Provenance::Construction).unwrap();
        assert_eq!(m.edge_ids(), &[0, 3]);
        assert!(m.saturates(&g, 4) && !m.saturates(&g, 2));
    }
}
