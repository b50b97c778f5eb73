//! Immutable simple undirected graphs.
//!
//! Vertices are dense ids `0..vertex_count`. Edges are stored once as
//! `(min, max)` pairs, sorted lexicographically; an edge's id is its position
//! in that list, so the same vertex and edge set always yields the same ids no
//! matter how the input pairs were ordered or oriented.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    incident: Vec<Vec<EdgeId>>,
}

/// Shortest-path length, or [`Distance::Unreachable`] across components.
///
/// `Unreachable` compares greater than every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Unreachable) => Ordering::Less,
            (Distance::Unreachable, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Unreachable, Distance::Unreachable) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Graph {
    /// Builds a graph from pairs in any order or orientation. Duplicate pairs
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(vertex_count: usize, edge_pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_pairs {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::EndpointOutOfRange {
                    u,
                    v,
                    vertex_count,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }

        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order; index = edge id.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<(Vertex, Vertex)> {
        self.edges.get(id).copied().ok_or(Error::InvalidEdgeId {
            edge: id,
            edge_count: self.edges.len(),
        })
    }

    /// Id of the edge joining `u` and `v`, in either orientation.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// Ids of the edges incident to `v`, ascending. Panics if `v` is out of range.
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn bfs(&self, source: Vertex) -> Result<Vec<Distance>> {
        self.check_vertex(source)?;
        let mut dist = vec![Distance::Unreachable; self.vertex_count];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!("queued vertices have finite distance")
            };
            for &w in &self.adjacency[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance> {
        self.check_vertex(v)?;
        Ok(self.bfs(u)?[v])
    }

    /// Largest pairwise distance; `Unreachable` if the graph is disconnected.
    pub fn diameter(&self) -> Result<Distance> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = Distance::Finite(0);
        for v in 0..self.vertex_count {
            let far = self.bfs(v)?.into_iter().max().unwrap_or(Distance::Finite(0));
            if far == Distance::Unreachable {
                return Ok(far);
            }
            best = best.max(far);
        }
        Ok(best)
    }

    /// Degrees sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }
}

/// Cartesian product `g □ h`.
///
/// The product vertex `(a, b)` with `a ∈ V(g)`, `b ∈ V(h)` gets id
/// `a * h.vertex_count() + b`. `(a, b) ~ (a', b')` iff `a = a'` and `b ~ b'`
/// in `h`, or `b = b'` and `a ~ a'` in `g`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let width = h.vertex_count();
    let id = |a: Vertex, b: Vertex| a * width + b;
    let mut pairs = Vec::with_capacity(
        g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count(),
    );
    for a in 0..g.vertex_count() {
        for &(b, c) in h.edges() {
            pairs.push((id(a, b), id(a, c)));
        }
    }
    for &(a, c) in g.edges() {
        for b in 0..width {
            pairs.push((id(a, b), id(c, b)));
        }
    }
    Graph::new(g.vertex_count() * width, pairs)
}
