//! Generators for paths, cycles, stars, `P_3 □ P_n` grids and stacked books.
//!
//! Conventions: `P_n` has `n` vertices, `C_n` has `n` vertices and `n` edges,
//! `S_m` has a center (vertex 0) and `m - 1` leaves.

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::graph::{cartesian_product, Graph, Vertex};
use crate::{Error, Result};

fn param_error(family: &'static str, reason: impl ToString) -> Error {
    Error::FamilyParameter {
        family,
        reason: reason.to_string(),
    }
}

/// Path on `n ≥ 1` vertices with edges `(i, i + 1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param_error("path", "n must be at least 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n ≥ 3` vertices with edges `(i, (i + 1) mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_error("cycle", "n must be at least 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star on `m ≥ 2` vertices; vertex 0 is the center.
pub fn star(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(param_error("star", "m must be at least 2"));
    }
    Graph::new(m, (1..m).map(|j| (0, j)))
}

/// `P_3 □ P_n`, labeled by [`cartesian_product`].
pub fn grid3(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param_error("grid3", "n must be at least 1"));
    }
    cartesian_product(&path(3)?, &path(n)?)
}

/// Names the vertices of a stacked book `S_m □ P_n` by column `i ∈ [1, n]`
/// and position `j ∈ [1, m]`. Position 1 is the column's star center; 2..=m
/// are its leaves.
///
/// Vertex id of `(i, j)` is `(i - 1) * m + (j - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BookLabeling {
    m: usize,
    n: usize,
}

impl BookLabeling {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(param_error("stacked_book", "m must be at least 2"));
        }
        if n < 1 {
            return Err(param_error("stacked_book", "n must be at least 1"));
        }
        Ok(BookLabeling { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn to_id(&self, column: usize, position: usize) -> Option<Vertex> {
        ((1..=self.n).contains(&column) && (1..=self.m).contains(&position))
            .then(|| (column - 1) * self.m + (position - 1))
    }

    pub fn from_id(&self, id: Vertex) -> Option<(usize, usize)> {
        (id < self.vertex_count()).then(|| (id / self.m + 1, id % self.m + 1))
    }

    /// Vertex id of `(column, position)`. Panics when out of range.
    pub fn vertex(&self, column: usize, position: usize) -> Vertex {
        self.to_id(column, position)
            .unwrap_or_else(|| panic!("({column}, {position}) outside a {}x{} book", self.m, self.n))
    }

    pub fn center(&self, column: usize) -> Vertex {
        self.vertex(column, 1)
    }

    pub fn is_center(&self, id: Vertex) -> bool {
        id < self.vertex_count() && id.is_multiple_of(self.m)
    }
}

/// Stacked book `S_m □ P_n` with its labeling.
///
/// Built as `P_n □ S_m`, whose product ids coincide with the book labeling.
pub fn stacked_book(m: usize, n: usize) -> Result<(Graph, BookLabeling)> {
    let labeling = BookLabeling::new(m, n)?;
    let graph = cartesian_product(&path(n)?, &star(m)?)?;
    Ok((graph, labeling))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Grid3(usize),
    StackedBook { m: usize, n: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(m) => star(m),
            FamilySpec::Grid3(n) => grid3(n),
            FamilySpec::StackedBook { m, n } => stacked_book(m, n).map(|(g, _)| g),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(m) => write!(f, "star:{m}"),
            FamilySpec::Grid3(n) => write!(f, "grid3:{n}"),
            FamilySpec::StackedBook { m, n } => write!(f, "book:{m}x{n}"),
        }
    }
}

/// Parses `path:<n>`, `cycle:<n>`, `star:<m>`, `grid3:<n>` and `book:<m>x<n>`,
/// checking parameter ranges.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| param_error("family spec", format!("{s:?}: {reason}"));
        let (kind, args) = s.split_once(':').ok_or_else(|| bad("expected <kind>:<params>"))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad("expected an integer"));
        let spec = match kind.trim() {
            "path" => FamilySpec::Path(num(args)?),
            "cycle" => FamilySpec::Cycle(num(args)?),
            "star" => FamilySpec::Star(num(args)?),
            "grid3" => FamilySpec::Grid3(num(args)?),
            "book" => {
                let (m, n) = args.split_once('x').ok_or_else(|| bad("expected <m>x<n>"))?;
                FamilySpec::StackedBook {
                    m: num(m)?,
                    n: num(n)?,
                }
            }
            _ => return Err(bad("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let (family, ok, reason) = match *self {
            FamilySpec::Path(n) => ("path", n >= 1, "n must be at least 1"),
            FamilySpec::Cycle(n) => ("cycle", n >= 3, "n must be at least 3"),
            FamilySpec::Star(m) => ("star", m >= 2, "m must be at least 2"),
            FamilySpec::Grid3(n) => ("grid3", n >= 1, "n must be at least 1"),
            FamilySpec::StackedBook { m, n } => {
                ("stacked_book", m >= 2 && n >= 1, "need m >= 2 and n >= 1")
            }
        };
        if ok {
            Ok(())
        } else {
            Err(param_error(family, reason))
        }
    }
}
