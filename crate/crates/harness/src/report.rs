//! Per-instance reconciliation of solver, closed forms and constructions.

use std::fmt;
use std::time::{Duration, Instant};

use mim_core::constructions::construct_for;
use mim_core::engine::{im_exact, is_induced_matching};
use mim_core::formula::{im_book_conjecture, im_book_exact, im_book_lower_bound};

use crate::budget::WallClock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    FormulaBelowExact,
    FormulaAboveExact,
    Unknown,
}

impl Verdict {
    /// Compares a formula value against the solver's value, which only counts
    /// as ground truth when the search finished.
    pub fn compare(formula: u64, exact: u64, proved: bool) -> Self {
        if !proved {
            return Verdict::Unknown;
        }
        match formula.cmp(&exact) {
            std::cmp::Ordering::Equal => Verdict::Match,
            std::cmp::Ordering::Less => Verdict::FormulaBelowExact,
            std::cmp::Ordering::Greater => Verdict::FormulaAboveExact,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::FormulaBelowExact => "formula_below_exact",
            Verdict::FormulaAboveExact => "formula_above_exact",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactStatus {
    ProvedOptimal,
    BudgetLowerBound,
}

impl ExactStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExactStatus::ProvedOptimal => "proved_optimal",
            ExactStatus::BudgetLowerBound => "budget_lower_bound",
        }
    }
}

/// Verdict of each formula column against the solver value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Statuses {
    pub formula_exact: Option<Verdict>,
    pub formula_lb: Option<Verdict>,
    pub conjecture: Option<Verdict>,
}

impl Statuses {
    /// The single status reported per row: the proved closed form when there
    /// is one, otherwise the conjecture, otherwise unknown.
    pub fn primary(&self) -> Verdict {
        self.formula_exact
            .or(self.conjecture)
            .unwrap_or(Verdict::Unknown)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Size of the solver's witness; a lower bound unless proved optimal.
    pub exact: Option<u64>,
    pub exact_status: ExactStatus,
    pub formula_exact: Option<u64>,
    pub formula_lb: Option<u64>,
    pub conjecture: Option<u64>,
    pub construction_achieved: u64,
    pub construction_scheme: &'static str,
    pub construction_valid: bool,
    pub statuses: Statuses,
    pub elapsed_ms: u64,
}

impl BoundReport {
    pub fn proved(&self) -> bool {
        self.exact_status == ExactStatus::ProvedOptimal
    }

    /// Structural checks every report must pass.
    pub fn consistency_errors(&self) -> Vec<String> {
        let mut errors = Vec::new();
        let tag = format!("G_({},{})", self.m, self.n);
        if !self.construction_valid {
            errors.push(format!("{tag}: construction failed certification"));
        }
        let Some(exact) = self.exact else {
            errors.push(format!("{tag}: no solver value"));
            return errors;
        };
        if self.proved() && self.construction_achieved > exact {
            errors.push(format!(
                "{tag}: construction {} exceeds proved optimum {exact}",
                self.construction_achieved
            ));
        }
        let pairs = [
            (self.formula_exact, self.statuses.formula_exact, "formula_exact"),
            (self.formula_lb, self.statuses.formula_lb, "formula_lb"),
            (self.conjecture, self.statuses.conjecture, "conjecture"),
        ];
        for (value, verdict, name) in pairs {
            match (value, verdict) {
                (Some(v), Some(got)) => {
                    let want = Verdict::compare(v, exact, self.proved());
                    if got != want {
                        errors.push(format!("{tag}: {name} verdict {got} but values give {want}"));
                    }
                }
                (None, None) => {}
                _ => errors.push(format!("{tag}: {name} value and verdict disagree on presence")),
            }
        }
        errors
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Core(#[from] mim_core::Error),
    #[error("G_({m},{n}): construction witness failed certification")]
    InvalidConstruction { m: usize, n: usize },
}

/// Solves `G_{m,n}` under `budget`, evaluates every applicable closed form and
/// certifies the construction for the instance.
pub fn bound_report(m: usize, n: usize, budget: Duration) -> Result<BoundReport, ReportError> {
    let start = Instant::now();
    let construction = construct_for(m, n)?;
    let g = &construction.graph;
    let construction_valid = is_induced_matching(g, construction.matching.edge_ids())?.is_valid();
    if !construction_valid {
        return Err(ReportError::InvalidConstruction { m, n });
    }

    let solved = im_exact(g, &mut WallClock::new(budget));
    let exact = solved.matching.size() as u64;
    let proved = solved.optimal;
    let (mu, nu) = (m as u64, n as u64);
    let formula_exact = im_book_exact(mu, nu).ok().map(|f| f.value);
    let formula_lb = im_book_lower_bound(mu, nu).ok().map(|f| f.value);
    let conjecture = im_book_conjecture(mu, nu).ok().map(|f| f.value);
    let verdict = |v: Option<u64>| v.map(|v| Verdict::compare(v, exact, proved));

    Ok(BoundReport {
        m,
        n,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        exact: Some(exact),
        exact_status: if proved {
            ExactStatus::ProvedOptimal
        } else {
            ExactStatus::BudgetLowerBound
        },
        formula_exact,
        formula_lb,
        conjecture,
        construction_achieved: construction.achieved_size as u64,
        construction_scheme: construction.scheme.name(),
        construction_valid,
        statuses: Statuses {
            formula_exact: verdict(formula_exact),
            formula_lb: verdict(formula_lb),
            conjecture: verdict(conjecture),
        },
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
