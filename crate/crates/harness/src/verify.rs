//! Verification suites.
//!
//! `theorems` and `lemmas` are gates: any mismatch fails the suite. Rows whose
//! search ran out of budget are marked unknown instead of failing.
//! `conjectures` only reports.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Duration;

use mim_core::engine::{enumerate_mims, im_exact, im_exact_forced, ExactResult};
use mim_core::families::{cycle, grid3, path, stacked_book, star, BookLabeling};
use mim_core::formula::{
    book_general_formula, im_book_exact, im_cycle_formula, im_grid3_formula, im_path_formula,
    im_star_formula, FormulaValue,
};
use mim_core::{Graph, Result as CoreResult};

use crate::budget::WallClock;
use crate::report::{bound_report, BoundReport, ReportError, Verdict};

/// Enumeration cap for the all-maximum-matchings lemma check.
pub const ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorems,
    Lemmas,
    Conjectures,
}

impl Suite {
    /// `(m_max, n_max)` used when the caller gives none.
    pub fn default_limits(&self) -> (usize, usize) {
        match self {
            Suite::Theorems => (6, 5),
            Suite::Lemmas => (4, 5),
            Suite::Conjectures => (3, 7),
        }
    }

    pub fn is_gate(&self) -> bool {
        !matches!(self, Suite::Conjectures)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "theorems" => Ok(Suite::Theorems),
            "lemmas" => Ok(Suite::Lemmas),
            "conjectures" => Ok(Suite::Conjectures),
            _ => Err(format!("unknown suite {s:?} (theorems, lemmas, conjectures)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Theorems => "theorems",
            Suite::Lemmas => "lemmas",
            Suite::Conjectures => "conjectures",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
    Report,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Unknown => "UNKNOWN",
            Outcome::Report => "REPORT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Bound rows behind the conjecture report; empty for the gate suites.
    pub rows: Vec<BoundReport>,
}

impl SuiteReport {
    pub fn count(&self, outcome: Outcome) -> usize {
        self.checks.iter().filter(|c| c.outcome == outcome).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    /// Exit status contract: gate suites fail on any failed check; the
    /// conjecture report always succeeds.
    pub fn passed(&self) -> bool {
        !self.suite.is_gate() || self.count(Outcome::Fail) == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(out, "[{}] {}: {}", c.outcome, c.name, c.detail).unwrap();
        }
        writeln!(
            out,
            "suite {}: {} pass, {} fail, {} unknown, {} report -> {}",
            self.suite,
            self.count(Outcome::Pass),
            self.count(Outcome::Fail),
            self.count(Outcome::Unknown),
            self.count(Outcome::Report),
            if self.passed() { "ok" } else { "FAILED" }
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub m_max: usize,
    pub n_max: usize,
    pub budget: Duration,
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] mim_core::Error),
    #[error(transparent)]
    Report(#[from] ReportError),
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    match suite {
        Suite::Theorems => theorems(opts),
        Suite::Lemmas => lemmas(opts),
        Suite::Conjectures => conjectures(opts),
    }
}

fn solve(g: &Graph, budget: Duration) -> ExactResult {
    im_exact(g, &mut WallClock::new(budget))
}

fn formula_check(
    name: String,
    g: CoreResult<Graph>,
    formula: CoreResult<FormulaValue>,
    budget: Duration,
) -> Result<Check, VerifyError> {
    let g = g?;
    let expected = formula?.value;
    let solved = solve(&g, budget);
    let got = solved.matching.size() as u64;
    let (outcome, detail) = if !solved.optimal {
        (
            Outcome::Unknown,
            format!("budget exhausted at {got}, formula {expected}"),
        )
    } else if got == expected {
        (Outcome::Pass, format!("solver {got} = formula {expected}"))
    } else {
        (Outcome::Fail, format!("solver {got} != formula {expected}"))
    };
    Ok(Check {
        name,
        outcome,
        detail,
    })
}

/// Closed forms against the solver on the standard ranges.
pub fn theorems(opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let b = opts.budget;
    let mut checks = Vec::new();
    for n in 2..=20 {
        checks.push(formula_check(format!("path P_{n}"), path(n), im_path_formula(n as u64), b)?);
    }
    for n in 3..=20 {
        checks.push(formula_check(format!("cycle C_{n}"), cycle(n), im_cycle_formula(n as u64), b)?);
    }
    for m in 2..=12 {
        checks.push(formula_check(format!("star S_{m}"), star(m), im_star_formula(m as u64), b)?);
    }
    for n in 1..=10 {
        checks.push(formula_check(
            format!("grid P_3 x P_{n}"),
            grid3(n),
            im_grid3_formula(n as u64),
            b,
        )?);
    }
    for m in 3..=opts.m_max {
        for n in 1..=opts.n_max.min(5) {
            checks.push(formula_check(
                format!("book G_({m},{n})"),
                stacked_book(m, n).map(|(g, _)| g),
                im_book_exact(m as u64, n as u64),
                b,
            )?);
        }
    }
    Ok(SuiteReport {
        suite: Suite::Theorems,
        checks,
        rows: Vec::new(),
    })
}

fn edge(g: &Graph, book: &BookLabeling, a: (usize, usize), b: (usize, usize)) -> usize {
    g.edge_id(book.vertex(a.0, a.1), book.vertex(b.0, b.1))
        .expect("named edge exists in the book")
}

/// Saturating the middle center of `G_{m,5}` through any of its edges caps
/// the matching at `2m − 3`.
pub fn lemma_middle_center_cap(m: usize, budget: Duration) -> Result<Check, VerifyError> {
    let (g, book) = stacked_book(m, 5)?;
    let center = book.center(3);
    let cap = 2 * m - 3;
    let mut worst = 0;
    let mut unknown = false;
    for &e in g.incident_edges(center) {
        let r = im_exact_forced(&g, &[e], &mut WallClock::new(budget))?;
        unknown |= !r.optimal;
        worst = worst.max(r.matching.size());
    }
    let edges = g.incident_edges(center).len();
    let outcome = if worst > cap {
        Outcome::Fail
    } else if unknown {
        Outcome::Unknown
    } else {
        Outcome::Pass
    };
    Ok(Check {
        name: format!("middle center cap G_({m},5)"),
        outcome,
        detail: format!("max over {edges} forced center edges = {worst}, cap 2m-3 = {cap}"),
    })
}

/// Every maximum induced matching of `G_{m,5}` leaves the centers of
/// columns 2, 3 and 4 unsaturated.
pub fn lemma_inner_centers_free(m: usize) -> Result<Check, VerifyError> {
    let (g, book) = stacked_book(m, 5)?;
    let all = enumerate_mims(&g, ENUMERATION_CAP);
    let bad = all
        .matchings
        .iter()
        .find(|mm| (2..=4).any(|c| mm.saturates(&g, book.center(c))));
    let size = all.matchings.first().map_or(0, |mm| mm.size());
    let (outcome, detail) = match (bad, all.truncated) {
        (Some(mm), _) => (
            Outcome::Fail,
            format!("maximum matching {:?} saturates an inner center", mm.edge_ids()),
        ),
        (None, true) => (
            Outcome::Unknown,
            format!("enumeration truncated at {} matchings", all.matchings.len()),
        ),
        (None, false) => (
            Outcome::Pass,
            format!(
                "all {} maximum matchings (size {size}) leave columns 2-4 centers free",
                all.matchings.len()
            ),
        ),
    };
    Ok(Check {
        name: format!("inner centers unsaturated G_({m},5)"),
        outcome,
        detail,
    })
}

/// Forcing the whole leaf cross family between columns 2 and 3 of `G_{m,4}`
/// yields exactly `m − 1`, below the optimum.
pub fn lemma_middle_family_blocks(m: usize, budget: Duration) -> Result<Check, VerifyError> {
    let (g, book) = stacked_book(m, 4)?;
    let family: Vec<usize> = (2..=m).map(|j| edge(&g, &book, (2, j), (3, j))).collect();
    let forced = im_exact_forced(&g, &family, &mut WallClock::new(budget))?;
    let free = solve(&g, budget);
    let (f, opt) = (forced.matching.size(), free.matching.size());
    let outcome = if !(forced.optimal && free.optimal) {
        Outcome::Unknown
    } else if f == m - 1 && f < opt {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    Ok(Check {
        name: format!("middle cross family G_({m},4)"),
        outcome,
        detail: format!("forced {f} (want m-1 = {}), optimum {opt}", m - 1),
    })
}

/// In `G_{m,3}`, a star edge at the middle center admits no other edge.
pub fn lemma_middle_star_isolates(m: usize, budget: Duration) -> Result<Check, VerifyError> {
    let (g, book) = stacked_book(m, 3)?;
    let mut sizes = Vec::new();
    let mut unknown = false;
    for k in 2..=m {
        let e = edge(&g, &book, (2, 1), (2, k));
        let r = im_exact_forced(&g, &[e], &mut WallClock::new(budget))?;
        unknown |= !r.optimal;
        sizes.push(r.matching.size());
    }
    let outcome = if sizes.iter().any(|&s| s != 1) {
        Outcome::Fail
    } else if unknown {
        Outcome::Unknown
    } else {
        Outcome::Pass
    };
    Ok(Check {
        name: format!("middle star edge isolates G_({m},3)"),
        outcome,
        detail: format!("forced sizes {sizes:?}, want all 1"),
    })
}

pub fn lemmas(opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let mut checks = Vec::new();
    for m in 3..=opts.m_max {
        checks.push(lemma_middle_star_isolates(m, opts.budget)?);
        checks.push(lemma_middle_family_blocks(m, opts.budget)?);
        checks.push(lemma_middle_center_cap(m, opts.budget)?);
        checks.push(lemma_inner_centers_free(m)?);
    }
    Ok(SuiteReport {
        suite: Suite::Lemmas,
        checks,
        rows: Vec::new(),
    })
}

/// Reports the general formulas against the solver for `n ∈ [6, n_max]`, and
/// at the small-`n` seams where the formulas meet proved values.
pub fn conjectures(opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for m in 3..=opts.m_max {
        for n in [1, 3, 5] {
            let (g, _) = stacked_book(m, n)?;
            let solved = solve(&g, opts.budget);
            let formula = book_general_formula(m as u64, n as u64)?;
            let exact = solved.matching.size() as i64;
            let verdict = if !solved.optimal {
                Verdict::Unknown
            } else if formula == exact {
                Verdict::Match
            } else if formula < exact {
                Verdict::FormulaBelowExact
            } else {
                Verdict::FormulaAboveExact
            };
            checks.push(Check {
                name: format!("seam G_({m},{n})"),
                outcome: Outcome::Report,
                detail: format!("general formula {formula} vs exact {exact}: {verdict}"),
            });
        }
        for n in 6..=opts.n_max {
            let row = bound_report(m, n, opts.budget)?;
            let errors = row.consistency_errors();
            let detail = format!(
                "exact {} ({}), lower bound {} [{}], conjecture {} [{}], construction {} ({})",
                row.exact.map_or("-".into(), |v| v.to_string()),
                row.exact_status.as_str(),
                row.formula_lb.map_or("-".into(), |v| v.to_string()),
                row.statuses.formula_lb.unwrap_or(Verdict::Unknown),
                row.conjecture.map_or("-".into(), |v| v.to_string()),
                row.statuses.conjecture.unwrap_or(Verdict::Unknown),
                row.construction_achieved,
                row.construction_scheme,
            );
            checks.push(Check {
                name: format!("conjecture G_({m},{n})"),
                outcome: if errors.is_empty() {
                    Outcome::Report
                } else {
                    Outcome::Fail
                },
                detail: if errors.is_empty() {
                    detail
                } else {
                    format!("{detail}; inconsistent: {}", errors.join("; "))
                },
            });
            rows.push(row);
        }
    }
    Ok(SuiteReport {
        suite: Suite::Conjectures,
        checks,
        rows,
    })
}
