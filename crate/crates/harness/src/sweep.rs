use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::report::{bound_report, BoundReport, ReportError};

pub const CSV_HEADER: &str = "m,n,vertices,edges,exact,exact_status,formula_exact,formula_lb,conjecture,construction_achieved,construction_scheme,construction_valid,status,elapsed_ms";

/// Inclusive range written `A..B` (or a single `A`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn range(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        (self.end + 1).saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad range {s:?}: expected A..B"))
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(Span {
                start: num(a)?,
                end: num(b.trim_start_matches('='))?,
            }),
            None => {
                let a = num(s)?;
                Ok(Span { start: a, end: a })
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub m_range: Span,
    pub n_range: Span,
    pub budget: Duration,
    pub output: PathBuf,
    pub workers: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("writing CSV: {0}")]
    Io(#[from] std::io::Error),
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: &str| Err(SweepError::Config(msg.to_string()));
        if self.m_range.is_empty() || self.n_range.is_empty() {
            return bad("ranges must be nonempty");
        }
        if self.m_range.start < 2 {
            return bad("stacked books need m >= 2");
        }
        if self.n_range.start < 1 {
            return bad("stacked books need n >= 1");
        }
        if self.budget.is_zero() {
            return bad("budget must be positive");
        }
        if self.workers == 0 {
            return bad("need at least one worker");
        }
        Ok(())
    }
}

/// Computes every `(m, n)` row on a pool of `config.workers` threads. Rows
/// come back m-major regardless of completion order.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<BoundReport>, SweepError> {
    config.validate()?;
    let instances: Vec<(usize, usize)> = config
        .m_range
        .range()
        .flat_map(|m| config.n_range.range().map(move |n| (m, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()?;
    let rows = pool.install(|| {
        instances
            .par_iter()
            .map(|&(m, n)| bound_report(m, n, config.budget))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(rows)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    m: usize,
    n: usize,
    vertices: usize,
    edges: usize,
    exact: Option<u64>,
    exact_status: &'a str,
    formula_exact: Option<u64>,
    formula_lb: Option<u64>,
    conjecture: Option<u64>,
    construction_achieved: u64,
    construction_scheme: &'a str,
    construction_valid: bool,
    status: &'a str,
    elapsed_ms: u64,
}

impl<'a> From<&'a BoundReport> for CsvRow<'a> {
    fn from(r: &'a BoundReport) -> Self {
        CsvRow {
            m: r.m,
            n: r.n,
            vertices: r.vertices,
            edges: r.edges,
            exact: r.exact,
            exact_status: r.exact_status.as_str(),
            formula_exact: r.formula_exact,
            formula_lb: r.formula_lb,
            conjecture: r.conjecture,
            construction_achieved: r.construction_achieved,
            construction_scheme: r.construction_scheme,
            construction_valid: r.construction_valid,
            status: r.statuses.primary().as_str(),
            elapsed_ms: r.elapsed_ms,
        }
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[BoundReport]) -> Result<(), SweepError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(CsvRow::from(row))?;
    }
    if rows.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    writer.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[BoundReport]) -> Result<String, SweepError> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Runs the sweep and writes the CSV to `config.output`.
pub fn sweep_to_file(config: &SweepConfig) -> Result<Vec<BoundReport>, SweepError> {
    let rows = run_sweep(config)?;
    let file = std::fs::File::create(&config.output)?;
    write_csv(std::io::BufWriter::new(file), &rows)?;
    Ok(rows)
}

/// Drops the trailing `elapsed_ms` column, the only nondeterministic one.
pub fn without_timing(csv: &str) -> String {
    csv.lines()
        .map(|line| line.rsplit_once(',').map_or(line, |(head, _)| head))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3..4".parse::<Span>().unwrap(), Span { start: 3, end: 4 });
        assert_eq!("3..=4".parse::<Span>().unwrap(), Span { start: 3, end: 4 });
        assert_eq!("5".parse::<Span>().unwrap(), Span { start: 5, end: 5 });
        assert!("a..4".parse::<Span>().is_err());
        assert!("4..3".parse::<Span>().unwrap().is_empty());
    }

    fn config(m: &str, n: &str) -> SweepConfig {
        SweepConfig {
            m_range: m.parse().unwrap(),
            n_range: n.parse().unwrap(),
            budget: Duration::from_secs(30),
            output: PathBuf::from("unused.csv"),
            workers: 2,
        }
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(run_sweep(&config("4..3", "2..3")).is_err());
        assert!(run_sweep(&config("1..3", "2..3")).is_err());
        assert!(run_sweep(&config("3..3", "0..3")).is_err());
        let mut c = config("3..3", "2..3");
        c.workers = 0;
        assert!(run_sweep(&c).is_err());
        c.workers = 1;
        c.budget = Duration::ZERO;
        assert!(run_sweep(&c).is_err());
    }

    #[test]
    fn header_and_rows() {
        let rows = run_sweep(&config("3..4", "2..5")).unwrap();
        assert_eq!(rows.len(), 8);
        let csv = csv_string(&rows).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(
            &first[..13],
            &["3", "2", "6", "7", "2", "proved_optimal", "2", "", "", "2", "cross_leaves", "true", "match"]
        );
        assert!(rows.iter().all(|r| r.statuses.primary().as_str() == "match"));
        assert_eq!(csv_string(&[]).unwrap().trim(), CSV_HEADER);
    }

    #[test]
    fn timing_column_is_stripped() {
        assert_eq!(without_timing("a,b,c\n1,2,3\n"), "a,b\n1,2");
    }
}
