use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use mim_core::constructions::construct_for;
use mim_core::engine::{greedy_lower_bound, im_bruteforce, im_exact, Matching, Provenance};
use mim_core::families::FamilySpec;

use crate::budget::{WallClock, DEFAULT_BUDGET};
use crate::edgelist;
use crate::sweep::{sweep_to_file, Span, SweepConfig};
use crate::verify::{run_suite, Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "mim", version, about = "Maximum induced matchings of stacked-book graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph as an edge list.
    Gen {
        /// path:<n>, cycle:<n>, star:<m>, grid3:<n> or book:<m>x<n>
        #[arg(long)]
        family: FamilySpec,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        /// Append the certified construction witness (stacked books only).
        #[arg(long)]
        witness: bool,
    },
    /// Solve an edge-list file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Print the witness edges.
        #[arg(long)]
        witness: bool,
        #[arg(long = "budget-s", default_value_t = DEFAULT_BUDGET.as_secs_f64())]
        budget_s: f64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long = "m-max")]
        m_max: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long = "budget-s", default_value_t = DEFAULT_BUDGET.as_secs_f64())]
        budget_s: f64,
    },
    /// Sweep stacked books over an (m, n) grid and write a CSV report.
    Sweep {
        /// Inclusive range A..B
        #[arg(long)]
        m: Span,
        /// Inclusive range C..D
        #[arg(long)]
        n: Span,
        #[arg(long = "budget-s", default_value_t = DEFAULT_BUDGET.as_secs_f64())]
        budget_s: f64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Brute,
    Greedy,
}

fn budget(seconds: f64) -> anyhow::Result<Duration> {
    if !(seconds.is_finite() && seconds > 0.0) {
        bail!("--budget-s must be a positive number of seconds");
    }
    Ok(Duration::from_secs_f64(seconds))
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            out: path,
            witness,
        } => {
            let g = family.build()?;
            let text = match (witness, family) {
                (false, _) => edgelist::write_graph(&g),
                (true, FamilySpec::StackedBook { m, n }) => {
                    let c = construct_for(m, n)?;
                    edgelist::write_with_witness(&c.graph, &c.matching, c.scheme.name())
                }
                (true, _) => bail!("--witness is only available for book:<m>x<n>"),
            };
            edgelist::write_file(&path, &text)?;
            writeln!(
                out,
                "wrote {family}: {} vertices, {} edges -> {}",
                g.vertex_count(),
                g.edge_count(),
                path.display()
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            file,
            method,
            witness,
            budget_s,
        } => {
            let limit = budget(budget_s)?;
            let parsed = edgelist::read_file(&file)?;
            let g = &parsed.graph;
            let start = Instant::now();
            let (matching, optimal) = match method {
                Method::Exact => {
                    let r = im_exact(g, &mut WallClock::new(limit));
                    (r.matching, r.optimal)
                }
                Method::Brute => (im_bruteforce(g)?, true),
                Method::Greedy => (greedy_lower_bound(g), false),
            };
            let elapsed = start.elapsed();
            writeln!(out, "vertices {}", g.vertex_count())?;
            writeln!(out, "edges {}", g.edge_count())?;
            writeln!(out, "method {}", matching.provenance())?;
            writeln!(out, "size {}", matching.size())?;
            writeln!(out, "optimal {optimal}")?;
            writeln!(out, "elapsed_ms {}", elapsed.as_millis())?;
            if !parsed.witness.is_empty() {
                let ids = parsed
                    .witness
                    .iter()
                    .map(|&(u, v)| {
                        g.edge_id(u, v)
                            .with_context(|| format!("file witness edge ({u}, {v}) is not in the graph"))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()?;
                let certified = Matching::certify(g, &ids, Provenance::Construction)
                    .context("file witness is not an induced matching")?;
                writeln!(
                    out,
                    "file_witness {} valid{}",
                    certified.size(),
                    parsed.scheme.map(|s| format!(" scheme {s}")).unwrap_or_default()
                )?;
            }
            if witness {
                write!(out, "{}", edgelist::witness_lines(g, &matching, None))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            m_max,
            n_max,
            budget_s,
        } => {
            let (dm, dn) = suite.default_limits();
            let opts = VerifyOptions {
                m_max: m_max.unwrap_or(dm),
                n_max: n_max.unwrap_or(dn),
                budget: budget(budget_s)?,
            };
            let report = run_suite(suite, &opts)?;
            write!(out, "{}", report.render())?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Sweep {
            m,
            n,
            budget_s,
            workers,
            csv,
        } => {
            let config = SweepConfig {
                m_range: m,
                n_range: n,
                budget: budget(budget_s)?,
                output: csv,
                workers,
            };
            let rows = sweep_to_file(&config)?;
            writeln!(out, "wrote {} rows -> {}", rows.len(), config.output.display())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
