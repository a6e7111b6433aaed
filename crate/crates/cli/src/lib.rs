//! Command-line front end: argument parsing and report rendering.
//!
//! Domain answers go to stdout as `key = value` lines; errors go to stderr
//! with a nonzero exit status. A "no" answer is not an error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use dodgreed_core::dodgson::{all_scores, all_winners, carroll_score};
use dodgreed_core::engine::{carroll_winner_pipeline, evaluate_batch, sr_pipeline, QueryBatch};
use dodgreed_core::format::{format_graph, parse_election, parse_graph};
use dodgreed_core::greedy::mdg_max;
use dodgreed_core::mis::alpha;
use dodgreed_core::reduction::{s1_reduction, verify_reduction};
use dodgreed_core::{classes, selftest, Election, Error, Graph, Rational, StateBudget};

#[derive(Debug, Parser)]
#[command(name = "dodgreed", version, about = "Dodgson scores, greedy independent sets and the S_1 reduction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ElectionArgs {
    #[arg(long, value_name = "PATH")]
    pub election: PathBuf,
    #[arg(long, value_name = "NAME")]
    pub candidate: Option<String>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct BudgetArg {
    /// Maximum number of memoized search states.
    #[arg(long, value_name = "STATES", default_value_t = StateBudget::default().states())]
    pub budget: usize,
}

impl BudgetArg {
    fn get(&self) -> StateBudget {
        StateBudget(self.budget)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dodgson score of one candidate (or of all).
    ElectionScore(ElectionArgs),
    /// Dodgson winners, or whether one candidate wins.
    ElectionWinner(ElectionArgs),
    /// Condorcet winner and the pairwise majority relation.
    Condorcet(ElectionArgs),
    /// Independence number.
    GraphAlpha {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
    },
    /// Best greedy output size over all tie choices, with a realizing trace.
    GraphMdg {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Membership in S_r.
    GraphSr {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        #[arg(long, value_name = "P/Q", default_value = "1/1")]
        r: String,
        /// Decide through one batch of threshold queries.
        #[arg(long)]
        pipeline: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Build the joined graph for a pair of graphs.
    Reduce {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        #[arg(long, value_name = "PATH")]
        graph2: PathBuf,
        /// Write the graph here and its part map to `<PATH>.parts`.
        #[arg(long, value_name = "PATH")]
        emit_artifact: Option<PathBuf>,
    },
    /// Build the joined graph and check every stage exactly.
    VerifyReduction {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        #[arg(long, value_name = "PATH")]
        graph2: PathBuf,
        #[arg(long, value_name = "PATH")]
        emit_artifact: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Answer a batch of `q <kind> <payload>` lines with `a` lines.
    EvalBatch {
        #[arg(long, value_name = "PATH")]
        queries: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run every small-instance verification suite.
    Selftest,
}

/// What a command produced: stdout text, stderr diagnostics, exit status.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Domain(#[from] Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_election(path: &Path) -> Result<Election, CliError> {
    parse_election(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

fn load_graph(path: &Path, out: &mut Output) -> Result<Graph, CliError> {
    let parsed = parse_graph(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })?;
    for w in parsed.warnings {
        out.stderr.push_str(&format!("warning: {}: {w}\n", path.display()));
    }
    Ok(parsed.graph)
}

fn candidate(e: &Election, name: &str) -> Result<usize, CliError> {
    e.candidate_id(name)
        .ok_or_else(|| Error::InvalidArguments(format!("unknown candidate {name}")).into())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(path: &Path, art: &dodgreed_core::reduction::ReductionArtifact) -> Result<(), CliError> {
    write(path, &format_graph(&art.ghat))?;
    let mut parts = path.as_os_str().to_owned();
    parts.push(".parts");
    write(Path::new(&parts), &art.map.to_text())
}

fn execute(command: &Command, out: &mut Output) -> Result<(), CliError> {
    let o = &mut out.stdout;
    match command {
        Command::ElectionScore(args) => {
            let e = load_election(&args.election)?;
            match &args.candidate {
                Some(name) => {
                    let cert = carroll_score(&e, candidate(&e, name)?)?;
                    o.push_str(&format!("score {name} = {}\n", cert.score));
                }
                None => {
                    for (c, s) in all_scores(&e)?.into_iter().enumerate() {
                        o.push_str(&format!("score {} = {s}\n", e.name(c)));
                    }
                }
            }
        }
        Command::ElectionWinner(args) => {
            let e = load_election(&args.election)?;
            match &args.candidate {
                Some(name) => {
                    let wins = carroll_winner_pipeline(&e, candidate(&e, name)?)?;
                    o.push_str(&format!("winner {name} = {}\n", yes_no(wins)));
                }
                None => {
                    for c in all_winners(&e)? {
                        o.push_str(&format!("winner = {}\n", e.name(c)));
                    }
                }
            }
        }
        Command::Condorcet(args) => {
            let e = load_election(&args.election)?;
            let winner = e.condorcet_winner().map_or("none", |c| e.name(c));
            o.push_str(&format!("condorcet = {winner}\n"));
            for (a, b) in e.majority_relation() {
                o.push_str(&format!("majority {} > {}\n", e.name(a), e.name(b)));
            }
        }
        Command::GraphAlpha { graph } => {
            let g = load_graph(graph, out)?;
            out.stdout.push_str(&format!("alpha = {}\n", alpha(&g)));
        }
        Command::GraphMdg { graph, budget } => {
            let g = load_graph(graph, out)?;
            let res = mdg_max(&g, budget.get())?;
            let picks: Vec<String> = res.trace.picks.iter().map(|v| (v + 1).to_string()).collect();
            out.stdout.push_str(&format!("mdg = {}\ntrace = {}\n", res.value, picks.join(" ")));
        }
        Command::GraphSr {
            graph,
            r,
            pipeline,
            budget,
        } => {
            let r: Rational = r.parse().map_err(CliError::Domain)?;
            let g = load_graph(graph, out)?;
            let member = if *pipeline {
                sr_pipeline(&g, r)?
            } else {
                classes::in_s_r(&g, r, budget.get())?
            };
            out.stdout.push_str(&format!("in-S[{r}] = {}\n", yes_no(member)));
        }
        Command::Reduce {
            graph,
            graph2,
            emit_artifact,
        } => {
            let g = load_graph(graph, out)?;
            let h = load_graph(graph2, out)?;
            let art = s1_reduction(&g, &h);
            match emit_artifact {
                Some(path) => {
                    emit(path, &art)?;
                    out.stdout.push_str(&format!(
                        "k = {}\nn = {}\nell = {}\nvertices = {}\nedges = {}\n",
                        art.k(),
                        art.n(),
                        art.ell(),
                        art.ghat.n(),
                        art.ghat.edge_count()
                    ));
                }
                None => {
                    out.stdout.push_str(&format_graph(&art.ghat));
                    out.stdout.push_str(&art.map.to_text());
                }
            }
        }
        Command::VerifyReduction {
            graph,
            graph2,
            emit_artifact,
            budget,
        } => {
            let g = load_graph(graph, out)?;
            let h = load_graph(graph2, out)?;
            if let Some(path) = emit_artifact {
                emit(path, &s1_reduction(&g, &h))?;
            }
            let report = verify_reduction(&g, &h, budget.get())?;
            out.stdout.push_str(&report.to_text());
        }
        Command::EvalBatch { queries, budget } => {
            let batch = QueryBatch::parse(&read(queries)?).map_err(|source| CliError::Input {
                path: queries.clone(),
                source,
            })?;
            o.push_str(&evaluate_batch(&batch, budget.get()).to_text());
        }
        Command::Selftest => {
            let outcomes = selftest::run_all();
            for outcome in &outcomes {
                o.push_str(&outcome.line());
                o.push('\n');
            }
            let passed = outcomes.iter().filter(|x| x.ok()).count();
            o.push_str(&format!("selftest: {passed}/{} passed\n", outcomes.len()));
            if passed != outcomes.len() {
                out.status = 1;
            }
        }
    }
    Ok(())
}

/// Runs one command to completion.
pub fn run(cli: &Cli) -> Output {
    let mut out = Output::default();
    if let Err(e) = execute(&cli.command, &mut out) {
        out.stderr.push_str(&format!("error: {e}\n"));
        out.status = 2;
    }
    out
}
