use std::io::{BufRead, Write};
use std::num::NonZeroUsize;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use magicdist::commands::{self, census_json, census_record_json, Outcome, SearchArgs};
use magicdist::input::{graph_fingerprint, GraphSource, LabelSpec};
use magicdist::parallel;
use magicdist::report::{input_digest, Report};
use magicdist_core::census::CensusOptions;
use magicdist_core::graph6::parse_graph6;
use magicdist_core::Graph;

#[derive(Debug, Parser)]
#[command(name = "magicdist", version, about = "Distance magic graph labelings")]
struct Cli {
    /// Worker threads for census runs.
    #[arg(long, global = true, env = "MAGICDIST_THREADS", default_value_t = 1)]
    threads: usize,
    /// Add wall-clock time to the report (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
    /// Progress messages on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph as a graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: header `n m`, then `m` lines `u v` (1-based).
    #[arg(long)]
    edges: Option<String>,
    /// Named family, e.g. `cycle:4`, `knm:6`, `cone:knm:4`, `union:path:3+cycle:4`.
    #[arg(long)]
    construct: Option<String>,
}

impl GraphInput {
    fn source(&self) -> GraphSource {
        match (&self.g6, &self.edges, &self.construct) {
            (Some(s), _, _) => GraphSource::Graph6(s.clone()),
            (_, Some(p), _) => GraphSource::EdgeFile(p.clone()),
            (_, _, Some(f)) => GraphSource::Family(f.clone()),
            _ => unreachable!("clap enforces exactly one graph input"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a labeling; exit 1 when it is not magic.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// `1,3,2` or `p=2:1,2,2,1`.
        #[arg(long)]
        label: String,
        /// Check modulo p.
        #[arg(long = "mod")]
        modulus: Option<usize>,
    },
    /// Enumerate (or count) distance magic labelings; exit 1 when none exist.
    Search {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long = "mod")]
        modulus: Option<usize>,
        #[arg(long)]
        limit: Option<NonZeroUsize>,
        /// Report only the number of labelings.
        #[arg(long)]
        count: bool,
    },
    /// Characteristic polynomial, spectrum, main angles and spectral filters.
    Spectral {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// All distance magic graphs of order N, or of a graph6 corpus.
    Census {
        /// Order for internal generation (at most 8).
        order: Option<usize>,
        /// File of graph6 lines (`-` for stdin); output is one JSON record per line.
        #[arg(long, conflicts_with = "order")]
        corpus: Option<String>,
        /// Keep edgeless graphs.
        #[arg(long)]
        include_degenerate: bool,
        /// One JSON record per line instead of a report.
        #[arg(long)]
        jsonl: bool,
    },
    /// Automorphism group and its action on the distance magic labelings.
    Aut {
        #[command(flatten)]
        graph: GraphInput,
        /// List the group elements.
        #[arg(long)]
        elements: bool,
    },
    /// Combine a p- and a q-distance magic labeling; exit 1 when the result is
    /// not a pq-labeling.
    Crt {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        fp: String,
        #[arg(long)]
        fq: String,
    },
    /// Build a named family.
    Construct { family: String },
}

/// What a command produces: a report, or JSON lines.
enum Output {
    Report {
        parts: Vec<String>,
        outcome: Outcome,
    },
    Lines(Vec<serde_json::Value>),
}

fn load(graph: &GraphInput, verbose: bool) -> Result<Graph> {
    let g = graph.source().load()?;
    if verbose {
        eprintln!(
            "loaded graph: {} vertices, {} edges",
            g.order(),
            g.edge_count()
        );
    }
    Ok(g)
}

fn read_corpus(path: &str) -> Result<Vec<Graph>> {
    let text = if path == "-" {
        let mut lines = Vec::new();
        for line in std::io::stdin().lock().lines() {
            lines.push(line?);
        }
        lines.join("\n")
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('>'))
        .map(|l| parse_graph6(l).with_context(|| format!("bad graph6 line `{l}`")))
        .collect()
}

fn run(cli: &Cli) -> Result<Output> {
    let v = cli.verbose;
    Ok(match &cli.command {
        Command::Verify {
            graph,
            label,
            modulus,
        } => {
            let g = load(graph, v)?;
            let spec: LabelSpec = label.parse()?;
            let outcome = commands::verify(&g, spec.clone(), *modulus)?;
            let mut parts = vec![
                "verify".into(),
                graph_fingerprint(&g),
                format!("{:?}", spec.values),
            ];
            parts.push(format!("{:?}", spec.modulus.or(*modulus)));
            Output::Report { parts, outcome }
        }
        Command::Search {
            graph,
            modulus,
            limit,
            count,
        } => {
            let g = load(graph, v)?;
            let args = SearchArgs {
                modulus: *modulus,
                limit: *limit,
                count: *count,
            };
            let outcome = commands::search(&g, args)?;
            let parts = vec![
                "search".into(),
                graph_fingerprint(&g),
                format!("{modulus:?}"),
                format!("{:?}", limit.map(NonZeroUsize::get)),
                count.to_string(),
            ];
            Output::Report { parts, outcome }
        }
        Command::Spectral { graph } => {
            let g = load(graph, v)?;
            let outcome = commands::spectral(&g)?;
            Output::Report {
                parts: vec!["spectral".into(), graph_fingerprint(&g)],
                outcome,
            }
        }
        Command::Census {
            order,
            corpus,
            include_degenerate,
            jsonl,
        } => {
            let opts = CensusOptions {
                include_degenerate: *include_degenerate,
            };
            match (order, corpus) {
                (_, Some(path)) => {
                    let graphs = read_corpus(path)?;
                    if v {
                        eprintln!("corpus: {} graphs", graphs.len());
                    }
                    let records = parallel::census_corpus(&graphs, opts, cli.threads)?;
                    Output::Lines(records.iter().map(census_record_json).collect())
                }
                (Some(n), None) => {
                    if v {
                        eprintln!("census of order {n} on {} threads", cli.threads);
                    }
                    let records = parallel::census(*n, opts, cli.threads)?;
                    if *jsonl {
                        Output::Lines(records.iter().map(census_record_json).collect())
                    } else {
                        Output::Report {
                            parts: vec![
                                "census".into(),
                                n.to_string(),
                                include_degenerate.to_string(),
                            ],
                            outcome: census_json(Some(*n), opts, &records),
                        }
                    }
                }
                (None, None) => bail!("census needs an order or --corpus"),
            }
        }
        Command::Aut { graph, elements } => {
            let g = load(graph, v)?;
            let outcome = commands::aut(&g, *elements)?;
            Output::Report {
                parts: vec!["aut".into(), graph_fingerprint(&g), elements.to_string()],
                outcome,
            }
        }
        Command::Crt { graph, fp, fq } => {
            let g = load(graph, v)?;
            let f_p: LabelSpec = fp.parse().context("--fp")?;
            let f_q: LabelSpec = fq.parse().context("--fq")?;
            let parts = vec![
                "crt".into(),
                graph_fingerprint(&g),
                format!("{:?}:{:?}", f_p.modulus, f_p.values),
                format!("{:?}:{:?}", f_q.modulus, f_q.values),
            ];
            let outcome = commands::crt(&g, f_p, f_q)?;
            Output::Report { parts, outcome }
        }
        Command::Construct { family } => {
            let (_, outcome) = commands::construct_family(family)?;
            let canonical = outcome.result["family"]
                .as_str()
                .unwrap_or(family)
                .to_owned();
            Output::Report {
                parts: vec!["construct".into(), canonical],
                outcome,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| a != "--timing")
        .collect();
    let start = Instant::now();
    let output = match run(&cli) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let mut stdout = std::io::stdout().lock();
    let affirmative = match output {
        Output::Report { parts, outcome } => {
            let report = Report {
                command,
                input_digest: input_digest(&parts),
                result: outcome.result,
                timing_ms: cli.timing.then_some(elapsed),
            };
            let _ = writeln!(stdout, "{}", report.to_json());
            outcome.affirmative
        }
        Output::Lines(lines) => {
            for line in lines {
                let _ = writeln!(stdout, "{line}");
            }
            if cli.timing {
                eprintln!("elapsed: {elapsed:.3} ms");
            }
            true
        }
    };
    ExitCode::from(if affirmative { 0 } else { 1 })
}
