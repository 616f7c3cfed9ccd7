use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use domforce_core::{
    forcing, grid_witness, FamilySpec, Graph, InvariantKind, Method, SolveBudget, VertexSet,
};
use domforce_cli::report::{blocking_failures, timed_solve, Allowlist, PredictedJson};
use domforce_cli::suites::{run_suite, SuiteConfig, SuiteName};
use domforce_cli::{format, spec};

#[derive(Parser)]
#[command(
    name = "domforce",
    version,
    about = "Exact zero-forcing / domination hybrid graph invariants",
    subcommand_required = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an invariant exactly and print the witness
    Compute {
        /// One of z, zc, gamma, gammac, fd, fcd, maxleaf
        #[arg(long)]
        invariant: String,
        /// Inline graph6 string
        #[arg(long, group = "input", required = true)]
        g6: Option<String>,
        /// Graph file (graph6 or edge list, auto-detected)
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
        /// oracle (lexicographically-least witness) or optimized
        #[arg(long, default_value = "optimized")]
        method: String,
        /// Max feasibility checks before giving up
        #[arg(long)]
        budget: Option<u64>,
        /// Cap on candidate set size
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a family or product graph
    Generate {
        /// Family name (path, cycle, complete, complete_bipartite, star,
        /// wheel, helm, coconut, hypercube, petersen, grid, ladder, prism)
        #[arg(long, group = "what", required = true)]
        family: Option<String>,
        /// Product name (join, corona, generalized_corona, iterated_corona,
        /// rooted_product, cartesian, splitting)
        #[arg(long, group = "what")]
        product: Option<String>,
        /// Family parameters, comma-separated (e.g. --params 4,5)
        #[arg(long)]
        params: Option<String>,
        /// First operand spec (e.g. path:3 or g6:Bg)
        #[arg(long)]
        lhs: Option<String>,
        /// Second operand spec
        #[arg(long)]
        rhs: Option<String>,
        /// Attachment specs for generalized_corona, ';'-separated
        #[arg(long)]
        parts: Option<String>,
        /// Root vertex for rooted_product
        #[arg(long)]
        root: Option<usize>,
        /// Iteration count for iterated_corona
        #[arg(long)]
        k: Option<usize>,
        /// g6, edges or dot
        #[arg(long, default_value = "g6")]
        format: String,
    },
    /// Print the forcing chronicle of an initial black set
    Trace {
        #[arg(long, group = "input", required = true)]
        g6: Option<String>,
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
        /// Initial black vertices, comma-separated (e.g. --set 0,1,4)
        #[arg(long)]
        set: String,
    },
    /// Emit constructive witnesses
    Witness {
        #[command(subcommand)]
        target: WitnessTarget,
    },
    /// Run reproduction suites and report every prediction
    Verify {
        /// Suite name (families, products, grids, splitting, trees, bounds,
        /// nonmonotonicity, all); repeatable. Defaults to all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Cap on instance order where a suite scales
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON-lines report here
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Max feasibility checks per solve
        #[arg(long)]
        budget: Option<u64>,
        /// Fill real wall-clock times into elapsed_ms (reports are no longer
        /// byte-reproducible across runs)
        #[arg(long)]
        timings: bool,
        /// Override the built-in known-discrepancies allowlist
        #[arg(long)]
        allowlist: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WitnessTarget {
    /// The connected dom-forcing witness for the p x q grid (4 <= p <= q)
    Grid {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Re-run the dominating/connected/forcing predicates and confirm
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] domforce_core::Error),
    #[error(transparent)]
    Format(#[from] format::FormatError),
    #[error(transparent)]
    Spec(#[from] spec::SpecError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} prediction failure(s) outside the allowlist")]
    VerifyFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use domforce_core::Error as E;
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(E::DisconnectedGraph)
            | CliError::Spec(spec::SpecError::Core(E::DisconnectedGraph)) => 3,
            CliError::Core(E::BudgetExceeded { .. }) => 4,
            _ => 5,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_graph(g6: Option<String>, file: Option<PathBuf>) -> Result<Graph, CliError> {
    match (g6, file) {
        (Some(s), None) => Ok(format::from_graph6(&s)?),
        (None, Some(path)) => Ok(format::parse_graph_text(&std::fs::read_to_string(path)?)?),
        _ => Err(CliError::Usage("provide exactly one of --g6 / --file".into())),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compute {
            invariant,
            g6,
            file,
            method,
            budget,
            max_size,
            json,
        } => {
            let kind = InvariantKind::parse(&invariant)
                .ok_or_else(|| CliError::Usage(format!("unknown invariant {invariant:?}")))?;
            let method = match method.as_str() {
                "oracle" => Method::Oracle,
                "optimized" => Method::Optimized,
                other => return Err(CliError::Usage(format!("unknown method {other:?}"))),
            };
            let g = load_graph(g6, file)?;
            let budget = SolveBudget {
                max_candidates: budget,
                max_size,
            };
            let (result, ms) = timed_solve(&g, kind, &budget, method);
            let r = result?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "invariant": kind.name(),
                        "value": r.value,
                        "witness": r.witness.to_vec(),
                        "candidates_checked": r.candidates_checked,
                        "method": r.method.name(),
                        "elapsed_ms": ms,
                    })
                );
            } else {
                println!("{} = {}", kind.name(), r.value);
                println!("witness: {}", r.witness);
                println!("method: {}", r.method.name());
                println!("candidates checked: {}", r.candidates_checked);
                println!("elapsed: {ms} ms");
            }
            Ok(())
        }

        Command::Generate {
            family,
            product,
            params,
            lhs,
            rhs,
            parts,
            root,
            k,
            format: output_format,
        } => {
            let spec_text = generate_spec_text(family, product, params, lhs, rhs, parts, root, k)?;
            let parsed = spec::GraphSpec::parse(&spec_text)?;
            let g = parsed.build()?;
            match output_format.as_str() {
                "g6" => println!("{}", format::to_graph6(&g)),
                "edges" => print!("{}", format::to_edge_list(&g)),
                "dot" => print!("{}", format::to_dot(&g)),
                other => return Err(CliError::Usage(format!("unknown format {other:?}"))),
            }
            Ok(())
        }

        Command::Trace { g6, file, set } => {
            let g = load_graph(g6, file)?;
            let mut black = VertexSet::new(g.order());
            for tok in set.split(',') {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad vertex index {tok:?}")))?;
                if v >= g.order() {
                    return Err(CliError::Core(domforce_core::Error::VertexOutOfRange {
                        vertex: v,
                        order: g.order(),
                    }));
                }
                black.insert(v);
            }
            let t = forcing::trace(&g, &black);
            for (u, v) in &t.forces {
                println!("{u} -> {v}");
            }
            println!(
                "final: {} ({} of {} black)",
                t.final_set,
                t.final_set.len(),
                g.order()
            );
            println!(
                "zero forcing set: {}",
                if t.final_set.len() == g.order() { "yes" } else { "no" }
            );
            Ok(())
        }

        Command::Witness { target } => match target {
            WitnessTarget::Grid { p, q, check } => {
                let witness = grid_witness(p, q)?;
                println!("{} vertices", witness.len());
                let coords: Vec<String> = witness
                    .iter()
                    .map(|v| format!("({},{})", v / q + 1, v % q + 1))
                    .collect();
                println!("{}", coords.join(" "));
                if check {
                    let g = FamilySpec::Grid { p, q }.build()?;
                    if forcing::is_connected_dom_forcing(&g, &witness)? {
                        println!("verified");
                    } else {
                        // grid_witness never returns an unverified set
                        unreachable!("witness failed re-verification");
                    }
                }
                Ok(())
            }
        },

        Command::Verify {
            suites,
            max_n,
            seed,
            json,
            workers,
            budget,
            timings,
            allowlist,
        } => {
            let names = parse_suite_names(&suites)?;
            let cfg = SuiteConfig {
                suites: names,
                max_n,
                seed,
                workers,
                budget: SolveBudget {
                    max_candidates: budget,
                    max_size: None,
                },
                timings,
            };
            let records = run_suite(&cfg);
            let allow = match allowlist {
                Some(path) => Allowlist::parse(&std::fs::read_to_string(path)?),
                None => Allowlist::builtin(),
            };

            if let Some(path) = &json {
                let mut out = std::fs::File::create(path)?;
                for r in &records {
                    writeln!(out, "{}", r.to_json_line())?;
                }
            }

            print_table(&records, &allow);
            let failures = blocking_failures(&records, &allow);
            if failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::VerifyFailed(failures.len()))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate_spec_text(
    family: Option<String>,
    product: Option<String>,
    params: Option<String>,
    lhs: Option<String>,
    rhs: Option<String>,
    parts: Option<String>,
    root: Option<usize>,
    k: Option<usize>,
) -> Result<String, CliError> {
    let need = |opt: Option<String>, what: &str, name: &str| {
        opt.ok_or_else(|| CliError::Usage(format!("--product {name} requires --{what}")))
    };
    match (family, product) {
        (Some(f), None) => Ok(match params {
            Some(p) => format!("{f}:{p}"),
            None => f,
        }),
        (None, Some(p)) => {
            let name = p.as_str();
            match name {
                "join" | "corona" | "cartesian" => {
                    let a = need(lhs, "lhs", name)?;
                    let b = need(rhs, "rhs", name)?;
                    Ok(format!("{name}({a};{b})"))
                }
                "splitting" => {
                    let a = need(lhs, "lhs", name)?;
                    Ok(format!("splitting({a})"))
                }
                "iterated_corona" => {
                    let a = need(lhs, "lhs", name)?;
                    let b = need(rhs, "rhs", name)?;
                    let k = k.ok_or_else(|| CliError::Usage("--product iterated_corona requires --k".into()))?;
                    Ok(format!("iterated_corona({a};{b};{k})"))
                }
                "rooted_product" => {
                    let a = need(lhs, "lhs", name)?;
                    let b = need(rhs, "rhs", name)?;
                    let root = root
                        .ok_or_else(|| CliError::Usage("--product rooted_product requires --root".into()))?;
                    Ok(format!("rooted_product({a};{b};{root})"))
                }
                "generalized_corona" => {
                    let a = need(lhs, "lhs", name)?;
                    let parts = need(parts, "parts", name)?;
                    Ok(format!("generalized_corona({a};{parts})"))
                }
                other => Err(CliError::Usage(format!("unknown product {other:?}"))),
            }
        }
        _ => Err(CliError::Usage("provide exactly one of --family / --product".into())),
    }
}

fn parse_suite_names(raw: &[String]) -> Result<Vec<SuiteName>, CliError> {
    if raw.is_empty() || raw.iter().any(|s| s == "all") {
        return Ok(SuiteName::ALL.to_vec());
    }
    raw.iter()
        .map(|s| {
            SuiteName::parse(s).ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
        })
        .collect()
}

fn predicted_cell(p: &PredictedJson) -> String {
    match p {
        PredictedJson::Exact { value } => format!("={value}"),
        PredictedJson::Interval { lo, hi } => format!("[{lo},{hi}]"),
        PredictedJson::NotCovered => "-".to_string(),
    }
}

fn print_table(records: &[domforce_cli::report::VerificationRecord], allow: &Allowlist) {
    println!(
        "{:<16} {:<8} {:<44} {:>10} {:>9} {:>8}",
        "STATUS", "INV", "GRAPH", "PREDICTED", "COMPUTED", "MS"
    );
    let mut counts = std::collections::BTreeMap::new();
    let mut allowlisted = 0usize;
    for r in records {
        *counts.entry(r.status.name()).or_insert(0usize) += 1;
        let status = if r.status.is_failure() && allow.permits(r) {
            allowlisted += 1;
            format!("{}*", r.status.name())
        } else {
            r.status.name().to_string()
        };
        let computed = r
            .computed
            .as_ref()
            .map(|c| c.value.to_string())
            .unwrap_or_else(|| "-".to_string());
        let mut graph_id = r.graph_id.clone();
        if graph_id.len() > 44 {
            graph_id.truncate(41);
            graph_id.push_str("...");
        }
        println!(
            "{:<16} {:<8} {:<44} {:>10} {:>9} {:>8}",
            status,
            r.invariant,
            graph_id,
            predicted_cell(&r.predicted),
            computed,
            r.elapsed_ms
        );
    }
    let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    println!("---");
    println!("{} records ({})", records.len(), summary.join(", "));
    if allowlisted > 0 {
        println!("{allowlisted} failure row(s) allowlisted as known discrepancies (*)");
    }
}
