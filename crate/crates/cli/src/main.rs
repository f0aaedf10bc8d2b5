use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nulldecomp::campaign::{run_campaign, CampaignSpec, Execution};
use nulldecomp::checks::{run_checks, CheckConfig};
use nulldecomp::decomp::analyze;
use nulldecomp::error::{GenerateError, GraphError, NullError};
use nulldecomp::generate::{generate, ClassBias, GeneratorSpec};
use nulldecomp::graph::{parse_edge_list, Graph};
use nulldecomp::linalg::format_rational;
use nulldecomp::unicyclic::{rref_null_basis, structural_null_basis, NullBasis};

const EXIT_INTERNAL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CLASS: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "nulldecomp",
    version,
    about = "Null spaces, null decompositions and alpha/nu of trees and unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a graph and evaluate the alpha/nu formulas.
    Analyze {
        /// Edge-list file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
        /// Cross-check against the basis constructions and brute force.
        #[arg(long)]
        verify: bool,
    },
    /// Print a basis of the adjacency null space.
    Basis {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Structural)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Print a random unicyclic graph as an edge list.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cycle_length: Option<usize>,
        #[arg(long, value_parser = ["1", "2"])]
        force_type: Option<String>,
    },
    /// Run the check suite over a batch of random graphs.
    Verify {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        min_n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cycle_length: Option<usize>,
        #[arg(long, value_parser = ["1", "2"])]
        force_type: Option<String>,
        #[arg(long)]
        json: bool,
        /// Check graphs one at a time even when built with parallel support.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rref,
    Structural,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<NullError> for Failure {
    fn from(e: NullError) -> Self {
        let code = match e {
            NullError::Graph(
                GraphError::UnsupportedGraphClass
                | GraphError::NotUnicyclic
                | GraphError::NotForest,
            ) => EXIT_CLASS,
            _ => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Self {
        let code = match e {
            GenerateError::SpecInvalid(_) => EXIT_PARSE,
            GenerateError::BiasUnsatisfied(_) => EXIT_CLASS,
        };
        Failure::new(code, e.to_string())
    }
}

fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(EXIT_INTERNAL, format!("reading stdin: {e}")))?;
        buf
    } else {
        let path = PathBuf::from(input);
        fs::read_to_string(&path)
            .map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", path.display())))?
    };
    parse_edge_list(&text).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn bias(force_type: &Option<String>) -> ClassBias {
    match force_type.as_deref() {
        Some("1") => ClassBias::ForceTypeI,
        Some("2") => ClassBias::ForceTypeII,
        _ => ClassBias::Any,
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn cmd_analyze(input: &str, json: bool, verify: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let mut report = analyze(&g)?;
    if verify {
        report.checks = run_checks(&g, &CheckConfig::default())?.results;
    }
    if json {
        println!("{}", to_json(&report));
    } else {
        println!(
            "n {}  m {}  class {}  case {}",
            report.n, report.m, report.class, report.case
        );
        if !report.cycle.is_empty() {
            println!("cycle      {}", report.cycle.join(" "));
        }
        println!("nullity    {}", report.nullity);
        println!(
            "support    ({}) {}",
            report.support.len(),
            report.support.join(" ")
        );
        println!(
            "core       ({}) {}",
            report.core.len(),
            report.core.join(" ")
        );
        println!(
            "n-vertices ({}) {}",
            report.n_vertices.len(),
            report.n_vertices.join(" ")
        );
        println!("alpha      {}", report.alpha);
        println!("nu         {}", report.nu);
        for (name, ok) in &report.checks {
            println!("  {} {name}", if *ok { "ok  " } else { "FAIL" });
        }
    }
    if !report.all_checks_pass() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|(_, ok)| !**ok)
            .map(|(name, _)| name.as_str())
            .collect();
        return Err(Failure::new(
            EXIT_VERIFY,
            format!("failed checks: {}", failed.join(", ")),
        ));
    }
    Ok(())
}

fn entries(g: &Graph, basis: &NullBasis) -> Vec<Vec<(String, String)>> {
    basis
        .vectors
        .iter()
        .map(|x| {
            x.support()
                .into_iter()
                .map(|v| (g.label(v).to_string(), format_rational(&x[v])))
                .collect()
        })
        .collect()
}

fn cmd_basis(input: &str, method: Method, json: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let basis = match method {
        Method::Rref => {
            if !g.is_forest() && !g.is_unicyclic() {
                return Err(NullError::from(GraphError::UnsupportedGraphClass).into());
            }
            rref_null_basis(&g)
        }
        Method::Structural => structural_null_basis(&g)?,
    };
    let rows = entries(&g, &basis);
    if json {
        let vectors: Vec<serde_json::Value> = rows
            .iter()
            .zip(&basis.provenance)
            .map(|(row, p)| {
                let coords: serde_json::Map<String, serde_json::Value> = row
                    .iter()
                    .map(|(l, v)| (l.clone(), v.clone().into()))
                    .collect();
                serde_json::json!({ "provenance": p, "coordinates": coords })
            })
            .collect();
        println!(
            "{}",
            to_json(&serde_json::json!({ "nullity": basis.len(), "vectors": vectors }))
        );
        return Ok(());
    }
    if basis.is_empty() {
        println!("nullity 0, empty basis");
        return Ok(());
    }
    println!("nullity {}", basis.len());
    for (row, p) in rows.iter().zip(&basis.provenance) {
        let coords: Vec<String> = row.iter().map(|(l, v)| format!("{l}={v}")).collect();
        println!("{p:?}: {}", coords.join(" "));
    }
    Ok(())
}

fn cmd_generate(spec: GeneratorSpec) -> Result<(), Failure> {
    print!("{}", generate(&spec)?.to_edge_list());
    Ok(())
}

fn cmd_verify(spec: CampaignSpec, exec: Execution, json: bool) -> Result<(), Failure> {
    let campaign = run_campaign(&spec, exec)?;
    let summary = &campaign.summary;
    if json {
        println!("{}", to_json(summary));
    } else {
        println!("{}/{} passed", summary.passed, summary.total);
        for (case, hits) in &summary.case_counts {
            println!("  {case:<10} {hits}");
        }
    }
    match &summary.first_failure {
        None => Ok(()),
        Some(f) => {
            if !json {
                println!(
                    "first failure: graph #{} (n {}, seed {})",
                    f.index, f.spec.n, f.spec.seed
                );
                println!("failed checks: {}", f.failed_checks.join(", "));
                println!("minimized reproduction:");
                print!("{}", f.reproduction);
            }
            Err(Failure::new(
                EXIT_VERIFY,
                format!("{} graphs failed", summary.total - summary.passed),
            ))
        }
    }
}

/// Exit quietly when stdout is closed early, as in `nulldecomp ... | head`.
fn restore_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    restore_sigpipe();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            input,
            json,
            verify,
        } => cmd_analyze(&input, json, verify),
        Command::Basis {
            input,
            method,
            json,
        } => cmd_basis(&input, method, json),
        Command::Generate {
            n,
            seed,
            cycle_length,
            force_type,
        } => cmd_generate(GeneratorSpec {
            n,
            cycle_length,
            seed,
            class_bias: bias(&force_type),
        }),
        Command::Verify {
            count,
            min_n,
            max_n,
            seed,
            cycle_length,
            force_type,
            json,
            sequential,
        } => {
            let mut spec = CampaignSpec::new(count, min_n, max_n, seed);
            spec.cycle_length = cycle_length;
            spec.bias = bias(&force_type);
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            cmd_verify(spec, exec, json)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
