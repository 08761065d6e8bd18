use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use tilderep::acceptance::{run_criterion, CRITERIA};
use tilderep::ehresmann::{BiUnaryStructure, Ehresmann};
use tilderep::json::{Family, SemigroupFile};
use tilderep::report;
use tilderep::rep::RepError;
use tilderep::zoo;

/// Largest `k` accepted by `young`; the Kostka table has `2^(k-1)` columns.
const YOUNG_MAX: usize = 10;

#[derive(Parser)]
#[command(name = "tilderep", version, about = "Ehresmann semigroups and their representations")]
struct Cli {
    /// Emit JSON instead of the plain text rendering.
    #[arg(long, global = true)]
    json: bool,
    /// Reject inputs with more elements than this.
    #[arg(long, global = true, default_value_t = 1024)]
    max_size: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "TILDEREP_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification verdicts with witnesses.
    Analyze { path: PathBuf },
    /// Check that the Möbius maps are inverse algebra isomorphisms.
    VerifyIso {
        path: PathBuf,
        /// Also try the upper triangular matrix model of the six-pair example.
        #[arg(long)]
        ut3: bool,
    },
    /// Simple and projective modules, the Cartan matrix and cross-checks.
    Reps { path: PathBuf },
    /// Built-in semigroups.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
    /// Partitions, hook dimensions, characters and Kostka numbers of S_k.
    Young { k: usize },
    /// Run every acceptance criterion, one JSON line each.
    Acceptance,
}

#[derive(Subcommand)]
enum ZooAction {
    List,
    /// Print a member in the input file format.
    Emit { name: String },
}

/// Exit code 1: the input was read fine but a checked property fails.
#[derive(Debug)]
struct Violation(String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

fn load(path: &Path, max_size: usize) -> anyhow::Result<SemigroupFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(SemigroupFile::parse(&text, Some(max_size))?)
}

fn structure(file: &SemigroupFile) -> anyhow::Result<BiUnaryStructure> {
    Ok(file.to_structure()?)
}

/// Plain rendering of a report: one `key: value` line per scalar, nested
/// objects indented.
fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(inner) if !inner.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 2, out);
                    }
                    Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for row in rows {
                            out.push_str(&format!("{pad}  {row}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {v}\n")),
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

fn emit<T: Serialize>(report: &T, json: bool) -> anyhow::Result<()> {
    let value = serde_json::to_value(report)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        let mut out = String::new();
        render(&value, 0, &mut out);
        print!("{out}");
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze { path } => {
            let b = structure(&load(&path, cli.max_size)?)?;
            emit(&report::analyze(&b)?, cli.json)
        }
        Command::VerifyIso { path, ut3 } => {
            let b = structure(&load(&path, cli.max_size)?)?;
            let r = report::verify_iso(&b, ut3)?;
            emit(&r, cli.json)?;
            if !r.passed {
                bail!(Violation("the algebras were not shown isomorphic".into()));
            }
            Ok(())
        }
        Command::Reps { path } => {
            let file = load(&path, cli.max_size)?;
            let b = structure(&file)?;
            let e = Ehresmann::new(b).map_err(|err| Violation(err.to_string()))?;
            let r = report::reps(&e, file.family.as_ref()).map_err(|err| match err {
                RepError::NotRightRestrictionEi | RepError::UnsupportedSubgroup { .. } => {
                    anyhow::Error::new(Violation(err.to_string()))
                }
                other => other.into(),
            })?;
            emit(&r, cli.json)?;
            if !r.passed {
                let failed: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|(_, &ok)| !ok)
                    .map(|(k, _)| k.as_str())
                    .collect();
                bail!(Violation(format!("failed checks: {}", failed.join(", "))));
            }
            Ok(())
        }
        Command::Zoo { action: ZooAction::List } => {
            let catalogue = zoo::catalogue();
            if cli.json {
                let entries: Vec<_> = catalogue
                    .iter()
                    .map(|(name, about)| serde_json::json!({ "name": name, "description": about }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&entries)?);
            } else {
                for (name, about) in catalogue {
                    println!("{name:<24}{about}");
                }
            }
            Ok(())
        }
        Command::Zoo { action: ZooAction::Emit { name } } => {
            let b = zoo::by_name(&name)?;
            if b.size() > cli.max_size {
                bail!("{name} has {} elements, above --max-size {}", b.size(), cli.max_size);
            }
            let file = SemigroupFile::from_structure(&b, Family::from_zoo_name(&name));
            println!("{}", serde_json::to_string(&file)?);
            Ok(())
        }
        Command::Young { k } => {
            if k > YOUNG_MAX {
                bail!("k = {k} exceeds the limit of {YOUNG_MAX}");
            }
            emit(&report::young(k), cli.json)
        }
        Command::Acceptance => {
            let results: Vec<_> = (1..=CRITERIA.len()).into_par_iter().map(run_criterion).collect();
            for c in &results {
                println!("{}", serde_json::to_string(c)?);
            }
            let failed: Vec<usize> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
            if !failed.is_empty() {
                bail!(Violation(format!("failing criteria: {failed:?}")));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<Violation>() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
