//! Command-line front end.
//!
//! Every command prints JSON by default; `--format csv|text` flattens the
//! same value. Errors go to stderr as `{"error": kind, "message": ...}`.
//!
//! Exit status: 0 success, 1 usage or malformed input, 2 hypothesis or
//! precondition failure (including builders whose structure is missing),
//! 3 budget exceeded, 4 precision indeterminate, 5 internal
//! (a construction failed verification).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bounds::{
    check_dominance, envelope, eval_bound, solve_g5_constant, BoundVariant, DominanceQuery, H4_CONSTANT,
};
use crate::constructive::{
    construct_even_lemma, construct_g3, construct_g3_nonneg, construct_g4, construct_g5_allodds,
    construct_g5_bounded, construct_h4_bounded,
};
use crate::error::{Error, Result};
use crate::extremal::{hunt_with_progress, threshold_table, Strategy};
use crate::families::{certify_family_with, FamilyName};
use crate::search::{find_witness_with, SearchOptions};
use crate::sidon::{build_sidon, is_sidon, is_weak_sidon, SidonMethod};
use crate::sumset::{Mode, SumSet};

#[derive(Debug, Parser)]
#[command(name = "pairsum", version, about = "Pairwise-sum witnesses in subsets of {1..2n}")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for parallel commands (0 = all cores).
    #[arg(long, env = "PAIRSUM_THREADS", default_value_t = 0, global = true)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct SetArg {
    /// Set as JSON, e.g. '{"n":6,"members":[1,2,3]}' (ascending members).
    #[arg(long, conflicts_with = "set_file")]
    pub set: Option<String>,
    /// File holding the set JSON.
    #[arg(long)]
    pub set_file: Option<PathBuf>,
}

impl SetArg {
    fn load(&self) -> Result<SumSet> {
        let text = match (&self.set, &self.set_file) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidSet(format!("{}: {e}", p.display())))?,
            (None, None) => return Err(Error::InvalidSet("one of --set or --set-file is required".into())),
        };
        serde_json::from_str(&text).map_err(|e| Error::InvalidSet(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Builder {
    G3,
    G3Nonneg,
    G4,
    G5Allodds,
    EvenLemma,
    G5Bounded,
    H4Bounded,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Strict,
    Weak,
}

impl From<VariantArg> for BoundVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Strict => BoundVariant::Strict,
            VariantArg::Weak => BoundVariant::Weak,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for the lexicographically smallest k-witness.
    Witness {
        #[command(flatten)]
        set: SetArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "g")]
        mode: Mode,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Run an explicit builder.
    Construct {
        #[arg(long, value_enum)]
        builder: Builder,
        #[command(flatten)]
        set: SetArg,
        /// Comma-separated even set for the even-lemma builder.
        #[arg(long)]
        evens: Option<String>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Strict)]
        variant: VariantArg,
        /// Constant for the bounded builders.
        #[arg(long)]
        c: Option<u64>,
    },
    /// Exact thresholds for a range of n.
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "g")]
        mode: Mode,
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long, default_value = "branch-and-bound")]
        strategy: Strategy,
    },
    /// Build a named family and search it for a witness.
    Family {
        #[arg(long)]
        name: FamilyName,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "g")]
        mode: Mode,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// The explicit constants for the five-term and positive four-term bounds.
    Constants,
    /// Evaluate the threshold functions at (k, x).
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        x: f64,
    },
    /// Sidon predicates and constructions.
    Sidon {
        #[command(subcommand)]
        action: SidonAction,
    },
    /// Randomized search for large witness-free sets; JSON lines.
    Hunt {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "g")]
        mode: Mode,
        #[arg(long)]
        target: u32,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SidonAction {
    /// Test a comma-separated set.
    Check {
        #[arg(long)]
        set: String,
    },
    /// Build a Sidon subset of [1, limit].
    Build {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value = "modular")]
        method: SidonMethod,
    },
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisViolation(_)
        | Error::PreconditionViolation(_)
        | Error::StructureNotFound(_)
        | Error::BranchGuaranteeFailed(_) => 2,
        Error::BudgetExceeded(_) => 3,
        Error::PrecisionIndeterminate(_) => 4,
        Error::InvalidConstruction(_) => 5,
        _ => 1,
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|e| Error::InvalidSet(format!("{t:?}: {e}"))))
        .collect()
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Csv => {
            let rows: Vec<&Map<String, Value>> = match value {
                Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
                Value::Object(m) => vec![m],
                _ => vec![],
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some(first) = rows.first() {
                let header: Vec<&String> = first.keys().collect();
                w.write_record(&header).expect("in-memory csv");
                for row in rows {
                    w.write_record(header.iter().map(|h| row.get(*h).map(scalar).unwrap_or_default()))
                        .expect("in-memory csv");
                }
            } else {
                w.write_record([scalar(value)]).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 input")
        }
        Format::Text => match value {
            Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}\n", scalar(v))).collect(),
            Value::Array(items) => items.iter().map(|v| render(v, Format::Text) + "\n").collect(),
            other => format!("{}\n", scalar(other)),
        },
    }
}

fn dispatch(cli: &Cli, pool: &rayon::ThreadPool, out: &mut dyn Write) -> Result<()> {
    let emit = |out: &mut dyn Write, v: Value| {
        out.write_all(render(&v, cli.format).as_bytes()).expect("stdout writable");
    };
    match &cli.command {
        Command::Witness { set, k, mode, max_nodes } => {
            let a = set.load()?;
            let opts = SearchOptions { max_nodes: *max_nodes, ..Default::default() };
            let cert = find_witness_with(&a, *k, *mode, &opts)?;
            emit(out, to_value(&cert));
        }
        Command::Construct { builder, set, evens, k, variant, c } => {
            let built = match builder {
                Builder::EvenLemma => {
                    let list = evens
                        .as_deref()
                        .ok_or_else(|| Error::InvalidSet("--evens is required for even-lemma".into()))?;
                    construct_even_lemma(&parse_list(list)?, *k, (*variant).into())?
                }
                other => {
                    let a = set.load()?;
                    let need_c = || c.ok_or_else(|| Error::InvalidSet("--c is required".into()));
                    match other {
                        Builder::G3 => construct_g3(&a)?,
                        Builder::G3Nonneg => construct_g3_nonneg(&a)?,
                        Builder::G4 => construct_g4(&a)?,
                        Builder::G5Allodds => construct_g5_allodds(&a)?,
                        Builder::G5Bounded => construct_g5_bounded(&a, need_c()?)?,
                        Builder::H4Bounded => construct_h4_bounded(&a, need_c()?)?,
                        Builder::EvenLemma => unreachable!(),
                    }
                }
            };
            emit(out, to_value(&built));
        }
        Command::Table { k, mode, n_from, n_to, strategy } => {
            let rows = pool.install(|| threshold_table(*k, *mode, *n_from..=*n_to, *strategy))?;
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "k": r.k,
                        "mode": r.mode,
                        "threshold": r.threshold,
                        "extremal_size": r.extremal_set.len(),
                        "extremal_set": r.extremal_set.members(),
                        "vacuous_above": r.vacuous_above,
                        "strategy": r.attestation.strategy,
                        "nodes": r.attestation.nodes,
                    })
                })
                .collect();
            emit(out, Value::Array(rows));
        }
        Command::Family { name, n, k, mode, max_nodes } => {
            let opts = SearchOptions { max_nodes: *max_nodes, ..Default::default() };
            let cert = certify_family_with(*name, *n, *k, *mode, &opts)?;
            emit(out, to_value(&cert));
        }
        Command::Constants => {
            let g5 = solve_g5_constant()?;
            if !check_dominance(&DominanceQuery::h4(H4_CONSTANT))? {
                return Err(Error::InvalidConstruction(format!("C = {H4_CONSTANT} fails the F_4 check")));
            }
            emit(out, json!({"g5_C": g5, "h4_C_verified": H4_CONSTANT}));
        }
        Command::Bounds { k, x } => {
            let f = eval_bound(*k, *x, BoundVariant::Strict)?;
            let weak = eval_bound(*k, *x, BoundVariant::Weak)?;
            emit(out, json!({"k": k, "x": x, "f": f, "F": weak, "envelope": envelope(*k, *x)}));
        }
        Command::Sidon { action } => match action {
            SidonAction::Check { set } => {
                let mut s = parse_list(set)?;
                s.sort_unstable();
                s.dedup();
                emit(out, json!({"set": s, "sidon": is_sidon(&s), "weak_sidon": is_weak_sidon(&s)}));
            }
            SidonAction::Build { limit, method } => {
                let s = build_sidon(*limit, *method)?;
                emit(out, json!({"limit": limit, "method": method, "size": s.len(), "set": s}));
            }
        },
        Command::Hunt { n, k, mode, target, budget, seed } => {
            let report = hunt_with_progress(*n, *k, *mode, *target, *budget, *seed, |p| {
                let mut line = to_value(p);
                line["event"] = json!("progress");
                writeln!(out, "{line}").expect("stdout writable");
            })?;
            let mut last = to_value(&report);
            last["event"] = json!("result");
            if report.found.is_some() {
                last["note"] = json!("witness-free set reached the target size");
            }
            writeln!(out, "{last}").expect("stdout writable");
        }
    }
    Ok(())
}

/// Parses `args` and runs the command, writing to `out` / `err`.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            if status == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = writeln!(err, "{}", json!({"error": "usage", "message": text.trim_end()}));
            }
            return status;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "{}", json!({"error": "usage", "message": e.to_string()}));
            return 1;
        }
    };
    match dispatch(&cli, &pool, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", json!({"error": e.kind(), "message": e.to_string()}));
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pairsum").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn witness_command() {
        let (code, out, _) = call(&[
            "witness",
            "--set",
            r#"{"n":6,"members":[1,2,3,4,5,7,8,9,11]}"#,
            "--k",
            "5",
            "--mode",
            "g",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["witness"], json!([-1, 2, 3, 5, 6]));
    }

    #[test]
    fn table_csv() {
        let (code, out, _) =
            call(&["table", "--k", "3", "--mode", "g", "--n-from", "3", "--n-to", "5", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut rd = csv::Reader::from_reader(out.as_bytes());
        let col = rd.headers().unwrap().iter().position(|h| h == "threshold").unwrap();
        let values: Vec<String> = rd.records().map(|r| r.unwrap()[col].to_string()).collect();
        assert_eq!(values, vec!["1", "1", "1"]);
    }

    #[test]
    fn exit_statuses() {
        assert_eq!(call(&["witness", "--k", "3"]).0, 1);
        assert_eq!(call(&["nonsense"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        let (code, _, err) =
            call(&["construct", "--builder", "g3", "--set", r#"{"n":3,"members":[1,3,5]}"#]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(v["error"], "hypothesis-violation");
        let (code, _, _) = call(&[
            "witness",
            "--set",
            r#"{"n":10,"members":[1,2,3,4,5,6,7,8,9,10,11,12]}"#,
            "--k",
            "5",
            "--max-nodes",
            "1",
        ]);
        assert_eq!(code, 3);
        assert_eq!(call(&["witness", "--set", r#"{"n":3,"members":[3,1]}"#, "--k", "3"]).0, 1);
    }

    #[test]
    fn render_text() {
        let s = render(&json!({"a": 1, "b": "x"}), Format::Text);
        assert_eq!(s, "a: 1\nb: x\n");
        assert_eq!(render(&json!([{"a": "p,q"}]), Format::Csv), "a\n\"p,q\"\n");
    }
}
