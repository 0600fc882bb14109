//! Command-line front end. Exit codes: 0 ok, 2 usage, 3 resource cap,
//! 4 verification failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use divclass::divgraphs::try_divisibility_graph;
use divclass::group::{generate, Family, GroupSpec, GroupTable, Sign, SpecLimits};
use divclass::report::{self, AnalyzeOptions, Caps};
use divclass::unipotent::JordanFamily;
use divclass::Error;

#[derive(Parser)]
#[command(
    name = "divclass",
    version,
    about = "Divisibility graphs of class sizes in finite classical groups"
)]
struct Cli {
    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = divclass::group::DEFAULT_ORDER_CAP)]
    max_order: u128,
    /// Largest commutant to enumerate in the centralizer oracle.
    #[arg(long, global = true, default_value_t = divclass::group::DEFAULT_ORACLE_CAP)]
    max_oracle: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// GL, SL, GU, SU, Sp, GO (or O), SO, Omega
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u64,
    /// Form type for even-dimensional orthogonal groups: + or -
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Divisibility graph of a list of positive integers.
    Divgraph {
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<String>,
        /// Write JSON to PATH (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write Graphviz DOT to PATH (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate a group and report on the graph of its class sizes.
    Analyze {
        #[command(flatten)]
        group: GroupArgs,
        /// Work in G/Z(G).
        #[arg(long)]
        projective: bool,
        /// Also count commuting-graph components.
        #[arg(long)]
        commuting: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Binary group-table cache, read if present and written otherwise.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Centralizer exponents of unipotent classes.
    Unipotent {
        /// GL, Sp or O; group families such as SU or Omega pick their type
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        check_bound: bool,
        /// Cross-check every class against the commutant oracle over GF(q).
        #[arg(long, requires = "q")]
        oracle: bool,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Generic class data of PSL(3,q) (epsilon +1) or PSU(3,q) (epsilon -1).
    Psl3 {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        #[arg(long)]
        compare_bruteforce: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Centralizer order of one element through the commutant algebra.
    OracleCentralizer {
        #[command(flatten)]
        group: GroupArgs,
        /// Jordan block sizes of a unipotent element, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', conflicts_with = "matrix")]
        blocks: Option<Vec<usize>>,
        /// Row-major field codes, rows separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::FieldTooLarge(_) | Error::Overflow(_) => 3,
        Error::Consistency(_) => 4,
        _ => 2,
    }
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    s.parse().map_err(Failure::Lib)
}

fn parse_sign(s: &Option<String>) -> Result<Option<Sign>, Failure> {
    s.as_deref()
        .map(|v| v.parse::<Sign>().map_err(Failure::Lib))
        .transpose()
}

fn group_spec(g: &GroupArgs) -> Result<GroupSpec, Failure> {
    let spec = GroupSpec::with_sign(parse_family(&g.family)?, parse_sign(&g.sign)?, g.n, g.q)?;
    spec.check_limits(SpecLimits::default())?;
    Ok(spec)
}

fn emit(path: &Path, text: &str) -> Result<(), Failure> {
    if path == Path::new("-") {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

fn emit_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    if let Some(p) = path {
        let mut text =
            serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
        text.push('\n');
        emit(p, &text)?;
    }
    Ok(())
}

/// Prints the text rendering unless JSON goes to stdout.
fn print_text(json: &Option<PathBuf>, text: impl std::fmt::Display) {
    if json.as_deref() != Some(Path::new("-")) {
        print!("{text}");
    }
}

fn parse_epsilon(s: &str) -> Result<i32, Failure> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "-" | "−1" => Ok(-1),
        other => Err(Failure::Usage(format!(
            "epsilon must be +1 or -1, got {other:?}"
        ))),
    }
}

fn load_table(spec: &GroupSpec, cache: &Option<PathBuf>, cap: u128) -> Result<GroupTable, Failure> {
    let mut plain = *spec;
    plain.projective = false;
    if let Some(path) = cache {
        if path.exists() {
            let t = GroupTable::read_cache(path)?;
            if t.spec() != &plain {
                return Err(Failure::Usage(format!(
                    "cache holds {}, not {plain}",
                    t.spec()
                )));
            }
            return Ok(t);
        }
    }
    let t = generate(&plain, cap)?;
    if let Some(path) = cache {
        t.write_cache(path)?;
    }
    Ok(t)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let caps = Caps {
        max_order: cli.max_order,
        max_oracle: cli.max_oracle,
    };
    match cli.command {
        Command::Divgraph { values, json, dot } => {
            let mut nums = Vec::with_capacity(values.len());
            for v in &values {
                let x: u128 = v
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("not a positive integer: {v:?}")))?;
                if x == 0 {
                    return Err(Failure::Usage("values must be positive".into()));
                }
                nums.push(x);
            }
            let g = try_divisibility_graph(&nums)?;
            let r = report::divgraph_report(&nums)?;
            emit_json(&json, &r)?;
            if let Some(p) = &dot {
                emit(p, &g.to_dot())?;
            }
            if json.as_deref() != Some(Path::new("-")) && dot.as_deref() != Some(Path::new("-")) {
                println!("vertices: {:?}", r.graph.vertices);
                println!("edges: {:?}", r.graph.edges);
                println!("components: {:?}", r.graph.components);
                println!("shape: {}", r.notation);
            }
            Ok(())
        }
        Command::Analyze {
            group,
            projective,
            commuting,
            dot,
            json,
            cache,
        } => {
            let spec = group_spec(&group)?;
            let table = load_table(&spec, &cache, caps.max_order)?;
            let options = AnalyzeOptions { commuting, caps };
            let r = report::analyze_table(&table, projective, &options)?;
            emit_json(&json, &r)?;
            if let Some(p) = &dot {
                let g = try_divisibility_graph(&r.graph.vertices)?;
                emit(p, &g.to_dot())?;
            }
            print_text(&json, &r);
            if r.ok() {
                Ok(())
            } else {
                Err(Failure::Verification(r.violations.join("; ")))
            }
        }
        Command::Unipotent {
            family,
            n,
            check_bound,
            oracle,
            q,
            sign,
            json,
        } => {
            let gfam = parse_family(&family)?;
            let jfam = match gfam {
                Family::GL | Family::SL | Family::GU | Family::SU => JordanFamily::Linear,
                Family::Sp => JordanFamily::Symplectic,
                Family::GO | Family::SO | Family::Omega => JordanFamily::Orthogonal,
            };
            let oracle_spec = if oracle {
                let q = q.ok_or_else(|| Failure::Usage("--oracle needs --q".into()))?;
                let mut s = parse_sign(&sign)?;
                if gfam.is_orthogonal() && n % 2 == 0 && s.is_none() {
                    s = Some(Sign::Plus);
                }
                let spec = GroupSpec::with_sign(gfam, s, n, q)?;
                spec.check_limits(SpecLimits::default())?;
                Some(spec)
            } else {
                None
            };
            let r = report::unipotent_report(jfam, n, check_bound, oracle_spec, caps)?;
            emit_json(&json, &r)?;
            print_text(&json, &r);
            if r.ok() {
                Ok(())
            } else {
                Err(Failure::Verification("unipotent check failed".into()))
            }
        }
        Command::Psl3 {
            q,
            epsilon,
            compare_bruteforce,
            json,
        } => {
            let eps = parse_epsilon(&epsilon)?;
            let r = report::psl3_report(q, eps, compare_bruteforce, caps)?;
            emit_json(&json, &r)?;
            print_text(&json, &r);
            match &r.comparison {
                Some(c) if !c.agreement => Err(Failure::Verification(format!(
                    "brute force {:?} differs from generic {:?}",
                    c.bruteforce_cent_orders, c.generic_cent_orders
                ))),
                _ => Ok(()),
            }
        }
        Command::OracleCentralizer {
            group,
            blocks,
            matrix,
            json,
        } => {
            let spec = group_spec(&group)?;
            let setting = divclass::group::ClassicalSetting::new(&spec)?;
            let u = match (blocks, matrix) {
                (Some(b), None) => setting.ring().jordan_unipotent(&b)?,
                (None, Some(m)) => report::parse_matrix(&m, spec.n)?,
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --blocks or --matrix".into(),
                    ))
                }
            };
            let r = report::oracle_report(&spec, &u, caps)?;
            emit_json(&json, &r)?;
            if json.as_deref() != Some(Path::new("-")) {
                println!("group: {}", spec);
                println!("commutant dimension: {}", r.commutant_dimension);
                println!("centralizer order: {}", r.centralizer_order);
                println!("p-part: {}", r.q_part);
                if let (Some(t), Some(p)) = (&r.jordan_type, r.predicted_q_part) {
                    println!("jordan type: {t}  predicted p-part: {p}");
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(4)
        }
    }
}
