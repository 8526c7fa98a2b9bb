//! The `wap` command-line front end.
//!
//! Exit codes: 0 when every requested computation and check succeeds, 1 when
//! a mathematical check fails, 2 for malformed input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::appell::{parse_spec, AppellSpec};
use crate::error::{Error, Result};
use crate::exactpoly::{parse_rat, Poly};
use crate::partition::{partitions_up_to, Partition};
use crate::plancherel::{self, PlancherelReport};
use crate::symfunc::augmented_schur_p_integral;
use crate::verify::{run_suites, Identity, Status};
use crate::wapoly::{Route, WapEngine};

pub const DEFAULT_MAX_SIZE: usize = 12;
pub const WARN_MAX_SIZE: usize = 16;
pub const HARD_MAX_SIZE: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "wap", version, about = "Wronskian Appell polynomials in exact arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Appell sequence, e.g. hermite, laguerre:1/2, jacobi:1/3,1/5, cumulants:0,-1
    #[arg(long = "seq", global = true, default_value = "monomial")]
    pub seq: String,

    /// Output format
    #[arg(long, global = true, value_enum, env = "WAP_FORMAT", default_value = "plain")]
    pub format: Format,

    /// Algorithm for A_λ: direct, phi, recurrence or cross-checked
    #[arg(long, global = true, default_value = "cross-checked")]
    pub route: String,

    /// Largest partition size visited by table, verify and stats
    #[arg(long = "max-size", global = true, default_value_t = DEFAULT_MAX_SIZE)]
    pub max_size: usize,

    /// Lift the hard limit on --max-size
    #[arg(long = "no-size-limit", global = true)]
    pub no_size_limit: bool,

    /// Replace the reported cumulant c_k by a rational value (K=VALUE);
    /// the polynomials keep their true moments, so checks should fail
    #[arg(long = "corrupt-cumulant", global = true, value_name = "K=VALUE")]
    pub corrupt_cumulant: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A_λ for one partition
    Compute {
        /// Partition as comma-separated parts, e.g. 3,2,1
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        /// Also print the integer coefficients of H(λ)·s_λ in the power-sum basis
        #[arg(long)]
        explain: bool,
    },
    /// Print A_λ for every λ with |λ| ≤ max-size
    Table,
    /// Run an identity suite (or `all`) over every λ with |λ| ≤ max-size
    Verify {
        /// Suite name
        identity: String,
    },
    /// Plancherel mean, second moment and variance for n ≤ max-size
    Stats,
}

struct Context {
    engine: WapEngine,
    format: Format,
    max_size: usize,
}

fn input_error(e: Error) -> Error {
    if e.exit_code() == 2 {
        e
    } else {
        Error::Usage(e.to_string())
    }
}

fn build_spec(common: &Common) -> Result<AppellSpec> {
    let mut spec = parse_spec(&common.seq).map_err(input_error)?;
    for item in &common.corrupt_cumulant {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("--corrupt-cumulant expects K=VALUE, got '{item}'")))?;
        let k: usize = k
            .trim()
            .parse()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::Usage(format!("cumulant index must be a positive integer, got '{k}'")))?;
        let value = parse_rat(v.trim()).map_err(input_error)?;
        spec = spec.with_corrupted_cumulant(k, value);
    }
    Ok(spec)
}

fn prepare(common: &Common, err: &mut dyn Write) -> Result<Context> {
    let spec = build_spec(common)?;
    let route: Route = common.route.parse().map_err(input_error)?;
    if common.max_size > HARD_MAX_SIZE && !common.no_size_limit {
        return Err(Error::Usage(format!(
            "--max-size {} exceeds the limit {HARD_MAX_SIZE}; pass --no-size-limit to proceed",
            common.max_size
        )));
    }
    if common.max_size > WARN_MAX_SIZE {
        let _ = writeln!(
            err,
            "warning: --max-size {} above {WARN_MAX_SIZE} may take a long time",
            common.max_size
        );
    }
    // Cumulant streams are checked up front so malformed sequences fail as input errors.
    spec.cumulants(common.max_size.max(1)).map_err(input_error)?;
    Ok(Context {
        engine: WapEngine::with_route(spec, route),
        format: common.format,
        max_size: common.max_size,
    })
}

fn render(p: &Poly, format: Format) -> String {
    match format {
        Format::Latex => p.to_latex(),
        _ => p.to_string(),
    }
}

fn partition_latex(p: &Partition) -> String {
    if p.is_empty() {
        "\\emptyset".to_string()
    } else {
        p.to_string()
    }
}

#[derive(Serialize)]
struct ExplainRecord {
    partition: Partition,
    coefficient: String,
}

fn cmd_compute(ctx: &Context, partition: &str, explain: bool, out: &mut dyn Write) -> Result<()> {
    let lambda: Partition = partition.parse().map_err(input_error)?;
    ctx.engine.spec().cumulants(lambda.size().max(1)).map_err(input_error)?;
    let a = ctx.engine.get(&lambda)?;
    let table = if explain {
        Some(augmented_schur_p_integral(&lambda)?)
    } else {
        None
    };
    match ctx.format {
        Format::Json => {
            let mut doc = json!({
                "spec": ctx.engine.spec().name(),
                "route": ctx.engine.route().name(),
                "partition": lambda,
                "poly": a,
            });
            if let Some(t) = &table {
                let records: Vec<ExplainRecord> = t
                    .iter()
                    .map(|(mu, d)| ExplainRecord {
                        partition: mu.clone(),
                        coefficient: d.to_string(),
                    })
                    .collect();
                doc["explain"] = serde_json::to_value(records).expect("serialisable");
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))
        }
        Format::Plain | Format::Latex => {
            writeln!(out, "{}", render(&a, ctx.format))?;
            if let Some(t) = &table {
                writeln!(out, "H{lambda} s{lambda} in the power-sum basis:")?;
                for (mu, d) in t {
                    writeln!(out, "  p{mu}: {d}")?;
                }
            }
            Ok(())
        }
    }
    .map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    e.into()
}

fn cmd_table(ctx: &Context, out: &mut dyn Write) -> Result<()> {
    let parts = partitions_up_to(ctx.max_size);
    let rows = parts
        .par_iter()
        .map(|l| ctx.engine.get(l))
        .collect::<Result<Vec<Poly>>>()?;
    match ctx.format {
        Format::Json => {
            let doc: Vec<_> = parts
                .iter()
                .zip(&rows)
                .map(|(l, p)| json!({ "partition": l, "poly": p }))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))
        }
        Format::Plain => parts
            .iter()
            .zip(&rows)
            .try_for_each(|(l, p)| writeln!(out, "{l}\t{p}")),
        Format::Latex => {
            writeln!(out, "\\begin{{tabular}}{{ll}}")?;
            for (l, p) in parts.iter().zip(&rows) {
                writeln!(out, "${}$ & ${}$ \\\\", partition_latex(l), p.to_latex())?;
            }
            writeln!(out, "\\end{{tabular}}")
        }
    }
    .map_err(io_error)
}

/// Returns whether every suite passed.
fn cmd_verify(ctx: &Context, identity: &str, out: &mut dyn Write) -> Result<bool> {
    let ids = Identity::parse_selector(identity)?;
    let reports = run_suites(&ctx.engine, &ids, ctx.max_size);
    let ok = reports.iter().all(|r| r.passed());
    match ctx.format {
        Format::Json => {
            let doc = json!({
                "spec": ctx.engine.spec().name(),
                "max_size": ctx.max_size,
                "status": if ok { Status::Pass } else { Status::Fail },
                "suites": reports,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))
        }
        Format::Plain | Format::Latex => (|| {
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{tag} {:<18} checked={} passed={} skipped={}",
                    r.identity, r.checked, r.passed, r.skipped
                )?;
                for w in &r.witnesses {
                    writeln!(out, "  {w}")?;
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(
                out,
                "{passed}/{} suites passed for {} up to size {}",
                reports.len(),
                ctx.engine.spec().name(),
                ctx.max_size
            )
        })(),
    }
    .map_err(io_error)?;
    Ok(ok)
}

fn cmd_stats(ctx: &Context, out: &mut dyn Write) -> Result<()> {
    let reports = (0..=ctx.max_size)
        .map(|n| plancherel::report(&ctx.engine, n))
        .collect::<Result<Vec<PlancherelReport>>>()?;
    match ctx.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("serialisable"))
        }
        Format::Plain | Format::Latex => reports.iter().try_for_each(|r| {
            writeln!(out, "n = {}", r.n)?;
            writeln!(out, "  mean:          {}", render(&r.mean, ctx.format))?;
            writeln!(out, "  second moment: {}", render(&r.second_moment, ctx.format))?;
            writeln!(out, "  variance:      {}", render(&r.variance, ctx.format))?;
            let bound = if r.variance_degree_bound_ok { "holds" } else { "FAILS" };
            writeln!(out, "  degree bound:  {bound}")
        }),
    }
    .map_err(io_error)?;
    if reports.iter().all(|r| r.variance_degree_bound_ok) {
        Ok(())
    } else {
        Err(Error::TheoremViolation {
            identity: "variance-bound",
            detail: "variance degree exceeds 2n - 4".into(),
        })
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let ctx = prepare(&cli.common, err)?;
    match &cli.command {
        Command::Compute { partition, explain } => {
            cmd_compute(&ctx, partition, *explain, out).map(|_| true)
        }
        Command::Table => cmd_table(&ctx, out).map(|_| true),
        Command::Verify { identity } => cmd_verify(&ctx, identity, out),
        Command::Stats => cmd_stats(&ctx, out).map(|_| true),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.exit_code() == 2 {
                let _ = writeln!(err, "run `wap --help` for usage");
            }
            e.exit_code()
        }
    }
}
