//! `jacobsthal3`: sequence tables, identity checks and dual-vector quantities.
//!
//! Exit codes: 0 when everything checked passes, 1 when any identity fails,
//! 2 on usage or configuration errors.

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use jacobsthal3::check::{run_suite, CheckReport, IdentityId, SuiteConfig, MAX_N};
use jacobsthal3::dual_sequences::{dual_j3, dual_jl3, dual_ratio};
use jacobsthal3::sequences::{u, v, w, Jacobsthal3Cache};
use jacobsthal3::vectors::{
    cross_closed_form, dot_closed_form, dual_cross, dual_dot, dual_norm, jd_vector, norm_sq_exact,
    unit_conditions, DualVec3,
};
use jacobsthal3::{BigInt, Error};

#[derive(Debug, Parser)]
#[command(name = "jacobsthal3", version, about = "Dual third-order Jacobsthal numbers and vectors, checked exactly")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "JACOBSTHAL3_FORMAT", default_value = "human")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    J3,
    Jl3,
    DualJ3,
    DualJl3,
    #[value(name = "U")]
    U,
    #[value(name = "V")]
    V,
    #[value(name = "W")]
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VecOp {
    Dot,
    Cross,
    Norm,
    Unit,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print sequence values for indices FROM..=TO.
    Seq {
        #[arg(value_enum)]
        kind: SeqKind,
        from: u64,
        to: u64,
    },
    /// Run identity checks.
    Check {
        /// Identities to check (repeatable or comma separated). Defaults to the full suite.
        #[arg(long = "id", value_delimiter = ',', value_parser = parse_id)]
        ids: Vec<IdentityId>,
        /// Check the full suite, clamping ranges to each identity's domain.
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        /// First index range, `A..B` (inclusive) or a single `A`.
        #[arg(long = "n", value_parser = parse_range, default_value = "0..60")]
        n: RangeInclusive<u64>,
        /// Second index range for two-index identities.
        #[arg(long = "m", value_parser = parse_range, default_value = "0..60")]
        m: RangeInclusive<u64>,
        /// Stop after the first failing check.
        #[arg(long)]
        fail_fast: bool,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Corrupt one identity's left-hand side by one (mutation smoke test).
        #[arg(long, hide = true, value_parser = parse_id)]
        mutate: Option<IdentityId>,
    },
    /// Dual-vector quantities for JD⃗_n (and JD⃗_m).
    Vec {
        #[arg(value_enum)]
        op: VecOp,
        n: u64,
        m: Option<u64>,
    },
    /// Consecutive quotients JD_{n+1}/JD_n for FROM..=TO.
    Ratio { from: u64, to: u64 },
}

fn parse_id(s: &str) -> Result<IdentityId, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad index '{t}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// Line-oriented table writer shared by all subcommands.
struct Table {
    format: Format,
    header: &'static [&'static str],
    out: io::StdoutLock<'static>,
    csv: Option<csv::Writer<io::Stdout>>,
}

impl Table {
    fn new(format: Format, header: &'static [&'static str]) -> Self {
        let mut csv = None;
        if format == Format::Csv {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(header).expect("stdout");
            csv = Some(w);
        }
        Self { format, header, out: io::stdout().lock(), csv }
    }

    fn row(&mut self, fields: &[String], human: impl FnOnce() -> String) {
        match self.format {
            Format::Human => {
                let _ = writeln!(self.out, "{}", human());
            }
            Format::Json => {
                let obj: serde_json::Map<_, _> = self
                    .header
                    .iter()
                    .zip(fields)
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                let _ = writeln!(self.out, "{}", serde_json::Value::Object(obj));
            }
            Format::Csv => {
                if let Some(w) = self.csv.as_mut() {
                    w.write_record(fields).expect("stdout");
                }
            }
        }
    }
}

impl Drop for Table {
    fn drop(&mut self) {
        if let Some(w) = self.csv.as_mut() {
            let _ = w.flush();
        }
        let _ = self.out.flush();
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_seq(format: Format, kind: SeqKind, from: u64, to: u64) -> ExitCode {
    if from > to {
        return usage(format!("empty range {from}..{to}"));
    }
    if to > MAX_N {
        return usage(format!("index {to} exceeds {MAX_N}"));
    }
    let cache = Jacobsthal3Cache::with_max_index(to as usize + 1);
    let mut table = Table::new(format, &["n", "value"]);
    for n in from..=to {
        let ni = n as i64;
        let value = match kind {
            SeqKind::J3 => cache.j3(n).to_string(),
            SeqKind::Jl3 => cache.jl3(n).to_string(),
            SeqKind::DualJ3 => dual_j3(&cache, n).to_string(),
            SeqKind::DualJl3 => dual_jl3(&cache, n).to_string(),
            SeqKind::U => u(ni).to_string(),
            SeqKind::V => v(ni).to_string(),
            SeqKind::W => w(ni).to_string(),
        };
        table.row(&[n.to_string(), value.clone()], || format!("{n}\t{value}"));
    }
    ExitCode::SUCCESS
}

fn report_fields(r: &CheckReport) -> [String; 6] {
    [
        r.identity.to_string(),
        r.n.to_string(),
        r.m.map(|m| m.to_string()).unwrap_or_default(),
        r.lhs.clone(),
        r.rhs.clone(),
        r.pass.to_string(),
    ]
}

fn cmd_check(format: Format, config: SuiteConfig) -> ExitCode {
    let outcome = match run_suite(&config) {
        Ok(o) => o,
        Err(e @ (Error::Domain { .. } | Error::Config(_))) => return usage(e),
        Err(e) => return usage(e),
    };
    {
        let mut out = io::stdout().lock();
        match format {
            Format::Json => {
                for r in &outcome.reports {
                    let _ = writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"));
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(["identity", "n", "m", "lhs", "rhs", "pass"]).expect("stdout");
                for r in &outcome.reports {
                    w.write_record(report_fields(r)).expect("stdout");
                }
                let _ = w.flush();
            }
            Format::Human => {
                for r in &outcome.reports {
                    let m = r.m.map(|m| format!(" m={m}")).unwrap_or_default();
                    let tag = if r.pass { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag} {} n={}{m}: {} = {}", r.identity, r.n, r.lhs, r.rhs);
                }
            }
        }
    }
    let summary = format!(
        "checked {}: {} passed, {} failed",
        outcome.reports.len(),
        outcome.passed(),
        outcome.failed()
    );
    if format == Format::Human {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    if outcome.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn vector_json(v: &DualVec3<BigInt>) -> serde_json::Value {
    json!(v.0.iter().map(|d| [d.real.to_string(), d.dual.to_string()]).collect::<Vec<_>>())
}

fn cmd_vec(format: Format, op: VecOp, n: u64, m: Option<u64>) -> ExitCode {
    if n.max(m.unwrap_or(0)) > MAX_N {
        return usage(format!("index exceeds {MAX_N}"));
    }
    let needs_m = matches!(op, VecOp::Dot | VecOp::Cross);
    let m = match (needs_m, m) {
        (true, None) => return usage("dot and cross need a second index m"),
        (_, m) => m,
    };
    let cache = Jacobsthal3Cache::with_max_index(2 * n.max(m.unwrap_or(0)) as usize + 8);
    let vn = jd_vector(&cache, n);
    let (human, obj, ok) = match op {
        VecOp::Dot => {
            let m = m.expect("checked above");
            let oracle = dual_dot(&vn, &jd_vector(&cache, m));
            let closed = dot_closed_form(n, m);
            let matched = closed.as_ref().is_ok_and(|c| *c == oracle);
            let closed_s = closed.map(|c| c.to_string()).unwrap_or_else(|e| format!("error: {e}"));
            (
                format!("{oracle} | closed: {closed_s} | {}", if matched { "match" } else { "MISMATCH" }),
                json!({"op": "dot", "n": n, "m": m, "oracle": [oracle.real.to_string(), oracle.dual.to_string()],
                       "closed": closed_s, "match": matched}),
                matched,
            )
        }
        VecOp::Cross => {
            let m = m.expect("checked above");
            let oracle = dual_cross(&vn, &jd_vector(&cache, m));
            let closed = cross_closed_form(n, m);
            let matched = closed.as_ref().is_ok_and(|c| *c == oracle);
            let closed_json = match &closed {
                Ok(c) => vector_json(c),
                Err(e) => json!(e.to_string()),
            };
            let closed_s = closed.map(|c| c.to_string()).unwrap_or_else(|e| format!("error: {e}"));
            (
                format!("{oracle} | closed: {closed_s} | {}", if matched { "match" } else { "MISMATCH" }),
                json!({"op": "cross", "n": n, "m": m, "oracle": vector_json(&oracle),
                       "closed": closed_json, "match": matched}),
                matched,
            )
        }
        VecOp::Norm => {
            let (sq, inner) = norm_sq_exact(&vn);
            let (re, du) = match dual_norm(&vn) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            (
                format!("{re} + {du}*eps | exact: norm_sq={sq} inner={inner}"),
                json!({"op": "norm", "n": n, "norm": [re, du], "norm_sq": sq.to_string(), "inner": inner.to_string()}),
                true,
            )
        }
        VecOp::Unit => {
            let uc = unit_conditions(&cache, n);
            let ok = uc.closed_forms_hold();
            (
                format!(
                    "c1={} c2={} is_unit={} | norm_sq={} inner={} | closed forms {}",
                    uc.c1,
                    uc.c2,
                    uc.is_unit,
                    uc.norm_sq,
                    uc.inner,
                    if ok { "match" } else { "MISMATCH" }
                ),
                json!({"op": "unit", "n": n, "c1": uc.c1.to_string(), "c2": uc.c2.to_string(),
                       "is_unit": uc.is_unit, "norm_sq": uc.norm_sq.to_string(),
                       "inner": uc.inner.to_string(), "match": ok}),
                ok,
            )
        }
    };
    match format {
        Format::Human => println!("{human}"),
        Format::Json => println!("{obj}"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            let map = obj.as_object().expect("object");
            w.write_record(map.keys()).expect("stdout");
            w.write_record(map.values().map(|v| match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            }))
            .expect("stdout");
            let _ = w.flush();
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_ratio(format: Format, from: u64, to: u64) -> ExitCode {
    if from < 1 {
        return usage("ratio needs from >= 1 (JD_0 is a pure dual number)");
    }
    if from > to {
        return usage(format!("empty range {from}..{to}"));
    }
    if to > MAX_N {
        return usage(format!("index {to} exceeds {MAX_N}"));
    }
    let cache = Jacobsthal3Cache::with_max_index(to as usize + 2);
    let mut table = Table::new(format, &["n", "ratio", "distance"]);
    let two = jacobsthal3::BigRational::from_integer(2.into());
    for n in from..=to {
        let r = match dual_ratio(&cache, n) {
            Ok(r) => r,
            Err(e) => return usage(e),
        };
        let dist = (&r.real - &two).to_f64().map(f64::abs).unwrap_or(f64::NAN);
        table.row(&[n.to_string(), r.to_string(), dist.to_string()], || {
            format!("{n}\t{r}\tdistance={dist:e}")
        });
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Seq { kind, from, to } => cmd_seq(cli.format, kind, from, to),
        Command::Check { ids, all, n, m, fail_fast, workers, mutate } => {
            let explicit = !all && !ids.is_empty();
            let config = SuiteConfig {
                ids: if explicit { ids } else { IdentityId::suite().collect() },
                n_range: n,
                m_range: m,
                clamp_to_domain: !explicit,
                fail_fast,
                workers,
                mutate,
            };
            cmd_check(cli.format, config)
        }
        Command::Vec { op, n, m } => cmd_vec(cli.format, op, n, m),
        Command::Ratio { from, to } => cmd_ratio(cli.format, from, to),
    }
}
