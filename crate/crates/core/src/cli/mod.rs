//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
//! error, 3 a resource cap was exceeded. `--json` writes one object per line.

pub mod catalog;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::{character_table_with, det_identities, export_table, verify_orthogonality, TableOptions};
use crate::error::Error;
use crate::groups::{conjugacy_classes, make_group_with, BuildOptions, DEFAULT_MAX_ORDER};
use crate::ntheory::{jacobi, kronecker};
use crate::reciprocity::{
    discriminant, quadratic_symbol, real_complex_split, sl2_formula_check, symbol_character,
    verify_group_with,
};
use crate::spec::{parse_group_spec, GroupSpec};

pub use catalog::{default_catalog, parse_catalog, read_catalog, CatalogEntry, DEFAULT_CATALOG};
pub use report::{ChartabReport, ClassesReport, FactoredJson, Report, Sl2Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "quadsym", version, about = "Quadratic symbols and discriminants of finite groups")]
struct Cli {
    /// Emit one JSON object per line instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Seed for the random splitting in character-table computations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Add wall-clock timings to reports (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Discriminant d(G), its fundamental part and conductor.
    Disc { spec: String },
    /// The quadratic symbol at one argument or over a full period.
    Symbol {
        spec: String,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "table", conflicts_with = "table")]
        a: Option<i64>,
        #[arg(long)]
        table: bool,
    },
    /// Conjugacy classes in canonical order.
    Classes { spec: String },
    /// Exact character table.
    Chartab { spec: String },
    /// Check the reciprocity law and the character-table identities.
    Verify {
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        spec: Option<String>,
        /// Verify every group listed in a catalog file.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Kronecker symbol (d/a) for a discriminant d.
    Kronecker {
        #[arg(allow_hyphen_values = true)]
        d: BigInt,
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
    },
    /// Jacobi symbol (a/n) for odd positive n.
    Jacobi {
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Closed-form discriminant of SL(2, F_{2^r}) without enumeration.
    #[command(name = "sl2-formula")]
    Sl2Formula { r: u32 },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: exit_code(e), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_resource_limit() => EXIT_RESOURCE,
        Error::SplittingFailed { .. } | Error::InexactDivision(_) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Runs the binary's entry point and returns the process exit code.
pub fn main_from_env() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

/// Runs one command line (the first item is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let ctx = Context {
        json: cli.json,
        build: BuildOptions { max_order: cli.max_order },
        table: TableOptions { seed: cli.seed, ..TableOptions::default() },
        timing: cli.timing,
    };
    let result = match &cli.command {
        Command::Disc { spec } => ctx.disc(spec),
        Command::Symbol { spec, a, table } => ctx.symbol(spec, *a, *table),
        Command::Classes { spec } => ctx.classes(spec),
        Command::Chartab { spec } => ctx.chartab(spec),
        Command::Verify { spec, catalog } => return ctx.verify(spec.as_deref(), catalog.as_ref()),
        Command::Kronecker { d, a } => kronecker(d.clone(), a.clone()).map(|v| {
            ctx.emit_value(&KroneckerJson { d: d.to_string(), a: a.to_string(), kronecker: v }, v)
        }),
        Command::Jacobi { a, n } => jacobi(a.clone(), n.clone())
            .map(|v| ctx.emit_value(&JacobiJson { a: a.to_string(), n: n.to_string(), jacobi: v }, v)),
        Command::Sl2Formula { r } => ctx.sl2_formula(*r),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::error(&e),
    }
}

#[derive(Serialize)]
struct KroneckerJson {
    d: String,
    a: String,
    kronecker: i8,
}

#[derive(Serialize)]
struct JacobiJson {
    a: String,
    n: String,
    jacobi: i8,
}

#[derive(Serialize)]
struct SymbolJson {
    label: String,
    n: u64,
    a: i64,
    symbol: i8,
}

struct Context {
    json: bool,
    build: BuildOptions,
    table: TableOptions,
    timing: bool,
}

/// One stderr line per failed check: group, check name and witness.
fn failure_lines(r: &Report) -> String {
    if let Some(err) = &r.error {
        return format!("failed: {}: {err}\n", r.label);
    }
    r.theorem_checks
        .iter()
        .chain(&r.chartab_checks)
        .filter(|c| !c.passed)
        .map(|c| match c.witness {
            Some(a) => format!("failed: {}: check `{}` at a = {a}: {}\n", r.label, c.name, c.detail),
            None => format!("failed: {}: check `{}`: {}\n", r.label, c.name, c.detail),
        })
        .collect()
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

impl Context {
    fn emit_value<T: Serialize>(&self, json: &T, value: i8) -> String {
        if self.json {
            json_line(json)
        } else {
            format!("{value}\n")
        }
    }

    fn group(&self, spec: &str) -> crate::Result<(GroupSpec, crate::GroupTable)> {
        let spec = parse_group_spec(spec)?;
        let g = make_group_with(&spec, &self.build)?;
        Ok((spec, g))
    }

    fn disc(&self, spec: &str) -> crate::Result<String> {
        let (_, g) = self.group(spec)?;
        let s = conjugacy_classes(&g);
        let d = discriminant(&g, &s, &real_complex_split(&s));
        let report = Report::from_discriminant(&g, &s, &d);
        Ok(if self.json { json_line(&report) } else { report.to_human() })
    }

    fn symbol(&self, spec: &str, a: Option<i64>, table: bool) -> crate::Result<String> {
        let (_, g) = self.group(spec)?;
        let s = conjugacy_classes(&g);
        if table {
            let chi = symbol_character(&g, &s);
            let report = Report {
                label: g.label().to_string(),
                n: g.order() as u64,
                m: s.num_classes(),
                symbol_modulus: Some(chi.modulus),
                symbol_period: Some(g.exponent()),
                symbol_trivial: Some(chi.is_trivial()),
                symbol_values: Some(chi.values.clone()),
                ..Report::default()
            };
            if self.json {
                return Ok(json_line(&report));
            }
            let rows: Vec<(String, String)> =
                (0..chi.modulus).map(|a| (a.to_string(), chi.values[a as usize].to_string())).collect();
            return Ok(report::aligned(&rows));
        }
        let a = a.expect("clap enforces --a or --table");
        let v = quadratic_symbol(&g, &s, a);
        Ok(self.emit_value(&SymbolJson { label: g.label().to_string(), n: g.order() as u64, a, symbol: v }, v))
    }

    fn classes(&self, spec: &str) -> crate::Result<String> {
        let (_, g) = self.group(spec)?;
        let s = conjugacy_classes(&g);
        let report = ClassesReport::new(&g, &s);
        if self.json {
            return Ok(json_line(&report));
        }
        let mut out = format!("{}  n = {}  m = {}  exponent = {}\n", report.label, report.n, report.m, report.exponent);
        out.push_str("class  size  centralizer  order  real  inverse  representative\n");
        for c in &report.classes {
            out.push_str(&format!(
                "{:>5}  {:>4}  {:>11}  {:>5}  {:>4}  {:>7}  {:?}\n",
                c.index, c.size, c.centralizer_order, c.element_order, if c.real { "yes" } else { "no" }, c.inverse, c.representative
            ));
        }
        Ok(out)
    }

    fn chartab(&self, spec: &str) -> crate::Result<String> {
        let (_, g) = self.group(spec)?;
        let s = conjugacy_classes(&g);
        let t = character_table_with(&g, &s, &real_complex_split(&s), &self.table)?;
        let ortho = verify_orthogonality(&t, &s);
        Ok(if self.json {
            json_line(&ChartabReport::new(g.label(), &t, &ortho))
        } else {
            export_table(&t)
        })
    }

    fn sl2_formula(&self, r: u32) -> crate::Result<String> {
        let f = sl2_formula_check(r)?;
        let report = Sl2Report::from(&f);
        if self.json {
            return Ok(json_line(&report));
        }
        Ok(report::aligned(&[
            ("q".into(), report.q.to_string()),
            ("n".into(), report.n.to_string()),
            ("m".into(), report.m.to_string()),
            ("d".into(), report::abbreviate(&report.d)),
            ("d (factored)".into(), report::factored_text(&report.d_factored)),
            ("d_K".into(), report.d_k.clone()),
            ("conductor".into(), report::factored_text(&report.conductor_factored)),
            ("d square".into(), report.d_square.to_string()),
        ]))
    }

    fn verify_one(&self, spec: &GroupSpec) -> (Report, i32) {
        let start = Instant::now();
        let label = spec.to_string();
        let g = match make_group_with(spec, &self.build) {
            Ok(g) => g,
            Err(e) => return (Report::failed(&label, e.to_string()), exit_code(&e)),
        };
        let s = conjugacy_classes(&g);
        let verification = verify_group_with(&g, &s);
        let mut report = Report::from_verification(&verification);
        let split = real_complex_split(&s);
        match character_table_with(&g, &s, &split, &self.table) {
            Ok(t) => {
                let ortho = verify_orthogonality(&t, &s);
                match det_identities(&t, &verification.discriminant, &s, &g) {
                    Ok(det) => report.add_chartab(&ortho, &det),
                    Err(e) => report.error = Some(e.to_string()),
                }
            }
            Err(Error::TableBound(reason)) => report.chartab_skipped = Some(reason),
            Err(e) => report.error = Some(e.to_string()),
        }
        if self.timing {
            report.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        let code = if report.ok() { EXIT_OK } else { EXIT_CHECK_FAILED };
        (report, code)
    }

    fn verify(&self, spec: Option<&str>, catalog: Option<&PathBuf>) -> Outcome {
        let specs = match (spec, catalog) {
            (Some(text), _) => parse_group_spec(text).map(|s| vec![s]),
            (None, Some(path)) => read_catalog(path).map(|es| es.into_iter().map(|e| e.spec).collect()),
            (None, None) => unreachable!("clap requires a spec or a catalog"),
        };
        let specs = match specs {
            Ok(s) => s,
            Err(e) => return Outcome::error(&e),
        };
        let results: Vec<(Report, i32)> = specs.par_iter().map(|s| self.verify_one(s)).collect();
        let mut stdout = String::new();
        for (report, _) in &results {
            if self.json {
                stdout.push_str(&json_line(report));
            } else {
                stdout.push_str(&report.to_human());
                stdout.push('\n');
            }
        }
        let codes: Vec<i32> = results.iter().map(|(_, c)| *c).collect();
        let code = [EXIT_USAGE, EXIT_RESOURCE, EXIT_CHECK_FAILED]
            .into_iter()
            .find(|c| codes.contains(c))
            .unwrap_or(EXIT_OK);
        let stderr = if code == EXIT_OK {
            String::new()
        } else {
            results.iter().filter(|(r, _)| !r.ok()).map(|(r, _)| failure_lines(r)).collect()
        };
        Outcome { code, stdout, stderr }
    }
}
