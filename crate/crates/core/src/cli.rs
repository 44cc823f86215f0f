//! The `rmatq` command-line front end.
//!
//! Four subcommands: `verify` (residual checks on catalog or file-supplied
//! objects), `quantize` (order-by-order construction from a classical
//! operator), `catalog` (what's built in), `export` (JSON or action-notation
//! dump of any target).
//!
//! Exit codes are a stable contract:
//!
//! * `0` — success: every requested identity holds / the quantization ran
//!   obstruction-free (and the membership check, if requested, succeeded);
//! * `1` — usage or input errors: unknown targets, unparsable JSON or
//!   polynomials, out-of-range orders;
//! * `2` — a requested identity fails, a quantization reports obstructions,
//!   or a membership check finds a mismatch.

use crate::catalog::{self, EntryKind};
use crate::json;
use crate::poly::Poly;
use crate::quantize::{self, membership_check, parameter_report, ConstraintSet};
use crate::series::HSeries;
use crate::verify::{self, ClassicalR, ResidualReport};
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeSet;
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "rmatq",
    version,
    about = "Exact R-matrix series: verify braid/unitarity/mirror identities and \
             quantize classical r-matrices order-by-order in h"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check identities on a catalog entry or a JSON-supplied object.
    Verify(VerifyArgs),
    /// Build a quantum family from a classical operator, order by order.
    Quantize(QuantizeArgs),
    /// List the built-in catalog.
    Catalog(CatalogArgs),
    /// Print a target in JSON (default) or action notation.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// Braid relation R12 R23 R12 = R23 R12 R23 (series only).
    Braid,
    /// Classical Yang-Baxter equation (classical targets, or the h^1 part
    /// of a series).
    Cyb,
    /// Involutivity / unitarity R·R = 1 (series only).
    Involution,
    /// Mirror law P R^{-1} P = R(-h), with optional parameter flips.
    Mirror,
    /// Classical skewsymmetry r^{kl}_{ij} = -r^{lk}_{ji}.
    Skew,
}

#[derive(Parser)]
pub struct VerifyArgs {
    /// Catalog name (see `rmatq catalog`), a JSON file path, or `-` for
    /// stdin.
    pub target: String,
    /// Comma-separated subset of braid,cyb,involution,mirror,skew.
    /// Defaults to every check applicable to the target.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<CheckName>,
    /// Truncation order for catalog series (defaults to the printed
    /// order); file-supplied series may only be truncated downward.
    #[arg(long)]
    pub order: Option<usize>,
    /// Dimension for the flag target.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Flag constant: a rational like `1` or `3/2`, a parameter name, or
    /// the keywords `symbolic` / `central`.
    #[arg(long)]
    pub c: Option<String>,
    /// Treat file/stdin JSON as a classical operator (slot 1) instead of a
    /// series.
    #[arg(long)]
    pub classical: bool,
    /// Parameters negated on the right-hand side of the mirror law,
    /// comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub flips: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Parser)]
pub struct QuantizeArgs {
    /// Classical input from the catalog: flag, example1-limit,
    /// example2-limit.
    #[arg(long = "catalog-r", conflicts_with = "input")]
    pub catalog_r: Option<String>,
    /// Classical input as JSON (series shape, slot 0 ignored); `-` for
    /// stdin.
    #[arg(long)]
    pub input: Option<String>,
    /// Truncation order (≥ 2). Defaults to 2·dim, by which the per-order
    /// kernels of the built-in cases have settled.
    #[arg(long)]
    pub order: Option<usize>,
    /// Dimension for the flag input.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Flag constant (see `verify --c`).
    #[arg(long)]
    pub c: Option<String>,
    /// Also require R·R = 1.
    #[arg(long)]
    pub involution: bool,
    /// Also require the mirror law P R^{-1} P = R(-h).
    #[arg(long)]
    pub mirror: bool,
    /// After solving, check that this catalog series lies in the family.
    #[arg(long = "check-member")]
    pub check_member: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Parser)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Parser)]
pub struct ExportArgs {
    /// Catalog name, JSON file path, or `-` for stdin.
    pub target: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub c: Option<String>,
    /// Treat file/stdin JSON as a classical operator.
    #[arg(long)]
    pub classical: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

/// A usage-level failure: message printed to stderr, exit code 1.
struct Usage(String);

impl From<catalog::CatalogError> for Usage {
    fn from(e: catalog::CatalogError) -> Self {
        Usage(e.to_string())
    }
}

impl From<json::JsonError> for Usage {
    fn from(e: json::JsonError) -> Self {
        Usage(e.to_string())
    }
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(&args),
        Command::Quantize(args) => cmd_quantize(&args),
        Command::Catalog(args) => cmd_catalog(&args),
        Command::Export(args) => cmd_export(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

/// What a target name resolves to.
enum Target {
    Series(HSeries),
    Classical(ClassicalR),
}

fn parse_c(c: Option<&str>, dim: usize) -> Result<Poly, Usage> {
    match c {
        None | Some("symbolic") => Ok(Poly::var("c")),
        Some("central") => Ok(Poly::constant(catalog::central_c(dim))),
        Some(text) => text
            .parse::<Poly>()
            .map_err(|e| Usage(format!("--c {text}: {e}"))),
    }
}

fn read_source(path: &str) -> Result<String, Usage> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Usage(format!("reading {path}: {e}")))
    }
}

fn resolve_target(
    name: &str,
    order: Option<usize>,
    dim: Option<usize>,
    c: Option<&str>,
    classical: bool,
) -> Result<Target, Usage> {
    match name {
        "example1" => Ok(Target::Series(catalog::example1(order.unwrap_or(2))?)),
        "example2" => Ok(Target::Series(catalog::example2(order.unwrap_or(3))?)),
        "example1-limit" => Ok(Target::Classical(catalog::example1_limit())),
        "example2-limit" => Ok(Target::Classical(catalog::example2_limit())),
        "flag" => {
            let d = dim.ok_or_else(|| Usage("the flag target needs --dim".to_string()))?;
            if d == 0 {
                return Err(Usage("--dim must be at least 1".to_string()));
            }
            Ok(Target::Classical(catalog::flag_r(d, &parse_c(c, d)?)))
        }
        path if path == "-" || std::path::Path::new(path).exists() => {
            let text = read_source(path)?;
            let parsed: json::SeriesJson = serde_json::from_str(&text)
                .map_err(|e| Usage(format!("parsing {path}: {e}")))?;
            if classical {
                Ok(Target::Classical(json::classical_from_json(&parsed)?))
            } else {
                let series = json::series_from_json(&parsed)?;
                match order {
                    Some(n) if n > series.order() => Err(Usage(format!(
                        "cannot extend a file-supplied series from order {} to {n}",
                        series.order()
                    ))),
                    Some(n) => Ok(Target::Series(series.truncate(n))),
                    None => Ok(Target::Series(series)),
                }
            }
        }
        other => Err(Usage(format!(
            "unknown target `{other}` (not a catalog name, and no such file)"
        ))),
    }
}

fn applicable_checks(target: &Target) -> Vec<CheckName> {
    match target {
        Target::Series(_) => vec![
            CheckName::Braid,
            CheckName::Involution,
            CheckName::Mirror,
            CheckName::Cyb,
            CheckName::Skew,
        ],
        Target::Classical(_) => vec![CheckName::Cyb, CheckName::Skew],
    }
}

fn check_label(c: CheckName) -> &'static str {
    match c {
        CheckName::Braid => "braid",
        CheckName::Cyb => "cyb",
        CheckName::Involution => "involution",
        CheckName::Mirror => "mirror",
        CheckName::Skew => "skew",
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Usage> {
    let target = resolve_target(
        &args.target,
        args.order,
        args.dim,
        args.c.as_deref(),
        args.classical,
    )?;
    let applicable = applicable_checks(&target);
    let requested: Vec<CheckName> = if args.checks.is_empty() {
        applicable.clone()
    } else {
        for c in &args.checks {
            if !applicable.contains(c) {
                return Err(Usage(format!(
                    "check `{}` does not apply to a {} target",
                    check_label(*c),
                    match target {
                        Target::Series(_) => "series",
                        Target::Classical(_) => "classical",
                    }
                )));
            }
        }
        args.checks.clone()
    };

    // Classical checks on a series apply to its h^1 extraction.
    let limit = match &target {
        Target::Series(s) => verify::classical_limit(s).1,
        Target::Classical(r) => r.clone(),
    };
    let flips: BTreeSet<String> = args.flips.iter().cloned().collect();

    let mut reports: Vec<ResidualReport> = Vec::new();
    for check in requested {
        let report = match (&target, check) {
            (Target::Series(s), CheckName::Braid) => verify::braid_residual(s),
            (Target::Series(s), CheckName::Involution) => verify::involution_residual(s),
            (Target::Series(s), CheckName::Mirror) => verify::mirror_residual(s, &flips)
                .map_err(|e| Usage(format!("mirror check: {e}")))?,
            (_, CheckName::Cyb) => verify::cyb_residual(&limit),
            (_, CheckName::Skew) => verify::classical_skew_residual(&limit),
            _ => unreachable!("applicability validated above"),
        };
        reports.push(report);
    }

    match args.format {
        OutputFormat::Text => {
            for r in &reports {
                println!("{}", r.summary());
            }
        }
        OutputFormat::Json => {
            let dto: Vec<json::ReportJson> = reports.iter().map(json::report_to_json).collect();
            println!("{}", serde_json::to_string_pretty(&dto).expect("serialize"));
        }
    }
    Ok(if reports.iter().all(|r| r.is_zero) { 0 } else { 2 })
}

fn resolve_classical_input(args: &QuantizeArgs) -> Result<ClassicalR, Usage> {
    match (&args.catalog_r, &args.input) {
        (Some(name), None) => match name.as_str() {
            "example1-limit" => Ok(catalog::example1_limit()),
            "example2-limit" => Ok(catalog::example2_limit()),
            "flag" => {
                let d = args
                    .dim
                    .ok_or_else(|| Usage("--catalog-r flag needs --dim".to_string()))?;
                if d == 0 {
                    return Err(Usage("--dim must be at least 1".to_string()));
                }
                Ok(catalog::flag_r(d, &parse_c(args.c.as_deref(), d)?))
            }
            other => Err(Usage(format!(
                "unknown classical catalog input `{other}` \
                 (expected flag, example1-limit or example2-limit)"
            ))),
        },
        (None, Some(path)) => {
            let text = read_source(path)?;
            let parsed: json::SeriesJson = serde_json::from_str(&text)
                .map_err(|e| Usage(format!("parsing {path}: {e}")))?;
            Ok(json::classical_from_json(&parsed)?)
        }
        _ => Err(Usage(
            "provide exactly one classical input: --catalog-r NAME or --input FILE".to_string(),
        )),
    }
}

fn cmd_quantize(args: &QuantizeArgs) -> Result<i32, Usage> {
    let r = resolve_classical_input(args)?;
    let d = r.dim();
    let order = args.order.unwrap_or_else(|| quantize::stabilization_order(d));
    let constraints = ConstraintSet::new(args.involution, args.mirror);
    let result = quantize::quantize(&r, order, constraints).map_err(|e| Usage(format!("{e}")))?;

    // Optional membership check of a catalog series in the solved family.
    let membership = match &args.check_member {
        None => None,
        Some(name) => {
            let candidate = match name.as_str() {
                "example1" => catalog::example1(result.series.order())?,
                "example2" => catalog::example2(result.series.order())?,
                other => {
                    return Err(Usage(format!(
                        "--check-member expects example1 or example2, got `{other}`"
                    )))
                }
            };
            if candidate.dim() != d {
                return Err(Usage(format!(
                    "--check-member {name} has dim {}, the input has dim {d}",
                    candidate.dim()
                )));
            }
            Some(membership_check(&result, &candidate))
        }
    };

    match args.format {
        OutputFormat::Text => {
            let report = parameter_report(&result);
            print!("{}", report.render());
            for rec in &result.per_order {
                if !rec.obstructions.is_empty() {
                    println!(
                        "  order {} obstructions: {}",
                        rec.order,
                        rec.obstructions
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join("; ")
                    );
                }
            }
            if let Some(n) = result.stopped_at {
                println!("  stopped at order {n}: obstruction is a nonzero constant");
            }
            if let Some(m) = &membership {
                match &m.failure {
                    None => {
                        println!(
                            "member: yes ({} free direction(s) in the bindings)",
                            m.free_directions
                        );
                        for (name, value) in &m.bindings {
                            if !value.is_zero() {
                                println!("  {name} = {value}");
                            }
                        }
                    }
                    Some(f) => println!(
                        "member: no — order {} entry ({},{})->({},{}) differs by {}",
                        f.order, f.index.0, f.index.1, f.index.2, f.index.3, f.difference
                    ),
                }
            }
            println!("series coefficients:");
            for (n, op) in result.series.coeffs().iter().enumerate() {
                println!("h^{n}:");
                if op.is_zero() {
                    println!("  0");
                } else {
                    for line in op.to_string().lines() {
                        println!("  {line}");
                    }
                }
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Output {
                #[serde(flatten)]
                run: json::QuantizationJson,
                #[serde(skip_serializing_if = "Option::is_none")]
                membership: Option<json::MembershipJson>,
            }
            let out = Output {
                run: json::quantization_to_json(&result),
                membership: membership.as_ref().map(json::membership_to_json),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serialize"));
        }
    }

    let clean = result.obstruction_free()
        && membership.as_ref().map_or(true, |m| m.is_member());
    Ok(if clean { 0 } else { 2 })
}

fn cmd_catalog(args: &CatalogArgs) -> Result<i32, Usage> {
    let entries = catalog::list();
    match args.format {
        OutputFormat::Text => {
            for e in &entries {
                let kind = match e.kind {
                    EntryKind::Series { min_truncation } => {
                        format!("series (printed order {min_truncation})")
                    }
                    EntryKind::Classical => "classical".to_string(),
                };
                let params = if e.parameters.is_empty() {
                    "none".to_string()
                } else {
                    e.parameters.join(", ")
                };
                println!("{:<15} {kind}; parameters: {params}", e.name);
                println!("{:<15} {}", "", e.description);
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct EntryDto {
                name: &'static str,
                kind: &'static str,
                #[serde(skip_serializing_if = "Option::is_none")]
                printed_order: Option<usize>,
                parameters: Vec<&'static str>,
                description: String,
            }
            let dto: Vec<EntryDto> = entries
                .iter()
                .map(|e| EntryDto {
                    name: e.name,
                    kind: match e.kind {
                        EntryKind::Series { .. } => "series",
                        EntryKind::Classical => "classical",
                    },
                    printed_order: match e.kind {
                        EntryKind::Series { min_truncation } => Some(min_truncation),
                        EntryKind::Classical => None,
                    },
                    parameters: e.parameters.to_vec(),
                    description: e.description.split_whitespace().collect::<Vec<_>>().join(" "),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&dto).expect("serialize"));
        }
    }
    Ok(0)
}

fn cmd_export(args: &ExportArgs) -> Result<i32, Usage> {
    let target = resolve_target(
        &args.target,
        args.order,
        args.dim,
        args.c.as_deref(),
        args.classical,
    )?;
    match (&target, args.format) {
        (Target::Series(s), OutputFormat::Json) => {
            let dto = json::series_to_json(s);
            println!("{}", serde_json::to_string_pretty(&dto).expect("serialize"));
        }
        (Target::Classical(r), OutputFormat::Json) => {
            let dto = json::classical_to_json(r);
            println!("{}", serde_json::to_string_pretty(&dto).expect("serialize"));
        }
        (Target::Series(s), OutputFormat::Text) => {
            for (n, op) in s.coeffs().iter().enumerate() {
                println!("h^{n}:");
                if op.is_zero() {
                    println!("  0");
                } else {
                    for line in op.to_string().lines() {
                        println!("  {line}");
                    }
                }
            }
        }
        (Target::Classical(r), OutputFormat::Text) => {
            if r.op.is_zero() {
                println!("0");
            } else {
                println!("{}", r.op);
            }
        }
    }
    Ok(0)
}
