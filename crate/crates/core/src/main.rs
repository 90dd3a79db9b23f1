use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use poisson3::algebra::{parse_rational, polynomial::format_rational};
use poisson3::cohomology::{algebra_table, cohomology_table, invariant_cohomology};
use poisson3::output;
use poisson3::verify::{self, Report};
use poisson3::{
    cohomology_cell, format_multivector, parse_multivector, poisson_differential, resonances, schouten,
    AlgebraKind, Error, MultiVector,
};

/// Exact Poisson cohomology of linear Poisson structures in dimension three.
///
/// In expressions `dx`, `dy`, `dz` stand for the coordinate vector fields,
/// not for 1-forms: `z*dx^dy` is the bivector z ∂x∧∂y.
#[derive(Parser)]
#[command(name = "poisson3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List algebra names and verification ids.
    List,
    /// Print structure constants and the linear Poisson bivector.
    Show(AlgebraArgs),
    /// Cohomology table in degrees 0..=dmax.
    Cohomology(CohomologyArgs),
    /// Rotation-invariant cohomology next to the full one (euclidean type).
    InvariantCohomology(CohomologyArgs),
    /// Compare the engine with an encoded expected result.
    Verify(VerifyArgs),
    /// Schouten bracket of two multivector expressions.
    Schouten {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Apply the Poisson differential of an algebra to an expression.
    Dpi {
        #[command(flatten)]
        algebra: AlgebraArgs,
        expr: String,
    },
    /// Modular vector field and whether its class vanishes.
    Modular(AlgebraArgs),
    /// Solutions (i, j) of i + tau*j = c with 0 <= i, j < dmax.
    Resonances {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        c: String,
        #[arg(long, default_value_t = 10)]
        dmax: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Jacobi defect of the structure constants and [π, π].
    Jacobi(AlgebraArgs),
}

#[derive(Args)]
struct OutArgs {
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(AlgebraKind::NAMES))]
    algebra: String,
    /// Parameter of `book` and `spiral`, as `p/q` or an integer.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long, required_unless_present = "bivector", conflicts_with = "bivector",
          value_parser = clap::builder::PossibleValuesParser::new(AlgebraKind::NAMES))]
    algebra: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    /// A linear bivector given as an expression, instead of --algebra.
    #[arg(long, allow_hyphen_values = true)]
    bivector: Option<String>,
    #[arg(long, default_value_t = 6)]
    dmax: u32,
    /// Restrict the output to these cochain degrees.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(0..=3))]
    q: Vec<u8>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Expected result to check; all of them when omitted.
    #[arg(long)]
    id: Option<String>,
    /// Degree range; defaults to the range stored with the expectation.
    #[arg(long)]
    dmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

/// Failure modes of a command, mapped onto exit codes.
enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn emit(out: &OutArgs, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn kind_of(name: &str, tau: Option<&str>) -> Result<AlgebraKind, Failure> {
    Ok(AlgebraKind::from_name(name, tau)?)
}

fn show(args: &AlgebraArgs) -> Result<String, Failure> {
    let kind = kind_of(&args.algebra, args.tau.as_deref())?;
    let sc = kind.structure_constants();
    Ok(format!(
        "algebra: {kind}\n{sc}\npi = {}\n",
        format_multivector(&kind.poisson_bivector())
    ))
}

fn filter_q(table: &mut poisson3::CohomologyTable, qs: &[u8]) {
    if !qs.is_empty() {
        table.cells.retain(|c| qs.contains(&(c.q as u8)));
    }
}

fn cohomology(args: &CohomologyArgs) -> Result<String, Failure> {
    let mut table = match (&args.algebra, &args.bivector) {
        (Some(name), _) => algebra_table(&kind_of(name, args.tau.as_deref())?, args.dmax)?,
        (None, Some(text)) => {
            if args.tau.is_some() {
                return Err(Failure::Usage("--tau only applies to --algebra".into()));
            }
            let pi = parse_multivector(text)?;
            if pi.degree() != 2 && !pi.is_zero() {
                return Err(Failure::Usage("--bivector must have cochain degree 2".into()));
            }
            cohomology_table(&pi, args.dmax)?
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    Ok(match args.format {
        Format::Text => {
            let qs: Vec<usize> = if args.q.is_empty() {
                (0..=3).collect()
            } else {
                args.q.iter().map(|&q| q as usize).collect()
            };
            output::to_text_for(&table, &qs)
        }
        Format::Json => {
            filter_q(&mut table, &args.q);
            output::to_json(&table)
        }
        Format::Csv => {
            filter_q(&mut table, &args.q);
            output::to_csv(&table)
        }
    })
}

fn invariant(args: &CohomologyArgs) -> Result<String, Failure> {
    let name = args
        .algebra
        .as_deref()
        .ok_or_else(|| Failure::Usage("invariant-cohomology needs --algebra".into()))?;
    let kind = kind_of(name, args.tau.as_deref())?;
    let pi = kind.poisson_bivector();
    let qs: Vec<usize> = if args.q.is_empty() {
        (0..=3).collect()
    } else {
        args.q.iter().map(|&q| q as usize).collect()
    };
    let mut rows = Vec::new();
    for &q in &qs {
        for d in 0..=args.dmax {
            let inv = invariant_cohomology(&pi, q, d)?;
            let full = cohomology_cell(&pi, q, d)?;
            rows.push((inv, full.dim_h));
        }
    }
    Ok(match args.format {
        Format::Text => {
            let mut s = format!(
                "algebra {kind}, invariant subcomplex, degrees 0..={}\n",
                args.dmax
            );
            for (inv, full) in &rows {
                s.push_str(&format!("full dim_h={full} invariant "));
                s.push_str(&output::cell_to_text(inv));
            }
            s
        }
        Format::Json => {
            let cells: Vec<serde_json::Value> = rows
                .iter()
                .map(|(inv, full)| {
                    let mut v: serde_json::Value =
                        serde_json::from_str(&output::cell_to_json(inv)).expect("valid json");
                    v["full_dim_h"] = (*full).into();
                    v
                })
                .collect();
            let doc = serde_json::json!({
                "algebra": kind.name(),
                "tau": kind.tau().map(format_rational),
                "dmax": args.dmax,
                "cells": cells,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "q",
                "d",
                "dim_cochains",
                "rank_in",
                "rank_out",
                "dim_h",
                "full_dim_h",
            ])
            .expect("in-memory write");
            for (c, full) in &rows {
                w.write_record(
                    [
                        c.q,
                        c.d as usize,
                        c.dim_cochains,
                        c.rank_in,
                        c.rank_out,
                        c.dim_h,
                        *full,
                    ]
                    .map(|n| n.to_string()),
                )
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    })
}

fn run_verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let ids: Vec<String> = match &args.id {
        Some(id) => vec![id.clone()],
        None => verify::ids().into_iter().map(String::from).collect(),
    };
    let mut reports: Vec<Report> = Vec::new();
    for id in &ids {
        let dmax = match args.dmax {
            Some(d) => d,
            None => verify::expected_table(id)?.dmax,
        };
        reports.push(verify::verify(id, dmax)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    let text = match args.format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => serde_json::to_string_pretty(&reports).expect("serializable") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "dmax", "pass", "mismatches"])
                .expect("in-memory write");
            for r in &reports {
                let m: Vec<String> = r.mismatches.iter().map(|m| m.to_string()).collect();
                w.write_record([r.id.clone(), r.dmax.to_string(), r.pass.to_string(), m.join("; ")])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    };
    Ok((text, pass))
}

fn parse_rational_arg(name: &str, text: &str) -> Result<poisson3::Rational, Failure> {
    parse_rational(text)
        .ok_or_else(|| Failure::Usage(format!("cannot read --{name} `{text}` as a rational number")))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::List => {
            let mut s = String::from("algebras:\n");
            for name in AlgebraKind::NAMES {
                let note = match name {
                    "book" => "  (--tau in [-1, 0) or (0, 1])",
                    "spiral" => "  (--tau > 0)",
                    _ => "",
                };
                s.push_str(&format!("  {name}{note}\n"));
            }
            s.push_str("verification ids:\n");
            for id in verify::ids() {
                s.push_str(&format!("  {id}\n"));
            }
            emit(&OutArgs { out: None }, &s)?;
        }
        Command::Show(args) => emit(&args.out, &show(&args)?)?,
        Command::Cohomology(args) => emit(&args.out, &cohomology(&args)?)?,
        Command::InvariantCohomology(args) => emit(&args.out, &invariant(&args)?)?,
        Command::Verify(args) => {
            let (text, pass) = run_verify(&args)?;
            emit(&args.out, &text)?;
            return Ok(pass);
        }
        Command::Schouten { a, b, out } => {
            let (a, b) = (parse_multivector(&a)?, parse_multivector(&b)?);
            emit(&out, &format!("{}\n", format_multivector(&schouten(&a, &b))))?;
        }
        Command::Dpi { algebra, expr } => {
            let kind = kind_of(&algebra.algebra, algebra.tau.as_deref())?;
            let v = parse_multivector(&expr)?;
            let dv = poisson_differential(&kind.poisson_bivector(), &v);
            emit(&algebra.out, &format!("{}\n", format_multivector(&dv)))?;
        }
        Command::Modular(args) => {
            let kind = kind_of(&args.algebra, args.tau.as_deref())?;
            let report = verify::modular_class_check(&kind)?;
            emit(&args.out, &format!("{report}\n"))?;
            return Ok(report.pass);
        }
        Command::Resonances { tau, c, dmax, out } => {
            let tau = parse_rational_arg("tau", &tau)?;
            let c = parse_rational_arg("c", &c)?;
            let list: Vec<String> = resonances(&tau, &c, dmax)
                .iter()
                .map(|r| format!("({},{})", r.i, r.j))
                .collect();
            emit(&out, &format!("{}\n", list.join(" ")))?;
        }
        Command::Jacobi(args) => {
            let kind = kind_of(&args.algebra, args.tau.as_deref())?;
            let defect = kind.structure_constants().jacobi_defect();
            let pi: MultiVector = kind.poisson_bivector();
            emit(
                &args.out,
                &format!(
                    "jacobi defect: {}\n[pi, pi]: {}\n",
                    format_multivector(&defect),
                    format_multivector(&schouten(&pi, &pi))
                ),
            )?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
