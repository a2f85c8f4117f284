//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boundary::{BoundaryMethod, BoundaryQuery};
use crate::gram::{GramMatrix, GramMethod};
use crate::oracle::overlap_oracle;
use crate::overlap::{overlap_general, OverlapQuery, OverlapResult};
use crate::quadrature::{overlap_quadrature, within_tolerance};
use crate::sweep::verify_sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "legendre-overlap", version, about = "Exact overlap integrals of differentiated Legendre polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one integral ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾ dx over [-1, 1].
    Overlap(OverlapArgs),
    /// Write the matrix of ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾ for all n ≤ n_max, m ≤ m_max.
    Gram(GramArgs),
    /// Compare closed forms against the brute-force oracle over an index box.
    Verify(VerifyArgs),
    /// Print the boundary value Pₙ⁽ᵏ⁾(1).
    Boundary(BoundaryArgs),
    /// Compare Gauss–Legendre quadrature with the exact value.
    QuadCheck(QuadCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(name = "closed_form", alias = "closed-form")]
    ClosedForm,
    Oracle,
}

impl From<MethodArg> for GramMethod {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::ClosedForm => GramMethod::ClosedForm,
            MethodArg::Oracle => GramMethod::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryMethodArg {
    Factorial,
    Recurrence,
    Genfunc,
    All,
}

#[derive(Debug, Args)]
pub struct OverlapArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "closed_form")]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct GramArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub m_max: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "closed_form")]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub q_max: usize,
    #[arg(long)]
    pub k_max: usize,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "factorial")]
    pub method: BoundaryMethodArg,
}

#[derive(Debug, Args)]
pub struct QuadCheckArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    /// Number of Gauss nodes; defaults to max(1, n + m).
    #[arg(long)]
    pub nodes: Option<usize>,
}

/// Value, followed by the vanishing reason in parentheses when there is one.
pub fn format_overlap(result: &OverlapResult) -> String {
    match result.vanishing_reason {
        crate::overlap::VanishingReason::None => result.value.to_string(),
        reason => format!("{} ({})", result.value, reason),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let status = match cli.command {
        Command::Overlap(args) => run_overlap(&args, out),
        Command::Gram(args) => run_gram(&args, out, err),
        Command::Verify(args) => run_verify(&args, out),
        Command::Boundary(args) => run_boundary(&args, out),
        Command::QuadCheck(args) => run_quad_check(&args, out, err),
    };
    status.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILURE
    })
}

pub fn run_overlap(args: &OverlapArgs, out: &mut dyn Write) -> io::Result<i32> {
    let query = OverlapQuery::new(args.n, args.m, args.q, args.k);
    let result = match args.method {
        MethodArg::ClosedForm => overlap_general(query),
        MethodArg::Oracle => OverlapResult::new(query, overlap_oracle(query)),
    };
    writeln!(out, "{}", format_overlap(&result))?;
    Ok(EXIT_OK)
}

pub fn run_gram(args: &GramArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let gram = GramMatrix::build(args.q, args.k, args.n_max, args.m_max, args.method.into());
    let written = match &args.out {
        None => emit(&gram, args.format, &mut *out),
        Some(path) => File::create(path)
            .map_err(crate::Error::from)
            .and_then(|file| {
                let mut writer = BufWriter::new(file);
                emit(&gram, args.format, &mut writer)?;
                writer.flush().map_err(crate::Error::from)
            }),
    };
    match written {
        Ok(()) => Ok(EXIT_OK),
        Err(e) => {
            let target = args
                .out
                .as_ref()
                .map_or("standard output".to_string(), |p| p.display().to_string());
            writeln!(err, "error: cannot write {target}: {e}")?;
            Ok(EXIT_FAILURE)
        }
    }
}

fn emit(gram: &GramMatrix, format: FormatArg, writer: &mut dyn Write) -> crate::Result<()> {
    match format {
        FormatArg::Json => gram.write_json(writer),
        FormatArg::Csv => gram.write_csv(writer),
    }
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> io::Result<i32> {
    let report = verify_sweep(args.n_max, args.q_max, args.k_max);
    for miss in &report.mismatches {
        let OverlapQuery { n, m, q, k } = miss.query;
        writeln!(
            out,
            "MISMATCH n={n} m={m} q={q} k={k}: closed_form={} oracle={}",
            miss.closed_form, miss.oracle
        )?;
    }
    writeln!(
        out,
        "{} comparisons, {} mismatches",
        report.comparisons,
        report.mismatches.len()
    )?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

pub fn run_boundary(args: &BoundaryArgs, out: &mut dyn Write) -> io::Result<i32> {
    let query = BoundaryQuery::new(args.n, args.k);
    let single = |m: BoundaryMethod| m.evaluate(query);
    match args.method {
        BoundaryMethodArg::Factorial => writeln!(out, "{}", single(BoundaryMethod::Factorial))?,
        BoundaryMethodArg::Recurrence => writeln!(out, "{}", single(BoundaryMethod::Recurrence))?,
        BoundaryMethodArg::Genfunc => writeln!(out, "{}", single(BoundaryMethod::Genfunc))?,
        BoundaryMethodArg::All => {
            let values: Vec<_> = BoundaryMethod::ALL.iter().map(|&m| (m, single(m))).collect();
            for (method, value) in &values {
                writeln!(out, "{}: {}", method.name(), value)?;
            }
            let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
            writeln!(out, "{}", if agree { "AGREE" } else { "DISAGREE" })?;
            if !agree {
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn run_quad_check(
    args: &QuadCheckArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let query = OverlapQuery::new(args.n, args.m, args.q, args.k);
    let nodes = args.nodes.unwrap_or((args.n + args.m).max(1));
    let approx = match overlap_quadrature(query, nodes) {
        Ok(v) => v,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let exact = overlap_general(query).value;
    let exact_f = exact.to_f64();
    let ok = within_tolerance(approx, exact_f);
    writeln!(out, "exact: {exact}")?;
    writeln!(out, "quadrature ({nodes} nodes): {approx:.17e}")?;
    writeln!(out, "abs error: {:.3e}", (approx - exact_f).abs())?;
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}
