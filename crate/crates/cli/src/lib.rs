//! Command-line front end for the `foolset` library.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a decision query
//! answers "no", 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use foolset::format::{parse_matrix, to_csv, to_fsm};
use foolset::foolmat::{construct_with_limit, ratio_report, FoolingBundle};
use foolset::tensor::kron_with_limit;
use foolset::{
    exponent_estimate, max_fooling_submatrix, verify_fooling, Lrs, Matrix, PatternMatrix, Ratio,
    DEFAULT_NODE_BUDGET, DEFAULT_PERIOD_CAP, DEFAULT_SIZE_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "foolset", version, about = "Fooling-set matrices over prime fields")]
pub struct Cli {
    /// Largest matrix side any command may build.
    #[arg(long, global = true, env = "FOOLSET_SIZE_LIMIT", default_value_t = DEFAULT_SIZE_LIMIT)]
    pub size_limit: u64,

    /// Seed for randomized steps. Every current command is deterministic, so
    /// the seed does not change output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Fsm,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the fooling-set matrix for r = p^t + 1, n = r(r-1) + 1.
    Gen {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Fsm)]
        format: OutputFormat,
    },
    /// Check the fooling-set property of a matrix file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Modulus for CSV input (inferred when omitted).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Exact rank of a matrix file over F_p.
    Rank {
        #[arg(long)]
        input: PathBuf,
        /// Field to compute in; defaults to the file's modulus.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Minimal period of the order-r sequence f(k+r) = -f(k) - f(k+1).
    Period {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_PERIOD_CAP)]
        cap: u64,
    },
    /// Maximum fooling-set submatrix of a matrix file's zero/nonzero pattern.
    Search {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Answer whether a fooling-set submatrix of at least this size exists.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Convergence table of n / rank^2 for t = 1..t_max.
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        t_max: u32,
    },
    /// Kronecker product of two matrix files.
    Kron {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Fsm)]
        format: OutputFormat,
    },
    /// Exponent log(n0)/log(r0) obtained by tensoring a size-n0, rank-r0 seed.
    Exponent {
        #[arg(long)]
        n0: u64,
        #[arg(long)]
        r0: u64,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<foolset::Error> for Failure {
    fn from(e: foolset::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut buf = String::new();
    let result = execute(&cli, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_FAIL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_matrix(path: &Path, p: Option<u64>) -> Result<Matrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text, p).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen { p, t, format } => {
            let bundle = construct_with_limit(*p, *t, cli.size_limit)?;
            match format {
                OutputFormat::Fsm => out.push_str(&to_fsm(&bundle.matrix)),
                OutputFormat::Csv => out.push_str(&to_csv(&bundle.matrix)),
                OutputFormat::Table => write_bundle_table(out, &bundle),
            }
            Ok(())
        }
        Command::Verify { input, p } => {
            let m = read_matrix(input, *p)?;
            let witness = verify_fooling(&m)?;
            let _ = writeln!(out, "{witness}");
            if witness.passed() {
                Ok(())
            } else {
                Err(Failure::Check(format!("not a fooling-set matrix: {witness}")))
            }
        }
        Command::Rank { input, p } => {
            let m = read_matrix(input, *p)?;
            let _ = writeln!(out, "rank {}", m.rank());
            Ok(())
        }
        Command::Period { p, r, cap } => {
            let seq = Lrs::standard(*p, *r)?;
            match seq.period(*cap) {
                Ok(n) => {
                    let _ = writeln!(out, "period {n}");
                    Ok(())
                }
                Err(e) => Err(Failure::Check(e.to_string())),
            }
        }
        Command::Search { input, budget, target, p } => {
            let m = read_matrix(input, *p)?;
            let res = max_fooling_submatrix(&PatternMatrix::from_matrix(&m), *budget);
            let _ = write!(out, "{res}");
            if !res.optimal {
                let _ = writeln!(out, "optimal false");
            }
            match target {
                None => Ok(()),
                Some(k) if res.size >= *k => {
                    let _ = writeln!(out, "answer yes");
                    Ok(())
                }
                Some(k) if res.optimal => {
                    let _ = writeln!(out, "answer no");
                    Err(Failure::Check(format!("no fooling-set submatrix of size {k}")))
                }
                Some(k) => {
                    let _ = writeln!(out, "answer unknown");
                    Err(Failure::Check(format!(
                        "node budget exhausted before deciding size {k}"
                    )))
                }
            }
        }
        Command::Table { p, t_max } => {
            let rows = ratio_report(*p, *t_max, cli.size_limit)?;
            let _ = writeln!(out, "p t r n rank n/rank^2 approx 1-p^-t");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{} {} {} {} {} {} {} {}",
                    row.p,
                    row.t,
                    row.r,
                    row.n,
                    row.rank,
                    row.ratio,
                    approx(row.ratio),
                    row.lower_bound()
                );
            }
            Ok(())
        }
        Command::Kron { left, right, format } => {
            let a = read_matrix(left, None)?;
            let b = read_matrix(right, None)?;
            let k = kron_with_limit(&a, &b, cli.size_limit)?;
            match format {
                OutputFormat::Fsm => out.push_str(&to_fsm(&k)),
                OutputFormat::Csv => out.push_str(&to_csv(&k)),
                OutputFormat::Table => write_matrix_table(out, &k),
            }
            Ok(())
        }
        Command::Exponent { n0, r0 } => {
            let est = exponent_estimate(*n0, *r0)?;
            let _ = writeln!(out, "exponent {}", est.exponent_string());
            for (k, ratio) in &est.ratios {
                let approx = *ratio.numer() as f64 / *ratio.denom() as f64;
                let _ = writeln!(out, "k {k} n^k/(r^k)^2 {ratio} {approx:.6}");
            }
            Ok(())
        }
    }
}

fn approx(r: Ratio<i64>) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

fn write_bundle_table(out: &mut String, b: &FoolingBundle) {
    let _ = writeln!(
        out,
        "p {} t {} r {} n {} rank {} fooling {} n/rank^2 {} {}",
        b.p,
        b.t,
        b.r,
        b.n,
        b.rank,
        b.witness,
        b.ratio(),
        approx(b.ratio())
    );
    write_matrix_table(out, &b.matrix);
}

fn write_matrix_table(out: &mut String, m: &Matrix) {
    let width = (m.field().modulus() - 1).to_string().len();
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
}
