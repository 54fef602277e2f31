use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qudit_braid::braid::{
    braid_matrix, hamiltonian_from_braid, m_matrix, spot_check_braid_relation,
    verify_braid_relation, verify_m_algebra, verify_unitarity,
};
use qudit_braid::entangle::{ghz_by_braid, ghz_closed_form, q_measure, GhzLabel};
use qudit_braid::io::{matrix_to_json, state_from_json, state_to_json};
use qudit_braid::qpa::{fourier, generator_x, generator_z, matrix_a, matrix_b, verify_qpa};
use qudit_braid::tensor::{expm_i, matrix_residual, QuditShape, DEFAULT_BUDGET};
use qudit_braid::{Error, DEFAULT_TOL};

/// Norm tolerance for state files read by `measure`.
const STATE_FILE_NORM_TOL: f64 = 1e-8;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_ARGUMENT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DATA: u8 = 4;

#[derive(Parser)]
#[command(
    name = "qudit-braid",
    version,
    about = "Generalized qudit braid matrices and GHZ bases"
)]
struct Cli {
    /// Residual tolerance for verification
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Largest dense dimension d^N allowed
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    X,
    Z,
    F,
    A,
    B,
    M,
    Braid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Qpa,
    Algebra,
    Braid,
    Unitary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Closed,
    Braid,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generator, M-matrix or braid matrix as JSON
    Gen {
        kind: MatrixKind,
        #[arg(long)]
        d: usize,
        /// Number of sites (m and braid only)
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check algebraic relations and print a report
    Verify {
        target: Target,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Braid target only: check matrix-free on this many random basis
        /// vectors instead of forming dense products
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build the GHZ basis state S|k_1 ... k_N>
    Ghz {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated digits k_1,...,k_N
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scott's Q_m of a state file
    Measure {
        state: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// H = -i log S and its round-trip residual
    Hamiltonian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Budget { .. }) => EXIT_BUDGET,
            Failure::Lib(Error::Data(_) | Error::Unnormalized { .. }) | Failure::Io(_) => EXIT_DATA,
            Failure::Lib(Error::NotUnitary { .. } | Error::Eigen(_)) => EXIT_VERIFY_FAILED,
            Failure::Lib(_) => EXIT_ARGUMENT,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(msg) => f.write_str(msg),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_digits(k: &str) -> Result<Vec<usize>, Error> {
    k.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Argument(format!("malformed digit list \"{k}\"")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let Format::Json = cli.format;
    match cli.command {
        Command::Gen { kind, d, n, out } => {
            let shape = QuditShape::with_budget(d, n, cli.budget)?;
            let single = QuditShape::with_budget(d, 1, cli.budget)?;
            let m = match kind {
                MatrixKind::X | MatrixKind::Z | MatrixKind::F | MatrixKind::A | MatrixKind::B => {
                    single.dense_dim()?;
                    match kind {
                        MatrixKind::X => generator_x(d)?,
                        MatrixKind::Z => generator_z(d)?,
                        MatrixKind::F => fourier(d)?,
                        MatrixKind::A => matrix_a(d)?,
                        _ => matrix_b(d)?,
                    }
                }
                MatrixKind::M => m_matrix(&shape)?,
                MatrixKind::Braid => braid_matrix(&shape)?,
            };
            emit(&matrix_to_json(&m), out.as_ref())?;
            Ok(0)
        }
        Command::Verify {
            target,
            d,
            n,
            samples,
            seed,
        } => {
            let shape = QuditShape::with_budget(d, n, cli.budget)?;
            let report = match (target, samples) {
                (Target::Qpa, _) => verify_qpa(d, cli.tol)?,
                (Target::Algebra, _) => verify_m_algebra(&shape, cli.tol)?,
                (Target::Braid, None) => verify_braid_relation(&shape, cli.tol)?,
                (Target::Braid, Some(count)) => {
                    spot_check_braid_relation(&shape, count, seed, cli.tol)?
                }
                (Target::Unitary, _) => verify_unitarity(&shape, cli.tol)?,
            };
            println!("{}", report.to_json());
            if !report.pass {
                for c in report.checks.iter().filter(|c| !c.pass) {
                    eprintln!(
                        "FAIL {}: residual {:e} > tol {:e}",
                        c.name, c.residual, c.tol
                    );
                }
                return Ok(EXIT_VERIFY_FAILED);
            }
            Ok(0)
        }
        Command::Ghz { d, n, k, mode, out } => {
            let shape = QuditShape::with_budget(d, n, cli.budget)?;
            let label = GhzLabel::new(shape, parse_digits(&k)?)?;
            let psi = match mode {
                Mode::Closed => ghz_closed_form(&label)?,
                Mode::Braid => ghz_by_braid(&label)?,
            };
            emit(&state_to_json(&psi), out.as_ref())?;
            Ok(0)
        }
        Command::Measure { state, m } => {
            let text = fs::read_to_string(&state)
                .map_err(|e| Failure::Io(format!("cannot read {}: {e}", state.display())))?;
            let psi = state_from_json(&text, STATE_FILE_NORM_TOL)?;
            let q = q_measure(&psi, m)?;
            println!(
                r#"{{"m":{m},"Q":{}}}"#,
                serde_json::to_string(&q).expect("finite float")
            );
            Ok(0)
        }
        Command::Hamiltonian { d, n, out } => {
            let shape = QuditShape::with_budget(d, n, cli.budget)?;
            let s = braid_matrix(&shape)?;
            let h = hamiltonian_from_braid(&s, cli.tol)?;
            let roundtrip = matrix_residual(&expm_i(&h), &s)?;
            let summary = format!(
                r#"{{"roundtrip_residual":{},"hermitian_residual":{}}}"#,
                serde_json::to_string(&roundtrip).expect("finite float"),
                serde_json::to_string(&h.hermiticity_residual()).expect("finite float"),
            );
            match out {
                Some(path) => {
                    emit(&matrix_to_json(&h), Some(&path))?;
                    println!("{summary}");
                }
                None => {
                    println!("{}", matrix_to_json(&h));
                    eprintln!("{summary}");
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ARGUMENT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
