//! Command-line surface. `run` parses arguments, dispatches and returns the
//! process exit code: 0 when every check passes, 1 on a verification failure,
//! 2 on a usage, parameter or IO error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::baxterize::{baxterize_matrix, matrix_unit_grading, BaxterError};
use crate::double::{
    build_double, canonical_r, check_constant_ybe_algebraic, check_parametric_ybe_algebraic, DoubleError,
};
use crate::hopf::check_hopf_axioms;
use crate::io::{from_json, report_json, to_json, to_latex, to_text, IoError};
use crate::matrix::ParamMatrix;
use crate::regression;
use crate::scalar::{parse_scalar, Field, ParseError};
use crate::taft::{
    baxterized_canonical, build_taft, rep_indecomposable, rep_irreducible, taft_r_matrix, Normalization, TaftError,
};
use crate::uqsl2::{spin, uqsl2_r_matrix, Spin};
use crate::ybe::{braid_check, check_constant_ybe, check_parametric_ybe, YbeError, YbeReport};

/// Directory that relative `--output` paths are resolved against.
pub const OUTPUT_DIR_VAR: &str = "HOPF_BAXTER_OUT";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Ybe(#[from] YbeError),
    #[error(transparent)]
    Taft(#[from] TaftError),
    #[error(transparent)]
    Baxter(#[from] BaxterError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error("cannot parse scalar: {0}")]
    Scalar(#[from] ParseError),
}

#[derive(Parser, Debug)]
#[command(
    name = "hopf-baxter",
    version,
    about = "Exact Baxterization of Yang-Baxter solutions from graded Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file; relative paths go under $HOPF_BAXTER_OUT when set.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// R-matrix of the Taft algebra T(N,q) in a chosen representation.
    Taft {
        #[arg(long = "N", alias = "order")]
        order: u32,
        /// q = zeta_N^k.
        #[arg(long, default_value_t = 1)]
        q_power: u32,
        /// Irreducible representation `n,l`.
        #[arg(long, conflicts_with = "alpha")]
        rep: Option<String>,
        /// Use the N-dimensional indecomposable with this parameter instead.
        #[arg(long, requires = "l")]
        alpha: Option<String>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        parametric: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value = "unit-corner")]
        normalization: Normalization,
        #[command(flatten)]
        out: Output,
    },
    /// R-matrix of U_q[sl(2)] in the spin-1/2 or spin-1 representation.
    Uqsl2 {
        #[arg(long)]
        spin: Spin,
        #[arg(long)]
        parametric: bool,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Drinfeld double of T(N,q) and its canonical R.
    Double {
        #[arg(long = "N", alias = "order")]
        order: u32,
        #[arg(long, default_value_t = 1)]
        q_power: u32,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Baxterize a constant matrix, or the canonical element of T(N,q).
    Baxterize {
        /// Matrix JSON document.
        #[arg(long, requires = "weights", conflicts_with = "taft")]
        input: Option<PathBuf>,
        /// Basis weights w; E_rc has degree w_r - w_c on the left leg and
        /// w_c - w_r on the right.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<i32>>,
        /// Order N of the Taft algebra (with q = zeta_N).
        #[arg(long)]
        taft: Option<u32>,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check a matrix JSON document against the Yang-Baxter equation.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        mode: VerifyMode,
        #[command(flatten)]
        out: Output,
    },
    /// Run the full acceptance suite.
    AllRegressions {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u32>,
    },
}

/// Which equation `verify` checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// Parametric YBE if any entry depends on mu, otherwise constant; the
    /// braid relation at mu = 1 in both cases.
    Auto,
    Constant,
    Parametric,
}

/// Checks a matrix JSON document. Returns the reports and the exit code.
pub fn verify_document(text: &str, mode: VerifyMode) -> Result<(Vec<YbeReport>, i32), CliError> {
    let m = from_json(text)?;
    let reports = verify_matrix(&m, mode)?;
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
    Ok((reports, code))
}

fn verify_matrix(m: &ParamMatrix, mode: VerifyMode) -> Result<Vec<YbeReport>, CliError> {
    let parametric = match mode {
        VerifyMode::Auto => !m.is_constant(),
        VerifyMode::Constant => false,
        VerifyMode::Parametric => true,
    };
    let main = if parametric { check_parametric_ybe(m)? } else { check_constant_ybe(m)? };
    Ok(vec![main, braid_check(&m.at_one())?])
}

fn resolve(path: &std::path::Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_VAR) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(out: &Output, text: &str) -> Result<(), CliError> {
    match &out.output {
        Some(path) => {
            let path = resolve(path);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)
                    .map_err(|source| CliError::File { path: parent.to_path_buf(), source })?;
            }
            std::fs::write(&path, text).map_err(|source| CliError::File { path, source })
        }
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn render(m: &ParamMatrix, format: Format) -> String {
    match format {
        Format::Json => to_json(m),
        Format::Latex => to_latex(m),
        Format::Text => to_text(m),
    }
}

/// Prints reports to stderr and returns the exit code they imply.
fn report(reports: &[YbeReport]) -> i32 {
    for r in reports {
        eprintln!("{}", r);
    }
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

fn matrix_job(m: &ParamMatrix, verify: bool, out: &Output) -> Result<i32, CliError> {
    emit(out, &render(m, out.format))?;
    if verify {
        Ok(report(&verify_matrix(m, VerifyMode::Auto)?))
    } else {
        Ok(0)
    }
}

fn parse_rep(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("--rep expects `n,l`, got `{}`", text));
    let (n, l) = text.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, l.trim().parse().map_err(|_| bad())?))
}

fn read(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Taft { order, q_power, rep, alpha, l, parametric, verify, normalization, out } => {
            let t = build_taft(order, q_power)?;
            let rep = match (alpha, rep) {
                (Some(alpha), _) => {
                    let alpha = parse_scalar(&alpha, Field::Cyclotomic(order))?;
                    rep_indecomposable(&t, &alpha, l.expect("clap enforces --l with --alpha"))?
                }
                (None, Some(rep)) => {
                    let (n, l) = parse_rep(&rep)?;
                    rep_irreducible(&t, n, l)?
                }
                (None, None) => {
                    let l = l.ok_or_else(|| CliError::Usage("give --rep n,l or --alpha with --l".into()))?;
                    rep_irreducible(&t, order, l)?
                }
            };
            matrix_job(&taft_r_matrix(&t, &rep, parametric, normalization)?, verify, &out)
        }
        Command::Uqsl2 { spin: s, parametric, verify, out } => {
            matrix_job(&uqsl2_r_matrix(&spin(s), parametric), verify, &out)
        }
        Command::Double { order, q_power, verify, out } => {
            let t = build_taft(order, q_power)?;
            let d = build_double(t.hopf())?;
            let r = canonical_r(&d);
            let mut text = String::new();
            writeln!(text, "D(T({},q)) with q = zeta_{}^{}: dimension {}", order, order, q_power, d.dim()).unwrap();
            writeln!(text, "R = sum_i a_i (x) a_i^*, {} terms", t.hopf().dim()).unwrap();
            let mut code = 0;
            if verify {
                let axioms = check_hopf_axioms(t.hopf());
                write!(text, "{}", axioms).unwrap();
                let ybe = check_constant_ybe_algebraic(&d, &r);
                writeln!(text, "{}", ybe).unwrap();
                let coalg = d.coalgebra_counterexample();
                writeln!(text, "coproduct of D multiplicative: {}", if coalg.is_none() { "pass" } else { "FAIL" })
                    .unwrap();
                if !(axioms.all_passed() && ybe.passed && coalg.is_none()) {
                    code = 1;
                }
            }
            emit(&out, &text)?;
            Ok(code)
        }
        Command::Baxterize { input, weights, taft, verify, out } => match (input, taft) {
            (Some(path), None) => {
                let m = from_json(&read(&path)?)?;
                let w = weights.expect("clap enforces --weights with --input");
                let d = (m.dim() as f64).sqrt().round() as usize;
                if w.len() != d || d * d != m.dim() {
                    return Err(CliError::Usage(format!("{} weights for a {}x{} matrix", w.len(), m.dim(), m.dim())));
                }
                let left = matrix_unit_grading(d, |r, c| w[r] - w[c]);
                let right = matrix_unit_grading(d, |r, c| w[c] - w[r]);
                matrix_job(&baxterize_matrix(&m, &left, &right)?, verify, &out)
            }
            (None, Some(order)) => {
                let t = build_taft(order, 1)?;
                let bax = baxterized_canonical(&t)?;
                let mut text = String::new();
                for (key, c) in bax.terms() {
                    let left = t.hopf().label(key[0]);
                    let right = t.dual().label(key[1]);
                    writeln!(text, "{} * {} (x) {}", c, left, right).unwrap();
                }
                emit(&out, &text)?;
                if verify {
                    let d = build_double(t.hopf())?;
                    let rep = check_parametric_ybe_algebraic(&d, &d.embed_tensor(&bax));
                    eprintln!("{}", rep);
                    return Ok(if rep.passed { 0 } else { 1 });
                }
                Ok(0)
            }
            _ => Err(CliError::Usage("give either --input with --weights, or --taft N".into())),
        },
        Command::Verify { input, mode, out } => {
            let (reports, code) = verify_document(&read(&input)?, mode)?;
            let text = match out.format {
                Format::Json => reports.iter().map(report_json).collect(),
                _ => reports.iter().map(|r| format!("{}\n", r)).collect::<String>(),
            };
            emit(&out, &text)?;
            Ok(code)
        }
        Command::AllRegressions { only } => {
            let results = match only {
                Some(id) => vec![regression::run_one(id).ok_or_else(|| {
                    CliError::Usage(format!("no criterion {} (1..={})", id, regression::criterion_count()))
                })?],
                None => regression::run_all(),
            };
            for r in &results {
                println!("{}", r);
            }
            Ok(if results.iter().all(|r| r.passed) { 0 } else { 1 })
        }
    }
}

/// Runs the command line given by `args` (including the program name).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}
