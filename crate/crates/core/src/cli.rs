//! The `chainform` command line, as a function from arguments to output so
//! that it can be driven from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::builders::{BuildError, BuilderSpec};
use crate::generating::{fp_in_basis, Method};
use crate::incidence::{hopf_coproduct, IncidenceElement};
use crate::poset::{LabeledPoset, PosetError, RankSet, DENSE_RANK_LIMIT};
use crate::qsym::{QBasis, QSymExpr};
use crate::rank_selection::{ehrenborg_ep, is_r_labeled, is_relative_r_labeled};
use crate::symfunc::{is_symmetric, m_to_schur, SymError};
use crate::verify::{pair_suite, poset_suite};

pub const THREADS_ENV: &str = "CHAINFORM_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("IoError: {path}: {msg}")]
    Io { path: PathBuf, msg: String },
    #[error("{0}")]
    Poset(#[from] PosetError),
    #[error("{0}")]
    Build(#[from] BuildError),
    #[error("{0}")]
    Sym(#[from] SymError),
    #[error("RankLimitExceeded: rank {rank} is above --max-rank {limit}")]
    RankLimit { rank: usize, limit: usize },
    #[error("VerificationFailed: {0} check(s) failed")]
    VerificationFailed(usize),
    #[error("ThreadPool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Parser)]
#[command(name = "chainform", version, about = "Chain descents and quasi-symmetric functions of edge-labeled posets")]
struct Cli {
    /// Worker threads for chain enumeration (falls back to CHAINFORM_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Refuse posets of larger rank.
    #[arg(long, global = true, default_value_t = 12)]
    max_rank: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Quasi-symmetric monomial basis.
    #[value(name = "M")]
    QMonomial,
    /// Fundamental basis.
    #[value(name = "F")]
    QFundamental,
    /// Symmetric monomial basis.
    #[value(name = "m")]
    SymMonomial,
    /// Schur basis.
    #[value(name = "s")]
    Schur,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(name = "via_M")]
    ViaM,
    #[value(name = "via_dF")]
    ViaDF,
    #[value(name = "via_chains")]
    ViaChains,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::ViaM => Method::ViaM,
            MethodArg::ViaDF => Method::ViaDF,
            MethodArg::ViaChains => Method::ViaChains,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a poset file and report its size.
    Validate { file: PathBuf },
    /// List every maximal chain with its word and descent set.
    Chains { file: PathBuf },
    /// Print the d and f tables.
    Stats { file: PathBuf },
    /// Print F_P.
    Fp {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "M")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "via_chains")]
        method: MethodArg,
    },
    /// Print the flag f-vector generating function E_P.
    Ep { file: PathBuf },
    /// Report R-labeling, relative R-labeling, symmetry and E_P == F_P.
    Check { file: PathBuf },
    /// Write the product of two posets.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the coproduct in the incidence Hopf algebra.
    Coproduct { file: PathBuf },
    /// Run the identity suite on each poset and each ordered pair.
    HopfVerify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Build a standard poset: `boolean N`, `chain L1,L2,..`, `young MU / NU`,
    /// `weak-order PERM`.
    Build {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `argv[0]` is the program name. Exit codes: 0 on
/// success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let threads = cli
        .threads
        .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()));
    let result = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::from(CliError::ThreadPool(e.to_string())))
            .and_then(|pool| pool.install(|| execute(&cli))),
        None => execute(&cli),
    };
    match result {
        Ok(stdout) => CliOutput { code: 0, stdout, stderr: String::new() },
        Err(Failure { stdout, error }) => CliOutput {
            code: 1,
            stdout,
            stderr: format!("error: {error}\n"),
        },
    }
}

/// A domain error, with whatever was printed before it.
struct Failure {
    stdout: String,
    error: CliError,
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { stdout: String::new(), error: e.into() }
    }
}

fn read_poset(path: &Path, max_rank: usize) -> Result<LabeledPoset, CliError> {
    let p = read_unchecked(path)?;
    if p.rank() > max_rank {
        return Err(CliError::RankLimit { rank: p.rank(), limit: max_rank });
    }
    Ok(p)
}

fn read_unchecked(path: &Path) -> Result<LabeledPoset, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })?;
    Ok(LabeledPoset::parse(&text)?)
}

fn emit(text: String, output: &Option<PathBuf>) -> Result<String, CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io {
                path: path.clone(),
                msg: e.to_string(),
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let limit = cli.max_rank;
    let mut out = String::new();
    match &cli.command {
        Command::Validate { file } => {
            let p = read_unchecked(file)?;
            writeln!(
                out,
                "valid: {} elements, rank {}, {} covers",
                p.len(),
                p.rank(),
                p.covers().len()
            )
            .expect("write to String");
        }
        Command::Chains { file } => {
            let p = read_poset(file, limit)?;
            p.for_each_chain(|elems, word| {
                let e: Vec<String> = elems.iter().map(|x| x.to_string()).collect();
                let w: Vec<String> = word.iter().map(|l| l.to_string()).collect();
                let d = crate::poset::descent_set(word);
                writeln!(out, "{} | {} | {d}", e.join(" "), w.join(" ")).expect("write to String");
            });
        }
        Command::Stats { file } => {
            let p = read_poset(file, limit)?;
            out = stats_table(&p);
        }
        Command::Fp { file, basis, method } => {
            let p = read_poset(file, limit)?;
            let f = fp_in_basis(&p, (*method).into(), QBasis::Monomial);
            let text = match basis {
                BasisArg::QMonomial => f.to_string(),
                BasisArg::QFundamental => f.in_basis(QBasis::Fundamental).to_string(),
                BasisArg::SymMonomial => symmetric(&f)?.to_string(),
                BasisArg::Schur => m_to_schur(&symmetric(&f)?).to_string(),
            };
            writeln!(out, "{text}").expect("write to String");
        }
        Command::Ep { file } => {
            let p = read_poset(file, limit)?;
            writeln!(out, "{}", ehrenborg_ep(&p)).expect("write to String");
        }
        Command::Check { file } => {
            let p = read_poset(file, limit)?;
            let f = fp_in_basis(&p, Method::ViaChains, QBasis::Monomial);
            writeln!(out, "R-labeled: {}", is_r_labeled(&p)).expect("write to String");
            writeln!(out, "relative-R-labeled: {}", is_relative_r_labeled(&p)).expect("write to String");
            writeln!(out, "symmetric: {}", is_symmetric(&f).is_some()).expect("write to String");
            writeln!(out, "E_P==F_P: {}", ehrenborg_ep(&p) == f).expect("write to String");
        }
        Command::Product { first, second, output } => {
            let p = read_unchecked(first)?;
            let q = read_unchecked(second)?;
            let r = p.rank() + q.rank();
            if r > limit {
                return Err(CliError::RankLimit { rank: r, limit }.into());
            }
            out = emit(p.product(&q).to_text(), output)?;
        }
        Command::Coproduct { file } => {
            let p = read_poset(file, limit)?;
            writeln!(out, "{}", hopf_coproduct(&IncidenceElement::from_poset(p))).expect("write to String");
        }
        Command::HopfVerify { files } => {
            let posets: Vec<(String, LabeledPoset)> = files
                .iter()
                .map(|f| Ok((f.display().to_string(), read_poset(f, limit)?)))
                .collect::<Result<_, CliError>>()?;
            let mut failed = 0;
            for (name, p) in &posets {
                for (check, ok) in poset_suite(p) {
                    failed += usize::from(!ok);
                    writeln!(out, "{name} {check} {}", verdict(ok)).expect("write to String");
                }
            }
            for (a, p) in &posets {
                for (b, q) in &posets {
                    if p.rank() + q.rank() > limit {
                        continue;
                    }
                    for (check, ok) in pair_suite(p, q) {
                        failed += usize::from(!ok);
                        writeln!(out, "{a} x {b} {check} {}", verdict(ok)).expect("write to String");
                    }
                }
            }
            if failed > 0 {
                return Err(Failure { stdout: out, error: CliError::VerificationFailed(failed) });
            }
        }
        Command::Build { spec, output } => {
            let spec: BuilderSpec = spec.join(" ").parse()?;
            out = emit(spec.build()?.to_text(), output)?;
        }
    }
    Ok(out)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn symmetric(f: &QSymExpr) -> Result<crate::symfunc::SymExpr, SymError> {
    is_symmetric(f).ok_or(SymError::NotSymmetric)
}

/// `d` and `f` for every subset up to the dense limit; only the nonzero `d`
/// above it.
fn stats_table(p: &LabeledPoset) -> String {
    let stats = p.flag_stats();
    let n = p.rank();
    let mut out = format!("rank {n}\n");
    if n <= DENSE_RANK_LIMIT {
        for i in RankSet::all(n) {
            writeln!(out, "d {i} {}", stats.d(&i)).expect("write to String");
        }
        for j in RankSet::all(n) {
            writeln!(out, "f {j} {}", stats.f(&j)).expect("write to String");
        }
    } else {
        for (i, c) in stats.nonzero_d() {
            writeln!(out, "d {i} {c}").expect("write to String");
        }
    }
    out
}
