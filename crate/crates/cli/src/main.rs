mod commands;
mod report;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Report;
use superschur::Error;

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Schur superalgebras and signed Young modules over GF(p)")]
pub struct Cli {
    /// machine-readable report on stdout
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// write the constructed modules or algebra as JSON
    #[arg(long, global = true)]
    dump: Option<PathBuf>,
    /// enable the long-running stretch suites
    #[arg(long, global = true)]
    slow: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// representation type of S(m|n,d), or of S(m,d) with --classical
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        explain: bool,
    },
    /// dimension of S(m|n,d); with --p also the computed commutant
    Dim {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: Option<u32>,
    },
    /// build S(m|n,d) over GF(p) and summarize it
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
    },
    /// check S(m|n,d) ≅ S(n|m,d) on structure constants
    VerifyDuality {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
    },
    /// check that the weight corner of S(m2|n2,d) is S(m|n,d)
    VerifyTruncation {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m2: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
    },
    /// Gabriel quiver of the basic algebra of S(m|n,d), or of End(⊕ summands)
    Quiver {
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
        /// `;`-separated: `λ` for the Young module Y^λ, `a,b|c` for M^(a,b|c)
        #[arg(long)]
        summands: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// indecomposable summands of the signed permutation module of a biweight
    Decompose {
        #[arg(long)]
        biweight: String,
        #[arg(long)]
        p: u32,
    },
    /// block of a signed Young label and the defect-one catalog of a core
    Blocks {
        #[arg(long)]
        p: u32,
        /// `λ|μ`, meaning the label (λ|pμ)
        #[arg(long)]
        label: Option<String>,
        /// p-core for the defect-one catalog
        #[arg(long)]
        tau: Option<String>,
        /// weight lattice for the residue data of --label
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// run a named verification suite
    Verify {
        suite: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long)]
        steps: Option<usize>,
    },
}

pub enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnknownName(_)
            | Error::NonPrime(_)
            | Error::NonOddPrime(_)
            | Error::InvalidCharacteristic(_)
            | Error::HypothesisViolated(_)
            | Error::ShapeOverflow(_)
            | Error::NotACore(..)
            | Error::Invalid(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

pub struct Ctx {
    pub seed: u64,
    pub dump: Option<PathBuf>,
    pub slow: bool,
}

impl Ctx {
    pub fn dump(&self, value: &serde_json::Value) -> Result<(), Failure> {
        if let Some(path) = &self.dump {
            std::fs::write(path, serde_json::to_string(value).expect("json"))?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Ctx { seed: cli.seed, dump: cli.dump.clone(), slow: cli.slow };
    match commands::dispatch(&cli.command, &ctx) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error of the computation
            let _ = writeln!(out, "{}", report.render(cli.json));
            if report.failed() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

pub type Outcome = Result<Report, Failure>;
