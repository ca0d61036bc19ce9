mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Exact Virasoro computations: Gram matrices, Kac determinants, singular
/// vectors, Jantzen filtrations, characters and Fock-space identities.
#[derive(Parser, Debug)]
#[command(name = "virasoro", version)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the randomized checks
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Also write the report to DIR/<subcommand>.<ext>
    #[arg(long, global = true, env = "VIRASORO_OUT_DIR")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gram matrix of M(c,h) at one level; c and h are rationals or the symbols c, h
    Gram {
        #[arg(long, allow_hyphen_values = true, default_value = "c")]
        c: String,
        #[arg(long, allow_hyphen_values = true, default_value = "h")]
        h: String,
        #[arg(long)]
        level: u32,
    },
    /// Kac determinant at symbolic (c,h)
    Kacdet {
        #[arg(long)]
        level: u32,
        #[arg(long, value_enum, default_value_t = KacMode::Ratio)]
        mode: KacMode,
    },
    /// Singular vector by the BDIZ formula, the Kac curve, or a kernel solve
    Singvec {
        #[arg(long, value_enum, default_value_t = SingMethod::Bdiz)]
        method: SingMethod,
        /// Spin j (bdiz), so that the level is 2j+1
        #[arg(long, allow_hyphen_values = true)]
        j: Option<String>,
        /// Curve indices (curve)
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        /// Rational (c,h) and level (kernel)
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Density-module polynomial a_d(λ,μ), symbolic or at a point, with the product cases
    Ffpoly {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Jantzen filtration of a Gram family
    Jantzen {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        level: u32,
    },
    /// Irreducible character as a q-series
    Character {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long = "N", default_value_t = 8)]
        n: u32,
        #[arg(long, value_enum, default_value_t = CharMethod::Formula)]
        method: CharMethod,
        /// Also compare against the Gram-rank oracle
        #[arg(long)]
        check: bool,
    },
    /// Goldstone vector in the oscillator module (2k = k2)
    Goldstone {
        #[arg(long)]
        k2: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = SectorArg::Minus)]
        sector: SectorArg,
    },
    /// Binomial determinant det binom(μ, f_i − i + j); with --two-p also the L_1 pairing
    Binomdet {
        /// Signature rows, e.g. 3,2,1
        #[arg(long)]
        f: String,
        /// μ as a rational, or omitted for the symbolic polynomial
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Compare the L_1 pairing in the b-mode module at 2p with the determinant
        /// (at μ = 2p unless --mu is given)
        #[arg(long, allow_hyphen_values = true)]
        two_p: Option<i64>,
    },
    /// Fock-space identity suites
    FockCheck {
        #[arg(long, allow_hyphen_values = true, default_value_t = 6)]
        emax: i64,
        /// Comma-separated suite names, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Shorthand for --format json
        #[arg(long)]
        json: bool,
    },
    /// Acceptance criteria 1-10
    Acceptance {
        /// all, or a comma-separated list of criterion numbers
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        level_cap: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = 6)]
        emax: i64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    /// c = 1 case with h = j²
    #[arg(long)]
    pub c1: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<String>,
    /// Discrete case c_m, h_{r,s}(m)
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KacMode {
    Direct,
    Product,
    Ratio,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SingMethod {
    Bdiz,
    Curve,
    Kernel,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum CharMethod {
    Formula,
    Filtration,
    Rank,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SectorArg {
    Minus,
    Plus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let code = match commands::dispatch(&cli) {
        Ok(report) => match output::emit(&cli, &report) {
            Ok(()) => {
                if report.verified {
                    0
                } else {
                    1
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code)
}
