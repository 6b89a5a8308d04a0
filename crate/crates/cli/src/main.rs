//! `dessins`: regular dessins, their quotients and the `SL(2,q)` lab from
//! the command line.
//!
//! Every command prints one report: `{"command", "status", "result"}` as
//! JSON, or the result rows as CSV. Failures print
//! `{"command", "status", "error": {"kind", "message", "offset"?}}`.
//! Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 cap
//! exceeded, 5 verification failure.

mod commands;
mod groups;
mod output;
mod words;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dessins::group::DEFAULT_CAP;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "dessins", version, about = "Regular dessins as coset geometries")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest number of group elements any enumeration may produce.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: usize,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Single dessins.
    #[command(subcommand)]
    Dessin(DessinCmd),
    /// Quotients by normal subgroups.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Unicellular dessins on cyclic groups.
    #[command(subcommand)]
    Unicellular(UnicellularCmd),
    /// The HA, TW, PA and AS families.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// `SL(2,q)` and `PSL(2,q)` computations.
    #[command(subcommand)]
    Sl2(Sl2Cmd),
    /// The acceptance suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
pub struct DessinArgs {
    /// Group spec, e.g. `quaternion:8`, `sl2:7`, `perm:5:(1,2,3);(3,4,5)`.
    #[arg(long)]
    pub group: String,
    /// The black generator.
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// The white generator.
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
}

#[derive(Subcommand, Debug)]
pub enum DessinCmd {
    /// Signature, counts, χ, genus and flags of `D(G, b, w)`.
    Info(DessinArgs),
}

#[derive(Subcommand, Debug)]
pub enum QuotientCmd {
    /// Classify the covering `D → D_N`.
    Classify {
        #[command(flatten)]
        dessin: DessinArgs,
        /// `center`, `trivial`, `whole`, `multi-edge`, `closure:<element>`,
        /// `translations` (agl1) or `base` (wreath).
        #[arg(long)]
        by: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct EllRange {
    /// A single face half-length.
    #[arg(long)]
    pub ell: Option<u64>,
    /// Sweep `1..=ell-max`.
    #[arg(long)]
    pub ell_max: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum UnicellularCmd {
    /// All descriptors `(k, m, n, λ, genus)`.
    Enumerate(EllRange),
    /// Counts per `λ` with the enumeration cross-check.
    Count(EllRange),
    /// The decomposition `ℓ = Σ_λ |U_ℓ^(λ)|`.
    Identity(EllRange),
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Affine family on `GF(p^d)⁺ : ⟨h⟩`: the class list, or one member
    /// with its translation quotient when `--i` and `--j` are given.
    Ha {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        ell: u64,
        #[arg(long, requires = "j")]
        i: Option<u64>,
        #[arg(long, requires = "i")]
        j: Option<u64>,
        /// The translation, as a field element.
        #[arg(long, default_value_t = 1)]
        x: u32,
    },
    /// Twisted wreath dessin on `A₅ ≀ Z_k`.
    Tw {
        #[arg(long)]
        k: u32,
    },
    /// Product action dessin on `A₅ ≀ Z_k`.
    Pa {
        #[arg(long)]
        k: u32,
        /// The non-identity element `a` of `A₅`, as a word in `s`, `t` or cycles.
        #[arg(long, default_value = "t")]
        a: String,
    },
    /// Almost simple dessin on `ΣL(2, 2^r)`.
    As {
        #[arg(long)]
        r: u32,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PrimeRange {
    /// A single prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// Every prime `5 ≤ p ≤ p-max`.
    #[arg(long)]
    pub p_max: Option<u64>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PrimeSelection {
    /// A single prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// Every prime `5 ≤ p ≤ p-max`.
    #[arg(long)]
    pub p_max: Option<u64>,
    /// Explicit primes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
pub struct Triple {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub l: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
}

#[derive(Subcommand, Debug)]
pub enum Sl2Cmd {
    /// `|b w^i|` for every `1 ≤ i ≤ p − 1`.
    Orders {
        #[command(flatten)]
        range: PrimeRange,
        /// Also compute each order by matrix powering and compare.
        #[arg(long)]
        check: bool,
    },
    /// The indices `i` with `|b w^i|` odd.
    Smooth(PrimeRange),
    /// `ψ*_n` and its roots modulo primes.
    Psi {
        /// One or more `n ≥ 3`, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long)]
        p_max: u64,
    },
    /// `|b w|` and its parity via the Fibonacci sequence.
    Fibonacci(PrimeSelection),
    /// Whether `SL(2,q)` (or `PSL(2,q)`) is `(ℓ, m, n)`-generated.
    Criterion {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        projective: bool,
        /// Confirm by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Whether a `(ℓ, m, n)` dessin on `PSL(2,q)` lifts smoothly to `SL(2,q)`.
    Schur {
        #[command(flatten)]
        triple: Triple,
        /// Confirm by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Run the acceptance criteria (all, or those given by `--id`).
    All {
        #[arg(long, value_delimiter = ',')]
        id: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let echo = argv[1..].join(" ");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let message = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" ")
                .trim_start_matches("error: ")
                .to_string();
            let report = output::error_report(&echo, output::ErrorInfo::usage(message));
            let _ = output::emit(&report, None);
            return ExitCode::from(output::EXIT_PARSE);
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let echo = commands::echo(&cli.command);
    let (report, code) = match commands::run(&cli.command, &cli.global) {
        Ok(out) => output::success_report(&echo, out, cli.global.format),
        Err(e) => {
            let info = output::ErrorInfo::from(&e);
            let code = info.exit_code;
            (output::error_report(&echo, info), code)
        }
    };
    if let Err(e) = output::emit(&report, cli.global.out.as_deref()) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::from(code)
}
