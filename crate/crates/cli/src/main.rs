mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::report::{CliError, Envelope};

#[derive(Parser, Debug)]
#[command(name = "torilab", version, about = "Exact statistics on maximal tori, coinvariant characters and stable twisted Betti numbers")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the output to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Include wall-clock timings (makes output nondeterministic)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counts of F-stable maximal tori and polynomial statistics on them
    #[command(subcommand)]
    Tori(ToriCommand),
    /// Both sides of Lehrer's identity for a class function
    Lehrer(LehrerArgs),
    /// Limit of a normalized polynomial statistic as n grows
    Asympt(AsymptArgs),
    /// Graded characters of the coinvariant algebra
    #[command(subcommand)]
    Coinv(CoinvCommand),
    /// Stable twisted Betti numbers of a character polynomial
    Betti(BettiArgs),
    /// Symmetric-group characters and tableau statistics
    #[command(subcommand)]
    Symfunc(SymfuncCommand),
    /// Run the verification battery
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum ToriCommand {
    /// Number of tori of each type
    Count(CountArgs),
    /// Sum of a character polynomial over all tori
    Stat(StatArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Group family: a (GL_n) or bc (Sp_2n, SO_2n+1)
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// A single class "μ|λ" (type A: a partition "3,1")
    #[arg(long)]
    class: Option<String>,
    /// Evaluate at this q instead of symbolically
    #[arg(long, conflicts_with = "symbolic")]
    q: Option<String>,
    /// Report rational functions in q (the default)
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args, Debug)]
struct StatArgs {
    #[arg(long)]
    family: String,
    /// Character polynomial, e.g. "X1 + Y1" or a preset such as Sym2Cn
    #[arg(long)]
    poly: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: Option<String>,
}

#[derive(Args, Debug)]
struct LehrerArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// "poly:EXPR" or, in type A, "irr:λ"
    #[arg(long)]
    chi: String,
}

#[derive(Args, Debug)]
struct AsymptArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    poly: String,
    /// Also evaluate the normalized statistic at this integer q
    #[arg(long)]
    q: Option<u64>,
    /// Check convergence for n = 1..=N (needs --q, default 2)
    #[arg(long)]
    n_max: Option<usize>,
    /// First n from which |diff| must be nonincreasing
    #[arg(long, default_value_t = 3)]
    monotone_from: usize,
}

#[derive(Subcommand, Debug)]
enum CoinvCommand {
    /// Σ_i χ_{R_n^i} z^i on every class
    Graded {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// The character polynomials Q_0, …, Q_D
    Qpoly {
        #[arg(long)]
        max_degree: usize,
    },
    /// Compare Q_i with χ_{R_n^i} on B_n for every degree
    StableRange {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct BettiArgs {
    #[command(subcommand)]
    sub: Option<BettiCommand>,
    #[command(flatten)]
    stable: StableArgs,
}

#[derive(Args, Debug)]
struct StableArgs {
    #[arg(long)]
    poly: Option<String>,
    /// Number of coefficients β_0.. to list
    #[arg(long, default_value_t = 12)]
    terms: usize,
    #[arg(long)]
    recurrence: bool,
    #[arg(long)]
    quasipoly: bool,
    /// Also compute each β_i directly from the coinvariant algebra
    #[arg(long)]
    direct: bool,
}

#[derive(Subcommand, Debug)]
enum BettiCommand {
    /// Check the double generating function for one basis element
    DoubleGf {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        z_order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SymfuncCommand {
    /// χ^λ_μ by the Murnaghan–Nakayama rule (all μ if omitted)
    Mn {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
    },
    /// f_{λ,i}: standard tableaux of shape λ by major index
    Fmaj {
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Every numbered check
    All {
        #[arg(long, default_value = "quick")]
        level: String,
        /// Restrict to these criterion numbers, e.g. 1,9,13
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

fn dispatch(cli: &Cli) -> Result<Envelope, CliError> {
    use commands as c;
    match &cli.command {
        Command::Tori(ToriCommand::Count(a)) => c::tori_count(&a.family, a.n, a.class.as_deref(), a.q.as_deref()),
        Command::Tori(ToriCommand::Stat(a)) => c::tori_stat(&a.family, &a.poly, a.n, a.q.as_deref()),
        Command::Lehrer(a) => c::lehrer(&a.family, a.n, &a.chi),
        Command::Asympt(a) => c::asympt(&a.family, &a.poly, a.q, a.n_max, a.monotone_from),
        Command::Coinv(CoinvCommand::Graded { family, n }) => c::coinv_graded(family, *n),
        Command::Coinv(CoinvCommand::Qpoly { max_degree }) => c::coinv_qpoly(*max_degree),
        Command::Coinv(CoinvCommand::StableRange { n }) => c::coinv_stable_range(*n),
        Command::Betti(BettiArgs { sub: Some(BettiCommand::DoubleGf { class, n_max, z_order }), .. }) => {
            c::betti_double_gf(class, *n_max, *z_order)
        }
        Command::Betti(BettiArgs { sub: None, stable: s }) => {
            let poly = s.poly.as_deref().ok_or_else(|| CliError::usage("betti needs --poly EXPR"))?;
            c::betti(poly, s.terms, s.recurrence, s.quasipoly, s.direct)
        }
        Command::Symfunc(SymfuncCommand::Mn { lambda, mu }) => c::symfunc_mn(lambda, mu.as_deref()),
        Command::Symfunc(SymfuncCommand::Fmaj { lambda }) => c::symfunc_fmaj(lambda),
        Command::Verify(VerifyCommand::All { level, only }) => c::verify_all(level, only, cli.seed, cli.timing),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("TORILAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::usage(format!("TORILAB_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::usage(e.to_string()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let json_requested = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string();
            let err = CliError::usage(message.trim_start_matches("error: ").trim_end());
            return finish_error(&err, json_requested, None);
        }
    };
    if let Err(err) = configure_threads() {
        return finish_error(&err, cli.json, cli.out.as_ref());
    }
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(mut envelope) => {
            if cli.timing {
                envelope.timing_ms = Some(start.elapsed().as_millis());
            }
            let rendered = if cli.json { envelope.to_json() } else { envelope.text.clone() };
            if let Err(e) = emit(&rendered, cli.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(envelope.exit_code())
        }
        Err(err) => finish_error(&err, cli.json, cli.out.as_ref()),
    }
}

fn finish_error(err: &CliError, json: bool, out: Option<&PathBuf>) -> ExitCode {
    if json {
        let _ = emit(&err.to_json(), out);
    } else {
        eprintln!("error: {}", err.message);
    }
    ExitCode::from(err.exit_code())
}
