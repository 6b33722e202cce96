//! `fjump`: command-line access to test ideals, F-jumping ideals and F-Jacobian ideals.

mod commands;
mod config;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fjump::{Error, MonomialOrder};

use config::{FileConfig, Overrides, Settings};

/// A failed run: exit code plus a diagnostic for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidField(_) => 2,
            Error::CapExceeded { .. } | Error::Unstable(_) => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Parser)]
#[command(name = "fjump", version, about = "Test ideals, F-jumping numbers and F-Jacobian ideals over finite fields")]
struct Cli {
    /// TOML file with `max_iter`, `paranoid`, `order` and `sugar` keys.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Step cap for stabilizing chains (default from FJUMP_MAX_ITER, else 32).
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Verify one extra step after every chain stabilizes.
    #[arg(long, global = true)]
    paranoid: bool,
    /// Monomial order for Gröbner bases.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Use sugar pair selection.
    #[arg(long, global = true)]
    sugar: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RingPoly {
    /// Ring such as `F13[x,y]` or `F3^2:i^2+1[x,y]`.
    #[arg(long)]
    ring: String,
    /// Polynomial, or `-` to read it from standard input.
    #[arg(long)]
    poly: String,
}

#[derive(Args, Clone)]
struct RingIdeal {
    #[arg(long)]
    ring: String,
    /// Comma-separated generators.
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand)]
enum Command {
    /// Test ideal τ(f^c) for a positive rational c.
    Tau {
        #[command(flatten)]
        input: RingPoly,
        /// Exponent such as `5/6`, `3/13` or `2`.
        #[arg(long)]
        exp: String,
    },
    /// Left limit τ(f^(α−ε)).
    TauEps {
        #[command(flatten)]
        input: RingPoly,
        /// `r/d` with d = p^e − 1, or `auto:num/den`.
        #[arg(long)]
        alpha: String,
    },
    /// Decide whether α is an F-jumping number of f.
    Jump {
        #[command(flatten)]
        input: RingPoly,
        #[arg(long)]
        alpha: String,
        /// Include the flag of ideals.
        #[arg(long)]
        trace: bool,
    },
    /// Classify every r/(p^e − 1), r = 1..p^e − 1, as CSV.
    Sweep {
        #[command(flatten)]
        input: RingPoly,
        #[arg(long)]
        e: u32,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// F-Jacobian ideal from a seed ideal.
    Fjac {
        #[command(flatten)]
        input: RingPoly,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        trace: bool,
    },
    /// Fedder's F-purity criterion at the origin.
    Fedder {
        #[command(flatten)]
        input: RingPoly,
    },
    /// Frobenius root I^[1/q].
    Froot {
        #[command(flatten)]
        input: RingIdeal,
        #[arg(long)]
        q: u64,
    },
    /// Frobenius power I^[q].
    Bpower {
        #[command(flatten)]
        input: RingIdeal,
        #[arg(long)]
        q: u64,
    },
    /// Colon ideal (I : J).
    Colon {
        #[command(flatten)]
        input: RingIdeal,
        /// Generators of J.
        #[arg(long)]
        by: String,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: RingIdeal,
    },
}

fn read_stdin_if_dash(text: String) -> Result<String, Failure> {
    if text != "-" {
        return Ok(text);
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
    Ok(buf.trim().to_string())
}

fn run(cli: Cli) -> Result<String, Failure> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let settings = Settings::resolve(
        Overrides { max_iter: cli.max_iter, paranoid: cli.paranoid, order: cli.order.map(Into::into), sugar: cli.sugar },
        file,
    )?;
    let poly_input = |input: RingPoly| -> Result<commands::PolyInput, Failure> {
        let poly = read_stdin_if_dash(input.poly)?;
        commands::PolyInput::parse(&input.ring, &poly, &settings)
    };
    let ideal_input = |input: RingIdeal| commands::IdealInput::parse(&input.ring, &input.ideal, &settings);
    match cli.command {
        Command::Tau { input, exp } => commands::tau(&poly_input(input)?, &exp, &settings),
        Command::TauEps { input, alpha } => commands::tau_eps(&poly_input(input)?, &alpha, &settings),
        Command::Jump { input, alpha, trace } => commands::jump(&poly_input(input)?, &alpha, trace, &settings),
        Command::Sweep { input, e, jobs } => commands::sweep(&poly_input(input)?, e, jobs, &settings),
        Command::Fjac { input, seed, trace } => commands::fjac(&poly_input(input)?, &seed, trace, &settings),
        Command::Fedder { input } => commands::fedder(&poly_input(input)?),
        Command::Froot { input, q } => commands::froot(&ideal_input(input)?, q),
        Command::Bpower { input, q } => commands::bpower(&ideal_input(input)?, q),
        Command::Colon { input, by } => commands::colon(&ideal_input(input)?, &by),
        Command::Gb { input } => commands::gb(&ideal_input(input)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
