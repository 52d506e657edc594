use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quadtex::app::{basis_cap_from_env, run, Command, Format, KappaChoice, RunConfig, BASIS_CAP_ENV};

#[derive(Parser)]
#[command(name = "quadtex", version, about = "Textile systems of commuting matrices")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Transition matrices, K-groups and structure checks.
    Analyze(Common),
    /// Operator identities in the truncated Fock representation.
    Verify(Common),
    /// Count and list specifications.
    Kappa(Common),
    /// The tile alphabet.
    Tiles {
        #[command(flatten)]
        common: Common,
        /// Write the tile list as Wang-tile JSON.
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Count and list rectangular patches.
    Subshift {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        rows: usize,
        #[arg(long, default_value_t = 2)]
        cols: usize,
    },
}

#[derive(clap::Args)]
struct Common {
    input: PathBuf,
    /// Fock truncation level.
    #[arg(long, default_value_t = 4)]
    level: usize,
    /// Overrides the specification in the input document.
    #[arg(long, value_enum)]
    kappa: Option<KappaArg>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Listing limit.
    #[arg(long, default_value_t = 10)]
    limit: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum KappaArg {
    Lex,
    Exchange,
    Explicit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Wang,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Cmd::Analyze(c) => (Command::Analyze, c),
        Cmd::Verify(c) => (Command::Verify, c),
        Cmd::Kappa(c) => (Command::Kappa, c),
        Cmd::Tiles { common, .. } => (Command::Tiles, common),
        Cmd::Subshift { common, .. } => (Command::Subshift, common),
    };
    let mut config = RunConfig::new(&common.input, command);
    config.level = common.level;
    config.limit = common.limit;
    config.kappa = common.kappa.map(|k| match k {
        KappaArg::Lex => KappaChoice::Lex,
        KappaArg::Exchange => KappaChoice::Exchange,
        KappaArg::Explicit => KappaChoice::Explicit,
    });
    config.format = match common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    match &cli.command {
        Cmd::Tiles { emit, .. } => config.emit_wang = emit.is_some(),
        Cmd::Subshift { rows, cols, .. } => {
            config.rows = *rows;
            config.cols = *cols;
        }
        _ => {}
    }
    match basis_cap_from_env(std::env::var(BASIS_CAP_ENV).ok().as_deref()) {
        Ok(Some(cap)) => config.basis_cap = cap,
        Ok(None) => {}
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}
