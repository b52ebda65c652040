//! `barspin`: bar partitions and spin blocks from the command line.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on usage
//! or parse errors.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use barspin::{BarPartition, Group, OddPrime};
use clap::{Parser, Subcommand, ValueEnum};

use commands::CommandError;
use record::{Format, Status};

#[derive(Debug, Parser)]
#[command(
    name = "barspin",
    version,
    about = "Bar partitions and spin blocks of 2.S_n and 2.A_n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps. Output does not depend on it.
    #[arg(long, global = true, env = "BARSPIN_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    /// The double cover of the symmetric group.
    #[value(name = "S", alias = "s")]
    S,
    /// The double cover of the alternating group.
    #[value(name = "A", alias = "a")]
    A,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::S => Group::DoubleCoverSym,
            GroupArg::A => Group::DoubleCoverAlt,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    /// Closed-form step ratios against direct quotients, plus congruences.
    Ratios,
    /// Strict comparison of the two constructed labels of each block.
    Thm35,
    /// H((pw)) > 2 H((pw-1, 1)).
    Prop36,
}

fn parse_prime(s: &str) -> Result<OddPrime, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    OddPrime::new(p).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the bars of a partition, with the product of bar lengths.
    Bars {
        /// Distinct parts, comma separated; "-" for the empty partition.
        partition: BarPartition,
        /// Also report the weights at powers of this odd prime.
        #[arg(long, value_parser = parse_prime)]
        p: Option<OddPrime>,
    },
    /// The p-bar core and p-bar weight of a partition.
    Core {
        partition: BarPartition,
        #[arg(long, value_parser = parse_prime)]
        p: OddPrime,
    },
    /// The spin p-blocks of 2.S_n or 2.A_n with degrees and heights.
    Blocks {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_prime)]
        p: OddPrime,
        #[arg(long, value_enum, default_value = "A")]
        group: GroupArg,
    },
    /// Exhaustive sweeps over small cores and weights.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[arg(long, value_parser = parse_prime)]
        p: OddPrime,
        /// Largest core size in the sweep.
        #[arg(long, default_value_t = 12)]
        max_core: u64,
        /// Largest weight in the sweep.
        #[arg(long, default_value_t = 4)]
        max_w: u64,
    },
    /// Two height-zero characters of distinct degrees in a spin block of 2.A_n.
    ///
    /// Blocks qualify when w >= p. Blocks with empty core and w >= 2 are also
    /// accepted; if only those qualify, the status is "info".
    Witness {
        #[arg(long, conflicts_with_all = ["core", "w"])]
        n: Option<u64>,
        #[arg(long, requires = "w")]
        core: Option<BarPartition>,
        #[arg(long, requires = "core")]
        w: Option<u64>,
        #[arg(long, value_parser = parse_prime)]
        p: OddPrime,
    },
    /// Witness every non-abelian spin block of 2.A_n for 4 <= n <= max-n.
    Check {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_prime, default_value = "3")]
        primes: Vec<OddPrime>,
    },
}

fn run(cli: &Cli) -> commands::CommandResult {
    match &cli.command {
        Command::Bars { partition, p } => commands::bars_cmd(partition, *p),
        Command::Core { partition, p } => commands::core_cmd(partition, *p),
        Command::Blocks { n, p, group } => commands::blocks_cmd(*n, *p, (*group).into()),
        Command::Verify {
            kind,
            p,
            max_core,
            max_w,
        } => {
            if *max_w == 0 {
                return Err(CommandError::Usage("max-w must be positive".into()));
            }
            match kind {
                VerifyKind::Ratios => commands::verify_ratios(*p, *max_core, *max_w, cli.jobs),
                VerifyKind::Thm35 => commands::verify_comparisons(*p, *max_core, *max_w, cli.jobs),
                VerifyKind::Prop36 => commands::verify_principal_pair(*p, *max_w),
            }
        }
        Command::Witness { n, core, w, p } => commands::witness_cmd(*n, core.as_ref(), *w, *p),
        Command::Check { max_n, primes } => commands::check_cmd(*max_n, primes, cli.jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let record = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = record.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if record.status == Status::Fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
