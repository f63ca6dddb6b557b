//! `m0n`: batch front end for curve classes, F-curve expressions, Keel-relation
//! search and Losev-Manin degenerations.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "m0n", version, about = "Curve classes on the moduli space of stable pointed rational curves")]
struct Cli {
    /// Number of marked points; checked against every input file.
    #[arg(short = 'n', long = "n", global = true)]
    n: Option<usize>,
    /// Output file, written atomically; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "warn")]
    log_level: log::LevelFilter,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Cyclic,
    Dihedral,
}

#[derive(Subcommand)]
enum Command {
    /// Class of the curve fixed by a cyclic or dihedral group, with C·K, C·ψ
    /// and the Kollár bound.
    Class {
        kind: Kind,
        /// Generators in cycle notation, e.g. "(1 2 3)(4 5 6)".
        #[arg(short = 'g', long = "generators", num_args = 1.., required = true)]
        generators: Vec<String>,
    },
    /// Expansion of a class in the dual of the nonadjacent basis.
    Expand {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Keel-relation search for an effective expression.
    SeekEffective {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_level: usize,
        #[arg(long, default_value_t = 5_000_000)]
        node_budget: u64,
        /// Keep searching from the original root instead of restarting at
        /// each improvement.
        #[arg(long)]
        no_restart: bool,
    },
    /// Checks that an expression has a given class.
    Verify {
        #[arg(long)]
        expr: PathBuf,
        #[arg(long)]
        class: PathBuf,
    },
    /// Keel relations whose terms contain two given F-curves.
    KeelRelations {
        /// First F-curve, e.g. "F{1|2|3|456}".
        #[arg(long = "f")]
        first: String,
        /// Second F-curve.
        #[arg(long = "g")]
        second: String,
    },
    /// Toric degeneration of a configuration family.
    Degenerate {
        #[arg(long)]
        family: PathBuf,
        /// Largest germ order tried at a special point.
        #[arg(long)]
        max_germ_order: Option<usize>,
    },
    /// Lifts a torus-fixed cycle to an F-curve expression upstairs.
    Lift {
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        class: PathBuf,
    },
    /// Order of the stabilizer of a class in the symmetric group.
    Stabilizer {
        #[arg(long)]
        class: PathBuf,
        #[arg(long, default_value_t = 50_000_000)]
        node_budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new().filter_level(cli.log_level).format_timestamp(None).init();
    let outcome = commands::run(&cli);
    let code = match outcome {
        Ok(out) => {
            if let Err(e) = io::emit(&out.payload, cli.out.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if let Some(msg) = &out.note {
                eprintln!("{msg}");
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            commands::exit_code(&e)
        }
    };
    ExitCode::from(code)
}
