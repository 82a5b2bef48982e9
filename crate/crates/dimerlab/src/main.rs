use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dimerlab::pipeline::{self, BoundsOverride};
use dimerlab::CliError;

/// Toolkit for dimer quivers on the torus: matchings, contractions, cycle
/// algebras, and center reports with certified bounds.
#[derive(Parser)]
#[command(name = "dimerlab", version, about)]
struct Cli {
    /// Emit the report as pretty-printed JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct BoundArgs {
    /// Cap on cycle length during enumeration (default: 3 * arrow count)
    #[arg(long, global = true)]
    len_bound: Option<usize>,

    /// Cap on total monomial degree in window computations (default: 8)
    #[arg(long, global = true)]
    deg_bound: Option<u32>,

    /// Cap on the exponent tried when certifying powers (default: 4)
    #[arg(long, global = true)]
    power_bound: Option<u32>,

    /// Cap on search steps before a computation reports failure
    #[arg(long, global = true)]
    budget: Option<usize>,
}

impl BoundArgs {
    fn overrides(&self) -> BoundsOverride {
        BoundsOverride {
            len_bound: self.len_bound,
            deg_bound: self.deg_bound,
            power_bound: self.power_bound,
            budget: self.budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check an input file and report each validation step
    Validate {
        /// Builtin fixture name or path to a JSON input file
        input: String,
    },
    /// List the perfect matchings of a tiling and mark the simple ones
    Matchings { input: String },
    /// List vertex-simple cycles with homology and graded image
    Cycles {
        input: String,
        /// Named contraction from the input file (default: identity)
        #[arg(long)]
        contract: Option<String>,
        /// Restrict to cycles based at this vertex
        #[arg(long)]
        vertex: Option<usize>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Apply a contraction and describe the target tiling
    Contract {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Decide whether the contraction is cyclic, with a witness when not
    CheckCyclic {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Full center analysis: cycle algebra, window, certificates, dimensions
    CenterReport {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Krull dimensions of the cycle algebra and the center estimates
    Krull {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Vanishing locus of the special fiber, with heights and growth data
    Locus {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Search for a monomial certifying that the center is not noetherian
    Witness {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Build the dimension chain and the ascending chain of center ideals
    Chain {
        input: String,
        #[arg(long)]
        contract: Option<String>,
        /// Number of ascending chain elements to construct
        #[arg(long, default_value_t = 4)]
        length: u32,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

/// Print the report, exiting quietly if the reader closed the pipe early
/// (for example `dimerlab ... | head`).
fn emit<T: Serialize + Display>(report: &T, json: bool) {
    let text = if json {
        serde_json::to_string_pretty(report).expect("report types serialize without custom errors")
    } else {
        report.to_string()
    };
    let mut stdout = io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{text}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing the report to stdout: {e}");
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Validate { input } => {
            let out = pipeline::cmd_validate(input)?;
            let ok = out.ok;
            emit(&out, cli.json);
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Matchings { input } => {
            emit(&pipeline::cmd_matchings(input)?, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycles {
            input,
            contract,
            vertex,
            bounds,
        } => {
            let out =
                pipeline::cmd_cycles(input, contract.as_deref(), *vertex, &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Contract {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_contract(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckCyclic {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_check_cyclic(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::CenterReport {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_center_report(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Krull {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_krull(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Locus {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_locus(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness {
            input,
            contract,
            bounds,
        } => {
            let out = pipeline::cmd_witness(input, contract.as_deref(), &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Chain {
            input,
            contract,
            length,
            bounds,
        } => {
            let out =
                pipeline::cmd_chain(input, contract.as_deref(), *length, &bounds.overrides())?;
            emit(&out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
