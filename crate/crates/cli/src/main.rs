//! `multireg`: batch front end for multigraded regularity computations.

mod commands;
mod golden;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Status;

#[derive(Parser, Debug)]
#[command(name = "multireg", version, about = "Exact multigraded regularity for toric Cox rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A ring file path or a catalog name (`standard:3`, `weighted:2,3,5`,
/// `multiproj:1,1`, `hirzebruch:2`, `p2`).
type RingArg = String;

#[derive(Subcommand, Debug)]
enum Command {
    /// dim H^i_B(M)_d for a shifted free module M.
    Coh {
        ring: RingArg,
        #[arg(long)]
        i: usize,
        /// Degree, e.g. -4 or (1,-2).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "window")]
        d: Option<String>,
        /// Tabulate every degree in a box such as -4..4.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Shifts e of the summands S(-e); default S.
        #[arg(long = "shift", allow_hyphen_values = true)]
        shifts: Vec<String>,
        /// Prime characteristic for the pattern complexes (default: rationals).
        #[arg(long)]
        prime: Option<u64>,
        /// Cross-check with the truncated Čech computation at this window.
        #[arg(long)]
        oracle: Option<i64>,
    },
    /// reg_{B,C}(S) as an ℕC-module with an exactness marker.
    #[command(name = "regS", alias = "regs")]
    RegS {
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        window: String,
    },
    /// reg(J) for a resolution type J such as "0:{(0,0)};1:{(1,1)}".
    #[command(name = "regJ", alias = "regj")]
    RegJ {
        ring: RingArg,
        #[arg(long = "J", alias = "j", allow_hyphen_values = true)]
        j: String,
        /// Window used when reg(S) has to be computed.
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        window: String,
        /// Report reg^i(J) for this level instead.
        #[arg(long)]
        level: Option<usize>,
    },
    /// The degree sets K_p of dreg(D) inside a window.
    Dreg {
        ring: RingArg,
        /// Generators of D, e.g. "(0,0),(1,-1)".
        #[arg(long = "D", alias = "gens", allow_hyphen_values = true)]
        d: String,
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long = "regs-window", allow_hyphen_values = true, default_value = "-6..6")]
        regs_window: String,
    },
    /// Minimal free resolution of S/I, or validation of a given complex.
    Resolve {
        ring: RingArg,
        /// Generators of I, e.g. "x0*y0, x0*y1".
        #[arg(long, conflicts_with = "complex")]
        ideal: Option<String>,
        /// A complex in the JSON interchange format.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Write the resulting complex as JSON.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// v-graded regularity: vregnum and reg_v membership.
    Coarse {
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long = "p", allow_hyphen_values = true)]
        ps: Vec<i64>,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Primitive collections, B_I, v_I and family regularity.
    Family {
        ring: RingArg,
        /// Degrees m to test for reg_{B_*} and reg_{B_*,v_*}.
        #[arg(long = "m", allow_hyphen_values = true)]
        ms: Vec<String>,
        /// Test every degree in this box.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// v_I in subset order, separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        vectors: Option<String>,
        /// Run the syzygy-bound pipeline at this degree.
        #[arg(long, allow_hyphen_values = true)]
        vres: Option<String>,
        /// b_I for the pipeline, comma separated; default v_I·m.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Reproduce the worked examples and compare with the committed output.
    Examples {
        /// Print the output without comparing.
        #[arg(long)]
        show: bool,
    },
    /// Run the invariant suites.
    Selftest {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        suite: Option<String>,
    },
}

/// The module M: S by default.
#[derive(clap::Args, Debug, Clone, Default)]
struct ModuleArgs {
    /// Free module ⊕ S(-e).
    #[arg(long = "shift", allow_hyphen_values = true)]
    shifts: Vec<String>,
    /// M given by a resolution type.
    #[arg(long = "J", alias = "j", allow_hyphen_values = true, conflicts_with_all = ["shifts", "ideal"])]
    j: Option<String>,
    /// M = S/I, resolved internally.
    #[arg(long, conflicts_with = "shifts")]
    ideal: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text.trim_end().to_string(),
                Format::Json => {
                    let mut json = report.json;
                    if let Some(obj) = json.as_object_mut() {
                        obj.insert("status".into(), report.status.label().into());
                    }
                    serde_json::to_string_pretty(&json).expect("report serializes")
                }
            };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Uncertified => ExitCode::from(2),
                Status::Failed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
