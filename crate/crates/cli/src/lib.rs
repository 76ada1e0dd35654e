//! Command-line front end: argument parsing, exit codes and JSON output.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use matfin::error::Error;
use matfin::io::commands::{element_order_report, is_finite_report, oracle_report, order_report, IsFiniteOptions, OrderOptions};
use matfin::io::parse_group_file;

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "matfin", version, about = "Finiteness and order of matrix groups over F_q(X1, ..., Xm)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the group is finite.
    IsFinite {
        file: PathBuf,
        /// Treat the group as nilpotent and test the p^gamma-th powers.
        #[arg(long)]
        nilpotent: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest extension degree searched for an admissible point.
        #[arg(long, default_value_t = IsFiniteOptions::default().max_nu)]
        max_nu: usize,
        /// Include one record per algorithm step.
        #[arg(long)]
        trace: bool,
    },
    /// Order of a group known to be finite.
    Order {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test injectivity over the point's own field (cyclic or completely reducible groups only).
        #[arg(long)]
        cr_shortcut: bool,
        /// Admissible points tried before giving up.
        #[arg(long, default_value_t = OrderOptions::default().budget)]
        budget: usize,
    },
    /// Decide whether the single generator has finite order.
    ElementOrderFinite { file: PathBuf },
    /// Brute-force closure enumeration with an element cap.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        cap: usize,
    },
}

fn error_json(err: &Error) -> String {
    json!({"error": err.to_string()}).to_string()
}

fn load(path: &PathBuf) -> Result<matfin::io::Group, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_group_file(&text)
}

fn execute(command: Command) -> (i32, String) {
    let result = (|| match command {
        Command::IsFinite { file, nilpotent, seed, max_nu, trace } => {
            let group = load(&file)?;
            let opts = IsFiniteOptions { nilpotent, seed, max_nu, trace };
            Ok((EXIT_DECIDED, is_finite_report(&group, &opts)?.to_json()))
        }
        Command::Order { file, seed, cr_shortcut, budget } => {
            let group = load(&file)?;
            let opts = OrderOptions { seed, cr_shortcut, budget, ..OrderOptions::default() };
            Ok((EXIT_DECIDED, order_report(&group, &opts)?.to_json()))
        }
        Command::ElementOrderFinite { file } => {
            let group = load(&file)?;
            Ok((EXIT_DECIDED, element_order_report(&group)?.to_json()))
        }
        Command::Oracle { file, cap } => {
            if cap == 0 {
                return Err(Error::Usage("--cap must be at least 1".into()));
            }
            let group = load(&file)?;
            let (report, decided) = oracle_report(&group, cap);
            Ok((if decided { EXIT_DECIDED } else { EXIT_RESOURCE }, report.to_json()))
        }
    })();
    match result {
        Ok(out) => out,
        Err(e) => (if e.is_resource() { EXIT_RESOURCE } else { EXIT_INPUT }, error_json(&e)),
    }
}

/// Runs the tool on `args` (program name first) and returns the exit status
/// with the text for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_DECIDED, e.to_string()),
                _ => (EXIT_INPUT, json!({"error": e.to_string().trim_end()}).to_string()),
            };
        }
    };
    // The library reports bad input through errors; this guards the exit-code
    // contract against anything that slips through.
    std::panic::set_hook(Box::new(|_| {}));
    let out = std::panic::catch_unwind(|| execute(cli.command))
        .unwrap_or_else(|_| (EXIT_RESOURCE, json!({"error": "internal failure"}).to_string()));
    let _ = std::panic::take_hook();
    out
}
