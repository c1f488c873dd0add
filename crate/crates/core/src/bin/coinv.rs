use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coinvariant::arrangement::{Arrangement, HyperplaneSet};
use coinvariant::groebner::MonomialOrder;
use coinvariant::verify::{run_suite, write_report, Format, RunConfig, Suite};

#[derive(Parser)]
#[command(name = "coinv", version, about = "Exact checks for coinvariant algebras and southwest arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a theorem suite and write a report; exits nonzero if any check fails.
    Verify {
        /// Suite name (see `coinv list`).
        suite: String,
        /// Largest n; every n' <= n is checked.
        #[arg(long)]
        n: Option<usize>,
        /// Allow the expensive n = 5 sweeps.
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Add seeded random instances where a suite samples.
        #[arg(long, value_name = "SEED")]
        sample: Option<u64>,
        /// Report path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        /// Prime for finite field point counts.
        #[arg(long)]
        prime: Option<u64>,
        /// Record elapsed milliseconds per check.
        #[arg(long)]
        timings: bool,
    },
    /// Pretty-print an object.
    Show {
        #[command(subcommand)]
        what: ShowCommand,
    },
    /// List the suites.
    List,
}

#[derive(Subcommand)]
enum ShowCommand {
    /// An arrangement such as "n=3; H:0-1,0-2,1-2".
    Arrangement { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

fn show_arrangement(spec: &str) -> Result<String, coinvariant::Error> {
    let a: Arrangement = spec.parse()?;
    let mut s = format!("{a}\n\n{}\n\n", a.diagram());
    s.push_str(&format!("hyperplanes: {}\n", a.len()));
    s.push_str(&format!("southwest: {}\n", a.is_southwest()));
    s.push_str(&format!("essential: {}\n", a.is_essential()));
    s.push_str(&format!("chordal: {}\n", a.is_chordal()));
    if a.is_southwest() {
        let h: Vec<String> = a.h_sequence().iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("h-sequence: ({})\n", h.join(",")));
    }
    if a.n() <= 7 {
        s.push_str(&format!("characteristic polynomial: {}\n", a.characteristic_polynomial()?));
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for s in Suite::ALL {
                println!("{:<18} n={}  {}", s.name(), s.default_n(), s.description());
            }
            ExitCode::SUCCESS
        }
        Command::Show { what: ShowCommand::Arrangement { spec } } => match show_arrangement(&spec) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify { suite, n, exhaustive, sample, out, format, workers, order, prime, timings } => {
            let config = RunConfig {
                max_n: n,
                exhaustive,
                sample,
                workers,
                order: match order {
                    OrderArg::Grevlex => MonomialOrder::Grevlex,
                    OrderArg::Lex => MonomialOrder::Lex,
                },
                prime,
                timings,
                fault: None,
            };
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            let reports = match run_suite(&suite, &config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let written = match &out {
                Some(path) => coinvariant::verify::emit_report(&reports, format, path),
                None => write_report(&reports, format, std::io::stdout().lock()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            let _ = writeln!(std::io::stderr(), "{suite}: {} checks, {failed} failed", reports.len());
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
