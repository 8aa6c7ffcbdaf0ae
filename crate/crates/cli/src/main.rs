use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use realgraph_cli::error::{CliError, EXIT_OK};
use realgraph_cli::suite::{DEFAULT_SAMPLES, DEFAULT_SEED};
use realgraph_cli::{
    cmd_export_gap, cmd_graph, cmd_report, cmd_verify_paper, parse_spec_arg, GraphChoice, GraphFormat,
    SuiteConfig,
};
use realgraph_core::groupkit::DEFAULT_CAP;

/// Real elements, prime graphs and real prime graphs of finite groups.
///
/// Group specs: named:<family>[:<param>], paper:g150, paper:h199650,
/// twisted:<k>, file:<path>.
#[derive(Parser)]
#[command(name = "realgraph", version)]
struct Cli {
    /// Largest group the enumerator may build.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, real spectrum, graphs and structural subgroup orders.
    Report {
        spec: String,
        /// Emit JSON with sorted keys instead of a key: value table.
        #[arg(long)]
        json: bool,
    },
    /// The prime graph or real prime graph.
    Graph {
        spec: String,
        #[command(flatten)]
        which: WhichGraph,
        #[command(flatten)]
        format: Format,
    },
    /// Check the built-in catalog of claims; exit 1 if any fails.
    VerifyPaper {
        /// Comma-separated claim id prefixes.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Seed for sampled identities, in hex.
        #[arg(long, value_parser = parse_hex, default_value = "0xC0FFEE")]
        seed: u64,
        /// Samples per sampled identity.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Generator listing in a plain interchange format.
    ExportGap { spec: String },
}

#[derive(Args)]
#[group(multiple = false)]
struct WhichGraph {
    /// Real prime graph (default).
    #[arg(long)]
    real: bool,
    /// Prime graph on all prime divisors of the order.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Graphviz output (default).
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    json: bool,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("bad hex seed `{s}`: {e}"))
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let cap = cli.cap;
    match cli.command {
        Command::Report { spec, json } => Ok((cmd_report(&parse_spec_arg(&spec)?, json, cap)?, EXIT_OK)),
        Command::Graph { spec, which, format } => {
            let which = if which.full { GraphChoice::Full } else { GraphChoice::Real };
            let format = if format.json { GraphFormat::Json } else { GraphFormat::Dot };
            Ok((cmd_graph(&parse_spec_arg(&spec)?, which, format, cap)?, EXIT_OK))
        }
        Command::VerifyPaper { only, seed, samples } => {
            let only: Vec<String> = only.into_iter().filter(|s| !s.is_empty()).collect();
            cmd_verify_paper(SuiteConfig { seed, samples, cap }, &only)
        }
        Command::ExportGap { spec } => Ok((cmd_export_gap(&parse_spec_arg(&spec)?, cap)?, EXIT_OK)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    debug_assert_eq!(DEFAULT_SEED, 0xC0FFEE);
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
