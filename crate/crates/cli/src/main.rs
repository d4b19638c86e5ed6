mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skein_core::verify::Check;
use skein_core::Guard;

/// Quantum dimensions, Hecke algebra idempotents and Homfly polynomials in
/// exact arithmetic.
///
/// Partitions are written as comma-separated decreasing row lengths, e.g.
/// `4,2,1`. Braid words are whitespace-separated signed generator indices,
/// e.g. `1 -2 1` for σ1 σ2^-1 σ1.
#[derive(Debug, Parser)]
#[command(name = "skein", version)]
struct Cli {
    /// Widen the size guards to this many strands or cells.
    #[arg(long, global = true, env = "SKEIN_MAX_STRANDS", value_name = "N")]
    unsafe_max: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quantum dimension of the sl(N) irreducible for a partition.
    Qdim {
        #[arg(short, long, allow_hyphen_values = true)]
        partition: String,
        #[arg(short = 'N', long = "rank", value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// The scalar α_λ with e_λ^2 = α_λ e_λ.
    Alpha {
        #[arg(short, long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Framed Homfly polynomial of a braid closure.
    Homfly {
        #[arg(short = 'n', long)]
        strands: usize,
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
        /// Divide out the writhe and the unknot.
        #[arg(long)]
        normalized: bool,
    },
    /// α_λ, quantum dimension and classical dimension for all small partitions.
    Table {
        #[arg(long)]
        max_cells: usize,
        #[arg(short = 'N', long = "rank", value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Check the closed formulas against direct Hecke algebra computation.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_cells: usize,
        /// Comma-separated subset of suites; all when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Vec<Check>,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check `{s}`; expected one of {}", names.join(", "))
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let guard = cli.unsafe_max.map_or(Guard::default(), |m| Guard::default().widened(m));
    let out = match cli.command {
        Command::Qdim { partition, n, format } => {
            commands::qdim(&partition, n, matches!(format, TextOrJson::Json))?
        }
        Command::Alpha { partition } => commands::alpha(&partition)?,
        Command::Homfly {
            strands,
            word,
            normalized,
        } => commands::homfly(strands, &word, normalized, &guard)?,
        Command::Table { max_cells, n, format } => {
            commands::table(max_cells, n, matches!(format, TableFormat::Json), cli.unsafe_max)?
        }
        Command::Verify { max_cells, checks } => {
            let (text, ok) = commands::verify(max_cells, &checks, cli.unsafe_max, &guard)?;
            print!("{text}");
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) });
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
