use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stringcentre::report::{
    self, render_examples_text, render_oracle_text, render_report_text, render_table1_text,
    DEFAULT_DENOMINATOR_BOUND,
};

/// Exact Drinfel'd centres of String 2-groups.
#[derive(Parser)]
#[command(name = "stringcentre", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the centre for a spec document (file or stdin).
    Compute {
        /// path to the spec document; stdin when omitted
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// reject kernel rationals with denominators above this bound
        #[arg(long, default_value_t = DEFAULT_DENOMINATOR_BOUND)]
        denominator_bound: u64,
    },
    /// Reproduce the simply-connected results table with a MATCH/FLAG column.
    Table1 {
        #[arg(long, default_value_t = 6)]
        max_level: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force verification for Z/n with the standard cocycle class k.
    Oracle {
        n: u64,
        k: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the worked-example fixture battery.
    Examples {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> stringcentre::Result<ExitCode> {
    match cli.command {
        Command::Compute {
            file,
            format,
            denominator_bound,
        } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| {
                    stringcentre::Error::SpecSyntax(format!("{}: {e}", path.display()))
                })?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| stringcentre::Error::SpecSyntax(format!("stdin: {e}")))?;
                    buf
                }
            };
            let spec = report::parse_spec(&text, denominator_bound)?;
            let (doc, code) = report::run(&spec)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&doc).expect("serialise")),
                Format::Text => print!("{}", render_report_text(&doc)),
            }
            Ok(ExitCode::from(code as u8))
        }
        Command::Table1 { max_level, format } => {
            let rep = report::table1(max_level.max(1))?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&rep).expect("serialise")),
                Format::Text => print!("{}", render_table1_text(&rep)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { n, k, format } => {
            let rep = report::oracle_report(n, k)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&rep).expect("serialise")),
                Format::Text => print!("{}", render_oracle_text(&rep)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Examples { format } => {
            let results = report::examples_battery()?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&results).expect("serialise"))
                }
                Format::Text => print!("{}", render_examples_text(&results)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
