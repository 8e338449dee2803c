use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cskit::cli::{self, ElementSpec, IntervalFormat, Property, DEFAULT_CAP};
use cskit::{RootSystem, TypeSpec, Word};

#[derive(Parser)]
#[command(name = "cskit", version, about = "Spherical, toric and wonderful Schubert variety combinatorics")]
struct Args {
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every element of a Weyl group.
    Classify {
        /// Root system, e.g. A3, B2, E6.
        group: TypeSpec,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite; exits with 1 on a counterexample.
    Verify {
        /// One of thm-spherical, thm-smooth-equiv, prop-four-equiv,
        /// bool-lattice, bruhat-oracle, bp-product, lmp-shape.
        property: Property,
        group: TypeSpec,
    },
    /// Report everything known about one element or word.
    Inspect {
        group: TypeSpec,
        /// Comma-separated simple reflection indices, e.g. 2,4,5,3.
        #[arg(long, conflicts_with = "oneline", required_unless_present = "oneline")]
        word: Option<Word>,
        /// One-line notation of a permutation (type A only), e.g. 4231.
        #[arg(long)]
        oneline: Option<String>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Emit the Bruhat interval below a reduced word.
    Interval {
        group: TypeSpec,
        #[arg(long)]
        word: Word,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> cskit::Result<()> {
    match out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(args: Args) -> cskit::Result<bool> {
    match args.command {
        Command::Classify { group, format, out } => {
            let rs = RootSystem::from_spec(group)?;
            let records = cli::classify(&rs, args.cap)?;
            let text = match format {
                TableFormat::Json => cli::records_to_json(&rs, &records)?,
                TableFormat::Csv => cli::records_to_csv(&records)?,
            };
            let bad: Vec<String> = records.iter().flat_map(|r| r.inconsistencies()).collect();
            for b in &bad {
                eprintln!("inconsistent record: {b}");
            }
            write_output(out.as_ref(), &text)?;
            Ok(bad.is_empty())
        }
        Command::Verify { property, group } => {
            let rs = RootSystem::from_spec(group)?;
            let report = cli::verify(property, &rs, args.cap)?;
            print!("{}", report.to_json()?);
            eprintln!(
                "{} {}: {} ({} checked, {} counterexamples)",
                report.property,
                report.group,
                if report.pass { "PASS" } else { "FAIL" },
                report.checked,
                report.counterexamples.len()
            );
            Ok(report.pass)
        }
        Command::Inspect {
            group,
            word,
            oneline,
            json,
        } => {
            let rs = RootSystem::from_spec(group)?;
            let spec = match (word, oneline) {
                (Some(w), _) => ElementSpec::Word(w),
                (None, Some(s)) => ElementSpec::OneLine(s),
                (None, None) => unreachable!("clap requires one of --word/--oneline"),
            };
            let report = cli::inspect(&rs, &spec)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                print!("{}", report.to_json()?);
            } else {
                print!("{}", report.to_text());
            }
            Ok(true)
        }
        Command::Interval {
            group,
            word,
            format,
        } => {
            let rs = RootSystem::from_spec(group)?;
            let format = match format {
                GraphFormat::Dot => IntervalFormat::Dot,
                GraphFormat::Json => IntervalFormat::Json,
            };
            print!("{}", cli::interval(&rs, &word, format)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
