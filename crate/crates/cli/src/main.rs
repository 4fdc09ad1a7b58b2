//! `opskit`: one binary over the whole toolkit.
//!
//! Exit codes follow one contract everywhere: 0 for a clean run, 1 when
//! `validate` found violations, 2 for operational failures (bad arguments,
//! unreadable files, parse errors). Output is plain text by default and
//! machine-readable behind `--format json`; nothing is colored and nothing
//! depends on a TTY, so identical invocations produce identical bytes.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod load;

use commands::OutputFormat;

#[derive(Parser)]
#[command(
    name = "opskit",
    version,
    about = "Build, validate, query, and publish the OPS social participation vocabulary"
)]
struct Cli {
    /// Output format: text or json
    #[arg(long, global = true, default_value = "text")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a profile's Turtle document
    Build {
        /// Profile to build: core, restricted, or expanded
        #[arg(long, default_value = "core")]
        profile: String,
        /// Where to write the Turtle file
        #[arg(long)]
        out: PathBuf,
    },
    /// Check Turtle data against a profile's axioms
    Validate {
        /// Turtle data files
        #[arg(required = true)]
        data: Vec<PathBuf>,
        /// Profile whose axioms apply: core, restricted, or expanded
        #[arg(long, default_value = "core")]
        profile: String,
    },
    /// Run a SELECT query over Turtle data
    Query {
        /// Query text; use --file to read it from a file instead
        query: Option<String>,
        /// Read the query from a file
        #[arg(long, conflicts_with = "query")]
        file: Option<PathBuf>,
        /// Turtle data files (repeatable)
        #[arg(long)]
        data: Vec<PathBuf>,
        /// Profile whose vocabulary and prefixes apply
        #[arg(long, default_value = "core")]
        profile: String,
        /// Query the raw union graph without materializing inferences
        #[arg(long)]
        no_inference: bool,
    },
    /// Compare two schema documents
    Diff {
        /// The older schema document
        old: PathBuf,
        /// The newer schema document
        new: PathBuf,
    },
    /// Convert a CSV export to Turtle with a mapping spec
    Ingest {
        /// Mapping spec file
        #[arg(long)]
        spec: PathBuf,
        /// CSV file with a header row
        #[arg(long)]
        csv: PathBuf,
        /// Where to write the Turtle output
        #[arg(long)]
        out: PathBuf,
        /// Profile whose vocabulary the mapping may use
        #[arg(long, default_value = "core")]
        profile: String,
    },
    /// Serve the dereferencing front-end and SPARQL endpoint
    Serve {
        /// Flat key=value config file (bind, base, profile, data, inference)
        #[arg(long)]
        config: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format.as_str() {
        "text" => OutputFormat::Text,
        "json" => OutputFormat::Json,
        other => {
            eprintln!("error: unknown format {other:?} (expected text or json)");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Build { profile, out } => commands::build(&profile, &out, format),
        Command::Validate { data, profile } => commands::validate(&data, &profile, format),
        Command::Query {
            query,
            file,
            data,
            profile,
            no_inference,
        } => commands::query(query, file, &data, &profile, no_inference, format),
        Command::Diff { old, new } => commands::diff(&old, &new, format),
        Command::Ingest {
            spec,
            csv,
            out,
            profile,
        } => commands::ingest(&spec, &csv, &out, &profile, format),
        Command::Serve { config } => commands::serve(&config),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
