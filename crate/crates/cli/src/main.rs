mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "prees", version, about = "Finite prees, their universal groups and automatic structures")]
struct Cli {
    /// Human-readable text or one key=value record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Forward,
    Literal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Language {
    Combing,
    Geodesic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Geodesic,
    Combing,
    Pair,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the pree laws.
    Validate { pree: PathBuf },
    /// Check axioms A(4) and A(5), with counterexamples.
    Axioms { pree: PathBuf },
    /// Strongly reduce a word.
    Reduce {
        pree: PathBuf,
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether a word represents the identity.
    Solve {
        pree: PathBuf,
        word: String,
        /// Cross-check with the bounded neighbor search.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Decide whether a word is geodesic using the geodesic acceptor.
    Geodesic { pree: PathBuf, word: String },
    /// Enumerate the combing language.
    Comb {
        pree: PathBuf,
        #[arg(long, default_value_t = 6)]
        enumerate: usize,
        #[arg(long, value_enum, default_value_t = Reading::Forward)]
        reading: Reading,
    },
    /// Build the Cayley ball.
    Ball {
        pree: PathBuf,
        #[arg(short, long)]
        r: usize,
        /// Write element records to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check synchronous fellow traveling of language words.
    Fellow {
        pree: PathBuf,
        #[arg(short, long, default_value_t = 6)]
        r: usize,
        #[arg(short, long, default_value_t = 5)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Language::Combing)]
        language: Language,
        #[arg(long, value_enum, default_value_t = Reading::Forward)]
        reading: Reading,
    },
    /// Find a minimal van Kampen diagram for a boundary word.
    Diagram {
        pree: PathBuf,
        #[arg(long)]
        boundary: String,
        #[arg(long, default_value_t = 12)]
        max_area: usize,
        /// Write a Graphviz rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Export an automaton.
    ExportFsa {
        pree: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Reading::Forward)]
        reading: Reading,
        #[arg(long, conflicts_with = "text")]
        dot: Option<PathBuf>,
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Run the full verification suite.
    Verify {
        pree: PathBuf,
        #[arg(short, long, default_value_t = 6)]
        r: usize,
        #[arg(short, long, default_value_t = 5)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command, cli.format) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
