//! `sbd` — train, apply, and evaluate the sentence-boundary labeler.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use sbd_core::SbdError;

mod commands;
mod config;

/// CLI-level error, carrying the exit-code class.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation or configuration (exit 1).
    #[error("{0}")]
    Usage(String),
    /// Malformed data files or incompatible artifacts (exit 2).
    #[error("{0}")]
    Data(String),
    /// Training produced non-finite values (exit 3).
    #[error("{0}")]
    Divergence(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Divergence(_) => 3,
        }
    }
}

impl From<SbdError> for CliError {
    fn from(e: SbdError) -> CliError {
        match e {
            SbdError::Divergence { .. } => CliError::Divergence(e.to_string()),
            SbdError::Contract(_) | SbdError::Dimension { .. } => CliError::Usage(e.to_string()),
            SbdError::Parse { .. }
            | SbdError::ModelFormat(_)
            | SbdError::CandidateMismatch { .. }
            | SbdError::Io(_) => CliError::Data(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sbd",
    version,
    about = "Trainable sentence-boundary disambiguation",
    long_about = "Labels candidate punctuation marks (. ! ?) as sentence boundaries using \
part-of-speech prior probabilities and a small feed-forward network."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a model on a one-sentence-per-line gold corpus
    Train(TrainArgs),
    /// Label the candidates in a text file with a trained model
    Label(LabelArgs),
    /// Score a trained model against a gold corpus
    Eval(EvalArgs),
    /// Run the context-size / hidden-units experiment grid
    Grid(GridArgs),
    /// Show what is inside a model, lexicon, corpus, or tokenized text
    Inspect(InspectArgs),
}

/// Options shared by every data-touching subcommand. Each flag can also be a
/// `key=value` line (same name) in the --config file; flags win.
#[derive(Args, Debug)]
struct CommonArgs {
    /// key=value config file; every key is overridable by the flag of the same name
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lexicon file (word TAG/count ...)
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Tag map file (RAWTAG categoryname)
    #[arg(long)]
    tagmap: Option<PathBuf>,
    /// Distribution for unknown lowercase words: open_class_uniform | uniform_all
    #[arg(long, value_name = "POLICY")]
    unknown_lowercase: Option<String>,
    /// Context padding past document edges: neutral | zeros
    #[arg(long, value_name = "POLICY")]
    padding: Option<String>,
}

#[derive(Args, Debug)]
struct NetArgs {
    /// Context tokens per candidate (even)
    #[arg(long)]
    context_k: Option<usize>,
    /// Hidden units
    #[arg(long)]
    hidden_j: Option<usize>,
    #[arg(long)]
    learning_rate: Option<f64>,
    #[arg(long)]
    max_epochs: Option<usize>,
    /// Epochs without cross-error improvement before stopping
    #[arg(long)]
    patience: Option<usize>,
    /// Seed for weight initialization
    #[arg(long)]
    seed: Option<u64>,
    /// Initial weights are uniform in [-init-range, init-range]
    #[arg(long)]
    init_range: Option<f64>,
}

#[derive(Args, Debug)]
struct SplitArgs {
    /// Training set size (candidates)
    #[arg(long)]
    train_size: Option<usize>,
    /// Cross-validation set size (candidates)
    #[arg(long)]
    cross_size: Option<usize>,
    /// Seed for the train/cross/test shuffle
    #[arg(long)]
    split_seed: Option<u64>,
}

#[derive(Args, Debug)]
struct TrainArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    net: NetArgs,
    #[command(flatten)]
    split: SplitArgs,
    /// Gold corpus, one sentence per line
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Where to write the trained model
    #[arg(long)]
    model: Option<PathBuf>,
    /// Fold the corpus before training: lower | upper
    #[arg(long)]
    case: Option<String>,
}

#[derive(Args, Debug)]
struct LabelArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Trained model file
    #[arg(long)]
    model: Option<PathBuf>,
    /// Text file to label
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    t0: Option<f64>,
    #[arg(long)]
    t1: Option<f64>,
    /// Emit the input text with a marker after each boundary instead of records
    #[arg(long)]
    annotate: bool,
    /// Marker string for --annotate (default: newline)
    #[arg(long)]
    marker: Option<String>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Trained model file
    #[arg(long)]
    model: Option<PathBuf>,
    /// Gold corpus, one sentence per line
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    t0: Option<f64>,
    #[arg(long)]
    t1: Option<f64>,
    /// Evaluate under a case fold: lower | upper
    #[arg(long)]
    case: Option<String>,
    /// Write a machine-readable key=value run summary here
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Tokens of context recorded around each error
    #[arg(long)]
    snippet_window: Option<usize>,
    /// Print up to this many error snippets
    #[arg(long)]
    show_errors: Option<usize>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    net: NetArgs,
    #[command(flatten)]
    split: SplitArgs,
    /// Gold corpus, one sentence per line
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Context sizes to sweep, comma separated (default 4,6,8)
    #[arg(long)]
    k_values: Option<String>,
    /// Hidden-unit counts to sweep, comma separated (default 2)
    #[arg(long)]
    j_values: Option<String>,
    /// First table column: context | hidden (default: inferred)
    #[arg(long)]
    vary: Option<String>,
    /// Fold the corpus first: lower | upper
    #[arg(long)]
    case: Option<String>,
    /// Write one key=value summary file per grid cell into this directory
    #[arg(long)]
    summary_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InspectArgs {
    /// Model file to describe
    #[arg(long)]
    model: Option<PathBuf>,
    /// Lexicon to describe (requires --tagmap)
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    tagmap: Option<PathBuf>,
    /// Gold corpus to describe
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Text file to tokenize and dump
    #[arg(long)]
    text: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version are normal exits; anything else is a usage error.
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let result = match cli.command {
        Command::Train(args) => commands::train(args),
        Command::Label(args) => commands::label(args),
        Command::Eval(args) => commands::eval(args),
        Command::Grid(args) => commands::grid(args),
        Command::Inspect(args) => commands::inspect(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_documented_exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
        assert_eq!(CliError::Data("x".into()).exit_code(), 2);
        assert_eq!(CliError::Divergence("x".into()).exit_code(), 3);
    }

    #[test]
    fn core_errors_map_to_the_right_classes() {
        let divergence: CliError = SbdError::Divergence { epoch: 3 }.into();
        assert_eq!(divergence.exit_code(), 3);
        let parse: CliError = SbdError::Parse {
            line: 1,
            message: "x".into(),
        }
        .into();
        assert_eq!(parse.exit_code(), 2);
        let contract: CliError = SbdError::Contract("x".into()).into();
        assert_eq!(contract.exit_code(), 1);
        let dimension: CliError = SbdError::Dimension { expected: 1, got: 2 }.into();
        assert_eq!(dimension.exit_code(), 1);
    }
}
