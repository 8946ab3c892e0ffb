//! `leibniz`: command-line front end for the `leibniz` library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 unsupported field or exhausted oracle budget.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz::format::{print_algebra, AlgebraFile};
use leibniz::oracle::{Budget, DEFAULT_MAX_SUBSPACES};
use leibniz::report::VerificationReport;
use leibniz::{corpus, dispatch_field, Error, FieldDesc, Status, Q};

use commands::{IdealKind, Options, Verb};
use output::Output;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact computations with finite-dimensional Leibniz algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include certificate details and full ideal lists.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Algebra file.
    path: Option<PathBuf>,
    /// Corpus entry instead of a file, e.g. `example2(2,1)`.
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args)]
struct Input {
    #[command(flatten)]
    source: Source,
    /// Work over this field instead of the file's (a file over Q may be
    /// reduced to a prime field).
    #[arg(long)]
    field: Option<FieldDesc>,
    /// Maximum number of subspaces an exhaustive scan may visit.
    #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity on all basis triples.
    Validate(Input),
    /// Dimension, Lie/solvable/nilpotent flags, kernel and center.
    Info(Input),
    /// Leibniz kernel (span of all squares).
    Kernel(Input),
    /// Quotient by the Leibniz kernel.
    Liesation(Input),
    /// Lower central and derived series.
    Series(Input),
    /// Largest nilpotent ideal, with certificates.
    Nilradical(Input),
    /// Largest solvable ideal, with certificates.
    Radical(Input),
    /// Frattini ideal.
    Frattini(Input),
    /// Quotient by an ideal.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Which ideal to divide by.
        #[arg(long, value_enum, default_value_t = IdealKind::Kernel)]
        ideal: IdealKind,
        /// Explicit ideal as rows, e.g. `0,1;1,0`.
        #[arg(long, conflicts_with = "ideal")]
        rows: Option<String>,
    },
    /// Search for a subalgebra B with L = I + B and I ∩ B inside φ(B).
    FindB(Input),
    /// Run every structural check and print a consolidated report.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Subalgebra B as rows, e.g. `1,-1`; searched for when omitted.
        #[arg(long)]
        b: Option<String>,
    },
    /// List or emit corpus algebras.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Exhaustive scan of the subspace lattice over a prime field.
    OracleScan(Input),
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Names and dimensions of the built-in algebras.
    List,
    /// Print an entry in the algebra file format.
    Emit {
        name: String,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Failure of a whole invocation, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotLeibniz { .. }
            | Error::PremiseViolation { .. }
            | Error::TheoremViolation(_)
            | Error::InternalInconsistency(_) => 1,
            Error::Unsupported(_) | Error::UnsupportedField { .. } | Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        let mut message = e.to_string();
        if let Error::NotLeibniz { .. } = e {
            message.push_str(" (run `validate` to list the failing triples)");
        }
        Failure { code, message }
    }
}

/// What to print on success.
enum Printed {
    Report(Box<Output>),
    /// Verbatim text, e.g. an emitted algebra file.
    Raw(String),
}

fn load(source: &Source) -> Result<AlgebraFile, Failure> {
    if let Some(name) = &source.corpus {
        let entry = corpus::by_name(name)?;
        return Ok(AlgebraFile::from_algebra(&entry.algebra));
    }
    let path = source.path.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let file = text.parse::<AlgebraFile>().map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Failure::usage(format!("{}:{line}:{column}: {message}", path.display()))
        }
        e => e.into(),
    })?;
    Ok(file)
}

fn run_on_input(input: &Input, verb: Verb, verbose: bool) -> Result<Printed, Failure> {
    let file = load(&input.source)?;
    let field = input.field.unwrap_or(file.field);
    let opts = Options {
        budget: Budget {
            max_subspaces: input.budget,
        },
        verbose,
    };
    let result = dispatch_field!(field, F => commands::run::<F>(&file, &verb, &opts)).map_err(|desc| Error::UnsupportedField {
        operation: "field arithmetic",
        field: desc,
        alternatives: "Q, F2, F3, F5, F7, F11, F13",
    })?;
    Ok(Printed::Report(Box::new(result?)))
}

fn corpus_command(action: &CorpusAction, format: Format) -> Result<Printed, Failure> {
    match action {
        CorpusAction::List => {
            let mut r = VerificationReport::new::<Q>("corpus");
            for e in corpus::all() {
                r.value(e.name.clone(), format!("dim {}", e.algebra.dim()));
            }
            Ok(Printed::Report(Box::new(Output::new(r.finish()))))
        }
        CorpusAction::Emit { name, output } => {
            let entry = corpus::by_name(name)?;
            let text = print_algebra(&entry.algebra);
            if let Some(path) = output {
                std::fs::write(path, &text)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            } else if format == Format::Text {
                return Ok(Printed::Raw(text));
            }
            let mut r = VerificationReport::new::<Q>("corpus-emit");
            r.value("name", &entry.name).value("dim", entry.algebra.dim());
            if let Some(path) = output {
                r.value("written", path.display());
            }
            Ok(Printed::Report(Box::new(Output::new(r.finish()).with_algebra(&entry.name, text))))
        }
    }
}

fn execute(cli: &Cli) -> Result<Printed, Failure> {
    let v = cli.verbose;
    match &cli.command {
        Command::Validate(i) => run_on_input(i, Verb::Validate, v),
        Command::Info(i) => run_on_input(i, Verb::Info, v),
        Command::Kernel(i) => run_on_input(i, Verb::Kernel, v),
        Command::Liesation(i) => run_on_input(i, Verb::Liesation, v),
        Command::Series(i) => run_on_input(i, Verb::Series, v),
        Command::Nilradical(i) => run_on_input(i, Verb::Nilradical, v),
        Command::Radical(i) => run_on_input(i, Verb::Radical, v),
        Command::Frattini(i) => run_on_input(i, Verb::Frattini, v),
        Command::Quotient { input, ideal, rows } => run_on_input(
            input,
            Verb::Quotient {
                ideal: *ideal,
                rows: rows.clone(),
            },
            v,
        ),
        Command::FindB(i) => run_on_input(i, Verb::FindB, v),
        Command::Verify { input, b } => run_on_input(input, Verb::Verify { b: b.clone() }, v),
        Command::Corpus { action } => corpus_command(action, cli.format),
        Command::OracleScan(i) => run_on_input(i, Verb::OracleScan, v),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(Printed::Raw(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Printed::Report(out)) => {
            match cli.format {
                Format::Text => emit(&out.to_text()),
                Format::Json => emit(&format!("{}\n", out.to_json())),
            }
            match out.report.status {
                Status::Fail => ExitCode::from(1),
                Status::Pass | Status::NotApplicable => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}
