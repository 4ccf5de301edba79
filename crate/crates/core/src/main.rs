use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bondy::builders::Variant;
use bondy::cli::{self, CliError, Format, SystemDocument};
use bondy::enumerate::{Kind, SearchOptions};

/// Bondy and non-Bondy set systems: check, build, enumerate.
#[derive(Parser)]
#[command(name = "bondy", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    NoEmpty,
    NoFull,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Minimal,
    Slender,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Output {
    /// Write the document here; `.txt` selects the plain-text format.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Document format for stdout.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Report λ, λ₁, ϰ, the Bondy verdict, minimality and slenderness.
    Check {
        /// System document (`-` for stdin, read as JSON).
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a slender non-Bondy system of size t on s elements.
    Build {
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "t")]
        t: usize,
        /// Build the size-2s system avoiding ∅ or S (requires t = 2s, s >= 5).
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Emit a JSON envelope with the derivation trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Output,
    },
    /// List isomorphism classes of size t on s <= 5 elements.
    Enumerate {
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "t")]
        t: usize,
        #[arg(long, value_enum, default_value = "minimal")]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Attainable sizes: exhaustive for s <= 5, constructive with --certify for 6..=12.
    Spectrum {
        #[arg(long = "s")]
        s: u32,
        #[arg(long, value_enum, default_value = "minimal")]
        kind: KindArg,
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Complement every member.
    Complement {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Reduce a non-Bondy system to an inclusion-minimal one.
    Minimize {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

fn read_document(path: &Path) -> Result<SystemDocument, CliError> {
    let (text, format) = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        (buf, Format::Json)
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        (text, Format::from_path(path))
    };
    Ok(SystemDocument::parse(&text, format)?)
}

fn emit_document(doc: &SystemDocument, out: &Output) -> Result<String, CliError> {
    match &out.output {
        Some(path) => {
            std::fs::write(path, doc.render(Format::from_path(path)))
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(doc.render(stdout_format(out.format))),
    }
}

fn stdout_format(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    }
}

fn kind(k: KindArg) -> Kind {
    match k {
        KindArg::Minimal => Kind::InclusionMinimal,
        KindArg::Slender => Kind::Slender,
    }
}

fn search_options() -> Result<SearchOptions, CliError> {
    Ok(SearchOptions {
        workers: cli::workers_from_env()?,
        ..SearchOptions::default()
    })
}

fn run(args: Args) -> Result<String, CliError> {
    match args.command {
        Command::Check { file, json } => cli::cmd_check(&read_document(&file)?, json),
        Command::Build {
            s,
            t,
            variant,
            trace,
            out,
        } => {
            let variant = variant.map(|v| match v {
                VariantArg::NoEmpty => Variant::NoEmpty,
                VariantArg::NoFull => Variant::NoFull,
            });
            let built = cli::cmd_build(s, t, variant)?;
            if out.output.is_none() {
                return Ok(cli::render_build(&built, trace, stdout_format(out.format)));
            }
            emit_document(&SystemDocument::from_system(&built.system), &out)?;
            // the document went to the file; the envelope still goes to stdout
            Ok(if trace {
                cli::render_build(&built, true, Format::Json)
            } else {
                String::new()
            })
        }
        Command::Enumerate { s, t, kind: k, json } => cli::cmd_enumerate(s, t, kind(k), search_options()?, json),
        Command::Spectrum {
            s,
            kind: k,
            certify,
            json,
        } => cli::cmd_spectrum(s, kind(k), certify, search_options()?, json),
        Command::Complement { file, out } => emit_document(&cli::cmd_complement(&read_document(&file)?)?, &out),
        Command::Minimize { file, out } => emit_document(&cli::cmd_minimize(&read_document(&file)?)?, &out),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
