use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use z2z2u::codeword::DEFAULT_BUDGET;
use z2z2u::gray::Layout;
use z2z2u::workbench::{self, Settings, DEFAULT_SEED};
use z2z2u::CodeSpec;

#[derive(Parser, Debug)]
#[command(
    name = "z2z2u",
    version,
    about = "Build and check additive (1+u)-constacyclic codes over Z2 x (F2 + uF2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest ambient size (number of words) any command may enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,

    /// Seed for randomized sampling.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    Interleaved,
    Block,
}

impl From<LayoutArg> for Layout {
    fn from(l: LayoutArg) -> Layout {
        match l {
            LayoutArg::Interleaved => Layout::Interleaved,
            LayoutArg::Block => Layout::Block,
        }
    }
}

/// A spec from a file or from inline fields.
#[derive(Args, Debug)]
struct SpecSource {
    /// Spec file with alpha, beta, case, a, l, g and f fields.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "case", "a", "l", "g", "f"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    beta: Option<usize>,
    #[arg(long)]
    case: Option<u8>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    f: Option<String>,
}

impl SpecSource {
    fn load(&self) -> Result<CodeSpec> {
        if let Some(path) = &self.spec {
            let src = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return CodeSpec::parse(&src).with_context(|| format!("parsing {}", path.display()));
        }
        let mut src = String::new();
        let fields = [
            ("alpha", self.alpha.map(|v| v.to_string())),
            ("beta", self.beta.map(|v| v.to_string())),
            ("case", self.case.map(|v| v.to_string())),
            ("a", self.a.clone()),
            ("l", self.l.clone()),
            ("g", self.g.clone()),
            ("f", self.f.clone()),
        ];
        if fields.iter().all(|(_, v)| v.is_none()) {
            bail!("a spec is required: pass --spec FILE or inline --alpha/--beta/--case/--a/--g fields");
        }
        for (k, v) in fields {
            if let Some(v) = v {
                src.push_str(&format!("{k} = {v}\n"));
            }
        }
        CodeSpec::parse(&src).context("parsing inline spec")
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 over GF(2).
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate the code generated by a spec.
    Construct {
        #[command(flatten)]
        spec: SpecSource,
        /// List every codeword.
        #[arg(long)]
        emit_words: bool,
    },
    /// Type parameters from the formulas and from enumeration.
    Params {
        #[command(flatten)]
        spec: SpecSource,
    },
    /// The dual code and the dual generator formulas.
    Dual {
        #[command(flatten)]
        spec: SpecSource,
    },
    /// Gray image parameters.
    Gray {
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long, value_enum, default_value_t = LayoutArg::Block)]
        layout: LayoutArg,
        /// List every image word as hex.
        #[arg(long)]
        emit_words: bool,
    },
    /// Run every check that applies to a spec.
    Verify {
        #[command(flatten)]
        spec: SpecSource,
    },
    /// Count all codes of given lengths by enumeration.
    Census {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Rank all specs up to the given lengths by Gray-image parameters.
    Search {
        #[arg(long)]
        alpha_max: usize,
        #[arg(long)]
        beta_max: usize,
        #[arg(long, default_value_t = 0)]
        d_min: u32,
        /// Keep only the first rows.
        #[arg(long)]
        top: Option<usize>,
    },
}

fn emit<T: Serialize>(report: &T, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => workbench::to_text(report)?,
        Format::Json => workbench::to_json(report)?,
    })
}

fn run(cli: &Cli) -> Result<String> {
    let s = Settings {
        budget: cli.budget,
        seed: cli.seed,
    };
    let f = cli.format;
    match &cli.command {
        Command::Factor { n } => emit(&workbench::run_factor(*n)?, f),
        Command::Construct { spec, emit_words } => emit(&workbench::run_construct(&spec.load()?, *emit_words, s)?, f),
        Command::Params { spec } => emit(&workbench::run_params(&spec.load()?, s)?, f),
        Command::Dual { spec } => emit(&workbench::run_dual(&spec.load()?, s)?, f),
        Command::Gray {
            spec,
            layout,
            emit_words,
        } => emit(
            &workbench::run_gray(&spec.load()?, (*layout).into(), *emit_words, s)?,
            f,
        ),
        Command::Verify { spec } => emit(&workbench::run_verify(&spec.load()?, s)?, f),
        Command::Census { alpha, beta } => emit(&workbench::run_census(*alpha, *beta, s)?, f),
        Command::Search {
            alpha_max,
            beta_max,
            d_min,
            top,
        } => emit(&workbench::run_search(*alpha_max, *beta_max, *d_min, *top, s)?, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
