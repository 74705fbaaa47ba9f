//! Argument parsing, dispatch and output rendering for the `bitrep` binary.
//!
//! Every subcommand writes one JSON document (or plain text with `--output plain`) to stdout.
//! Failures become a single `{"error": code, "detail": text}` line on stderr and an exit code
//! from [`exit_code`].

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use bitrep::bitcore::{closure, DEFAULT_CLOSURE_LIMIT};
use bitrep::counting::{poset_to_instance, AbstractPoset};
use bitrep::optimize::{msc_to_mcs, MscInstance, SubsetAnswer};
use bitrep::registry::{CountOptions, Registry};
use bitrep::represent::decide_with;
use bitrep::{BitString, CnfFormula, Error, StringSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Closures larger than this are reported by size only.
pub const MAX_LISTED_STRINGS: usize = 4096;

pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const MALFORMED: i32 = 2;
    pub const RESOURCE: i32 = 3;
    pub const NOT_REPRESENTABLE: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(
    name = "bitrep",
    version,
    about = "Representability of binary strings under AND/OR/NOT"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Plain,
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// String-set file, or `-` for stdin.
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether TARGET is generable from the set, with a CNF witness.
    Decide {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        target: String,
        /// Also allow NOT.
        #[arg(long)]
        negation: bool,
    },
    /// Count the generable strings.
    Count {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        negation: bool,
        /// upper-sets, antichains or closure.
        #[arg(long)]
        method: Option<String>,
        /// Element limit for the closure method.
        #[arg(long, default_value_t = DEFAULT_CLOSURE_LIMIT)]
        limit: usize,
    },
    /// Smallest subset that still generates TARGET.
    Minrep {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        target: String,
        #[arg(long)]
        negation: bool,
        /// Exhaustive search instead of greedy.
        #[arg(long, conflicts_with = "method")]
        exact: bool,
        #[arg(long)]
        method: Option<String>,
    },
    /// Smallest subset that still generates every member.
    Minspan {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, conflicts_with = "method")]
        exact: bool,
        #[arg(long)]
        method: Option<String>,
    },
    /// Enumerate every generable string.
    Closure {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        negation: bool,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_LIMIT)]
        limit: usize,
    },
    /// Emit a string set whose generable strings correspond to the poset's antichains.
    FromPoset {
        #[command(flatten)]
        input: InputArg,
    },
    /// Emit the compare-set instance built from a set-cover instance.
    MscToMcs {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Decide,
    Count,
    Minrep,
    Minspan,
    Closure,
    FromPoset,
    MscToMcs,
}

/// A fully resolved invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: Action,
    pub input_path: PathBuf,
    pub target: Option<String>,
    pub negation: bool,
    /// Strategy name; `None` uses the registry default.
    pub method: Option<String>,
    pub limit: usize,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Self {
        let output = cli.output;
        let base = |subcommand, input: InputArg| RunConfig {
            subcommand,
            input_path: input.input,
            target: None,
            negation: false,
            method: None,
            limit: DEFAULT_CLOSURE_LIMIT,
            output,
        };
        let exact_or = |exact: bool, method: Option<String>| {
            if exact {
                Some("exact".to_string())
            } else {
                method
            }
        };
        match cli.command {
            Command::Decide {
                input,
                target,
                negation,
            } => RunConfig {
                target: Some(target),
                negation,
                ..base(Action::Decide, input)
            },
            Command::Count {
                input,
                negation,
                method,
                limit,
            } => RunConfig {
                negation,
                method,
                limit,
                ..base(Action::Count, input)
            },
            Command::Minrep {
                input,
                target,
                negation,
                exact,
                method,
            } => RunConfig {
                target: Some(target),
                negation,
                method: exact_or(exact, method),
                ..base(Action::Minrep, input)
            },
            Command::Minspan {
                input,
                exact,
                method,
            } => RunConfig {
                method: exact_or(exact, method),
                ..base(Action::Minspan, input)
            },
            Command::Closure {
                input,
                negation,
                limit,
            } => RunConfig {
                negation,
                limit,
                ..base(Action::Closure, input)
            },
            Command::FromPoset { input } => base(Action::FromPoset, input),
            Command::MscToMcs { input } => base(Action::MscToMcs, input),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io { path, source } => format!("{}: {source}", path.display()),
            CliError::Usage(msg) => msg.clone(),
        }
    }

    /// The one-line JSON document printed on stderr.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            error: &'a str,
            detail: String,
        }
        serde_json::to_string(&Doc {
            error: self.code(),
            detail: self.detail(),
        })
        .expect("plain strings serialize")
    }
}

pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Core(Error::NotRepresentable) => exit::NOT_REPRESENTABLE,
        CliError::Core(e) if e.is_resource_bound() => exit::RESOURCE,
        CliError::Core(Error::InternalInvariantViolation(_)) => exit::INTERNAL,
        _ => exit::MALFORMED,
    }
}

#[derive(Serialize)]
struct DecideDoc<'a> {
    representable: bool,
    witness: Option<&'a CnfFormula>,
}

#[derive(Serialize)]
struct CountDoc {
    count: String,
    classes: usize,
}

#[derive(Serialize)]
struct SubsetDoc<'a> {
    indices: &'a [usize],
    size: usize,
    method: &'a str,
    certified: bool,
}

#[derive(Serialize)]
struct ClosureDoc {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    strings: Option<Vec<String>>,
}

#[derive(Serialize)]
struct CompareDoc {
    items: usize,
    subsets: Vec<Vec<usize>>,
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn parse_target(config: &RunConfig) -> Result<BitString, CliError> {
    let text = config
        .target
        .as_deref()
        .ok_or_else(|| CliError::Usage("--target is required".into()))?;
    text.parse().map_err(CliError::Core)
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string(doc).expect("output documents serialize");
    out.push('\n');
    out
}

fn subset_output(answer: &SubsetAnswer, method: &str, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => json(&SubsetDoc {
            indices: &answer.chosen,
            size: answer.size(),
            method,
            certified: answer.certified,
        }),
        OutputFormat::Plain => {
            let list: Vec<String> = answer.chosen.iter().map(usize::to_string).collect();
            format!("{}\n", list.join(" "))
        }
    }
}

/// Runs one invocation against the built-in strategies and returns what goes to stdout.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    run_with(config, &Registry::default())
}

pub fn run_with(config: &RunConfig, registry: &Registry) -> Result<String, CliError> {
    let text = read_input(&config.input_path)?;
    let output = config.output;
    match config.subcommand {
        Action::Decide => {
            let w = StringSet::parse(&text)?;
            let s = parse_target(config)?;
            let verdict = decide_with(&w, &s, config.negation)?;
            Ok(match output {
                OutputFormat::Json => json(&DecideDoc {
                    representable: verdict.representable,
                    witness: verdict.witness.as_ref(),
                }),
                OutputFormat::Plain => match &verdict.witness {
                    Some(cnf) => format!("true\n{}\n", cnf.to_formula()),
                    None => "false\n".to_string(),
                },
            })
        }
        Action::Count => {
            let w = StringSet::parse(&text)?;
            let name = config.method.as_deref().unwrap_or(Registry::DEFAULT_COUNT);
            let opts = CountOptions {
                allow_negation: config.negation,
                limit: config.limit,
            };
            let report = registry.count(name)?.count(&w, &opts)?;
            Ok(match output {
                OutputFormat::Json => json(&CountDoc {
                    count: report.count.to_string(),
                    classes: report.classes,
                }),
                OutputFormat::Plain => format!("{}\n", report.count),
            })
        }
        Action::Minrep => {
            let w = StringSet::parse(&text)?;
            let s = parse_target(config)?;
            let name = config.method.as_deref().unwrap_or(Registry::DEFAULT_MINREP);
            let strategy = registry.minrep(name)?;
            let answer = strategy.solve(&w, &s, config.negation)?;
            Ok(subset_output(&answer, strategy.name(), output))
        }
        Action::Minspan => {
            let w = StringSet::parse(&text)?;
            let name = config.method.as_deref().unwrap_or(Registry::DEFAULT_SPAN);
            let strategy = registry.span(name)?;
            let answer = strategy.solve(&w)?;
            Ok(subset_output(&answer, strategy.name(), output))
        }
        Action::Closure => {
            let w = StringSet::parse(&text)?;
            let all = closure(&w, config.negation, config.limit)?;
            Ok(match output {
                OutputFormat::Json => {
                    let strings = (all.len() <= MAX_LISTED_STRINGS)
                        .then(|| all.iter().map(BitString::to_string).collect());
                    json(&ClosureDoc {
                        size: all.len(),
                        strings,
                    })
                }
                OutputFormat::Plain => {
                    let mut out = String::new();
                    for s in &all {
                        writeln!(out, "{s}").unwrap();
                    }
                    out
                }
            })
        }
        Action::FromPoset => {
            let poset = AbstractPoset::parse(&text)?;
            Ok(poset_to_instance(&poset).to_text())
        }
        Action::MscToMcs => {
            let msc = MscInstance::parse(&text)?;
            let inst = msc_to_mcs(msc.universe_size, &msc.family)?;
            Ok(match output {
                OutputFormat::Json => json(&CompareDoc {
                    items: inst.item_count(),
                    subsets: inst.subset_lists(),
                }),
                OutputFormat::Plain => {
                    let mut out = String::new();
                    for list in inst.subset_lists() {
                        let items: Vec<String> = list.iter().map(usize::to_string).collect();
                        writeln!(out, "{}", items.join(" ")).unwrap();
                    }
                    out
                }
            })
        }
    }
}
