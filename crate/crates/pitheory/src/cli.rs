//! The `pitheory` command line.
//!
//! Exit codes: 0 ok, 1 usage, I/O or parse error, 2 verification failure,
//! 3 indeterminate (a cap was exceeded).

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pitheory_core::lab::{builtin_corpus, CheckId, CheckSpec, Corpus, LEMMA_IDS};
use pitheory_core::{Caps, Group};

use crate::config::{resolve_caps, CapOverrides, ConfigError};
use crate::groupfile::{parse_generator_list, parse_group_file, LoadError, ParseError};
use crate::inspect::{check_pi, group_info};
use crate::report::ReportDocument;
use crate::runner::{export_corpus, load_corpus_dir, run_parallel, CorpusError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pitheory", version, about = "Check the partial Π-property and the structure theorems built on it")]
struct Cli {
    #[command(flatten)]
    caps: CapFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapFlags {
    /// TOML config file (default: $PITHEORY_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Largest group order built by closure [env: PITHEORY_CLOSURE_CAP]
    #[arg(long, global = true, value_name = "N")]
    closure_cap: Option<usize>,
    /// Largest order whose subgroup lattice is enumerated [env: PITHEORY_LATTICE_CAP]
    #[arg(long, global = true, value_name = "N")]
    lattice_cap: Option<usize>,
    /// Most chief series enumerated [env: PITHEORY_SERIES_CAP]
    #[arg(long, global = true, value_name = "N")]
    series_cap: Option<usize>,
    /// Largest module dimension [env: PITHEORY_MODULE_DIM_CAP]
    #[arg(long, global = true, value_name = "N")]
    module_dim_cap: Option<usize>,
    /// Largest order for isomorphism tests [env: PITHEORY_ISO_CAP]
    #[arg(long, global = true, value_name = "N")]
    iso_cap: Option<usize>,
}

impl CapFlags {
    fn overrides(&self) -> CapOverrides {
        CapOverrides {
            closure: self.closure_cap,
            lattice: self.lattice_cap,
            series: self.series_cap,
            module_dim: self.module_dim_cap,
            iso: self.iso_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a subgroup satisfies the partial Π-property
    CheckPi {
        /// Group file, or `builtin:<name>`
        group: String,
        /// Subgroup generators in cycle notation, e.g. "(1 2)(3 4)"
        generators: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run theorem and lemma checks over a corpus
    Verify {
        /// Directory of `.group` files (default: the built-in corpus)
        corpus: Option<PathBuf>,
        /// A, B, C or lemma:<id>; repeatable (default: all)
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        /// Only this prime (default: every prime dividing |G|)
        #[arg(long)]
        p: Option<u64>,
        /// Only this d (default: every admissible d)
        #[arg(long)]
        d: Option<u64>,
        /// Only the named groups; repeatable
        #[arg(long = "group", value_name = "NAME")]
        groups: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Record per-check wall-clock time
        #[arg(long)]
        timing: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print structural facts about a group
    Info {
        /// Group file, or `builtin:<name>`
        group: String,
        /// Restrict per-prime facts to these primes
        #[arg(long = "p")]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the built-in corpus as group files
    ExportCorpus {
        dir: PathBuf,
        /// Write `construct` directives instead of generators
        #[arg(long)]
        directives: bool,
    },
    /// List built-in groups and check ids
    List,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("generators: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Core(#[from] pitheory_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_cap() => EXIT_INDETERMINATE,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs the command line with injected streams and environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, env: &dyn Fn(&str) -> Option<String>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, env) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, env: &dyn Fn(&str) -> Option<String>) -> Result<i32, CliError> {
    let caps = resolve_caps(cli.caps.config.as_deref(), env, cli.caps.overrides())?;
    match cli.command {
        Command::CheckPi { group, generators, format } => {
            let g = load_group(&group, caps)?;
            let mut gens = Vec::new();
            for s in &generators {
                gens.extend(parse_generator_list(s, g.degree())?);
            }
            if let Some(x) = gens.iter().find(|x| !g.contains(x)) {
                return Err(CliError::Usage(format!(
                    "{} is not an element of {}",
                    x.to_cycle_string(),
                    g.name().unwrap_or("G")
                )));
            }
            let h = g.subgroup_generated(&gens)?;
            let result = check_pi(&g, &h)?;
            match format {
                Format::Text => result.write_text(out)?,
                Format::Structured => {
                    serde_json::to_writer(&mut *out, &result).map_err(io::Error::from)?;
                    writeln!(out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { corpus, theorems, p, d, groups, format, timing, threads } => {
            let mut c = Corpus::new(caps);
            match &corpus {
                Some(dir) => load_corpus_dir(dir, &mut c)?,
                None => c.entries = builtin_corpus().entries,
            }
            if !groups.is_empty() {
                if let Some(missing) = groups.iter().find(|n| !c.entries.iter().any(|e| &e.name == *n)) {
                    return Err(CliError::Usage(format!("no group named `{missing}` in the corpus")));
                }
                c.entries.retain(|e| groups.contains(&e.name));
            }
            let ids = if theorems.is_empty() {
                CheckId::all()
            } else {
                theorems.iter().map(|t| t.parse::<CheckId>()).collect::<Result<Vec<_>, _>>()?
            };
            let checks: Vec<CheckSpec> = ids.into_iter().map(|id| CheckSpec { id, p, d }).collect();
            let reports = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| run_parallel(&c, &checks, timing)),
                None => run_parallel(&c, &checks, timing),
            };
            let doc = ReportDocument::new(caps, reports);
            match format {
                Format::Text => doc.write_text(out)?,
                Format::Structured => doc.write_structured(out)?,
            }
            Ok(doc.exit_code())
        }
        Command::Info { group, primes, format } => {
            let g = load_group(&group, caps)?;
            let info = group_info(&g, (!primes.is_empty()).then_some(&primes[..]))?;
            match format {
                Format::Text => info.write_text(out)?,
                Format::Structured => {
                    serde_json::to_writer(&mut *out, &info).map_err(io::Error::from)?;
                    writeln!(out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ExportCorpus { dir, directives } => {
            let mut c = builtin_corpus();
            c.caps = caps;
            for path in export_corpus(&c, &dir, directives)? {
                writeln!(out, "{}", path.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::List => {
            for e in builtin_corpus().entries {
                writeln!(out, "{:<18} {}", e.name, e.recipe)?;
            }
            writeln!(out)?;
            writeln!(
                out,
                "checks: A B C {}",
                LEMMA_IDS.iter().map(|l| format!("lemma:{l}")).collect::<Vec<_>>().join(" ")
            )?;
            Ok(EXIT_OK)
        }
    }
}

/// A group from a file path or `builtin:<name>`.
fn load_group(arg: &str, caps: Caps) -> Result<Group, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let c = builtin_corpus();
        let e = c
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| CliError::Usage(format!("no built-in group named `{name}`")))?;
        return Ok(e.recipe.build_with(caps)?.with_name(name));
    }
    let spec = parse_group_file(Path::new(arg))?;
    Ok(spec.build(caps)?)
}
