//! The `tlf` command line front end.
//!
//! Exit codes: 0 success, 2 parse error, 3 invariant violation, 4 budget exceeded.
//! Any file argument may be `-` for standard input, and so may a word argument.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::diagram::Diagram;
use crate::enumerate::{enumerate_diagrams_capped, enumerate_fc, DEFAULT_MAX_K};
use crate::error::{Error, ErrorKind};
use crate::factorize::{column_profiles, factor};
use crate::heaps::Heap;
use crate::render;
use crate::words::{Word, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Environment variable overriding the brute-force search budget.
pub const BUDGET_ENV: &str = "TLF_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "tlf",
    version,
    about = "Temperley-Lieb diagrams of type A and their factorizations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiply out the simple diagrams of a word.
    Build {
        word: String,
        #[arg(long = "n")]
        n: usize,
    },
    /// Recover a reduced word from a diagram file.
    Factor {
        #[arg(default_value = "-")]
        input: String,
        /// Also print the heap of the factorization.
        #[arg(long)]
        heap: bool,
        /// Also print chords per column and occurrences per generator.
        #[arg(long)]
        counts: bool,
    },
    /// Stack two diagrams, the first on top.
    Mul { top: String, bottom: String },
    /// Report reducedness, full commutativity and the normal form of a word.
    Check {
        word: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Print the heap of a word.
    Heap {
        word: String,
        #[arg(long = "n")]
        n: usize,
        /// Print `level column` lines instead of the grid.
        #[arg(long)]
        dump: bool,
    },
    /// List every loop-free diagram of rank n (k = n + 1 nodes per face).
    Enum {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        with_words: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
    },
    /// Draw a diagram file, or the heap of `--word`.
    Render {
        input: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.kind() {
                ErrorKind::Parse => EXIT_PARSE,
                ErrorKind::Invariant => EXIT_INVARIANT,
                ErrorKind::Budget => EXIT_BUDGET,
            }
        }
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?)
    }
}

fn read_word(arg: &str, n: usize, stdin: &mut dyn Read) -> Result<Word, Failure> {
    let text = if arg == "-" {
        read_source("-", stdin)?
    } else {
        arg.to_string()
    };
    Ok(Word::parse(&text, n)?)
}

/// Accepts plain diagram JSON, or the output of `build` (its `delta_power` line is
/// skipped).
fn read_diagram(path: &str, stdin: &mut dyn Read) -> Result<Diagram, Failure> {
    let text = read_source(path, stdin)?;
    let json: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with("delta_power"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Diagram::from_json(&json)?)
}

fn budget(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Core(Error::Parse(format!("{BUDGET_ENV}={v:?} is not a count")))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Build { word, n } => {
            let word = read_word(&word, n, stdin)?;
            let (loops, d) = Diagram::from_word(&word);
            writeln!(out, "delta_power {loops}")?;
            writeln!(out, "{}", d.to_json())?;
        }
        Command::Factor {
            input,
            heap,
            counts,
        } => {
            let d = read_diagram(&input, stdin)?;
            let word = factor(&d)?;
            writeln!(out, "{word}")?;
            if heap {
                write!(out, "{}", Heap::from_word(&word).render())?;
            }
            if counts {
                let occurrences = word.multiplicities();
                writeln!(out, "column edges occurrences")?;
                for c in column_profiles(&d)? {
                    writeln!(
                        out,
                        "{} {} {}",
                        c.column,
                        c.edge_count(),
                        occurrences[c.column - 1]
                    )?;
                }
            }
        }
        Command::Mul { top, bottom } => {
            let a = read_diagram(&top, stdin)?;
            let b = read_diagram(&bottom, stdin)?;
            let (loops, d) = a.multiply(&b)?;
            writeln!(out, "delta_power {loops}")?;
            writeln!(out, "{}", d.to_json())?;
        }
        Command::Check {
            word,
            n,
            budget: flag,
        } => {
            let word = read_word(&word, n, stdin)?;
            let heap = Heap::from_word(&word);
            if heap.is_fc_reduced() {
                writeln!(out, "reduced: yes")?;
                writeln!(out, "fc: yes")?;
                writeln!(out, "normal_form: {}", heap.to_word())?;
            } else if word.is_reduced_oracle(budget(flag)?)? {
                writeln!(out, "reduced: yes")?;
                writeln!(out, "fc: no")?;
            } else {
                writeln!(out, "reduced: no")?;
                writeln!(out, "fc: n/a")?;
            }
        }
        Command::Heap { word, n, dump } => {
            let heap = Heap::from_word(&read_word(&word, n, stdin)?);
            if dump {
                write!(out, "{}", heap.dump())?;
            } else {
                write!(out, "{}", heap.render())?;
            }
        }
        Command::Enum {
            n,
            count_only,
            with_words,
            max_k,
        } => {
            if count_only {
                let all = enumerate_diagrams_capped(n + 1, max_k)?;
                writeln!(out, "{}", all.len())?;
            } else if with_words {
                if n + 1 > max_k {
                    return Err(Error::BudgetExceeded {
                        k: n + 1,
                        cap: max_k,
                    }
                    .into());
                }
                for item in enumerate_fc(n)?.items {
                    writeln!(out, "{}\t{}", item.diagram.to_json(), item.word)?;
                }
            } else {
                let mut lines: Vec<String> = enumerate_diagrams_capped(n + 1, max_k)?
                    .iter()
                    .map(Diagram::to_json)
                    .collect();
                lines.sort();
                for line in lines {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Command::Render {
            input,
            word,
            n,
            format,
        } => match (input, word) {
            (None, Some(word)) => {
                let n = n.ok_or_else(|| Failure::Core(Error::Parse("--word needs --n".into())))?;
                let heap = Heap::from_word(&read_word(&word, n, stdin)?);
                match format {
                    Format::Ascii => write!(out, "{}", heap.render())?,
                    Format::Svg => write!(out, "{}", render::heap_svg(&heap))?,
                }
            }
            (Some(path), None) => {
                let d = read_diagram(&path, stdin)?;
                match format {
                    Format::Ascii => write!(out, "{}", render::diagram_ascii(&d))?,
                    Format::Svg => write!(out, "{}", render::diagram_svg(&d))?,
                }
            }
            _ => {
                return Err(
                    Error::Parse("render takes either a diagram file or --word".into()).into(),
                )
            }
        },
    }
    Ok(())
}
