//! Command-line front end.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on a
//! usage error (reported by clap), 3 when a library call fails.

use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::extremal::{extremal_fixed_point, lex_extremal_prefix, Direction};
use crate::factorization::{factorize, full_decomposition};
use crate::fife::{bullet, has_ideal_factor, FifeWord, Seed};
use crate::goodness::{check_good, enumerate_good};
use crate::patterns::Classifier;
use crate::verify;
use crate::word::{period_doubling_prefix, BinaryWord};

#[derive(Debug, Parser)]
#[command(name = "perdoub", version, about = "Good binary words and the period-doubling word")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a prefix of the period-doubling word.
    D {
        #[arg(long)]
        length: usize,
    },
    /// Decide whether a word is good.
    Good {
        #[arg(value_parser = nonempty_word)]
        word: BinaryWord,
    },
    /// Split a word as a·δ(u)·b.
    Factorize {
        #[arg(value_parser = nonempty_word)]
        word: BinaryWord,
        /// Factorize repeatedly down to a core of length < 4.
        #[arg(long)]
        full: bool,
    },
    /// Fife operators and automata.
    #[command(subcommand)]
    Fife(FifeCommand),
    /// Lexicographically least or greatest infinite good word.
    Extremal(ExtremalArgs),
    /// Decide whether d encounters a pattern.
    Classify {
        #[arg(value_parser = nonempty_word)]
        pattern: BinaryWord,
        /// Initial d window for the witness search.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        window: Option<u64>,
        /// Longest image length tried by the witness search.
        #[arg(long = "max-image", value_parser = clap::value_parser!(u64).range(1..))]
        max_image: Option<u64>,
    },
    /// Count good words of each length.
    CountGood {
        #[arg(long = "max-length")]
        max_length: usize,
    },
    /// Run the exhaustive property suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// Print the configuration table and exit.
        #[arg(long = "show-config")]
        show_config: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum FifeCommand {
    /// Apply Fife letters to a seed and walk its automaton.
    Walk {
        #[arg(long, default_value = "01")]
        seed: Seed,
        #[arg(long, value_parser = nonempty_fife_word)]
        letters: FifeWord,
    },
    /// List the words produced by accepted Fife words of one length.
    Enumerate {
        #[arg(long, default_value = "01")]
        seed: Seed,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Greedy,
    Fixedpoint,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["least", "greatest"])))]
pub struct ExtremalArgs {
    #[arg(long)]
    least: bool,
    #[arg(long)]
    greatest: bool,
    #[arg(long)]
    length: usize,
    #[arg(long, value_enum, default_value = "fixedpoint")]
    mode: Mode,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    horizon: Option<u64>,
    /// Build the word both ways and report whether they agree.
    #[arg(long)]
    verify: bool,
}

fn nonempty_word(s: &str) -> std::result::Result<BinaryWord, String> {
    if s.is_empty() {
        return Err("expected a nonempty word over {0,1}".into());
    }
    s.parse().map_err(|e: Error| e.to_string())
}

fn nonempty_fife_word(s: &str) -> std::result::Result<FifeWord, String> {
    if s.is_empty() {
        return Err("expected a nonempty word over {a,b,g}".into());
    }
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs a parsed command, writing data to `out` and progress to `err`.
pub fn run(cli: &Cli, config: Config, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, config, out, err) {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn dispatch(
    cli: &Cli,
    config: Config,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::D { length } => {
            let d = period_doubling_prefix(*length);
            if json {
                emit_json(out, &json!({ "length": length, "word": d }))?;
            } else {
                writeln!(out, "{d}")?;
            }
            Ok(0)
        }
        Command::Good { word } => {
            let violation = check_good(word);
            if json {
                emit_json(
                    out,
                    &json!({ "word": word, "good": violation.is_none(), "violation": violation }),
                )?;
            } else {
                match &violation {
                    None => writeln!(out, "good")?,
                    Some(v) => {
                        write!(out, "not good: {} at {} X={}", v.kind.as_str(), v.start, v.x)?;
                        if let Some(y) = &v.y {
                            write!(out, " Y={y}")?;
                        }
                        writeln!(out)?;
                    }
                }
            }
            Ok(if violation.is_none() { 0 } else { 1 })
        }
        Command::Factorize { word, full } => {
            let f = factorize(word)?;
            if !full {
                if json {
                    emit_json(out, &f)?;
                } else {
                    writeln!(out, "a={} core={} b={}", f.a, f.core, f.b)?;
                }
                return Ok(0);
            }
            let dec = full_decomposition(word)?;
            let layers: Vec<_> = dec.layers.iter().map(|(a, b)| json!({ "a": a, "b": b })).collect();
            if json {
                emit_json(
                    out,
                    &json!({ "a": f.a, "core": f.core, "b": f.b, "layers": layers, "terminal_core": dec.core }),
                )?;
            } else {
                writeln!(out, "a={} core={} b={}", f.a, f.core, f.b)?;
                for (i, (a, b)) in dec.layers.iter().enumerate() {
                    writeln!(out, "layer {} a={a} b={b}", i + 1)?;
                }
                writeln!(out, "terminal_core={}", dec.core)?;
            }
            Ok(0)
        }
        Command::Fife(FifeCommand::Walk { seed, letters }) => {
            let word = bullet(&seed.word(), letters)?;
            let state = seed.automaton().walk(letters);
            let ideal = has_ideal_factor(letters);
            if json {
                emit_json(
                    out,
                    &json!({ "seed": seed.word(), "letters": letters, "word": word, "state": state, "ideal": ideal }),
                )?;
            } else {
                writeln!(out, "word={word}")?;
                writeln!(out, "state={}", state.label())?;
                writeln!(out, "ideal={ideal}")?;
            }
            Ok(0)
        }
        Command::Fife(FifeCommand::Enumerate { seed, depth }) => {
            let bound = config.max_fife_depth;
            if *depth > bound {
                return Err(Error::BoundExceeded { what: "fife depth", value: *depth, bound }.into());
            }
            let automaton = seed.automaton();
            let mut accepted = Vec::new();
            for f in FifeWord::all_of_length(*depth) {
                if !automaton.walk(&f).is_sink() {
                    let word = bullet(&seed.word(), &f)?;
                    accepted.push((f, word));
                }
            }
            if json {
                let rows: Vec<_> = accepted.iter().map(|(f, w)| json!({ "letters": f, "word": w })).collect();
                emit_json(out, &json!({ "seed": seed.word(), "depth": depth, "accepted": rows }))?;
            } else {
                for (f, w) in &accepted {
                    writeln!(out, "{f} {w}")?;
                }
            }
            Ok(0)
        }
        Command::Extremal(args) => extremal(args, config, json, out),
        Command::Classify { pattern, window, max_image } => {
            let mut cfg = config;
            if let Some(n) = window {
                cfg.window = usize::try_from(*n).unwrap_or(usize::MAX).min(cfg.window_cap);
            }
            if let Some(k) = max_image {
                cfg.max_image_positive = usize::try_from(*k).unwrap_or(usize::MAX);
            }
            let c = Classifier::new(cfg)?.classify(pattern)?;
            if json {
                emit_json(out, &c)?;
            } else {
                writeln!(out, "pattern={}", c.pattern)?;
                writeln!(out, "encountered={}", c.encountered)?;
                writeln!(out, "reason={}", c.reason)?;
                writeln!(out, "complemented={}", c.complemented)?;
                match &c.witness {
                    Some(wit) => {
                        let show =
                            |x: &Option<BinaryWord>| x.as_ref().map_or("-".to_string(), |w| w.to_string());
                        writeln!(out, "witness start={} X={} Y={}", wit.start, show(&wit.x), show(&wit.y))?;
                    }
                    None => writeln!(out, "witness=none")?,
                }
            }
            Ok(0)
        }
        Command::CountGood { max_length } => {
            let bound = config.max_enum_length;
            if *max_length > bound {
                return Err(
                    Error::BoundExceeded { what: "enumeration length", value: *max_length, bound }.into()
                );
            }
            let mut counts = Vec::with_capacity(max_length + 1);
            for n in 0..=*max_length {
                let _ = writeln!(err, "counting length {n}");
                counts.push(enumerate_good(n, bound)?.len());
            }
            if json {
                let rows: Vec<_> =
                    counts.iter().enumerate().map(|(n, c)| json!({ "length": n, "count": c })).collect();
                emit_json(out, &rows)?;
            } else {
                for (n, c) in counts.iter().enumerate() {
                    writeln!(out, "{n} {c}")?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite, show_config } => {
            if *show_config {
                if json {
                    emit_json(out, &config)?;
                } else {
                    let table = serde_json::to_value(config).expect("config serializes");
                    for (k, v) in table.as_object().expect("struct") {
                        writeln!(out, "{k:<20} {v}")?;
                    }
                }
                return Ok(0);
            }
            if let Some(s) = suite {
                if !verify::suite_names().contains(&s.as_str()) {
                    let _ = writeln!(
                        err,
                        "error: unknown suite {s:?}; expected one of {}",
                        verify::suite_names().join(", ")
                    );
                    return Ok(2);
                }
            }
            let ctx = verify::Context::new(config);
            let outcomes = verify::run(&ctx, suite.as_deref());
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if json {
                emit_json(out, &outcomes)?;
            } else {
                for o in &outcomes {
                    let status = if o.passed { "PASS" } else { "FAIL" };
                    write!(out, "{status} {}::{} ({:.2}s)", o.suite, o.name, o.elapsed.as_secs_f64())?;
                    if let Some(d) = &o.detail {
                        write!(out, " counterexample: {d}")?;
                    }
                    writeln!(out)?;
                }
                writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn extremal(
    args: &ExtremalArgs,
    config: Config,
    json: bool,
    out: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    let direction = if args.least { Direction::Least } else { Direction::Greatest };
    let horizon = args.horizon.map_or(config.horizon, |h| usize::try_from(h).unwrap_or(usize::MAX));
    let greedy =
        |n| -> Result<BinaryWord> { lex_extremal_prefix(n, direction, horizon, config.max_extremal_length) };
    if args.verify {
        let g = greedy(args.length)?;
        let f = extremal_fixed_point(direction, args.length);
        let agree = g == f;
        if json {
            emit_json(
                out,
                &json!({ "direction": direction, "length": args.length, "greedy": g, "fixedpoint": f, "agree": agree }),
            )?;
        } else {
            writeln!(out, "greedy={g}")?;
            writeln!(out, "fixedpoint={f}")?;
            writeln!(out, "agree={agree}")?;
        }
        return Ok(if agree { 0 } else { 1 });
    }
    let word = match args.mode {
        Mode::Greedy => greedy(args.length)?,
        Mode::Fixedpoint => extremal_fixed_point(direction, args.length),
    };
    if json {
        emit_json(out, &json!({ "direction": direction, "length": args.length, "word": word }))?;
    } else {
        writeln!(out, "{word}")?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("perdoub").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&cli, Config::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn d_prefix() {
        assert_eq!(run_args(&["d", "--length", "8"]), (0, "01000101\n".into()));
    }

    #[test]
    fn good_verdicts() {
        assert_eq!(run_args(&["good", "00101000"]), (0, "good\n".into()));
        let (code, text) = run_args(&["good", "0110"]);
        assert_eq!(code, 1);
        assert_eq!(text, "not good: factor11 at 1 X=11\n");
    }

    #[test]
    fn factorize_errors_map_to_status_3() {
        assert_eq!(run_args(&["factorize", "0110"]).0, 3);
        assert_eq!(run_args(&["factorize", "00101000"]), (0, "a=0 core=001 b=0\n".into()));
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["perdoub", "good", "012"]).is_err());
        assert!(Cli::try_parse_from(["perdoub", "good", ""]).is_err());
        assert!(Cli::try_parse_from(["perdoub", "fife", "walk", "--letters", "abx"]).is_err());
        assert!(Cli::try_parse_from(["perdoub", "extremal", "--length", "4"]).is_err());
        assert!(
            Cli::try_parse_from(["perdoub", "extremal", "--least", "--greatest", "--length", "4"]).is_err()
        );
        assert!(Cli::try_parse_from(["perdoub", "classify", "01", "--window", "0"]).is_err());
    }

    #[test]
    fn count_good_respects_bound() {
        let cli = Cli::try_parse_from(["perdoub", "count-good", "--max-length", "5"]).unwrap();
        let cfg = Config { max_enum_length: 4, ..Config::default() };
        let code = run(&cli, cfg, &mut Vec::new(), &mut Vec::new());
        assert_eq!(code, 3);
    }
}
