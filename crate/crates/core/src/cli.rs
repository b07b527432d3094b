//! Command-line front end.
//!
//! Exit status: 0 when everything requested succeeded or verified, 1 when a
//! verification failed or a search gave up, 2 on usage errors (bad flags,
//! malformed points or words).

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cantor::{BitString, RationalPoint};
use crate::error::{Error, Result};
use crate::relators::{check_relators, DEFAULT_DEPTH};
use crate::report::Report;
use crate::schreier::{check_grey_labels, default_radius, find_path, SchreierBall};
use crate::stabgen::{
    check_fp_relators, check_reduction, theorem_generators, twin_stabilizer_check, verify_stabilizer, StabilizerGens,
};
use crate::word::GenWord;

/// Periods exercised by `selftest`.
pub const SELFTEST_PERIODS: [&str; 6] = ["0", "1", "01", "10", "0100", "011"];
/// Preperiods `v` of the twin points `v10^∞`, `v01^∞` exercised by `selftest`.
pub const SELFTEST_TWINS: [&str; 3] = ["", "1", "01"];

#[derive(Debug, Parser)]
#[command(name = "fstab", version, about = "Stabilizers of rational points under Thompson's group F")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of a point and its exact value.
    Canon {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
    },
    /// Apply a word (letters a=x0, A=x0^-1, b=x1, B=x1^-1) to a point.
    Act {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
        #[arg(value_parser = parse_word)]
        word: GenWord,
    },
    /// Print the breakpoints of the PL map of a word.
    Eval {
        #[arg(value_parser = parse_word)]
        word: GenWord,
    },
    /// Print the exact rational value of a point.
    Value {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
    },
    /// Explore the Schreier graph around a point.
    Graph {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find a shortest word moving the first point to the second.
    Path {
        #[arg(value_parser = parse_point)]
        from: RationalPoint,
        #[arg(value_parser = parse_point)]
        to: RationalPoint,
        /// Search radius; defaults to |v| + 4|w| + 8 for the first point.
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Print a generating set of the stabilizer of a point.
    Gens {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify a generating set of the stabilizer of a point.
    Verify {
        #[arg(value_parser = parse_point)]
        point: RationalPoint,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of factors in a sampled product.
        #[arg(long, default_value_t = 12)]
        word_len: usize,
        #[arg(long)]
        radius: Option<usize>,
        /// Verify generators read from a file (`-` for stdin) in the format
        /// printed by `gens`, instead of computing them.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long)]
        verbose: bool,
    },
    /// Run the built-in identity and generator checks.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, default_value_t = 5)]
        label_len: usize,
        #[arg(long)]
        verbose: bool,
    },
}

pub fn parse_point(text: &str) -> Result<RationalPoint> {
    text.parse()
}

fn parse_word(text: &str) -> Result<GenWord> {
    text.parse()
}

enum Outcome {
    Ok,
    Failed,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidArgument(_) | Error::Domain { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Canon { point } => {
            writeln!(out, "{point} {}", point.value())?;
        }
        Command::Act { point, word } => {
            writeln!(out, "{}", point.act_word(&word))?;
        }
        Command::Eval { word } => {
            for (t, v) in word.to_plmap().breakpoints() {
                writeln!(out, "{t} {v}")?;
            }
        }
        Command::Value { point } => {
            writeln!(out, "{}", point.value())?;
        }
        Command::Graph { point, radius, cap, format } => {
            let cap = usize::try_from(cap).unwrap_or(usize::MAX);
            let ball = SchreierBall::build(&point, radius, cap)?;
            match format {
                Format::Dot => write!(out, "{}", ball.to_dot())?,
                Format::Json => write!(out, "{}", ball.to_json())?,
                Format::Text => write_ball_text(&ball, out)?,
            }
        }
        Command::Path { from, to, radius } => {
            let h = find_path(&from, &to, radius.unwrap_or_else(|| default_radius(&from)))?;
            writeln!(out, "{h}")?;
        }
        Command::Gens { point, radius, format } => {
            let g = theorem_generators(&point, radius)?;
            match format {
                Format::Text => write!(out, "{}", g.to_text())?,
                Format::Json => write!(out, "{}", g.to_json())?,
                Format::Dot => return Err(CliError::Usage("gens supports --format text or json".into())),
            }
        }
        Command::Verify { point, samples, seed, word_len, radius, gens, verbose } => {
            let g = match gens {
                Some(source) => {
                    let g = read_gens(&source)?;
                    if g.point != point {
                        return Err(CliError::Usage(format!("generators are for {}, not {point}", g.point)));
                    }
                    g
                }
                None => theorem_generators(&point, radius)?,
            };
            let reports = [verify_stabilizer(&g, samples, word_len, seed), check_fp_relators()];
            return Ok(print_reports(&reports, verbose, out)?);
        }
        Command::Selftest { depth, label_len, verbose } => {
            if depth < 2 {
                return Err(CliError::Usage("selftest depth must be at least 2".into()));
            }
            let mut reports = vec![check_relators(depth), check_reduction(label_len, 4)];
            for w in SELFTEST_PERIODS {
                reports.push(check_grey_labels(&w.parse::<BitString>()?, label_len));
            }
            for v in SELFTEST_TWINS {
                reports.push(twin_stabilizer_check(&v.parse::<BitString>()?));
            }
            reports.push(check_fp_relators());
            return Ok(print_reports(&reports, verbose, out)?);
        }
    }
    Ok(Outcome::Ok)
}

fn read_gens(source: &str) -> Result<StabilizerGens, CliError> {
    let mut text = String::new();
    if source == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(source)?;
    }
    let parsed = if text.trim_start().starts_with('{') {
        StabilizerGens::from_json(&text)
    } else {
        StabilizerGens::from_text(&text)
    };
    Ok(parsed?)
}

fn write_ball_text(ball: &SchreierBall, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "# seed={} radius={} vertices={} edges={}",
        ball.seed(),
        ball.radius(),
        ball.len(),
        ball.edges().len()
    )?;
    for (i, v) in ball.vertices().iter().enumerate() {
        writeln!(out, "{i} {v} d={} path={}", ball.distance(i), ball.word_to(i))?;
    }
    for e in ball.edges() {
        let label = match e.label {
            crate::plmap::Generator::X0 => "x0",
            crate::plmap::Generator::X1 => "x1",
        };
        writeln!(out, "{} {label} {}", e.source, e.target)?;
    }
    Ok(())
}

fn print_reports(reports: &[Report], verbose: bool, out: &mut dyn Write) -> io::Result<Outcome> {
    let mut ok = true;
    for r in reports {
        if verbose {
            write!(out, "{r}")?;
        } else {
            for c in r.failures() {
                writeln!(out, "FAIL {}: {} ({})", r.title, c.name, c.detail)?;
            }
            writeln!(out, "{}", r.summary())?;
        }
        ok &= r.all_passed();
    }
    writeln!(out, "{}", if ok { "all checks passed" } else { "verification FAILED" })?;
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}
