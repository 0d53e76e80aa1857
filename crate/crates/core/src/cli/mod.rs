//! The `ncsf` command line.

pub mod expr;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::limits;
use crate::matrices::{transition_matrix, transition_matrix_with_witnesses, Layout, Pair};
use crate::verify::{run_suite, Suite};
use crate::words::{standardize, PackedWord, Permutation};

use self::expr::{evaluate, parse, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ncsf",
    version,
    about = "Noncommutative symmetric functions: bases, statistics, quotients and transition matrices"
)]
struct Cli {
    /// Enumeration cap on the degree (default 8, or $NCSF_MAX_DEGREE).
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of a permutation or packed word.
    Stats {
        #[command(subcommand)]
        what: StatsTarget,
    },
    /// Transition matrix M_n(R,L) or M_n(R,Psi).
    Matrix {
        /// RL or RPsi.
        pair: Pair,
        n: usize,
        #[arg(long, default_value = "paper")]
        layout: Layout,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
        /// Attach the permutations or packed words counted in each cell.
        #[arg(long)]
        witnesses: bool,
    },
    /// Evaluate an expression and expand it in a basis.
    Expand {
        expression: String,
        /// S, R, L, Psi, T or U.
        #[arg(long = "in")]
        target: Target,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Run verification suites.
    Verify {
        /// tables, ideal, products, oracle, sequences or all.
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Directory holding golden text matrices to compare against.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Subcommand, Debug)]
enum StatsTarget {
    Perm { word: String },
    Word { word: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

/// Runs the command line with `args` (including the program name), writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    if let Some(cap) = cli.cap {
        limits::set_cap(cap);
    }
    if limits::cap() >= limits::WARN_DEGREE {
        let _ = writeln!(
            err,
            "warning: degree cap {} is at least {}; exhaustive enumerations may be very slow",
            limits::cap(),
            limits::WARN_DEGREE
        );
    }
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Semantic(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Stats { what } => {
            let text = match what {
                StatsTarget::Perm { word } => perm_stats(&word.parse::<Permutation>()?),
                StatsTarget::Word { word } => word_stats(&word.parse::<PackedWord>()?)?,
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Matrix {
            pair,
            n,
            layout,
            format,
            witnesses,
        } => {
            let m = if witnesses {
                transition_matrix_with_witnesses(pair, n)?
            } else {
                transition_matrix(pair, n)?
            };
            let text = match format {
                MatrixFormat::Text => {
                    let mut s = m.to_text(layout);
                    if let Some(w) = m.witnesses_text(layout) {
                        s.push('\n');
                        s.push_str(&w);
                    }
                    s
                }
                MatrixFormat::Csv => m.to_csv(layout),
                MatrixFormat::Json => m.to_json(layout) + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Expand {
            expression,
            target,
            format,
        } => {
            let e = evaluate(&parse(&expression)?, target)?;
            let text = match format {
                TextOrJson::Text => e.to_text(),
                TextOrJson::Json => e.to_json(),
            };
            writeln!(out, "{text}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_degree,
            golden,
            format,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            limits::check(max_degree)?;
            let mut passed = true;
            let mut reports = Vec::new();
            for s in suites {
                let report = run_suite(s, max_degree, golden.as_deref())?;
                passed &= report.passed();
                if let TextOrJson::Text = format {
                    write!(out, "{report}").map_err(io)?;
                }
                reports.push(report);
            }
            match format {
                TextOrJson::Text => writeln!(out, "{}", if passed { "VERIFIED" } else { "FAILED" }),
                TextOrJson::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                ),
            }
            .map_err(io)?;
            Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn perm_stats(sigma: &Permutation) -> String {
    format!(
        "permutation {sigma}\nGC {}\nrecoil {}\ndescent {}\nWC {}\n",
        sigma.genocchi_composition(),
        sigma.recoil_composition(),
        sigma.descent_composition(),
        sigma.as_packed().word_composition(),
    )
}

fn word_stats(u: &PackedWord) -> Result<String> {
    let std = standardize(u.letters())?;
    Ok(format!(
        "packed word {u}\nWC {}\ndescent {}\nstd {std}\nGC(std) {}\nrecoil(std) {}\n",
        u.word_composition(),
        u.descent_composition(),
        std.genocchi_composition(),
        std.recoil_composition(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ncsf").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn stats_perm() {
        let (code, out, _) = run_args(&["stats", "perm", "3142"]);
        assert_eq!(code, 0);
        assert!(out.contains("GC [2,1,1]\n"), "{out}");
        assert!(out.contains("recoil [2,2]\n"), "{out}");
        assert!(out.contains("descent [1,2,1]\n"), "{out}");
    }

    #[test]
    fn stats_word() {
        let (code, out, _) = run_args(&["stats", "word", "1543421323"]);
        assert_eq!(code, 0);
        assert!(out.contains("WC [2,3,2,2,1]\n"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["matrix", "XY", "3"]).0, 2);
        assert_eq!(run_args(&["stats", "perm", "3143"]).0, 2);
        assert_eq!(run_args(&["expand", "R[2,1)*", "--in", "L"]).0, 2);
        assert_eq!(run_args(&["verify", "bogus"]).0, 2);
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn expand_text() {
        let (code, out, _) = run_args(&["expand", "R[2,2]", "--in", "L"]);
        assert_eq!(
            (code, out.as_str()),
            (0, "2*L[3,1] + 2*L[2,2] + 1*L[2,1,1]\n")
        );
    }
}
