//! Command-line front end shared by the `ahuff` binary and the integration tests.
//!
//! Exit codes: 0 on success, 1 on usage or I/O errors, 2 when an embedding
//! is infeasible or a check finds a counterexample.

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::code_monad::{Arity, CodeTree};
use crate::error::Result;
use crate::huffman::{alpha, build_code, read_container, write_container, FrequencyTable, SumWeighting};
use crate::oracle::{verify_algorithm, Sweep, VerifyBounds};
use crate::pifo::{embed, MaxDepthWeighting, PifoNode};
use crate::weighting::{check_all, CheckReport, SamplerConfig, TreeSampler, Weighting, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ahuff",
    version,
    about = "Generalized Huffman coding and PIFO tree embedding"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compress a file into the AHUF container format
    Encode { input: PathBuf, output: PathBuf },
    /// Decompress an AHUF container
    Decode { input: PathBuf, output: PathBuf },
    /// Print an optimal canonical code for `symbol:count` pairs
    Table {
        spec: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: u32,
    },
    /// Embed a JSON scheduler tree into a minimal-height d-ary tree
    Embed {
        input: PathBuf,
        #[arg(short = 'd', default_value_t = 2)]
        d: u32,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Run the randomized algebra-law and axiom checks for a weighting
    CheckLaws {
        instance: Instance,
        #[arg(short = 'd', default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Compare the greedy algorithm with brute force on every small multiset
    OracleVerify {
        instance: Instance,
        #[arg(short = 'd', default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Weights range over 0..=max-weight
        #[arg(long, default_value_t = 4)]
        max_weight: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Instance {
    Huffman,
    Pifo,
    /// Summation plus one: violates the unit law
    #[value(hide = true)]
    BrokenSum,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

/// Summation shifted by one. Only used to demonstrate that the checkers catch broken weightings.
#[derive(Debug, Clone, Copy)]
struct BrokenSum;

impl Weighting for BrokenSum {
    type Weight = u64;
    type Cost = u64;

    fn weigh(&self, tree: &CodeTree<u64>) -> u64 {
        tree.payloads().sum::<u64>() + 1
    }

    fn cmp_weight(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn cost(&self, tree: &CodeTree<u64>) -> u64 {
        alpha(tree)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Encode { input, output } => {
            let data = std::fs::read(input)?;
            let packed = write_container(&data)?;
            std::fs::write(output, &packed)?;
            let alpha = if data.is_empty() {
                0
            } else {
                build_code(&FrequencyTable::from_bytes(&data), Arity::BINARY)?.alpha
            };
            writeln!(out, "original {} bytes", data.len())?;
            writeln!(out, "compressed {} bytes", packed.len())?;
            writeln!(out, "alpha {alpha}")?;
            Ok(EXIT_OK)
        }
        Command::Decode { input, output } => {
            let packed = std::fs::read(input)?;
            let data = read_container(&packed)?;
            std::fs::write(output, &data)?;
            writeln!(out, "decoded {} bytes", data.len())?;
            Ok(EXIT_OK)
        }
        Command::Table { spec, d } => {
            let freqs = FrequencyTable::parse_spec(spec)?;
            let code = build_code(&freqs, Arity::new(*d)?)?;
            write!(out, "{}", code.table.to_text())?;
            writeln!(out, "# alpha {}", code.alpha)?;
            Ok(EXIT_OK)
        }
        Command::Embed { input, d, bound } => {
            let text = std::fs::read_to_string(input)?;
            let tree = PifoNode::from_json(&text)?;
            let e = embed(&tree, Arity::new(*d)?, *bound)?;
            writeln!(out, "{}", e.to_json())?;
            if e.feasible {
                Ok(EXIT_OK)
            } else {
                writeln!(err, "no embedding within height {}", bound.unwrap_or_default())?;
                Ok(EXIT_REJECTED)
            }
        }
        Command::CheckLaws {
            instance,
            d,
            seed,
            trials,
        } => {
            let config = SamplerConfig::new(Arity::new(*d)?);
            let grid = |rng: &mut ChaCha8Rng| rng.gen_range(0..=8u64);
            let reports = match instance {
                Instance::Huffman => check_all(
                    &SumWeighting::<u64>::new(),
                    &mut TreeSampler::new(config, *seed, grid),
                    *trials,
                ),
                Instance::Pifo => check_all(&MaxDepthWeighting, &mut TreeSampler::new(config, *seed, grid), *trials),
                Instance::BrokenSum => check_all(&BrokenSum, &mut TreeSampler::new(config, *seed, grid), *trials),
            };
            print_reports(&reports, out)
        }
        Command::OracleVerify {
            instance,
            d,
            max_n,
            max_weight,
        } => {
            let bounds = VerifyBounds {
                arities: vec![Arity::new(*d)?],
                max_n: *max_n,
                domain: (0..=*max_weight).collect(),
                sweep: Sweep::Exhaustive,
            };
            let report = match instance {
                Instance::Huffman => verify_algorithm(&bounds, &SumWeighting::<u64>::new())?,
                Instance::Pifo => verify_algorithm(&bounds, &MaxDepthWeighting)?,
                Instance::BrokenSum => verify_algorithm(&bounds, &BrokenSum)?,
            };
            write!(out, "{report}")?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_REJECTED })
        }
    }
}

fn print_reports(reports: &[CheckReport], out: &mut dyn Write) -> Result<i32> {
    for r in reports {
        write!(out, "{r}")?;
    }
    Ok(if reports.iter().all(CheckReport::passed) {
        EXIT_OK
    } else {
        EXIT_REJECTED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ahuff").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = run_capture(&["table", "a:1,b:1,c:2,d:3"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("# alpha 13\n"));
        let (_, out, _) = run_capture(&["table", "a:1,b:1"]);
        assert_eq!(out, "61\t0\n62\t1\n# alpha 2\n");
        let (_, out, _) = run_capture(&["table", "a:1,b:1,c:1", "-d", "3"]);
        assert_eq!(out, "61\t0\n62\t1\n63\t2\n# alpha 3\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_capture(&["table", "a=1"]).0, 1);
        assert_eq!(run_capture(&["table", "a:1", "-d", "1"]).0, 1);
        assert_eq!(run_capture(&["frobnicate"]).0, 1);
        assert_eq!(run_capture(&[]).0, 1);
        assert_eq!(run_capture(&["embed", "/nonexistent/tree.json"]).0, 1);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn seed_parsing() {
        assert_eq!(parse_seed("0xC0DE").unwrap(), 0xC0DE);
        assert_eq!(parse_seed("49374").unwrap(), 49374);
        assert!(parse_seed("zz").is_err());
    }

    #[test]
    fn broken_weighting_is_caught() {
        let (code, out, _) = run_capture(&["check-laws", "broken-sum", "--trials", "20"]);
        assert_eq!(code, 2);
        assert!(out.contains("FAIL algebra unit law (case 1)"));
        assert!(out.contains("w(unit(a))"));
    }
}
