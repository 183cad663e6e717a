//! Batch command-line surface for the braid toolkit: every pipeline stage
//! as a subcommand, with line-oriented input and bit-exact text or JSON
//! output.
//!
//! Words come from positional arguments or, when none are given, from
//! stdin one word per line (two-word subcommands separate the words of a
//! line with a comma). Exit status: 0 on success, 1 if any input failed to
//! parse, 2 if an internal invariant broke.

mod json;

use std::cmp::Ordering;
use std::io::BufRead;
use std::process::ExitCode;

use braid_core::classical::artin_context;
use braid_core::dual::{dual_context, dual_sigma_definite};
use braid_core::fractions::{garside_fraction_in, garside_thurston, index_and_reduce_in};
use braid_core::oracle::{geodesic_length, OracleLimits};
use braid_core::reversing::{
    left_gcd, left_reverse, left_reverse_traced, right_reverse, right_reverse_traced,
    GarsideContext,
};
use braid_core::sigmadef::{classify_sigma, dehornoy_compare, sigma_definite, SigmaClass};
use braid_core::{BraidWord, Error as CoreError, Family};

use clap::{Args, Parser, Subcommand};
use json::*;

#[derive(Parser)]
#[command(
    name = "braid",
    version,
    about = "Quasi-geodesic sigma-definite braid normalization and friends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Strand count of the ambient braid group.
    #[arg(short = 'n', long)]
    strands: usize,
    /// Use band generators (the dual monoid) for input and output.
    #[arg(long)]
    dual: bool,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Reverse a word into a fraction of positive words.
    Reverse {
        #[command(flatten)]
        common: CommonOpts,
        /// Left reversing (denominator-first fraction) instead of right.
        #[arg(long)]
        left: bool,
        /// Include the elementary step log (JSON format only).
        #[arg(long)]
        trace: bool,
        words: Vec<String>,
    },
    /// Maximal common left divisor of two positive words.
    Gcd {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Splitting of a positive word into entries of the smaller monoid.
    Split {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Garside quotient: exponent and positive numerator.
    Fraction {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Two-sided normal form with trivial left gcd.
    Nf {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Braid index (minimal strand count) and a reduced word.
    Index {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Sigma-definite representative.
    Sigma {
        #[command(flatten)]
        common: CommonOpts,
        /// Freely reduce the final output (the class is re-checked).
        #[arg(long)]
        reduce: bool,
        words: Vec<String>,
    },
    /// Order comparison of two words.
    Compare {
        #[command(flatten)]
        common: CommonOpts,
        words: Vec<String>,
    },
    /// Ground-truth queries.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Dump the machine-derived dual selector tables.
    DualTable {
        /// Strand count.
        strands: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Geodesic length by breadth-first search over the Cayley ball.
    Bfs {
        #[command(flatten)]
        common: CommonOpts,
        /// Search radius.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Node budget for the search.
        #[arg(long, default_value_t = OracleLimits::default().max_ball_nodes)]
        max_nodes: usize,
        words: Vec<String>,
    },
}

/// What went wrong while handling one input line.
enum LineError {
    /// Bad input: malformed word, out-of-range generator, empty where a
    /// nonempty word is required.
    Input(String),
    /// A violated invariant inside the library; never the user's fault.
    Internal(String),
}

impl From<CoreError> for LineError {
    fn from(e: CoreError) -> LineError {
        match e {
            CoreError::Parse(_) | CoreError::EmptyWord | CoreError::NotPositive => {
                LineError::Input(e.to_string())
            }
            other => LineError::Internal(other.to_string()),
        }
    }
}

fn family_of(common: &CommonOpts) -> Family {
    if common.dual {
        Family::Band
    } else {
        Family::Artin
    }
}

/// Parses one word, accepting both the text grammar and the JSON form.
fn parse_word(text: &str, strands: usize, family: Family) -> Result<BraidWord, LineError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let wj: WordJson = serde_json::from_str(trimmed)
            .map_err(|e| LineError::Input(format!("bad word object: {e}")))?;
        let word = wj.to_word().map_err(LineError::Input)?;
        if word.strands() != strands {
            return Err(LineError::Input(format!(
                "word object declares {} strands, invocation says {strands}",
                word.strands()
            )));
        }
        if word.family() != family {
            return Err(LineError::Input(format!(
                "word object family `{}` does not match the invocation",
                word.family()
            )));
        }
        return Ok(word);
    }
    BraidWord::parse(trimmed, strands, family).map_err(LineError::from)
}

fn context_for(common: &CommonOpts) -> Result<GarsideContext, LineError> {
    if common.dual {
        dual_context(common.strands).map_err(LineError::from)
    } else {
        Ok(artin_context(common.strands))
    }
}

/// One input record: a single word or a comma-separated pair.
fn gather_inputs(words: &[String], pair: bool) -> Result<Vec<Vec<String>>, LineError> {
    let mut records = Vec::new();
    if words.is_empty() {
        let stdin = std::io::stdin();
        for line in stdin.lock().lines() {
            let line = line.map_err(|e| LineError::Input(format!("stdin: {e}")))?;
            if pair {
                let Some((a, b)) = line.split_once(',') else {
                    records.push(vec![line]);
                    continue;
                };
                records.push(vec![a.to_string(), b.to_string()]);
            } else {
                records.push(vec![line]);
            }
        }
    } else if pair {
        if words.len() % 2 != 0 {
            return Err(LineError::Input(
                "this subcommand takes words in pairs".to_string(),
            ));
        }
        for chunk in words.chunks(2) {
            records.push(chunk.to_vec());
        }
    } else {
        for w in words {
            records.push(vec![w.clone()]);
        }
    }
    Ok(records)
}

fn expect_pair<'a>(record: &'a [String]) -> Result<(&'a str, &'a str), LineError> {
    match record {
        [a, b] => Ok((a, b)),
        _ => Err(LineError::Input(
            "expected two words separated by a comma".to_string(),
        )),
    }
}

struct Runner {
    had_input_error: bool,
    had_internal_error: bool,
}

impl Runner {
    fn new() -> Runner {
        Runner { had_input_error: false, had_internal_error: false }
    }

    /// Feeds every record through `f`, printing one output line per record
    /// and keeping the order; failed records report on stderr with their
    /// line number and processing continues.
    fn for_each_record(
        &mut self,
        records: &[Vec<String>],
        mut f: impl FnMut(&[String]) -> Result<String, LineError>,
    ) {
        for (i, record) in records.iter().enumerate() {
            match f(record) {
                Ok(line) => println!("{line}"),
                Err(LineError::Input(msg)) => {
                    eprintln!("line {}: {msg}", i + 1);
                    self.had_input_error = true;
                }
                Err(LineError::Internal(msg)) => {
                    eprintln!("line {}: internal invariant violated: {msg}", i + 1);
                    self.had_internal_error = true;
                }
            }
        }
    }

    fn exit_code(&self) -> ExitCode {
        if self.had_internal_error {
            ExitCode::from(2)
        } else if self.had_input_error {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output objects always serialize")
}

fn sigma_class_fields(class: SigmaClass) -> (&'static str, Option<usize>) {
    match class {
        SigmaClass::Trivial => ("trivial", None),
        SigmaClass::Positive(i) => ("positive", Some(i)),
        SigmaClass::Negative(i) => ("negative", Some(i)),
    }
}

fn run() -> Result<ExitCode, LineError> {
    let cli = Cli::parse();
    let mut runner = Runner::new();
    match cli.command {
        Command::Reverse { common, left, trace, words } => {
            if trace && common.format != "json" {
                return Err(LineError::Input(
                    "--trace needs --format json".to_string(),
                ));
            }
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let (pair, steps) = if left {
                    let (p, s) = left_reverse_traced(&w, &ctx)?;
                    (p, s)
                } else {
                    let (p, s) = right_reverse_traced(&w, &ctx)?;
                    (p, s)
                };
                Ok(if common.format == "json" {
                    to_json(&ReverseOut {
                        v: SCHEMA_VERSION,
                        numerator: pair.numerator.to_string(),
                        denominator: pair.denominator.to_string(),
                        trace: trace.then(|| steps.iter().map(TraceStepOut::of).collect()),
                    })
                } else {
                    format!("{} | {}", pair.numerator, pair.denominator)
                })
            });
        }
        Command::Gcd { common, words } => {
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, true)?;
            runner.for_each_record(&records, |record| {
                let (a, b) = expect_pair(record)?;
                let u = parse_word(a, common.strands, family)?;
                let v = parse_word(b, common.strands, family)?;
                let g = left_gcd(&u, &v, &ctx)?;
                Ok(if common.format == "json" {
                    to_json(&WordOut { v: SCHEMA_VERSION, word: g.to_string() })
                } else {
                    g.to_string()
                })
            });
        }
        Command::Split { common, words } => {
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let split = braid_core::classical::monoid_splitting(&w, &ctx)?;
                let entries: Vec<String> =
                    split.entries().iter().map(|e| e.to_string()).collect();
                Ok(if common.format == "json" {
                    to_json(&SplitOut {
                        v: SCHEMA_VERSION,
                        breadth: split.breadth(),
                        entries,
                    })
                } else {
                    format!("{} | {}", split.breadth(), entries.join(" ; "))
                })
            });
        }
        Command::Fraction { common, words } => {
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let f = garside_fraction_in(&w, &ctx)?;
                Ok(if common.format == "json" {
                    to_json(&FractionOut {
                        v: SCHEMA_VERSION,
                        t: f.t,
                        numerator: f.numerator.to_string(),
                    })
                } else {
                    format!("{} | {}", f.t, f.numerator)
                })
            });
        }
        Command::Nf { common, words } => {
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let gt = garside_thurston(&w, &ctx)?;
                Ok(if common.format == "json" {
                    to_json(&NfOut {
                        v: SCHEMA_VERSION,
                        neg: gt.neg.to_string(),
                        pos: gt.pos.to_string(),
                    })
                } else {
                    format!("{} | {}", gt.neg, gt.pos)
                })
            });
        }
        Command::Index { common, words } => {
            let ctx = context_for(&common)?;
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let (k, reduced) = index_and_reduce_in(&w, &ctx)?;
                Ok(if common.format == "json" {
                    to_json(&IndexOut {
                        v: SCHEMA_VERSION,
                        index: k,
                        word: reduced.to_string(),
                    })
                } else {
                    format!("{k} | {reduced}")
                })
            });
        }
        Command::Sigma { common, reduce, words } => {
            let family = family_of(&common);
            let records = gather_inputs(&words, false)?;
            runner.for_each_record(&records, |record| {
                let w = parse_word(&record[0], common.strands, family)?;
                let mut out = if common.dual {
                    dual_sigma_definite(&w)?
                } else {
                    sigma_definite(&w)
                };
                if reduce {
                    out = out.free_reduce();
                }
                let class = classify_sigma(&out).ok_or_else(|| {
                    LineError::Internal(format!(
                        "normalized word `{out}` lost its definite class"
                    ))
                })?;
                let (class_name, level) = sigma_class_fields(class);
                Ok(if common.format == "json" {
                    to_json(&SigmaOut {
                        v: SCHEMA_VERSION,
                        word: out.to_string(),
                        class: class_name.to_string(),
                        level,
                    })
                } else {
                    out.to_string()
                })
            });
        }
        Command::Compare { common, words } => {
            let family = family_of(&common);
            let records = gather_inputs(&words, true)?;
            runner.for_each_record(&records, |record| {
                let (a, b) = expect_pair(record)?;
                let w1 = parse_word(a, common.strands, family)?;
                let w2 = parse_word(b, common.strands, family)?;
                let order = if common.dual {
                    let quotient = w1.invert().concat(&w2);
                    match classify_sigma(&dual_sigma_definite(&quotient)?) {
                        Some(SigmaClass::Trivial) => Ordering::Equal,
                        Some(SigmaClass::Positive(_)) => Ordering::Less,
                        Some(SigmaClass::Negative(_)) => Ordering::Greater,
                        None => {
                            return Err(LineError::Internal(
                                "dual normalization lost its class".to_string(),
                            ))
                        }
                    }
                } else {
                    dehornoy_compare(&w1, &w2)
                };
                let symbol = match order {
                    Ordering::Less => "<",
                    Ordering::Equal => "=",
                    Ordering::Greater => ">",
                };
                Ok(if common.format == "json" {
                    to_json(&CompareOut { v: SCHEMA_VERSION, order: symbol.to_string() })
                } else {
                    symbol.to_string()
                })
            });
        }
        Command::Oracle { what } => match what {
            OracleCommand::Bfs { common, radius, max_nodes, words } => {
                let family = family_of(&common);
                let limits = OracleLimits {
                    max_ball_nodes: max_nodes,
                    ..OracleLimits::default()
                };
                let records = gather_inputs(&words, false)?;
                runner.for_each_record(&records, |record| {
                    let w = parse_word(&record[0], common.strands, family)?;
                    let found = geodesic_length(&w, radius, &limits)?;
                    Ok(if common.format == "json" {
                        to_json(&BfsOut { v: SCHEMA_VERSION, geodesic: found })
                    } else {
                        match found {
                            Some(d) => d.to_string(),
                            None => "absent".to_string(),
                        }
                    })
                });
            }
        },
        Command::DualTable { strands } => {
            if strands < 2 {
                return Err(LineError::Input("strand count below 2".to_string()));
            }
            let ctx = dual_context(strands)?;
            let atoms = ctx.alphabet().to_vec();
            let mut left = Vec::new();
            let mut right = Vec::new();
            for &x in &atoms {
                for &y in &atoms {
                    left.push(SelectorEntryOut {
                        x: x.to_string(),
                        y: y.to_string(),
                        word: ctx
                            .left_selector(x, y)?
                            .iter()
                            .map(|g| g.to_string())
                            .collect(),
                    });
                    right.push(SelectorEntryOut {
                        x: x.to_string(),
                        y: y.to_string(),
                        word: ctx
                            .right_selector(x, y)?
                            .iter()
                            .map(|g| g.to_string())
                            .collect(),
                    });
                }
            }
            let automorphism = atoms
                .iter()
                .map(|&g| AutomorphismEntryOut {
                    from: g.to_string(),
                    to: ctx.twist_gen(g, 1).to_string(),
                })
                .collect();
            println!(
                "{}",
                to_json(&DualTableOut {
                    v: SCHEMA_VERSION,
                    strands,
                    garside: ctx.garside_word().to_string(),
                    automorphism,
                    left,
                    right,
                })
            );
        }
    }
    Ok(runner.exit_code())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(LineError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(LineError::Internal(msg)) => {
            eprintln!("internal invariant violated: {msg}");
            ExitCode::from(2)
        }
    }
}
