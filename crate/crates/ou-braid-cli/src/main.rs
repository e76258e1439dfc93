//! Command-line front-end: invariant reports, warping-degree solving,
//! layer analysis, family generation, and randomized property checks.
//!
//! Exit codes: 0 success, 1 a check suite found a counterexample, 2 parse
//! or parameter errors, 3 exact-search refusal (n > 10 without --budget).
//! stdout carries the report; diagnostics go to stderr.

mod checks;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ou_braid::families;
use ou_braid::invariants::invariant_report;
use ou_braid::layers::finest_layering;
use ou_braid::warping;
use ou_braid::{BraidWord, Permutation};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "ou-braid", version, about = "OU matrices and warping degrees of braid diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant report of a braid word
    Analyze {
        #[command(flatten)]
        input: WordInput,
        /// Output format
        #[arg(long, value_parser = ["text", "json"], default_value = "text")]
        format: String,
        /// Also solve for the warping degree (exact search)
        #[arg(long)]
        wd: bool,
    },
    /// Solve for the warping degree
    Wd {
        #[command(flatten)]
        input: WordInput,
        /// Exact branch-and-bound search (the default)
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Greedy construction plus local search
        #[arg(long)]
        heuristic: bool,
        /// Node budget for the exact search; required for n > 10
        #[arg(long)]
        budget: Option<u64>,
        /// Seed for the heuristic restarts
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the exact search (capped by OU_BRAID_THREADS)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print the finest layering and the determinant product check
    Layers {
        #[command(flatten)]
        input: WordInput,
    },
    /// Generate a braid word from a named family
    Gen {
        /// weaving, fundamental, delta-power, permutation, random,
        /// random-positive, or random-positive-pure
        family: String,
        /// Family parameters (see the family list)
        params: Vec<String>,
        /// Seed for the random families
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a randomized property suite
    Check {
        /// positive-invariance, similarity, product-formula, theorem1,
        /// theorem2, or pure-symmetry
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: u64,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["word", "file"])))]
struct WordInput {
    /// Braid word text, e.g. "1 -2 3^2"
    #[arg(long)]
    word: Option<String>,
    /// Read the word from a file (same token format, newlines as whitespace)
    #[arg(long)]
    file: Option<PathBuf>,
    /// Strand count; inferred from the word when omitted
    #[arg(long)]
    strands: Option<usize>,
}

impl WordInput {
    fn load(&self) -> Result<BraidWord, String> {
        let text = match (&self.word, &self.file) {
            (Some(w), None) => w.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
            _ => unreachable!("clap enforces exactly one input"),
        };
        BraidWord::parse(&text, self.strands).map_err(|e| e.to_string())
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { input, format, wd } => cmd_analyze(&input, &format, wd),
        Command::Wd {
            input,
            exact,
            heuristic,
            budget,
            seed,
            threads,
        } => cmd_wd(&input, exact, heuristic, budget, seed, threads),
        Command::Layers { input } => cmd_layers(&input),
        Command::Gen {
            family,
            params,
            seed,
        } => cmd_gen(&family, &params, seed),
        Command::Check { suite, seed, cases } => cmd_check(&suite, seed, cases),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_analyze(input: &WordInput, format: &str, wd: bool) -> ExitCode {
    let word = match input.load() {
        Ok(word) => word,
        Err(message) => return usage_error(&message),
    };
    let wd_result = if wd {
        if word.n() > 10 {
            eprintln!(
                "error: exact search refused for n = {} > 10; use `wd --budget`",
                word.n()
            );
            return ExitCode::from(EXIT_REFUSED);
        }
        Some(warping::wd_exact(&word, None))
    } else {
        None
    };
    let report = invariant_report(&word, wd_result);
    match format {
        "json" => println!("{}", report::to_json(&report)),
        _ => print!("{}", report::to_text(&report)),
    }
    ExitCode::SUCCESS
}

fn cmd_wd(
    input: &WordInput,
    _exact: bool,
    heuristic: bool,
    budget: Option<u64>,
    seed: u64,
    threads: usize,
) -> ExitCode {
    let word = match input.load() {
        Ok(word) => word,
        Err(message) => return usage_error(&message),
    };
    let result = if heuristic {
        println!("seed: {seed}");
        warping::wd_heuristic(&word, seed)
    } else {
        if word.n() > 10 && budget.is_none() {
            eprintln!(
                "error: exact search refused for n = {} > 10 without --budget",
                word.n()
            );
            return ExitCode::from(EXIT_REFUSED);
        }
        let threads = match effective_threads(threads) {
            Ok(threads) => threads,
            Err(message) => return usage_error(&message),
        };
        warping::wd_exact_with_threads(&word, budget, threads)
    };
    println!("wd: {}", result.value);
    println!("order: {}", result.order);
    println!("exact: {}", result.exact);
    ExitCode::SUCCESS
}

fn effective_threads(flag: usize) -> Result<usize, String> {
    let mut threads = flag.max(1);
    if let Ok(value) = std::env::var("OU_BRAID_THREADS") {
        let cap: usize = value
            .parse()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| format!("invalid OU_BRAID_THREADS value `{value}`"))?;
        threads = threads.min(cap);
    }
    Ok(threads)
}

fn cmd_layers(input: &WordInput) -> ExitCode {
    let word = match input.load() {
        Ok(word) => word,
        Err(message) => return usage_error(&message),
    };
    let decomposition = finest_layering(&word);
    let kind = if decomposition.is_completely_layered() {
        "completely layered"
    } else if decomposition.is_layered() {
        "layered"
    } else {
        "not layered"
    };
    println!("layering: {kind}");
    println!("layers: {}", decomposition.k());
    let mut product = num_bigint::BigInt::from(1);
    for (index, (layer, sub)) in decomposition
        .layers
        .iter()
        .zip(&decomposition.layer_words)
        .enumerate()
    {
        let det = ou_braid::invariants::det_of(sub);
        let strands = layer
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        println!(
            "layer {}: strands {{{strands}}}; word \"{}\"; det {det}",
            index + 1,
            sub
        );
        product *= det;
    }
    let det = ou_braid::invariants::det_of(&word);
    println!("det: {det}");
    println!("layer det product: {product}");
    println!("product check: {}", if det == product { "ok" } else { "MISMATCH" });
    ExitCode::SUCCESS
}

fn cmd_gen(family: &str, params: &[String], seed: u64) -> ExitCode {
    let parsed: Result<Vec<usize>, _> = params.iter().map(|p| p.parse::<usize>()).collect();
    let Ok(values) = parsed else {
        return usage_error("family parameters must be nonnegative integers");
    };
    let expect = |count: usize| -> Result<(), String> {
        if values.len() == count {
            Ok(())
        } else {
            Err(format!(
                "family `{family}` takes {count} parameter(s), got {}",
                values.len()
            ))
        }
    };
    let word = match family {
        "weaving" => expect(2).and_then(|()| families::weaving(values[0], values[1]).map_err(|e| e.to_string())),
        "fundamental" => expect(1).and_then(|()| families::fundamental(values[0]).map_err(|e| e.to_string())),
        "delta-power" => {
            expect(2).and_then(|()| families::delta_power(values[0], values[1]).map_err(|e| e.to_string()))
        }
        "permutation" => Permutation::from_image(values.clone())
            .map(|rho| families::permutation_braid(&rho))
            .map_err(|e| e.to_string()),
        "random" | "random-positive" | "random-positive-pure" => expect(2).and_then(|()| {
            eprintln!("seed: {seed}");
            let (n, len) = (values[0], values[1]);
            match family {
                "random" => families::random_braid(n, len, seed),
                "random-positive" => families::random_positive(n, len, seed),
                _ => families::random_positive_pure(n, len, seed),
            }
            .map_err(|e| e.to_string())
        }),
        _ => Err(format!("unknown family `{family}`")),
    };
    match word {
        Ok(word) => {
            println!("{word}");
            ExitCode::SUCCESS
        }
        Err(message) => usage_error(&message),
    }
}

fn cmd_check(suite: &str, seed: u64, cases: u64) -> ExitCode {
    let Some(outcome) = checks::run_suite(suite, seed, cases) else {
        return usage_error(&format!("unknown suite `{suite}`"));
    };
    println!("suite: {suite}");
    println!("seed: {seed}");
    println!("cases: {cases}");
    match outcome {
        Ok(()) => {
            println!("result: PASS");
            ExitCode::SUCCESS
        }
        Err(counterexample) => {
            println!("result: FAIL");
            println!("counterexample: {counterexample}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
