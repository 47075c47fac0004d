use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dodecic::classifier::{classify_dodecic, Classification, TrinomialPair};
use dodecic::exact_arith::{format_rational, parse_rational};
use dodecic::oracles::SubsetOracle;
use dodecic::suite::{self, DEFAULT_PRIME_BUDGET};
use dodecic::Error;

mod batch;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_REDUCIBLE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "dodecic", version, about = "Galois groups of x^12 + a x^6 + b over Q")]
struct Cli {
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Prime budget for Frobenius scans.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_BUDGET)]
    primes: usize,
    /// Starting precision in bits for the complex-root irreducibility check.
    #[arg(long, global = true, default_value_t = 200)]
    precision: u32,
    /// Skip malformed batch rows instead of aborting.
    #[arg(long, global = true)]
    lenient: bool,
    /// Reserved; nothing is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Jsonl,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one trinomial.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Same as --format pretty.
        #[arg(long)]
        pretty: bool,
    },
    /// Classify every row of a CSV file with header `a,b`.
    Batch {
        input: PathBuf,
        /// Written atomically; standard output if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also run the verification battery on each irreducible row.
        #[arg(long)]
        verify: bool,
    },
    /// Run every applicable check on one trinomial.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Classify the reference polynomials and compare with their known groups.
    Selftest,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_FAILURE)
}

fn parse_pair(a: &str, b: &str) -> Result<Option<TrinomialPair>, Error> {
    let (a, b) = (parse_rational(a)?, parse_rational(b)?);
    match TrinomialPair::new(a, b) {
        Ok(p) => Ok(Some(p)),
        Err(Error::ZeroConstant) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn zero_constant_note(a: &str) -> serde_json::Value {
    serde_json::json!({
        "a": a,
        "b": "0",
        "irreducible": false,
        "note": "b = 0, so x^6 divides f",
    })
}

fn print_pretty(c: &Classification) {
    println!("dodecic {}", env!("CARGO_PKG_VERSION"));
    println!("f = {}", c.input.dodecic());
    for t in &c.trace {
        println!("  {:<28} {:<24} {}", t.test, t.value, t.result);
    }
    match (c.g4, c.g6, c.g12) {
        (Some(g4), Some(g6), Some(g12)) => {
            println!("G4 = {g4} ({}), G6 = {g6} ({})", g4.name(), g6.name());
            let provenance = serde_json::to_value(g12.order_provenance()).expect("serializable");
            println!("G12 = {g12}, order {} ({})", g12.order(), provenance.as_str().unwrap_or_default());
        }
        _ => println!("reducible"),
    }
}

fn classify(a: &str, b: &str, format: Format) -> ExitCode {
    let pair = match parse_pair(a, b) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let Some(pair) = pair else {
        let note = zero_constant_note(&format_rational(&parse_rational(a).unwrap()));
        match format {
            Format::Pretty => println!("reducible: b = 0, so x^6 divides f"),
            _ => println!("{note}"),
        }
        return ExitCode::from(EXIT_REDUCIBLE);
    };
    let c = classify_dodecic(&pair);
    match format {
        Format::Pretty => print_pretty(&c),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(batch::CSV_HEADER).ok();
            w.write_record(batch::csv_row(&c)).ok();
            w.flush().ok();
        }
        Format::Json | Format::Jsonl => println!("{}", serde_json::to_string(&c).expect("serializable")),
    }
    ExitCode::from(if c.f_irreducible { EXIT_OK } else { EXIT_REDUCIBLE })
}

fn verify(a: &str, b: &str, format: Format, primes: usize, precision: u32) -> ExitCode {
    let pair = match parse_pair(a, b) {
        Ok(Some(p)) => p,
        Ok(None) => {
            eprintln!("reducible: b = 0");
            return ExitCode::from(EXIT_REDUCIBLE);
        }
        Err(e) => return fail(e),
    };
    let oracle = SubsetOracle { start_bits: precision, max_bits: precision.max(6400), ..SubsetOracle::default() };
    let report = match suite::verify_with(&pair, primes, &oracle) {
        Ok(r) => r,
        Err(Error::Reducible(f)) => {
            eprintln!("reducible: {f}");
            return ExitCode::from(EXIT_REDUCIBLE);
        }
        Err(e) => return fail(e),
    };
    if matches!(format, Format::Json | Format::Jsonl) {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        let g12 = report.classification.g12.expect("irreducible");
        println!("{pair}: {g12}");
        for c in &report.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let detail = c.detail.as_deref().unwrap_or("");
            let line = format!("  {mark}  {:<14} {:<40} {detail}", c.suite, c.name);
            println!("{}", line.trim_end());
        }
        for s in &report.skipped {
            println!("  skip  {s}");
        }
        let passed = report.checks.iter().filter(|c| c.passed).count();
        println!("{passed}/{} checks passed", report.checks.len());
    }
    ExitCode::from(if report.all_passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn selftest(format: Format) -> ExitCode {
    let rows = suite::selftest();
    let matched = rows.iter().filter(|r| r.matched).count();
    if matches!(format, Format::Json | Format::Jsonl) {
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
    } else {
        let show = |g: &Option<dodecic::GroupLabel>| g.map_or("-".to_string(), |g| g.to_string());
        for r in &rows {
            let [e4, e6, e12] = r.expected;
            let got = r.got.iter().map(show).collect::<Vec<_>>().join(" ");
            let mark = if r.matched { "ok" } else { "MISMATCH" };
            println!("{:>4} {:>7}  {e4} {e6} {e12:<6} {got:<18} {mark}", r.a, r.b);
            if let Some(t) = &r.last_predicate {
                println!("      diverged at \"{}\" = {} ({})", t.test, t.value, t.result);
            }
        }
        println!("{matched}/{}", rows.len());
    }
    ExitCode::from(if matched == rows.len() { EXIT_OK } else { EXIT_FAILURE })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Classify { a, b, pretty } => {
            let format = if pretty { Format::Pretty } else { cli.format.unwrap_or(Format::Json) };
            classify(&a, &b, format)
        }
        Command::Batch { input, output, verify } => {
            let opts = batch::Options {
                format: cli.format.unwrap_or(Format::Csv),
                lenient: cli.lenient,
                verify: verify.then_some(cli.primes),
            };
            match batch::run(&input, output.as_deref(), &opts) {
                Ok(()) => ExitCode::from(EXIT_OK),
                Err(e) => fail(e),
            }
        }
        Command::Verify { a, b } => verify(&a, &b, cli.format.unwrap_or(Format::Pretty), cli.primes, cli.precision),
        Command::Selftest => selftest(cli.format.unwrap_or(Format::Pretty)),
    };
    std::io::stdout().flush().ok();
    code
}
