//! Command-line front end for `lrcombi`.
//!
//! [`run`] takes the full argument vector and explicit output streams so that
//! tests can drive the binary in-process. Exit codes: 0 on success, 2 for usage
//! and parse errors, 3 when a computation overflows or exceeds a size bound.

use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use lrcombi::character::{char_table, mn_coeff};
use lrcombi::partition::count_syt;
use lrcombi::plactic::{plactic_equiv, plactic_normal_form};
use lrcombi::rs::rs;
use lrcombi::schur::{kostka, lr_coeff, lr_enum_yam, pieri_col, pieri_row, schur_product_threads};
use lrcombi::word::{enum_yameval, format_word, parse_word};
use lrcombi::{Error, Partition, SchurExpansion, Tableau, Word};
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lrcombi", version, about = "Littlewood-Richardson coefficients, tableaux and characters")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LrArgs {
    #[arg(long, value_name = "P")]
    outer: Partition,
    #[arg(long, value_name = "P")]
    inner: Partition,
    #[arg(long, value_name = "P")]
    mu: Partition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^outer_{inner, mu}.
    Lrcoef(LrArgs),
    /// Yamanouchi readings of the LR tableaux of shape outer/inner and content mu.
    LrTableaux(LrArgs),
    /// Schur expansion of s_LA * s_MU.
    SchurMult {
        la: Partition,
        mu: Partition,
        /// Worker threads for the product search.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        threads: u16,
    },
    /// s_LA * s_(K), or s_LA * s_(1^K) with --col.
    Pieri {
        la: Partition,
        k: usize,
        #[arg(long)]
        col: bool,
    },
    /// Insertion and recording tableaux of WORD.
    Rs {
        #[arg(value_parser = parse_word)]
        word: Word,
    },
    /// Row reading of the insertion tableau of WORD.
    PlacticNf {
        #[arg(value_parser = parse_word)]
        word: Word,
    },
    /// Whether two words are plactic-equivalent.
    PlacticEq {
        #[arg(value_parser = parse_word)]
        u: Word,
        #[arg(value_parser = parse_word)]
        v: Word,
    },
    /// Irreducible character value chi^lambda(mu).
    Char {
        #[arg(long, value_name = "P")]
        lambda: Partition,
        #[arg(long, value_name = "P")]
        mu: Partition,
    },
    /// Character table of the symmetric group on N points.
    CharTable { n: usize },
    /// Number of standard tableaux of shape LA.
    CountSyt { la: Partition },
    /// Yamanouchi words of evaluation MU, lexicographically.
    Yam { mu: Partition },
    /// Kostka number: tableaux of shape lambda and content mu.
    Kostka {
        #[arg(long, value_name = "P")]
        lambda: Partition,
        #[arg(long, value_name = "P")]
        mu: Partition,
    },
    /// Timing harness.
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Subcommand, Debug)]
enum Bench {
    /// Times lr_coeff over repeated runs.
    Lrcoef {
        #[command(flatten)]
        args: LrArgs,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repeat: u32,
    },
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Overflow(_) | Error::BoundExceeded { .. } => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (program name first) and runs the chosen subcommand.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn word_json(w: &[usize]) -> Value {
    json!(w)
}

fn tableau_json(t: &Tableau) -> Value {
    json!(t.rows())
}

fn print_expansion(e: &SchurExpansion, as_json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if as_json {
        let obj: Map<String, Value> = e.iter().map(|(p, c)| (p.to_string(), json!(c))).collect();
        writeln!(out, "{}", Value::Object(obj))
    } else {
        for (p, c) in e.iter() {
            writeln!(out, "{p} {c}")?;
        }
        Ok(())
    }
}

fn print_words(words: &[Word], as_json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if as_json {
        let arr: Vec<Value> = words.iter().map(|w| word_json(w)).collect();
        writeln!(out, "{}", Value::Array(arr))
    } else {
        for w in words {
            writeln!(out, "{}", format_word(w))?;
        }
        Ok(())
    }
}

fn print_scalar(v: impl std::fmt::Display, out: &mut dyn Write) -> std::io::Result<()> {
    // integers and booleans read the same in text and JSON
    writeln!(out, "{v}")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let as_json = cli.json;
    match &cli.command {
        Command::Lrcoef(a) => print_scalar(lr_coeff(&a.outer, &a.inner, &a.mu)?, out)?,
        Command::LrTableaux(a) => print_words(&lr_enum_yam(&a.outer, &a.inner, &a.mu)?, as_json, out)?,
        Command::SchurMult { la, mu, threads } => {
            print_expansion(&schur_product_threads(la, mu, usize::from(*threads))?, as_json, out)?
        }
        Command::Pieri { la, k, col } => {
            let e = if *col { pieri_col(la, *k)? } else { pieri_row(la, *k)? };
            print_expansion(&e, as_json, out)?
        }
        Command::Rs { word } => {
            let pair = rs(word);
            if as_json {
                writeln!(out, "{}", json!({ "P": tableau_json(pair.p()), "Q": tableau_json(pair.q()) }))?;
            } else {
                write!(out, "{}\n{}", pair.p(), pair.q())?;
            }
        }
        Command::PlacticNf { word } => {
            let nf = plactic_normal_form(word);
            if as_json {
                writeln!(out, "{}", word_json(&nf))?;
            } else {
                writeln!(out, "{}", format_word(&nf))?;
            }
        }
        Command::PlacticEq { u, v } => print_scalar(plactic_equiv(u, v), out)?,
        Command::Char { lambda, mu } => print_scalar(mn_coeff(lambda, mu)?, out)?,
        Command::CharTable { n } => {
            let t = char_table(*n)?;
            if as_json {
                let obj: Map<String, Value> = t
                    .partitions
                    .iter()
                    .zip(&t.values)
                    .map(|(lambda, row)| {
                        let cols: Map<String, Value> =
                            t.partitions.iter().zip(row).map(|(mu, v)| (mu.to_string(), json!(v))).collect();
                        (lambda.to_string(), Value::Object(cols))
                    })
                    .collect();
                writeln!(out, "{}", Value::Object(obj))?;
            } else {
                let header: Vec<String> = t.partitions.iter().map(|p| p.to_string()).collect();
                writeln!(out, "mu: {}", header.join(" "))?;
                for (lambda, row) in t.partitions.iter().zip(&t.values) {
                    let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{lambda}: {}", vals.join(" "))?;
                }
            }
        }
        Command::CountSyt { la } => print_scalar(count_syt(la)?, out)?,
        Command::Yam { mu } => print_words(&enum_yameval(mu)?, as_json, out)?,
        Command::Kostka { lambda, mu } => print_scalar(kostka(lambda, mu)?, out)?,
        Command::Bench(Bench::Lrcoef { args, repeat }) => bench_lrcoef(args, *repeat, as_json, out)?,
    }
    Ok(())
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn bench_lrcoef(a: &LrArgs, repeat: u32, as_json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let mut times = Vec::with_capacity(repeat as usize);
    let mut value = 0;
    for _ in 0..repeat {
        let start = Instant::now();
        value = lr_coeff(&a.outer, &a.inner, &a.mu)?;
        times.push(start.elapsed());
    }
    times.sort_unstable();
    let min = millis(times[0]);
    // lower median for even counts, so the reported time was actually observed
    let median = millis(times[(times.len() - 1) / 2]);
    if as_json {
        writeln!(out, "{}", json!({ "value": value, "runs": repeat, "min_ms": min, "median_ms": median }))?;
    } else {
        writeln!(out, "value {value}")?;
        writeln!(out, "runs {repeat}")?;
        writeln!(out, "min_ms {min:.3}")?;
        writeln!(out, "median_ms {median:.3}")?;
    }
    Ok(())
}
