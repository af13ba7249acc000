//! The `slped` command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input or validation
//! error, 3 numeric guard or overflow.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{fib_scaling, fr_scaling, write_csv, Suite};
use crate::engine::{block_edit_distance, four_russians_distance, naive_with_stats, BlockConfig, RunStats};
use crate::error::{Error, Result};
use crate::gen;
use crate::partition::make_partition_plan;
use crate::scoring::ScoringScheme;
use crate::slp::{parse_slp, serialize_slp, slp_from_text, Slp};
use crate::verify::{run_verify, Encoder, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "slped", version, about = "Edit distance between grammar-compressed strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a text file (or stdin) as an SLP.
    Compress {
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = EncoderArg::Lz78)]
        encoder: EncoderArg,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Edit distance between two SLP files or raw strings.
    Dist(DistArgs),
    /// Randomized cross-check of all algorithms against the naive DP.
    Verify {
        #[arg(long, default_value_t = 500)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        max_n: usize,
        /// Alphabet sizes to draw from, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,4,20")]
        alphabet: Vec<usize>,
        /// Corrupt block results to exercise the mismatch path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Generate benchmark inputs.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run a benchmark ladder and write CSV.
    Bench {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        out: Option<PathBuf>,
        /// First rung: Fibonacci order, or log2 of the string length.
        #[arg(long)]
        from: Option<u32>,
        #[arg(long)]
        to: Option<u32>,
        /// Largest Fibonacci order also run through the naive DP.
        #[arg(long, default_value_t = 28)]
        naive_max: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EncoderArg {
    Naive,
    Lz78,
    Rle,
}

impl From<EncoderArg> for Encoder {
    fn from(e: EncoderArg) -> Self {
        match e {
            EncoderArg::Naive => Encoder::Naive,
            EncoderArg::Lz78 => Encoder::Lz78,
            EncoderArg::Rle => Encoder::Rle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Naive,
    Block,
    FourRussians,
}

#[derive(Debug, clap::Args)]
pub struct DistArgs {
    /// SLP file for A.
    #[arg(required_unless_present = "raw_a")]
    pub slp_a: Option<PathBuf>,
    /// SLP file for B.
    #[arg(required_unless_present = "raw_b")]
    pub slp_b: Option<PathBuf>,
    /// Raw text for A instead of an SLP file.
    #[arg(long = "rawA", alias = "raw-a", conflicts_with = "slp_a")]
    pub raw_a: Option<String>,
    /// Raw text for B instead of an SLP file.
    #[arg(long = "rawB", alias = "raw-b", conflicts_with = "slp_b")]
    pub raw_b: Option<String>,
    /// Scoring scheme file.
    #[arg(long, required_unless_present = "levenshtein", conflicts_with = "levenshtein")]
    pub scoring: Option<PathBuf>,
    /// Unit costs over the symbols of both inputs.
    #[arg(long)]
    pub levenshtein: bool,
    #[arg(long, value_enum, default_value_t = Algo::Block)]
    pub algo: Algo,
    /// Block width (block) or chunk length (four-russians).
    #[arg(long)]
    pub x: Option<u64>,
    /// Print the partition plan as CSV after the distance.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Fibonacci word SLP, `n = order` rules.
    Fibonacci {
        #[arg(long)]
        order: u32,
    },
    /// `a^len` by doubling.
    Power {
        #[arg(long)]
        len: u64,
        #[arg(long, default_value = "a")]
        symbol: char,
    },
    /// Uniform random text.
    Random {
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 4)]
        alphabet_size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// A motif repeated `reps` times, LZ78-encoded.
    Motif {
        #[arg(long)]
        motif: String,
        #[arg(long)]
        reps: usize,
    },
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Compress { input, encoder, output } => {
            let text = read_input(input.as_deref())?;
            if text.is_empty() {
                return Err(Error::EmptyInput);
            }
            let slp = Encoder::from(encoder).encode(&text)?;
            write_output(output.as_deref(), serialize_slp(&slp).as_bytes(), stdout)?;
            writeln!(
                stderr,
                "n={} N={} depth={} ratio={:.3}",
                slp.size(),
                slp.len(),
                slp.depth(),
                slp.len() as f64 / slp.size() as f64
            )?;
            Ok(0)
        }
        Command::Dist(args) => dist(args, stdout, stderr),
        Command::Verify { cases, seed, max_n, alphabet, inject_fault } => {
            if alphabet.is_empty() || max_n == 0 {
                return Err(Error::Invalid("need at least one alphabet size and max-n >= 1".into()));
            }
            let config = VerifyConfig {
                cases,
                seed,
                max_n,
                alphabet_sizes: alphabet,
                inject_fault,
                ..Default::default()
            };
            let report = run_verify(&config)?;
            write!(stdout, "{report}")?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Gen { kind, output } => {
            let bytes = match kind {
                GenKind::Fibonacci { order } => serialize_slp(&gen::fibonacci(order)?).into_bytes(),
                GenKind::Power { len, symbol } => {
                    let symbol = u8::try_from(symbol)
                        .map_err(|_| Error::Invalid(format!("symbol {symbol:?} is not a single byte")))?;
                    serialize_slp(&gen::power(symbol, len)?).into_bytes()
                }
                GenKind::Random { len, alphabet_size, seed } => {
                    gen::random_text(len, &gen::alphabet(alphabet_size)?, seed)?
                }
                GenKind::Motif { motif, reps } => {
                    serialize_slp(&gen::motif(motif.as_bytes(), reps)?).into_bytes()
                }
            };
            write_output(output.as_deref(), &bytes, stdout)?;
            Ok(0)
        }
        Command::Bench { suite, out, from, to, naive_max, seed } => {
            let log = |r: &crate::bench::BenchRecord| {
                eprintln!("{}", r.csv_row());
            };
            let records = match suite {
                Suite::FibScaling => fib_scaling(from.unwrap_or(20)..=to.unwrap_or(30), naive_max, log)?,
                Suite::FrScaling => fr_scaling(from.unwrap_or(12)..=to.unwrap_or(15), seed, log)?,
            };
            match out {
                Some(path) => write_csv(io::BufWriter::new(fs::File::create(path)?), &records)?,
                None => write_csv(&mut *stdout, &records)?,
            }
            Ok(0)
        }
    }
}

enum Input {
    Grammar(Slp),
    Raw(Vec<u8>),
}

impl Input {
    fn load(path: Option<&Path>, raw: Option<String>) -> Result<Input> {
        match (path, raw) {
            (_, Some(raw)) => Ok(Input::Raw(raw.into_bytes())),
            (Some(path), None) => Ok(Input::Grammar(parse_slp(&fs::read_to_string(path)?)?)),
            (None, None) => Err(Error::EmptyInput),
        }
    }

    fn symbols(&self) -> Vec<u8> {
        match self {
            Input::Grammar(slp) => slp.terminal_symbols(),
            Input::Raw(text) => text.clone(),
        }
    }

    fn text(&self) -> Result<Vec<u8>> {
        match self {
            Input::Grammar(slp) => Ok(slp.expand()?),
            Input::Raw(text) => Ok(text.clone()),
        }
    }

    fn grammar(self) -> Result<Slp> {
        match self {
            Input::Grammar(slp) => Ok(slp),
            Input::Raw(text) if text.is_empty() => Err(Error::EmptyInput),
            Input::Raw(text) => Ok(slp_from_text(&text)?),
        }
    }
}

fn dist(args: DistArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let a = Input::load(args.slp_a.as_deref(), args.raw_a)?;
    let b = Input::load(args.slp_b.as_deref(), args.raw_b)?;
    let scheme = match &args.scoring {
        Some(path) => ScoringScheme::parse(&fs::read_to_string(path)?)?,
        None => {
            let mut seen = [false; 256];
            let mut symbols: Vec<u8> = a.symbols().into_iter().chain(b.symbols()).collect();
            symbols.retain(|&s| !std::mem::replace(&mut seen[s as usize], true));
            if symbols.is_empty() {
                symbols.push(b'a');
            }
            ScoringScheme::levenshtein(&symbols)?
        }
    };
    let (distance, stats, plan) = match args.algo {
        Algo::Naive => {
            let (d, s) = naive_with_stats(&a.text()?, &b.text()?, &scheme)?;
            (d, s, None)
        }
        Algo::FourRussians => {
            let (d, s) = four_russians_distance(&a.text()?, &b.text()?, &scheme, args.x)?;
            (d, s, None)
        }
        Algo::Block => {
            let (ga, gb) = (a.grammar()?, b.grammar()?);
            let config = BlockConfig { x: args.x, ..Default::default() };
            let (d, s) = block_edit_distance(&ga, &gb, &scheme, &config)?;
            let plan = if args.explain { Some(make_partition_plan(&ga, &gb, s.x)?) } else { None };
            (d, s, plan)
        }
    };
    let value = distance.value().ok_or(Error::Overflow("distance"))?;
    if scheme.scale() > 1 {
        writeln!(stdout, "{value} ({value}/{} = {})", scheme.scale(), value as f64 / scheme.scale() as f64)?;
    } else {
        writeln!(stdout, "{value}")?;
    }
    if let Some(plan) = plan {
        write!(stdout, "{}", plan.to_csv())?;
    }
    write_stats(stderr, &stats)?;
    Ok(0)
}

fn write_stats(out: &mut dyn Write, s: &RunStats) -> io::Result<()> {
    writeln!(
        out,
        "N_a={} N_b={} n_a={} n_b={} x={} y_a={} y_b={} tables_built={} merges={} smawk_queries={} dp_cells={} wall_ms={:.3}",
        s.len_a,
        s.len_b,
        s.n_a,
        s.n_b,
        s.x,
        s.y_a,
        s.y_b,
        s.tables_built,
        s.merge_ops,
        s.smawk_queries,
        s.dp_cells_touched,
        s.wall_millis
    )
}

fn read_input(path: Option<&Path>) -> Result<Vec<u8>> {
    match path {
        Some(p) if p != Path::new("-") => Ok(fs::read(p)?),
        _ => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}
