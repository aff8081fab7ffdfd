use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gapreps::oracle::{naive_repeats, naive_subrepetitions};
use gapreps::{
    compute_runs, gen_family, maximal_gapped_palindromes, maximal_gapped_repeats,
    maximal_subrepetitions, random_word, Engine, Family, FastConfig, LceIndex, Rational, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "gapreps",
    version,
    about = "Maximal gapped repeats and related structures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Maximal alpha-gapped repeats.
    Repeats {
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Runs (maximal repetitions).
    Runs {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Maximal delta-subrepetitions.
    Subreps {
        #[arg(long, value_parser = parse_rational)]
        delta: Rational,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Maximal alpha-gapped palindromes (brute force).
    Pals {
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[command(flatten)]
        io: InputArgs,
    },
    /// Cross-check the fast engine against brute force.
    Verify(VerifyArgs),
    /// Print a word of a named family.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: usize,
    },
    /// Time the fast engine on random binary words.
    Bench {
        #[arg(long, default_value = "2^14..2^18", value_parser = parse_sizes)]
        sizes: Sizes,
        #[arg(long, default_value = "2", value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when absent.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algo::Fast)]
    algo: Algo,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Block length override for the fast engine.
    #[arg(long)]
    block_size: Option<usize>,
    /// Keep a trailing newline as part of the word.
    #[arg(long)]
    keep_newline: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    alphabet: u16,
    #[arg(long, default_value = "2", value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 512)]
    max_rand_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    block_size: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Fast,
    Naive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Quad,
    Abk,
}

#[derive(Clone, Debug)]
struct Sizes(Vec<usize>);

fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("expected N, N/D or a decimal, got {s:?}");
    if let Some((n, d)) = s.split_once('/') {
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let scale = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        return Ok(Rational::new(int * scale + frac, scale));
    }
    s.trim()
        .parse()
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

fn parse_size(s: &str) -> Result<usize, String> {
    let s = s.trim();
    match s.split_once('^') {
        Some(("2", e)) => e
            .parse::<u32>()
            .ok()
            .filter(|&e| e < 40)
            .map(|e| 1usize << e)
            .ok_or_else(|| format!("bad size {s:?}")),
        Some(_) => Err(format!("only powers of 2 are supported, got {s:?}")),
        None => s.parse().map_err(|_| format!("bad size {s:?}")),
    }
}

/// `2^a..2^b` (doubling) or a comma-separated list.
fn parse_sizes(s: &str) -> Result<Sizes, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let (mut lo, hi) = (parse_size(lo)?, parse_size(hi)?);
        if lo == 0 || lo > hi {
            return Err(format!("empty size range {s:?}"));
        }
        let mut out = Vec::new();
        while lo <= hi {
            out.push(lo);
            lo *= 2;
        }
        return Ok(Sizes(out));
    }
    s.split(',')
        .map(parse_size)
        .collect::<Result<_, _>>()
        .map(Sizes)
}

impl InputArgs {
    fn read_word(&self) -> Result<Word> {
        let mut bytes = match &self.file {
            Some(path) => {
                std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?
            }
            None => {
                let mut buf = Vec::new();
                io::stdin()
                    .read_to_end(&mut buf)
                    .context("cannot read standard input")?;
                buf
            }
        };
        if !self.keep_newline && bytes.last() == Some(&b'\n') {
            bytes.pop();
        }
        Ok(Word::new(bytes))
    }

    fn engine(&self) -> Engine {
        match self.algo {
            Algo::Naive => Engine::Naive,
            Algo::Fast => Engine::Fast(fast_config(self.block_size)),
        }
    }
}

fn fast_config(block_size: Option<usize>) -> FastConfig {
    match block_size {
        Some(k) => FastConfig {
            block_size: Some(k.max(1)),
            naive_below: 0,
        },
        None => FastConfig::default(),
    }
}

fn emit(
    out: &mut impl Write,
    format: Format,
    tsv: String,
    json: serde_json::Value,
) -> io::Result<()> {
    match format {
        Format::Tsv => writeln!(out, "{tsv}"),
        Format::Jsonl => writeln!(out, "{json}"),
    }
}

/// Failures of `verify` are reported as exit code 1.
struct Mismatch(String);

fn run(cmd: Cmd) -> Result<std::result::Result<(), Mismatch>> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cmd {
        Cmd::Repeats { alpha, io } => {
            let word = io.read_word()?;
            for r in maximal_gapped_repeats(&word, alpha, io.engine())? {
                let (p, c) = (r.period(), r.copy_len());
                emit(
                    &mut out,
                    io.format,
                    format!(
                        "R\t{}\t{}\t{}\t{}\t{p}\t{c}",
                        r.beg1,
                        r.end1,
                        r.beg2,
                        r.end2()
                    ),
                    json!({"beg1": r.beg1, "end1": r.end1, "beg2": r.beg2, "end2": r.end2(), "period": p, "copylen": c}),
                )?;
            }
        }
        Cmd::Runs { io } => {
            let word = io.read_word()?;
            let runs = match io.algo {
                Algo::Fast => compute_runs(&word, &LceIndex::build(&word)),
                Algo::Naive => gapreps::oracle::naive_runs(&word),
            };
            for r in runs {
                let e = r.exponent();
                emit(
                    &mut out,
                    io.format,
                    format!("RUN\t{}\t{}\t{}\t{e}", r.beg, r.end, r.period),
                    json!({"beg": r.beg, "end": r.end, "period": r.period, "exponent": e.to_string()}),
                )?;
            }
        }
        Cmd::Subreps { delta, io } => {
            let word = io.read_word()?;
            for s in maximal_subrepetitions(&word, delta, io.engine())? {
                let e = s.exponent();
                emit(
                    &mut out,
                    io.format,
                    format!("SUB\t{}\t{}\t{}\t{e}", s.beg, s.end, s.period),
                    json!({"beg": s.beg, "end": s.end, "period": s.period, "exponent": e.to_string()}),
                )?;
            }
        }
        Cmd::Pals { alpha, io } => {
            let word = io.read_word()?;
            for p in maximal_gapped_palindromes(&word, alpha)? {
                let (arm, gap) = (p.arm_len(), p.gap_len());
                emit(
                    &mut out,
                    io.format,
                    format!(
                        "PAL\t{}\t{}\t{}\t{}\t{arm}\t{gap}",
                        p.beg1, p.end1, p.beg2, p.end2
                    ),
                    json!({"beg1": p.beg1, "end1": p.end1, "beg2": p.beg2, "end2": p.end2, "armlen": arm, "gaplen": gap}),
                )?;
            }
        }
        Cmd::Verify(args) => {
            let verdict = verify(&args)?;
            match &verdict {
                Ok(cases) => writeln!(out, "OK cases={cases}")?,
                Err(Mismatch(msg)) => writeln!(out, "FAIL {msg}")?,
            }
            out.flush()?;
            return Ok(verdict.map(|_| ()));
        }
        Cmd::Gen { family, k } => {
            let family = match family {
                FamilyArg::Quad => Family::Quad,
                FamilyArg::Abk => Family::Abk,
            };
            let word = gen_family(family, k)?;
            out.write_all(word.as_bytes())?;
            out.write_all(b"\n")?;
        }
        Cmd::Bench { sizes, alpha, seed } => {
            writeln!(out, "n\tcount\tmillis")?;
            for n in sizes.0 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
                let word = random_word(&mut rng, n, 2);
                let start = Instant::now();
                let count = maximal_gapped_repeats(&word, alpha, Engine::fast())?.len();
                let ms = start.elapsed().as_secs_f64() * 1e3;
                writeln!(out, "{n}\t{count}\t{ms:.1}")?;
                out.flush()?;
            }
        }
    }
    out.flush()?;
    Ok(Ok(()))
}

fn check_word(word: &Word, alpha: Rational, engine: Engine) -> Result<Option<String>> {
    let fast = maximal_gapped_repeats(word, alpha, engine)?;
    if fast != naive_repeats(word, alpha)? {
        return Ok(Some(format!("repeats alpha={alpha} word={word}")));
    }
    let delta = alpha.recip();
    if maximal_subrepetitions(word, delta, engine)? != naive_subrepetitions(word, delta)? {
        return Ok(Some(format!("subreps delta={delta} word={word}")));
    }
    Ok(None)
}

fn verify(args: &VerifyArgs) -> Result<std::result::Result<usize, Mismatch>> {
    if args.alphabet == 0 || args.alphabet > 256 {
        bail!("--alphabet must be between 1 and 256");
    }
    let engine = Engine::Fast(fast_config(args.block_size));
    let sigma = args.alphabet as usize;
    let mut cases = 0;
    for n in 0..=args.max_n {
        let total = sigma
            .checked_pow(n as u32)
            .context("exhaustive range too large")?;
        for code in 0..total {
            let mut c = code;
            let w: Vec<u8> = (0..n)
                .map(|_| {
                    let d = (c % sigma) as u8;
                    c /= sigma;
                    if sigma <= 26 {
                        b'a' + d
                    } else {
                        d
                    }
                })
                .collect();
            cases += 1;
            if let Some(msg) = check_word(&Word::new(w), args.alpha, engine)? {
                return Ok(Err(Mismatch(msg)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.trials {
        let n = rng.gen_range(0..=args.max_rand_n);
        let word = random_word(&mut rng, n, args.alphabet);
        cases += 1;
        if let Some(msg) = check_word(&word, args.alpha, engine)? {
            return Ok(Err(Mismatch(msg)));
        }
    }
    Ok(Ok(cases))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(_)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("7"), Ok(Rational::from_integer(7)));
        assert_eq!(parse_rational("3/2"), Ok(Rational::new(3, 2)));
        assert_eq!(parse_rational("1.25"), Ok(Rational::new(5, 4)));
        assert_eq!(parse_rational(".5"), Ok(Rational::new(1, 2)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("-2").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(
            parse_sizes("2^14..2^16").unwrap().0,
            vec![16384, 32768, 65536]
        );
        assert_eq!(parse_sizes("100,2^3").unwrap().0, vec![100, 8]);
        assert!(parse_sizes("2^5..2^3").is_err());
        assert!(parse_sizes("3^2").is_err());
    }
}
