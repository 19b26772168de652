//! Argument parsing and command execution for the `critfact` binary.
//!
//! Exit codes: 0 success, 2 usage error, 3 bad input, 4 invariant violation.

use std::fs;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use critfact::bench::{run_suite, summarize, write_csv};
use critfact::genstrings::{gen_random, Family, FamilyKind, SplitMix64};
use critfact::oracle::{brute_leftmost_critical, enumerate_canonical};
use critfact::{Algo, CriticalFactorization, Error, SymString};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// One symbol per raw byte.
    Bytes,
    /// Whitespace-separated decimal symbol ids.
    Tokens,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyPlan {
    pub max_n: usize,
    pub max_sigma: u32,
    pub random_count: usize,
    pub seed: u64,
    pub max_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchPlan {
    pub cases: Vec<Family>,
    pub algos: Vec<Algo>,
    pub reps: usize,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandPlan {
    Factorize {
        algo: Algo,
        input: Input,
        mode: Mode,
        stats: bool,
    },
    Oracle {
        input: Input,
        mode: Mode,
    },
    Gen {
        family: Family,
        mode: Option<Mode>,
    },
    Verify(VerifyPlan),
    Bench(BenchPlan),
}

/// Leftmost critical factorization over an unordered alphabet.
///
/// Positions are 1-based. Strings of minimal period 1 report position 2.
#[derive(Parser, Debug)]
#[command(name = "critfact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find the leftmost critical point.
    Factorize {
        #[arg(long, default_value = "linear", value_parser = parse_algo)]
        algo: Algo,
        /// Also print comparison and search counters.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Same answer by brute force.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write a generated string to standard output.
    Gen(GenArgs),
    /// Cross-check both algorithms against the brute-force oracle.
    Verify {
        /// Longest canonical string enumerated exhaustively.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Largest alphabet in the exhaustive sweep.
        #[arg(long, default_value_t = 3)]
        max_sigma: u32,
        /// Number of seeded random strings.
        #[arg(long, default_value_t = 1000)]
        random_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest random string.
        #[arg(long, default_value_t = 200)]
        max_len: usize,
    },
    /// Count comparisons over generated families and write CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Shorthand for `--mode tokens`.
    #[arg(long, conflicts_with = "mode")]
    tokens: bool,
    /// Input file, or `-` for standard input.
    file: PathBuf,
}

impl InputArgs {
    fn resolve(self) -> (Input, Mode) {
        let mode = match (self.mode, self.tokens) {
            (_, true) => Mode::Tokens,
            (Some(m), false) => m,
            (None, false) => Mode::Bytes,
        };
        let input = if self.file.as_os_str() == "-" {
            Input::Stdin
        } else {
            Input::File(self.file)
        };
        (input, mode)
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    /// adversarial, fibonacci, thue-morse or random.
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    /// Adversarial level.
    #[arg(long)]
    level: Option<usize>,
    /// Fibonacci index or Thue-Morse order.
    #[arg(long)]
    k: Option<usize>,
    /// Random string length.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    sigma: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output mode; switches to tokens when symbols exceed one byte.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Adversarial levels, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    adversarial: Option<RangeInclusive<usize>>,
    /// Fibonacci indices.
    #[arg(long, value_parser = parse_range)]
    fibonacci: Option<RangeInclusive<usize>>,
    /// Thue-Morse orders.
    #[arg(long, value_parser = parse_range)]
    thue_morse: Option<RangeInclusive<usize>>,
    /// Random string lengths.
    #[arg(long, value_delimiter = ',')]
    random: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    sigma: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict to one algorithm; repeatable.
    #[arg(long, value_parser = parse_algo)]
    algo: Vec<Algo>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// CSV destination; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_algo(s: &str) -> Result<Algo, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(s)?..=num(s)?,
    };
    if r.is_empty() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> clap::Error {
    Cli::command().error(kind, msg)
}

fn gen_family(g: &GenArgs) -> Result<Family, clap::Error> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| {
            usage(
                ErrorKind::MissingRequiredArgument,
                format!("--family {} requires {flag}", family_name(g.family)),
            )
        })
    };
    let family = match g.family {
        FamilyKind::Adversarial => Family::Adversarial {
            level: need(g.level, "--level")?,
        },
        FamilyKind::Fibonacci => Family::Fibonacci {
            k: need(g.k, "--k")?,
        },
        FamilyKind::ThueMorse => Family::ThueMorse {
            k: need(g.k, "--k")?,
        },
        FamilyKind::Random => Family::Random {
            n: need(g.n, "--n")?,
            sigma: g.sigma,
            seed: g.seed,
        },
    };
    let ok = match family {
        Family::Adversarial { .. } => true,
        Family::Fibonacci { k } => k >= 1,
        Family::ThueMorse { k } => (1..=40).contains(&k),
        Family::Random { n, sigma, .. } => n >= 1 && sigma >= 1,
    };
    if !ok {
        return Err(usage(
            ErrorKind::ValueValidation,
            format!("parameter out of range for --family {}", family.name()),
        ));
    }
    Ok(family)
}

fn family_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::Adversarial => "adversarial",
        FamilyKind::Fibonacci => "fibonacci",
        FamilyKind::ThueMorse => "thue-morse",
        FamilyKind::Random => "random",
    }
}

fn bench_plan(b: BenchArgs) -> Result<BenchPlan, clap::Error> {
    if b.reps == 0 {
        return Err(usage(
            ErrorKind::ValueValidation,
            "--reps must be at least 1",
        ));
    }
    if b.random.contains(&0) {
        return Err(usage(
            ErrorKind::ValueValidation,
            "--random lengths must be positive",
        ));
    }
    if b.fibonacci.as_ref().is_some_and(|r| *r.start() == 0)
        || b.thue_morse
            .as_ref()
            .is_some_and(|r| *r.start() == 0 || *r.end() > 40)
    {
        return Err(usage(
            ErrorKind::ValueValidation,
            "family index out of range",
        ));
    }
    let any = b.adversarial.is_some()
        || b.fibonacci.is_some()
        || b.thue_morse.is_some()
        || !b.random.is_empty();
    let (adv, fib, tm, random) = if any {
        (b.adversarial, b.fibonacci, b.thue_morse, b.random)
    } else {
        (
            Some(1..=12),
            Some(5..=25),
            Some(4..=18),
            vec![1_000, 10_000, 100_000],
        )
    };
    let mut cases = Vec::new();
    cases.extend(
        adv.into_iter()
            .flatten()
            .map(|level| Family::Adversarial { level }),
    );
    cases.extend(fib.into_iter().flatten().map(|k| Family::Fibonacci { k }));
    cases.extend(tm.into_iter().flatten().map(|k| Family::ThueMorse { k }));
    cases.extend(random.into_iter().map(|n| Family::Random {
        n,
        sigma: b.sigma,
        seed: b.seed,
    }));
    let algos = if b.algo.is_empty() {
        Algo::ALL.to_vec()
    } else {
        b.algo
    };
    Ok(BenchPlan {
        cases,
        algos,
        reps: b.reps,
        out: b.out,
    })
}

/// Parses arguments (without the program name) into a plan. Help and
/// version requests come back as errors too; `clap::Error::exit` prints
/// them with status 0 and real usage errors with status 2.
pub fn parse_args<I, T>(args: I) -> Result<CommandPlan, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("critfact"))
        .chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    Ok(match cli.command {
        Command::Factorize { algo, stats, input } => {
            let (input, mode) = input.resolve();
            CommandPlan::Factorize {
                algo,
                input,
                mode,
                stats,
            }
        }
        Command::Oracle { input } => {
            let (input, mode) = input.resolve();
            CommandPlan::Oracle { input, mode }
        }
        Command::Gen(g) => CommandPlan::Gen {
            family: gen_family(&g)?,
            mode: g.mode,
        },
        Command::Verify {
            max_n,
            max_sigma,
            random_count,
            seed,
            max_len,
        } => {
            if max_sigma == 0 || max_len < 2 {
                return Err(usage(
                    ErrorKind::ValueValidation,
                    "--max-sigma must be positive and --max-len at least 2",
                ));
            }
            CommandPlan::Verify(VerifyPlan {
                max_n,
                max_sigma,
                random_count,
                seed,
                max_len,
            })
        }
        Command::Bench(b) => CommandPlan::Bench(bench_plan(b)?),
    })
}

/// Process-level streams, passed in so tests can capture them.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs a plan and returns the process exit code.
pub fn execute(plan: &CommandPlan, io: &mut Io<'_>) -> i32 {
    match run(plan, io) {
        Ok(()) => EXIT_SUCCESS,
        Err(Failure { code, message }) => {
            let _ = writeln!(io.stderr, "critfact: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

fn invariant(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVARIANT,
        message: message.into(),
    }
}

fn from_core(e: Error, w: Option<&SymString>) -> Failure {
    match e {
        Error::TooShort { .. } | Error::BadToken { .. } | Error::Contract(_) => {
            bad_input(e.to_string())
        }
        other => {
            let witness = w.map(|w| format!("; witness (tokens): {}", w.to_tokens()));
            invariant(format!("{other}{}", witness.unwrap_or_default()))
        }
    }
}

fn write_out(out: &mut dyn Write, data: &[u8]) -> Result<(), Failure> {
    out.write_all(data)
        .and_then(|_| out.flush())
        .map_err(|e| bad_input(format!("writing output: {e}")))
}

fn read_input(input: &Input, mode: Mode, stdin: &mut dyn Read) -> Result<SymString, Failure> {
    let data = match input {
        Input::Stdin => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| bad_input(format!("reading standard input: {e}")))?;
            buf
        }
        Input::File(path) => {
            fs::read(path).map_err(|e| bad_input(format!("{}: {e}", path.display())))?
        }
    };
    let w = match mode {
        Mode::Bytes => SymString::from_bytes(&data),
        Mode::Tokens => {
            let text = std::str::from_utf8(&data)
                .map_err(|_| bad_input("token input is not valid UTF-8"))?;
            SymString::from_tokens(text).map_err(|e| from_core(e, None))?
        }
    };
    if w.len() < 2 {
        return Err(bad_input(format!(
            "input has {} symbol(s); at least 2 are required",
            w.len()
        )));
    }
    Ok(w)
}

fn run(plan: &CommandPlan, io: &mut Io<'_>) -> Result<(), Failure> {
    match plan {
        CommandPlan::Factorize {
            algo,
            input,
            mode,
            stats,
        } => {
            let w = read_input(input, *mode, io.stdin)?;
            let (cf, st) = algo.run(&w).map_err(|e| from_core(e, Some(&w)))?;
            let mut text = cf.result_line() + "\n";
            if *stats {
                text += &st.stats_line();
                text.push('\n');
            }
            write_out(io.stdout, text.as_bytes())
        }
        CommandPlan::Oracle { input, mode } => {
            let w = read_input(input, *mode, io.stdin)?;
            let cf = brute_leftmost_critical(&w).map_err(|e| from_core(e, Some(&w)))?;
            write_out(io.stdout, (cf.result_line() + "\n").as_bytes())
        }
        CommandPlan::Gen { family, mode } => {
            let w = family.generate().map_err(|e| from_core(e, None))?;
            let bytes = match mode.unwrap_or(Mode::Bytes) {
                Mode::Bytes => w.to_bytes(),
                Mode::Tokens => None,
            };
            match bytes {
                Some(b) => write_out(io.stdout, &b),
                None => {
                    if *mode != Some(Mode::Tokens) {
                        let _ = writeln!(
                            io.stderr,
                            "critfact: symbol ids exceed one byte; writing token mode"
                        );
                    }
                    write_out(io.stdout, (w.to_tokens() + "\n").as_bytes())
                }
            }
        }
        CommandPlan::Verify(v) => {
            let summary = verify(v, &SOLVERS)?;
            write_out(io.stdout, (summary + "\n").as_bytes())
        }
        CommandPlan::Bench(b) => {
            let records = run_suite(&b.cases, &b.algos, b.reps).map_err(|e| from_core(e, None))?;
            let mut csv = Vec::new();
            write_csv(&records, &mut csv).map_err(|e| bad_input(e.to_string()))?;
            match &b.out {
                Some(path) => fs::write(path, &csv)
                    .map_err(|e| bad_input(format!("{}: {e}", path.display())))?,
                None => write_out(io.stdout, &csv)?,
            }
            if let Ok(report) = summarize(&records) {
                let _ = write!(io.stderr, "{report}");
            }
            Ok(())
        }
    }
}

type Solver = fn(&SymString) -> critfact::Result<CriticalFactorization>;

const SOLVERS: [(&str, Solver); 3] = [
    ("oracle", brute_leftmost_critical),
    ("nlogn", |w| Algo::Nlogn.run(w).map(|r| r.0)),
    ("linear", |w| Algo::Linear.run(w).map(|r| r.0)),
];

fn check(w: &SymString, solvers: &[(&str, Solver)]) -> Result<(), Failure> {
    let mut answers = Vec::with_capacity(solvers.len());
    for (name, solve) in solvers {
        match solve(w) {
            Ok(cf) => answers.push((name, cf)),
            Err(e) => {
                return Err(invariant(format!(
                    "{name} failed: {e}\nwitness (tokens): {}",
                    w.to_tokens()
                )))
            }
        }
    }
    if answers.windows(2).all(|p| p[0].1 == p[1].1) {
        return Ok(());
    }
    let mut message = format!("disagreement\nwitness (tokens): {}", w.to_tokens());
    for (name, cf) in answers {
        message += &format!("\n  {name}: {}", cf.result_line());
    }
    Err(invariant(message))
}

/// Random alphabets cycle through these sizes.
const RANDOM_SIGMAS: [u32; 4] = [2, 3, 4, 26];

fn verify(plan: &VerifyPlan, solvers: &[(&str, Solver)]) -> Result<String, Failure> {
    let mut exhaustive = 0usize;
    for n in 2..=plan.max_n {
        for w in enumerate_canonical(n, plan.max_sigma) {
            check(&w, solvers)?;
            exhaustive += 1;
        }
    }
    let mut rng = SplitMix64::new(plan.seed);
    for t in 0..plan.random_count {
        let sigma = RANDOM_SIGMAS[t % RANDOM_SIGMAS.len()];
        let n = 2 + rng.below((plan.max_len - 1) as u32) as usize;
        let w = gen_random(n, sigma, rng.next_u64()).map_err(|e| from_core(e, None))?;
        check(&w, solvers)?;
    }
    Ok(format!(
        "verified {exhaustive} canonical and {} random strings: all agree",
        plan.random_count
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(args: &[&str]) -> CommandPlan {
        parse_args(args).unwrap()
    }

    #[test]
    fn parses_documented_plans() {
        assert_eq!(
            plan(&["factorize", "--algo", "linear", "file.txt"]),
            CommandPlan::Factorize {
                algo: Algo::Linear,
                input: Input::File("file.txt".into()),
                mode: Mode::Bytes,
                stats: false,
            }
        );
        assert_eq!(
            plan(&["gen", "--family", "adversarial", "--level", "5"]),
            CommandPlan::Gen {
                family: Family::Adversarial { level: 5 },
                mode: None,
            }
        );
        assert_eq!(
            plan(&["oracle", "--tokens", "-"]),
            CommandPlan::Oracle {
                input: Input::Stdin,
                mode: Mode::Tokens,
            }
        );
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["factorize", "--algo", "bogus", "x"][..],
            &["factorize", "--algo", "linear"],
            &["factorize", "--mode", "bytes", "--tokens", "x"],
            &["factorize", "--frobnicate", "x"],
            &["gen", "--family", "fibonacci"],
            &["gen", "--family", "thue-morse", "--k", "0"],
            &["bench", "--reps", "0"],
            &["bench", "--adversarial", "5..2"],
            &[],
        ] {
            let err = parse_args(args).unwrap_err();
            assert_eq!(err.exit_code(), EXIT_USAGE, "{args:?}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn bench_defaults_cover_every_family() {
        let CommandPlan::Bench(b) = plan(&["bench"]) else {
            panic!()
        };
        for name in ["adversarial", "fibonacci", "thue-morse", "random"] {
            assert!(b.cases.iter().any(|c| c.name() == name), "{name}");
        }
        assert_eq!(b.algos, Algo::ALL);
        let CommandPlan::Bench(b) = plan(&["bench", "--random", "10,20", "--algo", "nlogn"]) else {
            panic!()
        };
        assert_eq!(b.cases.len(), 2);
        assert_eq!(b.algos, [Algo::Nlogn]);
    }

    #[test]
    fn verify_reports_witness_on_disagreement() {
        let lying: [(&str, Solver); 2] = [
            ("oracle", brute_leftmost_critical),
            ("liar", |w| Ok(CriticalFactorization::new(2, 1, w.len()))),
        ];
        let v = VerifyPlan {
            max_n: 3,
            max_sigma: 2,
            random_count: 0,
            seed: 0,
            max_len: 2,
        };
        let err = verify(&v, &lying).unwrap_err();
        assert_eq!(err.code, EXIT_INVARIANT);
        assert!(
            err.message.contains("witness (tokens): 0 1"),
            "{}",
            err.message
        );
        assert!(verify(&v, &SOLVERS).is_ok());
    }
}
