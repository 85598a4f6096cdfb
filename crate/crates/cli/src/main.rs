//! Command-line front end: codecs on stdin/stdout words, brute-force
//! verification, class sweeps and counting statistics.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use burstperm::channel::{burst_delete, BurstSpec};
use burstperm::codes::{CodeParams, Cs1Params, Cs2Params, Cs3Params, Cs4Params, PsvtParams};
use burstperm::harness::{
    enumerate_code, fraction, sweep_code, sweep_single, verify_code, verify_single, StatKind,
    StatsReport, SweepTable, VerifyMode, VerifyOptions, VerifyReport,
};
use burstperm::single::{decode_message, decode_single, encode_single};
use burstperm::text::{format_word, parse_words};
use burstperm::{Error, Permutation};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "burstperm", version, about = "Burst stable deletion correcting permutation codes")]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for sampling and random corruption
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores, 1 = sequential)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Refuse runs estimated to need more decode operations than this
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Code {
    Cs1,
    Cs2,
    Psvt,
    Mpsvt,
    Cs3,
    Cs4,
}

impl Code {
    fn id(self) -> &'static str {
        match self {
            Code::Cs1 => "cs1",
            Code::Cs2 => "cs2",
            Code::Psvt => "psvt",
            Code::Mpsvt => "mpsvt",
            Code::Cs3 => "cs3",
            Code::Cs4 => "cs4",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecodeCode {
    Cs1,
    Cs2,
    Cs3,
    Cs4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyCode {
    Cs1,
    Cs2,
    Cs3,
    Cs4,
    Single,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    GoodFraction,
    DenseFraction,
}

#[derive(Subcommand)]
enum Command {
    /// Insert n into each permutation of 1..n-1 read from stdin
    EncodeSingle {
        #[arg(short)]
        a: u64,
    },
    /// Restore each received word (one deletion) read from stdin
    DecodeSingle {
        #[arg(short)]
        a: u64,
        /// Print the message, with n removed
        #[arg(long)]
        message: bool,
    },
    /// Decode received words from stdin
    Decode {
        #[arg(long, value_enum)]
        code: DecodeCode,
        #[arg(long)]
        params: PathBuf,
    },
    /// Apply one burst of stable deletions to each word from stdin
    Corrupt {
        /// Burst length
        #[arg(long)]
        len: usize,
        /// 1-based first deleted position; random (from --seed) when omitted
        #[arg(long)]
        start: Option<usize>,
    },
    /// Print true or false for each word from stdin
    Member {
        #[arg(long, value_enum)]
        code: Code,
        #[arg(long)]
        params: PathBuf,
    },
    /// Print every codeword in lexicographic order
    Enumerate {
        #[arg(long, value_enum)]
        code: Code,
        #[arg(long)]
        params: PathBuf,
    },
    /// Print the parameters whose syndromes are those of each word from stdin
    Params {
        #[arg(long, value_enum)]
        code: Code,
        #[arg(short)]
        s: usize,
        /// Localization window; a comma-separated list (one per burst length) for cs3/cs4
        #[arg(short = 'P', long = "P", value_delimiter = ',')]
        p: Vec<usize>,
        /// Largest multiplicity (cs2, cs4)
        #[arg(short)]
        r: Option<usize>,
        /// Per-symbol multiplicities (comma-separated)
        #[arg(long, value_delimiter = ',')]
        multiplicity: Option<Vec<usize>>,
        /// Density window (cs3, cs4)
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Decode every burst of every word and compare
    Verify {
        #[arg(long, value_enum)]
        code: VerifyCode,
        /// Shape of the code (syndrome targets are used only with --fixed-class)
        #[arg(long, required_unless_present = "n")]
        params: Option<PathBuf>,
        /// Length, for the single-deletion codec
        #[arg(long)]
        n: Option<usize>,
        /// Sample this many words instead of enumerating all
        #[arg(long)]
        samples: Option<u64>,
        /// Test only members of the class in --params
        #[arg(long)]
        fixed_class: bool,
        /// With --fixed-class, also intersect error balls pairwise
        #[arg(long)]
        disjoint: bool,
        /// Decode with a shifted syndrome target; the run should then fail
        #[arg(long)]
        inject_fault: bool,
    },
    /// Partition admissible words by syndrome tuple
    Sweep {
        #[arg(long, value_enum)]
        code: VerifyCode,
        #[arg(long, required_unless_present = "n")]
        params: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Residue modulus for the single-deletion sweep (default n)
        #[arg(long)]
        modulus: Option<u64>,
        /// Print every class, not only the summary
        #[arg(long)]
        rows: bool,
    },
    /// Fraction of permutations that are good or dense
    Stats {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        s: usize,
        #[arg(short = 'P', long = "P")]
        p: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
}

/// Exit status 1: something failed to decode or decoded wrongly.
/// Exit status 2: the request itself was malformed.
enum Failure {
    Found(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_decode_failure() {
            Failure::Found(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

fn read_words() -> Result<Vec<Vec<u32>>, Failure> {
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| invalid(format!("reading stdin: {}", e)))?;
    Ok(parse_words(&input)?)
}

fn load_params(code: &str, path: &PathBuf) -> Result<CodeParams, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {}", path.display(), e)))?;
    let mut value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {}", path.display(), e)))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| invalid(format!("{}: expected a JSON object", path.display())))?;
    match obj.get("code").and_then(|c| c.as_str()) {
        Some(c) if c != code => {
            return Err(invalid(format!("{} holds {} parameters, not {}", path.display(), c, code)))
        }
        Some(_) => {}
        None => {
            obj.insert("code".into(), code.into());
        }
    }
    let params: CodeParams =
        serde_json::from_value(value).map_err(|e| invalid(format!("{}: {}", path.display(), e)))?;
    params.validate()?;
    Ok(params)
}

/// Runs `f` on every word, printing results; failures go to stderr and make
/// the exit status 1 once all words are processed.
fn each_word(words: &[Vec<u32>], f: impl Fn(&[u32]) -> Result<String, Error>) -> Result<(), Failure> {
    let mut failed = 0;
    for (i, w) in words.iter().enumerate() {
        match f(w) {
            Ok(line) => println!("{}", line),
            Err(e) if e.is_decode_failure() => {
                eprintln!("word {}: {}", i + 1, e);
                failed += 1;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if failed > 0 {
        return Err(Failure::Found(format!("{} of {} words failed to decode", failed, words.len())));
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn print_verify(report: &VerifyReport, format: Format) {
    if format == Format::Json {
        println!("{}", json(report));
        return;
    }
    let mode = match report.mode {
        VerifyMode::Exhaustive => "exhaustive".to_string(),
        VerifyMode::Sampled { seed, samples } => format!("sampled ({} words, seed {})", samples, seed),
    };
    println!("code             {}", report.code);
    println!("params           {}", report.params);
    println!("mode             {}", mode);
    println!("words tested     {}", report.words_tested);
    println!("bursts tested    {}", report.bursts_tested);
    println!("decode failures  {}", report.decode_failures);
    println!("mismatches       {}", report.mismatches);
    if report.non_members > 0 {
        println!("non-members      {} ({} failed to decode)", report.non_members, report.non_member_failures);
    }
    if let Some(c) = report.ball_collisions {
        println!("ball collisions  {}", c);
    }
    println!("wall time        {} ms", report.wall_time_ms);
    println!("result           {}", if report.passed() { "PASS" } else { "FAIL" });
}

fn print_sweep(table: &SweepTable, format: Format, rows: bool) {
    if format == Format::Json {
        println!("{}", json(table));
        return;
    }
    if rows {
        for (k, size) in &table.rows {
            println!("{}\t{}", k, size);
        }
    }
    println!("total        {}", table.total);
    println!("classes      {}", table.classes);
    println!("max class    {}", table.max_class);
    println!("lower bound  {}", table.lower_bound);
}

fn print_stats(r: &StatsReport, format: Format) {
    if format == Format::Json {
        println!("{}", json(r));
        return;
    }
    let how = if r.exact {
        "exact count".to_string()
    } else {
        format!("{} samples, seed {}", r.trials, r.seed.unwrap_or_default())
    };
    println!("{} of {} ({})", r.hits, r.trials, how);
    println!("fraction  {:.6}", r.fraction);
    if !r.exact {
        println!("3-sigma   [{:.6}, {:.6}]", r.interval.0, r.interval.1);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let verify_opts = |mode, per_word, check_disjoint, inject_fault| VerifyOptions {
        mode,
        per_word,
        check_disjoint,
        jobs: cli.jobs,
        budget: cli.budget,
        inject_fault,
    };
    match cli.command {
        Command::EncodeSingle { a } => {
            let words = read_words()?;
            each_word(&words, |w| {
                let sigma = encode_single(&Permutation::new(w.to_vec())?, a)?;
                Ok(sigma.to_string())
            })
        }
        Command::DecodeSingle { a, message } => {
            let words = read_words()?;
            each_word(&words, |y| {
                let out = if message { decode_message(y, a)? } else { decode_single(y, a)? };
                Ok(out.to_string())
            })
        }
        Command::Decode { code, params } => {
            let id = match code {
                DecodeCode::Cs1 => "cs1",
                DecodeCode::Cs2 => "cs2",
                DecodeCode::Cs3 => "cs3",
                DecodeCode::Cs4 => "cs4",
            };
            let params = load_params(id, &params)?;
            let words = read_words()?;
            each_word(&words, |y| Ok(format_word(&params.decode(y)?)))
        }
        Command::Corrupt { len, start } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            for w in read_words()? {
                if len == 0 || len > w.len() {
                    return Err(invalid(format!("burst of {} does not fit a word of length {}", len, w.len())));
                }
                let st = match start {
                    Some(st) => st,
                    None => rng.gen_range(1..=w.len() - len + 1),
                };
                println!("{}", format_word(&burst_delete(&w, BurstSpec::new(st, len, w.len())?)?));
            }
            Ok(())
        }
        Command::Member { code, params } => {
            let params = load_params(code.id(), &params)?;
            for w in read_words()? {
                println!("{}", params.member(&w)?);
            }
            Ok(())
        }
        Command::Enumerate { code, params } => {
            let params = load_params(code.id(), &params)?;
            for w in enumerate_code(&params, cli.budget, cli.jobs)? {
                println!("{}", format_word(&w));
            }
            Ok(())
        }
        Command::Params { code, s, p, r, multiplicity, delta } => {
            let one = |what: &str| -> Result<usize, Failure> {
                match p.as_slice() {
                    [v] => Ok(*v),
                    _ => Err(invalid(format!("{} takes a single -P value", what))),
                }
            };
            let need_r = || r.ok_or_else(|| invalid("multi-permutation codes need -r"));
            let list = (!p.is_empty()).then(|| p.clone());
            for w in read_words()? {
                let params = match code {
                    Code::Cs1 => CodeParams::Cs1(Cs1Params::for_word(&w, s, one("cs1")?)?),
                    Code::Cs2 => CodeParams::Cs2(Cs2Params::for_word(&w, s, one("cs2")?, need_r()?, multiplicity.clone())?),
                    Code::Psvt => CodeParams::Psvt(PsvtParams::for_word(&w, s, one("psvt")?, None)?),
                    Code::Mpsvt => {
                        let m = multiplicity.clone().ok_or_else(|| invalid("mpsvt needs --multiplicity"))?;
                        CodeParams::Mpsvt(PsvtParams::for_word(&w, s, one("mpsvt")?, Some(m))?)
                    }
                    Code::Cs3 => CodeParams::Cs3(Cs3Params::for_word(&w, s, delta, list.clone())?),
                    Code::Cs4 => CodeParams::Cs4(Cs4Params::for_word(&w, s, need_r()?, multiplicity.clone(), delta, list.clone())?),
                };
                println!("{}", serde_json::to_string(&params).expect("params serialize"));
            }
            Ok(())
        }
        Command::Verify { code, params, n, samples, fixed_class, disjoint, inject_fault } => {
            let mode = match samples {
                Some(samples) => VerifyMode::Sampled { seed: cli.seed, samples },
                None => VerifyMode::Exhaustive,
            };
            let report = match code {
                VerifyCode::Single => {
                    let n = n.ok_or_else(|| invalid("the single-deletion codec needs --n"))?;
                    if inject_fault {
                        return Err(invalid("--inject-fault applies to the burst codes"));
                    }
                    verify_single(n, &verify_opts(VerifyMode::Exhaustive, true, false, false))?
                }
                _ => {
                    let id = verify_code_id(code);
                    let path = params.ok_or_else(|| invalid("--params is required"))?;
                    let params = load_params(id, &path)?;
                    verify_code(&params, &verify_opts(mode, !fixed_class, disjoint, inject_fault))?
                }
            };
            print_verify(&report, cli.format);
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Found(format!(
                    "{} decode failures, {} mismatches",
                    report.decode_failures, report.mismatches
                )))
            }
        }
        Command::Sweep { code, params, n, modulus, rows } => {
            let table = match code {
                VerifyCode::Single => {
                    let n = n.ok_or_else(|| invalid("the single-deletion sweep needs --n"))?;
                    sweep_single(n, modulus.unwrap_or(n as u64), cli.budget, cli.jobs)?
                }
                _ => {
                    let path = params.ok_or_else(|| invalid("--params is required"))?;
                    sweep_code(&load_params(verify_code_id(code), &path)?, cli.budget, cli.jobs)?
                }
            };
            print_sweep(&table, cli.format, rows);
            if table.pigeonhole_holds() {
                Ok(())
            } else {
                Err(Failure::Found("largest class is below the average".into()))
            }
        }
        Command::Stats { kind, n, s, p, delta, samples } => {
            let kind = match kind {
                Kind::GoodFraction => StatKind::GoodFraction {
                    p: p.ok_or_else(|| invalid("good-fraction needs -P"))?,
                },
                Kind::DenseFraction => StatKind::DenseFraction {
                    delta: delta.ok_or_else(|| invalid("dense-fraction needs --delta"))?,
                },
            };
            let report = fraction(kind, n, s, samples, cli.seed, cli.budget, cli.jobs)?;
            print_stats(&report, cli.format);
            Ok(())
        }
    }
}

fn verify_code_id(code: VerifyCode) -> &'static str {
    match code {
        VerifyCode::Cs1 => "cs1",
        VerifyCode::Cs2 => "cs2",
        VerifyCode::Cs3 => "cs3",
        VerifyCode::Cs4 => "cs4",
        VerifyCode::Single => "single",
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Found(msg)) => {
            eprintln!("burstperm: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("burstperm: {}", msg);
            ExitCode::from(2)
        }
    }
}
