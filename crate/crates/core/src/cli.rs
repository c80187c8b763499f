//! Command-line interface.
//!
//! Three subcommands: `invariant` evaluates one braid closure, `batch`
//! processes a file of braid inputs, and `verify` runs the self-check
//! suites. Exit codes: 0 success, 2 parse/usage error, 3 evaluation or
//! verification failure, 4 at least one batch item failed.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::braid::{parse, BraidWord};
use crate::error::Error;
use crate::invariant::{
    self, b2_closed_form, evaluate_closure, jones_via_v1, kauffman_jones, Mode,
    DEFAULT_CROSSING_CAP, DEFAULT_DIM_CAP,
};
use crate::report::Report;
use crate::ribbon::RibbonData;
use crate::scalars::{CycloRing, LaurentRing};
use crate::taft::TaftAlgebra;
use crate::ydmod::v_n;

#[derive(Parser)]
#[command(name = "taftknot", version, about = "Exact knot invariants from braid closures")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the invariant of one braid closure.
    Invariant {
        /// Braid word: `B3: s1^-1 s2` or `[1, -2]`.
        #[arg(long)]
        braid: String,
        /// Module index: the strand color is the (n+1)-dimensional module.
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// framed | balanced | reduced.
        #[arg(long, default_value = "balanced")]
        mode: String,
        /// Strand count override for index-list input.
        #[arg(long)]
        strands: Option<usize>,
        /// Largest representation size that will be materialized.
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate every braid listed in a file (one per line, `#` comments).
    Batch {
        /// Input path, or `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value = "balanced")]
        mode: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a self-check suite.
    Verify {
        /// hopf | yd | braid-eq | ribbon | markov | jones | all.
        #[arg(long)]
        suite: String,
        /// Root-of-unity order for the specialized checks (odd, >= 3).
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Seed for the randomized checks; echoed in the output.
        #[arg(long, default_value_t = 0xBAD5EED)]
        seed: u64,
        /// Number of randomized cases per check.
        #[arg(long, default_value_t = 25)]
        cases: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Invariant { braid, n, mode, strands, cap, format } => {
            run_invariant(&braid, n, &mode, strands, cap, format)
        }
        Command::Batch { input, n, mode, strands, cap, format } => {
            run_batch(&input, n, &mode, strands, cap, format)
        }
        Command::Verify { suite, m, n, seed, cases, format } => {
            run_verify(&suite, m, n, seed, cases, format)
        }
    }
}

fn run_invariant(
    braid: &str,
    n: u32,
    mode: &str,
    strands: Option<usize>,
    cap: u64,
    format: Format,
) -> i32 {
    let mode: Mode = match mode.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let word = match parse(braid, strands) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match invariant::evaluate(&word, n, mode, cap) {
        Ok(result) => {
            match format {
                Format::Machine => {
                    println!("{}", serde_json::to_string(&result).unwrap());
                }
                Format::Text => {
                    println!("braid:      {}", result.braid);
                    println!("strands:    {}", result.strands);
                    println!("writhe:     {}", result.writhe);
                    println!("components: {}", result.components);
                    println!("module:     V_{}", result.module);
                    println!("mode:       {}", result.mode);
                    println!("value:      {}", result.value_pretty);
                }
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn run_batch(
    input: &PathBuf,
    n: u32,
    mode: &str,
    strands: Option<usize>,
    cap: u64,
    format: Format,
) -> i32 {
    let mode: Mode = match mode.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = if input.as_os_str() == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("error: {e}");
            return 2;
        }
        buf
    } else {
        match std::fs::read_to_string(input) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", input.display());
                return 2;
            }
        }
    };
    let items = invariant::batch_evaluate(
        text.lines().map(str::to_string),
        n,
        mode,
        strands,
        cap,
    );
    let mut failed = false;
    for item in &items {
        match (&item.result, format) {
            (Ok(r), Format::Machine) => {
                println!(
                    "{}",
                    json!({"input": item.input, "ok": true, "result": r})
                );
            }
            (Ok(r), Format::Text) => {
                println!("{} -> {}", item.input, r.value_pretty);
            }
            (Err(e), Format::Machine) => {
                failed = true;
                println!(
                    "{}",
                    json!({"input": item.input, "ok": false, "error": e.to_string()})
                );
            }
            (Err(e), Format::Text) => {
                failed = true;
                println!("{} -> error: {e}", item.input);
            }
        }
    }
    if failed {
        4
    } else {
        0
    }
}

fn run_verify(suite: &str, m: u32, n: u32, seed: u64, cases: usize, format: Format) -> i32 {
    let reports = match verify_suite(suite, m, n, seed, cases) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Parse(_) => 2,
                _ => 3,
            };
        }
    };
    let all_pass = reports.iter().all(Report::all_pass);
    match format {
        Format::Machine => {
            for r in &reports {
                println!(
                    "{}",
                    json!({"seed": seed, "report": r, "pass": r.all_pass()})
                );
            }
        }
        Format::Text => {
            println!("seed: {seed}");
            for r in &reports {
                println!("{r}");
            }
        }
    }
    if all_pass {
        0
    } else {
        3
    }
}

/// Runs one named suite (or `all`) and returns its reports. Public so the
/// acceptance tests can drive the same checks the CLI exposes.
pub fn verify_suite(
    suite: &str,
    m: u32,
    n: u32,
    seed: u64,
    cases: usize,
) -> Result<Vec<Report>, Error> {
    match suite {
        "hopf" => Ok(vec![TaftAlgebra::new(m)?.verify_hopf()]),
        "yd" => verify_yd(m, n),
        "braid-eq" => Ok(vec![verify_braid_eq(n, seed, cases)?]),
        "ribbon" => {
            let generic = RibbonData::new(&LaurentRing, n)?.verify();
            let special = RibbonData::new(&CycloRing::new(m)?, n)?.verify();
            Ok(vec![generic, special])
        }
        "markov" => Ok(vec![verify_markov(n, seed, cases)?]),
        "jones" => Ok(vec![verify_jones(seed, cases)?]),
        "all" => {
            let mut out = Vec::new();
            for s in ["hopf", "yd", "braid-eq", "ribbon", "markov", "jones"] {
                out.extend(verify_suite(s, m, n, seed, cases)?);
            }
            Ok(out)
        }
        other => Err(Error::Parse(format!("unknown suite {other:?}"))),
    }
}

fn verify_yd(m: u32, n: u32) -> Result<Vec<Report>, Error> {
    let ring = LaurentRing;
    let module = v_n(&ring, n)?;
    let mut generic = Report::new(format!("yd generic n={n}"));
    generic.merge(module.verify());
    generic.merge(module.dual().verify());
    generic.merge(module.tensor(&module).verify());
    let cring = CycloRing::new(m)?;
    let mut special = Report::new(format!("yd specialized m={m} n={n}"));
    let smodule = v_n(&cring, n)?;
    special.merge(smodule.verify());
    special.merge(smodule.dual().verify());
    Ok(vec![generic, special])
}

/// Random braid words for the randomized suites.
pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let j = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                j
            } else {
                -j
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("generated letters are in range")
}

fn verify_braid_eq(n: u32, seed: u64, cases: usize) -> Result<Report, Error> {
    let ring = LaurentRing;
    let rib = RibbonData::new(&ring, n)?;
    let mut report = Report::new(format!("braid-eq n={n} seed={seed}"));

    // Yang-Baxter and distant commutation on fixed small words.
    let yb_l = parse("B3: s1 s2 s1", None)?.representation(&rib, DEFAULT_DIM_CAP)?;
    let yb_r = parse("B3: s2 s1 s2", None)?.representation(&rib, DEFAULT_DIM_CAP)?;
    report.push("Yang-Baxter relation on three strands", yb_l == yb_r, None);
    let fc_l = parse("B4: s1 s3", None)?.representation(&rib, DEFAULT_DIM_CAP)?;
    let fc_r = parse("B4: s3 s1", None)?.representation(&rib, DEFAULT_DIM_CAP)?;
    report.push("distant generators commute", fc_l == fc_r, None);

    // rho is an anti-morphism of words: rho(uv) = rho(v) rho(u).
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fail = None;
    for _ in 0..cases {
        let strands = rng.gen_range(2..=3usize);
        let len_u = rng.gen_range(0..=4);
        let u = random_word(&mut rng, strands, len_u);
        let len_v = rng.gen_range(0..=4);
        let v = random_word(&mut rng, strands, len_v);
        let mut uv = u.letters.clone();
        uv.extend_from_slice(&v.letters);
        let uv = BraidWord::new(strands, uv)?;
        let lhs = uv.representation(&rib, DEFAULT_DIM_CAP)?;
        let rhs = v
            .representation(&rib, DEFAULT_DIM_CAP)?
            .mul(&ring, &u.representation(&rib, DEFAULT_DIM_CAP)?);
        if lhs != rhs {
            fail = Some(format!("{u} then {v}"));
            break;
        }
    }
    report.push("word concatenation composes", fail.is_none(), fail);
    Ok(report)
}

fn verify_markov(n: u32, seed: u64, cases: usize) -> Result<Report, Error> {
    let ring = LaurentRing;
    let rib = RibbonData::new(&ring, n)?;
    let mut report = Report::new(format!("markov n={n} seed={seed} cases={cases}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conj_fail = None;
    let mut stab_fail = None;
    for _ in 0..cases {
        let strands = rng.gen_range(2..=4usize);
        let len = rng.gen_range(1..=6);
        let w = random_word(&mut rng, strands, len);
        let base = evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP)?;

        let len_a = rng.gen_range(1..=3);
        let a = random_word(&mut rng, strands, len_a);
        let conj = w.conjugate(&a.letters)?;
        let cval = evaluate_closure(&rib, &conj, Mode::Balanced, DEFAULT_DIM_CAP)?;
        if conj_fail.is_none() && cval != base {
            conj_fail = Some(w.to_string());
        }

        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let stab = w.stabilize(sign);
        let sval = evaluate_closure(&rib, &stab, Mode::Balanced, DEFAULT_DIM_CAP)?;
        if stab_fail.is_none() && sval != base {
            stab_fail = Some(w.to_string());
        }
    }
    report.push("invariance under conjugation", conj_fail.is_none(), conj_fail);
    report.push("invariance under stabilization", stab_fail.is_none(), stab_fail);

    // The closed-form two-strand evaluation agrees with the trace for the
    // (2, +-k) torus closures.
    let mut fail = None;
    for k in -4i64..=4 {
        let letters: Vec<i32> = (0..k.unsigned_abs()).map(|_| k.signum() as i32).collect();
        let w = BraidWord::new(2, letters)?;
        let trace = evaluate_closure(&rib, &w, Mode::Framed, DEFAULT_DIM_CAP)?;
        if b2_closed_form(&rib, k) != trace {
            fail = Some(format!("k = {k}"));
            break;
        }
    }
    report.push("closed-form two-strand pairing", fail.is_none(), fail);
    Ok(report)
}

fn verify_jones(seed: u64, cases: usize) -> Result<Report, Error> {
    let mut report = Report::new(format!("jones seed={seed} cases={cases}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fail = None;
    for _ in 0..cases {
        let strands = rng.gen_range(2..=3usize);
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, strands, len);
        let engine = jones_via_v1(&w, DEFAULT_DIM_CAP)?;
        let oracle = kauffman_jones(&w, DEFAULT_CROSSING_CAP)?;
        if engine != oracle {
            fail = Some(w.to_string());
            break;
        }
    }
    report.push(
        "reduced V_1 invariant matches the Kauffman bracket",
        fail.is_none(),
        fail,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_all_suites_pass() {
        let reports = verify_suite("all", 3, 1, 7, 5).unwrap();
        for r in &reports {
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn unknown_suite_is_parse_error() {
        assert!(matches!(
            verify_suite("nope", 3, 1, 7, 5),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn run_reports_exit_codes() {
        // Bad mode -> 2; fine invariant -> 0.
        assert_eq!(
            run(["taftknot", "invariant", "--braid", "B2: s1^3", "--mode", "wat"]),
            2
        );
        assert_eq!(
            run(["taftknot", "invariant", "--braid", "B2: s1^3"]),
            0
        );
        assert_eq!(run(["taftknot", "invariant", "--braid", "B2: s9"]), 2);
        assert_eq!(
            run(["taftknot", "verify", "--suite", "markov", "--cases", "3"]),
            0
        );
    }
}
