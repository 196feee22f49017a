//! Command-line front end: compute Φ/Ψ/Γ and factorizations of Y^n − 1, run
//! verification suites over ranges of n, and run the benchmark harness.
//!
//! Results go to the output stream, diagnostics and failure witnesses to the
//! error stream. Exit codes: 0 success, 1 verification/assertion failure,
//! 2 usage error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use cyclotomic::cyclo::{self, CycloAlgo};
use cyclotomic::numth;
use cyclotomic::polyz::{self, IntPoly};
use cyclotomic::qnring::{self, QnError, DEFAULT_DIM_CAP};
use num_bigint::BigInt;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

const DEFAULT_SEED: u64 = 0x00C0_FFEE;
const DEFAULT_PAIRS: u64 = 200;

#[derive(Parser)]
#[command(
    name = "cyclo",
    version,
    about = "Exact cyclotomic polynomial calculator and verifier"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the cyclotomic polynomial Φ_n
    Phi {
        n: u64,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// Compute the inverse cyclotomic polynomial Ψ_n = (Y^n − 1)/Φ_n
    Psi {
        n: u64,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// Compute the all-ones polynomial Γ_n = (Y^n − 1)/(Y − 1)
    Gamma {
        n: u64,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// Factor Y^n − 1 into cyclotomic parts, one line per divisor of n
    Factor {
        n: u64,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// Run a verification suite; failures are reported with witnesses
    Verify {
        /// Which suite to run
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Upper bound on n (each suite has its own default)
        #[arg(long)]
        max_n: Option<u64>,
        /// Number of random pairs for the coprimality suite
        #[arg(long)]
        pairs: Option<u64>,
        /// RNG seed for the coprimality suite
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time Φ_n constructions over a range and emit CSV records
    Bench {
        /// First n, inclusive
        #[arg(long)]
        from: u64,
        /// Last n, inclusive
        #[arg(long)]
        to: u64,
        /// Comma-separated algorithms to time
        #[arg(long, value_enum, value_delimiter = ',', default_value = "auto")]
        algos: Vec<AlgoArg>,
        /// Skip n with a repeated prime factor
        #[arg(long)]
        square_free_only: bool,
        /// Write CSV here instead of the output stream
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, clap::Args)]
struct ComputeOpts {
    /// Construction to use (honored by phi; others are algorithm-independent)
    #[arg(long, value_enum, default_value_t = AlgoArg::Auto)]
    algo: AlgoArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    /// Divisor-indexed lcm
    Lcm,
    /// Prime-indexed lcm
    PrimeLcm,
    /// Divide out Φ_d recursively
    Recursive,
    /// Reduce to the square-free radical
    Radical,
    /// Negate the half-index polynomial (n ≡ 2 mod 4 only)
    NegOdd,
    /// Same as radical
    Auto,
}

impl AlgoArg {
    fn to_algo(self) -> CycloAlgo {
        match self {
            AlgoArg::Lcm => CycloAlgo::DefLcm,
            AlgoArg::PrimeLcm => CycloAlgo::PrimeLcm,
            AlgoArg::Recursive => CycloAlgo::Recursive,
            AlgoArg::Radical => CycloAlgo::Radical,
            AlgoArg::NegOdd => CycloAlgo::NegOdd,
            AlgoArg::Auto => CycloAlgo::Auto,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Descending powers of Y
    Pretty,
    /// Ascending coefficients, space-separated
    Coeffs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// deg Φ_n = φ(n) and Σ_{d|n} φ(d) = n
    Degree,
    /// Π_{d|n} Φ_d = Y^n − 1
    Factorization,
    /// Distinct cyclotomics are coprime, on random pairs
    Coprimality,
    /// Φ_n(Y) divides Φ_n(Y^r) for r coprime to n
    Lemma35,
    /// Quotient-ring checks in Q[Y]/⟨Φ_n⟩
    Qn,
    /// Every suite in order
    All,
}

/// One timed Φ_n computation.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub n: u64,
    pub algo: &'static str,
    pub wall_nanos: u128,
    pub degree: usize,
    pub height: BigInt,
}

/// Two constructions disagreed on Φ_n; correctness outranks timing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchMismatch {
    pub n: u64,
    pub reference: &'static str,
    pub disagreeing: &'static str,
}

/// Entry point shared by the binary and the tests. Writes results to `out`,
/// diagnostics to `err`, and returns the process exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match cli.cmd {
        Cmd::Phi { n, opts } => run_phi(n, opts, out, err),
        Cmd::Psi { n, opts } => run_simple(n, opts, out, err, cyclo::psi),
        Cmd::Gamma { n, opts } => run_simple(n, opts, out, err, cyclo::gamma),
        Cmd::Factor { n, opts } => run_factor(n, opts, out, err),
        Cmd::Verify {
            suite,
            max_n,
            pairs,
            seed,
        } => run_verify(suite, max_n, pairs, seed, out, err),
        Cmd::Bench {
            from,
            to,
            algos,
            square_free_only,
            csv,
        } => run_bench(from, to, &algos, square_free_only, csv.as_deref(), out, err),
    }
}

/// Times Φ_n for every (n, algo) pair in the inclusive range, skipping
/// combinations where the construction does not apply, and verifies that all
/// algorithms produced identical coefficients before returning.
pub fn bench(
    from: u64,
    to: u64,
    algos: &[CycloAlgo],
    square_free_only: bool,
) -> Result<Vec<BenchRecord>, BenchMismatch> {
    assert!(from >= 1 && from <= to, "bench: empty or invalid range");
    assert!(!algos.is_empty(), "bench: no algorithms selected");
    let mut records = Vec::new();
    for n in from..=to {
        if square_free_only && numth::radical(n) != n {
            continue;
        }
        let mut reference: Option<(&'static str, IntPoly)> = None;
        for &algo in algos {
            let start = Instant::now();
            let f = match cyclo::phi(n, algo) {
                Ok(f) => f,
                Err(_) => continue, // outside this construction's window
            };
            let wall_nanos = start.elapsed().as_nanos();
            if let Some((ref_tag, ref_poly)) = &reference {
                if f != *ref_poly {
                    return Err(BenchMismatch {
                        n,
                        reference: ref_tag,
                        disagreeing: algo.tag(),
                    });
                }
            } else {
                reference = Some((algo.tag(), f.clone()));
            }
            records.push(BenchRecord {
                n,
                algo: algo.tag(),
                wall_nanos,
                degree: f.degree().expect("Φ_n is never zero"),
                height: f.height(),
            });
        }
    }
    Ok(records)
}

fn render(f: &IntPoly, format: FormatArg) -> String {
    match format {
        FormatArg::Pretty => f.to_pretty_string(),
        FormatArg::Coeffs => f.to_coeffs_string(),
    }
}

fn require_positive(n: u64, err: &mut dyn Write) -> Result<(), i32> {
    if n == 0 {
        let _ = writeln!(err, "error: n must be a positive integer");
        return Err(2);
    }
    Ok(())
}

fn run_phi(n: u64, opts: ComputeOpts, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(code) = require_positive(n, err) {
        return code;
    }
    match cyclo::phi(n, opts.algo.to_algo()) {
        Ok(f) => {
            let _ = writeln!(out, "{}", render(&f, opts.format));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn run_simple(
    n: u64,
    opts: ComputeOpts,
    out: &mut dyn Write,
    err: &mut dyn Write,
    compute: fn(u64) -> IntPoly,
) -> i32 {
    if let Err(code) = require_positive(n, err) {
        return code;
    }
    let f = compute(n);
    let _ = writeln!(out, "{}", render(&f, opts.format));
    0
}

fn run_factor(n: u64, opts: ComputeOpts, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(code) = require_positive(n, err) {
        return code;
    }
    let factorization = cyclo::factor_unity(n);
    for (d, f) in &factorization.parts {
        let _ = writeln!(out, "{d}: {}", render(f, opts.format));
    }
    0
}

fn qn_cap(err: &mut dyn Write) -> Result<usize, i32> {
    match std::env::var("CYCLO_QN_DIM_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DIM_CAP),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => {
                let _ = writeln!(
                    err,
                    "error: CYCLO_QN_DIM_CAP must be a positive integer, got {s:?}"
                );
                Err(2)
            }
        },
        Err(std::env::VarError::NotUnicode(_)) => {
            let _ = writeln!(err, "error: CYCLO_QN_DIM_CAP is not valid unicode");
            Err(2)
        }
    }
}

struct SuiteOutcome {
    name: &'static str,
    passed: u64,
    total: u64,
}

fn run_verify(
    suite: SuiteArg,
    max_n: Option<u64>,
    pairs: Option<u64>,
    seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let pairs = pairs.unwrap_or(DEFAULT_PAIRS);
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let suites: &[SuiteArg] = match suite {
        SuiteArg::All => &[
            SuiteArg::Degree,
            SuiteArg::Factorization,
            SuiteArg::Coprimality,
            SuiteArg::Lemma35,
            SuiteArg::Qn,
        ],
        _ => std::slice::from_ref(&suite),
    };
    let mut failed = false;
    for &s in suites {
        let outcome = match s {
            SuiteArg::Degree => verify_degree(max_n.unwrap_or(10_000), err),
            SuiteArg::Factorization => verify_factorization(max_n.unwrap_or(1000), err),
            SuiteArg::Coprimality => {
                let max_e = max_n.unwrap_or(300);
                if max_e < 3 {
                    let _ = writeln!(err, "error: coprimality needs --max-n of at least 3");
                    return 2;
                }
                verify_coprimality(max_e, pairs, seed, err)
            }
            SuiteArg::Lemma35 => verify_lemma35(max_n.unwrap_or(50), err),
            SuiteArg::Qn => {
                let cap = match qn_cap(err) {
                    Ok(cap) => cap,
                    Err(code) => return code,
                };
                verify_qn(max_n.unwrap_or(30), cap, err)
            }
            SuiteArg::All => unreachable!("expanded above"),
        };
        let verdict = if outcome.passed == outcome.total {
            "OK"
        } else {
            failed = true;
            "FAIL"
        };
        let _ = writeln!(
            out,
            "{verdict} {} {}/{}",
            outcome.name, outcome.passed, outcome.total
        );
    }
    if failed {
        1
    } else {
        0
    }
}

fn verify_degree(max_n: u64, err: &mut dyn Write) -> SuiteOutcome {
    let mut passed = 0;
    for n in 1..=max_n {
        let f = cyclo::phi(n, CycloAlgo::Auto).expect("AUTO applies everywhere");
        let expected = numth::euler_phi(n);
        let degree_ok = f.degree() == Some(expected as usize);
        if !degree_ok {
            let _ = writeln!(
                err,
                "FAIL degree: n = {n}: deg Φ_n = {:?}, φ(n) = {expected}",
                f.degree()
            );
        }
        let total: u64 = numth::divisors(n).iter().map(|&d| numth::euler_phi(d)).sum();
        let sum_ok = total == n;
        if !sum_ok {
            let _ = writeln!(err, "FAIL degree: n = {n}: Σ φ(d) over d | n = {total}");
        }
        if degree_ok && sum_ok {
            passed += 1;
        }
    }
    SuiteOutcome {
        name: "degree",
        passed,
        total: max_n,
    }
}

fn verify_factorization(max_n: u64, err: &mut dyn Write) -> SuiteOutcome {
    let mut passed = 0;
    for n in 1..=max_n {
        let mut prod = IntPoly::one();
        for d in numth::divisors(n) {
            prod = polyz::mul(&prod, &cyclo::phi(d, CycloAlgo::Auto).expect("AUTO applies"));
        }
        if prod == IntPoly::y_pow_minus_one(n) {
            passed += 1;
        } else {
            let _ = writeln!(err, "FAIL factorization: n = {n}: Π Φ_d ≠ Y^n − 1");
        }
    }
    SuiteOutcome {
        name: "factorization",
        passed,
        total: max_n,
    }
}

fn verify_coprimality(max_e: u64, pairs: u64, seed: u64, err: &mut dyn Write) -> SuiteOutcome {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha20Rng| 2 + rng.next_u64() % (max_e - 1);
    let mut passed = 0;
    for _ in 0..pairs {
        let d = draw(&mut rng);
        let mut e = draw(&mut rng);
        while e == d {
            e = draw(&mut rng);
        }
        let reports = cyclo::check_lemma31(d, e);
        if reports.iter().all(|r| r.holds) {
            passed += 1;
        } else {
            for r in reports.iter().filter(|r| !r.holds) {
                let _ = writeln!(
                    err,
                    "FAIL coprimality: d = {d}, e = {e}, case {}",
                    r.case
                );
            }
        }
    }
    SuiteOutcome {
        name: "coprimality",
        passed,
        total: pairs,
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn verify_lemma35(max_n: u64, err: &mut dyn Write) -> SuiteOutcome {
    let mut passed = 0;
    let mut total = 0;
    for n in 2..=max_n {
        for r in 1..n {
            if gcd(r, n) != 1 {
                continue;
            }
            total += 1;
            if cyclo::check_lemma35(n, r) {
                passed += 1;
            } else {
                let _ = writeln!(err, "FAIL lemma35: n = {n}, r = {r}");
            }
        }
    }
    SuiteOutcome {
        name: "lemma35",
        passed,
        total,
    }
}

fn verify_qn(max_n: u64, cap: usize, err: &mut dyn Write) -> SuiteOutcome {
    let mut passed = 0;
    let mut total = 0;
    for n in 1..=max_n {
        let split = match qnring::check_lemma34(n, cap) {
            Err(QnError::CapExceeded { dim, .. }) => {
                let _ = writeln!(err, "skip qn: n = {n}: dim {dim} exceeds cap {cap}");
                continue;
            }
            Err(e) => {
                let _ = writeln!(err, "FAIL qn: n = {n}: {e}");
                total += 1;
                continue;
            }
            Ok(ok) => ok,
        };
        total += 1;
        if !split {
            let _ = writeln!(err, "FAIL qn: n = {n}: Y^n − 1 did not split over Q_n");
            continue;
        }
        let product = qnring::check_theorem33_product(n, cap).expect("cap already checked");
        if !product {
            let _ = writeln!(
                err,
                "FAIL qn: n = {n}: unit-circle product did not recover Φ_n"
            );
            continue;
        }
        if n >= 2 {
            let report = qnring::check_cor37(n, cap).expect("cap already checked");
            if !report.holds {
                let _ = writeln!(
                    err,
                    "FAIL qn: n = {n}: generator order {:?}, expected {}",
                    report.generator_order, report.expected
                );
                continue;
            }
        }
        passed += 1;
    }
    SuiteOutcome {
        name: "qn",
        passed,
        total,
    }
}

fn run_bench(
    from: u64,
    to: u64,
    algo_args: &[AlgoArg],
    square_free_only: bool,
    csv: Option<&std::path::Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if from == 0 || from > to {
        let _ = writeln!(err, "error: --from must satisfy 1 <= from <= to");
        return 2;
    }
    if algo_args.is_empty() {
        let _ = writeln!(err, "error: --algos must name at least one algorithm");
        return 2;
    }
    let algos: Vec<CycloAlgo> = algo_args.iter().map(|a| a.to_algo()).collect();
    let records = match bench(from, to, &algos, square_free_only) {
        Ok(records) => records,
        Err(m) => {
            let _ = writeln!(
                err,
                "FAIL bench: n = {}: {} disagrees with {}",
                m.n, m.disagreeing, m.reference
            );
            return 1;
        }
    };
    let mut body = String::from("n,algo,wall_nanos,degree,height\n");
    for r in &records {
        body.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n, r.algo, r.wall_nanos, r.degree, r.height
        ));
    }
    match csv {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 1;
            }
            let _ = writeln!(out, "wrote {} records to {}", records.len(), path.display());
        }
        None => {
            let _ = write!(out, "{body}");
        }
    }
    0
}
