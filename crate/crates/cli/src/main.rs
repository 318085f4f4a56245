use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dodecic::arith::factorize;
use dodecic::characterize::{predict_f, Prediction};
use dodecic::galois::{
    classify_f_with_evidence, classify_g6, statements, CycleTypeEvidence, MIN_PRIME_BOUND,
};
use dodecic::harness::{self, CheckOutcome, OracleReport, PairAnalysis, ScanRow, ScanSummary};
use dodecic::trinomial::{delta, w};
use dodecic::{GaloisLabel, QuadraticLikeTrinomial};

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(
    name = "dodecic",
    version,
    about = "Galois groups and monogenicity of x^12 + a x^6 + b"
)]
struct Cli {
    /// Upper bound on the primes sampled for Frobenius cycle types.
    #[arg(long, global = true, default_value_t = 10_000)]
    prime_bound: u64,
    /// Worker threads for scans and checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report on a single pair (a, b).
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long)]
        json: bool,
    },
    /// Write one row per pair in a box.
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        amin: i64,
        #[arg(long, allow_negative_numbers = true)]
        amax: i64,
        #[arg(long, allow_negative_numbers = true)]
        bmin: i64,
        #[arg(long, allow_negative_numbers = true)]
        bmax: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check the characterization theorems over |a|, |b| <= N.
    Verify {
        #[arg(long = "box", value_name = "N")]
        size: i64,
    },
    /// Compare the per-prime index conditions with Dedekind over |a|, |b| <= N.
    OracleCheck {
        #[arg(long = "box", value_name = "N")]
        size: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: USAGE,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Self {
            code: MISMATCH,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    let result = match cli.command {
        Command::Classify { a, b, json } => run_classify(a, b, json, cli.prime_bound),
        Command::Scan {
            amin,
            amax,
            bmin,
            bmax,
            out,
            format,
        } => run_scan((amin, amax), (bmin, bmax), &out, format),
        Command::Verify { size } => run_verify(size, cli.prime_bound),
        Command::OracleCheck { size } => run_oracle_check(size),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct EvidenceSummary {
    prime_bound: u64,
    sampled_primes: usize,
    distinct_cycle_types: usize,
    certificate_prime: Option<u64>,
    certificate_cycle_type: Option<Vec<u32>>,
    miss_probability: Option<f64>,
}

impl From<&CycleTypeEvidence> for EvidenceSummary {
    fn from(e: &CycleTypeEvidence) -> Self {
        Self {
            prime_bound: e.prime_bound,
            sampled_primes: e.sampled_primes,
            distinct_cycle_types: e.observed_types.len(),
            certificate_prime: e.certificate.as_ref().map(|c| c.prime),
            certificate_cycle_type: e.certificate.as_ref().map(|c| c.cycle_type.clone()),
            miss_probability: e.miss_probability,
        }
    }
}

#[derive(Serialize)]
struct Obstruction {
    prime: String,
    condition: u8,
}

#[derive(Serialize)]
struct ClassifyReport {
    a: i64,
    b: i64,
    polynomial: String,
    irreducible: bool,
    discriminant: String,
    discriminant_factorization: String,
    delta: String,
    w: String,
    p: bool,
    q: bool,
    r: bool,
    s: bool,
    #[serde(rename = "G4")]
    g4: Option<GaloisLabel>,
    #[serde(rename = "G6")]
    g6: Option<GaloisLabel>,
    g6_evidence: Option<EvidenceSummary>,
    #[serde(rename = "Gal_f")]
    gal_f: Option<GaloisLabel>,
    gal_f_evidence: Option<EvidenceSummary>,
    monogenic: Option<bool>,
    obstruction: Option<Obstruction>,
    prediction: Option<Prediction>,
    prediction_agrees: bool,
}

fn classify_report(a: i64, b: i64, prime_bound: u64) -> Result<ClassifyReport, Failure> {
    check_prime_bound(prime_bound)?;
    let f = QuadraticLikeTrinomial::dodecic(a, b).map_err(|e| Failure::usage(e.to_string()))?;
    let internal = |e: dodecic::Error| Failure::mismatch(e.to_string());
    let pair = PairAnalysis::new(a, b);
    let disc = f.discriminant();
    let st = statements(a, b);
    let g6_evidence = match pair.g6 {
        Some(_) => Some(classify_g6(a, b, prime_bound).map_err(internal)?.1),
        None => None,
    };
    let f_evidence = match pair.gal_f() {
        Some(_) => Some(
            classify_f_with_evidence(a, b, prime_bound)
                .map_err(internal)?
                .1,
        ),
        None => None,
    };
    let obstruction = pair
        .f
        .as_ref()
        .and_then(|r| r.obstruction())
        .map(|v| Obstruction {
            prime: v.prime.to_string(),
            condition: v.condition.number(),
        });
    Ok(ClassifyReport {
        a,
        b,
        polynomial: f.to_string(),
        irreducible: pair.f_irreducible(),
        discriminant_factorization: factorize(&disc).map_err(internal)?.to_string(),
        discriminant: disc.to_string(),
        delta: delta(a, b).to_string(),
        w: w(a, b).to_string(),
        p: st.p,
        q: st.q,
        r: st.r,
        s: st.s,
        g4: pair.g4_label,
        g6: pair.g6_label,
        g6_evidence: g6_evidence.as_ref().map(EvidenceSummary::from),
        gal_f: pair.gal_f(),
        gal_f_evidence: f_evidence.as_ref().map(EvidenceSummary::from),
        monogenic: pair.f.as_ref().map(|r| r.monogenic),
        obstruction,
        prediction: pair
            .f
            .as_ref()
            .map(|_| predict_f(a, b))
            .transpose()
            .map_err(internal)?,
        prediction_agrees: pair.prediction_agrees(),
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn evidence_line(e: &Option<EvidenceSummary>) -> String {
    let Some(e) = e else {
        return String::new();
    };
    let mut s = format!(
        " ({} primes <= {}, {} cycle types",
        e.sampled_primes, e.prime_bound, e.distinct_cycle_types
    );
    if let (Some(p), Some(t)) = (e.certificate_prime, &e.certificate_cycle_type) {
        let _ = write!(s, ", certificate {t:?} at p = {p}");
    }
    match e.miss_probability {
        Some(m) => {
            let _ = write!(s, ", miss probability {m:.3e})");
        }
        None => s.push(')'),
    }
    s
}

fn render_text(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f = {}", r.polynomial);
    let _ = writeln!(s, "irreducible: {}", r.irreducible);
    let _ = writeln!(
        s,
        "discriminant: {} = {}",
        r.discriminant, r.discriminant_factorization
    );
    let _ = writeln!(s, "delta: {}", r.delta);
    let _ = writeln!(s, "W: {}", r.w);
    let _ = writeln!(s, "P Q R S: {} {} {} {}", r.p, r.q, r.r, r.s);
    let _ = writeln!(s, "G4: {}", opt(&r.g4));
    let _ = writeln!(s, "G6: {}{}", opt(&r.g6), evidence_line(&r.g6_evidence));
    let _ = writeln!(
        s,
        "Gal(f): {}{}",
        opt(&r.gal_f),
        evidence_line(&r.gal_f_evidence)
    );
    match (r.monogenic, &r.obstruction) {
        (None, _) => {
            let _ = writeln!(s, "monogenic: - (reducible)");
        }
        (Some(true), _) => {
            let _ = writeln!(s, "monogenic: true");
        }
        (Some(false), Some(o)) => {
            let _ = writeln!(
                s,
                "monogenic: false (q = {} divides the index, condition ({}))",
                o.prime, o.condition
            );
        }
        (Some(false), None) => {
            let _ = writeln!(s, "monogenic: false");
        }
    }
    if let Some(p) = &r.prediction {
        let _ = writeln!(
            s,
            "prediction: monogenic {} label {} rule {} (agrees: {})",
            p.predicted_monogenic,
            opt(&p.predicted_label),
            opt(&p.matched_rule),
            r.prediction_agrees
        );
    }
    s
}

fn run_classify(a: i64, b: i64, json: bool, prime_bound: u64) -> Result<(), Failure> {
    let report = classify_report(a, b, prime_bound)?;
    if json {
        let s =
            serde_json::to_string_pretty(&report).map_err(|e| Failure::mismatch(e.to_string()))?;
        println!("{s}");
    } else {
        print!("{}", render_text(&report));
    }
    Ok(())
}

fn write_rows(rows: &[ScanRow], out: &Path, format: Format) -> Result<(), Failure> {
    let unwritable = |e: &dyn std::fmt::Display| Failure::usage(format!("{}: {e}", out.display()));
    let file = File::create(out).map_err(|e| unwritable(&e))?;
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(file);
            w.write_record([
                "a",
                "b",
                "irreducible",
                "G4",
                "G6",
                "Gal_f",
                "monogenic",
                "obstruction_prime",
                "obstruction_condition",
                "prediction_agrees",
            ])
            .map_err(|e| unwritable(&e))?;
            for r in rows {
                w.serialize(r).map_err(|e| unwritable(&e))?;
            }
            w.flush().map_err(|e| unwritable(&e))?;
        }
        Format::Json => {
            let mut w = BufWriter::new(file);
            serde_json::to_writer_pretty(&mut w, rows).map_err(|e| unwritable(&e))?;
            writeln!(w)
                .and_then(|_| w.flush())
                .map_err(|e| unwritable(&e))?;
        }
    }
    Ok(())
}

fn run_scan(
    (amin, amax): (i64, i64),
    (bmin, bmax): (i64, i64),
    out: &Path,
    format: Format,
) -> Result<(), Failure> {
    if amin > amax || bmin > bmax {
        return Err(Failure::usage("empty range"));
    }
    let rows = harness::scan(amin..=amax, bmin..=bmax);
    write_rows(&rows, out, format)?;
    let summary = ScanSummary::of(&rows);
    let stdout = io::stdout();
    let mut o = stdout.lock();
    let _ = writeln!(
        o,
        "{} rows, {} irreducible, {} monogenic, {} prediction disagreements",
        summary.rows, summary.irreducible, summary.monogenic, summary.disagreements
    );
    let _ = writeln!(
        o,
        "{:<8} {:>12} {:>10}",
        "Gal(f)", "irreducible", "monogenic"
    );
    for (label, (n, m)) in &summary.by_label {
        let _ = writeln!(o, "{:<8} {n:>12} {m:>10}", label.to_string());
    }
    if summary.disagreements > 0 {
        return Err(Failure::mismatch("prediction disagreements in scan"));
    }
    Ok(())
}

fn check_box(size: i64) -> Result<(), Failure> {
    if size < 1 {
        return Err(Failure::usage(format!(
            "box size must be at least 1, got {size}"
        )));
    }
    Ok(())
}

fn print_outcome(c: &CheckOutcome) {
    let status = if c.passed() { "PASS" } else { "FAIL" };
    println!("{status}  {} [{} examined]", c.name, c.examined);
    for f in c.failures.iter().take(10) {
        println!("      {f}");
    }
    if c.failures.len() > 10 {
        println!("      ... {} more", c.failures.len() - 10);
    }
}

fn check_prime_bound(prime_bound: u64) -> Result<(), Failure> {
    if prime_bound < MIN_PRIME_BOUND {
        return Err(Failure::usage(format!(
            "prime bound must be at least {MIN_PRIME_BOUND}, got {prime_bound}"
        )));
    }
    Ok(())
}

fn verify_verdict(outcomes: &[CheckOutcome]) -> Result<(), Failure> {
    let failed = outcomes.iter().filter(|c| !c.passed()).count();
    if failed > 0 {
        return Err(Failure::mismatch(format!(
            "{failed} of {} checks failed",
            outcomes.len()
        )));
    }
    Ok(())
}

fn run_verify(size: i64, prime_bound: u64) -> Result<(), Failure> {
    check_box(size)?;
    check_prime_bound(prime_bound)?;
    let outcomes = harness::verify(size, prime_bound);
    outcomes.iter().for_each(print_outcome);
    verify_verdict(&outcomes)?;
    println!(
        "all {} checks passed over |a|, |b| <= {size}",
        outcomes.len()
    );
    Ok(())
}

fn oracle_verdict(report: &OracleReport) -> Result<(), Failure> {
    if report.mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::mismatch("index conditions disagree with Dedekind"))
    }
}

fn run_oracle_check(size: i64) -> Result<(), Failure> {
    check_box(size)?;
    let report = harness::oracle_check(size);
    println!(
        "{} irreducible trinomials, {} prime checks, {} mismatches",
        report.trinomials,
        report.prime_checks,
        report.mismatches.len()
    );
    for m in report.mismatches.iter().take(20) {
        println!(
            "  m = {}, (a, b) = ({}, {}), q = {}: conditions say {}, Dedekind says {}",
            m.m, m.a, m.b, m.prime, m.jks, m.dedekind
        );
    }
    oracle_verdict(&report)
}
