//! Acceptance criteria. Runs as a plain binary so each criterion prints one
//! line regardless of output capture; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dodecic::arith::{is_squarefree, residue};
use dodecic::characterize::predict_f;
use dodecic::galois::{classify_f, classify_g4, classify_g6, MIN_PRIME_BOUND};
use dodecic::harness::check_h_table;
use dodecic::jks::{is_monogenic, jks_prime_ok, kkr_monogenic, JksCondition, JksContext};
use dodecic::trinomial::{delta, w};
use dodecic::zpoly::{dedekind_divides_index, discriminant, mod_factor, ModPolynomial};
use dodecic::{GaloisLabel, QuadraticLikeTrinomial};

const BOX: i64 = 40;
const LIST_BOX: i64 = 50;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn pairs(n: i64) -> Vec<(i64, i64)> {
    (-n..=n)
        .filter(|&a| a != 0)
        .flat_map(|a| (-n..=n).filter(|&b| b != 0).map(move |b| (a, b)))
        .collect()
}

fn t(m: u32, a: i64, b: i64) -> QuadraticLikeTrinomial {
    QuadraticLikeTrinomial::new(m, a, b).unwrap()
}

/// Irreducible members of the tower, as `(m, a, b)`.
fn irreducible_members(n: i64) -> Vec<QuadraticLikeTrinomial> {
    pairs(n)
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            [1u32, 2, 3, 6]
                .into_iter()
                .map(move |m| t(m, a, b))
                .filter(|g| is_monogenic(g).irreducible)
        })
        .collect()
}

fn oracle_equivalence(members: &[QuadraticLikeTrinomial]) -> Outcome {
    let results: Vec<(usize, Vec<String>)> = members
        .par_iter()
        .map(|g| {
            let u = g.to_polynomial();
            let mut bad = Vec::new();
            let primes = g.discriminant_primes();
            for q in &primes {
                let jks = jks_prime_ok(g, q).unwrap().divides_index;
                let dedekind = dedekind_divides_index(&u, q).unwrap();
                if jks != dedekind {
                    bad.push(format!("{g} at q = {q}"));
                }
            }
            (primes.len(), bad)
        })
        .collect();
    let checks: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} trinomials, {checks} prime checks, {} mismatches {:?}",
            members.len(),
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

struct FRow {
    a: i64,
    b: i64,
    monogenic: bool,
    label: GaloisLabel,
}

fn irreducible_f(n: i64) -> Vec<FRow> {
    pairs(n)
        .par_iter()
        .filter_map(|&(a, b)| {
            let r = is_monogenic(&t(6, a, b));
            r.irreducible.then(|| FRow {
                a,
                b,
                monogenic: r.monogenic,
                label: classify_f(a, b).unwrap(),
            })
        })
        .collect()
}

fn theorem_agreement(rows: &[FRow]) -> Outcome {
    let mut bad = Vec::new();
    let mut positives = 0;
    for r in rows {
        let p = predict_f(r.a, r.b).unwrap();
        if p.predicted_monogenic != r.monogenic {
            bad.push(format!("({}, {}) verdict", r.a, r.b));
        } else if r.monogenic {
            positives += 1;
            if p.predicted_label != Some(r.label) {
                bad.push(format!(
                    "({}, {}) label {} vs {:?}",
                    r.a, r.b, r.label, p.predicted_label
                ));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} irreducible f, {positives} monogenic, {} disagreements {:?}",
            rows.len(),
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

fn golden_positives() -> Outcome {
    let cases = [
        ((-1, 1), GaloisLabel::T12_2),
        ((2, 2), GaloisLabel::T12_28),
        ((-2, 2), GaloisLabel::T12_28),
        ((4, -2), GaloisLabel::T12_38),
        ((-4, -2), GaloisLabel::T12_38),
        ((4, 6), GaloisLabel::T12_38),
        ((-4, 6), GaloisLabel::T12_38),
        ((4, 2), GaloisLabel::T12_39),
        ((-4, 2), GaloisLabel::T12_39),
        ((-5, 5), GaloisLabel::T12_39),
    ];
    let bad: Vec<String> = cases
        .iter()
        .filter(|&&((a, b), label)| {
            let r = is_monogenic(&t(6, a, b));
            !(r.irreducible && r.monogenic && classify_f(a, b) == Ok(label))
        })
        .map(|((a, b), l)| format!("({a}, {b}) expected {l}"))
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} pairs, failures {bad:?}", cases.len()),
    )
}

fn golden_negatives() -> Outcome {
    let mut bad = Vec::new();
    let three = BigInt::from(3);
    for a in [11, -11] {
        let r = is_monogenic(&t(6, a, 33));
        let at_three = r.verdicts.iter().find(|v| v.prime == three);
        let ok = r.irreducible
            && !r.monogenic
            && at_three.is_some_and(|v| v.divides_index && v.condition == JksCondition::DividesB);
        // for a = -11 the prime 2 divides the index as well, so 3 is least only for a = 11
        let least = a == -11 || r.obstruction().is_some_and(|v| v.prime == three);
        if !(ok && least) {
            bad.push(format!(
                "({a}, 33): {at_three:?}, least {:?}",
                r.obstruction()
            ));
        }
    }
    let f = t(6, 9, 1);
    let ctx = JksContext::new(&f, &BigInt::from(3));
    let v = jks_prime_ok(&f, &BigInt::from(3)).unwrap();
    let ok = v.divides_index
        && v.condition == JksCondition::DividesA
        && ctx.b1 == Some(BigInt::from(0))
        && dedekind_divides_index(&f.to_polynomial(), &BigInt::from(3)).unwrap();
    if !ok {
        bad.push(format!("(9, 1): {v:?}, b1 = {:?}", ctx.b1));
    }
    outcome(
        bad.is_empty(),
        format!("(±11, 33) and (9, 1), failures {bad:?}"),
    )
}

fn non_occurring(rows: &[FRow]) -> Outcome {
    use GaloisLabel as G;
    let excluded = [
        G::T12_3,
        G::T12_11,
        G::T12_12,
        G::T12_13,
        G::T12_14,
        G::T12_15,
        G::T12_16,
        G::T12_18,
        G::T12_37,
    ];
    let present = rows.iter().filter(|r| excluded.contains(&r.label)).count();
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.monogenic && excluded.contains(&r.label))
        .map(|r| format!("({}, {}) {}", r.a, r.b, r.label))
        .collect();
    outcome(
        bad.is_empty() && present > 0,
        format!(
            "{present} irreducible f with an excluded group, {} monogenic {bad:?}",
            bad.len()
        ),
    )
}

fn finite_lists() -> Outcome {
    let found: Vec<(u32, i64, i64)> = pairs(LIST_BOX)
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let mut v = Vec::new();
            let g4 = is_monogenic(&t(2, a, b));
            if g4.monogenic && classify_g4(a, b) == Ok(GaloisLabel::T4_1) {
                v.push((4, a, b));
            }
            let g6 = is_monogenic(&t(3, a, b));
            if g6.monogenic && classify_g6(a, b, MIN_PRIME_BOUND).unwrap().0 == GaloisLabel::T6_1 {
                v.push((6, a, b));
            }
            v
        })
        .collect();
    let mut quartics: Vec<(i64, i64)> = found
        .iter()
        .filter(|x| x.0 == 4)
        .map(|x| (x.1, x.2))
        .collect();
    let mut sextics: Vec<(i64, i64)> = found
        .iter()
        .filter(|x| x.0 == 6)
        .map(|x| (x.1, x.2))
        .collect();
    quartics.sort();
    sextics.sort();
    let ok = quartics == [(-5, 5), (-4, 2), (4, 2)] && sextics == [(-1, 1), (1, 1)];
    outcome(ok, format!("4T1: {quartics:?}, 6T1: {sextics:?}"))
}

fn discriminant_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let coeff = |rng: &mut ChaCha8Rng| {
        let v: i64 = rng.gen_range(1..=1000);
        if rng.gen() {
            v
        } else {
            -v
        }
    };
    let mut bad = Vec::new();
    for m in [1u32, 2, 3, 6] {
        for _ in 0..100 {
            let (a, b) = (coeff(&mut rng), coeff(&mut rng));
            let g = t(m, a, b);
            if g.discriminant() != discriminant(&g.to_polynomial()) {
                bad.push(g.to_string());
            }
        }
    }
    for _ in 0..100 {
        let (a, b) = (coeff(&mut rng), coeff(&mut rng));
        let expected = BigInt::from(2).pow(12)
            * BigInt::from(3).pow(12)
            * delta(a, b).pow(6)
            * BigInt::from(b).pow(5);
        if t(6, a, b).discriminant() != expected {
            bad.push(format!("f({a}, {b})"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("500 discriminants, failures {bad:?}"),
    )
}

fn kkr_consistency(n: i64) -> Outcome {
    // (base m, k) with m k in {2, 3, 6}
    let compositions = [(1u32, 2u32), (1, 3), (1, 6), (2, 3), (3, 2)];
    let results: Vec<(usize, usize, Vec<String>)> = pairs(n)
        .par_iter()
        .map(|&(a, b)| {
            let (mut checked, mut closed, mut bad) = (0, 0, Vec::new());
            for (m, k) in compositions {
                let g = t(m, a, b);
                let composed = is_monogenic(&g.compose(k));
                if !composed.irreducible {
                    continue;
                }
                checked += 1;
                if kkr_monogenic(&g, k) != Ok(composed.monogenic) {
                    bad.push(format!("{g} with x^{k}"));
                }
            }
            if is_monogenic(&t(6, a, b)).monogenic {
                closed += 1;
                let lower = [1, 2, 3]
                    .iter()
                    .all(|&m| is_monogenic(&t(m, a, b)).monogenic);
                let sqf =
                    is_squarefree(&BigInt::from(b)).unwrap() && is_squarefree(&w(a, b)).unwrap();
                if !(lower && sqf) {
                    bad.push(format!("closure at ({a}, {b})"));
                }
            }
            (checked, closed, bad)
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.0).sum();
    let closed: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.2).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{checked} compositions, {closed} monogenic f closed downward, failures {:?}",
            &bad[..bad.len().min(5)]
        ),
    )
}

/// `H_2 = ((a - a^3) / 3) x^6 + a^2 x^4 - a x^2` for `b = -1`, `m = 6`, `q = 3`,
/// expanded by hand from `(a x^6 - 1 + (1 - a x^2)^3) / 3`.
fn h2_closed_form(a: i64) -> ModPolynomial {
    let c6 = (a - a * a * a) / 3;
    ModPolynomial::from_i64s(3, &[0, 0, -a, 0, a * a, 0, c6]).unwrap()
}

fn table_regression() -> Outcome {
    let poly = |c: &[i64]| ModPolynomial::from_i64s(3, c).unwrap();
    // (a mod 9, H1 factors, H2 unit, H2 factors), constant term first
    type Factors = Vec<(ModPolynomial, u32)>;
    let rows: [(i64, Factors, u64, Factors); 4] = [
        (
            1,
            vec![(poly(&[2, 0, 1, 0, 1]), 1)],
            1,
            vec![(poly(&[0, 1]), 2), (poly(&[1, 1]), 1), (poly(&[2, 1]), 1)],
        ),
        (
            2,
            vec![(poly(&[2, 0, 2, 0, 1]), 1)],
            1,
            vec![(poly(&[0, 1]), 2), (poly(&[1, 1]), 2), (poly(&[2, 1]), 2)],
        ),
        (
            7,
            vec![(poly(&[2, 0, 1, 0, 1]), 1)],
            2,
            vec![(poly(&[0, 1]), 2), (poly(&[1, 0, 1]), 2)],
        ),
        (
            8,
            vec![(poly(&[2, 0, 2, 0, 1]), 1)],
            1,
            vec![(poly(&[0, 1]), 2), (poly(&[1, 0, 1]), 1)],
        ),
    ];
    let sorted = |mut v: Vec<(ModPolynomial, u32)>| {
        v.sort_by_key(|(g, e)| (g.coeffs().to_vec(), *e));
        v
    };
    let mut bad = Vec::new();
    let mut examined = 0;
    for a in -60i64..=60 {
        let Some((_, h1_want, unit, h2_want)) = rows.iter().find(|r| r.0 == residue(a, 9)) else {
            continue;
        };
        examined += 1;
        let f = t(6, a, -1);
        let ctx = JksContext::new(&f, &BigInt::from(3));
        let h1 = ctx.h1.as_ref().unwrap().reduce(3).unwrap();
        let h2 = ctx.h2.as_ref().unwrap().reduce(3).unwrap();
        let h1_closed = ModPolynomial::from_i64s(3, &[-1, 0, a, 0, 1]).unwrap();
        let ok = ctx.condition == JksCondition::DividesM
            && h1 == h1_closed
            && h2 == h2_closed_form(a)
            && sorted(mod_factor(&h1).unwrap()) == sorted(h1_want.clone())
            && h2.leading() == *unit
            && sorted(mod_factor(&h2).unwrap()) == sorted(h2_want.clone())
            && h1.gcd(&h2).is_one()
            && !jks_prime_ok(&f, &BigInt::from(3)).unwrap().divides_index;
        if !ok {
            bad.push(a);
        }
    }
    let harness = check_h_table(60);
    outcome(
        bad.is_empty() && harness.passed() && examined > 0,
        format!(
            "{examined} values of a, failures {bad:?}, harness check failures {:?}",
            harness.failures
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let members = irreducible_members(BOX);
    let rows = irreducible_f(BOX);
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "oracle equivalence, |a|,|b| <= 40",
            Box::new(|| oracle_equivalence(&members)),
        ),
        (
            "characterization agreement, |a|,|b| <= 40",
            Box::new(|| theorem_agreement(&rows)),
        ),
        ("golden positives", Box::new(golden_positives)),
        ("golden negatives", Box::new(golden_negatives)),
        (
            "non-occurring groups, |a|,|b| <= 40",
            Box::new(|| non_occurring(&rows)),
        ),
        (
            "finite-list completeness, |a|,|b| <= 50",
            Box::new(finite_lists),
        ),
        ("discriminant identities", Box::new(discriminant_identities)),
        (
            "composition consistency and downward closure, |a|,|b| <= 40",
            Box::new(|| kkr_consistency(BOX)),
        ),
        (
            "H1, H2 table regression at q = 3",
            Box::new(table_regression),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} [PRIMARY] {}: {} (tolerance: exact) {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
