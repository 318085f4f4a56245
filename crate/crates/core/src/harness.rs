//! Box scans and the checks run over them: per-pair rows for output, the
//! theorem verification suite, and the comparison of the per-prime
//! conditions against the Dedekind criterion.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_squarefree, residue};
use crate::characterize::{
    g2_monogenic_char, g4_monogenic_char, g6_monogenic_char, predict_unchecked, Prediction,
    LIST_12T2, LIST_12T28, LIST_12T38, LIST_12T39,
};
use crate::galois::{f_label, frobenius_sample, g4_label, g6_label, GaloisLabel};
use crate::jks::{
    kkr_monogenic, report_for_irreducible, verdict_unchecked, JksCondition, JksContext,
    MonogenicityReport,
};
use crate::trinomial::{w, QuadraticLikeTrinomial};
use crate::zpoly::{dedekind_unchecked, mod_factor, zz_irreducible, ModPolynomial};

/// Groups for which `f` is never monogenic.
pub const NON_MONOGENIC_LABELS: [GaloisLabel; 9] = [
    GaloisLabel::T12_3,
    GaloisLabel::T12_11,
    GaloisLabel::T12_12,
    GaloisLabel::T12_13,
    GaloisLabel::T12_14,
    GaloisLabel::T12_15,
    GaloisLabel::T12_16,
    GaloisLabel::T12_18,
    GaloisLabel::T12_37,
];

/// Irreducibility and monogenicity of one member of the tower
/// `g_2, g_4, g_6, f`; `None` when the member is reducible.
fn member_report(m: u32, a: i64, b: i64) -> Option<MonogenicityReport> {
    let t = QuadraticLikeTrinomial::new(m, a, b).ok()?;
    zz_irreducible(&t.to_polynomial())
        .expect("monic")
        .then(|| report_for_irreducible(&t))
}

/// Everything computed for one coefficient pair.
#[derive(Debug, Clone)]
pub struct PairAnalysis {
    pub a: i64,
    pub b: i64,
    pub g2: Option<MonogenicityReport>,
    pub g4: Option<MonogenicityReport>,
    pub g6: Option<MonogenicityReport>,
    pub f: Option<MonogenicityReport>,
    pub g4_label: Option<GaloisLabel>,
    pub g6_label: Option<GaloisLabel>,
    /// `Err` holds the offending `(G_4, G_6)` if an impossible pair shows up.
    pub f_label: Option<Result<GaloisLabel, (GaloisLabel, GaloisLabel)>>,
    pub prediction: Option<Prediction>,
}

impl PairAnalysis {
    pub fn new(a: i64, b: i64) -> Self {
        let g2 = member_report(1, a, b);
        let g4 = g2.as_ref().and_then(|_| member_report(2, a, b));
        let g6 = g2.as_ref().and_then(|_| member_report(3, a, b));
        let f = match (&g4, &g6) {
            (Some(_), Some(_)) => member_report(6, a, b),
            _ => None,
        };
        let g4_lbl = g4.as_ref().map(|_| g4_label(a, b));
        let g6_lbl = g6.as_ref().map(|_| g6_label(a, b));
        let f_lbl = f
            .as_ref()
            .map(|_| f_label(a, b).map_err(|_| (g4_label(a, b), g6_label(a, b))));
        Self {
            a,
            b,
            g2,
            g4,
            g6,
            f_label: f_lbl,
            prediction: f.as_ref().map(|_| predict_unchecked(a, b)),
            f,
            g4_label: g4_lbl,
            g6_label: g6_lbl,
        }
    }

    pub fn f_irreducible(&self) -> bool {
        self.f.is_some()
    }

    pub fn f_monogenic(&self) -> bool {
        self.f.as_ref().is_some_and(|r| r.monogenic)
    }

    pub fn gal_f(&self) -> Option<GaloisLabel> {
        self.f_label.as_ref().and_then(|l| l.as_ref().ok().copied())
    }

    /// Whether the predicted verdict (and label, when monogenic) matches.
    /// Vacuously true when `f` is reducible.
    pub fn prediction_agrees(&self) -> bool {
        let (Some(report), Some(pred)) = (&self.f, &self.prediction) else {
            return true;
        };
        if pred.predicted_monogenic != report.monogenic {
            return false;
        }
        !report.monogenic || pred.predicted_label == self.gal_f()
    }

    pub fn row(&self) -> ScanRow {
        let obstruction = self.f.as_ref().and_then(|r| r.obstruction());
        ScanRow {
            a: self.a,
            b: self.b,
            irreducible: self.f_irreducible(),
            g4: self.g4_label,
            g6: self.g6_label,
            gal_f: self.gal_f(),
            monogenic: self.f.as_ref().map(|r| r.monogenic),
            obstruction_prime: obstruction.map(|v| v.prime.to_u128().expect("prime fits u128")),
            obstruction_condition: obstruction.map(|v| v.condition.number()),
            prediction_agrees: self.prediction_agrees(),
        }
    }
}

/// One output row of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub a: i64,
    pub b: i64,
    pub irreducible: bool,
    #[serde(rename = "G4")]
    pub g4: Option<GaloisLabel>,
    #[serde(rename = "G6")]
    pub g6: Option<GaloisLabel>,
    #[serde(rename = "Gal_f")]
    pub gal_f: Option<GaloisLabel>,
    pub monogenic: Option<bool>,
    pub obstruction_prime: Option<u128>,
    pub obstruction_condition: Option<u8>,
    pub prediction_agrees: bool,
}

/// All pairs with `a b != 0` in the box, `a`-major.
pub fn box_pairs(a_range: RangeInclusive<i64>, b_range: RangeInclusive<i64>) -> Vec<(i64, i64)> {
    a_range
        .filter(|&a| a != 0)
        .flat_map(|a| b_range.clone().filter(|&b| b != 0).map(move |b| (a, b)))
        .collect()
}

/// Analyses of every pair, in the order of `pairs`, computed in parallel.
pub fn analyze(pairs: &[(i64, i64)]) -> Vec<PairAnalysis> {
    pairs
        .par_iter()
        .map(|&(a, b)| PairAnalysis::new(a, b))
        .collect()
}

pub fn scan(a_range: RangeInclusive<i64>, b_range: RangeInclusive<i64>) -> Vec<ScanRow> {
    analyze(&box_pairs(a_range, b_range))
        .iter()
        .map(PairAnalysis::row)
        .collect()
}

/// Counts over a set of scan rows.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub rows: usize,
    pub irreducible: usize,
    pub monogenic: usize,
    pub disagreements: usize,
    /// `label -> (irreducible f with this group, monogenic ones)`.
    pub by_label: BTreeMap<GaloisLabel, (usize, usize)>,
}

impl ScanSummary {
    pub fn of(rows: &[ScanRow]) -> Self {
        let mut s = Self {
            rows: rows.len(),
            ..Self::default()
        };
        for r in rows {
            if r.irreducible {
                s.irreducible += 1;
            }
            if r.monogenic == Some(true) {
                s.monogenic += 1;
            }
            if !r.prediction_agrees {
                s.disagreements += 1;
            }
            if let Some(l) = r.gal_f {
                let e = s.by_label.entry(l).or_default();
                e.0 += 1;
                if r.monogenic == Some(true) {
                    e.1 += 1;
                }
            }
        }
        s
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// How many instances were examined.
    pub examined: usize,
    /// Descriptions of the failing instances.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            examined: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.examined += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn pairs_in_box(list: &[(i64, i64)], n: i64) -> Vec<(i64, i64)> {
    let mut v: Vec<_> = list
        .iter()
        .copied()
        .filter(|&(a, b)| a.abs() <= n && b.abs() <= n)
        .collect();
    v.sort();
    v
}

fn label_of(p: &PairAnalysis) -> String {
    format!("({}, {})", p.a, p.b)
}

/// Prediction vs. per-prime monogenicity, with labels for the positives.
pub fn check_prediction(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("characterization matches monogenicity and label");
    for p in analyses.iter().filter(|p| p.f_irreducible()) {
        c.check(p.prediction_agrees(), || {
            format!(
                "{}: predicted {:?}, monogenic {}, Gal(f) {:?}",
                label_of(p),
                p.prediction,
                p.f_monogenic(),
                p.gal_f()
            )
        });
    }
    c
}

pub fn check_non_monogenic_labels(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("no monogenic f with a non-monogenic group");
    for p in analyses.iter().filter(|p| p.f_monogenic()) {
        let l = p.gal_f();
        c.check(
            l.is_some_and(|l| !NON_MONOGENIC_LABELS.contains(&l)),
            || format!("{} is monogenic with Gal(f) {l:?}", label_of(p)),
        );
    }
    c
}

/// Monogenic `f` forces monogenic `g_2, g_4, g_6` and squarefree `b`, `W`.
pub fn check_downward_closure(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("monogenic f has monogenic divisors, b and W squarefree");
    for p in analyses.iter().filter(|p| p.f_monogenic()) {
        let mono = |r: &Option<MonogenicityReport>| r.as_ref().is_some_and(|r| r.monogenic);
        let sqf = |n: BigInt| is_squarefree(&n).unwrap_or(false);
        let ok =
            mono(&p.g2) && mono(&p.g4) && mono(&p.g6) && sqf(BigInt::from(p.b)) && sqf(w(p.a, p.b));
        c.check(ok, || label_of(p));
    }
    c
}

/// The composition criterion against direct monogenicity, for
/// `g_4 = g_2(x^2)`, `g_6 = g_2(x^3)`, `f = g_2(x^6) = g_4(x^3) = g_6(x^2)`.
pub fn check_compositions(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("composition criterion matches direct monogenicity");
    for p in analyses {
        let members = [(1u32, &p.g2), (2, &p.g4), (3, &p.g6), (6, &p.f)];
        for &(base, _) in &members[..3] {
            for &(target, report) in &members[1..] {
                if target <= base || target % base != 0 {
                    continue;
                }
                let Some(report) = report else { continue };
                let g = QuadraticLikeTrinomial::new(base, p.a, p.b).expect("ab != 0");
                let k = target / base;
                let got = kkr_monogenic(&g, k);
                c.check(got.as_ref() == Ok(&report.monogenic), || {
                    format!(
                        "{} composed with x^{k} from m = {base}: {got:?}",
                        label_of(p)
                    )
                });
            }
        }
    }
    c
}

/// The closed-form characterizations of `g_2`, `g_4`, `g_6` against direct
/// monogenicity.
pub fn check_small_degree_characterizations(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("closed forms for g2, g4, g6 match monogenicity");
    for p in analyses {
        if let Some(r) = &p.g2 {
            let got = g2_monogenic_char(p.a, p.b);
            c.check(got == Ok(r.monogenic), || format!("g2 {}", label_of(p)));
        }
        if let Some(r) = &p.g4 {
            let got = g4_monogenic_char(p.a, p.b).map(|(_, m)| m);
            c.check(got == Ok(r.monogenic), || format!("g4 {}", label_of(p)));
        }
        if let Some(r) = &p.g6 {
            match g6_monogenic_char(p.a, p.b) {
                Ok(Some(m)) => c.check(m == r.monogenic, || format!("g6 {}", label_of(p))),
                Ok(None) => {}
                Err(e) => c.check(false, || format!("g6 {}: {e}", label_of(p))),
            }
        }
    }
    c
}

/// The finitely many monogenic members with the smallest groups are exactly
/// the listed ones.
pub fn check_finite_lists(analyses: &[PairAnalysis], n: i64) -> Vec<CheckOutcome> {
    let collect = |pred: &dyn Fn(&PairAnalysis) -> bool| -> Vec<(i64, i64)> {
        analyses
            .iter()
            .filter(|p| pred(p))
            .map(|p| (p.a, p.b))
            .collect()
    };
    let mono = |r: &Option<MonogenicityReport>| r.as_ref().is_some_and(|r| r.monogenic);
    type Case<'a> = (&'a str, Vec<(i64, i64)>, Vec<(i64, i64)>);
    let cases: Vec<Case> = vec![
        (
            "4T1-monogenic quartics are x^4 ± 4x^2 + 2, x^4 - 5x^2 + 5",
            collect(&|p| mono(&p.g4) && p.g4_label == Some(GaloisLabel::T4_1)),
            pairs_in_box(&[(4, 2), (-4, 2), (-5, 5)], n),
        ),
        (
            "6T1-monogenic sextics are x^6 ± x^3 + 1",
            collect(&|p| mono(&p.g6) && p.g6_label == Some(GaloisLabel::T6_1)),
            pairs_in_box(&[(1, 1), (-1, 1)], n),
        ),
        (
            "6T2-monogenic sextics do not occur",
            collect(&|p| mono(&p.g6) && p.g6_label == Some(GaloisLabel::T6_2)),
            Vec::new(),
        ),
        (
            "12T2-monogenic f is x^12 - x^6 + 1",
            collect(&|p| p.f_monogenic() && p.gal_f() == Some(GaloisLabel::T12_2)),
            pairs_in_box(LIST_12T2, n),
        ),
        (
            "12T39-monogenic f are x^12 ± 4x^6 + 2, x^12 - 5x^6 + 5",
            collect(&|p| p.f_monogenic() && p.gal_f() == Some(GaloisLabel::T12_39)),
            pairs_in_box(LIST_12T39, n),
        ),
        (
            "12T28-monogenic f with b != -1 are x^12 ± 2x^6 + 2",
            collect(&|p| p.f_monogenic() && p.gal_f() == Some(GaloisLabel::T12_28) && p.b != -1),
            pairs_in_box(LIST_12T28, n),
        ),
        (
            "12T38-monogenic f with b != -3 are x^12 ± 4x^6 - 2, x^12 ± 4x^6 + 6",
            collect(&|p| p.f_monogenic() && p.gal_f() == Some(GaloisLabel::T12_38) && p.b != -3),
            pairs_in_box(LIST_12T38, n),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, mut found, expected)| {
            found.sort();
            let mut c = CheckOutcome::new(name);
            c.check(found == expected, || {
                format!("found {found:?}, expected {expected:?}")
            });
            c
        })
        .collect()
}

pub fn check_impossible_pairs(analyses: &[PairAnalysis]) -> CheckOutcome {
    let mut c = CheckOutcome::new("(4T1, 6T1), (4T1, 6T2), (4T1, 6T5) never occur");
    for p in analyses.iter().filter(|p| p.f_irreducible()) {
        c.check(matches!(p.f_label, Some(Ok(_))), || {
            format!("{}: pair {:?}", label_of(p), p.f_label)
        });
    }
    c
}

/// Frobenius cycle types of `f` are realizable in the assigned group.
pub fn check_frobenius(analyses: &[PairAnalysis], prime_bound: u64) -> CheckOutcome {
    let mut c = CheckOutcome::new("Frobenius cycle types fit the assigned Gal(f) and G6");
    let targets: Vec<&PairAnalysis> = analyses.iter().filter(|p| p.f_irreducible()).collect();
    let results: Vec<(String, bool)> = targets
        .par_iter()
        .map(|p| {
            let (Some(lf), Some(l6)) = (p.gal_f(), p.g6_label) else {
                return (label_of(p), false);
            };
            let f = QuadraticLikeTrinomial::new(6, p.a, p.b).expect("ab != 0");
            let g6 = QuadraticLikeTrinomial::new(3, p.a, p.b).expect("ab != 0");
            let ef = frobenius_sample(&f.to_polynomial(), prime_bound).expect("bound checked");
            let e6 = frobenius_sample(&g6.to_polynomial(), prime_bound).expect("bound checked");
            let bad = ef
                .inconsistency(lf)
                .map(|w| format!("{lf} at p = {}", w.prime))
                .or_else(|| {
                    e6.inconsistency(l6)
                        .map(|w| format!("{l6} at p = {}", w.prime))
                });
            (format!("{}: {bad:?}", label_of(p)), bad.is_none())
        })
        .collect();
    for (what, ok) in results {
        c.check(ok, || what);
    }
    c
}

/// Expected `(H_1 mod 3, H_2 mod 3)` factorizations for `x^12 + a x^6 - 1`
/// by `a mod 9`: `(unit, [(factor coefficients, exponent)])`, constant term
/// first.
pub type ExpectedFactorization = (u64, &'static [(&'static [u64], u32)]);

pub const H_TABLE_Q3: [(i64, ExpectedFactorization, ExpectedFactorization); 4] = [
    (
        1,
        (1, &[(&[2, 0, 1, 0, 1], 1)]),
        (1, &[(&[0, 1], 2), (&[1, 1], 1), (&[2, 1], 1)]),
    ),
    (
        2,
        (1, &[(&[2, 0, 2, 0, 1], 1)]),
        (1, &[(&[0, 1], 2), (&[1, 1], 2), (&[2, 1], 2)]),
    ),
    (
        7,
        (1, &[(&[2, 0, 1, 0, 1], 1)]),
        (2, &[(&[0, 1], 2), (&[1, 0, 1], 2)]),
    ),
    (
        8,
        (1, &[(&[2, 0, 2, 0, 1], 1)]),
        (1, &[(&[0, 1], 2), (&[1, 0, 1], 1)]),
    ),
];

fn factorization_matches(u: &ModPolynomial, expected: &ExpectedFactorization) -> bool {
    let Ok(found) = mod_factor(u) else {
        return false;
    };
    let want: Vec<(ModPolynomial, u32)> = expected
        .1
        .iter()
        .map(|(c, e)| (ModPolynomial::new(3, c.to_vec()).expect("prime"), *e))
        .collect();
    let mut found_sorted = found.clone();
    let mut want_sorted = want;
    let key = |(g, e): &(ModPolynomial, u32)| (g.coeffs().to_vec(), *e);
    found_sorted.sort_by_key(key);
    want_sorted.sort_by_key(key);
    u.leading() == expected.0 && found_sorted == want_sorted
}

/// Reproduces the factorizations of `H_1`, `H_2` at `q = 3` for
/// `x^12 + a x^6 - 1`, `a mod 9 in {1, 2, 7, 8}`, over every such `a` with
/// `|a| <= n`, and checks coprimality.
pub fn check_h_table(n: i64) -> CheckOutcome {
    let mut c = CheckOutcome::new("H1, H2 factorizations at q = 3 for b = -1");
    let q = BigInt::from(3);
    for a in -n..=n {
        let Some(row) = H_TABLE_Q3.iter().find(|r| r.0 == residue(a, 9)) else {
            continue;
        };
        let f = QuadraticLikeTrinomial::new(6, a, -1).expect("a != 0");
        let ctx = JksContext::new(&f, &q);
        if ctx.condition != JksCondition::DividesM {
            c.check(false, || format!("a = {a}: condition {}", ctx.condition));
            continue;
        }
        let h1 = ctx.h1.as_ref().expect("condition (4)").reduce_unchecked(3);
        let h2 = ctx.h2.as_ref().expect("condition (4)").reduce_unchecked(3);
        let ok = factorization_matches(&h1, &row.1)
            && factorization_matches(&h2, &row.2)
            && h1.gcd(&h2).is_one()
            && !ctx.divides_index(&f);
        c.check(ok, || format!("a = {a}: H1 = {h1}, H2 = {h2}"));
    }
    c
}

/// The full verification suite over `|a|, |b| <= n`.
pub fn verify(n: i64, prime_bound: u64) -> Vec<CheckOutcome> {
    let analyses = analyze(&box_pairs(-n..=n, -n..=n));
    let mut out = vec![
        check_prediction(&analyses),
        check_non_monogenic_labels(&analyses),
        check_downward_closure(&analyses),
        check_compositions(&analyses),
        check_small_degree_characterizations(&analyses),
    ];
    out.extend(check_finite_lists(&analyses, n));
    out.push(check_impossible_pairs(&analyses));
    let monogenic: Vec<PairAnalysis> = analyses.into_iter().filter(|p| p.f_monogenic()).collect();
    out.push(check_frobenius(&monogenic, prime_bound));
    out.push(check_h_table(n.max(9)));
    out
}

/// One disagreement between the per-prime conditions and Dedekind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub m: u32,
    pub a: i64,
    pub b: i64,
    pub prime: u64,
    pub jks: bool,
    pub dedekind: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub trinomials: usize,
    pub prime_checks: usize,
    pub mismatches: Vec<OracleMismatch>,
}

fn oracle_pair(a: i64, b: i64) -> OracleReport {
    let mut report = OracleReport::default();
    for m in [1u32, 2, 3, 6] {
        let t = QuadraticLikeTrinomial::new(m, a, b).expect("ab != 0");
        let u = t.to_polynomial();
        if !zz_irreducible(&u).expect("monic") {
            continue;
        }
        report.trinomials += 1;
        for q in t.discriminant_primes() {
            let p = q
                .to_u64()
                .expect("discriminant primes of box trinomials fit u64");
            let jks = verdict_unchecked(&t, &q).divides_index;
            let dedekind = dedekind_unchecked(&u, p);
            report.prime_checks += 1;
            if jks != dedekind {
                report.mismatches.push(OracleMismatch {
                    m,
                    a,
                    b,
                    prime: p,
                    jks,
                    dedekind,
                });
            }
        }
    }
    report
}

/// Per-prime conditions against the Dedekind criterion for every
/// irreducible `g_2, g_4, g_6, f` in the given pairs.
pub fn oracle_check_pairs(pairs: &[(i64, i64)]) -> OracleReport {
    let parts: Vec<OracleReport> = pairs.par_iter().map(|&(a, b)| oracle_pair(a, b)).collect();
    let mut total = OracleReport::default();
    for p in parts {
        total.trinomials += p.trinomials;
        total.prime_checks += p.prime_checks;
        total.mismatches.extend(p.mismatches);
    }
    total
}

pub fn oracle_check(n: i64) -> OracleReport {
    oracle_check_pairs(&box_pairs(-n..=n, -n..=n))
}
