//! Galois groups of `g_4`, `g_6` and `f = x^12 + a x^6 + b`.
//!
//! `G_4` comes from the square tests on `b` and `b δ`. `G_6` is read off
//! from whether `-3δ` is a square (the quadratic subfield `Q(sqrt(-3))`
//! inside the splitting field) together with statements R and S. `Gal(f)`
//! is then looked up from the pair `(G_4, G_6)`. A Frobenius sampler
//! factors the polynomial modulo many unramified primes and checks that
//! every observed cycle type is realizable in the group it was assigned.

mod groups;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_cube, is_square, primes_up_to};
use crate::error::{Error, Result};
use crate::trinomial::{delta, derive, resolvent_reducible, QuadraticLikeTrinomial};
use crate::zpoly::{zz_irreducible, IntPolynomial};

pub use groups::CycleTypeCounts;

/// A transitive permutation group `nTk` from the list of groups that can
/// occur for `g_2`, `g_4`, `g_6` and `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GaloisLabel {
    degree: u8,
    index: u8,
}

const VALID: &[(u8, &[u8])] = &[
    (2, &[1]),
    (4, &[1, 2, 3]),
    (6, &[1, 2, 3, 5, 9]),
    (
        12,
        &[2, 3, 10, 11, 12, 13, 14, 15, 16, 18, 28, 37, 38, 39, 42, 81],
    ),
];

impl GaloisLabel {
    pub const T2_1: Self = Self::from_parts(2, 1);
    pub const T4_1: Self = Self::from_parts(4, 1);
    pub const T4_2: Self = Self::from_parts(4, 2);
    pub const T4_3: Self = Self::from_parts(4, 3);
    pub const T6_1: Self = Self::from_parts(6, 1);
    pub const T6_2: Self = Self::from_parts(6, 2);
    pub const T6_3: Self = Self::from_parts(6, 3);
    pub const T6_5: Self = Self::from_parts(6, 5);
    pub const T6_9: Self = Self::from_parts(6, 9);
    pub const T12_2: Self = Self::from_parts(12, 2);
    pub const T12_3: Self = Self::from_parts(12, 3);
    pub const T12_10: Self = Self::from_parts(12, 10);
    pub const T12_11: Self = Self::from_parts(12, 11);
    pub const T12_12: Self = Self::from_parts(12, 12);
    pub const T12_13: Self = Self::from_parts(12, 13);
    pub const T12_14: Self = Self::from_parts(12, 14);
    pub const T12_15: Self = Self::from_parts(12, 15);
    pub const T12_16: Self = Self::from_parts(12, 16);
    pub const T12_18: Self = Self::from_parts(12, 18);
    pub const T12_28: Self = Self::from_parts(12, 28);
    pub const T12_37: Self = Self::from_parts(12, 37);
    pub const T12_38: Self = Self::from_parts(12, 38);
    pub const T12_39: Self = Self::from_parts(12, 39);
    pub const T12_42: Self = Self::from_parts(12, 42);
    pub const T12_81: Self = Self::from_parts(12, 81);

    pub(crate) const fn from_parts(degree: u8, index: u8) -> Self {
        Self { degree, index }
    }

    pub fn new(degree: u8, index: u8) -> Result<Self> {
        let ok = VALID
            .iter()
            .any(|&(d, idx)| d == degree && idx.contains(&index));
        if ok {
            Ok(Self { degree, index })
        } else {
            Err(Error::InvalidLabel(format!("{degree}T{index}")))
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn index(&self) -> u32 {
        self.index as u32
    }

    /// Group order.
    pub fn order(&self) -> usize {
        groups::table(*self).order
    }

    /// Number of group elements of each cycle type.
    pub fn cycle_types(&self) -> &'static CycleTypeCounts {
        &groups::table(*self).cycle_types
    }

    pub fn admits(&self, cycle_type: &[u32]) -> bool {
        self.cycle_types().contains_key(cycle_type)
    }

    /// Every supported label, ordered by degree then index.
    pub fn all() -> impl Iterator<Item = Self> {
        VALID
            .iter()
            .flat_map(|&(d, idx)| idx.iter().map(move |&i| Self::from_parts(d, i)))
    }

    /// Labels that can occur for the given degree.
    pub fn of_degree(degree: u32) -> impl Iterator<Item = Self> {
        Self::all().filter(move |l| l.degree() == degree)
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}T{}", self.degree, self.index)
    }
}

impl FromStr for GaloisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let (d, i) = s.split_once('T').ok_or_else(bad)?;
        let d: u8 = d.parse().map_err(|_| bad())?;
        let i: u8 = i.parse().map_err(|_| bad())?;
        Self::new(d, i).map_err(|_| bad())
    }
}

impl TryFrom<String> for GaloisLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GaloisLabel> for String {
    fn from(l: GaloisLabel) -> String {
        l.to_string()
    }
}

/// The four statements about `(a, b)` that separate the `(4T3, 6T3)` row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PqrsStatements {
    /// `-3 b δ` is a square.
    pub p: bool,
    /// `-3 b` is a square.
    pub q: bool,
    /// `x^3 - 3b x + ab` is reducible.
    pub r: bool,
    /// `b` is a cube.
    pub s: bool,
}

pub fn statements(a: i64, b: i64) -> PqrsStatements {
    let bb = BigInt::from(b);
    PqrsStatements {
        p: is_square(&(-3 * &bb * delta(a, b))),
        q: is_square(&(-3 * &bb)),
        r: resolvent_reducible(a, b),
        s: is_cube(&bb),
    }
}

/// The `(P, Q, R, S)` combinations for which none of
/// `(P∧R) ∨ (Q∧S) ∨ (Q∧R) ∨ (P∧S)` holds.
pub const TABLE_NOT_Y: [[bool; 4]; 7] = [
    [true, true, false, false],
    [true, false, false, false],
    [false, true, false, false],
    [false, false, true, true],
    [false, false, true, false],
    [false, false, false, true],
    [false, false, false, false],
];

/// `Gal(f)` from `(G_4, G_6)`. `three_alpha_or_beta` is consulted only in the
/// `4T2` rows, where `b` is a square and `α, β` are integers.
pub fn chen_lookup(
    g4: GaloisLabel,
    g6: GaloisLabel,
    st: &PqrsStatements,
    three_alpha_or_beta: Option<bool>,
) -> Result<GaloisLabel> {
    use GaloisLabel as L;
    let alpha_test = || three_alpha_or_beta.expect("b is a square when G4 = 4T2");
    let label = match (g4.index, g6.index) {
        (1, 3) => L::T12_11,
        (1, 9) => L::T12_39,
        (2, 1) => L::T12_2,
        (2, 2) => L::T12_3,
        (2, 5) => L::T12_18,
        (2, 3) if alpha_test() => L::T12_3,
        (2, 3) => L::T12_10,
        (2, 9) if alpha_test() => L::T12_16,
        (2, 9) => L::T12_37,
        (3, 1) => L::T12_14,
        (3, 2) => L::T12_15,
        (3, 5) => L::T12_42,
        (3, 3) => {
            let row = [st.p, st.q, st.r, st.s];
            if TABLE_NOT_Y.contains(&row) {
                L::T12_28
            } else if (st.p && st.r) || (st.q && st.s) {
                L::T12_12
            } else {
                L::T12_13
            }
        }
        (3, 9) if st.q || st.p => L::T12_38,
        (3, 9) => L::T12_81,
        _ => return Err(Error::ImpossiblePair(g4, g6)),
    };
    Ok(label)
}

/// Whether `3α` or `3β` is a square; `None` unless `b` is a square.
pub fn three_alpha_or_beta_square(a: i64, b: i64) -> Option<bool> {
    let d = derive(a, b).ok()?;
    let (alpha, beta) = (d.alpha?, d.beta?);
    Some(is_square(&(3 * alpha)) || is_square(&(3 * beta)))
}

fn require_irreducible(t: QuadraticLikeTrinomial) -> Result<()> {
    if zz_irreducible(&t.to_polynomial())? {
        Ok(())
    } else {
        Err(Error::Reducible(t.to_string()))
    }
}

fn trinomial(m: u32, a: i64, b: i64) -> Result<QuadraticLikeTrinomial> {
    QuadraticLikeTrinomial::new(m, a, b)
}

pub(crate) fn g4_label(a: i64, b: i64) -> GaloisLabel {
    let bb = BigInt::from(b);
    if is_square(&(&bb * delta(a, b))) {
        GaloisLabel::T4_1
    } else if is_square(&bb) {
        GaloisLabel::T4_2
    } else {
        GaloisLabel::T4_3
    }
}

/// `G_4` for an irreducible `x^4 + a x^2 + b`.
pub fn classify_g4(a: i64, b: i64) -> Result<GaloisLabel> {
    require_irreducible(trinomial(2, a, b)?)?;
    Ok(g4_label(a, b))
}

/// Exact `G_6` for an irreducible `x^6 + a x^3 + b`.
///
/// The splitting field contains `Q(sqrt(-3))`. When `-3δ` is a square the
/// field `Q(sqrt(δ))` coincides with it, so adjoining a cube root of a root
/// of `x^2 + a x + b` gives a Kummer extension of degree 3 or 9 over
/// `Q(sqrt(-3))`; it has degree 3 exactly when `b` is a cube (the product of
/// the two roots) or the resolvent cubic has a rational root. Otherwise the
/// same two conditions decide between 6T3 and 6T9.
pub(crate) fn g6_label(a: i64, b: i64) -> GaloisLabel {
    let st = statements(a, b);
    let coincide = is_square(&(-3 * delta(a, b)));
    match (coincide, st.s, st.r) {
        (true, true, _) => GaloisLabel::T6_1,
        (true, false, true) => GaloisLabel::T6_2,
        (true, false, false) => GaloisLabel::T6_5,
        (false, true, _) | (false, _, true) => GaloisLabel::T6_3,
        (false, false, false) => GaloisLabel::T6_9,
    }
}

/// `G_6` together with Frobenius evidence; the sampler bound is `prime_bound`.
pub fn classify_g6(a: i64, b: i64, prime_bound: u64) -> Result<(GaloisLabel, CycleTypeEvidence)> {
    let t = trinomial(3, a, b)?;
    require_irreducible(t)?;
    let label = g6_label(a, b);
    let mut evidence = frobenius_sample(&t.to_polynomial(), prime_bound)?;
    evidence.attest(label)?;
    Ok((label, evidence))
}

pub(crate) fn f_label(a: i64, b: i64) -> Result<GaloisLabel> {
    let g4 = g4_label(a, b);
    let g6 = g6_label(a, b);
    chen_lookup(g4, g6, &statements(a, b), three_alpha_or_beta_square(a, b))
}

/// `Gal(f)` for an irreducible `f = x^12 + a x^6 + b`.
pub fn classify_f(a: i64, b: i64) -> Result<GaloisLabel> {
    require_irreducible(trinomial(6, a, b)?)?;
    f_label(a, b)
}

/// `Gal(f)` together with Frobenius evidence checked against it.
pub fn classify_f_with_evidence(
    a: i64,
    b: i64,
    prime_bound: u64,
) -> Result<(GaloisLabel, CycleTypeEvidence)> {
    let t = trinomial(6, a, b)?;
    require_irreducible(t)?;
    let label = f_label(a, b)?;
    let mut evidence = frobenius_sample(&t.to_polynomial(), prime_bound)?;
    evidence.attest(label)?;
    Ok((label, evidence))
}

/// A sampled prime and the factor-degree partition of the polynomial there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusWitness {
    pub prime: u64,
    pub cycle_type: Vec<u32>,
}

/// Factor-degree partitions of a polynomial modulo the unramified primes
/// below a bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleTypeEvidence {
    pub degree: u32,
    pub prime_bound: u64,
    pub sampled_primes: usize,
    /// How often each partition was observed.
    pub observed_types: BTreeMap<Vec<u32>, usize>,
    /// The first prime at which each partition was observed.
    pub first_primes: BTreeMap<Vec<u32>, u64>,
    /// From the sampler: the first prime where the polynomial stays
    /// irreducible. After classification: the first prime whose cycle type
    /// rules out every other candidate group of no larger order.
    pub certificate: Option<FrobeniusWitness>,
    /// After classification: the largest chance, over the other candidate
    /// groups compatible with the samples, that such a group would have
    /// produced no cycle type outside the assigned one. `None` when no
    /// compatible alternative remains.
    pub miss_probability: Option<f64>,
}

pub const MIN_PRIME_BOUND: u64 = 100;

/// Factors `u` modulo every prime `p <= prime_bound` not dividing its
/// discriminant and records the partitions.
pub fn frobenius_sample(u: &IntPolynomial, prime_bound: u64) -> Result<CycleTypeEvidence> {
    if prime_bound < MIN_PRIME_BOUND {
        return Err(Error::PrimeBoundTooSmall {
            got: prime_bound,
            min: MIN_PRIME_BOUND,
        });
    }
    if !u.is_monic() || u.degree().unwrap_or(0) < 1 {
        return Err(Error::NotMonic);
    }
    let degree = u.degree().expect("nonzero") as u32;
    let primes = primes_up_to(prime_bound);
    // a monic polynomial is squarefree mod p exactly when p does not divide
    // its discriminant, so `degree_pattern` skips the ramified primes
    let patterns: Vec<(u64, Option<Vec<u32>>)> = primes
        .par_iter()
        .map(|&p| (p, u.reduce_unchecked(p).degree_pattern()))
        .collect();
    let mut evidence = CycleTypeEvidence {
        degree,
        prime_bound,
        sampled_primes: 0,
        observed_types: BTreeMap::new(),
        first_primes: BTreeMap::new(),
        certificate: None,
        miss_probability: None,
    };
    for (p, pattern) in patterns {
        let Some(pattern) = pattern else { continue };
        evidence.sampled_primes += 1;
        if evidence.certificate.is_none() && pattern == [degree] {
            evidence.certificate = Some(FrobeniusWitness {
                prime: p,
                cycle_type: pattern.clone(),
            });
        }
        evidence.first_primes.entry(pattern.clone()).or_insert(p);
        *evidence.observed_types.entry(pattern).or_default() += 1;
    }
    Ok(evidence)
}

impl CycleTypeEvidence {
    /// The first observed partition that `label` cannot realize, if any.
    pub fn inconsistency(&self, label: GaloisLabel) -> Option<FrobeniusWitness> {
        self.observed_types
            .keys()
            .find(|t| !label.admits(t))
            .map(|t| FrobeniusWitness {
                prime: self.first_primes[t],
                cycle_type: t.clone(),
            })
    }

    /// Checks the samples against `label` and fills in the certificate and
    /// the miss probability relative to the other candidates.
    pub fn attest(&mut self, label: GaloisLabel) -> Result<()> {
        if let Some(w) = self.inconsistency(label) {
            return Err(Error::InconsistentEvidence {
                label,
                prime: w.prime,
                cycle_type: w.cycle_type,
            });
        }
        let rivals: Vec<GaloisLabel> = GaloisLabel::of_degree(self.degree)
            .filter(|&g| g != label)
            .collect();
        self.certificate = self
            .observed_types
            .keys()
            .filter(|t| {
                rivals
                    .iter()
                    .filter(|g| g.order() <= label.order())
                    .all(|g| !g.admits(t))
            })
            .map(|t| FrobeniusWitness {
                prime: self.first_primes[t],
                cycle_type: t.clone(),
            })
            .min_by_key(|w| w.prime);
        let n = self.sampled_primes as i32;
        self.miss_probability = rivals
            .iter()
            .filter(|g| self.inconsistency(**g).is_none())
            .filter_map(|g| {
                let counts = g.cycle_types();
                let outside: usize = counts
                    .iter()
                    .filter(|(t, _)| !label.admits(t))
                    .map(|(_, c)| c)
                    .sum();
                (outside > 0).then(|| (1.0 - outside as f64 / g.order() as f64).powi(n))
            })
            .reduce(f64::max);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_parse_and_print() {
        assert_eq!("12T28".parse::<GaloisLabel>().unwrap(), GaloisLabel::T12_28);
        assert_eq!(GaloisLabel::T6_9.to_string(), "6T9");
        assert!("12T4".parse::<GaloisLabel>().is_err());
        assert!("6T4".parse::<GaloisLabel>().is_err());
        assert!("x".parse::<GaloisLabel>().is_err());
        assert_eq!(GaloisLabel::all().count(), 25);
        assert_eq!(GaloisLabel::of_degree(12).count(), 16);
        let json = serde_json_like(GaloisLabel::T12_81);
        assert_eq!(json, "12T81");
    }

    fn serde_json_like(l: GaloisLabel) -> String {
        String::from(l)
    }

    #[test]
    fn g4_examples() {
        assert_eq!(classify_g4(-4, 2).unwrap(), GaloisLabel::T4_1);
        assert_eq!(classify_g4(-1, 1).unwrap(), GaloisLabel::T4_2);
        assert_eq!(classify_g4(1, -1).unwrap(), GaloisLabel::T4_3);
        // x^4 - 2x^2 + 1 = (x^2 - 1)^2
        assert!(matches!(classify_g4(-2, 1), Err(Error::Reducible(_))));
    }

    #[test]
    fn statement_examples() {
        let st = statements(-1, 1);
        assert_eq!(
            st,
            PqrsStatements {
                p: true,
                q: false,
                r: false,
                s: true
            }
        );
        assert!(statements(2, 2).r);
        let st = statements(3, -3);
        assert!(!st.p && st.q);
    }

    #[test]
    fn table_not_y_is_the_complement_of_y() {
        for bits in 0u8..16 {
            let [p, q, r, s] = [bits & 8 != 0, bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
            let y = (p && r) || (q && s) || (q && r) || (p && s);
            assert_eq!(!y, TABLE_NOT_Y.contains(&[p, q, r, s]), "{p} {q} {r} {s}");
        }
    }

    #[test]
    fn group_table_rows() {
        use GaloisLabel as L;
        let none = PqrsStatements {
            p: false,
            q: false,
            r: false,
            s: false,
        };
        let with = |p, q, r, s| PqrsStatements { p, q, r, s };
        let cases = [
            (L::T4_1, L::T6_3, none, None, L::T12_11),
            (L::T4_1, L::T6_9, none, None, L::T12_39),
            (L::T4_2, L::T6_1, none, Some(false), L::T12_2),
            (L::T4_2, L::T6_2, none, Some(false), L::T12_3),
            (L::T4_2, L::T6_5, none, Some(false), L::T12_18),
            (L::T4_2, L::T6_3, none, Some(true), L::T12_3),
            (L::T4_2, L::T6_3, none, Some(false), L::T12_10),
            (L::T4_2, L::T6_9, none, Some(true), L::T12_16),
            (L::T4_2, L::T6_9, none, Some(false), L::T12_37),
            (L::T4_3, L::T6_1, none, None, L::T12_14),
            (L::T4_3, L::T6_2, none, None, L::T12_15),
            (L::T4_3, L::T6_5, none, None, L::T12_42),
            (
                L::T4_3,
                L::T6_3,
                with(true, false, true, false),
                None,
                L::T12_12,
            ),
            (
                L::T4_3,
                L::T6_3,
                with(false, true, false, true),
                None,
                L::T12_12,
            ),
            (
                L::T4_3,
                L::T6_3,
                with(false, true, true, false),
                None,
                L::T12_13,
            ),
            (
                L::T4_3,
                L::T6_3,
                with(true, false, false, true),
                None,
                L::T12_13,
            ),
            (
                L::T4_3,
                L::T6_3,
                with(false, false, true, false),
                None,
                L::T12_28,
            ),
            (
                L::T4_3,
                L::T6_9,
                with(false, true, false, false),
                None,
                L::T12_38,
            ),
            (
                L::T4_3,
                L::T6_9,
                with(true, false, false, false),
                None,
                L::T12_38,
            ),
            (L::T4_3, L::T6_9, none, None, L::T12_81),
        ];
        for (g4, g6, st, ab, want) in cases {
            assert_eq!(chen_lookup(g4, g6, &st, ab).unwrap(), want, "({g4},{g6})");
        }
        for g6 in [L::T6_1, L::T6_2, L::T6_5] {
            assert_eq!(
                chen_lookup(L::T4_1, g6, &none, None),
                Err(Error::ImpossiblePair(L::T4_1, g6))
            );
        }
    }

    #[test]
    fn g6_examples() {
        assert_eq!(classify_g6(-1, 1, 200).unwrap().0, GaloisLabel::T6_1);
        assert_eq!(classify_g6(2, 2, 200).unwrap().0, GaloisLabel::T6_3);
        assert_eq!(classify_g6(11, 33, 200).unwrap().0, GaloisLabel::T6_9);
        // 6T2 examples: the resolvent has a root, b is not a cube and -3δ is a square
        assert_eq!(classify_g6(54, 1029, 1000).unwrap().0, GaloisLabel::T6_2);
        assert_eq!(classify_g6(-40, 1372, 1000).unwrap().0, GaloisLabel::T6_2);
    }

    #[test]
    fn g6_evidence_carries_certificates() {
        let (_, ev) = classify_g6(-1, 1, 500).unwrap();
        let cert = ev.certificate.unwrap();
        assert_eq!(cert.cycle_type, vec![6]);
        // 6T2 cannot be certified against 6T1; the risk is (2/3)^n
        let (_, ev) = classify_g6(54, 1029, 1000).unwrap();
        assert!(ev.certificate.is_none());
        let expected = (2.0f64 / 3.0).powi(ev.sampled_primes as i32);
        let got = ev.miss_probability.unwrap();
        assert!(
            (got - expected).abs() <= 1e-12 * expected.max(1e-300),
            "{got} vs {expected}"
        );
    }

    #[test]
    fn f_examples() {
        assert_eq!(classify_f(-1, 1).unwrap(), GaloisLabel::T12_2);
        assert_eq!(classify_f(2, 2).unwrap(), GaloisLabel::T12_28);
        assert_eq!(classify_f(3, 3).unwrap(), GaloisLabel::T12_42);
        assert_eq!(classify_f(-5, 5).unwrap(), GaloisLabel::T12_39);
        assert!(matches!(classify_f(1, 1), Err(Error::Reducible(_))));
    }

    #[test]
    fn sampler_examples() {
        let phi9 = IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 1]);
        let ev = frobenius_sample(&phi9, 200).unwrap();
        assert!(ev.observed_types.contains_key(&vec![6]));
        assert_eq!(ev.certificate.unwrap().prime, 2);

        let ev = frobenius_sample(&IntPolynomial::from_i64s(&[1, 0, 1]), 100).unwrap();
        let allowed = [vec![1, 1], vec![2]];
        assert!(ev.observed_types.keys().all(|t| allowed.contains(t)));
        assert_eq!(
            frobenius_sample(&phi9, 50),
            Err(Error::PrimeBoundTooSmall { got: 50, min: 100 })
        );

        let phi36 = IntPolynomial::from_i64s(&[1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1]);
        let ev = frobenius_sample(&phi36, 500).unwrap();
        assert!(ev.inconsistency(GaloisLabel::T12_2).is_none());
    }

    #[test]
    fn inconsistent_evidence_is_reported() {
        let phi9 = IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 1]);
        let mut ev = frobenius_sample(&phi9, 200).unwrap();
        let err = ev.attest(GaloisLabel::T6_2).unwrap_err();
        assert!(matches!(err, Error::InconsistentEvidence { prime: 2, .. }));
    }
}
