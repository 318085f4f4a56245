//! Closed-form characterizations of the monogenic `g_2`, `g_4`, `g_6` and
//! `f`, evaluated from residues and squarefree tests alone.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{is_square, is_squarefree};
use crate::error::{Error, Result};
use crate::galois::{g4_label, g6_label, GaloisLabel};
use crate::trinomial::{delta, w, QuadraticLikeTrinomial};
use crate::zpoly::zz_irreducible;

/// A set of admissible residue pairs `(a mod n, b mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueConditionTable {
    pub name: &'static str,
    pub modulus: i64,
    pub pairs: &'static [(i64, i64)],
}

impl ResidueConditionTable {
    pub fn contains(&self, a: i64, b: i64) -> bool {
        let key = (a.rem_euclid(self.modulus), b.rem_euclid(self.modulus));
        self.pairs.contains(&key)
    }
}

pub const R: ResidueConditionTable = ResidueConditionTable {
    name: "R",
    modulus: 4,
    pairs: &[
        (0, 1),
        (0, 2),
        (2, 2),
        (2, 3),
        (1, 3),
        (3, 2),
        (3, 1),
        (3, 3),
    ],
};

pub const S1: ResidueConditionTable = ResidueConditionTable {
    name: "S1",
    modulus: 9,
    pairs: &[(0, 3), (0, 6), (3, 3), (3, 6), (6, 3), (6, 6)],
};

pub const S2: ResidueConditionTable = ResidueConditionTable {
    name: "S2",
    modulus: 9,
    pairs: &[
        (0, 2),
        (0, 4),
        (0, 5),
        (0, 7),
        (3, 1),
        (3, 4),
        (3, 7),
        (3, 8),
        (6, 1),
        (6, 4),
        (6, 7),
        (6, 8),
    ],
};

pub const S3: ResidueConditionTable = ResidueConditionTable {
    name: "S3",
    modulus: 9,
    pairs: &[
        (1, 3),
        (1, 6),
        (2, 3),
        (4, 6),
        (5, 6),
        (7, 3),
        (8, 3),
        (8, 6),
    ],
};

pub const S4: ResidueConditionTable = ResidueConditionTable {
    name: "S4",
    modulus: 9,
    pairs: &[
        (1, 1),
        (1, 2),
        (1, 4),
        (1, 5),
        (1, 8),
        (2, 2),
        (2, 4),
        (2, 5),
        (2, 7),
        (2, 8),
        (4, 1),
        (4, 2),
        (4, 5),
        (4, 7),
        (5, 1),
        (5, 2),
        (5, 5),
        (5, 7),
        (7, 2),
        (7, 4),
        (7, 5),
        (7, 7),
        (7, 8),
        (8, 1),
        (8, 2),
        (8, 4),
        (8, 5),
        (8, 8),
    ],
};

/// Residue pairs mod 4 allowed for `g_2` when `a` is even.
const G2_EVEN: ResidueConditionTable = ResidueConditionTable {
    name: "G2",
    modulus: 4,
    pairs: &[(0, 1), (0, 2), (2, 2), (2, 3)],
};

fn squarefree(n: &BigInt) -> bool {
    is_squarefree(n).unwrap_or(false)
}

fn require_irreducible(m: u32, a: i64, b: i64) -> Result<()> {
    let t = QuadraticLikeTrinomial::new(m, a, b)?;
    if zz_irreducible(&t.to_polynomial())? {
        Ok(())
    } else {
        Err(Error::Reducible(t.to_string()))
    }
}

/// Monogenicity of an irreducible `x^2 + a x + b`.
pub fn g2_monogenic_char(a: i64, b: i64) -> Result<bool> {
    require_irreducible(1, a, b)?;
    Ok(squarefree(&w(a, b)) && (a % 2 != 0 || G2_EVEN.contains(a, b)))
}

/// `G_4` and monogenicity of an irreducible `x^4 + a x^2 + b`.
pub fn g4_monogenic_char(a: i64, b: i64) -> Result<(GaloisLabel, bool)> {
    require_irreducible(2, a, b)?;
    let label = g4_label(a, b);
    let monogenic = match label {
        GaloisLabel::T4_1 => [(4, 2), (-4, 2), (-5, 5)].contains(&(a, b)),
        GaloisLabel::T4_2 => b == 1 && [0, 3].contains(&a.rem_euclid(4)) && squarefree(&w(a, b)),
        _ => {
            let bb = BigInt::from(b);
            squarefree(&w(a, b))
                && squarefree(&bb)
                && b != 1
                && !is_square(&(&bb * delta(a, b)))
                && R.contains(a, b)
        }
    };
    Ok((label, monogenic))
}

/// Monogenicity of an irreducible `x^6 + a x^3 + b` when `G_6` is not 6T9;
/// `None` for 6T9, whose monogenic families are not listed here.
pub fn g6_monogenic_char(a: i64, b: i64) -> Result<Option<bool>> {
    require_irreducible(3, a, b)?;
    let verdict = match g6_label(a, b) {
        GaloisLabel::T6_1 => Some((a, b) == (-1, 1) || (a, b) == (1, 1)),
        GaloisLabel::T6_2 => Some(false),
        GaloisLabel::T6_3 => Some(in_f2(a, b) || in_f3(a, b) || in_f4(a, b)),
        GaloisLabel::T6_5 => Some(in_f5(a, b)),
        _ => None,
    };
    Ok(verdict)
}

fn in_f2(a: i64, b: i64) -> bool {
    (a, b) == (-2, 2) || (a, b) == (2, 2)
}

fn in_f3(a: i64, b: i64) -> bool {
    b == 1
        && a.rem_euclid(9) != 0
        && a.abs() != 1
        && squarefree(&BigInt::from(a - 2))
        && squarefree(&BigInt::from(a + 2))
}

fn in_f4(a: i64, b: i64) -> bool {
    let n = BigInt::from(a) * a + 4;
    let g = if a % 2 == 0 { 4 } else { 1 };
    b == -1 && a.rem_euclid(4) != 0 && ![0, 4, 5].contains(&a.rem_euclid(9)) && squarefree(&(n / g))
}

fn in_f5(a: i64, b: i64) -> bool {
    a % 2 != 0 && a.abs() != 1 && family_42_b(a) == Some(b) && squarefree(&BigInt::from(b))
}

/// `(a^2 + 3) / 4` when it is an integer (exactly when `a` is odd).
pub fn family_42_b(a: i64) -> Option<i64> {
    let n = a as i128 * a as i128 + 3;
    (n % 4 == 0).then_some((n / 4) as i64)
}

pub fn in_c10(a: i64) -> bool {
    a != -1 && [0, 3].contains(&a.rem_euclid(4)) && a.rem_euclid(9) != 0 && squarefree(&w(a, 1))
}

pub fn in_c28(a: i64) -> bool {
    a.rem_euclid(4) != 0 && ![0, 4, 5].contains(&a.rem_euclid(9)) && squarefree(&w(a, -1))
}

pub fn in_c38(a: i64) -> bool {
    [0, 3].contains(&a.rem_euclid(4)) && ![2, 7].contains(&a.rem_euclid(9)) && squarefree(&w(a, -3))
}

/// Membership in the 12T42 condition set; `b = (a^2 + 3)/4` must be
/// integral.
pub fn in_c42(a: i64) -> Result<bool> {
    let b = family_42_b(a).ok_or(Error::NonIntegralFamily(a))?;
    Ok([3, 5, 7].contains(&a.rem_euclid(8)) && a != -1 && squarefree(&BigInt::from(b)))
}

/// The 12T81 conditions including both residue tables.
pub fn in_c81(a: i64, b: i64) -> bool {
    let bb = BigInt::from(b);
    let d = delta(a, b);
    b != 1
        && squarefree(&bb)
        && squarefree(&w(a, b))
        && !is_square(&(-3 * &bb))
        && !is_square(&(-3 * &bb * &d))
        && !is_square(&(&bb * &d))
        && R.contains(a, b)
        && [S1, S2, S3, S4].iter().any(|s| s.contains(a, b))
}

/// The characterization clause that produced a positive prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// `x^12 - x^6 + 1`.
    #[serde(rename = "list-12T2")]
    Cyclotomic,
    /// `x^12 ± 2x^6 + 2`.
    #[serde(rename = "list-12T28")]
    List28,
    /// `x^12 ± 4x^6 - 2`, `x^12 ± 4x^6 + 6`.
    #[serde(rename = "list-12T38")]
    List38,
    /// `x^12 ± 4x^6 + 2`, `x^12 - 5x^6 + 5`.
    #[serde(rename = "list-12T39")]
    List39,
    /// `b = 1` and C10.
    C10,
    /// `b = -1` and C28.
    C28,
    /// `b = -3` and C38.
    C38,
    /// `b = (a^2 + 3)/4` and C42.
    C42,
    /// C81 with the residue tables.
    C81,
}

impl Rule {
    pub fn label(self) -> GaloisLabel {
        match self {
            Rule::Cyclotomic => GaloisLabel::T12_2,
            Rule::List28 | Rule::C28 => GaloisLabel::T12_28,
            Rule::List38 | Rule::C38 => GaloisLabel::T12_38,
            Rule::List39 => GaloisLabel::T12_39,
            Rule::C10 => GaloisLabel::T12_10,
            Rule::C42 => GaloisLabel::T12_42,
            Rule::C81 => GaloisLabel::T12_81,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Cyclotomic => "list-12T2",
            Rule::List28 => "list-12T28",
            Rule::List38 => "list-12T38",
            Rule::List39 => "list-12T39",
            Rule::C10 => "C10",
            Rule::C28 => "C28",
            Rule::C38 => "C38",
            Rule::C42 => "C42",
            Rule::C81 => "C81",
        };
        f.write_str(s)
    }
}

pub const LIST_12T2: &[(i64, i64)] = &[(-1, 1)];
pub const LIST_12T28: &[(i64, i64)] = &[(2, 2), (-2, 2)];
pub const LIST_12T38: &[(i64, i64)] = &[(4, -2), (-4, -2), (4, 6), (-4, 6)];
pub const LIST_12T39: &[(i64, i64)] = &[(4, 2), (-4, 2), (-5, 5)];

/// The characterization's verdict on `f = x^12 + a x^6 + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    /// Some clause of the characterization matched positively.
    pub applicable: bool,
    pub predicted_monogenic: bool,
    /// Present exactly when monogenicity is predicted.
    pub predicted_label: Option<GaloisLabel>,
    pub matched_rule: Option<Rule>,
}

/// The rule deciding `(a, b)`. The finite lists come first; a pair whose
/// `b` is `1`, `-1`, `-3` or `(a^2 + 3)/4` is then decided by that family's
/// condition set alone, and every other pair by C81.
pub(crate) fn matching_rule(a: i64, b: i64) -> Option<Rule> {
    let pair = (a, b);
    let lists = [
        (LIST_12T2, Rule::Cyclotomic),
        (LIST_12T28, Rule::List28),
        (LIST_12T38, Rule::List38),
        (LIST_12T39, Rule::List39),
    ];
    if let Some((_, rule)) = lists.iter().find(|(l, _)| l.contains(&pair)) {
        return Some(*rule);
    }
    let fires = |cond: bool, rule| cond.then_some(rule);
    match b {
        1 => fires(in_c10(a), Rule::C10),
        -1 => fires(in_c28(a), Rule::C28),
        -3 => fires(in_c38(a), Rule::C38),
        _ if family_42_b(a) == Some(b) => fires(in_c42(a).unwrap_or(false), Rule::C42),
        _ => fires(in_c81(a, b), Rule::C81),
    }
}

pub(crate) fn predict_unchecked(a: i64, b: i64) -> Prediction {
    let rule = matching_rule(a, b);
    Prediction {
        applicable: rule.is_some(),
        predicted_monogenic: rule.is_some(),
        predicted_label: rule.map(Rule::label),
        matched_rule: rule,
    }
}

/// The characterization's prediction for an irreducible `f`.
pub fn predict_f(a: i64, b: i64) -> Result<Prediction> {
    require_irreducible(6, a, b)?;
    Ok(predict_unchecked(a, b))
}
