//! Per-prime index divisibility for `x^(2m) + A x^m + B` and the resulting
//! monogenicity decision.
//!
//! Which of the five conditions applies at a prime `q` is fixed by whether
//! `q` divides `A`, `B` and `m`; the condition then decides from a handful of
//! integers (or, in the fourth case, from a gcd over `F_q`) whether `q`
//! divides `[Z_K : Z[θ]]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_squarefree};
use crate::error::{Error, Result};
use crate::trinomial::QuadraticLikeTrinomial;
use crate::zpoly::{mod_gcd, zz_irreducible, IntPolynomial};

/// The five cases, numbered as in the index theorem for these trinomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum JksCondition {
    /// `q | A`, `q | B`.
    BothDivisible = 1,
    /// `q | A`, `q ∤ B`.
    DividesA = 2,
    /// `q ∤ A`, `q | B`.
    DividesB = 3,
    /// `q ∤ AB`, `q | m`.
    DividesM = 4,
    /// `q ∤ ABm`.
    Coprime = 5,
}

impl JksCondition {
    pub fn number(self) -> u8 {
        self as u8
    }

    fn select(q: &BigInt, a: &BigInt, b: &BigInt, m: u32) -> Self {
        let qa = a.is_multiple_of(q);
        let qb = b.is_multiple_of(q);
        match (qa, qb) {
            (true, true) => Self::BothDivisible,
            (true, false) => Self::DividesA,
            (false, true) => Self::DividesB,
            (false, false) if BigInt::from(m).is_multiple_of(q) => Self::DividesM,
            (false, false) => Self::Coprime,
        }
    }
}

impl From<JksCondition> for u8 {
    fn from(c: JksCondition) -> u8 {
        c.number()
    }
}

impl TryFrom<u8> for JksCondition {
    type Error = String;

    fn try_from(n: u8) -> std::result::Result<Self, String> {
        match n {
            1 => Ok(Self::BothDivisible),
            2 => Ok(Self::DividesA),
            3 => Ok(Self::DividesB),
            4 => Ok(Self::DividesM),
            5 => Ok(Self::Coprime),
            _ => Err(format!("no condition ({n})")),
        }
    }
}

impl fmt::Display for JksCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// Everything the applicable condition needs at one prime. Fields a
/// condition does not use are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JksContext {
    pub q: BigInt,
    pub condition: JksCondition,
    /// `(A + (-A)^(q^l)) / q`.
    pub a1: Option<BigInt>,
    /// `A / q`.
    pub a2: Option<BigInt>,
    /// `(B + (-B)^(q^j)) / q`.
    pub b1: Option<BigInt>,
    /// `B / q`.
    pub b2: Option<BigInt>,
    /// `q^j || 2m`.
    pub j: Option<u32>,
    /// `q^l || m`.
    pub l: Option<u32>,
    /// `m = s q^k` with `q ∤ s`.
    pub s: Option<u32>,
    pub k: Option<u32>,
    pub h1: Option<IntPolynomial>,
    pub h2: Option<IntPolynomial>,
}

/// Exponent of `q` in `n > 0`, and the cofactor.
fn split_power(n: u32, q: &BigInt) -> (u32, u32) {
    let Some(q) = q.to_u32() else {
        return (0, n);
    };
    let (mut e, mut r) = (0, n);
    while r % q == 0 {
        r /= q;
        e += 1;
    }
    (e, r)
}

fn exact_div(n: BigInt, q: &BigInt) -> BigInt {
    let (d, r) = n.div_rem(q);
    debug_assert!(r.is_zero(), "division by q must be exact");
    d
}

impl JksContext {
    /// Builds the context for `t` at the prime `q`; no check that `q` divides
    /// the discriminant.
    pub fn new(t: &QuadraticLikeTrinomial, q: &BigInt) -> Self {
        let a = BigInt::from(t.a());
        let b = BigInt::from(t.b());
        let m = t.m();
        let condition = JksCondition::select(q, &a, &b, m);
        let mut ctx = Self {
            q: q.clone(),
            condition,
            a1: None,
            a2: None,
            b1: None,
            b2: None,
            j: None,
            l: None,
            s: None,
            k: None,
            h1: None,
            h2: None,
        };
        match condition {
            JksCondition::BothDivisible | JksCondition::Coprime => {}
            JksCondition::DividesA => {
                let (j, _) = split_power(2 * m, q);
                let qj = q.pow(j).to_u32().expect("q^j divides 2m");
                ctx.j = Some(j);
                ctx.a2 = Some(exact_div(a, q));
                ctx.b1 = Some(exact_div(&b + (-&b).pow(qj), q));
            }
            JksCondition::DividesB => {
                let (l, _) = split_power(m, q);
                let ql = q.pow(l).to_u32().expect("q^l divides m");
                ctx.l = Some(l);
                ctx.a1 = Some(exact_div(&a + (-&a).pow(ql), q));
                ctx.b2 = Some(exact_div(b, q));
            }
            JksCondition::DividesM => {
                let (k, s) = split_power(m, q);
                let qk = q.pow(k).to_usize().expect("q^k divides m");
                let s_us = s as usize;
                let h1 = IntPolynomial::trinomial(s_us, &a, &b);
                let inner =
                    IntPolynomial::monomial(-&a, s_us).sub(&IntPolynomial::constant(b.clone()));
                let numerator = IntPolynomial::monomial(a.clone(), s_us * qk)
                    .add(&IntPolynomial::constant(b.clone()))
                    .add(&inner.pow(qk as u32));
                let h2 = numerator
                    .div_exact_scalar(q)
                    .expect("H2 numerator is divisible by q");
                ctx.k = Some(k);
                ctx.s = Some(s);
                ctx.h1 = Some(h1);
                ctx.h2 = Some(h2);
            }
        }
        ctx
    }

    /// Whether `q` divides the index, by the applicable condition.
    pub fn divides_index(&self, t: &QuadraticLikeTrinomial) -> bool {
        let q = &self.q;
        let b = BigInt::from(t.b());
        let dvd = |n: &BigInt| n.is_multiple_of(q);
        let holds = match self.condition {
            JksCondition::BothDivisible => !dvd(&b.div_floor(q)),
            JksCondition::DividesA => {
                let a2 = self.a2.as_ref().expect("set for condition (2)");
                let b1 = self.b1.as_ref().expect("set for condition (2)");
                (dvd(a2) && !dvd(b1)) || !dvd(&(a2 * (a2 * a2 * &b + b1 * b1)))
            }
            JksCondition::DividesB => {
                let a = BigInt::from(t.a());
                let a1 = self.a1.as_ref().expect("set for condition (3)");
                let b2 = self.b2.as_ref().expect("set for condition (3)");
                let prod = a1 * b2.pow(t.m() - 1) * (&a * a1 - b2);
                (dvd(a1) && !dvd(b2)) || !dvd(&prod)
            }
            JksCondition::DividesM => {
                // q | m and m is small, so q fits a machine word
                let p = q.to_u64().expect("q divides m");
                let h1 = self
                    .h1
                    .as_ref()
                    .expect("set for condition (4)")
                    .reduce_unchecked(p);
                let h2 = self
                    .h2
                    .as_ref()
                    .expect("set for condition (4)")
                    .reduce_unchecked(p);
                mod_gcd(&h1, &h2).expect("same modulus").is_one()
            }
            JksCondition::Coprime => {
                let a = BigInt::from(t.a());
                let d: BigInt = &a * &a - 4 * &b;
                !dvd(&(d / q))
            }
        };
        !holds
    }
}

/// The outcome at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVerdict {
    pub prime: BigInt,
    pub divides_index: bool,
    pub condition: JksCondition,
}

pub(crate) fn verdict_unchecked(t: &QuadraticLikeTrinomial, q: &BigInt) -> IndexVerdict {
    let ctx = JksContext::new(t, q);
    IndexVerdict {
        prime: q.clone(),
        divides_index: ctx.divides_index(t),
        condition: ctx.condition,
    }
}

fn require_irreducible(t: &QuadraticLikeTrinomial) -> Result<()> {
    if zz_irreducible(&t.to_polynomial())? {
        Ok(())
    } else {
        Err(Error::Reducible(t.to_string()))
    }
}

/// Decides whether the prime `q` divides the index of the irreducible
/// trinomial `t`. `q` must divide the discriminant.
pub fn jks_prime_ok(t: &QuadraticLikeTrinomial, q: &BigInt) -> Result<IndexVerdict> {
    if !q.is_positive() || !is_prime(q.magnitude()) {
        return Err(Error::NotPrime(q.clone()));
    }
    let disc = t.discriminant();
    if !disc.is_multiple_of(q) {
        return Err(Error::PrimeNotInDiscriminant { q: q.clone(), disc });
    }
    require_irreducible(t)?;
    Ok(verdict_unchecked(t, q))
}

/// Irreducibility, monogenicity and the per-prime verdicts behind them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicityReport {
    pub trinomial: QuadraticLikeTrinomial,
    pub irreducible: bool,
    /// False for reducible input.
    pub monogenic: bool,
    /// One verdict per prime divisor of the discriminant, increasing; empty
    /// for reducible input.
    pub verdicts: Vec<IndexVerdict>,
}

impl MonogenicityReport {
    /// The least prime dividing the index.
    pub fn obstruction(&self) -> Option<&IndexVerdict> {
        self.verdicts.iter().find(|v| v.divides_index)
    }
}

pub(crate) fn report_for_irreducible(t: &QuadraticLikeTrinomial) -> MonogenicityReport {
    let verdicts: Vec<IndexVerdict> = t
        .discriminant_primes()
        .iter()
        .map(|q| verdict_unchecked(t, q))
        .collect();
    MonogenicityReport {
        trinomial: *t,
        irreducible: true,
        monogenic: verdicts.iter().all(|v| !v.divides_index),
        verdicts,
    }
}

pub fn is_monogenic(t: &QuadraticLikeTrinomial) -> MonogenicityReport {
    let irreducible = zz_irreducible(&t.to_polynomial()).expect("trinomials are monic");
    if !irreducible {
        return MonogenicityReport {
            trinomial: *t,
            irreducible: false,
            monogenic: false,
            verdicts: Vec::new(),
        };
    }
    report_for_irreducible(t)
}

/// Monogenicity of `g(x^k)` decided from `g`: `g(0)` squarefree, no prime
/// dividing `k` divides the index of the composition, and `g` monogenic.
pub fn kkr_monogenic(g: &QuadraticLikeTrinomial, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidExponent(k));
    }
    let f = g.compose(k);
    require_irreducible(&f)?;
    if !is_squarefree(&BigInt::from(g.b()))? {
        return Ok(false);
    }
    let mut n = k;
    let mut q = 2;
    while n > 1 {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            if verdict_unchecked(&f, &BigInt::from(q)).divides_index {
                return Ok(false);
            }
        }
        q += 1;
    }
    // f irreducible implies g irreducible
    Ok(report_for_irreducible(g).monogenic)
}
