//! The trinomials `x^(2m) + A x^m + B` and the quantities attached to a
//! coefficient pair `(a, b)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, factorize};
use crate::error::{Error, Result};
use crate::zpoly::IntPolynomial;

/// `x^(2m) + a x^m + b` with `a b != 0` and `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticLikeTrinomial {
    m: u32,
    a: i64,
    b: i64,
}

impl QuadraticLikeTrinomial {
    pub fn new(m: u32, a: i64, b: i64) -> Result<Self> {
        if m == 0 || a == 0 || b == 0 {
            return Err(Error::InvalidTrinomial { m, a, b });
        }
        Ok(Self { m, a, b })
    }

    /// The degree-12 member `f = x^12 + a x^6 + b`.
    pub fn dodecic(a: i64, b: i64) -> Result<Self> {
        Self::new(6, a, b)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn degree(&self) -> u32 {
        2 * self.m
    }

    /// `self(x^k)`, i.e. the same coefficients with half-degree `m k`.
    pub fn compose(&self, k: u32) -> Self {
        Self {
            m: self.m * k,
            ..*self
        }
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::trinomial(self.m as usize, &self.a.into(), &self.b.into())
    }

    /// Swan's closed form `B^(m-1) m^(2m) (A^2 - 4B)^m`.
    pub fn discriminant(&self) -> BigInt {
        let a = BigInt::from(self.a);
        let b = BigInt::from(self.b);
        let m = BigInt::from(self.m);
        let d: BigInt = &a * &a - 4 * &b;
        b.pow(self.m - 1) * m.pow(2 * self.m) * d.pow(self.m)
    }

    /// Distinct prime divisors of the discriminant, increasing.
    pub fn discriminant_primes(&self) -> Vec<BigInt> {
        // Δ is a product of powers of b, m and δ; factoring those is cheaper
        let mut primes: Vec<BigInt> = Vec::new();
        let a = BigInt::from(self.a);
        let b = BigInt::from(self.b);
        let parts = [
            (self.m > 1).then(|| b.clone()),
            (self.m > 1).then(|| BigInt::from(self.m)),
            Some(&a * &a - 4 * &b),
        ];
        for n in parts.into_iter().flatten() {
            if n.is_zero() {
                continue;
            }
            let f = factorize(&n).expect("nonzero");
            primes.extend(f.primes().map(|p| BigInt::from(p.clone())));
        }
        primes.sort();
        primes.dedup();
        primes
    }
}

impl fmt::Display for QuadraticLikeTrinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

/// `δ`, `W`, `α`, `β` and the resolvent cubic of a pair `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedQuantities {
    pub delta: BigInt,
    /// `δ / gcd(2, a)^2`.
    pub w: BigInt,
    /// `a + 2 sqrt(b)`, only when `b` is a perfect square.
    pub alpha: Option<BigInt>,
    /// `a - 2 sqrt(b)`, only when `b` is a perfect square.
    pub beta: Option<BigInt>,
    /// `x^3 - 3b x + ab`.
    pub resolvent: IntPolynomial,
}

pub fn delta(a: i64, b: i64) -> BigInt {
    let a = BigInt::from(a);
    &a * &a - 4 * BigInt::from(b)
}

pub fn w(a: i64, b: i64) -> BigInt {
    let d = delta(a, b);
    if a.is_even() {
        d / 4
    } else {
        d
    }
}

pub fn derive(a: i64, b: i64) -> Result<DerivedQuantities> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidTrinomial { m: 1, a, b });
    }
    let root = exact_sqrt(&BigInt::from(b));
    let ab = BigInt::from(a) * BigInt::from(b);
    Ok(DerivedQuantities {
        delta: delta(a, b),
        w: w(a, b),
        alpha: root.as_ref().map(|r| a + 2 * r),
        beta: root.as_ref().map(|r| a - 2 * r),
        resolvent: IntPolynomial::new(vec![
            ab,
            BigInt::from(-3) * BigInt::from(b),
            BigInt::zero(),
            1.into(),
        ]),
    })
}

/// An integer root of `x^3 - 3b x + ab`, if there is one.
pub fn resolvent_root(a: i64, b: i64) -> Option<i64> {
    let (a, b) = (a as i128, b as i128);
    let ab = a * b;
    let r = |x: i128| x * x * x - 3 * b * x + ab;
    if ab == 0 {
        return Some(0);
    }
    let n = ab.unsigned_abs();
    let mut d = 1u128;
    let mut roots = Vec::new();
    while d * d <= n {
        if n % d == 0 {
            for c in [d, n / d] {
                let c = c as i128;
                roots.push(c);
                roots.push(-c);
            }
        }
        d += 1;
    }
    roots.sort_by_key(|&x| (x.abs(), x));
    roots.into_iter().find(|&x| r(x) == 0).map(|x| x as i64)
}

/// Statement R: the resolvent cubic has a rational (hence integer) root.
pub fn resolvent_reducible(a: i64, b: i64) -> bool {
    resolvent_root(a, b).is_some()
}
