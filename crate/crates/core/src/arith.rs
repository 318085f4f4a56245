//! Exact integer arithmetic: factorization, primality, squarefree and
//! perfect-power tests.
//!
//! Factorization uses trial division by the primes below 10^6, then
//! Brent's variant of Pollard rho on whatever cofactor is left, with a
//! Miller-Rabin check deciding when a cofactor is prime. The inputs this
//! crate produces are discriminants of small trinomials, so the rho stage is
//! rarely reached.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: usize = 1_000_000;

/// First twenty primes; as Miller-Rabin bases the first thirteen already make
/// the test exact below 3.3 * 10^24.
const MR_BASES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Sieve of Eratosthenes returning all primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT as u64))
}

/// A nonzero integer together with its complete prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigInt,
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// `1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.value.sign() == Sign::Minus {
            -1
        } else {
            1
        }
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Multiplies the factorization back out, sign included.
    pub fn recombine(&self) -> BigInt {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        let acc = BigInt::from(acc);
        if self.sign() < 0 {
            -acc
        } else {
            acc
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign() < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Complete prime factorization of a nonzero integer.
pub fn factorize(n: &BigInt) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut found: Vec<(BigUint, u32)> = Vec::new();
    let cofactor = trial_divide(n.magnitude().clone(), &mut found);
    if !cofactor.is_one() {
        let mut stack = vec![cofactor];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_prime(&m) {
                push_factor(&mut found, m);
                continue;
            }
            let d = pollard_brent(&m);
            let other = &m / &d;
            stack.push(d);
            stack.push(other);
        }
    }
    found.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(found.len());
    for (p, e) in found {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(FactoredInteger {
        value: n.clone(),
        factors: merged,
    })
}

fn push_factor(found: &mut Vec<(BigUint, u32)>, p: BigUint) {
    if let Some(entry) = found.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += 1;
    } else {
        found.push((p, 1));
    }
}

/// Strips every prime below `TRIAL_LIMIT` and returns the cofactor, which is
/// either 1, a prime, or a composite with all prime factors above the limit.
fn trial_divide(mut rem: BigUint, found: &mut Vec<(BigUint, u32)>) -> BigUint {
    let primes = trial_primes();
    let mut i = 0;
    while i < primes.len() && rem.bits() > 64 {
        let p = primes[i];
        let mut e = 0;
        loop {
            let (q, r) = rem.div_rem(&BigUint::from(p));
            if !r.is_zero() {
                break;
            }
            rem = q;
            e += 1;
        }
        if e > 0 {
            found.push((BigUint::from(p), e));
        }
        i += 1;
    }
    if rem.bits() > 64 {
        return rem;
    }
    let mut r = rem.to_u64().expect("fits in u64");
    while i < primes.len() {
        let p = primes[i];
        if p * p > r {
            break;
        }
        if r.is_multiple_of(p) {
            let mut e = 0;
            while r.is_multiple_of(p) {
                r /= p;
                e += 1;
            }
            found.push((BigUint::from(p), e));
        }
        i += 1;
    }
    if r > 1 && i < primes.len() {
        // every prime up to sqrt(r) has been tried
        found.push((BigUint::from(r), 1));
        return BigUint::one();
    }
    BigUint::from(r)
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES[..12] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with the first twenty prime bases. Exact for `n < 3.3e24`
/// (and for every `n` that fits a machine word); a strong probable-prime test
/// beyond that.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial divisor of a composite `n` with no small factors.
fn pollard_brent(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u64() {
        return BigUint::from(pollard_brent_u64(small));
    }
    let one = BigUint::one();
    for c in 1u64.. {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!("rho exhausts all increments only for prime input")
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1..n {
        let step = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = step(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausts all increments only for prime input")
}

/// True iff no prime square divides `n`. The sign is ignored, so `-3` is
/// squarefree.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut m = n.magnitude().clone();
    // cheap exits for the small squares before a full factorization
    for p in [2u32, 3, 5, 7, 11, 13] {
        let p2 = p * p;
        if (&m % p2).is_zero() {
            return Ok(false);
        }
        if (&m % p).is_zero() {
            m /= p;
        }
    }
    Ok(factorize(&BigInt::from(m))?.is_squarefree())
}

pub fn is_square(n: &BigInt) -> bool {
    if n.sign() == Sign::Minus {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// True iff `n = k^3` for an integer `k`; negative cubes count.
pub fn is_cube(n: &BigInt) -> bool {
    let m = n.magnitude();
    let r = m.cbrt();
    &r * &r * &r == *m
}

/// Integer square root of a perfect square, if it is one.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    is_square(n).then(|| n.sqrt())
}

/// Least nonnegative residue of `a` modulo `m > 0`.
pub fn residue(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}
