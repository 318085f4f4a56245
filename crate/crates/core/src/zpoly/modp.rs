use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::is_prime_u64;
use crate::error::{Error, Result};

/// A polynomial over the prime field `F_p`, coefficients constant term first.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    p: u64,
    c: Vec<u64>,
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse in `F_p` (`a` nonzero).
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

impl ModPolynomial {
    /// Builds a polynomial from raw coefficients, reducing them modulo `p`.
    ///
    /// `p` must be prime; this is checked.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.into()));
        }
        Ok(Self::from_reduced(
            p,
            coeffs.into_iter().map(|c| c % p).collect(),
        ))
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.into()));
        }
        let c = coeffs
            .iter()
            .map(|&v| (v as i128).rem_euclid(p as i128) as u64)
            .collect();
        Ok(Self::from_reduced(p, c))
    }

    /// Coefficients already in `[0, p)`, `p` already known prime.
    pub(crate) fn from_reduced(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn constant(p: u64, v: u64) -> Self {
        Self::from_reduced(p, vec![v % p])
    }

    pub fn monomial(p: u64, coeff: u64, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = coeff % p;
        Self::from_reduced(p, c)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| add_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_reduced(p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| sub_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_reduced(p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        if p < (1 << 31) {
            // products of two residues fit in u64 with room for a few sums
            for (i, &a) in self.c.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.c.iter().enumerate() {
                    c[i + j] = (c[i + j] + a * b) % p;
                }
            }
        } else {
            for (i, &a) in self.c.iter().enumerate() {
                for (j, &b) in other.c.iter().enumerate() {
                    c[i + j] = add_mod(c[i + j], mul_mod(a, b, p), p);
                }
            }
        }
        Self::from_reduced(p, c)
    }

    pub fn scale(&self, k: u64) -> Self {
        let p = self.p;
        Self::from_reduced(p, self.c.iter().map(|&a| mul_mod(a, k % p, p)).collect())
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        debug_assert_eq!(self.p, d.p);
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let dd = d.deg_or_zero();
        let inv = inv_mod(d.leading(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = mul_mod(r[i + dd], inv, p);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                r[i + j] = sub_mod(r[i + j], mul_mod(coef, dj, p), p);
            }
        }
        r.truncate(dd);
        (Self::from_reduced(p, q), Self::from_reduced(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mul_mod(a, i as u64 % p, p))
            .collect();
        Self::from_reduced(p, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| add_mod(mul_mod(acc, x % p, p), a, p))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// For `self = g(x^p)` returns `g`, the p-th root in characteristic p.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.c.iter().step_by(p).copied().collect();
        Self::from_reduced(self.p, c)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(s_i, i)` with
    /// `self = prod s_i^i`, each `s_i` squarefree, monic and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        let f = self.monic();
        if f.deg_or_zero() == 0 {
            return out;
        }
        let p = self.p;
        let mut c = f.gcd(&f.derivative());
        let mut w = f.exact_div(&c);
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.exact_div(&y);
            if z.deg_or_zero() > 0 {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.exact_div(&w);
        }
        if c.deg_or_zero() > 0 {
            let root = c.pth_root();
            for (g, e) in root.squarefree_decomposition() {
                out.push((g, e * p as u32));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree_factorization(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.deg_or_zero() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                f = f.exact_div(&g);
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg_or_zero() > 0 {
            let deg = f.deg_or_zero();
            out.push((f, deg));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of common degree `d`
    /// into its irreducible factors.
    fn equal_degree_split(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Self>) {
        let n = self.deg_or_zero();
        if n == d {
            out.push(self.clone());
            return;
        }
        let p = self.p;
        loop {
            let a = self.random_below(rng);
            if a.deg_or_zero() == 0 {
                continue;
            }
            let b = if p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
                let mut t = a.clone();
                let mut norm = a.clone();
                for _ in 1..d {
                    t = t.pow_mod(p, self);
                    norm = norm.mul(&t).rem(self);
                }
                norm.pow_mod((p - 1) / 2, self).sub(&Self::one(p))
            };
            let g = b.gcd(self);
            let gd = g.deg_or_zero();
            if gd > 0 && gd < n {
                let h = self.exact_div(&g);
                g.equal_degree_split(d, rng, out);
                h.equal_degree_split(d, rng, out);
                return;
            }
        }
    }

    fn random_below(&self, rng: &mut ChaCha8Rng) -> Self {
        let n = self.deg_or_zero();
        let c = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
        Self::from_reduced(self.p, c)
    }

    fn seed(&self) -> u64 {
        // FNV-1a over the modulus and coefficients
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for v in std::iter::once(self.p).chain(self.c.iter().copied()) {
            for byte in v.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
        h
    }

    /// Factor-degree partition (sorted descending) of a squarefree
    /// polynomial, read off the distinct-degree factorization. `None` if the
    /// polynomial is not squarefree or is constant.
    pub fn degree_pattern(&self) -> Option<Vec<u32>> {
        if self.deg_or_zero() == 0 || !self.gcd(&self.derivative()).is_one() {
            return None;
        }
        let mut pattern = Vec::new();
        for (g, d) in self.distinct_degree_factorization() {
            for _ in 0..g.deg_or_zero() / d {
                pattern.push(d as u32);
            }
        }
        pattern.sort_unstable_by(|a, b| b.cmp(a));
        Some(pattern)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.c
            .len()
            .cmp(&other.c.len())
            .then_with(|| self.c.iter().rev().cmp(other.c.iter().rev()))
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| match (i, a) {
                (0, _) => a.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{a}*x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{a}*x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Monic gcd of two polynomials over the same prime field.
pub fn mod_gcd(u: &ModPolynomial, v: &ModPolynomial) -> Result<ModPolynomial> {
    u.check_same(v)?;
    Ok(u.gcd(v))
}

/// Complete factorization into monic irreducibles with multiplicities.
///
/// The leading coefficient of `u` is not part of the output; the product of
/// the factors times `u.leading()` reproduces `u`. Factors are returned in a
/// canonical order (by degree, then coefficients). Randomized splitting is
/// seeded from the input, so the result is reproducible.
pub fn mod_factor(u: &ModPolynomial) -> Result<Vec<(ModPolynomial, u32)>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(u.seed());
    let mut out = Vec::new();
    for (s, e) in u.squarefree_decomposition() {
        for (g, d) in s.distinct_degree_factorization() {
            let mut pieces = Vec::new();
            g.equal_degree_split(d, &mut rng, &mut pieces);
            out.extend(pieces.into_iter().map(|h| (h, e)));
        }
    }
    out.sort_by(|(a, ea), (b, eb)| a.canonical_cmp(b).then(ea.cmp(eb)));
    // merge identical factors that came from different squarefree parts
    let mut merged: Vec<(ModPolynomial, u32)> = Vec::with_capacity(out.len());
    for (g, e) in out {
        match merged.last_mut() {
            Some((h, f)) if *h == g => *f += e,
            _ => merged.push((g, e)),
        }
    }
    Ok(merged)
}
