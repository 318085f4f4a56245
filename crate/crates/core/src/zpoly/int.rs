use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::ModPolynomial;
use crate::arith::is_prime_u64;
use crate::error::{Error, Result};

/// A polynomial with integer coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    c: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(v: BigInt) -> Self {
        Self::new(vec![v])
    }

    /// `coeff * x^deg`.
    pub fn monomial(coeff: BigInt, deg: usize) -> Self {
        let mut c = vec![BigInt::zero(); deg + 1];
        c[deg] = coeff;
        Self::new(c)
    }

    /// `x^(2m) + a x^m + b`.
    pub fn trinomial(m: usize, a: &BigInt, b: &BigInt) -> Self {
        let mut c = vec![BigInt::zero(); 2 * m + 1];
        c[0] += b;
        c[m] += a;
        c[2 * m] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn leading(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.c.iter().map(|a| a * k).collect())
    }

    /// Exact division of every coefficient by `k`; `None` if some coefficient
    /// is not divisible.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.c.len());
        for a in &self.c {
            let (q, r) = a.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Division by a monic polynomial: `(quotient, remainder)`.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); self.c.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = r[i + dd].clone();
            if coef.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] -= &coef * dj;
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    /// `self(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        let mut c = vec![BigInt::zero(); self.c.len().saturating_sub(1) * k + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Self::new(c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.c
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, a| acc * x + a)
    }

    /// Reduction modulo a prime `p`.
    pub fn reduce(&self, p: u64) -> Result<ModPolynomial> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.into()));
        }
        Ok(self.reduce_unchecked(p))
    }

    pub(crate) fn reduce_unchecked(&self, p: u64) -> ModPolynomial {
        let pb = BigInt::from(p);
        let c = self
            .c
            .iter()
            .map(|a| a.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect();
        ModPolynomial::from_reduced(p, c)
    }

    /// Lift with representatives in `[0, p)`.
    pub fn lift(u: &ModPolynomial) -> Self {
        Self::new(u.coeffs().iter().map(|&a| BigInt::from(a)).collect())
    }

    /// Sum of squared coefficients.
    pub fn norm_squared(&self) -> BigInt {
        self.c.iter().map(|a| a * a).sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.sign() == Sign::Minus;
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if df == 0 {
        return f.leading().pow(dg as u32);
    }
    if dg == 0 {
        return g.leading().pow(df as u32);
    }
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for i in 0..dg {
        let mut row = vec![BigInt::zero(); n];
        for (j, a) in f.coeffs().iter().rev().enumerate() {
            row[i + j] = a.clone();
        }
        rows.push(row);
    }
    for i in 0..df {
        let mut row = vec![BigInt::zero(); n];
        for (j, a) in g.coeffs().iter().rev().enumerate() {
            row[i + j] = a.clone();
        }
        rows.push(row);
    }
    bareiss_determinant(rows)
}

/// Polynomial discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> BigInt {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return BigInt::zero();
    }
    let r = resultant(f, &f.derivative()) / f.leading();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}
