//! Irreducibility and factorization of monic integer polynomials.
//!
//! Irreducibility is first attempted with degree-pattern certificates: the
//! factor degrees of `u mod p` at a prime not dividing the discriminant
//! constrain the degrees of any rational factor to subset sums of the
//! pattern. When several primes leave no admissible proper degree, `u` is
//! irreducible. Otherwise a Hensel lift from the best prime followed by
//! subset recombination decides the question exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::int::{discriminant, IntPolynomial};
use super::modp::{mod_factor, ModPolynomial};
use crate::arith::primes_up_to;
use crate::error::{Error, Result};

/// Degree patterns from this many good primes before falling back to a lift.
const CERTIFICATE_PRIMES: usize = 8;
/// Consecutive bad primes tolerated before checking for a repeated factor.
const BAD_PRIME_PATIENCE: usize = 20;

/// True iff the monic polynomial `u` (degree >= 1) is irreducible over Q.
pub fn zz_irreducible(u: &IntPolynomial) -> Result<bool> {
    check_monic(u)?;
    Ok(find_factor(u).is_none())
}

/// Complete factorization of a monic polynomial over Z into monic
/// irreducibles (with repetition), sorted by degree.
pub fn zz_factor(u: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    check_monic(u)?;
    let mut out = Vec::new();
    let mut stack = vec![u.clone()];
    while let Some(v) = stack.pop() {
        match find_factor(&v) {
            None => out.push(v),
            Some(g) => {
                let (h, r) = v.div_rem_monic(&g);
                debug_assert!(r.is_zero());
                stack.push(g);
                stack.push(h);
            }
        }
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(out)
}

fn check_monic(u: &IntPolynomial) -> Result<()> {
    if u.is_monic() && u.degree().unwrap_or(0) >= 1 {
        Ok(())
    } else {
        Err(Error::NotMonic)
    }
}

/// Bitmask of the subset sums of a degree pattern.
fn subset_sums(pattern: &[u32], n: usize) -> Vec<bool> {
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for &d in pattern {
        for s in (d as usize..=n).rev() {
            if sums[s - d as usize] {
                sums[s] = true;
            }
        }
    }
    sums
}

/// A proper monic factor of `u`, or `None` if `u` is irreducible.
pub(crate) fn find_factor(u: &IntPolynomial) -> Option<IntPolynomial> {
    let n = u.degree().expect("nonzero");
    if n <= 1 {
        return None;
    }
    if u.coeff(0).is_zero() {
        return Some(IntPolynomial::from_i64s(&[0, 1]));
    }
    let mut admissible = vec![true; n + 1];
    let mut best: Option<(usize, ModPolynomial)> = None;
    let mut good = 0;
    let mut bad_run = 0;
    let mut checked_disc = false;
    let mut primes = PrimeStream::new();
    while good < CERTIFICATE_PRIMES {
        let p = primes.next_prime();
        let ubar = u.reduce_unchecked(p);
        let Some(pattern) = ubar.degree_pattern() else {
            bad_run += 1;
            if bad_run >= BAD_PRIME_PATIENCE && !checked_disc {
                checked_disc = true;
                if discriminant(u).is_zero() {
                    // repeated factor: gcd(u, u') over Q is a proper factor
                    return Some(rational_gcd_factor(u));
                }
            }
            continue;
        };
        bad_run = 0;
        good += 1;
        let sums = subset_sums(&pattern, n);
        for (a, s) in admissible.iter_mut().zip(&sums) {
            *a &= *s;
        }
        if !admissible[1..n].iter().any(|&a| a) {
            return None;
        }
        if best.as_ref().is_none_or(|(r, _)| pattern.len() < *r) {
            best = Some((pattern.len(), ubar));
        }
    }
    let (_, ubar) = best.expect("at least one good prime");
    zassenhaus_factor(u, &ubar)
}

/// Monic gcd of `u` and `u'` over Q, scaled back to a monic integer factor.
/// Only called when the discriminant vanishes.
fn rational_gcd_factor(u: &IntPolynomial) -> IntPolynomial {
    // Primitive pseudo-remainder sequence.
    let mut a = u.clone();
    let mut b = primitive(&u.derivative());
    while !b.is_zero() && b.degree() != Some(0) {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    let g = if b.is_zero() { a } else { b };
    // g is primitive and divides a monic polynomial, so its leading
    // coefficient is a unit by Gauss's lemma.
    if g.leading() < BigInt::zero() {
        g.scale(&BigInt::from(-1))
    } else {
        g
    }
}

fn primitive(f: &IntPolynomial) -> IntPolynomial {
    if f.is_zero() {
        return f.clone();
    }
    let content = f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    f.div_exact_scalar(&content).expect("content divides")
}

fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero");
    let lb = b.leading();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading();
        let shifted = IntPolynomial::monomial(lr, dr - db).mul(b);
        r = r.scale(&lb).sub(&shifted);
    }
    r
}

struct PrimeStream {
    cache: Vec<u64>,
    idx: usize,
    limit: u64,
}

impl PrimeStream {
    fn new() -> Self {
        Self {
            cache: primes_up_to(1000),
            idx: 0,
            limit: 1000,
        }
    }

    fn next_prime(&mut self) -> u64 {
        if self.idx == self.cache.len() {
            self.limit *= 4;
            self.cache = primes_up_to(self.limit);
        }
        let p = self.cache[self.idx];
        self.idx += 1;
        p
    }
}

/// Coefficients reduced symmetrically into `(-M/2, M/2]`.
fn symmetric(c: &[BigInt], modulus: &BigInt) -> IntPolynomial {
    let half = modulus / 2;
    IntPolynomial::new(
        c.iter()
            .map(|a| {
                let r = a.mod_floor(modulus);
                if r > half {
                    r - modulus
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn reduce_coeffs(f: &IntPolynomial, modulus: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|a| a.mod_floor(modulus)).collect())
}

/// Lifts `target = g0 * h0 (mod p)` to a factorization modulo `p^k`, with
/// `g0`, `h0` monic and coprime mod p and `target` monic.
fn lift_pair(
    target: &IntPolynomial,
    g0: &ModPolynomial,
    h0: &ModPolynomial,
    k: u32,
) -> (IntPolynomial, IntPolynomial) {
    let p = g0.modulus();
    let (one, s, t) = g0.ext_gcd(h0);
    debug_assert!(one.is_one(), "factors must be coprime");
    let pb = BigInt::from(p);
    let full = pb.pow(k);
    let mut g = IntPolynomial::lift(g0);
    let mut h = IntPolynomial::lift(h0);
    let mut pi = pb.clone();
    for _ in 1..k {
        let err = reduce_coeffs(&target.sub(&g.mul(&h)), &full);
        let e = err
            .div_exact_scalar(&pi)
            .expect("error term divisible by current modulus")
            .reduce_unchecked(p);
        let (q, dg) = t.mul(&e).div_rem(g0);
        let dh = s.mul(&e).add(&h0.mul(&q));
        g = reduce_coeffs(&g.add(&IntPolynomial::lift(&dg).scale(&pi)), &full);
        h = reduce_coeffs(&h.add(&IntPolynomial::lift(&dh).scale(&pi)), &full);
        pi *= &pb;
    }
    (g, h)
}

/// Lifts the factorization of `target mod p` into the given monic, pairwise
/// coprime factors up to modulus `p^k`.
fn hensel_lift(target: &IntPolynomial, factors: &[ModPolynomial], k: u32) -> Vec<IntPolynomial> {
    if factors.len() == 1 {
        let p = factors[0].modulus();
        return vec![reduce_coeffs(target, &BigInt::from(p).pow(k))];
    }
    let p = factors[0].modulus();
    let rest = factors[1..]
        .iter()
        .fold(ModPolynomial::one(p), |acc, f| acc.mul(f));
    let (g, h) = lift_pair(target, &factors[0], &rest, k);
    let mut out = vec![g];
    out.extend(hensel_lift(&h, &factors[1..], k));
    out
}

/// Zassenhaus search for a proper factor using the squarefree reduction
/// `ubar = u mod p`.
fn zassenhaus_factor(u: &IntPolynomial, ubar: &ModPolynomial) -> Option<IntPolynomial> {
    let p = ubar.modulus();
    let factors: Vec<ModPolynomial> = mod_factor(ubar)
        .expect("nonzero")
        .into_iter()
        .map(|(g, e)| {
            debug_assert_eq!(e, 1);
            g
        })
        .collect();
    let r = factors.len();
    if r == 1 {
        return None;
    }
    let n = u.degree().expect("nonzero") as u32;
    // Mignotte: every coefficient of a monic factor is at most 2^n |u|_2.
    let norm = u.norm_squared().sqrt() + BigInt::one();
    let bound = (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(u, &factors, k);
    let constant = u.coeff(0);
    for size in 1..=r / 2 {
        for subset in Combinations::new(r, size) {
            let prod = subset.iter().fold(IntPolynomial::one(), |acc, &i| {
                reduce_coeffs(&acc.mul(&lifted[i]), &modulus)
            });
            let cand = symmetric(prod.coeffs(), &modulus);
            let c0 = cand.coeff(0);
            if c0.is_zero() || !constant.is_multiple_of(&c0) {
                continue;
            }
            let (_, rem) = u.div_rem_monic(&cand);
            if rem.is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: i64, b: i64) -> IntPolynomial {
        IntPolynomial::trinomial(6, &BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn cyclotomic_36_is_irreducible() {
        assert!(zz_irreducible(&tri(-1, 1)).unwrap());
    }

    #[test]
    fn trinomial_with_quartic_factor_is_reducible() {
        let f = tri(4, -1);
        assert!(!zz_irreducible(&f).unwrap());
        let factors = zz_factor(&f).unwrap();
        assert_eq!(factors[0], IntPolynomial::from_i64s(&[-1, 0, 1, 0, 1]));
        assert_eq!(
            factors.iter().fold(IntPolynomial::one(), |a, g| a.mul(g)),
            f
        );
    }

    #[test]
    fn small_cases() {
        assert!(zz_irreducible(&IntPolynomial::from_i64s(&[1, 0, 1])).unwrap());
        assert!(zz_irreducible(&IntPolynomial::from_i64s(&[5, 1])).unwrap());
        assert!(!zz_irreducible(&IntPolynomial::from_i64s(&[-1, 0, 1])).unwrap());
        assert!(!zz_irreducible(&IntPolynomial::from_i64s(&[0, 0, 1])).unwrap());
        assert_eq!(
            zz_irreducible(&IntPolynomial::from_i64s(&[1, 2])),
            Err(Error::NotMonic)
        );
        assert_eq!(
            zz_irreducible(&IntPolynomial::from_i64s(&[1])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn repeated_factors_are_found() {
        // (x^2 + x + 1)^2 (x - 3)
        let g = IntPolynomial::from_i64s(&[1, 1, 1]);
        let u = g.mul(&g).mul(&IntPolynomial::from_i64s(&[-3, 1]));
        let factors = zz_factor(&u).unwrap();
        assert_eq!(factors.len(), 3);
        assert_eq!(
            factors.iter().fold(IntPolynomial::one(), |a, f| a.mul(f)),
            u
        );
    }

    #[test]
    fn products_of_irreducible_sextics_need_recombination() {
        // Phi_9 * Phi_7 has no degree-pattern certificate against degree-6 factors
        let phi9 = IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 1]);
        let phi7 = IntPolynomial::from_i64s(&[1, 1, 1, 1, 1, 1, 1]);
        let u = phi9.mul(&phi7);
        let factors = zz_factor(&u).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&phi9) && factors.contains(&phi7));
    }

    #[test]
    fn swinnerton_dyer_like_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 is reducible mod every prime but irreducible over Q
        let u = IntPolynomial::from_i64s(&[1, 0, -10, 0, 1]);
        assert!(zz_irreducible(&u).unwrap());
    }

    #[test]
    fn combinations_enumerate_binomially() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(12, 6).count(), 924);
        assert_eq!(Combinations::new(3, 0).count(), 1);
    }

    #[test]
    fn irreducible_mod_good_prime_implies_irreducible() {
        // if u is irreducible mod some prime not dividing disc(u), it must be
        // irreducible over Q; check on random monic sextics
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let mut c: Vec<i64> = (0..6).map(|_| rng.gen_range(-9..=9)).collect();
            c.push(1);
            let u = IntPolynomial::from_i64s(&c);
            let disc = discriminant(&u);
            let certified = [2u64, 3, 5, 7, 11, 13].iter().any(|&p| {
                !(disc.clone() % p).is_zero()
                    && u.reduce(p).unwrap().degree_pattern() == Some(vec![6])
            });
            if certified {
                assert!(zz_irreducible(&u).unwrap(), "{u}");
            }
            // factor products always recombine
            let f = zz_factor(&u).unwrap();
            assert_eq!(f.iter().fold(IntPolynomial::one(), |a, g| a.mul(g)), u);
            assert_eq!(f.len() == 1, zz_irreducible(&u).unwrap());
        }
    }
}
