use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::factor_z::zz_irreducible;
use super::int::IntPolynomial;
use super::modp::{mod_factor, ModPolynomial};
use crate::arith::is_prime_u64;
use crate::error::{Error, Result};

/// Dedekind's criterion: does the prime `p` divide the index
/// `[Z_K : Z[theta]]` for a root `theta` of the monic irreducible `u`?
///
/// Factor `u = prod g_i^e_i (mod p)`, let `g` be the product of the distinct
/// `g_i` and `h = u / g (mod p)`, lift both with coefficients in `[0, p)` and
/// set `T = (g* h* - u) / p`. Then `p` divides the index iff
/// `gcd(T mod p, g, h)` is nonconstant.
pub fn dedekind_divides_index(u: &IntPolynomial, p: &BigInt) -> Result<bool> {
    if !u.is_monic() || u.degree().unwrap_or(0) == 0 {
        return Err(Error::NotMonic);
    }
    let p = p.to_u64().ok_or_else(|| Error::PrimeTooLarge(p.clone()))?;
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.into()));
    }
    if !zz_irreducible(u)? {
        return Err(Error::Reducible(u.to_string()));
    }
    Ok(dedekind_unchecked(u, p))
}

/// Dedekind test without the irreducibility and primality checks.
pub(crate) fn dedekind_unchecked(u: &IntPolynomial, p: u64) -> bool {
    let ubar = u.reduce_unchecked(p);
    let factors = mod_factor(&ubar).expect("monic polynomial is nonzero");
    if factors.iter().all(|&(_, e)| e == 1) {
        return false;
    }
    let radical = factors
        .iter()
        .fold(ModPolynomial::one(p), |acc, (g, _)| acc.mul(g));
    let cofactor = ubar.exact_div(&radical);
    let g_star = IntPolynomial::lift(&radical);
    let h_star = IntPolynomial::lift(&cofactor);
    let t = g_star
        .mul(&h_star)
        .sub(u)
        .div_exact_scalar(&BigInt::from(p))
        .expect("g*h = u (mod p)");
    let tbar = t.reduce_unchecked(p);
    !tbar.gcd(&radical).gcd(&cofactor).is_one()
}
