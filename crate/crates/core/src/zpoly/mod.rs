//! Univariate polynomials over Z and over prime fields.

mod dedekind;
mod factor_z;
mod int;
mod modp;

pub use dedekind::dedekind_divides_index;
pub(crate) use dedekind::dedekind_unchecked;
pub use factor_z::{zz_factor, zz_irreducible};
pub use int::{discriminant, resultant, IntPolynomial};
pub use modp::{mod_factor, mod_gcd, ModPolynomial};
