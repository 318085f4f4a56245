//! Decision procedures for the trinomials `x^12 + a x^6 + b` and the
//! divisor-degree trinomials `x^{2j} + a x^j + b` (`j = 1, 2, 3`) that sit
//! below them.
//!
//! The crate decides irreducibility over the rationals, identifies Galois
//! groups (as transitive-group labels `nTk`), and decides monogenicity one
//! prime at a time using the closed-form trinomial index conditions. An
//! independent Dedekind-criterion oracle is provided so the two routes can be
//! compared exhaustively over coefficient boxes (see [`harness`]).

pub mod arith;
pub mod characterize;
pub mod error;
pub mod galois;
pub mod harness;
pub mod jks;
pub mod trinomial;
pub mod zpoly;

pub use error::{Error, Result};
pub use galois::GaloisLabel;
pub use trinomial::QuadraticLikeTrinomial;
