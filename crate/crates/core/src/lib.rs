//! Exact arithmetic for arithmetic linking numbers in cyclotomic fields and
//! for the finite Gaussian-sum model of abelian arithmetic Chern-Simons theory.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclotomic`]: exact arithmetic in `Q(zeta_m)`.
//! * [`finitefield`]: polynomials over `F_p`, factorization, residue fields,
//!   Euler-criterion residues and discrete logarithms in `mu_n`.
//! * [`ideals`]: prime splitting, ideal lattices in Hermite normal form,
//!   valuations and principal-generator search.
//! * [`symbols`]: power residue symbols and the tame Hilbert symbol.
//! * [`linking`]: the mod-n height pairing and its law checks.
//! * [`cspartition`]: brute-force partition sums against their closed form.

pub mod arith;
pub mod cspartition;
pub mod cyclotomic;
mod error;
pub mod finitefield;
pub mod ideals;
pub mod linking;
pub mod poly;
pub mod symbols;

pub use error::{Error, Result};
