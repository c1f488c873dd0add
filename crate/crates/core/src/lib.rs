//! Exact computational algebra for superspace coinvariants, southwest
//! hyperplane arrangements and Solomon-Terao algebras.

pub mod arrangement;
pub mod derivation;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod solomon_terao;
pub mod superspace;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, Rational};
