//! Exact invariant theory over GF(2) for `GL3(F2)` acting on the coefficient space
//! of ordinary plane quartics.
//!
//! The crate is layered bottom-up: [`gf2`] (matrices and groups), [`poly`]
//! (polynomials and actions), [`groebner`], [`hilbert`] (exact series) and
//! [`invariants`] (the invariant-ring pipeline).

pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
