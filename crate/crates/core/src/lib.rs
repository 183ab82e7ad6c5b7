//! Finite-dimensional coalgebras, comodules and the Nakayama functors, with
//! exact arithmetic over `Q` and prime fields.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod field;
pub mod algebra;
pub mod coalg;
pub mod linalg;
pub mod comod;
pub mod nakayama;
pub mod classify;
pub mod hopf;
pub mod coquasi;
pub mod corpus;

pub use error::{Error, Result};
pub use field::{FieldKind, FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
