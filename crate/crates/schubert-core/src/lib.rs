//! Exact computation of equivariant motivic Chern classes, Chern-Schwartz-MacPherson
//! classes and Hirzebruch classes of Schubert cells in flag manifolds.

pub mod algebra;
pub mod cohclass;
pub mod conjectures;
pub mod error;
pub mod hecke;
pub mod hirzebruch;
pub mod io;
pub mod kclass;
pub mod lie;
pub mod mc;

pub use error::{Error, Result};
