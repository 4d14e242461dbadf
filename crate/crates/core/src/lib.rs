//! Stanley–Reisner rings of finite simplicial complexes over finite fields.
//!
//! The crate computes face vectors and their h, h' and h'' transforms,
//! reduced homology, artinian reductions `K[Δ]/ℓ` by a linear system of
//! parameters, their socles, and the level quotient obtained by killing the
//! socle in degrees `1..d-1`. On top of that it decides the Cohen–Macaulay,
//! doubly Cohen–Macaulay, Buchsbaum and Buchsbaum* properties and evaluates
//! the face-vector inequalities that hold for Buchsbaum* complexes.
//!
//! ```
//! use srtk::{builtin, FiniteField};
//! use srtk::artinian::{graded_reduction, random_lsop};
//!
//! let torus = builtin::builtin("torus7").unwrap();
//! let field = FiniteField::default();
//! let forms = random_lsop(&torus, field, 0).unwrap();
//! let reduction = graded_reduction(&torus, &forms).unwrap();
//! assert_eq!(reduction.dims(), &[1, 4, 10, 1]);
//! assert_eq!(reduction.socle_profile().dims, vec![0, 0, 6, 1]);
//! ```

pub mod artinian;
pub mod builtin;
pub mod cli;
pub mod complex;
pub mod enumeration;
mod error;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod report;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::BettiTable;
pub use linalg::{FiniteField, PrimeField, PrimeFieldMatrix};
