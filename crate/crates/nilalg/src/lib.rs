//! Exact computer algebra for complex 3-dimensional nilalgebras.
//!
//! The crate provides, over an exact scalar tower Q ⊂ Q(i) ⊂ Q(i)(√d₁)(√d₂):
//!
//! - structure-constant algebras, basis changes, subspaces and series;
//! - nil-index computation over all non-associative bracketings and a
//!   trilinear identity checker;
//! - isomorphism invariants (derivation algebra dimension, orbit dimension,
//!   fingerprints);
//! - the built-in catalog of the seventeen 3-dimensional nilalgebra families
//!   with canonical parameters and identification certificates;
//! - a constructive classifier returning a catalog label together with an
//!   exact basis-change witness;
//! - degeneration witnesses (parametrized bases), verification, bounded
//!   search and composition;
//! - non-degeneration certificates: semicontinuity battery and the
//!   Borel-stable closed-set route backed by a Buchberger engine over Q;
//! - the full degeneration graph with closures, rigid algebras and
//!   irreducible-component dimensions.
//!
//! See the `examples/` directory for runnable tours of each capability, and
//! the `nilalg` binary for the file-based command line interface.

pub mod algebra;
pub mod catalog;
pub mod certificates;
pub mod classify;
pub mod degeneration;
pub mod expr;
pub mod files;
pub mod graph;
pub mod grobner;
pub mod invariants;
pub mod matrix;
pub mod nil;
pub mod scalar;
pub mod symbolic;

pub use scalar::{adjoin_sqrt, Scalar, Tower};
pub use symbolic::{Polynomial, RationalFunction, Var};
