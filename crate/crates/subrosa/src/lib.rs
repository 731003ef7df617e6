//! Sub Rosa: quasiperiodic rhombic substitution tilings with 2n-fold
//! rotational symmetry, for any n >= 2.
//!
//! The library builds the edge substitution sequences, the rose patches and
//! super-rhombus boundary words, verifies tileability of boundaries through a
//! rewrite system, tiles interiors constructively, and iterates the
//! substitution from the central rose.

pub mod boundary;
pub mod edges;
pub mod geometry;
pub mod io;
pub mod patch;
pub mod rewrite;
pub mod rose;
pub mod substitution;
pub mod tiler;
pub mod validate;

pub use geometry::{CycloVec, Dir, Isometry, PlacedRhombus, Symmetry};
pub use patch::Patch;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("boundary word is not balanced")]
    Unbalanced,
    #[error("reduction stuck: {0}")]
    Stuck(String),
    #[error("boundary has no nontrivial symmetry")]
    AsymmetricBoundary,
    #[error("symmetry orbit conflict: {0}")]
    OrbitConflict(String),
    #[error("tile cap exceeded: {needed} tiles projected, cap {cap}")]
    ResourceCap { needed: usize, cap: usize },
    #[error("validation failed: {0}")]
    Validation(String),
}
