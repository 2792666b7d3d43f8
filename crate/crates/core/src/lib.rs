//! Homotopy types of simplicial complexes defined by graphs.
//!
//! Complexes are stored by their minimal non-faces. The crate builds devoid
//! complexes (faces = vertex sets whose induced subgraph contains no copy of
//! any forbidden pattern), independence complexes, and dominance complexes of
//! multigraphs; runs a matching-tree construction that produces discrete
//! Morse matchings and critical cells; applies homotopy-preserving reductions
//! (folds, splits, complementation, non-face splitting); and cross-validates
//! every homotopy claim with an exact integer homology oracle (Smith normal
//! form plus an independent fraction-free rational-rank path).

pub mod complex;
pub mod devoid;
pub mod error;
pub mod face;
pub mod graph;
pub mod homology;
pub mod morse;
pub mod predict;
pub mod verify;

pub use complex::ComplexRepr;
pub use error::DevoidError;
pub use face::{Antichain, Face};
pub use graph::{Multigraph, PatternGraph};
pub use homology::BettiProfile;
pub use morse::{HomotopyDescriptor, MorseReport, PivotStrategy};

pub type Result<T> = std::result::Result<T, DevoidError>;
