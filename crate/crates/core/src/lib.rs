//! Computational toolkit for Schur superalgebras in odd characteristic.

pub mod algebra;
pub mod blocks;
pub mod error;
pub mod field;
pub mod partition;
pub mod quiver;
pub mod reptype;
pub mod schursuper;
pub mod supersmash;
pub mod symmod;

pub use algebra::{AlgModule, GradedAlgebra};
pub use error::{Error, Result};
pub use field::{FMatrix, FScalar};
pub use partition::{BiWeight, Partition, SignedYoungLabel};
pub use quiver::{QuiverPresentation, UndirectedGraph, Verdict};
pub use symmod::{HomSpace, ModuleRep};
