//! Invariants of checkerboard-colorable virtual links given as signed Gauss
//! codes: supporting genus, checkerboard colorings and the signature pair,
//! rational Khovanov homology, Lee homology with the Rasmussen invariant, and
//! the alternatization of a diagram.

pub mod coloring;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod khovanov;
pub mod lee;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod transforms;

pub use diagram::{parse_gauss_code, Diagram};
pub use error::{Error, Result};
