//! Isometric, lattice and Fibonacci dimensions of partial cubes.
//!
//! The pipeline: parse a [`Graph`], compute its Θ-classes and canonical
//! hypercube embedding ([`partial_cube`]), derive the semicube graphs
//! ([`semicube`]), then solve for the Fibonacci dimension exactly
//! ([`exact`]) or approximately ([`approx`]).

pub mod approx;
pub mod bits;
pub mod cli;
pub mod constructions;
pub mod embedding_io;
pub mod error;
pub mod exact;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod partial_cube;
pub mod semicube;

pub use error::{Error, Result};
pub use exact::{fdim_exact, FibonacciEmbedding, FibonacciSolution};
pub use graph::Graph;
pub use partial_cube::{canonical_embedding, idim, is_partial_cube, HypercubeEmbedding};
