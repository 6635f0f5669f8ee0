//! Domination and bondage numbers of small graphs, rotation-system
//! embeddings, and closed-form upper bounds on the bondage number in terms
//! of maximum degree, Euler characteristic and girth.

pub mod bondage;
pub mod bounds;
pub mod domination;
pub mod embedding;
mod error;
pub mod graph;
pub mod graph6;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeList, Girth, Graph};
