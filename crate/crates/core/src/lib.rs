//! Exact treedepth, 2-treedepth, relative treedepth and pathwidth with
//! replayable certificates, together with block forests, induced-path
//! search, the extremal constructions and an induced-path extractor.

mod bits;
pub mod blocks;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod extraction;
pub mod graph;
pub mod harness;
pub mod io;
pub mod params;
pub mod paths;
pub mod score;

pub use error::{Error, Result};
pub use graph::{Graph, Path, Vertex, VertexSet};
