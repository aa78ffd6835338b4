//! Hamilton cycles in cubic planar graphs: exact counting, generators for
//! the standard families, and transfer matrices for nanotubes.

pub mod count;
pub mod dsu;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod io;
pub mod transfer;

pub use count::{count_hamilton_cycles, CountError, HamiltonCount};
pub use graph::{Graph, GraphError};
