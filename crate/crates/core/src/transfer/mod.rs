//! Transfer matrices for Hamilton cycles of nanotubes, by crossing type.

mod asymptotics;
mod partition;
pub mod poly;
mod system;
mod tile;

use num_bigint::BigUint;
use thiserror::Error;

pub use asymptotics::{growth_constants, growth_constants_of, recurrence_divides_char_poly, GrowthConstants};
pub use partition::{noncrossing_pair_partitions, rotation_orbits, Orbit, TerminalPartition};
pub use system::{build_transfer_system, TransferBuilder, TransferSystem};
pub use tile::{
    closes_single_cycle, end_tiles, internal_tiles, start_partition, transfer_step, Endpoint, Tile, TileKind,
};

/// Largest supported width; internal tiles are found among `2^(2w)` subsets.
pub const MAX_WIDTH: usize = 13;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransferError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("width {0} exceeds the supported maximum of 13")]
    WidthTooLarge(usize),
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("partition set is not closed under rotation (image of {0} missing)")]
    NotRotationClosed(String),
    #[error("invalid terminal partition: {0}")]
    BadPartition(String),
    #[error("partition {0} is not in the system index")]
    Unindexed(String),
    #[error("counts for w = {w}, c = {c} vanish; no growth rate")]
    VanishingCounts { w: usize, c: usize },
    #[error("dominant eigenvalue is not real (largest modulus {modulus})")]
    NoRealDominantRoot { modulus: f64 },
}

/// Hamilton cycles of `N(w, k)` crossing every cut in exactly `2c` edges.
pub fn typed_count(w: usize, c: usize, k: u64) -> Result<BigUint, TransferError> {
    Ok(build_transfer_system(w, c, true)?.count(k))
}

/// All Hamilton cycles of `N(w, k)`: the sum of `typed_count` over `2 <= 2c <= w`.
pub fn total_nanotube_count(w: usize, k: u64) -> Result<BigUint, TransferError> {
    (1..=w / 2).map(|c| typed_count(w, c, k)).sum()
}
