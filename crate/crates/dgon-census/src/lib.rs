//! Exhaustive enumeration, mutation graphs and verification sweeps over
//! type D_n arc diagrams.
//!
//! Diagrams are encoded as bitmasks over the canonical alphabet order,
//! with precomputed crossing and hull-requirement masks; this keeps the
//! full 2^25 sweep at rank 5 within seconds.

pub mod enumerate;
pub mod graph;
pub mod index;
pub mod io;
pub mod sample;
pub mod verify;

use thiserror::Error;

pub use graph::{build_mutation_graph, Edge, MutationGraph};
pub use index::Alphabet;

#[derive(Error, Debug)]
pub enum CensusError {
    #[error("rank {0} exceeds the 64-bit mask budget, need n <= 8")]
    MaskWidth(u32),
    #[error("exhaustive enumeration over 2^(n*n) masks is limited to n <= {limit}, got {n}")]
    ResourceGuard { n: u32, limit: u32 },
    #[error("diagram rank {got} does not match index rank {expected}")]
    RankMismatch { expected: u32, got: u32 },
    #[error("seed diagram {0:#x} fails the hull axioms")]
    SeedNotPtolemy(u64),
    #[error(transparent)]
    Element(#[from] dgon::element::ElementError),
    #[error(transparent)]
    Mutation(#[from] dgon::mutation::MutationError),
    #[error(transparent)]
    Cells(#[from] dgon::cells::CellError),
}

/// Worker count for parallel sweeps: `DGON_WORKERS` if set, otherwise
/// the available parallelism.
pub fn worker_count() -> usize {
    std::env::var("DGON_WORKERS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
        })
}

/// A rayon pool honoring [`worker_count`]; sweeps run inside `install`.
pub fn worker_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .expect("thread pool construction")
}
