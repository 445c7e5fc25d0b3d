//! Timing and operation-count benchmark for decomposition and reconstruction.
//!
//! Wall-clock times are machine specific and only reported. The operation
//! counters are deterministic for a given seed and are checked against
//! `256·N² + μ·N² + 2·N²` (decomposition) and `2·N²` (reconstruction).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counters::OpCounters;
use crate::decomposition::{decompose_counted, reconstruct_counted, MappingParams};
use crate::error::{Error, Result};
use crate::image::GrayImage;

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub side: usize,
    pub decompose_mean: Duration,
    pub reconstruct_mean: Duration,
    pub decompose_ops: OpCounters,
    pub reconstruct_ops: OpCounters,
    pub decompose_bound: u64,
    pub reconstruct_bound: u64,
}

pub fn random_payload(width: usize, height: usize, rng: &mut impl Rng) -> GrayImage {
    GrayImage::from_fn(width, height, |_, _| rng.random())
}

/// Runs one row per side length `N` on a uniformly random `N x N` payload.
pub fn run(
    sizes: &[usize],
    trials: usize,
    params: MappingParams,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    let trials = trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&side| measure(side, trials, params, &mut rng))
        .collect()
}

fn measure(
    side: usize,
    trials: usize,
    params: MappingParams,
    rng: &mut ChaCha8Rng,
) -> Result<BenchRow> {
    if side == 0 {
        return Err(Error::InvalidDimensions {
            width: 0,
            height: 0,
            len: 0,
        });
    }
    let payload = random_payload(side, side, rng);
    let pixels = (side * side) as u64;

    let mut decompose_ops = OpCounters::new();
    let mut reconstruct_ops = OpCounters::new();
    let mut decompose_time = Duration::ZERO;
    let mut reconstruct_time = Duration::ZERO;
    for _ in 0..trials {
        decompose_ops.reset();
        reconstruct_ops.reset();

        let start = Instant::now();
        let set = decompose_counted(&payload, params, &mut decompose_ops);
        decompose_time += start.elapsed();

        let start = Instant::now();
        let recovered = reconstruct_counted(&set, &mut reconstruct_ops)?;
        reconstruct_time += start.elapsed();
        debug_assert_eq!(recovered, payload);
    }

    let row = BenchRow {
        side,
        decompose_mean: decompose_time / trials as u32,
        reconstruct_mean: reconstruct_time / trials as u32,
        decompose_ops,
        reconstruct_ops,
        decompose_bound: OpCounters::decomposition_bound(pixels, params.mu()),
        reconstruct_bound: OpCounters::reconstruction_bound(pixels),
    };
    for (count, bound) in [
        (row.decompose_ops.total(), row.decompose_bound),
        (row.reconstruct_ops.total(), row.reconstruct_bound),
    ] {
        if count > bound {
            return Err(Error::ComplexityBound { side, count, bound });
        }
    }
    Ok(row)
}

/// Ratio of decomposition operation totals between consecutive rows.
pub fn growth_ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| w[1].decompose_ops.total() as f64 / w[0].decompose_ops.total() as f64)
        .collect()
}
