//! Batch verification against classical arithmetic.

use crate::error::Result;
use crate::layout::MAX_OPERAND_BITS;
use crate::metrics::{compute_metrics, CircuitMetrics};
use crate::multiplier::{
    build_baseline_multiplier_with, build_multiplier_with, run_multiplier, SimMode,
};
use crate::qft::QftStyle;
use crate::sim::DEFAULT_DENSE_LIMIT;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// The classical product the circuit must reproduce.
pub fn oracle_multiply(x: u64, y: u64) -> u64 {
    x * y
}

/// The register contents the Toffoli stage must produce: partial product
/// `i` is `x` shifted by `i` when bit `i` of `y` is set, else zero.
pub fn oracle_partials(n: usize, x: u64, y: u64) -> Vec<u64> {
    (0..n)
        .map(|i| if (y >> i) & 1 == 1 { x << i } else { 0 })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// Every operand pair in `[0, 2^n)²`.
    Exhaustive,
    /// `count` pairs drawn uniformly from a seeded generator.
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub mode: SimMode,
    pub sampling: Sampling,
    pub dense_limit: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            mode: SimMode::Hybrid,
            sampling: Sampling::Exhaustive,
            dense_limit: DEFAULT_DENSE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FailureCase {
    pub x: u64,
    pub y: u64,
    pub expected: u64,
    pub got: u64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub mode: SimMode,
    pub cases_run: usize,
    pub failures: Vec<FailureCase>,
    pub metrics_proposed: CircuitMetrics,
    pub metrics_baseline: CircuitMetrics,
    /// Transform pairs the parallel form avoids relative to the
    /// sequential baseline; equals n-1 by construction.
    pub transform_pairs_saved: usize,
    pub elapsed_seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// How the baseline is counted. Its first pass folds in nothing
    /// (register 0 already sits in the accumulator), so a reading that
    /// elides the empty pass would report one pair fewer on each side of
    /// the comparison; the saving is unaffected either way.
    pub baseline_accounting: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A reported value is wrong when the product mismatches, and suspect
/// when its probability has decayed; both count as failures.
const PROBABILITY_FLOOR: f64 = 1.0 - 1e-6;

/// Simulates the multiplier over the sampled operand pairs and compares
/// every readout to the classical product.
pub fn run_suite(n: usize, options: &SuiteOptions) -> Result<VerificationReport> {
    if matches!(options.sampling, Sampling::Exhaustive) && n > 12 {
        return Err(crate::error::Error::domain(format!(
            "exhaustive verification at n={n} means 4^{n} simulations; use random sampling"
        )));
    }
    let started = Instant::now();
    let mult = build_multiplier_with(n, QftStyle::default())?;
    let baseline = build_baseline_multiplier_with(n, QftStyle::default())?;

    let (cases, seed) = sample_cases(n, options.sampling);
    let mut failures: Vec<FailureCase> = cases
        .par_iter()
        .map(|&(x, y)| {
            let outcome = run_multiplier(&mult, x, y, options.mode, options.dense_limit)?;
            let expected = oracle_multiply(x, y);
            if outcome.product != expected || outcome.probability < PROBABILITY_FLOOR {
                Ok(Some(FailureCase {
                    x,
                    y,
                    expected,
                    got: outcome.product,
                    probability: outcome.probability,
                }))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    failures.sort_by_key(|f| (f.x, f.y));

    let metrics_proposed = compute_metrics(mult.circuit());
    let metrics_baseline = compute_metrics(baseline.circuit());
    Ok(VerificationReport {
        n,
        mode: options.mode,
        cases_run: cases.len(),
        failures,
        transform_pairs_saved: metrics_baseline.qft_blocks - metrics_proposed.qft_blocks,
        metrics_proposed,
        metrics_baseline,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        seed,
        baseline_accounting: "baseline counts its initial empty transform pass; \
                              eliding that pass lowers both counts by one and \
                              leaves the saving unchanged"
            .to_string(),
    })
}

fn sample_cases(n: usize, sampling: Sampling) -> (Vec<(u64, u64)>, Option<u64>) {
    match sampling {
        Sampling::Exhaustive => {
            debug_assert!(n <= 16, "exhaustive sweep of 4^{n} pairs");
            let top = 1u64 << n;
            let mut cases = Vec::with_capacity((top * top) as usize);
            for x in 0..top {
                for y in 0..top {
                    cases.push((x, y));
                }
            }
            (cases, None)
        }
        Sampling::Random { count, seed } => {
            debug_assert!(n <= MAX_OPERAND_BITS);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let top = 1u64 << n;
            let cases = (0..count)
                .map(|_| (rng.gen_range(0..top), rng.gen_range(0..top)))
                .collect();
            (cases, Some(seed))
        }
    }
}
