//! Multi-threaded total-colorability checks.

use anyhow::Result;
use rayon::prelude::*;
use thresholdkit_core::random::sample_labelings;
use thresholdkit_core::solver::{labeling_count, solve_exists, SearchCaps, TotalMode, TotalReport};
use thresholdkit_core::{EdgeLabeling, Graph};

/// Same report as the sequential check, failures in enumeration order.
pub fn check_total(
    g: &Graph,
    caps: SearchCaps,
    mode: TotalMode,
    threads: usize,
) -> Result<TotalReport> {
    let count = labeling_count(g, mode)?;
    let samples = match mode {
        TotalMode::Sampled { seed, count } => sample_labelings(g, seed, count),
        TotalMode::Exhaustive => Vec::new(),
    };
    let labeling = |i: usize| match mode {
        TotalMode::Exhaustive => EdgeLabeling::from_mask(g, i as u64),
        TotalMode::Sampled { .. } => samples[i].clone(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()?;
    let outcomes: Vec<Option<EdgeLabeling>> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let l = labeling(i);
                Ok((!solve_exists(g, &l, caps)?.is_found()).then_some(l))
            })
            .collect::<thresholdkit_core::Result<_>>()
    })?;
    Ok(TotalReport {
        labelings_checked: count,
        failures: outcomes.into_iter().flatten().map(|l| (l, caps)).collect(),
        mode,
    })
}
