//! Seeded, platform-independent random labelings.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{EdgeLabeling, Label};
use crate::cubes::Subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;

/// Labels each edge near independently with probability `p_near`.
pub fn label_random(g: &Graph, p_near: Rational, seed: u64) -> Result<EdgeLabeling> {
    let (num, den) = (*p_near.numer(), *p_near.denom());
    if num < 0 || num > den {
        return Err(Error::InvalidParameter("p_near must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(EdgeLabeling::from_fn(g, |_, _| {
        if rng.gen_range(0..den) < num {
            Label::Near
        } else {
            Label::Far
        }
    }))
}

/// `count` labelings with fair coin flips per edge, drawn from one stream.
pub fn sample_labelings(g: &Graph, seed: u64, count: usize) -> Vec<EdgeLabeling> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            EdgeLabeling::from_fn(g, |_, _| {
                if rng.gen::<bool>() {
                    Label::Near
                } else {
                    Label::Far
                }
            })
        })
        .collect()
}

/// Keeps each vertex, then each edge between kept vertices, with
/// probability `keep`.
pub fn random_subgraph(host: &Graph, keep: Rational, seed: u64) -> Result<Subgraph> {
    let (num, den) = (*keep.numer(), *keep.denom());
    if num < 0 || num > den {
        return Err(Error::InvalidParameter("keep must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<bool> = (0..host.n()).map(|_| rng.gen_range(0..den) < num).collect();
    let edges: Vec<(usize, usize)> = host
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| vertices[u] && vertices[v])
        .filter(|_| rng.gen_range(0..den) < num)
        .collect();
    Subgraph::new(host, (0..host.n()).filter(|&v| vertices[v]), edges)
}
