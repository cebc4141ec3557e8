//! Exhaustive enumeration of small graphs, one per isomorphism class.

use alloc::vec::Vec;

use crate::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("pivot exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// All graphs on exactly `n <= 6` vertices up to isomorphism, each given by
/// the representative with the smallest edge bitmask.
pub fn graphs_up_to_isomorphism(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= 6, "enumeration is only meant for desk-scale n <= 6");
    let pairs = pairs(n);
    let mut index = [[0usize; 6]; 6];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = images.iter().all(|image| {
            let mut permuted = 0u32;
            for (bit, &target) in image.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    permuted |= 1 << target;
                }
            }
            permuted >= mask
        });
        if !canonical {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("valid pairs");
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Isomorphism classes on `1..=n_max` vertices.
pub fn graphs_up_to(n_max: usize, connected_only: bool) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| graphs_up_to_isomorphism(n, connected_only))
        .collect()
}
