//! Reductions from vertex coloring to threshold coloring and from threshold
//! coloring to the proper-interval graph sandwich problem, with brute-force
//! oracles for both sides.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{EdgeLabeling, Label};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{recognize, UnitIntervalRep};

/// Largest number of optional edges [`sandwich_bruteforce`] will enumerate.
pub const SANDWICH_OPTIONAL_CAP: usize = 20;

/// `g` is `k`-colorable exactly when it has an `(k, 0)`-coloring under the
/// all-far labeling returned here.
pub fn vc_to_threshold(g: &Graph, k: i64) -> Result<(Graph, EdgeLabeling, i64, i64)> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    Ok((g.clone(), EdgeLabeling::uniform(g, Label::Far), k, 0))
}

/// Naive proper `k`-coloring search, used as an independent oracle.
pub fn k_colorable_bruteforce(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
                colors.push(c);
                if go(g, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(g, k, &mut Vec::with_capacity(g.n()))
}

/// Find `E` with `mandatory ⊆ E ⊆ universal` such that `(V, E)` is a proper
/// interval graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichInstance {
    n: usize,
    mandatory: Vec<(usize, usize)>,
    universal: Vec<(usize, usize)>,
}

fn canonical(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut set = BTreeSet::new();
    for &(u, v) in edges {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u.max(v) >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        set.insert((u.min(v), u.max(v)));
    }
    Ok(set.into_iter().collect())
}

impl SandwichInstance {
    pub fn new(
        n: usize,
        mandatory: &[(usize, usize)],
        universal: &[(usize, usize)],
    ) -> Result<Self> {
        let mandatory = canonical(n, mandatory)?;
        let universal = canonical(n, universal)?;
        if let Some(&(u, v)) = mandatory
            .iter()
            .find(|e| universal.binary_search(e).is_err())
        {
            return Err(Error::NotASubgraph(u, v));
        }
        Ok(SandwichInstance {
            n,
            mandatory,
            universal,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mandatory(&self) -> &[(usize, usize)] {
        &self.mandatory
    }

    pub fn universal(&self) -> &[(usize, usize)] {
        &self.universal
    }

    /// Universal edges that are not mandatory.
    pub fn optional(&self) -> Vec<(usize, usize)> {
        self.universal
            .iter()
            .copied()
            .filter(|e| self.mandatory.binary_search(e).is_err())
            .collect()
    }
}

/// Mandatory edges are the near edges; universal edges add every non-edge
/// of `g`.
pub fn threshold_to_sandwich(g: &Graph, l: &EdgeLabeling) -> Result<SandwichInstance> {
    l.check(g)?;
    let near: Vec<(usize, usize)> = l.edges_with(g, Label::Near).collect();
    let complement = g.complement();
    let universal: Vec<(usize, usize)> = near.iter().chain(complement.edges()).copied().collect();
    SandwichInstance::new(g.n(), &near, &universal)
}

/// Tries every set of optional edges in Gray-code order and returns the
/// first sandwiched proper interval graph with its representation.
pub fn sandwich_bruteforce(inst: &SandwichInstance) -> Result<Option<(Graph, UnitIntervalRep)>> {
    let optional = inst.optional();
    if optional.len() > SANDWICH_OPTIONAL_CAP {
        return Err(Error::CapExceeded {
            found: optional.len(),
            cap: SANDWICH_OPTIONAL_CAP,
        });
    }
    let mut chosen = vec![false; optional.len()];
    for i in 0u64..1 << optional.len() {
        if i > 0 {
            chosen[i.trailing_zeros() as usize] ^= true;
        }
        let extra = optional
            .iter()
            .zip(&chosen)
            .filter(|(_, &on)| on)
            .map(|(&e, _)| e);
        let h = Graph::new(inst.n, inst.mandatory.iter().copied().chain(extra))?;
        if let Some(rep) = recognize(&h) {
            return Ok(Some((h, rep)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::graphs_up_to;
    use crate::solver::{solve_exists, solve_fixed, SearchCaps};

    #[test]
    fn vc_examples() {
        let k3 = Graph::complete(3);
        let (g, l, r, t) = vc_to_threshold(&k3, 3).unwrap();
        assert!(solve_fixed(&g, &l, r, t).unwrap().is_some());
        let (g, l, r, t) = vc_to_threshold(&k3, 2).unwrap();
        assert!(solve_fixed(&g, &l, r, t).unwrap().is_none());
        let (g, l, r, t) = vc_to_threshold(&Graph::empty(3), 1).unwrap();
        assert!(solve_fixed(&g, &l, r, t).unwrap().is_some());
        assert!(vc_to_threshold(&k3, 0).is_err());
    }

    #[test]
    fn vc_matches_bruteforce() {
        for g in graphs_up_to(5, false) {
            for k in 1..=4 {
                let (h, l, r, t) = vc_to_threshold(&g, k).unwrap();
                let threshold = solve_fixed(&h, &l, r, t).unwrap().is_some();
                assert_eq!(
                    threshold,
                    k_colorable_bruteforce(&g, k as usize),
                    "{:?} k={k}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let p3 = Graph::path(3);
        let l = EdgeLabeling::new(vec![Label::Near, Label::Far]);
        let inst = threshold_to_sandwich(&p3, &l).unwrap();
        assert_eq!(inst.mandatory(), [(0, 1)]);
        assert_eq!(inst.universal(), [(0, 1), (0, 2)]);
        assert!(sandwich_bruteforce(&inst).unwrap().is_some());

        let g = Graph::cycle(5).unwrap();
        let inst = threshold_to_sandwich(&g, &EdgeLabeling::uniform(&g, Label::Near)).unwrap();
        assert_eq!(inst.universal().len(), 10);

        let k3 = Graph::complete(3);
        let inst = threshold_to_sandwich(&k3, &EdgeLabeling::uniform(&k3, Label::Far)).unwrap();
        assert!(inst.mandatory().is_empty() && inst.universal().is_empty());

        let c4 = Graph::cycle(4).unwrap();
        let inst = SandwichInstance::new(4, c4.edges(), c4.edges()).unwrap();
        assert!(sandwich_bruteforce(&inst).unwrap().is_none());

        let inst = SandwichInstance::new(2, &[], &[]).unwrap();
        let (h, _) = sandwich_bruteforce(&inst).unwrap().unwrap();
        assert_eq!(h.edge_count(), 0);

        assert!(SandwichInstance::new(3, &[(0, 1)], &[(1, 2)]).is_err());
        let big = Graph::empty(8).complement();
        let inst = SandwichInstance::new(8, &[], big.edges()).unwrap();
        assert_eq!(
            sandwich_bruteforce(&inst),
            Err(Error::CapExceeded {
                found: 28,
                cap: SANDWICH_OPTIONAL_CAP
            })
        );
    }

    #[test]
    fn sandwich_matches_solver_up_to_four_vertices() {
        let caps = SearchCaps::new(10, 3).unwrap();
        for g in graphs_up_to(4, false) {
            for mask in 0..1u64 << g.edge_count() {
                let l = EdgeLabeling::from_mask(&g, mask);
                let solved = solve_exists(&g, &l, caps).unwrap().is_found();
                let inst = threshold_to_sandwich(&g, &l).unwrap();
                let sandwich = sandwich_bruteforce(&inst).unwrap().is_some();
                assert_eq!(solved, sandwich, "{:?} {:?}", g.edges(), l);
            }
        }
    }
}
