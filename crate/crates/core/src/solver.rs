//! Exact decision procedures by backtracking.
//!
//! All searches are exhaustive within their bounds, so a negative answer at a
//! fixed `(r, t)` is a proof of non-colorability for that pair. Searches over
//! several `(r, t)` pairs only ever report infeasibility *up to* their caps.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{normalize, EdgeLabeling, Label, ThresholdColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random;

/// Largest edge count accepted by exhaustive total checking.
pub const EXHAUSTIVE_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchCaps {
    pub r_max: i64,
    pub t_max: i64,
}

impl SearchCaps {
    pub fn new(r_max: i64, t_max: i64) -> Result<Self> {
        if r_max < 1 {
            return Err(Error::InvalidParameter("r_max must be at least 1"));
        }
        if t_max < 0 {
            return Err(Error::InvalidParameter("t_max must be non-negative"));
        }
        Ok(SearchCaps { r_max, t_max })
    }

    /// `t_max = 4`, `r_max = min(16, n (t_max + 1))`.
    pub fn default_for(n: usize) -> Self {
        let t_max = 4;
        let r_max = (n as i64 * (t_max + 1)).clamp(1, 16);
        SearchCaps { r_max, t_max }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(ThresholdColoring),
    /// No coloring with `r <= r_max` and `t <= t_max`; says nothing beyond.
    InfeasibleUpTo(SearchCaps),
}

impl Outcome {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn coloring(&self) -> Option<&ThresholdColoring> {
        match self {
            Outcome::Found(c) => Some(c),
            Outcome::InfeasibleUpTo(_) => None,
        }
    }
}

struct Search<'a> {
    order: &'a [usize],
    /// For the vertex at position `i`: (position of an earlier neighbor, label).
    back: Vec<Vec<(usize, Label)>>,
    r: i64,
    t: i64,
    assigned: Vec<i64>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let (mut lo, mut hi) = (1, self.r);
        if pos == 0 {
            // Reflection c -> r + 1 - c maps colorings to colorings.
            hi = (self.r + 1) / 2;
        }
        for &(p, label) in &self.back[pos] {
            if label == Label::Near {
                lo = lo.max(self.assigned[p] - self.t);
                hi = hi.min(self.assigned[p] + self.t);
            }
        }
        for c in lo..=hi {
            let ok = self.back[pos]
                .iter()
                .all(|&(p, label)| Label::induced(c, self.assigned[p], self.t) == label);
            if ok {
                self.assigned[pos] = c;
                if self.run(pos + 1) {
                    return true;
                }
            }
        }
        false
    }
}

fn solve_component(
    g: &Graph,
    labeling: &EdgeLabeling,
    vertices: &[usize],
    r: i64,
    t: i64,
) -> Option<Vec<(usize, i64)>> {
    let mut order = vertices.to_vec();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| position[w] < i)
                .map(|&w| {
                    let e = g.edge_index(v, w).expect("neighbor edge exists");
                    (position[w], labeling.get(e))
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        order: &order,
        back,
        r,
        t,
        assigned: vec![0; order.len()],
    };
    if !search.run(0) {
        return None;
    }
    Some(order.iter().copied().zip(search.assigned).collect())
}

/// Decides `(r, t)`-colorability exactly. Connected components are searched
/// independently; vertices go in descending degree order, colors ascending.
pub fn solve_fixed(
    g: &Graph,
    labeling: &EdgeLabeling,
    r: i64,
    t: i64,
) -> Result<Option<ThresholdColoring>> {
    labeling.check(g)?;
    if r < 1 || t < 0 {
        return Err(Error::InvalidParameter("need r >= 1 and t >= 0"));
    }
    let comp = g.component_ids();
    let count = comp.iter().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }
    let mut colors = vec![1; g.n()];
    for vertices in &members {
        let Some(found) = solve_component(g, labeling, vertices, r, t) else {
            return Ok(None);
        };
        for (v, c) in found {
            colors[v] = c;
        }
    }
    ThresholdColoring::new(r, t, colors).map(Some)
}

/// Searches `t = 0, 1, ..., t_max`, each at range `r_max` (colorability is
/// monotone in `r`), and returns the first coloring found, normalized.
pub fn solve_exists(g: &Graph, labeling: &EdgeLabeling, caps: SearchCaps) -> Result<Outcome> {
    labeling.check(g)?;
    for t in 0..=caps.t_max {
        if let Some(c) = solve_fixed(g, labeling, caps.r_max, t)? {
            return Ok(Outcome::Found(normalize(&c)));
        }
    }
    Ok(Outcome::InfeasibleUpTo(caps))
}

/// Exact-threshold question for `h`: a threshold coloring of the complete
/// graph whose near edges are exactly the edges of `h`.
pub fn solve_exact(h: &Graph, caps: SearchCaps) -> Result<Outcome> {
    let complete = Graph::complete(h.n());
    let labeling = EdgeLabeling::from_fn(&complete, |u, v| {
        if h.has_edge(u, v) {
            Label::Near
        } else {
            Label::Far
        }
    });
    solve_exists(&complete, &labeling, caps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TotalMode {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalReport {
    pub labelings_checked: usize,
    /// Labelings without a coloring under the caps, in enumeration order.
    pub failures: Vec<(EdgeLabeling, SearchCaps)>,
    pub mode: TotalMode,
}

impl TotalReport {
    pub fn is_colorable(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Number of labelings a total check visits; refuses exhaustive runs above
/// [`EXHAUSTIVE_EDGE_CAP`] edges.
pub fn labeling_count(g: &Graph, mode: TotalMode) -> Result<usize> {
    match mode {
        TotalMode::Exhaustive => {
            let m = g.edge_count();
            if m > EXHAUSTIVE_EDGE_CAP {
                return Err(Error::CapExceeded {
                    found: m,
                    cap: EXHAUSTIVE_EDGE_CAP,
                });
            }
            Ok(1 << m)
        }
        TotalMode::Sampled { count, .. } => Ok(count),
    }
}

/// Calls `visit(index, labeling)` for every labeling of the check, in order.
pub fn for_each_labeling(
    g: &Graph,
    mode: TotalMode,
    mut visit: impl FnMut(usize, EdgeLabeling) -> Result<()>,
) -> Result<()> {
    let count = labeling_count(g, mode)?;
    match mode {
        TotalMode::Exhaustive => {
            for mask in 0..count {
                visit(mask, EdgeLabeling::from_mask(g, mask as u64))?;
            }
        }
        TotalMode::Sampled { seed, .. } => {
            for (i, l) in random::sample_labelings(g, seed, count)
                .into_iter()
                .enumerate()
            {
                visit(i, l)?;
            }
        }
    }
    Ok(())
}

/// Checks every (or a seeded sample of) labeling for a coloring within caps.
pub fn check_total(g: &Graph, caps: SearchCaps, mode: TotalMode) -> Result<TotalReport> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for_each_labeling(g, mode, |_, l| {
        checked += 1;
        if !solve_exists(g, &l, caps)?.is_found() {
            failures.push((l, caps));
        }
        Ok(())
    })?;
    Ok(TotalReport {
        labelings_checked: checked,
        failures,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;
    use crate::graph::{gadget_k4_cycle, gadget_triangular};

    fn labels(s: &str) -> Vec<Label> {
        s.chars()
            .map(|c| if c == 'N' { Label::Near } else { Label::Far })
            .collect()
    }

    #[test]
    fn single_near_edge() {
        let g = Graph::path(2);
        let l = EdgeLabeling::uniform(&g, Label::Near);
        let c = solve_fixed(&g, &l, 1, 0).unwrap().unwrap();
        assert_eq!(c.colors(), &[1, 1]);
    }

    #[test]
    fn gadgets_are_infeasible_at_fixed_pairs() {
        let (g, l) = gadget_triangular();
        assert_eq!(solve_fixed(&g, &l, 10, 3).unwrap(), None);
        let (g, l) = gadget_k4_cycle();
        assert_eq!(solve_fixed(&g, &l, 8, 2).unwrap(), None);
    }

    #[test]
    fn solve_exists_examples() {
        let p = Graph::path(4);
        let l = EdgeLabeling::new(labels("NFN"));
        let caps = SearchCaps::new(4, 1).unwrap();
        let out = solve_exists(&p, &l, caps).unwrap();
        let c = out.coloring().unwrap();
        assert_eq!((c.threshold(), c.colors()), (0, &[1, 1, 2, 2][..]));

        let (g, l) = gadget_triangular();
        let caps = SearchCaps::new(10, 4).unwrap();
        assert_eq!(
            solve_exists(&g, &l, caps).unwrap(),
            Outcome::InfeasibleUpTo(caps)
        );

        let c4 = Graph::cycle(4).unwrap();
        let l = EdgeLabeling::uniform(&c4, Label::Near);
        let out = solve_exists(&c4, &l, SearchCaps::new(1, 0).unwrap()).unwrap();
        assert_eq!(out.coloring().unwrap().colors(), &[1, 1, 1, 1]);
    }

    #[test]
    fn solve_exact_examples() {
        let caps = SearchCaps::new(8, 3).unwrap();
        assert!(solve_exact(&Graph::path(3), caps).unwrap().is_found());
        assert_eq!(
            solve_exact(&Graph::star(3), caps).unwrap(),
            Outcome::InfeasibleUpTo(caps)
        );
        let k3 = solve_exact(&Graph::complete(3), caps).unwrap();
        let c = k3.coloring().unwrap();
        assert_eq!((c.threshold(), c.colors()), (0, &[1, 1, 1][..]));
    }

    #[test]
    fn check_total_examples() {
        let k3 = Graph::complete(3);
        let report =
            check_total(&k3, SearchCaps::new(6, 1).unwrap(), TotalMode::Exhaustive).unwrap();
        assert_eq!(report.labelings_checked, 8);
        assert!(report.is_colorable());

        let (k4, c4) = gadget_k4_cycle();
        let report =
            check_total(&k4, SearchCaps::new(8, 2).unwrap(), TotalMode::Exhaustive).unwrap();
        assert!(report.failures.iter().any(|(l, _)| *l == c4));

        let e = Graph::path(2);
        let report =
            check_total(&e, SearchCaps::new(2, 0).unwrap(), TotalMode::Exhaustive).unwrap();
        assert_eq!((report.labelings_checked, report.failures.len()), (2, 0));
    }

    #[test]
    fn exhaustive_cap_is_enforced() {
        let g = Graph::complete(8);
        let err = check_total(&g, SearchCaps::default_for(8), TotalMode::Exhaustive).unwrap_err();
        assert_eq!(err, Error::CapExceeded { found: 28, cap: 24 });
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let g = Graph::cycle(6).unwrap();
        let mode = TotalMode::Sampled { seed: 7, count: 20 };
        let caps = SearchCaps::new(3, 1).unwrap();
        let a = check_total(&g, caps, mode).unwrap();
        assert_eq!(a, check_total(&g, caps, mode).unwrap());
        assert_eq!(a.labelings_checked, 20);
    }

    #[test]
    fn default_caps() {
        assert_eq!(
            SearchCaps::default_for(2),
            SearchCaps {
                r_max: 10,
                t_max: 4
            }
        );
        assert_eq!(
            SearchCaps::default_for(9),
            SearchCaps {
                r_max: 16,
                t_max: 4
            }
        );
        assert_eq!(SearchCaps::default_for(0).r_max, 1);
    }

    // Naive r^n enumeration, independent of the backtracking order.
    fn brute_force(g: &Graph, l: &EdgeLabeling, r: i64, t: i64) -> bool {
        let n = g.n() as u32;
        (0..(r as u64).pow(n)).any(|mut code| {
            let colors: Vec<i64> = (0..n)
                .map(|_| {
                    let c = (code % r as u64) as i64 + 1;
                    code /= r as u64;
                    c
                })
                .collect();
            let c = ThresholdColoring::new(r, t, colors).unwrap();
            verify(g, l, &c).unwrap().is_valid()
        })
    }

    #[test]
    fn fixed_solver_matches_enumeration_on_small_graphs() {
        for g in crate::enumerate::graphs_up_to_isomorphism(4, false) {
            let m = g.edge_count();
            for mask in 0..1u64 << m {
                let l = EdgeLabeling::from_mask(&g, mask);
                for (r, t) in [(1, 0), (2, 0), (3, 0), (3, 1), (4, 1), (5, 1), (5, 2)] {
                    let got = solve_fixed(&g, &l, r, t).unwrap();
                    assert_eq!(
                        got.is_some(),
                        brute_force(&g, &l, r, t),
                        "{g:?} {mask:b} r={r} t={t}"
                    );
                    if let Some(c) = got {
                        assert!(verify(&g, &l, &c).unwrap().is_valid());
                        assert!(c.fits_range());
                        let wider = solve_fixed(&g, &l, r + 1, t).unwrap();
                        assert!(wider.is_some());
                    }
                }
            }
        }
    }
}
