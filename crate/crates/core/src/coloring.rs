//! Edge labelings, threshold colorings and the validity check.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Near,
    Far,
}

impl Label {
    /// The label a pair of colors induces under threshold `t`.
    pub fn induced(a: i64, b: i64, t: i64) -> Label {
        if (a - b).abs() <= t {
            Label::Near
        } else {
            Label::Far
        }
    }

    pub fn flip(self) -> Label {
        match self {
            Label::Near => Label::Far,
            Label::Far => Label::Near,
        }
    }
}

/// Total map from the edges of a graph to {Near, Far}, indexed by edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<Label>,
}

impl EdgeLabeling {
    pub fn new(labels: Vec<Label>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn uniform(g: &Graph, label: Label) -> Self {
        EdgeLabeling {
            labels: alloc::vec![label; g.edge_count()],
        }
    }

    pub fn from_fn(g: &Graph, mut f: impl FnMut(usize, usize) -> Label) -> Self {
        EdgeLabeling {
            labels: g.edges().iter().map(|&(u, v)| f(u, v)).collect(),
        }
    }

    /// Bit `i` of `mask` set means edge `i` is near. Needs `|E| <= 64`.
    pub fn from_mask(g: &Graph, mask: u64) -> Self {
        debug_assert!(g.edge_count() <= 64);
        EdgeLabeling {
            labels: (0..g.edge_count())
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Label::Near
                    } else {
                        Label::Far
                    }
                })
                .collect(),
        }
    }

    /// Near on the listed pairs, far everywhere else.
    pub fn from_near(g: &Graph, near: &[(usize, usize)]) -> Result<Self> {
        let mut labels = alloc::vec![Label::Far; g.edge_count()];
        for &(u, v) in near {
            let i = g.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
            labels[i] = Label::Near;
        }
        Ok(EdgeLabeling { labels })
    }

    /// Builds a labeling from explicit near and far lists, which together
    /// must cover every edge exactly once.
    pub fn from_parts(g: &Graph, near: &[(usize, usize)], far: &[(usize, usize)]) -> Result<Self> {
        let mut labels: Vec<Option<Label>> = alloc::vec![None; g.edge_count()];
        for (list, label) in [(near, Label::Near), (far, Label::Far)] {
            for &(u, v) in list {
                let i = g.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
                if labels[i].replace(label).is_some() {
                    return Err(Error::DuplicateLabel(u.min(v), u.max(v)));
                }
            }
        }
        let found = labels.iter().filter(|l| l.is_some()).count();
        let labels =
            labels
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or(Error::LabelingMismatch {
                    expected: g.edge_count(),
                    found,
                })?;
        Ok(EdgeLabeling { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, edge: usize) -> Label {
        self.labels[edge]
    }

    pub fn label(&self, g: &Graph, u: usize, v: usize) -> Option<Label> {
        g.edge_index(u, v).and_then(|i| self.labels.get(i).copied())
    }

    pub fn near_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l == Label::Near).count()
    }

    pub fn far_count(&self) -> usize {
        self.labels.len() - self.near_count()
    }

    pub fn edges_with<'g>(
        &'g self,
        g: &'g Graph,
        label: Label,
    ) -> impl Iterator<Item = (usize, usize)> + 'g {
        g.edges()
            .iter()
            .zip(&self.labels)
            .filter(move |(_, &l)| l == label)
            .map(|(&e, _)| e)
    }

    /// Spanning subgraph `(V, N)` of near edges.
    pub fn near_graph(&self, g: &Graph) -> Graph {
        let out =
            Graph::new(g.n(), self.edges_with(g, Label::Near)).expect("subgraph of a valid graph");
        match g.coords() {
            Some(c) => out.with_coords(c.to_vec()).expect("same vertex set"),
            None => out,
        }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.edge_count() {
            return Err(Error::LabelingMismatch {
                expected: g.edge_count(),
                found: self.labels.len(),
            });
        }
        Ok(())
    }
}

/// Vertex coloring together with its range `r` and threshold `t`.
///
/// Colors are arbitrary integers internally (several constructions center
/// their palette on 0); [`normalize`] shifts them into `[1..r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdColoring {
    range: i64,
    threshold: i64,
    colors: Vec<i64>,
}

impl ThresholdColoring {
    pub fn new(range: i64, threshold: i64, colors: Vec<i64>) -> Result<Self> {
        if range < 1 {
            return Err(Error::InvalidParameter("range must be at least 1"));
        }
        if threshold < 0 {
            return Err(Error::InvalidParameter("threshold must be non-negative"));
        }
        Ok(ThresholdColoring {
            range,
            threshold,
            colors,
        })
    }

    pub fn range(&self) -> i64 {
        self.range
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn colors(&self) -> &[i64] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> i64 {
        self.colors[v]
    }

    /// All colors lie in `[1..r]`.
    pub fn fits_range(&self) -> bool {
        self.colors.iter().all(|&c| 1 <= c && c <= self.range)
    }

    /// Widens the advertised range; never shrinks it below the span in use.
    pub fn with_range(mut self, range: i64) -> Self {
        self.range = self.range.max(range);
        self
    }

    /// Adds `k` to every color.
    pub fn shifted(&self, k: i64) -> Self {
        ThresholdColoring {
            range: self.range,
            threshold: self.threshold,
            colors: self.colors.iter().map(|c| c + k).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Every edge whose label disagrees with the colors of its endpoints.
    Violations(Vec<(usize, usize)>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks that every edge is near exactly when its endpoint colors differ by
/// at most the threshold.
pub fn verify(g: &Graph, labeling: &EdgeLabeling, coloring: &ThresholdColoring) -> Result<Verdict> {
    labeling.check(g)?;
    if coloring.colors.len() != g.n() {
        return Err(Error::ColoringMismatch {
            expected: g.n(),
            found: coloring.colors.len(),
        });
    }
    let t = coloring.threshold;
    let bad: Vec<_> = g
        .edges()
        .iter()
        .zip(labeling.labels())
        .filter(|(&(u, v), &label)| {
            Label::induced(coloring.colors[u], coloring.colors[v], t) != label
        })
        .map(|(&e, _)| e)
        .collect();
    Ok(if bad.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Violations(bad)
    })
}

/// Shifts colors so the smallest is 1 and sets the range to the span used.
pub fn normalize(coloring: &ThresholdColoring) -> ThresholdColoring {
    let (lo, hi) = match (coloring.colors.iter().min(), coloring.colors.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (1, 1),
    };
    ThresholdColoring {
        range: hi - lo + 1,
        threshold: coloring.threshold,
        colors: coloring.colors.iter().map(|c| c - lo + 1).collect(),
    }
}

/// Normalizes raw colors and advertises at least `range`.
pub(crate) fn finish(colors: Vec<i64>, range: i64, threshold: i64) -> ThresholdColoring {
    let raw = ThresholdColoring {
        range,
        threshold,
        colors,
    };
    normalize(&raw).with_range(range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gadget_k4_cycle;
    use alloc::vec;
    use proptest::prelude::*;

    fn col(r: i64, t: i64, colors: &[i64]) -> ThresholdColoring {
        ThresholdColoring::new(r, t, colors.to_vec()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let p = Graph::path(3);
        let l = EdgeLabeling::new(vec![Label::Near, Label::Far]);
        assert_eq!(
            verify(&p, &l, &col(5, 1, &[1, 2, 5])).unwrap(),
            Verdict::Valid
        );

        let (k4, l) = gadget_k4_cycle();
        match verify(&k4, &l, &col(2, 0, &[1, 1, 2, 2])).unwrap() {
            Verdict::Violations(v) => assert!(v.contains(&(1, 2))),
            Verdict::Valid => panic!("expected violations"),
        }

        let empty = Graph::empty(3);
        let l = EdgeLabeling::uniform(&empty, Label::Near);
        assert!(verify(&empty, &l, &col(9, 0, &[1, 5, 9]))
            .unwrap()
            .is_valid());
    }

    #[test]
    fn verify_reports_every_violation() {
        let k3 = Graph::complete(3);
        let l = EdgeLabeling::uniform(&k3, Label::Far);
        let v = verify(&k3, &l, &col(1, 0, &[1, 1, 1])).unwrap();
        assert_eq!(v, Verdict::Violations(vec![(0, 1), (0, 2), (1, 2)]));
    }

    #[test]
    fn verify_rejects_partial_inputs() {
        let p = Graph::path(3);
        let l = EdgeLabeling::new(vec![Label::Near]);
        assert!(matches!(
            verify(&p, &l, &col(2, 0, &[1, 1, 1])),
            Err(Error::LabelingMismatch {
                expected: 2,
                found: 1
            })
        ));
        let l = EdgeLabeling::uniform(&p, Label::Near);
        assert!(matches!(
            verify(&p, &l, &col(2, 0, &[1, 1])),
            Err(Error::ColoringMismatch { .. })
        ));
    }

    #[test]
    fn from_parts_requires_a_partition() {
        let p = Graph::path(3);
        assert!(EdgeLabeling::from_parts(&p, &[(0, 1)], &[(2, 1)]).is_ok());
        assert!(EdgeLabeling::from_parts(&p, &[(0, 1)], &[]).is_err());
        assert!(EdgeLabeling::from_parts(&p, &[(0, 1)], &[(1, 0), (1, 2)]).is_err());
        assert!(EdgeLabeling::from_parts(&p, &[(0, 2)], &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&col(1, 1, &[-2, 0, 2]));
        assert_eq!((n.colors(), n.range()), (&[1, 3, 5][..], 5));
        let n = normalize(&col(1, 0, &[1, 1]));
        assert_eq!((n.colors(), n.range()), (&[1, 1][..], 1));
        let n = normalize(&col(9, 2, &[5, 9]));
        assert_eq!((n.colors(), n.range()), (&[1, 5][..], 5));
    }

    fn arb_instance() -> impl Strategy<Value = (Graph, EdgeLabeling, Vec<i64>, i64)> {
        (1usize..8).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            (
                proptest::collection::vec(any::<bool>(), m),
                proptest::collection::vec(any::<bool>(), m),
                proptest::collection::vec(-6i64..6, n),
                0i64..4,
            )
                .prop_map(move |(keep, near, colors, t)| {
                    let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                    let g = Graph::new(n, edges).unwrap();
                    let labels = near
                        .iter()
                        .take(g.edge_count())
                        .map(|&b| if b { Label::Near } else { Label::Far })
                        .collect();
                    (g, EdgeLabeling::new(labels), colors, t)
                })
        })
    }

    proptest! {
        #[test]
        fn shift_preserves_verdict((g, l, colors, t) in arb_instance(), k in -50i64..50) {
            let c = col(20, t, &colors);
            prop_assert_eq!(verify(&g, &l, &c).unwrap(), verify(&g, &l, &c.shifted(k)).unwrap());
        }

        #[test]
        fn normalize_is_idempotent_and_preserves_verdict((g, l, colors, t) in arb_instance()) {
            let c = col(20, t, &colors);
            let once = normalize(&c);
            prop_assert_eq!(normalize(&once).clone(), once.clone());
            prop_assert!(once.fits_range());
            prop_assert_eq!(verify(&g, &l, &c).unwrap(), verify(&g, &l, &once).unwrap());
        }
    }
}
