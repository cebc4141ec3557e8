//! Unit interval (proper interval) graphs and their correspondence with
//! exact threshold colorings.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Signed;

use crate::coloring::ThresholdColoring;
use crate::graph::Graph;
use crate::Rational;

/// Closed unit intervals `[left(v), left(v) + 1]`; two vertices touch when
/// their intervals intersect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalRep {
    left: Vec<Rational>,
}

impl UnitIntervalRep {
    pub fn new(left: Vec<Rational>) -> Self {
        UnitIntervalRep { left }
    }

    pub fn left(&self) -> &[Rational] {
        &self.left
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn touches(&self, u: usize, v: usize) -> bool {
        (self.left[u] - self.left[v]).abs() <= Rational::from_integer(1)
    }

    /// The graph whose edges are the touching pairs.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.len();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, pairs.filter(|&(u, v)| self.touches(u, v))).expect("pairs are in range")
    }

    /// Whether the touching pairs are exactly the edges of `h`.
    pub fn represents(&self, h: &Graph) -> bool {
        self.len() == h.n() && self.intersection_graph().edges() == h.edges()
    }
}

/// Lexicographic breadth-first search on `vertices`. With `prior`, ties go to
/// the vertex that comes last in `prior` (the "+" rule).
fn lex_bfs(h: &Graph, vertices: &[usize], prior: Option<&[usize]>) -> Vec<usize> {
    let n = h.n();
    let mut rank = vec![0usize; n];
    if let Some(prior) = prior {
        for (i, &v) in prior.iter().enumerate() {
            rank[v] = i;
        }
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(vertices.len());
    for step in 0..vertices.len() {
        let pick = vertices
            .iter()
            .copied()
            .filter(|&v| !done[v])
            .max_by(|&a, &b| {
                labels[a].cmp(&labels[b]).then_with(|| match prior {
                    Some(_) => rank[a].cmp(&rank[b]),
                    None => b.cmp(&a),
                })
            })
            .expect("an unvisited vertex remains");
        done[pick] = true;
        order.push(pick);
        for &w in h.neighbors(pick) {
            if !done[w] {
                labels[w].push(vertices.len() - step);
            }
        }
    }
    order
}

/// Integer positions increasing along `order` with gaps at most `scale` for
/// edges and above `scale` for non-edges, by Bellman-Ford on the difference
/// constraints.
fn positions(h: &Graph, order: &[usize], scale: i64) -> Option<Vec<i64>> {
    let k = order.len();
    // Constraint x[b] - x[a] <= w as arc a -> b of weight w.
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if h.has_edge(order[i], order[j]) {
                arcs.push((i, j, scale));
            } else {
                arcs.push((j, i, -scale - 1));
            }
        }
        if i + 1 < k {
            arcs.push((i + 1, i, 0));
        }
    }
    let mut dist = vec![0i64; k];
    for round in 0..=k {
        let mut changed = false;
        for &(a, b, w) in &arcs {
            if dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            let lo = dist.iter().copied().min().unwrap_or(0);
            return Some(dist.iter().map(|d| d - lo).collect());
        }
        if round == k {
            break;
        }
    }
    None
}

/// A unit interval representation of `h`, or `None` when `h` is not a proper
/// interval graph. Each component is ordered by three lexicographic
/// breadth-first sweeps and then realized exactly; the result is checked
/// pair by pair.
pub fn recognize(h: &Graph) -> Option<UnitIntervalRep> {
    let n = h.n();
    let comp = h.component_ids();
    let mut left = vec![Rational::from_integer(0); n];
    let mut offset = Rational::from_integer(0);
    for c in 0..h.component_count() {
        let vertices: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
        let first = lex_bfs(h, &vertices, None);
        let second = lex_bfs(h, &vertices, Some(&first));
        let order = lex_bfs(h, &vertices, Some(&second));
        let k = order.len() as i64;
        let mut scale = k.max(1);
        let xs = loop {
            if let Some(xs) = positions(h, &order, scale) {
                break xs;
            }
            if scale > k * 64 {
                return None;
            }
            scale *= 2;
        };
        let mut top = offset;
        for (&v, &x) in order.iter().zip(&xs) {
            left[v] = offset + Rational::new(x, scale);
            top = top.max(left[v]);
        }
        offset = top + Rational::from_integer(2);
    }
    let rep = UnitIntervalRep::new(left);
    rep.represents(h).then_some(rep)
}

/// Left endpoints `c(v) / t`; with `t = 0` the endpoints are `3 c(v)`, so
/// only equal colors touch.
pub fn coloring_to_intervals(col: &ThresholdColoring) -> UnitIntervalRep {
    let t = col.threshold();
    let left = col
        .colors()
        .iter()
        .map(|&c| {
            if t == 0 {
                Rational::from_integer(3 * c)
            } else {
                Rational::new(c, t)
            }
        })
        .collect();
    UnitIntervalRep::new(left)
}

/// Scales endpoints by the least common denominator `t` and shifts them to
/// start at 1; `|c(u) - c(v)| <= t` exactly when the intervals touch.
pub fn intervals_to_coloring(rep: &UnitIntervalRep) -> ThresholdColoring {
    let t = rep.left().iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<i64> = rep.left().iter().map(|x| (x * t).to_integer()).collect();
    let lo = scaled.iter().copied().min().unwrap_or(1);
    let colors: Vec<i64> = scaled.iter().map(|c| c - lo + 1).collect();
    let range = colors.iter().copied().max().unwrap_or(1);
    ThresholdColoring::new(range, t, colors).expect("range and threshold are positive")
}
