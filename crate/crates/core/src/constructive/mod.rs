//! Direct colorers for graph classes that are always threshold colorable,
//! plus the (8, 2) machinery for planar graphs of girth at least 10.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{finish, EdgeLabeling, Label, ThresholdColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

mod extension;

pub use extension::{
    color_girth10, extend_configuration, find_reducible, legal_end_colors, ColorSet, ConfigKind,
    Configuration, Extension, TemplateBuilder,
};

fn check_labeling(g: &Graph, l: &EdgeLabeling) -> Result<()> {
    l.check(g)
}

fn near(g: &Graph, l: &EdgeLabeling, u: usize, v: usize) -> bool {
    l.label(g, u, v) == Some(Label::Near)
}

/// (2, 0)-coloring of a forest: each vertex gets the parity of the far edges
/// on its path to the smallest vertex of its component.
pub fn color_tree(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    check_labeling(g, l)?;
    if !g.is_forest() {
        return Err(Error::WrongClass("forest"));
    }
    let mut colors = vec![-1i64; g.n()];
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if colors[root] >= 0 {
            continue;
        }
        colors[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if colors[w] < 0 {
                    colors[w] = if near(g, l, u, w) {
                        colors[u]
                    } else {
                        1 - colors[u]
                    };
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(finish(colors, 2, 0))
}

/// Vertices of a cycle in traversal order, starting at 0 towards its smaller
/// neighbor.
fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.edge_count() != n || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Threshold-0 coloring of a cycle with three colors.
///
/// The maximal run of near edges through the lowest-indexed near edge is
/// colored 2 and the rest of the cycle is parity-colored with 0 and 1. When
/// all edges but one are near no threshold-0 coloring exists at all; that
/// case gets the (3, 1)-coloring `0, 1, 2, ..., 2` along the near path.
pub fn color_cycle(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    check_labeling(g, l)?;
    let order = cycle_order(g).ok_or(Error::WrongClass("cycle"))?;
    let n = order.len();
    // Edge i joins order[i] and order[i + 1].
    let is_near: Vec<bool> = (0..n)
        .map(|i| near(g, l, order[i], order[(i + 1) % n]))
        .collect();
    let near_edges = is_near.iter().filter(|&&b| b).count();
    let mut colors = vec![0i64; g.n()];
    if near_edges == n {
        return Ok(finish(vec![2; g.n()], 3, 0));
    }
    if near_edges == n - 1 {
        let far = is_near.iter().position(|&b| !b).expect("one far edge");
        for k in 0..n {
            colors[order[(far + 1 + k) % n]] = (k as i64).min(2);
        }
        return Ok(finish(colors, 3, 1));
    }
    if near_edges == 0 {
        for (k, &v) in order.iter().enumerate() {
            colors[v] = (k % 2) as i64;
        }
        if n % 2 == 1 {
            colors[order[n - 1]] = 2;
        }
        return Ok(finish(colors, 3, 0));
    }
    let first = (0..g.edge_count())
        .find(|&e| l.get(e) == Label::Near)
        .map(|e| g.edges()[e])
        .expect("a near edge exists");
    let pos = |v: usize| order.iter().position(|&w| w == v).expect("on the cycle");
    let (a, b) = (pos(first.0), pos(first.1));
    let mut start = if (a + 1) % n == b { a } else { b };
    while is_near[(start + n - 1) % n] {
        start = (start + n - 1) % n;
    }
    let mut k = start;
    while is_near[k] {
        colors[order[k]] = 2;
        k = (k + 1) % n;
    }
    colors[order[k]] = 2;
    // The run ended at order[k]; the far edge k leads into the parity path.
    let mut parity = 0;
    let mut v = (k + 1) % n;
    while v != start {
        colors[order[v]] = parity;
        if !is_near[v] {
            parity = 1 - parity;
        }
        v = (v + 1) % n;
    }
    Ok(finish(colors, 3, 0))
}

/// Apex of a fan together with its path in order.
fn fan_parts(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    if n < 2 || g.edge_count() != 2 * n - 3 {
        return None;
    }
    'apex: for apex in 0..n {
        if g.degree(apex) != n - 1 {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
        let deg = |v: usize| g.degree(v) - 1;
        if rest.iter().any(|&v| deg(v) > 2) {
            continue;
        }
        let Some(&start) = rest.iter().find(|&&v| deg(v) <= 1) else {
            continue;
        };
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != apex && w != prev);
            match next {
                Some(w) if !path.contains(&w) => {
                    path.push(w);
                    prev = cur;
                    cur = w;
                }
                Some(_) => continue 'apex,
                None => break,
            }
        }
        if path.len() == n - 1 {
            return Some((apex, path));
        }
    }
    None
}

/// (5, 1)-coloring of a fan: apex 0, path vertices `+-1` by the tree rule
/// along the path, doubled where the spoke is far.
pub fn color_fan(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    check_labeling(g, l)?;
    let (apex, path) = fan_parts(g).ok_or(Error::WrongClass("fan"))?;
    let mut colors = vec![0i64; g.n()];
    let mut sign = 1;
    for (i, &v) in path.iter().enumerate() {
        if i > 0 && !near(g, l, path[i - 1], v) {
            sign = -sign;
        }
        let magnitude = if near(g, l, apex, v) { 1 } else { 2 };
        colors[v] = sign * magnitude;
    }
    Ok(finish(colors, 5, 1))
}

/// Color of the middle vertex of a path `0 - c1 - k` with threshold 1, for
/// `k` in `{-2, -1, 1, 2}`: magnitude 1 or 2 by the first label, same sign as
/// `k` exactly when the second label is near.
pub fn extend_p2(k: i64, labels: (Label, Label)) -> i64 {
    debug_assert!(matches!(k, -2 | -1 | 1 | 2));
    let magnitude = if labels.0 == Label::Near { 1 } else { 2 };
    let sign = if labels.1 == Label::Near {
        k.signum()
    } else {
        -k.signum()
    };
    sign * magnitude
}

/// Colors `white` vertices 0 and propagates `+-1`/`+-2` over the black
/// forest with [`extend_p2`]. Requires every black vertex to see at most one
/// white vertex and the white set to be independent.
fn color_white_forest(
    g: &Graph,
    l: &EdgeLabeling,
    white: &[bool],
    class: &'static str,
) -> Result<ThresholdColoring> {
    let n = g.n();
    let mut white_nbr = vec![None; n];
    for &(u, v) in g.edges() {
        match (white[u], white[v]) {
            (true, true) => return Err(Error::WrongClass(class)),
            (true, false) | (false, true) => {
                let (w, b) = if white[u] { (u, v) } else { (v, u) };
                if white_nbr[b].replace(w).is_some() {
                    return Err(Error::WrongClass(class));
                }
            }
            (false, false) => {}
        }
    }
    let spoke = |b: usize| match white_nbr[b] {
        Some(w) if !near(g, l, w, b) => Label::Far,
        _ => Label::Near,
    };
    let mut colors = vec![0i64; n];
    let mut seen = white.to_vec();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        colors[root] = if spoke(root) == Label::Near { 1 } else { 2 };
        queue.push_back((root, usize::MAX));
        while let Some((u, parent)) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if white[w] || w == parent {
                    continue;
                }
                if seen[w] {
                    // A second route to a black vertex: not a forest.
                    return Err(Error::WrongClass(class));
                }
                seen[w] = true;
                let along = if near(g, l, u, w) {
                    Label::Near
                } else {
                    Label::Far
                };
                colors[w] = extend_p2(colors[u], (spoke(w), along));
                queue.push_back((w, u));
            }
        }
    }
    Ok(finish(colors, 5, 1))
}

/// (5, 1)-coloring of a generated hexagonal patch. White vertices are
/// `x = 0 mod 4` on even rows and `x = 2 mod 4` on odd rows.
pub fn color_hex_grid(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    check_labeling(g, l)?;
    let coords = g.coords().ok_or(Error::MissingCoords)?;
    let white: Vec<bool> = coords
        .iter()
        .map(|c| c.x.rem_euclid(4) == 2 * c.y.rem_euclid(2))
        .collect();
    color_white_forest(g, l, &white, "hexagonal grid")
}

/// (5, 1)-coloring of a generated octagonal-square patch. White vertices are
/// the east corners of the squares, which leaves vertical black paths.
pub fn color_octsquare_grid(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    check_labeling(g, l)?;
    let coords = g.coords().ok_or(Error::MissingCoords)?;
    // Stored coordinates are shifted by one on both axes.
    let white: Vec<bool> = coords
        .iter()
        .map(|c| (c.x - 1).rem_euclid(3) == 1 && (c.y - 1).rem_euclid(3) == 0)
        .collect();
    color_white_forest(g, l, &white, "octagonal-square grid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify, EdgeLabeling};
    use crate::graph::{generate_grid, GridKind, GridSpec};
    use Label::{Far as F, Near as N};

    fn labeled(g: &Graph, labels: &[Label]) -> EdgeLabeling {
        assert_eq!(labels.len(), g.edge_count());
        EdgeLabeling::new(labels.to_vec())
    }

    fn raw(c: &ThresholdColoring) -> Vec<i64> {
        let lo = c.colors().iter().min().copied().unwrap_or(1);
        c.colors().iter().map(|x| x - lo).collect()
    }

    fn assert_valid(g: &Graph, l: &EdgeLabeling, c: &ThresholdColoring, r: i64, t: i64) {
        assert_eq!((c.range(), c.threshold()), (r, t));
        assert!(c.fits_range());
        assert!(verify(g, l, c).unwrap().is_valid(), "{:?} {:?}", l, c);
    }

    #[test]
    fn tree_examples() {
        let p = Graph::path(4);
        let c = color_tree(&p, &labeled(&p, &[N, F, N])).unwrap();
        assert_eq!(raw(&c), [0, 0, 1, 1]);
        let s = Graph::star(3);
        let c = color_tree(&s, &EdgeLabeling::uniform(&s, F)).unwrap();
        assert_eq!(raw(&c), [0, 1, 1, 1]);
        let single = Graph::empty(1);
        assert_eq!(
            color_tree(&single, &EdgeLabeling::new(vec![]))
                .unwrap()
                .colors(),
            [1]
        );
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(
            color_tree(&c3, &EdgeLabeling::uniform(&c3, N)),
            Err(Error::WrongClass("forest"))
        );
    }

    #[test]
    fn cycle_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let l = EdgeLabeling::from_near(&c4, &[(0, 1)]).unwrap();
        let c = color_cycle(&c4, &l).unwrap();
        assert_eq!(raw(&c), [2, 2, 0, 1]);
        assert_valid(&c4, &l, &c, 3, 0);
        let all_near = EdgeLabeling::uniform(&c4, N);
        assert_eq!(raw(&color_cycle(&c4, &all_near).unwrap()), [0; 4]);
        let c5 = Graph::cycle(5).unwrap();
        let far = EdgeLabeling::uniform(&c5, F);
        assert_valid(&c5, &far, &color_cycle(&c5, &far).unwrap(), 3, 0);
        assert!(color_cycle(&Graph::path(4), &EdgeLabeling::uniform(&Graph::path(4), N)).is_err());
    }

    #[test]
    fn cycles_with_one_far_edge_fall_back_to_threshold_one() {
        for n in 3..=8 {
            let g = Graph::cycle(n).unwrap();
            for far in 0..n {
                let l =
                    EdgeLabeling::from_fn(&g, |u, v| if (u, v) == g.edges()[far] { F } else { N });
                assert_valid(&g, &l, &color_cycle(&g, &l).unwrap(), 3, 1);
            }
        }
    }

    #[test]
    fn cycles_exhaustive() {
        for n in 3..=10 {
            let g = Graph::cycle(n).unwrap();
            for mask in 0..1u64 << n {
                let l = EdgeLabeling::from_mask(&g, mask);
                let c = color_cycle(&g, &l).unwrap();
                let t = if l.far_count() == 1 { 1 } else { 0 };
                assert_valid(&g, &l, &c, 3, t);
            }
        }
    }

    #[test]
    fn fan_examples() {
        let f1 = Graph::fan(2);
        let c = color_fan(&f1, &EdgeLabeling::uniform(&f1, N)).unwrap();
        assert_eq!(raw(&c), [0, 1, 1]);
        // Spokes far, path near.
        let f2 = Graph::fan(3);
        let l = EdgeLabeling::from_fn(&f2, |u, _| if u == 0 { F } else { N });
        let c = color_fan(&f2, &l).unwrap();
        assert_eq!(raw(&c), [0, 2, 2, 2]);
        let f0 = Graph::fan(1);
        assert_eq!(
            raw(&color_fan(&f0, &EdgeLabeling::uniform(&f0, N)).unwrap()),
            [0, 1]
        );
        for k in 1..=5 {
            let g = Graph::fan(k);
            for mask in 0..1u64 << g.edge_count() {
                let l = EdgeLabeling::from_mask(&g, mask);
                assert_valid(&g, &l, &color_fan(&g, &l).unwrap(), 5, 1);
            }
        }
    }

    #[test]
    fn fan_with_relabeled_apex() {
        // Apex 2 over the path 0 - 1 - 3.
        let g = Graph::new(4, [(2, 0), (2, 1), (2, 3), (0, 1), (1, 3)]).unwrap();
        for mask in 0..1u64 << 5 {
            let l = EdgeLabeling::from_mask(&g, mask);
            assert_valid(&g, &l, &color_fan(&g, &l).unwrap(), 5, 1);
        }
        assert!(color_fan(
            &Graph::complete(4),
            &EdgeLabeling::uniform(&Graph::complete(4), N)
        )
        .is_err());
    }

    #[test]
    fn extend_p2_examples() {
        assert_eq!(extend_p2(1, (N, N)), 1);
        assert_eq!(extend_p2(2, (F, N)), 2);
        assert_eq!(extend_p2(-2, (N, F)), 1);
        for k in [-2, -1, 1, 2] {
            for a in [N, F] {
                for b in [N, F] {
                    let c1 = extend_p2(k, (a, b));
                    assert_eq!(Label::induced(0, c1, 1), a);
                    assert_eq!(Label::induced(c1, k, 1), b);
                }
            }
        }
    }

    fn grid(kind: GridKind, rows: usize, cols: usize) -> Graph {
        generate_grid(GridSpec::new(kind, rows, cols).unwrap()).unwrap()
    }

    #[test]
    fn hex_small_patches() {
        let g = grid(GridKind::Hexagonal, 1, 1);
        let l = EdgeLabeling::uniform(&g, N);
        assert_valid(&g, &l, &color_hex_grid(&g, &l).unwrap(), 5, 1);
        let g = grid(GridKind::Hexagonal, 2, 2);
        let l = EdgeLabeling::uniform(&g, F);
        assert_valid(&g, &l, &color_hex_grid(&g, &l).unwrap(), 5, 1);
        let g = grid(GridKind::Hexagonal, 1, 2);
        for mask in 0..1u64 << g.edge_count() {
            let l = EdgeLabeling::from_mask(&g, mask);
            assert_valid(&g, &l, &color_hex_grid(&g, &l).unwrap(), 5, 1);
        }
    }

    #[test]
    fn octsquare_smallest_patch() {
        let g = grid(GridKind::OctagonalSquare, 1, 1);
        for label in [N, F] {
            let l = EdgeLabeling::uniform(&g, label);
            assert_valid(&g, &l, &color_octsquare_grid(&g, &l).unwrap(), 5, 1);
        }
    }

    #[test]
    fn white_sets_hold_on_larger_patches() {
        for rows in 1..=6 {
            for cols in 1..=6 {
                let g = grid(GridKind::Hexagonal, rows, cols);
                let l = EdgeLabeling::from_fn(&g, |u, v| if (u + 2 * v) % 3 == 0 { N } else { F });
                assert_valid(&g, &l, &color_hex_grid(&g, &l).unwrap(), 5, 1);
                let g = grid(GridKind::OctagonalSquare, rows, cols);
                let l = EdgeLabeling::from_fn(&g, |u, v| if (u * v) % 4 == 1 { N } else { F });
                assert_valid(&g, &l, &color_octsquare_grid(&g, &l).unwrap(), 5, 1);
            }
        }
    }

    #[test]
    fn grid_colorers_need_coordinates() {
        let g = Graph::cycle(6).unwrap();
        let l = EdgeLabeling::uniform(&g, N);
        assert_eq!(color_hex_grid(&g, &l), Err(Error::MissingCoords));
        assert_eq!(color_octsquare_grid(&g, &l), Err(Error::MissingCoords));
    }
}
