//! Simple undirected graphs, planar grid generators and the small labeled
//! gadgets that have no threshold coloring.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{EdgeLabeling, Label};
use crate::error::{Error, Result};

/// Integer lattice coordinate attached to a generated grid vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub x: i64,
    pub y: i64,
}

impl Coord {
    pub const fn new(x: i64, y: i64) -> Self {
        Coord { x, y }
    }
}

/// Simple undirected graph on the dense vertex set `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; the position of an
/// edge in [`Graph::edges`] is its edge index, which is what an
/// [`EdgeLabeling`] is keyed by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    coords: Option<Vec<Coord>>,
}

/// Builds a validated simple graph; duplicate pairs (in either orientation)
/// are merged.
pub fn build_graph<I>(n: usize, edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Graph::new(n, edges)
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            coords: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices"));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (1..=k).map(|v| (0, v))).expect("star is valid")
    }

    /// Fan: apex 0 joined to every vertex of the path `1 - 2 - ... - k`.
    pub fn fan(k: usize) -> Self {
        let spokes = (1..=k).map(|v| (0, v));
        let path = (2..=k).map(|v| (v - 1, v));
        Graph::new(k + 1, spokes.chain(path)).expect("fan is valid")
    }

    /// Attaches grid coordinates; they must cover every vertex.
    pub fn with_coords(mut self, coords: Vec<Coord>) -> Result<Self> {
        if coords.len() != self.n {
            return Err(Error::CoordsMismatch {
                expected: self.n,
                found: coords.len(),
            });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn coords(&self) -> Option<&[Coord]> {
        self.coords.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.n
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, edges).expect("complement is valid")
    }
}

/// Shortest cycle length, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

pub fn girth(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // Nothing shorter can be found beyond this depth from this root.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// The planar grid families handled by the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    Triangular,
    Square,
    Hexagonal,
    /// The 4.8.8 Archimedean tiling.
    OctagonalSquare,
    /// The elongated triangular tiling (strips of squares and triangles).
    SquareTriangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    pub kind: GridKind,
    pub rows: usize,
    pub cols: usize,
}

impl GridSpec {
    pub fn new(kind: GridKind, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidGridSpec { rows, cols });
        }
        Ok(GridSpec { kind, rows, cols })
    }
}

/// Generates a grid patch with `rows x cols` cells.
///
/// Vertex ids follow scanline order of the coordinates (by `y`, then `x`).
///
/// * `Square`: `(rows+1) x (cols+1)` lattice points, coordinate `(col, row)`.
/// * `Triangular`: `rows` strips of `cols` triangles each on the triangular
///   lattice; lattice point `(i, k)` is stored as `(2i + k, k)`.
/// * `Hexagonal`: brick-wall embedding. Hexagon `(k, m)` spans columns
///   `2m + (k mod 2) ..= 2m + (k mod 2) + 2` on rows `k` and `k + 1`; the
///   vertical edge `(x, y) - (x, y+1)` exists iff `x ≡ y (mod 2)`.
/// * `OctagonalSquare`: `rows x cols` octagons together with every square
///   touching them. The square at lattice point `(3a, 3b)` has corners
///   `(3a, 3b-1)`, `(3a+1, 3b)`, `(3a, 3b+1)`, `(3a-1, 3b)`; coordinates
///   are stored shifted by `+1` on both axes.
/// * `SquareTriangle`: vertex rows `0..=rows` with `cols + 1` vertices each;
///   the strip between rows `y` and `y + 1` is made of squares for even `y`
///   and of triangles for odd `y`.
pub fn generate_grid(spec: GridSpec) -> Result<Graph> {
    let spec = GridSpec::new(spec.kind, spec.rows, spec.cols)?;
    let pairs = match spec.kind {
        GridKind::Square => square_pairs(spec.rows, spec.cols),
        GridKind::Triangular => triangular_pairs(spec.rows, spec.cols),
        GridKind::Hexagonal => hexagonal_pairs(spec.rows, spec.cols),
        GridKind::OctagonalSquare => octagonal_square_pairs(spec.rows, spec.cols),
        GridKind::SquareTriangle => square_triangle_pairs(spec.rows, spec.cols),
    };
    from_coord_pairs(&pairs)
}

fn from_coord_pairs(pairs: &[(Coord, Coord)]) -> Result<Graph> {
    // Scanline order: sort by (y, x).
    let mut ids: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &(a, b) in pairs {
        ids.insert((a.y, a.x), 0);
        ids.insert((b.y, b.x), 0);
    }
    let mut coords = Vec::with_capacity(ids.len());
    for (i, (key, id)) in ids.iter_mut().enumerate() {
        *id = i;
        coords.push(Coord::new(key.1, key.0));
    }
    let edges = pairs
        .iter()
        .map(|(a, b)| (ids[&(a.y, a.x)], ids[&(b.y, b.x)]));
    Graph::new(coords.len(), edges)?.with_coords(coords)
}

fn square_pairs(rows: usize, cols: usize) -> Vec<(Coord, Coord)> {
    let (rows, cols) = (rows as i64, cols as i64);
    let mut out = Vec::new();
    for y in 0..=rows {
        for x in 0..=cols {
            if x < cols {
                out.push((Coord::new(x, y), Coord::new(x + 1, y)));
            }
            if y < rows {
                out.push((Coord::new(x, y), Coord::new(x, y + 1)));
            }
        }
    }
    out
}

fn triangular_pairs(rows: usize, cols: usize) -> Vec<(Coord, Coord)> {
    let lattice = |i: i64, k: i64| Coord::new(2 * i + k, k);
    let mut out = Vec::new();
    let mut triangle = |a: Coord, b: Coord, c: Coord| {
        out.push((a, b));
        out.push((b, c));
        out.push((a, c));
    };
    for k in 0..rows as i64 {
        for m in 0..cols as i64 {
            let i = m / 2;
            if m % 2 == 0 {
                triangle(lattice(i, k), lattice(i + 1, k), lattice(i, k + 1));
            } else {
                triangle(lattice(i + 1, k), lattice(i, k + 1), lattice(i + 1, k + 1));
            }
        }
    }
    out
}

fn hexagonal_pairs(rows: usize, cols: usize) -> Vec<(Coord, Coord)> {
    let mut out = Vec::new();
    for k in 0..rows as i64 {
        for m in 0..cols as i64 {
            let x0 = 2 * m + k % 2;
            for y in [k, k + 1] {
                out.push((Coord::new(x0, y), Coord::new(x0 + 1, y)));
                out.push((Coord::new(x0 + 1, y), Coord::new(x0 + 2, y)));
            }
            out.push((Coord::new(x0, k), Coord::new(x0, k + 1)));
            out.push((Coord::new(x0 + 2, k), Coord::new(x0 + 2, k + 1)));
        }
    }
    out
}

fn octagonal_square_pairs(rows: usize, cols: usize) -> Vec<(Coord, Coord)> {
    let at = |x: i64, y: i64| Coord::new(x + 1, y + 1);
    let mut out = Vec::new();
    // Squares around every lattice point touched by an octagon.
    for b in 0..=rows as i64 {
        for a in 0..=cols as i64 {
            let (cx, cy) = (3 * a, 3 * b);
            let north = at(cx, cy - 1);
            let east = at(cx + 1, cy);
            let south = at(cx, cy + 1);
            let west = at(cx - 1, cy);
            out.extend([(north, east), (east, south), (south, west), (west, north)]);
        }
    }
    // Edges shared by two octagons (or on the patch boundary).
    for k in 0..rows as i64 {
        for m in 0..cols as i64 {
            let (x0, y0) = (3 * m, 3 * k);
            out.push((at(x0 + 1, y0), at(x0 + 2, y0)));
            out.push((at(x0 + 1, y0 + 3), at(x0 + 2, y0 + 3)));
            out.push((at(x0, y0 + 1), at(x0, y0 + 2)));
            out.push((at(x0 + 3, y0 + 1), at(x0 + 3, y0 + 2)));
        }
    }
    out
}

fn square_triangle_pairs(rows: usize, cols: usize) -> Vec<(Coord, Coord)> {
    let cols = cols as i64;
    let mut offset = vec![0i64; rows + 1];
    for y in 0..rows {
        offset[y + 1] = if y % 2 == 0 { offset[y] } else { 1 - offset[y] };
    }
    let at = |i: i64, y: usize| Coord::new(2 * i + offset[y], y as i64);
    let mut out = Vec::new();
    for y in 0..=rows {
        for i in 0..cols {
            out.push((at(i, y), at(i + 1, y)));
        }
        if y == rows {
            break;
        }
        for i in 0..=cols {
            if y % 2 == 0 {
                out.push((at(i, y), at(i, y + 1)));
            } else if offset[y + 1] > offset[y] {
                out.push((at(i, y), at(i, y + 1)));
                if i > 0 {
                    out.push((at(i, y), at(i - 1, y + 1)));
                }
            } else {
                out.push((at(i, y), at(i, y + 1)));
                if i < cols {
                    out.push((at(i, y), at(i + 1, y + 1)));
                }
            }
        }
    }
    out
}

fn labeled_gadget(
    n: usize,
    near: &[(usize, usize)],
    far: &[(usize, usize)],
) -> (Graph, EdgeLabeling) {
    let g = Graph::new(n, near.iter().chain(far).copied()).expect("gadget is valid");
    let labeling = EdgeLabeling::from_fn(&g, |u, v| {
        if near.contains(&(u, v)) || near.contains(&(v, u)) {
            Label::Near
        } else {
            Label::Far
        }
    });
    (g, labeling)
}

/// Triangle `v0 v1 v2` of far edges, plus `u_i` (id `3 + i`) joined by near
/// edges to `v_{i+1}` and `v_{i+2}`.
pub fn gadget_triangular() -> (Graph, EdgeLabeling) {
    let far = [(0, 1), (1, 2), (0, 2)];
    let near: Vec<_> = (0..3)
        .flat_map(|i| [(3 + i, (i + 1) % 3), (3 + i, (i + 2) % 3)])
        .collect();
    labeled_gadget(6, &near, &far)
}

/// `K4` on `v1..v4` (ids `0..4`): the 4-cycle `v1 v2 v3 v4` is near and both
/// diagonals are far.
pub fn gadget_k4_cycle() -> (Graph, EdgeLabeling) {
    labeled_gadget(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 2), (1, 3)])
}

/// Square-triangle gadget on `v0, v1, v2, u0, x, y` (ids `0..6`).
///
/// Triangles `v0 v1 x`, `v0 x u0` and `x u0 y` are stacked around `x`, and
/// `v1 x y v2` is a square. Near edges: `v0v1`, `v0x`, `u0x`, `u0y`, `v1v2`,
/// `v2y`. Far edges: `v1x`, `v0u0`, `xy`.
pub fn gadget_square_triangle() -> (Graph, EdgeLabeling) {
    const V0: usize = 0;
    const V1: usize = 1;
    const V2: usize = 2;
    const U0: usize = 3;
    const X: usize = 4;
    const Y: usize = 5;
    labeled_gadget(
        6,
        &[(V0, V1), (V0, X), (U0, X), (U0, Y), (V1, V2), (V2, Y)],
        &[(V1, X), (V0, U0), (X, Y)],
    )
}
