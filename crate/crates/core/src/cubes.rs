//! Contact representations by equal axis-parallel cubes, in exact rational
//! arithmetic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::coloring::ThresholdColoring;
use crate::error::{Error, Result};
use crate::graph::{generate_grid, Coord, Graph, GridKind, GridSpec};
use crate::Rational;

pub type Point = [Rational; 3];

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn int(p: i64) -> Rational {
    Rational::from_integer(p)
}

/// Cubes of a common side, keyed by vertex id, each given by its minimum
/// corner. Vertices without a cube are simply absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeLayout {
    side: Rational,
    pos: BTreeMap<usize, Point>,
}

/// How two cubes of the same side meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Apart,
    /// Boundaries share a region of positive area.
    Contact,
    /// Interiors intersect.
    Overlap,
}

impl CubeLayout {
    pub fn new(side: Rational, pos: BTreeMap<usize, Point>) -> Result<Self> {
        if side <= int(0) {
            return Err(Error::InvalidParameter("cube side must be positive"));
        }
        Ok(CubeLayout { side, pos })
    }

    pub fn side(&self) -> Rational {
        self.side
    }

    pub fn positions(&self) -> &BTreeMap<usize, Point> {
        &self.pos
    }

    pub fn position(&self, v: usize) -> Option<&Point> {
        self.pos.get(&v)
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn relation(&self, u: usize, v: usize) -> Option<Relation> {
        Some(relation(self.side, self.pos.get(&u)?, self.pos.get(&v)?))
    }
}

/// Per axis the overlap length is `side - |a - b|`: all positive means the
/// interiors meet, all non-negative with exactly one zero means a shared
/// face region of positive area.
pub fn relation(side: Rational, a: &Point, b: &Point) -> Relation {
    let mut zeros = 0;
    for k in 0..3 {
        let overlap = side - (a[k] - b[k]).abs();
        if overlap < int(0) {
            return Relation::Apart;
        }
        if overlap == int(0) {
            zeros += 1;
        }
    }
    match zeros {
        0 => Relation::Overlap,
        1 => Relation::Contact,
        _ => Relation::Apart,
    }
}

/// Outcome of checking a layout against the graph it should represent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContactReport {
    pub contacts: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
    pub spurious: Vec<(usize, usize)>,
    pub overlaps: Vec<(usize, usize)>,
}

impl ContactReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.spurious.is_empty() && self.overlaps.is_empty()
    }
}

/// Compares every pair of cubes with `expected`. Edges of `expected` with an
/// endpoint that has no cube count as missing.
pub fn validate(layout: &CubeLayout, expected: &Graph) -> ContactReport {
    let mut report = ContactReport::default();
    let cubes: Vec<(&usize, &Point)> = layout.pos.iter().collect();
    for (i, &(&u, a)) in cubes.iter().enumerate() {
        for &(&v, b) in &cubes[i + 1..] {
            let wanted = u < expected.n() && v < expected.n() && expected.has_edge(u, v);
            match relation(layout.side, a, b) {
                Relation::Contact => {
                    report.contacts.push((u, v));
                    if !wanted {
                        report.spurious.push((u, v));
                    }
                }
                Relation::Overlap => {
                    report.overlaps.push((u, v));
                    if wanted {
                        report.missing.push((u, v));
                    }
                }
                Relation::Apart if wanted => report.missing.push((u, v)),
                Relation::Apart => {}
            }
        }
    }
    for &(u, v) in expected.edges() {
        if !layout.pos.contains_key(&u) || !layout.pos.contains_key(&v) {
            report.missing.push((u, v));
        }
    }
    report.missing.sort_unstable();
    report
}

fn checked(layout: CubeLayout, expected: &Graph, what: &'static str) -> Result<CubeLayout> {
    if validate(&layout, expected).is_clean() {
        Ok(layout)
    } else {
        Err(Error::LayoutInvalid(what))
    }
}

fn coords(g: &Graph) -> Result<&[Coord]> {
    g.coords().ok_or(Error::MissingCoords)
}

/// Unit cubes with all bottoms on `z = 0` whose contact graph is the grid of
/// `spec`. Square grids are the plain array; hexagonal grids are brick rows
/// with every other column raised by half a unit; octagonal-square grids turn
/// each square into a 2x2 block, blocks tiling the plane pinwheel-fashion
/// with the octagons as unit holes.
pub fn base_layout(spec: GridSpec) -> Result<CubeLayout> {
    let g = generate_grid(spec)?;
    let c = coords(&g)?;
    let pos: BTreeMap<usize, Point> = match spec.kind {
        GridKind::Square => c
            .iter()
            .enumerate()
            .map(|(v, p)| (v, [int(p.x), int(p.y), int(0)]))
            .collect(),
        GridKind::Hexagonal => c
            .iter()
            .enumerate()
            .map(|(v, p)| {
                let lift = if (p.x - p.y).rem_euclid(2) == 0 {
                    q(1, 2)
                } else {
                    int(0)
                };
                (v, [int(p.x), q(3 * p.y, 2) + lift, int(0)])
            })
            .collect(),
        GridKind::OctagonalSquare => c
            .iter()
            .enumerate()
            .map(|(v, p)| {
                // Undo the generator's shift, then find the square's center.
                let (x, y) = (p.x - 1, p.y - 1);
                let (a, b, cell) = if x.rem_euclid(3) == 0 {
                    if y.rem_euclid(3) == 2 {
                        (x / 3, (y + 1) / 3, (0, 0))
                    } else {
                        (x / 3, (y - 1) / 3, (1, 1))
                    }
                } else if x.rem_euclid(3) == 1 {
                    ((x - 1) / 3, y / 3, (1, 0))
                } else {
                    ((x + 1) / 3, y / 3, (0, 1))
                };
                let (x0, y0) = (2 * a + b, 2 * b - a);
                (v, [int(x0 + cell.0), int(y0 + cell.1), int(0)])
            })
            .collect(),
        _ => {
            return Err(Error::InvalidParameter(
                "base layouts exist for square, hexagonal and octagonal-square grids",
            ))
        }
    };
    checked(
        CubeLayout::new(int(1), pos)?,
        &g,
        "base layout does not realize the grid",
    )
}

/// Rescales a coplanar layout to side `t + epsilon` and raises each cube by
/// its color, so exactly the near edges stay in contact.
pub fn lift(base: &CubeLayout, col: &ThresholdColoring, epsilon: Rational) -> Result<CubeLayout> {
    if epsilon <= int(0) || epsilon >= int(1) {
        return Err(Error::InvalidParameter(
            "epsilon must lie strictly between 0 and 1",
        ));
    }
    let floor = base.pos.values().next().map(|p| p[2]);
    if base.pos.values().any(|p| Some(p[2]) != floor) {
        return Err(Error::LayoutInvalid("cube bottoms are not coplanar"));
    }
    let side = int(col.threshold()) + epsilon;
    let scale = side / base.side;
    let mut pos = BTreeMap::new();
    for (&v, p) in &base.pos {
        if v >= col.colors().len() {
            return Err(Error::ColoringMismatch {
                expected: v + 1,
                found: col.colors().len(),
            });
        }
        pos.insert(v, [p[0] * scale, p[1] * scale, int(col.color(v))]);
    }
    CubeLayout::new(side, pos)
}

/// Vertex and edge subset of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Subgraph {
    pub fn new(
        host: &Graph,
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&v) = vertices.iter().find(|&&v| v >= host.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: host.n(),
            });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if !host.has_edge(u, v) || !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::NotASubgraph(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Subgraph {
            vertices,
            edges: set,
        })
    }

    pub fn full(host: &Graph) -> Self {
        Subgraph {
            vertices: (0..host.n()).collect(),
            edges: host.edges().iter().copied().collect(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The subgraph on the host's id space; removed vertices stay isolated.
    pub fn as_graph(&self, host: &Graph) -> Graph {
        Graph::new(host.n(), self.edges.iter().copied()).expect("edges come from the host")
    }
}

fn require_kind(
    gstar: &Graph,
    sub: &Subgraph,
    kind: &'static str,
    pairs: impl Fn(Coord, Coord) -> bool,
) -> Result<()> {
    let c = coords(gstar)?;
    if gstar.edges().iter().any(|&(u, v)| !pairs(c[u], c[v])) {
        return Err(Error::WrongClass(kind));
    }
    if let Some(&v) = sub.vertices.iter().find(|&&v| v >= gstar.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: gstar.n(),
        });
    }
    for &(u, v) in &sub.edges {
        if !gstar.has_edge(u, v) {
            return Err(Error::NotASubgraph(u, v));
        }
    }
    Ok(())
}

/// Contact layout of a subgraph of a hexagonal grid. Cubes in odd columns
/// sit at height 0 and those in even columns at height 1, so row neighbors
/// meet through a small horizontal overlap; unwanted contacts are removed by
/// moving only the cubes with `x + y` even.
pub fn direct_hex(gstar: &Graph, sub: &Subgraph) -> Result<CubeLayout> {
    require_kind(gstar, sub, "hexagonal grid", |a, b| {
        (a.y == b.y && (a.x - b.x).abs() == 1) || (a.x == b.x && (a.y - b.y).abs() == 1)
    })?;
    let c = coords(gstar)?;
    let white = |v: usize| c[v].x.rem_euclid(2) == 0;
    let mut pos = BTreeMap::new();
    for &v in &sub.vertices {
        let p = c[v];
        let lift = if (p.x - p.y).rem_euclid(2) == 0 {
            q(1, 2)
        } else {
            int(0)
        };
        let mut at = [
            q(7 * p.x, 8),
            q(3 * p.y, 2) + lift,
            int(if white(v) { 1 } else { 0 }),
        ];
        if (p.x + p.y).rem_euclid(2) == 0 {
            let dropped: Vec<usize> = gstar
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| sub.vertices.contains(&w) && !sub.contains_edge(v, w))
                .collect();
            let cross: Vec<usize> = dropped.iter().copied().filter(|&w| c[w].y == p.y).collect();
            if let Some(&w) = dropped.iter().find(|&&w| c[w].x == p.x) {
                at[1] += if c[w].y > p.y { q(-1, 4) } else { q(1, 4) };
            }
            match cross.as_slice() {
                [] => {}
                [w] => at[0] += if c[*w].x > p.x { q(-1, 8) } else { q(1, 8) },
                _ => at[2] += if white(v) { q(1, 4) } else { q(-1, 4) },
            }
        }
        pos.insert(v, at);
    }
    checked(
        CubeLayout::new(int(1), pos)?,
        &sub.as_graph(gstar),
        "hexagonal construction failed",
    )
}

/// Contact layout of a subgraph of a square grid. Cubes of the class
/// `x + y` even form a sheared lattice (heights 1/2 and 0 alternating);
/// each remaining cube starts at height 1/4 between its four neighbors and
/// is moved to the first offset from a fixed menu that realizes exactly its
/// wanted contacts and touches nothing else. Cubes with no wanted contact go
/// outside.
pub fn direct_square(gstar: &Graph, sub: &Subgraph, delta: Rational) -> Result<CubeLayout> {
    if delta <= int(0) || delta >= q(1, 2) {
        return Err(Error::InvalidParameter(
            "delta must lie strictly between 0 and 1/2",
        ));
    }
    require_kind(gstar, sub, "square grid", |a, b| {
        (a.x - b.x).abs() + (a.y - b.y).abs() == 1
    })?;
    let c = coords(gstar)?;
    let lattice = |x: i64, y: i64| {
        let (i, j) = (int((x + y) / 2), int((x - y) / 2));
        (
            delta * i + (int(2) - delta) * j,
            (int(2) - delta) * i - delta * j,
        )
    };
    let mut pos = BTreeMap::new();
    for &v in sub
        .vertices
        .iter()
        .filter(|&&v| (c[v].x + c[v].y).rem_euclid(2) == 0)
    {
        let (x, y) = lattice(c[v].x, c[v].y);
        let z = if c[v].x.rem_euclid(2) == 0 {
            q(1, 2)
        } else {
            int(0)
        };
        pos.insert(v, [x, y, z]);
    }
    let eps = delta / 2;
    let heights = [q(1, 4), q(-1, 2), int(1), q(5, 4), q(-3, 4)];
    let steps = [int(0), eps, -eps, delta, -delta];
    let outside_x = pos.values().map(|p| p[0]).min().unwrap_or(int(0)) - int(3);
    let mut outside = 0;
    let blacks: Vec<usize> = sub
        .vertices
        .iter()
        .copied()
        .filter(|&v| (c[v].x + c[v].y).rem_euclid(2) == 1)
        .collect();
    for v in blacks {
        let keep: BTreeSet<usize> = gstar
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| sub.contains_edge(v, w))
            .collect();
        if keep.is_empty() {
            pos.insert(v, [outside_x - int(2 * outside), int(0), int(0)]);
            outside += 1;
            continue;
        }
        let (bx, by) = lattice(c[v].x - 1, c[v].y);
        let home = [bx + int(1), by + int(1) - delta];
        let side = int(1);
        let fits = |at: &Point| {
            pos.iter()
                .all(|(&w, other)| match relation(side, at, other) {
                    Relation::Apart => !keep.contains(&w),
                    Relation::Contact => keep.contains(&w),
                    Relation::Overlap => false,
                })
        };
        let found = heights.iter().find_map(|&z| {
            steps.iter().find_map(|&dx| {
                steps.iter().find_map(|&dy| {
                    let at = [home[0] + dx, home[1] + dy, z];
                    fits(&at).then_some(at)
                })
            })
        });
        let at = found.ok_or(Error::LayoutInvalid(
            "no offset realizes the wanted contacts",
        ))?;
        pos.insert(v, at);
    }
    checked(
        CubeLayout::new(int(1), pos)?,
        &sub.as_graph(gstar),
        "square construction failed",
    )
}
