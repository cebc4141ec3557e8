//! Path extension with colors `0..=7` and threshold 2, reducible tree
//! configurations, and the peeling colorer built on them.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{finish, EdgeLabeling, Label, ThresholdColoring};
use crate::error::{Error, Result};
use crate::graph::{girth, Girth, Graph};

const PALETTE: i64 = 8;
const THRESHOLD: i64 = 2;
const REQUIRED_GIRTH: usize = 10;

fn fits(a: i64, b: i64, label: Label) -> bool {
    Label::induced(a, b, THRESHOLD) == label
}

/// Subset of the palette `0..=7`, one bit per color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(u8::MAX);

    pub const fn from_mask(mask: u8) -> Self {
        ColorSet(mask)
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: i64) -> bool {
        (0..PALETTE).contains(&c) && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: i64) {
        debug_assert!((0..PALETTE).contains(&c));
        self.0 |= 1 << c;
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = i64> {
        (0..PALETTE).filter(move |&c| self.0 >> c & 1 == 1)
    }
}

impl FromIterator<i64> for ColorSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        iter.into_iter().for_each(|c| set.insert(c));
        set
    }
}

/// Colors the far end of a path can take when the near end has color `c0`
/// and the edges, from `c0` outwards, carry `path_labels`.
pub fn legal_end_colors(path_labels: &[Label], c0: i64) -> Result<ColorSet> {
    if !(1..=3).contains(&path_labels.len()) {
        return Err(Error::InvalidParameter("path length must be 1, 2 or 3"));
    }
    if !(0..PALETTE).contains(&c0) {
        return Err(Error::InvalidParameter("color outside 0..=7"));
    }
    // Reachable colors after each edge.
    let mut reach = ColorSet::from_iter([c0]);
    for &label in path_labels {
        reach = (0..PALETTE)
            .filter(|&c| reach.iter().any(|p| fits(p, c, label)))
            .collect();
    }
    Ok(reach)
}

/// Shapes of reducible configurations. `Star123` on its own is only
/// extendable when the leaf of its 1-prong is colored 1 or 6; it appears as a
/// building block of the two hub kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfigKind {
    /// Path with three internal vertices.
    P4,
    /// Star whose prongs have length 3 except for at most one.
    StarA,
    /// Star with at most three 2-prongs, all other prongs of length 3.
    StarB,
    /// Adjacent `x`, `y` of degree 3: `x` has a 1-prong and a 3-prong,
    /// `y` a 2-prong and a 3-prong.
    T1,
    /// Adjacent `x`, `y` of degree 3: `x` has a 2-prong and a 3-prong,
    /// `y` two 2-prongs or a 2-prong and a 3-prong.
    T2,
    /// Star with prongs of length 1, 2 and 3.
    Star123,
    /// Degree-3 hub adjacent to the centers of three `Star123`s.
    HubOfStars,
    /// Degree-3 hub with a 2-prong, adjacent to the centers of two `Star123`s.
    HubWithProng,
}

/// A tree inside a host graph. Internal vertices have no host edges outside
/// the tree; leaves are the boundary and keep their colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    kind: ConfigKind,
    leaves: Vec<usize>,
    internal: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Configuration {
    pub fn new(
        kind: ConfigKind,
        leaves: Vec<usize>,
        internal: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if internal.is_empty() {
            return Err(Error::MalformedConfiguration("no internal vertices"));
        }
        let mut all: Vec<usize> = leaves.iter().chain(&internal).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedConfiguration("repeated vertex"));
        }
        if edges.len() + 1 != all.len() {
            return Err(Error::MalformedConfiguration("not a tree"));
        }
        let index = |v: usize| {
            all.binary_search(&v)
                .map_err(|_| Error::MalformedConfiguration("edge leaves the tree"))
        };
        // Union-find over local indices to reject cycles.
        let mut parent: Vec<usize> = (0..all.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut degree = vec![0usize; all.len()];
        for &(u, v) in &edges {
            let (a, b) = (index(u)?, index(v)?);
            degree[a] += 1;
            degree[b] += 1;
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return Err(Error::MalformedConfiguration("not a tree"));
            }
            parent[ra] = rb;
        }
        if leaves
            .iter()
            .any(|&v| degree[index(v).expect("vertex of the tree")] != 1)
        {
            return Err(Error::MalformedConfiguration(
                "leaf of tree degree other than 1",
            ));
        }
        Ok(Configuration {
            kind,
            leaves,
            internal,
            edges,
        })
    }

    pub fn kind(&self) -> ConfigKind {
        self.kind
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn internal(&self) -> &[usize] {
        &self.internal
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Result of [`extend_configuration`]: colors for the internal vertices in
/// [`Configuration::internal`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    Colored(Vec<i64>),
    Impossible,
}

/// Extends leaf colors (in [`Configuration::leaves`] order) to the internal
/// vertices so that every tree edge gets its label with colors `0..=7` and
/// threshold 2. Exact dynamic programming over the tree.
pub fn extend_configuration(
    cfg: &Configuration,
    g: &Graph,
    l: &EdgeLabeling,
    leaf_colors: &[i64],
) -> Result<Extension> {
    l.check(g)?;
    if leaf_colors.len() != cfg.leaves.len() {
        return Err(Error::MalformedConfiguration("one color per leaf required"));
    }
    if leaf_colors.iter().any(|c| !(0..PALETTE).contains(c)) {
        return Err(Error::InvalidParameter("color outside 0..=7"));
    }
    if cfg.kind == ConfigKind::Star123 && !matches!(leaf_colors.first(), Some(1 | 6)) {
        return Ok(Extension::Impossible);
    }
    let local: Vec<usize> = cfg.internal.iter().chain(&cfg.leaves).copied().collect();
    let index = |v: usize| {
        local
            .iter()
            .position(|&w| w == v)
            .expect("vertex of the tree")
    };
    let mut adj: Vec<Vec<(usize, Label)>> = vec![Vec::new(); local.len()];
    for &(u, v) in &cfg.edges {
        let label = l.label(g, u, v).ok_or(Error::NotAnEdge(u, v))?;
        let (a, b) = (index(u), index(v));
        adj[a].push((b, label));
        adj[b].push((a, label));
    }
    let internal = cfg.internal.len();
    // Preorder from the first internal vertex.
    let mut order = vec![0usize];
    let mut parent = vec![(usize::MAX, Label::Near); local.len()];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &(w, label) in &adj[u] {
            if w != parent[u].0 && w != 0 {
                parent[w] = (u, label);
                order.push(w);
            }
        }
        i += 1;
    }
    let mut allowed = vec![ColorSet::ALL; local.len()];
    for (k, &c) in leaf_colors.iter().enumerate() {
        allowed[internal + k] = ColorSet::from_iter([c]);
    }
    for &u in order.iter().rev() {
        if u < internal {
            let children = adj[u].iter().filter(|&&(w, _)| w != parent[u].0);
            let mut set = allowed[u];
            for &(w, label) in children {
                set = set
                    .iter()
                    .filter(|&c| allowed[w].iter().any(|d| fits(c, d, label)))
                    .collect();
            }
            allowed[u] = set;
        }
    }
    if allowed[0].is_empty() {
        return Ok(Extension::Impossible);
    }
    let mut colors = vec![0i64; local.len()];
    for &u in &order {
        colors[u] = if u == 0 {
            allowed[0].iter().next().expect("nonempty")
        } else {
            let (p, label) = parent[u];
            allowed[u]
                .iter()
                .find(|&c| fits(colors[p], c, label))
                .expect("dynamic program guarantees a fitting color")
        };
    }
    colors.truncate(internal);
    Ok(Extension::Colored(colors))
}

/// Builds configuration templates as standalone trees, for exhaustive checks.
#[derive(Debug, Default)]
pub struct TemplateBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
    leaves: Vec<usize>,
    internal: Vec<usize>,
}

impl TemplateBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn internal(&mut self) -> usize {
        self.n += 1;
        self.internal.push(self.n - 1);
        self.n - 1
    }

    pub fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Hangs a prong of `len` edges off `from`; returns its leaf.
    pub fn prong(&mut self, from: usize, len: usize) -> usize {
        assert!(len >= 1);
        let mut prev = from;
        for _ in 1..len {
            let v = self.internal();
            self.edge(prev, v);
            prev = v;
        }
        self.n += 1;
        let leaf = self.n - 1;
        self.leaves.push(leaf);
        self.edge(prev, leaf);
        leaf
    }

    pub fn build(self, kind: ConfigKind) -> (Graph, Configuration) {
        let g = Graph::new(self.n, self.edges.iter().copied()).expect("template is a simple graph");
        let cfg = Configuration::new(kind, self.leaves, self.internal, self.edges)
            .expect("template is a tree");
        (g, cfg)
    }

    pub fn path4() -> (Graph, Configuration) {
        let mut b = Self::new();
        let c = b.internal();
        b.prong(c, 2);
        b.prong(c, 2);
        b.build(ConfigKind::P4)
    }

    /// Star with the given prong lengths; leaves follow the same order.
    pub fn star(kind: ConfigKind, prongs: &[usize]) -> (Graph, Configuration) {
        let mut b = Self::new();
        let c = b.internal();
        prongs.iter().for_each(|&len| {
            b.prong(c, len);
        });
        b.build(kind)
    }

    /// Adjacent centers `x` (internal 0) and `y` (internal 1) with extra prongs.
    pub fn pair(
        kind: ConfigKind,
        x_prongs: &[usize],
        y_prongs: &[usize],
    ) -> (Graph, Configuration) {
        let mut b = Self::new();
        let x = b.internal();
        let y = b.internal();
        b.edge(x, y);
        x_prongs.iter().for_each(|&len| {
            b.prong(x, len);
        });
        y_prongs.iter().for_each(|&len| {
            b.prong(y, len);
        });
        b.build(kind)
    }

    /// Hub adjacent to `stars` centers, each carrying a 2-prong and a 3-prong,
    /// plus an optional own prong.
    pub fn hub(kind: ConfigKind, own: Option<usize>, stars: usize) -> (Graph, Configuration) {
        let mut b = Self::new();
        let h = b.internal();
        if let Some(len) = own {
            b.prong(h, len);
        }
        for _ in 0..stars {
            let u = b.internal();
            b.edge(h, u);
            b.prong(u, 2);
            b.prong(u, 3);
        }
        b.build(kind)
    }
}

/// A path leaving a vertex through degree-2 vertices.
struct Prong {
    path: Vec<usize>,
    end: usize,
}

impl Prong {
    fn len(&self) -> usize {
        self.path.len() + 1
    }
}

/// The live part of a host graph during peeling.
struct Residual<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        Residual {
            g,
            alive: vec![true; g.n()],
            degree: (0..g.n()).map(|v| g.degree(v)).collect(),
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.alive[w])
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
            }
        }
    }

    /// Prong from `v` through its neighbor `w`, if it has length at most 3
    /// and does not return to `v`.
    fn prong(&self, v: usize, w: usize) -> Option<Prong> {
        let (mut prev, mut cur) = (v, w);
        let mut path = Vec::new();
        while self.degree[cur] == 2 {
            if path.len() == 2 {
                return None;
            }
            path.push(cur);
            let next = self.neighbors(cur).find(|&x| x != prev)?;
            prev = cur;
            cur = next;
        }
        (cur != v).then_some(Prong { path, end: cur })
    }

    fn prongs(&self, v: usize) -> Option<Vec<Prong>> {
        self.neighbors(v).map(|w| self.prong(v, w)).collect()
    }

    /// Other prongs of a degree-3 vertex `u` reached from `v` by an edge,
    /// when they have lengths 2 and 3 (a `Star123` hanging off `v`).
    fn star123_at(&self, u: usize, v: usize) -> Option<Vec<Prong>> {
        if self.degree[u] != 3 {
            return None;
        }
        let mut rest: Vec<Prong> = self
            .neighbors(u)
            .filter(|&w| w != v)
            .map(|w| self.prong(u, w))
            .collect::<Option<_>>()?;
        rest.sort_by_key(Prong::len);
        (lengths(&rest) == [2, 3]).then_some(rest)
    }

    fn find(&self) -> Option<Configuration> {
        let live = || (0..self.g.n()).filter(|&v| self.alive[v]);
        for v in live().filter(|&v| self.degree[v] == 2) {
            let nb: Vec<usize> = self.neighbors(v).collect();
            let (x, y) = (nb[0], nb[1]);
            if self.degree[x] != 2 || self.degree[y] != 2 {
                continue;
            }
            let a = self.neighbors(x).find(|&w| w != v)?;
            let b = self.neighbors(y).find(|&w| w != v)?;
            let cfg = Assembly::from_parts(
                vec![x, v, y],
                vec![a, b],
                vec![(a, x), (x, v), (v, y), (y, b)],
            );
            if let Some(cfg) = cfg.finish(ConfigKind::P4) {
                return Some(cfg);
            }
        }
        for v in live().filter(|&v| self.degree[v] >= 3) {
            let Some(mut prongs) = self.prongs(v) else {
                continue;
            };
            prongs.sort_by_key(Prong::len);
            let odd = prongs.iter().filter(|p| p.len() != 3).count();
            let kind = if odd <= 1 {
                Some(ConfigKind::StarA)
            } else if odd <= 3 && prongs[..odd].iter().all(|p| p.len() == 2) {
                Some(ConfigKind::StarB)
            } else {
                None
            };
            if let Some(kind) = kind {
                let mut asm = Assembly::new(v);
                prongs.iter().for_each(|p| asm.prong(v, p));
                if let Some(cfg) = asm.finish(kind) {
                    return Some(cfg);
                }
            }
            if self.degree[v] != 3 {
                continue;
            }
            if let Some(cfg) = self.pair_at(v, &prongs).or_else(|| self.hub_at(v, &prongs)) {
                return Some(cfg);
            }
        }
        None
    }

    /// T1 or T2 with `x = v`, where `prongs` are the sorted prongs of `v`.
    fn pair_at(&self, v: usize, prongs: &[Prong]) -> Option<Configuration> {
        for (i, p) in prongs.iter().enumerate().filter(|(_, p)| p.len() == 1) {
            let u = p.end;
            if self.degree[u] != 3 {
                continue;
            }
            let own: Vec<&Prong> = prongs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q)
                .collect();
            let Some(mut theirs) = self
                .neighbors(u)
                .filter(|&w| w != v)
                .map(|w| self.prong(u, w))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            theirs.sort_by_key(Prong::len);
            let own_len = [own[0].len(), own[1].len()];
            let kind = match (own_len, lengths(&theirs).as_slice()) {
                ([1, 3], [2, 3]) => ConfigKind::T1,
                ([2, 3], [2, 2] | [2, 3]) => ConfigKind::T2,
                _ => continue,
            };
            let mut asm = Assembly::new(v);
            asm.internal.push(u);
            asm.edges.push((v, u));
            own.iter().for_each(|q| asm.prong(v, q));
            theirs.iter().for_each(|q| asm.prong(u, q));
            if let Some(cfg) = asm.finish(kind) {
                return Some(cfg);
            }
        }
        None
    }

    fn hub_at(&self, v: usize, prongs: &[Prong]) -> Option<Configuration> {
        let len = lengths(prongs);
        let kind = match len.as_slice() {
            [1, 1, 1] => ConfigKind::HubOfStars,
            [1, 1, 2] => ConfigKind::HubWithProng,
            _ => return None,
        };
        let mut asm = Assembly::new(v);
        for p in prongs {
            if p.len() == 2 {
                asm.prong(v, p);
                continue;
            }
            let u = p.end;
            let rest = self.star123_at(u, v)?;
            asm.internal.push(u);
            asm.edges.push((v, u));
            rest.iter().for_each(|q| asm.prong(u, q));
        }
        asm.finish(kind)
    }
}

fn lengths(prongs: &[Prong]) -> Vec<usize> {
    prongs.iter().map(Prong::len).collect()
}

/// Vertex lists of a configuration under construction.
struct Assembly {
    internal: Vec<usize>,
    leaves: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Assembly {
    fn new(center: usize) -> Self {
        Assembly {
            internal: vec![center],
            leaves: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn from_parts(internal: Vec<usize>, leaves: Vec<usize>, edges: Vec<(usize, usize)>) -> Self {
        Assembly {
            internal,
            leaves,
            edges,
        }
    }

    fn prong(&mut self, from: usize, p: &Prong) {
        let mut prev = from;
        for &w in &p.path {
            self.internal.push(w);
            self.edges.push((prev, w));
            prev = w;
        }
        self.leaves.push(p.end);
        self.edges.push((prev, p.end));
    }

    /// Rejects assemblies where two parts meet, which a short cycle causes.
    fn finish(self, kind: ConfigKind) -> Option<Configuration> {
        Configuration::new(kind, self.leaves, self.internal, self.edges).ok()
    }
}

/// A reducible configuration in `g` whose internal vertices have no edges
/// leaving it, if one exists.
pub fn find_reducible(g: &Graph) -> Option<Configuration> {
    Residual::new(g).find()
}

enum Step {
    Isolated(usize),
    Pendant(usize, usize),
    Reduce(Configuration),
}

/// (8, 2)-coloring of a graph with girth at least 10 by repeatedly removing
/// isolated vertices, pendant vertices and reducible configurations, then
/// coloring back in reverse order. Planarity is assumed, not checked; a
/// residual graph with none of these surfaces as [`Error::Counterexample`].
pub fn color_girth10(g: &Graph, l: &EdgeLabeling) -> Result<ThresholdColoring> {
    l.check(g)?;
    if let Girth::Finite(k) = girth(g) {
        if k < REQUIRED_GIRTH {
            return Err(Error::GirthTooSmall {
                girth: k,
                required: REQUIRED_GIRTH,
            });
        }
    }
    let mut residual = Residual::new(g);
    let mut remaining = g.n();
    let mut steps = Vec::new();
    while remaining > 0 {
        let low = (0..g.n()).find(|&v| residual.alive[v] && residual.degree[v] <= 1);
        if let Some(v) = low {
            steps.push(match residual.neighbors(v).next() {
                Some(u) => Step::Pendant(v, u),
                None => Step::Isolated(v),
            });
            residual.remove(v);
            remaining -= 1;
            continue;
        }
        let cfg = residual.find().ok_or(Error::Counterexample { remaining })?;
        for &v in cfg.internal() {
            residual.remove(v);
        }
        remaining -= cfg.internal().len();
        steps.push(Step::Reduce(cfg));
    }
    let mut colors = vec![0i64; g.n()];
    for step in steps.iter().rev() {
        match step {
            Step::Isolated(v) => colors[*v] = 0,
            Step::Pendant(v, u) => {
                let c = colors[*u];
                colors[*v] = match l.label(g, *u, *v) {
                    Some(Label::Near) => c,
                    _ if c + 3 < PALETTE => c + 3,
                    _ => c - 3,
                };
            }
            Step::Reduce(cfg) => {
                let leaf_colors: Vec<i64> = cfg.leaves().iter().map(|&v| colors[v]).collect();
                match extend_configuration(cfg, g, l, &leaf_colors)? {
                    Extension::Colored(inner) => {
                        for (&v, c) in cfg.internal().iter().zip(inner) {
                            colors[v] = c;
                        }
                    }
                    Extension::Impossible => return Err(Error::ExtensionFailed),
                }
            }
        }
    }
    Ok(finish(colors, PALETTE, THRESHOLD))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;
    use Label::{Far as F, Near as N};

    fn label_seqs(len: usize) -> impl Iterator<Item = Vec<Label>> {
        (0..1u32 << len).map(move |m| {
            (0..len)
                .map(|i| if m >> i & 1 == 1 { N } else { F })
                .collect()
        })
    }

    #[test]
    fn legal_end_color_examples() {
        let one = legal_end_colors(&[N], 0).unwrap();
        assert!(one.contains(1) && !one.contains(6));
        assert!(!legal_end_colors(&[N, F], 3).unwrap().contains(3));
        for c0 in 0..8 {
            for labels in label_seqs(3) {
                let set = legal_end_colors(&labels, c0).unwrap();
                assert!([1, 3, 4, 6].iter().all(|&c| set.contains(c)));
            }
        }
        assert!(legal_end_colors(&[], 0).is_err());
        assert!(legal_end_colors(&[N; 4], 0).is_err());
        assert!(legal_end_colors(&[N], 8).is_err());
    }

    #[test]
    fn one_of_one_and_six_after_one_edge() {
        for c0 in 0..8 {
            for labels in label_seqs(1) {
                let set = legal_end_colors(&labels, c0).unwrap();
                assert!(set.contains(1) || set.contains(6));
            }
        }
    }

    #[test]
    fn three_and_four_after_two_edges() {
        for c0 in 0..8 {
            for labels in label_seqs(2) {
                let set = legal_end_colors(&labels, c0).unwrap();
                let mixed = labels[0] != labels[1];
                assert_eq!(set.contains(3), !(c0 == 3 && mixed));
                assert_eq!(set.contains(4), !(c0 == 4 && mixed));
            }
        }
    }

    fn leaf_colorings(k: usize) -> impl Iterator<Item = Vec<i64>> {
        (0..8usize.pow(k as u32)).map(move |m| {
            (0..k)
                .map(|i| (m / 8usize.pow(i as u32) % 8) as i64)
                .collect()
        })
    }

    /// Every labeling and every leaf coloring extends, and the result verifies.
    fn assert_reducible(g: &Graph, cfg: &Configuration) {
        for mask in 0..1u64 << g.edge_count() {
            let l = EdgeLabeling::from_mask(g, mask);
            for leaves in leaf_colorings(cfg.leaves().len()) {
                let Extension::Colored(inner) = extend_configuration(cfg, g, &l, &leaves).unwrap()
                else {
                    panic!(
                        "{:?} failed on {:?} with leaves {:?}",
                        cfg.kind(),
                        l,
                        leaves
                    );
                };
                let mut colors = vec![0; g.n()];
                cfg.leaves()
                    .iter()
                    .zip(&leaves)
                    .for_each(|(&v, &c)| colors[v] = c);
                cfg.internal()
                    .iter()
                    .zip(&inner)
                    .for_each(|(&v, &c)| colors[v] = c);
                let c = ThresholdColoring::new(8, 2, colors).unwrap();
                assert!(verify(g, &l, &c).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn p4_is_reducible() {
        let (g, cfg) = TemplateBuilder::path4();
        assert_eq!((cfg.internal().len(), cfg.leaves().len()), (3, 2));
        assert_reducible(&g, &cfg);
    }

    #[test]
    fn p4_examples() {
        let (g, cfg) = TemplateBuilder::path4();
        for label in [N, F] {
            let l = EdgeLabeling::uniform(&g, label);
            let Extension::Colored(inner) = extend_configuration(&cfg, &g, &l, &[0, 0]).unwrap()
            else {
                panic!("P4 must extend");
            };
            assert_eq!(inner.len(), 3);
        }
    }

    #[test]
    fn small_stars_are_reducible() {
        for prongs in [[1, 3, 3], [2, 3, 3], [3, 3, 3], [2, 2, 2], [2, 2, 3]] {
            let kind = if prongs.iter().filter(|&&p| p != 3).count() <= 1 {
                ConfigKind::StarA
            } else {
                ConfigKind::StarB
            };
            let (g, cfg) = TemplateBuilder::star(kind, &prongs);
            assert_reducible(&g, &cfg);
        }
    }

    #[test]
    fn star123_needs_its_precondition() {
        let (g, cfg) = TemplateBuilder::star(ConfigKind::Star123, &[1, 2, 3]);
        for mask in 0..1u64 << g.edge_count() {
            let l = EdgeLabeling::from_mask(&g, mask);
            for first in [1, 6] {
                for a in 0..8 {
                    for b in 0..8 {
                        let ext = extend_configuration(&cfg, &g, &l, &[first, a, b]).unwrap();
                        assert!(matches!(ext, Extension::Colored(_)));
                    }
                }
            }
            let ext = extend_configuration(&cfg, &g, &l, &[0, 0, 0]).unwrap();
            assert_eq!(ext, Extension::Impossible);
        }
    }

    #[test]
    fn malformed_configurations_are_rejected() {
        let cycle = Configuration::new(
            ConfigKind::P4,
            vec![],
            vec![0, 1, 2],
            vec![(0, 1), (1, 2), (2, 0)],
        );
        assert!(cycle.is_err());
        assert!(Configuration::new(ConfigKind::P4, vec![0], vec![], vec![]).is_err());
        let (g, cfg) = TemplateBuilder::path4();
        let l = EdgeLabeling::uniform(&g, N);
        assert!(extend_configuration(&cfg, &g, &l, &[0]).is_err());
        assert!(extend_configuration(&cfg, &g, &l, &[0, 9]).is_err());
    }

    #[test]
    fn find_reducible_examples() {
        let p5 = Graph::path(5);
        assert_eq!(find_reducible(&p5).map(|c| c.kind()), Some(ConfigKind::P4));
        let c10 = Graph::cycle(10).unwrap();
        assert_eq!(find_reducible(&c10).map(|c| c.kind()), Some(ConfigKind::P4));
        assert_eq!(find_reducible(&Graph::complete(4)), None);
    }

    #[test]
    fn find_reducible_recognizes_templates() {
        let cases = [
            TemplateBuilder::star(ConfigKind::StarA, &[1, 3, 3, 3]),
            TemplateBuilder::star(ConfigKind::StarB, &[2, 2, 2, 3]),
            TemplateBuilder::pair(ConfigKind::T1, &[1, 3], &[2, 3]),
            TemplateBuilder::pair(ConfigKind::T2, &[2, 3], &[2, 2]),
            TemplateBuilder::pair(ConfigKind::T2, &[2, 3], &[2, 3]),
            TemplateBuilder::hub(ConfigKind::HubOfStars, None, 3),
            TemplateBuilder::hub(ConfigKind::HubWithProng, Some(2), 2),
        ];
        for (g, cfg) in cases {
            // Thicken every leaf to degree 3 so only the template is reducible.
            let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
            let mut n = g.n();
            for &leaf in cfg.leaves() {
                for _ in 0..2 {
                    edges.push((leaf, n));
                    n += 1;
                }
            }
            let host = Graph::new(n, edges).unwrap();
            let found = find_reducible(&host).expect("template is found");
            let mut want = cfg.internal().to_vec();
            let mut got = found.internal().to_vec();
            want.sort_unstable();
            got.sort_unstable();
            if found.kind() == cfg.kind() {
                assert_eq!(got, want, "{:?}", cfg.kind());
            }
        }
    }

    fn theta(arms: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut n = 2;
        for &len in arms {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, 1));
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn girth10_examples() {
        let c10 = Graph::cycle(10).unwrap();
        for mask in 0..1u64 << 10 {
            let l = EdgeLabeling::from_mask(&c10, mask);
            let c = color_girth10(&c10, &l).unwrap();
            assert_eq!((c.range(), c.threshold()), (8, 2));
            assert!(verify(&c10, &l, &c).unwrap().is_valid());
        }
        let tree = Graph::star(5);
        let l = EdgeLabeling::from_mask(&tree, 0b10110);
        assert!(verify(&tree, &l, &color_girth10(&tree, &l).unwrap())
            .unwrap()
            .is_valid());
        // Two 12-cycles sharing vertex 0.
        let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        edges.extend((0..12).map(|i| {
            (
                if i == 0 { 0 } else { 11 + i },
                if i == 11 { 0 } else { 12 + i },
            )
        }));
        let g = Graph::new(23, edges).unwrap();
        for mask in [0u64, u64::MAX, 0x5a5a5a, 0x123456] {
            let l = EdgeLabeling::from_mask(&g, mask);
            assert!(verify(&g, &l, &color_girth10(&g, &l).unwrap())
                .unwrap()
                .is_valid());
        }
        let g = theta(&[5, 5, 7]);
        for mask in [0u64, u64::MAX, 0xdeadbeef] {
            let l = EdgeLabeling::from_mask(&g, mask);
            assert!(verify(&g, &l, &color_girth10(&g, &l).unwrap())
                .unwrap()
                .is_valid());
        }
    }

    #[test]
    fn girth10_rejects_short_cycles() {
        let c9 = Graph::cycle(9).unwrap();
        assert_eq!(
            color_girth10(&c9, &EdgeLabeling::uniform(&c9, N)),
            Err(Error::GirthTooSmall {
                girth: 9,
                required: 10
            })
        );
    }
}
