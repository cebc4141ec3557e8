//! JSON file formats and OBJ export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thresholdkit_core::cubes::{CubeLayout, Point, Subgraph};
use thresholdkit_core::interval::UnitIntervalRep;
use thresholdkit_core::reductions::SandwichInstance;
use thresholdkit_core::{Coord, EdgeLabeling, Graph, Label, Rational, ThresholdColoring};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<BTreeMap<usize, [i64; 2]>>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            coords: g
                .coords()
                .map(|c| c.iter().enumerate().map(|(v, p)| (v, [p.x, p.y])).collect()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        match &self.coords {
            None => Ok(g),
            Some(map) => {
                ensure!(
                    map.keys().copied().eq(0..self.n),
                    "coords must list every vertex 0..{}",
                    self.n
                );
                Ok(g.with_coords(map.values().map(|&[x, y]| Coord::new(x, y)).collect())?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub near: Vec<[usize; 2]>,
    pub far: Vec<[usize; 2]>,
}

impl LabelingFile {
    pub fn from_labeling(g: &Graph, l: &EdgeLabeling) -> Self {
        let pick = |label| l.edges_with(g, label).map(|(u, v)| [u, v]).collect();
        LabelingFile {
            near: pick(Label::Near),
            far: pick(Label::Far),
        }
    }

    pub fn to_labeling(&self, g: &Graph) -> Result<EdgeLabeling> {
        let pairs = |list: &[[usize; 2]]| list.iter().map(|&[u, v]| (u, v)).collect::<Vec<_>>();
        Ok(EdgeLabeling::from_parts(
            g,
            &pairs(&self.near),
            &pairs(&self.far),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub r: i64,
    pub t: i64,
    pub colors: BTreeMap<usize, i64>,
}

impl ColoringFile {
    pub fn from_coloring(c: &ThresholdColoring) -> Self {
        ColoringFile {
            r: c.range(),
            t: c.threshold(),
            colors: c.colors().iter().copied().enumerate().collect(),
        }
    }

    pub fn to_coloring(&self) -> Result<ThresholdColoring> {
        ensure!(
            self.colors.keys().copied().eq(0..self.colors.len()),
            "colors must be given for vertices 0..{}",
            self.colors.len()
        );
        Ok(ThresholdColoring::new(
            self.r,
            self.t,
            self.colors.values().copied().collect(),
        )?)
    }
}

pub fn format_rational(x: Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>()?, q.trim().parse::<i64>()?),
        None => (s.parse::<i64>()?, 1),
    };
    ensure!(q != 0, "zero denominator in {s:?}");
    Ok(Rational::new(p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub left: BTreeMap<usize, String>,
}

impl RepFile {
    pub fn from_rep(rep: &UnitIntervalRep) -> Self {
        RepFile {
            left: rep
                .left()
                .iter()
                .map(|&x| format_rational(x))
                .enumerate()
                .collect(),
        }
    }

    pub fn to_rep(&self) -> Result<UnitIntervalRep> {
        ensure!(
            self.left.keys().copied().eq(0..self.left.len()),
            "left endpoints must cover 0..n"
        );
        Ok(UnitIntervalRep::new(
            self.left
                .values()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutFile {
    pub side: String,
    pub pos: BTreeMap<usize, [String; 3]>,
}

impl LayoutFile {
    pub fn from_layout(layout: &CubeLayout) -> Self {
        LayoutFile {
            side: format_rational(layout.side()),
            pos: layout
                .positions()
                .iter()
                .map(|(&v, p)| (v, p.map(format_rational)))
                .collect(),
        }
    }

    pub fn to_layout(&self) -> Result<CubeLayout> {
        let mut pos = BTreeMap::new();
        for (&v, p) in &self.pos {
            let point: Point = [
                parse_rational(&p[0])?,
                parse_rational(&p[1])?,
                parse_rational(&p[2])?,
            ];
            pos.insert(v, point);
        }
        Ok(CubeLayout::new(parse_rational(&self.side)?, pos)?)
    }
}

/// Vertex and edge subset of a host grid; without `vertices` every host
/// vertex is kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

impl SubgraphFile {
    pub fn from_subgraph(sub: &Subgraph) -> Self {
        SubgraphFile {
            vertices: Some(sub.vertices().iter().copied().collect()),
            edges: sub.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_subgraph(&self, host: &Graph) -> Result<Subgraph> {
        let vertices: Vec<usize> = match &self.vertices {
            Some(list) => list.clone(),
            None => (0..host.n()).collect(),
        };
        Ok(Subgraph::new(
            host,
            vertices,
            self.edges.iter().map(|&[u, v]| (u, v)),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichFile {
    pub n: usize,
    pub mandatory: Vec<[usize; 2]>,
    pub universal: Vec<[usize; 2]>,
}

impl SandwichFile {
    pub fn from_instance(inst: &SandwichInstance) -> Self {
        let list = |edges: &[(usize, usize)]| edges.iter().map(|&(u, v)| [u, v]).collect();
        SandwichFile {
            n: inst.n(),
            mandatory: list(inst.mandatory()),
            universal: list(inst.universal()),
        }
    }

    pub fn to_instance(&self) -> Result<SandwichInstance> {
        let pairs = |list: &[[usize; 2]]| list.iter().map(|&[u, v]| (u, v)).collect::<Vec<_>>();
        Ok(SandwichInstance::new(
            self.n,
            &pairs(&self.mandatory),
            &pairs(&self.universal),
        )?)
    }
}

/// Decimal text for a rational: exact when the denominator has no prime
/// factors besides 2 and 5, otherwise cut after 12 fractional digits.
pub fn decimal(x: Rational) -> String {
    let (p, q) = (*x.numer(), *x.denom());
    let mut out = String::new();
    if p < 0 {
        out.push('-');
    }
    let (whole, mut rest) = ((p / q).abs(), (p % q).abs());
    write!(out, "{whole}").expect("writing to a String");
    if rest == 0 {
        return out;
    }
    out.push('.');
    for _ in 0..12 {
        rest *= 10;
        out.push(char::from(b'0' + (rest / q) as u8));
        rest %= q;
        if rest == 0 {
            break;
        }
    }
    out
}

/// Wavefront OBJ with one group per cube: 8 corners and 12 triangles.
pub fn layout_to_obj(layout: &CubeLayout) -> String {
    const FACES: [[usize; 3]; 12] = [
        [0, 2, 1],
        [0, 3, 2],
        [4, 5, 6],
        [4, 6, 7],
        [0, 1, 5],
        [0, 5, 4],
        [1, 2, 6],
        [1, 6, 5],
        [2, 3, 7],
        [2, 7, 6],
        [3, 0, 4],
        [3, 4, 7],
    ];
    let s = layout.side();
    let zero = Rational::from_integer(0);
    let mut out = String::from("# unit-cube contact layout\n");
    for (k, (v, p)) in layout.positions().iter().enumerate() {
        writeln!(out, "g v{v}").expect("writing to a String");
        for dz in [zero, s] {
            for (dx, dy) in [(zero, zero), (s, zero), (s, s), (zero, s)] {
                let corner = [p[0] + dx, p[1] + dy, p[2] + dz].map(decimal);
                writeln!(out, "v {} {} {}", corner[0], corner[1], corner[2])
                    .expect("writing to a String");
            }
        }
        let base = 8 * k + 1;
        for f in FACES {
            writeln!(out, "f {} {} {}", base + f[0], base + f[1], base + f[2])
                .expect("writing to a String");
        }
    }
    out
}

/// Picks OBJ or JSON by file extension.
pub fn layout_bytes(layout: &CubeLayout, path: &Path) -> Result<String> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("obj") => Ok(layout_to_obj(layout)),
        Some("json") => to_json(&LayoutFile::from_layout(layout)),
        _ => bail!(
            "layout output must end in .obj or .json: {}",
            path.display()
        ),
    }
}
