//! The `thresholdkit` command line.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thresholdkit_core::constructive::{
    color_cycle, color_fan, color_girth10, color_hex_grid, color_octsquare_grid, color_tree,
};
use thresholdkit_core::cubes::{
    base_layout, direct_hex, direct_square, lift, validate, CubeLayout, Subgraph,
};
use thresholdkit_core::graph::{
    gadget_k4_cycle, gadget_square_triangle, gadget_triangular, generate_grid,
};
use thresholdkit_core::interval::recognize;
use thresholdkit_core::random::label_random;
use thresholdkit_core::reductions::{sandwich_bruteforce, threshold_to_sandwich, vc_to_threshold};
use thresholdkit_core::solver::{solve_exists, solve_fixed, SearchCaps, TotalMode};
use thresholdkit_core::{verify, EdgeLabeling, Graph, GridKind, GridSpec, Label, Verdict};

use crate::formats::{
    layout_bytes, parse_rational, read_json, to_json, ColoringFile, GraphFile, LabelingFile,
    RepFile, SandwichFile, SubgraphFile,
};
use crate::manifest::RunManifest;
use crate::parallel;

#[derive(Debug, Parser)]
#[command(
    name = "thresholdkit",
    version,
    about = "Threshold colorings, reductions and cube contact layouts"
)]
pub struct Cli {
    /// Worker threads for parallel checks.
    #[arg(long, global = true, env = "THRESHOLDKIT_THREADS", default_value_t = 1)]
    threads: usize,
    /// Where to write the run manifest (stderr otherwise).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a grid, a classic family member or a gadget as graph JSON.
    Generate(GenerateArgs),
    /// Produce a labeling: seeded random, or re-checked from a file.
    Label(LabelArgs),
    /// Search for a threshold coloring of a labeled graph.
    Solve(SolveArgs),
    /// Check every (or a seeded sample of) labeling for colorability.
    CheckTotal(CheckTotalArgs),
    /// Run a constructive colorer for a graph class.
    Construct(ConstructArgs),
    /// Decide whether a graph is a proper interval graph.
    Exact(ExactArgs),
    /// Emit reduction instances.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Build and validate a unit-cube contact layout.
    Cubes(CubesArgs),
    /// Check a coloring against a labeled graph.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Square,
    Triangular,
    Hex,
    Octsquare,
    SquareTriangle,
    Path,
    Cycle,
    Star,
    Fan,
    Complete,
    GadgetK4,
    GadgetTriangular,
    GadgetSquareTriangle,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    kind: GraphKind,
    #[arg(long, default_value_t = 1)]
    rows: usize,
    #[arg(long, default_value_t = 1)]
    cols: usize,
    /// Size parameter for path, cycle, star, fan and complete graphs.
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Gadgets only: where to write their labeling.
    #[arg(long)]
    labeling_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LabelArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, conflicts_with_all = ["seed", "p_near"])]
    from: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Probability of a near edge, as `p/q`.
    #[arg(long, default_value = "1/2")]
    p_near: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CapsArgs {
    #[arg(long)]
    rmax: Option<i64>,
    #[arg(long)]
    tmax: Option<i64>,
}

impl CapsArgs {
    fn caps(&self, n: usize) -> Result<SearchCaps> {
        let default = SearchCaps::default_for(n);
        Ok(SearchCaps::new(
            self.rmax.unwrap_or(default.r_max),
            self.tmax.unwrap_or(default.t_max),
        )?)
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labeling: PathBuf,
    /// Fixed range; requires `--t`.
    #[arg(long, requires = "t")]
    r: Option<i64>,
    #[arg(long, requires = "r")]
    t: Option<i64>,
    /// Search all thresholds up to the caps (the default without `--r/--t`).
    #[arg(long, conflicts_with = "r")]
    exists: bool,
    #[command(flatten)]
    caps: CapsArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckTotalArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    sample: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    caps: CapsArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphClass {
    Tree,
    Cycle,
    Fan,
    Hex,
    Octsquare,
    Girth10,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long)]
    class: GraphClass,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labeling: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExactArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Where to write the unit interval representation, if one exists.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    /// Vertex coloring to threshold coloring (all edges far, t = 0).
    Vc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: i64,
        /// Also decide the instance.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Threshold coloring to the proper-interval sandwich problem.
    Sandwich {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        /// Also decide the instance by enumeration.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CubeGrid {
    Square,
    Hex,
    Octsquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CubeMethod {
    /// Whole grid, all cubes on one plane.
    Base,
    /// Geometric construction for square and hexagonal grids.
    Direct,
    /// Lift the base layout by a threshold coloring.
    Lift,
}

#[derive(Debug, Args)]
struct CubesArgs {
    #[arg(long)]
    grid: CubeGrid,
    #[arg(long, default_value_t = 1)]
    rows: usize,
    #[arg(long, default_value_t = 1)]
    cols: usize,
    #[arg(long)]
    subgraph: Option<PathBuf>,
    /// Defaults to `base` without a subgraph, else `direct` (`lift` for octsquare).
    #[arg(long)]
    method: Option<CubeMethod>,
    #[arg(long, default_value = "1/4")]
    delta: String,
    #[arg(long, default_value = "1/2")]
    epsilon: String,
    /// Output path ending in `.obj` or `.json`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labeling: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
}

/// Exit status and one-line summary of a finished command.
struct Outcome {
    code: i32,
    summary: String,
}

impl Outcome {
    fn ok(summary: impl Into<String>) -> Self {
        Outcome {
            code: 0,
            summary: summary.into(),
        }
    }

    fn negative(summary: impl Into<String>) -> Self {
        Outcome {
            code: 1,
            summary: summary.into(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 success or feasible, 1 infeasible, 2 usage or IO error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    ARTIFACT_ON_STDOUT.store(false, Ordering::Relaxed);
    let mut manifest = RunManifest::new(
        args.iter()
            .map(|a| a.to_string_lossy().into_owned())
            .collect(),
    );
    let result = dispatch(&cli, &mut manifest);
    let code = match result {
        Ok(outcome) => {
            if ARTIFACT_ON_STDOUT.load(Ordering::Relaxed) {
                eprintln!("{}", outcome.summary);
            } else {
                println!("{}", outcome.summary);
            }
            manifest.finish(outcome.summary);
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            manifest.finish(format!("error: {e:#}"));
            2
        }
    };
    if let Err(e) = manifest.emit(cli.manifest.as_deref()) {
        eprintln!("error: {e:#}");
        return 2;
    }
    code
}

fn dispatch(cli: &Cli, m: &mut RunManifest) -> Result<Outcome> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Label(a) => label(a, m),
        Command::Solve(a) => solve(a, m),
        Command::CheckTotal(a) => check_total(a, cli.threads, m),
        Command::Construct(a) => construct(a, m),
        Command::Exact(a) => exact(a, m),
        Command::Reduce(r) => reduce(r, m),
        Command::Cubes(a) => cubes(a, m),
        Command::Verify(a) => verify_cmd(a, m),
    }
}

/// Set when an artifact went to stdout; the summary then goes to stderr.
static ARTIFACT_ON_STDOUT: AtomicBool = AtomicBool::new(false);

/// Writes `text` to `out`, or prints it when no path is given.
fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            ARTIFACT_ON_STDOUT.store(true, Ordering::Relaxed);
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(m: &mut RunManifest, path: &Path) -> Result<Graph> {
    m.record_input(path)?;
    read_json::<GraphFile>(path)?.to_graph()
}

fn load_labeling(m: &mut RunManifest, path: &Path, g: &Graph) -> Result<EdgeLabeling> {
    m.record_input(path)?;
    read_json::<LabelingFile>(path)?.to_labeling(g)
}

fn grid(kind: GridKind, rows: usize, cols: usize) -> Result<Graph> {
    Ok(generate_grid(GridSpec::new(kind, rows, cols)?)?)
}

fn generate(a: &GenerateArgs) -> Result<Outcome> {
    let mut gadget_labeling = None;
    let g = match a.kind {
        GraphKind::Square => grid(GridKind::Square, a.rows, a.cols)?,
        GraphKind::Triangular => grid(GridKind::Triangular, a.rows, a.cols)?,
        GraphKind::Hex => grid(GridKind::Hexagonal, a.rows, a.cols)?,
        GraphKind::Octsquare => grid(GridKind::OctagonalSquare, a.rows, a.cols)?,
        GraphKind::SquareTriangle => grid(GridKind::SquareTriangle, a.rows, a.cols)?,
        GraphKind::Path => Graph::path(a.n),
        GraphKind::Cycle => Graph::cycle(a.n)?,
        GraphKind::Star => Graph::star(a.n),
        GraphKind::Fan => Graph::fan(a.n),
        GraphKind::Complete => Graph::complete(a.n),
        GraphKind::GadgetK4 | GraphKind::GadgetTriangular | GraphKind::GadgetSquareTriangle => {
            let (g, l) = match a.kind {
                GraphKind::GadgetK4 => gadget_k4_cycle(),
                GraphKind::GadgetTriangular => gadget_triangular(),
                _ => gadget_square_triangle(),
            };
            gadget_labeling = Some(LabelingFile::from_labeling(&g, &l));
            g
        }
    };
    match (&a.labeling_out, gadget_labeling) {
        (Some(path), Some(l)) => write_out(Some(path), &to_json(&l)?)?,
        (Some(_), None) => bail!("--labeling-out only applies to gadgets"),
        _ => {}
    }
    write_out(a.out.as_deref(), &to_json(&GraphFile::from_graph(&g))?)?;
    Ok(Outcome::ok(format!(
        "graph: {} vertices, {} edges",
        g.n(),
        g.edge_count()
    )))
}

fn label(a: &LabelArgs, m: &mut RunManifest) -> Result<Outcome> {
    let g = load_graph(m, &a.graph)?;
    let l = match (&a.from, a.seed) {
        (Some(path), _) => load_labeling(m, path, &g)?,
        (None, Some(seed)) => {
            m.seed = Some(seed);
            label_random(&g, parse_rational(&a.p_near)?, seed)?
        }
        (None, None) => bail!("random labelings need --seed (or pass --from FILE)"),
    };
    write_out(
        a.out.as_deref(),
        &to_json(&LabelingFile::from_labeling(&g, &l))?,
    )?;
    Ok(Outcome::ok(format!(
        "labeling: {} near, {} far",
        l.near_count(),
        l.far_count()
    )))
}

fn solve(a: &SolveArgs, m: &mut RunManifest) -> Result<Outcome> {
    let g = load_graph(m, &a.graph)?;
    let l = load_labeling(m, &a.labeling, &g)?;
    let (found, bound) = match (a.r, a.t) {
        (Some(r), Some(t)) => (solve_fixed(&g, &l, r, t)?, format!("r = {r}, t = {t}")),
        _ => {
            let caps = a.caps.caps(g.n())?;
            let outcome = solve_exists(&g, &l, caps)?;
            (
                outcome.coloring().cloned(),
                format!("r <= {}, t <= {}", caps.r_max, caps.t_max),
            )
        }
    };
    match found {
        Some(c) => {
            write_out(
                a.out.as_deref(),
                &to_json(&ColoringFile::from_coloring(&c))?,
            )?;
            Ok(Outcome::ok(format!(
                "found: ({}, {})-threshold coloring",
                c.range(),
                c.threshold()
            )))
        }
        None => Ok(Outcome::negative(format!("infeasible for {bound}"))),
    }
}

#[derive(Serialize)]
struct TotalFile {
    labelings_checked: usize,
    colorable: bool,
    r_max: i64,
    t_max: i64,
    failures: Vec<LabelingFile>,
}

fn check_total(a: &CheckTotalArgs, threads: usize, m: &mut RunManifest) -> Result<Outcome> {
    let g = load_graph(m, &a.graph)?;
    let caps = a.caps.caps(g.n())?;
    let mode = match (a.sample, a.seed) {
        (Some(count), Some(seed)) => {
            m.seed = Some(seed);
            TotalMode::Sampled { seed, count }
        }
        _ => TotalMode::Exhaustive,
    };
    let report = parallel::check_total(&g, caps, mode, threads)?;
    let file = TotalFile {
        labelings_checked: report.labelings_checked,
        colorable: report.is_colorable(),
        r_max: caps.r_max,
        t_max: caps.t_max,
        failures: report
            .failures
            .iter()
            .map(|(l, _)| LabelingFile::from_labeling(&g, l))
            .collect(),
    };
    if let Some(out) = &a.out {
        write_out(Some(out), &to_json(&file)?)?;
    }
    let summary = format!(
        "checked {} labelings, {} without a coloring (r <= {}, t <= {})",
        report.labelings_checked,
        report.failures.len(),
        caps.r_max,
        caps.t_max
    );
    Ok(if report.is_colorable() {
        Outcome::ok(summary)
    } else {
        Outcome::negative(summary)
    })
}

fn construct(a: &ConstructArgs, m: &mut RunManifest) -> Result<Outcome> {
    let g = load_graph(m, &a.graph)?;
    let l = load_labeling(m, &a.labeling, &g)?;
    let c = match a.class {
        GraphClass::Tree => color_tree(&g, &l),
        GraphClass::Cycle => color_cycle(&g, &l),
        GraphClass::Fan => color_fan(&g, &l),
        GraphClass::Hex => color_hex_grid(&g, &l),
        GraphClass::Octsquare => color_octsquare_grid(&g, &l),
        GraphClass::Girth10 => color_girth10(&g, &l),
    }?;
    if let Verdict::Violations(bad) = verify(&g, &l, &c)? {
        bail!("constructed coloring violates {} edges", bad.len());
    }
    write_out(
        a.out.as_deref(),
        &to_json(&ColoringFile::from_coloring(&c))?,
    )?;
    Ok(Outcome::ok(format!(
        "valid ({}, {})-threshold coloring",
        c.range(),
        c.threshold()
    )))
}

fn exact(a: &ExactArgs, m: &mut RunManifest) -> Result<Outcome> {
    let h = load_graph(m, &a.graph)?;
    match recognize(&h) {
        Some(rep) => {
            if let Some(out) = &a.out {
                write_out(Some(out), &to_json(&RepFile::from_rep(&rep))?)?;
            }
            Ok(Outcome::ok("proper-interval: yes"))
        }
        None => Ok(Outcome::negative("proper-interval: no")),
    }
}

#[derive(Serialize)]
struct VcFile {
    graph: GraphFile,
    labeling: LabelingFile,
    r: i64,
    t: i64,
}

fn reduce(r: &ReduceCommand, m: &mut RunManifest) -> Result<Outcome> {
    match r {
        ReduceCommand::Vc {
            graph,
            k,
            solve,
            out,
        } => {
            let g = load_graph(m, graph)?;
            let (h, l, r, t) = vc_to_threshold(&g, *k)?;
            let file = VcFile {
                graph: GraphFile::from_graph(&h),
                labeling: LabelingFile::from_labeling(&h, &l),
                r,
                t,
            };
            write_out(out.as_deref(), &to_json(&file)?)?;
            if !solve {
                return Ok(Outcome::ok(format!("instance: r = {r}, t = {t}")));
            }
            Ok(match solve_fixed(&h, &l, r, t)? {
                Some(_) => Outcome::ok(format!("{k}-colorable: yes")),
                None => Outcome::negative(format!("{k}-colorable: no")),
            })
        }
        ReduceCommand::Sandwich {
            graph,
            labeling,
            solve,
            out,
        } => {
            let g = load_graph(m, graph)?;
            let l = load_labeling(m, labeling, &g)?;
            let inst = threshold_to_sandwich(&g, &l)?;
            write_out(
                out.as_deref(),
                &to_json(&SandwichFile::from_instance(&inst))?,
            )?;
            let sizes = format!(
                "{} mandatory, {} universal edges",
                inst.mandatory().len(),
                inst.universal().len()
            );
            if !solve {
                return Ok(Outcome::ok(format!("instance: {sizes}")));
            }
            Ok(match sandwich_bruteforce(&inst)? {
                Some((h, _)) => Outcome::ok(format!("sandwich: yes ({} edges)", h.edge_count())),
                None => Outcome::negative("sandwich: no"),
            })
        }
    }
}

fn cubes(a: &CubesArgs, m: &mut RunManifest) -> Result<Outcome> {
    let kind = match a.grid {
        CubeGrid::Square => GridKind::Square,
        CubeGrid::Hex => GridKind::Hexagonal,
        CubeGrid::Octsquare => GridKind::OctagonalSquare,
    };
    let spec = GridSpec::new(kind, a.rows, a.cols)?;
    let host = generate_grid(spec)?;
    let sub = match &a.subgraph {
        Some(path) => {
            m.record_input(path)?;
            read_json::<SubgraphFile>(path)?.to_subgraph(&host)?
        }
        None => Subgraph::full(&host),
    };
    let method = a.method.unwrap_or(match (&a.subgraph, a.grid) {
        (None, _) => CubeMethod::Base,
        (Some(_), CubeGrid::Octsquare) => CubeMethod::Lift,
        (Some(_), _) => CubeMethod::Direct,
    });
    let layout: CubeLayout = match (method, a.grid) {
        (CubeMethod::Base, _) => {
            if a.subgraph.is_some() {
                bail!("the base layout represents the whole grid; drop --subgraph or pick another method");
            }
            base_layout(spec)?
        }
        (CubeMethod::Direct, CubeGrid::Square) => {
            direct_square(&host, &sub, parse_rational(&a.delta)?)?
        }
        (CubeMethod::Direct, CubeGrid::Hex) => direct_hex(&host, &sub)?,
        (CubeMethod::Direct, CubeGrid::Octsquare) => {
            bail!("no direct construction for octagonal-square grids")
        }
        (CubeMethod::Lift, CubeGrid::Square) => {
            bail!("lifting needs a threshold colorer; square grids have none")
        }
        (CubeMethod::Lift, grid) => {
            let l = EdgeLabeling::from_fn(&host, |u, v| {
                if sub.contains_edge(u, v) {
                    Label::Near
                } else {
                    Label::Far
                }
            });
            let col = match grid {
                CubeGrid::Hex => color_hex_grid(&host, &l)?,
                _ => color_octsquare_grid(&host, &l)?,
            };
            let lifted = lift(&base_layout(spec)?, &col, parse_rational(&a.epsilon)?)?;
            let kept = lifted
                .positions()
                .iter()
                .filter(|(v, _)| sub.vertices().contains(v))
                .map(|(&v, &p)| (v, p))
                .collect();
            CubeLayout::new(lifted.side(), kept)?
        }
    };
    let report = validate(&layout, &sub.as_graph(&host));
    if !report.is_clean() {
        bail!(
            "layout failed validation: {} missing, {} spurious, {} overlapping",
            report.missing.len(),
            report.spurious.len(),
            report.overlaps.len()
        );
    }
    write_out(Some(&a.out), &layout_bytes(&layout, &a.out)?)?;
    Ok(Outcome::ok(format!(
        "layout: {} cubes, {} contacts, validated",
        layout.len(),
        report.contacts.len()
    )))
}

fn verify_cmd(a: &VerifyArgs, m: &mut RunManifest) -> Result<Outcome> {
    let g = load_graph(m, &a.graph)?;
    let l = load_labeling(m, &a.labeling, &g)?;
    m.record_input(&a.coloring)?;
    let c = read_json::<ColoringFile>(&a.coloring)?.to_coloring()?;
    Ok(match verify(&g, &l, &c)? {
        Verdict::Valid => Outcome::ok(format!(
            "valid ({}, {})-threshold coloring",
            c.range(),
            c.threshold()
        )),
        Verdict::Violations(bad) => {
            let list: Vec<String> = bad.iter().map(|(u, v)| format!("({u}, {v})")).collect();
            Outcome::negative(format!(
                "invalid: {} violations {}",
                bad.len(),
                list.join(" ")
            ))
        }
    })
}
