//! Command-line front end: diagram predicates, mutation, cells, triangles,
//! census enumeration, the mutation graph, SVG rendering, and the
//! verification suites.
//!
//! Every non-render subcommand prints JSON on stdout (or to `--out`).
//! Exit codes: 0 success, 1 domain-level negative (a property of the data
//! fails), 2 usage, IO, or parse errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dgon::ar::{b_inv, b_map, mutation_triangle, ArVertex, TriangleSummand};
use dgon::cells::{CellData, CellDecomposition, CellVertex, SideElement};
use dgon::diagram::ElementDto;
use dgon::mutation::{Direction, Mutator};
use dgon::ptolemy::check_ptolemy;
use dgon::render::{render_svg, RenderSpec};
use dgon::Diagram;
use dgon_census::enumerate::{
    enumerate_maximal_noncrossing, enumerate_torsion_parts, Method,
};
use dgon_census::io::census_bytes;
use dgon_census::verify::{criterion_of_name, run_criterion, SuiteReport, SUITE_NAMES};
use dgon_census::{build_mutation_graph, Alphabet};

#[derive(Parser)]
#[command(name = "dgon", version, about = "Arc diagrams of the 2n-gon: torsion parts, cells, and mutation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a diagram satisfies the Ptolemy axioms
    Check(InputArgs),
    /// Compute the set of elements crossing nothing in the input diagram
    Nc(InputArgs),
    /// Mutate a diagram with respect to a non-crossing subdiagram
    Mutate(MutateArgs),
    /// Decompose the polygon into the cells of a non-crossing diagram
    Cells(InputArgs),
    /// Compute the mutation triangle of an element
    Triangle(TriangleArgs),
    /// Enumerate Ptolemy or maximal non-crossing diagrams as JSONL
    Enumerate(EnumerateArgs),
    /// Close a set of seed diagrams under mutation in both directions
    Graph(GraphArgs),
    /// Render a diagram as a deterministic SVG
    Render(RenderArgs),
    /// Run the verification suites
    Verify(VerifyArgs),
    /// Translate between quiver coordinates and arc elements
    Arvertex(ArvertexArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Diagram JSON file, or - for stdin
    #[arg(long)]
    input: String,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct MutateArgs {
    /// Diagram X to mutate, or - for stdin
    #[arg(long)]
    input: String,
    /// Non-crossing diagram D governing the mutation
    #[arg(long = "with")]
    with_d: String,
    #[arg(long, value_enum)]
    dir: DirArg,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Plus,
    Minus,
}

impl From<DirArg> for Direction {
    fn from(d: DirArg) -> Direction {
        match d {
            DirArg::Plus => Direction::Plus,
            DirArg::Minus => Direction::Minus,
        }
    }
}

#[derive(Args)]
struct TriangleArgs {
    /// Non-crossing diagram D, or - for stdin
    #[arg(long)]
    input: String,
    /// Element JSON, e.g. {"kind":"pair","a":0,"b":3}
    #[arg(long)]
    element: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    kind: EnumKind,
    /// Enumeration strategy for --kind ptolemy
    #[arg(long, value_enum, default_value = "exhaustive")]
    method: MethodArg,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Ptolemy,
    Maximal,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exhaustive,
    Closure,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Exhaustive => Method::Exhaustive,
            MethodArg::Closure => Method::Closure,
        }
    }
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    n: u32,
    /// Seed diagram JSON file, - for stdin, or "all" for every Ptolemy
    /// diagram at this rank
    #[arg(long)]
    seed: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct RenderArgs {
    /// Diagram JSON file, or - for stdin
    #[arg(long)]
    input: String,
    /// Subdiagram stroked thick
    #[arg(long)]
    highlight: Option<String>,
    /// Shade the cells of the highlight (or of the diagram itself)
    #[arg(long)]
    shade_cells: bool,
    /// Canvas size in pixels
    #[arg(long, default_value_t = 480)]
    size: u32,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Anchor rank of the suites; the contracts are pinned at 4
    #[arg(long, default_value_t = 4)]
    n: u32,
    /// all, a suite name, or a criterion number 1..=11
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ArvertexArgs {
    #[arg(long)]
    n: u32,
    /// Quiver coordinate such as "[0,4]+" mapped to an arc element
    #[arg(long, conflicts_with = "from_arc")]
    to_arc: Option<String>,
    /// Element JSON mapped to a quiver coordinate
    #[arg(long)]
    from_arc: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

/// A run that parsed its inputs but answered "no": the payload still goes
/// to the out channel, the exit code becomes 1.
struct DomainNo {
    payload: String,
    message: String,
}

enum Run {
    Ok(String),
    No(DomainNo),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, result) = match dispatch(cli.command) {
        Ok((out, run)) => (out, run),
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    let (payload, code) = match result {
        Run::Ok(payload) => (payload, ExitCode::SUCCESS),
        Run::No(no) => {
            eprintln!("{}", no.message);
            (no.payload, ExitCode::from(1))
        }
    };
    if let Err(err) = emit(out.as_deref(), &payload) {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }
    code
}

fn dispatch(cmd: Command) -> Result<(Option<String>, Run)> {
    match cmd {
        Command::Check(a) => Ok((a.out.clone(), cmd_check(&a)?)),
        Command::Nc(a) => Ok((a.out.clone(), cmd_nc(&a)?)),
        Command::Mutate(a) => Ok((a.out.clone(), cmd_mutate(&a)?)),
        Command::Cells(a) => Ok((a.out.clone(), cmd_cells(&a)?)),
        Command::Triangle(a) => Ok((a.out.clone(), cmd_triangle(&a)?)),
        Command::Enumerate(a) => Ok((a.out.clone(), cmd_enumerate(&a)?)),
        Command::Graph(a) => Ok((a.out.clone(), cmd_graph(&a)?)),
        Command::Render(a) => Ok((a.out.clone(), cmd_render(&a)?)),
        Command::Verify(a) => Ok((a.out.clone(), cmd_verify(&a)?)),
        Command::Arvertex(a) => Ok((a.out.clone(), cmd_arvertex(&a)?)),
    }
}

fn emit(out: Option<&str>, payload: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, payload).with_context(|| format!("writing {path}")),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_diagram(path: &str) -> Result<Diagram> {
    let text = read_source(path)?;
    Diagram::from_json_str(&text).map_err(|e| anyhow!("invalid diagram in {path}: {e}"))
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn element_json(e: &dgon::ArcElement) -> Value {
    serde_json::to_value(ElementDto::from(e)).expect("element serialization is infallible")
}

fn diagram_payload(d: &Diagram) -> String {
    let mut s = serde_json::to_string(d).expect("diagram serialization is infallible");
    s.push('\n');
    s
}

fn cmd_check(a: &InputArgs) -> Result<Run> {
    let d = load_diagram(&a.input)?;
    match check_ptolemy(&d) {
        Ok(()) => Ok(Run::Ok(json_line(&json!("ptolemy")))),
        Err(v) => {
            let payload = json_line(&json!({
                "axiom": v.axiom.to_string(),
                "witnesses": [element_json(&v.witnesses.0), element_json(&v.witnesses.1)],
                "missing": v.missing.iter().map(element_json).collect::<Vec<_>>(),
            }));
            Ok(Run::No(DomainNo { payload, message: format!("not a Ptolemy diagram: {v}") }))
        }
    }
}

fn cmd_nc(a: &InputArgs) -> Result<Run> {
    let d = load_diagram(&a.input)?;
    Ok(Run::Ok(diagram_payload(&d.nc())))
}

fn cmd_mutate(a: &MutateArgs) -> Result<Run> {
    let x = load_diagram(&a.input)?;
    let d = load_diagram(&a.with_d)?;
    let mutator = match Mutator::new(&d) {
        Ok(m) => m,
        Err(e) => return domain_error(format!("subdiagram is not non-crossing: {e}")),
    };
    match mutator.mutate_diagram(&x, a.dir.into()) {
        Ok(image) => Ok(Run::Ok(diagram_payload(&image))),
        Err(e) => domain_error(format!("cannot mutate: {e}")),
    }
}

fn domain_error(message: String) -> Result<Run> {
    let payload = json_line(&json!({ "error": message }));
    Ok(Run::No(DomainNo { payload, message }))
}

fn cell_vertex_json(v: CellVertex) -> Value {
    match v {
        CellVertex::Boundary(b) => json!(b),
        CellVertex::Center => json!("c"),
    }
}

fn cell_json(cell: &CellData) -> Value {
    let verts: Vec<Value> = cell.verts().iter().map(|&v| cell_vertex_json(v)).collect();
    let sides: Vec<Value> = cell
        .sides()
        .iter()
        .map(|side| {
            let provenance: Vec<Value> = side
                .realizes
                .iter()
                .map(|s| match s {
                    SideElement::Edge(e) => json!({"kind": "edge", "a": e.a(), "b": e.a() + 1}),
                    SideElement::Element(r) => element_json(&r.source()),
                })
                .collect();
            json!(provenance)
        })
        .collect();
    json!({"verts": verts, "sides": sides})
}

fn cmd_cells(a: &InputArgs) -> Result<Run> {
    let d = load_diagram(&a.input)?;
    let cells = match CellDecomposition::build(&d) {
        Ok(c) => c,
        Err(e) => return domain_error(format!("cannot build cells: {e}")),
    };
    let list: Vec<Value> = cells
        .pairs()
        .iter()
        .map(|p| {
            json!({
                "cell": cell_json(p.cell()),
                "partner": cell_json(p.partner()),
                "invariant": p.is_invariant(),
            })
        })
        .collect();
    Ok(Run::Ok(json_line(&json!(list))))
}

fn cmd_triangle(a: &TriangleArgs) -> Result<Run> {
    let d = load_diagram(&a.input)?;
    let dto: ElementDto =
        serde_json::from_str(&a.element).map_err(|e| anyhow!("invalid element JSON: {e}"))?;
    let e = dto.into_element(d.n()).map_err(|e| anyhow!("invalid element: {e}"))?;
    match mutation_triangle(&d, &e) {
        Ok(t) => {
            let summands: Vec<Value> = t
                .summands
                .iter()
                .map(|s| match s {
                    TriangleSummand::Zero => json!("zero"),
                    TriangleSummand::Element(e) => element_json(e),
                })
                .collect();
            Ok(Run::Ok(json_line(&json!({
                "first": element_json(&t.first),
                "summands": summands,
                "third": element_json(&t.third),
            }))))
        }
        Err(e) => domain_error(format!("cannot form the triangle: {e}")),
    }
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<Run> {
    let alpha = Alphabet::new(a.n).map_err(|e| anyhow!("{e}"))?;
    let masks = match a.kind {
        EnumKind::Ptolemy => {
            enumerate_torsion_parts(&alpha, a.method.into()).map_err(|e| anyhow!("{e}"))?
        }
        EnumKind::Maximal => enumerate_maximal_noncrossing(&alpha).map_err(|e| anyhow!("{e}"))?,
    };
    let bytes = census_bytes(&alpha, &masks);
    Ok(Run::Ok(String::from_utf8(bytes).expect("census output is UTF-8")))
}

fn cmd_graph(a: &GraphArgs) -> Result<Run> {
    let alpha = Alphabet::new(a.n).map_err(|e| anyhow!("{e}"))?;
    let seeds: Vec<u64> = if a.seed == "all" {
        enumerate_torsion_parts(&alpha, Method::Exhaustive).map_err(|e| anyhow!("{e}"))?
    } else {
        let d = load_diagram(&a.seed)?;
        if d.n() != a.n {
            bail!("seed diagram has rank {}, expected {}", d.n(), a.n);
        }
        vec![alpha.mask_of(&d).map_err(|e| anyhow!("{e}"))?]
    };
    match build_mutation_graph(&alpha, &seeds) {
        Ok(g) => {
            let mut payload = g.to_json();
            payload.push('\n');
            Ok(Run::Ok(payload))
        }
        Err(e) => domain_error(format!("cannot build the graph: {e}")),
    }
}

fn cmd_render(a: &RenderArgs) -> Result<Run> {
    let diagram = load_diagram(&a.input)?;
    let highlight = a.highlight.as_deref().map(load_diagram).transpose()?;
    let spec = RenderSpec { diagram, highlight, shade_cells: a.shade_cells, size: a.size };
    match render_svg(&spec) {
        Ok(svg) => Ok(Run::Ok(svg)),
        Err(e) => domain_error(format!("cannot render: {e}")),
    }
}

fn parse_suite(s: &str) -> Result<Vec<u8>> {
    if s == "all" {
        return Ok((1..=11).collect());
    }
    if let Some(c) = criterion_of_name(s) {
        return Ok(vec![c]);
    }
    if let Ok(c) = s.parse::<u8>() {
        if (1..=11).contains(&c) {
            return Ok(vec![c]);
        }
    }
    let names: Vec<&str> = SUITE_NAMES.iter().map(|&(_, n)| n).collect();
    bail!("unknown suite {s:?}; expected all, 1..=11, or one of {}", names.join(", "))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Run> {
    if a.n != 4 {
        bail!("the verification suites are anchored at rank 4 (higher ranks are exercised inside the suites)");
    }
    let criteria = parse_suite(&a.suite)?;
    let mut reports: Vec<SuiteReport> = Vec::new();
    for c in criteria {
        let report = run_criterion(c);
        eprintln!(
            "criterion {:>2} {:<22} {} ({} checked, {} ms){}",
            report.criterion,
            report.name,
            if report.passed { "pass" } else { "FAIL" },
            report.checked,
            report.millis,
            if report.passed { String::new() } else { format!(": {}", report.details) },
        );
        reports.push(report);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let payload = {
        let mut s = serde_json::to_string_pretty(&reports).expect("report serialization is infallible");
        s.push('\n');
        s
    };
    if all_passed {
        Ok(Run::Ok(payload))
    } else {
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("{} ({})", r.name, r.criterion))
            .collect();
        Ok(Run::No(DomainNo { payload, message: format!("failed suites: {}", failed.join(", ")) }))
    }
}

fn cmd_arvertex(a: &ArvertexArgs) -> Result<Run> {
    match (&a.to_arc, &a.from_arc) {
        (Some(coord), None) => {
            let v = ArVertex::parse(a.n, coord).map_err(|e| anyhow!("invalid coordinate {coord:?}: {e}"))?;
            match b_map(&v) {
                Ok(e) => Ok(Run::Ok(json_line(&element_json(&e)))),
                Err(e) => domain_error(format!("{v} is outside the cluster region: {e}")),
            }
        }
        (None, Some(elem)) => {
            let dto: ElementDto =
                serde_json::from_str(elem).map_err(|e| anyhow!("invalid element JSON: {e}"))?;
            let e = dto.into_element(a.n).map_err(|e| anyhow!("invalid element: {e}"))?;
            Ok(Run::Ok(json_line(&json!(b_inv(&e).to_string()))))
        }
        _ => bail!("exactly one of --to-arc or --from-arc is required"),
    }
}
