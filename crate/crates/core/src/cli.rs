//! The `chi1` command line: argument parsing, input detection and the report
//! printed by each subcommand.
//!
//! Exit codes: 0 success or exact answer, 1 usage or input error, 2 unknown
//! or bracketed answer, 3 internal-consistency failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::budget::{Budget, Verdict};
use crate::corpus::corpus_verify;
use crate::error::{Error, Result};
use crate::factors::prop2_construct;
use crate::gadgets::{build_counterexample, export, tutte_fragment, verify_claim_two_factor, verify_counterexample, LowerBound, Port};
use crate::graph::{graph6::parse_graph6, is_bipartite, json::parse_json, EdgeId, Graph};
use crate::planar::format::{emit_embedding, parse_embedding};
use crate::planar::{check_planarity, dual, is_triangulation, trace_faces, Embedding};
use crate::selection::{build_assignment, first_violation, guarantees_bipartite, is_minimal, minimalize, Assignment, SelectionSet};
use crate::solver::{chi1, decide_robust_bipartite, decide_robust_bipartite_triangulation, Status, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Node budget used by `verify-counterexample` when `--budget` is absent.
pub const DEFAULT_COUNTEREXAMPLE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "chi1", version, about = "Robust chromatic number of planar graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Search budget in expanded nodes (unlimited when absent).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Run single-threaded so witnesses and logs come out in canonical order.
    #[arg(long, global = true)]
    canonical: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetKind {
    Fragment,
    Counterexample,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Robust chromatic number of a graph (graph6, JSON or embedding).
    Chi1 { input: String },
    /// Decide whether one selection set leaves the graph bipartite.
    Decide2 { input: String },
    /// Geometric dual of a plane embedding.
    Dual { input: String },
    /// Face walks and Euler count of an embedding.
    Faces { input: String },
    /// Check an edge set for being a selection set and print an assignment.
    CheckSelection { graph: String, edges: String },
    /// Shrink a bipartiteness-guaranteeing selection set to a minimal one.
    Minimalize { graph: String, edges: String },
    /// Selection set of a triangulation from a perfect matching of its dual.
    Prop2 {
        input: String,
        /// Perfect matchings tried before giving up.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Emit the fragment or the assembled counterexample.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        #[arg(long, default_value_t = 0)]
        expansion: usize,
    },
    /// Check the two-factor claim on the fragment.
    VerifyClaim,
    /// Run the lower-bound argument on the counterexample.
    VerifyCounterexample {
        #[arg(long, default_value_t = 0)]
        expansion: usize,
    },
    /// Run the invariant suite over all graphs up to the given order.
    CorpusVerify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Skip the triangulation sweep.
        #[arg(long)]
        skip_triangulations: bool,
    },
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Embedded(Embedding),
}

impl Input {
    pub fn graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Embedded(e) => e.graph(),
        }
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Input::Graph(_) => None,
            Input::Embedded(e) => Some(e),
        }
    }
}

/// Detects the input format: `{` starts adjacency JSON, an `n m` header
/// starts the embedding format, anything else is graph6.
pub fn parse_input(text: &str) -> Result<Input> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Input("empty input".into()))?;
    if first.starts_with('{') {
        return parse_json(text).map(Input::Graph);
    }
    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() == 2 && header.iter().all(|t| t.parse::<usize>().is_ok()) {
        return parse_embedding(text).map(Input::Embedded);
    }
    parse_graph6(first).map(Input::Graph)
}

/// Edge ids as a JSON array or a comma/whitespace separated list.
pub fn parse_edge_list(text: &str) -> Result<BTreeSet<EdgeId>> {
    let t = text.trim();
    if t.starts_with('[') {
        let v: Vec<EdgeId> = serde_json::from_str(t).map_err(|e| Error::Input(format!("edge list: {e}")))?;
        return Ok(v.into_iter().collect());
    }
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<EdgeId>().map_err(|_| Error::Input(format!("edge list: bad edge id {s:?}"))))
        .collect()
}

/// `v -> (u,w)` per vertex, `v -> -` for unassigned vertices.
pub fn format_assignment(g: &Graph, a: &Assignment) -> String {
    let mut out = String::new();
    for (v, slot) in a.iter().enumerate() {
        match slot {
            Some(e) => {
                let (x, y) = g.endpoints(*e);
                writeln!(out, "{v} -> ({x},{y})").unwrap();
            }
            None => writeln!(out, "{v} -> -").unwrap(),
        }
    }
    out
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = if cli.canonical {
        match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Internal(format!("thread pool: {e}"))),
        }
    } else {
        dispatch(&cli)
    };
    match result {
        Ok(Report { body, code }) => {
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::Construction(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

struct Report {
    body: String,
    code: i32,
}

impl Report {
    fn new(body: String, code: i32) -> Self {
        let body = if body.ends_with('\n') { body } else { body + "\n" };
        Report { body, code }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<Input> {
    parse_input(&read_source(path)?)
}

fn load_embedding(path: &str) -> Result<Embedding> {
    match load(path)? {
        Input::Embedded(e) => Ok(e),
        Input::Graph(_) => Err(Error::Input(format!("{path}: an embedding (rotation system) is required"))),
    }
}

/// The edge argument is a file when one exists at that path, else literal.
fn load_edges(arg: &str, graph_path: &str) -> Result<BTreeSet<EdgeId>> {
    if arg == "-" && graph_path == "-" {
        return Err(Error::Input("graph and edges cannot both come from stdin".into()));
    }
    let text = if arg == "-" || std::path::Path::new(arg).is_file() { read_source(arg)? } else { arg.to_string() };
    parse_edge_list(&text)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn dot_unsupported(cmd: &str) -> Error {
    Error::Input(format!("{cmd}: dot output is not available; use json or text"))
}

fn graph_dot(name: &str, g: &Graph, highlight: &BTreeSet<EdgeId>) -> String {
    let mut s = format!("graph {name} {{\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if highlight.contains(&e) {
            writeln!(s, "  {u} -- {v} [label={e}, color=red, penwidth=3];").unwrap();
        } else {
            writeln!(s, "  {u} -- {v} [label={e}];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Re-checks a witness through the selection and colouring checks only,
/// independent of the search that produced it.
fn revalidate(g: &Graph, w: &Witness) -> Result<Assignment> {
    let s = w.selection.edges();
    if let Some(v) = first_violation(g, s)? {
        return Err(Error::Internal(format!("printed witness is not a selection set: {v}")));
    }
    let a = build_assignment(g, s)?;
    if !w.coloring.is_proper(&g.without_edges(s)) {
        return Err(Error::Internal("printed witness colouring is not proper".into()));
    }
    Ok(a)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let budget = Budget::new(cli.budget);
    match &cli.command {
        Command::Chi1 { input } => cmd_chi1(cli.format, &load(input)?, &budget),
        Command::Decide2 { input } => cmd_decide2(cli.format, &load(input)?, &budget),
        Command::Dual { input } => cmd_dual(cli.format, &load_embedding(input)?),
        Command::Faces { input } => cmd_faces(cli.format, &load_embedding(input)?),
        Command::CheckSelection { graph, edges } => {
            let g = load(graph)?;
            cmd_check_selection(cli.format, g.graph(), &load_edges(edges, graph)?)
        }
        Command::Minimalize { graph, edges } => {
            let g = load(graph)?;
            cmd_minimalize(cli.format, g.graph(), &load_edges(edges, graph)?)
        }
        Command::Prop2 { input, cap } => cmd_prop2(cli.format, &load_embedding(input)?, *cap),
        Command::Gadget { kind, expansion } => cmd_gadget(cli.format, *kind, *expansion),
        Command::VerifyClaim => cmd_verify_claim(cli.format),
        Command::VerifyCounterexample { expansion } => {
            let budget = Budget::new(Some(cli.budget.unwrap_or(DEFAULT_COUNTEREXAMPLE_BUDGET)));
            cmd_verify_counterexample(cli.format, *expansion, &budget)
        }
        Command::CorpusVerify { max_n, skip_triangulations } => cmd_corpus(cli.format, *max_n, !skip_triangulations),
    }
}

fn cmd_chi1(format: Format, input: &Input, budget: &Budget) -> Result<Report> {
    let g = input.graph();
    let r = chi1(g, input.embedding(), budget);
    let assignment = r.witness.as_ref().map(|w| revalidate(g, w)).transpose()?;
    let code = if r.status == Status::Exact { EXIT_OK } else { EXIT_UNKNOWN };
    let body = match format {
        Format::Json => r.to_json(),
        Format::Text => {
            let mut s = match r.status {
                Status::Exact => format!("chi_1 = {}\n", r.lower),
                Status::Bracketed => format!("{} <= chi_1 <= {}\n", r.lower, r.upper),
            };
            writeln!(s, "nodes expanded: {}", r.nodes_expanded).unwrap();
            if let (Some(w), Some(a)) = (&r.witness, &assignment) {
                writeln!(s, "selection: {:?}", w.selection.edges().iter().collect::<Vec<_>>()).unwrap();
                writeln!(s, "coloring: {:?}", w.coloring.colors()).unwrap();
                s.push_str(&format_assignment(g, a));
            }
            s
        }
        Format::Dot => {
            let hl = r.witness.as_ref().map(|w| w.selection.edges().clone()).unwrap_or_default();
            graph_dot("chi1", g, &hl)
        }
    };
    Ok(Report::new(body, code))
}

fn cmd_decide2(format: Format, input: &Input, budget: &Budget) -> Result<Report> {
    let g = input.graph();
    let triangulation = input.embedding().filter(|e| is_triangulation(e));
    let (method, verdict) = match triangulation {
        Some(emb) => {
            let dmap = dual(emb)?;
            if dmap.is_simple() {
                ("spanning_packing", decide_robust_bipartite_triangulation(emb, &dmap, budget)?.map(|p| p.witness))
            } else {
                ("odd_cycle_branching", decide_robust_bipartite(g, budget))
            }
        }
        None => ("odd_cycle_branching", decide_robust_bipartite(g, budget)),
    };
    let (label, code, witness) = match &verdict {
        Verdict::Yes(w) => ("yes", EXIT_OK, Some(w)),
        Verdict::No => ("no", EXIT_OK, None),
        Verdict::Unknown => ("unknown", EXIT_UNKNOWN, None),
    };
    let assignment = witness.map(|w| revalidate(g, w)).transpose()?;
    let body = match format {
        Format::Json => to_json(&json!({
            "verdict": label,
            "method": method,
            "selection": witness.map(|w| w.selection.edges().iter().copied().collect::<Vec<_>>()),
            "coloring": witness.map(|w| w.coloring.colors().to_vec()),
            "nodes_expanded": budget.used(),
            "budget": budget.limit(),
        })),
        Format::Text => {
            let mut s = format!("chi_1 <= 2: {label} ({method}, {} nodes)\n", budget.used());
            if let (Some(w), Some(a)) = (witness, &assignment) {
                writeln!(s, "selection: {:?}", w.selection.edges().iter().collect::<Vec<_>>()).unwrap();
                s.push_str(&format_assignment(g, a));
            }
            s
        }
        Format::Dot => {
            let hl = witness.map(|w| w.selection.edges().clone()).unwrap_or_default();
            graph_dot("decide2", g, &hl)
        }
    };
    Ok(Report::new(body, code))
}

fn cmd_dual(format: Format, emb: &Embedding) -> Result<Report> {
    let d = dual(emb)?;
    let body = match (format, d.embedding()) {
        (Format::Text, Ok(star)) => emit_embedding(star),
        (Format::Dot, Ok(star)) => graph_dot("dual", star.graph(), &BTreeSet::new()),
        (Format::Json, Ok(star)) => to_json(&json!({
            "simple": true,
            "n": star.graph().vertex_count(),
            "edges": star.graph().edges(),
            "primal_to_dual": (0..emb.graph().edge_count()).map(|e| d.dual_edge(e)).collect::<Vec<_>>(),
            "triangulation_dual": is_triangulation(emb),
        })),
        (Format::Json, Err(_)) => to_json(&json!({
            "simple": false,
            "n": d.multigraph().vertex_count(),
            "edges": d.multigraph().edges(),
            "loops": d.multigraph().has_loops(),
            "parallel_edges": d.multigraph().has_parallel_edges(),
        })),
        (_, Err(e)) => return Err(e),
    };
    Ok(Report::new(body, EXIT_OK))
}

fn cmd_faces(format: Format, emb: &Embedding) -> Result<Report> {
    let euler = check_planarity(emb);
    let faces = trace_faces(emb);
    let walks: Vec<Vec<usize>> = faces.walks().iter().map(|w| w.iter().map(|&d| emb.tail(d)).collect()).collect();
    let body = match format {
        Format::Json => to_json(&json!({
            "euler": euler,
            "lengths": faces.lengths(),
            "faces": walks,
            "darts": faces.walks(),
            "isolated_vertices": faces.isolated_vertices(),
        })),
        Format::Text => {
            let mut s = format!(
                "V={} E={} F={} components={} genus={}\n",
                euler.vertices, euler.edges, euler.faces, euler.components, euler.genus
            );
            for (f, w) in walks.iter().enumerate() {
                let vs: Vec<String> = w.iter().map(ToString::to_string).collect();
                writeln!(s, "{f}: {}", vs.join(" ")).unwrap();
            }
            s
        }
        Format::Dot => return Err(dot_unsupported("faces")),
    };
    Ok(Report::new(body, EXIT_OK))
}

fn cmd_check_selection(format: Format, g: &Graph, s: &BTreeSet<EdgeId>) -> Result<Report> {
    for &e in s {
        g.check_edge(e)?;
    }
    let violation = first_violation(g, s)?;
    let assignment = match &violation {
        None => Some(build_assignment(g, s)?),
        Some(_) => None,
    };
    let bipartite = guarantees_bipartite(g, s);
    let code = if violation.is_none() { EXIT_OK } else { EXIT_INPUT };
    let body = match format {
        Format::Json => to_json(&json!({
            "selection": violation.is_none(),
            "edges": s,
            "violation": violation.as_ref().map(ToString::to_string),
            "assignment": assignment.as_ref().map(|a| format_assignment(g, a).lines().map(String::from).collect::<Vec<_>>()),
            "bipartite_after_removal": bipartite,
        })),
        Format::Text => match (&violation, &assignment) {
            (Some(v), _) => format!("not a selection set: {v}\n"),
            (None, Some(a)) => {
                let mut out = format!("selection set of {} edges; bipartite after removal: {bipartite}\n", s.len());
                out.push_str(&format_assignment(g, a));
                out
            }
            (None, None) => unreachable!(),
        },
        Format::Dot => graph_dot("selection", g, s),
    };
    Ok(Report::new(body, code))
}

fn cmd_minimalize(format: Format, g: &Graph, s: &BTreeSet<EdgeId>) -> Result<Report> {
    for &e in s {
        g.check_edge(e)?;
    }
    let min = minimalize(g, s)?;
    if !is_minimal(g, &min) {
        return Err(Error::Internal("minimalised set is not minimal".into()));
    }
    let sel = SelectionSet::with_assignment(g, min.clone())?;
    let assignment = sel.assignment().cloned().unwrap_or_default();
    let removed: Vec<EdgeId> = s.difference(&min).copied().collect();
    let body = match format {
        Format::Json => to_json(&json!({ "input": s, "minimal": min, "dropped": removed })),
        Format::Text => {
            let mut out = format!("minimal: {:?}\ndropped: {:?}\n", min.iter().collect::<Vec<_>>(), removed);
            out.push_str(&format_assignment(g, &assignment));
            out
        }
        Format::Dot => graph_dot("minimal", g, &min),
    };
    Ok(Report::new(body, EXIT_OK))
}

fn cmd_prop2(format: Format, emb: &Embedding, cap: Option<usize>) -> Result<Report> {
    let dmap = dual(emb)?;
    let g = emb.graph();
    let Some(cert) = prop2_construct(emb, &dmap, cap)? else {
        let body = match format {
            Format::Json => to_json(&json!({ "found": false, "cap": cap })),
            _ => "no qualifying perfect matching within the cap\n".to_string(),
        };
        return Ok(Report::new(body, EXIT_UNKNOWN));
    };
    let s = cert.selection.edges();
    let (rest, _) = g.spanning_subgraph(|e| !s.contains(&e));
    if !is_bipartite(&rest).is_bipartite() || first_violation(g, s)?.is_some() {
        return Err(Error::Internal("matching certificate failed re-validation".into()));
    }
    let assignment = build_assignment(g, s)?;
    // |S| <= n < |E| whenever G has more edges than vertices, so G - S keeps an edge.
    let chi1_value = if g.edge_count() > s.len() { 2 } else { 1 };
    let mut cycle_lengths = cert.two_factor.cycle_lengths();
    cycle_lengths.sort_unstable();
    let body = match format {
        Format::Json => to_json(&json!({
            "found": true,
            "selection": s,
            "size": s.len(),
            "dual_matching": cert.dual_matching.edges(),
            "two_factor_cycle_lengths": cycle_lengths,
            "cycles_in_selection": cert.cycles_in_selection,
            "bipartition": cert.bipartition.colors(),
            "matchings_tried": cert.matchings_tried,
            "chi1": chi1_value,
        })),
        Format::Text => {
            let mut out = format!(
                "selection of {} edges, chi_1 = {chi1_value}\ntwo-factor cycle lengths: {cycle_lengths:?}\n",
                s.len()
            );
            out.push_str(&format_assignment(g, &assignment));
            out
        }
        Format::Dot => graph_dot("prop2", g, s),
    };
    Ok(Report::new(body, EXIT_OK))
}

fn cmd_gadget(format: Format, kind: GadgetKind, expansion: usize) -> Result<Report> {
    let body = match kind {
        GadgetKind::Fragment => {
            let fr = tutte_fragment()?;
            let g = fr.embedding().graph();
            match format {
                Format::Text => emit_embedding(fr.embedding()),
                Format::Json => to_json(&json!({
                    "n": g.vertex_count(),
                    "edges": g.edges(),
                    "rotation": fr.embedding().rotations(),
                    "marked": Port::ALL.map(|p| fr.marked(p)),
                    "attachments": Port::ALL.map(|p| fr.attachment(p)),
                    "spanning_path_counts": fr.spanning_path_counts(),
                })),
                Format::Dot => graph_dot("fragment", g, &Port::ALL.map(|p| fr.marked(p)).into_iter().collect()),
            }
        }
        GadgetKind::Counterexample => {
            let ce = build_counterexample(expansion)?;
            match format {
                Format::Text => export::star_embedding_text(&ce),
                Format::Json => export::sidecar_json(&ce),
                Format::Dot => export::dot(&ce),
            }
        }
    };
    Ok(Report::new(body, EXIT_OK))
}

fn cmd_verify_claim(format: Format) -> Result<Report> {
    let fr = tutte_fragment()?;
    let report = verify_claim_two_factor(&fr);
    let code = if report.passed() { EXIT_OK } else { EXIT_INTERNAL };
    let summary = if report.passed() {
        format!(
            "all 2-factor traces pass ({} traces, {} without a, {} with a)",
            report.traces.len(),
            report.without_a,
            report.with_a
        )
    } else {
        format!("{} 2-factor traces violate the claim", report.exceptions)
    };
    let body = match format {
        Format::Json => to_json(&json!({
            "passed": report.passed(),
            "summary": summary,
            "traces": report.traces.len(),
            "without_a": report.without_a,
            "with_a": report.with_a,
            "exceptions": report.exceptions,
            "log": report.log_with_a(),
        })),
        Format::Text => {
            let mut s = summary + "\n";
            for line in report.log_with_a() {
                writeln!(s, "  {line}").unwrap();
            }
            s
        }
        Format::Dot => return Err(dot_unsupported("verify-claim")),
    };
    Ok(Report::new(body, code))
}

fn cmd_verify_counterexample(format: Format, expansion: usize, budget: &Budget) -> Result<Report> {
    let ce = build_counterexample(expansion)?;
    let report = verify_counterexample(&ce, budget)?;
    let code = match (&report.chi1_lower, report.argument_holds()) {
        (_, false) | (LowerBound::Refuted { .. }, _) => EXIT_INTERNAL,
        (LowerBound::Unknown, true) => EXIT_UNKNOWN,
        (LowerBound::ConfirmedNoSelection, true) => EXIT_OK,
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let claims = report.claim_checks.iter().filter(|c| c.passed).count();
            let mut s = format!("expansion {}: {} copies\n", report.expansion, report.claim_checks.len());
            writeln!(s, "step 1, two-factor claim: {claims}/{} copies pass", report.claim_checks.len()).unwrap();
            writeln!(
                s,
                "step 2, claw placements: {} of {} uncovered ({})",
                report.pigeonhole.uncovered_placements,
                report.pigeonhole.placements,
                if report.pigeonhole.passed { "pass" } else { "fail" }
            )
            .unwrap();
            let lower = match &report.chi1_lower {
                LowerBound::ConfirmedNoSelection => "confirmed, chi_1 = 3".to_string(),
                LowerBound::Unknown => format!("unknown after {} nodes, 2 < chi_1 <= 3 rests on steps 1-2", report.search_nodes),
                LowerBound::Refuted { selection } => format!("refuted by selection {selection:?}"),
            };
            writeln!(s, "step 3, exhaustive search: {lower}").unwrap();
            for e in &report.evidence {
                writeln!(s, "  {e}").unwrap();
            }
            s
        }
        Format::Dot => export::dot(&ce),
    };
    Ok(Report::new(body, code))
}

fn cmd_corpus(format: Format, max_n: usize, with_triangulations: bool) -> Result<Report> {
    if max_n > crate::corpus::MAX_ORDER {
        return Err(Error::TooLarge(format!("corpus-verify supports --max-n up to {}", crate::corpus::MAX_ORDER)));
    }
    let report = corpus_verify(max_n, with_triangulations);
    let code = if report.passed { EXIT_OK } else { EXIT_INTERNAL };
    let body = match format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut s = format!("corpus up to {max_n} vertices: {}\n", if report.passed { "pass" } else { "FAIL" });
            writeln!(s, "graphs by order: {:?}", report.graphs_by_order).unwrap();
            writeln!(s, "chi_1 histogram: {:?}", report.chi1_histogram).unwrap();
            writeln!(
                s,
                "oracle mismatches {}, sandwich {}, degeneracy {}, planar {}",
                report.oracle_mismatches.len(),
                report.sandwich_violations.len(),
                report.degeneracy_violations.len(),
                report.planar_violations.len()
            )
            .unwrap();
            writeln!(
                s,
                "selection sweep: {} subsets, {} disagreements, {} monotonicity failures",
                report.selection.subsets, report.selection.disagreements, report.selection.monotonicity_failures
            )
            .unwrap();
            for t in &report.triangulations {
                writeln!(s, "{}: chi_1 = {}, {} minimal sets, structure {}", t.name, t.chi1, t.minimal_sets, t.structure_holds).unwrap();
            }
            s
        }
        Format::Dot => return Err(dot_unsupported("corpus-verify")),
    };
    Ok(Report::new(body, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("chi1").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn detects_formats() {
        assert!(matches!(parse_input("C~\n").unwrap(), Input::Graph(g) if g.edge_count() == 6));
        assert!(matches!(parse_input("{\"n\":2,\"edges\":[[0,1]]}").unwrap(), Input::Graph(_)));
        let tri = "# triangle\n3 3\n0: 0 1\n1: 2 0\n2: 1 2\n0: 0 1\n1: 0 2\n2: 1 2\n";
        assert!(matches!(parse_input(tri).unwrap(), Input::Embedded(_)));
        assert!(parse_input("").is_err());
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("[3, 1]").unwrap(), BTreeSet::from([1, 3]));
        assert_eq!(parse_edge_list("0,2 5").unwrap(), BTreeSet::from([0, 2, 5]));
        assert!(parse_edge_list("1,x").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["no-such-command"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["chi1", "/nonexistent/file.g6"]).0, EXIT_INPUT);
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("corpus-verify"));
    }

    #[test]
    fn assignment_lines() {
        let g = crate::graph::families::complete(3);
        let a = build_assignment(&g, &BTreeSet::from([0, 1])).unwrap();
        let text = format_assignment(&g, &a);
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().any(|l| l.ends_with("-> -")));
    }

    #[test]
    fn verify_claim_text() {
        let (code, out, _) = run_str(&["--format", "text", "verify-claim"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("all 2-factor traces pass"));
    }
}
