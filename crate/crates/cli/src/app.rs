//! Command-line interface.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use iasl_core::balance::Clustering;
use iasl_core::transforms::{LabelSource, NamedElement};
use iasl_core::verify::{AiaslEnumerator, Engine, RatioFilter, VerifyOptions};
use iasl_core::{
    delete_vertex, elementary_transformation, spanned_subgraph, subdivide_edge, verify_theorem,
    Graph, SearchBounds, SignedLabeledGraph, TheoremId, TransformOutcome, Verdict,
    DEFAULT_CYCLE_BOUND,
};

use crate::error::{CliError, CliResult};
use crate::formats::{
    comment_block, parse_edge_list, parse_labeling, write_edge_list, write_labeling,
};
use crate::report::{parse_report, write_header, write_report};

/// Integer additive set-labeled signed graphs.
#[derive(Debug, Parser)]
#[command(name = "iasl", version)]
pub struct Cli {
    /// Also require every edge label to lie inside the universe.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Largest vertex count for which simple cycles are enumerated.
    #[arg(long, global = true, env = "IASL_CYCLE_BOUND", default_value_t = DEFAULT_CYCLE_BOUND)]
    pub cycle_bound: usize,
    /// Output format; only `plain` exists.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Edge-list file.
    #[arg(long, short = 'g')]
    pub graph: PathBuf,
    /// Labeling file.
    #[arg(long, short = 'l')]
    pub labeling: PathBuf,
}

#[derive(Debug, Args)]
pub struct Outputs {
    /// Where to write the resulting edge list (stdout when absent).
    #[arg(long)]
    pub out_graph: Option<PathBuf>,
    /// Where to write the resulting labeling (stdout when absent).
    #[arg(long)]
    pub out_labeling: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print vertex labels, edge labels and signs.
    Derive(Inputs),
    /// Check a property of a labeled graph; exit 1 when it fails.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        inputs: Inputs,
        /// Balance only: skip the cycle listing.
        #[arg(long)]
        fast: bool,
    },
    /// Apply a graph operation and write the graph with its induced labeling.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// List the admissible labelings of a graph.
    Enumerate {
        #[arg(long, short = 'g')]
        graph: PathBuf,
        #[arg(long)]
        universe_max: u64,
        #[arg(long)]
        max_label_size: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        /// Keep only labelings whose edge ratios are all odd.
        #[arg(long)]
        odd_ratios: bool,
        /// Print at most this many labelings; the count covers all of them.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check a theorem over every admissible labeling of a graph family.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        /// e.g. `triangle`, `connected:5`, `path:3+cycle:4`, `ap-pairs:6,4,5`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        universe_max: u64,
        #[arg(long)]
        max_label_size: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long)]
        odd_ratios: bool,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Write the full report here; only the header goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List at most this many counterexamples.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Re-derive every counterexample of a report; exit 1 if one no longer fails.
    Replay { report: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Aiasl,
    Iasi,
    Balance,
    Cluster,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Direct,
    Classes,
}

#[derive(Debug, Subcommand)]
pub enum TransformOp {
    /// Replace edge U V by a new vertex labeled with the edge label.
    Subdivide {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<String>,
        #[command(flatten)]
        outputs: Outputs,
    },
    /// Remove a degree-2 vertex on no triangle and join its neighbours.
    Homeo {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        vertex: String,
        #[command(flatten)]
        outputs: Outputs,
    },
    /// Remove a vertex and its edges.
    DeleteVertex {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        vertex: String,
        #[command(flatten)]
        outputs: Outputs,
    },
    /// Keep all vertices and only the listed edges, given as `u v` pairs.
    Span {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long = "keep", value_name = "U V")]
        keep: Vec<String>,
        #[command(flatten)]
        outputs: Outputs,
    },
}

/// Text written by one run plus the exit status.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|error| CliError::Io {
        path: path.to_path_buf(),
        error,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|error| CliError::Io {
        path: path.to_path_buf(),
        error,
    })
}

fn load_graph(path: &Path, err: &mut String) -> CliResult<Graph> {
    let g = parse_edge_list(&read(path)?, &path.display().to_string())?;
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        let names: Vec<&str> = isolated.iter().map(|&v| g.name(v)).collect();
        let _ = writeln!(err, "warning: isolated vertices: {}", names.join(","));
    }
    Ok(g)
}

fn load(inputs: &Inputs, err: &mut String) -> CliResult<SignedLabeledGraph> {
    let g = load_graph(&inputs.graph, err)?;
    let file = parse_labeling(
        &read(&inputs.labeling)?,
        &inputs.labeling.display().to_string(),
    )?;
    let f = file.bind(&g)?;
    Ok(SignedLabeledGraph::new(g, f)?)
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn joined(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(",")
}

/// Lines for edge and vertex labels outside the universe; empty when lenient.
fn universe_report(s: &SignedLabeledGraph, strict: bool, out: &mut String) -> bool {
    if !strict {
        return true;
    }
    let g = s.graph();
    let bad = s.universe_violations();
    for el in &bad {
        match el {
            iasl_core::labeling::Element::Vertex(v) => {
                let _ = writeln!(out, "outside_universe vertex {}", g.name(*v));
            }
            iasl_core::labeling::Element::Edge(e) => {
                let (a, b) = g.edge_names(*e);
                let _ = writeln!(out, "outside_universe edge {a} {b}");
            }
        }
    }
    let _ = writeln!(out, "UNIVERSE_OK={}", flag(bad.is_empty()));
    bad.is_empty()
}

fn derive_cmd(cli: &Cli, inputs: &Inputs, out: &mut String, err: &mut String) -> CliResult<u8> {
    let s = load(inputs, err)?;
    let g = s.graph();
    for (name, label) in s.named_labels() {
        let _ = writeln!(out, "{name} : {label}");
    }
    for (i, &e) in g.edges().iter().enumerate() {
        let (a, b) = g.edge_names(e);
        let _ = writeln!(out, "{a} {b} : {} {}", s.edge_labels()[i], s.signs()[i]);
    }
    let _ = writeln!(out, "vertices={}", g.vertex_count());
    let _ = writeln!(out, "edges={}", g.edge_count());
    let _ = writeln!(out, "negative_edges={}", s.negative_edge_count());
    let _ = writeln!(out, "universe_max={}", s.labeling().universe_max);
    let ok = universe_report(&s, cli.strict, out);
    Ok(if ok { 0 } else { 1 })
}

fn check_cmd(
    cli: &Cli,
    property: Property,
    inputs: &Inputs,
    fast: bool,
    out: &mut String,
    err: &mut String,
) -> CliResult<u8> {
    let s = load(inputs, err)?;
    let g = s.graph();
    let holds = match property {
        Property::Aiasl => {
            let report = s.validate_aiasl();
            for &v in &report.non_ap_vertices {
                let _ = writeln!(
                    out,
                    "vertex {} : {} is not an AP",
                    g.name(v),
                    s.vertex_label(v)
                );
            }
            for (e, issue) in &report.edge_issues {
                let (a, b) = g.edge_names(*e);
                let _ = writeln!(out, "edge {a} {b} : {issue}");
            }
            for &e in g.edges() {
                if let Ok(r) = s.deterministic_ratio(e) {
                    let (a, b) = g.edge_names(e);
                    let _ = writeln!(out, "ratio {a} {b} = {r}");
                }
            }
            let universe_ok = universe_report(&s, cli.strict, out);
            let _ = writeln!(out, "AIASL={}", flag(report.is_valid()));
            report.is_valid() && universe_ok
        }
        Property::Iasi => {
            let collisions = s.iasi_collisions();
            for (x, y) in &collisions {
                let (a, b) = g.edge_names(*x);
                let (c, d) = g.edge_names(*y);
                let _ = writeln!(out, "collision {a} {b} = {c} {d} : {}", s.label_of(*x)?);
            }
            let _ = writeln!(out, "IASI={}", flag(collisions.is_empty()));
            collisions.is_empty()
        }
        Property::Balance => {
            let balanced = if fast {
                let camps = s.is_balanced_fast();
                if let Some(p) = &camps {
                    let _ = writeln!(out, "camp_a={}", joined(g, &p.left));
                    let _ = writeln!(out, "camp_b={}", joined(g, &p.right));
                }
                camps.is_some()
            } else {
                let verdict = s.is_balanced_oracle(cli.cycle_bound)?;
                for c in &verdict.cycles {
                    let _ = writeln!(
                        out,
                        "cycle {} : negatives={} {}",
                        c.cycle
                            .iter()
                            .map(|&v| g.name(v))
                            .collect::<Vec<_>>()
                            .join(" "),
                        c.negative_edge_count,
                        c.sign_product
                    );
                }
                let _ = writeln!(out, "cycles={}", verdict.cycles.len());
                verdict.balanced
            };
            let _ = writeln!(out, "BALANCED={}", flag(balanced));
            balanced
        }
        Property::Cluster => {
            let c = s.clusterability();
            match &c {
                Clustering::Clusterable { clusters } => {
                    for (i, members) in clusters.iter().enumerate() {
                        let _ = writeln!(out, "cluster {} : {}", i + 1, joined(g, members));
                    }
                }
                Clustering::NotClusterable {
                    cycle,
                    negative_edge,
                } => {
                    let (a, b) = g.edge_names(*negative_edge);
                    let names: Vec<&str> = cycle.iter().map(|&v| g.name(v)).collect();
                    let _ = writeln!(
                        out,
                        "cycle {} : only negative edge {a} {b}",
                        names.join(" ")
                    );
                }
            }
            let _ = writeln!(out, "CLUSTERABLE={}", flag(c.is_clusterable()));
            c.is_clusterable()
        }
    };
    Ok(if holds { 0 } else { 1 })
}

fn provenance_lines(input: &SignedLabeledGraph, o: &TransformOutcome) -> Vec<String> {
    let p = &o.provenance;
    let mut lines = vec![format!("operation={}", p.operation.as_str())];
    lines.extend(p.added_vertices.iter().map(|v| format!("added_vertex {v}")));
    lines.extend(
        p.removed_vertices
            .iter()
            .map(|v| format!("removed_vertex {v}")),
    );
    lines.extend(
        p.added_edges
            .iter()
            .map(|(a, b)| format!("added_edge {a} {b}")),
    );
    lines.extend(
        p.removed_edges
            .iter()
            .map(|(a, b)| format!("removed_edge {a} {b}")),
    );
    for (el, src) in &o.induced_label_notes {
        let target = match el {
            NamedElement::Vertex(v) => v.clone(),
            NamedElement::Edge(a, b) => format!("{a} {b}"),
        };
        match src {
            LabelSource::Carried => {}
            LabelSource::SumsetOfEndpoints => {
                lines.push(format!("label {target} <- sumset of endpoints"))
            }
            LabelSource::InheritedFromEdge(a, b) => {
                lines.push(format!("label {target} <- edge {a} {b}"))
            }
        }
    }
    for ((a, b), issue) in &o.new_edge_issues {
        lines.push(format!("not_aiasl {a} {b} : {issue}"));
    }
    lines.push(format!(
        "removed_negative_edges={}",
        o.removed_negative_edges
    ));
    lines.push(format!("balanced_before={}", flag(input.is_balanced())));
    lines.push(format!("balanced_after={}", flag(o.result.is_balanced())));
    lines
}

fn transform_cmd(op: &TransformOp, out: &mut String, err: &mut String) -> CliResult<u8> {
    let (inputs, outputs) = match op {
        TransformOp::Subdivide {
            inputs, outputs, ..
        }
        | TransformOp::Homeo {
            inputs, outputs, ..
        }
        | TransformOp::DeleteVertex {
            inputs, outputs, ..
        }
        | TransformOp::Span {
            inputs, outputs, ..
        } => (inputs, outputs),
    };
    let s = load(inputs, err)?;
    let outcome = match op {
        TransformOp::Subdivide { edge, .. } => subdivide_edge(&s, &edge[0], &edge[1])?,
        TransformOp::Homeo { vertex, .. } => elementary_transformation(&s, vertex)?,
        TransformOp::DeleteVertex { vertex, .. } => delete_vertex(&s, vertex)?,
        TransformOp::Span { keep, .. } => {
            let mut pairs = Vec::with_capacity(keep.len());
            for (i, item) in keep.iter().enumerate() {
                let parts: Vec<&str> = item.split_whitespace().collect();
                match parts.as_slice() {
                    [a, b] => pairs.push((*a, *b)),
                    _ => {
                        return Err(CliError::Parse {
                            source_name: "--keep".into(),
                            line: i + 1,
                            message: format!("expected `u v`, found `{item}`"),
                        })
                    }
                }
            }
            spanned_subgraph(&s, &pairs)?
        }
    };
    let header = comment_block(&provenance_lines(&s, &outcome));
    let g = outcome.result.graph();
    let graph_text = format!("{header}{}", write_edge_list(g));
    let labeling_text = format!("{header}{}", write_labeling(g, outcome.result.labeling()));
    match &outputs.out_graph {
        Some(p) => write_file(p, &graph_text)?,
        None => out.push_str(&graph_text),
    }
    if outputs.out_graph.is_none() && outputs.out_labeling.is_none() {
        out.push('\n');
    }
    match &outputs.out_labeling {
        Some(p) => write_file(p, &labeling_text)?,
        None => out.push_str(&labeling_text),
    }
    if outputs.out_graph.is_some() && outputs.out_labeling.is_some() {
        out.push_str(&header.replace("# ", ""));
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_cmd(
    cli: &Cli,
    graph: &Path,
    universe_max: u64,
    max_label_size: usize,
    max_vertices: usize,
    odd_ratios: bool,
    limit: Option<usize>,
    out: &mut String,
    err: &mut String,
) -> CliResult<u8> {
    let g = load_graph(graph, err)?;
    let bounds = SearchBounds {
        universe_max,
        max_label_size,
        max_vertices,
        require_strict_universe: cli.strict,
    };
    let filter = if odd_ratios {
        RatioFilter::AllOdd
    } else {
        RatioFilter::Any
    };
    let mut count = 0u64;
    for f in AiaslEnumerator::new(&g, &bounds, filter)? {
        count += 1;
        if !matches!(limit, Some(l) if count > l as u64) {
            let parts: Vec<String> = g
                .names()
                .iter()
                .zip(f.sets())
                .map(|(n, s)| format!("{n}={s}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join(" "));
        }
    }
    let _ = writeln!(out, "bounds={bounds}");
    let _ = writeln!(out, "ratio_filter={}", filter.as_str());
    let _ = writeln!(out, "count={count}");
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    cli: &Cli,
    theorem: TheoremId,
    family: &str,
    universe_max: u64,
    max_label_size: usize,
    max_vertices: usize,
    odd_ratios: bool,
    engine: EngineArg,
    report_path: Option<&Path>,
    limit: Option<usize>,
    out: &mut String,
) -> CliResult<u8> {
    let bounds = SearchBounds {
        universe_max,
        max_label_size,
        max_vertices,
        require_strict_universe: cli.strict,
    };
    let options = VerifyOptions {
        ratio_filter: if odd_ratios {
            RatioFilter::AllOdd
        } else {
            RatioFilter::Any
        },
        engine: match engine {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Direct => Engine::Direct,
            EngineArg::Classes => Engine::Classes,
        },
        keep: limit,
    };
    let report = verify_theorem(theorem, family, &bounds, &options)?;
    match report_path {
        Some(p) => {
            write_file(p, &write_report(&report))?;
            out.push_str(&write_header(&report));
        }
        None => out.push_str(&write_report(&report)),
    }
    Ok(match report.verdict {
        Verdict::ConfirmedWithinBounds => 0,
        Verdict::CounterexampleFound => 1,
    })
}

fn replay_cmd(path: &Path, out: &mut String) -> CliResult<u8> {
    let report = parse_report(&read(path)?, &path.display().to_string())?;
    let mut failed = 0;
    for (i, c) in report.counterexamples.iter().enumerate() {
        let still = c.replay(report.theorem)?;
        if !still {
            failed += 1;
        }
        let _ = writeln!(
            out,
            "counterexample {} : {}",
            i + 1,
            if still {
                "reproduced"
            } else {
                "NOT reproduced"
            }
        );
    }
    let _ = writeln!(out, "theorem={}", report.theorem);
    let _ = writeln!(out, "replayed={}", report.counterexamples.len());
    let _ = writeln!(out, "not_reproduced={failed}");
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Runs one parsed command without touching the process streams.
pub fn run(cli: &Cli) -> RunOutput {
    let mut out = String::new();
    let mut err = String::new();
    let result = match &cli.command {
        Command::Derive(inputs) => derive_cmd(cli, inputs, &mut out, &mut err),
        Command::Check {
            property,
            inputs,
            fast,
        } => check_cmd(cli, *property, inputs, *fast, &mut out, &mut err),
        Command::Transform { op } => transform_cmd(op, &mut out, &mut err),
        Command::Enumerate {
            graph,
            universe_max,
            max_label_size,
            max_vertices,
            odd_ratios,
            limit,
        } => enumerate_cmd(
            cli,
            graph,
            *universe_max,
            *max_label_size,
            *max_vertices,
            *odd_ratios,
            *limit,
            &mut out,
            &mut err,
        ),
        Command::Verify {
            theorem,
            family,
            universe_max,
            max_label_size,
            max_vertices,
            odd_ratios,
            engine,
            out: report_path,
            limit,
        } => verify_cmd(
            cli,
            *theorem,
            family,
            *universe_max,
            *max_label_size,
            *max_vertices,
            *odd_ratios,
            *engine,
            report_path.as_deref(),
            *limit,
            &mut out,
        ),
        Command::Replay { report } => replay_cmd(report, &mut out),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    };
    RunOutput {
        stdout: out,
        stderr: err,
        code,
    }
}

/// Parses `args`, runs, and writes to the given streams. Returns the exit status.
pub fn main_with<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let r = run(&cli);
    let _ = stdout.write_all(r.stdout.as_bytes());
    let _ = stderr.write_all(r.stderr.as_bytes());
    r.code
}
