//! Text formats for graphs, labelings and set literals.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! vertex z
//! u v
//! v w
//! ```
//!
//! Labeling:
//!
//! ```text
//! universe_max = 8
//! u: {0,1}
//! v: {0, 2}
//! ```
//!
//! `#` starts a comment anywhere on a line. Vertex ids may not contain
//! whitespace or any of `# : , { } = [ ]`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use iasl_core::graph::valid_vertex_id;
use iasl_core::{Error as CoreError, Graph, GraphBuilder, IntegerSet, Labeling};

use crate::error::{CliError, CliResult};

fn parse_error(source_name: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Why a set literal failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetLiteralError {
    Empty,
    Malformed(String),
}

/// Parses `{0,2,4}`. Whitespace is ignored; repeated elements collapse.
pub fn parse_set_literal(text: &str) -> Result<Vec<u64>, SetLiteralError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| SetLiteralError::Malformed(format!("expected `{{...}}`, found `{text}`")))?;
    if inner.is_empty() {
        return Err(SetLiteralError::Empty);
    }
    inner
        .split(',')
        .map(|item| {
            if item.starts_with('-') {
                return Err(SetLiteralError::Malformed(format!(
                    "negative element `{item}`"
                )));
            }
            item.parse::<u64>()
                .map_err(|_| SetLiteralError::Malformed(format!("bad element `{item}`")))
        })
        .collect()
}

/// Reads an edge list.
pub fn parse_edge_list(text: &str, source_name: &str) -> CliResult<Graph> {
    let mut builder = GraphBuilder::new();
    let mut seen = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let at = |error| CliError::AtLine {
            source_name: source_name.to_string(),
            line,
            error,
        };
        let check_id = |id: &str| {
            if valid_vertex_id(id) {
                Ok(())
            } else {
                Err(at(CoreError::InvalidVertexId(id.to_string())))
            }
        };
        match tokens.as_slice() {
            ["vertex", v] => {
                check_id(v)?;
                builder.vertex(v);
            }
            [a, b] => {
                check_id(a)?;
                check_id(b)?;
                if a == b {
                    return Err(at(CoreError::SelfLoop(a.to_string())));
                }
                let key = if a < b { (*a, *b) } else { (*b, *a) };
                if !seen.insert(key) {
                    return Err(at(CoreError::ParallelEdge(key.0.into(), key.1.into())));
                }
                builder.edge(a, b);
            }
            _ => {
                return Err(parse_error(
                    source_name,
                    line,
                    format!("expected `u v` or `vertex u`, found `{content}`"),
                ))
            }
        }
    }
    Ok(builder.build()?)
}

/// A labeling file before it is matched against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingFile {
    pub universe_max: Option<u64>,
    /// `(vertex, set, line)` in file order.
    pub entries: Vec<(String, IntegerSet, usize)>,
    pub source_name: String,
}

impl LabelingFile {
    /// The declared universe bound, or the largest element when there is none.
    pub fn universe_max(&self) -> u64 {
        self.universe_max.unwrap_or_else(|| {
            self.entries
                .iter()
                .map(|(_, s, _)| s.largest())
                .max()
                .unwrap_or(0)
        })
    }

    /// Aligns the entries with the vertices of `g`.
    pub fn bind(&self, g: &Graph) -> CliResult<Labeling> {
        let universe_max = self.universe_max();
        for (name, set, line) in &self.entries {
            let at = |error| CliError::AtLine {
                source_name: self.source_name.clone(),
                line: *line,
                error,
            };
            g.index_of(name).map_err(at)?;
            if !set.within_universe(universe_max) {
                return Err(CliError::OutsideUniverse {
                    source_name: self.source_name.clone(),
                    line: *line,
                    vertex: name.clone(),
                    element: set.largest(),
                    universe_max,
                });
            }
        }
        Ok(Labeling::from_named(
            g,
            universe_max,
            self.entries.iter().map(|(n, s, _)| (n.as_str(), s.clone())),
        )?)
    }
}

/// Reads a labeling file.
pub fn parse_labeling(text: &str, source_name: &str) -> CliResult<LabelingFile> {
    let mut out = LabelingFile {
        universe_max: None,
        entries: Vec::new(),
        source_name: source_name.to_string(),
    };
    let mut names = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let at = |error| CliError::AtLine {
            source_name: source_name.to_string(),
            line,
            error,
        };
        if let Some((key, value)) = content.split_once('=') {
            if key.trim() != "universe_max" {
                return Err(parse_error(
                    source_name,
                    line,
                    format!("unknown key `{}`", key.trim()),
                ));
            }
            if out.universe_max.is_some() {
                return Err(parse_error(source_name, line, "universe_max given twice"));
            }
            let value = value.trim();
            let n = value.parse::<u64>().map_err(|_| {
                parse_error(source_name, line, format!("bad universe_max `{value}`"))
            })?;
            out.universe_max = Some(n);
            continue;
        }
        let (name, literal) = content.split_once(':').ok_or_else(|| {
            parse_error(
                source_name,
                line,
                format!("expected `vertex: {{...}}`, found `{content}`"),
            )
        })?;
        let name = name.trim();
        if !valid_vertex_id(name) {
            return Err(at(CoreError::InvalidVertexId(name.to_string())));
        }
        let elements = match parse_set_literal(literal) {
            Ok(e) => e,
            Err(SetLiteralError::Empty) => return Err(at(CoreError::EmptyLabel(name.to_string()))),
            Err(SetLiteralError::Malformed(m)) => return Err(parse_error(source_name, line, m)),
        };
        if !names.insert(name.to_string()) {
            return Err(at(CoreError::DuplicateVertex(name.to_string())));
        }
        let set = IntegerSet::new(elements, name).map_err(at)?;
        out.entries.push((name.to_string(), set, line));
    }
    Ok(out)
}

/// Prefixes every line of `comment` with `# `.
pub fn comment_block(comment: &[String]) -> String {
    let mut out = String::new();
    for c in comment {
        let _ = writeln!(out, "# {c}");
    }
    out
}

/// Writes an edge list: isolated vertices first, then edges in canonical order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.isolated_vertices() {
        let _ = writeln!(out, "vertex {}", g.name(v));
    }
    for &e in g.edges() {
        let (a, b) = g.edge_names(e);
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Writes a labeling with its universe header, one vertex per line in id order.
pub fn write_labeling(g: &Graph, f: &Labeling) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "universe_max = {}", f.universe_max);
    for (v, name) in g.names().iter().enumerate() {
        let _ = writeln!(out, "{name}: {}", f.set(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn set_literals() {
        assert_eq!(parse_set_literal("{0,2,4}"), Ok(vec![0, 2, 4]));
        assert_eq!(parse_set_literal(" { 4 , 0,\t2 } "), Ok(vec![4, 0, 2]));
        assert_eq!(parse_set_literal("{}"), Err(SetLiteralError::Empty));
        assert_eq!(parse_set_literal("{ }"), Err(SetLiteralError::Empty));
        assert!(matches!(
            parse_set_literal("{-1,2}"),
            Err(SetLiteralError::Malformed(_))
        ));
        assert!(matches!(
            parse_set_literal("{1,,2}"),
            Err(SetLiteralError::Malformed(_))
        ));
        assert!(matches!(
            parse_set_literal("1,2"),
            Err(SetLiteralError::Malformed(_))
        ));
        assert!(matches!(
            parse_set_literal("{1,2"),
            Err(SetLiteralError::Malformed(_))
        ));
    }

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("# triangle\nu v\nv w # trailing\n\nu w\nvertex z\n", "g").unwrap();
        assert_eq!(g.names(), &["u", "v", "w", "z"]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.isolated_vertices(), vec![3]);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let err = parse_edge_list("u v\nu v w\n", "g").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().starts_with("PARSE_ERROR: g:2:"));
        let err = parse_edge_list("u v\nv u\n", "g").unwrap_err();
        assert!(matches!(
            err,
            CliError::AtLine {
                line: 2,
                error: CoreError::ParallelEdge(..),
                ..
            }
        ));
        let err = parse_edge_list("a a\n", "g").unwrap_err();
        assert!(matches!(
            err,
            CliError::AtLine {
                error: CoreError::SelfLoop(_),
                ..
            }
        ));
        let err = parse_edge_list("a b:c\n", "g").unwrap_err();
        assert!(matches!(
            err,
            CliError::AtLine {
                error: CoreError::InvalidVertexId(_),
                ..
            }
        ));
    }

    #[test]
    fn labeling_basics() {
        let g = parse_edge_list("u v\n", "g").unwrap();
        let file = parse_labeling("universe_max = 5\nu: {0,1}\nv:{0, 2, 2}\n", "f").unwrap();
        let f = file.bind(&g).unwrap();
        assert_eq!(f.universe_max, 5);
        assert_eq!(f.set(1).elements(), &[0, 2]);
        let implicit = parse_labeling("u: {0,1}\nv: {0,7}\n", "f").unwrap();
        assert_eq!(implicit.bind(&g).unwrap().universe_max, 7);
    }

    #[test]
    fn labeling_errors() {
        let g = parse_edge_list("u v\n", "g").unwrap();
        let err = parse_labeling("u: {}\n", "f").unwrap_err();
        assert!(err.to_string().contains("EMPTY_LABEL"));
        assert!(matches!(err, CliError::AtLine { line: 1, .. }));
        let err = parse_labeling("u: {0}\nu: {1}\n", "f").unwrap_err();
        assert!(matches!(
            err,
            CliError::AtLine {
                line: 2,
                error: CoreError::DuplicateVertex(_),
                ..
            }
        ));
        let err = parse_labeling("size = 3\n", "f").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
        let err = parse_labeling("u {0}\n", "f").unwrap_err();
        assert!(matches!(err, CliError::Parse { .. }));
        let err = parse_labeling("u: {0}\nw: {1}\n", "f")
            .unwrap()
            .bind(&g)
            .unwrap_err();
        assert!(matches!(
            err,
            CliError::AtLine {
                line: 2,
                error: CoreError::UnknownVertex(_),
                ..
            }
        ));
        let err = parse_labeling("u: {0}\n", "f")
            .unwrap()
            .bind(&g)
            .unwrap_err();
        assert!(matches!(err, CliError::Core(CoreError::MissingLabel(_))));
        let err = parse_labeling("universe_max = 3\nu: {0}\nv: {4}\n", "f")
            .unwrap()
            .bind(&g)
            .unwrap_err();
        assert!(matches!(
            err,
            CliError::OutsideUniverse {
                line: 3,
                element: 4,
                ..
            }
        ));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        let names = ["a", "b", "c", "d", "e", "x1", "y_2"];
        (
            proptest::collection::vec((0..names.len(), 0..names.len()), 0..12),
            proptest::collection::vec(0..names.len(), 0..3),
        )
            .prop_map(move |(pairs, lone)| {
                let mut b = GraphBuilder::new();
                let mut seen = BTreeSet::new();
                for (i, j) in pairs {
                    if i != j && seen.insert((i.min(j), i.max(j))) {
                        b.edge(names[i], names[j]);
                    }
                }
                for v in lone {
                    b.vertex(names[v]);
                }
                b.build().unwrap()
            })
    }

    proptest! {
        #[test]
        fn edge_list_roundtrip(g in arb_graph()) {
            let text = write_edge_list(&g);
            prop_assert_eq!(parse_edge_list(&text, "g").unwrap(), g);
        }

        #[test]
        fn labeling_roundtrip(g in arb_graph(), offset in 0u64..20, universe_pad in 0u64..5) {
            let sets: Vec<IntegerSet> = (0..g.vertex_count() as u64)
                .map(|i| IntegerSet::new([offset + i, offset + 2 * i + 1], "p").unwrap())
                .collect();
            let top = sets.iter().map(IntegerSet::largest).max().unwrap_or(0);
            let f = Labeling::new(top + universe_pad, sets);
            let text = write_labeling(&g, &f);
            prop_assert_eq!(parse_labeling(&text, "f").unwrap().bind(&g).unwrap(), f);
        }
    }
}
