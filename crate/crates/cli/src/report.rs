//! Verification report text format.
//!
//! A fixed `key=value` header is followed by one block per kept counterexample:
//!
//! ```text
//! theorem=BALANCE_BIPARTITE_REV
//! family=triangle
//! bounds=universe_max=8 max_label_size=3 max_vertices=8 strict=false
//! ratio_filter=any
//! engine=direct
//! cases=1234
//! skipped=0
//! verdict=COUNTEREXAMPLE_FOUND
//! counterexamples=10
//! violations_by_clause=statement:10 if:0 only-if:0
//! listed=1
//!
//! [counterexample 1]
//! clause=statement
//! instances=1
//! explanation=balanced but not bipartite
//! [graph]
//! u v
//! [labeling]
//! universe_max = 8
//! u: {0,1}
//! v: {0,2}
//! [end]
//! ```

use std::fmt::Write as _;

use iasl_core::verify::{Clause, Counterexample, Engine, RatioFilter, VerificationReport};
use iasl_core::{SearchBounds, TheoremId, Verdict};

use crate::error::{CliError, CliResult};
use crate::formats::{parse_edge_list, parse_labeling, write_edge_list, write_labeling};

/// Header of a report file.
pub fn write_header(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theorem={}", r.theorem);
    let _ = writeln!(out, "family={}", r.family);
    let _ = writeln!(out, "bounds={}", r.bounds);
    let _ = writeln!(out, "ratio_filter={}", r.ratio_filter.as_str());
    let _ = writeln!(out, "engine={}", r.engine.as_str());
    let _ = writeln!(out, "cases={}", r.cases_checked);
    let _ = writeln!(out, "skipped={}", r.skipped);
    let _ = writeln!(out, "verdict={}", r.verdict.as_str());
    let _ = writeln!(out, "counterexamples={}", r.counterexamples_total);
    let by_clause: Vec<String> = r
        .violations_by_clause
        .iter()
        .map(|(c, n)| format!("{}:{n}", c.as_str()))
        .collect();
    let _ = writeln!(out, "violations_by_clause={}", by_clause.join(" "));
    let _ = writeln!(out, "listed={}", r.counterexamples.len());
    out
}

/// Full report text.
pub fn write_report(r: &VerificationReport) -> String {
    let mut out = write_header(r);
    for (i, c) in r.counterexamples.iter().enumerate() {
        let _ = writeln!(out);
        let _ = writeln!(out, "[counterexample {}]", i + 1);
        let _ = writeln!(out, "clause={}", c.clause.as_str());
        let _ = writeln!(out, "instances={}", c.instances);
        let _ = writeln!(out, "explanation={}", c.explanation);
        let _ = writeln!(out, "[graph]");
        out.push_str(&write_edge_list(&c.graph));
        let _ = writeln!(out, "[labeling]");
        out.push_str(&write_labeling(&c.graph, &c.labeling));
        let _ = writeln!(out, "[end]");
    }
    out
}

/// A report read back from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedReport {
    pub theorem: TheoremId,
    pub family: String,
    pub bounds: SearchBounds,
    pub ratio_filter: RatioFilter,
    pub engine: Engine,
    pub cases: u64,
    pub skipped: u64,
    pub verdict: Verdict,
    pub counterexamples_total: u64,
    pub violations_by_clause: Vec<(Clause, u64)>,
    pub counterexamples: Vec<Counterexample>,
}

struct Cursor<'a> {
    lines: Vec<&'a str>,
    pos: usize,
    source_name: &'a str,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Parse {
            source_name: self.source_name.to_string(),
            line: self.pos.min(self.lines.len().saturating_sub(1)) + 1,
            message: message.into(),
        }
    }

    fn skip_blank(&mut self) {
        while self.pos < self.lines.len() && self.lines[self.pos].trim().is_empty() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Option<&'a str> {
        let l = self.lines.get(self.pos).copied();
        self.pos += 1;
        l
    }

    fn field(&mut self, key: &str) -> CliResult<&'a str> {
        match self.next().and_then(|l| l.split_once('=')) {
            Some((k, v)) if k.trim() == key => Ok(v.trim()),
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected `{key}=...`")))
            }
        }
    }

    fn number<T: std::str::FromStr>(&mut self, key: &str) -> CliResult<T> {
        let v = self.field(key)?;
        v.parse().map_err(|_| {
            self.pos -= 1;
            self.error(format!("bad number for `{key}`: `{v}`"))
        })
    }

    /// Lines up to (excluding) `terminator`, joined back into text.
    fn section(&mut self, terminator: &str) -> CliResult<(usize, String)> {
        let start = self.pos;
        let mut text = String::new();
        loop {
            match self.next() {
                Some(l) if l.trim() == terminator => return Ok((start, text)),
                Some(l) => {
                    text.push_str(l);
                    text.push('\n');
                }
                None => return Err(self.error(format!("missing `{terminator}`"))),
            }
        }
    }
}

fn parse_bounds(text: &str) -> Option<SearchBounds> {
    let mut b = SearchBounds::new(0, 1);
    let mut seen = 0;
    for item in text.split_whitespace() {
        let (k, v) = item.split_once('=')?;
        match k {
            "universe_max" => b.universe_max = v.parse().ok()?,
            "max_label_size" => b.max_label_size = v.parse().ok()?,
            "max_vertices" => b.max_vertices = v.parse().ok()?,
            "strict" => b.require_strict_universe = v.parse().ok()?,
            _ => return None,
        }
        seen += 1;
    }
    (seen == 4).then_some(b)
}

fn parse_by_clause(text: &str) -> Option<Vec<(Clause, u64)>> {
    text.split_whitespace()
        .map(|item| {
            let (c, n) = item.split_once(':')?;
            Some((c.parse().ok()?, n.parse().ok()?))
        })
        .collect()
}

/// Reads a report produced by [`write_report`].
pub fn parse_report(text: &str, source_name: &str) -> CliResult<ParsedReport> {
    let mut c = Cursor {
        lines: text.lines().collect(),
        pos: 0,
        source_name,
    };
    let theorem = c.field("theorem")?;
    let theorem: TheoremId = theorem.parse().map_err(|e| {
        c.pos -= 1;
        c.error(format!("{e}"))
    })?;
    let family = c.field("family")?.to_string();
    let bounds = parse_bounds(c.field("bounds")?).ok_or_else(|| {
        c.pos -= 1;
        c.error("bad bounds")
    })?;
    let ratio_filter = match c.field("ratio_filter")? {
        "any" => RatioFilter::Any,
        "odd" => RatioFilter::AllOdd,
        other => {
            c.pos -= 1;
            return Err(c.error(format!("bad ratio_filter `{other}`")));
        }
    };
    let engine = match c.field("engine")? {
        "auto" => Engine::Auto,
        "direct" => Engine::Direct,
        "classes" => Engine::Classes,
        other => {
            c.pos -= 1;
            return Err(c.error(format!("bad engine `{other}`")));
        }
    };
    let cases = c.number("cases")?;
    let skipped = c.number("skipped")?;
    let verdict = match c.field("verdict")? {
        "CONFIRMED_WITHIN_BOUNDS" => Verdict::ConfirmedWithinBounds,
        "COUNTEREXAMPLE_FOUND" => Verdict::CounterexampleFound,
        other => {
            c.pos -= 1;
            return Err(c.error(format!("bad verdict `{other}`")));
        }
    };
    let counterexamples_total = c.number("counterexamples")?;
    let by_clause_text = c.field("violations_by_clause")?;
    let violations_by_clause = parse_by_clause(by_clause_text).ok_or_else(|| {
        c.pos -= 1;
        c.error(format!("bad violations_by_clause `{by_clause_text}`"))
    })?;
    let listed: usize = c.number("listed")?;

    let mut counterexamples = Vec::with_capacity(listed);
    for i in 1..=listed {
        c.skip_blank();
        if c.next().map(str::trim) != Some(format!("[counterexample {i}]").as_str()) {
            c.pos -= 1;
            return Err(c.error(format!("expected `[counterexample {i}]`")));
        }
        let clause_text = c.field("clause")?;
        let clause: Clause = clause_text.parse().map_err(|_| {
            c.pos -= 1;
            c.error(format!("bad clause `{clause_text}`"))
        })?;
        let instances = c.number("instances")?;
        let explanation = c.field("explanation")?.to_string();
        if c.next().map(str::trim) != Some("[graph]") {
            c.pos -= 1;
            return Err(c.error("expected `[graph]`"));
        }
        let (graph_start, graph_text) = c.section("[labeling]")?;
        let (labeling_start, labeling_text) = c.section("[end]")?;
        let graph = parse_edge_list(&graph_text, source_name).map_err(|e| shift(e, graph_start))?;
        let labeling = parse_labeling(&labeling_text, source_name)
            .and_then(|f| f.bind(&graph))
            .map_err(|e| shift(e, labeling_start))?;
        counterexamples.push(Counterexample {
            graph,
            labeling,
            clause,
            explanation,
            instances,
        });
    }
    c.skip_blank();
    if c.pos < c.lines.len() {
        return Err(c.error("trailing content"));
    }
    Ok(ParsedReport {
        theorem,
        family,
        bounds,
        ratio_filter,
        engine,
        cases,
        skipped,
        verdict,
        counterexamples_total,
        violations_by_clause,
        counterexamples,
    })
}

/// Converts section-relative line numbers to file line numbers.
fn shift(e: CliError, offset: usize) -> CliError {
    match e {
        CliError::Parse {
            source_name,
            line,
            message,
        } => CliError::Parse {
            source_name,
            line: line + offset,
            message,
        },
        CliError::AtLine {
            source_name,
            line,
            error,
        } => CliError::AtLine {
            source_name,
            line: line + offset,
            error,
        },
        CliError::OutsideUniverse {
            source_name,
            line,
            vertex,
            element,
            universe_max,
        } => CliError::OutsideUniverse {
            source_name,
            line: line + offset,
            vertex,
            element,
            universe_max,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use iasl_core::verify::VerifyOptions;
    use iasl_core::verify_theorem;

    #[test]
    fn roundtrip_with_counterexamples() {
        let options = VerifyOptions {
            keep: Some(3),
            ..VerifyOptions::default()
        };
        let r = verify_theorem(
            TheoremId::BalanceBipartiteRev,
            "triangle",
            &SearchBounds::new(3, 2),
            &options,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::CounterexampleFound);
        let text = write_report(&r);
        let parsed = parse_report(&text, "r").unwrap();
        assert_eq!(parsed.theorem, r.theorem);
        assert_eq!(parsed.bounds, r.bounds);
        assert_eq!(parsed.engine, r.engine);
        assert_eq!(parsed.cases, r.cases_checked);
        assert_eq!(parsed.counterexamples_total, r.counterexamples_total);
        assert_eq!(parsed.violations_by_clause, r.violations_by_clause);
        assert_eq!(parsed.counterexamples, r.counterexamples);
    }

    #[test]
    fn roundtrip_confirmed() {
        let r = verify_theorem(
            TheoremId::PositiveEdge,
            "path:3",
            &SearchBounds::new(3, 2),
            &VerifyOptions::default(),
        )
        .unwrap();
        let parsed = parse_report(&write_report(&r), "r").unwrap();
        assert_eq!(parsed.verdict, Verdict::ConfirmedWithinBounds);
        assert!(parsed.counterexamples.is_empty());
    }

    #[test]
    fn rejects_damaged_reports() {
        let err = parse_report("theorem=NOPE\n", "r").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
        let r = verify_theorem(
            TheoremId::BalanceBipartiteRev,
            "triangle",
            &SearchBounds::new(3, 2),
            &VerifyOptions {
                keep: Some(1),
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        let text = write_report(&r).replace("[end]", "");
        assert!(parse_report(&text, "r").is_err());
    }
}
