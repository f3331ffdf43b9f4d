//! Line-oriented text formats: game instances, set cover hypergraphs and
//! Avoid True formulas.
//!
//! ```text
//! ppg v1
//! convention: maker-breaker
//! vertex a
//! vertex b
//! cover a b      # a < b
//! winset b
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{PpgError, Result};
use crate::game::{Convention, Game};
use crate::poset::Poset;
use crate::reductions::{AvoidTrue, CoverInstance};

const HEADER: &str = "ppg v1";

/// Non-empty lines with comments stripped, paired with 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> PpgError {
    PpgError::Syntax { line, msg: msg.into() }
}

/// Name table that reports undeclared ids with their line.
#[derive(Default)]
struct Names {
    list: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    fn declare(&mut self, id: &str) -> Result<usize> {
        if self.index.contains_key(id) {
            return Err(PpgError::DuplicateVertex(id.to_string()));
        }
        self.index.insert(id.to_string(), self.list.len());
        self.list.push(id.to_string());
        Ok(self.list.len() - 1)
    }

    fn get(&self, line: usize, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| PpgError::UnknownVertexAt { line, id: id.to_string() })
    }
}

pub fn parse_instance(text: &str) -> Result<Game> {
    let mut it = lines(text);
    match it.next() {
        Some((_, w)) if w == ["ppg", "v1"] => {}
        Some((line, _)) => return Err(syntax(line, format!("expected `{HEADER}` header"))),
        None => return Err(syntax(1, format!("empty input, expected `{HEADER}` header"))),
    }
    let mut convention = None;
    let mut names = Names::default();
    let mut covers = Vec::new();
    let mut sets = Vec::new();
    for (line, w) in it {
        match w[0] {
            "convention:" => {
                if convention.is_some() {
                    return Err(syntax(line, "convention given twice"));
                }
                let [_, c] = w[..] else {
                    return Err(syntax(line, "expected `convention: maker-breaker|maker-maker`"));
                };
                convention = Some(c.parse::<Convention>().map_err(|e| syntax(line, e))?);
            }
            "vertex" => {
                let [_, id] = w[..] else {
                    return Err(syntax(line, "expected `vertex ID`"));
                };
                names.declare(id)?;
            }
            "cover" => {
                let [_, a, b] = w[..] else {
                    return Err(syntax(line, "expected `cover LOWER UPPER`"));
                };
                covers.push((names.get(line, a)?, names.get(line, b)?));
            }
            "winset" => {
                let s = w[1..].iter().map(|id| names.get(line, id)).collect::<Result<Vec<_>>>()?;
                sets.push(s);
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let poset = Poset::from_edges(names.list, &covers)?;
    Game::new(poset, sets, convention.unwrap_or(Convention::MakerBreaker))
}

/// Canonical text: vertices in index order, then cover relations, then
/// winning sets.
pub fn write_instance(g: &Game) -> String {
    let mut out = format!("{HEADER}\nconvention: {}\n", g.convention());
    let p = g.poset();
    for name in p.names() {
        let _ = writeln!(out, "vertex {name}");
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "cover {} {}", p.name(a), p.name(b));
    }
    for s in g.winsets() {
        out.push_str("winset");
        for &v in s {
            out.push(' ');
            out.push_str(p.name(v));
        }
        out.push('\n');
    }
    out
}

/// `element ID` lines declare the ground set; each `edge ID [ID ...]` line
/// lists the elements of one edge.
pub fn parse_cover(text: &str, k: usize) -> Result<CoverInstance> {
    let mut names = Names::default();
    let mut edges = Vec::new();
    for (line, w) in lines(text) {
        match w[0] {
            "element" => {
                let [_, id] = w[..] else {
                    return Err(syntax(line, "expected `element ID`"));
                };
                names.declare(id)?;
            }
            "edge" if w.len() >= 2 => {
                edges.push(w[1..].iter().map(|id| names.get(line, id)).collect::<Result<Vec<_>>>()?);
            }
            "edge" => return Err(syntax(line, "expected `edge ID [ID ...]`")),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    CoverInstance::new(names.list, edges, k)
}

/// `var ID` lines declare variables; each `clause ID [ID]` line is a term of
/// one or two variables.
pub fn parse_avoid_true(text: &str) -> Result<AvoidTrue> {
    let mut names = Names::default();
    let mut clauses = Vec::new();
    for (line, w) in lines(text) {
        match w[0] {
            "var" => {
                let [_, id] = w[..] else {
                    return Err(syntax(line, "expected `var ID`"));
                };
                names.declare(id)?;
            }
            "clause" if (2..=3).contains(&w.len()) => {
                clauses.push(w[1..].iter().map(|id| names.get(line, id)).collect::<Result<Vec<_>>>()?);
            }
            "clause" => return Err(syntax(line, "expected `clause ID [ID]`")),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    AvoidTrue::new(names.list, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_game, GenSpec};
    use proptest::prelude::*;

    #[test]
    fn en1() {
        let g = parse_instance("ppg v1\nvertex a\nvertex b\ncover a b\nwinset a\n").unwrap();
        assert_eq!(g.convention(), Convention::MakerBreaker);
        assert_eq!(g.poset().cover_names(), vec![("a".to_string(), "b".to_string())]);
        assert_eq!(g.winset_names(), vec![vec!["a".to_string()]]);
    }

    #[test]
    fn figure_one_round_trip() {
        let p = crate::poset::tests::figure_one();
        let d = p.lookup("d").unwrap();
        let g = Game::new(p, vec![vec![d]], Convention::MakerBreaker).unwrap();
        assert_eq!(parse_instance(&write_instance(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_instance("ppg v1\nvertex a\ncover a a\n"), Err(PpgError::CycleDetected(_))));
        assert!(matches!(parse_instance("vertex a\n"), Err(PpgError::Syntax { line: 1, .. })));
        assert!(matches!(parse_instance(""), Err(PpgError::Syntax { .. })));
        assert!(matches!(parse_instance("ppg v1\nvertex a\nedge a\n"), Err(PpgError::Syntax { line: 3, .. })));
        assert!(matches!(
            parse_instance("ppg v1\nvertex a\n\n# note\nwinset a b\n"),
            Err(PpgError::UnknownVertexAt { line: 5, .. })
        ));
        assert!(matches!(parse_instance("ppg v1\nvertex a\nvertex a\n"), Err(PpgError::DuplicateVertex(_))));
        assert!(matches!(parse_instance("ppg v1\nconvention: both\n"), Err(PpgError::Syntax { line: 2, .. })));
    }

    #[test]
    fn comments_and_convention() {
        let text = "# leading comment\nppg v1\nconvention: maker-maker\nvertex x # trailing\nwinset\n";
        let g = parse_instance(text).unwrap();
        assert_eq!(g.convention(), Convention::MakerMaker);
        assert_eq!(g.winsets(), &[Vec::<usize>::new()]);
        assert_eq!(parse_instance(&write_instance(&g)).unwrap(), g);
    }

    #[test]
    fn side_formats() {
        let c = parse_cover("element a\nelement b\nedge a b\nedge b\n", 1).unwrap();
        assert_eq!(c.edges(), &[vec![0, 1], vec![1]]);
        assert!(matches!(parse_cover("element a\nedge z\n", 1), Err(PpgError::UnknownVertexAt { line: 2, .. })));
        let d = parse_avoid_true("var p\nvar q\nclause p q\nclause q\n").unwrap();
        assert_eq!(d.clauses(), &[vec![0, 1], vec![1]]);
        assert!(parse_avoid_true("var p\nclause\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=12, w in 1usize..=4, m in 0usize..=5, s in 0usize..=4, seed in any::<u64>()) {
            let g = random_game(&GenSpec { n, width: w.min(n), winsets: m, size: s.min(n), seed }).unwrap();
            prop_assert_eq!(parse_instance(&write_instance(&g)).unwrap(), g);
        }
    }
}
