//! DIMACS CNF and QDIMACS readers.

use super::{CnfFormula, QbfFormula, Quantifier};
use crate::error::{PpgError, Result};

struct Parsed {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
    prefix: Vec<(Quantifier, Vec<usize>)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> PpgError {
    PpgError::Syntax { line, msg: msg.into() }
}

fn parse(text: &str, allow_prefix: bool) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut prefix = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        // Some benchmark files end with a `%` sentinel.
        if t.starts_with('%') {
            break;
        }
        let mut words = t.split_whitespace();
        if t.starts_with('p') {
            let parts: Vec<&str> = words.collect();
            if parts.len() != 4 || parts[1] != "cnf" || header.is_some() {
                return Err(syntax(line, "expected a single `p cnf VARS CLAUSES` header"));
            }
            let v = parts[2].parse().map_err(|_| syntax(line, "bad variable count"))?;
            let c = parts[3].parse().map_err(|_| syntax(line, "bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(syntax(line, "clause before the `p cnf` header"));
        };
        if t.starts_with('a') || t.starts_with('e') {
            if !allow_prefix {
                return Err(syntax(line, "quantifier lines are only allowed in QDIMACS"));
            }
            if !clauses.is_empty() || !current.is_empty() {
                return Err(syntax(line, "quantifier line after the first clause"));
            }
            let q = if words.next() == Some("a") { Quantifier::Forall } else { Quantifier::Exists };
            let mut vars = Vec::new();
            let mut closed = false;
            for w in words {
                let v: usize = w.parse().map_err(|_| syntax(line, format!("bad variable `{w}`")))?;
                if v == 0 {
                    closed = true;
                    break;
                }
                if v > num_vars {
                    return Err(syntax(line, format!("variable {v} exceeds the header count {num_vars}")));
                }
                vars.push(v);
            }
            if !closed {
                return Err(syntax(line, "quantifier line must end with 0"));
            }
            prefix.push((q, vars));
            continue;
        }
        for w in words {
            let l: i32 = w.parse().map_err(|_| syntax(line, format!("bad literal `{w}`")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    let Some((num_vars, count)) = header else {
        return Err(syntax(text.lines().count().max(1), "missing `p cnf` header"));
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(syntax(text.lines().count().max(1), format!("header promises {count} clauses, found {}", clauses.len())));
    }
    Ok(Parsed { num_vars, clauses, prefix })
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let p = parse(text, false)?;
    CnfFormula::new(p.num_vars, p.clauses)
}

/// Reads a QDIMACS file whose prefix must be `∀x1 ∃x2 ∀x3 …` in order.
pub fn parse_qdimacs(text: &str) -> Result<QbfFormula> {
    let p = parse(text, true)?;
    let mut order = Vec::new();
    for (q, vars) in &p.prefix {
        order.extend(vars.iter().map(|&v| (v, *q)));
    }
    if order.iter().enumerate().any(|(i, &(v, _))| v != i + 1) || order.len() != p.num_vars {
        return Err(PpgError::InvalidFormula("the prefix must list variables 1..n in order".into()));
    }
    let quants: Vec<Quantifier> = order.into_iter().map(|(_, q)| q).collect();
    QbfFormula::new(&quants, CnfFormula::new(p.num_vars, p.clauses)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs() {
        let f = parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1\n2 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.clauses(), &[vec![1, -2, 3], vec![-1, 2]]);
        assert!(matches!(parse_dimacs("1 2 0\n"), Err(PpgError::Syntax { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 2 0\n"), Err(PpgError::Syntax { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 5 0\n"), Err(PpgError::InvalidFormula(_))));
        assert!(matches!(parse_dimacs("p cnf 2 1\na 1 0\n1 0\n"), Err(PpgError::Syntax { line: 2, .. })));
    }

    #[test]
    fn qdimacs() {
        let q = parse_qdimacs("p cnf 4 2\na 1 0\ne 2 0\na 3 0\ne 4 0\n1 2 3 0\n-2 3 -4 0\n").unwrap();
        assert_eq!(q.num_vars(), 4);
        assert!(parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 0\n").is_err());
        assert!(parse_qdimacs("p cnf 2 1\na 2 0\ne 1 0\n1 0\n").is_err());
        assert!(parse_qdimacs("p cnf 3 1\na 1 0\ne 2 0\na 3 0\n1 0\n").is_err());
    }
}
