//! Brute-force deciders for the source problems of each reduction. They
//! share no code with the game solvers.

use super::{AvoidTrue, CnfFormula, CoverInstance, QbfFormula};
use crate::game::MmResult;

/// Tries all `2^n` assignments.
pub fn satisfiable(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u64..1 << n).any(|mask| {
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        f.eval(&values)
    })
}

/// Evaluates the quantifier prefix by full expansion.
pub fn qbf_true(q: &QbfFormula) -> bool {
    fn go(f: &CnfFormula, values: &mut Vec<bool>) -> bool {
        let i = values.len();
        if i == f.num_vars() {
            return f.eval(values);
        }
        let mut branch = |b: bool| {
            values.push(b);
            let r = go(f, values);
            values.pop();
            r
        };
        if i.is_multiple_of(2) {
            branch(false) && branch(true)
        } else {
            branch(false) || branch(true)
        }
    }
    go(q.matrix(), &mut Vec::new())
}

/// Whether at most `k` edges cover every element. With `k <= m` this is the
/// same as a cover by exactly `k` edges.
pub fn cover_exists(c: &CoverInstance) -> bool {
    let n = c.elements().len();
    let m = c.edges().len();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let masks: Vec<u64> = c.edges().iter().map(|e| e.iter().fold(0, |a, &v| a | 1 << v)).collect();
    (0u64..1 << m).filter(|s| s.count_ones() as usize <= c.k()).any(|s| {
        let cov = (0..m).filter(|j| s >> j & 1 == 1).fold(0u64, |a, j| a | masks[j]);
        cov == full
    })
}

/// Plays Avoid True out: players alternately set an unset variable to
/// true, and whoever first makes some term true loses. Returns the result
/// for the first player; a draw only happens with no terms at all.
pub fn avoid_true(d: &AvoidTrue) -> MmResult {
    let terms: Vec<u64> = d.clauses().iter().map(|c| c.iter().fold(0, |a, &v| a | 1 << v)).collect();
    let n = d.vars().len();
    fn value(set: u64, n: usize, terms: &[u64]) -> i8 {
        let free: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 0).collect();
        if free.is_empty() {
            return 0;
        }
        let mut best = -1;
        for v in free {
            let next = set | 1 << v;
            let v = if terms.iter().any(|&t| t & !next == 0) { -1 } else { -value(next, n, terms) };
            best = best.max(v);
            if best == 1 {
                break;
            }
        }
        best
    }
    match value(0, n, &terms) {
        1 => MmResult::FirstWin,
        -1 => MmResult::SecondWin,
        _ => MmResult::Draw,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn referees() {
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!satisfiable(&f));
        assert!(satisfiable(&CnfFormula::new(2, vec![vec![1, 2], vec![-1]]).unwrap()));
        // ∀x1 ∃x2 (x1 ∨ x2) ∧ (¬x1 ∨ ¬x2): x2 = ¬x1.
        let q = QbfFormula::alternating(CnfFormula::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap()).unwrap();
        assert!(qbf_true(&q));
        let q = QbfFormula::alternating(CnfFormula::new(2, vec![vec![1]]).unwrap()).unwrap();
        assert!(!qbf_true(&q));
        let c = CoverInstance::new(vec!["a".into(), "b".into()], vec![vec![0], vec![1], vec![0, 1]], 1).unwrap();
        assert!(cover_exists(&c));
        // One term on both variables: the second move completes it.
        let d = AvoidTrue::new(vec!["a".into(), "b".into()], vec![vec![0, 1]]).unwrap();
        assert_eq!(avoid_true(&d), MmResult::FirstWin);
        // A third, free variable hands the last move to the first player.
        let d = AvoidTrue::new(vec!["a".into(), "b".into(), "c".into()], vec![vec![0, 1]]).unwrap();
        assert_eq!(avoid_true(&d), MmResult::SecondWin);
    }
}
