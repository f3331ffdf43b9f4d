//! Instance generators for the hardness constructions, plus the Connect-k
//! board. Each generator has a brute-force counterpart in [`referee`].

mod dimacs;
pub mod referee;

pub use dimacs::{parse_dimacs, parse_qdimacs};

use crate::error::{PpgError, Result};
use crate::game::{Convention, Game};
use crate::poset::Poset;

/// A CNF formula whose clauses hold at most three distinct literals.
/// Literal `i` is variable `i`, `-i` its negation (1-based, DIMACS style).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Literals inside a clause are deduplicated, so `(x1 ∨ x1 ∨ x1)` is the
    /// unit clause `(x1)`.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, mut c) in clauses.into_iter().enumerate() {
            if let Some(&bad) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(PpgError::InvalidFormula(format!("clause {}: literal {bad} out of range 1..={num_vars}", j + 1)));
            }
            c.sort_unstable_by_key(|l| (l.unsigned_abs(), *l < 0));
            c.dedup();
            if c.is_empty() {
                return Err(PpgError::InvalidFormula(format!("clause {} is empty", j + 1)));
            }
            if c.len() > 3 {
                return Err(PpgError::InvalidFormula(format!("clause {} has {} literals, at most 3 allowed", j + 1, c.len())));
            }
            out.push(c);
        }
        Ok(CnfFormula { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `values[i]` is the value of variable `i + 1`.
    pub fn eval(&self, values: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| values[l.unsigned_abs() as usize - 1] == (l > 0)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    Forall,
    Exists,
}

/// `∀x1 ∃x2 … ∀x(2n-1) ∃x(2n) φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbfFormula {
    matrix: CnfFormula,
}

impl QbfFormula {
    /// `prefix[i]` quantifies variable `i + 1`. The prefix must alternate
    /// strictly, start with ∀, end with ∃ and cover every variable.
    pub fn new(prefix: &[Quantifier], matrix: CnfFormula) -> Result<QbfFormula> {
        if prefix.len() != matrix.num_vars() {
            return Err(PpgError::InvalidFormula(format!(
                "prefix quantifies {} variables, matrix has {}",
                prefix.len(),
                matrix.num_vars()
            )));
        }
        if prefix.len() % 2 == 1 {
            return Err(PpgError::InvalidFormula("prefix must end with an existential variable".into()));
        }
        for (i, &q) in prefix.iter().enumerate() {
            let want = if i % 2 == 0 { Quantifier::Forall } else { Quantifier::Exists };
            if q != want {
                return Err(PpgError::InvalidFormula(format!(
                    "variable {} must be {}",
                    i + 1,
                    if want == Quantifier::Forall { "universal" } else { "existential" }
                )));
            }
        }
        Ok(QbfFormula { matrix })
    }

    /// Alternating prefix over the matrix's variables.
    pub fn alternating(matrix: CnfFormula) -> Result<QbfFormula> {
        let prefix: Vec<Quantifier> = (0..matrix.num_vars())
            .map(|i| if i % 2 == 0 { Quantifier::Forall } else { Quantifier::Exists })
            .collect();
        QbfFormula::new(&prefix, matrix)
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    pub fn num_vars(&self) -> usize {
        self.matrix.num_vars
    }
}

/// A hypergraph `(V, E)` with a budget `k`. Every element lies in some edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    elements: Vec<String>,
    edges: Vec<Vec<usize>>,
    k: usize,
}

impl CoverInstance {
    pub fn new(elements: Vec<String>, edges: Vec<Vec<usize>>, k: usize) -> Result<CoverInstance> {
        let n = elements.len();
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(PpgError::DuplicateVertex(e.clone()));
            }
        }
        let mut covered = vec![false; n];
        let mut edges_out = Vec::with_capacity(edges.len());
        for mut e in edges {
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(PpgError::UnknownVertex(format!("#{bad}")));
            }
            e.sort_unstable();
            e.dedup();
            for &v in &e {
                covered[v] = true;
            }
            edges_out.push(e);
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(PpgError::PreconditionViolated(format!("element {} lies in no edge", elements[v])));
        }
        let m = edges_out.len();
        if k > m || k > n {
            return Err(PpgError::InvalidBudget(format!("k = {k} with {n} elements and {m} edges")));
        }
        Ok(CoverInstance { elements, edges: edges_out, k })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// An Avoid True position: a positive DNF whose terms hold one or two
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidTrue {
    vars: Vec<String>,
    clauses: Vec<Vec<usize>>,
}

impl AvoidTrue {
    pub fn new(vars: Vec<String>, clauses: Vec<Vec<usize>>) -> Result<AvoidTrue> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, mut c) in clauses.into_iter().enumerate() {
            if let Some(&bad) = c.iter().find(|&&v| v >= vars.len()) {
                return Err(PpgError::InvalidFormula(format!("clause {}: unknown variable #{bad}", j + 1)));
            }
            c.sort_unstable();
            c.dedup();
            if c.is_empty() || c.len() > 2 {
                return Err(PpgError::InvalidFormula(format!("clause {} must hold one or two variables", j + 1)));
            }
            out.push(c);
        }
        Ok(AvoidTrue { vars, clauses: out })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }
}

fn literal_vertex(l: i32) -> usize {
    // Variable i owns u, v, nv, tv at 4(i-1)..4(i-1)+3.
    let base = 4 * (l.unsigned_abs() as usize - 1);
    if l > 0 {
        base + 1
    } else {
        base + 2
    }
}

/// Height-2 game: `u_i` below `v_i`, `nv_i`, `tv_i`; one winning set per
/// clause made of its literal vertices. Breaker wins (Maker first) iff the
/// formula is satisfiable.
pub fn from_3sat(f: &CnfFormula) -> Result<Game> {
    let mut names = Vec::with_capacity(4 * f.num_vars);
    let mut edges = Vec::with_capacity(3 * f.num_vars);
    for i in 1..=f.num_vars {
        let base = names.len();
        names.extend([format!("u{i}"), format!("v{i}"), format!("nv{i}"), format!("tv{i}")]);
        edges.extend([(base, base + 1), (base, base + 2), (base, base + 3)]);
    }
    let poset = Poset::from_edges(names, &edges)?;
    let sets = f.clauses.iter().map(|c| c.iter().map(|&l| literal_vertex(l)).collect()).collect();
    Game::new(poset, sets, Convention::MakerBreaker)
}

/// Height-3 game with the single winning set `{x}`. Breaker wins (Maker
/// first) iff the hypergraph has a cover by `k` edges.
pub fn from_setcover(c: &CoverInstance) -> Result<Game> {
    let (n, m, k) = (c.elements.len(), c.edges.len(), c.k);
    let mut names: Vec<String> = c.elements.iter().map(|e| format!("V.{e}")).collect();
    let xe = names.len();
    names.extend((1..=m).map(|j| format!("E.{j}")));
    let xm = names.len();
    names.extend((1..=m - k).map(|j| format!("M.{j}")));
    let xb = names.len();
    names.extend((1..=n - k).map(|j| format!("B.{j}")));
    let x = names.len();
    names.push("x".into());
    let y = names.len();
    names.push("y".into());

    let mut edges = Vec::new();
    for a in xm..xb {
        edges.extend((0..n).map(|v| (a, v)));
    }
    for (j, e) in c.edges.iter().enumerate() {
        edges.extend(e.iter().map(|&v| (xe + j, v)));
        edges.extend((xb..x).map(|b| (xe + j, b)));
    }
    edges.extend((0..n).chain(xb..x).map(|v| (v, x)));
    edges.extend((xb..x).map(|b| (b, y)));
    let poset = Poset::from_edges(names, &edges)?;
    Game::new(poset, vec![vec![x]], Convention::MakerBreaker)
}

/// Width-2 ladder `{v_i, nv_i} < u_i < {v_(i+1), nv_(i+1)}`, one winning set
/// per clause. Maker wins (Maker first) iff the formula is false.
pub fn from_3qbf(q: &QbfFormula) -> Result<Game> {
    let nv = q.num_vars();
    let mut names = Vec::with_capacity(3 * nv);
    for i in 1..=nv {
        names.extend([format!("v{i}"), format!("nv{i}")]);
    }
    let u0 = names.len();
    names.extend((1..nv).map(|i| format!("u{i}")));
    let mut edges = Vec::new();
    for i in 0..nv.saturating_sub(1) {
        let u = u0 + i;
        edges.extend([(2 * i, u), (2 * i + 1, u), (u, 2 * i + 2), (u, 2 * i + 3)]);
    }
    let poset = Poset::from_edges(names, &edges)?;
    let lit = |l: i32| 2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0);
    let sets = q.matrix.clauses.iter().map(|c| c.iter().map(|&l| lit(l)).collect()).collect();
    Game::new(poset, sets, Convention::MakerBreaker)
}

/// Maker-Maker game: a vertex per variable, and per clause a vertex above
/// its variables forming a singleton winning set. The first player wins it
/// iff the first player wins the Avoid True instance.
pub fn from_avoid_true(d: &AvoidTrue) -> Result<Game> {
    let mut names: Vec<String> = d.vars.iter().map(|v| format!("x.{v}")).collect();
    let c0 = names.len();
    names.extend((1..=d.clauses.len()).map(|j| format!("c{j}")));
    let edges: Vec<(usize, usize)> =
        d.clauses.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&v| (v, c0 + j))).collect();
    let poset = Poset::from_edges(names, &edges)?;
    let sets = (0..d.clauses.len()).map(|j| vec![c0 + j]).collect();
    Game::new(poset, sets, Convention::MakerMaker)
}

/// Connect-k on `w` columns of height `h`: each column is a chain with its
/// bottom cell minimal, and every horizontal, vertical or diagonal run of
/// `k` cells is a winning set. Cells are named `c{col}r{row}`, row 1 at the
/// bottom.
pub fn gen_connect_k(k: usize, w: usize, h: usize) -> Result<Game> {
    if k == 0 || w == 0 || h == 0 {
        return Err(PpgError::PreconditionViolated(format!("connect-k needs k, w, h >= 1 (got {k}, {w}, {h})")));
    }
    let cell = |c: usize, r: usize| c * h + r;
    let mut names = Vec::with_capacity(w * h);
    let mut edges = Vec::new();
    for c in 0..w {
        for r in 0..h {
            names.push(format!("c{}r{}", c + 1, r + 1));
            if r + 1 < h {
                edges.push((cell(c, r), cell(c, r + 1)));
            }
        }
    }
    let poset = Poset::from_edges(names, &edges)?;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let (wi, hi, ki) = (w as isize, h as isize, k as isize);
    for (dc, dr) in [(1isize, 0isize), (0, 1), (1, 1), (1, -1)] {
        for c in 0..wi {
            for r in 0..hi {
                let (ec, er) = (c + dc * (ki - 1), r + dr * (ki - 1));
                if ec < 0 || ec >= wi || er < 0 || er >= hi {
                    continue;
                }
                let mut run: Vec<usize> = (0..ki).map(|t| cell((c + dc * t) as usize, (r + dr * t) as usize)).collect();
                run.sort_unstable();
                // With k = 1 every direction yields the same single cells.
                if !sets.contains(&run) {
                    sets.push(run);
                }
            }
        }
    }
    Game::new(poset, sets, Convention::MakerBreaker)
}
