//! Finite posets stored as Hasse edges plus an eagerly computed closure.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{PpgError, Result};

/// Vertex color on a disjoint-chain poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

/// Summary statistics returned by [`Poset::stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetStats {
    pub height: usize,
    pub width: usize,
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
}

/// A finite partial order on named vertices.
///
/// Vertices are densely indexed in declaration order. `up[x]` holds every
/// `y` with `x <= y`.
#[derive(Clone)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("vertices", &self.names)
            .field("covers", &self.cover_names())
            .finish()
    }
}

/// Two posets are equal when they have the same vertices in the same order
/// and the same order relation.
impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from vertex names and pairs `(a, b)` meaning `a < b`.
    /// Pairs need not be covers; redundant ones are reduced away.
    pub fn build<S: AsRef<str>>(vertices: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let mut index = HashMap::with_capacity(vertices.len());
        let mut names = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if index.insert(v.to_string(), names.len()).is_some() {
                return Err(PpgError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut edges = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| PpgError::UnknownVertex(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| PpgError::UnknownVertex(b.as_ref().to_string()))?;
            edges.push((ia, ib));
        }
        Poset::from_edges(names, &edges)
    }

    /// Builds a poset from names and index pairs `(a, b)` meaning `a < b`.
    pub fn from_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, v) in names.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(PpgError::DuplicateVertex(v.clone()));
            }
        }
        let mut raw_succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(PpgError::UnknownVertex(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(PpgError::CycleDetected(names[a].clone()));
            }
            raw_succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm; leftover vertices lie on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &s in &raw_succ[v] {
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    queue.push_back(s);
                }
            }
        }
        if order.len() < n {
            let bad = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(PpgError::CycleDetected(names[bad].clone()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &s in &raw_succ[v] {
                row.union_with(&up[s]);
            }
            up[v] = row;
        }
        Ok(Poset::from_closure(names, index, up))
    }

    fn from_closure(names: Vec<String>, index: HashMap<String, usize>, up: Vec<FixedBitSet>) -> Poset {
        let n = names.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for a in 0..n {
            let mut strict = up[a].clone();
            strict.set(a, false);
            let mut above = FixedBitSet::with_capacity(n);
            for c in strict.ones() {
                let mut sc = up[c].clone();
                sc.set(c, false);
                above.union_with(&sc);
            }
            strict.difference_with(&above);
            for b in strict.ones() {
                succs[a].push(b);
                preds[b].push(a);
            }
        }
        Poset { names, index, preds, succs, up, down }
    }

    /// The subposet induced on `keep`, with vertices in their original order.
    pub fn induced(&self, keep: &FixedBitSet) -> Poset {
        let kept: Vec<usize> = keep.ones().collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let names: Vec<String> = kept.iter().map(|&v| self.names[v].clone()).collect();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let m = kept.len();
        let up = kept
            .iter()
            .map(|&v| {
                let mut row = FixedBitSet::with_capacity(m);
                for w in self.up[v].ones() {
                    if remap[w] != usize::MAX {
                        row.insert(remap[w]);
                    }
                }
                row
            })
            .collect();
        Poset::from_closure(names, index, up)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Like [`Poset::index_of`] but reports unknown names as errors.
    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| PpgError::UnknownVertex(name.to_string()))
    }

    /// Immediate predecessors (Hasse edges into `v`).
    pub fn preds(&self, v: usize) -> &[usize] {
        &self.preds[v]
    }

    /// Immediate successors (Hasse edges out of `v`).
    pub fn succs(&self, v: usize) -> &[usize] {
        &self.succs[v]
    }

    /// All `y` with `v <= y`.
    pub fn up(&self, v: usize) -> &FixedBitSet {
        &self.up[v]
    }

    /// All `y` with `y <= v`.
    pub fn down(&self, v: usize) -> &FixedBitSet {
        &self.down[v]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.preds[v].is_empty()
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        self.succs[v].is_empty()
    }

    /// Hasse edges as index pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|a| self.succs[a].iter().map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn cover_names(&self) -> Vec<(String, String)> {
        self.covers()
            .into_iter()
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.comparable(a, b)))
    }

    /// Number of vertices not above-or-equal to `v`.
    pub fn p_value(&self, v: usize) -> usize {
        self.len() - self.up[v].count_ones(..)
    }

    /// Length of the longest chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut memo = vec![0usize; n];
        // Vertices sorted by size of their down-set form a linear extension.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| self.down[v].count_ones(..));
        let mut best = 0;
        for v in order {
            let h = 1 + self.preds[v].iter().map(|&p| memo[p]).max().unwrap_or(0);
            memo[v] = h;
            best = best.max(h);
        }
        best
    }

    /// Size of the largest antichain, via Dilworth and a maximum matching on
    /// the strict comparability graph.
    pub fn width(&self) -> usize {
        let n = self.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|a| self.up[a].ones().filter(|&b| b != a).collect())
            .collect();
        let mut match_right = vec![usize::MAX; n];
        let mut matched = 0;
        for a in 0..n {
            let mut seen = vec![false; n];
            if augment(a, &adj, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_minimal(v)).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_maximal(v)).collect()
    }

    pub fn stats(&self) -> PosetStats {
        PosetStats {
            height: self.height(),
            width: self.width(),
            minimal: self.minimal(),
            maximal: self.maximal(),
        }
    }

    /// Splits the poset into disjoint chains, each listed top to bottom.
    /// Chains are ordered by their lowest vertex index. Returns `None` when
    /// some vertex has two predecessors or two successors.
    pub fn chain_decomposition(&self) -> Option<Vec<Vec<usize>>> {
        if (0..self.len()).any(|v| self.preds[v].len() > 1 || self.succs[v].len() > 1) {
            return None;
        }
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let mut owner = vec![usize::MAX; self.len()];
        for v in 0..self.len() {
            if owner[v] != usize::MAX {
                continue;
            }
            let mut top = v;
            while let Some(&s) = self.succs[top].first() {
                top = s;
            }
            let mut chain = vec![top];
            let mut cur = top;
            while let Some(&p) = self.preds[cur].first() {
                chain.push(p);
                cur = p;
            }
            for &x in &chain {
                owner[x] = chains.len();
            }
            chains.push(chain);
        }
        Some(chains)
    }

    /// Color of `v` when the poset is a disjoint union of chains: the vertex
    /// at depth `j` from the top of its chain is White iff `j` and the board
    /// size have the same parity.
    pub fn color_of(&self, v: usize) -> Result<Color> {
        let chains = self.chain_decomposition().ok_or(PpgError::NotChainPoset)?;
        let chain = chains.iter().find(|c| c.contains(&v)).expect("vertex in some chain");
        let j = chain.iter().position(|&x| x == v).unwrap() + 1;
        Ok(color_at(j, self.len()))
    }
}

/// Color of depth `j` (1-based from the top) on a board of `n` vertices.
pub fn color_at(j: usize, n: usize) -> Color {
    if j % 2 == n % 2 {
        Color::White
    } else {
        Color::Black
    }
}

fn augment(a: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [usize]) -> bool {
    for &b in &adj[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if match_right[b] == usize::MAX || augment(match_right[b], adj, seen, match_right) {
            match_right[b] = a;
            return true;
        }
    }
    false
}
