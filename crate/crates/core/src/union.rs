//! Disjoint unions, removal of winset-free components, the table of
//! possible union outcomes and the games realizing every cell of it.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{PpgError, Result};
use crate::game::{Convention, Game, Outcome};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(g: &Game) -> Parity {
        if g.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Side-by-side union with no relations across. Vertices of `g1` get the
/// prefix `1.` and those of `g2` the prefix `2.`.
pub fn disjoint_union(g1: &Game, g2: &Game) -> Result<Game> {
    if g1.convention() != g2.convention() {
        return Err(PpgError::ConventionMismatch(format!(
            "cannot join a {} game with a {} game",
            g1.convention(),
            g2.convention()
        )));
    }
    let n1 = g1.len();
    let names: Vec<String> = g1
        .poset()
        .names()
        .iter()
        .map(|s| format!("1.{s}"))
        .chain(g2.poset().names().iter().map(|s| format!("2.{s}")))
        .collect();
    let edges: Vec<(usize, usize)> = g1
        .poset()
        .covers()
        .into_iter()
        .chain(g2.poset().covers().into_iter().map(|(a, b)| (a + n1, b + n1)))
        .collect();
    let sets = g1
        .winsets()
        .iter()
        .cloned()
        .chain(g2.winsets().iter().map(|s| s.iter().map(|&v| v + n1).collect()))
        .collect();
    Game::new(Poset::from_edges(names, &edges)?, sets, g1.convention())
}

/// Drops every connected component (through order relations and shared
/// winning sets) that meets no winning set. If the dropped vertices were
/// odd in number, one of them is kept as an isolated vertex.
pub fn simplify_empty_component(g: &Game) -> Game {
    let n = g.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = v;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    let mut join = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    for (a, b) in g.poset().covers() {
        join(a, b);
    }
    for s in g.winsets() {
        for w in s.windows(2) {
            join(w[0], w[1]);
        }
    }
    let mut live_root = FixedBitSet::with_capacity(n);
    for s in g.winsets() {
        for &v in s {
            live_root.insert(find(&mut parent, v));
        }
    }
    let mut keep = FixedBitSet::with_capacity(n);
    let mut free = Vec::new();
    for v in 0..n {
        if live_root.contains(find(&mut parent, v)) {
            keep.insert(v);
        } else {
            free.push(v);
        }
    }
    if free.len() % 2 == 1 {
        keep.insert(free[0]);
    }
    g.restrict(&keep, |_| false)
}

/// Possible outcomes of `G1 ∪ G2` from the parities and outcomes of the
/// parts, sorted as M, N, P, B.
pub fn union_table_lookup(p1: Parity, p2: Parity, o1: Outcome, o2: Outcome) -> Vec<Outcome> {
    use Outcome::*;
    const ALL: &[Outcome] = &[M, N, P, B];
    let idx = |o: Outcome| o as usize;
    let cell: &[Outcome] = match (p1, p2) {
        (Parity::Even, Parity::Even) => EVEN_EVEN[idx(o1)][idx(o2)],
        (Parity::Even, Parity::Odd) => EVEN_ODD[idx(o1)][idx(o2)],
        (Parity::Odd, Parity::Even) => EVEN_ODD[idx(o2)][idx(o1)],
        (Parity::Odd, Parity::Odd) => ODD_ODD[idx(o1)][idx(o2)],
    };
    let cell = if cell.is_empty() { ALL } else { cell };
    cell.to_vec()
}

// Rows: outcome of the first game, columns: outcome of the second, both in
// M, N, P, B order. An empty slice means every outcome is possible.
type Table = [[&'static [Outcome]; 4]; 4];

const EVEN_EVEN: Table = {
    use Outcome::*;
    [
        [&[M], &[M], &[M], &[M]],
        [&[M], &[M, N], &[M], &[M, N]],
        [&[M], &[M], &[P], &[P]],
        [&[M], &[M, N], &[P], &[P, B]],
    ]
};

/// Rows: the even game. Columns: the odd game.
const EVEN_ODD: Table = {
    use Outcome::*;
    [
        [&[M], &[M, N], &[M], &[M, N]],
        [&[M], &[M, N], &[M], &[]],
        [&[M], &[N], &[M], &[N]],
        [&[M], &[N], &[M, P], &[N, B]],
    ]
};

const ODD_ODD: Table = {
    use Outcome::*;
    [
        [&[M], &[M], &[M], &[M, N]],
        [&[M], &[M, P], &[M, N], &[]],
        [&[M], &[M, N], &[M], &[M, N]],
        [&[M, N], &[], &[M, N], &[]],
    ]
};

/// A small named game with a known outcome.
#[derive(Debug, Clone)]
pub struct Witness {
    pub name: &'static str,
    pub game: Game,
    pub outcome: Outcome,
}

fn chain(n: usize) -> Vec<(String, String)> {
    (1..n).map(|i| (format!("u{i}"), format!("u{}", i + 1))).collect()
}

fn build(name: &'static str, n: usize, covers: Vec<(String, String)>, sets: &[&[usize]], outcome: Outcome) -> Witness {
    let vertices: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    let sets: Vec<Vec<String>> = sets.iter().map(|s| s.iter().map(|i| format!("u{i}")).collect()).collect();
    let game = Game::from_names(&vertices, &covers, &sets, Convention::MakerBreaker).expect("witness is well formed");
    Witness { name, game, outcome }
}

fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect()
}

/// The fifteen games whose pairwise unions realize every table cell.
/// Vertices are `u1, u2, ...`, numbered from the bottom.
pub fn witness_catalog() -> Vec<Witness> {
    use Outcome::*;
    let fork = pairs(&[("u1", "u3"), ("u2", "u3"), ("u3", "u4")]);
    let mut fork5 = fork.clone();
    fork5.push(("u4".into(), "u5".into()));
    let mut om = chain(3);
    om.push(("u3".into(), "u4".into()));
    om.push(("u3".into(), "u5".into()));
    vec![
        build("EM", 4, chain(4), &[&[1], &[4]], M),
        build("EN1", 2, chain(2), &[&[1]], N),
        build("EN2", 4, chain(4), &[&[3]], N),
        build("EN3", 4, chain(4), &[&[1, 3]], N),
        build("EB1", 2, chain(2), &[&[1, 2]], B),
        build("EB2", 4, fork, &[&[1, 2], &[1, 4]], B),
        build("OM", 5, om, &[&[1], &[5]], M),
        build("ON1", 1, vec![], &[&[1]], N),
        build("ON2", 3, chain(3), &[&[3]], N),
        build("ON3", 3, chain(3), &[&[1, 3]], N),
        build("OP", 3, chain(3), &[&[2]], P),
        build("OB1", 3, chain(3), &[&[1, 2, 3]], B),
        build("OB2", 5, chain(5), &[&[1, 4], &[2, 5]], B),
        build("OB3", 5, fork5, &[&[1, 2], &[1, 4]], B),
        ob4(),
    ]
}

fn ob4() -> Witness {
    let vertices = ["u0", "u1", "u2", "u3", "u4"];
    let covers = [("u0", "u1"), ("u0", "u2"), ("u1", "u3"), ("u2", "u3"), ("u3", "u4")];
    let sets = [vec!["u1", "u2"], vec!["u1", "u4"]];
    let game = Game::from_names(&vertices, &covers, &sets, Convention::MakerBreaker).expect("witness is well formed");
    Witness { name: "OB4", game, outcome: Outcome::B }
}

pub fn witness(name: &str) -> Option<Witness> {
    witness_catalog().into_iter().find(|w| w.name.eq_ignore_ascii_case(name))
}

/// Pairs of catalog games and the outcome of their union, one or more per
/// table cell, covering every value in every cell.
pub const COMPLETENESS_PAIRS: &[(&str, &str, Outcome)] = {
    use Outcome::*;
    &[
        ("EN1", "EN1", M),
        ("EN1", "EN2", N),
        ("EN1", "EB1", N),
        ("EN1", "EB2", M),
        ("EB1", "EB1", B),
        ("EB2", "EB2", P),
        ("EM", "ON1", M),
        ("EM", "ON2", N),
        ("EN1", "ON1", M),
        ("EN1", "ON2", N),
        ("EB2", "OP", M),
        ("EB1", "OP", P),
        ("EM", "OB3", M),
        ("EM", "OB1", N),
        ("EN1", "OB3", M),
        ("EN1", "OB1", N),
        ("EN2", "OB1", P),
        ("EN3", "OB1", B),
        ("EB2", "OB1", N),
        ("EB1", "OB1", B),
        ("OM", "OB3", M),
        ("OM", "OB1", N),
        ("ON1", "ON1", M),
        ("ON2", "ON2", P),
        ("ON2", "OP", M),
        ("ON1", "OP", N),
        ("ON2", "OB2", M),
        ("ON1", "OB1", N),
        ("ON2", "OB1", P),
        ("ON3", "OB1", B),
        ("OP", "OB2", M),
        ("OP", "OB1", N),
        ("OB2", "OB2", M),
        ("OB1", "OB3", N),
        ("OB4", "OB4", P),
        ("OB1", "OB1", B),
    ]
};
