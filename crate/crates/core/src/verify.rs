//! Oracle-equivalence harness shared by the CLI `verify` command and the
//! acceptance suite. Every check fans out over rayon and returns a
//! [`Report`] listing the instances that disagreed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::chains::{self, ChainView};
use crate::dispatch::{self, Algo};
use crate::error::Result;
use crate::format::write_instance;
use crate::game::{Convention, Game, Player, Position, Status};
use crate::oracle;
use crate::poly;
use crate::poset::{Color, Poset};
use crate::random::{self, chain_board, ChainSpec, GenSpec};
use crate::reductions::{self, referee, AvoidTrue, CnfFormula, CoverInstance, QbfFormula};
use crate::union::{self, Parity};

/// How many failing instances a report keeps verbatim.
const KEEP: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl Report {
    fn collect(name: &str, results: Vec<Option<String>>) -> Report {
        let checked = results.len();
        let bad: Vec<String> = results.into_iter().flatten().collect();
        Report { name: name.to_string(), checked, failed: bad.len(), failures: bad.into_iter().take(KEEP).collect() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} checked, {} failed", self.name, self.checked, self.failed)?;
        for x in &self.failures {
            write!(f, "\n  {x}")?;
        }
        Ok(())
    }
}

fn rng_for(seed: u64, i: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(i);
    r
}

fn describe(g: &Game) -> String {
    write_instance(g).replace('\n', "; ")
}

fn mismatch<T: PartialEq + fmt::Debug>(g: &Game, got: Result<T>, want: Result<T>) -> Option<String> {
    match (got, want) {
        (Ok(a), Ok(b)) if a == b => None,
        (a, b) => Some(format!("got {a:?}, oracle {b:?} on {}", describe(g))),
    }
}

/// Oracle outcome of each catalog game against its recorded class.
pub fn witnesses() -> Report {
    let results = union::witness_catalog()
        .par_iter()
        .map(|w| match oracle::outcome4(&w.game) {
            Ok(o) if o == w.outcome => None,
            r => Some(format!("{}: expected {}, got {r:?}", w.name, w.outcome)),
        })
        .collect();
    Report::collect("witnesses", results)
}

/// Every listed pair of catalog games has the recorded union outcome.
pub fn union_completeness() -> Report {
    let results = union::COMPLETENESS_PAIRS
        .par_iter()
        .map(|&(a, b, want)| {
            let (ga, gb) = (union::witness(a)?.game, union::witness(b)?.game);
            match union::disjoint_union(&ga, &gb).and_then(|u| oracle::outcome4(&u)) {
                Ok(o) if o == want => None,
                r => Some(format!("{a} + {b}: expected {want}, got {r:?}")),
            }
        })
        .collect();
    Report::collect("union completeness", results)
}

/// A random component: a catalog game one time in four, else a random game
/// of at most `max_n` vertices.
fn random_component(rng: &mut ChaCha8Rng, max_n: usize) -> Game {
    if rng.gen_ratio(1, 4) {
        let cat = union::witness_catalog();
        let fits: Vec<_> = cat.into_iter().filter(|w| w.game.len() <= max_n).collect();
        if !fits.is_empty() {
            return fits[rng.gen_range(0..fits.len())].game.clone();
        }
    }
    let n = rng.gen_range(1..=max_n.max(1));
    let spec = GenSpec {
        n,
        width: rng.gen_range(1..=n.min(3)),
        winsets: rng.gen_range(0..=3),
        size: rng.gen_range(1..=n.min(3)),
        seed: rng.gen(),
    };
    random::random_game(&spec).expect("spec is feasible")
}

/// Random pairs whose union outcome must lie in the table cell of their
/// parities and outcomes.
pub fn union_soundness(samples: usize, max_n: usize, seed: u64) -> Report {
    let results = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let g1 = random_component(&mut rng, max_n);
            let g2 = random_component(&mut rng, max_n);
            let run = || -> Result<Option<String>> {
                let (o1, o2) = (oracle::outcome4(&g1)?, oracle::outcome4(&g2)?);
                let o = oracle::outcome4(&union::disjoint_union(&g1, &g2)?)?;
                let cell = union::union_table_lookup(Parity::of(&g1), Parity::of(&g2), o1, o2);
                Ok((!cell.contains(&o)).then(|| {
                    format!("union is {o}, cell {cell:?}; G1 ({o1}) {}; G2 ({o2}) {}", describe(&g1), describe(&g2))
                }))
            };
            run().unwrap_or_else(|e| Some(format!("error: {e}")))
        })
        .collect();
    Report::collect("union soundness", results)
}

/// Solver families checked against the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Exhaustive: height at most 2, one singleton winning set.
    Height2Single,
    /// Exhaustive: height at most 2, winning sets are the non-minimal singletons.
    Height2AllTops,
    /// Exhaustive: disjoint chains with singleton winning sets.
    ChainsWs1,
    /// Exhaustive: chains of height at most 2, at most three sets of size at most 2.
    ChainsH2Ws2,
    /// Random: the antichain DP, both conventions.
    Dp,
    /// Random: the chain DP.
    ChainsWs2,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Height2Single, Family::Height2AllTops, Family::ChainsWs1, Family::ChainsH2Ws2, Family::Dp, Family::ChainsWs2];

    pub fn name(self) -> &'static str {
        match self {
            Family::Height2Single => "height2-single",
            Family::Height2AllTops => "height2-all-tops",
            Family::ChainsWs1 => "chains-ws1",
            Family::ChainsH2Ws2 => "chains-h2-ws2",
            Family::Dp => "dp",
            Family::ChainsWs2 => "chains-ws2",
        }
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Nondecreasing sequences of length `len` over `1..limit`.
fn multisets(len: usize, limit: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, limit: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for m in lo..limit {
            cur.push(m);
            go(len, m, limit, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, limit, &mut Vec::new(), &mut out);
    out
}

/// Height-2 posets up to relabeling of the tops: `b` bottoms and `t` tops,
/// each top given by the nonempty set of bottoms below it.
pub fn height2_posets(max_n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    for b in 1..=max_n {
        for t in 0..=max_n - b {
            for masks in multisets(t, 1 << b) {
                let names: Vec<String> = (1..=b).map(|i| format!("a{i}")).chain((1..=t).map(|j| format!("t{j}"))).collect();
                let edges: Vec<(usize, usize)> = masks
                    .iter()
                    .enumerate()
                    .flat_map(|(j, &m)| (0..b).filter(move |i| m >> i & 1 == 1).map(move |i| (i, b + j)))
                    .collect();
                out.push(Poset::from_edges(names, &edges).expect("bipartite order is acyclic"));
            }
        }
    }
    out
}

/// Chain heights as partitions of `n`, largest first.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for h in (1..=left.min(max)).rev() {
            cur.push(h);
            go(left - h, h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn chain_poset(heights: &[usize]) -> Poset {
    let (names, edges) = chain_board(heights);
    Poset::from_edges(names, &edges).expect("chains are acyclic")
}

fn mb(p: &Poset, sets: Vec<Vec<usize>>) -> Game {
    Game::new(p.clone(), sets, Convention::MakerBreaker).expect("indices are in range")
}

fn against_oracle(g: &Game, winner: Result<Player>) -> Option<String> {
    mismatch(g, winner, oracle::solve_mb(g, Player::Maker))
}

fn height2_single(max_n: usize) -> Vec<Option<String>> {
    let games: Vec<Game> = height2_posets(max_n).iter().flat_map(|p| (0..p.len()).map(|x| mb(p, vec![vec![x]]))).collect();
    games.par_iter().map(|g| against_oracle(g, poly::solve_height2_single_ws1(g).map(|v| v.winner))).collect()
}

fn height2_all_tops(max_n: usize) -> Vec<Option<String>> {
    let games: Vec<Game> = height2_posets(max_n)
        .iter()
        .map(|p| mb(p, (0..p.len()).filter(|&v| !p.is_minimal(v)).map(|v| vec![v]).collect()))
        .collect();
    games.par_iter().map(|g| against_oracle(g, poly::solve_height2_all_tops(g).map(|v| v.winner))).collect()
}

fn chains_ws1(max_n: usize) -> Vec<Option<String>> {
    let mut games = Vec::new();
    for n in 1..=max_n {
        for heights in partitions(n) {
            let p = chain_poset(&heights);
            for mask in 0u32..1 << n {
                games.push(mb(&p, (0..n).filter(|v| mask >> v & 1 == 1).map(|v| vec![v]).collect()));
            }
        }
    }
    games.par_iter().map(|g| against_oracle(g, poly::solve_chains_ws1(g).map(|v| v.winner))).collect()
}

fn chains_h2_ws2(max_n: usize, max_sets: usize) -> Vec<Option<String>> {
    let mut shapes = Vec::new();
    for n in 1..=max_n {
        for tall in 0..=n / 2 {
            let mut h = vec![2; tall];
            h.extend(std::iter::repeat_n(1, n - 2 * tall));
            shapes.push(h);
        }
    }
    shapes
        .par_iter()
        .flat_map_iter(|heights| {
            let p = chain_poset(heights);
            let n = p.len();
            let mut cands: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
            for a in 0..n {
                cands.extend((a + 1..n).map(|b| vec![a, b]));
            }
            let mut families: Vec<Vec<usize>> = vec![vec![]];
            let mut frontier = families.clone();
            for _ in 0..max_sets {
                let mut next = Vec::new();
                for f in &frontier {
                    let lo = f.last().map_or(0, |&i| i + 1);
                    for i in lo..cands.len() {
                        let mut g = f.clone();
                        g.push(i);
                        next.push(g);
                    }
                }
                families.extend(next.iter().cloned());
                frontier = next;
            }
            families.into_iter().map(move |f| {
                let g = mb(&p, f.iter().map(|&i| cands[i].clone()).collect());
                against_oracle(&g, chains::solve_chains_h2_ws2(&g))
            })
        })
        .collect()
}

fn random_dp(count: usize, seed: u64) -> Vec<Option<String>> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let n = rng.gen_range(1..=12);
            let spec = GenSpec {
                n,
                width: rng.gen_range(1..=n.min(3)),
                winsets: rng.gen_range(0..=4),
                size: rng.gen_range(1..=n.min(4)),
                seed: rng.gen(),
            };
            let g = random::random_game(&spec).expect("spec is feasible");
            let four = |algo| dispatch::outcome(&g, algo).map(|r| r.0);
            if let Some(e) = mismatch(&g, four(Algo::Dp), oracle::outcome4(&g)) {
                return Some(e);
            }
            let m = g.clone().with_convention(Convention::MakerMaker);
            mismatch(&m, crate::dp::solve_dp_mm(&m), oracle::solve_mm(&m, Player::Maker))
        })
        .collect()
}

fn random_chains_ws2(count: usize, seed: u64) -> Vec<Option<String>> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let chains = rng.gen_range(1..=3);
            let spec = ChainSpec {
                chains,
                max_height: 12 / chains,
                winsets: rng.gen_range(0..=4),
                max_size: 2,
                seed: rng.gen(),
            };
            let g = random::random_chain_game(&spec).expect("spec is feasible");
            against_oracle(&g, chains::solve_chains_ws2(&g))
        })
        .collect()
}

/// Runs one family. Exhaustive families ignore `count` and `seed`.
pub fn solver_family(f: Family, count: usize, seed: u64) -> Report {
    let results = match f {
        Family::Height2Single => height2_single(7),
        Family::Height2AllTops => height2_all_tops(7),
        Family::ChainsWs1 => chains_ws1(8),
        Family::ChainsH2Ws2 => chains_h2_ws2(8, 3),
        Family::Dp => random_dp(count, seed),
        Family::ChainsWs2 => random_chains_ws2(count, seed),
    };
    Report::collect(f.name(), results)
}

/// Removing winset-free components (keeping one vertex when their size is
/// odd) preserves the outcome class.
pub fn lemma_empty_component(instances: usize, seed: u64) -> Report {
    let results = (0..instances as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let g = random_component(&mut rng, 7);
            let n = rng.gen_range(1..=6);
            let spec = GenSpec { n, width: rng.gen_range(1..=n.min(3)), winsets: 0, size: 0, seed: rng.gen() };
            let empty = random::random_game(&spec).expect("spec is feasible");
            let run = || -> Result<Option<String>> {
                let u = union::disjoint_union(&g, &empty)?;
                let s = union::simplify_empty_component(&u);
                let (a, b) = (oracle::outcome4(&u)?, oracle::outcome4(&s)?);
                Ok((a != b || s.len() > g.len() + 1).then(|| format!("{a} became {b}: {}", describe(&u))))
            };
            run().unwrap_or_else(|e| Some(format!("error: {e}")))
        })
        .collect();
    Report::collect("lemma: empty components", results)
}

/// With a single winning set `{x}` and one predecessor `y` of `x` left
/// unclaimed, Maker (who moved first) wins iff `p(y)` is odd. Checked on
/// every reachable such position.
pub fn lemma_last_predecessor(games: usize, seed: u64) -> Report {
    let mut instances = Vec::new();
    let mut i = 0u64;
    while instances.len() < games {
        let mut rng = rng_for(seed, i);
        i += 1;
        let n = rng.gen_range(2..=8);
        let spec = GenSpec { n, width: rng.gen_range(1..=n.min(3)), winsets: 0, size: 0, seed: rng.gen() };
        let base = random::random_game(&spec).expect("spec is feasible");
        let p = base.poset();
        let tops: Vec<usize> = (0..n).filter(|&v| !p.is_minimal(v)).collect();
        if tops.is_empty() {
            continue;
        }
        let x = tops[rng.gen_range(0..tops.len())];
        instances.push(mb(p, vec![vec![x]]));
    }
    let results: Vec<Vec<Option<String>>> = instances.par_iter().map(check_last_predecessor).collect();
    Report::collect("lemma: last predecessor", results.into_iter().flatten().collect())
}

fn check_last_predecessor(g: &Game) -> Vec<Option<String>> {
    let p = g.poset();
    let x = g.winsets()[0][0];
    let mut out = Vec::new();
    let mut seen = FxHashSet::default();
    let mut stack = vec![Position::start(g, Player::Maker)];
    while let Some(pos) = stack.pop() {
        let key = (pos.maker().clone(), pos.breaker().clone());
        if !seen.insert(key) || pos.status() != Status::Ongoing {
            continue;
        }
        let claimed = pos.claimed();
        let left: Vec<usize> = p.preds(x).iter().copied().filter(|&y| !claimed.contains(y)).collect();
        if let [y] = left[..] {
            let want = if p.p_value(y) % 2 == 1 { Player::Maker } else { Player::Breaker };
            out.push(match oracle::solve_position(&pos) {
                Ok(Some(w)) if w == want => None,
                r => Some(format!(
                    "p({}) = {}, expected {want:?}, got {r:?}; maker {:?}, breaker {:?}; {}",
                    p.name(y),
                    p.p_value(y),
                    pos.maker().ones().collect::<Vec<_>>(),
                    pos.breaker().ones().collect::<Vec<_>>(),
                    describe(g)
                )),
            });
        }
        for v in pos.available_moves() {
            stack.push(pos.play(v).expect("available move"));
        }
    }
    out
}

/// Removing the top of the chain above a black singleton winning set keeps
/// the Maker-first winner.
pub fn lemma_black_singleton(instances: usize, seed: u64) -> Report {
    let mut cases = Vec::new();
    let mut i = 0u64;
    while cases.len() < instances && i < 1_000_000 {
        let mut rng = rng_for(seed, i);
        i += 1;
        let k = rng.gen_range(1..=3);
        let heights: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=7)).collect();
        if heights.iter().sum::<usize>() > 14 {
            continue;
        }
        let extra = rng.gen_range(0..=3);
        let Ok(g) = random::chain_game_with(&heights, extra, 2, &mut rng) else { continue };
        let view = ChainView::of(g.poset()).expect("chain board");
        let cands: Vec<usize> = (0..g.len())
            .filter(|&v| view.color(v) == Color::Black && view.loc[v].1 >= 3 && !g.poset().is_minimal(v))
            .collect();
        if cands.is_empty() {
            continue;
        }
        let x = cands[rng.gen_range(0..cands.len())];
        let mut sets = g.winsets().to_vec();
        sets.push(vec![x]);
        let g = mb(g.poset(), sets);
        if let Ok(r) = chains::reduce_black_singleton(&g, x) {
            cases.push((g, r));
        }
    }
    let mut results: Vec<Option<String>> = cases
        .par_iter()
        .map(|(g, r)| match (oracle::solve_mb(g, Player::Maker), oracle::solve_mb(r, Player::Maker)) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(format!("{a:?} became {b:?}: {} -> {}", describe(g), describe(r))),
        })
        .collect();
    if cases.len() < instances {
        results.push(Some(format!("only {} valid instances generated", cases.len())));
    }
    Report::collect("lemma: black singleton reduction", results)
}

/// All nonempty clauses of at most three distinct literals over `n` variables.
fn all_clauses(n: usize) -> Vec<Vec<i32>> {
    let lits: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << lits.len() {
        if mask.count_ones() <= 3 {
            out.push((0..lits.len()).filter(|i| mask >> i & 1 == 1).map(|i| lits[i]).collect());
        }
    }
    out
}

/// Multisets of at most `k` items drawn from `0..m`.
fn small_multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = out.clone();
    for _ in 0..k {
        let mut next = Vec::new();
        for f in &frontier {
            for i in f.last().copied().unwrap_or(0)..m {
                let mut g = f.clone();
                g.push(i);
                next.push(g);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Satisfiable iff Breaker wins, over every formula on at most three
/// variables with at most two clauses.
pub fn reduction_sat() -> Report {
    let mut formulas = Vec::new();
    for n in 0..=3 {
        let cl = all_clauses(n);
        for pick in small_multisets(cl.len(), 2) {
            formulas.push(CnfFormula::new(n, pick.iter().map(|&i| cl[i].clone()).collect()).expect("valid clauses"));
        }
    }
    let results = formulas
        .par_iter()
        .map(|f| {
            let g = reductions::from_3sat(f).expect("generator");
            let want = if referee::satisfiable(f) { Player::Breaker } else { Player::Maker };
            mismatch(&g, Ok(want), oracle::solve_mb(&g, Player::Maker)).map(|e| format!("{:?}: {e}", f.clauses()))
        })
        .collect();
    Report::collect("reduction: 3-SAT", results)
}

/// Whether `masks` is the lexicographically least relabeling of itself
/// under permutations of the `n` elements.
fn canonical(masks: &[u32], n: usize) -> bool {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = masks.to_vec();
    loop {
        let mut img: Vec<u32> =
            masks.iter().map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).fold(0, |a, i| a | 1 << perm[i])).collect();
        img.sort_unstable();
        if img < best {
            best = img;
        }
        // Next permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best == masks
}

/// A cover by `k` edges exists iff Breaker wins, over every hypergraph (up
/// to relabeling elements) with `n + m - k + 1 <= bound`.
pub fn reduction_setcover(bound: usize) -> Report {
    let mut cases = Vec::new();
    for n in 1..bound {
        for m in 1..bound {
            for k in 0..=n.min(m) {
                if n + m + 1 > bound + k {
                    continue;
                }
                let full = (1u32 << n) - 1;
                for masks in multisets(m, 1 << n) {
                    if masks.iter().fold(0, |a, &b| a | b) != full || !canonical(&masks, n) {
                        continue;
                    }
                    let edges = masks.iter().map(|&e| (0..n).filter(|i| e >> i & 1 == 1).collect()).collect();
                    let elements = (1..=n).map(|i| format!("e{i}")).collect();
                    cases.push(CoverInstance::new(elements, edges, k).expect("valid instance"));
                }
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|c| {
            let g = reductions::from_setcover(c).expect("generator");
            let want = if referee::cover_exists(c) { Player::Breaker } else { Player::Maker };
            mismatch(&g, Ok(want), oracle::solve_mb(&g, Player::Maker)).map(|e| format!("k={} {:?}: {e}", c.k(), c.edges()))
        })
        .collect();
    Report::collect("reduction: set cover", results)
}

/// True iff Breaker wins, over every formula on two variables with at most
/// three clauses and every formula on four variables with at most two.
pub fn reduction_qbf() -> Report {
    let mut formulas = Vec::new();
    for (n, k) in [(2, 3), (4, 2)] {
        let cl = all_clauses(n);
        for pick in small_multisets(cl.len(), k) {
            let m = CnfFormula::new(n, pick.iter().map(|&i| cl[i].clone()).collect()).expect("valid clauses");
            formulas.push(QbfFormula::alternating(m).expect("alternating prefix"));
        }
    }
    let results = formulas
        .par_iter()
        .map(|q| {
            let g = reductions::from_3qbf(q).expect("generator");
            let want = if referee::qbf_true(q) { Player::Breaker } else { Player::Maker };
            mismatch(&g, Ok(want), oracle::solve_mb(&g, Player::Maker)).map(|e| format!("{:?}: {e}", q.matrix().clauses()))
        })
        .collect();
    Report::collect("reduction: 3-QBF", results)
}

/// The first player wins Avoid True iff the first player wins the
/// Maker-Maker game, over every term set on at most four variables.
pub fn reduction_avoid_true(max_vars: usize) -> Report {
    let mut cases = Vec::new();
    for n in 1..=max_vars {
        let mut terms: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for a in 0..n {
            terms.extend((a + 1..n).map(|b| vec![a, b]));
        }
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        for mask in 0u64..1 << terms.len() {
            let pick = (0..terms.len()).filter(|i| mask >> i & 1 == 1).map(|i| terms[i].clone()).collect();
            cases.push(AvoidTrue::new(vars.clone(), pick).expect("valid terms"));
        }
    }
    let results = cases
        .par_iter()
        .map(|d| {
            let g = reductions::from_avoid_true(d).expect("generator");
            mismatch(&g, Ok(referee::avoid_true(d)), oracle::solve_mm(&g, Player::Maker))
                .map(|e| format!("{:?}: {e}", d.clauses()))
        })
        .collect();
    Report::collect("reduction: avoid true", results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(multisets(2, 4).len(), 6);
        assert_eq!(small_multisets(3, 2).len(), 1 + 3 + 6);
        assert_eq!(all_clauses(1).len(), 3);
        // One bottom: a top or not.
        assert_eq!(height2_posets(2).len(), 3);
        assert!(canonical(&[1, 3], 2));
        assert!(!canonical(&[2, 3], 2));
    }

    #[test]
    fn small_runs_pass() {
        assert!(witnesses().passed());
        assert!(union_soundness(30, 5, 1).passed());
        assert!(solver_family(Family::Dp, 30, 2).passed());
        assert!(solver_family(Family::ChainsWs2, 30, 3).passed());
        assert!(lemma_empty_component(20, 4).passed());
        assert!(lemma_last_predecessor(5, 5).passed());
        assert!(reduction_avoid_true(2).passed());
        assert!(reduction_setcover(3).passed());
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
