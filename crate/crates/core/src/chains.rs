//! Solvers for boards made of disjoint chains with winning sets of size at
//! most two.
//!
//! Chains are indexed as returned by [`Poset::chain_decomposition`], and
//! depths count from the top of a chain starting at 1.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{PpgError, Result};
use crate::game::{Game, Player};
use crate::poset::{color_at, Color, Poset};

/// Chain layout of a disjoint-chain board.
#[derive(Debug, Clone)]
pub struct ChainView {
    /// Each chain listed top to bottom.
    pub chains: Vec<Vec<usize>>,
    /// `loc[v] = (chain, depth)`.
    pub loc: Vec<(usize, usize)>,
}

impl ChainView {
    pub fn of(p: &Poset) -> Result<ChainView> {
        let chains = p.chain_decomposition().ok_or(PpgError::NotChainPoset)?;
        let mut loc = vec![(0, 0); p.len()];
        for (i, c) in chains.iter().enumerate() {
            for (j, &v) in c.iter().enumerate() {
                loc[v] = (i, j + 1);
            }
        }
        Ok(ChainView { chains, loc })
    }

    pub fn len(&self) -> usize {
        self.loc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.loc.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        color_at(self.loc[v].1, self.len())
    }
}

fn check_sizes(g: &Game, max: usize, what: &str) -> Result<()> {
    g.require_mb(what)?;
    if let Some(s) = g.winsets().iter().find(|s| s.len() > max) {
        return Err(PpgError::PreconditionViolated(format!(
            "{what} needs winning sets of size at most {max}, found one of size {}",
            s.len()
        )));
    }
    Ok(())
}

fn not_chains(what: &str) -> PpgError {
    PpgError::PreconditionViolated(format!("{what} needs a disjoint union of chains"))
}

/// Removes the top of the chain holding a black singleton winning set
/// `{x}`: the top `j-1` vertices when the board is even, `j-2` when odd,
/// where `j` is the depth of `x`. Sets meeting the removed part on a black
/// vertex disappear; the others lose their removed white vertices. The
/// Maker-first winner is unchanged.
pub fn reduce_black_singleton(g: &Game, x: usize) -> Result<Game> {
    g.require_mb("reduce_black_singleton")?;
    let view = ChainView::of(g.poset()).map_err(|_| not_chains("reduce_black_singleton"))?;
    if x >= g.len() {
        return Err(PpgError::UnknownVertex(format!("#{x}")));
    }
    let bad = |m: &str| Err(PpgError::PreconditionViolated(m.to_string()));
    let (i, j) = view.loc[x];
    if !g.winsets().iter().any(|s| s == &[x]) {
        return bad("the vertex is not a singleton winning set");
    }
    if view.color(x) != Color::Black {
        return bad("the vertex is not black");
    }
    if j == view.chains[i].len() {
        return bad("the vertex is minimal");
    }
    if j < 3 {
        return bad("the vertex is less than three deep in its chain");
    }
    let above_white = |v: usize| view.loc[v].0 == i && view.loc[v].1 < j && view.color(v) == Color::White;
    if g.winsets().iter().any(|s| !s.is_empty() && s.iter().all(|&v| above_white(v))) {
        return bad("a winning set lies entirely on white vertices above the vertex");
    }
    let cut = if g.len().is_multiple_of(2) { j - 1 } else { j - 2 };
    let removed: Vec<usize> = view.chains[i][..cut].to_vec();
    let mut keep = FixedBitSet::with_capacity(g.len());
    keep.insert_range(..);
    for &v in &removed {
        keep.set(v, false);
    }
    Ok(g.restrict(&keep, |v| !keep.contains(v) && view.color(v) == Color::Black))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ChainDpStats {
    pub states: usize,
}

/// Maker-first winner on disjoint chains with winning sets of size at most
/// two, by a DP over remaining chain heights and pending black singletons.
pub fn solve_chains_ws2(g: &Game) -> Result<Player> {
    Ok(solve_chains_ws2_with_stats(g)?.0)
}

pub fn solve_chains_ws2_with_stats(g: &Game) -> Result<(Player, ChainDpStats)> {
    solve_ws2_variant(g, false)
}

/// `restore_cut` selects where a chain's top is restored once its pending
/// singleton is taken by Breaker.
pub(crate) fn solve_ws2_variant(g: &Game, restore_cut: bool) -> Result<(Player, ChainDpStats)> {
    check_sizes(g, 2, "solve_chains_ws2")?;
    let view = ChainView::of(g.poset()).map_err(|_| not_chains("solve_chains_ws2"))?;
    let mut sets: Vec<Vec<(u16, u16)>> = g
        .winsets()
        .iter()
        .map(|s| s.iter().map(|&v| (view.loc[v].0 as u16, view.loc[v].1 as u16)).collect())
        .collect();
    sets.sort();
    sets.dedup();
    let w = view.chains.len();
    let mut dp = Ws2 {
        n_even: g.len().is_multiple_of(2),
        sets,
        restore_cut,
        memo: FxHashMap::default(),
    };
    let state = ChainState {
        k: view.chains.iter().map(|c| c.len() as u16).collect(),
        lo: vec![1; w],
        s: vec![0; w],
    };
    let win = dp.maker_wins(&state);
    let stats = ChainDpStats { states: dp.memo.len() };
    Ok((if win { Player::Maker } else { Player::Breaker }, stats))
}

/// `k[i]`: vertices of chain `i` still unclaimed (depths `1..=k[i]`).
/// `lo[i]`: first depth still in play after top cuts. `s[i]`: depth of a
/// pending black singleton, 0 if none.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ChainState {
    k: Vec<u16>,
    lo: Vec<u16>,
    s: Vec<u16>,
}

type Cell = (u16, u16);

struct Ws2 {
    n_even: bool,
    sets: Vec<Vec<Cell>>,
    restore_cut: bool,
    memo: FxHashMap<Vec<u16>, bool>,
}

impl Ws2 {
    fn white(&self, j: u16) -> bool {
        j.is_multiple_of(2) == self.n_even
    }

    fn cut(&self, s: u16) -> u16 {
        if self.n_even {
            s
        } else {
            s - 1
        }
    }

    fn family(&self, st: &ChainState) -> Vec<Vec<Cell>> {
        let mut out = Vec::new();
        'sets: for set in &self.sets {
            if set.iter().any(|&(c, j)| j > st.k[c as usize]) {
                continue;
            }
            let mut red = Vec::with_capacity(set.len());
            for &(c, j) in set {
                if j < st.lo[c as usize] {
                    if !self.white(j) {
                        continue 'sets;
                    }
                } else {
                    red.push((c, j));
                }
            }
            out.push(red);
        }
        for (c, &s) in st.s.iter().enumerate() {
            if s > 0 {
                out.push(vec![(c as u16, s)]);
            }
        }
        out
    }

    /// The immediate-win screen. `Some(winner)` when it decides the state.
    fn trivial(&self, st: &ChainState, fam: &[Vec<Cell>]) -> Option<bool> {
        if fam.is_empty() {
            return Some(false);
        }
        let mut black_chain = None;
        for set in fam {
            match set.as_slice() {
                [] => return Some(true),
                &[(c, j)] => {
                    if self.white(j) || j == st.k[c as usize] {
                        return Some(true);
                    }
                    if !self.n_even {
                        match black_chain {
                            Some(b) if b != c => return Some(true),
                            _ => black_chain = Some(c),
                        }
                    }
                }
                &[(c1, j1), (c2, j2)] => {
                    if c1 == c2 && self.white(j1) && self.white(j2) {
                        return Some(true);
                    }
                }
                _ => unreachable!("sets have at most two elements"),
            }
        }
        None
    }

    fn key(&self, st: &ChainState) -> Vec<u16> {
        let mut key = Vec::with_capacity(st.k.len() * 3);
        key.extend_from_slice(&st.k);
        key.extend_from_slice(&st.lo);
        if self.n_even {
            key.extend_from_slice(&st.s);
        } else {
            // At most one pending singleton survives the screen on odd boards.
            match st.s.iter().position(|&s| s > 0) {
                Some(c) => key.extend_from_slice(&[c as u16 + 1, st.s[c]]),
                None => key.extend_from_slice(&[0, 0]),
            }
        }
        key
    }

    fn maker_wins(&mut self, st: &ChainState) -> bool {
        let fam = self.family(st);
        if let Some(r) = self.trivial(st, &fam) {
            return r;
        }
        let key = self.key(st);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let w = st.k.len();
        let mut result = false;
        'maker: for c in 0..w {
            if st.k[c] < st.lo[c] {
                continue;
            }
            let u = (c as u16, st.k[c]);
            let partners: Vec<Cell> = fam
                .iter()
                .filter(|s| s.len() == 2 && s.contains(&u))
                .map(|s| if s[0] == u { s[1] } else { s[0] })
                .collect();
            let mut k1 = st.k.clone();
            k1[c] -= 1;
            let mut any_reply = false;
            for c2 in 0..w {
                if k1[c2] < st.lo[c2] {
                    continue;
                }
                any_reply = true;
                let v = (c2 as u16, k1[c2]);
                let threats: Vec<Cell> = partners.iter().copied().filter(|&p| p != v).collect();
                if threats.iter().any(|&(_, j)| self.white(j)) {
                    continue;
                }
                let mut next = ChainState { k: k1.clone(), lo: st.lo.clone(), s: st.s.clone() };
                next.k[c2] -= 1;
                if next.s[c2] == v.1 {
                    next.s[c2] = 0;
                }
                for &(tc, tj) in &threats {
                    let tc = tc as usize;
                    next.s[tc] = next.s[tc].max(tj);
                }
                for i in 0..w {
                    if self.restore_cut {
                        next.lo[i] = if next.s[i] > 0 { self.cut(next.s[i]).max(1) } else { 1 };
                    } else if next.s[i] > 0 && next.s[i] != st.s[i] {
                        next.lo[i] = next.lo[i].max(self.cut(next.s[i]));
                    }
                }
                if !self.maker_wins(&next) {
                    continue 'maker;
                }
            }
            if any_reply {
                result = true;
                break;
            }
        }
        self.memo.insert(key, result);
        result
    }
}

/// A reduction step for height-2 chain boards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum H2Reduction {
    /// A set of two bottoms meeting no other set; both bottoms go.
    R1 { a: usize, b: usize },
    /// Bottoms `x_i` whose chains close up under the pairs `{x_i, y_j}`;
    /// all these chains go, with every set touching them.
    R2 { bottoms: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PatternKind {
    Good,
    Winning,
}

/// A sequence of forcing moves on a height-2 chain board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pattern {
    pub kind: PatternKind,
    /// The bottoms `x_{i_1}, ..., x_{i_l}` in order.
    pub bottoms: Vec<usize>,
    /// The second vertex of the closing set `{x_{i_l}, z}`.
    pub closing: Option<usize>,
    /// The winning sets the pattern uses.
    pub sets: Vec<Vec<usize>>,
}

/// Mutable height-2 board: each vertex is a bottom or sits on one bottom.
#[derive(Debug, Clone)]
struct H2 {
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    alive: Vec<bool>,
    sets: Vec<Vec<usize>>,
}

impl H2 {
    fn of(g: &Game, what: &str) -> Result<H2> {
        check_sizes(g, 2, what)?;
        let view = ChainView::of(g.poset()).map_err(|_| not_chains(what))?;
        if view.chains.iter().any(|c| c.len() > 2) {
            return Err(PpgError::PreconditionViolated(format!("{what} needs chains of height at most 2")));
        }
        let n = g.len();
        let mut below = vec![None; n];
        let mut above = vec![None; n];
        for c in &view.chains {
            if let [y, x] = c[..] {
                below[y] = Some(x);
                above[x] = Some(y);
            }
        }
        let mut sets = g.winsets().to_vec();
        sets.sort();
        sets.dedup();
        Ok(H2 { below, above, alive: vec![true; n], sets })
    }

    fn size(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn is_bottom(&self, v: usize) -> bool {
        self.alive[v] && self.below[v].is_none_or(|x| !self.alive[x])
    }

    fn is_top(&self, v: usize) -> bool {
        self.alive[v] && self.below[v].is_some_and(|x| self.alive[x])
    }

    fn top_of(&self, x: usize) -> Option<usize> {
        self.above[x].filter(|&y| self.alive[y] && self.is_bottom(x))
    }

    fn find_reduction(&self) -> Option<H2Reduction> {
        for (idx, s) in self.sets.iter().enumerate() {
            if let [a, b] = s[..] {
                if self.is_bottom(a)
                    && self.is_bottom(b)
                    && self.sets.iter().enumerate().all(|(k, t)| k == idx || !(t.contains(&a) || t.contains(&b)))
                {
                    return Some(H2Reduction::R1 { a, b });
                }
            }
        }
        let n = self.alive.len();
        for seed in 0..n {
            if self.top_of(seed).is_none() {
                continue;
            }
            let mut in_i = vec![false; n];
            in_i[seed] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for s in &self.sets {
                    if let [p, q] = s[..] {
                        for (x, y) in [(p, q), (q, p)] {
                            if in_i[x] && self.is_top(y) {
                                let xj = self.below[y].unwrap();
                                if !in_i[xj] {
                                    in_i[xj] = true;
                                    changed = true;
                                }
                            }
                        }
                    }
                }
            }
            let tops_of_i = |v: usize| self.is_top(v) && in_i[self.below[v].unwrap()];
            let valid = self
                .sets
                .iter()
                .filter(|s| s.iter().any(|&v| in_i[v]))
                .all(|s| s.iter().any(|&v| tops_of_i(v)));
            if valid {
                return Some(H2Reduction::R2 { bottoms: (0..n).filter(|&v| in_i[v]).collect() });
            }
        }
        None
    }

    fn removed_by(&self, r: &H2Reduction) -> Vec<usize> {
        match r {
            H2Reduction::R1 { a, b } => vec![*a, *b],
            H2Reduction::R2 { bottoms } => {
                bottoms.iter().flat_map(|&x| std::iter::once(x).chain(self.top_of(x))).collect()
            }
        }
    }

    fn apply(&mut self, r: &H2Reduction) {
        let gone = self.removed_by(r);
        for &v in &gone {
            self.alive[v] = false;
        }
        self.sets.retain(|s| !s.iter().any(|v| gone.contains(v)));
    }

    fn odd_case_maker(&self) -> bool {
        let bottom = |v: usize| self.is_bottom(v);
        let top = |v: usize| self.is_top(v);
        let pairs_bb: Vec<&Vec<usize>> =
            self.sets.iter().filter(|s| s.len() == 2 && bottom(s[0]) && bottom(s[1])).collect();
        for s in &self.sets {
            match s[..] {
                // A bottom singleton, or a set made only of tops (possibly empty).
                [x] if bottom(x) => return true,
                _ if s.iter().all(|&v| top(v)) => return true,
                [a, b] => {
                    for (x, y) in [(a, b), (b, a)] {
                        if bottom(x) && top(y) {
                            let own = self.below[y] == Some(x);
                            // {x_i, y_j} with i != j.
                            if !own {
                                return true;
                            }
                            // {x_i, y_i} together with some {x_i, x_j}.
                            if pairs_bb.iter().any(|p| p.contains(&x)) {
                                return true;
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        // Two bottom-bottom sets sharing a vertex.
        for (i, p) in pairs_bb.iter().enumerate() {
            for q in &pairs_bb[i + 1..] {
                if p.iter().any(|v| q.contains(v)) {
                    return true;
                }
            }
        }
        false
    }

    fn find_pattern(&self) -> Option<Pattern> {
        for s in &self.sets {
            if let [a, b] = s[..] {
                if !(self.is_bottom(a) && self.is_bottom(b)) {
                    continue;
                }
                for (x1, x2) in [(a, b), (b, a)] {
                    let mut path = vec![x1, x2];
                    let mut used = vec![s.clone()];
                    if let Some(p) = self.extend(&mut path, &mut used) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }

    fn extend(&self, path: &mut Vec<usize>, used: &mut Vec<Vec<usize>>) -> Option<Pattern> {
        let last = *path.last().unwrap();
        if path.len() >= 3 {
            if let Some((z, set)) = self.closing(path, used) {
                let mut sets = used.clone();
                sets.push(set);
                return Some(Pattern { kind: PatternKind::Winning, bottoms: path.clone(), closing: Some(z), sets });
            }
        }
        for s in &self.sets {
            if let [p, q] = s[..] {
                for (x, y) in [(p, q), (q, p)] {
                    if x != last || !self.is_top(y) {
                        continue;
                    }
                    let xj = self.below[y].unwrap();
                    if path.contains(&xj) {
                        continue;
                    }
                    path.push(xj);
                    used.push(s.clone());
                    if let Some(found) = self.extend(path, used) {
                        return Some(found);
                    }
                    path.pop();
                    used.pop();
                }
            }
        }
        None
    }

    fn closing(&self, path: &[usize], used: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
        let l = path.len();
        let last = path[l - 1];
        let mut allowed: Vec<usize> = path[1..l - 1].to_vec();
        allowed.extend(self.top_of(path[0]));
        allowed.extend(self.top_of(path[1]));
        for s in &self.sets {
            if s.len() != 2 || !s.contains(&last) || used.contains(s) {
                continue;
            }
            let z = if s[0] == last { s[1] } else { s[0] };
            let fresh_bottom = self.is_bottom(z) && !path.contains(&z);
            if allowed.contains(&z) || fresh_bottom {
                return Some((z, s.clone()));
            }
        }
        None
    }
}

/// One applicable reduction on an even height-2 chain board, if any.
pub fn find_reduction_h2(g: &Game) -> Result<Option<H2Reduction>> {
    let h2 = H2::of(g, "find_reduction_h2")?;
    if g.len() % 2 == 1 {
        return Err(PpgError::PreconditionViolated("find_reduction_h2 needs an even board".into()));
    }
    Ok(h2.find_reduction())
}

/// The game left after applying a reduction found by [`find_reduction_h2`].
pub fn apply_reduction_h2(g: &Game, r: &H2Reduction) -> Result<Game> {
    let h2 = H2::of(g, "apply_reduction_h2")?;
    let gone = h2.removed_by(r);
    let mut keep = FixedBitSet::with_capacity(g.len());
    keep.insert_range(..);
    for v in gone {
        keep.set(v, false);
    }
    Ok(g.restrict(&keep, |v| !keep.contains(v)))
}

/// Searches for a winning pattern on a height-2 chain board.
pub fn find_winning_pattern(g: &Game) -> Result<Option<Pattern>> {
    Ok(H2::of(g, "find_winning_pattern")?.find_pattern())
}

/// Maker-first winner on disjoint chains of height at most 2 with winning
/// sets of size at most 2.
pub fn solve_chains_h2_ws2(g: &Game) -> Result<Player> {
    let mut h2 = H2::of(g, "solve_chains_h2_ws2")?;
    let maker = if h2.size() % 2 == 1 {
        h2.odd_case_maker()
    } else {
        while let Some(r) = h2.find_reduction() {
            h2.apply(&r);
        }
        !h2.sets.is_empty()
    };
    Ok(if maker { Player::Maker } else { Player::Breaker })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Convention::MakerBreaker;
    use crate::oracle::solve_mb;
    use crate::random::{chain_board, random_chain_game, ChainSpec};
    use proptest::prelude::*;

    /// Chains with heights `hs`, sets given as (chain, depth) with chains 1-based.
    fn chain_game(hs: &[usize], sets: &[&[(usize, usize)]]) -> Game {
        let (names, edges) = chain_board(hs);
        let p = Poset::from_edges(names, &edges).unwrap();
        let sets = sets
            .iter()
            .map(|s| s.iter().map(|&(i, j)| p.index_of(&format!("c{i}_{j}")).unwrap()).collect())
            .collect();
        Game::new(p, sets, MakerBreaker).unwrap()
    }

    fn reduc_figure() -> Game {
        chain_game(
            &[7, 6],
            &[&[(1, 6)], &[(1, 3), (2, 3)], &[(1, 4), (2, 2)], &[(1, 7), (2, 4)]],
        )
    }

    #[test]
    fn black_singleton_reduction_on_figure() {
        let g = reduc_figure();
        assert_eq!(g.len(), 13);
        let x = g.poset().index_of("c1_6").unwrap();
        let r = reduce_black_singleton(&g, x).unwrap();
        assert_eq!(r.len(), 9);
        let sets = r.winset_names();
        assert!(sets.contains(&vec!["c2_3".to_string()]));
        assert!(!sets.iter().any(|s| s.contains(&"c2_2".to_string())));
        assert_eq!(sets.len(), 3);
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Maker);
        assert_eq!(solve_mb(&r, Player::Maker).unwrap(), Player::Maker);
        assert_eq!(solve_chains_ws2(&g).unwrap(), Player::Maker);
    }

    #[test]
    fn reduction_preconditions() {
        let g = chain_game(&[4], &[&[(1, 2)]]);
        let x = g.poset().index_of("c1_2").unwrap();
        assert!(matches!(reduce_black_singleton(&g, x), Err(PpgError::PreconditionViolated(_))));
    }

    #[test]
    fn ws2_small() {
        let g = chain_game(&[2, 2], &[&[(1, 1), (2, 1)]]);
        assert_eq!(solve_chains_ws2(&g).unwrap(), solve_mb(&g, Player::Maker).unwrap());
    }

    #[test]
    fn h2_reductions() {
        let g = chain_game(&[1, 1], &[&[(1, 1), (2, 1)]]);
        assert!(matches!(find_reduction_h2(&g).unwrap(), Some(H2Reduction::R1 { .. })));
        assert_eq!(solve_chains_h2_ws2(&g).unwrap(), Player::Breaker);
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Breaker);

        let g = chain_game(&[2, 1, 1], &[&[(1, 2), (1, 1)]]);
        let x1 = g.poset().index_of("c1_2").unwrap();
        assert_eq!(find_reduction_h2(&g).unwrap(), Some(H2Reduction::R2 { bottoms: vec![x1] }));
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Breaker);

        let g = chain_game(&[1, 1], &[]);
        assert_eq!(find_reduction_h2(&g).unwrap(), None);
    }

    #[test]
    fn h2_odd_case() {
        let g = chain_game(&[2, 2, 1], &[&[(1, 2), (2, 1)]]);
        assert_eq!(solve_chains_h2_ws2(&g).unwrap(), Player::Maker);
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Maker);
    }

    #[test]
    fn patterns() {
        // x1-x2, x2-y3, x3-z with z a fresh bottom.
        let g = chain_game(&[1, 1, 2, 1], &[&[(1, 1), (2, 1)], &[(2, 1), (3, 1)], &[(3, 2), (4, 1)]]);
        let p = find_winning_pattern(&g).unwrap().unwrap();
        assert_eq!(p.kind, PatternKind::Winning);
        assert_eq!(p.bottoms.len(), 3);
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Maker);

        let g = chain_game(&[2, 2], &[&[(1, 2), (1, 1)], &[(2, 2), (2, 1)]]);
        assert_eq!(find_winning_pattern(&g).unwrap(), None);

        // Length four, closing on a fresh bottom.
        let g = chain_game(
            &[1, 1, 2, 2, 1],
            &[&[(1, 1), (2, 1)], &[(2, 1), (3, 1)], &[(3, 2), (4, 1)], &[(4, 2), (5, 1)]],
        );
        let p = find_winning_pattern(&g).unwrap().unwrap();
        assert_eq!(p.bottoms.len(), 4);
        assert_eq!(solve_mb(&g, Player::Maker).unwrap(), Player::Maker);
    }

    fn arb_chain_game(max_h: usize, max_size: usize) -> impl Strategy<Value = Game> {
        (1usize..=3, 0usize..=4, any::<u64>()).prop_map(move |(chains, winsets, seed)| {
            random_chain_game(&ChainSpec { chains, max_height: max_h, winsets, max_size, seed }).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn ws2_matches_oracle(g in arb_chain_game(5, 2)) {
            prop_assert_eq!(solve_chains_ws2(&g).unwrap(), solve_mb(&g, Player::Maker).unwrap());
        }

        #[test]
        fn restored_cut_matches_oracle(g in arb_chain_game(5, 2)) {
            prop_assert_eq!(solve_ws2_variant(&g, true).unwrap().0, solve_mb(&g, Player::Maker).unwrap());
        }

        #[test]
        fn h2_matches_ws2(chains in 1usize..=5, winsets in 0usize..=4, seed in any::<u64>()) {
            let g = random_chain_game(&ChainSpec { chains, max_height: 2, winsets, max_size: 2, seed }).unwrap();
            let want = solve_mb(&g, Player::Maker).unwrap();
            prop_assert_eq!(solve_chains_h2_ws2(&g).unwrap(), want);
            prop_assert_eq!(solve_chains_ws2(&g).unwrap(), want);
            if let Some(p) = find_winning_pattern(&g).unwrap() {
                prop_assert_eq!(want, Player::Maker, "pattern {:?}", p);
            }
        }

        #[test]
        fn h2_reductions_are_neutral(chains in 1usize..=5, winsets in 0usize..=4, seed in any::<u64>()) {
            let g = random_chain_game(&ChainSpec { chains, max_height: 2, winsets, max_size: 2, seed }).unwrap();
            if g.len() % 2 == 1 {
                return Ok(());
            }
            if let Some(r) = find_reduction_h2(&g).unwrap() {
                let h = apply_reduction_h2(&g, &r).unwrap();
                prop_assert!(h.len() < g.len());
                prop_assert_eq!(solve_mb(&g, Player::Maker).unwrap(), solve_mb(&h, Player::Maker).unwrap());
            }
        }
    }
}
