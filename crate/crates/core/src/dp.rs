//! Dynamic program over (available antichain, live-set bits) states.
//!
//! A state `(Y, B)` stands for the subgame on the up-closure of `Y`, where
//! bit `i` of `B` says set `i` holds no Breaker vertex outside that region.
//! The number of states is at most `(|X|+1)^w * 2^m`.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::{PpgError, Result};
use crate::game::{Game, MmResult, Player};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpConfig {
    /// Abort once the memo holds this many states.
    pub max_states: usize,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig { max_states: 20_000_000 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub states: usize,
}

/// Upper bound `(|X|+1)^w * 2^m` on the number of states, as a float.
pub fn state_bound(g: &Game) -> f64 {
    let n = g.len() as f64;
    let w = g.poset().width() as i32;
    (n + 1.0).powi(w) * 2f64.powi(g.winsets().len() as i32)
}

struct Core<'g> {
    game: &'g Game,
    /// `member[v]` has bit `i` set when `v` lies in set `i`.
    member: Vec<u64>,
}

impl<'g> Core<'g> {
    fn new(game: &'g Game) -> Result<Core<'g>> {
        if game.winsets().len() > 64 {
            return Err(PpgError::ResourceLimit(format!("{} winning sets, limit is 64", game.winsets().len())));
        }
        let mut member = vec![0u64; game.len()];
        for (i, s) in game.winsets().iter().enumerate() {
            for &v in s {
                member[v] |= 1 << i;
            }
        }
        Ok(Core { game, member })
    }

    fn in_region(&self, y: &[u32], v: usize) -> bool {
        y.iter().any(|&a| self.game.poset().le(a as usize, v))
    }

    /// Elements of set `i` still unclaimed in region `Y`, stopping at `limit`.
    fn live_part(&self, y: &[u32], i: usize, limit: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &v in &self.game.winsets()[i] {
            if self.in_region(y, v) {
                out.push(v);
                if out.len() > limit {
                    break;
                }
            }
        }
        out
    }

    /// The antichain left after claiming `u` from `Y`.
    fn after(&self, y: &[u32], u: u32) -> Vec<u32> {
        let p = self.game.poset();
        let rest: Vec<u32> = y.iter().copied().filter(|&a| a != u).collect();
        let mut region = FixedBitSet::with_capacity(p.len());
        for &a in &rest {
            region.union_with(p.up(a as usize));
        }
        let mut out = rest;
        // A cover of u outside the remaining region has every predecessor claimed.
        for &s in p.succs(u as usize) {
            if !region.contains(s) {
                out.push(s as u32);
            }
        }
        out.sort_unstable();
        out
    }

    fn initial(&self) -> Vec<u32> {
        self.game.poset().minimal().into_iter().map(|v| v as u32).collect()
    }
}

/// Winner with Maker moving first, by the antichain DP.
pub fn solve_dp(g: &Game) -> Result<Player> {
    Ok(solve_dp_with(g, &DpConfig::default())?.0)
}

pub fn solve_dp_with(g: &Game, cfg: &DpConfig) -> Result<(Player, DpStats)> {
    g.require_mb("solve_dp")?;
    let core = Core::new(g)?;
    let m = g.winsets().len();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut dp = MbDp { core, memo: FxHashMap::default(), max_states: cfg.max_states };
    let y = dp.core.initial();
    let win = dp.maker_wins(&y, all)?;
    Ok((if win { Player::Maker } else { Player::Breaker }, DpStats { states: dp.memo.len() }))
}

struct MbDp<'g> {
    core: Core<'g>,
    memo: FxHashMap<(Vec<u32>, u64), bool>,
    max_states: usize,
}

impl MbDp<'_> {
    fn maker_wins(&mut self, y: &[u32], b: u64) -> Result<bool> {
        // Rule 1: a live set whose remaining part is empty or a single
        // available vertex.
        let mut bits = b;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let part = self.core.live_part(y, i, 1);
            if part.is_empty() || (part.len() == 1 && y.contains(&(part[0] as u32))) {
                return Ok(true);
            }
        }
        // Rule 2: nothing left to fill.
        if b == 0 || y.is_empty() {
            return Ok(false);
        }
        let key = (y.to_vec(), b);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        let mut result = false;
        'maker: for &u in y {
            let yu = self.core.after(y, u);
            if yu.is_empty() {
                // Maker's move ends the game without a filled set.
                continue;
            }
            for &v in &yu {
                let yuv = self.core.after(&yu, v);
                let buv = b & !self.core.member[v as usize];
                debug_assert_eq!(buv & !b, 0, "live bits only ever switch off");
                if !self.maker_wins(&yuv, buv)? {
                    continue 'maker;
                }
            }
            result = true;
            break;
        }
        if self.memo.len() >= self.max_states {
            return Err(PpgError::ResourceLimit(format!("more than {} DP states", self.max_states)));
        }
        self.memo.insert(key, result);
        Ok(result)
    }
}

/// Maker-Maker result with the first player to move, by the same DP where
/// each set tracks whether either player has claimed one of its vertices.
pub fn solve_dp_mm(g: &Game) -> Result<MmResult> {
    Ok(solve_dp_mm_with(g, &DpConfig::default())?.0)
}

pub fn solve_dp_mm_with(g: &Game, cfg: &DpConfig) -> Result<(MmResult, DpStats)> {
    g.require_mm("solve_dp_mm")?;
    let core = Core::new(g)?;
    let m = g.winsets().len();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut dp = MmDp { core, all, memo: FxHashMap::default(), max_states: cfg.max_states };
    let y = dp.core.initial();
    let v = dp.value(&y, [0, 0], 0)?;
    let r = match v {
        1 => MmResult::FirstWin,
        -1 => MmResult::SecondWin,
        _ => MmResult::Draw,
    };
    Ok((r, DpStats { states: dp.memo.len() }))
}

struct MmDp<'g> {
    core: Core<'g>,
    all: u64,
    memo: FxHashMap<(Vec<u32>, u64, u64), i8>,
    max_states: usize,
}

impl MmDp<'_> {
    /// Some set in `mine` has at most one unclaimed vertex, and it is available.
    fn can_finish(&self, y: &[u32], mine: u64) -> bool {
        (0..64).filter(|i| mine >> i & 1 == 1).any(|i| match self.core.live_part(y, i, 1).as_slice() {
            [] => true,
            [v] => y.contains(&(*v as u32)),
            _ => false,
        })
    }

    /// Value for the player to move. `hits[p]` marks the sets containing a
    /// vertex claimed by player `p`; `turn` is the mover's index. Fixed seats
    /// avoid an optimizer bug seen when two masks were swapped per call.
    fn value(&mut self, y: &[u32], hits: [u64; 2], turn: usize) -> Result<i8> {
        let (me, them) = (hits[turn], hits[1 - turn]);
        if y.is_empty() || (me & them) == self.all {
            return Ok(0);
        }
        let key = (y.to_vec(), me, them);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        if self.can_finish(y, self.all & !them) {
            self.memo.insert(key, 1);
            return Ok(1);
        }
        let mut best = -1;
        for &u in y {
            let yu = self.core.after(y, u);
            let mut next = hits;
            next[turn] |= self.core.member[u as usize];
            best = best.max(-self.value(&yu, next, 1 - turn)?);
            if best == 1 {
                break;
            }
        }
        if self.memo.len() >= self.max_states {
            return Err(PpgError::ResourceLimit(format!("more than {} DP states", self.max_states)));
        }
        self.memo.insert(key, best);
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Convention::{self, *};
    use crate::oracle;
    use crate::random::{random_game, GenSpec};
    use proptest::prelude::*;

    fn g(v: &[&str], c: &[(&str, &str)], w: &[&[&str]], conv: Convention) -> Game {
        let w: Vec<Vec<&str>> = w.iter().map(|s| s.to_vec()).collect();
        Game::from_names(v, c, &w, conv).unwrap()
    }

    #[test]
    fn small_cases() {
        let en1 = g(&["a", "b"], &[("a", "b")], &[&["a"]], MakerBreaker);
        assert_eq!(solve_dp(&en1).unwrap(), Player::Maker);
        let none = g(&["a", "b"], &[("a", "b")], &[], MakerBreaker);
        assert_eq!(solve_dp(&none).unwrap(), Player::Breaker);
        let op = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["b"]], MakerBreaker);
        assert_eq!(solve_dp(&op).unwrap(), Player::Breaker);
    }

    #[test]
    fn maker_maker_cases() {
        let single = g(&["x"], &[], &[&["x"]], MakerMaker);
        assert_eq!(solve_dp_mm(&single).unwrap(), MmResult::FirstWin);
        let chain = g(&["a", "b"], &[("a", "b")], &[&["a"], &["b"]], MakerMaker);
        assert_eq!(solve_dp_mm(&chain).unwrap(), MmResult::FirstWin);
        let names: Vec<String> = (0..9).map(|i| format!("c{i}")).collect();
        let lines = [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8], [0, 4, 8], [2, 4, 6]];
        let ttt = Game::new(
            crate::poset::Poset::from_edges(names, &[]).unwrap(),
            lines.iter().map(|l| l.to_vec()).collect(),
            MakerMaker,
        )
        .unwrap();
        assert_eq!(solve_dp_mm(&ttt).unwrap(), MmResult::Draw);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_oracle(n in 1usize..=10, w in 1usize..=3, m in 0usize..=4, s in 0usize..=3, seed in any::<u64>()) {
            let spec = GenSpec { n, width: w.min(n), winsets: m, size: s.min(n), seed };
            let game = random_game(&spec).unwrap();
            let (dp, stats) = solve_dp_with(&game, &DpConfig::default()).unwrap();
            prop_assert_eq!(dp, oracle::solve_mb(&game, Player::Maker).unwrap());
            prop_assert!(stats.states as f64 <= state_bound(&game));
        }

        #[test]
        fn mm_agrees_with_oracle(n in 1usize..=9, w in 1usize..=3, m in 0usize..=4, s in 0usize..=3, seed in any::<u64>()) {
            let spec = GenSpec { n, width: w.min(n), winsets: m, size: s.min(n), seed };
            let game = random_game(&spec).unwrap().with_convention(MakerMaker);
            prop_assert_eq!(solve_dp_mm(&game).unwrap(), oracle::solve_mm(&game, Player::Maker).unwrap());
        }
    }
}
