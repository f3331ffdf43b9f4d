//! Exhaustive memoized game-tree search over bitmask positions.
//!
//! This is the reference every other solver is tested against.

use rustc_hash::FxHashMap;

use crate::error::{PpgError, Result};
use crate::game::{Convention, Game, MmResult, Outcome, Player, Position, Status};

/// Hard limit imposed by the 64-bit encoding.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Largest board the oracle accepts.
    pub max_vertices: usize,
    /// Disable to get a plain minimax, used to cross-check the memo.
    pub memoize: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: 24, memoize: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_entries: usize,
}

/// Bitmask view of a game.
struct Board {
    preds: Vec<u64>,
    sets: Vec<u64>,
    full: u64,
}

impl Board {
    fn new(g: &Game, cfg: &OracleConfig) -> Result<Board> {
        let n = g.len();
        let cap = cfg.max_vertices.min(MAX_VERTICES);
        if n > cap {
            return Err(PpgError::BoardTooLarge { size: n, cap });
        }
        let p = g.poset();
        let preds = (0..n).map(|v| p.preds(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
        let sets = g.winsets().iter().map(|s| s.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Board { preds, sets, full })
    }

    fn available(&self, claimed: u64) -> u64 {
        let mut free = self.full & !claimed;
        let mut out = 0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if self.preds[v] & !claimed == 0 {
                out |= 1 << v;
            }
        }
        out
    }
}

fn mask_of(bits: &fixedbitset::FixedBitSet) -> u64 {
    bits.ones().fold(0u64, |m, v| m | 1 << v)
}

struct MbSearch<'b> {
    board: &'b Board,
    memoize: bool,
    memo: FxHashMap<(u64, u64, bool), bool>,
    nodes: u64,
}

impl MbSearch<'_> {
    /// True iff Maker wins from here. `maker_to_move` selects the mover.
    fn maker_wins(&mut self, maker: u64, breaker: u64, maker_to_move: bool) -> bool {
        self.nodes += 1;
        let alive: Vec<u64> = self.board.sets.iter().copied().filter(|s| s & breaker == 0).collect();
        if alive.is_empty() {
            return false;
        }
        let avail = self.board.available(maker | breaker);
        if avail == 0 {
            return false;
        }
        let key = (maker, breaker, maker_to_move);
        if self.memoize {
            if let Some(&r) = self.memo.get(&key) {
                return r;
            }
        }
        let mut moves = avail;
        let result = if maker_to_move {
            let mut win = false;
            while moves != 0 {
                let bit = moves & moves.wrapping_neg();
                moves ^= bit;
                let m2 = maker | bit;
                if alive.iter().any(|&s| s & !m2 == 0) || self.maker_wins(m2, breaker, false) {
                    win = true;
                    break;
                }
            }
            win
        } else {
            let mut win = true;
            while moves != 0 {
                let bit = moves & moves.wrapping_neg();
                moves ^= bit;
                if !self.maker_wins(maker, breaker | bit, true) {
                    win = false;
                    break;
                }
            }
            win
        };
        if self.memoize {
            self.memo.insert(key, result);
        }
        result
    }

    fn root(&mut self, maker: u64, breaker: u64, maker_to_move: bool) -> bool {
        if self.board.sets.iter().any(|&s| s & breaker == 0 && s & !maker == 0) {
            return true;
        }
        self.maker_wins(maker, breaker, maker_to_move)
    }
}

struct MmSearch<'b> {
    board: &'b Board,
    memoize: bool,
    memo: FxHashMap<(u64, u64), i8>,
    nodes: u64,
}

impl MmSearch<'_> {
    /// Value for the player to move: 1 win, 0 draw, -1 loss. `claimed[p]`
    /// holds player `p`'s vertices and `turn` is the mover's index. Keeping
    /// the masks in fixed seats (rather than swapping two arguments on each
    /// call) sidesteps an optimizer bug that dropped one of the masks.
    fn value(&mut self, claimed: [u64; 2], turn: usize) -> i8 {
        let (mover, other) = (claimed[turn], claimed[1 - turn]);
        self.nodes += 1;
        let avail = self.board.available(mover | other);
        if avail == 0 {
            return 0;
        }
        let mine: Vec<u64> = self.board.sets.iter().copied().filter(|s| s & other == 0).collect();
        let theirs_alive = self.board.sets.iter().any(|s| s & mover == 0);
        if mine.is_empty() && !theirs_alive {
            return 0;
        }
        if self.memoize {
            if let Some(&r) = self.memo.get(&(mover, other)) {
                return r;
            }
        }
        let mut best = -1;
        let mut moves = avail;
        while moves != 0 {
            let bit = moves & moves.wrapping_neg();
            moves ^= bit;
            let m2 = mover | bit;
            if mine.iter().any(|&s| s & !m2 == 0) {
                best = 1;
                break;
            }
            let mut next = claimed;
            next[turn] = m2;
            best = best.max(-self.value(next, 1 - turn));
            if best == 1 {
                break;
            }
        }
        if self.memoize {
            self.memo.insert((mover, other), best);
        }
        best
    }
}

/// Winner of a Maker-Breaker game with `first` to move.
pub fn solve_mb(g: &Game, first: Player) -> Result<Player> {
    Ok(solve_mb_with(g, first, &OracleConfig::default())?.0)
}

pub fn solve_mb_with(g: &Game, first: Player, cfg: &OracleConfig) -> Result<(Player, SearchStats)> {
    g.require_mb("solve_mb")?;
    let board = Board::new(g, cfg)?;
    let mut s = MbSearch { board: &board, memoize: cfg.memoize, memo: FxHashMap::default(), nodes: 0 };
    let win = s.root(0, 0, first == Player::Maker);
    let stats = SearchStats { nodes: s.nodes, memo_entries: s.memo.len() };
    Ok((if win { Player::Maker } else { Player::Breaker }, stats))
}

/// Outcome class, from both choices of first player.
pub fn outcome4(g: &Game) -> Result<Outcome> {
    outcome4_with(g, &OracleConfig::default())
}

pub fn outcome4_with(g: &Game, cfg: &OracleConfig) -> Result<Outcome> {
    let a = solve_mb_with(g, Player::Maker, cfg)?.0;
    let b = solve_mb_with(g, Player::Breaker, cfg)?.0;
    Ok(Outcome::from_winners(a, b))
}

/// Result of a Maker-Maker game. Both seats play by the same rules, so the
/// label of the first mover only names who moves first.
pub fn solve_mm(g: &Game, first: Player) -> Result<MmResult> {
    Ok(solve_mm_with(g, first, &OracleConfig::default())?.0)
}

pub fn solve_mm_with(g: &Game, _first: Player, cfg: &OracleConfig) -> Result<(MmResult, SearchStats)> {
    g.require_mm("solve_mm")?;
    let board = Board::new(g, cfg)?;
    let mut s = MmSearch { board: &board, memoize: cfg.memoize, memo: FxHashMap::default(), nodes: 0 };
    let v = s.value([0, 0], 0);
    let stats = SearchStats { nodes: s.nodes, memo_entries: s.memo.len() };
    let r = match v {
        1 => MmResult::FirstWin,
        -1 => MmResult::SecondWin,
        _ => MmResult::Draw,
    };
    Ok((r, stats))
}

/// Game-theoretic result of a position: `Some(winner)` or `None` for a draw.
pub fn solve_position(pos: &Position) -> Result<Option<Player>> {
    let g = pos.game();
    let board = Board::new(g, &OracleConfig { max_vertices: MAX_VERTICES, memoize: true })?;
    let maker = mask_of(pos.maker());
    let breaker = mask_of(pos.breaker());
    match g.convention() {
        Convention::MakerBreaker => {
            let mut s = MbSearch { board: &board, memoize: true, memo: FxHashMap::default(), nodes: 0 };
            let win = s.root(maker, breaker, pos.to_move() == Player::Maker);
            Ok(Some(if win { Player::Maker } else { Player::Breaker }))
        }
        Convention::MakerMaker => {
            match pos.status() {
                Status::Won(p) => return Ok(Some(p)),
                Status::Draw => return Ok(None),
                Status::Ongoing => {}
            }
            let (mover, other) = match pos.to_move() {
                Player::Maker => (maker, breaker),
                Player::Breaker => (breaker, maker),
            };
            let mut s = MmSearch { board: &board, memoize: true, memo: FxHashMap::default(), nodes: 0 };
            Ok(match s.value([mover, other], 0) {
                1 => Some(pos.to_move()),
                -1 => Some(pos.to_move().opponent()),
                _ => None,
            })
        }
    }
}

/// A move that keeps the mover's game value: a winning move if one exists,
/// then (Maker-Maker only) a drawing move, else the lowest-index move.
pub fn best_move(pos: &Position) -> Result<usize> {
    if pos.status() != Status::Ongoing {
        return Err(PpgError::GameOver);
    }
    let me = pos.to_move();
    let moves = pos.available_moves();
    let mut fallback_draw = None;
    for &v in &moves {
        let next = pos.play(v)?;
        let result = match next.status() {
            Status::Won(p) => Some(p),
            Status::Draw => None,
            Status::Ongoing => solve_position(&next)?,
        };
        match result {
            Some(p) if p == me => return Ok(v),
            None if fallback_draw.is_none() => fallback_draw = Some(v),
            _ => {}
        }
    }
    Ok(fallback_draw.unwrap_or(moves[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Convention::*;
    use proptest::prelude::*;

    fn g(v: &[&str], c: &[(&str, &str)], w: &[&[&str]], conv: Convention) -> Game {
        let w: Vec<Vec<&str>> = w.iter().map(|s| s.to_vec()).collect();
        Game::from_names(v, c, &w, conv).unwrap()
    }

    fn tic_tac_toe(conv: Convention) -> Game {
        let names: Vec<String> = (0..9).map(|i| format!("c{i}")).collect();
        let lines = [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8], [0, 4, 8], [2, 4, 6]];
        let poset = crate::poset::Poset::from_edges(names, &[]).unwrap();
        Game::new(poset, lines.iter().map(|l| l.to_vec()).collect(), conv).unwrap()
    }

    #[test]
    fn small_maker_breaker() {
        let single = g(&["x"], &[], &[&["x"]], MakerBreaker);
        assert_eq!(solve_mb(&single, Player::Maker).unwrap(), Player::Maker);
        let en1 = g(&["a", "b"], &[("a", "b")], &[&["a"]], MakerBreaker);
        assert_eq!(solve_mb(&en1, Player::Maker).unwrap(), Player::Maker);
        assert_eq!(solve_mb(&en1, Player::Breaker).unwrap(), Player::Breaker);
        let op = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["b"]], MakerBreaker);
        assert_eq!(solve_mb(&op, Player::Maker).unwrap(), Player::Breaker);
        assert_eq!(solve_mb(&op, Player::Breaker).unwrap(), Player::Maker);
        assert_eq!(outcome4(&op).unwrap(), Outcome::P);
        let none = g(&["a", "b"], &[("a", "b")], &[], MakerBreaker);
        assert_eq!(outcome4(&none).unwrap(), Outcome::B);
    }

    #[test]
    fn empty_winset_is_immediate() {
        let e = g(&[], &[], &[&[]], MakerBreaker);
        assert_eq!(outcome4(&e).unwrap(), Outcome::M);
        let e = g(&["a"], &[], &[&[]], MakerMaker);
        assert_eq!(solve_mm(&e, Player::Maker).unwrap(), MmResult::FirstWin);
    }

    #[test]
    fn maker_maker() {
        assert_eq!(solve_mm(&tic_tac_toe(MakerMaker), Player::Maker).unwrap(), MmResult::Draw);
        let single = g(&["x"], &[], &[&["x"]], MakerMaker);
        assert_eq!(solve_mm(&single, Player::Maker).unwrap(), MmResult::FirstWin);
        let two = g(&["a", "b"], &[], &[&["a"], &["b"]], MakerMaker);
        assert_eq!(solve_mm(&two, Player::Maker).unwrap(), MmResult::FirstWin);
        let ttt = tic_tac_toe(MakerBreaker);
        assert_eq!(outcome4(&ttt).unwrap(), Outcome::N);
    }

    #[test]
    fn caps_and_conventions() {
        let big = Game::new(
            crate::poset::Poset::from_edges((0..25).map(|i| format!("v{i}")).collect(), &[]).unwrap(),
            vec![],
            MakerBreaker,
        )
        .unwrap();
        assert_eq!(solve_mb(&big, Player::Maker), Err(PpgError::BoardTooLarge { size: 25, cap: 24 }));
        let mm = tic_tac_toe(MakerMaker);
        assert!(matches!(solve_mb(&mm, Player::Maker), Err(PpgError::ConventionMismatch(_))));
    }

    #[test]
    fn best_moves() {
        let single = g(&["x"], &[], &[&["x"]], MakerBreaker);
        assert_eq!(best_move(&Position::start(&single, Player::Maker)).unwrap(), 0);
        let en1 = g(&["a", "b"], &[("a", "b")], &[&["a"]], MakerBreaker);
        assert_eq!(best_move(&Position::start(&en1, Player::Maker)).unwrap(), 0);
        let op = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["b"]], MakerBreaker);
        assert_eq!(best_move(&Position::start(&op, Player::Maker)).unwrap(), 0);
        let done = Position::start(&single, Player::Maker).play(0).unwrap();
        assert_eq!(best_move(&done), Err(PpgError::GameOver));
    }

    fn arb_game(max_n: usize) -> impl Strategy<Value = Game> {
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            crate::random::random_game(&crate::random::GenSpec {
                n,
                width: 1 + (seed as usize % n),
                winsets: 1 + (seed as usize >> 8) % 4,
                size: 1 + (seed as usize >> 16) % 3.min(n),
                seed,
            })
            .unwrap()
        })
    }

    fn relabel(g: &Game, perm: &[usize]) -> Game {
        let p = g.poset();
        let names: Vec<String> = perm.iter().map(|&old| p.name(old).to_string()).collect();
        let mut inv = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let edges: Vec<(usize, usize)> = p.covers().into_iter().map(|(a, b)| (inv[a], inv[b])).collect();
        let sets = g.winsets().iter().map(|s| s.iter().map(|&v| inv[v]).collect()).collect();
        Game::new(crate::poset::Poset::from_edges(names, &edges).unwrap(), sets, g.convention()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn memo_agrees_with_plain_search(game in arb_game(8)) {
            let plain = OracleConfig { memoize: false, ..Default::default() };
            prop_assert_eq!(outcome4(&game).unwrap(), outcome4_with(&game, &plain).unwrap());
        }

        #[test]
        fn relabeling_preserves_outcome(game in arb_game(9), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..game.len()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(outcome4(&game).unwrap(), outcome4(&relabel(&game, &perm)).unwrap());
        }

        #[test]
        fn antichain_games_are_never_p(n in 1usize..8, seed in any::<u64>()) {
            let game = crate::random::random_game(&crate::random::GenSpec {
                n, width: n, winsets: 1 + seed as usize % 4, size: 1 + (seed as usize >> 4) % 3.min(n), seed,
            }).unwrap();
            let flat = Game::new(
                crate::poset::Poset::from_edges(game.poset().names().to_vec(), &[]).unwrap(),
                game.winsets().to_vec(),
                MakerBreaker,
            ).unwrap();
            prop_assert_ne!(outcome4(&flat).unwrap(), Outcome::P);
        }

        #[test]
        fn isolated_pair_is_neutral(game in arb_game(7)) {
            let p = game.poset();
            let mut names = p.names().to_vec();
            names.push("__pad0".into());
            names.push("__pad1".into());
            let padded = Game::new(
                crate::poset::Poset::from_edges(names, &p.covers()).unwrap(),
                game.winsets().to_vec(),
                MakerBreaker,
            ).unwrap();
            prop_assert_eq!(outcome4(&game).unwrap(), outcome4(&padded).unwrap());
        }

        #[test]
        fn normalize_preserves_winner(game in arb_game(8), walk in any::<u64>()) {
            let mut pos = Position::start(&game, if walk & 1 == 0 { Player::Maker } else { Player::Breaker });
            let mut w = walk >> 1;
            loop {
                let reduced = pos.normalize().unwrap();
                let direct = solve_position(&pos).unwrap().unwrap();
                let via = solve_mb(&reduced, pos.to_move()).unwrap();
                prop_assert_eq!(direct, via);
                let moves = pos.available_moves();
                if moves.is_empty() || w % 5 == 0 { break; }
                pos = pos.play(moves[w as usize % moves.len()]).unwrap();
                w /= 3;
            }
        }

        #[test]
        fn self_play_realizes_value(game in arb_game(8), maker_first in any::<bool>()) {
            let first = if maker_first { Player::Maker } else { Player::Breaker };
            let want = solve_mb(&game, first).unwrap();
            let mut pos = Position::start(&game, first);
            while pos.status() == Status::Ongoing {
                pos = pos.play(best_move(&pos).unwrap()).unwrap();
            }
            prop_assert_eq!(pos.status(), Status::Won(want));
        }
    }
}
