//! Games, positions and result types.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{PpgError, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    MakerBreaker,
    MakerMaker,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MakerBreaker => "maker-breaker",
            Convention::MakerMaker => "maker-maker",
        })
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "maker-breaker" => Ok(Convention::MakerBreaker),
            "maker-maker" => Ok(Convention::MakerMaker),
            _ => Err(format!("unknown convention `{s}`")),
        }
    }
}

/// The two players. Under Maker-Maker both are just labels for the
/// first and second seat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Maker,
    Breaker,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Maker => Player::Breaker,
            Player::Breaker => Player::Maker,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Maker => "Maker",
            Player::Breaker => "Breaker",
        })
    }
}

impl FromStr for Player {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "maker" => Ok(Player::Maker),
            "breaker" => Ok(Player::Breaker),
            _ => Err(format!("unknown player `{s}`")),
        }
    }
}

/// Outcome class of a Maker-Breaker game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Outcome {
    /// Maker wins whoever starts.
    M,
    /// The first player wins.
    N,
    /// The second player wins.
    P,
    /// Breaker wins whoever starts.
    B,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::M, Outcome::N, Outcome::P, Outcome::B];

    /// Combines the winners with Maker starting and with Breaker starting.
    pub fn from_winners(maker_first: Player, breaker_first: Player) -> Outcome {
        match (maker_first, breaker_first) {
            (Player::Maker, Player::Maker) => Outcome::M,
            (Player::Maker, Player::Breaker) => Outcome::N,
            (Player::Breaker, Player::Maker) => Outcome::P,
            (Player::Breaker, Player::Breaker) => Outcome::B,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::M => "M",
            Outcome::N => "N",
            Outcome::P => "P",
            Outcome::B => "B",
        })
    }
}

impl FromStr for Outcome {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "M" => Ok(Outcome::M),
            "N" => Ok(Outcome::N),
            "P" => Ok(Outcome::P),
            "B" => Ok(Outcome::B),
            _ => Err(format!("unknown outcome `{s}`")),
        }
    }
}

/// Maker-Maker result relative to a fixed first mover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MmResult {
    FirstWin,
    SecondWin,
    Draw,
}

impl fmt::Display for MmResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MmResult::FirstWin => "FirstWin",
            MmResult::SecondWin => "SecondWin",
            MmResult::Draw => "Draw",
        })
    }
}

/// A poset, a family of winning sets over its vertices, and a convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    poset: Poset,
    winsets: Vec<Vec<usize>>,
    convention: Convention,
}

impl Game {
    /// Winning sets are given as vertex indices; duplicates inside a set
    /// collapse. The order of sets is kept.
    pub fn new(poset: Poset, winsets: Vec<Vec<usize>>, convention: Convention) -> Result<Game> {
        let n = poset.len();
        let mut sets = Vec::with_capacity(winsets.len());
        for mut s in winsets {
            if let Some(&bad) = s.iter().find(|&&v| v >= n) {
                return Err(PpgError::UnknownVertex(format!("#{bad}")));
            }
            s.sort_unstable();
            s.dedup();
            sets.push(s);
        }
        Ok(Game { poset, winsets: sets, convention })
    }

    /// Builds a game from vertex names, `(lower, upper)` pairs and winning
    /// sets given by name.
    pub fn from_names<S: AsRef<str>>(
        vertices: &[S],
        covers: &[(S, S)],
        winsets: &[Vec<S>],
        convention: Convention,
    ) -> Result<Game> {
        let poset = Poset::build(vertices, covers)?;
        let sets = winsets
            .iter()
            .map(|s| s.iter().map(|v| poset.lookup(v.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Game::new(poset, sets, convention)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn winsets(&self) -> &[Vec<usize>] {
        &self.winsets
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn with_convention(mut self, convention: Convention) -> Game {
        self.convention = convention;
        self
    }

    pub fn winset_names(&self) -> Vec<Vec<String>> {
        self.winsets
            .iter()
            .map(|s| s.iter().map(|&v| self.poset.name(v).to_string()).collect())
            .collect()
    }

    pub fn p_value(&self, name: &str) -> Result<usize> {
        Ok(self.poset.p_value(self.poset.lookup(name)?))
    }

    pub(crate) fn require_mb(&self, what: &str) -> Result<()> {
        if self.convention != Convention::MakerBreaker {
            return Err(PpgError::ConventionMismatch(format!("{what} needs a maker-breaker game")));
        }
        Ok(())
    }

    pub(crate) fn require_mm(&self, what: &str) -> Result<()> {
        if self.convention != Convention::MakerMaker {
            return Err(PpgError::ConventionMismatch(format!("{what} needs a maker-maker game")));
        }
        Ok(())
    }

    /// Restriction to the vertices in `keep`. Sets containing a vertex
    /// matching `drop_if` are dropped; the rest lose their removed vertices.
    pub(crate) fn restrict(&self, keep: &FixedBitSet, drop_if: impl Fn(usize) -> bool) -> Game {
        let poset = self.poset.induced(keep);
        let mut remap = vec![usize::MAX; self.len()];
        for (new, old) in keep.ones().enumerate() {
            remap[old] = new;
        }
        let winsets = self
            .winsets
            .iter()
            .filter(|s| !s.iter().any(|&v| drop_if(v)))
            .map(|s| s.iter().filter(|&&v| keep.contains(v)).map(|&v| remap[v]).collect())
            .collect();
        Game::new(poset, winsets, self.convention).expect("restriction is well formed")
    }
}

/// Whether a position is still being played.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ongoing,
    Won(Player),
    Draw,
}

/// A game with some vertices already claimed.
#[derive(Debug, Clone)]
pub struct Position<'g> {
    game: &'g Game,
    maker: FixedBitSet,
    breaker: FixedBitSet,
    to_move: Player,
}

impl<'g> Position<'g> {
    pub fn start(game: &'g Game, first: Player) -> Position<'g> {
        let n = game.len();
        Position {
            game,
            maker: FixedBitSet::with_capacity(n),
            breaker: FixedBitSet::with_capacity(n),
            to_move: first,
        }
    }

    /// Checks that the claims are disjoint and their union is downward closed.
    pub fn new(game: &'g Game, maker: &[usize], breaker: &[usize], to_move: Player) -> Result<Position<'g>> {
        let n = game.len();
        let mut pos = Position::start(game, to_move);
        for (set, list) in [(&mut pos.maker, maker), (&mut pos.breaker, breaker)] {
            for &v in list {
                if v >= n {
                    return Err(PpgError::UnknownVertex(format!("#{v}")));
                }
                set.insert(v);
            }
        }
        if !pos.maker.is_disjoint(&pos.breaker) {
            return Err(PpgError::IllegalPosition("a vertex is claimed by both players".into()));
        }
        let claimed = pos.claimed();
        for v in claimed.ones() {
            if !game.poset().down(v).is_subset(&claimed) {
                return Err(PpgError::IllegalPosition(format!(
                    "`{}` is claimed but something below it is not",
                    game.poset().name(v)
                )));
            }
        }
        Ok(pos)
    }

    pub fn game(&self) -> &'g Game {
        self.game
    }

    pub fn maker(&self) -> &FixedBitSet {
        &self.maker
    }

    pub fn breaker(&self) -> &FixedBitSet {
        &self.breaker
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn claimed(&self) -> FixedBitSet {
        let mut c = self.maker.clone();
        c.union_with(&self.breaker);
        c
    }

    /// Unclaimed vertices whose predecessors are all claimed.
    pub fn available_moves(&self) -> Vec<usize> {
        let claimed = self.claimed();
        let p = self.game.poset();
        (0..self.game.len())
            .filter(|&v| !claimed.contains(v) && p.preds(v).iter().all(|&u| claimed.contains(u)))
            .collect()
    }

    pub fn play(&self, v: usize) -> Result<Position<'g>> {
        if !self.available_moves().contains(&v) {
            let name = if v < self.game.len() { self.game.poset().name(v).to_string() } else { format!("#{v}") };
            return Err(PpgError::IllegalMove(name));
        }
        let mut next = self.clone();
        match self.to_move {
            Player::Maker => next.maker.insert(v),
            Player::Breaker => next.breaker.insert(v),
        }
        next.to_move = self.to_move.opponent();
        Ok(next)
    }

    fn fills(&self, claims: &FixedBitSet) -> bool {
        self.game.winsets().iter().any(|s| s.iter().all(|&v| claims.contains(v)))
    }

    pub fn status(&self) -> Status {
        let no_moves = self.available_moves().is_empty();
        match self.game.convention() {
            Convention::MakerBreaker => {
                if self.fills(&self.maker) {
                    return Status::Won(Player::Maker);
                }
                let alive = self.game.winsets().iter().any(|s| !s.iter().any(|&v| self.breaker.contains(v)));
                if !alive || no_moves {
                    Status::Won(Player::Breaker)
                } else {
                    Status::Ongoing
                }
            }
            Convention::MakerMaker => {
                let last = self.to_move.opponent();
                for p in [last, self.to_move] {
                    let claims = if p == Player::Maker { &self.maker } else { &self.breaker };
                    if self.fills(claims) {
                        return Status::Won(p);
                    }
                }
                if no_moves {
                    Status::Draw
                } else {
                    Status::Ongoing
                }
            }
        }
    }

    /// Removes claimed vertices: sets hit by Breaker disappear and sets
    /// touched by Maker shrink. The result has the same winner with the same
    /// player to move.
    pub fn normalize(&self) -> Result<Game> {
        self.game.require_mb("normalization")?;
        let mut keep = self.claimed();
        keep.toggle_range(..);
        Ok(self.game.restrict(&keep, |v| self.breaker.contains(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3(winset: &[&str]) -> Game {
        Game::from_names(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            &[winset.to_vec()],
            Convention::MakerBreaker,
        )
        .unwrap()
    }

    #[test]
    fn available_moves_basic() {
        let g = chain3(&["b"]);
        let pos = Position::start(&g, Player::Maker);
        assert_eq!(pos.available_moves(), vec![0]);
        let pos = pos.play(0).unwrap().play(1).unwrap().play(2).unwrap();
        assert!(pos.available_moves().is_empty());
    }

    #[test]
    fn illegal_positions_and_moves() {
        let g = chain3(&["b"]);
        assert!(Position::new(&g, &[1], &[], Player::Maker).is_err());
        assert!(Position::new(&g, &[0], &[0], Player::Maker).is_err());
        let pos = Position::start(&g, Player::Maker);
        assert_eq!(pos.play(2).unwrap_err(), PpgError::IllegalMove("c".into()));
    }

    #[test]
    fn normalize_rules() {
        let g = chain3(&["b", "c"]);
        let pos = Position::new(&g, &[0], &[], Player::Breaker).unwrap();
        let n = pos.normalize().unwrap();
        assert_eq!(n.poset().names(), ["b", "c"]);
        assert_eq!(n.winset_names(), vec![vec!["b", "c"]]);
        assert_eq!(n.poset().cover_names(), vec![("b".into(), "c".into())]);

        let g = chain3(&["a", "c"]);
        let pos = Position::new(&g, &[0], &[], Player::Breaker).unwrap();
        assert_eq!(pos.normalize().unwrap().winset_names(), vec![vec!["c"]]);

        let g = chain3(&["a"]);
        let pos = Position::new(&g, &[], &[0], Player::Maker).unwrap();
        assert!(pos.normalize().unwrap().winsets().is_empty());

        let mm = chain3(&["a"]).with_convention(Convention::MakerMaker);
        let pos = Position::start(&mm, Player::Maker);
        assert!(matches!(pos.normalize(), Err(PpgError::ConventionMismatch(_))));
    }

    #[test]
    fn outcome_combination() {
        use Player::*;
        assert_eq!(Outcome::from_winners(Maker, Maker), Outcome::M);
        assert_eq!(Outcome::from_winners(Maker, Breaker), Outcome::N);
        assert_eq!(Outcome::from_winners(Breaker, Maker), Outcome::P);
        assert_eq!(Outcome::from_winners(Breaker, Breaker), Outcome::B);
        assert_eq!("P".parse::<Outcome>().unwrap(), Outcome::P);
    }

    #[test]
    fn status_tracks_wins() {
        let g = chain3(&["a"]);
        let pos = Position::start(&g, Player::Maker).play(0).unwrap();
        assert_eq!(pos.status(), Status::Won(Player::Maker));
        let pos = Position::start(&g, Player::Breaker).play(0).unwrap();
        assert_eq!(pos.status(), Status::Won(Player::Breaker));
    }
}
