//! Seeded random instance generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PpgError, Result};
use crate::game::{Convention, Game};
use crate::poset::Poset;

/// Parameters for [`random_game`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Upper bound on the width: the board is covered by this many chains.
    pub width: usize,
    pub winsets: usize,
    /// Size of every winning set.
    pub size: usize,
    pub seed: u64,
}

/// A random Maker-Breaker game. Vertices are spread over `width` chains and
/// extra relations are added along a fixed linear extension, so the width
/// never exceeds `spec.width`. The same spec always gives the same game.
pub fn random_game(spec: &GenSpec) -> Result<Game> {
    let GenSpec { n, width, winsets, size, seed } = *spec;
    if n > 0 && (width == 0 || width > n) {
        return Err(PpgError::InfeasibleSpec(format!("width {width} with {n} vertices")));
    }
    if size > n {
        return Err(PpgError::InfeasibleSpec(format!("winning sets of size {size} with {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = vec![usize::MAX; width];
    let mut edges = Vec::new();
    for v in 0..n {
        let c = if v < width { v } else { rng.gen_range(0..width) };
        if last[c] != usize::MAX {
            edges.push((last[c], v));
        }
        last[c] = v;
    }
    let density = rng.gen_range(0.0..0.3);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let poset = Poset::from_edges(names, &edges)?;
    let sets = (0..winsets).map(|_| sample(&mut rng, n, size).into_vec()).collect();
    Game::new(poset, sets, Convention::MakerBreaker)
}

/// Parameters for [`random_chain_game`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSpec {
    pub chains: usize,
    pub max_height: usize,
    pub winsets: usize,
    /// Winning sets get a uniform size in `1..=max_size`.
    pub max_size: usize,
    pub seed: u64,
}

/// Disjoint chains of random heights in `1..=max_height` with random
/// winning sets. Vertex `c{i}_{j}` sits at depth `j` (1 = top) of chain `i`.
pub fn random_chain_game(spec: &ChainSpec) -> Result<Game> {
    if spec.chains == 0 || spec.max_height == 0 {
        return Err(PpgError::InfeasibleSpec("need at least one chain of height one".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let heights: Vec<usize> = (0..spec.chains).map(|_| rng.gen_range(1..=spec.max_height)).collect();
    chain_game_with(&heights, spec.winsets, spec.max_size, &mut rng)
}

pub(crate) fn chain_game_with(heights: &[usize], winsets: usize, max_size: usize, rng: &mut impl Rng) -> Result<Game> {
    let (names, edges) = chain_board(heights);
    let n = names.len();
    if n == 0 && winsets > 0 {
        return Err(PpgError::InfeasibleSpec("winning sets on an empty board".into()));
    }
    let poset = Poset::from_edges(names, &edges)?;
    let sets = (0..winsets)
        .map(|_| {
            let k = rng.gen_range(1..=max_size.max(1)).min(n);
            sample(rng, n, k).into_vec()
        })
        .collect();
    Game::new(poset, sets, Convention::MakerBreaker)
}

/// Names and covers for disjoint chains with the given heights. Each chain
/// is laid out bottom first.
pub fn chain_board(heights: &[usize]) -> (Vec<String>, Vec<(usize, usize)>) {
    let mut names = Vec::new();
    let mut edges = Vec::new();
    for (i, &h) in heights.iter().enumerate() {
        for j in (1..=h).rev() {
            if j < h {
                edges.push((names.len() - 1, names.len()));
            }
            names.push(format!("c{}_{}", i + 1, j));
        }
    }
    (names, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = GenSpec { n: 6, width: 2, winsets: 2, size: 3, seed: 1 };
        assert_eq!(random_game(&spec).unwrap(), random_game(&spec).unwrap());
    }

    #[test]
    fn width_one_is_a_chain() {
        let g = random_game(&GenSpec { n: 6, width: 1, winsets: 1, size: 2, seed: 9 }).unwrap();
        assert_eq!(g.poset().height(), 6);
        assert_eq!(g.poset().width(), 1);
    }

    #[test]
    fn width_bound_holds() {
        for seed in 0..50 {
            let g = random_game(&GenSpec { n: 10, width: 3, winsets: 3, size: 2, seed }).unwrap();
            assert!(g.poset().width() <= 3);
            assert!(g.winsets().iter().all(|s| s.len() == 2));
        }
    }

    #[test]
    fn infeasible_specs() {
        assert!(random_game(&GenSpec { n: 3, width: 4, winsets: 0, size: 0, seed: 0 }).is_err());
        assert!(random_game(&GenSpec { n: 3, width: 1, winsets: 1, size: 4, seed: 0 }).is_err());
    }

    #[test]
    fn chain_games() {
        let g = random_chain_game(&ChainSpec { chains: 3, max_height: 4, winsets: 4, max_size: 2, seed: 5 }).unwrap();
        let chains = g.poset().chain_decomposition().unwrap();
        assert_eq!(chains.len(), 3);
        for c in chains {
            for (j, &v) in c.iter().enumerate() {
                assert!(g.poset().name(v).ends_with(&format!("_{}", j + 1)));
            }
        }
    }
}
