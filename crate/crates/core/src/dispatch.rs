//! Routing a game to the cheapest solver whose preconditions hold.

use std::str::FromStr;

use crate::chains;
use crate::dp;
use crate::error::{PpgError, Result};
use crate::game::{Game, Outcome, Player, Position};
use crate::oracle;
use crate::poly::{self, Solver, SolverVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Auto,
    Oracle,
    Dp,
    /// Only the special-shape solvers.
    Poly,
}

impl FromStr for Algo {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Algo::Auto),
            "oracle" => Ok(Algo::Oracle),
            "dp" => Ok(Algo::Dp),
            "poly" => Ok(Algo::Poly),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DispatchConfig {
    /// Largest board handed to the oracle.
    pub oracle_cap: usize,
    /// Largest estimated state count handed to a DP.
    pub state_budget: f64,
}

impl Default for DispatchConfig {
    fn default() -> Self {
        DispatchConfig { oracle_cap: 24, state_budget: 2e7 }
    }
}

fn applicable(r: Result<SolverVerdict>) -> Result<Option<SolverVerdict>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(PpgError::PreconditionViolated(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Rough state count of the chain DP: `(h+1)^(2(w+1))`.
fn chain_dp_estimate(view: &chains::ChainView) -> f64 {
    let h = view.chains.iter().map(|c| c.len()).max().unwrap_or(0) as f64;
    (h + 1.0).powi(2 * (view.chains.len() as i32 + 1))
}

fn special(g: &Game, cfg: &DispatchConfig) -> Result<Option<SolverVerdict>> {
    if let Some(v) = applicable(poly::solve_chains_ws1(g))? {
        return Ok(Some(v));
    }
    if let Some(v) = applicable(poly::solve_height2_single_ws1(g))? {
        return Ok(Some(v));
    }
    if let Some(v) = applicable(poly::solve_height2_all_tops(g))? {
        return Ok(Some(v));
    }
    if g.winsets().iter().all(|s| s.len() <= 2) {
        if let Ok(view) = chains::ChainView::of(g.poset()) {
            if view.chains.iter().all(|c| c.len() <= 2) {
                let w = chains::solve_chains_h2_ws2(g)?;
                return Ok(Some(SolverVerdict {
                    winner: w,
                    solver: Solver::ChainsH2Ws2,
                    certificate: "height-2 chains, reductions then pattern rule".into(),
                    nodes: 0,
                }));
            }
            if chain_dp_estimate(&view) <= cfg.state_budget {
                let (w, stats) = chains::solve_chains_ws2_with_stats(g)?;
                return Ok(Some(SolverVerdict {
                    winner: w,
                    solver: Solver::ChainsWs2,
                    certificate: format!("chain DP over {} chains", view.chains.len()),
                    nodes: stats.states as u64,
                }));
            }
        }
    }
    Ok(None)
}

/// Maker-first verdict from the first applicable solver: closed-form rules,
/// chain DPs, the bounded-chain reduction, the antichain DP, then the oracle.
pub fn auto_dispatch(g: &Game) -> Result<SolverVerdict> {
    auto_dispatch_with(g, &DispatchConfig::default())
}

pub fn auto_dispatch_with(g: &Game, cfg: &DispatchConfig) -> Result<SolverVerdict> {
    g.require_mb("auto_dispatch")?;
    if let Some(v) = special(g, cfg)? {
        return Ok(v);
    }
    if chains::ChainView::of(g.poset()).is_ok() && g.winsets().len() <= 64 {
        let (residual, _) = poly::strip_free_chains(g, usize::MAX, usize::MAX)?;
        if residual.len() < g.len() && dp::state_bound(&residual) <= cfg.state_budget {
            return poly::solve_bounded_chains(g, usize::MAX, usize::MAX);
        }
    }
    if g.winsets().len() <= 64 && dp::state_bound(g) <= cfg.state_budget {
        return run_dp(g);
    }
    if g.len() <= cfg.oracle_cap {
        return run_oracle(g, cfg.oracle_cap);
    }
    Err(PpgError::NoSolverApplicable(format!(
        "{} vertices, width {}, {} winning sets exceed every budget",
        g.len(),
        g.poset().width(),
        g.winsets().len()
    )))
}

fn run_dp(g: &Game) -> Result<SolverVerdict> {
    let (winner, stats) = dp::solve_dp_with(g, &dp::DpConfig::default())?;
    Ok(SolverVerdict {
        winner,
        solver: Solver::Dp,
        certificate: format!("antichain DP, width {}", g.poset().width()),
        nodes: stats.states as u64,
    })
}

fn run_oracle(g: &Game, cap: usize) -> Result<SolverVerdict> {
    let cfg = oracle::OracleConfig { max_vertices: cap, memoize: true };
    let (winner, stats) = oracle::solve_mb_with(g, Player::Maker, &cfg)?;
    Ok(SolverVerdict { winner, solver: Solver::Oracle, certificate: "exhaustive search".into(), nodes: stats.nodes })
}

/// Maker-first verdict with a chosen algorithm.
pub fn solve_maker_first(g: &Game, algo: Algo) -> Result<SolverVerdict> {
    let cfg = DispatchConfig::default();
    match algo {
        Algo::Auto => auto_dispatch_with(g, &cfg),
        Algo::Oracle => {
            g.require_mb("oracle")?;
            run_oracle(g, oracle::MAX_VERTICES)
        }
        Algo::Dp => run_dp(g),
        Algo::Poly => {
            g.require_mb("poly")?;
            special(g, &DispatchConfig { state_budget: f64::INFINITY, ..cfg })?
                .ok_or_else(|| PpgError::NoSolverApplicable("no special-shape solver fits this game".into()))
        }
    }
}

/// Verdict for either first player. With Breaker first, every Breaker
/// opening is normalized away and the Maker-first solver is run on the rest.
pub fn solve(g: &Game, first: Player, algo: Algo) -> Result<SolverVerdict> {
    if first == Player::Maker {
        return solve_maker_first(g, algo);
    }
    g.require_mb("solve")?;
    if g.winsets().iter().any(|s| s.is_empty()) {
        return Ok(SolverVerdict {
            winner: Player::Maker,
            solver: Solver::Oracle,
            certificate: "empty winning set".into(),
            nodes: 0,
        });
    }
    let start = Position::start(g, Player::Breaker);
    let mut nodes = 0;
    let mut last = None;
    for v in start.available_moves() {
        let rest = start.play(v)?.normalize()?;
        let verdict = solve_maker_first(&rest, algo)?;
        nodes += verdict.nodes;
        if verdict.winner == Player::Breaker {
            return Ok(SolverVerdict {
                winner: Player::Breaker,
                solver: verdict.solver,
                certificate: format!("Breaker opens with {}: {}", g.poset().name(v), verdict.certificate),
                nodes,
            });
        }
        last = Some(verdict.solver);
    }
    Ok(SolverVerdict {
        winner: if last.is_some() { Player::Maker } else { Player::Breaker },
        solver: last.unwrap_or(Solver::Oracle),
        certificate: if last.is_some() {
            "Maker wins after every Breaker opening".into()
        } else {
            "empty board".into()
        },
        nodes,
    })
}

/// Outcome class and the two verdicts it was built from.
pub fn outcome(g: &Game, algo: Algo) -> Result<(Outcome, SolverVerdict, SolverVerdict)> {
    let a = solve(g, Player::Maker, algo)?;
    let b = solve(g, Player::Breaker, algo)?;
    Ok((Outcome::from_winners(a.winner, b.winner), a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_game, GenSpec};
    use proptest::prelude::*;

    fn g(v: &[&str], c: &[(&str, &str)], w: &[&[&str]]) -> Game {
        let w: Vec<Vec<&str>> = w.iter().map(|s| s.to_vec()).collect();
        Game::from_names(v, c, &w, crate::game::Convention::MakerBreaker).unwrap()
    }

    #[test]
    fn routing() {
        // Height 2, not chains: two bottoms below one top.
        let a = g(&["y1", "y2", "x"], &[("y1", "x"), ("y2", "x")], &[&["x"]]);
        assert_eq!(auto_dispatch(&a).unwrap().solver, Solver::Height2Single);
        let b = g(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")], &[&["b", "d"]]);
        assert_eq!(auto_dispatch(&b).unwrap().solver, Solver::ChainsH2Ws2);
        let c = g(&["a", "b", "c", "d", "e", "f"], &[("a", "b"), ("b", "c"), ("d", "e"), ("e", "f")], &[&["c", "f"]]);
        assert_eq!(auto_dispatch(&c).unwrap().solver, Solver::ChainsWs2);
        let d = random_game(&GenSpec { n: 10, width: 2, winsets: 3, size: 3, seed: 4 }).unwrap();
        assert!(d.poset().chain_decomposition().is_none());
        assert_eq!(auto_dispatch(&d).unwrap().solver, Solver::Dp);
    }

    #[test]
    fn nothing_fits() {
        let names: Vec<String> = (0..40).map(|i| format!("v{i}")).collect();
        let p = crate::poset::Poset::from_edges(names, &[]).unwrap();
        let sets = (0..30).map(|i| vec![i, i + 1, (i + 7) % 40]).collect();
        let game = Game::new(p, sets, crate::game::Convention::MakerBreaker).unwrap();
        assert!(matches!(auto_dispatch(&game), Err(PpgError::NoSolverApplicable(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn agrees_with_oracle(n in 1usize..=9, w in 1usize..=4, m in 0usize..=4, s in 1usize..=3, seed in any::<u64>()) {
            let game = random_game(&GenSpec { n, width: w.min(n), winsets: m, size: s.min(n), seed }).unwrap();
            let want = oracle::outcome4(&game).unwrap();
            prop_assert_eq!(outcome(&game, Algo::Auto).unwrap().0, want);
            prop_assert_eq!(outcome(&game, Algo::Dp).unwrap().0, want);
        }
    }
}
