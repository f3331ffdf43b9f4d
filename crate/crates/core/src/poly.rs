//! Closed-form solvers for special shapes, each returning a short certificate.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::chains::ChainView;
use crate::dp;
use crate::error::{PpgError, Result};
use crate::game::{Game, Player};
use crate::poset::Color;

/// Which algorithm produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solver {
    ChainsWs1,
    Height2Single,
    Height2AllTops,
    ChainsH2Ws2,
    ChainsWs2,
    ConnectK,
    BoundedChains,
    Dp,
    Oracle,
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::ChainsWs1 => "chains-ws1",
            Solver::Height2Single => "height2-single",
            Solver::Height2AllTops => "height2-all-tops",
            Solver::ChainsH2Ws2 => "chains-h2-ws2",
            Solver::ChainsWs2 => "chains-ws2",
            Solver::ConnectK => "connect-k",
            Solver::BoundedChains => "bounded-chains",
            Solver::Dp => "dp",
            Solver::Oracle => "oracle",
        })
    }
}

/// Winner with Maker moving first, plus a short justification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverVerdict {
    pub winner: Player,
    pub solver: Solver,
    pub certificate: String,
    /// Search nodes or DP states visited; 0 for closed-form rules.
    pub nodes: u64,
}

impl SolverVerdict {
    fn new(winner: Player, solver: Solver, certificate: impl Into<String>) -> SolverVerdict {
        SolverVerdict { winner, solver, certificate: certificate.into(), nodes: 0 }
    }
}

fn violated(msg: impl Into<String>) -> PpgError {
    PpgError::PreconditionViolated(msg.into())
}

fn names(g: &Game, vs: &[usize]) -> String {
    let inner: Vec<&str> = vs.iter().map(|&v| g.poset().name(v)).collect();
    format!("{{{}}}", inner.join(","))
}

/// Height at most 2 with the single winning set `{x}`. Maker wins iff `x`
/// is minimal or, splitting the predecessors of `x` by the parity of their
/// p-value into even `M` and odd `B`, `|M| <= |B|`.
pub fn solve_height2_single_ws1(g: &Game) -> Result<SolverVerdict> {
    g.require_mb("solve_height2_single_ws1")?;
    let p = g.poset();
    let h = p.height();
    if h > 2 {
        return Err(violated(format!("height is {h}, not at most 2")));
    }
    let x = match g.winsets() {
        [s] if s.len() == 1 => s[0],
        _ => return Err(violated("needs exactly one winning set, of size 1")),
    };
    let s = Solver::Height2Single;
    if p.is_minimal(x) {
        return Ok(SolverVerdict::new(Player::Maker, s, format!("height {h}; {} is minimal", p.name(x))));
    }
    let (even, odd): (Vec<usize>, Vec<usize>) = p.preds(x).iter().partition(|&&y| p.p_value(y).is_multiple_of(2));
    let winner = if even.len() <= odd.len() { Player::Maker } else { Player::Breaker };
    let cmp = if winner == Player::Maker { "<=" } else { ">" };
    Ok(SolverVerdict::new(
        winner,
        s,
        format!("height {h}; |M|={} {cmp} |B|={} among predecessors of {}", even.len(), odd.len(), p.name(x)),
    ))
}

/// Height at most 2 where the winning sets are exactly the singletons of
/// the non-minimal vertices.
pub fn solve_height2_all_tops(g: &Game) -> Result<SolverVerdict> {
    g.require_mb("solve_height2_all_tops")?;
    let p = g.poset();
    let h = p.height();
    if h > 2 {
        return Err(violated(format!("height is {h}, not at most 2")));
    }
    let n = g.len();
    let mut singles = FixedBitSet::with_capacity(n);
    for s in g.winsets() {
        if s.len() != 1 {
            return Err(violated("all winning sets must be singletons"));
        }
        singles.insert(s[0]);
    }
    let tops: Vec<usize> = (0..n).filter(|&v| !p.is_minimal(v)).collect();
    if singles.ones().ne(tops.iter().copied()) {
        return Err(violated("winning sets must be exactly the non-minimal vertices"));
    }
    let s = Solver::Height2AllTops;
    if tops.is_empty() {
        return Ok(SolverVerdict::new(Player::Breaker, s, format!("height {h}; no top vertices")));
    }
    if n % 2 == 1 {
        return Ok(SolverVerdict::new(Player::Maker, s, format!("height {h}; |X|={n} is odd")));
    }
    for &y in &tops {
        let private = p.preds(y).iter().filter(|&&x| p.succs(x).len() == 1).count();
        let shared = p.preds(y).len() - private;
        if private <= shared {
            return Ok(SolverVerdict::new(
                Player::Maker,
                s,
                format!("height {h}; {} has {private} private <= {shared} non-private predecessors", p.name(y)),
            ));
        }
    }
    Ok(SolverVerdict::new(
        Player::Breaker,
        s,
        format!("height {h}; |X|={n} even and every top has more private than non-private predecessors"),
    ))
}

/// Disjoint chains where every winning set is a singleton.
pub fn solve_chains_ws1(g: &Game) -> Result<SolverVerdict> {
    g.require_mb("solve_chains_ws1")?;
    let view = ChainView::of(g.poset()).map_err(|_| violated("needs a disjoint union of chains"))?;
    if g.winsets().iter().any(|s| s.len() != 1) {
        return Err(violated("all winning sets must be singletons"));
    }
    let p = g.poset();
    let s = Solver::ChainsWs1;
    let vs: Vec<usize> = g.winsets().iter().map(|s| s[0]).collect();
    if vs.is_empty() {
        return Ok(SolverVerdict::new(Player::Breaker, s, "no winning sets"));
    }
    if let Some(&v) = vs.iter().find(|&&v| p.is_minimal(v)) {
        return Ok(SolverVerdict::new(Player::Maker, s, format!("minimal winning set {}", names(g, &[v]))));
    }
    if let Some(&v) = vs.iter().find(|&&v| view.color(v) == Color::White) {
        return Ok(SolverVerdict::new(Player::Maker, s, format!("white winning set {}", names(g, &[v]))));
    }
    if g.len() % 2 == 1 {
        for &a in &vs {
            if let Some(&b) = vs.iter().find(|&&b| view.loc[b].0 != view.loc[a].0) {
                return Ok(SolverVerdict::new(
                    Player::Maker,
                    s,
                    format!("black winning sets {} and {} on different chains, |X| odd", names(g, &[a]), names(g, &[b])),
                ));
            }
        }
    }
    Ok(SolverVerdict::new(Player::Breaker, s, "all winning sets black and non-minimal, no pair forces a win"))
}

/// Known answers for Connect-k on `w` columns of height `h`, Maker first.
pub fn solve_connect_k_known(k: usize, w: usize, h: usize) -> Option<SolverVerdict> {
    if k == 0 || w == 0 || h == 0 {
        return None;
    }
    if k > w && k > h {
        return Some(SolverVerdict::new(Player::Breaker, Solver::ConnectK, format!("no alignment of {k} fits")));
    }
    if 3 <= k && k <= w && h > 1 && w % 2 == 1 && h % 2 == 1 {
        return Some(SolverVerdict::new(
            Player::Maker,
            Solver::ConnectK,
            format!("{w}x{h} board with both sides odd and 3 <= k={k} <= w"),
        ));
    }
    None
}

/// Disjoint chains with at most `m_cap` winning sets of size at most
/// `s_cap`. Chains meeting no winning set are removed (one vertex stays if
/// they held an odd total), then the antichain DP runs on the rest.
pub fn solve_bounded_chains(g: &Game, m_cap: usize, s_cap: usize) -> Result<SolverVerdict> {
    let (residual, removed) = strip_free_chains(g, m_cap, s_cap)?;
    let (winner, stats) = dp::solve_dp_with(&residual, &dp::DpConfig::default())?;
    Ok(SolverVerdict {
        winner,
        solver: Solver::BoundedChains,
        certificate: format!(
            "removed {removed} vertices of winset-free chains; dp on {} vertices of width {}",
            residual.len(),
            residual.poset().width()
        ),
        nodes: stats.states as u64,
    })
}

/// The residual game of [`solve_bounded_chains`] and the number of
/// vertices removed.
pub(crate) fn strip_free_chains(g: &Game, m_cap: usize, s_cap: usize) -> Result<(Game, usize)> {
    g.require_mb("solve_bounded_chains")?;
    let view = ChainView::of(g.poset()).map_err(|_| violated("needs a disjoint union of chains"))?;
    if g.winsets().len() > m_cap {
        return Err(violated(format!("{} winning sets, cap is {m_cap}", g.winsets().len())));
    }
    if g.winsets().iter().any(|s| s.len() > s_cap) {
        return Err(violated(format!("winning set larger than {s_cap}")));
    }
    let mut used = FixedBitSet::with_capacity(g.len());
    for s in g.winsets() {
        for &v in s {
            used.insert(v);
        }
    }
    let mut keep = FixedBitSet::with_capacity(g.len());
    let mut removed = 0;
    let mut spare = None;
    for chain in &view.chains {
        if chain.iter().any(|&v| used.contains(v)) {
            for &v in chain {
                keep.insert(v);
            }
        } else {
            removed += chain.len();
            spare = spare.or(chain.first().copied());
        }
    }
    if removed % 2 == 1 {
        keep.insert(spare.expect("an odd count means some chain was removed"));
        removed -= 1;
    }
    Ok((g.restrict(&keep, |_| false), removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Convention::MakerBreaker;
    use crate::oracle::solve_mb;

    fn g(v: &[&str], c: &[(&str, &str)], w: &[&[&str]]) -> Game {
        let w: Vec<Vec<&str>> = w.iter().map(|s| s.to_vec()).collect();
        Game::from_names(v, c, &w, MakerBreaker).unwrap()
    }

    fn check(game: &Game, verdict: SolverVerdict, want: Player) {
        assert_eq!(verdict.winner, want, "{}", verdict.certificate);
        assert_eq!(solve_mb(game, Player::Maker).unwrap(), want);
    }

    #[test]
    fn height2_single() {
        let a = g(&["y1", "y2", "x"], &[("y1", "x"), ("y2", "x")], &[&["x"]]);
        check(&a, solve_height2_single_ws1(&a).unwrap(), Player::Maker);
        let b = g(&["y1", "x"], &[("y1", "x")], &[&["x"]]);
        check(&b, solve_height2_single_ws1(&b).unwrap(), Player::Breaker);
        let c = g(&["x", "z"], &[], &[&["x"]]);
        check(&c, solve_height2_single_ws1(&c).unwrap(), Player::Maker);
        let bad = g(&["a", "b"], &[], &[&["a"], &["b"]]);
        assert!(solve_height2_single_ws1(&bad).is_err());
    }

    #[test]
    fn height2_all_tops() {
        let a = g(&["a", "b", "t"], &[("a", "t"), ("b", "t")], &[&["t"]]);
        check(&a, solve_height2_all_tops(&a).unwrap(), Player::Maker);
        let b = g(&["a", "t"], &[("a", "t")], &[&["t"]]);
        check(&b, solve_height2_all_tops(&b).unwrap(), Player::Breaker);
        let c = g(
            &["a", "b", "t1", "t2"],
            &[("a", "t1"), ("b", "t1"), ("a", "t2"), ("b", "t2")],
            &[&["t1"], &["t2"]],
        );
        check(&c, solve_height2_all_tops(&c).unwrap(), Player::Maker);
        let flat = g(&["a", "b"], &[], &[]);
        check(&flat, solve_height2_all_tops(&flat).unwrap(), Player::Breaker);
    }

    #[test]
    fn chains_ws1() {
        let a = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["c"]]);
        let v = solve_chains_ws1(&a).unwrap();
        assert!(v.certificate.starts_with("white"));
        check(&a, v, Player::Maker);
        let b = g(&["a", "b"], &[("a", "b")], &[&["b"]]);
        check(&b, solve_chains_ws1(&b).unwrap(), Player::Breaker);
        let c = g(
            &["a1", "b1", "t1", "a2", "b2", "t2", "z"],
            &[("a1", "b1"), ("b1", "t1"), ("a2", "b2"), ("b2", "t2")],
            &[&["b1"], &["b2"]],
        );
        let v = solve_chains_ws1(&c).unwrap();
        assert!(v.certificate.starts_with("black"));
        check(&c, v, Player::Maker);
        let e = g(&["a"], &[], &[&[]]);
        assert!(solve_chains_ws1(&e).is_err());
    }

    #[test]
    fn connect_k_known() {
        assert_eq!(solve_connect_k_known(3, 3, 3).unwrap().winner, Player::Maker);
        assert_eq!(solve_connect_k_known(5, 3, 3).unwrap().winner, Player::Breaker);
        assert_eq!(solve_connect_k_known(3, 4, 4), None);
    }

    #[test]
    fn bounded_chains() {
        let one = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["c"]]);
        let two = g(
            &["a", "b", "c", "p", "q"],
            &[("a", "b"), ("b", "c"), ("p", "q")],
            &[&["c"]],
        );
        let v = solve_bounded_chains(&two, 4, 4).unwrap();
        assert_eq!(v.winner, solve_mb(&one, Player::Maker).unwrap());
        assert_eq!(v.winner, solve_mb(&two, Player::Maker).unwrap());
        let three = g(
            &["a", "b", "c", "p", "q", "r"],
            &[("a", "b"), ("b", "c"), ("p", "q"), ("q", "r")],
            &[&["c"]],
        );
        let (res, removed) = strip_free_chains(&three, 4, 4).unwrap();
        assert_eq!((res.len(), removed), (4, 2));
        assert_eq!(
            solve_bounded_chains(&three, 4, 4).unwrap().winner,
            solve_mb(&three, Player::Maker).unwrap()
        );
        let empty = g(&["a", "b"], &[("a", "b")], &[]);
        assert_eq!(solve_bounded_chains(&empty, 4, 4).unwrap().winner, Player::Breaker);
    }
}
