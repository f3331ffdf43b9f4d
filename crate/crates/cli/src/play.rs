//! Text-mode game against the oracle engine.

use std::io::{BufRead, Write};

use anyhow::Result;
use ppg_core::oracle::best_move;
use ppg_core::{Game, Player, Position, Status};

fn names(g: &Game, vs: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<&str> = vs.into_iter().map(|v| g.poset().name(v)).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn show(pos: &Position, out: &mut impl Write) -> Result<()> {
    let g = pos.game();
    writeln!(out, "Maker:     {}", names(g, pos.maker().ones()))?;
    writeln!(out, "Breaker:   {}", names(g, pos.breaker().ones()))?;
    writeln!(out, "available: {}", names(g, pos.available_moves()))?;
    Ok(())
}

/// Runs until the game ends, the human types `quit`, or input runs out.
pub fn run(g: &Game, human: Player, first: Player, input: &mut impl BufRead, out: &mut impl Write) -> Result<()> {
    let mut pos = Position::start(g, first);
    writeln!(out, "You are {human}. Enter a vertex id, or `quit`.")?;
    loop {
        match pos.status() {
            Status::Won(p) => {
                writeln!(out, "{p} wins.")?;
                return Ok(());
            }
            Status::Draw => {
                writeln!(out, "Draw.")?;
                return Ok(());
            }
            Status::Ongoing => {}
        }
        if pos.to_move() != human {
            let v = best_move(&pos)?;
            writeln!(out, "engine plays {}", g.poset().name(v))?;
            pos = pos.play(v)?;
            continue;
        }
        show(&pos, out)?;
        write!(out, "> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(());
        }
        let id = line.trim();
        if id.is_empty() {
            continue;
        }
        if id == "quit" {
            return Ok(());
        }
        let legal = pos.available_moves();
        match g.poset().index_of(id).filter(|v| legal.contains(v)) {
            Some(v) => pos = pos.play(v)?,
            None => writeln!(out, "illegal move `{id}`; legal: {}", names(g, legal))?,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ppg_core::Convention;

    fn session(g: &Game, human: Player, input: &str) -> String {
        let mut out = Vec::new();
        run(g, human, Player::Maker, &mut input.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn rejects_then_wins() {
        let g = Game::from_names(&["a", "b"], &[("a", "b")], &[vec!["a"]], Convention::MakerBreaker).unwrap();
        let s = session(&g, Player::Maker, "b\nzz\na\n");
        assert!(s.contains("illegal move `b`; legal: a"));
        assert!(s.contains("illegal move `zz`"));
        assert!(s.ends_with("Maker wins.\n"));
    }

    #[test]
    fn engine_moves_and_eof() {
        let g = Game::from_names(&["a", "b"], &[("a", "b")], &[vec!["b"]], Convention::MakerBreaker).unwrap();
        let s = session(&g, Player::Breaker, "");
        assert!(s.contains("engine plays a"));
        assert!(!s.contains("wins"));
    }
}
