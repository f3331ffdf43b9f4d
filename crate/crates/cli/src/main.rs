use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ppg_core::dispatch::{self, Algo};
use ppg_core::format::{parse_avoid_true, parse_cover, parse_instance, write_instance};
use ppg_core::random::{random_game, GenSpec};
use ppg_core::reductions::{self, parse_dimacs, parse_qdimacs};
use ppg_core::union::{self, Parity};
use ppg_core::verify::{self, Family, Report};
use ppg_core::{dp, oracle, Convention, Game, MmResult, Player};

mod play;

#[derive(Parser)]
#[command(name = "ppg", version, about = "Solve and analyze poset positional games")]
struct Cli {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Winner with perfect play.
    Solve {
        /// Instance file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = First::Maker)]
        first: First,
        #[arg(long, default_value = "auto")]
        algo: Algo,
    },
    /// Outcome class: M, N, P or B.
    Outcome {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algo,
    },
    /// Outcome of the disjoint union of two games.
    Union {
        file1: PathBuf,
        file2: PathBuf,
        /// Fail unless the outcome lies in the cell predicted by the union table.
        #[arg(long)]
        check_table: bool,
    },
    /// Write an instance file to stdout.
    #[command(subcommand)]
    Gen(Gen),
    /// Check solvers and identities against the exhaustive oracle.
    #[command(subcommand)]
    Verify(Verify),
    /// Play against the engine.
    Play {
        file: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = Side::Maker)]
        side: Side,
        /// Who moves first.
        #[arg(long, value_enum, default_value_t = Side::Maker)]
        first: Side,
        #[arg(long, value_enum, default_value_t = Engine::Oracle)]
        engine: Engine,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Connect-k on a w by h board with gravity.
    Connectk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        h: usize,
    },
    /// Maker-Breaker game from a DIMACS CNF formula.
    Sat { file: PathBuf },
    /// Maker-Breaker game from a QDIMACS formula with a strict forall/exists prefix.
    Qbf { file: PathBuf },
    /// Maker-Breaker game from a set cover hypergraph.
    Setcover {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Maker-Maker game from an Avoid True formula.
    Avoidtrue { file: PathBuf },
    /// Seeded random game.
    Random(RandomArgs),
    /// A game from the built-in witness catalog.
    Witness { name: String },
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    width: usize,
    #[arg(long, default_value_t = 1)]
    winsets: usize,
    #[arg(long, default_value_t = 1)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Verify {
    /// Fuzz the union table with random pairs.
    UnionTable {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Catalog outcomes and the listed union identities.
    Witnesses,
    /// A solver family against the oracle; all families if none is given.
    Solvers {
        #[arg(long)]
        family: Option<Family>,
        /// Instances for the randomized families.
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hardness generators against brute-force referees.
    Reductions,
    /// Structural lemmas on random instances.
    Lemmas {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum First {
    Maker,
    Breaker,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Maker,
    Breaker,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::Maker => Player::Maker,
            Side::Breaker => Player::Breaker,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Oracle,
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(path: &Path) -> Result<Game> {
    parse_instance(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn mm_winner(r: MmResult, first: Player) -> Value {
    match r {
        MmResult::FirstWin => json!(first.to_string()),
        MmResult::SecondWin => json!(first.opponent().to_string()),
        MmResult::Draw => Value::Null,
    }
}

fn solve_mm(g: &Game, first: Player, algo: Algo) -> Result<Output> {
    let (r, solver, nodes) = match algo {
        Algo::Dp => {
            let (r, s) = dp::solve_dp_mm_with(g, &dp::DpConfig::default())?;
            (r, "dp", s.states as u64)
        }
        Algo::Oracle | Algo::Auto => {
            let (r, s) = oracle::solve_mm_with(g, first, &oracle::OracleConfig::default())?;
            (r, "oracle", s.nodes)
        }
        Algo::Poly => bail!("no special-shape solver handles maker-maker games"),
    };
    let text = match r {
        MmResult::Draw => "Draw".to_string(),
        _ => mm_winner(r, first).as_str().unwrap_or_default().to_string(),
    };
    Ok(Output {
        text: format!("{text}\nsolver: {solver}"),
        json: json!({ "winner": mm_winner(r, first), "result": r.to_string(), "first": first.to_string(),
                      "outcome": Value::Null, "solver": solver, "nodes": nodes }),
        ok: true,
    })
}

fn solve(g: &Game, first: First, algo: Algo) -> Result<Output> {
    let firsts = match first {
        First::Maker => vec![Player::Maker],
        First::Breaker => vec![Player::Breaker],
        First::Both => vec![Player::Maker, Player::Breaker],
    };
    if g.convention() == Convention::MakerMaker {
        let outs = firsts.iter().map(|&f| solve_mm(g, f, algo)).collect::<Result<Vec<_>>>()?;
        return Ok(merge(&firsts, outs));
    }
    let verdicts = firsts.iter().map(|&f| dispatch::solve(g, f, algo)).collect::<ppg_core::Result<Vec<_>>>()?;
    let outcome = match verdicts[..] {
        [ref a, ref b] => json!(ppg_core::Outcome::from_winners(a.winner, b.winner).to_string()),
        _ => Value::Null,
    };
    let outs = verdicts
        .iter()
        .zip(&firsts)
        .map(|(v, f)| Output {
            text: format!("{}\nsolver: {} ({})", v.winner, v.solver, v.certificate),
            json: json!({ "winner": v.winner.to_string(), "first": f.to_string(), "outcome": outcome,
                          "solver": v.solver.to_string(), "certificate": v.certificate, "nodes": v.nodes }),
            ok: true,
        })
        .collect();
    Ok(merge(&firsts, outs))
}

/// One result as is; two as labeled text and a `results` array.
fn merge(firsts: &[Player], mut outs: Vec<Output>) -> Output {
    if outs.len() == 1 {
        return outs.pop().expect("one output");
    }
    let text: Vec<String> =
        firsts.iter().zip(&outs).map(|(f, o)| format!("{f} first: {}", o.text.replace('\n', "\n  "))).collect();
    let results: Vec<Value> = outs.iter().map(|o| o.json.clone()).collect();
    let outcome = results[0]["outcome"].clone();
    Output {
        text: text.join("\n"),
        json: json!({ "winner": Value::Null, "outcome": outcome, "solver": results[0]["solver"],
                      "nodes": results.iter().filter_map(|r| r["nodes"].as_u64()).sum::<u64>(), "results": results }),
        ok: true,
    }
}

fn outcome(g: &Game, algo: Algo) -> Result<Output> {
    if g.convention() == Convention::MakerMaker {
        bail!("outcome classes are defined for maker-breaker games; use `solve --first both`");
    }
    let (o, a, b) = dispatch::outcome(g, algo)?;
    Ok(Output {
        text: o.to_string(),
        json: json!({ "winner": Value::Null, "outcome": o.to_string(), "solver": a.solver.to_string(),
                      "maker_first": a.winner.to_string(), "breaker_first": b.winner.to_string(),
                      "nodes": a.nodes + b.nodes }),
        ok: true,
    })
}

fn union_cmd(g1: &Game, g2: &Game, check: bool) -> Result<Output> {
    let u = union::disjoint_union(g1, g2)?;
    let (o, a, b) = dispatch::outcome(&u, Algo::Auto)?;
    let mut text = o.to_string();
    let mut j = json!({ "winner": Value::Null, "outcome": o.to_string(), "solver": a.solver.to_string(),
                        "nodes": a.nodes + b.nodes });
    let mut ok = true;
    if check {
        let (o1, o2) = (dispatch::outcome(g1, Algo::Auto)?.0, dispatch::outcome(g2, Algo::Auto)?.0);
        let (p1, p2) = (Parity::of(g1), Parity::of(g2));
        let cell = union::union_table_lookup(p1, p2, o1, o2);
        ok = cell.is_empty() || cell.contains(&o);
        let cell_text = if cell.is_empty() {
            "any".to_string()
        } else {
            cell.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        };
        text.push_str(&format!(
            "\ntable: {p1:?} {o1} + {p2:?} {o2} -> {{{cell_text}}}: {}",
            if ok { "consistent" } else { "VIOLATION" }
        ));
        j["components"] = json!([o1.to_string(), o2.to_string()]);
        j["cell"] = json!(cell.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        j["consistent"] = json!(ok);
    }
    Ok(Output { text, json: j, ok })
}

fn gen(cmd: Gen) -> Result<Game> {
    Ok(match cmd {
        Gen::Connectk { k, w, h } => reductions::gen_connect_k(k, w, h)?,
        Gen::Sat { file } => reductions::from_3sat(&parse_dimacs(&read_input(&file)?)?)?,
        Gen::Qbf { file } => reductions::from_3qbf(&parse_qdimacs(&read_input(&file)?)?)?,
        Gen::Setcover { file, k } => reductions::from_setcover(&parse_cover(&read_input(&file)?, k)?)?,
        Gen::Avoidtrue { file } => reductions::from_avoid_true(&parse_avoid_true(&read_input(&file)?)?)?,
        Gen::Random(a) => {
            random_game(&GenSpec { n: a.n, width: a.width, winsets: a.winsets, size: a.size, seed: a.seed })?
        }
        Gen::Witness { name } => match union::witness(&name) {
            Some(w) => w.game,
            None => {
                let names: Vec<String> = union::witness_catalog().into_iter().map(|w| w.name.to_string()).collect();
                bail!("unknown witness `{name}` (known: {})", names.join(", "))
            }
        },
    })
}

fn verify_cmd(cmd: Verify) -> Output {
    let reports: Vec<Report> = match cmd {
        Verify::UnionTable { max_n, samples, seed } => vec![verify::union_soundness(samples, max_n, seed)],
        Verify::Witnesses => vec![verify::witnesses(), verify::union_completeness()],
        Verify::Solvers { family, count, seed } => match family {
            Some(f) => vec![verify::solver_family(f, count, seed)],
            None => Family::ALL.iter().map(|&f| verify::solver_family(f, count, seed)).collect(),
        },
        Verify::Reductions => vec![
            verify::reduction_sat(),
            verify::reduction_setcover(6),
            verify::reduction_qbf(),
            verify::reduction_avoid_true(4),
        ],
        Verify::Lemmas { seed } => vec![
            verify::lemma_empty_component(200, seed),
            verify::lemma_last_predecessor(100, seed),
            verify::lemma_black_singleton(100, seed),
        ],
    };
    let ok = reports.iter().all(Report::passed);
    Output {
        text: reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
        json: json!({ "passed": ok, "reports": reports }),
        ok,
    }
}

fn run(cli: Cli) -> Result<bool> {
    let start = Instant::now();
    let out = match cli.cmd {
        Cmd::Solve { file, first, algo } => solve(&load(&file)?, first, algo)?,
        Cmd::Outcome { file, algo } => outcome(&load(&file)?, algo)?,
        Cmd::Union { file1, file2, check_table } => union_cmd(&load(&file1)?, &load(&file2)?, check_table)?,
        Cmd::Gen(g) => {
            print!("{}", write_instance(&gen(g)?));
            return Ok(true);
        }
        Cmd::Verify(v) => verify_cmd(v),
        Cmd::Play { file, side, first, engine: Engine::Oracle } => {
            let g = load(&file)?;
            let stdin = io::stdin();
            play::run(&g, side.into(), first.into(), &mut stdin.lock(), &mut io::stdout())?;
            return Ok(true);
        }
    };
    if cli.json {
        let mut j = out.json;
        j["wall_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
        println!("{j}");
    } else {
        println!("{}", out.text);
    }
    Ok(out.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
