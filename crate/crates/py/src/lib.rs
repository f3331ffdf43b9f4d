//! Python module `ppg`: game construction, the solvers and the generators.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ppg_core::dispatch::{self, Algo};
use ppg_core::format::{parse_avoid_true, parse_cover, parse_instance, write_instance};
use ppg_core::random::{random_game as core_random, GenSpec};
use ppg_core::reductions::{self, parse_dimacs, parse_qdimacs};
use ppg_core::union::{self as core_union, Parity};
use ppg_core::verify::{self, Family};
use ppg_core::{oracle, Convention, Outcome, Player, PpgError};

fn err(e: PpgError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

/// A poset positional game.
#[pyclass(module = "ppg", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Game(ppg_core::Game);

#[pymethods]
impl Game {
    #[new]
    #[pyo3(signature = (vertices, covers, winsets, convention = "maker-breaker"))]
    fn new(vertices: Vec<String>, covers: Vec<(String, String)>, winsets: Vec<Vec<String>>, convention: &str) -> PyResult<Self> {
        ppg_core::Game::from_names(&vertices, &covers, &winsets, parse(convention)?).map(Game).map_err(err)
    }

    /// Parses the `ppg v1` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_instance(text).map(Game).map_err(err)
    }

    fn to_text(&self) -> String {
        write_instance(&self.0)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.0.poset().names().to_vec()
    }

    #[getter]
    fn covers(&self) -> Vec<(String, String)> {
        self.0.poset().cover_names()
    }

    #[getter]
    fn winsets(&self) -> Vec<Vec<String>> {
        self.0.winset_names()
    }

    #[getter]
    fn convention(&self) -> String {
        self.0.convention().to_string()
    }

    #[getter]
    fn width(&self) -> usize {
        self.0.poset().width()
    }

    #[getter]
    fn height(&self) -> usize {
        self.0.poset().height()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Game({} vertices, {} winning sets, {})", self.0.len(), self.0.winsets().len(), self.0.convention())
    }
}

/// Winner under perfect play, with the solver that decided it.
#[pyfunction]
#[pyo3(signature = (game, first = "maker", algo = "auto"))]
fn solve<'py>(py: Python<'py>, game: &Game, first: &str, algo: &str) -> PyResult<Bound<'py, PyDict>> {
    let first: Player = parse(first)?;
    let d = PyDict::new(py);
    if game.0.convention() == Convention::MakerMaker {
        let r = oracle::solve_mm(&game.0, first).map_err(err)?;
        d.set_item("result", r.to_string())?;
        d.set_item("solver", "oracle")?;
        return Ok(d);
    }
    let v = dispatch::solve(&game.0, first, parse::<Algo>(algo)?).map_err(err)?;
    d.set_item("winner", v.winner.to_string())?;
    d.set_item("solver", v.solver.to_string())?;
    d.set_item("certificate", v.certificate)?;
    d.set_item("nodes", v.nodes)?;
    Ok(d)
}

/// Outcome class `M`, `N`, `P` or `B`.
#[pyfunction]
#[pyo3(signature = (game, algo = "auto"))]
fn outcome(game: &Game, algo: &str) -> PyResult<String> {
    Ok(dispatch::outcome(&game.0, parse(algo)?).map_err(err)?.0.to_string())
}

/// Outcome class by exhaustive search only.
#[pyfunction]
fn oracle_outcome(game: &Game) -> PyResult<String> {
    Ok(oracle::outcome4(&game.0).map_err(err)?.to_string())
}

#[pyfunction]
fn disjoint_union(a: &Game, b: &Game) -> PyResult<Game> {
    core_union::disjoint_union(&a.0, &b.0).map(Game).map_err(err)
}

/// Possible union outcomes for components of the given parities
/// (`"even"`/`"odd"`) and outcomes. An empty list means any outcome.
#[pyfunction]
fn union_table(p1: &str, p2: &str, o1: &str, o2: &str) -> PyResult<Vec<String>> {
    let parity = |s: &str| match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        _ => Err(PyValueError::new_err(format!("unknown parity `{s}`"))),
    };
    let (o1, o2): (Outcome, Outcome) = (parse(o1)?, parse(o2)?);
    Ok(core_union::union_table_lookup(parity(p1)?, parity(p2)?, o1, o2).iter().map(|o| o.to_string()).collect())
}

#[pyfunction]
fn witness(name: &str) -> PyResult<Game> {
    core_union::witness(name).map(|w| Game(w.game)).ok_or_else(|| PyValueError::new_err(format!("unknown witness `{name}`")))
}

#[pyfunction]
fn witness_names() -> Vec<String> {
    core_union::witness_catalog().into_iter().map(|w| w.name.to_string()).collect()
}

#[pyfunction]
fn connect_k(k: usize, w: usize, h: usize) -> PyResult<Game> {
    reductions::gen_connect_k(k, w, h).map(Game).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, width, winsets, size, seed = 0))]
fn random_game(n: usize, width: usize, winsets: usize, size: usize, seed: u64) -> PyResult<Game> {
    core_random(&GenSpec { n, width, winsets, size, seed }).map(Game).map_err(err)
}

/// Game from a DIMACS CNF formula.
#[pyfunction]
fn from_dimacs(text: &str) -> PyResult<Game> {
    reductions::from_3sat(&parse_dimacs(text).map_err(err)?).map(Game).map_err(err)
}

#[pyfunction]
fn from_qdimacs(text: &str) -> PyResult<Game> {
    reductions::from_3qbf(&parse_qdimacs(text).map_err(err)?).map(Game).map_err(err)
}

#[pyfunction]
fn from_setcover(text: &str, k: usize) -> PyResult<Game> {
    reductions::from_setcover(&parse_cover(text, k).map_err(err)?).map(Game).map_err(err)
}

#[pyfunction]
fn from_avoid_true(text: &str) -> PyResult<Game> {
    reductions::from_avoid_true(&parse_avoid_true(text).map_err(err)?).map(Game).map_err(err)
}

/// Runs a solver family against the oracle; returns `(checked, failed)`.
#[pyfunction]
#[pyo3(signature = (family, count = 500, seed = 0))]
fn verify_family(family: &str, count: usize, seed: u64) -> PyResult<(usize, usize)> {
    let r = verify::solver_family(parse::<Family>(family)?, count, seed);
    Ok((r.checked, r.failed))
}

#[pymodule]
fn ppg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Game>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(outcome, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_outcome, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(union_table, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(witness_names, m)?)?;
    m.add_function(wrap_pyfunction!(connect_k, m)?)?;
    m.add_function(wrap_pyfunction!(random_game, m)?)?;
    m.add_function(wrap_pyfunction!(from_dimacs, m)?)?;
    m.add_function(wrap_pyfunction!(from_qdimacs, m)?)?;
    m.add_function(wrap_pyfunction!(from_setcover, m)?)?;
    m.add_function(wrap_pyfunction!(from_avoid_true, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    Ok(())
}
