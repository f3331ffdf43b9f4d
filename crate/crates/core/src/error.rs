use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PpgError {
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("poset is not a disjoint union of chains")]
    NotChainPoset,
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("board has {size} vertices, limit is {cap}")]
    BoardTooLarge { size: usize, cap: usize },
    #[error("game is over")]
    GameOver,
    #[error("illegal position: {0}")]
    IllegalPosition(String),
    #[error("illegal move `{0}`")]
    IllegalMove(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no solver applicable: {0}")]
    NoSolverApplicable(String),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown vertex `{id}`")]
    UnknownVertexAt { line: usize, id: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, PpgError>;
