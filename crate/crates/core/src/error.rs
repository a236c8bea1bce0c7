use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("player {player} is out of range for a game with {players} players")]
    PlayerOutOfRange { player: usize, players: usize },

    #[error("invalid coalition: player {player} is out of range for a game with {players} players")]
    InvalidCoalition { player: usize, players: usize },

    #[error("player {0} is a member of the coalition it is tested against")]
    PlayerInCoalition(usize),

    /// An engine refused an instance instead of running past its budget.
    #[error("{engine} engine refused: {budget} = {limit}, instance needs {required}")]
    BudgetExceeded {
        engine: &'static str,
        budget: &'static str,
        limit: u64,
        required: u64,
    },

    #[error("band structure violated: {0}")]
    Structural(String),

    #[error("no-carry violated between block {upper} and the blocks below it ({lower})")]
    NoCarry { upper: String, lower: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("clause {clause} contains a variable and its negation")]
    Tautology { clause: usize },

    #[error("variable {0} does not occur in any clause")]
    UnusedVariable(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance has no {0} provenance")]
    MissingProvenance(&'static str),

    #[error("candidate deletion {candidate:?} could not be evaluated: {source}")]
    CandidateRefused {
        candidate: Vec<usize>,
        #[source]
        source: Box<Error>,
    },

    #[error("engines disagree: {0}")]
    Disagreement(String),

    #[error("malformed document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for refusals caused by a resource budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        match self {
            Error::BudgetExceeded { .. } => true,
            Error::CandidateRefused { source, .. } => source.is_budget(),
            _ => false,
        }
    }
}
