use thiserror::Error;

use crate::config::ValidationReport;
use crate::lattice::DivisorClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: rank {left} vs rank {right}")]
    Dimension { left: usize, right: usize },

    #[error("unsupported rank {rank}: expected {expected}")]
    UnsupportedRank { rank: usize, expected: &'static str },

    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },

    #[error("{0} is not a root")]
    InvalidRoot(DivisorClass),

    #[error("orbit exceeded {cap} elements")]
    OrbitTooLarge { cap: usize },

    #[error("invalid surface configuration: {0}")]
    Configuration(ValidationReport),

    #[error("multiplicities violate the proximity inequalities (slack {slack:?})")]
    ProximityViolation { slack: Vec<i128> },

    #[error("linear program is infeasible: {0}")]
    Infeasible(String),

    #[error("no bounding class for generator {0}")]
    BoundingFailure(DivisorClass),

    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, text: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}
