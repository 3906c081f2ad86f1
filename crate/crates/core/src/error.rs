use std::path::PathBuf;
use std::time::Duration;

use thiserror::Error;

/// Errors produced by graph construction, the embedding engine and the
/// compatibility calculations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    InvalidEdge(usize),

    #[error("graph order must be at least 1")]
    EmptyGraph,

    #[error("reachability must be at least 1")]
    InvalidReachability,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("potential {potential} exceeds system order {order}")]
    InvalidPotential { potential: u64, order: u64 },

    #[error("host graph of order {order} exceeds the search cap of {max}")]
    HostTooLarge { order: usize, max: usize },

    #[error("search budget exhausted: {0}")]
    BudgetExceeded(BudgetKind),

    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Which limit of a [`SearchBudget`](crate::SearchBudget) ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Nodes(u64),
    Time(Duration),
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetKind::Nodes(n) => write!(f, "more than {n} search nodes expanded"),
            BudgetKind::Time(t) => write!(f, "wall-time limit of {:.3}s reached", t.as_secs_f64()),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
