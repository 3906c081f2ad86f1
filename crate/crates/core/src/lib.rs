//! Topological compatibility of parallel tasks and computing systems.
//!
//! A system is an undirected graph of processors. Allowing information-linked
//! processors to sit up to `reach` hops apart turns the system graph into its
//! `reach`-th power; a task graph is compatible with the system when it
//! embeds, as a subgraph, into that transformed graph. The largest embeddable
//! order of a task family is its parallelism potential `p`, and `p / n` is
//! the compatibility index.
//!
//! ```
//! use topo_compat::compat::{self, Reach, TaskKind};
//! use topo_compat::{SearchBudget, TopologySpec};
//!
//! let report = compat::evaluate(
//!     &TopologySpec::Hypercube(5),
//!     TaskKind::Star,
//!     Reach::new(2)?,
//!     &SearchBudget::default(),
//! )?;
//! assert_eq!(report.potential_p, 16);
//! assert_eq!(report.index_rounded(), "0.5000");
//! # Ok::<(), topo_compat::Error>(())
//! ```

pub mod cli;
pub mod compat;
pub mod edgelist;
pub mod embedding;
mod error;
pub mod graph;
pub mod topology;

pub use embedding::{Embedding, SearchBudget};
pub use error::{BudgetKind, Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use topology::TopologySpec;
