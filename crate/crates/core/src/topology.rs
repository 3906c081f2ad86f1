//! Generators for hypercube, ring, star and complete topologies, plus the
//! reflected Gray-code Hamiltonian cycle of the hypercube.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::edgelist;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest hypercube dimension the generator accepts.
pub const MAX_HYPERCUBE_DIM: u32 = 20;

/// The hypercube `H_s`: vertex `i` is the bit string of `i`, and two vertices
/// are adjacent iff their labels differ in exactly one bit.
pub fn hypercube(s: u32) -> Result<Graph> {
    if !(1..=MAX_HYPERCUBE_DIM).contains(&s) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIM}, got {s}"
        )));
    }
    let n = 1usize << s;
    let adjacency = (0..n)
        .map(|v| (0..s).map(|bit| v ^ (1 << bit)).collect())
        .collect();
    Ok(Graph::from_adjacency(adjacency))
}

/// The cycle `C_p`.
pub fn ring(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!(
            "ring order must be at least 3, got {p}"
        )));
    }
    Graph::from_edges(p, (0..p).map(|i| (i, (i + 1) % p)))
}

/// The star `K_{1,p-1}` with vertex 0 at the center.
pub fn star(p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!(
            "star order must be at least 2, got {p}"
        )));
    }
    Graph::from_edges(p, (1..p).map(|leaf| (0, leaf)))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph order must be at least 1".into(),
        ));
    }
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Ok(Graph::from_adjacency(adjacency))
}

/// Reflected binary Gray code on `s` bits, read as a closed walk through
/// every vertex of `H_s`.
///
/// Consecutive entries, and the last and first entry, differ in one bit, so
/// for `s >= 2` this is a Hamiltonian cycle of the hypercube.
///
/// ```
/// assert_eq!(topo_compat::topology::gray_code_cycle(2).unwrap(), vec![0, 1, 3, 2]);
/// ```
pub fn gray_code_cycle(s: u32) -> Result<Vec<usize>> {
    if !(2..usize::BITS).contains(&s) {
        return Err(Error::InvalidParameter(format!(
            "Gray-code cycle needs 2 <= s < {}, got {s}",
            usize::BITS
        )));
    }
    Ok((0..1usize << s).map(|i| i ^ (i >> 1)).collect())
}

/// A named or file-backed topology, written `hypercube:s`, `ring:p`,
/// `star:p`, `complete:n` or `file:PATH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologySpec {
    Hypercube(u32),
    Ring(usize),
    Star(usize),
    Complete(usize),
    File(PathBuf),
}

impl TopologySpec {
    /// Generates (or reads) the graph this spec describes.
    pub fn build(&self) -> Result<Graph> {
        match self {
            TopologySpec::Hypercube(s) => hypercube(*s),
            TopologySpec::Ring(p) => ring(*p),
            TopologySpec::Star(p) => star(*p),
            TopologySpec::Complete(n) => complete(*n),
            TopologySpec::File(path) => edgelist::read_file(path),
        }
    }

    /// Short tag for reports: `hypercube`, `ring`, `star`, `complete` or
    /// `file`.
    pub fn kind(&self) -> &'static str {
        match self {
            TopologySpec::Hypercube(_) => "hypercube",
            TopologySpec::Ring(_) => "ring",
            TopologySpec::Star(_) => "star",
            TopologySpec::Complete(_) => "complete",
            TopologySpec::File(_) => "file",
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match &self {
            TopologySpec::Hypercube(s) => (1..=MAX_HYPERCUBE_DIM).contains(s),
            TopologySpec::Ring(p) => *p >= 3,
            TopologySpec::Star(p) => *p >= 2,
            TopologySpec::Complete(n) => *n >= 1,
            TopologySpec::File(path) => !path.as_os_str().is_empty(),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidParameter(format!(
                "parameter out of range in `{self}`"
            )))
        }
    }
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologySpec::Hypercube(s) => write!(f, "hypercube:{s}"),
            TopologySpec::Ring(p) => write!(f, "ring:{p}"),
            TopologySpec::Star(p) => write!(f, "star:{p}"),
            TopologySpec::Complete(n) => write!(f, "complete:{n}"),
            TopologySpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl FromStr for TopologySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (kind, param) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("expected KIND:PARAM, got `{text}`")))?;
        let number = || -> Result<usize> {
            param.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("`{param}` is not a positive integer"))
            })
        };
        let spec = match kind.trim() {
            "hypercube" => TopologySpec::Hypercube(u32::try_from(number()?).map_err(|_| {
                Error::InvalidParameter(format!("hypercube dimension `{param}` is too large"))
            })?),
            "ring" => TopologySpec::Ring(number()?),
            "star" => TopologySpec::Star(number()?),
            "complete" => TopologySpec::Complete(number()?),
            "file" => TopologySpec::File(PathBuf::from(param)),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown topology kind `{other}`"
                )))
            }
        };
        spec.validate()
    }
}
