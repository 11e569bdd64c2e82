use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge {0} not present in graph")]
    EdgeNotPresent(Edge),
    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),
    #[error("graph of order {n} exceeds the cap of {cap} vertices")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),
    #[error("graph is a star")]
    IsStar,
    #[error("no minimum total dominating set avoids the leaves")]
    NotFound,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph of order {0} is too small for this invariant")]
    TooSmall(usize),
    #[error("vertex {vertex} has status {status} which does not admit operation {op}")]
    WrongStatus {
        vertex: usize,
        status: char,
        op: &'static str,
    },
    #[error("graph is not a tree")]
    NotATree,
    #[error("edge {0} is not an inner edge")]
    NotInnerEdge(Edge),
    #[error("{what} = {value} outside supported range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
