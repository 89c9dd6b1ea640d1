use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    Order(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    Vertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("sequential join needs at least two parts, got {0}")]
    TooFewParts(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("alpha {0} is outside [0, 1)")]
    Alpha(f64),

    #[error("malformed partition: {0}")]
    Partition(String),

    #[error("order {order} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("polynomial has a zero or non-finite leading coefficient")]
    DegenerateLeading,

    #[error("{0} did not converge")]
    NonConvergence(&'static str),

    #[error("parameters out of range for {family}: {detail}")]
    FamilyRange { family: String, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}
