use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("graph order {0} outside the supported range 1..=62")]
    OrderOutOfRange(usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error("star needs at least 2 vertices, got {0}")]
    StarTooSmall(usize),

    #[error("vertex {vertex} does not exist in a graph of order {n}")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("edge {0}-{1} is not present")]
    NoSuchEdge(usize, usize),

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("self loop at vertex {0}")]
    SelfLoop(usize),

    #[error("leaf count {count} at vertex {vertex} must be 1 or 2")]
    InvalidLeafCount { vertex: usize, count: usize },

    #[error("expected {expected} leaf counts, got {got}")]
    LeafCountLength { expected: usize, got: usize },

    #[error("Prüfer label {label} out of range for a tree on {n} vertices")]
    PrueferLabel { label: usize, n: usize },

    #[error("probability {0} is not in [0, 1]")]
    Probability(String),

    #[error("order {n} exceeds the enumeration cap {cap} (raise it with --cap)")]
    CapExceeded { n: usize, cap: usize },

    #[error("vertex {0} is not in the set")]
    NotInSet(usize),

    #[error("the set is not dominating")]
    NotDominating,

    #[error("minimum degree must be at least 1, got {0}")]
    MinDegreeTooSmall(usize),

    #[error("the graph has an isolated vertex")]
    IsolatedVertex,

    #[error("matching number {nu} exceeds n/2 for n = {n}")]
    MatchingTooLarge { nu: usize, n: usize },

    #[error("sequence length {n} exceeds the guard {guard}")]
    SequenceGuard { n: usize, guard: usize },

    #[error("family index {n} out of range (minimum {min})")]
    FamilyIndex { n: usize, min: usize },

    #[error("histogram input mixes orders {0} and {1}")]
    MixedOrders(usize, usize),

    #[error("normalized average {0} lies outside [1/2, 1]")]
    NavdOutOfRange(String),

    #[error("invalid density parameters a = {a}, b = {b}, k = {k}")]
    DensityParams { a: u64, b: u64, k: u64 },

    #[error("exhaustive {what} enumeration supports n <= {max}, got {n}")]
    EnumerationLimit { what: &'static str, n: usize, max: usize },

    #[error("at least one trial is required")]
    NoTrials,

    #[error("graph has no edges")]
    NoEdges,

    #[error("malformed edge list: {0}")]
    EdgeList(String),
}
