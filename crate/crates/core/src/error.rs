use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} is outside the supported range 2..=64")]
    Capacity { order: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("coefficient overflow in radical arithmetic")]
    Overflow,

    #[error("recipe step {step} selects edge {index}, but only {available} edges exist")]
    Recipe {
        step: usize,
        index: usize,
        available: usize,
    },

    #[error("{family} is defined for n in {min}..=64, got n = {n}")]
    FamilyRange {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("order {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("unsupported export format: {0}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
