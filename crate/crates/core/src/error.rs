use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::Vertex;
use crate::model::Color;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed assignment document: {0}")]
    Document(String),

    #[error("colors must be positive integers")]
    ZeroColor,
    #[error("expected a value for each of {expected} vertices, got {got}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("interval at vertex {vertex} is empty: gamma {gamma} > mu {mu}")]
    EmptyInterval { vertex: Vertex, gamma: Color, mu: Color },
    #[error("interval at vertex {vertex} has length {len}, expected {k}")]
    IntervalLength { vertex: Vertex, len: u64, k: usize },
    #[error("precolored vertex {vertex} uses color {color} outside 1..={k}")]
    PrecolorOutOfPalette { vertex: Vertex, color: Color, k: usize },
    #[error("precoloring is improper on edge {0}-{1}")]
    ImproperPrecoloring(Vertex, Vertex),

    #[error("coloring is not proper on edge {0}-{1}")]
    ImproperColoring(Vertex, Vertex),
    #[error("vertex {vertex} has color {color}, expected a color in 1..={k}")]
    ColorOutOfRange { vertex: Vertex, color: Color, k: usize },
    #[error("vertex {vertex} has color {color} outside its allowed set")]
    ColorNotAllowed { vertex: Vertex, color: Color },

    #[error("reduction has no interval instance: every list is empty")]
    DegenerateReduction,

    #[error("interval length k={k} must satisfy 1 <= k <= n={n}")]
    InvalidIntervalLength { k: usize, n: usize },
    #[error("pool {pool} smaller than list size {k}")]
    PoolTooSmall { pool: usize, k: usize },
    #[error("work budget exceeded: {count} assignments, cap {cap}")]
    BudgetExceeded { count: BigUint, cap: BigUint },
}
