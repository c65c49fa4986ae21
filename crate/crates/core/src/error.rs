use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    ZeroVertices,
    #[error("graph has {n} vertices, the supported maximum is 64")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency rows are not symmetric at ({u}, {v})")]
    AsymmetricRows { u: usize, v: usize },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("graph6 line {line}: {kind}")]
    Graph6At { line: usize, kind: Graph6Error },

    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("graph is disconnected")]
    Disconnected,

    #[error("canonical certificate supports at most 10 vertices, got {n}")]
    CertificateRange { n: usize },

    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:e})")]
    NonSymmetric { max_asymmetry: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("eigenvalue clusters separated by {gap:e}, below the ambiguity limit {limit:e}")]
    ClusterAmbiguity { gap: f64, limit: f64 },
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("graph has {distinct} distinct eigenvalues, expected exactly 3")]
    NotThreeEigenvalues { distinct: usize },

    #[error("{q} is not prime")]
    NotPrime { q: u64 },
    #[error("{q} is not congruent to 1 mod 4")]
    NotOneModFour { q: u64 },

    #[error("design text line {line}: {message}")]
    DesignText { line: usize, message: String },
    #[error("design has no blocks")]
    NoBlocks,
    #[error("design block contains point {point}, but v = {v}")]
    DesignPointRange { point: usize, v: usize },
    #[error("design block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("design block {block} repeats point {point}")]
    RepeatedPoint { block: usize, point: usize },
    #[error("not a 2-design: {0}")]
    NotTwoDesign(String),
    #[error("design has {found} distinct block intersection sizes, quasi-symmetric needs exactly 2")]
    NotQuasiSymmetric { found: usize },
    #[error("y = {y} is not one of the intersection sizes")]
    BadIntersectionChoice { y: usize },
    #[error("{what} is not a non-negative integer: {value}")]
    NonIntegral { what: &'static str, value: String },
    #[error("design multiplicity must be at least 2, got {m}")]
    MultiplicityTooSmall { m: usize },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("built-in enumeration supports 2 <= n <= 8, got {n}")]
    EnumerationRange { n: usize },
    #[error("worker count must be at least 1")]
    ZeroWorkers,
}

/// Errors specific to the graph6 codec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("long-form headers (n > 62) are not supported")]
    LongForm,
    #[error("header byte {0} outside the printable range 63..=126")]
    BadHeader(u8),
    #[error("byte {byte} at position {position} outside the printable range 63..=126")]
    BadChar { byte: u8, position: usize },
    #[error("input too short: expected {expected} payload bytes, got {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("input too long: expected {expected} payload bytes, got {actual}")]
    Overlong { expected: usize, actual: usize },
    #[error("padding bits are not zero")]
    DirtyPadding,
    #[error("graph with zero vertices")]
    ZeroVertices,
    #[error("encoding supports at most 62 vertices, got {n}")]
    TooLarge { n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
