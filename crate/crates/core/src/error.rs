use thiserror::Error;

/// Errors raised while reading an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input contains no vertices")]
    EmptyInput,
    #[error("line {line}: self-loop on `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {a}-{b}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: expected one or two labels, found {found}")]
    MalformedLine { line: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a forest")]
    NotForest,
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("graph is neither a forest nor unicyclic")]
    UnsupportedGraphClass,
}

/// Failures of the null-space constructions. Most variants signal a broken
/// internal invariant rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NullError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("basis is empty")]
    EmptyBasis,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("construction requires a {expected} graph")]
    WrongType { expected: &'static str },
    #[error("nullity recursion gave {recursion}, rank computation gave {direct}")]
    RecursionMismatch { recursion: usize, direct: usize },
    #[error("normalizing vector has zero coordinate at cycle vertex {0}")]
    NormalizationFailure(usize),
    #[error("witness {0} has no supported neighbour in its pendant tree minus itself")]
    EmptyNeighbourSupport(usize),
    #[error("neighbour-sum functional vanishes on the null space of the pendant tree at {0} minus its root")]
    DegenerateCorrection(usize),
    #[error("N-vertex set of a forest has odd size {0}")]
    OddNSet(usize),
    #[error("no structural case predicate matched")]
    CaseContradiction,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle budget is {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("oracle time limit of {0:?} exceeded")]
    TimeLimitExceeded(std::time::Duration),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generator spec: {0}")]
    SpecInvalid(String),
    #[error("no graph of the requested class after {0} attempts")]
    BiasUnsatisfied(usize),
}
