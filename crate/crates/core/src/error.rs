use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("edge `{0}` declared twice")]
    DuplicateEdge(String),
    #[error("edge `{edge}` has color {color}, expected 1..={k}")]
    BadColor { edge: String, color: usize, k: usize },
    #[error("bicolored path {0}{1} appears in more than one square")]
    DuplicateSquare(String, String),
    #[error("composable bicolored path {0}{1} has no factorisation rule")]
    MissingSquare(String, String),
    #[error("square {outer:?} = {inner:?} does not respect colors or endpoints")]
    MismatchedEndpoints {
        outer: (String, String),
        inner: (String, String),
    },
    #[error("factorisation rules are not associative on the cube spanned by {0}, {1}, {2}")]
    AssociativityFailure(String, String, String),
    #[error("paths are not composable")]
    NotComposable,
    #[error("degree out of range for factorisation")]
    DegreeOutOfRange,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("malformed skeleton file: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different graphs")]
    GraphMismatch,
    #[error("not a graph trace: {0}")]
    NotAGraphTrace(String),
    #[error("the pair sum defining the rank-one trace is infinite on a graph with cycles; pass a truncation bound")]
    NotFinitelySummable,
    #[error("module element has {got} spinor components, expected {expected}")]
    SpinorMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed element: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("no value supplied for vertex `{0}`")]
    MissingVertexValue(String),
    #[error("graph is not locally convex")]
    NotLocallyConvex,
    #[error("sufficient condition unmet at vertices {0:?}")]
    SufficientConditionUnmet(Vec<String>),
    #[error("path ranges differ")]
    RangeMismatch,
    #[error("end class {0} has no weight")]
    MissingEndWeight(usize),
    #[error("trace formula depends on the choice of level at vertex `{0}`")]
    LevelDependence(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KTheoryError {
    #[error("end lattice changed when the search box was doubled")]
    UnsaturatedLattice,
    #[error(transparent)]
    Trace(#[from] TraceError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("least-squares fit residual {residual:.3e} exceeds threshold")]
    DivergenceDetected { residual: f64 },
    #[error("closed-form and constructive projector differ by {deviation:.3e}")]
    ProjectorMismatch { deviation: f64 },
    #[error("curvature integral {value} is not within tolerance of an integer")]
    NotQuantized { value: f64 },
    #[error("kernel dimensions changed between truncations: {0:?}")]
    UnstableKernel(Vec<(usize, i64)>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
