//! Higher-rank graphs, their Cuntz–Krieger algebras, graph traces, K-theory
//! data and spectral numerics.

pub mod algebra;
pub mod degree;
pub mod error;
pub mod graph;
pub mod ktheory;
pub mod spectral;
pub mod trace;

pub use degree::{Degree, DegreeDiff};
pub use error::{AlgebraError, GraphError, KTheoryError, SpectralError, TraceError};
pub use graph::{
    build_cycle, build_figure2, build_lambda_n, build_omega, build_two_regime_example,
    disjoint_union, Edge, EdgeId, FactorizationRegime, GraphBuilder, GraphFlags, KGraph, Path,
    RegimeChoice, Skeleton, SkeletonFile, Square, VertexId,
};
