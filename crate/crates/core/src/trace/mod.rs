//! Graph traces: verification, existence by exact linear programming, named
//! obstructions, ends and traces built from end weights.

mod ends;
mod faithful;
mod graph_trace;
pub mod lp;
mod obstruction;

pub use ends::{
    check_sufficient_condition, class_of_vertex, end_classes, end_vertices, find_ends,
    is_end_vertex_bruteforce, trace_from_end_assignment, EndDescriptor,
};
pub use faithful::{
    find_faithful_graph_trace, forced_zero_certificate, forced_zero_vertices, max_vertex_value,
    CertificateClaim, FarkasCertificate, InvarianceSystem, Obstruction, TraceOutcome,
};
pub use graph_trace::{is_graph_trace, GraphTrace, TraceCheck};
pub use obstruction::{
    detect_loop_with_entrance, have_common_extension, orthogonal_family_growth, LoopWitness,
};
