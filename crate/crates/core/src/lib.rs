//! Antidirected paths in oriented graphs.
//!
//! * [`graph`]: oriented graphs, degree statistics, edge-list and DOT I/O.
//! * [`antiwalk`]: antipath and anticycle witnesses validated against a host.
//! * [`oracle`]: exact longest-antipath and anticycle search, enumeration of
//!   small labelled oriented graphs.
//! * [`rotation`]: rotation and extension moves on odd antipaths, a
//!   lengthening heuristic built from them, and a claim auditor.
//! * [`constructions`]: cycle blow-ups, seeded random generators and the
//!   degree threshold that forces antipaths of a given length.
//! * [`harness`]: verification campaigns behind the `antipath` binary.

pub mod antiwalk;
pub mod constructions;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod rotation;

pub use antiwalk::{antipath_shapes, AnticycleWitness, AntipathWitness, Direction, WalkError};
pub use constructions::{
    cycle_blowup, integer_threshold, random_oriented_graph, random_with_min_pd, threshold,
    ConstructionError,
};
pub use graph::{DegreeProfile, GraphError, OrientedGraph, ParseError, VertexId};
pub use oracle::{
    contains_antipath_of_length, enumerate_oriented_graphs, longest_anticycle, longest_antipath,
    OracleError,
};
pub use rotation::{improve, AuditReport, MoveKind, MoveOutcome, RotationError, RotationState};
