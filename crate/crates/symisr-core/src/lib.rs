//! Shortest reconfiguration of independent sets under the flip rule: two
//! independent sets are adjacent when their symmetric difference induces a
//! connected subgraph, which is exactly adjacency on the independent set
//! polytope.
//!
//! The crate provides the problem semantics ([`reconfig`]), an exhaustive
//! oracle for small instances ([`oracle`]), exact polynomial solvers for
//! paths, cycles, trees, block graphs, cographs and bipartite chain graphs
//! ([`solvers`]), class recognition with structural certificates
//! ([`recognition`]), and generators for the two hardness reductions and the
//! worst-case-gap family ([`reductions`]).

pub mod bits;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod reconfig;
pub mod reductions;
pub mod solvers;

pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use reconfig::{Instance, ReconfigSequence};
