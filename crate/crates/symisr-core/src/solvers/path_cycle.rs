//! Paths and cycles: the optimum equals the trivial upper bound, so flipping
//! the components of the symmetric difference one by one is already optimal.

use crate::graph::{Graph, VertexSet};
use crate::recognition::classify;
use crate::reconfig::{cc_bound, Instance, ReconfigSequence};

use super::{SolveError, SolveResult, SolverTag};

/// The Observation-2 witness: flip each connected component of
/// `G[source △ target]` in ascending minimum-vertex order. Valid on any
/// graph and exactly `cc(source △ target)` steps long.
pub fn flip_components_witness(g: &Graph, source: &VertexSet, target: &VertexSet) -> ReconfigSequence {
    let diff = source.symmetric_difference(target);
    let mut current = source.clone();
    let mut sets = vec![current.clone()];
    for comp in g.connected_components(&diff) {
        current = current.symmetric_difference(&comp);
        sets.push(current.clone());
    }
    ReconfigSequence::new(sets)
}

pub fn solve_path_cycle(inst: &Instance) -> Result<SolveResult, SolveError> {
    let report = classify(inst.graph());
    if !(report.path || report.cycle) {
        return Err(SolveError::WrongClass { expected: "path or cycle" });
    }
    let bound = cc_bound(inst);
    let witness = flip_components_witness(inst.graph(), inst.source(), inst.target());
    Ok(SolveResult {
        length: bound,
        witness: Some(witness),
        solver_used: if report.cycle { SolverTag::Cycle } else { SolverTag::Path },
        cc_bound: bound,
    })
}
