//! Exact polynomial solvers, one per tractable graph class, plus a dispatcher
//! that decomposes by connected component and routes each to the most
//! specific applicable solver.

pub mod block;
pub mod chain;
pub mod cograph;
pub mod path_cycle;
pub mod tree;

use std::fmt;

use thiserror::Error;

use crate::oracle::{bfs_distance, OracleConfig, OracleError};
use crate::recognition::classify;
use crate::reconfig::{cc_bound, split_by_components, Instance, ReconfigSequence};

/// Sentinel for unreachable DP entries. Low enough that sums of valid table
/// values never wrap.
pub const DP_INF: u32 = u32::MAX / 4;

pub(crate) fn dp_add(a: u32, b: u32) -> u32 {
    if a >= DP_INF || b >= DP_INF {
        DP_INF
    } else {
        a + b
    }
}

pub(crate) fn dp_sub(a: u32, b: u32) -> u32 {
    if a >= DP_INF {
        DP_INF
    } else {
        debug_assert!(a >= b);
        a - b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverTag {
    Path,
    Cycle,
    Tree,
    Block,
    Cograph,
    Chain,
    Oracle,
    Mixed,
    None,
}

impl fmt::Display for SolverTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolverTag::Path => "path",
            SolverTag::Cycle => "cycle",
            SolverTag::Tree => "tree",
            SolverTag::Block => "block",
            SolverTag::Cograph => "cograph",
            SolverTag::Chain => "chain",
            SolverTag::Oracle => "oracle",
            SolverTag::Mixed => "mixed",
            SolverTag::None => "none",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub length: usize,
    /// Present for path/cycle, cograph, chain and oracle routes; the block and
    /// tree DPs report length only.
    pub witness: Option<ReconfigSequence>,
    pub solver_used: SolverTag,
    pub cc_bound: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not a {expected}")]
    WrongClass { expected: &'static str },
    #[error("solver requires a connected graph")]
    Disconnected,
    #[error("no exact solver applies to this graph class")]
    Unsupported(#[source] OracleError),
    #[error("oracle fallback failed: {0}")]
    Oracle(#[from] OracleError),
    #[error("solver internal error: {0}")]
    Internal(&'static str),
}

/// Which solver to apply; `Auto` routes per component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverChoice {
    Auto,
    Path,
    Cycle,
    Tree,
    Block,
    Cograph,
    Chain,
    Oracle,
}

/// Solves an instance: split into connected components, route each unsolved
/// component to the most specific solver (path/cycle > tree > block > cograph
/// > chain), fall back to the exhaustive oracle when no class applies, and sum
/// the per-component lengths.
pub fn solve(inst: &Instance) -> Result<SolveResult, SolveError> {
    solve_with_choice(inst, SolverChoice::Auto)
}

pub fn solve_with_choice(inst: &Instance, choice: SolverChoice) -> Result<SolveResult, SolveError> {
    if choice == SolverChoice::Oracle {
        let (length, witness) = bfs_distance(inst, &OracleConfig::default())?;
        return Ok(SolveResult {
            length,
            witness: Some(witness),
            solver_used: SolverTag::Oracle,
            cc_bound: cc_bound(inst),
        });
    }

    let bound = cc_bound(inst);
    let parts = split_by_components(inst);
    let mut total = 0usize;
    let mut tags: Vec<SolverTag> = Vec::new();
    let mut witnesses: Vec<Option<(usize, ReconfigSequence)>> = Vec::new();

    for (idx, part) in parts.iter().enumerate() {
        if part.solved {
            continue;
        }
        let sub = &part.instance;
        let res = match choice {
            SolverChoice::Auto => route_component(sub)?,
            SolverChoice::Path => {
                if !classify(sub.graph()).path {
                    return Err(SolveError::WrongClass { expected: "path" });
                }
                path_cycle::solve_path_cycle(sub)?
            }
            SolverChoice::Cycle => {
                if !classify(sub.graph()).cycle {
                    return Err(SolveError::WrongClass { expected: "cycle" });
                }
                path_cycle::solve_path_cycle(sub)?
            }
            SolverChoice::Tree => tree::solve_tree(sub)?,
            SolverChoice::Block => block::solve_block(sub)?,
            SolverChoice::Cograph => cograph::solve_cograph(sub)?,
            SolverChoice::Chain => chain::solve_chain(sub)?,
            SolverChoice::Oracle => unreachable!("handled above"),
        };
        total += res.length;
        tags.push(res.solver_used);
        witnesses.push(res.witness.map(|w| (idx, w)));
    }

    let witness = combine_witnesses(inst, &parts, &witnesses);
    let solver_used = match tags.as_slice() {
        [] => SolverTag::None,
        [first, rest @ ..] if rest.iter().all(|t| t == first) => *first,
        _ => SolverTag::Mixed,
    };
    Ok(SolveResult { length: total, witness, solver_used, cc_bound: bound })
}

fn route_component(sub: &Instance) -> Result<SolveResult, SolveError> {
    let report = classify(sub.graph());
    if report.path || report.cycle {
        path_cycle::solve_path_cycle(sub)
    } else if report.tree {
        tree::solve_tree(sub)
    } else if report.block {
        block::solve_block(sub)
    } else if report.cograph {
        cograph::solve_cograph(sub)
    } else if report.bipartite_chain {
        chain::solve_chain(sub)
    } else {
        match bfs_distance(sub, &OracleConfig::default()) {
            Ok((length, witness)) => Ok(SolveResult {
                length,
                witness: Some(witness),
                solver_used: SolverTag::Oracle,
                cc_bound: cc_bound(sub),
            }),
            Err(e) => Err(SolveError::Unsupported(e)),
        }
    }
}

/// Lifts per-component witnesses back to the whole graph, components in
/// order. Absent if any unsolved component lacks one.
fn combine_witnesses(
    inst: &Instance,
    parts: &[crate::reconfig::ComponentInstance],
    witnesses: &[Option<(usize, ReconfigSequence)>],
) -> Option<ReconfigSequence> {
    if witnesses.iter().any(|w| w.is_none()) {
        return None;
    }
    let mut current = inst.source().clone();
    let mut sets = vec![current.clone()];
    for w in witnesses.iter().flatten() {
        let (idx, seq) = w;
        let part = &parts[*idx];
        for pair in seq.sets.windows(2) {
            let local_diff = pair[0].symmetric_difference(&pair[1]);
            let global_diff = part.to_global(&local_diff);
            current = current.symmetric_difference(&global_diff);
            sets.push(current.clone());
        }
    }
    debug_assert_eq!(&current, inst.target());
    Some(ReconfigSequence::new(sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, VertexSet};
    use crate::reconfig::validate_sequence;

    fn vs(items: &[u32]) -> VertexSet {
        VertexSet::from_vec(items.to_vec())
    }

    #[test]
    fn dispatch_p5_to_path() {
        let p5 = Graph::build(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let inst = Instance::new(p5, vs(&[1, 3]), vs(&[3, 5]), None).unwrap();
        let res = solve(&inst).unwrap();
        assert_eq!(res.length, 2);
        assert_eq!(res.solver_used, SolverTag::Path);
        let w = res.witness.expect("path solver emits a witness");
        assert_eq!(validate_sequence(&inst, &w), Ok(2));
    }

    #[test]
    fn dispatch_forest_sums_components() {
        // two disjoint edges
        let g = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        let inst = Instance::new(g, vs(&[1, 3]), vs(&[2, 4]), None).unwrap();
        let res = solve(&inst).unwrap();
        assert_eq!(res.length, 2);
        let w = res.witness.expect("component witnesses combine");
        assert_eq!(validate_sequence(&inst, &w), Ok(2));
    }

    #[test]
    fn dispatch_oracle_fallback() {
        // C5 is none of the tractable classes except cycle; take the wheel-ish
        // C5 plus a chord-free center: use the Petersen-fragment C5 with a
        // pendant making it no longer a cycle, still not block/cograph/chain.
        let g = Graph::build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6)]).unwrap();
        let report = classify(&g);
        assert!(
            !report.path
                && !report.cycle
                && !report.tree
                && !report.block
                && !report.cograph
                && !report.bipartite_chain
        );
        let inst = Instance::new(g, vs(&[2, 6]), vs(&[3, 5]), None).unwrap();
        let res = solve(&inst).unwrap();
        assert_eq!(res.solver_used, SolverTag::Oracle);
        let w = res.witness.unwrap();
        assert_eq!(validate_sequence(&inst, &w).unwrap(), res.length);
    }

    #[test]
    fn forced_wrong_class_errors() {
        let k3 = Graph::build(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = Instance::new(k3, vs(&[1]), vs(&[2]), None).unwrap();
        assert!(matches!(
            solve_with_choice(&inst, SolverChoice::Tree),
            Err(SolveError::WrongClass { .. })
        ));
    }

    #[test]
    fn equal_endpoints_solve_to_zero() {
        let g = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        let inst = Instance::new(g, vs(&[1, 3]), vs(&[1, 3]), None).unwrap();
        let res = solve(&inst).unwrap();
        assert_eq!(res.length, 0);
        assert_eq!(res.solver_used, SolverTag::None);
        let w = res.witness.unwrap();
        assert_eq!(w.sets.len(), 1);
    }
}
