//! Cographs: recurse on the cotree. A union node solves its parts
//! independently and sums; a join node needs at most two steps since every
//! vertex of one side sees the whole other side.

use crate::graph::{Graph, VertexSet};
use crate::recognition::{cotree, Cotree, CotreeNode, CotreeNodeId};
use crate::reconfig::{cc_bound, Instance, ReconfigSequence};

use super::{SolveError, SolveResult, SolverTag};

/// Length plus the flip sets, to be applied in order starting from the
/// source.
pub fn cograph_plan(
    g: &Graph,
    tree: &Cotree,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<(usize, Vec<VertexSet>), SolveError> {
    let mut flips = Vec::new();
    let len = plan_node(g, tree, tree.root_id(), source, target, &mut flips)?;
    Ok((len, flips))
}

fn plan_node(
    g: &Graph,
    tree: &Cotree,
    id: CotreeNodeId,
    source: &VertexSet,
    target: &VertexSet,
    flips: &mut Vec<VertexSet>,
) -> Result<usize, SolveError> {
    let span = tree.span(id);
    let s = source.intersection(span);
    let t = target.intersection(span);
    if s == t {
        return Ok(0);
    }
    match tree.node(id) {
        CotreeNode::Leaf(v) => {
            flips.push(VertexSet::singleton(*v));
            Ok(1)
        }
        CotreeNode::Union(children) => {
            let mut total = 0;
            for &c in children {
                total += plan_node(g, tree, c, &s, &t, flips)?;
            }
            Ok(total)
        }
        CotreeNode::Join(children) => {
            let diff = s.symmetric_difference(&t);
            if g.is_connected_subset(&diff) {
                flips.push(diff);
                return Ok(1);
            }
            // Both endpoint sets live inside the same child part; hop through
            // a single vertex of the opposite side, minimum id.
            let all = s.union(&t);
            let home = children
                .iter()
                .copied()
                .find(|&c| all.is_subset(tree.span(c)))
                .ok_or(SolveError::Internal("join endpoints span two parts yet disconnected"))?;
            let v = span
                .difference(tree.span(home))
                .min_vertex()
                .ok_or(SolveError::Internal("join node with a single part"))?;
            let mid = VertexSet::singleton(v);
            flips.push(s.symmetric_difference(&mid));
            flips.push(mid.symmetric_difference(&t));
            Ok(2)
        }
    }
}

pub fn cograph_length(
    g: &Graph,
    tree: &Cotree,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<usize, SolveError> {
    Ok(cograph_plan(g, tree, source, target)?.0)
}

pub fn solve_cograph(inst: &Instance) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    let tree = cotree(g).map_err(|_| SolveError::WrongClass { expected: "cograph" })?;
    let (length, flips) = cograph_plan(g, &tree, inst.source(), inst.target())?;
    let mut current = inst.source().clone();
    let mut sets = vec![current.clone()];
    for x in flips {
        current = current.symmetric_difference(&x);
        sets.push(current.clone());
    }
    Ok(SolveResult {
        length,
        witness: Some(ReconfigSequence::new(sets)),
        solver_used: SolverTag::Cograph,
        cc_bound: cc_bound(inst),
    })
}
