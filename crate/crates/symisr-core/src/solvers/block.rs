//! Quintic dynamic program for connected block graphs over the decomposition
//! tree.
//!
//! `f(G', p, q)` is the shortest length of a reconfiguration on `G'` in which
//! exactly `p` flips involve the root and exactly `q` flips remain available
//! for synchronization at the root clique. A merge identifies the two roots
//! (subtracting the `p` double-counted flips); an attach joins the peeled
//! subgraph's root to the host's root clique and synchronizes `s` flip pairs,
//! split into the cases where the host-side crossing count exceeds, trails,
//! or equals the peeled root's flip count.

use crate::graph::{Graph, VertexSet};
use crate::recognition::{block_decomposition, BlockNodeKind, BlockTree};
use crate::reconfig::{cc_bound, Instance};

use super::{dp_add, SolveError, SolveResult, SolverTag, DP_INF};

/// Per-node `(p, q)` tables, row-major with stride `side = n + 1`.
#[derive(Debug, Clone)]
pub struct BlockDpTable {
    pub side: usize,
    pub tables: Vec<Vec<u32>>,
}

impl BlockDpTable {
    pub fn value(&self, node: usize, p: usize, q: usize) -> u32 {
        self.tables[node][p * self.side + q]
    }
}

pub fn block_dp(tree: &BlockTree, source: &VertexSet, target: &VertexSet, n: usize) -> BlockDpTable {
    let side = n + 1;
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); tree.node_count()];
    let mut fstar = vec![DP_INF; side];

    for id in tree.post_order() {
        let node = tree.node(id);
        let mut t = vec![DP_INF; side * side];
        match node.kind {
            BlockNodeKind::Leaf => {
                let same = source.contains(node.root) == target.contains(node.root);
                for p in 0..side {
                    if (p % 2 == 0) == same {
                        t[p * side + p] = p as u32;
                    }
                }
            }
            BlockNodeKind::Merge { left, right } => {
                let (tl, tr) = (&tables[left], &tables[right]);
                for p in 0..side {
                    let ml = tl[p * side..(p + 1) * side].iter().copied().min().unwrap();
                    let mr = tr[p * side..(p + 1) * side].iter().copied().min().unwrap();
                    let sum = dp_add(ml, mr);
                    if sum < DP_INF {
                        t[p * side + p] = sum - p as u32;
                    }
                }
            }
            BlockNodeKind::Attach { left, right } => {
                let (tl, tr) = (&tables[left], &tables[right]);
                for p2 in 0..side {
                    fstar[p2] = tr[p2 * side..(p2 + 1) * side].iter().copied().min().unwrap();
                }
                let r2_in_s = source.contains(tree.node(right).root);
                let left_clique_hits =
                    tree.node(left).root_clique.iter().filter(|&v| source.contains(v)).count();
                let clique_hits =
                    node.root_clique.iter().filter(|&v| source.contains(v)).count();

                for p in 0..side {
                    let row_l = &tl[p * side..(p + 1) * side];
                    let out = &mut t[p * side..(p + 1) * side];

                    // host-side crossings exceed the peeled root's flips
                    let lo_p2 = usize::from(r2_in_s);
                    for q1 in 1..side {
                        if row_l[q1] >= DP_INF {
                            continue;
                        }
                        for p2 in lo_p2..q1 {
                            if fstar[p2] >= DP_INF {
                                continue;
                            }
                            let base = row_l[q1] + fstar[p2];
                            for s in 0..=p2 {
                                let q = q1 + p2 - 2 * s;
                                if q < side {
                                    out[q] = out[q].min(base - s as u32);
                                }
                            }
                        }
                    }

                    // peeled root flips more often than the host side crosses
                    let lo_q1 = usize::from(left_clique_hits == 1);
                    for q1 in lo_q1..side {
                        if row_l[q1] >= DP_INF {
                            continue;
                        }
                        for p2 in (q1 + 1)..side {
                            if fstar[p2] >= DP_INF {
                                continue;
                            }
                            let base = row_l[q1] + fstar[p2];
                            for s in 0..=q1 {
                                let q = q1 + p2 - 2 * s;
                                if q < side {
                                    out[q] = out[q].min(base - s as u32);
                                }
                            }
                        }
                    }

                    // equal counts
                    if clique_hits == 1 {
                        for q1 in 0..side {
                            if row_l[q1] >= DP_INF || fstar[q1] >= DP_INF {
                                continue;
                            }
                            let base = row_l[q1] + fstar[q1];
                            for s in 0..=q1 {
                                let q = 2 * (q1 - s);
                                if q < side {
                                    out[q] = out[q].min(base - s as u32);
                                }
                            }
                        }
                    } else {
                        if row_l[0] < DP_INF && fstar[0] < DP_INF {
                            out[0] = out[0].min(row_l[0] + fstar[0]);
                        }
                        for q1 in 1..side {
                            if row_l[q1] >= DP_INF || fstar[q1] >= DP_INF {
                                continue;
                            }
                            let base = row_l[q1] + fstar[q1];
                            for s in 0..q1 {
                                let q = 2 * (q1 - s);
                                if q < side {
                                    out[q] = out[q].min(base - s as u32);
                                }
                            }
                        }
                    }
                }
            }
        }
        tables[id] = t;
    }
    BlockDpTable { side, tables }
}

/// Minimum over the root table.
pub fn block_length(
    g: &Graph,
    tree: &BlockTree,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<usize, SolveError> {
    let table = block_dp(tree, source, target, g.n() as usize);
    let best = table.tables[tree.root_id()].iter().copied().min().unwrap_or(DP_INF);
    if best >= DP_INF {
        return Err(SolveError::Internal("block DP found no sequence"));
    }
    Ok(best as usize)
}

pub fn solve_block(inst: &Instance) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let root = 1;
    let tree =
        block_decomposition(g, root).map_err(|_| SolveError::WrongClass { expected: "block graph" })?;
    let length = block_length(g, &tree, inst.source(), inst.target())?;
    Ok(SolveResult { length, witness: None, solver_used: SolverTag::Block, cc_bound: cc_bound(inst) })
}
