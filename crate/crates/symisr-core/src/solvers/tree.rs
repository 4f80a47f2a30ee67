//! Quadratic dynamic program for trees over the block decomposition tree.
//!
//! For each decomposition node `h(G', p)` is the shortest length of a
//! reconfiguration on `G'` leaving exactly `p` flips of the root available for
//! future synchronization. Combining an attach node distinguishes whether the
//! peeled side flips fewer, more, or equally often than the root side; prefix
//! and suffix minima over the child rows make each combine O(1) per entry.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{block_decomposition, BlockNodeKind, BlockTree};
use crate::reconfig::{cc_bound, Instance};

use super::{dp_add, dp_sub, SolveError, SolveResult, SolverTag, DP_INF};

/// Per-node value rows plus the running-minimum rows used by the attach
/// combine: `h1_prefix[p'] = min_{p <= p'} (h[p] - p)` (and the variant
/// starting at p = 1) and `h2_suffix[p'] = min_{p >= p'} h[p]`.
#[derive(Debug, Clone)]
pub struct TreeDpTable {
    pub h: Vec<Vec<u32>>,
    pub h1_prefix: Vec<Vec<u32>>,
    pub h1_prefix_pos: Vec<Vec<u32>>,
    pub h2_suffix: Vec<Vec<u32>>,
}

/// Leaf row: a single vertex can host exactly `p` root flips iff the parity
/// of `p` matches whether its membership differs between the endpoints.
fn leaf_row(n: usize, v: Vertex, source: &VertexSet, target: &VertexSet) -> Vec<u32> {
    let same = source.contains(v) == target.contains(v);
    (0..=n)
        .map(|p| if (p % 2 == 0) == same { p as u32 } else { DP_INF })
        .collect()
}

pub fn tree_dp(tree: &BlockTree, source: &VertexSet, target: &VertexSet, n: usize) -> TreeDpTable {
    let count = tree.node_count();
    let mut table = TreeDpTable {
        h: vec![Vec::new(); count],
        h1_prefix: vec![Vec::new(); count],
        h1_prefix_pos: vec![Vec::new(); count],
        h2_suffix: vec![Vec::new(); count],
    };
    for id in tree.post_order() {
        let node = tree.node(id);
        let h: Vec<u32> = match node.kind {
            BlockNodeKind::Leaf => leaf_row(n, node.root, source, target),
            BlockNodeKind::Merge { left, right } => {
                let (hl, hr) = (&table.h[left], &table.h[right]);
                (0..=n).map(|p| dp_sub(dp_add(hl[p], hr[p]), p as u32)).collect()
            }
            BlockNodeKind::Attach { left, right } => {
                let hl = &table.h[left];
                let pre0 = &table.h1_prefix[right];
                let pre1 = &table.h1_prefix_pos[right];
                let suf = &table.h2_suffix[right];
                let r1_in_s = source.contains(tree.node(left).root);
                let r2_in_s = source.contains(tree.node(right).root);
                let clique_hits =
                    node.root_clique.iter().filter(|&v| source.contains(v)).count();
                (0..=n)
                    .map(|p| {
                        let h1 = if p == 0 {
                            DP_INF
                        } else {
                            let pre = if r2_in_s { pre1[p - 1] } else { pre0[p - 1] };
                            dp_add(hl[p], pre)
                        };
                        let h2 = if p == 0 && r1_in_s {
                            dp_add(hl[0], table.h[right][0])
                        } else if p + 1 > n {
                            DP_INF
                        } else {
                            dp_add(dp_sub(hl[p], p as u32), suf[p + 1])
                        };
                        let h3 = if clique_hits == 1 {
                            dp_sub(dp_add(hl[p], table.h[right][p]), p as u32)
                        } else if p == 0 {
                            dp_add(hl[0], table.h[right][0])
                        } else {
                            dp_add(dp_sub(dp_add(hl[p], table.h[right][p]), p as u32), 1)
                        };
                        h1.min(h2).min(h3)
                    })
                    .collect()
            }
        };
        let mut pre0 = vec![DP_INF; n + 1];
        let mut pre1 = vec![DP_INF; n + 1];
        let mut suf = vec![DP_INF; n + 1];
        for p in 0..=n {
            let body = dp_sub(h[p], p as u32);
            pre0[p] = if p == 0 { body } else { pre0[p - 1].min(body) };
            pre1[p] = if p == 0 { DP_INF } else { pre1[p - 1].min(body) };
        }
        for p in (0..=n).rev() {
            suf[p] = if p == n { h[p] } else { suf[p + 1].min(h[p]) };
        }
        table.h[id] = h;
        table.h1_prefix[id] = pre0;
        table.h1_prefix_pos[id] = pre1;
        table.h2_suffix[id] = suf;
    }
    table
}

/// Minimum over the root row.
pub fn tree_length(
    g: &Graph,
    tree: &BlockTree,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<usize, SolveError> {
    let n = g.n() as usize;
    let table = tree_dp(tree, source, target, n);
    let best = table.h[tree.root_id()].iter().copied().min().unwrap_or(DP_INF);
    if best >= DP_INF {
        return Err(SolveError::Internal("tree DP found no sequence"));
    }
    Ok(best as usize)
}

pub fn solve_tree(inst: &Instance) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if g.edge_count() != g.n() as usize - 1 {
        return Err(SolveError::WrongClass { expected: "tree" });
    }
    let root = 1;
    let tree = block_decomposition(g, root).map_err(|_| SolveError::WrongClass { expected: "tree" })?;
    let length = tree_length(g, &tree, inst.source(), inst.target())?;
    Ok(SolveResult { length, witness: None, solver_used: SolverTag::Tree, cc_bound: cc_bound(inst) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{bfs_distance, OracleConfig};

    fn vs(items: &[u32]) -> VertexSet {
        VertexSet::from_vec(items.to_vec())
    }

    #[test]
    fn single_edge() {
        let g = Graph::build(2, &[(1, 2)]).unwrap();
        let inst = Instance::new(g, vs(&[1]), vs(&[2]), None).unwrap();
        assert_eq!(solve_tree(&inst).unwrap().length, 1);
    }

    #[test]
    fn star_leaf_to_leaf() {
        let g = Graph::build(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let inst = Instance::new(g.clone(), vs(&[2]), vs(&[3]), None).unwrap();
        assert_eq!(solve_tree(&inst).unwrap().length, 2);

        let inst = Instance::new(g, vs(&[2, 3, 4]), vs(&[1]), None).unwrap();
        assert_eq!(solve_tree(&inst).unwrap().length, 1);
    }

    #[test]
    fn rejects_non_tree() {
        let k3 = Graph::build(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = Instance::new(k3, vs(&[1]), vs(&[2]), None).unwrap();
        assert!(matches!(solve_tree(&inst), Err(SolveError::WrongClass { .. })));
        let forest = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        let inst = Instance::new(forest, vs(&[1]), vs(&[3]), None).unwrap();
        assert!(matches!(solve_tree(&inst), Err(SolveError::Disconnected)));
    }

    #[test]
    fn matches_oracle_on_all_small_trees() {
        // all labeled trees on up to 6 vertices via parent vectors
        for n in 1..=6u32 {
            for_each_tree(n, |g| {
                let sets = crate::oracle::enumerate_independent_sets(g, 10_000).unwrap();
                let tree = block_decomposition(g, 1).unwrap();
                for s in &sets {
                    for t in &sets {
                        let want = bfs_distance(
                            &Instance::new(g.clone(), s.clone(), t.clone(), None).unwrap(),
                            &OracleConfig::default(),
                        )
                        .unwrap()
                        .0;
                        let got = tree_length(g, &tree, s, t).unwrap();
                        assert_eq!(got, want, "n={n} s={s} t={t} edges={:?}", g.edges());
                    }
                }
            });
        }
    }

    #[test]
    fn dp_rows_sane() {
        let g = Graph::build(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let tree = block_decomposition(&g, 1).unwrap();
        let source = vs(&[1, 3, 5]);
        let target = vs(&[2]);
        let table = tree_dp(&tree, &source, &target, 5);
        for h in &table.h {
            for (p, &v) in h.iter().enumerate() {
                assert!(v >= p as u32 || v >= DP_INF, "finite h must be >= p");
            }
        }
        for pre in &table.h1_prefix {
            for w in pre.windows(2) {
                assert!(w[1] <= w[0], "prefix row is a running minimum");
            }
        }
        for suf in &table.h2_suffix {
            for w in suf.windows(2) {
                assert!(w[0] <= w[1], "suffix row is a running minimum");
            }
        }
    }

    /// Enumerates all labeled trees on n vertices: vertex v+1 attaches to any
    /// earlier vertex. This produces each labeled rooted-at-1 shape; for the
    /// oracle comparison coverage of shapes is what matters.
    fn for_each_tree(n: u32, mut f: impl FnMut(&Graph)) {
        fn rec(n: u32, next: u32, edges: &mut Vec<(u32, u32)>, f: &mut impl FnMut(&Graph)) {
            if next > n {
                f(&Graph::build(n, edges).unwrap());
                return;
            }
            for parent in 1..next {
                edges.push((parent, next));
                rec(n, next + 1, edges, f);
                edges.pop();
            }
        }
        if n == 1 {
            f(&Graph::build(1, &[]).unwrap());
            return;
        }
        rec(n, 2, &mut Vec::new(), &mut f);
    }
}
