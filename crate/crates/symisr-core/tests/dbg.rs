use symisr_core::graph::{Graph, VertexSet};
use symisr_core::oracle::enumerate_independent_sets;
use symisr_core::recognition::block_decomposition;
use symisr_core::solvers::block::block_dp;
use symisr_core::solvers::DP_INF;

#[test]
fn dbg() {
    let g = Graph::build(7, &[(1,2),(1,3),(1,4),(1,5),(3,4),(5,6),(5,7),(6,7)]).unwrap();
    let tree = block_decomposition(&g, 1).unwrap();
    let sets = enumerate_independent_sets(&g, 10_000).unwrap();
    'outer: for s in &sets {
        for t in &sets {
            let table = block_dp(&tree, s, t, 7);
            for node in 0..tree.node_count() {
                for p in 0..table.side {
                    for q in 0..table.side {
                        let v = table.value(node, p, q);
                        if v < DP_INF && (v > 7 || v < p as u32) {
                            println!("violation: node={node} kind={:?} root={} clique={} p={p} q={q} f={v}",
                                tree.node(node).kind, tree.node(node).root, tree.node(node).root_clique);
                            println!("  s={s} t={t}");
                            continue 'outer;
                        }
                    }
                }
            }
        }
    }
    let _ = VertexSet::empty();
}
