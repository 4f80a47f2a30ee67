//! Graph-class recognition and the structural certificates the solvers need:
//! block decomposition trees, cotrees, chain orderings.

mod block_tree;
mod chain;
mod cotree;

pub use block_tree::{block_decomposition, BlockNode, BlockNodeKind, BlockTree, NodeId};
pub use chain::{chain_ordering, ChainOrdering};
pub use cotree::{cotree, Cotree, CotreeNode, CotreeNodeId};

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("neighborhoods are not nested")]
    NotNested,
    #[error("graph is not a cograph: induced path {0:?}")]
    NotCograph([Vertex; 4]),
    #[error("root {0} out of range")]
    BadRoot(Vertex),
}

/// Class flags plus the certificates that came out of recognition.
/// Implications hold by construction: path => tree => forest => block,
/// bipartite_chain => bipartite.
#[derive(Debug, Clone)]
pub struct GraphClassReport {
    pub connected: bool,
    pub path: bool,
    pub cycle: bool,
    pub tree: bool,
    pub forest: bool,
    pub block: bool,
    pub split: bool,
    pub cograph: bool,
    pub bipartite: bool,
    pub bipartite_chain: bool,
    pub join: bool,
    pub p4_witness: Option<[Vertex; 4]>,
    pub chain_ordering: Option<ChainOrdering>,
    pub cotree: Option<Cotree>,
}

pub fn classify(g: &Graph) -> GraphClassReport {
    let n = g.n() as usize;
    let m = g.edge_count();
    let components = g.connected_components(&g.all_vertices()).len();
    let connected = components == 1;
    let max_deg = g.max_degree();

    let forest = m == n - components;
    let tree = connected && m == n - 1;
    let path = tree && max_deg <= 2;
    let cycle = connected && n >= 3 && g.vertices().all(|v| g.degree(v) == 2);
    let block = is_block_graph(g);
    let split = is_split_graph(g);
    let bipartite = two_coloring(g).is_some();
    let join = n >= 2 && !g.complement().is_connected();

    let (cograph, cotree, p4_witness) = match cotree::cotree(g) {
        Ok(t) => (true, Some(t), None),
        Err(RecognitionError::NotCograph(w)) => (false, None, Some(w)),
        Err(_) => unreachable!("cotree only fails with a P4 witness"),
    };
    let (bipartite_chain, chain_ordering) = match chain::chain_ordering(g) {
        Ok(ord) => (true, Some(ord)),
        Err(_) => (false, None),
    };

    GraphClassReport {
        connected,
        path,
        cycle,
        tree,
        forest,
        block,
        split,
        cograph,
        bipartite,
        bipartite_chain,
        join,
        p4_witness,
        chain_ordering,
        cotree,
    }
}

/// Proper 2-coloring, `colors[v - 1] in {0, 1}`, or `None` if an odd cycle
/// exists. The minimum vertex of each component gets color 0.
pub(crate) fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n() as usize;
    let mut color = vec![u8::MAX; n];
    for start in 1..=g.n() {
        if color[(start - 1) as usize] != u8::MAX {
            continue;
        }
        color[(start - 1) as usize] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let cv = color[(v - 1) as usize];
            for &w in g.neighbors(v) {
                let cw = &mut color[(w - 1) as usize];
                if *cw == u8::MAX {
                    *cw = 1 - cv;
                    stack.push(w);
                } else if *cw == cv {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Vertex sets of the biconnected components. Isolated vertices contribute
/// none; a bridge contributes its two endpoints.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n() as usize;
    let mut disc = vec![0u32; n + 1];
    let mut low = vec![0u32; n + 1];
    let mut timer = 1u32;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out: Vec<Vec<Vertex>> = Vec::new();

    // Iterative DFS; each frame keeps an index into the neighbor list.
    for root in 1..=g.n() {
        if disc[root as usize] != 0 {
            continue;
        }
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, 0, 0)];
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w as usize] == 0 {
                    edge_stack.push((v, w));
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w as usize] < disc[v as usize] {
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (u, _, _)) = stack.last_mut() {
                    low[u as usize] = low[u as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[u as usize] {
                        let mut verts = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a as usize] >= disc[v as usize]
                                || (a == u && b == v)
                            {
                                edge_stack.pop();
                                verts.push(a);
                                verts.push(b);
                                if a == u && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        if !verts.is_empty() {
                            out.push(verts);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every biconnected component is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    biconnected_components(g).iter().all(|verts| {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// Degree-sequence characterization of split graphs: with degrees sorted
/// descending and m the largest i with d_i >= i - 1,
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
pub fn is_split_graph(g: &Graph) -> bool {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0usize;
    for (i, &d) in deg.iter().enumerate() {
        if d >= i {
            m = i + 1;
        }
    }
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    head == m * (m - 1) + tail
}
