//! Rooted decomposition trees for connected block graphs.
//!
//! A rooted block graph is built by three operations: a single vertex; gluing
//! two rooted block graphs at their common root (the root clique collapses to
//! the root); and attaching one rooted block graph to the root clique of
//! another by joining its root to every root-clique vertex. The decomposition
//! below inverts these, yielding a binary tree with O(n) nodes whose realized
//! graph is exactly the input.

use crate::graph::{Graph, Vertex, VertexSet};

use super::{is_block_graph, RecognitionError};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockNodeKind {
    Leaf,
    /// Children share the same root vertex.
    Merge { left: NodeId, right: NodeId },
    /// The right child's root is joined to the left child's root clique.
    Attach { left: NodeId, right: NodeId },
}

#[derive(Debug, Clone)]
pub struct BlockNode {
    pub kind: BlockNodeKind,
    pub root: Vertex,
    pub root_clique: VertexSet,
}

#[derive(Debug, Clone)]
pub struct BlockTree {
    nodes: Vec<BlockNode>,
    root: NodeId,
}

impl BlockTree {
    pub fn root_id(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &BlockNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[BlockNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Node ids with children before parents.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                order.push(id);
                continue;
            }
            stack.push((id, true));
            match self.nodes[id].kind {
                BlockNodeKind::Leaf => {}
                BlockNodeKind::Merge { left, right } | BlockNodeKind::Attach { left, right } => {
                    stack.push((right, false));
                    stack.push((left, false));
                }
            }
        }
        order
    }

    /// Vertex set and edge set realized by each node, bottom-up; the entry for
    /// the root node is the whole realized graph.
    pub fn realize(&self) -> Vec<(VertexSet, Vec<(Vertex, Vertex)>)> {
        let mut out: Vec<(VertexSet, Vec<(Vertex, Vertex)>)> =
            vec![(VertexSet::empty(), Vec::new()); self.nodes.len()];
        for id in self.post_order() {
            let node = &self.nodes[id];
            let entry = match node.kind {
                BlockNodeKind::Leaf => (VertexSet::singleton(node.root), Vec::new()),
                BlockNodeKind::Merge { left, right } => {
                    let verts = out[left].0.union(&out[right].0);
                    let mut edges = out[left].1.clone();
                    edges.extend_from_slice(&out[right].1);
                    edges.sort_unstable();
                    edges.dedup();
                    (verts, edges)
                }
                BlockNodeKind::Attach { left, right } => {
                    let verts = out[left].0.union(&out[right].0);
                    let mut edges = out[left].1.clone();
                    edges.extend_from_slice(&out[right].1);
                    let r2 = self.nodes[right].root;
                    for c in self.nodes[left].root_clique.iter() {
                        edges.push((c.min(r2), c.max(r2)));
                    }
                    edges.sort_unstable();
                    edges.dedup();
                    (verts, edges)
                }
            };
            out[id] = entry;
        }
        out
    }

    /// Realized graph at the root as a `Graph` on `1..=n`.
    pub fn realized_graph(&self, n: u32) -> Graph {
        let realized = self.realize();
        let (_, edges) = &realized[self.root];
        Graph::build(n, edges).expect("realized edges are valid")
    }
}

/// Decomposition tree of a connected block graph with the given root,
/// following the inductive case split: a root in several maximal cliques
/// splits off one component (merge); otherwise a root-clique vertex is
/// peeled (attach), preferring vertices lying in exactly one maximal clique,
/// minimum id first.
pub fn block_decomposition(g: &Graph, root: Vertex) -> Result<BlockTree, RecognitionError> {
    if !g.in_range(root) {
        return Err(RecognitionError::BadRoot(root));
    }
    if !g.is_connected() {
        return Err(RecognitionError::NotConnected);
    }
    if !is_block_graph(g) {
        return Err(RecognitionError::NotBlockGraph);
    }
    let mut nodes = Vec::new();
    let root_id = decompose(g, g.all_vertices(), root, &mut nodes);
    let tree = BlockTree { nodes, root: root_id };
    debug_assert_eq!(
        tree.realized_graph(g.n()).edges(),
        g.edges(),
        "decomposition must realize the input graph"
    );
    Ok(tree)
}

fn components_without(g: &Graph, verts: &VertexSet, v: Vertex) -> Vec<VertexSet> {
    g.connected_components(&verts.without(v))
}

fn decompose(g: &Graph, verts: VertexSet, r: Vertex, nodes: &mut Vec<BlockNode>) -> NodeId {
    if verts.len() == 1 {
        nodes.push(BlockNode {
            kind: BlockNodeKind::Leaf,
            root: r,
            root_clique: VertexSet::singleton(r),
        });
        return nodes.len() - 1;
    }
    let comps = components_without(g, &verts, r);
    if comps.len() >= 2 {
        // Root lies in several maximal cliques; split one component off.
        let first = &comps[0];
        let left_verts = first.with(r);
        let right_verts = verts.difference(first);
        let left = decompose(g, left_verts, r, nodes);
        let right = decompose(g, right_verts, r, nodes);
        nodes.push(BlockNode {
            kind: BlockNodeKind::Merge { left, right },
            root: r,
            root_clique: VertexSet::singleton(r),
        });
        return nodes.len() - 1;
    }
    // Root clique: r together with its neighbors inside the active set.
    let clique: VertexSet = std::iter::once(r)
        .chain(g.neighbors(r).iter().copied().filter(|&w| verts.contains(w)))
        .collect();
    let candidates: Vec<Vertex> = clique.iter().filter(|&v| v != r).collect();
    let non_cut = candidates
        .iter()
        .copied()
        .find(|&v| components_without(g, &verts, v).len() == 1);
    let (left, right, peeled) = match non_cut {
        Some(v) => {
            let left = decompose(g, verts.without(v), r, nodes);
            nodes.push(BlockNode {
                kind: BlockNodeKind::Leaf,
                root: v,
                root_clique: VertexSet::singleton(v),
            });
            (left, nodes.len() - 1, v)
        }
        None => {
            let v = candidates[0];
            let comps = components_without(g, &verts, v);
            let left_verts = comps
                .iter()
                .find(|c| c.contains(r))
                .expect("root survives removal of a clique vertex")
                .clone();
            let right_verts = verts.difference(&left_verts);
            let left = decompose(g, left_verts, r, nodes);
            let right = decompose(g, right_verts, v, nodes);
            (left, right, v)
        }
    };
    let left_clique = nodes[left].root_clique.clone();
    nodes.push(BlockNode {
        kind: BlockNodeKind::Attach { left, right },
        root: r,
        root_clique: left_clique.with(peeled),
    });
    nodes.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::build(n, edges).unwrap()
    }

    #[test]
    fn single_vertex_is_leaf() {
        let t = block_decomposition(&g(1, &[]), 1).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.node(t.root_id()).kind, BlockNodeKind::Leaf);
    }

    #[test]
    fn k2_is_attach_of_leaves() {
        let t = block_decomposition(&g(2, &[(1, 2)]), 1).unwrap();
        let root = t.node(t.root_id());
        assert!(matches!(root.kind, BlockNodeKind::Attach { .. }));
        assert_eq!(root.root, 1);
        assert_eq!(root.root_clique, VertexSet::from_vec(vec![1, 2]));
        assert_eq!(t.node_count(), 3);
    }

    #[test]
    fn fig3_graph_realizes() {
        let graph = g(
            7,
            &[(1, 2), (1, 3), (1, 4), (1, 5), (3, 4), (5, 6), (5, 7), (6, 7)],
        );
        let t = block_decomposition(&graph, 1).unwrap();
        assert_eq!(t.realized_graph(7).edges(), graph.edges());
        assert!(t.node_count() <= 4 * 7);
        // root invariants from the construction
        for node in t.nodes() {
            match node.kind {
                BlockNodeKind::Leaf => {
                    assert_eq!(node.root_clique, VertexSet::singleton(node.root))
                }
                BlockNodeKind::Merge { left, right } => {
                    assert_eq!(t.node(left).root, node.root);
                    assert_eq!(t.node(right).root, node.root);
                    assert_eq!(node.root_clique, VertexSet::singleton(node.root));
                }
                BlockNodeKind::Attach { left, right } => {
                    assert_eq!(t.node(left).root, node.root);
                    assert_eq!(
                        node.root_clique,
                        t.node(left).root_clique.with(t.node(right).root)
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_non_block_and_disconnected() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(matches!(
            block_decomposition(&c4, 1),
            Err(RecognitionError::NotBlockGraph)
        ));
        let two = g(2, &[]);
        assert!(matches!(
            block_decomposition(&two, 1),
            Err(RecognitionError::NotConnected)
        ));
    }
}
