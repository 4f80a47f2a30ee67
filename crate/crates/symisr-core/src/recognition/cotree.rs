//! Cotrees: recursive union/join decomposition of cographs, with an induced
//! P4 reported on failure.

use crate::graph::{Graph, Vertex, VertexSet};

use super::RecognitionError;

pub type CotreeNodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(Vertex),
    Union(Vec<CotreeNodeId>),
    Join(Vec<CotreeNodeId>),
}

#[derive(Debug, Clone)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    /// Vertex set spanned by each node.
    spans: Vec<VertexSet>,
    root: CotreeNodeId,
}

impl Cotree {
    pub fn root_id(&self) -> CotreeNodeId {
        self.root
    }

    pub fn node(&self, id: CotreeNodeId) -> &CotreeNode {
        &self.nodes[id]
    }

    pub fn span(&self, id: CotreeNodeId) -> &VertexSet {
        &self.spans[id]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Edge set realized by the cotree: join nodes contribute all pairs
    /// across distinct children.
    pub fn realized_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            if let CotreeNode::Join(children) = node {
                for (i, &a) in children.iter().enumerate() {
                    for &b in &children[i + 1..] {
                        for u in self.spans[a].iter() {
                            for v in self.spans[b].iter() {
                                edges.push((u.min(v), u.max(v)));
                            }
                        }
                    }
                }
            }
            let _ = id;
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// Builds the cotree of a cograph, or reports an induced P4 in path order.
pub fn cotree(g: &Graph) -> Result<Cotree, RecognitionError> {
    let mut nodes = Vec::new();
    let mut spans = Vec::new();
    let root = build(g, g.all_vertices(), &mut nodes, &mut spans)?;
    Ok(Cotree { nodes, spans, root })
}

fn build(
    g: &Graph,
    verts: VertexSet,
    nodes: &mut Vec<CotreeNode>,
    spans: &mut Vec<VertexSet>,
) -> Result<CotreeNodeId, RecognitionError> {
    if verts.len() == 1 {
        nodes.push(CotreeNode::Leaf(verts.min_vertex().unwrap()));
        spans.push(verts);
        return Ok(nodes.len() - 1);
    }
    let comps = g.connected_components(&verts);
    if comps.len() >= 2 {
        let mut children = Vec::with_capacity(comps.len());
        for c in comps {
            children.push(build(g, c, nodes, spans)?);
        }
        nodes.push(CotreeNode::Union(children));
        spans.push(verts);
        return Ok(nodes.len() - 1);
    }
    let co_comps = complement_components(g, &verts);
    if co_comps.len() >= 2 {
        let mut children = Vec::with_capacity(co_comps.len());
        for c in co_comps {
            children.push(build(g, c, nodes, spans)?);
        }
        nodes.push(CotreeNode::Join(children));
        spans.push(verts);
        return Ok(nodes.len() - 1);
    }
    Err(RecognitionError::NotCograph(find_p4(g, &verts)))
}

fn complement_components(g: &Graph, verts: &VertexSet) -> Vec<VertexSet> {
    let items = verts.as_slice();
    let mut seen = vec![false; items.len()];
    let mut out = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(items[i]);
            for (j, &w) in items.iter().enumerate() {
                if !seen[j] && !g.has_edge(items[i], w) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(VertexSet::from_vec(comp));
    }
    out
}

/// Scans four-element subsets for an induced path, returned in path order.
/// The decomposition only gets stuck on graphs that contain one.
fn find_p4(g: &Graph, verts: &VertexSet) -> [Vertex; 4] {
    let items = verts.as_slice();
    let k = items.len();
    for a in 0..k {
        for b in (a + 1)..k {
            for c in (b + 1)..k {
                for d in (c + 1)..k {
                    let quad = [items[a], items[b], items[c], items[d]];
                    if let Some(path) = induced_p4(g, quad) {
                        return path;
                    }
                }
            }
        }
    }
    unreachable!("a stuck cotree decomposition always contains an induced P4")
}

fn induced_p4(g: &Graph, quad: [Vertex; 4]) -> Option<[Vertex; 4]> {
    let deg = |v: Vertex| quad.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
    let edges = quad
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| quad[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .count();
    if edges != 3 || quad.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let mut ends = quad.iter().copied().filter(|&v| deg(v) == 1);
    let first = ends.next()?;
    let mut path = [first, 0, 0, 0];
    let mut prev = 0;
    for i in 1..4 {
        let next = quad
            .iter()
            .copied()
            .find(|&w| w != prev && w != path[i - 1] && g.has_edge(path[i - 1], w))?;
        prev = path[i - 1];
        path[i] = next;
    }
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::build(n, edges).unwrap()
    }

    #[test]
    fn single_vertex_is_leaf() {
        let t = cotree(&g(1, &[])).unwrap();
        assert_eq!(t.node(t.root_id()), &CotreeNode::Leaf(1));
    }

    #[test]
    fn c4_is_join_of_unions() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let t = cotree(&c4).unwrap();
        let CotreeNode::Join(children) = t.node(t.root_id()) else {
            panic!("C4 root must be a join");
        };
        assert_eq!(children.len(), 2);
        for &c in children {
            assert!(matches!(t.node(c), CotreeNode::Union(u) if u.len() == 2));
        }
        assert_eq!(t.realized_edges(), c4.edges());
    }

    #[test]
    fn p4_yields_witness() {
        let err = cotree(&g(4, &[(1, 2), (2, 3), (3, 4)])).unwrap_err();
        let RecognitionError::NotCograph(path) = err else {
            panic!("expected P4 witness");
        };
        assert!(path == [1, 2, 3, 4] || path == [4, 3, 2, 1]);
    }

    #[test]
    fn alternation_holds() {
        let graph = g(6, &[(1, 2), (3, 4), (1, 3), (1, 4), (2, 3), (2, 4)]);
        let t = cotree(&graph).unwrap();
        for id in 0..t.node_count() {
            match t.node(id) {
                CotreeNode::Union(children) => {
                    for &c in children {
                        assert!(!matches!(t.node(c), CotreeNode::Union(_)));
                    }
                }
                CotreeNode::Join(children) => {
                    for &c in children {
                        assert!(!matches!(t.node(c), CotreeNode::Join(_)));
                    }
                }
                CotreeNode::Leaf(_) => {}
            }
        }
        assert_eq!(t.realized_edges(), graph.edges());
    }
}
