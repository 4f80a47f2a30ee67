//! Chain orderings of bipartite chain graphs: both classes sorted so that
//! neighborhoods are nested.

use crate::graph::{Graph, Vertex, VertexSet};

use super::{two_coloring, RecognitionError};

/// Bipartition classes as ordered lists; within each class neighborhoods are
/// nested, `N(first) ⊆ ... ⊆ N(last)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainOrdering {
    pub class_a: Vec<Vertex>,
    pub class_b: Vec<Vertex>,
}

impl ChainOrdering {
    /// Chain graphs are staircases: `N(a)` is exactly the suffix of the other
    /// class of length `deg(a)`. Re-expanding that staircase from the ordering
    /// plus degrees must reproduce the input edge set.
    pub fn realized_edges(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        let mut edges = Vec::new();
        for &a in &self.class_a {
            let d = g.degree(a);
            for &b in &self.class_b[self.class_b.len() - d..] {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// Orders each class by nondecreasing degree, ties by id. Fails when the
/// graph is not bipartite, has two components with edges (an induced 2K2), or
/// the neighborhoods within a class are not nested.
pub fn chain_ordering(g: &Graph) -> Result<ChainOrdering, RecognitionError> {
    let colors = two_coloring(g).ok_or(RecognitionError::NotBipartite)?;
    let comps = g.connected_components(&g.all_vertices());
    let nontrivial: Vec<&VertexSet> =
        comps.iter().filter(|c| c.iter().any(|v| g.degree(v) > 0)).collect();
    if nontrivial.len() >= 2 {
        return Err(RecognitionError::NotNested);
    }

    let mut class_a: Vec<Vertex> = Vec::new();
    let mut class_b: Vec<Vertex> = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            class_a.push(v);
        } else if colors[(v - 1) as usize] == 0 {
            class_a.push(v);
        } else {
            class_b.push(v);
        }
    }
    let by_degree = |xs: &mut Vec<Vertex>| xs.sort_by_key(|&v| (g.degree(v), v));
    by_degree(&mut class_a);
    by_degree(&mut class_b);

    for class in [&class_a, &class_b] {
        for pair in class.windows(2) {
            let (small, large) = (g.neighbors(pair[0]), g.neighbors(pair[1]));
            if !small.iter().all(|v| large.binary_search(v).is_ok()) {
                return Err(RecognitionError::NotNested);
            }
        }
    }
    Ok(ChainOrdering { class_a, class_b })
}
