//! Immutable simple undirected graphs on vertices `1..=n`, plus the
//! connectivity, independence and sparsity primitives everything else uses.

use std::fmt;

use thiserror::Error;

/// Vertex identifier. Vertices of a graph on `n` vertices are exactly `1..=n`.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: Vertex, n: u32 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// A sorted, duplicate-free set of vertex identifiers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// Sorts and deduplicates.
    pub fn from_vec(mut items: Vec<Vertex>) -> Self {
        items.sort_unstable();
        items.dedup();
        VertexSet(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn min_vertex(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Copy with `v` inserted.
    pub fn with(&self, v: Vertex) -> VertexSet {
        if self.contains(v) {
            self.clone()
        } else {
            let mut items = self.0.clone();
            let pos = items.partition_point(|&x| x < v);
            items.insert(pos, v);
            VertexSet(items)
        }
    }

    /// Copy with `v` removed.
    pub fn without(&self, v: Vertex) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(items: Vec<Vertex>) -> Self {
        VertexSet::from_vec(items)
    }
}

impl fmt::Display for VertexSet {
    /// Space-separated ids; the empty set prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Immutable simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n`; duplicate edges collapse, self-loops
    /// and out-of-range endpoints are rejected.
    pub fn build(n: u32, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == 0 || u > n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n as usize];
        for &(u, v) in &edges {
            adj[(u - 1) as usize].push(v);
            adj[(v - 1) as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((1..=self.n).collect())
    }

    /// Normalized edge list, sorted with `u < v` in each pair.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn in_range(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[(v - 1) as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn check_range(&self, s: &VertexSet) -> Result<(), GraphError> {
        for v in s.iter() {
            if !self.in_range(v) {
                return Err(GraphError::OutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }

    /// Connected components of the induced subgraph `G[s]`, ordered by their
    /// minimum vertex. The empty set yields no components.
    pub fn connected_components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut in_s = vec![false; (self.n + 1) as usize];
        for v in s.iter() {
            in_s[v as usize] = true;
        }
        let mut seen = vec![false; (self.n + 1) as usize];
        let mut out = Vec::new();
        for start in s.iter() {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if in_s[w as usize] && !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    /// Number of connected components of `G[s]`.
    pub fn cc(&self, s: &VertexSet) -> usize {
        self.connected_components(s).len()
    }

    /// True iff `G[s]` is nonempty and connected. Allocation kept to two
    /// scratch vectors; hot callers with n <= 128 should prefer [`crate::bits`].
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(start) = s.min_vertex() else { return false };
        let mut in_s = vec![false; (self.n + 1) as usize];
        for v in s.iter() {
            in_s[v as usize] = true;
        }
        let mut seen = vec![false; (self.n + 1) as usize];
        let mut stack = vec![start];
        seen[start as usize] = true;
        let mut count = 0usize;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in self.neighbors(v) {
                if in_s[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        count == s.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&self.all_vertices())
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let mut in_s = vec![false; (self.n + 1) as usize];
        for v in s.iter() {
            in_s[v as usize] = true;
        }
        for v in s.iter() {
            for &w in self.neighbors(v) {
                if w > v && in_s[w as usize] {
                    return false;
                }
            }
        }
        true
    }

    /// Range-checked variants of the set predicates, for callers handling
    /// untrusted input.
    pub fn try_connected_components(&self, s: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_range(s)?;
        Ok(self.connected_components(s))
    }

    pub fn try_is_independent(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_range(s)?;
        Ok(self.is_independent(s))
    }

    /// Exact degeneracy via iterative minimum-degree peeling.
    pub fn degeneracy(&self) -> u32 {
        let n = self.n as usize;
        let mut deg: Vec<usize> = (1..=self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut best = 0usize;
        for _ in 0..n {
            let mut pick = usize::MAX;
            let mut pick_deg = usize::MAX;
            for i in 0..n {
                if !removed[i] && deg[i] < pick_deg {
                    pick = i;
                    pick_deg = deg[i];
                }
            }
            best = best.max(pick_deg);
            removed[pick] = true;
            for &w in self.neighbors(pick as Vertex + 1) {
                let wi = (w - 1) as usize;
                if !removed[wi] {
                    deg[wi] -= 1;
                }
            }
        }
        best as u32
    }

    /// Induced subgraph on `s`, relabeled to `1..=|s|` in sorted order.
    /// `s.as_slice()[i]` is the original id of new vertex `i + 1`.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let verts = s.as_slice();
        let index_of = |v: Vertex| (verts.partition_point(|&x| x < v) + 1) as Vertex;
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if s.contains(u) && s.contains(v) {
                edges.push((index_of(u), index_of(v)));
            }
        }
        Graph::build(verts.len() as u32, &edges).expect("induced subgraph is valid")
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=self.n {
            for v in (u + 1)..=self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(self.n, &edges).expect("complement is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::build(3, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn build_path() {
        let g = p3();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(
            Graph::build(3, &[(1, 4)]),
            Err(GraphError::OutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            Graph::build(2, &[(0, 1)]),
            Err(GraphError::OutOfRange { vertex: 0, n: 2 })
        ));
        assert_eq!(Graph::build(0, &[]), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(2, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn components_of_path() {
        let g = p3();
        let comps = g.connected_components(&VertexSet::from_vec(vec![1, 3]));
        assert_eq!(comps, vec![VertexSet::singleton(1), VertexSet::singleton(3)]);
        let comps = g.connected_components(&VertexSet::from_vec(vec![1, 2, 3]));
        assert_eq!(comps, vec![VertexSet::from_vec(vec![1, 2, 3])]);
        assert!(g.connected_components(&VertexSet::empty()).is_empty());
    }

    #[test]
    fn independence_on_path() {
        let g = p3();
        assert!(g.is_independent(&VertexSet::from_vec(vec![1, 3])));
        assert!(!g.is_independent(&VertexSet::from_vec(vec![1, 2])));
        assert!(g.is_independent(&VertexSet::empty()));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(p3().degeneracy(), 1);
        let k4 = Graph::build(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4.degeneracy(), 3);
        assert_eq!(Graph::build(1, &[]).unwrap().degeneracy(), 0);
        assert_eq!(Graph::build(5, &[]).unwrap().degeneracy(), 0);
    }

    #[test]
    fn set_operations() {
        let a = VertexSet::from_vec(vec![3, 1, 3]);
        let b = VertexSet::from_vec(vec![2, 3]);
        assert_eq!(a.as_slice(), &[1, 3]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3]);
        assert_eq!(a.intersection(&b).as_slice(), &[3]);
        assert_eq!(a.difference(&b).as_slice(), &[1]);
        assert_eq!(a.symmetric_difference(&b).as_slice(), &[1, 2]);
        assert!(VertexSet::empty().is_subset(&a));
        assert_eq!(format!("{}", a), "1 3");
        assert_eq!(format!("{}", VertexSet::empty()), "-");
    }

    #[test]
    fn induced_relabels() {
        let g = p3();
        let sub = g.induced(&VertexSet::from_vec(vec![2, 3]));
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edges(), &[(1, 2)]);
    }
}
