//! Bitmask adjacency for graphs with at most 128 vertices. Used by the oracle
//! and by hot test loops where per-call allocation would dominate.

use crate::graph::{Graph, Vertex, VertexSet};

/// Adjacency of a graph encoded as one `u128` neighborhood mask per vertex.
/// Vertex `v` corresponds to bit `v - 1`.
#[derive(Debug, Clone)]
pub struct AdjBits {
    n: u32,
    adj: Vec<u128>,
}

pub type Mask = u128;

impl AdjBits {
    /// Returns `None` when the graph has more than 128 vertices.
    pub fn new(g: &Graph) -> Option<AdjBits> {
        if g.n() > 128 {
            return None;
        }
        let mut adj = vec![0u128; g.n() as usize];
        for &(u, v) in g.edges() {
            adj[(u - 1) as usize] |= 1 << (v - 1);
            adj[(v - 1) as usize] |= 1 << (u - 1);
        }
        Some(AdjBits { n: g.n(), adj })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn neighbors_mask(&self, v: Vertex) -> Mask {
        self.adj[(v - 1) as usize]
    }

    pub fn full_mask(&self) -> Mask {
        if self.n == 128 {
            !0
        } else {
            (1u128 << self.n) - 1
        }
    }

    pub fn set_to_mask(&self, s: &VertexSet) -> Mask {
        let mut m = 0u128;
        for v in s.iter() {
            m |= 1 << (v - 1);
        }
        m
    }

    pub fn mask_to_set(&self, mut m: Mask) -> VertexSet {
        let mut out = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            let b = m.trailing_zeros();
            out.push(b as Vertex + 1);
            m &= m - 1;
        }
        VertexSet::from_vec(out)
    }

    pub fn is_independent(&self, m: Mask) -> bool {
        let mut rest = m;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            if self.adj[b] & m != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    /// True iff the induced subgraph on `m` is nonempty and connected.
    pub fn is_connected_nonempty(&self, m: Mask) -> bool {
        if m == 0 {
            return false;
        }
        let start = 1u128 << m.trailing_zeros();
        let mut reached = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let b = f.trailing_zeros() as usize;
                next |= self.adj[b] & m;
                f &= f - 1;
            }
            frontier = next & !reached;
            reached |= frontier;
        }
        reached == m
    }

    pub fn component_count(&self, m: Mask) -> usize {
        let mut rest = m;
        let mut count = 0;
        while rest != 0 {
            count += 1;
            let start = 1u128 << rest.trailing_zeros();
            let mut reached = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u128;
                let mut f = frontier;
                while f != 0 {
                    let b = f.trailing_zeros() as usize;
                    next |= self.adj[b] & rest;
                    f &= f - 1;
                }
                frontier = next & !reached;
                reached |= frontier;
            }
            rest &= !reached;
        }
        count
    }

    /// Adjacency test of the flip rule on masks: the symmetric difference is
    /// nonempty and induces a connected subgraph.
    pub fn flip_adjacent(&self, a: Mask, b: Mask) -> bool {
        self.is_connected_nonempty(a ^ b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_primitives() {
        let g = Graph::build(4, &[(1, 2), (2, 3)]).unwrap();
        let bits = AdjBits::new(&g).unwrap();
        assert!(bits.is_independent(0b1001));
        assert!(!bits.is_independent(0b0011));
        assert!(bits.is_connected_nonempty(0b0111));
        assert!(!bits.is_connected_nonempty(0b0101));
        assert!(!bits.is_connected_nonempty(0));
        assert_eq!(bits.component_count(0b1101), 3);
        assert_eq!(bits.component_count(0b0111), 1);
        assert_eq!(bits.component_count(0), 0);
        let s = VertexSet::from_vec(vec![1, 3]);
        assert_eq!(bits.set_to_mask(&s), 0b101);
        assert_eq!(bits.mask_to_set(0b101), s);
    }
}
