//! Exhaustive ground truth on small instances: full enumeration of the
//! reconfiguration graph and exact shortest (optionally monotone) sequences.

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::bits::{AdjBits, Mask};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::reconfig::{Instance, ReconfigSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("independent set cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("graph has {n} vertices, oracle supports at most 128")]
    TooManyVertices { n: u32 },
    #[error("no neighbor strategy applies: {sets} sets on {n} vertices")]
    NoStrategy { sets: usize, n: u32 },
    #[error("objective required for monotone search")]
    MissingObjective,
    #[error("oracle internal error: {0}")]
    Internal(&'static str),
}

/// Per-vertex rational objective. The value of a set is the sum of the
/// coefficients of its members; comparisons are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    coeffs: Vec<Ratio<i64>>,
}

impl Objective {
    /// One coefficient per vertex, index `v - 1`.
    pub fn from_coeffs(coeffs: Vec<Ratio<i64>>) -> Objective {
        Objective { coeffs }
    }

    pub fn zero(n: u32) -> Objective {
        Objective { coeffs: vec![Ratio::zero(); n as usize] }
    }

    pub fn coeff(&self, v: Vertex) -> Ratio<i64> {
        self.coeffs[(v - 1) as usize]
    }

    pub fn set_coeff(&mut self, v: Vertex, c: Ratio<i64>) {
        self.coeffs[(v - 1) as usize] = c;
    }

    pub fn value(&self, s: &VertexSet) -> Ratio<i64> {
        s.iter().map(|v| self.coeff(v)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborStrategy {
    /// Adjacency tests over all pairs of enumerated sets.
    Pairwise,
    /// Enumerate connected induced subgraphs and flip each.
    FlipEnumeration,
    /// Flip enumeration when n <= 16, else pairwise when the state space has
    /// at most 20000 sets, else an error.
    #[default]
    Auto,
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub max_independent_sets: usize,
    pub neighbor_strategy: NeighborStrategy,
    pub objective: Option<Objective>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_independent_sets: 200_000,
            neighbor_strategy: NeighborStrategy::Auto,
            objective: None,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> OracleConfig {
        OracleConfig { max_independent_sets: cap, ..OracleConfig::default() }
    }

    pub fn with_objective(objective: Objective) -> OracleConfig {
        OracleConfig { objective: Some(objective), ..OracleConfig::default() }
    }
}

fn enumerate_masks(bits: &AdjBits, cap: usize) -> Result<Vec<Mask>, OracleError> {
    let n = bits.n() as usize;
    let mut out: Vec<Mask> = Vec::new();
    // Backtracking over the choice of the next (larger) vertex to include.
    let mut stack: Vec<(Mask, usize)> = vec![(0, 0)];
    out.push(0);
    while let Some((cur, next)) = stack.pop() {
        for v in next..n {
            let vb = 1u128 << v;
            if bits.neighbors_mask(v as Vertex + 1) & cur == 0 {
                let ext = cur | vb;
                out.push(ext);
                if out.len() > cap {
                    return Err(OracleError::CapExceeded { cap });
                }
                stack.push((ext, v + 1));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All independent sets of `g` in ascending bitmask order (vertex 1 is the
/// lowest bit), i.e. lexicographic as binary strings.
pub fn enumerate_independent_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>, OracleError> {
    let bits = AdjBits::new(g).ok_or(OracleError::TooManyVertices { n: g.n() })?;
    let masks = enumerate_masks(&bits, cap)?;
    Ok(masks.into_iter().map(|m| bits.mask_to_set(m)).collect())
}

/// All connected induced subgraph masks, each generated once.
fn connected_subgraph_masks(bits: &AdjBits) -> Vec<Mask> {
    fn grow(bits: &AdjBits, cur: Mask, ext: Mask, banned: Mask, out: &mut Vec<Mask>) {
        out.push(cur);
        let mut remaining = ext;
        let mut banned = banned;
        while remaining != 0 {
            let ub = remaining & remaining.wrapping_neg();
            remaining &= !ub;
            banned |= ub;
            let u = ub.trailing_zeros() as usize;
            let new_ext =
                remaining | (bits.neighbors_mask(u as Vertex + 1) & !(cur | banned | remaining));
            grow(bits, cur | ub, new_ext, banned, out);
        }
    }
    let n = bits.n() as usize;
    let mut out = Vec::new();
    let mut banned: Mask = 0;
    for v in 0..n {
        let vb = 1u128 << v;
        let ext = bits.neighbors_mask(v as Vertex + 1) & !(banned | vb);
        grow(bits, vb, ext, banned | vb, &mut out);
        banned |= vb;
    }
    out.sort_unstable();
    out
}

enum Neighbors {
    Pairwise,
    Flip(Vec<Mask>),
}

struct StateSpace {
    bits: AdjBits,
    masks: Vec<Mask>,
    neighbors: Neighbors,
}

impl StateSpace {
    fn build(g: &Graph, cfg: &OracleConfig) -> Result<StateSpace, OracleError> {
        let bits = AdjBits::new(g).ok_or(OracleError::TooManyVertices { n: g.n() })?;
        let masks = enumerate_masks(&bits, cfg.max_independent_sets)?;
        let neighbors = match cfg.neighbor_strategy {
            NeighborStrategy::Pairwise => Neighbors::Pairwise,
            NeighborStrategy::FlipEnumeration => Neighbors::Flip(connected_subgraph_masks(&bits)),
            NeighborStrategy::Auto => {
                if g.n() <= 16 {
                    Neighbors::Flip(connected_subgraph_masks(&bits))
                } else if masks.len() <= 20_000 {
                    Neighbors::Pairwise
                } else {
                    return Err(OracleError::NoStrategy { sets: masks.len(), n: g.n() });
                }
            }
        };
        Ok(StateSpace { bits, masks, neighbors })
    }

    fn index_of(&self, m: Mask) -> Option<usize> {
        self.masks.binary_search(&m).ok()
    }

    fn for_each_neighbor(&self, idx: usize, mut f: impl FnMut(usize)) {
        let m = self.masks[idx];
        match &self.neighbors {
            Neighbors::Pairwise => {
                for (j, &other) in self.masks.iter().enumerate() {
                    if j != idx && self.bits.flip_adjacent(m, other) {
                        f(j);
                    }
                }
            }
            Neighbors::Flip(conn) => {
                for &x in conn {
                    if let Some(j) = self.index_of(m ^ x) {
                        f(j);
                    }
                }
            }
        }
    }

    /// BFS distances from `start`; `usize::MAX` marks unreachable.
    fn bfs(&self, start: usize, increasing: Option<&[Ratio<i64>]>) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.masks.len()];
        dist[start] = 0;
        let mut frontier = vec![start];
        let mut d = 0usize;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                self.for_each_neighbor(u, |v| {
                    if dist[v] == usize::MAX {
                        if let Some(vals) = increasing {
                            if vals[v] <= vals[u] {
                                return;
                            }
                        }
                        dist[v] = d + 1;
                        next.push(v);
                    }
                });
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
            d += 1;
        }
        dist
    }

    /// Canonical witness: walk back from the target, at each level taking the
    /// smallest-mask predecessor. Independent of the neighbor strategy.
    fn reconstruct(
        &self,
        dist: &[usize],
        target: usize,
        increasing: Option<&[Ratio<i64>]>,
    ) -> Result<Vec<usize>, OracleError> {
        let mut path = vec![target];
        let mut cur = target;
        for d in (0..dist[target]).rev() {
            let mut found = None;
            for (j, &m) in self.masks.iter().enumerate() {
                if dist[j] == d && self.bits.flip_adjacent(m, self.masks[cur]) {
                    if let Some(vals) = increasing {
                        if vals[j] >= vals[cur] {
                            continue;
                        }
                    }
                    found = Some(j);
                    break;
                }
            }
            cur = found.ok_or(OracleError::Internal("no predecessor during reconstruction"))?;
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    fn sequence(&self, path: &[usize]) -> ReconfigSequence {
        ReconfigSequence::new(path.iter().map(|&i| self.bits.mask_to_set(self.masks[i])).collect())
    }
}

/// Exact minimum number of steps and one canonical witness sequence.
pub fn bfs_distance(
    inst: &Instance,
    cfg: &OracleConfig,
) -> Result<(usize, ReconfigSequence), OracleError> {
    let space = StateSpace::build(inst.graph(), cfg)?;
    let s = space
        .index_of(space.bits.set_to_mask(inst.source()))
        .ok_or(OracleError::Internal("source not enumerated"))?;
    let t = space
        .index_of(space.bits.set_to_mask(inst.target()))
        .ok_or(OracleError::Internal("target not enumerated"))?;
    let dist = space.bfs(s, None);
    if dist[t] == usize::MAX {
        return Err(OracleError::Internal("target unreachable"));
    }
    let path = space.reconstruct(&dist, t, None)?;
    Ok((dist[t], space.sequence(&path)))
}

/// Shortest sequence whose objective value strictly increases at every step,
/// or `None` when no monotone sequence exists.
pub fn bfs_monotone(
    inst: &Instance,
    cfg: &OracleConfig,
) -> Result<Option<(usize, ReconfigSequence)>, OracleError> {
    let objective = cfg.objective.as_ref().ok_or(OracleError::MissingObjective)?;
    let space = StateSpace::build(inst.graph(), cfg)?;
    let vals: Vec<Ratio<i64>> =
        space.masks.iter().map(|&m| objective.value(&space.bits.mask_to_set(m))).collect();
    let s = space
        .index_of(space.bits.set_to_mask(inst.source()))
        .ok_or(OracleError::Internal("source not enumerated"))?;
    let t = space
        .index_of(space.bits.set_to_mask(inst.target()))
        .ok_or(OracleError::Internal("target not enumerated"))?;
    if s == t {
        return Ok(Some((0, ReconfigSequence::new(vec![inst.source().clone()]))));
    }
    let dist = space.bfs(s, Some(&vals));
    if dist[t] == usize::MAX {
        return Ok(None);
    }
    let path = space.reconstruct(&dist, t, Some(&vals))?;
    Ok(Some((dist[t], space.sequence(&path))))
}

/// Depth-limited exact distance check: `Some(d)` with `d <= 2` when the target
/// is within two steps, `None` otherwise. Avoids expanding the full
/// reconfiguration graph, so it scales to much larger state spaces than
/// [`bfs_distance`].
pub fn distance_at_most_two(inst: &Instance, cap: usize) -> Result<Option<usize>, OracleError> {
    let g = inst.graph();
    let bits = AdjBits::new(g).ok_or(OracleError::TooManyVertices { n: g.n() })?;
    let s = bits.set_to_mask(inst.source());
    let t = bits.set_to_mask(inst.target());
    if s == t {
        return Ok(Some(0));
    }
    if bits.flip_adjacent(s, t) {
        return Ok(Some(1));
    }
    let masks = enumerate_masks(&bits, cap)?;
    for &m in &masks {
        if bits.flip_adjacent(s, m) && bits.flip_adjacent(m, t) {
            return Ok(Some(2));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::validate_sequence;

    fn vs(items: &[Vertex]) -> VertexSet {
        VertexSet::from_vec(items.to_vec())
    }

    #[test]
    fn enumerate_counts() {
        let p3 = Graph::build(3, &[(1, 2), (2, 3)]).unwrap();
        let sets = enumerate_independent_sets(&p3, 100).unwrap();
        assert_eq!(
            sets,
            vec![vs(&[]), vs(&[1]), vs(&[2]), vs(&[3]), vs(&[1, 3])],
            "lexicographic order"
        );

        let k3 = Graph::build(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(enumerate_independent_sets(&k3, 100).unwrap().len(), 4);

        let empty4 = Graph::build(4, &[]).unwrap();
        assert_eq!(enumerate_independent_sets(&empty4, 100).unwrap().len(), 16);
    }

    #[test]
    fn enumerate_cap() {
        let empty5 = Graph::build(5, &[]).unwrap();
        assert_eq!(
            enumerate_independent_sets(&empty5, 10),
            Err(OracleError::CapExceeded { cap: 10 })
        );
    }

    #[test]
    fn bfs_examples() {
        let p3 = Graph::build(3, &[(1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(p3, vs(&[1, 3]), vs(&[2]), None).unwrap();
        let (d, w) = bfs_distance(&inst, &OracleConfig::default()).unwrap();
        assert_eq!(d, 1);
        assert_eq!(validate_sequence(&inst, &w), Ok(1));

        // paw: triangle 1-2-3 with pendant 4 on 1
        let paw = Graph::build(4, &[(1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        let inst = Instance::new(paw, vs(&[2, 4]), vs(&[3]), None).unwrap();
        let (d, w) = bfs_distance(&inst, &OracleConfig::default()).unwrap();
        assert_eq!(d, 2);
        assert_eq!(validate_sequence(&inst, &w), Ok(2));

        let star = Graph::build(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let inst = Instance::new(star, vs(&[2]), vs(&[3]), None).unwrap();
        let (d, _) = bfs_distance(&inst, &OracleConfig::default()).unwrap();
        assert_eq!(d, 2);
    }

    #[test]
    fn strategies_agree() {
        let g = Graph::build(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]).unwrap();
        let sets = enumerate_independent_sets(&g, 1000).unwrap();
        for s in &sets {
            for t in &sets {
                let inst = Instance::new(g.clone(), s.clone(), t.clone(), None).unwrap();
                let mut pw = OracleConfig::default();
                pw.neighbor_strategy = NeighborStrategy::Pairwise;
                let mut fe = OracleConfig::default();
                fe.neighbor_strategy = NeighborStrategy::FlipEnumeration;
                let (dp, wp) = bfs_distance(&inst, &pw).unwrap();
                let (df, wf) = bfs_distance(&inst, &fe).unwrap();
                assert_eq!(dp, df);
                assert_eq!(wp, wf, "canonical witness is strategy independent");
            }
        }
    }

    #[test]
    fn monotone_examples() {
        let p3 = Graph::build(3, &[(1, 2), (2, 3)]).unwrap();
        let mut obj = Objective::zero(3);
        obj.set_coeff(1, Ratio::from_integer(-1));
        obj.set_coeff(2, Ratio::from_integer(1));
        obj.set_coeff(3, Ratio::from_integer(-1));

        let inst = Instance::new(p3.clone(), vs(&[1, 3]), vs(&[2]), None).unwrap();
        let cfg = OracleConfig::with_objective(obj.clone());
        let (d, w) = bfs_monotone(&inst, &cfg).unwrap().expect("monotone path exists");
        assert_eq!(d, 1);
        assert_eq!(validate_sequence(&inst, &w), Ok(1));

        let back = Instance::new(p3, vs(&[2]), vs(&[1, 3]), None).unwrap();
        assert_eq!(bfs_monotone(&back, &cfg).unwrap(), None);
    }

    #[test]
    fn monotone_needs_objective() {
        let p3 = Graph::build(3, &[(1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(p3, vs(&[1]), vs(&[3]), None).unwrap();
        assert_eq!(
            bfs_monotone(&inst, &OracleConfig::default()),
            Err(OracleError::MissingObjective)
        );
    }

    #[test]
    fn within_two_matches_bfs() {
        let g = Graph::build(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let sets = enumerate_independent_sets(&g, 1000).unwrap();
        for s in &sets {
            for t in &sets {
                let inst = Instance::new(g.clone(), s.clone(), t.clone(), None).unwrap();
                let (d, _) = bfs_distance(&inst, &OracleConfig::default()).unwrap();
                let expect = if d <= 2 { Some(d) } else { None };
                assert_eq!(distance_at_most_two(&inst, 100_000).unwrap(), expect);
            }
        }
    }
}
