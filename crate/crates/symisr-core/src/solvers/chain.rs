//! Connected bipartite chain graphs: the answer is always at most 3. Distance
//! 2 is characterized by either a middle set one flip away from an endpoint,
//! or agreement of the endpoint sets outside the neighborhood of the largest
//! touched vertex of one class; otherwise the hop through the two dominating
//! vertices `a_max`/`b_max` of the ordering gives exactly 3 steps.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{chain_ordering, ChainOrdering};
use crate::reconfig::{cc_bound, Instance, ReconfigSequence};

use super::{SolveError, SolveResult, SolverTag};

pub fn chain_sequence(
    g: &Graph,
    ord: &ChainOrdering,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<Vec<VertexSet>, SolveError> {
    if source == target {
        return Ok(vec![source.clone()]);
    }
    let diff = source.symmetric_difference(target);
    if g.is_connected_subset(&diff) {
        return Ok(vec![source.clone(), target.clone()]);
    }
    if condition_one(g, source, target).is_some() || condition_two(g, ord, source, target) {
        let mid = distance_two_witness(g, ord, source, target)
            .ok_or(SolveError::Internal("chain length-2 witness not found"))?;
        return Ok(vec![source.clone(), mid, target.clone()]);
    }
    // Length 3: through S = {a_max} ∪ (source ∩ A) and T = {b_max} ∪ (target ∩ B),
    // where a_max/b_max are the last (full-neighborhood) vertices of the ordering.
    let a_set: VertexSet = ord.class_a.iter().copied().collect();
    let b_set: VertexSet = ord.class_b.iter().copied().collect();
    let a_top = *ord.class_a.last().ok_or(SolveError::Internal("empty class A"))?;
    let b_top = *ord.class_b.last().ok_or(SolveError::Internal("empty class B"))?;
    let s_mid = source.intersection(&a_set).with(a_top);
    let t_mid = target.intersection(&b_set).with(b_top);
    Ok(vec![source.clone(), s_mid, t_mid, target.clone()])
}

/// Linear scan for a middle set one flip from an endpoint: toggling a single
/// vertex of the source (resp. target) whose other difference stays connected.
fn condition_one(g: &Graph, source: &VertexSet, target: &VertexSet) -> Option<VertexSet> {
    let diff = source.symmetric_difference(target);
    for v in g.vertices() {
        let step = diff.symmetric_difference(&VertexSet::singleton(v));
        if step.is_empty() || !g.is_connected_subset(&step) {
            continue;
        }
        let near_source = source.symmetric_difference(&VertexSet::singleton(v));
        if g.is_independent(&near_source) {
            return Some(near_source);
        }
        let near_target = target.symmetric_difference(&VertexSet::singleton(v));
        if g.is_independent(&near_target) {
            return Some(near_target);
        }
    }
    None
}

/// The neighborhood-agreement condition: for the largest touched vertex of
/// one class, the endpoint sets agree on the other class outside its
/// neighborhood. Vacuously satisfied on the side whose class is untouched.
fn condition_two(g: &Graph, ord: &ChainOrdering, source: &VertexSet, target: &VertexSet) -> bool {
    let check = |class: &[Vertex], other: &[Vertex]| -> bool {
        let touched = class.iter().rev().copied().find(|&v| source.contains(v) || target.contains(v));
        let Some(vmax) = touched else { return false };
        let other_set: VertexSet = other.iter().copied().collect();
        let strip = |set: &VertexSet| -> VertexSet {
            set.intersection(&other_set)
                .iter()
                .filter(|&w| !g.has_edge(vmax, w))
                .collect()
        };
        strip(source) == strip(target)
    };
    check(&ord.class_a, &ord.class_b) || check(&ord.class_b, &ord.class_a)
}

/// Candidate middles for distance 2, each fully verified: the single-toggle
/// middles of condition 1, the proof construction `(X ∩ side) ∪ N(v)` for
/// every class vertex, and the dominating-vertex middles covering the
/// degenerate cases where one class is untouched.
fn distance_two_witness(
    g: &Graph,
    ord: &ChainOrdering,
    source: &VertexSet,
    target: &VertexSet,
) -> Option<VertexSet> {
    if let Some(mid) = condition_one(g, source, target) {
        return Some(mid);
    }
    let a_set: VertexSet = ord.class_a.iter().copied().collect();
    let b_set: VertexSet = ord.class_b.iter().copied().collect();
    let nbr = |v: Vertex| -> VertexSet { g.neighbors(v).iter().copied().collect() };

    let mut candidates: Vec<VertexSet> = Vec::new();
    for &a in &ord.class_a {
        candidates.push(target.intersection(&b_set).union(&nbr(a)));
        candidates.push(source.intersection(&b_set).union(&nbr(a)));
    }
    for &b in &ord.class_b {
        candidates.push(target.intersection(&a_set).union(&nbr(b)));
        candidates.push(source.intersection(&a_set).union(&nbr(b)));
    }
    if let Some(&a_top) = ord.class_a.last() {
        candidates.push(source.intersection(&a_set).with(a_top));
        candidates.push(target.intersection(&a_set).with(a_top));
        candidates.push(VertexSet::singleton(a_top));
    }
    if let Some(&b_top) = ord.class_b.last() {
        candidates.push(source.intersection(&b_set).with(b_top));
        candidates.push(target.intersection(&b_set).with(b_top));
        candidates.push(VertexSet::singleton(b_top));
    }
    candidates.push(VertexSet::empty());

    candidates.into_iter().find(|mid| {
        if !g.is_independent(mid) {
            return false;
        }
        let d1 = source.symmetric_difference(mid);
        let d2 = mid.symmetric_difference(target);
        !d1.is_empty()
            && !d2.is_empty()
            && g.is_connected_subset(&d1)
            && g.is_connected_subset(&d2)
    })
}

pub fn chain_length(
    g: &Graph,
    ord: &ChainOrdering,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<usize, SolveError> {
    Ok(chain_sequence(g, ord, source, target)?.len() - 1)
}

pub fn solve_chain(inst: &Instance) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let ord =
        chain_ordering(g).map_err(|_| SolveError::WrongClass { expected: "bipartite chain graph" })?;
    let sets = chain_sequence(g, &ord, inst.source(), inst.target())?;
    let length = sets.len() - 1;
    Ok(SolveResult {
        length,
        witness: Some(ReconfigSequence::new(sets)),
        solver_used: SolverTag::Chain,
        cc_bound: cc_bound(inst),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{bfs_distance, enumerate_independent_sets, OracleConfig};
    use crate::reconfig::validate_sequence;

    fn vs(items: &[u32]) -> VertexSet {
        VertexSet::from_vec(items.to_vec())
    }

    /// A = {1, 2}, B = {3, 4}, edges a1-b2, a2-b1, a2-b2.
    fn small_chain() -> Graph {
        Graph::build(4, &[(1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn opposite_classes_connected_difference() {
        let inst = Instance::new(small_chain(), vs(&[1, 2]), vs(&[3, 4]), None).unwrap();
        let res = solve_chain(&inst).unwrap();
        assert_eq!(res.length, 1);
        assert_eq!(validate_sequence(&inst, &res.witness.unwrap()), Ok(1));
    }

    #[test]
    fn two_steps_through_empty_set() {
        let inst = Instance::new(small_chain(), vs(&[1]), vs(&[3]), None).unwrap();
        let res = solve_chain(&inst).unwrap();
        assert_eq!(res.length, 2);
        assert_eq!(validate_sequence(&inst, &res.witness.unwrap()), Ok(2));
    }

    #[test]
    fn rejects_disconnected_and_wrong_class() {
        let forest = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        let inst = Instance::new(forest, vs(&[1]), vs(&[3]), None).unwrap();
        assert!(matches!(solve_chain(&inst), Err(SolveError::Disconnected)));

        let c6 = Graph::build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        let inst = Instance::new(c6, vs(&[1]), vs(&[3]), None).unwrap();
        assert!(matches!(solve_chain(&inst), Err(SolveError::WrongClass { .. })));
    }

    #[test]
    fn matches_oracle_exhaustively_on_staircases() {
        // all staircase chain graphs with up to 3+3 vertices
        for na in 1..=3usize {
            for nb in 1..=3usize {
                let mut thresholds = vec![0usize; na];
                loop {
                    // nondecreasing thresholds in [1, nb], last = nb, gives a
                    // connected chain graph
                    if thresholds[0] == 0 {
                        for (i, t) in thresholds.iter_mut().enumerate() {
                            *t = if i + 1 == na { nb } else { 1 };
                        }
                    }
                    if valid(&thresholds, nb) {
                        let mut edges = Vec::new();
                        for (i, &t) in thresholds.iter().enumerate() {
                            for b in (nb - t)..nb {
                                edges.push((i as u32 + 1, (na + b) as u32 + 1));
                            }
                        }
                        let g = Graph::build((na + nb) as u32, &edges).unwrap();
                        if g.is_connected() {
                            check_graph(&g);
                        }
                    }
                    if !bump(&mut thresholds, nb, na) {
                        break;
                    }
                }
            }
        }

        fn valid(t: &[usize], _nb: usize) -> bool {
            t.windows(2).all(|w| w[0] <= w[1])
        }

        fn bump(t: &mut [usize], nb: usize, na: usize) -> bool {
            for i in (0..na).rev() {
                if t[i] < nb {
                    t[i] += 1;
                    for j in (i + 1)..na {
                        t[j] = t[i];
                    }
                    if t[na - 1] == nb {
                        return true;
                    }
                    t[na - 1] = nb;
                    return true;
                }
            }
            false
        }

        fn check_graph(g: &Graph) {
            let Ok(ord) = chain_ordering(g) else { return };
            let sets = enumerate_independent_sets(g, 10_000).unwrap();
            for s in &sets {
                for t in &sets {
                    let inst = Instance::new(g.clone(), s.clone(), t.clone(), None).unwrap();
                    let want = bfs_distance(&inst, &OracleConfig::default()).unwrap().0;
                    let seq = chain_sequence(g, &ord, s, t).unwrap();
                    let got = seq.len() - 1;
                    assert_eq!(got, want, "edges={:?} s={s} t={t}", g.edges());
                    assert!(got <= 3);
                    assert_eq!(
                        validate_sequence(&inst, &ReconfigSequence::new(seq)),
                        Ok(got)
                    );
                }
            }
        }
    }
}
