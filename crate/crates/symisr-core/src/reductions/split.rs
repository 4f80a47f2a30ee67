//! Dominating-set reduction onto split graphs: a clique X ∪ {z1, z2} against
//! an independent part of n groups of k+2 vertices, with x_i joined to group
//! j exactly when v_j lies in the closed neighborhood of v_i. Reaching {z2}
//! from Y ∪ {z1} within k+1 steps forces a dominating set of size at most k.

use num_rational::Ratio;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracle::Objective;
use crate::reconfig::Instance;

use super::ReductionError;

/// The reduced instance plus the vertex-role map.
#[derive(Debug, Clone)]
pub struct SplitReduction {
    pub instance: Instance,
    /// `x[i - 1]` is the clique vertex for input vertex `i`.
    pub x: Vec<Vertex>,
    /// `y[i - 1]` is the independent group Y_i, `k + 2` vertices each.
    pub y: Vec<Vec<Vertex>>,
    pub z1: Vertex,
    pub z2: Vertex,
    pub input_n: u32,
    pub k: u32,
    pub k_prime: u32,
}

pub fn reduce_ds(g: &Graph, k: u32) -> Result<SplitReduction, ReductionError> {
    if k < 1 {
        return Err(ReductionError::BadParameter { name: "k", min: 1 });
    }
    let n = g.n();
    let group = k + 2;
    let x: Vec<Vertex> = (1..=n).collect();
    let y: Vec<Vec<Vertex>> = (0..n)
        .map(|i| (1..=group).map(|j| n + i * group + j).collect())
        .collect();
    let z1 = n + n * group + 1;
    let z2 = z1 + 1;
    let total = z2;

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let clique: Vec<Vertex> = x.iter().copied().chain([z1, z2]).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let dominated = i == j || g.has_edge(i, j);
            if dominated {
                for &yv in &y[(j - 1) as usize] {
                    edges.push((x[(i - 1) as usize], yv));
                }
            }
        }
    }

    let graph = Graph::build(total, &edges).expect("reduction edges are valid");
    let source: VertexSet = y.iter().flatten().copied().chain([z1]).collect();
    let target = VertexSet::singleton(z2);
    let instance = Instance::new(graph, source, target, Some(k + 1))
        .expect("endpoint sets are independent by construction");
    Ok(SplitReduction { instance, x, y, z1, z2, input_n: n, k, k_prime: k + 1 })
}

/// The monotone objective: +1 on z2, -1 on every vertex of Y, 0 elsewhere.
/// The target is the only independent set with positive value.
pub fn objective_split(r: &SplitReduction) -> Objective {
    let mut obj = Objective::zero(r.instance.graph().n());
    obj.set_coeff(r.z2, Ratio::from_integer(1));
    for yv in r.y.iter().flatten() {
        obj.set_coeff(*yv, Ratio::from_integer(-1));
    }
    obj
}
