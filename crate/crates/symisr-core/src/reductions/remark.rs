//! Worst-case-gap instances: a caterpillar (or its unicyclic variant) on
//! which flipping components one by one takes t steps while the optimum is 2.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::reconfig::Instance;

use super::ReductionError;

/// Spine p_1..p_{2t} with a leaf l_i on every even spine vertex;
/// source = odd spine vertices, target = source plus all leaves. With
/// `cyclic` the spine closes into a cycle (edge p_1 p_{2t}).
pub fn gen_remark(t: u32, cyclic: bool) -> Result<Instance, ReductionError> {
    if t < 1 {
        return Err(ReductionError::BadParameter { name: "t", min: 1 });
    }
    let spine = 2 * t;
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|i| (i, i + 1)).collect();
    for i in 1..=t {
        edges.push((2 * i, spine + i));
    }
    if cyclic {
        edges.push((1, spine));
    }
    let graph = Graph::build(spine + t, &edges).expect("caterpillar edges are valid");
    let source: VertexSet = (1..=t).map(|i| 2 * i - 1).collect();
    let target = source.union(&(1..=t).map(|i| spine + i).collect());
    Ok(Instance::new(graph, source, target, None).expect("endpoint sets are independent"))
}
