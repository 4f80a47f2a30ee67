//! Problem semantics: flip adjacency, instances, sequence validation and
//! component-wise decomposition.
//!
//! Two independent sets `I`, `J` are adjacent exactly when the induced
//! subgraph on `I △ J` is nonempty and connected; a step of a reconfiguration
//! sequence flips one such connected set.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconfigError {
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{which} set is not independent")]
    NotIndependent { which: &'static str },
    #[error("flip set is empty")]
    EmptyFlip,
    #[error("flip set does not induce a connected subgraph")]
    DisconnectedFlip,
}

/// A graph together with two independent sets and an optional step budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    source: VertexSet,
    target: VertexSet,
    budget: Option<u32>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        source: VertexSet,
        target: VertexSet,
        budget: Option<u32>,
    ) -> Result<Instance, ReconfigError> {
        if !graph.try_is_independent(&source)? {
            return Err(ReconfigError::NotIndependent { which: "source" });
        }
        if !graph.try_is_independent(&target)? {
            return Err(ReconfigError::NotIndependent { which: "target" });
        }
        Ok(Instance { graph, source, target, budget })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> &VertexSet {
        &self.source
    }

    pub fn target(&self) -> &VertexSet {
        &self.target
    }

    pub fn budget(&self) -> Option<u32> {
        self.budget
    }

    pub fn with_budget(mut self, budget: Option<u32>) -> Instance {
        self.budget = budget;
        self
    }
}

/// An ordered list of independent sets; `sets.len() - 1` steps.
/// Validity is checked by [`validate_sequence`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigSequence {
    pub sets: Vec<VertexSet>,
}

impl ReconfigSequence {
    pub fn new(sets: Vec<VertexSet>) -> ReconfigSequence {
        ReconfigSequence { sets }
    }

    pub fn steps(&self) -> usize {
        self.sets.len().saturating_sub(1)
    }
}

/// True iff `i` and `j` are adjacent under the flip rule. Equal sets are not
/// adjacent (empty symmetric difference). Errors on non-independent input.
pub fn adjacent(g: &Graph, i: &VertexSet, j: &VertexSet) -> Result<bool, ReconfigError> {
    if !g.try_is_independent(i)? {
        return Err(ReconfigError::NotIndependent { which: "first" });
    }
    if !g.try_is_independent(j)? {
        return Err(ReconfigError::NotIndependent { which: "second" });
    }
    let diff = i.symmetric_difference(j);
    Ok(!diff.is_empty() && g.is_connected_subset(&diff))
}

/// Applies the flip of `x` to `i`, i.e. returns `i △ x`. The flip set must be
/// nonempty and induce a connected subgraph; independence of the result is the
/// caller's concern.
pub fn flip(g: &Graph, i: &VertexSet, x: &VertexSet) -> Result<VertexSet, ReconfigError> {
    if x.is_empty() {
        return Err(ReconfigError::EmptyFlip);
    }
    for v in x.iter() {
        if !g.in_range(v) {
            return Err(GraphError::OutOfRange { vertex: v, n: g.n() }.into());
        }
    }
    if !g.is_connected_subset(x) {
        return Err(ReconfigError::DisconnectedFlip);
    }
    Ok(i.symmetric_difference(x))
}

/// The trivial upper bound: number of connected components of
/// `G[source △ target]`. Zero exactly when the endpoints coincide.
pub fn cc_bound(inst: &Instance) -> usize {
    let diff = inst.source().symmetric_difference(inst.target());
    inst.graph().cc(&diff)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    #[error("sequence is empty")]
    Empty,
    #[error("sequence does not start at the source set")]
    WrongStart,
    #[error("sequence does not end at the target set")]
    WrongEnd,
    #[error("set {index} contains an out-of-range vertex")]
    OutOfRange { index: usize },
    #[error("set {index} is not independent")]
    NotIndependent { index: usize },
    #[error("sets {index} and {next} are not adjacent", next = index + 1)]
    NotAdjacent { index: usize },
    #[error("sequence has {steps} steps, exceeding budget {budget}")]
    OverBudget { steps: usize, budget: u32 },
}

/// Checks a sequence against an instance: correct endpoints, every set
/// independent, consecutive sets adjacent, budget respected. On success
/// returns the step count; otherwise the first violation in scan order.
pub fn validate_sequence(
    inst: &Instance,
    seq: &ReconfigSequence,
) -> Result<usize, SequenceViolation> {
    let sets = &seq.sets;
    if sets.is_empty() {
        return Err(SequenceViolation::Empty);
    }
    if &sets[0] != inst.source() {
        return Err(SequenceViolation::WrongStart);
    }
    let g = inst.graph();
    for (index, set) in sets.iter().enumerate() {
        if set.iter().any(|v| !g.in_range(v)) {
            return Err(SequenceViolation::OutOfRange { index });
        }
        if !g.is_independent(set) {
            return Err(SequenceViolation::NotIndependent { index });
        }
        if index + 1 < sets.len() {
            let diff = set.symmetric_difference(&sets[index + 1]);
            if diff.is_empty() || !g.is_connected_subset(&diff) {
                return Err(SequenceViolation::NotAdjacent { index });
            }
        }
    }
    if sets.last().unwrap() != inst.target() {
        return Err(SequenceViolation::WrongEnd);
    }
    let steps = sets.len() - 1;
    if let Some(budget) = inst.budget() {
        if steps > budget as usize {
            return Err(SequenceViolation::OverBudget { steps, budget });
        }
    }
    Ok(steps)
}

/// One connected component of an instance, relabeled to `1..=|component|`.
#[derive(Debug, Clone)]
pub struct ComponentInstance {
    /// Original vertex ids of the component, sorted. `vertices.as_slice()[i]`
    /// is the original id of local vertex `i + 1`.
    pub vertices: VertexSet,
    pub instance: Instance,
    /// True when the restricted source equals the restricted target.
    pub solved: bool,
}

impl ComponentInstance {
    pub fn to_global(&self, local: &VertexSet) -> VertexSet {
        local
            .iter()
            .map(|v| self.vertices.as_slice()[(v - 1) as usize])
            .collect()
    }

    pub fn to_local(&self, global: &VertexSet) -> VertexSet {
        global
            .iter()
            .filter_map(|v| {
                self.vertices
                    .as_slice()
                    .binary_search(&v)
                    .ok()
                    .map(|i| (i + 1) as Vertex)
            })
            .collect()
    }
}

/// Splits an instance along the connected components of its graph. Every flip
/// set is connected and hence confined to one component, so the optimum of the
/// whole instance is the sum of the component optima.
pub fn split_by_components(inst: &Instance) -> Vec<ComponentInstance> {
    let g = inst.graph();
    let comps = g.connected_components(&g.all_vertices());
    comps
        .into_iter()
        .map(|vertices| {
            let sub = g.induced(&vertices);
            let tmp = ComponentInstance {
                vertices: vertices.clone(),
                instance: Instance::new(sub.clone(), VertexSet::empty(), VertexSet::empty(), None)
                    .expect("empty sets are independent"),
                solved: false,
            };
            let source = tmp.to_local(inst.source());
            let target = tmp.to_local(inst.target());
            let solved = source == target;
            let instance = Instance::new(sub, source, target, None)
                .expect("restrictions of independent sets are independent");
            ComponentInstance { vertices, instance, solved }
        })
        .collect()
}

impl fmt::Display for ReconfigSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "len {}", self.sets.len())?;
        for s in &self.sets {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
