//! CNF reduction: a variable gadget chain (diamonds y_{i-1}, x_iT, x_iF, y_i
//! with the x-pair joined), one K2 per clause, and a length-3 occurrence path
//! from the literal vertex to the clause vertex. Swapping every c'_j for c_j
//! in two steps is possible exactly when the formula is satisfiable.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::reconfig::Instance;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("clause {clause} has {got} literals, at most 3 allowed")]
    ClauseTooLong { clause: usize, got: usize },
    #[error("variable {var} appears twice in clause {clause}")]
    DuplicateVariable { var: u32, clause: usize },
    #[error("variable {var} occurs in {got} clauses, at most 3 allowed")]
    TooManyOccurrences { var: u32, got: usize },
    #[error("literal {lit} out of range for {n} variables")]
    BadLiteral { lit: i64, n: u32 },
    #[error("DIMACS parse error: {0}")]
    Dimacs(String),
}

/// CNF formula under the occurrence restrictions: at most three literals per
/// clause, no variable twice in a clause, each variable in at most three
/// clauses. Enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(n_vars: u32, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, CnfError> {
        let mut occurrences = vec![0usize; n_vars as usize + 1];
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.len() > 3 {
                return Err(CnfError::ClauseTooLong { clause: ci + 1, got: clause.len() });
            }
            let mut seen: Vec<u32> = Vec::new();
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() > n_vars {
                    return Err(CnfError::BadLiteral { lit: lit as i64, n: n_vars });
                }
                let var = lit.unsigned_abs();
                if seen.contains(&var) {
                    return Err(CnfError::DuplicateVariable { var, clause: ci + 1 });
                }
                seen.push(var);
                occurrences[var as usize] += 1;
            }
        }
        for var in 1..=n_vars {
            if occurrences[var as usize] > 3 {
                return Err(CnfError::TooManyOccurrences {
                    var,
                    got: occurrences[var as usize],
                });
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }
}

/// DIMACS CNF: `p cnf <vars> <clauses>` then whitespace-separated literals,
/// each clause terminated by 0. `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut tokens: Vec<&str> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        tokens.extend(line.split_ascii_whitespace());
    }
    if tokens.len() < 4 || tokens[0] != "p" || tokens[1] != "cnf" {
        return Err(CnfError::Dimacs("missing 'p cnf <vars> <clauses>' header".into()));
    }
    let n_vars: u32 =
        tokens[2].parse().map_err(|_| CnfError::Dimacs(format!("bad count {}", tokens[2])))?;
    let n_clauses: usize =
        tokens[3].parse().map_err(|_| CnfError::Dimacs(format!("bad count {}", tokens[3])))?;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for tok in &tokens[4..] {
        let lit: i32 =
            tok.parse().map_err(|_| CnfError::Dimacs(format!("bad literal {tok}")))?;
        if lit == 0 {
            clauses.push(std::mem::take(&mut current));
        } else {
            current.push(lit);
        }
    }
    if !current.is_empty() {
        return Err(CnfError::Dimacs("clause not terminated by 0".into()));
    }
    if clauses.len() != n_clauses {
        return Err(CnfError::Dimacs(format!(
            "header declares {n_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(n_vars, clauses)
}

/// Path vertices connecting a literal occurrence to its clause vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceNodes {
    pub var: u32,
    pub clause: usize,
    pub negated: bool,
    pub a: Vertex,
    pub b: Vertex,
}

/// The reduced instance plus the vertex-role map.
#[derive(Debug, Clone)]
pub struct PlanarReduction {
    pub instance: Instance,
    /// `y[i]` is y_i for i in 0..=n.
    pub y: Vec<Vertex>,
    /// `x_true[i - 1]` / `x_false[i - 1]` are the literal vertices of variable i.
    pub x_true: Vec<Vertex>,
    pub x_false: Vec<Vertex>,
    /// `c[j - 1]` / `c_prime[j - 1]` are clause vertices of clause j.
    pub c: Vec<Vertex>,
    pub c_prime: Vec<Vertex>,
    /// Occurrence paths in clause-major, literal-minor order.
    pub occurrences: Vec<OccurrenceNodes>,
}

/// Vertex numbering is fixed: variable gadget first
/// (y0, x1T, x1F, y1, x2T, ...), then clause pairs (c_j, c'_j), then the
/// occurrence paths (a, b) clause-major.
pub fn reduce_cnf(f: &CnfFormula) -> PlanarReduction {
    let n = f.n_vars();
    let m = f.clauses().len();

    let y: Vec<Vertex> = (0..=n).map(|i| 3 * i + 1).collect();
    let x_true: Vec<Vertex> = (1..=n).map(|i| 3 * i - 1).collect();
    let x_false: Vec<Vertex> = (1..=n).map(|i| 3 * i).collect();
    let clause_base = 3 * n + 1;
    let c: Vec<Vertex> = (1..=m as u32).map(|j| clause_base + 2 * j - 1).collect();
    let c_prime: Vec<Vertex> = (1..=m as u32).map(|j| clause_base + 2 * j).collect();
    let occ_base = clause_base + 2 * m as u32;

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 1..=n as usize {
        let (yl, yr) = (y[i - 1], y[i]);
        let (xt, xf) = (x_true[i - 1], x_false[i - 1]);
        edges.extend([(yl, xt), (yl, xf), (xt, yr), (xf, yr), (xt, xf)]);
    }
    for j in 0..m {
        edges.push((c[j], c_prime[j]));
    }

    let mut occurrences = Vec::new();
    let mut next = occ_base;
    for (j, clause) in f.clauses().iter().enumerate() {
        for &lit in clause {
            let var = lit.unsigned_abs();
            let negated = lit < 0;
            let a = next + 1;
            let b = next + 2;
            next += 2;
            let attach = if negated {
                x_false[(var - 1) as usize]
            } else {
                x_true[(var - 1) as usize]
            };
            edges.extend([(attach, a), (a, b), (b, c[j])]);
            occurrences.push(OccurrenceNodes { var, clause: j + 1, negated, a, b });
        }
    }

    let total = next;
    let graph = Graph::build(total, &edges).expect("reduction edges are valid");
    let base: VertexSet = y
        .iter()
        .copied()
        .chain(occurrences.iter().map(|o| o.a))
        .collect();
    let source = base.union(&c_prime.iter().copied().collect());
    let target = base.union(&c.iter().copied().collect());
    let instance = Instance::new(graph, source, target, Some(2))
        .expect("endpoint sets are independent by construction");
    PlanarReduction { instance, y, x_true, x_false, c, c_prime, occurrences }
}
