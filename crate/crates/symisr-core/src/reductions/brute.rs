//! Subset-enumeration oracles for the source problems of the two reductions.

use crate::graph::Graph;

use super::ReductionError;
use crate::reductions::CnfFormula;

/// Minimum dominating set size by scanning all vertex subsets. Limited to 20
/// vertices.
pub fn brute_dominating_number(g: &Graph) -> Result<u32, ReductionError> {
    let n = g.n();
    if n > 20 {
        return Err(ReductionError::TooLarge { max: 20, got: n });
    }
    let closed: Vec<u32> = (1..=n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u32 << (v - 1), |m, &w| m | 1 << (w - 1))
        })
        .collect();
    let full = if n == 32 { !0 } else { (1u32 << n) - 1 };
    let mut best = n;
    for mask in 0..(1u32 << n) {
        if mask.count_ones() >= best {
            continue;
        }
        let mut covered = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros();
            covered |= closed[b as usize];
            rest &= rest - 1;
        }
        if covered == full {
            best = mask.count_ones();
        }
    }
    Ok(best)
}

/// Satisfiability by scanning all assignments. Limited to 20 variables.
pub fn brute_sat(f: &CnfFormula) -> Result<bool, ReductionError> {
    let n = f.n_vars();
    if n > 20 {
        return Err(ReductionError::TooLarge { max: 20, got: n });
    }
    for assignment in 0u32..(1u32 << n) {
        let ok = f.clauses().iter().all(|clause| {
            clause.iter().any(|&lit| {
                let bit = assignment >> (lit.unsigned_abs() - 1) & 1;
                (lit > 0) == (bit == 1)
            })
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_graph_gamma_two() {
        let g = Graph::build(5, &[(1, 2), (1, 3), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(brute_dominating_number(&g).unwrap(), 2, "e.g. {{v1, v4}}");
    }

    #[test]
    fn clique_and_empty() {
        let k4 = Graph::build(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(brute_dominating_number(&k4).unwrap(), 1);
        let e3 = Graph::build(3, &[]).unwrap();
        assert_eq!(brute_dominating_number(&e3).unwrap(), 3);
    }

    #[test]
    fn size_cap() {
        let g = Graph::build(21, &[]).unwrap();
        assert_eq!(
            brute_dominating_number(&g).unwrap_err(),
            ReductionError::TooLarge { max: 20, got: 21 }
        );
    }

    #[test]
    fn sat_examples() {
        let f = CnfFormula::new(4, vec![vec![1, -2, -3], vec![1, -4], vec![2, 3, -4]]).unwrap();
        assert!(brute_sat(&f).unwrap(), "the all-false assignment satisfies");
        let contradiction = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!brute_sat(&contradiction).unwrap());
        let empty = CnfFormula::new(3, vec![]).unwrap();
        assert!(brute_sat(&empty).unwrap());
        let empty_clause = CnfFormula::new(1, vec![vec![]]).unwrap();
        assert!(!brute_sat(&empty_clause).unwrap());
    }
}
