//! Generators for the two hardness constructions, the monotone objective, the
//! worst-case-gap instances, and the small brute-force problem oracles that
//! certify reduction soundness.

mod brute;
mod planar;
mod remark;
mod split;

pub use brute::{brute_dominating_number, brute_sat};
pub use planar::{parse_dimacs, reduce_cnf, CnfError, CnfFormula, OccurrenceNodes, PlanarReduction};
pub use remark::gen_remark;
pub use split::{objective_split, reduce_ds, SplitReduction};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("parameter {name} must be at least {min}")]
    BadParameter { name: &'static str, min: u32 },
    #[error("brute-force oracle limited to {max} vertices or variables, got {got}")]
    TooLarge { max: u32, got: u32 },
}
