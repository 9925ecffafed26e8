//! Integral and fractional packing of a pattern into a host, and the
//! exhaustive oracle for the multicolor number at small `n`.

mod bounds;
mod lp;
mod oracle;
mod problem;

pub use bounds::{lower_bound_from_construction, Construction, ConstructionBound};
pub use lp::{fractional_packing_lp, FractionalPacking, LpSolution, LP_PIVOT_LIMIT};
pub use oracle::{
    default_max_n, ex_multicolor_exact, ex_multicolor_unpruned, OracleLimits, OracleResult,
};
pub use problem::{max_packing_exact, IntegralSolution, PackingLimits, PackingProblem};
