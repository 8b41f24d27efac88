//! Exact walk counts: the step-by-step oracle, identity checks against it,
//! extraction of counts from orbit sums, and closed-form formulas.

mod closed;
mod dp;
mod identities;
mod orbit_extract;

pub use closed::{
    gosper, gouyou, ClosedForm, DOUBLE_KREWERAS, DOUBLE_TANDEM, GESSEL, GOUYOU_BEAUCHAMPS,
    KREWERAS, REVERSE_KREWERAS, TANDEM,
};
pub use dp::{count_dp, count_dp_with, count_many, CountTable};
pub use identities::{
    functional_equation_holds, orbit_sum_sides, q_on_x_axis, verify_functional_equation,
    verify_orbit_sum, SliceSeries,
};
pub use orbit_extract::{is_orbit_sum_exception, q_orbit, OrbitExtractor, ORBIT_SUM_EXCEPTIONS};
