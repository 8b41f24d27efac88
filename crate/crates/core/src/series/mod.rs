//! Laurent polynomials, univariate rational functions and truncated power
//! series in `t`.

mod laurent;
mod laurent2;
mod ratfunc;
mod trunc;

pub use laurent::{Laurent, LaurentPoly1, Part};
pub use laurent2::LaurentPoly2;
pub use ratfunc::{ratfunc_to_laurent, RatFunc1};
pub use trunc::TruncSeries;
