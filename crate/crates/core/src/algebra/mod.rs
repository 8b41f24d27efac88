//! Exact scalar and univariate-polynomial arithmetic.

mod cyclotomic;
mod poly;
mod residue;
mod resultant;
mod ring;

pub use cyclotomic::{cyclotomic, euler_phi, has_cyclotomic_factor};
pub use poly::{Poly, UniPoly};
pub use residue::AlgebraicResidue;
pub use resultant::{determinant, resultant, sylvester_matrix};
pub use ring::{int, rat, Domain, Field, Rational, Ring};
