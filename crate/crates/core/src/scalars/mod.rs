//! Exact coefficient arithmetic: Gaussian rationals, parameter polynomials,
//! their fraction field, and exact elimination.

mod fraction;
mod gaussian;
pub mod linalg;
mod poly;

pub use fraction::ScalarFraction;
pub use gaussian::GaussianRational;
pub use linalg::nullspace;
pub use poly::{Param, ParamMono, ScalarPoly};
pub(crate) use poly::{latex_term, text_mono, text_term};

use std::collections::BTreeMap;

/// Evaluates bound parameters of `p`; unbound parameters remain formal.
pub fn substitute(p: &ScalarPoly, bindings: &BTreeMap<Param, GaussianRational>) -> ScalarPoly {
    p.substitute(bindings)
}

/// Bindings sending `lam` to zero.
pub fn classical_limit() -> BTreeMap<Param, GaussianRational> {
    let mut b = BTreeMap::new();
    b.insert(Param::Lambda, GaussianRational::zero());
    b
}
