//! Exact symbolic computation on the noncommutative space `R³_λ`, the
//! enveloping algebra of the Borel Lie algebra with
//! `[x1, x2] = 2λ x2`, `[x1, x3] = 2λ x3`, `[x2, x3] = 0`.
//!
//! Modules build on each other bottom-up: [`scalars`] → [`algebra`] →
//! [`calculus`] → [`hodge`] → [`homology`], [`symmetry`], [`waves`] →
//! [`claims`]. [`syntax`] parses and prints values.

pub mod algebra;
pub mod calculus;
pub mod claims;
pub mod hodge;
pub mod homology;
pub mod scalars;
pub mod symmetry;
pub mod syntax;
pub mod waves;

pub use algebra::{Monomial, NcPoly, TensorSquare};
pub use calculus::{Form, Variant, Wedge};

pub use scalars::{GaussianRational, Param, ScalarFraction, ScalarPoly};
