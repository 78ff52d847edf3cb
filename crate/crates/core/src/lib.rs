//! Exact-arithmetic workbench for symplectic Hodge calculus and Lie algebra
//! 2-cocycles on finite models, polynomial Darboux charts, and Fourier tori.

pub mod ce;
pub mod classify;
pub mod darboux;
pub mod diff;
pub mod exterior;
pub mod linalg;
pub mod modelfile;
pub mod poly;
pub mod randgen;
pub mod scalar;
pub mod symplectic;
pub mod torus;
pub mod verify;
pub mod trig;

pub use exterior::{GradedForm, MultiIndex};
pub use scalar::{Rat, TauValue};

/// Forms with rational coefficients (finite models).
pub type RatForm = GradedForm<Rat>;
/// Forms with polynomial coefficients (Darboux charts).
pub type PolyForm = GradedForm<poly::PolyScalar>;
/// Forms with trigonometric-polynomial coefficients (tori).
pub type TrigForm = GradedForm<trig::TrigFunction>;
