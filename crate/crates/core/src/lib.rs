//! Exact q-series arithmetic, level-one modular forms, the second-order
//! modular linear differential equation, its hypergeometric characters, and
//! the classification of two-character theories built on them.
//!
//! All series arithmetic is over `BigRational`; floating point appears only
//! in [`smatrix`].

pub mod classifier;
pub mod forms;
pub mod hypergeom;
pub mod mlde;
pub mod reference;
pub mod series;
pub mod smatrix;

pub use series::{QSeries, Rational};
