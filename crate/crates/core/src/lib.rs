//! Numerical semigroups, their semigroup polynomials, and cyclotomicity.
//!
//! The crate decides symmetry and cyclotomicity of numerical semigroups with
//! exact integer arithmetic, builds the two-parameter family `S(n, t)` of
//! symmetric semigroups that are not cyclotomic, and checks where the roots
//! of their polynomials lie numerically.

pub mod census;
pub mod cli;
pub mod cyclotomic;
pub mod decimal;
pub mod error;
pub mod family;
pub mod poly;
pub mod rootloc;
pub mod semigroup;

pub use cyclotomic::{cyclotomic, cyclotomic_test, is_cyclotomic, CyclotomicFactor, CyclotomicReport};
pub use error::{Error, Result};
pub use family::FamilyParams;
pub use poly::IntPoly;
pub use semigroup::NumericalSemigroup;
