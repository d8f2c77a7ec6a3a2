//! Exact generalized Hilbert-Kunz invariants of monomial ideals in
//! two-dimensional normal toric rings.

pub mod checks;
pub mod decimal;
pub mod error;
pub mod families;
pub mod figure;
pub mod geometry;
pub mod ideal;
pub mod invariants;
pub mod reptype;
