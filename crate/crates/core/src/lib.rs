//! Exact verification engine for q-deformed non-relativistic Schrödinger
//! theory on the braided line and the three-dimensional q-deformed Euclidean
//! space.
//!
//! Everything is computed in ℚ(i)(q) — ratios of Laurent polynomials in the
//! deformation parameter with Gaussian-rational coefficients — so every check
//! is an exact identity, not a numerical approximation. Numeric evaluation
//! exists only for reporting.
//!
//! Module map:
//! - [`qfield`]: the coefficient field, canonical forms, q→1 limits
//! - [`qcombi`]: q-brackets, Gaussian binomials, the (C_q)_k^n coefficients
//! - [`ncalg`]: normal-ordered noncommutative polynomial engine for both spaces
//! - [`qcalc`]: derivative actions and exact linear operators on basis windows
//! - [`waves`]: truncated q-plane waves, phase factors, residual checks
//! - [`dynamics`]: Hamiltonians, Ehrenfest identities, continuity equation
//! - [`report`]: machine-readable check reports

pub mod dynamics;
pub mod ncalg;
pub mod qcalc;
pub mod qcombi;
pub mod qfield;
pub mod report;
pub mod waves;
