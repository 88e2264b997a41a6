//! Exact arithmetic toolkit for duals of lens space knots.
//!
//! Given a Berge knot dual `K ⊂ L(p, q)`, the classes of the maximal
//! self-linking number `p·sl(K)` modulo `p` depend only on the homology class
//! `a_K`, via `-1 - a + a⁻¹`. Comparing that class with `-χ(K)` decides whether
//! the rational Bennequin bound can be sharp for `ξ_{p,q}`. This crate builds
//! the records for Berge families I–X, evaluates the congruence exactly, and
//! sweeps parameter ranges.
//!
//! Modules:
//! - [`modmath`]: residues, inverses, and the two binary quadratic forms.
//! - [`front`]: toroidal front projections, `tb`, `rot`, `sl`, grid number one fronts.
//! - [`braid`]: `W(n)` words, Berge braids, positive closures and their Euler characteristic.
//! - [`families`]: enumerators producing [`families::BergeDualRecord`] values.
//! - [`verify`]: residuals, classification, sweeps and the closed-form cross-checks.
//! - [`cli`]: the `lensdual` command-line front end.

pub mod braid;
pub mod cli;
pub mod error;
pub mod families;
pub mod front;
pub mod modmath;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational with a 128-bit numerator and denominator.
pub type Rational = num_rational::Ratio<i128>;
