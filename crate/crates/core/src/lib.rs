//! Numerical and combinatorial tools around Eisenstein series and the
//! L-functions appearing in their Fourier expansions.
//!
//! - [`special`]: complex Γ, ζ, the completed ξ, divisor power sums σ_s(n)
//!   and the K-Bessel function K_ν(y).
//! - [`eisenstein`]: the non-holomorphic SL₂(ℤ) Eisenstein series E(z, s),
//!   evaluated both as a coprime lattice sum and through its Fourier
//!   expansion, with functional-equation and coefficient checks.
//! - [`euler`]: partial L-functions as Euler products over Satake
//!   eigenvalue data, constant-term ratios and the crude functional
//!   equation descriptor.
//! - [`roots`]: root systems of types A–G, Weyl group orders, maximal
//!   parabolics and the grading of their nilradicals.
//!
//! Everything runs in IEEE double precision.

pub mod arith;
pub mod cplx;
pub mod eisenstein;
pub mod error;
pub mod euler;
pub mod roots;
pub mod special;

pub use error::{Error, Result};
pub use special::ComplexValue;
