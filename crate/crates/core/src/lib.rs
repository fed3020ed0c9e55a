//! Exact closed forms for Rayleigh sums `σ(p, ν) = Σ_k ξ_{νk}^{-2p}` over the
//! positive zeros of the Bessel function `J_ν`.
//!
//! The crate has two independent halves:
//!
//! * an exact engine ([`rational`], [`poly`], [`factored`], [`closed_form`]) that
//!   derives `σ(p, ν)` as a ratio of integer polynomials in `ν` by solving a
//!   triangular linear system, one new unknown per `p`;
//! * a binary64 oracle ([`numeric`]) that finds Bessel zeros and sums their
//!   inverse powers directly, with a tail correction.
//!
//! [`zeta`] ties the exact side to even Riemann zeta values through
//! `ζ(2p) = π^{2p} σ(p, 1/2)`.

pub mod closed_form;
pub mod error;
pub mod factored;
pub mod numeric;
pub mod poly;
pub mod rational;

pub mod zeta;

pub use closed_form::{
    build_ratio_expansion, derive_sigma, eval_sigma_exact, gamma_ratio_poly, ratio_coefficient,
    RatioExpansion, RatioTerm, SigmaTable,
};
pub use error::{Error, Result};
pub use factored::{factor_shifts, FactoredRationalFn, ShiftFactorization};
pub use poly::{poly_gcd, Poly};
pub use rational::{parse_rational, Rational};
pub use zeta::{spherical_sigma, zeta_even, ZetaValue};
