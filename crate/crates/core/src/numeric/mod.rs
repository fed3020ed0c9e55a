//! Binary64 oracle: Bessel functions of real order, their positive zeros, and
//! direct sums over those zeros. Nothing here touches the exact engine except
//! to read an already derived ratio expansion.

mod bessel;
mod sums;
mod zeros;

pub use bessel::{bessel_j, ln_gamma};
pub use sums::{
    numeric_sigma, ratio_at_zero, residue_lhs, residue_partial_sum, residue_tail_scale,
    verify_ratio_formula, verify_residue_identity, ResidueReport, TailedSum,
};
pub use zeros::{bessel_zeros, mcmahon_estimate, ZeroSet};
