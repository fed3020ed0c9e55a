use std::f64::consts::PI;

use super::bessel::{bessel_j, ln_gamma};
use super::zeros::{bessel_zeros, ZeroSet};
use crate::closed_form::build_ratio_expansion;
use crate::error::{Error, Result};

/// Truncated sum over computed zeros plus an estimate of the neglected tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailedSum {
    pub partial: f64,
    pub tail_estimate: f64,
    /// Bound on `|true tail − tail_estimate|` from integral comparison.
    pub tail_bound: f64,
    pub value: f64,
}

/// Neumaier-compensated sum, smallest terms first.
fn compensated_sum(terms: impl DoubleEndedIterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for t in terms.rev() {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    sum + comp
}

/// `∫_a^∞ (π(x+c))^{-s} dx` for `s > 1`.
fn power_tail_integral(a: f64, c: f64, s: f64) -> f64 {
    (PI * (a + c)).powf(1.0 - s) / (PI * (s - 1.0))
}

/// `σ(p, ν) ≈ Σ_k ξ_k^{-2p}` over the supplied zeros, with the remainder
/// modelled by McMahon zeros `ξ_k ≈ β_k − (4ν²−1)/(8β_k)`,
/// `β_k = π(k + ν/2 − 1/4)`, summed by the midpoint integral.
pub fn numeric_sigma(nu: f64, p: f64, zeros: &ZeroSet) -> Result<TailedSum> {
    if zeros.is_empty() {
        return Err(Error::Domain("need at least one zero".into()));
    }
    if p.is_nan() || p < 1.0 {
        return Err(Error::Domain(format!("σ(p, ν) diverges for p = {p} < 1")));
    }
    if nu != zeros.nu {
        return Err(Error::Domain(format!(
            "zeros belong to ν = {}, not ν = {nu}",
            zeros.nu
        )));
    }
    let s = 2.0 * p;
    let partial = compensated_sum(zeros.zeros.iter().map(|z| z.powf(-s)));

    let k = zeros.len() as f64;
    let c = 0.5 * nu - 0.25;
    let mu = 4.0 * nu * nu;
    // first-order McMahon correction: ξ^{-s} ≈ β^{-s} (1 + s(μ−1)/(8β²))
    let correction =
        |a: f64| s * (mu - 1.0) / 8.0 * (PI * (a + c)).powf(-s - 1.0) / (PI * (s + 1.0));
    let tail_estimate = power_tail_integral(k + 0.5, c, s) + correction(k + 0.5);
    let upper = power_tail_integral(k, c, s);
    let lower = power_tail_integral(k + 1.0, c, s);
    let base = power_tail_integral(k + 0.5, c, s);
    let tail_bound = (upper - base).max(base - lower) + correction(k).abs();
    Ok(TailedSum {
        partial,
        tail_estimate,
        tail_bound,
        value: partial + tail_estimate,
    })
}

/// `J_{ν+p}(ξ)/J_{ν+1}(ξ)` at a zero `ξ` of `J_ν`.
pub fn ratio_at_zero(nu: f64, p: u32, zero: f64) -> Result<f64> {
    if p == 0 {
        return Err(Error::InvalidOrder(p));
    }
    real_ratio(nu, p as f64, zero)
}

const DENOMINATOR_FLOOR: f64 = 1e-10;

fn real_ratio(nu: f64, p: f64, zero: f64) -> Result<f64> {
    let den = bessel_j(nu + 1.0, zero)?;
    if den.abs() < DENOMINATOR_FLOOR {
        return Err(Error::DenominatorUnderflow(den));
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    Ok(bessel_j(nu + p, zero)? / den)
}

/// `|J_{ν+p}(ξ_k)/J_{ν+1}(ξ_k) − Σ_q coeff_q(ν)(2/ξ_k)^{power_q}|`.
pub fn verify_ratio_formula(nu: f64, p: u32, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("zero index k must be ≥ 1".into()));
    }
    let expansion = build_ratio_expansion(p)?;
    let xi = bessel_zeros(nu, k)?.zeros[k - 1];
    Ok((ratio_at_zero(nu, p, xi)? - expansion.eval_f64(nu, xi)).abs())
}

/// `Γ(ν+1) / (2^{p+1} Γ(ν+p+1))`.
pub fn residue_lhs(nu: f64, p: f64) -> f64 {
    (ln_gamma(nu + 1.0) - ln_gamma(nu + p + 1.0) - (p + 1.0) * std::f64::consts::LN_2).exp()
}

/// `Σ_k ξ_k^{-(p+1)} J_{ν+p}(ξ_k)/J_{ν+1}(ξ_k)` over the given zeros.
pub fn residue_partial_sum(nu: f64, p: f64, zeros: &[f64]) -> Result<f64> {
    let terms = zeros
        .iter()
        .map(|&z| Ok(z.powf(-(p + 1.0)) * real_ratio(nu, p, z)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(compensated_sum(terms.into_iter()))
}

/// Size of the neglected terms after `k` zeros: the ratio stays bounded by
/// about 1 in magnitude, so `Σ_{j>k} β_j^{-(p+1)} ≤ ∫_k^∞`.
pub fn residue_tail_scale(nu: f64, p: f64, k: usize) -> f64 {
    power_tail_integral(k as f64, 0.5 * nu - 0.25, p + 1.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidueReport {
    pub lhs: f64,
    pub partial_rhs: f64,
    /// `|lhs − partial_rhs|` with all `terms` zeros.
    pub residual: f64,
    /// Same with the first `terms/2` zeros.
    pub half_residual: f64,
    pub tail_scale: f64,
    /// The residual shrank when doubling from `terms/2` to `terms`.
    pub converging: bool,
}

/// Checks `Γ(ν+1)/(2^{p+1}Γ(ν+p+1)) = Σ_k ξ_k^{-(p+1)} J_{ν+p}(ξ_k)/J_{ν+1}(ξ_k)`
/// for real `p > 0` by partial sums.
pub fn verify_residue_identity(nu: f64, p: f64, terms: usize) -> Result<ResidueReport> {
    if terms < 2 {
        return Err(Error::Domain("need at least 2 terms".into()));
    }
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::Domain(format!("p must be > 0, got {p}")));
    }
    let zeros = bessel_zeros(nu, terms)?;
    let lhs = residue_lhs(nu, p);
    let half = residue_partial_sum(nu, p, &zeros.zeros[..terms / 2])?;
    let full = residue_partial_sum(nu, p, &zeros.zeros)?;
    let residual = (lhs - full).abs();
    let half_residual = (lhs - half).abs();
    Ok(ResidueReport {
        lhs,
        partial_rhs: full,
        residual,
        half_residual,
        tail_scale: residue_tail_scale(nu, p, terms),
        converging: residual < half_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_one_at_zero() {
        let z = bessel_zeros(0.0, 10_000).unwrap();
        let s = numeric_sigma(0.0, 1.0, &z).unwrap();
        assert!((s.value - 0.25).abs() < 1e-10, "{s:?}");
        assert!(s.tail_bound >= 0.0);
        assert!((s.value - 0.25).abs() <= s.tail_bound);
    }

    #[test]
    fn sigma_one_at_half_is_zeta2_over_pi2() {
        let z = bessel_zeros(0.5, 10_000).unwrap();
        let s = numeric_sigma(0.5, 1.0, &z).unwrap();
        assert!((s.value - 1.0 / 6.0).abs() < 1e-10);
    }

    #[test]
    fn sigma_preconditions() {
        let z = bessel_zeros(0.0, 5).unwrap();
        assert!(numeric_sigma(0.0, 0.5, &z).is_err());
        assert!(numeric_sigma(1.0, 1.0, &z).is_err());
        assert!(numeric_sigma(0.0, 1.0, &z.truncated(0)).is_err());
    }

    #[test]
    fn ratio_small_cases() {
        let z = bessel_zeros(0.0, 1).unwrap().zeros[0];
        assert_eq!(ratio_at_zero(0.0, 1, z).unwrap(), 1.0);
        let r2 = ratio_at_zero(0.0, 2, z).unwrap();
        assert!((r2 - 2.0 / z).abs() < 1e-14);
        assert!((r2 - 0.831_661_154_631_247_6).abs() < 1e-13);
        let r3 = ratio_at_zero(0.0, 3, z).unwrap();
        assert!((r3 - (8.0 / (z * z) - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn ratio_rejects_non_zero_input() {
        // 3.8317… is a zero of J_1, which is the denominator here
        let j1_zero = bessel_zeros(1.0, 1).unwrap().zeros[0];
        assert!(matches!(
            ratio_at_zero(0.0, 2, j1_zero),
            Err(Error::DenominatorUnderflow(_))
        ));
    }

    #[test]
    fn ratio_formula_cross_checks() {
        assert!(verify_ratio_formula(0.0, 1, 1).unwrap() < 1e-15);
        for k in 1..=5 {
            assert!(verify_ratio_formula(0.0, 5, k).unwrap() < 1e-8);
        }
        assert!(verify_ratio_formula(1.7, 3, 3).unwrap() < 1e-9);
    }

    #[test]
    fn residue_identity_integer_p() {
        let r = verify_residue_identity(0.0, 1.0, 2000).unwrap();
        assert!((r.lhs - 0.25).abs() < 1e-15);
        assert!(r.converging && r.residual < r.tail_scale);
        let r = verify_residue_identity(0.0, 2.0, 2000).unwrap();
        assert!((r.lhs - 1.0 / 16.0).abs() < 1e-15);
        assert!(r.residual < 1e-10);
    }

    #[test]
    fn residue_identity_non_integer_p() {
        let r = verify_residue_identity(0.25, 1.5, 4000).unwrap();
        assert!(r.converging, "{r:?}");
        assert!(r.residual < r.tail_scale);
    }

    #[test]
    fn compensated_sum_is_accurate() {
        let terms: Vec<f64> = (1..=100_000).map(|k| 1.0 / (k as f64 * k as f64)).collect();
        let s = compensated_sum(terms.into_iter());
        let want = PI * PI / 6.0 - 1.0 / 100_000.5;
        assert!((s - want).abs() < 1e-15);
    }
}
