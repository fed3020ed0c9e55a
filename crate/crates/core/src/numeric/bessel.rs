//! `J_μ(x)` for real `μ ≥ 0` and `x > 0`.
//!
//! Three regimes:
//! * ascending power series while `x² ≤ 4(μ+1)` (no cancellation to speak of);
//! * Hankel's asymptotic expansion once `x ≥ max(25, μ²)`;
//! * Miller's backward recurrence in between, normalized with the Neumann
//!   series `(x/2)^{ν₀} = Γ(ν₀+1) Σ_m w_m J_{ν₀+2m}(x)`, `ν₀ = frac(μ)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    check_domain(order, x)?;
    check_recurrence(order, x)?;
    Ok(match regime(order, x) {
        Regime::Series => series(order, x),
        Regime::Hankel => hankel(order, x),
        Regime::Miller => miller(order, x, 0).0,
    })
}

/// `(J_μ(x), J_{μ+1}(x))`, sharing one recurrence pass when possible.
pub(crate) fn bessel_j_pair(order: f64, x: f64) -> Result<(f64, f64)> {
    check_domain(order, x)?;
    check_recurrence(order, x)?;
    Ok(match regime(order + 1.0, x) {
        Regime::Series => (series(order, x), series(order + 1.0, x)),
        Regime::Hankel => (hankel(order, x), hankel(order + 1.0, x)),
        Regime::Miller => match regime(order, x) {
            Regime::Series => (series(order, x), miller(order + 1.0, x, 0).0),
            _ => miller(order, x, 1),
        },
    })
}

fn check_domain(order: f64, x: f64) -> Result<()> {
    if !(order >= 0.0 && order.is_finite()) {
        return Err(Error::Domain(format!(
            "Bessel order must be finite and ≥ 0, got {order}"
        )));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "Bessel argument must be finite and > 0, got {x}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Regime {
    Series,
    Miller,
    Hankel,
}

fn regime(order: f64, x: f64) -> Regime {
    if x <= 2.0 || x * x <= 4.0 * (order + 1.0) {
        Regime::Series
    } else if x >= 25f64.max(order * order) {
        Regime::Hankel
    } else {
        Regime::Miller
    }
}

fn series(mu: f64, x: f64) -> f64 {
    let y = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let k = k as f64;
        term *= y / (k * (mu + k));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    let prefactor = if mu == 0.0 {
        1.0
    } else if mu.fract() == 0.0 && mu <= 20.0 {
        (0.5 * x).powi(mu as i32) / gamma(mu + 1.0)
    } else {
        (mu * (0.5 * x).ln() - ln_gamma(mu + 1.0)).exp()
    };
    prefactor * sum
}

fn hankel(mu: f64, x: f64) -> f64 {
    let m4 = 4.0 * mu * mu;
    let inv8x = 1.0 / (8.0 * x);
    let (mut p, mut q) = (1.0, 0.0);
    let mut term: f64 = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * (m4 - odd * odd) * inv8x / k as f64;
        if next.abs() > term.abs() && k > 2 {
            // asymptotic series started diverging; the previous partial sum is optimal
            break;
        }
        term = next;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * (p.abs() + q.abs()) {
            break;
        }
    }
    // cos/sin of x itself are range-reduced exactly by libm; combine with the
    // small phase offset separately rather than forming x − φ in binary64
    let phase = (0.5 * mu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (1.0 / (FRAC_PI_2 * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// Backward recurrence from well above `max(μ, x)`; returns `J_μ` and, when
/// `extra == 1`, also `J_{μ+1}`.
/// Even start index of the backward recurrence.
fn start_index(mu: f64, x: f64, extra: usize) -> usize {
    let top = (mu.floor() as usize + extra).max(x.ceil() as usize);
    let big_n = top + 40 + (12.0 * x.cbrt()).ceil() as usize;
    big_n + big_n % 2
}

/// Longest backward recurrence attempted before giving up.
const MAX_RECURRENCE: usize = 4_000_000;

fn check_recurrence(order: f64, x: f64) -> Result<()> {
    if regime(order + 1.0, x) == Regime::Miller && start_index(order, x, 1) > MAX_RECURRENCE {
        return Err(Error::Breakdown(format!(
            "J_{order}({x}) needs a recurrence longer than {MAX_RECURRENCE} terms"
        )));
    }
    Ok(())
}

fn miller(mu: f64, x: f64, extra: usize) -> (f64, f64) {
    let n = mu.floor() as usize;
    let nu0 = mu - n as f64;
    let big_n = start_index(mu, x, extra);

    // w_m for the Neumann normalization, m = 0..=N/2
    let half = big_n / 2;
    let mut weights = Vec::with_capacity(half + 1);
    weights.push(1.0);
    let mut r = 1.0;
    for m in 1..=half {
        let mf = m as f64;
        if m > 1 {
            r *= (nu0 + mf - 1.0) / mf;
        }
        weights.push((nu0 + 2.0 * mf) * r);
    }

    const BIG: f64 = 1e250;
    let (mut j_hi, mut j) = (0.0f64, 1e-300f64);
    let mut norm = weights[half] * j;
    let (mut target, mut target_next) = (0.0, 0.0);
    for k in (1..=big_n).rev() {
        let j_lo = 2.0 * (nu0 + k as f64) / x * j - j_hi;
        j_hi = j;
        j = j_lo;
        let idx = k - 1;
        if idx == n {
            target = j;
        }
        if extra == 1 && idx == n + 1 {
            target_next = j;
        }
        if idx % 2 == 0 {
            norm += weights[idx / 2] * j;
        }
        if j.abs() > BIG {
            j /= BIG;
            j_hi /= BIG;
            norm /= BIG;
            target /= BIG;
            target_next /= BIG;
        }
    }
    let scale = if nu0 == 0.0 {
        1.0 / norm
    } else {
        (nu0 * (0.5 * x).ln()).exp() / (gamma(nu0 + 1.0) * norm)
    };
    (target * scale, target_next * scale)
}
