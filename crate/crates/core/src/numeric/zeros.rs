use std::f64::consts::PI;

use super::bessel::bessel_j_pair;
use crate::error::{Error, Result};

/// The first positive zeros of `J_ν`, increasing, with an absolute error
/// estimate for each.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet {
    pub nu: f64,
    pub zeros: Vec<f64>,
    pub accuracy: Vec<f64>,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The first `count` zeros (all of them if fewer are stored).
    pub fn truncated(&self, count: usize) -> ZeroSet {
        let n = count.min(self.zeros.len());
        ZeroSet {
            nu: self.nu,
            zeros: self.zeros[..n].to_vec(),
            accuracy: self.accuracy[..n].to_vec(),
        }
    }
}

/// Three-term McMahon expansion for the `k`-th zero.
pub fn mcmahon_estimate(nu: f64, k: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

const SCAN_STEP: f64 = PI / 8.0;

/// First `count` zeros of `J_ν`.
///
/// Small zeros are found by scanning upward from `max(ν, 1)` in steps of
/// `π/8` for sign changes; once the zeros are far enough out for McMahon's
/// expansion to be sharp, each new zero is bracketed in a narrow window
/// around its McMahon estimate instead. Every zero is polished by Newton
/// iteration on `J′_ν = (ν/x) J_ν − J_{ν+1}`, safeguarded by bisection.
pub fn bessel_zeros(nu: f64, count: usize) -> Result<ZeroSet> {
    if !(nu >= 0.0 && nu.is_finite()) {
        return Err(Error::Domain(format!(
            "order must be finite and ≥ 0, got {nu}"
        )));
    }
    if count == 0 {
        return Err(Error::Domain("zero count must be ≥ 1".into()));
    }
    let f = |x: f64| bessel_j_pair(nu, x);
    let mut zeros = Vec::with_capacity(count);
    let mut accuracy = Vec::with_capacity(count);

    let scan_until = 2.0 * nu * nu + 30.0;
    let mut x = nu.max(1.0);
    let mut fx = f(x)?.0;

    while zeros.len() < count {
        let k = zeros.len() + 1;
        let seed = mcmahon_estimate(nu, k);
        let bracket = if k > 20 && seed > scan_until {
            let h = 0.5;
            let prev = zeros.last().copied().unwrap_or(0.0);
            let (a, b) = (seed - h, seed + h);
            let (fa, fb) = (f(a)?.0, f(b)?.0);
            if a > prev && fa * fb < 0.0 {
                Some((a, fa, b, fb))
            } else {
                None
            }
        } else {
            None
        };
        let (a, fa, b, fb) = match bracket {
            Some(br) => br,
            None => scan(&f, &mut x, &mut fx, nu)?,
        };
        let (z, err) = polish(nu, a, fa, b, fb, seed)?;
        if let Some(&prev) = zeros.last() {
            if z <= prev {
                return Err(Error::Bracket(format!(
                    "zero {k} of J_{nu} at {z} does not exceed zero {} at {prev}",
                    k - 1
                )));
            }
        }
        zeros.push(z);
        accuracy.push(err);
        // resume any later scan just past this zero
        x = z + 1e-3 * SCAN_STEP;
        fx = f(x)?.0;
    }
    Ok(ZeroSet {
        nu,
        zeros,
        accuracy,
    })
}

type Bracket = (f64, f64, f64, f64);

fn scan(
    f: &impl Fn(f64) -> Result<(f64, f64)>,
    x: &mut f64,
    fx: &mut f64,
    nu: f64,
) -> Result<Bracket> {
    let start = *x;
    while *x < start + 4.0 * PI {
        let next = *x + SCAN_STEP;
        let fnext = f(next)?.0;
        if *fx == 0.0 || *fx * fnext < 0.0 {
            let br = (*x, *fx, next, fnext);
            *x = next;
            *fx = fnext;
            return Ok(br);
        }
        *x = next;
        *fx = fnext;
    }
    Err(Error::Bracket(format!(
        "no sign change of J_{nu} on [{start}, {x}] (step π/8)"
    )))
}

fn polish(nu: f64, mut a: f64, fa: f64, mut b: f64, fb: f64, seed: f64) -> Result<(f64, f64)> {
    if fa == 0.0 {
        return Ok((a, 0.0));
    }
    if fb == 0.0 {
        return Ok((b, 0.0));
    }
    let sign_a = fa.signum();
    let mut x = if seed > a && seed < b {
        seed
    } else {
        0.5 * (a + b)
    };
    for _ in 0..200 {
        let (j, j1) = bessel_j_pair(nu, x)?;
        if j == 0.0 {
            return Ok((x, f64::EPSILON * x));
        }
        if j.signum() == sign_a {
            a = x;
        } else {
            b = x;
        }
        let dj = nu / x * j - j1;
        let newton = x - j / dj;
        let next = if dj != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        let step = (next - x).abs();
        x = next;
        if step <= 2.0 * f64::EPSILON * x || b - a <= 2.0 * f64::EPSILON * x {
            return refine(nu, x);
        }
    }
    Err(Error::Bracket(format!(
        "root polish for J_{nu} did not converge in [{a}, {b}]"
    )))
}

/// Final unguarded Newton steps, kept only while `|J|` decreases.
fn refine(nu: f64, mut x: f64) -> Result<(f64, f64)> {
    let (mut j, mut j1) = bessel_j_pair(nu, x)?;
    for _ in 0..4 {
        let dj = nu / x * j - j1;
        if j == 0.0 || dj == 0.0 {
            break;
        }
        let next = x - j / dj;
        let (jn, j1n) = bessel_j_pair(nu, next)?;
        if jn.abs() >= j.abs() {
            break;
        }
        (x, j, j1) = (next, jn, j1n);
    }
    let dj = nu / x * j - j1;
    Ok((x, (j / dj).abs() + f64::EPSILON * x))
}
