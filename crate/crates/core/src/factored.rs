//! Rational functions whose denominator is kept as
//! `2^a · ∏ (ν+m)^{e_m} · residual`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, render_terms, Poly};
use crate::rational::{parse_rational, to_fraction_string, Rational};

/// Denominator parts produced by [`factor_shifts`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftFactorization {
    pub two_exponent: u32,
    /// `(m, e_m)`, sorted by `m`, each `e_m ≥ 1`.
    pub shift_factors: Vec<(u32, u32)>,
    pub residual: Poly,
}

impl ShiftFactorization {
    pub fn expand(&self) -> Poly {
        expand_denominator(self.two_exponent, &self.shift_factors, &self.residual)
    }
}

fn expand_denominator(two_exponent: u32, shifts: &[(u32, u32)], residual: &Poly) -> Poly {
    let mut out = residual.scale(&crate::rational::pow2(two_exponent as i64));
    for &(m, e) in shifts {
        out = &out * &Poly::shift(m as i64).pow(e);
    }
    out
}

/// Strips every factor `(ν+m)`, `1 ≤ m ≤ max_shift`, from `den` by repeated
/// exact division, then the largest power of two from what remains.
pub fn factor_shifts(den: &Poly, max_shift: u32) -> Result<ShiftFactorization> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rest = den.clone();
    let mut shift_factors = Vec::new();
    for m in 1..=max_shift {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_shift(m as i64);
            if !r.is_zero() || rest.is_constant() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            shift_factors.push((m, e));
        }
    }
    let two_exponent = rest
        .integer_content()
        .and_then(|c| c.trailing_zeros())
        .unwrap_or(0) as u32;
    let residual = rest.scale(&crate::rational::pow2(-(two_exponent as i64)));
    Ok(ShiftFactorization {
        two_exponent,
        shift_factors,
        residual,
    })
}

/// `numerator / (2^a · ∏(ν+m)^{e_m} · residual)`.
///
/// Canonical form: numerator and denominator coprime, the shift product monic,
/// the numerator an integer polynomial whose content and sign carry the
/// numerator of the overall rational scale, and `2^a · residual` its
/// denominator. Two equal rational functions therefore compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FactoredWire", into = "FactoredWire")]
pub struct FactoredRationalFn {
    numerator: Poly,
    two_exponent: u32,
    shift_factors: Vec<(u32, u32)>,
    residual: Poly,
}

impl FactoredRationalFn {
    /// Assembles parts without reducing them. Checks the structural
    /// invariants that are cheap to check (integer numerator, sorted distinct
    /// shifts, nonzero residual); coprimality is left to [`Self::is_reduced`].
    pub fn from_parts(
        numerator: Poly,
        two_exponent: u32,
        shift_factors: Vec<(u32, u32)>,
        residual: Poly,
    ) -> Result<Self> {
        if !numerator.is_integral() {
            return Err(Error::Table(
                "numerator has non-integer coefficients".into(),
            ));
        }
        if residual.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if shift_factors.iter().any(|&(m, e)| m == 0 || e == 0)
            || shift_factors.windows(2).any(|w| w[0].0 >= w[1].0)
        {
            return Err(Error::Table(format!(
                "shift factors must be positive and strictly increasing in m: {shift_factors:?}"
            )));
        }
        Ok(FactoredRationalFn {
            numerator,
            two_exponent,
            shift_factors,
            residual,
        })
    }

    /// Reduces `num / den` to canonical form, factoring `(ν+m)` for
    /// `m ≤ max_shift` out of the denominator.
    pub fn from_ratio(num: &Poly, den: &Poly, max_shift: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_scaled(
                Rational::zero(),
                Poly::zero(),
                Vec::new(),
                Poly::one(),
            ));
        }
        let g = poly_gcd(num, den)?;
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        let lc = d.leading().expect("nonzero").clone();
        let d = d.monic();
        let n = n.scale(&lc.recip());
        let parts = factor_shifts(&d, max_shift)?;
        let (scale, prim) = n.primitive_part();
        Ok(Self::from_scaled(
            scale,
            prim,
            parts.shift_factors,
            parts.residual,
        ))
    }

    /// `scale · prim / (∏ shifts · monic_rest)` with `prim` primitive. The
    /// scale's numerator goes to the numerator, its denominator is split into
    /// a power of two and an odd residual constant.
    pub(crate) fn from_scaled(
        scale: Rational,
        prim: Poly,
        shift_factors: Vec<(u32, u32)>,
        monic_rest: Poly,
    ) -> Self {
        if scale.is_zero() {
            return FactoredRationalFn {
                numerator: Poly::zero(),
                two_exponent: 0,
                shift_factors: Vec::new(),
                residual: Poly::one(),
            };
        }
        let w = scale.denom().clone();
        let a = w.trailing_zeros().unwrap_or(0);
        let odd = &w >> a;
        FactoredRationalFn {
            numerator: prim.scale(&Rational::from_integer(scale.numer().clone())),
            two_exponent: a as u32,
            shift_factors,
            residual: monic_rest.scale(&Rational::from_integer(odd)),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn two_exponent(&self) -> u32 {
        self.two_exponent
    }

    pub fn shift_factors(&self) -> &[(u32, u32)] {
        &self.shift_factors
    }

    pub fn residual(&self) -> &Poly {
        &self.residual
    }

    /// Multiplicity of `(ν+m)` in the denominator.
    pub fn shift_exponent(&self, m: u32) -> u32 {
        self.shift_factors
            .iter()
            .find(|&&(k, _)| k == m)
            .map_or(0, |&(_, e)| e)
    }

    pub fn denominator(&self) -> Poly {
        expand_denominator(self.two_exponent, &self.shift_factors, &self.residual)
    }

    /// Gcd of the numerator's integer coefficients.
    pub fn numerator_content(&self) -> BigInt {
        self.numerator
            .integer_content()
            .unwrap_or_else(BigInt::zero)
    }

    /// Numerator and expanded denominator are coprime. A shift factor
    /// `(ν+m)` divides the numerator exactly when the numerator vanishes at
    /// `-m`; only a non-constant residual needs a polynomial gcd.
    pub fn is_reduced(&self) -> bool {
        let shares_shift = self.shift_factors.iter().any(|&(m, _)| {
            self.numerator
                .eval(&Rational::from_integer(-BigInt::from(m)))
                .is_zero()
        });
        if shares_shift {
            return false;
        }
        if self.residual.is_constant() {
            return true;
        }
        matches!(poly_gcd(&self.numerator, &self.residual), Ok(g) if g.degree() == Some(0))
    }

    /// Exact value at `nu`.
    pub fn eval(&self, nu: &Rational) -> Result<Rational> {
        let mut den = self.residual.eval(nu);
        for &(m, e) in &self.shift_factors {
            let f = nu + Rational::from_integer(m.into());
            if f.is_zero() {
                return Err(Error::Pole(nu.clone()));
            }
            den *= num_traits::Pow::pow(f, e);
        }
        if den.is_zero() {
            return Err(Error::Pole(nu.clone()));
        }
        den *= crate::rational::pow2(self.two_exponent as i64);
        Ok(self.numerator.eval(nu) / den)
    }

    /// Binary64 value, factor by factor so large exponents do not overflow
    /// before the division.
    pub fn eval_f64(&self, nu: f64) -> f64 {
        let mut log_den = self.two_exponent as f64 * std::f64::consts::LN_2;
        let mut sign = 1.0;
        for &(m, e) in &self.shift_factors {
            let f = nu + m as f64;
            if f < 0.0 && e % 2 == 1 {
                sign = -sign;
            }
            log_den += e as f64 * f.abs().ln();
        }
        sign * self.numerator.eval_f64(nu) / self.residual.eval_f64(nu) * (-log_den).exp()
    }

    /// Plain text with `v` for ν, e.g. `1 / (2^2 (v+1))`.
    pub fn to_text(&self) -> String {
        let num = self.numerator.to_string();
        let num = if nonzero_terms(&self.numerator) > 1 {
            format!("({num})")
        } else {
            num
        };
        let mut parts = Vec::new();
        if let Some(c) = self.residual.as_constant() {
            if !c.is_one() {
                parts.push(to_fraction_string(&c));
            }
        }
        match self.two_exponent {
            0 => {}
            1 => parts.push("2".into()),
            a => parts.push(format!("2^{a}")),
        }
        for &(m, e) in &self.shift_factors {
            parts.push(match e {
                1 => format!("(v+{m})"),
                _ => format!("(v+{m})^{e}"),
            });
        }
        if !self.residual.is_constant() {
            parts.push(format!("({})", self.residual));
        }
        if parts.is_empty() {
            num
        } else {
            format!("{num} / ({})", parts.join(" "))
        }
    }

    /// LaTeX in the usual display layout, e.g.
    /// `\frac{1}{2^{4}(\nu+1)^{2}(\nu+2)}`.
    pub fn to_latex(&self) -> String {
        let num = latex_poly(&self.numerator);
        let mut constants = Vec::new();
        if let Some(c) = self.residual.as_constant() {
            if !c.is_one() {
                constants.push(latex_rational(&c));
            }
        }
        match self.two_exponent {
            0 => {}
            1 => constants.push("2".into()),
            a => constants.push(format!("2^{{{a}}}")),
        }
        let mut den = constants.join(r"\cdot ");
        for &(m, e) in &self.shift_factors {
            den.push_str(&match e {
                1 => format!(r"(\nu+{m})"),
                _ => format!(r"(\nu+{m})^{{{e}}}"),
            });
        }
        if !self.residual.is_constant() {
            den.push_str(&format!("({})", latex_poly(&self.residual)));
        }
        if den.is_empty() {
            num
        } else {
            format!(r"\frac{{{num}}}{{{den}}}")
        }
    }
}

impl fmt::Display for FactoredRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn nonzero_terms(p: &Poly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!(r"{sign}\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn latex_poly(p: &Poly) -> String {
    if p.is_integral() {
        render_terms(p, r"\nu", |e| format!("^{{{e}}}"), "", "+", "-")
    } else {
        // clear denominators so the output stays a single fraction-free line
        let (c, prim) = p.primitive_part();
        format!("{}\\left({}\\right)", latex_rational(&c), latex_poly(&prim))
    }
}

/// JSON layout: coefficients (low to high power) as decimal strings,
/// shift factors as `[m, e]` pairs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct FactoredWire {
    numerator: Vec<String>,
    two_exponent: u32,
    shift_factors: Vec<[u32; 2]>,
    residual: Vec<String>,
}

impl From<FactoredRationalFn> for FactoredWire {
    fn from(f: FactoredRationalFn) -> Self {
        let strings = |p: &Poly| p.coeffs().iter().map(to_fraction_string).collect();
        FactoredWire {
            numerator: strings(&f.numerator),
            two_exponent: f.two_exponent,
            shift_factors: f.shift_factors.iter().map(|&(m, e)| [m, e]).collect(),
            residual: strings(&f.residual),
        }
    }
}

impl TryFrom<FactoredWire> for FactoredRationalFn {
    type Error = Error;

    fn try_from(w: FactoredWire) -> Result<Self> {
        let parse = |v: &[String]| -> Result<Poly> {
            Ok(Poly::new(
                v.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?,
            ))
        };
        FactoredRationalFn::from_parts(
            parse(&w.numerator)?,
            w.two_exponent,
            w.shift_factors.iter().map(|&[m, e]| (m, e)).collect(),
            parse(&w.residual)?,
        )
    }
}
