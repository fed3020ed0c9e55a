//! Ratio expansion of `J_{ν+p}/J_{ν+1}` at the zeros of `J_ν`, and the
//! triangular solve that turns it into exact closed forms for `σ(p, ν)`.
//!
//! At a zero `ξ` of `J_ν` the Bessel recurrence collapses to
//!
//! ```text
//! J_{ν+p}(ξ) / J_{ν+1}(ξ) = Σ_{q=0}^{q_M} (-1)^q C(p-1-q, q) (ν+q+1)_{p-1-2q} (2/ξ)^{p-1-2q}
//! ```
//!
//! and summing against `ξ^{-(p+1)}` over all zeros gives one linear equation
//! per `p` in `σ(p), σ(p-1), …, σ(p-q_M)`. The leading unknown has
//! coefficient `2^p (ν+1)…(ν+p-1)`, so the system is solved top-down from the
//! already known lower sums.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factored::FactoredRationalFn;
use crate::poly::Poly;
use crate::rational::{pow2, Rational};

/// `Γ(ν+upper)/Γ(ν+lower) = ∏_{i=lower}^{upper-1} (ν+i)`.
pub fn gamma_ratio_poly(upper_shift: i64, lower_shift: i64) -> Result<Poly> {
    if lower_shift < 0 || upper_shift < lower_shift {
        return Err(Error::NotAPolynomial {
            upper: upper_shift,
            lower: lower_shift,
        });
    }
    Ok((lower_shift..upper_shift).fold(Poly::one(), |acc, i| &acc * &Poly::shift(i)))
}

/// Highest `q` in the ratio expansion: `(p-1)/2` for odd `p`, `(p-2)/2` for even.
pub fn q_max(p: u32) -> u32 {
    if p % 2 == 1 {
        (p - 1) / 2
    } else {
        (p - 2) / 2
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `[(p-1)-q]! / ([(p-1)-2q]! q!)`, always an integer.
fn factorial_weight(p: u32, q: u32) -> BigInt {
    factorial(p - 1 - q) / (factorial(p - 1 - 2 * q) * factorial(q))
}

/// Coefficient of `(2/ξ)^{(p-1)-2q}` in the ratio expansion.
pub fn ratio_coefficient(p: u32, q: u32) -> Result<Poly> {
    if p == 0 {
        return Err(Error::InvalidOrder(p));
    }
    let q_max = q_max(p);
    if q > q_max {
        return Err(Error::QOutOfRange { p, q, q_max });
    }
    let mut w = Rational::from_integer(factorial_weight(p, q));
    if q % 2 == 1 {
        w = -w;
    }
    Ok(gamma_ratio_poly((p - q) as i64, (q + 1) as i64)?.scale(&w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioTerm {
    pub q: u32,
    pub coeff: Poly,
    /// Exponent of `2/ξ`.
    pub power: u32,
}

/// `J_{ν+p}(ξ)/J_{ν+1}(ξ) = Σ coeff_q(ν) (2/ξ)^{power_q}` at any zero `ξ` of `J_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioExpansion {
    pub p: u32,
    pub terms: Vec<RatioTerm>,
}

impl RatioExpansion {
    pub fn eval_f64(&self, nu: f64, xi: f64) -> f64 {
        let t = 2.0 / xi;
        self.terms
            .iter()
            .map(|term| term.coeff.eval_f64(nu) * t.powi(term.power as i32))
            .sum()
    }

    /// Exact value for rational `ν` and `1/ξ`.
    pub fn eval_exact(&self, nu: &Rational, inv_xi: &Rational) -> Rational {
        let t = inv_xi * Rational::from_integer(2.into());
        self.terms
            .iter()
            .map(|term| term.coeff.eval(nu) * num_traits::Pow::pow(&t, term.power))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

pub fn build_ratio_expansion(p: u32) -> Result<RatioExpansion> {
    if p == 0 {
        return Err(Error::InvalidOrder(p));
    }
    let terms = (0..=q_max(p))
        .map(|q| {
            Ok(RatioTerm {
                q,
                coeff: ratio_coefficient(p, q)?,
                power: p - 1 - 2 * q,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioExpansion { p, terms })
}

/// Memoized `σ(1), σ(2), …` with contiguous keys starting at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigmaTable {
    entries: Vec<FactoredRationalFn>,
}

impl SigmaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Wraps previously derived entries for `p = 1, 2, …`. Only the shape of
    /// the `p = 1` entry is checked here; callers that need more should
    /// compare against a fresh derivation.
    pub fn from_entries(entries: Vec<FactoredRationalFn>) -> Result<Self> {
        if let Some(first) = entries.first() {
            if *first != sigma_one() {
                return Err(Error::Table(format!(
                    "entry for p = 1 is {first}, expected 1 / (2^2 (v+1))"
                )));
            }
        }
        Ok(SigmaTable { entries })
    }

    pub fn p_max(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: u32) -> Option<&FactoredRationalFn> {
        p.checked_sub(1).and_then(|i| self.entries.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &FactoredRationalFn)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, f)| (i as u32 + 1, f))
    }

    /// Derives every missing entry up to `p` and returns `σ(p)`.
    pub fn sigma(&mut self, p: u32) -> Result<&FactoredRationalFn> {
        if p == 0 {
            return Err(Error::InvalidOrder(p));
        }
        while self.p_max() < p {
            let next = solve_next(self)?;
            self.entries.push(next);
        }
        Ok(&self.entries[p as usize - 1])
    }
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    p: u32,
    sigma: FactoredRationalFn,
}

impl Serialize for SigmaTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (p, f) in self.iter() {
            seq.serialize_element(&TableEntry {
                p,
                sigma: f.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SigmaTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TableEntry>::deserialize(d)?;
        for (i, e) in raw.iter().enumerate() {
            if e.p != i as u32 + 1 {
                return Err(D::Error::custom(format!(
                    "table keys must be 1..p_max in order; found p = {} at position {}",
                    e.p,
                    i + 1
                )));
            }
        }
        SigmaTable::from_entries(raw.into_iter().map(|e| e.sigma).collect())
            .map_err(D::Error::custom)
    }
}

fn sigma_one() -> FactoredRationalFn {
    FactoredRationalFn::from_parts(Poly::one(), 2, vec![(1, 1)], Poly::one()).expect("valid shape")
}

/// Exact `σ(p, ν)`, extending `table` through `p` as needed.
pub fn derive_sigma(table: &mut SigmaTable, p: u32) -> Result<FactoredRationalFn> {
    table.sigma(p).cloned()
}

pub fn eval_sigma_exact(f: &FactoredRationalFn, nu: &Rational) -> Result<Rational> {
    f.eval(nu)
}

/// `scale · num(ν) / ∏ (ν+m)^{e_m}` with an integer numerator. Working over
/// the integers with the shift product kept factored avoids both rational
/// coefficient normalization and polynomial gcds: the only possible common
/// factors are the `(ν+m)` themselves, found by evaluating at `-m`.
#[derive(Clone, Debug)]
struct ShiftFrac {
    scale: Rational,
    num: Vec<BigInt>,
    shifts: BTreeMap<u32, u32>,
}

impl ShiftFrac {
    fn from_factored(f: &FactoredRationalFn) -> Result<Self> {
        let residual = f.residual().as_constant().ok_or_else(|| {
            Error::Table(format!(
                "σ entry has a non-constant residual denominator: {f}"
            ))
        })?;
        Ok(ShiftFrac {
            scale: (pow2(f.two_exponent() as i64) * residual).recip(),
            num: f
                .numerator()
                .coeffs()
                .iter()
                .map(|c| c.to_integer())
                .collect(),
            shifts: f.shift_factors().iter().copied().collect(),
        })
    }

    /// Multiplies by `(ν+m)`, cancelling against the denominator when possible.
    fn mul_shift(&mut self, m: u32) {
        match self.shifts.get_mut(&m) {
            Some(e) if *e > 0 => *e -= 1,
            _ => mul_linear(&mut self.num, m),
        }
    }

    fn reduce(&mut self) {
        for (&m, e) in self.shifts.iter_mut() {
            while *e > 0 && eval_at_neg(&self.num, m).is_zero() {
                self.num = div_linear(&self.num, m);
                *e -= 1;
            }
        }
        self.shifts.retain(|_, e| *e > 0);
        let mut g = self.num.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if self.num.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.scale *= Rational::from_integer(g);
        }
    }

    fn into_factored(self) -> FactoredRationalFn {
        let prim = Poly::from_bigints(self.num.iter());
        FactoredRationalFn::from_scaled(
            self.scale,
            prim,
            self.shifts.into_iter().collect(),
            Poly::one(),
        )
    }
}

/// Σ terms over their common shift denominator.
fn sum(terms: Vec<ShiftFrac>) -> ShiftFrac {
    let mut common: BTreeMap<u32, u32> = BTreeMap::new();
    for t in &terms {
        for (&m, &e) in &t.shifts {
            let c = common.entry(m).or_insert(0);
            *c = (*c).max(e);
        }
    }
    let lcm = terms
        .iter()
        .fold(BigInt::one(), |l, t| l.lcm(t.scale.denom()));
    let lcm_r = Rational::from_integer(lcm.clone());
    let mut acc: Vec<BigInt> = Vec::new();
    for t in terms {
        let mut num = t.num;
        for (&m, &e) in &common {
            for _ in t.shifts.get(&m).copied().unwrap_or(0)..e {
                mul_linear(&mut num, m);
            }
        }
        let mult = (&t.scale * &lcm_r).to_integer();
        if acc.len() < num.len() {
            acc.resize(num.len(), BigInt::zero());
        }
        for (a, c) in acc.iter_mut().zip(num) {
            *a += c * &mult;
        }
    }
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    ShiftFrac {
        scale: Rational::new(BigInt::one(), lcm),
        num: acc,
        shifts: common,
    }
}

fn mul_linear(num: &mut Vec<BigInt>, m: u32) {
    let m = BigInt::from(m);
    num.push(BigInt::zero());
    // new[i] = old[i-1] + m·old[i]; walking down keeps old[i-1] intact
    for i in (0..num.len()).rev() {
        let below = if i > 0 {
            num[i - 1].clone()
        } else {
            BigInt::zero()
        };
        num[i] = &num[i] * &m + below;
    }
}

fn eval_at_neg(num: &[BigInt], m: u32) -> BigInt {
    let x = -BigInt::from(m);
    num.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// Exact quotient by `(ν+m)`; caller guarantees divisibility.
fn div_linear(num: &[BigInt], m: u32) -> Vec<BigInt> {
    let x = -BigInt::from(m);
    let n = num.len();
    let mut quot = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for i in (1..n).rev() {
        carry = &num[i] + &carry * &x;
        quot[i - 1] = carry.clone();
    }
    quot
}

/// One step of the triangular solve:
///
/// ```text
/// σ(p) = [ 1/(2^{2p} ∏_{i=1}^{p}(ν+i)) − Σ_{q=1}^{q_M} (−1)^q 2^{−2q} c_q(ν) σ(p−q) ] / ∏_{i=1}^{p−1}(ν+i)
/// ```
///
/// with `c_q(ν) = C(p−1−q, q) ∏_{i=q+1}^{p−q−1}(ν+i)`.
fn solve_next(table: &SigmaTable) -> Result<FactoredRationalFn> {
    let p = table.p_max() + 1;
    let mut terms = Vec::with_capacity(q_max(p) as usize + 1);
    terms.push(ShiftFrac {
        scale: pow2(-2 * p as i64),
        num: vec![BigInt::one()],
        shifts: (1..=p).map(|i| (i, 1)).collect(),
    });
    for q in 1..=q_max(p) {
        let lower = table
            .get(p - q)
            .ok_or_else(|| Error::Table(format!("missing σ({})", p - q)))?;
        let mut t = ShiftFrac::from_factored(lower)?;
        let mut w = Rational::from_integer(factorial_weight(p, q)) * pow2(-2 * q as i64);
        if q % 2 == 0 {
            w = -w;
        }
        t.scale *= w;
        for i in q + 1..p - q {
            t.mul_shift(i);
        }
        terms.push(t);
    }
    let mut total = sum(terms);
    for i in 1..p {
        *total.shifts.entry(i).or_insert(0) += 1;
    }
    total.reduce();
    Ok(total.into_factored())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_gcd;
    use crate::rational::{frac, int};

    fn shifts(p: &[(u32, u32)]) -> Vec<(u32, u32)> {
        p.to_vec()
    }

    fn golden(num: &[i64], a: u32, s: &[(u32, u32)]) -> FactoredRationalFn {
        FactoredRationalFn::from_parts(
            Poly::from_ints(num.iter().copied()),
            a,
            shifts(s),
            Poly::one(),
        )
        .unwrap()
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio_poly(2, 1).unwrap(), Poly::shift(1));
        assert_eq!(gamma_ratio_poly(3, 3).unwrap(), Poly::one());
        let iterated = [1, 2, 3]
            .iter()
            .fold(Poly::one(), |acc, &i| &acc * &Poly::shift(i));
        assert_eq!(gamma_ratio_poly(4, 1).unwrap(), iterated);
        assert_eq!(
            gamma_ratio_poly(4, 1).unwrap(),
            Poly::from_ints([6, 11, 6, 1])
        );
        assert_eq!(
            gamma_ratio_poly(1, 2),
            Err(Error::NotAPolynomial { upper: 1, lower: 2 })
        );
        assert!(gamma_ratio_poly(1, -1).is_err());
    }

    #[test]
    fn q_max_parity_rule() {
        let got: Vec<u32> = (1..=8).map(q_max).collect();
        assert_eq!(got, vec![0, 0, 1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn ratio_coefficient_examples() {
        assert_eq!(ratio_coefficient(1, 0).unwrap(), Poly::one());
        assert_eq!(ratio_coefficient(2, 0).unwrap(), Poly::shift(1));
        assert_eq!(
            ratio_coefficient(3, 0).unwrap(),
            &Poly::shift(1) * &Poly::shift(2)
        );
        assert_eq!(ratio_coefficient(3, 1).unwrap(), Poly::from_ints([-1]));
        assert_eq!(
            ratio_coefficient(3, 2),
            Err(Error::QOutOfRange {
                p: 3,
                q: 2,
                q_max: 1
            })
        );
        assert_eq!(ratio_coefficient(0, 0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn ratio_expansion_shapes() {
        let e1 = build_ratio_expansion(1).unwrap();
        assert_eq!(
            e1.terms,
            vec![RatioTerm {
                q: 0,
                coeff: Poly::one(),
                power: 0
            }]
        );
        let e2 = build_ratio_expansion(2).unwrap();
        assert_eq!(
            e2.terms,
            vec![RatioTerm {
                q: 0,
                coeff: Poly::shift(1),
                power: 1
            }]
        );
        let e4 = build_ratio_expansion(4).unwrap();
        assert_eq!(
            e4.terms.iter().map(|t| t.power).collect::<Vec<_>>(),
            vec![3, 1]
        );
        // p = 4: J_{ν+4}/J_{ν+1} = 2^3 (ν+1)(ν+2)(ν+3)/ξ^3 − 2·2(ν+2)/ξ
        assert_eq!(e4.terms[1].coeff, Poly::from_ints([-4, -2]));
        for p in 1..30 {
            let e = build_ratio_expansion(p).unwrap();
            assert_eq!(
                e.terms.last().unwrap().power,
                if p % 2 == 1 { 0 } else { 1 }
            );
            assert!(e.terms.windows(2).all(|w| w[0].power == w[1].power + 2));
        }
        assert!(build_ratio_expansion(0).is_err());
    }

    #[test]
    fn ratio_expansion_exact_eval_p3() {
        // 2^2 (ν+2)(ν+1)/ξ^2 − 1 at ν = 1/2, ξ = 3
        let e = build_ratio_expansion(3).unwrap();
        let v = e.eval_exact(&frac(1, 2), &frac(1, 3));
        assert_eq!(v, frac(4, 9) * frac(5, 2) * frac(3, 2) - int(1));
        assert!((e.eval_f64(0.5, 3.0) - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn golden_low_orders() {
        let mut t = SigmaTable::new();
        assert_eq!(derive_sigma(&mut t, 1).unwrap(), golden(&[1], 2, &[(1, 1)]));
        assert_eq!(
            derive_sigma(&mut t, 2).unwrap(),
            golden(&[1], 4, &[(1, 2), (2, 1)])
        );
        assert_eq!(
            derive_sigma(&mut t, 3).unwrap(),
            golden(&[1], 5, &[(1, 3), (2, 1), (3, 1)])
        );
        assert_eq!(derive_sigma(&mut t, 0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn golden_six_seven_nine() {
        let mut t = SigmaTable::new();
        assert_eq!(
            derive_sigma(&mut t, 6).unwrap(),
            golden(
                &[473, 513, 181, 21],
                11,
                &[(1, 6), (2, 3), (3, 2), (4, 1), (5, 1), (6, 1)]
            )
        );
        assert_eq!(
            derive_sigma(&mut t, 7).unwrap(),
            golden(
                &[1145, 1081, 329, 33],
                12,
                &[(1, 7), (2, 3), (3, 2), (4, 1), (5, 1), (6, 1), (7, 1)]
            )
        );
        assert_eq!(
            derive_sigma(&mut t, 9).unwrap(),
            golden(
                &[1893046, 3212847, 2217079, 798074, 158568, 16567, 715],
                17,
                &[
                    (1, 9),
                    (2, 4),
                    (3, 3),
                    (4, 2),
                    (5, 1),
                    (6, 1),
                    (7, 1),
                    (8, 1),
                    (9, 1)
                ]
            )
        );
        assert_eq!(t.p_max(), 9);
    }

    #[test]
    fn exact_evaluations() {
        let mut t = SigmaTable::new();
        let s1 = derive_sigma(&mut t, 1).unwrap();
        let s2 = derive_sigma(&mut t, 2).unwrap();
        assert_eq!(eval_sigma_exact(&s1, &int(0)).unwrap(), frac(1, 4));
        assert_eq!(eval_sigma_exact(&s1, &frac(1, 2)).unwrap(), frac(1, 6));
        assert_eq!(eval_sigma_exact(&s2, &frac(1, 2)).unwrap(), frac(1, 90));
        assert_eq!(eval_sigma_exact(&s2, &int(-2)), Err(Error::Pole(int(-2))));
    }

    #[test]
    fn p9_printed_numerator_and_denominator_are_coprime() {
        let p9 = Poly::from_ints([1893046, 3212847, 2217079, 798074, 158568, 16567, 715]);
        let q9 = golden(
            &[1],
            17,
            &[
                (1, 9),
                (2, 4),
                (3, 3),
                (4, 2),
                (5, 1),
                (6, 1),
                (7, 1),
                (8, 1),
                (9, 1),
            ],
        )
        .denominator();
        assert_eq!(poly_gcd(&p9, &q9).unwrap(), Poly::one());
        let f = crate::factored::factor_shifts(&q9, 9).unwrap();
        assert_eq!(f.two_exponent, 17);
        assert_eq!(
            f.shift_factors,
            vec![
                (1, 9),
                (2, 4),
                (3, 3),
                (4, 2),
                (5, 1),
                (6, 1),
                (7, 1),
                (8, 1),
                (9, 1)
            ]
        );
        assert_eq!(f.residual, Poly::one());
    }

    /// Solves the same triangular system on fully expanded polynomials, with
    /// gcd reduction after every step.
    fn derive_expanded(p_max: u32) -> Vec<FactoredRationalFn> {
        let mut out: Vec<(Poly, Poly)> = Vec::new();
        for p in 1..=p_max {
            let lhs_den = gamma_ratio_poly(p as i64 + 1, 1)
                .unwrap()
                .scale(&pow2(2 * p as i64));
            let (mut num, mut den) = (Poly::one(), lhs_den);
            for q in 1..=q_max(p) {
                let c = ratio_coefficient(p, q).unwrap().scale(&pow2(-2 * q as i64));
                let (sn, sd) = &out[(p - q) as usize - 1];
                // num/den − c·sn/sd
                num = &(&num * sd) - &(&(&c * sn) * &den);
                den = &den * sd;
                let g = poly_gcd(&num, &den).unwrap();
                num = num.div_rem(&g).unwrap().0;
                den = den.div_rem(&g).unwrap().0;
            }
            den = &den * &gamma_ratio_poly(p as i64, 1).unwrap();
            out.push((num, den));
        }
        out.iter()
            .map(|(n, d)| FactoredRationalFn::from_ratio(n, d, p_max).unwrap())
            .collect()
    }

    #[test]
    fn shift_arithmetic_matches_expanded_gcd_route() {
        let expanded = derive_expanded(10);
        let mut t = SigmaTable::new();
        t.sigma(10).unwrap();
        for (p, f) in t.iter() {
            assert_eq!(f, &expanded[p as usize - 1], "p = {p}");
        }
    }

    #[test]
    fn derivation_is_deterministic() {
        let mut a = SigmaTable::new();
        let mut b = SigmaTable::new();
        a.sigma(15).unwrap();
        b.sigma(8).unwrap();
        b.sigma(15).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn table_serde() {
        let mut t = SigmaTable::new();
        t.sigma(3).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(
            r#"[{"p":1,"sigma":{"numerator":["1"],"two_exponent":2,"shift_factors":[[1,1]]"#
        ));
        let back: SigmaTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let gap = s.replace(r#""p":2"#, r#""p":5"#);
        assert!(serde_json::from_str::<SigmaTable>(&gap).is_err());
        let wrong_first = golden(&[1], 3, &[(1, 1)]);
        assert!(SigmaTable::from_entries(vec![wrong_first]).is_err());
    }

    #[test]
    fn positive_on_nonnegative_axis() {
        let mut t = SigmaTable::new();
        t.sigma(20).unwrap();
        for (_, f) in t.iter() {
            for nu in [
                frac(0, 1),
                frac(1, 3),
                frac(1, 2),
                int(1),
                frac(27, 10),
                int(10),
                int(1000),
            ] {
                assert!(f.eval(&nu).unwrap() > Rational::zero());
            }
        }
    }
}
