//! Even zeta values from the closed forms: `J_{1/2}(ξ) ∝ sin ξ / √ξ` has zeros
//! `kπ`, so `ζ(2p) = π^{2p} σ(p, 1/2)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::closed_form::SigmaTable;
use crate::error::{Error, Result};
use crate::rational::{frac, parse_rational, Rational};

/// `ζ(2p) = coefficient · π^{2p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaValue {
    pub two_p: u32,
    pub coefficient: Rational,
    /// Prime factorization of the coefficient's denominator, primes ascending.
    pub factored_denominator: Vec<(u64, u32)>,
    /// Whatever trial division up to 10^6 could not split (1 when fully factored).
    pub unfactored: BigInt,
}

const TRIAL_LIMIT: u64 = 1_000_000;

const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";

impl ZetaValue {
    /// Binary64 value, with π taken to 50 digits before rounding once.
    pub fn to_f64(&self) -> f64 {
        let pi = parse_rational(PI_50).expect("constant parses");
        let v = &self.coefficient * num_traits::Pow::pow(pi, self.two_p);
        v.to_f64().unwrap_or(f64::NAN)
    }

    /// Multiplies the factorization back out.
    pub fn denominator_product(&self) -> BigInt {
        self.factored_denominator
            .iter()
            .fold(self.unfactored.clone(), |acc, &(q, e)| {
                acc * num_traits::Pow::pow(BigInt::from(q), e)
            })
    }
}

impl fmt::Display for ZetaValue {
    /// `zeta(12) = 691 * pi^12 / (3^6 * 5^3 * 7^2 * 11 * 13)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({}) = ", self.two_p)?;
        let numer = self.coefficient.numer();
        if !numer.is_one() {
            write!(f, "{numer} * ")?;
        }
        write!(f, "pi^{}", self.two_p)?;
        let mut parts: Vec<String> = self
            .factored_denominator
            .iter()
            .map(|&(q, e)| {
                if e == 1 {
                    q.to_string()
                } else {
                    format!("{q}^{e}")
                }
            })
            .collect();
        if !self.unfactored.is_one() {
            parts.push(self.unfactored.to_string());
        }
        if !parts.is_empty() {
            write!(f, " / ({})", parts.join(" * "))?;
        }
        Ok(())
    }
}

/// Trial division by 2 and odd numbers up to 10^6.
fn factor(n: &BigInt) -> (Vec<(u64, u32)>, BigInt) {
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // a cofactor below d² has no divisor left to find, so it is prime
    if let Some(r) = rest.to_u64() {
        if r > 1 && (r as u128) < (d as u128) * (d as u128) {
            out.push((r, 1));
            rest = BigInt::one();
        }
    }
    (out, rest)
}

pub fn zeta_even(p: u32, table: &mut SigmaTable) -> Result<ZetaValue> {
    if p == 0 {
        return Err(Error::InvalidOrder(p));
    }
    let coefficient = table.sigma(p)?.eval(&frac(1, 2))?;
    let (factored_denominator, unfactored) = factor(coefficient.denom());
    Ok(ZetaValue {
        two_p: 2 * p,
        coefficient,
        factored_denominator,
        unfactored,
    })
}

/// Sum of `ξ^{-2p}` over the positive zeros of the spherical Bessel function
/// `j_ν(ξ) = √(π/2ξ) J_{ν+1/2}(ξ)`.
pub fn spherical_sigma(p: u32, nu: &Rational, table: &mut SigmaTable) -> Result<Rational> {
    table.sigma(p)?.eval(&(nu + frac(1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn zeta_two_and_four() {
        let mut t = SigmaTable::new();
        let z2 = zeta_even(1, &mut t).unwrap();
        assert_eq!(z2.coefficient, frac(1, 6));
        assert_eq!(z2.to_string(), "zeta(2) = pi^2 / (2 * 3)");
        let z4 = zeta_even(2, &mut t).unwrap();
        assert_eq!(z4.coefficient, frac(1, 90));
        assert!((z4.to_f64() - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-15);
    }

    #[test]
    fn zeta_twelve_and_fourteen() {
        let mut t = SigmaTable::new();
        let z12 = zeta_even(6, &mut t).unwrap();
        assert_eq!(z12.coefficient, frac(691, 729 * 125 * 49 * 11 * 13));
        assert_eq!(
            z12.factored_denominator,
            vec![(3, 6), (5, 3), (7, 2), (11, 1), (13, 1)]
        );
        assert_eq!(
            z12.to_string(),
            "zeta(12) = 691 * pi^12 / (3^6 * 5^3 * 7^2 * 11 * 13)"
        );
        let z14 = zeta_even(7, &mut t).unwrap();
        assert_eq!(z14.coefficient, frac(2, 729 * 25 * 7 * 11 * 13));
        assert_eq!(
            z14.to_string(),
            "zeta(14) = 2 * pi^14 / (3^6 * 5^2 * 7 * 11 * 13)"
        );
    }

    #[test]
    fn decreasing_toward_one() {
        let mut t = SigmaTable::new();
        let vals: Vec<f64> = (1..=10)
            .map(|p| zeta_even(p, &mut t).unwrap().to_f64())
            .collect();
        assert!(vals.windows(2).all(|w| w[0] > w[1]));
        assert!(vals.iter().all(|&v| v > 1.0));
        assert!(vals[9] - 1.0 < 1e-5);
    }

    #[test]
    fn factorization_multiplies_back() {
        let mut t = SigmaTable::new();
        for p in 1..=15 {
            let z = zeta_even(p, &mut t).unwrap();
            assert_eq!(&z.denominator_product(), z.coefficient.denom());
            assert!(z.unfactored.is_one());
        }
    }

    #[test]
    fn large_prime_cofactors() {
        let n = BigInt::from(4u64) * BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let (f, rest) = factor(&n);
        assert_eq!(f, vec![(2, 2)]);
        assert_eq!(rest, BigInt::from(1_000_003u64 * 1_000_033u64));
        let (f, rest) = factor(&BigInt::from(2u64 * 999_983));
        assert_eq!(f, vec![(2, 1), (999_983, 1)]);
        assert!(rest.is_one());
    }

    #[test]
    fn spherical_examples() {
        let mut t = SigmaTable::new();
        assert_eq!(spherical_sigma(1, &int(0), &mut t).unwrap(), frac(1, 6));
        assert_eq!(spherical_sigma(2, &int(0), &mut t).unwrap(), frac(1, 90));
        assert_eq!(spherical_sigma(1, &frac(1, 2), &mut t).unwrap(), frac(1, 8));
        assert!(matches!(
            spherical_sigma(1, &frac(-3, 2), &mut t),
            Err(Error::Pole(_))
        ));
    }
}
