//! Laurent polynomials over the integers, Euler characteristics of bigraded
//! tables, and Alexander polynomials of torus knots and cables.

use crate::complex::HFKTable;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Integer Laurent polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest exponent, if any.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    pub fn negate(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.negate())
    }

    pub fn multiply(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Replace t by t^k.  Negative k reverses the polynomial.
    pub fn substitute_power(&self, k: i64) -> LaurentPoly {
        if k == 0 {
            // t^0 = 1: every term collapses to the constant
            let total: BigInt = self.coeffs.values().sum();
            return if total.is_zero() { LaurentPoly::zero() } else { LaurentPoly::monomial(0, total) };
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    /// Exact division, `None` when the divisor does not divide evenly.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (_, div_hi) = divisor.span().unwrap();
        let lead = divisor.coefficient(div_hi);
        let (self_lo, self_hi) = self.span().unwrap();
        let max_steps = (self_hi - self_lo + 1) as usize;

        let mut quotient = LaurentPoly::zero();
        let mut rem = self.clone();
        for _ in 0..=max_steps {
            if rem.is_zero() {
                return Some(quotient);
            }
            let (_, rem_hi) = rem.span().unwrap();
            let (q, r) = rem.coefficient(rem_hi).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(rem_hi - div_hi, q);
            rem = rem.sub(&term.multiply(divisor));
            quotient = quotient.add(&term);
        }
        // leading terms keep cancelling without the remainder closing out, as
        // in 1 / (1 - t): not an exact division in Laurent polynomials
        None
    }

    /// Value at t = 1: the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Whether p(t) = p(1/t).
    pub fn is_symmetric(&self) -> bool {
        *self == self.substitute_power(-1)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if mag.is_one() && e != 0 { None } else { Some(mag) };
            match (coeff_part, e) {
                (Some(m), 0) => write!(f, "{m}")?,
                (Some(m), 1) => write!(f, "{m}*t")?,
                (Some(m), _) => write!(f, "{m}*t^{e}")?,
                (None, 1) => write!(f, "t")?,
                (None, _) => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("torus parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("torus index must be positive, got {0}")]
    BadIndex(i64),
}

/// Graded Euler characteristic of a table: each group contributes its free
/// rank with sign (-1)^maslov at the exponent of its Alexander grading.
/// Torsion is invisible here; [`torsion_entries`] lists where it was dropped.
pub fn euler_poly(table: &HFKTable) -> LaurentPoly {
    let mut poly = LaurentPoly::zero();
    for (a, m, group) in table.entries() {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        poly.add_term(a, BigInt::from(sign) * BigInt::from(group.free_rank() as u64));
    }
    poly
}

/// Positions of table entries with a torsion part, which the Euler
/// characteristic cannot see.
pub fn torsion_entries(table: &HFKTable) -> Vec<(i64, i64)> {
    table.entries().filter(|(_, _, g)| g.has_torsion()).map(|(a, m, _)| (a, m)).collect()
}

/// Symmetrized Alexander polynomial of the (p, q) torus knot, normalized so
/// the value at 1 is +1.  A negative q gives the mirror, whose polynomial is
/// the same after t -> 1/t; symmetry makes that a no-op.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, AlexanderError> {
    if p < 1 {
        return Err(AlexanderError::BadIndex(p));
    }
    let q_abs = q.abs();
    if p.gcd(&q_abs) != 1 {
        return Err(AlexanderError::NotCoprime { p, q });
    }
    if p == 1 || q_abs == 1 {
        return Ok(LaurentPoly::one());
    }
    let cyclo = |k: i64| LaurentPoly::monomial(k, 1).sub(&LaurentPoly::one());
    let numerator = cyclo(p * q_abs).multiply(&cyclo(1));
    let denominator = cyclo(p).multiply(&cyclo(q_abs));
    let unnormalized = numerator
        .div_exact(&denominator)
        .expect("(t^pq - 1)(t - 1) is divisible by (t^p - 1)(t^q - 1) for coprime p, q");
    let shift = -(p - 1) * (q_abs - 1) / 2;
    let delta = unnormalized.multiply(&LaurentPoly::monomial(shift, 1));
    assert!(delta.eval_at_one().is_one(), "normalization broken for ({p}, {q})");
    Ok(delta)
}

/// Alexander polynomial of the (p, q) cable with companion polynomial
/// `delta`: the companion polynomial at t^p times the torus factor.
pub fn cable_alexander(delta: &LaurentPoly, p: i64, q: i64) -> Result<LaurentPoly, AlexanderError> {
    Ok(delta.substitute_power(p).multiply(&torus_alexander(p, q)?))
}
