//! Coefficient rings for phase-space polynomials.
//!
//! Three rings are used: `f64` for numerically obtained objects, exact
//! rationals for integer-valued test fixtures, and [`Sym`], Laurent
//! polynomials in the oscillator parameters `m` and `ω` with rational
//! coefficients. Every quantity appearing in the four oscillator pairs
//! (`1/m`, `mω²`, `1/(mω)`, ...) is a Laurent monomial, so brackets and
//! vector fields built from them stay exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::params::PhysParams;

/// Ring operations needed by [`Polynomial`](super::Polynomial).
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Numeric value at the given physical parameters.
    fn to_f64(&self, params: &PhysParams) -> f64;
}

impl Coefficient for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self, _: &PhysParams) -> f64 {
        *self
    }
}

impl Coefficient for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn to_f64(&self, _: &PhysParams) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Laurent polynomial in `m` and `ω`: a sum of `c · m^a · ω^b` with rational
/// `c` and integer (possibly negative) `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sym {
    terms: BTreeMap<(i32, i32), Rational64>,
}

impl Sym {
    pub fn monomial(coeff: Rational64, m_pow: i32, omega_pow: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((m_pow, omega_pow), coeff);
        }
        Self { terms }
    }

    pub fn rational(numer: i64, denom: i64) -> Self {
        Self::monomial(Rational64::new(numer, denom), 0, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// The mass `m`.
    pub fn m() -> Self {
        Self::monomial(Rational64::one(), 1, 0)
    }

    /// The angular frequency `ω`.
    pub fn omega() -> Self {
        Self::monomial(Rational64::one(), 0, 1)
    }

    /// `m^a ω^b` with unit coefficient.
    pub fn power(m_pow: i32, omega_pow: i32) -> Self {
        Self::monomial(Rational64::one(), m_pow, omega_pow)
    }

    /// Multiplies by `m^a ω^b`.
    pub fn shifted(&self, m_pow: i32, omega_pow: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + m_pow, b + omega_pow), *c))
                .collect(),
        }
    }

    /// Terms as `((m power, ω power), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), Rational64)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn eval(&self, params: &PhysParams) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                ToPrimitive::to_f64(c).unwrap_or(f64::NAN) * params.m.powi(a) * params.omega.powi(b)
            })
            .sum()
    }

    fn insert_add(&mut self, key: (i32, i32), value: Rational64) {
        let entry = self.terms.entry(key).or_insert_with(Rational64::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Coefficient for Sym {
    fn from_i64(n: i64) -> Self {
        Sym::integer(n)
    }

    fn to_f64(&self, params: &PhysParams) -> f64 {
        self.eval(params)
    }
}

impl From<Rational64> for Sym {
    fn from(r: Rational64) -> Self {
        Sym::monomial(r, 0, 0)
    }
}

impl Zero for Sym {
    fn zero() -> Self {
        Sym::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Sym {
    fn one() -> Self {
        Sym::integer(1)
    }
}

impl Add for Sym {
    type Output = Sym;

    fn add(mut self, rhs: Sym) -> Sym {
        for (k, v) in rhs.terms {
            self.insert_add(k, v);
        }
        self
    }
}

impl Sub for Sym {
    type Output = Sym;

    fn sub(self, rhs: Sym) -> Sym {
        self + (-rhs)
    }
}

impl Neg for Sym {
    type Output = Sym;

    fn neg(mut self) -> Sym {
        for v in self.terms.values_mut() {
            *v = -*v;
        }
        self
    }
}

impl Mul for Sym {
    type Output = Sym;

    fn mul(self, rhs: Sym) -> Sym {
        let mut out = Sym::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, name: &str, pow: i32) -> fmt::Result {
    match pow {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        p => write!(f, "{name}^{p}"),
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let multi = self.terms.len() > 1;
        if multi {
            write!(f, "(")?;
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let c = c.abs();
            let bare = a == 0 && b == 0;
            if !c.is_one() || bare {
                write!(f, "{c}")?;
                if !bare {
                    write!(f, "*")?;
                }
            }
            fmt_power(f, "m", a)?;
            if a != 0 && b != 0 {
                write!(f, "*")?;
            }
            fmt_power(f, "ω", b)?;
        }
        if multi {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_products_cancel_exactly() {
        // (1/(mω)) · mω = 1
        let inv = Sym::power(-1, -1);
        let prod = inv * Sym::m() * Sym::omega();
        assert_eq!(prod, Sym::one());
        let diff = Sym::power(1, 2) - Sym::m() * Sym::omega() * Sym::omega();
        assert!(diff.is_zero());
    }

    #[test]
    fn evaluates_at_params() {
        let p = PhysParams::new(2.0, 3.0, 1.0).unwrap();
        let s = Sym::rational(1, 2) * Sym::power(1, 2) + Sym::power(-1, 0);
        assert!((s.eval(&p) - (9.0 + 0.5)).abs() < 1e-14);
    }

    #[test]
    fn display() {
        assert_eq!(Sym::power(-1, -1).to_string(), "m^-1*ω^-1");
        assert_eq!((-Sym::rational(1, 2)).to_string(), "-1/2");
        assert_eq!(Sym::zero().to_string(), "0");
    }
}
