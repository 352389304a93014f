use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::coeff::Coefficient;
use crate::params::PhysParams;

/// Phase-space coordinate, in the fixed order `(x, y, p_x, p_y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coord {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "p_x")]
    Px,
    #[serde(rename = "p_y")]
    Py,
}

impl Coord {
    pub const ALL: [Coord; 4] = [Coord::X, Coord::Y, Coord::Px, Coord::Py];

    pub fn index(self) -> usize {
        match self {
            Coord::X => 0,
            Coord::Y => 1,
            Coord::Px => 2,
            Coord::Py => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<Coord> {
        Coord::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Coord::X => "x",
            Coord::Y => "y",
            Coord::Px => "p_x",
            Coord::Py => "p_y",
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Coord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Coord::X),
            "y" => Ok(Coord::Y),
            "p_x" | "px" => Ok(Coord::Px),
            "p_y" | "py" => Ok(Coord::Py),
            other => Err(format!("unknown coordinate `{other}`")),
        }
    }
}

/// Exponents of `(x, y, p_x, p_y)` in a monomial.
pub type Exponents = [u32; 4];

/// Multivariate polynomial in the phase-space coordinates.
///
/// Zero coefficients are never stored, so two polynomials are equal iff
/// their term maps are equal.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn coordinate(coord: Coord) -> Self {
        let mut e = [0; 4];
        e[coord.index()] = 1;
        Self::monomial(C::one(), e)
    }

    pub fn monomial(c: C, exponents: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponents: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exponents) {
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(exponents, sum);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &Exponents) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    pub fn derivative(&self, coord: Coord) -> Self {
        let i = coord.index();
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, v)| {
            let mut d = *e;
            d[i] -= 1;
            (d, v.clone() * C::from_i64(e[i] as i64))
        }))
    }

    pub fn gradient(&self) -> [Self; 4] {
        Coord::ALL.map(|c| self.derivative(c))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(e, v)| (*e, f(v))))
    }

    /// Numeric polynomial obtained by substituting the physical parameters.
    pub fn to_numeric(&self, params: &PhysParams) -> Polynomial<f64> {
        self.map_coeffs(|c| c.to_f64(params))
    }

    /// Evaluates at a phase-space point after substituting the parameters.
    pub fn eval(&self, params: &PhysParams, point: [f64; 4]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                c.to_f64(params)
                    * e.iter()
                        .zip(point.iter())
                        .map(|(&k, &v)| v.powi(k as i32))
                        .product::<f64>()
            })
            .sum()
    }
}

impl Polynomial<f64> {
    pub fn evaluate(&self, point: [f64; 4]) -> f64 {
        self.eval(&PhysParams::unit(), point)
    }

    /// Largest absolute coefficient (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |acc, c| acc.max(c.abs()))
    }

    /// Drops coefficients with magnitude at most `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self::from_terms(self.terms.iter().filter(|(_, c)| c.abs() > tol).map(|(e, c)| (*e, *c)))
    }

    /// Symmetric Hessian of the homogeneous quadratic part, so that the
    /// quadratic part equals `½ xᵀ H x`.
    pub fn quadratic_hessian(&self) -> nalgebra::Matrix4<f64> {
        let mut h = nalgebra::Matrix4::zeros();
        for (e, c) in self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == 2) {
            let idx: Vec<usize> = (0..4).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                h[(i, i)] += 2.0 * c;
            } else {
                h[(i, j)] += c;
                h[(j, i)] += c;
            }
        }
        h
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let c = c.to_string();
            match (i, c.strip_prefix('-')) {
                (0, _) => write!(f, "{c}")?,
                (_, Some(rest)) if !rest.contains(' ') => write!(f, " - {rest}")?,
                _ => write!(f, " + {c}")?,
            }
            for (k, coord) in Coord::ALL.iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => write!(f, "*{coord}")?,
                    p => write!(f, "*{coord}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Q = Polynomial<Rational64>;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let x = Q::coordinate(Coord::X);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn product_and_derivative() {
        let x = Q::coordinate(Coord::X);
        let px = Q::coordinate(Coord::Px);
        let f = &(&x * &x) * &px; // x² p_x
        assert_eq!(f.degree(), Some(3));
        let dfx = f.derivative(Coord::X);
        assert_eq!(dfx, Q::monomial(q(2), [1, 0, 1, 0]));
        assert!(f.derivative(Coord::Y).is_zero());
    }

    #[test]
    fn quadratic_hessian_matches_definition() {
        // ½(x² + 3 p_y²) + 2 x y
        let f = Polynomial::<f64>::from_terms([
            ([2, 0, 0, 0], 0.5),
            ([0, 0, 0, 2], 1.5),
            ([1, 1, 0, 0], 2.0),
        ]);
        let h = f.quadratic_hessian();
        assert_eq!(h[(0, 0)], 1.0);
        assert_eq!(h[(3, 3)], 3.0);
        assert_eq!(h[(0, 1)], 2.0);
        assert_eq!(h[(1, 0)], 2.0);
        let v = [0.3, -1.2, 0.7, 2.0];
        let xv = nalgebra::Vector4::from(v);
        assert!((0.5 * xv.dot(&(h * xv)) - f.evaluate(v)).abs() < 1e-14);
    }

    #[test]
    fn coord_parse_and_index() {
        for c in Coord::ALL {
            assert_eq!(c.name().parse::<Coord>().unwrap(), c);
            assert_eq!(Coord::from_index(c.index()), Some(c));
        }
        assert!("q".parse::<Coord>().is_err());
    }
}
