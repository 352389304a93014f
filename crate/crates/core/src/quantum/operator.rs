use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Elementary grid action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Primitive {
    /// Multiply by `x`.
    X,
    /// Multiply by `y`.
    Y,
    /// `∂/∂x`.
    Dx,
    /// `∂/∂y`.
    Dy,
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Primitive::X => "x",
            Primitive::Y => "y",
            Primitive::Dx => "∂x",
            Primitive::Dy => "∂y",
        })
    }
}

/// `coeff · F₁ ∘ F₂ ∘ … ∘ Fₖ`; the rightmost factor acts first. An empty
/// factor list is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub factors: Vec<Primitive>,
}

/// Canonical form in the Weyl algebra: key `[a, b, c, d]` stands for
/// `x^a y^b ∂x^c ∂y^d` with all multiplications to the left.
pub type NormalForm = BTreeMap<[u32; 4], Complex64>;

/// Complex linear combination of products of primitives.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorExpr {
    terms: Vec<Term>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl OperatorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(c(1.0))
    }

    pub fn scalar(coeff: Complex64) -> Self {
        Self::from_terms(vec![Term { coeff, factors: Vec::new() }])
    }

    pub fn primitive(p: Primitive) -> Self {
        Self::from_terms(vec![Term { coeff: c(1.0), factors: vec![p] }])
    }

    pub fn x() -> Self {
        Self::primitive(Primitive::X)
    }

    pub fn y() -> Self {
        Self::primitive(Primitive::Y)
    }

    pub fn dx() -> Self {
        Self::primitive(Primitive::Dx)
    }

    pub fn dy() -> Self {
        Self::primitive(Primitive::Dy)
    }

    /// Collects identical factor lists and drops exact zeros.
    pub fn from_terms(terms: Vec<Term>) -> Self {
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.iter_mut().find(|m| m.factors == t.factors) {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != c(0.0));
        Self { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|t| Term { coeff: t.coeff * k, factors: t.factors.clone() }).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OperatorExpr) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend_from_slice(&b.factors);
                terms.push(Term { coeff: a.coeff * b.coeff, factors });
            }
        }
        Self::from_terms(terms)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &OperatorExpr) -> Self {
        &self.compose(other) - &other.compose(self)
    }

    /// Half-sum of both orderings.
    pub fn symmetrized_product(&self, other: &OperatorExpr) -> Self {
        (&self.compose(other) + &other.compose(self)).scale(c(0.5))
    }

    /// Normal-ordered form using `[∂x, x] = [∂y, y] = 1`.
    pub fn normal_form(&self) -> NormalForm {
        let mut out = NormalForm::new();
        for t in &self.terms {
            let xs = axis_normal_form(t.factors.iter().filter_map(|p| match p {
                Primitive::X => Some(false),
                Primitive::Dx => Some(true),
                _ => None,
            }));
            let ys = axis_normal_form(t.factors.iter().filter_map(|p| match p {
                Primitive::Y => Some(false),
                Primitive::Dy => Some(true),
                _ => None,
            }));
            for (&(ax, cx), &kx) in &xs {
                for (&(ay, cy), &ky) in &ys {
                    *out.entry([ax, ay, cx, cy]).or_insert(c(0.0)) += t.coeff * (kx * ky) as f64;
                }
            }
        }
        out.retain(|_, v| *v != c(0.0));
        out
    }

    /// Whether the normal form vanishes up to `tol` per coefficient.
    pub fn is_symbolically_zero(&self, tol: f64) -> bool {
        self.normal_form().values().all(|v| v.norm() <= tol)
    }

    /// Equality of normal forms up to `tol` per coefficient.
    pub fn approx_eq(&self, other: &OperatorExpr, tol: f64) -> bool {
        (self - other).is_symbolically_zero(tol)
    }

    /// Whether the two operators commute in the Weyl algebra.
    pub fn commutes_with(&self, other: &OperatorExpr, tol: f64) -> bool {
        self.commutator(other).is_symbolically_zero(tol)
    }

    /// If the commutator is a multiple of the identity, returns that scalar.
    pub fn central_commutator(&self, other: &OperatorExpr, tol: f64) -> Option<Complex64> {
        let nf = self.commutator(other).normal_form();
        let scalar = nf.get(&[0; 4]).copied().unwrap_or(c(0.0));
        nf.iter().filter(|(k, _)| **k != [0; 4]).all(|(_, v)| v.norm() <= tol).then_some(scalar)
    }
}

/// Normal ordering of a word in one axis (`false` = multiply, `true` =
/// derivative) as a map `(x power, ∂ power) → integer coefficient`.
fn axis_normal_form(word: impl Iterator<Item = bool>) -> BTreeMap<(u32, u32), i64> {
    let mut poly = BTreeMap::from([((0u32, 0u32), 1i64)]);
    for is_derivative in word {
        let mut next = BTreeMap::new();
        for ((a, d), k) in poly {
            if is_derivative {
                *next.entry((a, d + 1)).or_insert(0) += k;
            } else {
                // ∂^d x = x ∂^d + d ∂^{d-1}
                *next.entry((a + 1, d)).or_insert(0) += k;
                if d > 0 {
                    *next.entry((a, d - 1)).or_insert(0) += k * d as i64;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        poly = next;
    }
    poly
}

impl Add for &OperatorExpr {
    type Output = OperatorExpr;

    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        OperatorExpr::from_terms(self.terms.iter().chain(&rhs.terms).cloned().collect())
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;

    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        &self + &rhs
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;

    fn neg(self) -> OperatorExpr {
        self.scale(c(-1.0))
    }
}

impl Sub for &OperatorExpr {
    type Output = OperatorExpr;

    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        self + &(-rhs)
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;

    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        &self - &rhs
    }
}

impl Mul for &OperatorExpr {
    type Output = OperatorExpr;

    fn mul(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.compose(rhs)
    }
}

impl Mul<Complex64> for &OperatorExpr {
    type Output = OperatorExpr;

    fn mul(self, k: Complex64) -> OperatorExpr {
        self.scale(k)
    }
}

impl Mul<f64> for &OperatorExpr {
    type Output = OperatorExpr;

    fn mul(self, k: f64) -> OperatorExpr {
        self.scale(c(k))
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.6}{:+.6}i)", t.coeff.re, t.coeff.im)?;
            for p in &t.factors {
                write!(f, "·{p}")?;
            }
        }
        Ok(())
    }
}
