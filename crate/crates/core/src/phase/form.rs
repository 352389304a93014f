use nalgebra::Matrix4;
use thiserror::Error;

use super::bracket::poisson_bracket;
use super::coeff::Coefficient;
use super::poly::{Coord, Polynomial};
use crate::params::PhysParams;

/// 4×4 matrix over a coefficient ring, row-major.
pub type Mat4<C> = [[C; 4]; 4];

pub fn mat4_from_fn<C>(mut f: impl FnMut(usize, usize) -> C) -> Mat4<C> {
    std::array::from_fn(|i| std::array::from_fn(|j| f(i, j)))
}

pub fn mat4_mul<C: Coefficient>(a: &Mat4<C>, b: &Mat4<C>) -> Mat4<C> {
    mat4_from_fn(|i, j| {
        (0..4).fold(C::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
    })
}

pub fn mat4_transpose<C: Clone>(a: &Mat4<C>) -> Mat4<C> {
    mat4_from_fn(|i, j| a[j][i].clone())
}

pub fn mat4_to_numeric<C: Coefficient>(a: &Mat4<C>, params: &PhysParams) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| a[i][j].to_f64(params))
}

pub fn mat4_from_nalgebra(a: &Matrix4<f64>) -> Mat4<f64> {
    mat4_from_fn(|i, j| a[(i, j)])
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormError {
    #[error("not antisymmetric (max |ω + ωᵀ| = {max_asymmetry:e})")]
    NotAntisymmetric { max_asymmetry: f64 },
    #[error("degenerate (smallest/largest singular value = {conditioning:e})")]
    Degenerate { conditioning: f64 },
    #[error("Jacobi violated (max cyclic sum = {max_violation:e})")]
    JacobiViolated { max_violation: f64 },
    #[error("inverse does not match: upper · lower ≠ identity")]
    InverseMismatch,
}

/// Constant symplectic structure: the bracket matrix `ω^{μν}` together with
/// its inverse `ω_{μν}`, the coefficients of the 2-form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm<C> {
    upper: Mat4<C>,
    lower: Mat4<C>,
}

/// Relative thresholds used when validating floating-point candidates.
pub const ANTISYMMETRY_TOL: f64 = 1e-12;
pub const DEGENERACY_TOL: f64 = 1e-12;

impl<C: Coefficient> SymplecticForm<C> {
    /// Builds a form from both index placements, checked exactly.
    pub fn with_inverse(upper: Mat4<C>, lower: Mat4<C>) -> Result<Self, FormError> {
        let asym = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).any(|(i, j)| {
            !(upper[i][j].clone() + upper[j][i].clone()).is_zero()
        });
        if asym {
            return Err(FormError::NotAntisymmetric { max_asymmetry: f64::NAN });
        }
        let id = mat4_mul(&upper, &lower);
        for (i, row) in id.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { C::one() } else { C::zero() };
                if *v != target {
                    return Err(FormError::InverseMismatch);
                }
            }
        }
        Ok(Self { upper, lower })
    }

    /// Bracket matrix `ω^{μν} = {x^μ, x^ν}`.
    pub fn upper(&self) -> &Mat4<C> {
        &self.upper
    }

    /// Inverse matrix `ω_{μν}`.
    pub fn lower(&self) -> &Mat4<C> {
        &self.lower
    }

    pub fn to_numeric(&self, params: &PhysParams) -> SymplecticForm<f64> {
        SymplecticForm {
            upper: mat4_from_nalgebra(&mat4_to_numeric(&self.upper, params)),
            lower: mat4_from_nalgebra(&mat4_to_numeric(&self.lower, params)),
        }
    }
}

impl SymplecticForm<f64> {
    pub fn from_upper(upper: &Matrix4<f64>) -> Result<Self, FormError> {
        validate_form(upper)
    }

    /// Builds a form from its lower-index matrix `ω_{μν}`.
    pub fn from_lower(lower: &Matrix4<f64>) -> Result<Self, FormError> {
        check_antisymmetric(lower)?;
        let upper = invert(lower)?;
        validate_form(&upper)
    }

    pub fn upper_matrix(&self) -> Matrix4<f64> {
        Matrix4::from_fn(|i, j| self.upper[i][j])
    }

    pub fn lower_matrix(&self) -> Matrix4<f64> {
        Matrix4::from_fn(|i, j| self.lower[i][j])
    }
}

fn check_antisymmetric(m: &Matrix4<f64>) -> Result<(), FormError> {
    let scale = m.amax().max(1.0);
    let max_asymmetry = (m + m.transpose()).amax();
    if max_asymmetry > ANTISYMMETRY_TOL * scale {
        return Err(FormError::NotAntisymmetric { max_asymmetry });
    }
    Ok(())
}

fn invert(m: &Matrix4<f64>) -> Result<Matrix4<f64>, FormError> {
    let sv = m.singular_values();
    let max = sv.max();
    let min = sv.min();
    let conditioning = if max > 0.0 { min / max } else { 0.0 };
    if conditioning <= DEGENERACY_TOL {
        return Err(FormError::Degenerate { conditioning });
    }
    let inv = m.try_inverse().ok_or(FormError::Degenerate { conditioning })?;
    // the exact inverse of an antisymmetric matrix is antisymmetric
    Ok((inv - inv.transpose()) * 0.5)
}

/// Checks that a candidate bracket matrix defines a symplectic structure:
/// antisymmetric, invertible, and with a bracket obeying the Jacobi identity
/// on every triple of coordinate functions.
pub fn validate_form(candidate: &Matrix4<f64>) -> Result<SymplecticForm<f64>, FormError> {
    check_antisymmetric(candidate)?;
    let lower = invert(candidate)?;
    let upper = (candidate - candidate.transpose()) * 0.5;
    let form = SymplecticForm {
        upper: mat4_from_nalgebra(&upper),
        lower: mat4_from_nalgebra(&lower),
    };
    let max_violation = jacobi_violation(&form);
    if max_violation > ANTISYMMETRY_TOL * upper.amax().max(1.0) {
        return Err(FormError::JacobiViolated { max_violation });
    }
    Ok(form)
}

/// Largest coefficient of `{{x^a,x^b},x^c} + cyclic` over all coordinate triples.
pub fn jacobi_violation<C: Coefficient>(form: &SymplecticForm<C>) -> f64 {
    let coords = Coord::ALL.map(Polynomial::<C>::coordinate);
    let unit = PhysParams::unit();
    let mut worst = 0.0f64;
    for a in &coords {
        for b in &coords {
            for c in &coords {
                let cyclic = poisson_bracket(&poisson_bracket(a, b, form), c, form)
                    + poisson_bracket(&poisson_bracket(b, c, form), a, form)
                    + poisson_bracket(&poisson_bracket(c, a, form), b, form);
                worst = worst.max(cyclic.to_numeric(&unit).max_abs_coeff());
            }
        }
    }
    worst
}
