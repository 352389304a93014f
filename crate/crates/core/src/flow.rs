//! Closed-form evolution of the isotropic oscillator and the symplecticity
//! of that flow with respect to every admissible form.

use nalgebra::{Matrix4, Vector4};
use serde::{Deserialize, Serialize};

use crate::params::PhysParams;
use crate::phase::{Polynomial, SymplecticForm};

/// Tolerance on `‖Jᵀ ω_low J − ω_low‖_max`.
pub const SYMPLECTIC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseState {
    pub x: f64,
    pub y: f64,
    pub px: f64,
    pub py: f64,
}

impl PhaseState {
    pub fn new(x: f64, y: f64, px: f64, py: f64) -> Self {
        Self { x, y, px, py }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.px, self.py]
    }

    pub fn from_array([x, y, px, py]: [f64; 4]) -> Self {
        Self { x, y, px, py }
    }

    pub fn to_vector(self) -> Vector4<f64> {
        Vector4::from(self.to_array())
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }
}

/// Linear map `J(t)` with `exact_flow(s, t) = J(t) s`.
pub fn flow_jacobian(t: f64, params: &PhysParams) -> Matrix4<f64> {
    let (s, c) = (params.omega * t).sin_cos();
    let mw = params.m_omega();
    #[rustfmt::skip]
    let j = Matrix4::new(
        c,        0.0,      s / mw, 0.0,
        0.0,      c,        0.0,    s / mw,
        -mw * s,  0.0,      c,      0.0,
        0.0,      -mw * s,  0.0,    c,
    );
    j
}

pub fn exact_flow(state0: PhaseState, t: f64, params: &PhysParams) -> PhaseState {
    let v = flow_jacobian(t, params) * state0.to_vector();
    PhaseState::new(v[0], v[1], v[2], v[3])
}

/// `‖Jᵀ ω_low J − ω_low‖_max` for an arbitrary linear map `J`.
pub fn pullback_deviation(jacobian: &Matrix4<f64>, form: &SymplecticForm<f64>) -> f64 {
    let lower = form.lower_matrix();
    (jacobian.transpose() * lower * jacobian - lower).amax()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticCheck {
    pub holds: bool,
    pub max_deviation: f64,
}

/// Whether the time-`t` flow pulls the form back to itself.
pub fn verify_flow_symplectic(form: &SymplecticForm<f64>, t: f64, params: &PhysParams) -> SymplecticCheck {
    let max_deviation = pullback_deviation(&flow_jacobian(t, params), form);
    SymplecticCheck { holds: max_deviation <= SYMPLECTIC_TOL, max_deviation }
}

/// `max_t |f(φ_t(s₀)) − f(s₀)|` over the sample times.
///
/// # Panics
/// If `times` is empty.
pub fn conserved_along_flow(
    f: &Polynomial<f64>,
    state0: PhaseState,
    times: &[f64],
    params: &PhysParams,
) -> f64 {
    assert!(!times.is_empty(), "conserved_along_flow needs at least one time");
    let f0 = f.evaluate(state0.to_array());
    times
        .iter()
        .map(|&t| (f.evaluate(exact_flow(state0, t, params).to_array()) - f0).abs())
        .fold(0.0, f64::max)
}

/// `count` uniform samples over two periods, `[0, 4π/ω]`.
pub fn two_period_samples(params: &PhysParams, count: usize) -> Vec<f64> {
    let end = 2.0 * params.period();
    match count {
        0 => Vec::new(),
        1 => vec![0.0],
        n => (0..n).map(|k| end * k as f64 / (n - 1) as f64).collect(),
    }
}

/// Default time grid for conservation checks: 100 samples over two periods.
pub fn default_samples(params: &PhysParams) -> Vec<f64> {
    two_period_samples(params, 100)
}
