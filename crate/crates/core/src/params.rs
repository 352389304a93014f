use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Mass, angular frequency and the action quantum of the oscillator.
///
/// These are the only dimensional constants in the crate; everything else
/// takes them explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysParams {
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
}

#[derive(Debug, Error, PartialEq)]
#[error("{name} must be finite and strictly positive, got {value}")]
pub struct ParamError {
    pub name: &'static str,
    pub value: f64,
}

impl PhysParams {
    pub fn new(m: f64, omega: f64, hbar: f64) -> Result<Self, ParamError> {
        for (name, value) in [("m", m), ("omega", omega), ("hbar", hbar)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ParamError { name, value });
            }
        }
        Ok(Self { m, omega, hbar })
    }

    /// m = ω = ħ = 1.
    pub fn unit() -> Self {
        Self { m: 1.0, omega: 1.0, hbar: 1.0 }
    }

    /// Oscillator length sqrt(ħ/(mω)).
    pub fn length_scale(&self) -> f64 {
        (self.hbar / (self.m * self.omega)).sqrt()
    }

    /// Position spread of the oscillator ground state, sqrt(ħ/(2mω)).
    pub fn ground_width(&self) -> f64 {
        (self.hbar / (2.0 * self.m * self.omega)).sqrt()
    }

    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega
    }

    pub fn m_omega(&self) -> f64 {
        self.m * self.omega
    }
}

impl Default for PhysParams {
    fn default() -> Self {
        Self::unit()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive() {
        assert!(PhysParams::new(1.0, 1.0, 1.0).is_ok());
        assert_eq!(PhysParams::new(0.0, 1.0, 1.0).unwrap_err().name, "m");
        assert_eq!(PhysParams::new(1.0, -2.0, 1.0).unwrap_err().name, "omega");
        assert_eq!(PhysParams::new(1.0, 1.0, f64::NAN).unwrap_err().name, "hbar");
    }

    #[test]
    fn ground_width_squared_is_half_length_squared() {
        let p = PhysParams::new(2.0, 0.5, 3.0).unwrap();
        assert!((p.ground_width().powi(2) - 0.5 * p.length_scale().powi(2)).abs() < 1e-15);
    }
}
