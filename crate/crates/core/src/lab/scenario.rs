use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ConfigError, LabError};
use crate::params::PhysParams;
use crate::phase::Coord;
use crate::quantum::{GaussianPacket, GridSpec, SCHEME_COUNT};

/// Which verification groups `check` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Checks {
    pub pairs: bool,
    pub flow: bool,
    pub commutators: bool,
    pub uncertainties: bool,
    pub unitary: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Self { pairs: true, flow: true, commutators: true, uncertainties: true, unitary: true }
    }
}

/// Deliberate corruptions used to exercise failure paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixtures {
    /// Replace the canonical bracket matrix by a symmetric one.
    #[serde(default)]
    pub symmetric_form: bool,
}

impl Fixtures {
    fn is_default(&self) -> bool {
        *self == Fixtures::default()
    }
}

/// A batch of computations: one packet, a set of schemes, observables and
/// times on one grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub packet: GaussianPacket,
    pub schemes: Vec<usize>,
    pub observables: Vec<Coord>,
    pub times: Vec<f64>,
    pub grid: GridSpec,
    pub checks: Checks,
    #[serde(default, skip_serializing_if = "Fixtures::is_default")]
    pub fixtures: Fixtures,
}

impl Default for Scenario {
    /// Unit parameters; ground-width packet at `x̄ = 1` moving along `x`.
    fn default() -> Self {
        let params = PhysParams::unit();
        Self {
            m: params.m,
            omega: params.omega,
            hbar: params.hbar,
            packet: GaussianPacket { center: [1.0, 0.0], wavevector: [1.0, 0.0], sigma: params.ground_width() },
            schemes: (0..SCHEME_COUNT).collect(),
            observables: Coord::ALL.to_vec(),
            times: vec![0.0, PI / 4.0, PI / 2.0],
            grid: GridSpec::default_for(&params),
            checks: Checks::default(),
            fixtures: Fixtures::default(),
        }
    }
}

fn err(path: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError { path: path.into(), message: message.into() }
}

impl Scenario {
    /// Parses and validates a JSON scenario document.
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            err(if path == "." { "<root>".to_string() } else { path }, e.into_inner().to_string())
        })?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> Result<Self, LabError> {
        let text = std::fs::read_to_string(path).map_err(|source| LabError::Io { path: path.to_path_buf(), source })?;
        Ok(Self::from_json(&text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scenario serializes");
        s.push('\n');
        s
    }

    pub fn params(&self) -> PhysParams {
        PhysParams { m: self.m, omega: self.omega, hbar: self.hbar }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (key, v) in [("m", self.m), ("omega", self.omega), ("hbar", self.hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(err(key, format!("must be finite and positive, got {v}")));
            }
        }
        let p = &self.packet;
        if !(p.sigma.is_finite() && p.sigma > 0.0) {
            return Err(err("packet.sigma", format!("must be finite and positive, got {}", p.sigma)));
        }
        for (key, arr) in [("packet.center", p.center), ("packet.wavevector", p.wavevector)] {
            if let Some(i) = arr.iter().position(|v| !v.is_finite()) {
                return Err(err(format!("{key}[{i}]"), "must be finite"));
            }
        }
        if self.schemes.is_empty() {
            return Err(err("schemes", "must not be empty"));
        }
        if let Some(i) = self.schemes.iter().position(|&s| s >= SCHEME_COUNT) {
            return Err(err(format!("schemes[{i}]"), format!("unknown scheme {}", self.schemes[i])));
        }
        if self.observables.is_empty() {
            return Err(err("observables", "must not be empty"));
        }
        if self.times.is_empty() {
            return Err(err("times", "must not be empty"));
        }
        if let Some(i) = self.times.iter().position(|t| !t.is_finite()) {
            return Err(err(format!("times[{i}]"), "must be finite"));
        }
        if !(self.grid.half_width.is_finite() && self.grid.half_width > 0.0) {
            return Err(err("grid.L", format!("must be finite and positive, got {}", self.grid.half_width)));
        }
        if self.grid.points < 16 || !self.grid.points.is_multiple_of(2) {
            return Err(err("grid.N", format!("must be even and at least 16, got {}", self.grid.points)));
        }
        Ok(())
    }

    /// Applies `--grid-n` / `--grid-l` style overrides and revalidates.
    pub fn with_grid_overrides(mut self, points: Option<usize>, half_width: Option<f64>) -> Result<Self, ConfigError> {
        if let Some(n) = points {
            self.grid.points = n;
        }
        if let Some(l) = half_width {
            self.grid.half_width = l;
        }
        self.validate()?;
        Ok(self)
    }
}
