use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use super::QuantumError;
use crate::params::PhysParams;

/// Boundary magnitude above which a state counts as not localized.
pub const LOCALIZATION_THRESHOLD: f64 = 1e-12;

/// Square periodic grid `[-L, L)²` with `N` points per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(rename = "L")]
    pub half_width: f64,
    #[serde(rename = "N")]
    pub points: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, points: usize) -> Result<Self, QuantumError> {
        let g = Self { half_width, points };
        g.validate()?;
        Ok(g)
    }

    /// `N = 128`, `L = 8 sqrt(ħ/(mω))`.
    pub fn default_for(params: &PhysParams) -> Self {
        Self { half_width: 8.0 * params.length_scale(), points: 128 }
    }

    /// `N = 32`, `L = 8 sqrt(ħ/(mω))`, small enough for dense matrices.
    pub fn small_for(params: &PhysParams) -> Self {
        Self { half_width: 8.0 * params.length_scale(), points: 32 }
    }

    pub fn validate(&self) -> Result<(), QuantumError> {
        if !(self.half_width.is_finite() && self.half_width > 0.0) {
            return Err(QuantumError::InvalidGrid(format!("L must be positive, got {}", self.half_width)));
        }
        if self.points < 16 || !self.points.is_multiple_of(2) {
            return Err(QuantumError::InvalidGrid(format!(
                "N must be even and at least 16, got {}",
                self.points
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.points as f64
    }

    /// Sample positions `-L + j h`, shared by both axes.
    pub fn coords(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.points).map(|j| -self.half_width + j as f64 * h).collect()
    }

    /// Angular wavenumbers in FFT order.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let n = self.points as i64;
        let dk = 2.0 * PI / (2.0 * self.half_width);
        (0..n).map(|j| if j < n / 2 { j } else { j - n }).map(|j| j as f64 * dk).collect()
    }

    /// Quadrature weight `h²`.
    pub fn cell_area(&self) -> f64 {
        self.spacing().powi(2)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} on [-{}, {})²", self.points, self.points, self.half_width, self.half_width)
    }
}

/// Complex samples on a [`GridSpec`], indexed `[ix, iy]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    grid: GridSpec,
    values: Array2<Complex64>,
}

impl WaveFunction {
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let xs = grid.coords();
        let values = Array2::from_shape_fn((grid.points, grid.points), |(i, j)| f(xs[i], xs[j]));
        Self { grid, values }
    }

    pub fn from_values(grid: GridSpec, values: Array2<Complex64>) -> Result<Self, QuantumError> {
        if values.dim() != (grid.points, grid.points) {
            return Err(QuantumError::GridMismatch);
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self { grid, values: Array2::zeros((grid.points, grid.points)) }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &Array2<Complex64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Array2<Complex64> {
        &mut self.values
    }

    pub fn into_values(self) -> Array2<Complex64> {
        self.values
    }

    /// `⟨self|other⟩` by the uniform Riemann sum, in fixed row-major order.
    pub fn inner(&self, other: &WaveFunction) -> Complex64 {
        let sum = self
            .values
            .iter()
            .zip(other.values.iter())
            .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b);
        sum * self.grid.cell_area()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.cell_area()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            self.values.mapv_inplace(|v| v / n);
        }
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self { grid: self.grid, values: self.values.mapv(|v| v * c) }
    }

    /// `self - other`; the grids must match.
    pub fn difference(&self, other: &WaveFunction) -> WaveFunction {
        Self { grid: self.grid, values: &self.values - &other.values }
    }

    /// Largest magnitude on the outermost rows and columns.
    pub fn boundary_max(&self) -> f64 {
        let n = self.grid.points;
        let mut worst = 0.0f64;
        for k in 0..n {
            for (i, j) in [(0, k), (n - 1, k), (k, 0), (k, n - 1)] {
                worst = worst.max(self.values[[i, j]].norm());
            }
        }
        worst
    }

    pub fn localization(&self) -> Localization {
        let boundary_max = self.boundary_max();
        if boundary_max <= LOCALIZATION_THRESHOLD {
            Localization::Localized
        } else {
            Localization::Warning { boundary_max }
        }
    }
}

/// Whether a state is small enough at the grid edge for periodic spectral
/// derivatives to be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Localization {
    Localized,
    Warning { boundary_max: f64 },
}

impl Localization {
    pub fn is_localized(&self) -> bool {
        matches!(self, Localization::Localized)
    }
}

/// Isotropic Gaussian `exp(-|r - r̄|²/(4σ²) + i k·r)`, so that `σ` is the
/// position standard deviation along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianPacket {
    pub center: [f64; 2],
    pub wavevector: [f64; 2],
    pub sigma: f64,
}

impl GaussianPacket {
    pub fn new(center: [f64; 2], wavevector: [f64; 2], sigma: f64) -> Result<Self, QuantumError> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(QuantumError::InvalidPacket(format!("sigma must be positive, got {sigma}")));
        }
        if !center.iter().chain(&wavevector).all(|v| v.is_finite()) {
            return Err(QuantumError::InvalidPacket("center and wavevector must be finite".into()));
        }
        Ok(Self { center, wavevector, sigma })
    }

    /// Centered packet at rest with the ground-state width `σ² = ħ/(2mω)`.
    pub fn ground(params: &PhysParams) -> Self {
        Self { center: [0.0, 0.0], wavevector: [0.0, 0.0], sigma: params.ground_width() }
    }

    /// Samples the packet and normalizes it on the grid.
    pub fn sample(&self, grid: GridSpec) -> WaveFunction {
        let [cx, cy] = self.center;
        let [kx, ky] = self.wavevector;
        let w = 1.0 / (4.0 * self.sigma * self.sigma);
        WaveFunction::from_fn(grid, |x, y| {
            let r2 = (x - cx).powi(2) + (y - cy).powi(2);
            Complex64::from_polar((-w * r2).exp(), kx * x + ky * y)
        })
        .normalized()
    }
}

/// FFT plans and wavenumbers for first derivatives on one grid.
#[derive(Clone)]
pub(crate) struct Spectral {
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    /// `i k` per mode with the Nyquist mode zeroed.
    ik: Vec<Complex64>,
}

impl Spectral {
    pub(crate) fn new(grid: &GridSpec) -> Self {
        let mut planner = FftPlanner::new();
        let n = grid.points;
        let mut ik: Vec<Complex64> = grid.wavenumbers().into_iter().map(|k| Complex64::new(0.0, k)).collect();
        ik[n / 2] = Complex64::new(0.0, 0.0);
        Self { forward: planner.plan_fft_forward(n), inverse: planner.plan_fft_inverse(n), ik }
    }

    fn differentiate_line(&self, line: &mut [Complex64], scratch: &mut [Complex64]) {
        let n = line.len() as f64;
        self.forward.process_with_scratch(line, scratch);
        for (c, ik) in line.iter_mut().zip(&self.ik) {
            *c *= ik / n;
        }
        self.inverse.process_with_scratch(line, scratch);
    }

    /// In-place `∂/∂x` (axis 0).
    pub(crate) fn dx(&self, values: &mut Array2<Complex64>) {
        let n = values.nrows();
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.forward.get_inplace_scratch_len()];
        for mut col in values.columns_mut() {
            for (l, v) in line.iter_mut().zip(col.iter()) {
                *l = *v;
            }
            self.differentiate_line(&mut line, &mut scratch);
            for (v, l) in col.iter_mut().zip(&line) {
                *v = *l;
            }
        }
    }

    /// In-place `∂/∂y` (axis 1).
    pub(crate) fn dy(&self, values: &mut Array2<Complex64>) {
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.forward.get_inplace_scratch_len()];
        for mut row in values.rows_mut() {
            match row.as_slice_mut() {
                Some(slice) => self.differentiate_line(slice, &mut scratch),
                None => {
                    let mut line = row.to_vec();
                    self.differentiate_line(&mut line, &mut scratch);
                    row.iter_mut().zip(line).for_each(|(v, l)| *v = l);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(1.0, 16).is_ok());
        assert!(GridSpec::new(1.0, 15).is_err());
        assert!(GridSpec::new(1.0, 8).is_err());
        assert!(GridSpec::new(0.0, 32).is_err());
    }

    #[test]
    fn wavenumbers_fft_order() {
        let g = GridSpec::new(PI, 16).unwrap();
        let k = g.wavenumbers();
        assert_eq!(k[0], 0.0);
        assert_eq!(k[1], 1.0);
        assert_eq!(k[8], -8.0);
        assert_eq!(k[15], -1.0);
    }

    #[test]
    fn packet_is_normalized_and_localized() {
        let p = PhysParams::unit();
        let grid = GridSpec::default_for(&p);
        let psi = GaussianPacket::ground(&p).sample(grid);
        assert!((psi.norm_sqr() - 1.0).abs() < 1e-12);
        assert!(psi.localization().is_localized());
        let coarse = GaussianPacket::ground(&p).sample(GridSpec::new(3.0, 16).unwrap());
        assert!(!coarse.localization().is_localized());
    }

    #[test]
    fn spectral_derivative_of_plane_wave() {
        // a periodic mode is differentiated exactly
        let g = GridSpec::new(PI, 32).unwrap();
        let sp = Spectral::new(&g);
        let mut v = WaveFunction::from_fn(g, |x, y| Complex64::from_polar(1.0, 3.0 * x - 2.0 * y)).into_values();
        let orig = v.clone();
        sp.dx(&mut v);
        for (a, b) in v.iter().zip(orig.iter()) {
            assert!((a - b * Complex64::new(0.0, 3.0)).norm() < 1e-12);
        }
        let mut w = orig.clone();
        sp.dy(&mut w);
        for (a, b) in w.iter().zip(orig.iter()) {
            assert!((a - b * Complex64::new(0.0, -2.0)).norm() < 1e-12);
        }
    }
}
