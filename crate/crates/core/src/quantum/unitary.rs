//! Dense-matrix cross-check of the Heisenberg operators: `Ŝ_μ` is
//! materialized on a small grid and `e^{iŜt/ħ} Ô(0) e^{-iŜt/ħ}` is
//! compared with the closed-form `Ô(t)`.

use faer::{c64, Mat, Side};
use num_complex::Complex64;

use super::engine::QuantumEngine;
use super::grid::{GaussianPacket, GridSpec, WaveFunction};
use super::scheme::{heisenberg_operator, QuantizationScheme};
use super::QuantumError;
use crate::params::PhysParams;
use crate::phase::Coord;

/// Largest `N` accepted; the dense matrix has `N²` rows.
pub const MAX_DENSE_POINTS: usize = 48;

/// Eigendecomposition of the quantized Hamiltonian of one scheme on a
/// small grid, reusable across times and observables.
pub struct ConjugationOracle {
    scheme: QuantizationScheme,
    engine: QuantumEngine,
    eigenvalues: Vec<f64>,
    eigenvectors: Mat<c64>,
    hermiticity_defect: f64,
}

impl ConjugationOracle {
    pub fn new(scheme: &QuantizationScheme, grid: GridSpec) -> Result<Self, QuantumError> {
        if grid.points > MAX_DENSE_POINTS {
            return Err(QuantumError::GridTooLarge { points: grid.points, max: MAX_DENSE_POINTS });
        }
        let engine = QuantumEngine::new(grid)?;
        let n = grid.points;
        let dim = n * n;
        let hamiltonian = scheme.quantized_hamiltonian();

        let mut dense = Mat::<c64>::zeros(dim, dim);
        for j in 0..dim {
            let mut unit = WaveFunction::zeros(grid);
            unit.values_mut()[[j / n, j % n]] = Complex64::new(1.0, 0.0);
            let column = engine.apply(&hamiltonian, &unit)?;
            for (i, v) in column.values().iter().enumerate() {
                dense[(i, j)] = *v;
            }
        }
        let mut hermiticity_defect = 0.0f64;
        let herm = Mat::<c64>::from_fn(dim, dim, |i, j| {
            let (a, b) = (dense[(i, j)], dense[(j, i)].conj());
            hermiticity_defect = hermiticity_defect.max((a - b).norm());
            (a + b) * 0.5
        });
        let eig = herm
            .self_adjoint_eigen(Side::Lower)
            .map_err(|e| QuantumError::Eigendecomposition(format!("{e:?}")))?;
        let eigenvalues = eig.S().column_vector().iter().map(|v| v.re).collect();
        let eigenvectors = eig.U().to_owned();
        Ok(Self { scheme: scheme.clone(), engine, eigenvalues, eigenvectors, hermiticity_defect })
    }

    pub fn grid(&self) -> &GridSpec {
        self.engine.grid()
    }

    /// Largest entry of `|Ŝ − Ŝ†|` before symmetrization.
    pub fn hermiticity_defect(&self) -> f64 {
        self.hermiticity_defect
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `e^{-iŜt/ħ} ψ`.
    pub fn propagate(&self, psi: &WaveFunction, t: f64) -> Result<WaveFunction, QuantumError> {
        if psi.grid() != self.grid() {
            return Err(QuantumError::GridMismatch);
        }
        let hbar = self.scheme.params().hbar;
        let v = &self.eigenvectors;
        let dim = self.eigenvalues.len();
        let flat: Vec<Complex64> = psi.values().iter().copied().collect();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); dim];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let col = v.col(k);
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, f) in flat.iter().enumerate() {
                acc += col[i].conj() * f;
            }
            *c = acc * Complex64::from_polar(1.0, -self.eigenvalues[k] * t / hbar);
        }
        let mut out = WaveFunction::zeros(*self.grid());
        let n = self.grid().points;
        for (k, c) in coeffs.iter().enumerate() {
            let col = v.col(k);
            for i in 0..dim {
                out.values_mut()[[i / n, i % n]] += col[i] * c;
            }
        }
        Ok(out)
    }

    /// `e^{iŜt/ħ} Ô(0) e^{-iŜt/ħ} ψ`.
    pub fn conjugated_action(&self, which: Coord, t: f64, psi: &WaveFunction) -> Result<WaveFunction, QuantumError> {
        let forward = self.propagate(psi, t)?;
        let acted = self.engine.apply(self.scheme.fundamental(which), &forward)?;
        self.propagate(&acted, -t)
    }

    /// Relative L² distance between the conjugated action and `Ô(t)ψ`.
    pub fn deviation(&self, which: Coord, t: f64, psi: &WaveFunction) -> Result<f64, QuantumError> {
        let lhs = self.conjugated_action(which, t, psi)?;
        let rhs = self.engine.apply(&heisenberg_operator(&self.scheme, which, t), psi)?;
        Ok(lhs.difference(&rhs).norm() / rhs.norm())
    }
}

/// Centered ground-width packet with a small momentum, well inside the
/// default small grid.
pub fn probe_packet(params: &PhysParams) -> GaussianPacket {
    let k = 1.0 / params.length_scale();
    GaussianPacket { center: [0.0, 0.0], wavevector: [0.5 * k, -0.3 * k], sigma: params.ground_width() }
}

/// One-shot conjugation check against the probe packet.
pub fn unitary_conjugation_check(
    s: &QuantizationScheme,
    which: Coord,
    t: f64,
    grid: GridSpec,
) -> Result<f64, QuantumError> {
    let oracle = ConjugationOracle::new(s, grid)?;
    let psi = probe_packet(s.params()).sample(grid);
    oracle.deviation(which, t, &psi)
}
