use num_complex::Complex64;

use super::grid::{GridSpec, Localization, Spectral, WaveFunction};
use super::operator::{OperatorExpr, Primitive};
use super::scheme::{heisenberg_operator, QuantizationScheme};
use super::QuantumError;
use crate::phase::Coord;

/// Applies operator expressions to wavefunctions on one grid, with
/// spectral (periodic) derivatives.
#[derive(Clone)]
pub struct QuantumEngine {
    grid: GridSpec,
    xs: Vec<f64>,
    spectral: Spectral,
}

impl std::fmt::Debug for QuantumEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuantumEngine").field("grid", &self.grid).finish()
    }
}

/// Result of [`QuantumEngine::commutator_table_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorCheck {
    /// `max ‖[Â,B̂]ψ − C^{AB}ψ‖ / ‖ψ‖` over all fundamental pairs.
    pub max_deviation: f64,
    /// `⟨ψ|[Â,B̂]ψ⟩ / ⟨ψ|ψ⟩` per pair.
    pub measured: [[Complex64; 4]; 4],
    pub localization: Localization,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoTimeCommutator {
    pub value: Complex64,
    pub localization: Localization,
}

impl QuantumEngine {
    pub fn new(grid: GridSpec) -> Result<Self, QuantumError> {
        grid.validate()?;
        Ok(Self { grid, xs: grid.coords(), spectral: Spectral::new(&grid) })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    fn check_grid(&self, psi: &WaveFunction) -> Result<(), QuantumError> {
        if psi.grid() != &self.grid {
            return Err(QuantumError::GridMismatch);
        }
        Ok(())
    }

    fn apply_primitive(&self, p: Primitive, psi: &mut WaveFunction) {
        let values = psi.values_mut();
        match p {
            Primitive::X => {
                for (mut row, &x) in values.rows_mut().into_iter().zip(&self.xs) {
                    row.mapv_inplace(|v| v * x);
                }
            }
            Primitive::Y => {
                for mut row in values.rows_mut() {
                    row.iter_mut().zip(&self.xs).for_each(|(v, &y)| *v *= y);
                }
            }
            Primitive::Dx => self.spectral.dx(values),
            Primitive::Dy => self.spectral.dy(values),
        }
    }

    /// `Ô ψ`, not renormalized. Products act right to left.
    pub fn apply(&self, op: &OperatorExpr, psi: &WaveFunction) -> Result<WaveFunction, QuantumError> {
        self.check_grid(psi)?;
        let mut out = WaveFunction::zeros(self.grid);
        for term in op.terms() {
            let mut phi = psi.clone();
            for &p in term.factors.iter().rev() {
                self.apply_primitive(p, &mut phi);
            }
            out.values_mut().zip_mut_with(phi.values(), |o, v| *o += term.coeff * v);
        }
        Ok(out)
    }

    /// `⟨ψ|Ô ψ⟩` by grid quadrature; `psi` should be normalized.
    pub fn expectation(&self, op: &OperatorExpr, psi: &WaveFunction) -> Result<Complex64, QuantumError> {
        Ok(psi.inner(&self.apply(op, psi)?))
    }

    /// Mean and variance of a Hermitian operator, `(⟨Â⟩, ‖Âψ‖² − (Re⟨Â⟩)²)`.
    pub fn moments(&self, op: &OperatorExpr, psi: &WaveFunction) -> Result<(Complex64, f64), QuantumError> {
        let a_psi = self.apply(op, psi)?;
        let mean = psi.inner(&a_psi);
        let variance = (a_psi.norm_sqr() - mean.re * mean.re).max(0.0);
        Ok((mean, variance))
    }

    /// Measures `[Â,B̂]ψ` for every pair of fundamental operators and
    /// compares it with the scheme's commutator table.
    pub fn commutator_table_check(
        &self,
        s: &QuantizationScheme,
        psi: &WaveFunction,
    ) -> Result<CommutatorCheck, QuantumError> {
        self.check_grid(psi)?;
        let norm = psi.norm();
        let norm_sqr = psi.norm_sqr();
        let mut measured = [[Complex64::new(0.0, 0.0); 4]; 4];
        let mut max_deviation = 0.0f64;
        let images: Vec<WaveFunction> = Coord::ALL
            .iter()
            .map(|&c| self.apply(s.fundamental(c), psi))
            .collect::<Result<_, _>>()?;
        for a in Coord::ALL {
            for b in Coord::ALL {
                if a >= b {
                    continue;
                }
                let ab = self.apply(s.fundamental(a), &images[b.index()])?;
                let ba = self.apply(s.fundamental(b), &images[a.index()])?;
                let comm = ab.difference(&ba);
                let expected = psi.scaled(s.commutator(a, b));
                let dev = comm.difference(&expected).norm() / norm;
                max_deviation = max_deviation.max(dev);
                let value = psi.inner(&comm) / norm_sqr;
                measured[a.index()][b.index()] = value;
                measured[b.index()][a.index()] = -value;
            }
        }
        Ok(CommutatorCheck { max_deviation, measured, localization: psi.localization() })
    }

    /// `ΔA·ΔB` for the Heisenberg operators of the two observables at `t`.
    pub fn uncertainty_product(
        &self,
        s: &QuantizationScheme,
        pair: (Coord, Coord),
        psi: &WaveFunction,
        t: f64,
    ) -> Result<f64, QuantumError> {
        let (_, va) = self.moments(&heisenberg_operator(s, pair.0, t), psi)?;
        let (_, vb) = self.moments(&heisenberg_operator(s, pair.1, t), psi)?;
        Ok((va * vb).sqrt())
    }

    /// Scalar `c` in `[x̂(t), x̂(t′)] = c`, estimated as `⟨ψ|[x̂(t), x̂(t′)]ψ⟩`.
    pub fn two_time_commutator(
        &self,
        s: &QuantizationScheme,
        t: f64,
        t_prime: f64,
        psi: &WaveFunction,
    ) -> Result<TwoTimeCommutator, QuantumError> {
        let a = heisenberg_operator(s, Coord::X, t);
        let b = heisenberg_operator(s, Coord::X, t_prime);
        let ab = self.apply(&a, &self.apply(&b, psi)?)?;
        let ba = self.apply(&b, &self.apply(&a, psi)?)?;
        let value = psi.inner(&ab.difference(&ba)) / psi.norm_sqr();
        Ok(TwoTimeCommutator { value, localization: psi.localization() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PhysParams;
    use crate::quantum::{scheme, GaussianPacket};

    fn engine() -> (QuantumEngine, WaveFunction) {
        let p = PhysParams::unit();
        let grid = GridSpec::default_for(&p);
        let psi = GaussianPacket::ground(&p).sample(grid);
        (QuantumEngine::new(grid).unwrap(), psi)
    }

    #[test]
    fn identity_leaves_state_unchanged() {
        let (e, psi) = engine();
        let out = e.apply(&OperatorExpr::identity(), &psi).unwrap();
        assert_eq!(out, psi);
    }

    #[test]
    fn position_derivative_commutator_on_gaussian() {
        let (e, psi) = engine();
        let comm = OperatorExpr::x().commutator(&OperatorExpr::dx());
        let out = e.apply(&comm, &psi).unwrap();
        let err = out.difference(&psi.scaled(Complex64::new(-1.0, 0.0))).norm();
        assert!(err < 1e-8, "{err}");
    }

    #[test]
    fn grid_mismatch_is_reported() {
        let (e, _) = engine();
        let other = GaussianPacket::ground(&PhysParams::unit()).sample(GridSpec::new(8.0, 64).unwrap());
        assert_eq!(e.apply(&OperatorExpr::x(), &other).unwrap_err(), QuantumError::GridMismatch);
    }

    #[test]
    fn sign_flip_in_scheme_two() {
        let (e, psi) = engine();
        let s = scheme(2, &PhysParams::unit()).unwrap();
        let check = e.commutator_table_check(&s, &psi).unwrap();
        assert!(check.max_deviation < 1e-8);
        let m = check.measured[0][2];
        assert!((m - Complex64::new(0.0, -1.0)).norm() < 1e-8, "{m}");
    }
}
