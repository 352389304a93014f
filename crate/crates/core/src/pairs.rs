//! Enumeration of constant symplectic forms and quadratic Hamiltonians that
//! reproduce a given linear vector field.
//!
//! With `H = ½ xᵀ S x` and lower-index form `θ = ω⁻¹`, the requirement
//! `ω ∇H = A x` becomes `S = θ A`. `S` must be symmetric, which for an
//! antisymmetric `θ` is the linear condition `θ A + Aᵀ θ = 0`. The admissible
//! `θ` therefore form the null space of a linear map on the 6-dimensional
//! space of antisymmetric 4×4 matrices.

use nalgebra::{DMatrix, Matrix4, SymmetricEigen};
use thiserror::Error;

use crate::phase::{
    hamiltonian_vector_field, oscillator, Coefficient, FormError, LinearVectorField, Polynomial,
    Sym, SymplecticForm,
};

/// Singular values below this fraction of the largest count as zero.
pub const NULL_SPACE_TOL: f64 = 1e-10;
/// Allowed asymmetry of `θA`, relative to its largest entry.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Index pairs `(i, j)`, `i < j`, enumerating the antisymmetric basis.
pub const ANTISYMMETRIC_SLOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Antisymmetric matrix with the given parameters on the strict upper triangle.
pub fn antisymmetric(params: &[f64; 6]) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    for (&(i, j), &c) in ANTISYMMETRIC_SLOTS.iter().zip(params) {
        m[(i, j)] = c;
        m[(j, i)] = -c;
    }
    m
}

/// Upper-triangle parameters of an antisymmetric matrix.
pub fn antisymmetric_params(m: &Matrix4<f64>) -> [f64; 6] {
    ANTISYMMETRIC_SLOTS.map(|(i, j)| 0.5 * (m[(i, j)] - m[(j, i)]))
}

/// `θA + Aᵀθ`; zero exactly when `θA` is symmetric.
pub fn symmetry_defect(theta: &Matrix4<f64>, a: &Matrix4<f64>) -> Matrix4<f64> {
    theta * a + a.transpose() * theta
}

/// Orthonormal basis (in the 6 antisymmetric parameters) of every
/// lower-index form compatible with a linear field.
#[derive(Debug, Clone)]
pub struct InverseFormBasis {
    pub basis: Vec<Matrix4<f64>>,
}

impl InverseFormBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Max-norm distance from `theta` to its projection onto the span.
    pub fn residual(&self, theta: &Matrix4<f64>) -> f64 {
        let target = antisymmetric_params(theta);
        let mut proj = [0.0; 6];
        for b in &self.basis {
            let bp = antisymmetric_params(b);
            let c: f64 = bp.iter().zip(&target).map(|(u, v)| u * v).sum();
            for (p, u) in proj.iter_mut().zip(&bp) {
                *p += c * u;
            }
        }
        let off_span = target.iter().zip(&proj).fold(0.0f64, |acc, (t, p)| acc.max((t - p).abs()));
        // antisymmetric_params discards any symmetric part; count it too
        off_span.max((theta + theta.transpose()).amax() * 0.5)
    }

    /// Element `Σ c_k basis_k`.
    pub fn combine(&self, coeffs: &[f64]) -> Matrix4<f64> {
        self.basis.iter().zip(coeffs).fold(Matrix4::zeros(), |acc, (b, c)| acc + b * *c)
    }
}

/// Null space of `θ ↦ θA + Aᵀθ` over antisymmetric `θ`.
pub fn admissible_inverse_forms(field: &LinearVectorField<f64>) -> InverseFormBasis {
    let a = field.matrix4();
    // one row per matrix entry of the defect, one column per basis element
    let mut system = DMatrix::<f64>::zeros(16, 6);
    for k in 0..6 {
        let mut e = [0.0; 6];
        e[k] = 1.0;
        let d = symmetry_defect(&antisymmetric(&e), &a);
        for r in 0..16 {
            system[(r, k)] = d[(r / 4, r % 4)];
        }
    }
    let svd = system.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let max_sv = svd.singular_values.max();
    let basis = (0..6)
        .filter(|&k| max_sv == 0.0 || svd.singular_values[k] <= NULL_SPACE_TOL * max_sv)
        .map(|k| {
            let row: [f64; 6] = std::array::from_fn(|c| v_t[(k, c)]);
            antisymmetric(&row)
        })
        .collect();
    InverseFormBasis { basis }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PairError {
    #[error("asymmetric product: θA fails symmetry by {defect:e}")]
    AsymmetricProduct { defect: f64 },
    #[error("degenerate form: {0}")]
    DegenerateForm(FormError),
}

/// Quadratic Hamiltonian `½ xᵀ (θA) x` for an admissible `θ`.
pub fn hamiltonian_from_form(
    theta: &Matrix4<f64>,
    field: &LinearVectorField<f64>,
) -> Result<Polynomial<f64>, PairError> {
    let s = theta * field.matrix4();
    let defect = (s - s.transpose()).amax();
    if defect > SYMMETRY_TOL * s.amax().max(1.0) {
        return Err(PairError::AsymmetricProduct { defect });
    }
    if let Err(e) = SymplecticForm::from_lower(theta) {
        return Err(PairError::DegenerateForm(e));
    }
    let s = (s + s.transpose()) * 0.5;
    Ok(quadratic_form(&s))
}

/// The polynomial `½ xᵀ S x` for symmetric `S`.
pub fn quadratic_form(s: &Matrix4<f64>) -> Polynomial<f64> {
    let mut terms = Vec::new();
    for i in 0..4 {
        for j in i..4 {
            let mut e = [0; 4];
            e[i] += 1;
            e[j] += 1;
            let c = if i == j { 0.5 * s[(i, i)] } else { s[(i, j)] };
            terms.push((e, c));
        }
    }
    Polynomial::from_terms(terms)
}

/// A symplectic form together with a Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianPair<C> {
    pub form: SymplecticForm<C>,
    pub hamiltonian: Polynomial<C>,
}

/// Completes an admissible `θ` into a pair `(θ⁻¹, ½ xᵀ θA x)`.
pub fn complete_pair(
    theta: &Matrix4<f64>,
    field: &LinearVectorField<f64>,
) -> Result<HamiltonianPair<f64>, PairError> {
    let hamiltonian = hamiltonian_from_form(theta, field)?;
    let form = SymplecticForm::from_lower(theta).map_err(PairError::DegenerateForm)?;
    Ok(HamiltonianPair { form, hamiltonian })
}

/// Hamiltonian vector field of the pair minus the target field. All zero
/// certifies the pair.
pub fn verify_pair<C: Coefficient>(
    pair: &HamiltonianPair<C>,
    field: &LinearVectorField<C>,
) -> [Polynomial<C>; 4] {
    let hvf = hamiltonian_vector_field(&pair.form, &pair.hamiltonian);
    let target = field.components();
    std::array::from_fn(|mu| &hvf[mu] - &target[mu])
}

/// Largest residual coefficient from [`verify_pair`] on a numeric pair.
pub fn max_residual(residual: &[Polynomial<f64>; 4]) -> f64 {
    residual.iter().fold(0.0, |acc, p| acc.max(p.max_abs_coeff()))
}

/// The four oscillator pairs `(ω_μ, S_μ)` with symbolic `m`, `ω`.
pub fn oscillator_pairs() -> [HamiltonianPair<Sym>; 4] {
    std::array::from_fn(|mu| HamiltonianPair {
        form: oscillator::form(mu),
        hamiltonian: oscillator::hamiltonian(mu),
    })
}

/// Pairs built from each basis element of the admissible space. Degenerate
/// elements cannot be completed and are listed separately.
#[derive(Debug, Clone)]
pub struct PairEnumeration {
    pub basis: InverseFormBasis,
    pub pairs: Vec<HamiltonianPair<f64>>,
    pub degenerate: Vec<Matrix4<f64>>,
}

pub fn enumerate_pairs(field: &LinearVectorField<f64>) -> PairEnumeration {
    let basis = admissible_inverse_forms(field);
    let mut pairs = Vec::new();
    let mut degenerate = Vec::new();
    for theta in &basis.basis {
        match complete_pair(theta, field) {
            Ok(p) => pairs.push(p),
            Err(_) => degenerate.push(*theta),
        }
    }
    PairEnumeration { basis, pairs, degenerate }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundedness {
    BoundedBelow,
    BoundedAbove,
    Unbounded,
}

/// Classifies a quadratic Hamiltonian by the signature of its Hessian.
/// Linear terms are ignored; a semidefinite Hessian counts as bounded.
pub fn classify_boundedness(h: &Polynomial<f64>) -> Boundedness {
    let hess = h.quadratic_hessian();
    let eig = SymmetricEigen::new(hess);
    let scale = eig.eigenvalues.amax().max(f64::MIN_POSITIVE);
    let tol = 1e-12 * scale;
    let min = eig.eigenvalues.min();
    let max = eig.eigenvalues.max();
    if min >= -tol {
        Boundedness::BoundedBelow
    } else if max <= tol {
        Boundedness::BoundedAbove
    } else {
        Boundedness::Unbounded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PhysParams;
    use crate::phase::{mat4_to_numeric, Coord};

    fn tho(p: &PhysParams) -> LinearVectorField<f64> {
        oscillator::field().to_numeric(p)
    }

    fn theta(mu: usize, p: &PhysParams) -> Matrix4<f64> {
        mat4_to_numeric(oscillator::form(mu).lower(), p)
    }

    #[test]
    fn zero_field_admits_every_antisymmetric_matrix() {
        let basis = admissible_inverse_forms(&LinearVectorField::from_matrix(&Matrix4::zeros()));
        assert_eq!(basis.dimension(), 6);
    }

    #[test]
    fn energy_from_canonical_form() {
        let p = PhysParams::unit();
        let h = hamiltonian_from_form(&theta(0, &p), &tho(&p)).unwrap();
        let expected = Polynomial::from_terms([
            ([2, 0, 0, 0], 0.5),
            ([0, 2, 0, 0], 0.5),
            ([0, 0, 2, 0], 0.5),
            ([0, 0, 0, 2], 0.5),
        ]);
        assert!((&h - &expected).max_abs_coeff() < 1e-15);
    }

    #[test]
    fn angular_momentum_from_rotation_form() {
        let p = PhysParams::unit();
        let h = hamiltonian_from_form(&theta(3, &p), &tho(&p)).unwrap();
        let expected = Polynomial::from_terms([([1, 0, 0, 1], 1.0), ([0, 1, 1, 0], -1.0)]);
        assert!((&h - &expected).max_abs_coeff() < 1e-15);
    }

    #[test]
    fn scaling_theta_scales_hamiltonian() {
        let p = PhysParams::new(1.3, 0.8, 1.0).unwrap();
        let field = tho(&p);
        let h = hamiltonian_from_form(&theta(1, &p), &field).unwrap();
        let h3 = hamiltonian_from_form(&(theta(1, &p) * -2.5), &field).unwrap();
        assert!((&h3 - &h.scale(&-2.5)).max_abs_coeff() < 1e-14);
    }

    #[test]
    fn rejects_non_admissible_theta() {
        let p = PhysParams::unit();
        let mut th = Matrix4::zeros();
        th[(0, 1)] = 1.0;
        th[(1, 0)] = -1.0;
        th[(0, 2)] = 1.0;
        th[(2, 0)] = -1.0;
        assert!(matches!(
            hamiltonian_from_form(&th, &tho(&p)),
            Err(PairError::AsymmetricProduct { .. })
        ));
    }

    #[test]
    fn rejects_degenerate_theta() {
        // zero field: every θ is admissible, a rank-2 one is degenerate
        let field = LinearVectorField::from_matrix(&Matrix4::zeros());
        let th = antisymmetric(&[0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(hamiltonian_from_form(&th, &field), Err(PairError::DegenerateForm(_))));
    }

    #[test]
    fn added_constant_keeps_pair_valid() {
        let mut pair = oscillator_pairs()[0].clone();
        pair.hamiltonian = &pair.hamiltonian + &Polynomial::constant(Sym::rational(17, 5));
        assert!(verify_pair(&pair, &oscillator::field()).iter().all(Polynomial::is_zero));
    }

    #[test]
    fn mismatched_pair_leaves_residual() {
        let pair = HamiltonianPair {
            form: oscillator::form(0),
            hamiltonian: oscillator::hamiltonian(1),
        };
        let res = verify_pair(&pair, &oscillator::field());
        // ω₀ with S₁ gives ẋ = p_y/m, so ẋ − p_x/m = p_y/m − p_x/m
        let expected_x = Polynomial::from_terms([
            ([0, 0, 0, 1], Sym::power(-1, 0)),
            ([0, 0, 1, 0], -Sym::power(-1, 0)),
        ]);
        assert_eq!(res[Coord::X.index()], expected_x);
    }

    #[test]
    fn boundedness_of_canned_hamiltonians() {
        let p = PhysParams::new(0.7, 1.9, 1.0).unwrap();
        let labels: Vec<_> = (0..4)
            .map(|mu| classify_boundedness(&oscillator::hamiltonian(mu).to_numeric(&p)))
            .collect();
        assert_eq!(
            labels,
            [Boundedness::BoundedBelow, Boundedness::Unbounded, Boundedness::Unbounded, Boundedness::Unbounded]
        );
    }
}
