use nalgebra::Matrix4;

use super::coeff::Coefficient;
use super::form::{mat4_from_nalgebra, mat4_to_numeric, Mat4, SymplecticForm};
use super::poly::{Coord, Polynomial};
use crate::params::PhysParams;

/// `{f, g} = ∂_μ f ω^{μν} ∂_ν g`, computed exactly in the coefficient ring.
pub fn poisson_bracket<C: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    form: &SymplecticForm<C>,
) -> Polynomial<C> {
    let df = f.gradient();
    let dg = g.gradient();
    let mut out = Polynomial::zero();
    for (mu, dfm) in df.iter().enumerate() {
        if dfm.is_zero() {
            continue;
        }
        for (nu, dgn) in dg.iter().enumerate() {
            let w = &form.upper()[mu][nu];
            if w.is_zero() || dgn.is_zero() {
                continue;
            }
            out = out + (dfm * dgn).scale(w);
        }
    }
    out
}

/// Components `ω^{μν} ∂_ν H` of the Hamiltonian vector field.
pub fn hamiltonian_vector_field<C: Coefficient>(
    form: &SymplecticForm<C>,
    hamiltonian: &Polynomial<C>,
) -> [Polynomial<C>; 4] {
    let grad = hamiltonian.gradient();
    std::array::from_fn(|mu| {
        grad.iter().enumerate().fold(Polynomial::zero(), |acc, (nu, g)| {
            acc + g.scale(&form.upper()[mu][nu])
        })
    })
}

/// Linear dynamics `ẋ^μ = A^μ_ν x^ν`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearVectorField<C> {
    pub matrix: Mat4<C>,
}

impl<C: Coefficient> LinearVectorField<C> {
    pub fn new(matrix: Mat4<C>) -> Self {
        Self { matrix }
    }

    /// Right-hand sides as linear polynomials.
    pub fn components(&self) -> [Polynomial<C>; 4] {
        std::array::from_fn(|mu| {
            Polynomial::from_terms(Coord::ALL.iter().map(|&c| {
                let mut e = [0; 4];
                e[c.index()] = 1;
                (e, self.matrix[mu][c.index()].clone())
            }))
        })
    }

    pub fn to_numeric(&self, params: &PhysParams) -> LinearVectorField<f64> {
        LinearVectorField::new(mat4_from_nalgebra(&mat4_to_numeric(&self.matrix, params)))
    }
}

impl LinearVectorField<f64> {
    pub fn from_matrix(a: &Matrix4<f64>) -> Self {
        Self::new(mat4_from_nalgebra(a))
    }

    pub fn matrix4(&self) -> Matrix4<f64> {
        Matrix4::from_fn(|i, j| self.matrix[i][j])
    }
}

/// Time derivative `∂_μ f (A x)^μ` of `f` along the field.
pub fn lie_derivative<C: Coefficient>(
    f: &Polynomial<C>,
    field: &LinearVectorField<C>,
) -> Polynomial<C> {
    f.gradient()
        .iter()
        .zip(field.components().iter())
        .fold(Polynomial::zero(), |acc, (d, v)| acc + d * v)
}

/// Whether `f` is conserved by the flow of `field`; only the equations of
/// motion are used, no particular (ω, H) pair.
pub fn is_constant_of_motion<C: Coefficient>(f: &Polynomial<C>, field: &LinearVectorField<C>) -> bool {
    lie_derivative(f, field).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::oscillator;
    use crate::phase::Sym;
    use num_traits::{One, Zero};

    fn coords() -> [Polynomial<Sym>; 4] {
        Coord::ALL.map(Polynomial::coordinate)
    }

    #[test]
    fn canonical_bracket_x_px_is_one() {
        let [x, _, px, _] = coords();
        let b = poisson_bracket(&x, &px, &oscillator::form(0));
        assert_eq!(b, Polynomial::constant(Sym::one()));
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let [x, ..] = coords();
        for mu in 0..4 {
            assert!(poisson_bracket(&x, &x, &oscillator::form(mu)).is_zero());
        }
    }

    #[test]
    fn noncommuting_coordinates_in_rotation_form() {
        let [x, y, ..] = coords();
        let b = poisson_bracket(&x, &y, &oscillator::form(3));
        let unit = PhysParams::unit();
        assert_eq!(b.to_numeric(&unit), Polynomial::constant(-1.0));
        assert_eq!(b, Polynomial::constant(-Sym::power(-1, -1)));
    }

    #[test]
    fn energy_commutes_with_rotation_generator() {
        let b = poisson_bracket(&oscillator::hamiltonian(0), &oscillator::hamiltonian(3), &oscillator::form(0));
        assert!(b.is_zero());
    }

    #[test]
    fn constant_hamiltonian_has_zero_field() {
        let h = Polynomial::constant(Sym::rational(7, 3));
        for mu in 0..4 {
            assert!(hamiltonian_vector_field(&oscillator::form(mu), &h).iter().all(Polynomial::is_zero));
        }
    }

    #[test]
    fn constants_of_motion() {
        let field = oscillator::field();
        assert!(is_constant_of_motion(&oscillator::hamiltonian(1), &field));
        assert!(!is_constant_of_motion(&Polynomial::coordinate(Coord::X), &field));
        assert!(is_constant_of_motion(&Polynomial::constant(Sym::integer(5)), &field));
        assert!(is_constant_of_motion(&Polynomial::<Sym>::zero(), &field));
        assert!(Sym::zero().is_zero());
    }
}
