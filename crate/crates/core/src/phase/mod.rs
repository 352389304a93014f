//! Phase-space polynomial algebra, constant symplectic forms, Poisson
//! brackets and Hamiltonian vector fields on ℝ⁴ with coordinates
//! `(x, y, p_x, p_y)`.

mod bracket;
mod coeff;
mod form;
pub mod oscillator;
mod poly;

pub use bracket::{
    hamiltonian_vector_field, is_constant_of_motion, lie_derivative, poisson_bracket,
    LinearVectorField,
};
pub use coeff::{Coefficient, Sym};
pub use form::{
    jacobi_violation, mat4_from_fn, mat4_from_nalgebra, mat4_mul, mat4_to_numeric,
    mat4_transpose, validate_form, FormError, Mat4, SymplecticForm,
};
pub use poly::{Coord, Exponents, Polynomial};

/// Polynomial observable with symbolic `m`, `ω` coefficients.
pub type SymbolicObservable = Polynomial<Sym>;
/// Polynomial observable with floating-point coefficients.
pub type Observable = Polynomial<f64>;
