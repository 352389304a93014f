//! Quantum theories obtained by applying Dirac's rule to each oscillator
//! symplectic form, represented on a periodic 2-D grid.
//!
//! Operators are kept as expressions over four primitives (multiplication
//! by `x` or `y`, and spectral `∂x`, `∂y`) and applied functionally; only
//! [`unitary`] builds dense matrices.

mod engine;
mod grid;
mod operator;
mod scheme;
pub mod unitary;

use thiserror::Error;

pub use engine::{CommutatorCheck, QuantumEngine, TwoTimeCommutator};
pub use grid::{GaussianPacket, GridSpec, Localization, WaveFunction, LOCALIZATION_THRESHOLD};
pub use operator::{NormalForm, OperatorExpr, Primitive, Term};
pub use scheme::{
    all_schemes, heisenberg_operator, kernel_overlap, ordering_ambiguities, quantize_observable,
    scheme, QuantizationScheme, SCHEME_COUNT,
};
pub use unitary::{unitary_conjugation_check, ConjugationOracle, MAX_DENSE_POINTS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("unknown scheme id {0}; expected 0..=3")]
    UnknownScheme(usize),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid packet: {0}")]
    InvalidPacket(String),
    #[error("wavefunction grid does not match engine grid")]
    GridMismatch,
    #[error("observables of degree {0} are unsupported (max 2)")]
    DegreeUnsupported(u32),
    #[error("no common momentum basis: the momenta do not commute in scheme 3")]
    NoCommonMomentumBasis,
    #[error("grid too large for dense matrices: N = {points} > {max}")]
    GridTooLarge { points: usize, max: usize },
    #[error("eigendecomposition failed: {0}")]
    Eigendecomposition(String),
}
