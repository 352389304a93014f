//! Alternative Hamiltonian descriptions of the two-dimensional isotropic
//! harmonic oscillator and the quantum theories they induce.
//!
//! The same equations of motion can be written in Hamiltonian form with
//! several constant symplectic structures, each paired with its own
//! Hamiltonian. Quantizing each structure with `[f̂, ĝ] = iħ {f, g}^` gives
//! internally consistent quantum theories whose expectation values,
//! uncertainty relations and two-time commutators nonetheless disagree.
//!
//! * [`phase`]: polynomial observables, symplectic forms, Poisson brackets.
//! * [`pairs`]: enumeration of every constant form / quadratic Hamiltonian
//!   pair that reproduces a linear vector field.
//! * [`flow`]: closed-form classical flow and its symplecticity.
//! * [`quantum`]: grid representations of the four operator algebras,
//!   Heisenberg-picture observables, moments and commutators.
//! * [`lab`]: scenario files, batch reports and the verification suite
//!   behind the `symlab` binary.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod flow;
pub mod lab;
pub mod pairs;
pub mod params;
pub mod phase;
pub mod quantum;

pub use params::PhysParams;
