//! Mixed position/momentum kernels `⟨x, y | p_x, p_y⟩` and the ordering
//! choices made when quantizing quadratic observables.

use symplectic_lab::phase::{oscillator, Coord, Polynomial};
use symplectic_lab::quantum::{all_schemes, kernel_overlap, ordering_ambiguities, quantize_observable};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::unit();
    let xy = &Polynomial::coordinate(Coord::X) * &Polynomial::coordinate(Coord::Py);
    for s in all_schemes(&params) {
        match kernel_overlap(&s, 0.5, -0.2, 1.0, 0.3) {
            Ok(k) => print!("scheme {}: kernel {k:.4}", s.id()),
            Err(e) => print!("scheme {}: {e}", s.id()),
        }
        let own = oscillator::hamiltonian(s.id()).to_numeric(&params);
        println!(
            "; S ambiguities {}, x*p_y ambiguities {}",
            ordering_ambiguities(&s, &own).len(),
            ordering_ambiguities(&s, &xy).len()
        );
        println!("  x*p_y -> {}", quantize_observable(&s, &xy).unwrap());
    }
}
