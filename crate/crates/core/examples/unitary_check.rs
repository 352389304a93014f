//! Builds each quantized Hamiltonian as a dense matrix on a 32 x 32 grid and
//! checks that conjugating by `e^{-iŜt/ħ}` gives the closed-form
//! Heisenberg operators.

use std::time::Instant;

use symplectic_lab::phase::Coord;
use symplectic_lab::quantum::{all_schemes, unitary::probe_packet, ConjugationOracle, GridSpec};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::unit();
    let grid = GridSpec::small_for(&params);
    let psi = probe_packet(&params).sample(grid);

    for s in all_schemes(&params) {
        let start = Instant::now();
        let oracle = ConjugationOracle::new(&s, grid).unwrap();
        let spread = oracle.eigenvalues().last().unwrap() - oracle.eigenvalues()[0];
        print!("scheme {} (hermiticity defect {:.1e}, spectral width {spread:.1}):", s.id(), oracle.hermiticity_defect());
        for which in Coord::ALL {
            let dev = oracle.deviation(which, 1.1, &psi).unwrap();
            print!("  {which} {dev:.1e}");
        }
        println!("  [{:.2}s]", start.elapsed().as_secs_f64());
    }
}
