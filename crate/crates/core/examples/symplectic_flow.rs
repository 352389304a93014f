//! The exact oscillator flow preserves all four symplectic forms and
//! conserves all four Hamiltonians.

use symplectic_lab::flow::{conserved_along_flow, default_samples, exact_flow, verify_flow_symplectic, PhaseState};
use symplectic_lab::phase::oscillator;
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::new(1.3, 0.8, 1.0).unwrap();
    let s0 = PhaseState::new(1.0, -0.5, 0.2, 0.9);
    let times = default_samples(&params);

    for t in [0.0, 1.0, params.period() / 4.0, params.period()] {
        let s = exact_flow(s0, t, &params);
        println!("t = {t:6.3}  x = {:+.6}  y = {:+.6}  p_x = {:+.6}  p_y = {:+.6}", s.x, s.y, s.px, s.py);
    }
    for mu in 0..oscillator::PAIR_COUNT {
        let form = oscillator::form(mu).to_numeric(&params);
        let worst = times.iter().map(|&t| verify_flow_symplectic(&form, t, &params).max_deviation).fold(0.0, f64::max);
        let h = oscillator::hamiltonian(mu).to_numeric(&params);
        let drift = conserved_along_flow(&h, s0, &times, &params);
        println!("form {mu}: max |J^T w J - w| = {worst:.1e}, S_{mu} = {:+.6}, drift {drift:.1e}", h.evaluate(s0.to_array()));
    }
}
