//! Uncertainty products against each scheme's bound. A ground-width packet
//! saturates the bound; a packet twice as wide in variance only does so at
//! `t = 0` and reaches `5ħ/8` at `ωt = π/4`.

use std::f64::consts::PI;

use symplectic_lab::quantum::{all_schemes, GaussianPacket, GridSpec, QuantumEngine};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::unit();
    let grid = GridSpec::default_for(&params);
    let engine = QuantumEngine::new(grid).unwrap();
    let ground = GaussianPacket::ground(&params);
    let wide = GaussianPacket { sigma: ground.sigma * 2f64.sqrt(), ..ground };

    for (label, packet) in [("ground", ground), ("wide", wide)] {
        let psi = packet.sample(grid);
        println!("{label} packet, sigma = {:.4}", packet.sigma);
        for s in all_schemes(&params) {
            for (a, b) in s.nontrivial_pairs() {
                let at = |t: f64| engine.uncertainty_product(&s, (a, b), &psi, t).unwrap();
                println!(
                    "  scheme {} d{a} d{b}: t=0 {:.6}  t=pi/4 {:.6}  bound {:.6}",
                    s.id(),
                    at(0.0),
                    at(PI / 4.0),
                    s.uncertainty_bound(a, b)
                );
            }
        }
    }
}
