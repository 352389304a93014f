//! The same initial wavefunction evolved in the four theories: `⟨x̂(t)⟩`
//! differs between schemes although every theory reproduces the classical
//! equations of motion.

use std::f64::consts::PI;

use symplectic_lab::phase::Coord;
use symplectic_lab::quantum::{all_schemes, heisenberg_operator, GaussianPacket, GridSpec, QuantumEngine};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::unit();
    let grid = GridSpec::default_for(&params);
    let engine = QuantumEngine::new(grid).unwrap();
    let packet = GaussianPacket::new([1.0, 0.0], [1.0, 0.0], params.ground_width()).unwrap();
    let psi = packet.sample(grid);
    let schemes = all_schemes(&params);

    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "t", "scheme 0", "scheme 1", "scheme 2", "scheme 3");
    for k in 0..=8 {
        let t = k as f64 * PI / 8.0;
        print!("{t:>8.4}");
        for s in &schemes {
            let mean = engine.expectation(&heisenberg_operator(s, Coord::X, t), &psi).unwrap();
            print!(" {:>10.6}", mean.re);
        }
        println!();
    }
}
