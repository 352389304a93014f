//! `[x̂(t), x̂(t′)]`: a c-number that vanishes in schemes 1 and 3, so
//! `x` can be monitored there without disturbing it.

use symplectic_lab::quantum::{all_schemes, GaussianPacket, GridSpec, QuantumEngine};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::unit();
    let grid = GridSpec::default_for(&params);
    let engine = QuantumEngine::new(grid).unwrap();
    let psi = GaussianPacket::ground(&params).sample(grid);

    for (t, t2) in [(0.0, 0.5), (0.3, 1.9), (1.0, 4.0)] {
        print!("t = {t:.1}, t' = {t2:.1}:");
        for s in all_schemes(&params) {
            let c = engine.two_time_commutator(&s, t, t2, &psi).unwrap();
            print!("  s{} {:+.6}i", s.id(), c.value.im);
        }
        println!("   sin(t'-t) = {:+.6}", (t2 - t).sin());
    }
}
