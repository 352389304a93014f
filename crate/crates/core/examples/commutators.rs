//! Measures every fundamental commutator on a grid wavefunction and prints
//! the table `⟨[Â, B̂]⟩ / iħ` for each quantization scheme.

use symplectic_lab::phase::Coord;
use symplectic_lab::quantum::{all_schemes, GaussianPacket, GridSpec, QuantumEngine};
use symplectic_lab::PhysParams;

fn main() {
    let params = PhysParams::new(2.0, 0.5, 1.0).unwrap();
    let grid = GridSpec::default_for(&params);
    let engine = QuantumEngine::new(grid).unwrap();
    let psi = GaussianPacket::ground(&params).sample(grid);

    for s in all_schemes(&params) {
        let check = engine.commutator_table_check(&s, &psi).unwrap();
        println!("scheme {}: max deviation {:.1e}", s.id(), check.max_deviation);
        print!("{:>6}", "");
        for b in Coord::ALL {
            print!("{:>8}", b.name());
        }
        println!();
        for a in Coord::ALL {
            print!("{:>6}", a.name());
            for b in Coord::ALL {
                let v = check.measured[a.index()][b.index()] / num_complex::Complex64::new(0.0, params.hbar);
                print!("{:>8.3}", v.re);
            }
            println!();
        }
    }
}
