//! Finds every constant symplectic form that turns the oscillator field
//! into a Hamiltonian one, then builds and classifies the Hamiltonians.
//!
//! ```text
//! cargo run --example pair_search -- 2.0 0.5
//! ```

use symplectic_lab::pairs::{classify_boundedness, enumerate_pairs, max_residual, verify_pair};
use symplectic_lab::phase::{mat4_to_numeric, oscillator};
use symplectic_lab::PhysParams;

fn main() {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric m and omega")).collect();
    let (m, omega) = match args.as_slice() {
        [m, omega] => (*m, *omega),
        _ => (1.0, 1.0),
    };
    let params = PhysParams::new(m, omega, 1.0).expect("positive parameters");
    let field = oscillator::field().to_numeric(&params);

    let found = enumerate_pairs(&field);
    println!("admissible inverse forms: dimension {}", found.basis.dimension());
    for (k, pair) in found.pairs.iter().enumerate() {
        let residual = max_residual(&verify_pair(pair, &field));
        let kind = classify_boundedness(&pair.hamiltonian);
        println!("basis pair {k}: residual {residual:.1e}, {kind:?}");
        println!("  H = {}", pair.hamiltonian.pruned(1e-12));
    }
    println!("{} basis elements were degenerate", found.degenerate.len());

    for mu in 0..oscillator::PAIR_COUNT {
        let theta = mat4_to_numeric(&oscillator::lower_matrix(mu), &params);
        println!("canonical form {mu}: distance from admissible span {:.1e}", found.basis.residual(&theta));
    }
}
