//! Non-vanishing Poisson brackets of the coordinates under each of the four
//! oscillator symplectic forms, with `m` and `ω` kept symbolic.

use symplectic_lab::phase::{jacobi_violation, oscillator, poisson_bracket, Coord, Polynomial, Sym};

fn main() {
    for mu in 0..oscillator::PAIR_COUNT {
        let form = oscillator::form(mu);
        println!("form {mu}  (Jacobi defect {:e})", jacobi_violation(&form));
        for (i, &a) in Coord::ALL.iter().enumerate() {
            for &b in &Coord::ALL[i + 1..] {
                let pb = poisson_bracket(&Polynomial::<Sym>::coordinate(a), &Polynomial::coordinate(b), &form);
                if !pb.is_zero() {
                    println!("  {{{a}, {b}}} = {pb}");
                }
            }
        }
        println!("  S = {}", oscillator::hamiltonian(mu));
    }
}
