//! The 2-D isotropic oscillator and its four Hamiltonian descriptions,
//! with `m` and `ω` kept symbolic.
//!
//! | μ | brackets                              | Hamiltonian                         |
//! |---|---------------------------------------|-------------------------------------|
//! | 0 | {x,p_x} = 1, {y,p_y} = 1              | ½(p_x²/m + mω²x² + p_y²/m + mω²y²)  |
//! | 1 | {x,p_y} = 1, {y,p_x} = 1              | p_x p_y/m + mω² x y                 |
//! | 2 | {x,p_x} = −1, {y,p_y} = 1             | (p_y² − p_x²)/(2m) + ½mω²(y² − x²)  |
//! | 3 | {x,y} = −1/(mω), {p_x,p_y} = −mω      | ω(x p_y − y p_x)                    |

use num_traits::Zero;

use super::bracket::LinearVectorField;
use super::coeff::Sym;
use super::form::{mat4_from_fn, Mat4, SymplecticForm};
use super::poly::Polynomial;

/// Number of canned (ω, H) pairs.
pub const PAIR_COUNT: usize = 4;

fn sparse(entries: &[(usize, usize, Sym)]) -> Mat4<Sym> {
    let mut m = mat4_from_fn(|_, _| Sym::zero());
    for (i, j, v) in entries {
        m[*i][*j] = v.clone();
    }
    m
}

/// Bracket matrix `ω_μ^{αβ}` of pair `mu`.
///
/// # Panics
/// If `mu >= 4`.
pub fn upper_matrix(mu: usize) -> Mat4<Sym> {
    let one = Sym::integer(1);
    let neg = Sym::integer(-1);
    match mu {
        0 => sparse(&[(0, 2, one.clone()), (1, 3, one.clone()), (2, 0, neg.clone()), (3, 1, neg)]),
        1 => sparse(&[(0, 3, one.clone()), (1, 2, one.clone()), (2, 1, neg.clone()), (3, 0, neg)]),
        2 => sparse(&[(0, 2, neg.clone()), (1, 3, one.clone()), (2, 0, one), (3, 1, neg)]),
        3 => {
            let inv = Sym::power(-1, -1);
            let mw = Sym::power(1, 1);
            sparse(&[(0, 1, -inv.clone()), (1, 0, inv), (2, 3, -mw.clone()), (3, 2, mw)])
        }
        _ => panic!("pair index {mu} out of range"),
    }
}

/// Lower-index matrix `(ω_μ)_{αβ}`, the inverse of [`upper_matrix`].
pub fn lower_matrix(mu: usize) -> Mat4<Sym> {
    match mu {
        // these three square to −1
        0..=2 => upper_matrix(mu).map(|row| row.map(|v| -v)),
        3 => {
            let inv = Sym::power(-1, -1);
            let mw = Sym::power(1, 1);
            sparse(&[(0, 1, mw.clone()), (1, 0, -mw), (2, 3, inv.clone()), (3, 2, -inv)])
        }
        _ => panic!("pair index {mu} out of range"),
    }
}

pub fn form(mu: usize) -> SymplecticForm<Sym> {
    SymplecticForm::with_inverse(upper_matrix(mu), lower_matrix(mu))
        .expect("canned forms are exact inverses")
}

/// Hamiltonian `S_μ`.
pub fn hamiltonian(mu: usize) -> Polynomial<Sym> {
    let half = Sym::rational(1, 2);
    let inv_m = Sym::power(-1, 0);
    let m_w2 = Sym::power(1, 2);
    match mu {
        0 => Polynomial::from_terms([
            ([0, 0, 2, 0], half.clone() * inv_m.clone()),
            ([2, 0, 0, 0], half.clone() * m_w2.clone()),
            ([0, 0, 0, 2], half.clone() * inv_m),
            ([0, 2, 0, 0], half * m_w2),
        ]),
        1 => Polynomial::from_terms([([0, 0, 1, 1], inv_m), ([1, 1, 0, 0], m_w2)]),
        2 => Polynomial::from_terms([
            ([0, 0, 0, 2], half.clone() * inv_m.clone()),
            ([0, 0, 2, 0], -(half.clone() * inv_m)),
            ([0, 2, 0, 0], half.clone() * m_w2.clone()),
            ([2, 0, 0, 0], -(half * m_w2)),
        ]),
        3 => Polynomial::from_terms([
            ([1, 0, 0, 1], Sym::omega()),
            ([0, 1, 1, 0], -Sym::omega()),
        ]),
        _ => panic!("pair index {mu} out of range"),
    }
}

/// Equations of motion: ẋ = p_x/m, ẏ = p_y/m, ṗ_x = −mω²x, ṗ_y = −mω²y.
pub fn field() -> LinearVectorField<Sym> {
    let inv_m = Sym::power(-1, 0);
    let spring = -Sym::power(1, 2);
    LinearVectorField::new(sparse(&[
        (0, 2, inv_m.clone()),
        (1, 3, inv_m),
        (2, 0, spring.clone()),
        (3, 1, spring),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PhysParams;
    use crate::phase::form::mat4_to_numeric;

    #[test]
    fn canned_forms_are_valid() {
        let p = PhysParams::new(1.7, 0.4, 1.0).unwrap();
        for mu in 0..PAIR_COUNT {
            let f = form(mu);
            let num = mat4_to_numeric(f.upper(), &p);
            crate::phase::validate_form(&num).unwrap();
        }
    }

    #[test]
    #[should_panic]
    fn out_of_range() {
        let _ = form(4);
    }
}
