use std::f64::consts::PI;

use num_complex::Complex64;

use super::operator::OperatorExpr;
use super::QuantumError;
use crate::params::PhysParams;
use crate::phase::{mat4_to_numeric, oscillator, Coord, Exponents, Polynomial, Sym, SymplecticForm};

/// Number of quantization schemes, one per oscillator pair.
pub const SCHEME_COUNT: usize = 4;

/// Relative tolerance for symbolic commutation tests on normal forms.
const COMMUTE_TOL: f64 = 1e-12;

/// Operator algebra obtained from one of the oscillator symplectic forms,
/// with a concrete representation of `x̂₀, ŷ₀, p̂_{x0}, p̂_{y0}` on
/// `L²(ℝ², dx dy)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizationScheme {
    id: usize,
    params: PhysParams,
    commutators: [[Complex64; 4]; 4],
    assignment: [OperatorExpr; 4],
}

/// Builds scheme `id`. The commutator table is `iħ` times the bracket
/// matrix of form `id`; the representations are
///
/// | id | x̂₀ | ŷ₀ | p̂_{x0} | p̂_{y0} |
/// |----|----|----|--------|--------|
/// | 0 | x | y | (ħ/i)∂x | (ħ/i)∂y |
/// | 1 | x | y | (ħ/i)∂y | (ħ/i)∂x |
/// | 2 | x | y | −(ħ/i)∂x | (ħ/i)∂y |
/// | 3 | x | (iħ/mω)∂x | mω y | iħ∂y |
pub fn scheme(id: usize, params: &PhysParams) -> Result<QuantizationScheme, QuantumError> {
    if id >= SCHEME_COUNT {
        return Err(QuantumError::UnknownScheme(id));
    }
    let hbar = params.hbar;
    let i = Complex64::i();
    let minus_i_hbar = -i * hbar; // ħ/i
    let x = OperatorExpr::x();
    let y = OperatorExpr::y();
    let dx = OperatorExpr::dx();
    let dy = OperatorExpr::dy();
    let assignment = match id {
        0 => [x, y, dx.scale(minus_i_hbar), dy.scale(minus_i_hbar)],
        1 => [x, y, dy.scale(minus_i_hbar), dx.scale(minus_i_hbar)],
        2 => [x, y, dx.scale(-minus_i_hbar), dy.scale(minus_i_hbar)],
        _ => {
            let mw = params.m_omega();
            [x, dx.scale(i * hbar / mw), &y * mw, dy.scale(i * hbar)]
        }
    };
    let upper = mat4_to_numeric(oscillator::form(id).upper(), params);
    let commutators = std::array::from_fn(|a| std::array::from_fn(|b| i * hbar * upper[(a, b)]));
    Ok(QuantizationScheme { id, params: *params, commutators, assignment })
}

/// All four schemes.
pub fn all_schemes(params: &PhysParams) -> Vec<QuantizationScheme> {
    (0..SCHEME_COUNT).map(|id| scheme(id, params).expect("valid id")).collect()
}

impl QuantizationScheme {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn params(&self) -> &PhysParams {
        &self.params
    }

    /// `C^{ab} = iħ ω^{ab}`, indexed by [`Coord::index`].
    pub fn commutators(&self) -> &[[Complex64; 4]; 4] {
        &self.commutators
    }

    pub fn commutator(&self, a: Coord, b: Coord) -> Complex64 {
        self.commutators[a.index()][b.index()]
    }

    /// Concrete operator for the fundamental observable at `t = 0`.
    pub fn fundamental(&self, which: Coord) -> &OperatorExpr {
        &self.assignment[which.index()]
    }

    pub fn assignment(&self) -> &[OperatorExpr; 4] {
        &self.assignment
    }

    /// Classical symplectic form this scheme quantizes.
    pub fn classical_form(&self) -> SymplecticForm<Sym> {
        oscillator::form(self.id)
    }

    /// Classical Hamiltonian `S_id` at the scheme's parameters.
    pub fn hamiltonian(&self) -> Polynomial<f64> {
        oscillator::hamiltonian(self.id).to_numeric(&self.params)
    }

    pub fn quantized_hamiltonian(&self) -> OperatorExpr {
        quantize_observable(self, &self.hamiltonian()).expect("S_μ is quadratic")
    }

    /// Robertson bound `½|⟨[Â(t), B̂(t)]⟩|`. The flow preserves every
    /// oscillator form, so the commutator of Heisenberg operators equals
    /// `C^{ab}` at all times.
    pub fn uncertainty_bound(&self, a: Coord, b: Coord) -> f64 {
        0.5 * self.commutator(a, b).norm()
    }

    /// The pairs with a non-zero bound, each listed once.
    pub fn nontrivial_pairs(&self) -> Vec<(Coord, Coord)> {
        let mut out = Vec::new();
        for (i, &a) in Coord::ALL.iter().enumerate() {
            for &b in &Coord::ALL[i + 1..] {
                if self.commutator(a, b).norm() > 0.0 {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Heisenberg operator `Ô(t)` of a fundamental observable: the classical
/// solution with the scheme's representations substituted.
pub fn heisenberg_operator(s: &QuantizationScheme, which: Coord, t: f64) -> OperatorExpr {
    let p = s.params();
    let (sn, cs) = (p.omega * t).sin_cos();
    let mw = p.m_omega();
    let (q0, p0) = match which {
        Coord::X | Coord::Px => (s.fundamental(Coord::X), s.fundamental(Coord::Px)),
        Coord::Y | Coord::Py => (s.fundamental(Coord::Y), s.fundamental(Coord::Py)),
    };
    match which {
        Coord::X | Coord::Y => &(q0 * cs) + &(p0 * (sn / mw)),
        Coord::Px | Coord::Py => &(q0 * (-mw * sn)) + &(p0 * cs),
    }
}

fn max_coeff(op: &OperatorExpr) -> f64 {
    op.terms().iter().fold(0.0, |acc, t| acc.max(t.coeff.norm()))
}

fn factors_of(exponents: &Exponents) -> Vec<Coord> {
    Coord::ALL
        .iter()
        .flat_map(|&c| std::iter::repeat_n(c, exponents[c.index()] as usize))
        .collect()
}

fn factors_commute(s: &QuantizationScheme, a: Coord, b: Coord) -> bool {
    let (oa, ob) = (s.fundamental(a), s.fundamental(b));
    oa.commutes_with(ob, COMMUTE_TOL * (max_coeff(oa) * max_coeff(ob)).max(1.0))
}

/// Monomials of `f` whose two factors do not commute in scheme `s` and
/// therefore get symmetrized by [`quantize_observable`].
pub fn ordering_ambiguities(s: &QuantizationScheme, f: &Polynomial<f64>) -> Vec<Exponents> {
    f.terms()
        .filter_map(|(e, _)| {
            let fs = factors_of(e);
            (fs.len() == 2 && !factors_commute(s, fs[0], fs[1])).then_some(*e)
        })
        .collect()
}

/// Operator for a polynomial of degree at most 2. Products of
/// non-commuting factors are symmetrized.
pub fn quantize_observable(s: &QuantizationScheme, f: &Polynomial<f64>) -> Result<OperatorExpr, QuantumError> {
    if let Some(d) = f.degree().filter(|&d| d > 2) {
        return Err(QuantumError::DegreeUnsupported(d));
    }
    let mut out = OperatorExpr::zero();
    for (e, &coeff) in f.terms() {
        let fs = factors_of(e);
        let op = match fs.as_slice() {
            [] => OperatorExpr::identity(),
            [a] => s.fundamental(*a).clone(),
            [a, b] if factors_commute(s, *a, *b) => s.fundamental(*a).compose(s.fundamental(*b)),
            [a, b] => s.fundamental(*a).symmetrized_product(s.fundamental(*b)),
            _ => unreachable!("degree checked above"),
        };
        out = &out + &(&op * coeff);
    }
    Ok(out)
}

/// Mixed-basis kernel `⟨x, y | p_x, p_y⟩`. Scheme 3 has no common
/// eigenbasis for the two momenta.
pub fn kernel_overlap(
    s: &QuantizationScheme,
    x: f64,
    y: f64,
    px: f64,
    py: f64,
) -> Result<Complex64, QuantumError> {
    let phase = match s.id() {
        0 => x * px + y * py,
        1 => x * py + y * px,
        2 => -x * px + y * py,
        _ => return Err(QuantumError::NoCommonMomentumBasis),
    };
    let hbar = s.params().hbar;
    Ok(Complex64::from_polar(1.0 / (2.0 * PI * hbar), phase / hbar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i() -> Complex64 {
        Complex64::i()
    }

    #[test]
    fn unknown_id() {
        assert_eq!(scheme(4, &PhysParams::unit()).unwrap_err(), QuantumError::UnknownScheme(4));
    }

    #[test]
    fn momentum_assignments() {
        let p = PhysParams::new(1.5, 2.0, 0.7).unwrap();
        let s0 = scheme(0, &p).unwrap();
        assert!(s0.fundamental(Coord::Px).approx_eq(&OperatorExpr::dx().scale(-i() * 0.7), 0.0));
        let s1 = scheme(1, &p).unwrap();
        assert!(s1.fundamental(Coord::Px).approx_eq(&OperatorExpr::dy().scale(-i() * 0.7), 0.0));
        let s3 = scheme(3, &p).unwrap();
        assert!(s3.fundamental(Coord::Px).approx_eq(&(&OperatorExpr::y() * 3.0), 0.0));
    }

    #[test]
    fn symbolic_commutators_match_table() {
        // the Weyl-algebra commutator of the assignments is the scalar C^{ab}
        let p = PhysParams::new(0.9, 1.7, 1.3).unwrap();
        for s in all_schemes(&p) {
            for a in Coord::ALL {
                for b in Coord::ALL {
                    let k = s.fundamental(a).central_commutator(s.fundamental(b), 1e-12).unwrap();
                    assert!((k - s.commutator(a, b)).norm() < 1e-12, "scheme {} [{a},{b}]", s.id());
                }
            }
        }
    }

    #[test]
    fn heisenberg_at_zero_is_fundamental() {
        let p = PhysParams::new(2.0, 0.5, 1.0).unwrap();
        for s in all_schemes(&p) {
            for c in Coord::ALL {
                assert_eq!(&heisenberg_operator(&s, c, 0.0), s.fundamental(c));
            }
        }
    }

    #[test]
    fn rotation_scheme_position_operator() {
        let p = PhysParams::new(2.0, 0.5, 1.0).unwrap();
        let s = scheme(3, &p).unwrap();
        let t = 0.8;
        let (sn, cs) = (p.omega * t).sin_cos();
        let expected = &(&OperatorExpr::x() * cs) + &(&OperatorExpr::y() * sn);
        assert!(heisenberg_operator(&s, Coord::X, t).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn canonical_position_at_quarter_period() {
        let p = PhysParams::new(2.0, 0.5, 1.1).unwrap();
        let s = scheme(0, &p).unwrap();
        let t = PI / (2.0 * p.omega);
        // (ħ/(mω i)) ∂x
        let expected = OperatorExpr::dx().scale(-i() * p.hbar / p.m_omega());
        assert!(heisenberg_operator(&s, Coord::X, t).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn own_hamiltonians_need_no_symmetrization() {
        let p = PhysParams::new(1.2, 0.7, 0.9).unwrap();
        for s in all_schemes(&p) {
            assert!(ordering_ambiguities(&s, &s.hamiltonian()).is_empty(), "scheme {}", s.id());
        }
        // a foreign Hamiltonian can need it: x p_x in scheme 0
        let s0 = scheme(0, &p).unwrap();
        let xpx = Polynomial::from_terms([([1, 0, 1, 0], 1.0)]);
        assert_eq!(ordering_ambiguities(&s0, &xpx), vec![[1, 0, 1, 0]]);
        let op = quantize_observable(&s0, &xpx).unwrap();
        // ½(x p + p x) = x p + iħ/2... normal form: −iħ x∂x − iħ/2
        let nf = op.normal_form();
        assert!((nf[&[1, 0, 1, 0]] - (-i() * p.hbar)).norm() < 1e-15);
        assert!((nf[&[0, 0, 0, 0]] - (-i() * p.hbar * 0.5)).norm() < 1e-15);
    }

    #[test]
    fn rotation_generator_in_rotation_scheme() {
        // Ŝ₃ = ω(x̂₀ p̂_{y0} − ŷ₀ p̂_{x0}) = iħω(x∂y − y∂x)
        let p = PhysParams::new(1.2, 0.7, 0.9).unwrap();
        let s = scheme(3, &p).unwrap();
        let expected = (&OperatorExpr::x().compose(&OperatorExpr::dy())
            - &OperatorExpr::y().compose(&OperatorExpr::dx()))
            .scale(i() * p.hbar * p.omega);
        assert!(s.quantized_hamiltonian().approx_eq(&expected, 1e-14));
    }

    #[test]
    fn energy_in_canonical_scheme() {
        let p = PhysParams::new(1.2, 0.7, 0.9).unwrap();
        let s = scheme(0, &p).unwrap();
        let lap = &OperatorExpr::dx().compose(&OperatorExpr::dx()) + &OperatorExpr::dy().compose(&OperatorExpr::dy());
        let r2 = &OperatorExpr::x().compose(&OperatorExpr::x()) + &OperatorExpr::y().compose(&OperatorExpr::y());
        let expected = &(&lap * (-p.hbar * p.hbar / (2.0 * p.m))) + &(&r2 * (0.5 * p.m * p.omega * p.omega));
        assert!(s.quantized_hamiltonian().approx_eq(&expected, 1e-14));
    }

    #[test]
    fn constants_and_degree_limit() {
        let s = scheme(2, &PhysParams::unit()).unwrap();
        let op = quantize_observable(&s, &Polynomial::constant(2.5)).unwrap();
        assert!(op.approx_eq(&OperatorExpr::scalar(Complex64::new(2.5, 0.0)), 0.0));
        let cubic = Polynomial::from_terms([([3, 0, 0, 0], 1.0)]);
        assert_eq!(quantize_observable(&s, &cubic).unwrap_err(), QuantumError::DegreeUnsupported(3));
    }

    #[test]
    fn kernels() {
        let p = PhysParams::new(1.0, 1.0, 0.5).unwrap();
        let s0 = scheme(0, &p).unwrap();
        let k = kernel_overlap(&s0, 0.0, 0.0, 0.0, 0.0).unwrap();
        assert!((k - Complex64::new(1.0 / (2.0 * PI * 0.5), 0.0)).norm() < 1e-15);
        // crossed transform: x pairs with p_y
        let s1 = scheme(1, &p).unwrap();
        let k1 = kernel_overlap(&s1, 0.3, 0.0, 0.0, 2.0).unwrap();
        assert!((k1.arg() - 0.3 * 2.0 / 0.5).abs() < 1e-12);
        assert!((kernel_overlap(&s1, 0.3, 0.0, 2.0, 0.0).unwrap().arg()).abs() < 1e-15);
        let s3 = scheme(3, &p).unwrap();
        assert_eq!(kernel_overlap(&s3, 0.0, 0.0, 0.0, 0.0).unwrap_err(), QuantumError::NoCommonMomentumBasis);
    }

    #[test]
    fn bounds_follow_commutator_table() {
        let p = PhysParams::new(2.0, 3.0, 1.0).unwrap();
        let s3 = scheme(3, &p).unwrap();
        assert!((s3.uncertainty_bound(Coord::X, Coord::Y) - 1.0 / 12.0).abs() < 1e-15);
        assert!((s3.uncertainty_bound(Coord::Px, Coord::Py) - 3.0).abs() < 1e-15);
        assert_eq!(s3.nontrivial_pairs(), vec![(Coord::X, Coord::Y), (Coord::Px, Coord::Py)]);
        let s1 = scheme(1, &p).unwrap();
        assert_eq!(s1.nontrivial_pairs(), vec![(Coord::X, Coord::Py), (Coord::Y, Coord::Px)]);
    }
}
