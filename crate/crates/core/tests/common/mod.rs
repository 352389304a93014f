//! Reference computations shared by the integration tests. Nothing here
//! calls into the grid engine or the null-space solver.

#![allow(dead_code)]

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;
use symplectic_lab::quantum::GaussianPacket;
use symplectic_lab::PhysParams;

/// Linear combination `a·x + b·y + c·∂x + d·∂y`.
pub type Linear = [Complex64; 4];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The fundamental operators of each scheme as combinations of
/// multiplication and derivative, order `x, y, p_x, p_y`.
pub fn representation(scheme: usize, p: &PhysParams) -> [Linear; 4] {
    let h = p.hbar;
    let mw = p.m * p.omega;
    let z = c(0.0, 0.0);
    let x = [c(1.0, 0.0), z, z, z];
    let y = [z, c(1.0, 0.0), z, z];
    match scheme {
        0 => [x, y, [z, z, c(0.0, -h), z], [z, z, z, c(0.0, -h)]],
        1 => [x, y, [z, z, z, c(0.0, -h)], [z, z, c(0.0, -h), z]],
        2 => [x, y, [z, z, c(0.0, h), z], [z, z, z, c(0.0, -h)]],
        3 => [x, [z, z, c(0.0, h / mw), z], [z, c(mw, 0.0), z, z], [z, z, z, c(0.0, h)]],
        _ => panic!("no scheme {scheme}"),
    }
}

fn combine(a: &Linear, wa: f64, b: &Linear, wb: f64) -> Linear {
    std::array::from_fn(|k| a[k] * wa + b[k] * wb)
}

/// Heisenberg observable at time `t` from the classical oscillator
/// solution, index `0..4` for `x, y, p_x, p_y`.
pub fn heisenberg_linear(scheme: usize, which: usize, t: f64, p: &PhysParams) -> Linear {
    let r = representation(scheme, p);
    let (s, co) = (p.omega * t).sin_cos();
    let mw = p.m * p.omega;
    match which {
        0 => combine(&r[0], co, &r[2], s / mw),
        1 => combine(&r[1], co, &r[3], s / mw),
        2 => combine(&r[2], co, &r[0], -mw * s),
        3 => combine(&r[3], co, &r[1], -mw * s),
        _ => panic!("no observable {which}"),
    }
}

/// First moments `⟨x⟩, ⟨y⟩, ⟨∂x⟩, ⟨∂y⟩` of the packet.
pub fn primitive_means(g: &GaussianPacket) -> Linear {
    [c(g.center[0], 0.0), c(g.center[1], 0.0), c(0.0, g.wavevector[0]), c(0.0, g.wavevector[1])]
}

/// Centered ordered second moments `⟨(P_i − p_i)(P_j − p_j)⟩`.
pub fn centered_moments(g: &GaussianPacket) -> [[Complex64; 4]; 4] {
    let s2 = g.sigma * g.sigma;
    let mut m = [[c(0.0, 0.0); 4]; 4];
    for axis in 0..2 {
        let (q, d) = (axis, axis + 2);
        m[q][q] = c(s2, 0.0);
        m[d][d] = c(-1.0 / (4.0 * s2), 0.0);
        m[q][d] = c(-0.5, 0.0);
        m[d][q] = c(0.5, 0.0);
    }
    m
}

pub fn gaussian_mean(op: &Linear, g: &GaussianPacket) -> Complex64 {
    op.iter().zip(primitive_means(g)).map(|(a, b)| a * b).sum()
}

/// Variance of a Hermitian linear operator in the packet.
pub fn gaussian_variance(op: &Linear, g: &GaussianPacket) -> f64 {
    let m = centered_moments(g);
    let mut v = c(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            v += op[i] * op[j] * m[i][j];
        }
    }
    v.re
}

/// Linear field of the oscillator as an exact rational matrix.
pub fn oscillator_field_rational(m: Rational64, omega: Rational64) -> [[Rational64; 4]; 4] {
    let z = Rational64::zero();
    let inv_m = m.recip();
    let k = -(m * omega * omega);
    [[z, z, inv_m, z], [z, z, z, inv_m], [k, z, z, z], [z, k, z, z]]
}

const SLOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn antisym(params: &[i64; 6]) -> [[Rational64; 4]; 4] {
    let mut t = [[Rational64::zero(); 4]; 4];
    for (&(i, j), &v) in SLOTS.iter().zip(params) {
        t[i][j] = Rational64::from_integer(v);
        t[j][i] = Rational64::from_integer(-v);
    }
    t
}

fn satisfies(theta: &[[Rational64; 4]; 4], a: &[[Rational64; 4]; 4]) -> bool {
    (0..4).all(|i| {
        (0..4).all(|j| {
            let mut s = Rational64::zero();
            for k in 0..4 {
                s += theta[i][k] * a[k][j] + a[k][i] * theta[k][j];
            }
            s.is_zero()
        })
    })
}

/// Rank of a set of rational vectors by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row: Vec<Rational64> = rows[rank].iter().map(|v| *v * inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Dimension of the admissible space estimated by testing every integer
/// antisymmetric matrix with entries in `-k..=k` and taking the rank of
/// those that pass.
pub fn brute_force_dimension(a: &[[Rational64; 4]; 4], k: i64) -> usize {
    let side = (2 * k + 1) as usize;
    let mut hits = Vec::new();
    for n in 0..side.pow(6) {
        let mut rest = n;
        let params: [i64; 6] = std::array::from_fn(|_| {
            let d = (rest % side) as i64 - k;
            rest /= side;
            d
        });
        if satisfies(&antisym(&params), a) {
            hits.push(params.iter().map(|&v| Rational64::from_integer(v)).collect());
        }
    }
    rational_rank(hits)
}

/// Störmer–Verlet integration of `H = |p|²/2m + mω²|q|²/2`.
pub fn leapfrog(state: [f64; 4], t: f64, dt: f64, p: &PhysParams) -> [f64; 4] {
    let steps = (t / dt).round() as usize;
    let h = t / steps as f64;
    let k = p.m * p.omega * p.omega;
    let [mut x, mut y, mut px, mut py] = state;
    for _ in 0..steps {
        px -= 0.5 * h * k * x;
        py -= 0.5 * h * k * y;
        x += h * px / p.m;
        y += h * py / p.m;
        px -= 0.5 * h * k * x;
        py -= 0.5 * h * k * y;
    }
    [x, y, px, py]
}

/// Deterministic random packet with moderate width, offset and momentum,
/// comfortably inside the default grid.
pub fn random_packet(rng: &mut impl rand::Rng, p: &PhysParams) -> GaussianPacket {
    let l = p.length_scale();
    let sigma = l * rng.gen_range(0.4..0.8);
    let center = [l * rng.gen_range(-0.8..0.8), l * rng.gen_range(-0.8..0.8)];
    let wavevector = [rng.gen_range(-1.5..1.5) / l, rng.gen_range(-1.5..1.5) / l];
    GaussianPacket::new(center, wavevector, sigma).unwrap()
}
