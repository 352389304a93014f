use std::time::{SystemTime, UNIX_EPOCH};

use num_complex::Complex64;

use super::report::{Cell, Metadata, PairResidual, Report, UncertaintyRow};
use super::{LabError, Scenario};
use crate::pairs::{max_residual, oscillator_pairs, verify_pair};
use crate::phase::oscillator;
use crate::quantum::{heisenberg_operator, scheme, QuantumEngine, WaveFunction};

/// Largest boundary magnitude of the scenario packet, relative to its
/// peak, before a localization warning is attached to the report.
pub const PACKET_BOUNDARY_TOL: f64 = 1e-9;

/// Slack allowed below the uncertainty bound before a row is flagged.
const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub timestamp: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { timestamp: true }
    }
}

/// `max |ψ| on the boundary / max |ψ|`.
pub fn packet_boundary_ratio(psi: &WaveFunction) -> f64 {
    let peak = psi.values().iter().fold(0.0f64, |m, v| m.max(v.norm()));
    psi.boundary_max() / peak
}

/// Evaluates every requested (scheme, observable, time) cell, the
/// uncertainty products and the pair residuals.
pub fn run_scenario(config: &Scenario, options: RunOptions) -> Result<Report, LabError> {
    config.validate()?;
    let params = config.params();
    let engine = QuantumEngine::new(config.grid)?;
    let psi = config.packet.sample(config.grid);

    let mut warnings = Vec::new();
    let ratio = packet_boundary_ratio(&psi);
    if ratio > PACKET_BOUNDARY_TOL {
        warnings.push(format!(
            "packet not localized: boundary/peak = {ratio:e} exceeds {PACKET_BOUNDARY_TOL:e}; enlarge grid.L"
        ));
    }

    let mut cells = Vec::new();
    let mut uncertainties = Vec::new();
    for &id in &config.schemes {
        let s = scheme(id, &params)?;
        for &which in &config.observables {
            for &time in &config.times {
                let (mean, variance) = engine.moments(&heisenberg_operator(&s, which, time), &psi)?;
                cells.push(cell(id, which, time, mean, variance));
            }
        }
        for &time in &config.times {
            for (a, b) in s.nontrivial_pairs() {
                let product = engine.uncertainty_product(&s, (a, b), &psi, time)?;
                let bound = s.uncertainty_bound(a, b);
                uncertainties.push(UncertaintyRow {
                    scheme: id,
                    time,
                    a,
                    b,
                    product,
                    bound,
                    satisfied: product >= bound - BOUND_SLACK,
                });
            }
        }
    }

    let field = oscillator::field();
    let pair_residuals = oscillator_pairs()
        .iter()
        .enumerate()
        .map(|(pair, p)| {
            let residual = verify_pair(p, &field);
            let exact_zero = residual.iter().all(|r| r.is_zero());
            let numeric = residual.map(|r| r.to_numeric(&params));
            PairResidual { pair, exact_zero, max_abs_residual: max_residual(&numeric) }
        })
        .collect();

    let generated_at = options
        .timestamp
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    let metadata = Metadata {
        version: env!("CARGO_PKG_VERSION").to_string(),
        generated_at,
        params,
        grid: config.grid,
        packet: config.packet,
    };
    Ok(Report { metadata, cells, uncertainties, pair_residuals, warnings })
}

fn cell(scheme: usize, observable: crate::phase::Coord, time: f64, mean: Complex64, variance: f64) -> Cell {
    Cell { scheme, observable, time, mean_re: mean.re, mean_im: mean.im, variance }
}
