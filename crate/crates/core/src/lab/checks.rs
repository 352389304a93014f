use std::fmt;

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use super::{LabError, Scenario};
use crate::flow::{conserved_along_flow, default_samples, verify_flow_symplectic, PhaseState, SYMPLECTIC_TOL};
use crate::pairs::{oscillator_pairs, verify_pair};
use crate::phase::{mat4_to_numeric, oscillator, validate_form, Coord};
use crate::quantum::{
    scheme, unitary::probe_packet, ConjugationOracle, GaussianPacket, GridSpec, Localization, QuantumEngine,
};

/// Relative tolerance on `[Â,B̂]ψ − C^{AB}ψ`.
pub const COMMUTATOR_TOL: f64 = 1e-8;
/// Relative L² tolerance of the dense conjugation check.
pub const UNITARY_TOL: f64 = 1e-5;
/// Times, in units of `1/ω`, probed by the dense conjugation check.
pub const UNITARY_TIMES: [f64; 2] = [0.6, 1.1];

const CONSERVATION_TOL: f64 = 1e-10;
const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Warn => "WARN",
            CheckStatus::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub max_deviation: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CheckSummary {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckSummary {
    pub fn failed(&self) -> bool {
        self.outcomes.iter().any(|o| o.status == CheckStatus::Fail)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.status == CheckStatus::Warn)
    }

    /// `check,status,max_deviation,detail` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("check,status,max_deviation,detail\n");
        for o in &self.outcomes {
            let dev = serde_json::to_string(&o.max_deviation).expect("float");
            s += &format!("{},{},{},\"{}\"\n", o.name, o.status, dev, o.detail.replace('"', "\"\""));
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{:<4} {:<22} max_dev={:.3e}  {}", o.status, o.name, o.max_deviation, o.detail)?;
        }
        Ok(())
    }
}

fn outcome(name: impl Into<String>, status: CheckStatus, max_deviation: f64, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), status, max_deviation, detail: detail.into() }
}

fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Runs the enabled check groups. Check failures are reported in the
/// summary; only invalid input yields `Err`.
pub fn run_checks(config: &Scenario) -> Result<CheckSummary, LabError> {
    config.validate()?;
    let mut outcomes = Vec::new();
    if config.checks.pairs {
        outcomes.extend(pair_checks(config));
    }
    if config.checks.flow {
        outcomes.extend(flow_checks(config));
    }
    if config.checks.commutators {
        outcomes.extend(commutator_checks(config)?);
    }
    if config.checks.uncertainties {
        outcomes.extend(uncertainty_checks(config)?);
    }
    if config.checks.unitary {
        outcomes.extend(unitary_checks(config)?);
    }
    Ok(CheckSummary { outcomes })
}

fn pair_checks(config: &Scenario) -> Vec<CheckOutcome> {
    let params = config.params();
    let field = oscillator::field();
    oscillator_pairs()
        .iter()
        .enumerate()
        .map(|(mu, pair)| {
            let name = format!("pair[{mu}]");
            let mut upper = mat4_to_numeric(pair.form.upper(), &params);
            if mu == 0 && config.fixtures.symmetric_form {
                upper = Matrix4::from_fn(|i, j| if i > j { upper[(j, i)] } else { upper[(i, j)] });
            }
            if let Err(e) = validate_form(&upper) {
                return outcome(name, CheckStatus::Fail, f64::NAN, e.to_string());
            }
            let residual = verify_pair(pair, &field);
            let exact = residual.iter().all(|r| r.is_zero());
            let detail = if exact { "exact zero residual" } else { "nonzero residual" };
            outcome(name, pass_if(exact), 0.0, detail)
        })
        .collect()
}

fn flow_checks(config: &Scenario) -> Vec<CheckOutcome> {
    let params = config.params();
    let samples = default_samples(&params);
    let times: Vec<f64> = config.times.iter().chain(&samples).copied().collect();
    let [x, y] = config.packet.center;
    let [kx, ky] = config.packet.wavevector;
    let state0 = PhaseState::new(x, y, params.hbar * kx, params.hbar * ky);
    let mut out = Vec::new();
    for mu in 0..oscillator::PAIR_COUNT {
        let form = oscillator::form(mu).to_numeric(&params);
        let worst = times.iter().map(|&t| verify_flow_symplectic(&form, t, &params).max_deviation).fold(0.0, f64::max);
        out.push(outcome(
            format!("flow_symplectic[{mu}]"),
            pass_if(worst <= SYMPLECTIC_TOL),
            worst,
            format!("{} times", times.len()),
        ));
        let h = oscillator::hamiltonian(mu).to_numeric(&params);
        let scale = h.evaluate(state0.to_array()).abs().max(1.0);
        let drift = conserved_along_flow(&h, state0, &samples, &params) / scale;
        out.push(outcome(
            format!("flow_conserves[{mu}]"),
            pass_if(drift <= CONSERVATION_TOL),
            drift,
            "relative drift over two periods",
        ));
    }
    out
}

fn commutator_checks(config: &Scenario) -> Result<Vec<CheckOutcome>, LabError> {
    let params = config.params();
    let engine = QuantumEngine::new(config.grid)?;
    let psi = GaussianPacket::ground(&params).sample(config.grid);
    let mut out = Vec::new();
    for &id in &config.schemes {
        let s = scheme(id, &params)?;
        let check = engine.commutator_table_check(&s, &psi)?;
        let (status, detail) = match check.localization {
            Localization::Warning { boundary_max } => {
                (CheckStatus::Warn, format!("state not localized (boundary {boundary_max:.2e}); result unreliable"))
            }
            Localization::Localized => (pass_if(check.max_deviation <= COMMUTATOR_TOL), "ground-width Gaussian".into()),
        };
        out.push(outcome(format!("commutators[{id}]"), status, check.max_deviation, detail));
    }
    Ok(out)
}

fn uncertainty_checks(config: &Scenario) -> Result<Vec<CheckOutcome>, LabError> {
    let params = config.params();
    let engine = QuantumEngine::new(config.grid)?;
    let psi = config.packet.sample(config.grid);
    let mut out = Vec::new();
    for &id in &config.schemes {
        let s = scheme(id, &params)?;
        let mut worst = f64::NEG_INFINITY;
        for &t in &config.times {
            for (a, b) in s.nontrivial_pairs() {
                let gap = s.uncertainty_bound(a, b) - engine.uncertainty_product(&s, (a, b), &psi, t)?;
                worst = worst.max(gap);
            }
        }
        out.push(outcome(
            format!("uncertainty[{id}]"),
            pass_if(worst <= BOUND_SLACK),
            worst.max(0.0),
            "bound minus product, worst case",
        ));
    }
    Ok(out)
}

fn unitary_checks(config: &Scenario) -> Result<Vec<CheckOutcome>, LabError> {
    let params = config.params();
    let grid = GridSpec::small_for(&params);
    let psi = probe_packet(&params).sample(grid);
    let mut out = Vec::new();
    for &id in &config.schemes {
        let s = scheme(id, &params)?;
        let oracle = ConjugationOracle::new(&s, grid)?;
        let mut worst = 0.0f64;
        for which in Coord::ALL {
            for t in UNITARY_TIMES {
                worst = worst.max(oracle.deviation(which, t / params.omega, &psi)?);
            }
        }
        out.push(outcome(
            format!("unitary[{id}]"),
            pass_if(worst <= UNITARY_TOL),
            worst,
            format!("N = {}", grid.points),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::Checks;

    fn only(checks: Checks) -> Scenario {
        Scenario { checks, ..Scenario::default() }
    }

    const NONE: Checks = Checks { pairs: false, flow: false, commutators: false, uncertainties: false, unitary: false };

    #[test]
    fn symmetric_fixture_fails_pairs() {
        let mut cfg = only(Checks { pairs: true, ..NONE });
        cfg.fixtures.symmetric_form = true;
        let s = run_checks(&cfg).unwrap();
        assert!(s.failed());
        assert!(s.outcomes[0].detail.contains("not antisymmetric"), "{}", s.outcomes[0].detail);
    }

    #[test]
    fn classical_checks_pass() {
        let s = run_checks(&only(Checks { pairs: true, flow: true, ..NONE })).unwrap();
        assert!(!s.failed(), "{s}");
        assert_eq!(s.outcomes.len(), 4 + 8);
    }

    #[test]
    fn cramped_grid_downgrades_commutators() {
        let cfg = only(Checks { commutators: true, ..NONE }).with_grid_overrides(Some(16), Some(3.0)).unwrap();
        let s = run_checks(&cfg).unwrap();
        assert!(!s.failed());
        assert_eq!(s.warnings().count(), 4);
    }
}
