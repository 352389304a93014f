use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symplectic_lab::lab::{format_report, ConfigError, run_checks, run_scenario, Format, LabError, RunOptions, Scenario};
use symplectic_lab::pairs::{enumerate_pairs, oscillator_pairs, verify_pair};
use symplectic_lab::phase::oscillator;

#[derive(Parser)]
#[command(name = "symlab", version, about = "Oscillator symplectic structures and their quantizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the default scenario.
    Init {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a scenario and emit the report.
    Run {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Run the verification suite.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Print the admissible inverse forms and the four oscillator pairs.
    Pairs {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Scenario file; the default scenario when omitted.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    grid_n: Option<usize>,
    #[arg(long)]
    grid_l: Option<f64>,
}

impl Common {
    fn scenario(&self) -> Result<Scenario, LabError> {
        let base = match &self.scenario {
            Some(path) => Scenario::load(path).map_err(|e| match e {
                LabError::Io { path, source } => LabError::Config(ConfigError {
                    path: "--scenario".into(),
                    message: format!("{}: {source}", path.display()),
                }),
                other => other,
            })?,
            None => Scenario::default(),
        };
        Ok(base.with_grid_overrides(self.grid_n, self.grid_l)?)
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), LabError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| LabError::Io { path: path.clone(), source }),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn pairs_text(scenario: &Scenario) -> String {
    let params = scenario.params();
    let field = oscillator::field();
    let enumeration = enumerate_pairs(&field.to_numeric(&params));
    let mut s = format!(
        "admissible inverse forms (m = {}, omega = {}): dimension {}\n",
        params.m,
        params.omega,
        enumeration.basis.dimension()
    );
    for (k, theta) in enumeration.basis.basis.iter().enumerate() {
        s += &format!("theta[{k}]\n");
        for i in 0..4 {
            let row: Vec<String> = (0..4)
                .map(|j| {
                    let v = theta[(i, j)];
                    format!("{:>10.6}", if v.abs() < 1e-12 { 0.0 } else { v })
                })
                .collect();
            s += &format!("  {}\n", row.join(" "));
        }
    }
    for (mu, pair) in oscillator_pairs().iter().enumerate() {
        let exact = verify_pair(pair, &field).iter().all(|r| r.is_zero());
        s += &format!("pair {mu}: S = {}\n", pair.hamiltonian);
        for (i, row) in pair.form.upper().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| format!("{:>14}", c.to_string())).collect();
            s += &format!("  {}{}\n", if i == 0 { "omega^{mu nu} = " } else { "                " }, cells.join(" "));
        }
        s += &format!("  residual: {}\n", if exact { "exact zero" } else { "NONZERO" });
    }
    s
}

fn execute(cli: Cli) -> Result<i32, LabError> {
    match cli.command {
        Command::Init { out } => {
            write_out(out.as_ref(), &Scenario::default().to_json())?;
            Ok(0)
        }
        Command::Run { common, format, no_timestamp } => {
            let scenario = common.scenario()?;
            let report = run_scenario(&scenario, RunOptions { timestamp: !no_timestamp })?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            write_out(common.out.as_ref(), &format_report(&report, format))?;
            Ok(0)
        }
        Command::Check { common, format } => {
            let scenario = common.scenario()?;
            let summary = run_checks(&scenario)?;
            eprint!("{summary}");
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
                Format::Csv => summary.to_csv(),
            };
            write_out(common.out.as_ref(), &text)?;
            Ok(summary.exit_code())
        }
        Command::Pairs { common } => {
            let scenario = common.scenario()?;
            write_out(common.out.as_ref(), &pairs_text(&scenario))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
