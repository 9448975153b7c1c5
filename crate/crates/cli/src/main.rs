//! `symspin`: JSON front end for closure analysis, coordinates, synthesis and simulation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use symspin::acceptance::run_all;
use symspin::coords::{
    basis_for, basis_t_hat, conjugate, conjugated_generators, three_spin_comparisons,
    two_spin_comparisons,
};
use symspin::lie::{identity_catalog, verify_symmetric_closure, GeneratorTable};
use symspin::simulator::{
    gate_fidelity, ideal_unitary, realize, schedule_unitary, state_fidelity, symmetric_block,
    PulseSchedule, SimulationReport,
};
use symspin::spin::{
    hamiltonian_x, hamiltonian_y, hamiltonian_zz, permutation_residual, SpinState, StateName,
    MAX_SPINS,
};
use symspin::synthesis::{state_transfer_plan, synthesize, SynthesisPlan};
use symspin::tensor::phase_aligned_distance;
use symspin::Matrix;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Validation(#[from] symspin::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("report on standard output")]
    Failed(Value),
    #[error("one or more checks failed; see the report on standard output")]
    ChecksFailed,
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Validation(_) | CliError::Failed(_) | CliError::ChecksFailed => "validation",
            CliError::Io { .. } => "io",
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "symspin",
    version,
    about = "Collective control of symmetric Ising spin networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump H_zz, H_x and H_y.
    Model {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=MAX_SPINS as i64))]
        n: u8,
    },
    /// Closure of the control generators and comparison with the predicted dimension.
    Closure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=MAX_SPINS as i64))]
        n: u8,
        /// Also evaluate the bracket-identity catalog.
        #[arg(long)]
        identities: bool,
    },
    /// Permutation-invariance test of a matrix file.
    Invariance {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_SPINS as i64))]
        n: u8,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Symmetry-adapted bases and conjugated generators.
    Basis {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        n: u8,
    },
    /// Bracket-identity catalog with measured expansions.
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=MAX_SPINS as i64))]
        n: u8,
    },
    /// Synthesize a plan for a unitary on the Dicke coordinates.
    Synth {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        n: u8,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plan moving one symmetric state to another.
    Transfer {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        n: u8,
        /// ghz, w, phi:m, ket:bits, or a state file.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evolve a state or the identity under a schedule or plan file.
    Simulate {
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long)]
        initial: Option<String>,
        /// Realize a plan as square pulses of this amplitude.
        #[arg(long)]
        amplitude: Option<f64>,
        /// State name/file (with --initial) or matrix file (operator mode).
        #[arg(long)]
        target: Option<String>,
    },
    /// Run all acceptance criteria.
    VerifyAll,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Validation(e.into()))
}

/// A state given by name or by a JSON file.
fn resolve_state(desc: &str, n: Option<usize>) -> CliResult<SpinState> {
    if let Ok(name) = desc.parse::<StateName>() {
        let n = n.ok_or_else(|| CliError::Usage(format!("state {desc:?} needs a spin count")))?;
        return Ok(name.resolve(n)?);
    }
    let state = SpinState::from_json(&read(Path::new(desc))?)?;
    if let Some(n) = n {
        if state.n() != n {
            return Err(symspin::Error::DimensionMismatch {
                left: 1 << state.n(),
                right: 1 << n,
            }
            .into());
        }
    }
    Ok(state)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn model(n: usize) -> CliResult<Value> {
    Ok(json!({
        "n": n,
        "hzz": to_value(&hamiltonian_zz::<f64>(n)?),
        "hx": to_value(&hamiltonian_x::<f64>(n)?),
        "hy": to_value(&hamiltonian_y::<f64>(n)?),
    }))
}

fn closure(n: usize, identities: bool) -> CliResult<Value> {
    let report = verify_symmetric_closure(n, identities)?;
    let v = to_value(&report);
    if report.passed {
        Ok(v)
    } else {
        Err(CliError::Failed(v))
    }
}

fn invariance(n: usize, path: &Path) -> CliResult<Value> {
    let m = Matrix::from_json(&read(path)?)?;
    if m.dim() != 1 << n {
        return Err(symspin::Error::DimensionMismatch {
            left: m.dim(),
            right: 1 << n,
        }
        .into());
    }
    let residual = permutation_residual(&m)?;
    Ok(json!({"n": n, "invariant": residual <= 1e-10, "residual": residual}))
}

fn basis(n: usize) -> CliResult<Value> {
    let b = basis_for(n)?;
    let [x, y, zz] = conjugated_generators(&b)?;
    let mut out = json!({
        "n": n,
        "basis": to_value(&b.matrix),
        "block_sizes": b.block_sizes,
        "generators": {"x": to_value(&x), "y": to_value(&y), "zz": to_value(&zz)},
    });
    if n == 2 {
        let th = basis_t_hat();
        out["basis_hat"] = to_value(&th);
        out["hat_generators"] = json!({
            "x": to_value(&conjugate(&th, &x)?),
            "y": to_value(&conjugate(&th, &y)?),
            "zz": to_value(&conjugate(&th, &zz)?),
        });
        out["comparisons"] = to_value(&two_spin_comparisons()?);
    } else {
        out["comparisons"] = to_value(&three_spin_comparisons()?);
    }
    Ok(out)
}

fn identities(n: usize) -> CliResult<Value> {
    let table = GeneratorTable::new(n)?;
    let checks = identity_catalog(n)
        .iter()
        .map(|id| table.check(id))
        .collect::<symspin::Result<Vec<_>>>()?;
    Ok(json!({"n": n, "identities": to_value(&checks)}))
}

fn emit_plan(plan: &SynthesisPlan, out: Option<&Path>) -> CliResult<Value> {
    let json = plan.to_json();
    match out {
        Some(path) => {
            write(path, &json)?;
            Ok(json!({
                "out": path,
                "steps": plan.steps.len(),
                "factor_count": plan.factor_count,
                "reconstruction_error": plan.reconstruction_error,
                "phase": plan.phase,
            }))
        }
        None => parse_json(&json),
    }
}

fn synth(n: usize, target: &Path, out: Option<&Path>) -> CliResult<Value> {
    let m = Matrix::from_json(&read(target)?)?;
    emit_plan(&synthesize(n, &m)?, out)
}

fn transfer(n: usize, from: &str, to: &str, out: Option<&Path>) -> CliResult<Value> {
    let a = resolve_state(from, Some(n))?;
    let b = resolve_state(to, Some(n))?;
    emit_plan(&state_transfer_plan(n, &a, &b)?, out)
}

fn simulate(
    path: &Path,
    initial: Option<&str>,
    amplitude: Option<f64>,
    target: Option<&str>,
) -> CliResult<Value> {
    let raw = read(path)?;
    let value = parse_json(&raw)?;
    let (n, unitary, plan) = if value.get("steps").is_some() {
        let plan = SynthesisPlan::from_json(&raw)?;
        let u = match amplitude {
            Some(a) => schedule_unitary(&realize(&plan, a)?)?,
            None => ideal_unitary(&plan)?,
        };
        (plan.n, u, Some(plan))
    } else if value.get("segments").is_some() {
        if amplitude.is_some() {
            return Err(CliError::Usage(
                "--amplitude applies to plan files only".into(),
            ));
        }
        let schedule = PulseSchedule::from_json(&raw)?;
        (schedule.n, schedule_unitary(&schedule)?, None)
    } else {
        return Err(symspin::Error::Json("file is neither a plan nor a schedule".into()).into());
    };

    let mut report = SimulationReport {
        final_state: None,
        final_unitary: None,
        fidelity: None,
        target_ref: target.map(str::to_string),
        reconstruction_error: None,
    };
    match initial {
        Some(desc) => {
            let psi = resolve_state(desc, Some(n))?;
            let out = psi.apply(&unitary)?;
            if let Some(t) = target {
                report.fidelity = Some(state_fidelity(&out, &resolve_state(t, Some(n))?)?);
            }
            report.final_state = Some(out);
        }
        None => {
            if let Some(p) = &plan {
                let block = symmetric_block(n, &unitary)?;
                report.reconstruction_error = Some(phase_aligned_distance(&block, &p.target).0);
                if target.is_none() {
                    report.fidelity = Some(gate_fidelity(&block, &p.target)?);
                    report.target_ref = Some("plan".into());
                }
            }
            if let Some(t) = target {
                let m = Matrix::from_json(&read(Path::new(t))?)?;
                let fidelity = if m.dim() == unitary.dim() {
                    gate_fidelity(&unitary, &m)?
                } else {
                    gate_fidelity(&symmetric_block(n, &unitary)?, &m)?
                };
                report.fidelity = Some(fidelity);
            }
            report.final_unitary = Some(unitary);
        }
    }
    parse_json(&report.to_json())
}

fn verify_all() -> CliResult<Value> {
    let report = run_all()?;
    for c in &report.criteria {
        eprintln!("{}", c.line());
    }
    let v = to_value(&report);
    if report.failed == 0 {
        Ok(v)
    } else {
        Err(CliError::Failed(v))
    }
}

fn run(cli: Cli) -> CliResult<Value> {
    match cli.command {
        Command::Model { n } => model(n as usize),
        Command::Closure { n, identities } => closure(n as usize, identities),
        Command::Invariance { n, matrix } => invariance(n as usize, &matrix),
        Command::Basis { n } => basis(n as usize),
        Command::Identities { n } => identities(n as usize),
        Command::Synth { n, target, out } => synth(n as usize, &target, out.as_deref()),
        Command::Transfer { n, from, to, out } => transfer(n as usize, &from, &to, out.as_deref()),
        Command::Simulate {
            schedule,
            initial,
            amplitude,
            target,
        } => simulate(&schedule, initial.as_deref(), amplitude, target.as_deref()),
        Command::VerifyAll => verify_all(),
    }
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!(
        "{}",
        json!({"error": {"kind": err.kind(), "message": err.to_string()}})
    );
    ExitCode::from(err.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail(&CliError::Usage(e.to_string().trim().to_string()));
        }
    };
    match run(cli) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(v)) => {
            println!("{v}");
            fail(&CliError::ChecksFailed)
        }
        Err(e) => fail(&e),
    }
}
