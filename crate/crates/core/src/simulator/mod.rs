//! Piecewise-constant evolution under `H_zz + u_x H_x + u_y H_y`, hard-pulse realization of plans,
//! and fidelities.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin::{hamiltonian_x, hamiltonian_y, hamiltonian_zz, phi_state, SpinState};
use crate::synthesis::{Generator, Step, SynthesisPlan};
use crate::tensor::{hs_inner, mat_exp};
use crate::{Matrix, C64};

/// Unitarity tolerance for fidelity inputs.
pub const FIDELITY_UNITARY_TOL: f64 = 1e-9;

/// One constant-control interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PulseSegment {
    #[serde(rename = "ux")]
    pub u_x: f64,
    #[serde(rename = "uy")]
    pub u_y: f64,
    #[serde(rename = "dt")]
    pub duration: f64,
}

impl PulseSegment {
    pub fn new(u_x: f64, u_y: f64, duration: f64) -> Result<Self> {
        let seg = Self { u_x, u_y, duration };
        seg.validate()?;
        Ok(seg)
    }

    /// Zero controls: evolution under `H_zz` alone.
    pub fn free(duration: f64) -> Result<Self> {
        Self::new(0.0, 0.0, duration)
    }

    fn validate(&self) -> Result<()> {
        if !self.u_x.is_finite() || !self.u_y.is_finite() {
            return Err(Error::InvalidAmplitude(if self.u_x.is_finite() {
                self.u_y
            } else {
                self.u_x
            }));
        }
        if !(self.duration.is_finite() && self.duration >= 0.0) {
            return Err(Error::Json(format!(
                "invalid segment duration {}",
                self.duration
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PulseSchedule {
    pub n: usize,
    pub segments: Vec<PulseSegment>,
}

impl PulseSchedule {
    pub fn new(n: usize, segments: Vec<PulseSegment>) -> Result<Self> {
        let s = Self { n, segments };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        hamiltonian_zz::<f64>(self.n).map(|_| ())?;
        self.segments.iter().try_for_each(PulseSegment::validate)
    }

    pub fn total_duration(&self) -> f64 {
        self.segments.iter().map(|s| s.duration).sum()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &PulseSchedule) -> Result<PulseSchedule> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut segments = self.segments.clone();
        segments.extend(&other.segments);
        Ok(PulseSchedule {
            n: self.n,
            segments,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("schedule serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let schedule: PulseSchedule = serde_json::from_str(s)?;
        schedule.validate()?;
        Ok(schedule)
    }
}

/// The three Hamiltonians of an `n`-spin network.
#[derive(Clone, Debug)]
pub struct Hamiltonians {
    pub zz: Matrix,
    pub x: Matrix,
    pub y: Matrix,
}

impl Hamiltonians {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            zz: hamiltonian_zz(n)?,
            x: hamiltonian_x(n)?,
            y: hamiltonian_y(n)?,
        })
    }

    /// `exp(−i(H_zz + u_x H_x + u_y H_y)Δt)`.
    pub fn segment_unitary(&self, seg: &PulseSegment) -> Matrix {
        let h = &(&self.zz + &self.x.scale_real(seg.u_x)) + &self.y.scale_real(seg.u_y);
        mat_exp(&h.scale(C64::new(0.0, -seg.duration)))
    }
}

/// Input or output of [`evolve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Evolved {
    State(SpinState),
    Operator(Matrix),
}

/// Left-multiplies by the segment propagators, first segment applied first.
pub fn evolve(schedule: &PulseSchedule, initial: &Evolved) -> Result<Evolved> {
    let dim = 1usize << schedule.n;
    let got = match initial {
        Evolved::State(s) => s.amplitudes().len(),
        Evolved::Operator(m) => m.dim(),
    };
    if got != dim {
        return Err(Error::DimensionMismatch {
            left: got,
            right: dim,
        });
    }
    let u = schedule_unitary(schedule)?;
    Ok(match initial {
        Evolved::State(s) => Evolved::State(s.apply(&u)?),
        Evolved::Operator(m) => Evolved::Operator(&u * m),
    })
}

pub fn evolve_state(schedule: &PulseSchedule, initial: &SpinState) -> Result<SpinState> {
    match evolve(schedule, &Evolved::State(initial.clone()))? {
        Evolved::State(s) => Ok(s),
        Evolved::Operator(_) => unreachable!("state in, state out"),
    }
}

pub fn evolve_operator(schedule: &PulseSchedule, initial: &Matrix) -> Result<Matrix> {
    match evolve(schedule, &Evolved::Operator(initial.clone()))? {
        Evolved::Operator(m) => Ok(m),
        Evolved::State(_) => unreachable!("operator in, operator out"),
    }
}

/// Propagator of the whole schedule on the `2^n`-dimensional space.
pub fn schedule_unitary(schedule: &PulseSchedule) -> Result<Matrix> {
    schedule.validate()?;
    let h = Hamiltonians::new(schedule.n)?;
    Ok(schedule
        .segments
        .iter()
        .fold(Matrix::identity(1 << schedule.n), |acc, seg| {
            &h.segment_unitary(seg) * &acc
        }))
}

/// Free-evolution time `s` with `exp(−iH_zz s)` equal to `e^{B_zz t}` on the symmetric block
/// up to phase: `B_zz = −½(B̃_zz + i)` and the block of `−iH_zz` has period `π/2`.
pub fn bzz_free_time(t: f64) -> f64 {
    let s = (-t / 2.0).rem_euclid(FRAC_PI_2);
    if FRAC_PI_2 - s < 1e-15 {
        0.0
    } else {
        s
    }
}

/// Hamiltonian term and sign so that `e^{G t} = exp(−i·sign·H·t)` on the symmetric block.
fn control_axis(gen: Generator) -> Option<(bool, f64)> {
    match gen {
        Generator::Ax => Some((true, 1.0)),
        Generator::Ay => Some((false, 1.0)),
        Generator::Bx => Some((true, -1.0)),
        Generator::By => Some((false, 1.0)),
        _ => None,
    }
}

/// Exact propagator of one physical step on the full space.
pub fn step_unitary(h: &Hamiltonians, step: &Step) -> Result<Matrix> {
    let minus_i = C64::new(0.0, -1.0);
    Ok(match step.gen {
        Generator::Azz => mat_exp(&h.zz.scale(minus_i * step.t)),
        Generator::Bzz => mat_exp(&h.zz.scale(minus_i * bzz_free_time(step.t))),
        g => {
            let (is_x, sign) = control_axis(g).ok_or_else(|| Error::InvalidTag(g.tag().into()))?;
            let op = if is_x { &h.x } else { &h.y };
            mat_exp(&op.scale(minus_i * (sign * step.t)))
        }
    })
}

/// Product of the exact step propagators on the `2^n`-dimensional space.
pub fn ideal_unitary(plan: &SynthesisPlan) -> Result<Matrix> {
    plan.validate()?;
    let h = Hamiltonians::new(plan.n)?;
    plan.steps
        .iter()
        .try_fold(Matrix::identity(1 << plan.n), |acc, s| {
            Ok(&step_unitary(&h, s)? * &acc)
        })
}

/// Square-pulse schedule: controls at `±amplitude` for `|t|/amplitude`, free tags as zero-control
/// segments.
pub fn realize(plan: &SynthesisPlan, amplitude: f64) -> Result<PulseSchedule> {
    if !(amplitude.is_finite() && amplitude > 0.0) {
        return Err(Error::InvalidAmplitude(amplitude));
    }
    plan.validate()?;
    let segments = plan
        .steps
        .iter()
        .map(|s| match s.gen {
            Generator::Azz => PulseSegment::free(s.t.max(0.0)),
            Generator::Bzz => PulseSegment::free(bzz_free_time(s.t)),
            g => {
                let (is_x, sign) =
                    control_axis(g).ok_or_else(|| Error::InvalidTag(g.tag().into()))?;
                let u = amplitude * sign * s.t.signum();
                let dt = s.t.abs() / amplitude;
                if is_x {
                    PulseSegment::new(u, 0.0, dt)
                } else {
                    PulseSegment::new(0.0, u, dt)
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PulseSchedule {
        n: plan.n,
        segments,
    })
}

/// `|tr(u†v)| / d`.
pub fn gate_fidelity(u: &Matrix, v: &Matrix) -> Result<f64> {
    for m in [u, v] {
        let residual = m.unitary_residual();
        if residual > FIDELITY_UNITARY_TOL {
            return Err(Error::NotUnitary { residual });
        }
    }
    Ok((hs_inner(u, v)?.norm() / u.dim() as f64).min(1.0))
}

/// `|⟨a|b⟩|²`.
pub fn state_fidelity(a: &SpinState, b: &SpinState) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr().min(1.0))
}

/// Restriction `⟨φ_i| U |φ_j⟩` of a full-space operator to Dicke coordinates.
pub fn symmetric_block(n: usize, u: &Matrix) -> Result<Matrix> {
    if u.dim() != 1 << n {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: 1 << n,
        });
    }
    let phis = (0..=n)
        .map(|m| phi_state::<f64>(n, m))
        .collect::<Result<Vec<_>>>()?;
    let images = phis
        .iter()
        .map(|p| u.mul_vec(p.amplitudes()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(n + 1, |i, j| {
        phis[i]
            .amplitudes()
            .iter()
            .zip(&images[j])
            .map(|(a, b)| a.conj() * b)
            .sum()
    }))
}

/// Simulation output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_state: Option<SpinState>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_unitary: Option<Matrix>,
    pub fidelity: Option<f64>,
    pub target_ref: Option<String>,
    /// For plans replayed as operators: phase-aligned distance of the symmetric block from the
    /// plan's target.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction_error: Option<f64>,
}

impl SimulationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
