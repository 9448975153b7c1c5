//! Synthesis plans: ordered exponentials of fixed generators.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::algebra::{b_hat_x, b_hat_y, b_x, b_y, b_zz, two_spin_generators};
use crate::error::{Error, Result};
use crate::tensor::{mat_exp, phase_aligned_distance};
use crate::Matrix;

/// Durations below this magnitude are dropped from plans.
pub const ZERO_DURATION: f64 = 1e-13;

/// A fixed generator. `BxHat` and `ByHat` only appear in abstract factor lists; physical plans
/// expand them into `B_zz(π/2)`-wrapped controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Generator {
    Ax,
    Ay,
    Azz,
    Bx,
    By,
    Bzz,
    BxHat,
    ByHat,
}

impl Generator {
    pub fn tag(self) -> &'static str {
        match self {
            Generator::Ax => "AX",
            Generator::Ay => "AY",
            Generator::Azz => "AZZ",
            Generator::Bx => "BX",
            Generator::By => "BY",
            Generator::Bzz => "BZZ",
            Generator::BxHat => "BX_HAT",
            Generator::ByHat => "BY_HAT",
        }
    }

    /// Spin count whose symmetric block the generator acts on.
    pub fn spins(self) -> usize {
        match self {
            Generator::Ax | Generator::Ay | Generator::Azz => 2,
            _ => 3,
        }
    }

    pub fn is_free(self) -> bool {
        matches!(self, Generator::Azz | Generator::Bzz)
    }

    pub fn is_physical(self) -> bool {
        !matches!(self, Generator::BxHat | Generator::ByHat)
    }

    /// The generator on Dicke coordinates `φ_0 … φ_n`.
    pub fn matrix(self) -> Matrix {
        match self {
            Generator::Ax => two_spin_generators()[0].clone(),
            Generator::Ay => two_spin_generators()[1].clone(),
            Generator::Azz => two_spin_generators()[2].clone(),
            Generator::Bx => b_x(),
            Generator::By => b_y(),
            Generator::Bzz => b_zz(),
            Generator::BxHat => b_hat_x(),
            Generator::ByHat => b_hat_y(),
        }
    }

    /// Equivalent duration: free tags in `[0, π)`, controls in `(−π/2, π/2]`.
    /// Every generator satisfies `e^{Gπ} = ±I`.
    pub fn reduce(self, t: f64) -> f64 {
        if self.is_free() {
            let r = t.rem_euclid(PI);
            if PI - r < ZERO_DURATION {
                0.0
            } else {
                r
            }
        } else {
            let r = t.rem_euclid(PI);
            if r > FRAC_PI_2 {
                r - PI
            } else {
                r
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "AX" => Generator::Ax,
            "AY" => Generator::Ay,
            "AZZ" => Generator::Azz,
            "BX" => Generator::Bx,
            "BY" => Generator::By,
            "BZZ" => Generator::Bzz,
            "BX_HAT" => Generator::BxHat,
            "BY_HAT" => Generator::ByHat,
            other => return Err(Error::InvalidTag(other.to_string())),
        })
    }
}

impl TryFrom<String> for Generator {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Generator> for String {
    fn from(g: Generator) -> String {
        g.tag().to_string()
    }
}

/// One exponential `e^{G t}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub gen: Generator,
    pub t: f64,
}

impl Step {
    pub fn new(gen: Generator, t: f64) -> Self {
        Self { gen, t }
    }

    pub fn unitary(&self) -> Matrix {
        mat_exp(&self.gen.matrix().scale_real(self.t))
    }
}

/// Merges equal neighbours, reduces durations and drops vanishing factors.
pub fn simplify(steps: &[Step]) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::with_capacity(steps.len());
    for s in steps {
        let mut cur = Step::new(s.gen, s.gen.reduce(s.t));
        while let Some(last) = out.last() {
            if last.gen != cur.gen {
                break;
            }
            cur = Step::new(cur.gen, cur.gen.reduce(last.t + cur.t));
            out.pop();
        }
        if cur.t.abs() >= ZERO_DURATION {
            out.push(cur);
        }
    }
    out
}

/// Replaces hatted factors (time order) by `B_zz(π/2) · control · B_zz(π/2)`, using
/// `e^{−B_zz π/2} = −e^{B_zz π/2}`.
pub fn expand_hats(steps: &[Step]) -> Vec<Step> {
    let mut out = Vec::with_capacity(steps.len() * 3);
    for s in steps {
        let inner = match s.gen {
            Generator::BxHat => Generator::Bx,
            Generator::ByHat => Generator::By,
            _ => {
                out.push(*s);
                continue;
            }
        };
        out.push(Step::new(Generator::Bzz, FRAC_PI_2));
        out.push(Step::new(inner, s.t));
        out.push(Step::new(Generator::Bzz, FRAC_PI_2));
    }
    simplify(&out)
}

/// Ordered product of the exponentials, first step applied first.
pub fn replay_steps(dim: usize, steps: &[Step]) -> Matrix {
    steps
        .iter()
        .fold(Matrix::identity(dim), |acc, s| &s.unitary() * &acc)
}

/// Result of synthesis: physical steps in time order plus metadata.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthesisPlan {
    pub n: usize,
    pub steps: Vec<Step>,
    /// `target = e^{i·phase} · replay(steps)`.
    pub phase: f64,
    pub reconstruction_error: f64,
    pub target: Matrix,
    /// Exponentials in the abstract sequence, counting each hatted control once.
    #[serde(default)]
    pub factor_count: usize,
}

impl SynthesisPlan {
    /// Builds a plan from abstract factors written as a matrix product (leftmost factor last in time).
    pub(crate) fn from_product(n: usize, target: &Matrix, product: &[Step]) -> Self {
        let time_order: Vec<Step> = product.iter().rev().copied().collect();
        let abstract_steps = simplify(&time_order);
        let steps = expand_hats(&abstract_steps);
        Self::from_steps(n, target, steps, abstract_steps.len())
    }

    pub(crate) fn from_steps(
        n: usize,
        target: &Matrix,
        steps: Vec<Step>,
        factor_count: usize,
    ) -> Self {
        let replay = replay_steps(n + 1, &steps);
        let (err, phase) = phase_aligned_distance(&replay, target);
        Self {
            n,
            steps,
            phase,
            reconstruction_error: err,
            target: target.clone(),
            factor_count,
        }
    }

    /// Product of the ideal exponentials on the symmetric block.
    pub fn replay(&self) -> Matrix {
        replay_steps(self.n + 1, &self.steps)
    }

    pub fn total_time(&self) -> f64 {
        self.steps.iter().map(|s| s.t.abs()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let plan: SynthesisPlan = serde_json::from_str(s)?;
        plan.validate()?;
        Ok(plan)
    }

    /// Checks tags against `n`, finiteness and the target dimension.
    pub fn validate(&self) -> Result<()> {
        if !(2..=3).contains(&self.n) {
            return Err(Error::UnsupportedSpinCount(self.n));
        }
        if self.target.dim() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                left: self.target.dim(),
                right: self.n + 1,
            });
        }
        for s in &self.steps {
            if s.gen.spins() != self.n || !s.gen.is_physical() {
                return Err(Error::InvalidTag(s.gen.tag().to_string()));
            }
            if !s.t.is_finite() {
                return Err(Error::Json(format!("non-finite duration for {}", s.gen)));
            }
        }
        Ok(())
    }
}
