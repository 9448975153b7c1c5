use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin::{symmetric_generator, SymmetricGenerator};
use crate::tensor::{commutator, real_inner};
use crate::Matrix;

/// A term `coefficient · X^n_(kx,ky,kz)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: f64,
    pub generator: SymmetricGenerator,
}

/// A stated commutator expansion `[lhs.0, lhs.1] = Σ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketIdentity {
    pub name: String,
    pub n: usize,
    pub lhs: (SymmetricGenerator, SymmetricGenerator),
    pub rhs: Vec<Term>,
}

/// A coefficient where the stated and measured expansions differ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientDeviation {
    pub generator: SymmetricGenerator,
    pub stated: f64,
    pub measured: f64,
}

/// Outcome of evaluating one identity numerically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: BracketIdentity,
    pub holds: bool,
    pub measured_rhs: Vec<Term>,
    pub deviations: Vec<CoefficientDeviation>,
    /// `‖[a, b] − Σ measured‖_HS`.
    pub consistency_residual: f64,
}

const COEFF_TOL: f64 = 1e-10;

impl BracketIdentity {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        lhs: (usize, usize, usize),
        lhs2: (usize, usize, usize),
        rhs: &[(f64, (usize, usize, usize))],
    ) -> Result<Self> {
        let g = |(kx, ky, kz): (usize, usize, usize)| SymmetricGenerator::new(n, kx, ky, kz);
        Ok(Self {
            name: name.into(),
            n,
            lhs: (g(lhs)?, g(lhs2)?),
            rhs: rhs
                .iter()
                .map(|&(coefficient, k)| {
                    Ok(Term {
                        coefficient,
                        generator: g(k)?,
                    })
                })
                .collect::<Result<_>>()?,
        })
    }
}

/// Identities of the controllability induction, instantiated for `n` spins.
///
/// The first six are the weight-one and weight-two brackets; the four families with a
/// level parameter `k` are instantiated for `3 ≤ k ≤ n`, the range where every triple
/// is well formed.
pub fn identity_catalog(n: usize) -> Vec<BracketIdentity> {
    let mut out = Vec::new();
    let mut push = |id: Result<BracketIdentity>| {
        if let Ok(id) = id {
            out.push(id);
        }
    };
    if n >= 2 {
        push(BracketIdentity::new(
            "xy",
            n,
            (1, 0, 0),
            (0, 1, 0),
            &[(2.0, (0, 0, 1))],
        ));
        push(BracketIdentity::new(
            "x-zz",
            n,
            (1, 0, 0),
            (0, 0, 2),
            &[(-2.0, (0, 1, 1))],
        ));
        push(BracketIdentity::new(
            "y-zz",
            n,
            (0, 1, 0),
            (0, 0, 2),
            &[(2.0, (1, 0, 1))],
        ));
        push(BracketIdentity::new(
            "yz-x",
            n,
            (0, 1, 1),
            (1, 0, 0),
            &[(4.0, (0, 2, 0)), (-4.0, (0, 0, 2))],
        ));
        push(BracketIdentity::new(
            "xz-y",
            n,
            (1, 0, 1),
            (0, 1, 0),
            &[(-4.0, (2, 0, 0)), (4.0, (0, 0, 2))],
        ));
        push(BracketIdentity::new(
            "z-xx",
            n,
            (0, 0, 1),
            (2, 0, 0),
            &[(2.0, (1, 1, 0))],
        ));
    }
    for k in 3..=n {
        push(BracketIdentity::new(
            format!("raise-z[k={k}]"),
            n,
            (k - 1, 0, 0),
            (1, 1, 0),
            &[(2.0, (k - 1, 0, 1)), (2.0, (k - 2, 0, 1))],
        ));
        push(BracketIdentity::new(
            format!("xy-z[k={k}]"),
            n,
            (k - 1, 1, 0),
            (0, 0, 1),
            &[(-2.0, (k - 2, 2, 0)), (2.0, (k, 0, 0))],
        ));
        push(BracketIdentity::new(
            format!("xz-y[k={k}]"),
            n,
            (k - 1, 0, 1),
            (0, 1, 0),
            &[(2.0, (k - 2, 0, 2)), (-2.0, (k, 0, 0))],
        ));
        push(BracketIdentity::new(
            format!("xy-xz[k={k}]"),
            n,
            (k - 2, 1, 0),
            (1, 0, 1),
            &[
                (-2.0, (k - 3, 2, 0)),
                (2.0, (k - 2, 0, 0)),
                (-2.0, (k - 2, 2, 0)),
                (-2.0, (k - 2, 0, 2)),
                (2.0, (k, 0, 0)),
            ],
        ));
    }
    out
}

/// Dense matrices of every symmetric generator for one `n`, with their squared norms.
pub struct GeneratorTable {
    n: usize,
    entries: Vec<(SymmetricGenerator, Matrix, f64)>,
}

impl GeneratorTable {
    pub fn new(n: usize) -> Result<Self> {
        let entries = SymmetricGenerator::all(n)
            .into_iter()
            .map(|g| {
                let m = symmetric_generator::<f64>(&g)?;
                let norm2 = real_inner(&m, &m);
                Ok((g, m, norm2))
            })
            .collect::<Result<_>>()?;
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self, g: &SymmetricGenerator) -> Option<&Matrix> {
        self.entries
            .iter()
            .find(|(h, _, _)| h == g)
            .map(|(_, m, _)| m)
    }

    /// Expands `a` in the orthogonal generator basis; returns the terms and the residual norm.
    pub fn expand(&self, a: &Matrix) -> (Vec<Term>, f64) {
        let mut rest = a.clone();
        let mut terms = Vec::new();
        for (g, m, norm2) in &self.entries {
            let coefficient = real_inner(m, a) / norm2;
            if coefficient.abs() > COEFF_TOL {
                rest -= &m.scale_real(coefficient);
                terms.push(Term {
                    coefficient,
                    generator: *g,
                });
            }
        }
        (terms, rest.hs_norm())
    }

    fn combine(&self, terms: &[Term]) -> Matrix {
        let mut sum = Matrix::zeros(1 << self.n);
        for t in terms {
            if let Some(m) = self.matrix(&t.generator) {
                sum += &m.scale_real(t.coefficient);
            }
        }
        sum
    }

    /// Evaluates an identity for this table's `n`.
    pub fn check(&self, id: &BracketIdentity) -> Result<IdentityCheck> {
        if id.n != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: id.n,
            });
        }
        let lookup = |g: &SymmetricGenerator| {
            self.matrix(g).ok_or(Error::InvalidCounts {
                n: g.n,
                kx: g.kx,
                ky: g.ky,
                kz: g.kz,
            })
        };
        let lhs = commutator(lookup(&id.lhs.0)?, lookup(&id.lhs.1)?)?;
        let (measured_rhs, residual) = self.expand(&lhs);
        if residual > COEFF_TOL * lhs.hs_norm().max(1.0) {
            return Err(Error::OutsideSymmetricSpan { residual });
        }
        let consistency_residual = (&lhs - &self.combine(&measured_rhs)).hs_norm();
        let mut deviations = Vec::new();
        let mut generators: Vec<SymmetricGenerator> = id
            .rhs
            .iter()
            .chain(&measured_rhs)
            .map(|t| t.generator)
            .collect();
        generators.sort();
        generators.dedup();
        for g in generators {
            let find = |terms: &[Term]| {
                terms
                    .iter()
                    .filter(|t| t.generator == g)
                    .map(|t| t.coefficient)
                    .sum::<f64>()
            };
            let stated = find(&id.rhs);
            let measured = find(&measured_rhs);
            if (stated - measured).abs() > COEFF_TOL {
                deviations.push(CoefficientDeviation {
                    generator: g,
                    stated,
                    measured,
                });
            }
        }
        Ok(IdentityCheck {
            identity: id.clone(),
            holds: deviations.is_empty(),
            measured_rhs,
            deviations,
            consistency_residual,
        })
    }
}

/// Evaluates `id` numerically, always returning the measured expansion.
pub fn check_bracket_identity(id: &BracketIdentity) -> Result<IdentityCheck> {
    GeneratorTable::new(id.n)?.check(id)
}
