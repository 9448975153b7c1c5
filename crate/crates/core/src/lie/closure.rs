use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tensor::{commutator, real_inner, DenseMatrix};
use crate::Matrix;

/// New directions are accepted when their projected residual exceeds this HS norm.
pub const CLOSURE_TOL: f64 = 1e-9;

/// Orthonormal (real Hilbert–Schmidt) basis of a real Lie algebra of skew-Hermitian matrices.
#[derive(Clone, Debug)]
pub struct LieBasis {
    dim_space: usize,
    elements: Vec<Matrix>,
}

impl LieBasis {
    pub fn dim_space(&self) -> usize {
        self.dim_space
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    /// Real dimension of the algebra.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Component of `a` orthogonal to the span (two Gram–Schmidt passes).
    pub fn residual(&self, a: &Matrix) -> Result<Matrix> {
        if a.dim() != self.dim_space {
            return Err(Error::DimensionMismatch {
                left: self.dim_space,
                right: a.dim(),
            });
        }
        Ok(project_out(&self.elements, a.clone()))
    }

    /// Relative residual `‖a − P a‖_HS / ‖a‖_HS` (0 for the zero matrix).
    pub fn relative_residual(&self, a: &Matrix) -> Result<f64> {
        let norm = a.hs_norm();
        if norm == 0.0 {
            return Ok(0.0);
        }
        Ok(self.residual(a)?.hs_norm() / norm)
    }

    /// Span membership with relative tolerance 1e-8.
    pub fn contains(&self, a: &Matrix) -> Result<bool> {
        Ok(self.relative_residual(a)? <= 1e-8)
    }

    /// Appends `a` if it adds a direction above [`CLOSURE_TOL`]; returns whether it did.
    fn insert(&mut self, a: Matrix) -> bool {
        let r = project_out(&self.elements, a);
        let norm = r.hs_norm();
        if norm > CLOSURE_TOL {
            self.elements.push(r.scale_real(1.0 / norm));
            true
        } else {
            false
        }
    }
}

fn project_out(basis: &[Matrix], mut a: Matrix) -> Matrix {
    for _pass in 0..2 {
        for b in basis {
            let coeff = real_inner(b, &a);
            if coeff != 0.0 {
                a -= &b.scale_real(coeff);
            }
        }
    }
    a
}

/// Smallest bracket-closed real span containing the generators.
///
/// Brackets of each breadth-first pass are evaluated in parallel and inserted serially in
/// pair order, so the result is identical to a serial run.
pub fn closure(generators: &[Matrix]) -> Result<LieBasis> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let dim = first.dim();
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.dim(),
            });
        }
        let residual = g.skew_residual();
        if residual > 1e-12 * g.max_abs().max(1.0) {
            return Err(Error::NotSkewHermitian { residual });
        }
    }
    let mut basis = LieBasis {
        dim_space: dim,
        elements: Vec::new(),
    };
    for g in generators {
        basis.insert(g.clone());
    }
    let mut fresh_from = 0;
    loop {
        let len = basis.len();
        let pairs: Vec<(usize, usize)> = (0..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .filter(|&(_, j)| j >= fresh_from)
            .collect();
        let elements = &basis.elements;
        let brackets: Vec<Matrix> = pairs
            .par_iter()
            .map(|&(i, j)| commutator(&elements[i], &elements[j]).expect("equal dimensions"))
            .collect();
        for b in brackets {
            basis.insert(b);
        }
        if basis.len() == len {
            break;
        }
        fresh_from = len;
    }
    Ok(basis)
}

/// `C(n+3, 3) − 1`: the dimension of the traceless permutation-invariant algebra.
pub fn predicted_dimension(n: usize) -> usize {
    (n + 1) * (n + 2) * (n + 3) / 6 - 1
}

pub(crate) fn traceless(a: &Matrix) -> Matrix {
    let d = a.dim();
    let shift = a.trace() / d as f64;
    a - &DenseMatrix::identity(d).scale(shift)
}
