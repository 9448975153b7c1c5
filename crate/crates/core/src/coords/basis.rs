use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin::{hamiltonian_x, hamiltonian_y, hamiltonian_zz};
use crate::{Matrix, C64};

const BLOCK_TOL: f64 = 1e-10;

/// A unitary change of coordinates together with the block sizes it exposes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisChange {
    pub n: usize,
    pub matrix: Matrix,
    pub block_sizes: Vec<usize>,
}

impl BasisChange {
    /// `self.matrix · a · self.matrix†`.
    pub fn conjugate(&self, a: &Matrix) -> Result<Matrix> {
        conjugate(&self.matrix, a)
    }

    /// Inverse map `self.matrix† · a · self.matrix`.
    pub fn unconjugate(&self, a: &Matrix) -> Result<Matrix> {
        conjugate(&self.matrix.adjoint(), a)
    }

    /// Index ranges of the diagonal blocks.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.block_sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    /// Indices of the last block, which carries the permutation-invariant states.
    pub fn symmetric_indices(&self) -> Vec<usize> {
        self.block_ranges()
            .pop()
            .expect("at least one block")
            .collect()
    }
}

/// `u · a · u†`.
pub fn conjugate(u: &Matrix, a: &Matrix) -> Result<Matrix> {
    u.matmul(a)?.matmul(&u.adjoint())
}

/// The two-spin basis: rows are `ψ_0, φ_0, φ_1, φ_2` in the computational basis.
pub fn basis_t() -> BasisChange {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let t_dagger = Matrix::from_real(4, &[
        0.0, 1.0, 0.0, 0.0,
        -a,  0.0, a,   0.0,
        a,   0.0, a,   0.0,
        0.0, 0.0, 0.0, 1.0,
    ]);
    BasisChange {
        n: 2,
        matrix: t_dagger.adjoint(),
        block_sizes: vec![1, 3],
    }
}

/// Second two-spin change of coordinates, applied after [`basis_t`], that turns the
/// collective controls into real rotation generators.
pub fn basis_t_hat() -> Matrix {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let t = Matrix::from_pairs(4, &[
        (1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0),
        (0.0, 0.0), (0.0, -a),  (0.0, 0.0), (0.0, -a),
        (0.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0),
        (0.0, 0.0), (a, 0.0),   (0.0, 0.0), (-a, 0.0),
    ]);
    t
}

/// The three-spin basis: rows are `ψ_0, ψ_1, χ_0, χ_1, φ_0, φ_1, φ_2, φ_3`.
pub fn basis_m() -> BasisChange {
    let s2 = std::f64::consts::SQRT_2;
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    let (r2, r3, r6, q) = (1.0 / s2, 1.0 / s3, 1.0 / s6, s2 / s3);
    #[rustfmt::skip]
    let m_dagger = Matrix::from_real(8, &[
        0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, q,   0.0, 0.0, r3,  0.0, 0.0,
        -r2, 0.0, -r6, 0.0, 0.0, r3,  0.0, 0.0,
        0.0, -r2, 0.0, r6,  0.0, 0.0, r3,  0.0,
        r2,  0.0, -r6, 0.0, 0.0, r3,  0.0, 0.0,
        0.0, r2,  0.0, r6,  0.0, 0.0, r3,  0.0,
        0.0, 0.0, 0.0, -q,  0.0, 0.0, r3,  0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0,
    ]);
    BasisChange {
        n: 3,
        matrix: m_dagger.adjoint(),
        block_sizes: vec![2, 2, 4],
    }
}

/// The symmetry-adapted basis for `n ∈ {2, 3}`.
pub fn basis_for(n: usize) -> Result<BasisChange> {
    match n {
        2 => Ok(basis_t()),
        3 => Ok(basis_m()),
        other => Err(Error::UnsupportedSpinCount(other)),
    }
}

/// `−iH_x, −iH_y, −iH_zz` conjugated into the symmetry-adapted basis.
pub fn conjugated_generators(b: &BasisChange) -> Result<[Matrix; 3]> {
    let mi = C64::new(0.0, -1.0);
    Ok([
        b.conjugate(&hamiltonian_x::<f64>(b.n)?.scale(mi))?,
        b.conjugate(&hamiltonian_y::<f64>(b.n)?.scale(mi))?,
        b.conjugate(&hamiltonian_zz::<f64>(b.n)?.scale(mi))?,
    ])
}

/// Diagonal blocks of a conjugated matrix with the largest off-block magnitude.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockForm {
    pub blocks: Vec<Matrix>,
    pub residual: f64,
    /// For three spins, `max |W_1 − W_2|` between the two 2×2 blocks.
    pub duplicate_residual: Option<f64>,
}

/// Conjugates `a` into `b` and splits it into diagonal blocks.
///
/// Fails when an off-block entry exceeds `1e-10`, or, for three spins, when the two 2×2
/// blocks differ by more than `1e-10`.
pub fn block_split(b: &BasisChange, a: &Matrix) -> Result<BlockForm> {
    let form = block_form(b, a)?;
    if form.residual > BLOCK_TOL {
        return Err(Error::NotBlockDiagonal {
            residual: form.residual,
        });
    }
    if let Some(residual) = form.duplicate_residual {
        if residual > BLOCK_TOL {
            return Err(Error::UnequalBlocks { residual });
        }
    }
    Ok(form)
}

/// Same as [`block_split`] without the tolerance checks.
pub fn block_form(b: &BasisChange, a: &Matrix) -> Result<BlockForm> {
    let c = b.conjugate(a)?;
    let ranges = b.block_ranges();
    let block_of = |i: usize| {
        ranges
            .iter()
            .position(|r| r.contains(&i))
            .expect("in range")
    };
    let mut residual = 0.0f64;
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            if block_of(i) != block_of(j) {
                residual = residual.max(c[(i, j)].norm());
            }
        }
    }
    let blocks: Vec<Matrix> = ranges
        .iter()
        .map(|r| c.submatrix(&r.clone().collect::<Vec<_>>()))
        .collect();
    let duplicate_residual = (b.n == 3).then(|| (&blocks[0] - &blocks[1]).max_abs());
    Ok(BlockForm {
        blocks,
        residual,
        duplicate_residual,
    })
}
