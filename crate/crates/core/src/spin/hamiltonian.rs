use crate::error::{Error, Result};
use crate::tensor::{pauli_string_sparse, DenseMatrix, PauliLabel, Real};

pub const MAX_SPINS: usize = 6;

pub(crate) fn check_spins(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_SPINS {
        Err(Error::SpinCountOutOfRange {
            n,
            min,
            max: MAX_SPINS,
        })
    } else {
        Ok(())
    }
}

fn string_with(n: usize, sites: &[usize], label: PauliLabel) -> Vec<PauliLabel> {
    let mut labels = vec![PauliLabel::I; n];
    for &s in sites {
        labels[s] = label;
    }
    labels
}

/// `Σ_{k<m} σz^(k) σz^(m)`.
pub fn hamiltonian_zz<T: Real>(n: usize) -> Result<DenseMatrix<T>> {
    check_spins(n, 2)?;
    let mut h = DenseMatrix::zeros(1 << n);
    for k in 0..n {
        for m in k + 1..n {
            h += &pauli_string_sparse(&string_with(n, &[k, m], PauliLabel::Z));
        }
    }
    Ok(h)
}

fn collective<T: Real>(n: usize, label: PauliLabel) -> Result<DenseMatrix<T>> {
    check_spins(n, 1)?;
    let mut h = DenseMatrix::zeros(1 << n);
    for k in 0..n {
        h += &pauli_string_sparse(&string_with(n, &[k], label));
    }
    Ok(h)
}

/// `Σ_k σx^(k)`.
pub fn hamiltonian_x<T: Real>(n: usize) -> Result<DenseMatrix<T>> {
    collective(n, PauliLabel::X)
}

/// `Σ_k σy^(k)` with `σy = [[0, i], [−i, 0]]`.
pub fn hamiltonian_y<T: Real>(n: usize) -> Result<DenseMatrix<T>> {
    collective(n, PauliLabel::Y)
}
