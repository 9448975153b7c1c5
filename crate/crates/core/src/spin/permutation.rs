use crate::error::{Error, Result};
use crate::tensor::{cone, DenseMatrix, Real};

use super::hamiltonian::check_spins;

/// Swap of spins `j` and `j+1` (1-based, spin 1 is the most significant bit).
pub fn transposition<T: Real>(n: usize, j: usize) -> Result<DenseMatrix<T>> {
    check_spins(n, 2)?;
    if j == 0 || j >= n {
        return Err(Error::TranspositionOutOfRange { j, max: n - 1 });
    }
    let dim = 1usize << n;
    let hi = n - j;
    let lo = n - j - 1;
    let mut m = DenseMatrix::zeros(dim);
    for col in 0..dim {
        let b_hi = (col >> hi) & 1;
        let b_lo = (col >> lo) & 1;
        let row = (col & !(1 << hi) & !(1 << lo)) | (b_lo << hi) | (b_hi << lo);
        m[(row, col)] = cone();
    }
    Ok(m)
}

pub(crate) fn spin_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { dim });
    }
    Ok(dim.trailing_zeros() as usize)
}

/// `max_j ‖Π_{j,j+1} a Π_{j,j+1} − a‖_max`.
pub fn permutation_residual<T: Real>(a: &DenseMatrix<T>) -> Result<T> {
    let n = spin_count(a.dim())?;
    let mut worst = T::zero();
    for j in 1..n {
        let p = transposition::<T>(n, j)?;
        worst = worst.max((&(&p * a) * &p - a).max_abs());
    }
    Ok(worst)
}

/// True when `a` commutes with every adjacent transposition within 1e-10.
pub fn is_permutation_invariant<T: Real>(a: &DenseMatrix<T>) -> Result<bool> {
    Ok(permutation_residual(a)? <= T::lit(1e-10))
}
