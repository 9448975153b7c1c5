use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::hamiltonian::check_spins;
use crate::error::{Error, Result};
use crate::tensor::{pauli_string_sparse, DenseMatrix, PauliLabel, Real};

/// The symmetric generator `X^n_(kx,ky,kz)`: `i` times the sum of all distinct Pauli
/// strings with `kx` x-factors, `ky` y-factors, `kz` z-factors and identities elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetricGenerator {
    pub n: usize,
    pub kx: usize,
    pub ky: usize,
    pub kz: usize,
}

impl SymmetricGenerator {
    pub fn new(n: usize, kx: usize, ky: usize, kz: usize) -> Result<Self> {
        if n == 0 || kx + ky + kz > n {
            return Err(Error::InvalidCounts { n, kx, ky, kz });
        }
        Ok(Self { n, kx, ky, kz })
    }

    /// All generators for `n` spins in lexicographic order of `(kx, ky, kz)`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for kx in 0..=n {
            for ky in 0..=n - kx {
                for kz in 0..=n - kx - ky {
                    out.push(Self { n, kx, ky, kz });
                }
            }
        }
        out
    }

    pub fn weight(&self) -> usize {
        self.kx + self.ky + self.kz
    }

    /// Number of distinct strings in the sum (a multinomial coefficient).
    pub fn placements(&self) -> usize {
        let fact = |k: usize| (1..=k).map(|x| x as f64).product::<f64>();
        let k0 = self.n - self.weight();
        (fact(self.n) / (fact(k0) * fact(self.kx) * fact(self.ky) * fact(self.kz))).round() as usize
    }

    /// Strings in lexicographic multiset-permutation order (identity < x < y < z).
    pub fn strings(&self) -> Vec<Vec<PauliLabel>> {
        let mut labels = Vec::with_capacity(self.n);
        labels.extend(std::iter::repeat_n(PauliLabel::I, self.n - self.weight()));
        labels.extend(std::iter::repeat_n(PauliLabel::X, self.kx));
        labels.extend(std::iter::repeat_n(PauliLabel::Y, self.ky));
        labels.extend(std::iter::repeat_n(PauliLabel::Z, self.kz));
        let mut out = vec![labels.clone()];
        while next_permutation(&mut labels) {
            out.push(labels.clone());
        }
        out
    }
}

impl fmt::Display for SymmetricGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}({},{},{})", self.n, self.kx, self.ky, self.kz)
    }
}

fn next_permutation<L: Ord>(v: &mut [L]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Dense matrix of `X^n_(kx,ky,kz)`; skew-Hermitian and permutation invariant.
pub fn symmetric_generator<T: Real>(g: &SymmetricGenerator) -> Result<DenseMatrix<T>> {
    SymmetricGenerator::new(g.n, g.kx, g.ky, g.kz)?;
    check_spins(g.n, 1)?;
    let mut sum = DenseMatrix::zeros(1 << g.n);
    for s in g.strings() {
        sum += &pauli_string_sparse(&s);
    }
    Ok(sum.scale(Complex::new(T::zero(), T::one())))
}
