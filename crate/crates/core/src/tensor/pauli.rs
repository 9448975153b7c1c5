use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use super::linalg::kron;
use super::matrix::DenseMatrix;
use super::scalar::{c, Real};
use crate::error::{Error, Result};

/// One tensor factor of a Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLabel {
    I,
    X,
    Y,
    Z,
}

impl PauliLabel {
    pub const ALL: [PauliLabel; 4] = [PauliLabel::I, PauliLabel::X, PauliLabel::Y, PauliLabel::Z];

    pub fn symbol(self) -> char {
        match self {
            PauliLabel::I => '0',
            PauliLabel::X => 'x',
            PauliLabel::Y => 'y',
            PauliLabel::Z => 'z',
        }
    }
}

impl TryFrom<char> for PauliLabel {
    type Error = Error;

    fn try_from(ch: char) -> Result<Self> {
        match ch {
            '0' | 'i' | 'I' => Ok(PauliLabel::I),
            'x' | 'X' => Ok(PauliLabel::X),
            'y' | 'Y' => Ok(PauliLabel::Y),
            'z' | 'Z' => Ok(PauliLabel::Z),
            other => Err(Error::InvalidLabel(other)),
        }
    }
}

/// The 2×2 matrix of a label. The y factor is `[[0, i], [−i, 0]]`.
pub fn pauli<T: Real>(label: PauliLabel) -> DenseMatrix<T> {
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    let rows = match label {
        PauliLabel::I => [o, z, z, o],
        PauliLabel::X => [z, o, o, z],
        PauliLabel::Y => [z, c(0.0, 1.0), c(0.0, -1.0), z],
        PauliLabel::Z => [o, z, z, -o],
    };
    DenseMatrix::from_fn(2, |i, j| rows[2 * i + j])
}

/// An ordered tensor product of Pauli/identity factors, leftmost factor on qubit 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    labels: Vec<PauliLabel>,
}

impl PauliString {
    pub fn new(labels: Vec<PauliLabel>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[PauliLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .chars()
            .map(PauliLabel::try_from)
            .collect::<Result<Vec<_>>>()?;
        PauliString::new(labels)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

/// Left-to-right Kronecker product of the factors.
pub fn pauli_string_matrix<T: Real>(s: &PauliString) -> DenseMatrix<T> {
    s.labels
        .iter()
        .skip(1)
        .fold(pauli(s.labels[0]), |acc, &l| kron(&acc, &pauli(l)))
}

/// Same matrix as [`pauli_string_matrix`], built directly from its one-nonzero-per-row pattern.
pub(crate) fn pauli_string_sparse<T: Real>(labels: &[PauliLabel]) -> DenseMatrix<T> {
    let n = labels.len();
    let dim = 1usize << n;
    let mut m = DenseMatrix::zeros(dim);
    for row in 0..dim {
        let mut col = 0usize;
        let mut phase = Complex::new(T::one(), T::zero());
        for (q, &l) in labels.iter().enumerate() {
            let bit = (row >> (n - 1 - q)) & 1;
            let (cbit, f) = match l {
                PauliLabel::I => (bit, c(1.0, 0.0)),
                PauliLabel::X => (bit ^ 1, c(1.0, 0.0)),
                PauliLabel::Y => (bit ^ 1, if bit == 0 { c(0.0, 1.0) } else { c(0.0, -1.0) }),
                PauliLabel::Z => (bit, if bit == 0 { c(1.0, 0.0) } else { c(-1.0, 0.0) }),
            };
            col = (col << 1) | cbit;
            phase *= f;
        }
        m[(row, col)] = phase;
    }
    m
}
