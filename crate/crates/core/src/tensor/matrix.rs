use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{cone, czero, Real};
use crate::error::{Error, Result};

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T: Real = f64> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![czero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = cone();
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from rows, validating shape and finiteness.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Empty);
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    dim,
                });
            }
            for (j, z) in row.into_iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                data.push(z);
            }
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from real entries given row-major.
    pub fn from_real(dim: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim squared");
        Self {
            dim,
            data: entries
                .iter()
                .map(|&x| Complex::new(T::lit(x), T::zero()))
                .collect(),
        }
    }

    /// Builds a matrix from complex entries given row-major as `(re, im)` pairs.
    pub fn from_pairs(dim: usize, entries: &[(f64, f64)]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim squared");
        Self {
            dim,
            data: entries
                .iter()
                .map(|&(re, im)| Complex::new(T::lit(re), T::lit(im)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Complex<T>]) {
        for (i, &z) in col.iter().enumerate() {
            self[(i, j)] = z;
        }
    }

    pub fn rows(&self) -> Vec<Vec<Complex<T>>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(czero(), |acc, i| acc + self[(i, i)])
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(
            T::zero(),
            |acc, z| if z.norm() > acc { z.norm() } else { acc },
        )
    }

    /// Frobenius (Hilbert–Schmidt) norm.
    pub fn hs_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> T {
        (0..self.dim)
            .map(|j| (0..self.dim).fold(T::zero(), |acc, i| acc + self[(i, j)].norm()))
            .fold(T::zero(), T::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `‖a a† − I‖_max`.
    pub fn unitary_residual(&self) -> T {
        (self * &self.adjoint() - Self::identity(self.dim)).max_abs()
    }

    /// `‖a − a†‖_max`.
    pub fn hermitian_residual(&self) -> T {
        (self - &self.adjoint()).max_abs()
    }

    /// `‖a + a†‖_max`.
    pub fn skew_residual(&self) -> T {
        (self + &self.adjoint()).max_abs()
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary_residual() <= T::struct_tol()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_residual() <= T::struct_tol()
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.skew_residual() <= T::struct_tol()
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(czero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// Principal submatrix on the given row/column indices, in that order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// Rectangular block `rows × cols` as nested vectors.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Complex<T>>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self[(i, j)]).collect())
            .collect()
    }

    /// Copies `block` into the principal positions named by `idx`.
    pub fn set_submatrix(&mut self, idx: &[usize], block: &Self) {
        for (bi, &i) in idx.iter().enumerate() {
            for (bj, &j) in idx.iter().enumerate() {
                self[(i, j)] = block[(bi, bj)];
            }
        }
    }

    /// Simultaneous row and column permutation: `out[i][j] = self[p[i]][p[j]]`.
    pub fn permute(&self, p: &[usize]) -> Self {
        self.submatrix(p)
    }

    pub fn cast<U: Real>(&self) -> DenseMatrix<U> {
        DenseMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|z| Complex::new(U::lit(z.re.as_f64()), U::lit(z.im.as_f64())))
                .collect(),
        }
    }
}

pub(crate) fn check_dims<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<()> {
    if a.dim != b.dim {
        Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        })
    } else {
        Ok(())
    }
}

impl<T: Real> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

macro_rules! elementwise {
    ($tr:ident, $f:ident, $op:tt) => {
        impl<T: Real> $tr<&DenseMatrix<T>> for &DenseMatrix<T> {
            type Output = DenseMatrix<T>;

            /// Panics on dimension mismatch.
            fn $f(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                DenseMatrix {
                    dim: self.dim,
                    data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a $op b).collect(),
                }
            }
        }

        impl<T: Real> $tr<DenseMatrix<T>> for DenseMatrix<T> {
            type Output = DenseMatrix<T>;

            fn $f(self, rhs: DenseMatrix<T>) -> DenseMatrix<T> {
                (&self).$f(&rhs)
            }
        }

        impl<T: Real> $tr<&DenseMatrix<T>> for DenseMatrix<T> {
            type Output = DenseMatrix<T>;

            fn $f(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
                (&self).$f(rhs)
            }
        }
    };
}

elementwise!(Add, add, +);
elementwise!(Sub, sub, -);

impl<T: Real> AddAssign<&DenseMatrix<T>> for DenseMatrix<T> {
    fn add_assign(&mut self, rhs: &DenseMatrix<T>) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl<T: Real> SubAssign<&DenseMatrix<T>> for DenseMatrix<T> {
    fn sub_assign(&mut self, rhs: &DenseMatrix<T>) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
    }
}

impl<T: Real> Neg for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn neg(self) -> DenseMatrix<T> {
        self.map(|z| -z)
    }
}

impl<T: Real> Neg for DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn neg(self) -> DenseMatrix<T> {
        -&self
    }
}

impl<T: Real> Mul<&DenseMatrix<T>> for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    /// Panics on dimension mismatch; use [`DenseMatrix::matmul`] for a checked product.
    fn mul(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

impl<T: Real> Mul<DenseMatrix<T>> for DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn mul(self, rhs: DenseMatrix<T>) -> DenseMatrix<T> {
        &self * &rhs
    }
}

impl<T: Real> Mul<&DenseMatrix<T>> for DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn mul(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
        &self * rhs
    }
}

impl<T: Real> Mul<DenseMatrix<T>> for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn mul(self, rhs: DenseMatrix<T>) -> DenseMatrix<T> {
        self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl<T: Real> Serialize for DenseMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            entries: (0..self.dim)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .map(|z| [z.re.as_f64(), z.im.as_f64()])
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for DenseMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        let m = DenseMatrix::from_rows(
            raw.entries
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|[re, im]| Complex::new(T::lit(re), T::lit(im)))
                        .collect()
                })
                .collect(),
        )
        .map_err(serde::de::Error::custom)?;
        if m.dim != raw.dim {
            return Err(serde::de::Error::custom(format!(
                "declared dim {} but found {} rows",
                raw.dim, m.dim
            )));
        }
        Ok(m)
    }
}

impl<T: Real> DenseMatrix<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
