use num_complex::Complex;

use super::matrix::{check_dims, DenseMatrix};
use super::scalar::{cone, czero, Real};
use crate::error::{Error, Result};

/// Kronecker product `a ⊗ b`.
pub fn kron<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> DenseMatrix<T> {
    let (na, nb) = (a.dim(), b.dim());
    DenseMatrix::from_fn(na * nb, |i, j| a[(i / nb, j / nb)] * b[(i % nb, j % nb)])
}

/// `ab − ba`.
pub fn commutator<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    check_dims(a, b)?;
    Ok(a * b - b * a)
}

/// Hilbert–Schmidt inner product `trace(a† b)`.
pub fn hs_inner<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<Complex<T>> {
    check_dims(a, b)?;
    Ok(a.as_slice()
        .iter()
        .zip(b.as_slice())
        .fold(czero(), |acc, (&x, &y)| acc + x.conj() * y))
}

/// `Re trace(a† b)`, the real inner product on skew-Hermitian matrices.
pub(crate) fn real_inner<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> T {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .fold(T::zero(), |acc, (&x, &y)| acc + x.re * y.re + x.im * y.im)
}

/// Matrix exponential by scaling and squaring with a Taylor kernel.
pub fn mat_exp<T: Real>(a: &DenseMatrix<T>) -> DenseMatrix<T> {
    let n = a.dim();
    let norm = a.norm1();
    if norm == T::zero() {
        return DenseMatrix::identity(n);
    }
    let half = T::lit(0.5);
    let mut squarings = 0u32;
    let mut scale = T::one();
    while norm * scale > half {
        scale *= half;
        squarings += 1;
    }
    let b = a.scale_real(scale);
    let mut result = DenseMatrix::identity(n);
    let mut term = DenseMatrix::identity(n);
    for k in 1..=40 {
        term = (&term * &b).scale_real(T::one() / T::lit(k as f64));
        result += &term;
        if term.max_abs() <= T::epsilon() * T::lit(0.01) {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// `exp(a t)` for skew-Hermitian `a` given its spectral data (`a = V diag(i λ) V†`).
#[derive(Clone, Debug)]
pub struct SkewSpectrum<T: Real = f64> {
    pub rates: Vec<T>,
    pub vectors: DenseMatrix<T>,
}

impl<T: Real> SkewSpectrum<T> {
    pub fn new(a: &DenseMatrix<T>) -> Result<Self> {
        let h = a.scale(Complex::new(T::zero(), -T::one()));
        let eig = hermitian_eig(&h)?;
        Ok(Self {
            rates: eig.values,
            vectors: eig.vectors,
        })
    }

    pub fn exp(&self, t: T) -> DenseMatrix<T> {
        let n = self.rates.len();
        let phases: Vec<Complex<T>> = self
            .rates
            .iter()
            .map(|&l| Complex::new(T::zero(), l * t).exp())
            .collect();
        let v = &self.vectors;
        DenseMatrix::from_fn(n, |i, j| {
            (0..n).fold(czero(), |acc, k| {
                acc + v[(i, k)] * phases[k] * v[(j, k)].conj()
            })
        })
    }
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Eigen<T: Real = f64> {
    /// Ascending eigenvalues.
    pub values: Vec<T>,
    /// Columns are the eigenvectors, first non-negligible component real positive.
    pub vectors: DenseMatrix<T>,
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eig<T: Real>(a: &DenseMatrix<T>) -> Result<Eigen<T>> {
    let residual = a.hermitian_residual();
    if residual > T::struct_tol() * T::one().max(a.max_abs()) {
        return Err(Error::NotHermitian {
            residual: residual.as_f64(),
        });
    }
    let n = a.dim();
    let mut m = (a + &a.adjoint()).scale_real(T::lit(0.5));
    let mut v = DenseMatrix::<T>::identity(n);
    let scale = m.hs_norm();
    for _sweep in 0..100 {
        let off: T = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .fold(T::zero(), |acc, (p, q)| acc + m[(p, q)].norm_sqr());
        if off.sqrt() <= T::epsilon() * T::lit(1e-2) * scale || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut m, &mut v, p, q);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).expect("finite"));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vectors = DenseMatrix::zeros(n);
    let threshold = T::epsilon().sqrt();
    for (col, &src) in order.iter().enumerate() {
        let mut vec = v.column(src);
        if let Some(lead) = vec.iter().find(|z| z.norm() > threshold).copied() {
            let phase = lead.conj() / lead.norm();
            for z in vec.iter_mut() {
                *z *= phase;
            }
        }
        vectors.set_column(col, &vec);
    }
    Ok(Eigen { values, vectors })
}

fn jacobi_rotate<T: Real>(m: &mut DenseMatrix<T>, v: &mut DenseMatrix<T>, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }
    let e = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (T::lit(2.0) * r);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let cs = T::one() / (T::one() + t * t).sqrt();
    let sn = t * cs;
    let jpp = Complex::new(cs, T::zero());
    let jpq = Complex::new(sn, T::zero());
    let jqp = e.conj() * (-sn);
    let jqq = e.conj() * cs;
    let n = m.dim();
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * jpp + akq * jqp;
        m[(k, q)] = akp * jpq + akq * jqq;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        m[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    m[(p, q)] = czero();
    m[(q, p)] = czero();
    m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
    m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());
}

/// Determinant by LU factorization with partial pivoting.
pub fn det<T: Real>(a: &DenseMatrix<T>) -> Complex<T> {
    let n = a.dim();
    let mut m = a.clone();
    let mut d = cone::<T>();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                m[(i, col)]
                    .norm()
                    .partial_cmp(&m[(j, col)].norm())
                    .expect("finite")
            })
            .expect("nonempty range");
        if m[(pivot, col)].norm() == T::zero() {
            return czero();
        }
        if pivot != col {
            for k in 0..n {
                let tmp = m[(col, k)];
                m[(col, k)] = m[(pivot, k)];
                m[(pivot, k)] = tmp;
            }
            d = -d;
        }
        let p = m[(col, col)];
        d *= p;
        for i in col + 1..n {
            let f = m[(i, col)] / p;
            for k in col..n {
                let sub = f * m[(col, k)];
                m[(i, k)] -= sub;
            }
        }
    }
    d
}

/// Gram–Schmidt orthonormalization of the columns, in order.
pub fn orthonormalize_columns<T: Real>(a: &DenseMatrix<T>) -> DenseMatrix<T> {
    let n = a.dim();
    let mut out = DenseMatrix::zeros(n);
    for j in 0..n {
        let mut v = a.column(j);
        for _pass in 0..2 {
            for k in 0..j {
                let u = out.column(k);
                let proj = u
                    .iter()
                    .zip(&v)
                    .fold(czero::<T>(), |acc, (&x, &y)| acc + x.conj() * y);
                for (vi, &ui) in v.iter_mut().zip(&u) {
                    *vi -= proj * ui;
                }
            }
        }
        let norm = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
        for z in v.iter_mut() {
            *z /= norm;
        }
        out.set_column(j, &v);
    }
    out
}

/// The phase-aligned distance `min_φ ‖e^{iφ} a − b‖_max` (φ from the trace overlap) and that φ.
pub fn phase_aligned_distance<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> (T, T) {
    let overlap = hs_inner(a, b).expect("equal dimensions");
    let phi = if overlap.norm() == T::zero() {
        T::zero()
    } else {
        overlap.arg()
    };
    let aligned = a.scale(Complex::new(T::zero(), phi).exp());
    ((&aligned - b).max_abs(), phi)
}
