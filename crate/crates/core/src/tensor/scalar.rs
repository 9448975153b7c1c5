use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Real scalar usable as the component type of matrix entries.
pub trait Real:
    Float + FloatConst + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into this type.
    fn lit(x: f64) -> Self;

    /// Structural tolerance for unitary/Hermitian predicates in max-entry norm.
    fn struct_tol() -> Self;

    fn as_f64(self) -> f64;
}

impl Real for f64 {
    fn lit(x: f64) -> Self {
        x
    }

    fn struct_tol() -> Self {
        1e-12
    }

    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    fn lit(x: f64) -> Self {
        x as f32
    }

    fn struct_tol() -> Self {
        1e-5
    }

    fn as_f64(self) -> f64 {
        self as f64
    }
}

pub(crate) fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

pub(crate) fn cone<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}
