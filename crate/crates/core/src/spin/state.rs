use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::hamiltonian::check_spins;
use crate::error::{Error, Result};
use crate::tensor::{czero, DenseMatrix, Real};

/// Pure state of `n` spins in the MSB-first computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinState<T: Real = f64> {
    n: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> SpinState<T> {
    /// Validates length and unit norm.
    pub fn new(n: usize, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_spins(n, 1)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::AmplitudeCount {
                len: amplitudes.len(),
                n,
            });
        }
        let norm = norm(&amplitudes);
        if (norm - T::one()).abs() > T::struct_tol() {
            return Err(Error::NotNormalized {
                norm: norm.as_f64(),
            });
        }
        Ok(Self { n, amplitudes })
    }

    /// Rescales to unit norm before validating.
    pub fn normalized(n: usize, mut amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let nrm = norm(&amplitudes);
        if nrm == T::zero() || !nrm.is_finite() {
            return Err(Error::NotNormalized { norm: nrm.as_f64() });
        }
        for a in amplitudes.iter_mut() {
            *a /= nrm;
        }
        Self::new(n, amplitudes)
    }

    pub(crate) fn from_raw(n: usize, amplitudes: Vec<Complex<T>>) -> Self {
        Self { n, amplitudes }
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_spins(n, 1)?;
        let mut amps = vec![czero(); 1 << n];
        let slot = amps.get_mut(index).ok_or(Error::InvalidState(format!(
            "basis index {index} for {n} spins"
        )))?;
        *slot = Complex::new(T::one(), T::zero());
        Ok(Self {
            n,
            amplitudes: amps,
        })
    }

    /// Computational basis state from a bitstring such as `"010"`.
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        let n = bits.len();
        let index = bits.chars().try_fold(0usize, |acc, ch| match ch {
            '0' => Ok(acc << 1),
            '1' => Ok((acc << 1) | 1),
            _ => Err(Error::InvalidState(bits.to_string())),
        })?;
        Self::basis(n, index)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        norm(&self.amplitudes)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.amplitudes.len(),
                right: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(czero(), |acc, (&a, &b)| acc + a.conj() * b))
    }

    pub fn apply(&self, u: &DenseMatrix<T>) -> Result<Self> {
        Ok(Self {
            n: self.n,
            amplitudes: u.mul_vec(&self.amplitudes)?,
        })
    }

    /// Weight outside the Dicke subspace, `‖ψ − P_sym ψ‖`.
    pub fn asymmetric_weight(&self) -> T {
        let mut rest = self.amplitudes.clone();
        for m in 0..=self.n {
            let phi = phi_state::<T>(self.n, m).expect("valid excitation");
            let overlap = phi.inner(self).expect("same size");
            for (r, &p) in rest.iter_mut().zip(&phi.amplitudes) {
                *r -= overlap * p;
            }
        }
        norm(&rest)
    }

    /// Coordinates `⟨φ_m|ψ⟩` for `m = 0..=n`.
    pub fn dicke_coordinates(&self) -> Vec<Complex<T>> {
        (0..=self.n)
            .map(|m| {
                phi_state::<T>(self.n, m)
                    .expect("valid excitation")
                    .inner(self)
                    .expect("same size")
            })
            .collect()
    }

    /// Inverse of [`SpinState::dicke_coordinates`].
    pub fn from_dicke_coordinates(n: usize, coords: &[Complex<T>]) -> Result<Self> {
        if coords.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                left: n + 1,
                right: coords.len(),
            });
        }
        let mut amps = vec![czero(); 1 << n];
        for (m, &cm) in coords.iter().enumerate() {
            let phi = phi_state::<T>(n, m)?;
            for (a, &p) in amps.iter_mut().zip(&phi.amplitudes) {
                *a += cm * p;
            }
        }
        Self::normalized(n, amps)
    }
}

fn norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

/// Uniform superposition of basis states with `m` spins up.
pub fn phi_state<T: Real>(n: usize, m: usize) -> Result<SpinState<T>> {
    check_spins(n, 1)?;
    if m > n {
        return Err(Error::ExcitationOutOfRange { m, n });
    }
    let dim = 1usize << n;
    let count = (0..dim).filter(|i| i.count_ones() as usize == m).count();
    let amp = Complex::new(T::one() / T::lit(count as f64).sqrt(), T::zero());
    let amps = (0..dim)
        .map(|i| {
            if i.count_ones() as usize == m {
                amp
            } else {
                czero()
            }
        })
        .collect();
    Ok(SpinState::from_raw(n, amps))
}

/// `(|0…0⟩ + |1…1⟩)/√2`.
pub fn ghz_state<T: Real>(n: usize) -> Result<SpinState<T>> {
    check_spins(n, 1)?;
    let dim = 1usize << n;
    let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
    let mut amps = vec![czero(); dim];
    amps[0] = h;
    amps[dim - 1] = h;
    Ok(SpinState::from_raw(n, amps))
}

/// Uniform single-excitation superposition, equal to `phi_state(n, 1)`.
pub fn w_state<T: Real>(n: usize) -> Result<SpinState<T>> {
    phi_state(n, 1)
}

/// A named state: `ghz`, `w`, `phi:m`, or `ket:bitstring`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateName {
    Ghz,
    W,
    Phi(usize),
    Ket(String),
}

impl FromStr for StateName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidState(s.to_string());
        match s {
            "ghz" => Ok(StateName::Ghz),
            "w" => Ok(StateName::W),
            _ => {
                if let Some(m) = s.strip_prefix("phi:") {
                    m.parse().map(StateName::Phi).map_err(|_| bad())
                } else if let Some(bits) = s.strip_prefix("ket:") {
                    if !bits.is_empty() && bits.chars().all(|c| c == '0' || c == '1') {
                        Ok(StateName::Ket(bits.to_string()))
                    } else {
                        Err(bad())
                    }
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl StateName {
    pub fn resolve<T: Real>(&self, n: usize) -> Result<SpinState<T>> {
        match self {
            StateName::Ghz => ghz_state(n),
            StateName::W => w_state(n),
            StateName::Phi(m) => phi_state(n, *m),
            StateName::Ket(bits) => {
                if bits.len() != n {
                    return Err(Error::InvalidState(format!(
                        "ket:{bits} does not describe {n} spins"
                    )));
                }
                SpinState::from_bitstring(bits)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    n: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl<T: Real> Serialize for SpinState<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StateJson {
            n: self.n,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|z| [z.re.as_f64(), z.im.as_f64()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for SpinState<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = StateJson::deserialize(d)?;
        let amps = raw
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex::new(T::lit(re), T::lit(im)))
            .collect();
        SpinState::new(raw.n, amps).map_err(serde::de::Error::custom)
    }
}

impl<T: Real> SpinState<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
