//! Elements of the four-dimensional groups generated by `(B_y, B̂_y)` and `(B_x, B̂_x)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lm::{self, unit};
use super::plan::{Generator, Step};
use super::su2::{su2_two_axis, Axis};
use crate::error::{Error, Result};
use crate::tensor::{det, hermitian_eig, phase_aligned_distance, SkewSpectrum};
use crate::{Matrix, C64};

/// Accuracy demanded from each solved subgroup element.
pub const SUBGROUP_TOL: f64 = 1e-12;

/// Membership tolerance for subgroup targets.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

const RESTARTS: [usize; 6] = [2, 2, 4, 48, 24, 24];

/// Solver for one of the two subgroups `e^𝒜` (`Y`) or `e^ℬ'` (`X`).
#[derive(Clone, Debug)]
pub struct SubgroupSolver {
    tags: [Generator; 2],
    generators: [Matrix; 2],
    spectra: [SkewSpectrum; 2],
    frame: Matrix,
}

impl SubgroupSolver {
    /// The group generated by `B_y` and `B̂_y`.
    pub fn y_group() -> Self {
        Self::new([Generator::By, Generator::ByHat])
    }

    /// The group generated by `B_x` and `B̂_x`.
    pub fn x_group() -> Self {
        Self::new([Generator::Bx, Generator::BxHat])
    }

    fn new(tags: [Generator; 2]) -> Self {
        let generators = tags.map(Generator::matrix);
        let spectra = [
            SkewSpectrum::new(&generators[0]).expect("skew-Hermitian generator"),
            SkewSpectrum::new(&generators[1]).expect("skew-Hermitian generator"),
        ];
        let frame = two_block_frame(&generators[0], &generators[1]);
        Self {
            tags,
            generators,
            spectra,
            frame,
        }
    }

    pub fn tags(&self) -> [Generator; 2] {
        self.tags
    }

    /// Unitary `T` with `T G T† = (Z_1 ⊕ Z_1) + c` and `T Ĝ T† = (Z_2 ⊕ Z_2) + c`,
    /// `c = diag(−i, −i, i, i)`.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    /// Distance of `g` from the group, up to global phase.
    pub fn membership_residual(&self, g: &Matrix) -> f64 {
        let h = &(&self.frame * g) * &self.frame.adjoint();
        let mut off: f64 = 0.0;
        for i in 0..2 {
            for j in 2..4 {
                off = off.max(h[(i, j)].norm()).max(h[(j, i)].norm());
            }
        }
        let (b1, b2) = (h.submatrix(&[0, 1]), h.submatrix(&[2, 3]));
        let ratio = block_ratio(&b1, &b2);
        off.max((&b2 - &b1.scale(ratio)).max_abs())
    }

    /// Alternating exponentials (leftmost first) whose product equals `g` up to global phase.
    pub fn solve(&self, g: &Matrix) -> Result<Vec<Step>> {
        let residual = self.membership_residual(g);
        if residual > MEMBERSHIP_TOL {
            return Err(Error::OutsideSubgroup { residual });
        }
        if phase_aligned_distance(&Matrix::identity(4), g).0 <= 1e-14 {
            return Ok(Vec::new());
        }
        match self.solve_direct(g) {
            Some(steps) => Ok(steps),
            None => self.solve_with_phase_insertion(g),
        }
    }

    /// Least-squares search over 1 to 6 alternating factors with seeded restarts.
    pub fn solve_direct(&self, g: &Matrix) -> Option<Vec<Step>> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for (i, &restarts) in RESTARTS.iter().enumerate() {
            let found = lm::search(
                &self.spectra,
                &self.generators,
                g,
                i + 1,
                restarts,
                SUBGROUP_TOL,
                &mut rng,
            );
            if let Some(found) = found {
                return Some(self.steps(&found.gens, &found.times));
            }
        }
        None
    }

    fn steps(&self, gens: &[usize], times: &[f64]) -> Vec<Step> {
        gens.iter()
            .zip(times)
            .map(|(&g, &t)| Step::new(self.tags[g], t))
            .collect()
    }

    /// Two-axis factorization of the SU(2) part followed by a rotation-pair insertion
    /// `J e^{Gα} J⁻¹ e^{Gα}` that fixes the relative phase of the two blocks.
    pub fn solve_with_phase_insertion(&self, g: &Matrix) -> Result<Vec<Step>> {
        let residual = self.membership_residual(g);
        if residual > MEMBERSHIP_TOL {
            return Err(Error::OutsideSubgroup { residual });
        }
        let h = &(&self.frame * g) * &self.frame.adjoint();
        let b1 = h.submatrix(&[0, 1]);
        let b2 = h.submatrix(&[2, 3]);
        let want = block_ratio(&b1, &b2);
        let v = b1.scale(det(&b1).sqrt().inv());
        let j = Matrix::from_real(2, &[0.0, 1.0, -1.0, 0.0]);
        let to_steps = |f: Vec<(Axis, f64)>| -> Vec<(usize, f64)> {
            f.into_iter()
                .map(|(a, t)| (if a == Axis::Z1 { 0 } else { 1 }, t))
                .collect()
        };
        let seq_v = to_steps(su2_two_axis(&v)?);
        let seq_j = to_steps(su2_two_axis(&j)?);
        let seq_j_inv = to_steps(su2_two_axis(&j.adjoint())?);
        let build = |alpha: f64| -> Vec<(usize, f64)> {
            let mut s = seq_v.clone();
            s.extend(&seq_j);
            s.push((0, alpha));
            s.extend(&seq_j_inv);
            s.push((0, alpha));
            s
        };
        let ratio_at = |alpha: f64| -> C64 {
            let s = build(alpha);
            let gens: Vec<usize> = s.iter().map(|x| x.0).collect();
            let times: Vec<f64> = s.iter().map(|x| x.1).collect();
            let p = lm::product(&self.spectra, &gens, &times);
            let hp = &(&self.frame * &p) * &self.frame.adjoint();
            block_ratio(&hp.submatrix(&[0, 1]), &hp.submatrix(&[2, 3]))
        };
        let r0 = ratio_at(0.0);
        let probe = 0.1;
        let slope = (ratio_at(probe) / r0).arg() / probe;
        let alpha = (want / r0).arg() / slope;
        let s = build(alpha);
        let gens: Vec<usize> = s.iter().map(|x| x.0).collect();
        let times: Vec<f64> = s.iter().map(|x| x.1).collect();
        let p = lm::product(&self.spectra, &gens, &times);
        let (err, _) = phase_aligned_distance(&p, g);
        if err > 1e-10 {
            return Err(Error::NoConvergence(format!(
                "phase insertion left residual {err:e}"
            )));
        }
        Ok(self.steps(&gens, &times))
    }
}

fn block_ratio(b1: &Matrix, b2: &Matrix) -> C64 {
    unit(
        b1.as_slice()
            .iter()
            .zip(b2.as_slice())
            .fold(C64::new(0.0, 0.0), |acc, (&x, &y)| acc + x.conj() * y),
    )
}

/// Rows are eigenvectors of `−iG` for eigenvalues `1, −3, 3, −1`, phased so that the
/// `(0,1)` and `(2,3)` entries of `T Ĝ T†` are real and positive.
fn two_block_frame(g: &Matrix, g_hat: &Matrix) -> Matrix {
    let eig = hermitian_eig(&g.scale(C64::new(0.0, -1.0))).expect("Hermitian");
    // Ascending eigenvalues are −3, −1, 1, 3.
    let order = [2, 0, 3, 1];
    let mut t = Matrix::zeros(4);
    for (row, &k) in order.iter().enumerate() {
        let v = eig.vectors.column(k);
        for (col, z) in v.iter().enumerate() {
            t[(row, col)] = z.conj();
        }
    }
    for (a, b) in [(0, 1), (2, 3)] {
        let h = &(&t * g_hat) * &t.adjoint();
        let phase = unit(h[(a, b)]);
        for col in 0..4 {
            t[(b, col)] *= phase;
        }
    }
    t
}
