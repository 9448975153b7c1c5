//! Damped least squares for alternating products `e^{G_a t_1} e^{G_b t_2} ⋯` up to global phase.

use rand::Rng;

use crate::tensor::{phase_aligned_distance, SkewSpectrum};
use crate::{Matrix, C64};

/// A converged alternating sequence: generator index per factor (leftmost first) and durations.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Alternating {
    pub gens: Vec<usize>,
    pub times: Vec<f64>,
    pub error: f64,
}

pub(crate) fn product(spectra: &[SkewSpectrum; 2], gens: &[usize], times: &[f64]) -> Matrix {
    let dim = spectra[0].rates.len();
    gens.iter()
        .zip(times)
        .fold(Matrix::identity(dim), |acc, (&g, &t)| {
            &acc * &spectra[g].exp(t)
        })
}

fn residual(target_adj: &Matrix, w: &Matrix, out: &mut Vec<f64>) {
    let q = target_adj * w;
    let d = q.dim();
    let mean = q.trace() / d as f64;
    out.clear();
    for i in 0..d {
        for j in 0..d {
            let mut z = q[(i, j)];
            if i == j {
                z -= mean;
            }
            out.push(z.re);
            out.push(z.im);
        }
    }
}

fn cost(r: &[f64]) -> f64 {
    r.iter().map(|x| x * x).sum()
}

/// Solves `(a) x = b` for a small dense symmetric system; `None` when singular.
fn solve_small(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..k {
            let f = a[row][col] / a[col][col];
            let pivot_row = a[col].clone();
            for (dst, &src) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= f * src;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; k];
    for row in (0..k).rev() {
        let s: f64 = (row + 1..k).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}

/// Levenberg–Marquardt from the given start; returns the refined durations.
pub(crate) fn refine(
    spectra: &[SkewSpectrum; 2],
    generators: &[Matrix; 2],
    target: &Matrix,
    gens: &[usize],
    start: Vec<f64>,
    max_iter: usize,
) -> Vec<f64> {
    let k = gens.len();
    let target_adj = target.adjoint();
    let mut t = start;
    let mut r = Vec::new();
    let mut trial_r = Vec::new();
    let mut col = Vec::new();
    let mut lambda = 1e-3;
    let factors = |t: &[f64]| -> Vec<Matrix> {
        gens.iter()
            .zip(t)
            .map(|(&g, &x)| spectra[g].exp(x))
            .collect()
    };
    let mut es = factors(&t);
    let prod = |es: &[Matrix]| es.iter().skip(1).fold(es[0].clone(), |acc, e| &acc * e);
    residual(&target_adj, &prod(&es), &mut r);
    let mut c = cost(&r);
    for _ in 0..max_iter {
        if c < 1e-30 {
            break;
        }
        let dim = target.dim();
        let mut prefix = Vec::with_capacity(k + 1);
        prefix.push(Matrix::identity(dim));
        for e in &es {
            let next = prefix.last().expect("nonempty") * e;
            prefix.push(next);
        }
        let mut suffix = vec![Matrix::identity(dim); k + 1];
        for j in (0..k).rev() {
            suffix[j] = &es[j] * &suffix[j + 1];
        }
        let jac: Vec<Vec<f64>> = (0..k)
            .map(|j| {
                let dw = &(&prefix[j] * &generators[gens[j]]) * &suffix[j];
                residual(&target_adj, &dw, &mut col);
                col.clone()
            })
            .collect();
        let jtj: Vec<Vec<f64>> = (0..k)
            .map(|a| (0..k).map(|b| dot(&jac[a], &jac[b])).collect())
            .collect();
        let jtr: Vec<f64> = (0..k).map(|a| -dot(&jac[a], &r)).collect();
        let mut improved = false;
        for _ in 0..8 {
            let mut damped = jtj.clone();
            for (i, row) in damped.iter_mut().enumerate() {
                row[i] += lambda * (1.0 + jtj[i][i]);
            }
            let Some(step) = solve_small(damped, jtr.clone()) else {
                lambda *= 10.0;
                continue;
            };
            let trial: Vec<f64> = t.iter().zip(&step).map(|(a, b)| a + b).collect();
            let trial_es = factors(&trial);
            residual(&target_adj, &prod(&trial_es), &mut trial_r);
            let tc = cost(&trial_r);
            if tc < c {
                let small = step.iter().all(|s| s.abs() < 1e-15);
                t = trial;
                es = trial_es;
                std::mem::swap(&mut r, &mut trial_r);
                c = tc;
                lambda = (lambda / 5.0).max(1e-12);
                improved = !small;
                break;
            }
            lambda *= 6.0;
        }
        if !improved {
            break;
        }
    }
    t
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Random restarts over `k` alternating factors starting with either generator.
pub(crate) fn search<R: Rng>(
    spectra: &[SkewSpectrum; 2],
    generators: &[Matrix; 2],
    target: &Matrix,
    k: usize,
    restarts: usize,
    tol: f64,
    rng: &mut R,
) -> Option<Alternating> {
    for attempt in 0..restarts {
        let first = attempt % 2;
        let gens: Vec<usize> = (0..k).map(|j| (first + j) % 2).collect();
        let start: Vec<f64> = (0..k)
            .map(|_| rng.random_range(-std::f64::consts::FRAC_PI_2..std::f64::consts::FRAC_PI_2))
            .collect();
        let times = refine(spectra, generators, target, &gens, start, 200);
        let w = product(spectra, &gens, &times);
        let (error, _) = phase_aligned_distance(&w, target);
        if error <= tol {
            return Some(Alternating { gens, times, error });
        }
    }
    None
}

pub(crate) fn unit(z: C64) -> C64 {
    if z.norm() == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        z / z.norm()
    }
}
