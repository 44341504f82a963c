//! Adjacency spectrum of the looped polarity graph G° and the spectral facts
//! the triangle-free bound relies on: top eigenvalue q+1, simple, and every
//! other eigenvalue of magnitude at most √q.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LoopedView;

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
pub const OFF_DIAGONAL_TOL: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are counted as one with multiplicity.
pub const CLUSTER_TOL: f64 = 1e-6;
/// Largest matrix accepted by [`adjacency_spectrum`].
pub const MAX_DIM: usize = 4000;

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumResult {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    /// `max |λ_i|` over i ≥ 2.
    pub lambda_max_rest: f64,
    /// Largest `‖A v - λ v‖₂` over the computed eigenpairs.
    pub residual: f64,
    pub sweeps: usize,
}

impl SpectrumResult {
    /// `(value, multiplicity)` clusters in descending order.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((v, m)) if (*v - x).abs() <= CLUSTER_TOL => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn trace_of_square(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

/// Spectrum of the symmetric 0/1 adjacency matrix of `view`, loops on the
/// diagonal.
pub fn adjacency_spectrum(view: &LoopedView<'_>) -> Result<SpectrumResult> {
    let n = view.num_vertices();
    if n > MAX_DIM {
        return Err(Error::TooLarge(n));
    }
    let a = view.dense_matrix();
    let (values, vectors, sweeps) = jacobi_eigen(&a, n)?;

    let mut residual: f64 = 0.0;
    for (j, &lambda) in values.iter().enumerate() {
        let mut norm = 0.0;
        for i in 0..n {
            let av: f64 = (0..n).map(|k| a[i * n + k] * vectors[k * n + j]).sum();
            let d = av - lambda * vectors[i * n + j];
            norm += d * d;
        }
        residual = residual.max(norm.sqrt());
    }

    let mut eigenvalues = values;
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    let lambda1 = eigenvalues.first().copied().unwrap_or(0.0);
    let lambda_max_rest = eigenvalues
        .iter()
        .skip(1)
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    Ok(SpectrumResult {
        eigenvalues,
        lambda1,
        lambda_max_rest,
        residual,
        sweeps,
    })
}

/// Cyclic Jacobi on a dense row-major symmetric matrix. Returns the
/// (unsorted) eigenvalues, the eigenvectors as columns of a row-major matrix,
/// and the number of sweeps used.
pub fn jacobi_eigen(matrix: &[f64], n: usize) -> Result<(Vec<f64>, Vec<f64>, usize)> {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off < OFF_DIAGONAL_TOL {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok((values, v, sweeps))
}

#[derive(Clone, Debug, Serialize)]
pub struct GapCheck {
    pub regular: bool,
    pub lambda1: f64,
    pub lambda1_ok: bool,
    /// Top eigenvalue separated from the next by more than 0.1.
    pub simple_top: bool,
    pub lambda_max_rest: f64,
    pub rest_ok: bool,
    pub pass: bool,
}

/// Checks `λ1 = q+1` (simple) and `max_{i≥2} |λ_i| ≤ √q`, each within `tol`.
pub fn spectral_gap_check(
    view: &LoopedView<'_>,
    spectrum: &SpectrumResult,
    q: u32,
    tol: f64,
) -> GapCheck {
    let regular = view.regular_degree() == Some(q as usize + 1);
    let lambda1_ok = (spectrum.lambda1 - f64::from(q + 1)).abs() <= tol;
    let simple_top = spectrum
        .eigenvalues
        .get(1)
        .is_none_or(|&l2| spectrum.lambda1 - l2 > 0.1);
    let rest_ok = spectrum.lambda_max_rest <= f64::from(q).sqrt() + tol;
    GapCheck {
        regular,
        lambda1: spectrum.lambda1,
        lambda1_ok,
        simple_top,
        lambda_max_rest: spectrum.lambda_max_rest,
        rest_ok,
        pass: regular && lambda1_ok && simple_top && rest_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{PolarityGraph, SimpleGraph};

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let (vals, _, sweeps) = jacobi_eigen(&[2.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(sweeps, 0);
        assert_eq!(vals, vec![2.0, -1.0]);
    }

    #[test]
    fn two_by_two() {
        let (mut vals, _, _) = jacobi_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn er5_top_is_simple() {
        let g = PolarityGraph::er(5).unwrap();
        let s = adjacency_spectrum(&g.looped()).unwrap();
        assert!((s.lambda1 - 6.0).abs() < 1e-8);
        assert_eq!(s.multiplicities()[0].1, 1);
        assert!(spectral_gap_check(&g.looped(), &s, 5, 1e-6).pass);
    }

    #[test]
    fn irregular_graph_fails() {
        let star = SimpleGraph::from_edges(5, (1..5).map(|v| (0, v)));
        let loops = vec![false; 5];
        let view = LoopedView::new(&star, &loops);
        let s = adjacency_spectrum(&view).unwrap();
        let check = spectral_gap_check(&view, &s, 3, 1e-6);
        assert!(!check.regular);
        assert!(!check.pass);
    }
}
