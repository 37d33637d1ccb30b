//! Smallest eigenvalue of small Hermitian matrices by cyclic Jacobi sweeps.

use num_complex::Complex64;

use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 200;

/// All eigenvalues of a real symmetric matrix, ascending.
pub fn symmetric_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let scale = m.iter().flatten().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Smallest eigenvalue of a Hermitian matrix (real `2m × 2m` embedding).
pub fn gram_min_eigenvalue(values: &[Vec<Complex64>]) -> Result<f64> {
    let m = values.len();
    if m == 0 {
        return Err(Error::Domain("empty matrix".into()));
    }
    if values.iter().any(|row| row.len() != m) {
        return Err(Error::Domain("matrix is not square".into()));
    }
    for i in 0..m {
        for j in 0..m {
            if (values[i][j] - values[j][i].conj()).norm() > HERMITIAN_TOL {
                return Err(Error::Domain(format!("matrix is not Hermitian at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    if values.iter().flatten().all(|z| z.im == 0.0) {
        let real: Vec<Vec<f64>> = values.iter().map(|r| r.iter().map(|z| z.re).collect()).collect();
        return Ok(symmetric_eigenvalues(&real)[0]);
    }
    let mut big = vec![vec![0.0; 2 * m]; 2 * m];
    for i in 0..m {
        for j in 0..m {
            // average the two halves so the embedding is exactly symmetric
            let z = (values[i][j] + values[j][i].conj()) * 0.5;
            big[i][j] = z.re;
            big[i + m][j + m] = z.re;
            big[i][j + m] = -z.im;
            big[i + m][j] = z.im;
        }
    }
    Ok(symmetric_eigenvalues(&big)[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn identity_and_rank_one() {
        let id: Vec<Vec<Complex64>> = (0..4).map(|i| (0..4).map(|j| c(if i == j { 1.0 } else { 0.0 })).collect()).collect();
        assert!((gram_min_eigenvalue(&id).unwrap() - 1.0).abs() < 1e-12);
        let v = [1.0, -2.0, 0.5, 3.0];
        let outer: Vec<Vec<Complex64>> = v.iter().map(|a| v.iter().map(|b| c(a * b)).collect()).collect();
        assert!(gram_min_eigenvalue(&outer).unwrap().abs() < 1e-10);
    }

    #[test]
    fn known_spectrum() {
        let a = vec![vec![2.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 2.0]];
        let e = symmetric_eigenvalues(&a);
        let s = 2f64.sqrt();
        for (x, y) in e.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn complex_hermitian() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = vec![
            vec![c(1.0), Complex64::new(0.0, 1.0)],
            vec![Complex64::new(0.0, -1.0), c(1.0)],
        ];
        assert!(gram_min_eigenvalue(&m).unwrap().abs() < 1e-12);
        let bad = vec![vec![c(1.0), c(0.5)], vec![c(0.2), c(1.0)]];
        assert!(gram_min_eigenvalue(&bad).is_err());
    }
}
