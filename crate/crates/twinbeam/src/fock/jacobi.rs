//! Cyclic Jacobi eigensolver for small dense symmetric matrices.
//!
//! Self-contained so the Fock-space cross-checks do not depend on an external
//! linear-algebra backend; the matrices here stay below a few hundred rows.

use crate::error::TwinBeamError;

/// Dense symmetric matrix in row-major storage.
#[derive(Debug, Clone)]
pub struct DenseSym {
    dim: usize,
    data: Vec<f64>,
}

impl DenseSym {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.dim + c]
    }

    /// Sets both mirror entries.
    pub fn set_sym(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.dim + c] = v;
        self.data[c * self.dim + r] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Kronecker product, used by the multimode trace-norm cross-check.
    pub fn kron(&self, other: &DenseSym) -> DenseSym {
        let (na, nb) = (self.dim, other.dim);
        let mut out = DenseSym::zeros(na * nb);
        for i in 0..na {
            for j in 0..na {
                let aij = self.get(i, j);
                if aij == 0.0 {
                    continue;
                }
                for k in 0..nb {
                    for l in 0..nb {
                        out.data[(i * nb + k) * (na * nb) + (j * nb + l)] = aij * other.get(k, l);
                    }
                }
            }
        }
        out
    }
}

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, unsorted.
///
/// Converged when the off-diagonal Frobenius norm drops below
/// `1e-13 * (frobenius norm + 1)`.
pub fn eigenvalues(m: &DenseSym) -> Result<Vec<f64>, TwinBeamError> {
    jacobi(m, None)
}

/// Eigenvalues plus the orthogonal eigenvector matrix (columns are vectors).
pub fn eigen_decomposition(m: &DenseSym) -> Result<(Vec<f64>, DenseSym), TwinBeamError> {
    let mut v = DenseSym::zeros(m.dim);
    for i in 0..m.dim {
        v.data[i * m.dim + i] = 1.0;
    }
    let d = jacobi(m, Some(&mut v))?;
    Ok((d, v))
}

fn jacobi(m: &DenseSym, mut vectors: Option<&mut DenseSym>) -> Result<Vec<f64>, TwinBeamError> {
    let n = m.dim;
    let mut a = m.data.clone();
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    if n <= 1 {
        return Ok(d);
    }
    let tol = 1e-13 * (m.frobenius_norm() + 1.0);
    // Accumulate the diagonal in b with per-sweep corrections z so rounding
    // does not drift the eigenvalue sum away from the trace.
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 1..=MAX_SWEEPS {
        let mut off_sq = 0.0;
        let mut abs_sum = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let x = a[p * n + q];
                off_sq += x * x;
                abs_sum += x.abs();
            }
        }
        if (2.0 * off_sq).sqrt() < tol {
            return Ok(d);
        }
        // Threshold the first sweeps so negligible rotations are skipped.
        let thresh = if sweep < 4 {
            0.2 * abs_sum / (n * n) as f64
        } else {
            0.0
        };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // Entries far below the diagonal scale cannot move the
                // spectrum at the target tolerance; zero them outright.
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                for k in 0..p {
                    rotate(&mut a, k * n + p, k * n + q, s, tau);
                }
                for k in p + 1..q {
                    rotate(&mut a, p * n + k, k * n + q, s, tau);
                }
                for k in q + 1..n {
                    rotate(&mut a, p * n + k, q * n + k, s, tau);
                }
                if let Some(v) = vectors.as_deref_mut() {
                    for k in 0..n {
                        rotate(&mut v.data, k * n + p, k * n + q, s, tau);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    Err(TwinBeamError::JacobiNoConvergence {
        sweeps: MAX_SWEEPS,
        dim: n,
    })
}

#[inline]
fn rotate(a: &mut [f64], i: usize, j: usize, s: f64, tau: f64) {
    let g = a[i];
    let h = a[j];
    a[i] = g - s * (h + g * tau);
    a[j] = h + s * (g - h * tau);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn one_by_one() {
        let mut m = DenseSym::zeros(1);
        m.set_sym(0, 0, -0.75);
        assert_eq!(eigenvalues(&m).unwrap(), vec![-0.75]);
    }

    #[test]
    fn antisymmetric_two_by_two() {
        let mut m = DenseSym::zeros(2);
        m.set_sym(0, 1, 0.35);
        let ev = sorted(eigenvalues(&m).unwrap());
        assert!((ev[0] + 0.35).abs() < 1e-14);
        assert!((ev[1] - 0.35).abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let mut m = DenseSym::zeros(4);
        for (i, &v) in [3.0, -1.0, 0.5, 0.0].iter().enumerate() {
            m.set_sym(i, i, v);
        }
        assert_eq!(sorted(eigenvalues(&m).unwrap()), vec![-1.0, 0.0, 0.5, 3.0]);
    }

    fn random_sym(dim: usize, rng: &mut ChaCha8Rng) -> DenseSym {
        let mut m = DenseSym::zeros(dim);
        for r in 0..dim {
            for c in r..dim {
                m.set_sym(r, c, rng.gen_range(-1.0..1.0));
            }
        }
        m
    }

    #[test]
    fn reconstruction_residual_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_sym(10, &mut rng);
            let (d, v) = eigen_decomposition(&m).unwrap();
            // residual of Q L Q^T against the input
            let mut worst = 0.0_f64;
            for r in 0..10 {
                for c in 0..10 {
                    let mut acc = 0.0;
                    for k in 0..10 {
                        acc += v.get(r, k) * d[k] * v.get(c, k);
                    }
                    worst = worst.max((acc - m.get(r, c)).abs());
                }
            }
            assert!(worst <= 1e-10, "residual {worst}");
            let sum: f64 = d.iter().sum();
            assert!((sum - m.trace()).abs() <= 1e-12 * 10.0);
        }
    }

    #[test]
    fn kron_of_diagonals() {
        let mut a = DenseSym::zeros(2);
        a.set_sym(0, 0, 2.0);
        a.set_sym(1, 1, 3.0);
        let mut b = DenseSym::zeros(2);
        b.set_sym(0, 0, 5.0);
        b.set_sym(1, 1, 7.0);
        let k = a.kron(&b);
        let ev = sorted(eigenvalues(&k).unwrap());
        assert_eq!(ev, vec![10.0, 14.0, 15.0, 21.0]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn eigenvalue_sum_matches_trace(dim in 2usize..8, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_sym(dim, &mut rng);
            let d = eigenvalues(&m).unwrap();
            let sum: f64 = d.iter().sum();
            prop_assert!((sum - m.trace()).abs() <= 1e-12 * dim as f64);
        }
    }
}
