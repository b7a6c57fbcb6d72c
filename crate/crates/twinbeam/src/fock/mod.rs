//! Brute-force ground truth in a truncated Fock basis.
//!
//! Builds the two-mode density matrix element by element, regroups the
//! partial transpose into its photon-number blocks, and diagonalizes the
//! blocks with the internal Jacobi solver.  Every closed form in
//! [`crate::analytic`] has a numeric counterpart here.

pub mod jacobi;

pub use jacobi::DenseSym;

use crate::analytic::{nu_pm, Field};
use crate::error::TwinBeamError;
use crate::params::TwinBeamParams;

/// Hard ceiling on the per-mode Fock cutoff.
pub const N_MAX_CAP: usize = 200;

/// A chosen Fock cutoff; `capped` is set when the ceiling bound first, in
/// which case downstream trace-norm results are lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub n_max: usize,
    pub capped: bool,
}

/// Smallest cutoff whose leaked occupation probability per mode is below
/// `eps_trunc`: the reduced states are thermal with tail `q^(n+1)`,
/// `q = t/(1+t)` at the larger of the two mean occupations.
pub fn choose_truncation(params: &TwinBeamParams, eps_trunc: f64) -> Truncation {
    assert!(
        eps_trunc > 0.0 && eps_trunc < 1.0,
        "eps_trunc must lie in (0, 1)"
    );
    let t_max = params.b_p() + params.b_s().max(params.b_i());
    let q = t_max / (1.0 + t_max);
    let mut n_max = 0;
    let mut tail = q;
    while tail >= eps_trunc && n_max < N_MAX_CAP {
        n_max += 1;
        tail *= q;
    }
    Truncation {
        n_max,
        capped: tail >= eps_trunc,
    }
}

/// Cutoff for trace-norm quantities (negativity and its distribution).
///
/// The partial-transpose blocks at total photon number `M` carry weight
/// `~ q^(M/2)`, so a trace-norm tail below `eps` needs the occupation tail
/// below `eps^2`.  At the probability-tail cutoff alone the negativity error
/// sits near `sqrt(eps)`, orders of magnitude above `eps`.
pub fn choose_truncation_trace_norm(params: &TwinBeamParams, eps_trunc: f64) -> Truncation {
    choose_truncation(params, eps_trunc * eps_trunc)
}

/// Truncated two-mode density matrix.
///
/// Only the nonzero elements `rho_{i,j,i+d,j+d}` with `d >= 0` are stored
/// (slab per `d`); the `d < 0` half is implied by symmetry, and everything
/// is real, so hermiticity is structural.
#[derive(Debug, Clone)]
pub struct FockDensityMatrix {
    n_max: usize,
    slabs: Vec<Vec<f64>>,
    trace_deficit: f64,
}

impl FockDensityMatrix {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `1 - Tr(rho)` of the truncated matrix.
    pub fn trace_deficit(&self) -> f64 {
        self.trace_deficit
    }

    /// Stored element `rho_{i,j,i+d,j+d}`, `d >= 0`.
    pub fn stored(&self, i: usize, j: usize, d: usize) -> f64 {
        let width = self.n_max - d + 1;
        self.slabs[d][i * width + j]
    }

    /// Full four-index accessor; zero for index combinations outside the
    /// paired-shift pattern.
    pub fn element(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        if i.max(j).max(k).max(l) > self.n_max {
            return 0.0;
        }
        if k + j != i + l {
            return 0.0;
        }
        if k >= i {
            let d = k - i;
            if l < j {
                return 0.0;
            }
            self.stored(i, j, d)
        } else {
            let d = i - k;
            if j < l {
                return 0.0;
            }
            self.stored(k, l, d)
        }
    }

    /// Number of stored elements.
    pub fn stored_len(&self) -> usize {
        self.slabs.iter().map(|s| s.len()).sum()
    }

    /// Diagonal of the reduced state obtained by tracing out the other mode.
    pub fn partial_trace_diagonal(&self, field: Field) -> Vec<f64> {
        let width = self.n_max + 1;
        let joint = &self.slabs[0];
        let mut out = vec![0.0; width];
        for i in 0..width {
            for j in 0..width {
                let p = joint[i * width + j];
                match field {
                    Field::Signal => out[i] += p,
                    Field::Idler => out[j] += p,
                }
            }
        }
        out
    }
}

/// Builds the truncated density matrix from the Gaussian moments.
///
/// Each element is a short sum of non-negative terms; the combinatorial
/// prefactors are carried as running products so nothing above `~1e120`
/// is ever formed at the cutoff ceiling.  Cutoffs large enough to overflow
/// the prefactors are rejected up front.
pub fn build_density_matrix(
    params: &TwinBeamParams,
    n_max: usize,
) -> Result<FockDensityMatrix, TwinBeamError> {
    if max_prefactor_log10(n_max) > 300.0 {
        return Err(TwinBeamError::TruncationTooLarge { n_max });
    }
    let m = params.moments();
    let kt = m.kt();
    let x1 = 1.0 - m.bt1() / kt;
    let x2 = 1.0 - m.bt2() / kt;
    let y = m.d12() / kt;

    let px1: Vec<f64> = (0..=n_max as i32).map(|e| x1.powi(e)).collect();
    let px2: Vec<f64> = (0..=n_max as i32).map(|e| x2.powi(e)).collect();
    let py: Vec<f64> = (0..=2 * n_max as i32).map(|e| y.powi(e)).collect();

    // binom[n][k], n up to the cutoff
    let mut binom: Vec<Vec<f64>> = Vec::with_capacity(n_max + 1);
    binom.push(vec![1.0]);
    for n in 1..=n_max {
        let prev = &binom[n - 1];
        let mut row = vec![1.0; n + 1];
        for k in 1..n {
            row[k] = prev[k - 1] + prev[k];
        }
        binom.push(row);
    }

    let mut slabs = Vec::with_capacity(n_max + 1);
    for d in 0..=n_max {
        let width = n_max - d + 1;
        let mut slab = vec![0.0; width * width];
        for i in 0..width {
            for j in 0..width {
                // prefactor A(m) = sqrt(i!(i+d)!j!(j+d)!) / (m!(i-m)!(j-m)!(m+d)!)
                let mut a = (binom[i + d][d] * binom[j + d][d]).sqrt();
                let mut sum = 0.0;
                for m in 0..=i.min(j) {
                    sum += a * px1[j - m] * px2[i - m] * py[d + 2 * m];
                    a *= ((i - m) * (j - m)) as f64 / ((m + 1) * (m + d + 1)) as f64;
                }
                slab[i * width + j] = sum / kt;
            }
        }
        slabs.push(slab);
    }

    // compensated sum: the deficit itself is near the rounding floor
    let mut trace = 0.0;
    let mut carry = 0.0;
    for &p in &slabs[0] {
        let y = p - carry;
        let t = trace + y;
        carry = (t - trace) - y;
        trace = t;
    }

    Ok(FockDensityMatrix {
        n_max,
        slabs,
        trace_deficit: 1.0 - trace,
    })
}

/// log10 bound on the largest combinatorial prefactor at a given cutoff.
fn max_prefactor_log10(n_max: usize) -> f64 {
    // A(m) peaks near binom(n, n/2)^2
    let half = n_max / 2;
    let mut ln_c = 0.0;
    for k in 1..=half {
        ln_c += (((n_max - half + k) as f64) / k as f64).ln();
    }
    2.0 * ln_c / std::f64::consts::LN_10
}

/// Thermal diagonal of a reduced arm in closed form.
pub fn closed_form_reduced_diagonal(
    params: &TwinBeamParams,
    n_max: usize,
    field: Field,
) -> Vec<f64> {
    let m = params.moments();
    let (mean, mean_t) = match field {
        Field::Signal => (m.b1(), m.bt1()),
        Field::Idler => (m.b2(), m.bt2()),
    };
    let ratio = mean / mean_t;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut p = 1.0 / mean_t;
    for _ in 0..=n_max {
        out.push(p);
        p *= ratio;
    }
    out
}

const REDUCED_DIAGONAL_TOL: f64 = 1e-10;

/// Reduced diagonal with the dual-route consistency gate: the partial trace
/// of the built matrix must agree with the closed form elementwise, and the
/// closed form is what gets returned.
pub fn reduced_diagonal(
    params: &TwinBeamParams,
    n_max: usize,
    field: Field,
) -> Result<Vec<f64>, TwinBeamError> {
    let rho = build_density_matrix(params, n_max)?;
    reduced_diagonal_of(&rho, params, field)
}

fn reduced_diagonal_of(
    rho: &FockDensityMatrix,
    params: &TwinBeamParams,
    field: Field,
) -> Result<Vec<f64>, TwinBeamError> {
    let traced = rho.partial_trace_diagonal(field);
    let closed = closed_form_reduced_diagonal(params, rho.n_max(), field);
    for (index, (&a, &b)) in traced.iter().zip(&closed).enumerate() {
        let deviation = (a - b).abs();
        if deviation > REDUCED_DIAGONAL_TOL {
            return Err(TwinBeamError::ReducedDiagonalMismatch { index, deviation });
        }
    }
    Ok(closed)
}

/// One block of the partially transposed density matrix: the states with
/// `m` photons in total, basis `|k>_s |m-k>_i` for in-truncation `k`.
#[derive(Debug, Clone)]
pub struct PtBlock {
    pub m: usize,
    pub k_min: usize,
    pub entries: DenseSym,
}

/// Partial-transpose blocks for `m = 0 ..= 2 n_max`.
pub fn pt_blocks(rho: &FockDensityMatrix) -> Vec<PtBlock> {
    let n = rho.n_max();
    let mut blocks = Vec::with_capacity(2 * n + 1);
    for m in 0..=2 * n {
        let k_min = m.saturating_sub(n);
        let k_max = m.min(n);
        let dim = k_max - k_min + 1;
        let mut entries = DenseSym::zeros(dim);
        for a in 0..dim {
            let k = k_min + a;
            for b in a..dim {
                let l = k_min + b;
                // (rho^PT)_{(k, m-k), (l, m-l)} = rho_{k, m-l, l, m-k}
                entries.set_sym(a, b, rho.stored(k, m - l, l - k));
            }
        }
        blocks.push(PtBlock { m, k_min, entries });
    }
    blocks
}

/// All eigenvalues of one partial-transpose block.
pub fn block_eigenvalues(block: &PtBlock) -> Result<Vec<f64>, TwinBeamError> {
    jacobi::eigenvalues(&block.entries)
}

/// Negativity resolved over the partial-transpose blocks; `d_n[m]` is the
/// summed magnitude of the negative eigenvalues of the `m`-photon block.
#[derive(Debug, Clone)]
pub struct NegativityDistribution {
    pub d_n: Vec<f64>,
    pub total: f64,
}

fn negative_sum(eigenvalues: &[f64]) -> f64 {
    -eigenvalues.iter().filter(|&&x| x < 0.0).sum::<f64>()
}

fn distribution_of(rho: &FockDensityMatrix) -> Result<NegativityDistribution, TwinBeamError> {
    let mut d_n = Vec::with_capacity(2 * rho.n_max() + 1);
    for block in pt_blocks(rho) {
        d_n.push(negative_sum(&block_eigenvalues(&block)?));
    }
    let total = d_n.iter().sum();
    Ok(NegativityDistribution { d_n, total })
}

/// Negativity distribution at an explicit cutoff.
pub fn negativity_distribution(
    params: &TwinBeamParams,
    n_max: usize,
) -> Result<NegativityDistribution, TwinBeamError> {
    let rho = build_density_matrix(params, n_max)?;
    distribution_of(&rho)
}

/// Numeric negativity at an explicit cutoff: the distribution total.
pub fn negativity_numeric(params: &TwinBeamParams, n_max: usize) -> Result<f64, TwinBeamError> {
    Ok(negativity_distribution(params, n_max)?.total)
}

/// Numeric participation ratio `1 / sum p_j^2` over a reduced diagonal.
pub fn participation_numeric(
    params: &TwinBeamParams,
    n_max: usize,
    field: Field,
) -> Result<f64, TwinBeamError> {
    let p = reduced_diagonal(params, n_max, field)?;
    Ok(1.0 / p.iter().map(|x| x * x).sum::<f64>())
}

/// Numeric von Neumann entropy `-sum p_j ln p_j` over a reduced diagonal.
pub fn entropy_numeric(
    params: &TwinBeamParams,
    n_max: usize,
    field: Field,
) -> Result<f64, TwinBeamError> {
    let p = reduced_diagonal(params, n_max, field)?;
    Ok(shannon(&p))
}

fn shannon(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

/// Smallest eigenvalue of the (non-transposed) density matrix.
///
/// The matrix itself is block-diagonal in the photon-number difference
/// `i - j` (pairs shift both indices together), so it is diagonalized
/// difference block by difference block.  A physical construction must give
/// a value above `-1e-10`.
pub fn positivity_check(rho: &FockDensityMatrix) -> Result<f64, TwinBeamError> {
    let n = rho.n_max() as isize;
    let mut floor = f64::INFINITY;
    for c in -n..=n {
        let t_min = c.max(0) as usize;
        let t_max = (n + c.min(0)) as usize;
        let dim = t_max - t_min + 1;
        let mut entries = DenseSym::zeros(dim);
        for a in 0..dim {
            let i = t_min + a;
            let j = (i as isize - c) as usize;
            for b in a..dim {
                let d = b - a;
                entries.set_sym(a, b, rho.stored(i, j, d));
            }
        }
        for ev in jacobi::eigenvalues(&entries)? {
            floor = floor.min(ev);
        }
    }
    Ok(floor)
}

/// Unnormalized product-form block spectrum `nu_+^(m-k) nu_-^k`, exposed as
/// a diagnostic only: it reproduces the shape of the numeric block spectra
/// but not their normalization, which is left to inspection via
/// [`product_fit_scalar`].
pub fn product_spectrum(params: &TwinBeamParams, m: usize) -> Vec<f64> {
    let (nu_p, nu_m) = nu_pm(params);
    (0..=m)
        .map(|k| nu_p.powi((m - k) as i32) * nu_m.powi(k as i32))
        .collect()
}

/// Least-squares scalar between two spectra (sorted internally).
pub fn product_fit_scalar(numeric: &[f64], product: &[f64]) -> f64 {
    let mut a = numeric.to_vec();
    let mut b = product.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let dot: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let norm: f64 = b.iter().map(|y| y * y).sum();
    if norm == 0.0 {
        0.0
    } else {
        dot / norm
    }
}

/// Trace norm of the partially transposed two-pair product state
/// `rho (x) rho`, with the transpose on both idler modes.
///
/// The product blocks are materialized as explicit Kronecker matrices and
/// diagonalized, which keeps the computation independent of the spectrum
/// factorization it is used to verify.  Intended for small cutoffs.
pub fn product_pt_trace_norm(params: &TwinBeamParams, n_max: usize) -> Result<f64, TwinBeamError> {
    let rho = build_density_matrix(params, n_max)?;
    let blocks = pt_blocks(&rho);
    let mut total = 0.0;
    for a in &blocks {
        for b in &blocks {
            let big = a.entries.kron(&b.entries);
            for ev in jacobi::eigenvalues(&big)? {
                total += ev.abs();
            }
        }
    }
    Ok(total)
}

/// A built oracle for one parameter point: the density matrix at the
/// trace-norm cutoff plus the capped flag, with every numeric quantity
/// computed from that single build.
#[derive(Debug)]
pub struct FockOracle {
    params: TwinBeamParams,
    rho: FockDensityMatrix,
    capped: bool,
}

impl FockOracle {
    /// Builds at the trace-norm cutoff for `eps_trunc`.
    pub fn build(params: &TwinBeamParams, eps_trunc: f64) -> Result<Self, TwinBeamError> {
        let tr = choose_truncation_trace_norm(params, eps_trunc);
        Self::with_n_max(params, tr.n_max, eps_trunc)
    }

    /// Builds at an explicit cutoff; the capped flag reports whether that
    /// cutoff reaches the trace-norm tail target.
    pub fn with_n_max(
        params: &TwinBeamParams,
        n_max: usize,
        eps_trunc: f64,
    ) -> Result<Self, TwinBeamError> {
        let rho = build_density_matrix(params, n_max)?;
        let t_max = params.b_p() + params.b_s().max(params.b_i());
        let q = t_max / (1.0 + t_max);
        let capped = q.powi(n_max as i32 + 1) >= eps_trunc * eps_trunc;
        Ok(Self {
            params: *params,
            rho,
            capped,
        })
    }

    pub fn n_max(&self) -> usize {
        self.rho.n_max()
    }

    /// True when the cutoff could not reach the trace-norm tail target, so
    /// negativity results are lower bounds.
    pub fn capped(&self) -> bool {
        self.capped
    }

    pub fn rho(&self) -> &FockDensityMatrix {
        &self.rho
    }

    pub fn negativity_distribution(&self) -> Result<NegativityDistribution, TwinBeamError> {
        distribution_of(&self.rho)
    }

    pub fn negativity(&self) -> Result<f64, TwinBeamError> {
        Ok(self.negativity_distribution()?.total)
    }

    pub fn reduced_diagonal(&self, field: Field) -> Result<Vec<f64>, TwinBeamError> {
        reduced_diagonal_of(&self.rho, &self.params, field)
    }

    pub fn participation(&self, field: Field) -> Result<f64, TwinBeamError> {
        let p = self.reduced_diagonal(field)?;
        Ok(1.0 / p.iter().map(|x| x * x).sum::<f64>())
    }

    pub fn entropy(&self, field: Field) -> Result<f64, TwinBeamError> {
        Ok(shannon(&self.reduced_diagonal(field)?))
    }

    pub fn positivity_floor(&self) -> Result<f64, TwinBeamError> {
        positivity_check(&self.rho)
    }
}
