//! Floating-point cross-check of the exact spectra: a central-difference
//! discretization of `−d²/dx² + V` solved by Sturm bisection and inverse
//! iteration on the symmetric tridiagonal matrix.

use crate::error::{Error, Result};
use crate::exactpoly::rational::to_f64;
use crate::extension::{Extension, Kind};

/// Grid settings. `length: None` picks a default from the largest energy
/// being resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct GridParams {
    pub points: usize,
    pub length: Option<f64>,
    /// Constant added to the potential. Only useful as a sensitivity control.
    pub potential_shift: f64,
}

impl Default for GridParams {
    fn default() -> Self {
        Self { points: 4001, length: None, potential_shift: 0.0 }
    }
}

impl GridParams {
    /// Same domain with half the grid step.
    pub fn refined(&self, kind: Kind) -> Self {
        let points = match kind {
            Kind::Linear => 2 * self.points - 1,
            Kind::Radial => 2 * self.points,
        };
        Self { points, ..self.clone() }
    }
}

/// Uniform grid with Dirichlet walls one step beyond each end.
///
/// Linear: nodes `−L + i·h`, `h = 2L/(points−1)`. Radial: nodes `i·h`,
/// `i = 1..=points`, `h = L/points`, so the wall sits at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct GridProblem {
    pub kind: Kind,
    pub first: f64,
    pub step: f64,
    pub potential: Vec<f64>,
}

pub fn default_length(kind: Kind, e_max: f64) -> f64 {
    let e = e_max.max(0.0);
    match kind {
        Kind::Linear => f64::max(12.0, 3.0 * e.sqrt()),
        Kind::Radial => f64::max(25.0, 4.0 * (2.0 * e).sqrt()),
    }
}

impl GridProblem {
    pub fn new(ext: &Extension, params: &GridParams, e_max: f64) -> Result<Self> {
        if params.points < 3 {
            return Err(Error::parameter("a grid needs at least 3 points"));
        }
        let kind = ext.spec().kind;
        let len = params.length.unwrap_or_else(|| default_length(kind, e_max));
        if !(len.is_finite() && len > 0.0) {
            return Err(Error::parameter(format!("grid length must be positive, got {len}")));
        }
        let (first, step) = match kind {
            Kind::Linear => (-len, 2.0 * len / (params.points - 1) as f64),
            Kind::Radial => {
                let h = len / params.points as f64;
                (h, h)
            }
        };
        let pot = ext.potential().sampler();
        let potential: Vec<f64> = (0..params.points)
            .map(|i| pot(first + i as f64 * step) + params.potential_shift)
            .collect();
        if let Some(i) = potential.iter().position(|v| !v.is_finite()) {
            return Err(Error::consistency(format!(
                "potential is not finite at grid node x = {}",
                first + i as f64 * step
            )));
        }
        Ok(Self { kind, first, step, potential })
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.potential.len()).map(|i| self.first + i as f64 * self.step).collect()
    }

    fn diag(&self) -> Vec<f64> {
        let k = 2.0 / (self.step * self.step);
        self.potential.iter().map(|v| k + v).collect()
    }

    fn offdiag(&self) -> f64 {
        -1.0 / (self.step * self.step)
    }

    /// The `count` smallest eigenvalues, ascending.
    pub fn eigenvalues(&self, count: usize) -> Vec<f64> {
        let (d, e) = (self.diag(), self.offdiag());
        let n = d.len();
        let r = 2.0 * e.abs();
        let lo = d.iter().fold(f64::INFINITY, |a, &b| a.min(b)) - r;
        let hi = d.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) + r;
        (0..count.min(n)).map(|k| bisect(&d, e, k, lo, hi)).collect()
    }

    /// Eigenvector for `lambda`, normalized so `Σ ψ² h = 1` with a positive
    /// first significant component.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let (d, e) = (self.diag(), self.offdiag());
        let n = d.len();
        let shift = lambda - 1e-10 * lambda.abs().max(1.0);
        let mut v = vec![1.0; n];
        for _ in 0..3 {
            v = solve_shifted(&d, e, shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        normalize(&mut v, self.step);
        v
    }
}

/// Number of eigenvalues below `x` (Sturm count via LDLᵀ pivots).
fn count_below(d: &[f64], e: f64, x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, di) in d.iter().enumerate() {
        q = if i == 0 { di - x } else { di - x - e * e / q };
        if q == 0.0 {
            q = -f64::EPSILON * (di.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (0-based) by bisection.
fn bisect(d: &[f64], e: f64, k: usize, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(d, e, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `(T − σ) y = b` by Gaussian elimination with partial pivoting.
fn solve_shifted(d: &[f64], e: f64, sigma: f64, b: &[f64]) -> Vec<f64> {
    let n = d.len();
    // rows carry up to three nonzeros after pivoting: (main, first super, second super)
    let mut a: Vec<[f64; 3]> = (0..n).map(|i| [d[i] - sigma, if i + 1 < n { e } else { 0.0 }, 0.0]).collect();
    let mut sub: Vec<f64> = vec![e; n];
    let mut rhs = b.to_vec();
    for i in 0..n.saturating_sub(1) {
        // candidate pivot row i+1 has entries (sub, diag, super) in columns i, i+1, i+2
        if sub[i].abs() > a[i][0].abs() {
            let below = [sub[i], a[i + 1][0], a[i + 1][1]];
            sub[i] = a[i][0];
            let cur = a[i];
            a[i] = below;
            a[i + 1] = [cur[1], cur[2], 0.0];
            rhs.swap(i, i + 1);
        }
        let piv = if a[i][0] == 0.0 { f64::EPSILON } else { a[i][0] };
        let f = sub[i] / piv;
        a[i + 1][0] -= f * a[i][1];
        a[i + 1][1] -= f * a[i][2];
        rhs[i + 1] -= f * rhs[i];
    }
    let mut y = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = rhs[i];
        if i + 1 < n {
            s -= a[i][1] * y[i + 1];
        }
        if i + 2 < n {
            s -= a[i][2] * y[i + 2];
        }
        let piv = if a[i][0] == 0.0 { f64::EPSILON } else { a[i][0] };
        y[i] = s / piv;
    }
    y
}

fn normalize(v: &mut [f64], h: f64) {
    let norm = (v.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
    let peak = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let sign = v.iter().find(|x| x.abs() > 1e-6 * peak).map_or(1.0, |x| x.signum());
    v.iter_mut().for_each(|x| *x *= sign / norm);
}

/// The `count` lowest analytic levels as `(ν, E)`, ascending.
pub fn analytic_levels(ext: &Extension, count: usize) -> Vec<(i64, f64)> {
    let spec = ext.spec();
    let start = spec.m_k().map_or(0, |m| -(m as i64) - 1);
    (start..)
        .filter(|&nu| spec.in_spectrum(nu))
        .take(count)
        .map(|nu| (nu, to_f64(&spec.energy(nu))))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSpectrum {
    pub values: Vec<f64>,
    pub warnings: Vec<String>,
}

/// The `count` smallest eigenvalues of the discretized Hamiltonian.
pub fn lowest_eigenvalues(ext: &Extension, count: usize, params: &GridParams) -> Result<NumericSpectrum> {
    if count == 0 {
        return Err(Error::parameter("count must be at least 1"));
    }
    let e_max = analytic_levels(ext, count).last().map_or(1.0, |l| l.1);
    let grid = GridProblem::new(ext, params, e_max)?;
    let values = grid.eigenvalues(count);
    // leading error of the 3-point stencil is about h²⟨(V−E)²⟩/12
    let estimate = grid.step * grid.step * e_max.abs().max(1.0).powi(2) / 12.0;
    let warnings = values
        .windows(2)
        .filter(|w| w[1] - w[0] < estimate)
        .map(|w| format!("grid too coarse: levels {:.6} and {:.6} are closer than the error estimate {estimate:.2e}", w[0], w[1]))
        .collect();
    Ok(NumericSpectrum { values, warnings })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelCheck {
    pub nu: i64,
    pub exact: f64,
    pub numeric: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub levels: Vec<LevelCheck>,
    pub tolerance: f64,
    pub pass: bool,
    pub warnings: Vec<String>,
}

pub fn compare_spectrum(ext: &Extension, count: usize, tolerance: f64, params: &GridParams) -> Result<SpectrumReport> {
    let num = lowest_eigenvalues(ext, count, params)?;
    let levels: Vec<LevelCheck> = analytic_levels(ext, count)
        .into_iter()
        .zip(&num.values)
        .map(|((nu, exact), &numeric)| LevelCheck { nu, exact, numeric, residual: (numeric - exact).abs() })
        .collect();
    let pass = levels.len() == count && levels.iter().all(|l| l.residual < tolerance);
    Ok(SpectrumReport { levels, tolerance, pass, warnings: num.warnings })
}

/// `residual(h) / residual(h/2)` per level; about 4 for a second-order scheme.
pub fn convergence_ratios(ext: &Extension, count: usize, params: &GridParams) -> Result<Vec<f64>> {
    let coarse = compare_spectrum(ext, count, f64::INFINITY, params)?;
    let fine = compare_spectrum(ext, count, f64::INFINITY, &params.refined(ext.spec().kind))?;
    Ok(coarse.levels.iter().zip(&fine.levels).map(|(c, f)| c.residual / f.residual).collect())
}

/// Exact wavefunction on the grid nodes, L²-normalized with positive first lobe.
pub fn sample_wavefunction(ext: &Extension, nu: i64, params: &GridParams) -> Result<(Vec<f64>, Vec<f64>)> {
    let wf = ext.wavefunction(nu)?;
    let grid = GridProblem::new(ext, params, to_f64(&wf.energy))?;
    let xs = grid.nodes();
    let psi = wf.sampler();
    let mut ys: Vec<f64> = xs.iter().map(|&x| psi(x)).collect();
    normalize(&mut ys, grid.step);
    Ok((xs, ys))
}

/// Potential on the grid nodes.
pub fn sample_potential(ext: &Extension, params: &GridParams, e_max: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let grid = GridProblem::new(ext, params, e_max)?;
    Ok((grid.nodes(), grid.potential))
}

/// Max pointwise gap between the numeric and exact normalized ground states.
pub fn ground_state_deviation(ext: &Extension, params: &GridParams) -> Result<f64> {
    let (nu0, e0) = analytic_levels(ext, 1)[0];
    let grid = GridProblem::new(ext, params, e0)?;
    let lambda = grid.eigenvalues(1)[0];
    let numeric = grid.eigenvector(lambda);
    let (_, exact) = sample_wavefunction(ext, nu0, params)?;
    Ok(numeric.iter().zip(&exact).fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs())))
}

/// Interior sign changes of the exact wavefunction `ψ_ν`.
pub fn node_count(ext: &Extension, nu: i64) -> Result<usize> {
    let wf = ext.wavefunction(nu)?;
    let params = GridParams { points: 8001, ..GridParams::default() };
    let grid = GridProblem::new(ext, &params, to_f64(&wf.energy))?;
    let mut count = 0;
    let mut last = 0.0f64;
    let psi = wf.sampler();
    for x in grid.nodes() {
        let v = psi(x);
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    Ok(count)
}
