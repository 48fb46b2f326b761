//! Finite-difference benchmark of the exact spectra.
//!
//! `-d²/dx² + V` is discretized with the three-point stencil on `n` points of
//! `[-L, L]` with Dirichlet ends, leaving an `(n-2)`-dimensional symmetric
//! tridiagonal matrix. Its lowest eigenvalues come from Sturm bisection and
//! the eigenvectors from inverse iteration.

mod bench;
mod tridiag;

use thiserror::Error;

use crate::well::WellModel;
use crate::wigner::UniformAxis;

pub use bench::{benchmark, benchmark_on, convergence_order, SpectralBenchReport};
pub use tridiag::{bisect_eigenvalue, sturm_count};

/// Largest number of states [`lowest_eigenpairs`] will return.
pub const MAX_STATES: usize = 4;
/// Inverse-iteration cap per eigenvalue.
pub const MAX_ITERATIONS: usize = 200;
/// Inverse iteration stops once successive iterates agree to this fraction
/// of their largest component.
const VECTOR_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("invalid grid: n = {n} (need >= 16), L = {half_width} (need > 0)")]
    InvalidGrid { n: usize, half_width: f64 },
    #[error("non-finite potential at x = {x}")]
    NonFinitePotential { x: f64 },
    #[error("asked for {0} states; at most {MAX_STATES} are supported")]
    TooManyStates(usize),
    #[error("inverse iteration for state {index} did not converge in {iterations} steps")]
    ConvergenceFailure { index: usize, iterations: usize },
}

/// Three-point discretization of `-d²/dx² + V` on the interior nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedHamiltonian {
    grid: UniformAxis,
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl DiscretizedHamiltonian {
    /// Discretize an arbitrary potential on `n` points of `[-L, L]`.
    pub fn from_potential(
        n: usize,
        half_width: f64,
        potential: impl Fn(f64) -> f64,
    ) -> Result<Self, BenchError> {
        let invalid = BenchError::InvalidGrid { n, half_width };
        if n < 16 || !half_width.is_finite() || half_width <= 0.0 {
            return Err(invalid);
        }
        let grid = UniformAxis::symmetric(half_width, n).map_err(|_| invalid)?;
        let dx = grid.step();
        let kinetic = 1.0 / (dx * dx);
        let diagonal = (1..n - 1)
            .map(|i| {
                let x = grid.value(i);
                let v = potential(x);
                if v.is_finite() {
                    Ok(v + 2.0 * kinetic)
                } else {
                    Err(BenchError::NonFinitePotential { x })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            grid,
            diagonal,
            off_diagonal: vec![-kinetic; n - 3],
        })
    }

    /// Full lattice including the two Dirichlet end points.
    pub fn grid(&self) -> &UniformAxis {
        &self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.len()
    }

    pub fn half_width(&self) -> f64 {
        self.grid.max()
    }

    pub fn dx(&self) -> f64 {
        self.grid.step()
    }

    /// Diagonal over interior nodes `1..n-1`.
    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }
}

pub fn build_hamiltonian(
    model: &WellModel,
    n: usize,
    half_width: f64,
) -> Result<DiscretizedHamiltonian, BenchError> {
    DiscretizedHamiltonian::from_potential(n, half_width, |x| model.potential(x))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub energy: f64,
    /// Values on the full lattice (zero at both ends), `Σ v² dx = 1`, signed
    /// so the outermost lobe on the right is positive.
    pub vector: Vec<f64>,
}

/// The `k` lowest eigenpairs in ascending order.
pub fn lowest_eigenpairs(
    h: &DiscretizedHamiltonian,
    k: usize,
) -> Result<Vec<Eigenpair>, BenchError> {
    if k > MAX_STATES {
        return Err(BenchError::TooManyStates(k));
    }
    let (diag, off) = (h.diagonal(), h.off_diagonal());
    let m = diag.len();
    let mut found: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut pairs = Vec::with_capacity(k);
    for index in 0..k {
        let energy = bisect_eigenvalue(diag, off, index);
        let lu = tridiag::ShiftedLu::new(diag, off, energy);
        // Deterministic start with components along every eigenvector.
        let mut v: Vec<f64> = (0..m)
            .map(|i| 1.0 + (i as f64 * 0.618_033_988_749_894_9).fract())
            .collect();
        orthonormalize(&mut v, &found);
        let mut converged = false;
        for _ in 0..MAX_ITERATIONS {
            let previous = v.clone();
            lu.solve(&mut v);
            orthonormalize(&mut v, &found);
            let dot: f64 = v.iter().zip(&previous).map(|(a, b)| a * b).sum();
            let sign = dot.signum();
            let (change, peak) = v
                .iter()
                .zip(&previous)
                .fold((0.0f64, 0.0f64), |acc, (a, b)| {
                    (acc.0.max((a - sign * b).abs()), acc.1.max(a.abs()))
                });
            if change <= VECTOR_TOL * peak {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(BenchError::ConvergenceFailure {
                index,
                iterations: MAX_ITERATIONS,
            });
        }
        found.push(v.clone());
        pairs.push(Eigenpair {
            energy,
            vector: to_grid_function(&v, h.dx()),
        });
    }
    Ok(pairs)
}

/// Gram-Schmidt against `basis`, then unit Euclidean norm.
fn orthonormalize(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let dot: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
        for (x, y) in v.iter_mut().zip(b) {
            *x -= dot * y;
        }
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}

fn to_grid_function(interior: &[f64], dx: f64) -> Vec<f64> {
    let peak = interior.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let sign = interior
        .iter()
        .rev()
        .find(|x| x.abs() > 1e-3 * peak)
        .map_or(1.0, |x| x.signum());
    let scale = sign / dx.sqrt();
    let mut full = Vec::with_capacity(interior.len() + 2);
    full.push(0.0);
    full.extend(interior.iter().map(|x| x * scale));
    full.push(0.0);
    full
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::well::SymmetricWellParams;
    use std::f64::consts::PI;

    #[test]
    fn grid_validation() {
        assert_eq!(
            DiscretizedHamiltonian::from_potential(15, 1.0, |_| 0.0),
            Err(BenchError::InvalidGrid {
                n: 15,
                half_width: 1.0
            })
        );
        assert!(DiscretizedHamiltonian::from_potential(16, 0.0, |_| 0.0).is_err());
        assert!(DiscretizedHamiltonian::from_potential(16, 1.0, |x| 1.0 / x).is_ok());
        assert!(matches!(
            DiscretizedHamiltonian::from_potential(17, 1.0, |x| 1.0 / x),
            Err(BenchError::NonFinitePotential { .. })
        ));
    }

    #[test]
    fn assembly_rule() {
        let model = WellModel::new(SymmetricWellParams::new(-1.0, -0.9).unwrap()).unwrap();
        let h = build_hamiltonian(&model, 3001, 20.0).unwrap();
        assert_eq!(h.dx(), 40.0 / 3000.0);
        assert_eq!(h.diagonal().len(), 2999);
        assert_eq!(h.off_diagonal().len(), 2998);
        let centre = h.diagonal()[1499];
        assert!((centre - (-0.2 + 2.0 / h.dx().powi(2))).abs() < 1e-9);
        assert_eq!(h.off_diagonal()[0], -1.0 / h.dx().powi(2));
    }

    #[test]
    fn particle_in_a_box() {
        let l = 1.0;
        let h = DiscretizedHamiltonian::from_potential(401, l, |_| 0.0).unwrap();
        let pairs = lowest_eigenpairs(&h, 4).unwrap();
        for (k, pair) in pairs.iter().enumerate() {
            let exact = ((k + 1) as f64 * PI / (2.0 * l)).powi(2);
            assert!(
                (pair.energy - exact).abs() < 1e-3 * exact,
                "{k}: {}",
                pair.energy
            );
        }
        let dx = h.dx();
        for (i, a) in pairs.iter().enumerate() {
            for (j, b) in pairs.iter().enumerate() {
                let dot: f64 = a
                    .vector
                    .iter()
                    .zip(&b.vector)
                    .map(|(x, y)| x * y)
                    .sum::<f64>()
                    * dx;
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-10);
            }
        }
        // Ground state sin(π(x+L)/2L) is positive everywhere inside.
        assert!(pairs[0].vector[1..400].iter().all(|&v| v > 0.0));
    }

    #[test]
    fn too_many_states() {
        let h = DiscretizedHamiltonian::from_potential(32, 1.0, |_| 0.0).unwrap();
        assert_eq!(lowest_eigenpairs(&h, 5), Err(BenchError::TooManyStates(5)));
        assert!(lowest_eigenpairs(&h, 0).unwrap().is_empty());
    }
}
