use crate::well::{Level, WellModel, WellParams};

use super::{build_hamiltonian, lowest_eigenpairs, BenchError};

/// Numerical against exact spectrum for the two lowest states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBenchReport {
    pub params: WellParams,
    pub n: usize,
    pub half_width: f64,
    pub dx: f64,
    pub numerical: [f64; 2],
    pub exact: [f64; 2],
    pub abs_errors: [f64; 2],
    /// `max_i |v_i - s ψ(x_i)|` with `s = ±1` chosen by the sign of `⟨v, ψ⟩`.
    pub eigenfunction_sup_errors: [f64; 2],
}

impl SpectralBenchReport {
    pub fn numerical_splitting(&self) -> f64 {
        self.numerical[1] - self.numerical[0]
    }

    pub fn exact_splitting(&self) -> f64 {
        self.exact[1] - self.exact[0]
    }
}

/// Benchmark on the model's own domain `[-L, L]`.
pub fn benchmark(model: &WellModel, n: usize) -> Result<SpectralBenchReport, BenchError> {
    benchmark_on(model, n, model.half_width())
}

pub fn benchmark_on(
    model: &WellModel,
    n: usize,
    half_width: f64,
) -> Result<SpectralBenchReport, BenchError> {
    let h = build_hamiltonian(model, n, half_width)?;
    let pairs = lowest_eigenpairs(&h, 2)?;
    let dx = h.dx();
    let mut numerical = [0.0; 2];
    let mut exact = [0.0; 2];
    let mut abs_errors = [0.0; 2];
    let mut sup_errors = [0.0; 2];
    for level in Level::BOTH {
        let i = level.index();
        let pair = &pairs[i];
        let reference: Vec<f64> = h.grid().values().map(|x| model.psi(level, x)).collect();
        let dot: f64 = pair.vector.iter().zip(&reference).map(|(a, b)| a * b).sum();
        let sign = if dot < 0.0 { -1.0 } else { 1.0 };
        numerical[i] = pair.energy;
        exact[i] = model.energy(level);
        abs_errors[i] = (pair.energy - exact[i]).abs();
        sup_errors[i] = pair
            .vector
            .iter()
            .zip(&reference)
            .fold(0.0f64, |m, (a, b)| m.max((a - sign * b).abs()));
    }
    Ok(SpectralBenchReport {
        params: *model.params(),
        n,
        half_width,
        dx,
        numerical,
        exact,
        abs_errors,
        eigenfunction_sup_errors: sup_errors,
    })
}

/// Observed order `log₂(err_coarse / err_fine)` for a halved step.
pub fn convergence_order(err_coarse: f64, err_fine: f64) -> f64 {
    (err_coarse / err_fine).log2()
}
