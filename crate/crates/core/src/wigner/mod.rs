//! Wigner quasi-probability distribution
//!
//! ```text
//! W(x,p;t) = 1/(πħ) ∫ Ψ*(x+y,t) Ψ(x-y,t) e^{2ipy/ħ} dy
//! ```
//!
//! computed either by trapezoid quadrature at arbitrary momenta
//! ([`wigner_direct`]) or column-by-column with an FFT on the conjugate
//! lattice `Δp = πħ/(n_y Δy)` ([`wigner_fft`]). Both accumulate only the real
//! part. Columns are independent and computed in parallel; each column's
//! arithmetic is fixed, so results are identical for any thread count.

mod grid;
mod metrics;
mod transform;

use num_complex::Complex64;
use thiserror::Error;

use crate::superposition::SuperpositionState;

pub use grid::{Method, PhaseSpaceGrid, UniformAxis, WignerField};
pub use metrics::{
    fringe_spacing, marginal_momentum, marginal_position, negativity, overlap_integral, Marginal,
    NegativityReport, DEFAULT_FRINGE_BAND,
};
pub use transform::{
    position_mass, wigner_direct, wigner_fft, wigner_imaginary_residual, MAX_MASS_DEFICIT,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WignerError {
    #[error("invalid axis: [{min}, {max}] with {n} points")]
    InvalidAxis { min: f64, max: f64, n: usize },
    #[error("invalid y lattice: {0}")]
    InvalidLattice(String),
    #[error("y half-width {y_halfwidth} is shorter than the state support {support}")]
    YRangeTooShort { y_halfwidth: f64, support: f64 },
    #[error("grid captures only {captured} of the probability mass")]
    GridTooSmall { captured: f64 },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("expected {expected} samples, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("non-finite Wigner sample at x = {x}, p = {p}")]
    NonFiniteSample { x: f64, p: f64 },
    #[error("x0 = {x0} lies outside the field's position range")]
    OutOfRange { x0: f64 },
    #[error("only {sign_changes} sign changes in the momentum profile; need at least 3")]
    NoFringes { sign_changes: usize },
}

/// A pure state that can be fed to the Wigner transform.
pub trait Wavefunction: Sync {
    fn amplitude(&self, x: f64, t: f64) -> Complex64;

    /// Half-width `L` of the numerical support. Amplitudes at `|x| > L` are
    /// taken to be exactly zero by the transforms.
    fn support(&self) -> f64;

    fn label(&self) -> String {
        String::new()
    }
}

impl Wavefunction for SuperpositionState {
    fn amplitude(&self, x: f64, t: f64) -> Complex64 {
        self.psi_t(x, t)
    }

    fn support(&self) -> f64 {
        self.model().half_width()
    }

    fn label(&self) -> String {
        format!(
            "{} theta={:?}",
            self.model().params().describe(),
            self.theta()
        )
    }
}

impl<W: Wavefunction + ?Sized> Wavefunction for &W {
    fn amplitude(&self, x: f64, t: f64) -> Complex64 {
        (**self).amplitude(x, t)
    }

    fn support(&self) -> f64 {
        (**self).support()
    }

    fn label(&self) -> String {
        (**self).label()
    }
}

/// Unit-frequency oscillator ground state displaced to `(center, momentum)`:
/// `ψ(x) = π^{-1/4} exp(-(x-x₀)²/2 + i p₀ x)`, whose Wigner function is
/// `exp(-(x-x₀)² - (p-p₀)²)/π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    pub center: f64,
    pub momentum: f64,
    pub support: f64,
}

impl GaussianPacket {
    pub fn ground(support: f64) -> Self {
        Self {
            center: 0.0,
            momentum: 0.0,
            support,
        }
    }

    pub fn wigner(&self, x: f64, p: f64) -> f64 {
        (-(x - self.center).powi(2) - (p - self.momentum).powi(2)).exp() / std::f64::consts::PI
    }
}

impl Wavefunction for GaussianPacket {
    fn amplitude(&self, x: f64, _t: f64) -> Complex64 {
        let envelope = std::f64::consts::PI.powf(-0.25) * (-0.5 * (x - self.center).powi(2)).exp();
        Complex64::from_polar(envelope, self.momentum * x)
    }

    fn support(&self) -> f64 {
        self.support
    }

    fn label(&self) -> String {
        format!("gaussian x0={:?} p0={:?}", self.center, self.momentum)
    }
}
