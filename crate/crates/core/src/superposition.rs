//! Exact two-level dynamics `Ψ(x,t) = sinθ e^{-iE₀t/ħ} ψ₀ + cosθ e^{-iE₁t/ħ} ψ₁`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::well::{Level, WellError, WellModel};
use crate::HBAR;

/// Beat period `T = 2πħ/ΔE`.
pub fn beat_period(delta_e: f64) -> Result<f64, WellError> {
    if delta_e > 0.0 && delta_e.is_finite() {
        Ok(2.0 * PI * HBAR / delta_e)
    } else {
        Err(WellError::DegenerateSplitting(delta_e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionState {
    model: WellModel,
    theta: f64,
}

impl SuperpositionState {
    /// `theta` weights the ground state by `sin θ` and the excited state by
    /// `cos θ`; it must lie in `[0, π/2]`.
    pub fn new(model: WellModel, theta: f64) -> Result<Self, WellError> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(WellError::ThetaOutOfRange(theta));
        }
        Ok(Self { model, theta })
    }

    /// The stationary state of one level.
    pub fn stationary(model: WellModel, level: Level) -> Self {
        let theta = match level {
            Level::Ground => FRAC_PI_2,
            Level::Excited => 0.0,
        };
        Self { model, theta }
    }

    pub fn model(&self) -> &WellModel {
        &self.model
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn energies(&self) -> (f64, f64) {
        (
            self.model.energy(Level::Ground),
            self.model.energy(Level::Excited),
        )
    }

    /// `(sin θ, cos θ)`.
    pub fn weights(&self) -> (f64, f64) {
        self.theta.sin_cos()
    }

    pub fn beat_period(&self) -> f64 {
        // ΔE > 0 is guaranteed by the well constructors.
        2.0 * PI * HBAR / self.model.delta_e()
    }

    pub fn psi_t(&self, x: f64, t: f64) -> Complex64 {
        let (e0, e1) = self.energies();
        let (w0, w1) = self.weights();
        let phase0 = Complex64::from_polar(1.0, -e0 * t / HBAR);
        let phase1 = Complex64::from_polar(1.0, -e1 * t / HBAR);
        phase0 * (w0 * self.model.psi0(x)) + phase1 * (w1 * self.model.psi1(x))
    }

    pub fn density(&self, x: f64, t: f64) -> f64 {
        self.psi_t(x, t).norm_sqr()
    }
}
