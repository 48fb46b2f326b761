//! Shared fixtures for the criterion benchmarks.

use std::f64::consts::FRAC_PI_4;

use wigwell_core::{
    AsymmetricWellParams, SuperpositionState, SymmetricWellParams, UniformAxis, WellModel,
};

/// Near-degenerate symmetric well, `E0 = -1`, `E1 = -0.999`.
pub fn symmetric_model() -> WellModel {
    WellModel::new(SymmetricWellParams::new(-1.0, -0.999).unwrap()).unwrap()
}

/// Asymmetric well, `α = 0.9`, `β = 1`, `E0 = 0`, `ΔE = 1`.
pub fn asymmetric_model() -> WellModel {
    WellModel::new(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap()).unwrap()
}

pub fn tunneling_state() -> SuperpositionState {
    SuperpositionState::new(symmetric_model(), FRAC_PI_4).unwrap()
}

pub fn x_axis(state: &SuperpositionState, n_x: usize) -> UniformAxis {
    UniformAxis::symmetric(state.model().half_width(), n_x).unwrap()
}
