use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use super::{Method, PhaseSpaceGrid, UniformAxis, Wavefunction, WignerError, WignerField};
use crate::quadrature::trapezoid;
use crate::HBAR;

/// Largest tolerated loss of position probability before a grid is rejected.
pub const MAX_MASS_DEFICIT: f64 = 1e-3;

#[inline]
fn amplitude_in_support<S: Wavefunction + ?Sized>(state: &S, x: f64, t: f64) -> Complex64 {
    if x.abs() <= state.support() {
        state.amplitude(x, t)
    } else {
        Complex64::new(0.0, 0.0)
    }
}

#[inline]
fn correlation<S: Wavefunction + ?Sized>(state: &S, x: f64, y: f64, t: f64) -> Complex64 {
    amplitude_in_support(state, x + y, t).conj() * amplitude_in_support(state, x - y, t)
}

/// Trapezoid integral of `|Ψ(x,t)|²` over the nodes of `axis`.
pub fn position_mass<S: Wavefunction + ?Sized>(state: &S, axis: &UniformAxis, t: f64) -> f64 {
    let density: Vec<f64> = axis
        .values()
        .map(|x| amplitude_in_support(state, x, t).norm_sqr())
        .collect();
    trapezoid(&density, axis.step())
}

fn check_support<S: Wavefunction + ?Sized>(
    state: &S,
    x_axis: &UniformAxis,
    t: f64,
    y_halfwidth: f64,
) -> Result<(), WignerError> {
    if y_halfwidth.is_nan() || y_halfwidth < state.support() {
        return Err(WignerError::YRangeTooShort {
            y_halfwidth,
            support: state.support(),
        });
    }
    let captured = position_mass(state, x_axis, t);
    if captured < 1.0 - MAX_MASS_DEFICIT {
        return Err(WignerError::GridTooSmall { captured });
    }
    Ok(())
}

/// Wigner function by trapezoid quadrature in `y` on `[-Y, Y]` with `n_y`
/// intervals, evaluated at every node of `grid`.
///
/// The integrand at `-y` is the conjugate of the one at `y`, so only
/// `y >= 0` is visited and twice the real part accumulated.
pub fn wigner_direct<S: Wavefunction + ?Sized>(
    state: &S,
    grid: &PhaseSpaceGrid,
    t: f64,
    y_halfwidth: f64,
    n_y: usize,
) -> Result<WignerField, WignerError> {
    if n_y < 64 || !n_y.is_multiple_of(2) {
        return Err(WignerError::InvalidLattice(format!(
            "direct quadrature needs an even n_y >= 64, got {n_y}"
        )));
    }
    check_support(state, &grid.x, t, y_halfwidth)?;

    let half = n_y / 2;
    let dy = y_halfwidth / half as f64;
    let scale = dy / (PI * HBAR);
    let rows: Vec<Vec<f64>> = (0..grid.n_x())
        .into_par_iter()
        .map(|i| {
            let x = grid.x.value(i);
            let c: Vec<Complex64> = (0..=half)
                .map(|j| correlation(state, x, j as f64 * dy, t))
                .collect();
            (0..grid.n_p())
                .map(|k| {
                    let p = grid.p.value(k);
                    let mut acc = c[0].re;
                    for (j, cj) in c.iter().enumerate().skip(1) {
                        let weight = if j == half { 1.0 } else { 2.0 };
                        let (sin, cos) = (2.0 * p * j as f64 * dy / HBAR).sin_cos();
                        acc += weight * (cj.re * cos - cj.im * sin);
                    }
                    acc * scale
                })
                .collect()
        })
        .collect();
    WignerField::new(
        *grid,
        rows.concat(),
        t,
        Method::DirectQuadrature,
        state.label(),
    )
}

/// Conjugate momentum lattice of the FFT path: `p_k = k Δp`,
/// `k ∈ [-n_y/2, n_y/2)`, `Δp = πħ/(n_y Δy)`.
fn fft_momentum_axis(n_y: usize, dy: f64) -> Result<UniformAxis, WignerError> {
    let dp = PI * HBAR / (n_y as f64 * dy);
    UniformAxis::from_step(-((n_y / 2) as f64) * dp, dp, n_y)
}

fn fft_columns<S: Wavefunction + ?Sized>(
    state: &S,
    x_axis: &UniformAxis,
    t: f64,
    n_y: usize,
    y_halfwidth: f64,
) -> Result<(UniformAxis, Vec<Vec<Complex64>>), WignerError> {
    if n_y < 64 || !n_y.is_power_of_two() {
        return Err(WignerError::InvalidLattice(format!(
            "FFT path needs a power-of-two n_y >= 64, got {n_y}"
        )));
    }
    check_support(state, x_axis, t, y_halfwidth)?;

    let half = n_y / 2;
    let dy = y_halfwidth / half as f64;
    let p_axis = fft_momentum_axis(n_y, dy)?;
    let plan = FftPlanner::new().plan_fft_inverse(n_y);
    let scale = dy / (PI * HBAR);

    let columns = (0..x_axis.len())
        .into_par_iter()
        .map(|i| {
            let x = x_axis.value(i);
            // Slot j mod n_y holds y_j = j Δy for j in [-n_y/2, n_y/2).
            let mut buffer: Vec<Complex64> = (0..n_y)
                .map(|slot| {
                    let j = if slot < half {
                        slot as f64
                    } else {
                        slot as f64 - n_y as f64
                    };
                    correlation(state, x, j * dy, t)
                })
                .collect();
            plan.process(&mut buffer);
            // Reorder k = -n_y/2 .. n_y/2 - 1 ascending.
            (0..n_y)
                .map(|idx| buffer[(idx + half) % n_y] * scale)
                .collect()
        })
        .collect();
    Ok((p_axis, columns))
}

/// Wigner function on `x_axis` × the FFT momentum lattice.
///
/// `y_halfwidth` sets both the integration range and, through
/// `Δp = πħ/(2 y_halfwidth)`, the momentum resolution.
pub fn wigner_fft<S: Wavefunction + ?Sized>(
    state: &S,
    x_axis: &UniformAxis,
    t: f64,
    n_y: usize,
    y_halfwidth: f64,
) -> Result<WignerField, WignerError> {
    let (p_axis, columns) = fft_columns(state, x_axis, t, n_y, y_halfwidth)?;
    let values: Vec<f64> = columns
        .iter()
        .flat_map(|c| c.iter().map(|z| z.re))
        .collect();
    WignerField::new(
        PhaseSpaceGrid::from_axes(*x_axis, p_axis),
        values,
        t,
        Method::FourierPath,
        state.label(),
    )
}

/// Sup-norm of the imaginary part the FFT path discards.
pub fn wigner_imaginary_residual<S: Wavefunction + ?Sized>(
    state: &S,
    x_axis: &UniformAxis,
    t: f64,
    n_y: usize,
    y_halfwidth: f64,
) -> Result<f64, WignerError> {
    let (_, columns) = fft_columns(state, x_axis, t, n_y, y_halfwidth)?;
    Ok(columns
        .iter()
        .flatten()
        .fold(0.0, |m: f64, z| m.max(z.im.abs())))
}
