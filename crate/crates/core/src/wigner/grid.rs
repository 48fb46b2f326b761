use crate::quadrature::trapezoid_weight;

use super::WignerError;

/// Uniform one-dimensional lattice `start + i * step`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformAxis {
    start: f64,
    step: f64,
    n: usize,
}

impl UniformAxis {
    /// `n` points from `min` to `max` inclusive.
    pub fn from_range(min: f64, max: f64, n: usize) -> Result<Self, WignerError> {
        if n < 2 || !min.is_finite() || !max.is_finite() || max <= min {
            return Err(WignerError::InvalidAxis { min, max, n });
        }
        Ok(Self {
            start: min,
            step: (max - min) / (n - 1) as f64,
            n,
        })
    }

    pub fn from_step(start: f64, step: f64, n: usize) -> Result<Self, WignerError> {
        if n < 2 || !start.is_finite() || !step.is_finite() || step <= 0.0 {
            return Err(WignerError::InvalidAxis {
                min: start,
                max: start + step * n.saturating_sub(1) as f64,
                n,
            });
        }
        Ok(Self { start, step, n })
    }

    /// Symmetric axis `[-half, half]`.
    pub fn symmetric(half: f64, n: usize) -> Result<Self, WignerError> {
        Self::from_range(-half, half, n)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn min(&self) -> f64 {
        self.start
    }

    pub fn max(&self) -> f64 {
        self.value(self.n - 1)
    }

    #[inline]
    pub fn value(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.value(i))
    }

    /// Every `stride`-th node starting at `first`, `count` nodes in total.
    pub fn slice(&self, first: usize, stride: usize, count: usize) -> Result<Self, WignerError> {
        if stride == 0 || count < 2 || first + stride * (count - 1) >= self.n {
            return Err(WignerError::InvalidAxis {
                min: self.value(first.min(self.n - 1)),
                max: self.max(),
                n: count,
            });
        }
        Ok(Self {
            start: self.value(first),
            step: self.step * stride as f64,
            n: count,
        })
    }

    /// Index of the node closest to `v` (clamped to the axis).
    pub fn nearest(&self, v: f64) -> usize {
        let pos = ((v - self.start) / self.step).round();
        pos.clamp(0.0, (self.n - 1) as f64) as usize
    }

    pub(crate) fn weight(&self, i: usize) -> f64 {
        trapezoid_weight(i, self.n) * self.step
    }
}

/// Position/momentum lattice on which a Wigner function is sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSpaceGrid {
    pub x: UniformAxis,
    pub p: UniformAxis,
}

impl PhaseSpaceGrid {
    pub fn new(
        x_min: f64,
        x_max: f64,
        n_x: usize,
        p_min: f64,
        p_max: f64,
        n_p: usize,
    ) -> Result<Self, WignerError> {
        Ok(Self {
            x: UniformAxis::from_range(x_min, x_max, n_x)?,
            p: UniformAxis::from_range(p_min, p_max, n_p)?,
        })
    }

    pub fn from_axes(x: UniformAxis, p: UniformAxis) -> Self {
        Self { x, p }
    }

    pub fn dx(&self) -> f64 {
        self.x.step()
    }

    pub fn dp(&self) -> f64 {
        self.p.step()
    }

    pub fn n_x(&self) -> usize {
        self.x.len()
    }

    pub fn n_p(&self) -> usize {
        self.p.len()
    }
}

/// Which discretization produced a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DirectQuadrature,
    FourierPath,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectQuadrature => "direct",
            Method::FourierPath => "fft",
        }
    }
}

/// Real Wigner samples `W(x_i, p_k)`, stored row-major over `x` then `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField {
    grid: PhaseSpaceGrid,
    values: Vec<f64>,
    time: f64,
    method: Method,
    label: String,
}

impl WignerField {
    pub fn new(
        grid: PhaseSpaceGrid,
        values: Vec<f64>,
        time: f64,
        method: Method,
        label: impl Into<String>,
    ) -> Result<Self, WignerError> {
        if values.len() != grid.n_x() * grid.n_p() {
            return Err(WignerError::ShapeMismatch {
                expected: grid.n_x() * grid.n_p(),
                got: values.len(),
            });
        }
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(WignerError::NonFiniteSample {
                x: grid.x.value(bad / grid.n_p()),
                p: grid.p.value(bad % grid.n_p()),
            });
        }
        Ok(Self {
            grid,
            values,
            time,
            method,
            label: label.into(),
        })
    }

    pub fn grid(&self) -> &PhaseSpaceGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn value(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.grid.n_p() + k]
    }

    /// `W(x_i, ·)`.
    pub fn row(&self, i: usize) -> &[f64] {
        let n_p = self.grid.n_p();
        &self.values[i * n_p..(i + 1) * n_p]
    }

    /// Trapezoid integral over both axes.
    pub fn total_mass(&self) -> f64 {
        let mut total = 0.0;
        for i in 0..self.grid.n_x() {
            let row: f64 = self
                .row(i)
                .iter()
                .enumerate()
                .map(|(k, w)| w * self.grid.p.weight(k))
                .sum();
            total += row * self.grid.x.weight(i);
        }
        total
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Restrict to momenta `|p| <= p_max`.
    pub fn crop_momentum(&self, p_max: f64) -> Result<Self, WignerError> {
        let keep: Vec<usize> = (0..self.grid.n_p())
            .filter(|&k| self.grid.p.value(k).abs() <= p_max)
            .collect();
        let (first, count) = match (keep.first(), keep.len()) {
            (Some(&first), count) if count >= 2 => (first, count),
            _ => {
                return Err(WignerError::InvalidAxis {
                    min: -p_max,
                    max: p_max,
                    n: keep.len(),
                })
            }
        };
        let p = self.grid.p.slice(first, 1, count)?;
        let mut values = Vec::with_capacity(self.grid.n_x() * count);
        for i in 0..self.grid.n_x() {
            values.extend_from_slice(&self.row(i)[first..first + count]);
        }
        Ok(Self {
            grid: PhaseSpaceGrid::from_axes(self.grid.x, p),
            values,
            time: self.time,
            method: self.method,
            label: self.label.clone(),
        })
    }
}
