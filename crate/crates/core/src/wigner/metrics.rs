use super::{WignerError, WignerField};

/// Default half-width of the momentum band searched for fringes.
pub const DEFAULT_FRINGE_BAND: f64 = 4.0;

/// Samples below this fraction of the profile maximum are treated as zero
/// when counting sign changes.
const FRINGE_NOISE_FLOOR: f64 = 1e-10;

/// A sampled one-dimensional density.
#[derive(Debug, Clone, PartialEq)]
pub struct Marginal {
    pub coords: Vec<f64>,
    pub density: Vec<f64>,
    pub step: f64,
}

impl Marginal {
    pub fn integral(&self) -> f64 {
        crate::quadrature::trapezoid(&self.density, self.step)
    }
}

/// `P(x) = ∫ W dp`, trapezoid over each `x` row.
pub fn marginal_position(field: &WignerField) -> Marginal {
    let grid = field.grid();
    let density = (0..grid.n_x())
        .map(|i| {
            field
                .row(i)
                .iter()
                .enumerate()
                .map(|(k, w)| w * grid.p.weight(k))
                .sum()
        })
        .collect();
    Marginal {
        coords: grid.x.values().collect(),
        density,
        step: grid.dx(),
    }
}

/// `P̃(p) = ∫ W dx`, trapezoid over each `p` column.
pub fn marginal_momentum(field: &WignerField) -> Marginal {
    let grid = field.grid();
    let mut density = vec![0.0; grid.n_p()];
    for i in 0..grid.n_x() {
        let weight = grid.x.weight(i);
        for (acc, w) in density.iter_mut().zip(field.row(i)) {
            *acc += w * weight;
        }
    }
    Marginal {
        coords: grid.p.values().collect(),
        density,
        step: grid.dp(),
    }
}

/// Raw phase-space overlap `∫∫ W_a W_b dp dx`.
///
/// For pure states this equals `|⟨a|b⟩|²/(2πħ)`.
pub fn overlap_integral(a: &WignerField, b: &WignerField) -> Result<f64, WignerError> {
    if a.grid() != b.grid() {
        return Err(WignerError::GridMismatch);
    }
    let grid = a.grid();
    let mut total = 0.0;
    for i in 0..grid.n_x() {
        let row: f64 = a
            .row(i)
            .iter()
            .zip(b.row(i))
            .enumerate()
            .map(|(k, (wa, wb))| wa * wb * grid.p.weight(k))
            .sum();
        total += row * grid.x.weight(i);
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityReport {
    /// `∫∫ max(-W, 0) dx dp`.
    pub negative_volume: f64,
    pub min_value: f64,
    /// `(x, p)` of the most negative sample.
    pub min_location: (f64, f64),
}

pub fn negativity(field: &WignerField) -> NegativityReport {
    let grid = field.grid();
    let mut negative_volume = 0.0;
    let mut min_value = f64::INFINITY;
    let mut min_index = (0, 0);
    for i in 0..grid.n_x() {
        let mut row_volume = 0.0;
        for (k, &w) in field.row(i).iter().enumerate() {
            if w < 0.0 {
                row_volume -= w * grid.p.weight(k);
            }
            if w < min_value {
                min_value = w;
                min_index = (i, k);
            }
        }
        negative_volume += row_volume * grid.x.weight(i);
    }
    NegativityReport {
        negative_volume,
        min_value,
        min_location: (grid.x.value(min_index.0), grid.p.value(min_index.1)),
    }
}

/// Mean spacing of the zero crossings of `W(x0, p)` within `|p| <= p_band`.
///
/// The profile at `x0` is linearly interpolated between the two nearest
/// lattice columns, crossings between samples are located by linear
/// interpolation, and samples below a relative noise floor are skipped.
pub fn fringe_spacing(field: &WignerField, x0: f64, p_band: f64) -> Result<f64, WignerError> {
    let grid = field.grid();
    if !(x0 >= grid.x.min() && x0 <= grid.x.max()) {
        return Err(WignerError::OutOfRange { x0 });
    }
    let pos = (x0 - grid.x.min()) / grid.dx();
    let left = (pos.floor() as usize).min(grid.n_x() - 2);
    let frac = pos - left as f64;
    let (row_l, row_r) = (field.row(left), field.row(left + 1));

    let profile: Vec<(f64, f64)> = (0..grid.n_p())
        .map(|k| (grid.p.value(k), (1.0 - frac) * row_l[k] + frac * row_r[k]))
        .filter(|(p, _)| p.abs() <= p_band)
        .collect();
    let peak = profile.iter().fold(0.0f64, |m, (_, w)| m.max(w.abs()));
    let floor = FRINGE_NOISE_FLOOR * peak;

    let mut crossings = Vec::new();
    let mut previous: Option<(f64, f64)> = None;
    for &(p, w) in profile.iter().filter(|(_, w)| w.abs() > floor) {
        if let Some((p_prev, w_prev)) = previous {
            if w_prev.signum() != w.signum() {
                crossings.push(p_prev - w_prev * (p - p_prev) / (w - w_prev));
            }
        }
        previous = Some((p, w));
    }
    if crossings.len() < 3 {
        return Err(WignerError::NoFringes {
            sign_changes: crossings.len(),
        });
    }
    Ok((crossings[crossings.len() - 1] - crossings[0]) / (crossings.len() - 1) as f64)
}
