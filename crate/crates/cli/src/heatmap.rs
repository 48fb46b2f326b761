//! Binary PPM (`P6`) heatmaps with a blue-white-red diverging map.
//!
//! With `A = max |W|` and `s = clamp(v / A, -1, 1)`, the channel level is
//! `c = round(255 (1 - |s|))`; `s >= 0` maps to `(255, c, c)` and `s < 0` to
//! `(c, c, 255)`. Values with `|v| <= 1e-8` count as zero (white), and an
//! all-zero field is white everywhere. One pixel per lattice node, `x`
//! increasing to the right and `p` increasing upwards.

use std::path::Path;

use wigwell_core::WignerField;

use crate::{CliError, Result};

/// Magnitudes at or below this are drawn white.
pub const ZERO_CUTOFF: f64 = 1e-8;

pub fn color(v: f64, amplitude: f64) -> [u8; 3] {
    if v.abs() <= ZERO_CUTOFF || amplitude <= 0.0 {
        return [255, 255, 255];
    }
    let s = (v / amplitude).clamp(-1.0, 1.0);
    let c = (255.0 * (1.0 - s.abs())).round() as u8;
    if s >= 0.0 {
        [255, c, c]
    } else {
        [c, c, 255]
    }
}

pub fn encode(field: &WignerField) -> Vec<u8> {
    let grid = field.grid();
    let (width, height) = (grid.n_x(), grid.n_p());
    let amplitude = field.max_abs();
    let mut out = format!("P6\n{width} {height}\n255\n").into_bytes();
    out.reserve(3 * width * height);
    for k in (0..height).rev() {
        for i in 0..width {
            out.extend_from_slice(&color(field.value(i, k), amplitude));
        }
    }
    out
}

pub fn write(path: &Path, field: &WignerField) -> Result<()> {
    std::fs::write(path, encode(field)).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wigwell_core::{Method, PhaseSpaceGrid};

    fn field(values: Vec<f64>, n_x: usize, n_p: usize) -> WignerField {
        let grid = PhaseSpaceGrid::new(0.0, 1.0, n_x, 0.0, 1.0, n_p).unwrap();
        WignerField::new(grid, values, 0.0, Method::FourierPath, "").unwrap()
    }

    #[test]
    fn color_map_formula() {
        assert_eq!(color(0.0, 1.0), [255, 255, 255]);
        assert_eq!(color(1.0, 1.0), [255, 0, 0]);
        assert_eq!(color(-1.0, 1.0), [0, 0, 255]);
        assert_eq!(color(0.5, 1.0), [255, 128, 128]);
        assert_eq!(color(-0.25, 1.0), [191, 191, 255]);
        assert_eq!(color(-5e-9, 1.0), [255, 255, 255]);
        assert_eq!(color(2.0, 1.0), [255, 0, 0]);
    }

    #[test]
    fn zero_field_is_white() {
        let bytes = encode(&field(vec![0.0; 6], 2, 3));
        let header = b"P6\n2 3\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        assert!(bytes[header.len()..].iter().all(|&b| b == 255));
        assert_eq!(bytes.len(), header.len() + 18);
    }

    #[test]
    fn orientation() {
        // Row-major over x then p: W(x0,p0)=1, W(x0,p1)=0, W(x1,p0)=0, W(x1,p1)=-1.
        let bytes = encode(&field(vec![1.0, 0.0, 0.0, -1.0], 2, 2));
        let pixels = &bytes[b"P6\n2 2\n255\n".len()..];
        // Top row is the largest p: (x0, p1) white, (x1, p1) blue.
        assert_eq!(&pixels[0..6], &[255, 255, 255, 0, 0, 255]);
        // Bottom row is p0: (x0, p0) red, (x1, p0) white.
        assert_eq!(&pixels[6..12], &[255, 0, 0, 255, 255, 255]);
    }
}
