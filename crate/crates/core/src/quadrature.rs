//! Trapezoid-family quadrature on uniform lattices.

/// Composite trapezoid rule for samples on a uniform lattice with spacing `step`.
///
/// Summation runs in ascending index order so results do not depend on how
/// callers schedule work.
pub fn trapezoid(values: &[f64], step: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => {
            let mut acc = 0.5 * (first + last);
            for v in inner {
                acc += v;
            }
            acc * step
        }
    }
}

/// Trapezoid weight of lattice node `i` out of `n`, in units of the spacing.
#[inline]
pub fn trapezoid_weight(i: usize, n: usize) -> f64 {
    if i == 0 || i + 1 == n {
        0.5
    } else {
        1.0
    }
}

/// Romberg integration: trapezoid sums on successively halved lattices,
/// refined by Richardson extrapolation.
///
/// Starts from `2^6` intervals so functions that happen to vanish on a very
/// coarse lattice (odd states at the origin and domain ends) cannot fake
/// convergence. Returns `None` if neither tolerance is met by `2^22`
/// intervals.
pub fn romberg<F>(f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    const MIN_LEVEL: u32 = 6;
    const MAX_LEVEL: u32 = 22;

    let width = b - a;
    let mut intervals: usize = 1 << MIN_LEVEL;
    let mut h = width / intervals as f64;
    let mut sum: f64 = (1..intervals).map(|i| f(a + i as f64 * h)).sum();
    sum += 0.5 * (f(a) + f(b));

    let mut previous_row = vec![sum * h];
    for _ in MIN_LEVEL..MAX_LEVEL {
        // Add the midpoints of the current lattice.
        let mid: f64 = (0..intervals).map(|i| f(a + (i as f64 + 0.5) * h)).sum();
        sum += mid;
        intervals *= 2;
        h = width / intervals as f64;

        let mut row = Vec::with_capacity(previous_row.len() + 1);
        row.push(sum * h);
        let mut factor = 1.0;
        for (j, prev) in previous_row.iter().enumerate() {
            factor *= 4.0;
            let refined = row[j] + (row[j] - prev) / (factor - 1.0);
            row.push(refined);
        }
        let best = *row.last().unwrap();
        let prior = *previous_row.last().unwrap();
        let change = (best - prior).abs();
        if change <= rel_tol * best.abs() || change <= abs_tol {
            return Some(best);
        }
        previous_row = row;
    }
    None
}
