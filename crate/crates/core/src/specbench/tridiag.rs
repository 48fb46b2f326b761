//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection and
//! eigenvectors by inverse iteration.

/// Number of eigenvalues strictly below `lambda`.
///
/// `off` holds the sub-diagonal, `off.len() == diag.len() - 1`.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        let coupling = if i == 0 {
            0.0
        } else {
            off[i - 1] * off[i - 1] / q
        };
        q = d - lambda - coupling;
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + lambda.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, &d) in diag.iter().enumerate() {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = off.get(i).map_or(0.0, |e| e.abs());
        lo = lo.min(d - left - right);
        hi = hi.max(d + left + right);
    }
    (lo, hi)
}

/// The `index`-th smallest eigenvalue (0-based), bisected to roundoff.
pub fn bisect_eigenvalue(diag: &[f64], off: &[f64], index: usize) -> f64 {
    let (mut lo, mut hi) = gershgorin(diag, off);
    let pad = f64::EPSILON * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE;
    lo -= pad;
    hi += pad;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if sturm_count(diag, off, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// `(T - shift) x = rhs` by Gaussian elimination with partial pivoting.
///
/// Zero pivots are replaced by a tiny multiple of the matrix scale so that a
/// shift at an exact eigenvalue still produces a (huge) finite solution.
pub struct ShiftedLu {
    // Row i of U holds u0[i] on the diagonal, u1[i], u2[i] to the right.
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    mult: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    pub fn new(diag: &[f64], off: &[f64], shift: f64) -> Self {
        let n = diag.len();
        let scale = diag.iter().chain(off).fold(0.0f64, |m, v| m.max(v.abs()));
        let tiny = f64::EPSILON * scale.max(f64::MIN_POSITIVE);
        let mut u0 = vec![0.0; n];
        let mut u1 = vec![0.0; n];
        let mut u2 = vec![0.0; n];
        let mut mult = vec![0.0; n];
        let mut swapped = vec![false; n];

        // Row still to be eliminated, (a, b) over columns i, i+1.
        let mut a = diag[0] - shift;
        let mut b = off.first().copied().unwrap_or(0.0);
        for i in 0..n {
            if i + 1 == n {
                u0[i] = if a == 0.0 { tiny } else { a };
                break;
            }
            // Next row over columns i, i+1, i+2.
            let (na, nb, nc) = (
                off[i],
                diag[i + 1] - shift,
                off.get(i + 1).copied().unwrap_or(0.0),
            );
            let c = 0.0;
            let ((pa, pb, pc), (ra, rb, rc)) = if na.abs() > a.abs() {
                swapped[i] = true;
                ((na, nb, nc), (a, b, c))
            } else {
                ((a, b, c), (na, nb, nc))
            };
            let pa = if pa == 0.0 { tiny } else { pa };
            let m = ra / pa;
            u0[i] = pa;
            u1[i] = pb;
            u2[i] = pc;
            mult[i] = m;
            a = rb - m * pb;
            b = rc - m * pc;
        }
        Self {
            u0,
            u1,
            u2,
            mult,
            swapped,
        }
    }

    pub fn solve(&self, rhs: &mut [f64]) {
        let n = rhs.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                rhs.swap(i, i + 1);
            }
            rhs[i + 1] -= self.mult[i] * rhs[i];
        }
        for i in (0..n).rev() {
            let mut v = rhs[i];
            if i + 1 < n {
                v -= self.u1[i] * rhs[i + 1];
            }
            if i + 2 < n {
                v -= self.u2[i] * rhs[i + 2];
            }
            rhs[i] = v / self.u0[i];
        }
    }
}
