//! Closed-form symmetric and asymmetric double wells.
//!
//! Both families are built from a multiplier `φ` with `ψ₁ = φ ψ₀`. The
//! ground state follows from `χ = -ψ₀'/ψ₀` and the potential is
//! `V = χ² - χ' + E₀`.
//!
//! Symmetric family (`E₀ < E₁ < 0`, `a = √-E₀`, `b = √-E₁`):
//!
//! ```text
//! φ(x)  = sinh(ax) / cosh(bx)
//! ψ₀(x) ∝ cosh(bx) / (a cosh(ax) cosh(bx) - b sinh(ax) sinh(bx))
//! ψ₁(x) ∝ sinh(ax) / (a cosh(ax) cosh(bx) - b sinh(ax) sinh(bx))
//! ```
//!
//! The exponential forms are evaluated in terms of `e^{-2a|x|}` and
//! `e^{-2b|x|}` only, so nothing overflows for any finite `x`.
//!
//! Asymmetric family (`φ = α + tanh(βx)`, `|α| < 1`, `β > 0`, `ΔE > 0`):
//!
//! ```text
//! ψ₀(x) ∝ cosh(βx) exp[-ΔE/(4β²) (cosh²(βx) + αβx + (α/2) sinh(2βx))]
//! ψ₁(x) ∝ (α cosh(βx) + sinh(βx)) exp[...same...]
//! ```

use std::f64::consts::LN_2;

use thiserror::Error;

use crate::quadrature::romberg;

/// Default relative tail threshold used to size the computational domain.
pub const DEFAULT_TAIL_REL: f64 = 1e-10;

const HALFWIDTH_START: f64 = 4.0;
const HALFWIDTH_LIMIT: f64 = 1e4;
const ENVELOPE_SAMPLES: usize = 4001;
const NORM_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WellError {
    #[error("parameter `{0}` is not finite")]
    NonFiniteParameter(&'static str),
    #[error("ground energy E0 = {e0} must lie strictly below E1 = {e1}")]
    EnergyOrder { e0: f64, e1: f64 },
    #[error("symmetric well needs a bound excited state (E1 < 0), got E1 = {0}")]
    UnboundExcited(f64),
    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),
    #[error("energy splitting must be positive, got {0}")]
    NonPositiveSplitting(f64),
    #[error("asymmetry alpha must satisfy |alpha| < 1, got {0}")]
    AsymmetryOutOfRange(f64),
    #[error("weighting angle theta = {0} is outside [0, pi/2]")]
    ThetaOutOfRange(f64),
    #[error("chi is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error("tail threshold must lie in (0, 1), got {0}")]
    InvalidTail(f64),
    #[error("states have not decayed below the tail threshold by |x| = {limit}")]
    NoDecay { limit: f64 },
    #[error("degenerate splitting {0}: beat period undefined")]
    DegenerateSplitting(f64),
    #[error("normalization quadrature did not converge")]
    Quadrature,
}

fn finite(value: f64, name: &'static str) -> Result<f64, WellError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(WellError::NonFiniteParameter(name))
    }
}

/// Symmetric well fixed by its two lowest energies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricWellParams {
    e0: f64,
    e1: f64,
}

impl SymmetricWellParams {
    pub fn new(e0: f64, e1: f64) -> Result<Self, WellError> {
        let e0 = finite(e0, "E0")?;
        let e1 = finite(e1, "E1")?;
        if e1 >= 0.0 {
            return Err(WellError::UnboundExcited(e1));
        }
        if e0 >= e1 {
            return Err(WellError::EnergyOrder { e0, e1 });
        }
        Ok(Self { e0, e1 })
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    pub fn e1(&self) -> f64 {
        self.e1
    }

    /// Ground-state decay constant `√-E₀`.
    pub fn a(&self) -> f64 {
        (-self.e0).sqrt()
    }

    /// Excited-state decay constant `√-E₁`.
    pub fn b(&self) -> f64 {
        (-self.e1).sqrt()
    }

    pub fn delta_e(&self) -> f64 {
        self.e1 - self.e0
    }
}

/// Asymmetric well `φ = α + tanh(βx)`, parameterized by `E₀` and the splitting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymmetricWellParams {
    alpha: f64,
    beta: f64,
    e0: f64,
    delta_e: f64,
}

impl AsymmetricWellParams {
    pub fn new(alpha: f64, beta: f64, e0: f64, delta_e: f64) -> Result<Self, WellError> {
        let alpha = finite(alpha, "alpha")?;
        let beta = finite(beta, "beta")?;
        let e0 = finite(e0, "E0")?;
        let delta_e = finite(delta_e, "deltaE")?;
        if beta <= 0.0 {
            return Err(WellError::NonPositiveBeta(beta));
        }
        if delta_e <= 0.0 {
            return Err(WellError::NonPositiveSplitting(delta_e));
        }
        if alpha.abs() >= 1.0 {
            return Err(WellError::AsymmetryOutOfRange(alpha));
        }
        Ok(Self {
            alpha,
            beta,
            e0,
            delta_e,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    pub fn delta_e(&self) -> f64 {
        self.delta_e
    }

    pub fn e1(&self) -> f64 {
        self.e0 + self.delta_e
    }

    /// `ΔE/(4β²)`, the prefactor of the ground-state exponent.
    fn decay(&self) -> f64 {
        self.delta_e / (4.0 * self.beta * self.beta)
    }
}

/// Which of the two exactly known eigenstates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Ground,
    Excited,
}

impl Level {
    pub const BOTH: [Level; 2] = [Level::Ground, Level::Excited];

    pub fn index(self) -> usize {
        match self {
            Level::Ground => 0,
            Level::Excited => 1,
        }
    }
}

/// Parameters of either well family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WellParams {
    Symmetric(SymmetricWellParams),
    Asymmetric(AsymmetricWellParams),
}

impl From<SymmetricWellParams> for WellParams {
    fn from(p: SymmetricWellParams) -> Self {
        WellParams::Symmetric(p)
    }
}

impl From<AsymmetricWellParams> for WellParams {
    fn from(p: AsymmetricWellParams) -> Self {
        WellParams::Asymmetric(p)
    }
}

/// `ln cosh(u)` without overflow.
fn ln_cosh(u: f64) -> f64 {
    let v = u.abs();
    v + (-2.0 * v).exp().ln_1p() - LN_2
}

impl WellParams {
    pub fn e0(&self) -> f64 {
        match self {
            WellParams::Symmetric(p) => p.e0(),
            WellParams::Asymmetric(p) => p.e0(),
        }
    }

    pub fn e1(&self) -> f64 {
        match self {
            WellParams::Symmetric(p) => p.e1(),
            WellParams::Asymmetric(p) => p.e1(),
        }
    }

    pub fn delta_e(&self) -> f64 {
        match self {
            WellParams::Symmetric(p) => p.delta_e(),
            WellParams::Asymmetric(p) => p.delta_e(),
        }
    }

    pub fn energy(&self, level: Level) -> f64 {
        match level {
            Level::Ground => self.e0(),
            Level::Excited => self.e1(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, WellParams::Symmetric(_))
    }

    /// Multiplier function `φ` relating the states, `ψ₁ ∝ φ ψ₀`.
    pub fn phi(&self, x: f64) -> f64 {
        match self {
            WellParams::Symmetric(p) => {
                let (a, b) = (p.a(), p.b());
                let u = x.abs();
                // sinh(au)/cosh(bu) = e^{(a-b)u} (1 - e^{-2au}) / (1 + e^{-2bu})
                let value =
                    ((a - b) * u).exp() * -(-2.0 * a * u).exp_m1() / (1.0 + (-2.0 * b * u).exp());
                value.copysign(x)
            }
            WellParams::Asymmetric(p) => p.alpha + (p.beta * x).tanh(),
        }
    }

    /// `χ = -ψ₀'/ψ₀`.
    pub fn chi(&self, x: f64) -> Result<f64, WellError> {
        let value = match self {
            WellParams::Symmetric(p) => {
                let (a, b) = (p.a(), p.b());
                let ta = (a * x).tanh();
                let tb = (b * x).tanh();
                let sech_b = 1.0 / (b * x).cosh();
                let denominator = a - b * ta * tb;
                if denominator.abs() <= f64::EPSILON * a {
                    return Err(WellError::NonFinite { x });
                }
                (ta * (a * a - b * b * sech_b * sech_b) - a * b * tb) / denominator
            }
            WellParams::Asymmetric(p) => {
                let u = p.beta * x;
                let cosh = u.cosh();
                p.delta_e / (4.0 * p.beta) * ((2.0 * u).sinh() + 2.0 * p.alpha * cosh * cosh)
                    - p.beta * u.tanh()
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(WellError::NonFinite { x })
        }
    }

    /// Double-well potential `V(x)`.
    pub fn potential(&self, x: f64) -> f64 {
        match self {
            WellParams::Symmetric(p) => {
                let (a, b) = (p.a(), p.b());
                let ta = (a * x).tanh();
                let tb = (b * x).tanh();
                let sech_a = 1.0 / (a * x).cosh();
                let sech_b = 1.0 / (b * x).cosh();
                let denominator = a - b * ta * tb;
                2.0 * (b * b - a * a)
                    * (a * a * sech_a * sech_a + b * b * ta * ta * sech_b * sech_b)
                    / (denominator * denominator)
            }
            WellParams::Asymmetric(p) => {
                let (alpha, beta, de) = (p.alpha, p.beta, p.delta_e);
                let u = beta * x;
                let sinh2 = (2.0 * u).sinh();
                let cosh2 = u.cosh().powi(2);
                let k = de * de / (4.0 * beta * beta);
                beta * beta - de * alpha * sinh2
                    + cosh2 * (k * alpha * sinh2 - k - 2.0 * de)
                    + k * (alpha * alpha + 1.0) * cosh2 * cosh2
                    + 1.5 * de
                    + p.e0
            }
        }
    }

    /// Unnormalized eigenstate shape. Ground state is positive; the excited
    /// state has positive slope at its node.
    pub fn shape(&self, level: Level, x: f64) -> f64 {
        match self {
            WellParams::Symmetric(p) => {
                let (a, b) = (p.a(), p.b());
                let u = x.abs();
                let qa = (-2.0 * a * u).exp();
                let qb = (-2.0 * b * u).exp();
                let denominator = a * (1.0 + qa) * (1.0 + qb) - b * (1.0 - qa) * (1.0 - qb);
                match level {
                    Level::Ground => 2.0 * (-a * u).exp() * (1.0 + qb) / denominator,
                    Level::Excited => {
                        let one_minus_qa = -(-2.0 * a * u).exp_m1();
                        (2.0 * (-b * u).exp() * one_minus_qa / denominator).copysign(x)
                    }
                }
            }
            WellParams::Asymmetric(p) => {
                let u = p.beta * x;
                // cosh²u + (α/2) sinh 2u written with positive exponentials only.
                let mixed =
                    0.5 * ((1.0 + p.alpha) * (2.0 * u).exp() + (1.0 - p.alpha) * (-2.0 * u).exp());
                let exponent = 0.5 * (1.0 + mixed) + p.alpha * u;
                let ground = (ln_cosh(u) - p.decay() * exponent).exp();
                match level {
                    Level::Ground => ground,
                    Level::Excited => (p.alpha + u.tanh()) * ground,
                }
            }
        }
    }

    /// Position of the excited-state node.
    pub fn node(&self) -> f64 {
        match self {
            WellParams::Symmetric(_) => 0.0,
            WellParams::Asymmetric(p) => -p.alpha.atanh() / p.beta,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            WellParams::Symmetric(p) => format!("symmetric E0={:?} E1={:?}", p.e0, p.e1),
            WellParams::Asymmetric(p) => format!(
                "asymmetric alpha={:?} beta={:?} E0={:?} deltaE={:?}",
                p.alpha, p.beta, p.e0, p.delta_e
            ),
        }
    }
}

/// Peak amplitudes of both shapes on `[-half, half]`.
struct Envelope {
    peaks: [f64; 2],
    outermost: f64,
}

impl Envelope {
    fn scan(params: &WellParams, half: f64) -> Self {
        let mut peaks = [0.0f64; 2];
        let mut argmax = [0.0f64; 2];
        let step = 2.0 * half / (ENVELOPE_SAMPLES - 1) as f64;
        for i in 0..ENVELOPE_SAMPLES {
            let x = -half + i as f64 * step;
            for level in Level::BOTH {
                let v = params.shape(level, x).abs();
                if v > peaks[level.index()] {
                    peaks[level.index()] = v;
                    argmax[level.index()] = x;
                }
            }
        }
        let outermost = argmax[0].abs().max(argmax[1].abs());
        Self { peaks, outermost }
    }

    fn tails_below(&self, params: &WellParams, half: f64, tail_rel: f64) -> bool {
        Level::BOTH.iter().all(|&level| {
            let limit = tail_rel * self.peaks[level.index()];
            params.shape(level, half).abs() < limit && params.shape(level, -half).abs() < limit
        })
    }
}

/// Half-width `L` beyond which both states have decayed below `tail_rel`
/// times their peak.
///
/// Doubles `L` from 4 until the tails at `±L` pass, then bisects down to 1%
/// precision. The bracket never goes inside the outermost peak, where the
/// excited state's node could satisfy the test spuriously.
pub fn domain_halfwidth(params: &WellParams, tail_rel: f64) -> Result<f64, WellError> {
    if !(tail_rel > 0.0 && tail_rel < 1.0) {
        return Err(WellError::InvalidTail(tail_rel));
    }
    let mut lower = 0.0;
    let mut upper = HALFWIDTH_START;
    let envelope = loop {
        let envelope = Envelope::scan(params, upper);
        if envelope.tails_below(params, upper, tail_rel) {
            break envelope;
        }
        lower = upper;
        upper *= 2.0;
        if upper > HALFWIDTH_LIMIT {
            return Err(WellError::NoDecay {
                limit: HALFWIDTH_LIMIT,
            });
        }
    };
    lower = lower.max(envelope.outermost);
    while upper - lower > 0.01 * upper {
        let mid = 0.5 * (lower + upper);
        if envelope.tails_below(params, mid, tail_rel) {
            upper = mid;
        } else {
            lower = mid;
        }
    }
    Ok(upper)
}

/// A well instance with normalized eigenstates on `[-L, L]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellModel {
    params: WellParams,
    norms: [f64; 2],
    half_width: f64,
    tail_rel: f64,
}

impl WellModel {
    pub fn new(params: impl Into<WellParams>) -> Result<Self, WellError> {
        Self::with_tail_rel(params, DEFAULT_TAIL_REL)
    }

    pub fn with_tail_rel(params: impl Into<WellParams>, tail_rel: f64) -> Result<Self, WellError> {
        let params = params.into();
        let half_width = domain_halfwidth(&params, tail_rel)?;
        let mut norms = [0.0; 2];
        for level in Level::BOTH {
            let integral = romberg(
                |x| params.shape(level, x).powi(2),
                -half_width,
                half_width,
                NORM_REL_TOL,
                0.0,
            )
            .ok_or(WellError::Quadrature)?;
            norms[level.index()] = integral.sqrt().recip();
        }
        Ok(Self {
            params,
            norms,
            half_width,
            tail_rel,
        })
    }

    pub fn params(&self) -> &WellParams {
        &self.params
    }

    /// Domain half-width `L`.
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn tail_rel(&self) -> f64 {
        self.tail_rel
    }

    /// Normalization constant multiplying the unnormalized shape of `level`.
    pub fn norm(&self, level: Level) -> f64 {
        self.norms[level.index()]
    }

    pub fn energy(&self, level: Level) -> f64 {
        self.params.energy(level)
    }

    pub fn delta_e(&self) -> f64 {
        self.params.delta_e()
    }

    pub fn phi(&self, x: f64) -> f64 {
        self.params.phi(x)
    }

    pub fn chi(&self, x: f64) -> Result<f64, WellError> {
        self.params.chi(x)
    }

    pub fn potential(&self, x: f64) -> f64 {
        self.params.potential(x)
    }

    pub fn psi(&self, level: Level, x: f64) -> f64 {
        self.norms[level.index()] * self.params.shape(level, x)
    }

    pub fn psi0(&self, x: f64) -> f64 {
        self.psi(Level::Ground, x)
    }

    pub fn psi1(&self, x: f64) -> f64 {
        self.psi(Level::Excited, x)
    }

    pub fn node(&self) -> f64 {
        self.params.node()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(e0: f64, e1: f64) -> WellModel {
        WellModel::new(SymmetricWellParams::new(e0, e1).unwrap()).unwrap()
    }

    fn asym(alpha: f64, beta: f64, e0: f64, de: f64) -> WellModel {
        WellModel::new(AsymmetricWellParams::new(alpha, beta, e0, de).unwrap()).unwrap()
    }

    /// Five-point first derivative.
    fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert_eq!(
            SymmetricWellParams::new(-0.5, -1.0),
            Err(WellError::EnergyOrder { e0: -0.5, e1: -1.0 })
        );
        assert_eq!(
            SymmetricWellParams::new(-1.0, -1.0),
            Err(WellError::EnergyOrder { e0: -1.0, e1: -1.0 })
        );
        assert_eq!(
            SymmetricWellParams::new(-1.0, 0.0),
            Err(WellError::UnboundExcited(0.0))
        );
        assert_eq!(
            AsymmetricWellParams::new(0.5, 0.0, 0.0, 1.0),
            Err(WellError::NonPositiveBeta(0.0))
        );
        assert_eq!(
            AsymmetricWellParams::new(0.5, 1.0, 0.0, -1.0),
            Err(WellError::NonPositiveSplitting(-1.0))
        );
        assert_eq!(
            AsymmetricWellParams::new(1.0, 1.0, 0.0, 1.0),
            Err(WellError::AsymmetryOutOfRange(1.0))
        );
        assert_eq!(
            SymmetricWellParams::new(f64::NAN, -1.0),
            Err(WellError::NonFiniteParameter("E0"))
        );
    }

    #[test]
    fn phi_anchor_values() {
        let s = SymmetricWellParams::new(-1.0, -0.999).unwrap();
        assert_eq!(WellParams::from(s).phi(0.0), 0.0);
        let a = WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap());
        assert_eq!(a.phi(0.0), 0.9);
        assert!((a.phi(40.0) - 1.9).abs() < 1e-15);
    }

    #[test]
    fn phi_matches_hyperbolic_form() {
        let p = WellParams::from(SymmetricWellParams::new(-1.0, -0.9).unwrap());
        let (a, b) = (1.0f64, 0.9f64.sqrt());
        for x in [-3.0, -0.7, 0.2, 1.0, 5.0] {
            let direct = (a * x).sinh() / (b * x).cosh();
            assert!((p.phi(x) - direct).abs() < 1e-13 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn chi_anchor_values() {
        let s = WellParams::from(SymmetricWellParams::new(-1.0, -0.999).unwrap());
        assert_eq!(s.chi(0.0).unwrap(), 0.0);
        let a = WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap());
        assert!((a.chi(0.0).unwrap() - 0.45).abs() < 1e-15);
    }

    #[test]
    fn chi_matches_literal_symmetric_form() {
        let p = SymmetricWellParams::new(-1.0, -0.9).unwrap();
        let (a, b) = (p.a(), p.b());
        for x in [-2.0, -0.4, 0.3, 1.1, 4.0] {
            let (sa, ca) = ((a * x).sinh(), (a * x).cosh());
            let (s2b, cb) = ((2.0 * b * x).sinh(), (b * x).cosh());
            let den = b * sa * s2b - 2.0 * a * ca * cb * cb;
            let literal = sa * (2.0 * b * b - 2.0 * a * a * cb * cb) / den + a * b * ca * s2b / den;
            let got = WellParams::from(p).chi(x).unwrap();
            assert!((got - literal).abs() < 1e-12, "x={x}: {got} vs {literal}");
        }
    }

    #[test]
    fn chi_is_log_derivative_of_ground_state() {
        let model = sym(-1.0, -0.999);
        let h = 1e-3;
        let fd = -d1(|y| model.psi0(y).ln(), 1.0, h);
        assert!((model.chi(1.0).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn chi_reports_overflow() {
        let p = WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap());
        assert!(matches!(p.chi(800.0), Err(WellError::NonFinite { .. })));
    }

    #[test]
    fn potential_anchor_values() {
        let s = WellParams::from(SymmetricWellParams::new(-1.0, -0.9).unwrap());
        assert!((s.potential(0.0) + 0.2).abs() < 1e-14);
        let a = WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap());
        assert!((a.potential(0.0) - 0.7025).abs() < 1e-14);
        let near = WellParams::from(SymmetricWellParams::new(-1.0, -0.999).unwrap());
        assert!(near.potential(20.0).abs() < 1e-8);
        assert!(near.potential(-20.0).abs() < 1e-8);
    }

    #[test]
    fn potential_matches_literal_symmetric_form() {
        let p = SymmetricWellParams::new(-1.0, -0.75).unwrap();
        let (a, b) = (p.a(), p.b());
        for x in [-3.0, -1.0, 0.0, 0.5, 2.5] {
            let num = 2.0
                * (b * b - a * a)
                * (a * a * (b * x).cosh().powi(2) + b * b * (a * x).sinh().powi(2));
            let den =
                (a * (a * x).cosh() * (b * x).cosh() - b * (a * x).sinh() * (b * x).sinh()).powi(2);
            let got = WellParams::from(p).potential(x);
            assert!((got - num / den).abs() < 1e-12);
        }
    }

    #[test]
    fn symmetric_shapes_match_exponential_forms() {
        // The exponential expressions with psi(0) factored out.
        let p = SymmetricWellParams::new(-1.0, -0.9).unwrap();
        let (a, b) = (p.a(), p.b());
        let wp = WellParams::from(p);
        let den = |x: f64| {
            ((2.0 * (a + b) * x).exp() + 1.0) * (a - b)
                + (a + b) * ((2.0 * a * x).exp() + (2.0 * b * x).exp())
        };
        let g0 = |x: f64| ((2.0 * b * x).exp() + 1.0) * (a - b) * (a * x).exp() / den(x);
        let g1 = |x: f64| ((2.0 * a * x).exp() - 1.0) * (a - b) * (b * x).exp() / den(x);
        let s0 = wp.shape(Level::Ground, 0.0) / g0(0.0);
        let s1 = wp.shape(Level::Excited, 1.0) / g1(1.0);
        for x in [-4.0, -1.3, 0.0, 0.6, 2.0, 7.0] {
            assert!((wp.shape(Level::Ground, x) - s0 * g0(x)).abs() < 1e-12);
            assert!((wp.shape(Level::Excited, x) - s1 * g1(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn shapes_survive_huge_arguments() {
        let wp = WellParams::from(SymmetricWellParams::new(-1.0, -0.999).unwrap());
        for x in [-600.0, 400.0, 1e4] {
            assert!(wp.shape(Level::Ground, x).is_finite());
            assert!(wp.shape(Level::Excited, x).is_finite());
        }
        let ap = WellParams::from(AsymmetricWellParams::new(-0.9, 1.0, 0.0, 0.001).unwrap());
        for x in [-800.0, 800.0] {
            assert_eq!(ap.shape(Level::Ground, x), 0.0);
            assert_eq!(ap.shape(Level::Excited, x), 0.0);
        }
    }

    #[test]
    fn symmetric_parity() {
        let model = sym(-1.0, -0.9);
        for x in [0.5, 1.0, 3.0] {
            assert!((model.psi0(x) - model.psi0(-x)).abs() < 1e-12);
            assert!((model.psi1(x) + model.psi1(-x)).abs() < 1e-12);
            assert!((model.potential(x) - model.potential(-x)).abs() < 1e-12);
            assert!((model.chi(x).unwrap() + model.chi(-x).unwrap()).abs() < 1e-12);
            assert!((model.phi(x) + model.phi(-x)).abs() < 1e-12);
        }
        assert_eq!(model.psi1(0.0), 0.0);
    }

    #[test]
    fn excited_state_is_phi_times_ground_state() {
        let model = sym(-1.0, -0.9);
        let c = model.psi1(0.5) / (model.psi0(0.5) * model.phi(0.5));
        for x in [-1.5, -0.5, 0.5, 1.5] {
            let residual = model.psi1(x) / model.psi0(x) - c * model.phi(x);
            assert!(residual.abs() < 1e-10);
        }
    }

    #[test]
    fn asymmetric_node_location() {
        let model = asym(0.9, 1.0, 0.0, 1.0);
        let node = -0.9f64.atanh();
        assert!((model.node() - node).abs() < 1e-15);
        assert!((node + 1.47222).abs() < 1e-5);
        assert!(model.psi1(node).abs() < 1e-14);
        assert!(model.psi1(node - 0.01) < 0.0 && model.psi1(node + 0.01) > 0.0);
    }

    #[test]
    fn asymmetric_alpha_zero_gives_even_potential() {
        let p = WellParams::from(AsymmetricWellParams::new(0.0, 1.3, -0.2, 2.0).unwrap());
        for x in [0.1, 0.8, 1.7, 2.5] {
            assert!((p.potential(x) - p.potential(-x)).abs() < 1e-12);
        }
    }

    #[test]
    fn normalized_and_sign_convention() {
        for model in [sym(-1.0, -0.9), asym(0.9, 1.0, 0.0, 1.0)] {
            let l = model.half_width();
            for level in Level::BOTH {
                let norm = romberg(|x| model.psi(level, x).powi(2), -l, l, 1e-13, 0.0).unwrap();
                assert!((norm - 1.0).abs() < 1e-10, "{level:?}: {norm}");
            }
            assert!(model.norm(Level::Ground) > 0.0 && model.norm(Level::Excited) > 0.0);
            let n = model.node();
            assert!(model.psi1(n + 1e-3) > model.psi1(n - 1e-3));
        }
    }

    #[test]
    fn halfwidth_matches_dense_scan() {
        // Independent oracle: smallest L such that every |x| >= L on a fine
        // lattice is below threshold.
        let cases = [
            WellParams::from(SymmetricWellParams::new(-1.0, -0.999).unwrap()),
            WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 8.0).unwrap()),
            WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap()),
        ];
        for params in cases {
            let got = domain_halfwidth(&params, DEFAULT_TAIL_REL).unwrap();
            let reach = 64.0;
            let n = 64_001;
            let step = reach / (n - 1) as f64;
            let mut peaks = [0.0f64; 2];
            for i in 0..(2 * n - 1) {
                let x = -reach + i as f64 * step;
                for level in Level::BOTH {
                    peaks[level.index()] = peaks[level.index()].max(params.shape(level, x).abs());
                }
            }
            let mut oracle = 0.0;
            for i in (0..n).rev() {
                let x = i as f64 * step;
                let bad = Level::BOTH.iter().any(|&lv| {
                    let thr = DEFAULT_TAIL_REL * peaks[lv.index()];
                    params.shape(lv, x).abs() >= thr || params.shape(lv, -x).abs() >= thr
                });
                if bad {
                    oracle = x + step;
                    break;
                }
            }
            assert!(got >= oracle - 1e-9, "{params:?}: {got} < {oracle}");
            assert!(
                got <= oracle * 1.011 + step,
                "{params:?}: {got} vs {oracle}"
            );
        }
    }

    #[test]
    fn halfwidth_near_degenerate_symmetric() {
        let p = WellParams::from(SymmetricWellParams::new(-1.0, -0.999).unwrap());
        let l = domain_halfwidth(&p, DEFAULT_TAIL_REL).unwrap();
        // Decay e^{-x} with a 2/(a-b) tail prefactor against a peak of ~22.
        assert!((l - 28.2).abs() < 0.5, "{l}");
    }

    #[test]
    fn halfwidth_small_for_large_splitting() {
        let p = WellParams::from(AsymmetricWellParams::new(0.9, 1.0, 0.0, 8.0).unwrap());
        let l = domain_halfwidth(&p, DEFAULT_TAIL_REL).unwrap();
        assert!(l < 4.0, "{l}");
    }

    #[test]
    fn halfwidth_monotone_in_threshold() {
        let p = WellParams::from(SymmetricWellParams::new(-1.0, -0.9).unwrap());
        let coarse = domain_halfwidth(&p, 0.5).unwrap();
        let loose = domain_halfwidth(&p, 1e-10).unwrap();
        let tight = domain_halfwidth(&p, 1e-12).unwrap();
        assert!(coarse < loose && loose <= tight);
        for level in Level::BOTH {
            assert!(p.shape(level, coarse).abs() < p.shape(level, coarse * 0.5).abs());
        }
    }

    #[test]
    fn halfwidth_rejects_bad_tail() {
        let p = WellParams::from(SymmetricWellParams::new(-1.0, -0.9).unwrap());
        assert_eq!(domain_halfwidth(&p, 0.0), Err(WellError::InvalidTail(0.0)));
        assert_eq!(domain_halfwidth(&p, 1.0), Err(WellError::InvalidTail(1.0)));
    }

    #[test]
    fn halfwidth_reports_no_decay() {
        // b -> 0 makes the excited state decay on a scale of ~1e5.
        let p = WellParams::from(SymmetricWellParams::new(-1.0, -1e-10).unwrap());
        assert_eq!(
            domain_halfwidth(&p, DEFAULT_TAIL_REL),
            Err(WellError::NoDecay { limit: 1e4 })
        );
    }
}
