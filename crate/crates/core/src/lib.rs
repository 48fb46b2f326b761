//! Numerical core for tunneling in partially exactly solvable double wells.
//!
//! Units throughout: `ħ = 1`, `m = 1/2`, so that `ħ²/2m = 1` and the
//! Schrödinger operator is `-d²/dx² + V(x)`.
//!
//! * [`well`]: closed-form potentials and the two lowest eigenstates of the
//!   symmetric and asymmetric wells.
//! * [`superposition`]: the exact two-level time evolution.
//! * [`wigner`]: Wigner transform (direct and FFT paths), marginals, overlap,
//!   negativity and fringe metrics.
//! * [`specbench`]: finite-difference eigensolver checked against the exact
//!   spectrum.

pub mod quadrature;
pub mod specbench;
pub mod superposition;
pub mod well;
pub mod wigner;

pub use specbench::{
    benchmark, benchmark_on, build_hamiltonian, lowest_eigenpairs, BenchError,
    DiscretizedHamiltonian, Eigenpair, SpectralBenchReport,
};
pub use superposition::{beat_period, SuperpositionState};
pub use well::{
    domain_halfwidth, AsymmetricWellParams, Level, SymmetricWellParams, WellError, WellModel,
    WellParams, DEFAULT_TAIL_REL,
};
pub use wigner::{
    fringe_spacing, marginal_momentum, marginal_position, negativity, overlap_integral,
    wigner_direct, wigner_fft, GaussianPacket, Marginal, Method, NegativityReport, PhaseSpaceGrid,
    UniformAxis, Wavefunction, WignerError, WignerField,
};

/// Reduced Planck constant in the crate's unit system.
pub const HBAR: f64 = 1.0;
