//! Spectral stability and symplectic normal forms for the focusing
//! nonlinear Schrödinger equation on the unit torus,
//!
//!   i u_t = -u_xx - 2|u|² u,   x ∈ ℝ/ℤ,
//!
//! studied as a Hamiltonian system on the Fourier side. The plane waves
//! γ_c(t) = c e^{2i|c|²t} e^{2πi·0·x} form a family of periodic orbits, and
//! everything here revolves around the linearization L_c of the reduced
//! Hamiltonian Hᶜ around φ_c: its block diagonalization over the mode pairs
//! (k, -k), the closed-form spectrum, a symplectic (Darboux) basis that
//! brings the Hessian to normal form cell by cell, and the resulting
//! obstruction to Birkhoff normal forms once |c| > π, checked against direct
//! numerical integration of the flow.
//!
//! Module map, bottom to top:
//!
//! * [`phase_space`]: truncated fields, the symplectic form ω, reality
//!   classes, standard bases, FFT transport to the spatial grid.
//! * [`hamiltonians`]: H, H₁, H₂, Hᶜ with their vector fields, the gauge
//!   circle, translation twists, plane waves.
//! * [`linearization`]: L_c mode blocks, regimes, closed-form eigenvalues
//!   and symplectically normalized eigenvectors, operator-level checks.
//! * [`normal_form`]: Darboux cells, canonical coordinates, normal blocks,
//!   the quadratic Hamiltonian in both pictures, focus integrals.
//! * [`obstruction`]: verdicts over amplitude sweeps and the small
//!   reduced-operator demonstration.
//! * [`simulator`]: Strang splitting on the focusing-real slice, invariant
//!   monitors, dynamical growth-rate measurements.
//! * [`verification`]: the twelve-criterion acceptance suite.
//! * [`cli`]: the `fnls` command-line front end.
//!
//! The examples directory is the guided tour: one runnable program per
//! capability, from `symplectic_structure` through `instability_growth`.

pub mod cli;
pub mod error;
pub mod hamiltonians;
pub mod linearization;
pub mod normal_form;
pub mod obstruction;
pub mod phase_space;
pub mod simulator;
pub mod verification;

pub use error::{Error, Result};
