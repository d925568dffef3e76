//! The Hamiltonian hierarchy of the focusing NLS system and its symmetries.
//!
//! On the truncated phase space the energies are
//!   H  = ∫₀¹ (φ₁ₓ φ₂ₓ + φ₁² φ₂²) dx,
//!   H₁ = -∫₀¹ φ₁ φ₂ dx,
//!   H₂ = i ∫₀¹ φ₁ φ₂ₓ dx,
//!   Hᶜ = H - 2|c|² H₁,
//! with Hamiltonian vector fields taken for the symplectic form ω, so that
//! d_φ F(v) = ω(v, X_F(φ)). The gauge circle S^t: (z_k, w_k) ↦
//! (e^{it} z_k, e^{-it} w_k) is generated by H₁, the Fourier shift τ_m by m
//! modes transforms H by H ∘ τ_m = H + 4πm H₂ - 4π²m² H₁, and the constant
//! potentials γ_c(t) = (c e^{2i|c|²t}, -conj(c) e^{-2i|c|²t}) are the
//! relative equilibria whose linearization the rest of the crate studies.
//!
//! Quartic and cubic integrands are evaluated on a grid of 4(2K + 1) points,
//! which is exact for trigonometric polynomials of degree K.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_space::{GridMap, SpectralField};

/// Half-width of the window around πZ treated as excluded.
pub const EXCLUDED_WINDOW: f64 = 1e-9;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// A nonzero constant-potential amplitude c with excluded-set detection.
///
/// The modulus is flagged excluded when it lies within 1e-12 of a positive
/// multiple of π; operations that need an invertible mode structure refuse
/// such amplitudes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Amplitude {
    c: Complex64,
    modulus: f64,
    excluded: bool,
}

impl Amplitude {
    /// Wrap a nonzero complex amplitude.
    pub fn new(c: Complex64) -> Result<Self> {
        let modulus = c.norm();
        if modulus == 0.0 {
            return Err(Error::ZeroAmplitude);
        }
        let m = (modulus / std::f64::consts::PI).round();
        let excluded = m >= 1.0 && (modulus - m * std::f64::consts::PI).abs() <= 1e-12;
        Ok(Amplitude { c, modulus, excluded })
    }

    /// Convenience constructor for real positive moduli.
    pub fn from_modulus(c_mod: f64) -> Result<Self> {
        Self::new(Complex64::new(c_mod, 0.0))
    }

    /// The complex amplitude c.
    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// |c|.
    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    /// True when |c| sits on the excluded set πZ.
    pub fn excluded(&self) -> bool {
        self.excluded
    }

    /// Error out when the amplitude is excluded.
    pub fn require_regular(&self) -> Result<()> {
        if self.excluded {
            Err(Error::ExcludedAmplitude { c_mod: self.modulus })
        } else {
            Ok(())
        }
    }
}

/// Identifies which energy a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HamiltonianName {
    H,
    H1,
    H2,
    Hc,
}

/// A named energy evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianValue {
    pub name: HamiltonianName,
    pub value: Complex64,
}

/// Grid size used for quartic/cubic integrands at truncation K.
fn product_grid(k_max: usize) -> usize {
    4 * (2 * k_max + 1)
}

/// ∫₀¹ φ₁² φ₂² dx by exact quadrature.
fn quartic_integral(f: &SpectralField) -> Complex64 {
    let n = product_grid(f.k_max());
    let mut map = GridMap::new(n);
    let p1 = map.synth(f.k_max(), f.z_slice());
    let p2 = map.synth(f.k_max(), f.w_slice());
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        acc += p1[j] * p1[j] * p2[j] * p2[j];
    }
    acc / n as f64
}

/// H = Σ_k 4π²k² z_k w_{-k} + ∫ φ₁² φ₂².
pub fn eval_h(f: &SpectralField) -> Complex64 {
    let mut quad = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        quad += (TWO_PI * k as f64).powi(2) * f.z(k) * f.w(-k);
    }
    quad + quartic_integral(f)
}

/// H₁ = -∫ φ₁ φ₂ = -Σ_k z_k w_{-k}.
pub fn eval_h1(f: &SpectralField) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        sum += f.z(k) * f.w(-k);
    }
    -sum
}

/// H₂ = i ∫ φ₁ φ₂ₓ = Σ_k 2πk z_k w_{-k}.
pub fn eval_h2(f: &SpectralField) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        sum += TWO_PI * k as f64 * f.z(k) * f.w(-k);
    }
    sum
}

/// Hᶜ = H - 2|c|² H₁, the energy whose critical points are the γ_c orbit.
pub fn eval_hc(f: &SpectralField, a: &Amplitude) -> Complex64 {
    eval_h(f) - 2.0 * a.modulus() * a.modulus() * eval_h1(f)
}

/// Evaluate a named energy.
pub fn eval_named(name: HamiltonianName, f: &SpectralField, a: Option<&Amplitude>) -> Result<HamiltonianValue> {
    let value = match name {
        HamiltonianName::H => eval_h(f),
        HamiltonianName::H1 => eval_h1(f),
        HamiltonianName::H2 => eval_h2(f),
        HamiltonianName::Hc => {
            let a = a.ok_or_else(|| {
                Error::InvalidConfig("Hc requires an amplitude c".into())
            })?;
            eval_hc(f, a)
        }
    };
    Ok(HamiltonianValue { name, value })
}

/// X_H(φ) = i (φ₁ₓₓ - 2φ₁²φ₂, -φ₂ₓₓ + 2φ₁φ₂²).
///
/// In coefficients: z'_k = i(-4π²k² z_k - 2 (φ₁²φ₂)_k),
/// w'_k = i(4π²k² w_k + 2 (φ₁φ₂²)_k), cubic products formed on the padded
/// grid and truncated back to [-K, K].
pub fn field_x_h(f: &SpectralField) -> SpectralField {
    let k_max = f.k_max();
    let n = product_grid(k_max);
    let mut map = GridMap::new(n);
    let p1 = map.synth(k_max, f.z_slice());
    let p2 = map.synth(k_max, f.w_slice());
    let mut cubic1 = vec![Complex64::new(0.0, 0.0); n];
    let mut cubic2 = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        cubic1[j] = p1[j] * p1[j] * p2[j];
        cubic2[j] = p1[j] * p2[j] * p2[j];
    }
    let c1 = map.analyze(&cubic1, k_max);
    let c2 = map.analyze(&cubic2, k_max);
    let i_unit = Complex64::new(0.0, 1.0);
    let mut out = SpectralField::zeros(k_max);
    for k in f.modes() {
        let lap = (TWO_PI * k as f64).powi(2);
        let idx = (k + k_max as i64) as usize;
        out.set_z(k, i_unit * (-lap * f.z(k) - 2.0 * c1[idx])).unwrap();
        out.set_w(k, i_unit * (lap * f.w(k) + 2.0 * c2[idx])).unwrap();
    }
    out
}

/// X_{H₁}(φ) = i (φ₁, -φ₂), the generator of the gauge circle.
pub fn field_x_h1(f: &SpectralField) -> SpectralField {
    let i_unit = Complex64::new(0.0, 1.0);
    let mut out = SpectralField::zeros(f.k_max());
    for k in f.modes() {
        out.set_z(k, i_unit * f.z(k)).unwrap();
        out.set_w(k, -i_unit * f.w(k)).unwrap();
    }
    out
}

/// X_{Hᶜ} = X_H - 2|c|² X_{H₁}; vanishes exactly at the constant potential φ_c.
pub fn field_x_hc(f: &SpectralField, a: &Amplitude) -> SpectralField {
    let xh = field_x_h(f);
    let xh1 = field_x_h1(f);
    let s = Complex64::new(2.0 * a.modulus() * a.modulus(), 0.0);
    xh.sub(&xh1.scaled(s)).unwrap()
}

/// Gauge action S^t: z_k ↦ e^{it} z_k, w_k ↦ e^{-it} w_k.
pub fn gauge_flow(f: &SpectralField, t: f64) -> SpectralField {
    let fwd = Complex64::from_polar(1.0, t);
    let bwd = Complex64::from_polar(1.0, -t);
    let mut out = SpectralField::zeros(f.k_max());
    for k in f.modes() {
        out.set_z(k, fwd * f.z(k)).unwrap();
        out.set_w(k, bwd * f.w(k)).unwrap();
    }
    out
}

/// Fourier shift τ_m: z'_k = z_{k-m}, w'_k = w_{k+m}.
///
/// Populated modes may not be pushed outside the truncation; callers must
/// leave a margin of |m| empty modes at the edges.
pub fn tau_twist(f: &SpectralField, m: i64) -> Result<SpectralField> {
    let k_max = f.k_max();
    let kk = k_max as i64;
    for k in f.modes() {
        if f.z(k).norm() > 0.0 && (k + m).abs() > kk {
            return Err(Error::TwistOutOfRange { k, m, k_max });
        }
        if f.w(k).norm() > 0.0 && (k - m).abs() > kk {
            return Err(Error::TwistOutOfRange { k, m, k_max });
        }
    }
    let mut out = SpectralField::zeros(k_max);
    for k in -kk..=kk {
        out.set_z(k, f.z(k - m)).unwrap();
        out.set_w(k, f.w(k + m)).unwrap();
    }
    Ok(out)
}

/// The constant potential φ_c = (c, -conj c) as a spectral field.
pub fn phi_c(a: &Amplitude, k_max: usize) -> SpectralField {
    let mut f = SpectralField::zeros(k_max);
    f.set_z(0, a.c()).unwrap();
    f.set_w(0, -a.c().conj()).unwrap();
    f
}

/// The periodic orbit γ_c(t) = (c e^{2i|c|²t}, -conj(c) e^{-2i|c|²t}).
pub fn gamma_c(t: f64, a: &Amplitude, k_max: usize) -> SpectralField {
    let phase = 2.0 * a.modulus() * a.modulus() * t;
    gauge_flow(&phi_c(a, k_max), phase)
}

/// Period π/|c|² of the γ_c orbit.
pub fn gauge_period(a: &Amplitude) -> f64 {
    std::f64::consts::PI / (a.modulus() * a.modulus())
}
