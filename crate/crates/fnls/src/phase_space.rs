//! Finite-truncation model of the NLS phase space on the unit torus.
//!
//! A point φ = (φ₁, φ₂) is stored by its Fourier coefficients over e^{2πikx},
//! k ∈ [-K, K]: φ₁ = Σ z_k e^{2πikx}, φ₂ = Σ w_k e^{2πikx}. The module
//! provides the symplectic form ω(f, g) = -i ∫ (f₁g₂ - g₁f₂), the bilinear
//! pairing ⟨f, g⟩ = ∫ (f₁g₁ + f₂g₂), the Hermitian l² product, the antilinear
//! conjugation σ(φ₁, φ₂) = (-conj φ₂, -conj φ₁) whose fixed classes pick out
//! the focusing (w_k = -conj z_{-k}) and defocusing (w_k = +conj z_{-k}) real
//! subspaces, the bases ξ_k, η_k and their symplectically normalized
//! combinations ξ'_k, η'_k, and exact grid transforms for pseudospectral
//! products.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for reality-class detection.
pub const DEFAULT_REALITY_TOL: f64 = 1e-12;

/// Truncated spectral representation of a phase-space point.
///
/// Coefficients are stored densely over k ∈ [-K, K]; index 0 of the backing
/// vectors holds mode -K.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub struct SpectralField {
    k_max: usize,
    z: Vec<Complex64>,
    w: Vec<Complex64>,
}

impl SpectralField {
    /// The zero field at truncation K.
    pub fn zeros(k_max: usize) -> Self {
        let n = 2 * k_max + 1;
        SpectralField {
            k_max,
            z: vec![Complex64::new(0.0, 0.0); n],
            w: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// Truncation parameter K.
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Number of retained modes, 2K + 1.
    pub fn n_modes(&self) -> usize {
        2 * self.k_max + 1
    }

    fn idx(&self, k: i64) -> usize {
        debug_assert!(k.unsigned_abs() as usize <= self.k_max);
        (k + self.k_max as i64) as usize
    }

    /// Coefficient z_k of φ₁. Modes outside the truncation are zero.
    pub fn z(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.k_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.z[self.idx(k)]
        }
    }

    /// Coefficient w_k of φ₂. Modes outside the truncation are zero.
    pub fn w(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.k_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.w[self.idx(k)]
        }
    }

    /// Set z_k.
    pub fn set_z(&mut self, k: i64, value: Complex64) -> Result<()> {
        if k.unsigned_abs() as usize > self.k_max {
            return Err(Error::ModeOutOfRange { k, k_max: self.k_max });
        }
        let i = self.idx(k);
        self.z[i] = value;
        Ok(())
    }

    /// Set w_k.
    pub fn set_w(&mut self, k: i64, value: Complex64) -> Result<()> {
        if k.unsigned_abs() as usize > self.k_max {
            return Err(Error::ModeOutOfRange { k, k_max: self.k_max });
        }
        let i = self.idx(k);
        self.w[i] = value;
        Ok(())
    }

    /// Raw z coefficients ordered k = -K..K.
    pub fn z_slice(&self) -> &[Complex64] {
        &self.z
    }

    /// Raw w coefficients ordered k = -K..K.
    pub fn w_slice(&self) -> &[Complex64] {
        &self.w
    }

    /// Iterator over retained mode indices -K..=K.
    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let k = self.k_max as i64;
        -k..=k
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.k_max != other.k_max {
            return Err(Error::TruncationMismatch { left: self.k_max, right: other.k_max });
        }
        Ok(())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for i in 0..out.z.len() {
            out.z[i] += other.z[i];
            out.w[i] += other.w[i];
        }
        Ok(out)
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for i in 0..out.z.len() {
            out.z[i] -= other.z[i];
            out.w[i] -= other.w[i];
        }
        Ok(out)
    }

    /// Complex scalar multiple.
    pub fn scaled(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..out.z.len() {
            out.z[i] *= s;
            out.w[i] *= s;
        }
        out
    }

    /// l² norm, equal to `sobolev_norm(self, 0)`.
    pub fn norm(&self) -> f64 {
        let sum: f64 = self
            .z
            .iter()
            .zip(&self.w)
            .map(|(z, w)| z.norm_sqr() + w.norm_sqr())
            .sum();
        sum.sqrt()
    }

    /// l² distance to another field of the same truncation.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.norm())
    }

    /// Largest coefficient magnitude over both components.
    pub fn max_coeff(&self) -> f64 {
        self.z
            .iter()
            .chain(&self.w)
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// True when every coefficient is finite.
    pub fn is_finite(&self) -> bool {
        self.z
            .iter()
            .chain(&self.w)
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// Serialized shape of a field: complex numbers as [re, im] pairs.
#[derive(Serialize, Deserialize)]
struct FieldRepr {
    #[serde(rename = "K")]
    k_max: usize,
    z: Vec<[f64; 2]>,
    w: Vec<[f64; 2]>,
}

impl From<SpectralField> for FieldRepr {
    fn from(f: SpectralField) -> Self {
        FieldRepr {
            k_max: f.k_max,
            z: f.z.iter().map(|c| [c.re, c.im]).collect(),
            w: f.w.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<FieldRepr> for SpectralField {
    type Error = Error;

    fn try_from(r: FieldRepr) -> Result<Self> {
        let n = 2 * r.k_max + 1;
        if r.z.len() != n || r.w.len() != n {
            return Err(Error::MalformedField(format!(
                "K = {} requires {} coefficients per component, got z: {}, w: {}",
                r.k_max,
                n,
                r.z.len(),
                r.w.len()
            )));
        }
        let conv = |v: &[[f64; 2]]| -> Vec<Complex64> {
            v.iter().map(|p| Complex64::new(p[0], p[1])).collect()
        };
        let field = SpectralField { k_max: r.k_max, z: conv(&r.z), w: conv(&r.w) };
        if !field.is_finite() {
            return Err(Error::MalformedField("non-finite coefficient".into()));
        }
        Ok(field)
    }
}

/// Which reality subspace a field lies in, as detected by `reality_class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealityClass {
    /// w_k = -conj(z_{-k}): the invariant subspace of the focusing flow.
    FocusingReal,
    /// w_k = +conj(z_{-k}): the invariant subspace of the defocusing flow.
    DefocusingReal,
    /// Neither relation holds within tolerance.
    None,
}

/// Tags for the four basis families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    /// ξ_k = (1, 0) e^{2πikx}.
    Xi,
    /// η_k = (0, 1) e^{2πikx}.
    Eta,
    /// ξ'_k = (ξ_k - η_{-k}) / √2, focusing-real with ω(ξ'_k, η'_l) = δ_{kl}.
    XiPrime,
    /// η'_k = i (ξ_k + η_{-k}) / √2, the symplectic partner of ξ'_k.
    EtaPrime,
}

/// Symplectic form ω(f, g) = -i Σ_k (f₁ᵏ g₂⁻ᵏ - g₁ᵏ f₂⁻ᵏ).
pub fn omega(f: &SpectralField, g: &SpectralField) -> Result<Complex64> {
    f.check_same(g)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        sum += f.z(k) * g.w(-k) - g.z(k) * f.w(-k);
    }
    Ok(Complex64::new(0.0, -1.0) * sum)
}

/// ω(f, g) when g is supported on the given modes only; O(|support|) work.
pub(crate) fn omega_supported(
    f: &SpectralField,
    g: &SpectralField,
    support: &[i64],
) -> Complex64 {
    // Term f₁ᵏ g₂⁻ᵏ needs -k in the support, term g₁ᵏ f₂⁻ᵏ needs k in it,
    // so the dense sum collapses to k ∈ support ∪ (-support), each mode
    // counted exactly once even when the support lists both signs.
    let mut sum = Complex64::new(0.0, 0.0);
    let mut seen: Vec<i64> = Vec::with_capacity(2 * support.len());
    for &m in support {
        for k in [m, -m] {
            if seen.contains(&k) {
                continue;
            }
            seen.push(k);
            sum += f.z(k) * g.w(-k) - g.z(k) * f.w(-k);
        }
    }
    Complex64::new(0.0, -1.0) * sum
}

/// Bilinear pairing ⟨f, g⟩ = Σ_k (f₁ᵏ g₁⁻ᵏ + f₂ᵏ g₂⁻ᵏ), no conjugation.
pub fn pairing(f: &SpectralField, g: &SpectralField) -> Result<Complex64> {
    f.check_same(g)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        sum += f.z(k) * g.z(-k) + f.w(k) * g.w(-k);
    }
    Ok(sum)
}

/// Hermitian l² inner product Σ_k (f₁ᵏ conj(g₁ᵏ) + f₂ᵏ conj(g₂ᵏ)).
pub fn l2_inner(f: &SpectralField, g: &SpectralField) -> Result<Complex64> {
    f.check_same(g)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in f.modes() {
        sum += f.z(k) * g.z(k).conj() + f.w(k) * g.w(k).conj();
    }
    Ok(sum)
}

/// Antilinear conjugation σ(φ₁, φ₂) = (-conj φ₂, -conj φ₁).
///
/// In coefficients: z'_k = -conj(w_{-k}), w'_k = -conj(z_{-k}). σ is an
/// involution and its fixed-point set is the focusing real subspace.
pub fn sigma(f: &SpectralField) -> SpectralField {
    let mut out = SpectralField::zeros(f.k_max);
    for k in f.modes() {
        let i = out.idx(k);
        out.z[i] = -f.w(-k).conj();
        out.w[i] = -f.z(-k).conj();
    }
    out
}

/// Max deviation from the focusing reality relation w_k = -conj(z_{-k}).
pub fn focusing_deviation(f: &SpectralField) -> f64 {
    f.modes()
        .map(|k| (f.w(k) + f.z(-k).conj()).norm())
        .fold(0.0, f64::max)
}

/// Max deviation from the defocusing reality relation w_k = +conj(z_{-k}).
pub fn defocusing_deviation(f: &SpectralField) -> f64 {
    f.modes()
        .map(|k| (f.w(k) - f.z(-k).conj()).norm())
        .fold(0.0, f64::max)
}

/// Classify a field against both reality relations at the given tolerance.
///
/// The zero field satisfies both relations and reports `FocusingReal`.
pub fn reality_class(f: &SpectralField, tol: f64) -> RealityClass {
    if focusing_deviation(f) <= tol {
        RealityClass::FocusingReal
    } else if defocusing_deviation(f) <= tol {
        RealityClass::DefocusingReal
    } else {
        RealityClass::None
    }
}

/// Construct a basis vector of the requested kind at mode k.
pub fn basis_vector(kind: BasisKind, k: i64, k_max: usize) -> Result<SpectralField> {
    if k.unsigned_abs() as usize > k_max {
        return Err(Error::ModeOutOfRange { k, k_max });
    }
    let mut f = SpectralField::zeros(k_max);
    let one = Complex64::new(1.0, 0.0);
    let i_unit = Complex64::new(0.0, 1.0);
    let r = 1.0 / 2.0_f64.sqrt();
    match kind {
        BasisKind::Xi => f.set_z(k, one)?,
        BasisKind::Eta => f.set_w(k, one)?,
        BasisKind::XiPrime => {
            f.set_z(k, one * r)?;
            f.set_w(-k, -one * r)?;
        }
        BasisKind::EtaPrime => {
            f.set_z(k, i_unit * r)?;
            f.set_w(-k, i_unit * r)?;
        }
    }
    Ok(f)
}

/// Sobolev norm with symbol ⟨k⟩ = (1 + k²)^{1/2}:
/// ‖f‖_s² = Σ_k ⟨k⟩^{2s} (|z_k|² + |w_k|²).
pub fn sobolev_norm(f: &SpectralField, s: f64) -> f64 {
    let mut sum = 0.0;
    for k in f.modes() {
        let weight = (1.0 + (k * k) as f64).powf(s);
        sum += weight * (f.z(k).norm_sqr() + f.w(k).norm_sqr());
    }
    sum.sqrt()
}

/// Samples of both components on the uniform grid x_j = j/N.
#[derive(Clone, Debug)]
pub struct GridField {
    /// Number of grid points.
    pub n: usize,
    /// φ₁(x_j).
    pub phi1: Vec<Complex64>,
    /// φ₂(x_j).
    pub phi2: Vec<Complex64>,
}

/// Smallest grid accepted for truncation K: twice the mode count.
pub fn min_grid(k_max: usize) -> usize {
    2 * (2 * k_max + 1)
}

/// FFT pair between coefficients on [-K, K] and samples on a size-n grid.
///
/// Synthesis is the unnormalized inverse DFT with coefficient k placed in bin
/// k mod n; analysis is the forward DFT scaled by 1/n. For n ≥ 2K + 1 the
/// pair is exact on trigonometric polynomials of degree K.
pub(crate) struct GridMap {
    n: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    work: Vec<Complex64>,
    scratch: Vec<Complex64>,
}

impl GridMap {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let scratch_len = fwd
            .get_inplace_scratch_len()
            .max(inv.get_inplace_scratch_len());
        GridMap {
            n,
            fwd,
            inv,
            work: vec![Complex64::new(0.0, 0.0); n],
            scratch: vec![Complex64::new(0.0, 0.0); scratch_len],
        }
    }

    fn bin(&self, k: i64) -> usize {
        let n = self.n as i64;
        ((k % n + n) % n) as usize
    }

    /// Coefficients (ordered -K..K) to samples.
    pub fn synth_into(&mut self, k_max: usize, coeffs: &[Complex64], out: &mut [Complex64]) {
        debug_assert_eq!(coeffs.len(), 2 * k_max + 1);
        debug_assert_eq!(out.len(), self.n);
        self.work.fill(Complex64::new(0.0, 0.0));
        for (i, &c) in coeffs.iter().enumerate() {
            let k = i as i64 - k_max as i64;
            let bin = self.bin(k);
            self.work[bin] = c;
        }
        self.inv.process_with_scratch(&mut self.work, &mut self.scratch);
        out.copy_from_slice(&self.work);
    }

    /// Samples to coefficients (ordered -K..K).
    pub fn analyze_into(&mut self, samples: &[Complex64], k_max: usize, out: &mut [Complex64]) {
        debug_assert_eq!(samples.len(), self.n);
        debug_assert_eq!(out.len(), 2 * k_max + 1);
        self.work.copy_from_slice(samples);
        self.fwd.process_with_scratch(&mut self.work, &mut self.scratch);
        let scale = 1.0 / self.n as f64;
        for (i, slot) in out.iter_mut().enumerate() {
            let k = i as i64 - k_max as i64;
            *slot = self.work[self.bin(k)] * scale;
        }
    }

    pub fn synth(&mut self, k_max: usize, coeffs: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        self.synth_into(k_max, coeffs, &mut out);
        out
    }

    pub fn analyze(&mut self, samples: &[Complex64], k_max: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); 2 * k_max + 1];
        self.analyze_into(samples, k_max, &mut out);
        out
    }
}

/// Evaluate both components on the uniform grid x_j = j/n.
///
/// Requires n ≥ 2(2K + 1) so that products formed on the grid stay
/// alias-controlled when truncated back.
pub fn to_grid(f: &SpectralField, n: usize) -> Result<GridField> {
    let required = min_grid(f.k_max);
    if n < required {
        return Err(Error::GridTooCoarse { n, required });
    }
    let mut map = GridMap::new(n);
    let phi1 = map.synth(f.k_max, &f.z);
    let phi2 = map.synth(f.k_max, &f.w);
    Ok(GridField { n, phi1, phi2 })
}

/// Recover coefficients on [-K, K] from grid samples.
pub fn from_grid(g: &GridField, k_max: usize) -> Result<SpectralField> {
    let required = min_grid(k_max);
    if g.n < required {
        return Err(Error::GridTooCoarse { n: g.n, required });
    }
    let mut map = GridMap::new(g.n);
    let mut f = SpectralField::zeros(k_max);
    f.z = map.analyze(&g.phi1, k_max);
    f.w = map.analyze(&g.phi2, k_max);
    Ok(f)
}
