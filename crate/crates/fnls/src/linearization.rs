//! Linearization L_c of the flow at the constant potentials γ_c.
//!
//! In the frame rotating with the orbit, the linearized operator is the
//! Hamiltonian vector field of the quadratic part of Hᶜ at φ_c. It leaves
//! every single-mode plane V_k = span{ξ_k, η_k} invariant; with
//! a_k = 4π²k² - 2|c|² and b = 2|c|² the block on V_k is
//!
//!   L_c |V_k = i [ -a_k  -b ]
//!              [   b   a_k ],
//!
//! whose eigenvalues solve λ² = b² - a_k² = 16π²k²(|c|² - π²k²). Three
//! regimes result: the Jordan block at k = 0 (λ = 0, algebraic multiplicity
//! 2, geometric 1), real hyperbolic pairs λ_k = 4πk√(|c|² - π²k²) for
//! 0 < π|k| < |c| (focus-focus), and imaginary pairs
//! λ_k = 4πik√(π²k² - |c|²) for π|k| > |c| (center). Moduli |c| ∈ πZ are
//! excluded: there a mode transitions and the block degenerates.
//!
//! Eigenvectors are normalized through the factor κ_k so that the F/G
//! families below satisfy fixed symplectic pairings, the input the Darboux
//! construction in `normal_form` relies on. A complex amplitude is handled
//! by `reduce_amplitude`: the gauge action S^t with t = -arg c conjugates
//! L_c to L_{|c|}.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonians::Amplitude;
use crate::phase_space::{basis_vector, BasisKind, SpectralField};

const PI: f64 = std::f64::consts::PI;

/// Spectral regime of a single mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// k = 0: nilpotent 2x2 block, eigenvalue 0 twice.
    Jordan,
    /// 0 < π|k| < |c|: real eigenvalue pair, exponential instability.
    FocusFocus,
    /// π|k| > |c|: imaginary eigenvalue pair, oscillatory mode.
    Center,
    /// π|k| = |c|: transition point, block degenerates.
    Excluded,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Regime::Jordan => "Jordan",
            Regime::FocusFocus => "FocusFocus",
            Regime::Center => "Center",
            Regime::Excluded => "Excluded",
        };
        f.write_str(s)
    }
}

/// The 2x2 restriction of L_c to V_k.
#[derive(Clone, Copy, Debug)]
pub struct ModeBlock {
    pub k: i64,
    pub c_mod: f64,
    /// a_k = 4π²k² - 2|c|².
    pub a_k: f64,
    /// b = 2|c|².
    pub b: f64,
    /// Matrix entries acting on (z_k, w_k).
    pub m: [[Complex64; 2]; 2],
    pub regime: Regime,
}

/// The normalization constant κ_k of the eigenvector family at mode k.
#[derive(Clone, Copy, Debug)]
pub struct KappaNorm {
    pub k: usize,
    pub value: Complex64,
    pub regime: Regime,
}

/// Which eigenvector family a vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EigenKind {
    /// Expanding family in the focus-focus regime; +i|λ| family in a center.
    F,
    /// Contracting family in the focus-focus regime; -i|λ| family in a center.
    G,
}

/// An eigenvalue with its symplectically normalized eigenvector.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub k: i64,
    pub kind: EigenKind,
    pub lambda: Complex64,
    pub vec: SpectralField,
}

/// One row of the closed-form spectrum.
#[derive(Clone, Copy, Debug)]
pub struct SpectrumLine {
    pub k: i64,
    pub lambda: Complex64,
    pub regime: Regime,
}

/// Summary of the block-by-block comparison between the assembled operator
/// and the closed-form spectrum.
#[derive(Clone, Copy, Debug)]
pub struct OperatorCheck {
    pub k_max: usize,
    pub c_mod: f64,
    /// Largest relative eigenvalue deviation over all blocks.
    pub max_rel_deviation: f64,
    /// Largest off-block coupling coefficient (should vanish identically).
    pub max_coupling: f64,
    /// Number of k > 0 blocks carrying a positive real eigenvalue.
    pub positive_real_count: usize,
    /// Number of k > 0 blocks in the center regime.
    pub center_count: usize,
}

/// Split a complex amplitude into (|c|, t): the gauge action S^t with
/// t = -arg c satisfies S^t ∘ L_c = L_{|c|} ∘ S^t.
pub fn reduce_amplitude(a: &Amplitude) -> (f64, f64) {
    (a.modulus(), -a.c().arg())
}

/// Apply L_c for the reduced real modulus |c|.
pub fn apply_lc(v: &SpectralField, a: &Amplitude) -> SpectralField {
    apply_lc_at(v, Complex64::new(a.modulus(), 0.0))
}

/// Apply L_c for a literal complex amplitude c:
/// z'_k = i((2|c|² - 4π²k²) z_k - 2c² w_k),
/// w'_k = i(2 conj(c)² z_k + (4π²k² - 2|c|²) w_k).
pub fn apply_lc_at(v: &SpectralField, c: Complex64) -> SpectralField {
    let i_unit = Complex64::new(0.0, 1.0);
    let m2 = c.norm_sqr();
    let c2 = c * c;
    let cb2 = c.conj() * c.conj();
    let mut out = SpectralField::zeros(v.k_max());
    for k in v.modes() {
        let lap = (2.0 * PI * k as f64).powi(2);
        out.set_z(k, i_unit * ((2.0 * m2 - lap) * v.z(k) - 2.0 * c2 * v.w(k)))
            .unwrap();
        out.set_w(k, i_unit * (2.0 * cb2 * v.z(k) + (lap - 2.0 * m2) * v.w(k)))
            .unwrap();
    }
    out
}

/// Classify mode k at amplitude a.
pub fn regime_of(k: i64, a: &Amplitude) -> Regime {
    if k == 0 {
        return Regime::Jordan;
    }
    let gap = PI * k.abs() as f64 - a.modulus();
    if gap.abs() <= 1e-12 {
        Regime::Excluded
    } else if gap < 0.0 {
        Regime::FocusFocus
    } else {
        Regime::Center
    }
}

/// Closed-form eigenvalue λ_k of the labeled family at signed mode k.
fn lambda_of(k: i64, a: &Amplitude) -> Complex64 {
    let c2 = a.modulus() * a.modulus();
    let kf = k as f64;
    let disc = c2 - PI * PI * kf * kf;
    match regime_of(k, a) {
        Regime::Jordan | Regime::Excluded => Complex64::new(0.0, 0.0),
        Regime::FocusFocus => Complex64::new(4.0 * PI * kf * disc.sqrt(), 0.0),
        Regime::Center => Complex64::new(0.0, 4.0 * PI * kf * (-disc).sqrt()),
    }
}

/// The block of L_{|c|} on V_k, with its regime tag.
pub fn mode_block(k: i64, a: &Amplitude) -> ModeBlock {
    let c2 = a.modulus() * a.modulus();
    let a_k = (2.0 * PI * k as f64).powi(2) - 2.0 * c2;
    let b = 2.0 * c2;
    let i_unit = Complex64::new(0.0, 1.0);
    let m = [
        [i_unit * -a_k, i_unit * -b],
        [i_unit * b, i_unit * a_k],
    ];
    ModeBlock { k, c_mod: a.modulus(), a_k, b, m, regime: regime_of(k, a) }
}

/// Closed-form spectrum over k ∈ [-K, K]. Errors on excluded amplitudes.
pub fn spectrum_analytic(a: &Amplitude, k_max: usize) -> Result<Vec<SpectrumLine>> {
    a.require_regular()?;
    let kk = k_max as i64;
    Ok((-kk..=kk)
        .map(|k| SpectrumLine { k, lambda: lambda_of(k, a), regime: regime_of(k, a) })
        .collect())
}

/// The normalization κ_k, defined for k ≥ 1 at regular amplitudes by
/// κ² = s(a_k + s) with s = √(a_k² - b²) in a center and
/// κ² = √(b² - a_k²)(a_k - i√(b² - a_k²)) in the focus-focus regime,
/// taking principal square roots (κ real positive, resp. in the fourth
/// quadrant).
pub fn kappa(k: usize, a: &Amplitude) -> Result<KappaNorm> {
    a.require_regular()?;
    if k == 0 {
        return Err(Error::JordanMode);
    }
    let block = mode_block(k as i64, a);
    let (a_k, b) = (block.a_k, block.b);
    let value = match block.regime {
        Regime::Center => {
            let s = (a_k * a_k - b * b).sqrt();
            Complex64::new((s * (a_k + s)).sqrt(), 0.0)
        }
        Regime::FocusFocus => {
            let s = (b * b - a_k * a_k).sqrt();
            (Complex64::new(a_k, -s) * s).sqrt()
        }
        // Unreachable at regular amplitudes.
        Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude"),
    };
    Ok(KappaNorm { k, value, regime: block.regime })
}

/// Eigenvector of the labeled family at signed mode k, |k| ≥ 1.
///
/// The families satisfy G_k = σ(F_k) in a center and F_{-k} = σ(F_k),
/// G_{-k} = σ(G_k) in the focus-focus regime, with constant pairings
/// ω(F_k, G_k) = -2i (center) and ω(F_k, G_{-k}) = 2 (focus-focus).
pub fn eigenvector(k: i64, kind: EigenKind, a: &Amplitude, k_max: usize) -> Result<EigenPair> {
    a.require_regular()?;
    if k == 0 {
        return Err(Error::JordanMode);
    }
    let j = k.unsigned_abs() as usize;
    if j > k_max {
        return Err(Error::ModeOutOfRange { k, k_max });
    }
    let block = mode_block(k, a);
    let (a_k, b) = (block.a_k, block.b);
    let kap = kappa(j, a)?.value;
    let mut vec = SpectralField::zeros(k_max);
    let lambda;
    match block.regime {
        Regime::Center => {
            let s = (a_k * a_k - b * b).sqrt();
            let kr = kap.re;
            // F_k lives on mode -k, G_k on mode +k; both components real.
            let (home, zc, wc) = match kind {
                EigenKind::F => (-k, b / kr, -(a_k + s) / kr),
                EigenKind::G => (k, (a_k + s) / kr, -b / kr),
            };
            vec.set_z(home, Complex64::new(zc, 0.0))?;
            vec.set_w(home, Complex64::new(wc, 0.0))?;
            lambda = match kind {
                EigenKind::F => Complex64::new(0.0, s),
                EigenKind::G => Complex64::new(0.0, -s),
            };
        }
        Regime::FocusFocus => {
            let s = (b * b - a_k * a_k).sqrt();
            let am = Complex64::new(a_k, -s);
            let ap = Complex64::new(a_k, s);
            // Signed-k layout: F_{+} and G_{-} use kappa, their sigma
            // partners use conj(kappa); each lives on its own mode.
            let (zc, wc) = match (kind, k > 0) {
                (EigenKind::F, true) => (-Complex64::new(b, 0.0) / kap, am / kap),
                (EigenKind::F, false) => (-ap / kap.conj(), Complex64::new(b, 0.0) / kap.conj()),
                (EigenKind::G, true) => (Complex64::new(b, 0.0) / kap.conj(), -ap / kap.conj()),
                (EigenKind::G, false) => (am / kap, -Complex64::new(b, 0.0) / kap),
            };
            vec.set_z(k, zc)?;
            vec.set_w(k, wc)?;
            lambda = match kind {
                EigenKind::F => Complex64::new(s, 0.0),
                EigenKind::G => Complex64::new(-s, 0.0),
            };
        }
        Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude, k != 0"),
    }
    Ok(EigenPair { k, kind, lambda, vec })
}

/// Relative residual ‖L_c v - λ v‖ / ‖v‖ of an eigenpair.
pub fn eigen_residual(p: &EigenPair, a: &Amplitude) -> f64 {
    let lv = apply_lc(&p.vec, a);
    lv.sub(&p.vec.scaled(p.lambda)).unwrap().norm() / p.vec.norm()
}

/// Assemble every block of the truncated operator by applying L_c to the
/// ξ_k, η_k basis, diagonalize each 2x2 by the quadratic formula, and compare
/// against the closed-form spectrum.
pub fn truncated_operator_check(a: &Amplitude, k_max: usize) -> Result<OperatorCheck> {
    a.require_regular()?;
    let mut max_rel = 0.0_f64;
    let mut max_coupling = 0.0_f64;
    let mut positive_real = 0usize;
    let mut centers = 0usize;
    let kk = k_max as i64;
    for k in -kk..=kk {
        let xi = basis_vector(BasisKind::Xi, k, k_max)?;
        let eta = basis_vector(BasisKind::Eta, k, k_max)?;
        let col_z = apply_lc(&xi, a);
        let col_w = apply_lc(&eta, a);
        // Couplings to any other mode must vanish identically.
        for &col in &[&col_z, &col_w] {
            for l in col.modes() {
                if l != k {
                    max_coupling = max_coupling.max(col.z(l).norm()).max(col.w(l).norm());
                }
            }
        }
        // Traceless 2x2: eigenvalues are the two roots of mu^2 = -det.
        let m = [[col_z.z(k), col_w.z(k)], [col_z.w(k), col_w.w(k)]];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let mu = (-det).sqrt();
        let lam = lambda_of(k, a);
        let scale = lam.norm().max(a.modulus() * a.modulus());
        // The block carries both signs; match each root to the closer label.
        for root in [mu, -mu] {
            let dev = (root - lam).norm().min((root + lam).norm());
            max_rel = max_rel.max(dev / scale);
        }
        if k > 0 {
            match regime_of(k, a) {
                Regime::FocusFocus => {
                    if mu.re.abs() > mu.im.abs() {
                        positive_real += 1;
                    }
                }
                Regime::Center => centers += 1,
                _ => {}
            }
        }
    }
    Ok(OperatorCheck {
        k_max,
        c_mod: a.modulus(),
        max_rel_deviation: max_rel,
        max_coupling,
        positive_real_count: positive_real,
        center_count: centers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase_space::omega;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn reduce_amplitude_examples() {
        let a = Amplitude::new(c(3.0, 0.0)).unwrap();
        assert_eq!(reduce_amplitude(&a), (3.0, -0.0));
        let b = Amplitude::new(c(0.0, 2.0)).unwrap();
        let (m, t) = reduce_amplitude(&b);
        assert!((m - 2.0).abs() < 1e-15);
        assert!((t + PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn gauge_conjugates_complex_amplitude_to_real() {
        use crate::hamiltonians::gauge_flow;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = Amplitude::new(c(1.3, -2.1)).unwrap();
        let (modulus, t) = reduce_amplitude(&a);
        let real = Amplitude::from_modulus(modulus).unwrap();
        let mut v = SpectralField::zeros(5);
        for k in v.modes() {
            v.set_z(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
            v.set_w(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
        }
        let lhs = gauge_flow(&apply_lc_at(&v, a.c()), t);
        let rhs = apply_lc(&gauge_flow(&v, t), &real);
        assert!(lhs.distance(&rhs).unwrap() < 1e-12);
    }

    #[test]
    fn apply_lc_on_xi_mode_one() {
        // c = 1: L xi_1 = i(2 - 4 pi^2) xi_1 + 2i eta_1.
        let a = Amplitude::from_modulus(1.0).unwrap();
        let xi = basis_vector(BasisKind::Xi, 1, 3).unwrap();
        let out = apply_lc(&xi, &a);
        assert!((out.z(1) - c(0.0, 2.0 - 4.0 * PI * PI)).norm() < 1e-13);
        assert!((out.w(1) - c(0.0, 2.0)).norm() < 1e-13);
        // No other mode is touched.
        for k in out.modes() {
            if k != 1 {
                assert_eq!(out.z(k), c(0.0, 0.0));
                assert_eq!(out.w(k), c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn lc_is_infinitesimally_symplectic_and_real() {
        use crate::phase_space::{reality_class, RealityClass};
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let a = Amplitude::from_modulus(4.0).unwrap();
        let mut u = SpectralField::zeros(6);
        let mut v = SpectralField::zeros(6);
        for k in u.modes() {
            u.set_z(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
            u.set_w(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
            v.set_z(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
            v.set_w(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
        }
        let lhs = omega(&apply_lc(&u, &a), &v).unwrap();
        let rhs = omega(&u, &apply_lc(&v, &a)).unwrap();
        assert!((lhs + rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
        // L_c preserves the focusing subspace.
        let mut f = SpectralField::zeros(6);
        for k in f.modes() {
            f.set_z(k, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).unwrap();
        }
        for k in f.modes() {
            let zk = f.z(-k);
            f.set_w(k, -zk.conj()).unwrap();
        }
        assert_eq!(reality_class(&apply_lc(&f, &a), 1e-10), RealityClass::FocusingReal);
    }

    #[test]
    fn regimes_at_c_ten() {
        let a = Amplitude::from_modulus(10.0).unwrap();
        assert_eq!(regime_of(0, &a), Regime::Jordan);
        for k in [1i64, 2, 3] {
            assert_eq!(regime_of(k, &a), Regime::FocusFocus);
            assert_eq!(regime_of(-k, &a), Regime::FocusFocus);
        }
        for k in [4i64, 5, 20] {
            assert_eq!(regime_of(k, &a), Regime::Center);
        }
        let ex = Amplitude::from_modulus(3.0 * PI).unwrap();
        assert_eq!(regime_of(3, &ex), Regime::Excluded);
    }

    #[test]
    fn spectrum_closed_forms() {
        let a = Amplitude::from_modulus(4.0).unwrap();
        let spec = spectrum_analytic(&a, 8).unwrap();
        let lam1 = spec.iter().find(|l| l.k == 1).unwrap();
        // 4 pi sqrt(16 - pi^2).
        let expect = 4.0 * PI * (16.0 - PI * PI).sqrt();
        assert!((lam1.lambda - c(expect, 0.0)).norm() < 1e-12);
        assert_eq!(lam1.regime, Regime::FocusFocus);
        let lam2 = spec.iter().find(|l| l.k == 2).unwrap();
        let expect2 = 8.0 * PI * (4.0 * PI * PI - 16.0).sqrt();
        assert!((lam2.lambda - c(0.0, expect2)).norm() < 1e-12);
        assert_eq!(lam2.regime, Regime::Center);
        // Labeled family is odd in k.
        let lam_m2 = spec.iter().find(|l| l.k == -2).unwrap();
        assert!((lam_m2.lambda + lam2.lambda).norm() < 1e-15);
        // Excluded amplitude refuses.
        let ex = Amplitude::from_modulus(PI).unwrap();
        assert!(matches!(spectrum_analytic(&ex, 4), Err(Error::ExcludedAmplitude { .. })));
    }

    #[test]
    fn kappa_values_and_quadrants() {
        let a = Amplitude::from_modulus(1.0).unwrap();
        // Center mode k = 1 at c = 1.
        let k1 = kappa(1, &a).unwrap();
        assert_eq!(k1.regime, Regime::Center);
        let a_k = 4.0 * PI * PI - 2.0;
        let b = 2.0;
        let s = (a_k * a_k - b * b).sqrt();
        assert!((k1.value.re - (s * (a_k + s)).sqrt()).abs() < 1e-10);
        assert!(k1.value.im == 0.0);
        // Focus-focus mode k = 1 at c = 4: fourth quadrant.
        let a4 = Amplitude::from_modulus(4.0).unwrap();
        let k14 = kappa(1, &a4).unwrap();
        assert_eq!(k14.regime, Regime::FocusFocus);
        assert!(k14.value.re > 0.0 && k14.value.im < 0.0);
        // |kappa^2| = |lambda| * sqrt(a^2 + s^2)... sanity: kappa^2 = s(a - is).
        let a_k4 = 4.0 * PI * PI - 32.0;
        let s4 = (32.0 * 32.0 - a_k4 * a_k4).sqrt();
        let k2 = k14.value * k14.value;
        assert!((k2 - c(s4 * a_k4, -s4 * s4)).norm() < 1e-9);
        assert!(matches!(kappa(0, &a), Err(Error::JordanMode)));
    }

    #[test]
    fn eigen_residuals_both_regimes() {
        for c_mod in [1.0, 4.0, 10.0] {
            let a = Amplitude::from_modulus(c_mod).unwrap();
            for k in [-5i64, -2, -1, 1, 2, 5] {
                for kind in [EigenKind::F, EigenKind::G] {
                    let p = eigenvector(k, kind, &a, 8).unwrap();
                    let r = eigen_residual(&p, &a);
                    assert!(r < 1e-12, "c = {c_mod}, k = {k}, {kind:?}: residual {r:.3e}");
                }
            }
        }
    }

    #[test]
    fn eigenvector_symmetries_and_pairings() {
        use crate::phase_space::sigma;
        // Center: G_k = sigma(F_k), omega(F_k, G_k) = -2i.
        let a = Amplitude::from_modulus(1.0).unwrap();
        for k in [1i64, -1, 3] {
            let f = eigenvector(k, EigenKind::F, &a, 6).unwrap();
            let g = eigenvector(k, EigenKind::G, &a, 6).unwrap();
            assert!(sigma(&f.vec).distance(&g.vec).unwrap() < 1e-12);
            let om = omega(&f.vec, &g.vec).unwrap();
            assert!((om - c(0.0, -2.0)).norm() < 1e-11, "k = {k}: {om}");
            assert!((f.lambda + g.lambda).norm() < 1e-12);
        }
        // Focus-focus: F_{-k} = sigma(F_k), omega(F_k, G_{-k}) = 2.
        let a4 = Amplitude::from_modulus(4.0).unwrap();
        let f1 = eigenvector(1, EigenKind::F, &a4, 6).unwrap();
        let fm1 = eigenvector(-1, EigenKind::F, &a4, 6).unwrap();
        let g1 = eigenvector(1, EigenKind::G, &a4, 6).unwrap();
        let gm1 = eigenvector(-1, EigenKind::G, &a4, 6).unwrap();
        assert!(sigma(&f1.vec).distance(&fm1.vec).unwrap() < 1e-12);
        assert!(sigma(&g1.vec).distance(&gm1.vec).unwrap() < 1e-12);
        assert!((omega(&f1.vec, &gm1.vec).unwrap() - c(2.0, 0.0)).norm() < 1e-11);
        assert!((omega(&fm1.vec, &g1.vec).unwrap() - c(2.0, 0.0)).norm() < 1e-11);
        assert!(omega(&f1.vec, &g1.vec).unwrap().norm() < 1e-11);
        assert!(omega(&f1.vec, &fm1.vec).unwrap().norm() < 1e-11);
        // Same eigenvalue for the sigma pair.
        assert!((f1.lambda - fm1.lambda).norm() < 1e-12);
        // Errors.
        assert!(matches!(eigenvector(0, EigenKind::F, &a4, 6), Err(Error::JordanMode)));
        assert!(matches!(
            eigenvector(7, EigenKind::F, &a4, 6),
            Err(Error::ModeOutOfRange { .. })
        ));
    }

    #[test]
    fn operator_check_counts_unstable_modes() {
        let a = Amplitude::from_modulus(10.0).unwrap();
        let report = truncated_operator_check(&a, 16).unwrap();
        assert_eq!(report.positive_real_count, 3);
        assert_eq!(report.center_count, 13);
        assert!(report.max_rel_deviation < 1e-12);
        assert!(report.max_coupling == 0.0);
    }
}
