//! Strang-split pseudospectral integrator for the focusing NLS flow.
//!
//! On the focusing real subspace the system reduces to the scalar equation
//! i u_t = -u_xx - 2|u|²u for u = φ₁ (with φ₂ = -conj u reconstructed). One
//! step of size h composes three exact maps: a half step of the linear flow
//! z_k ↦ e^{-4iπ²k²h/2} z_k, a full step of the pointwise nonlinear flow
//! u ↦ u e^{2i|u|²h} on the dealiased grid, and a second linear half step.
//! Both substeps conserve |u| pointwise resp. modewise, so H₁ is conserved
//! to round-off and the scheme is second order in h for the full energy H.
//! The defocusing variant flips the nonlinear phase and reconstructs
//! φ₂ = +conj u.
//!
//! The growth-rate protocol seeds φ_c + ε α_k, undoes the orbit rotation by
//! the gauge action S^{-2|c|²t}, projects the deviation onto the expanding
//! direction through c_F(t) = ω(δ(t), G_{-k})/2, and fits log |c_F| against
//! t inside the window 10ε ≤ |c_F| ≤ 10⁻³ where growth is linear but well
//! above round-off.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonians::{eval_h, eval_h1, gauge_flow, phi_c, Amplitude};
use crate::linearization::{eigenvector, regime_of, EigenKind, Regime};
use crate::normal_form::darboux_quad;
use crate::phase_space::{
    defocusing_deviation, focusing_deviation, min_grid, GridMap, SpectralField,
};

/// Time-stepping schemes offered by the integrator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    /// Second-order symmetric splitting (linear half, nonlinear full, linear half).
    Strang,
}

/// Reality tolerance applied to initial data and guaranteed along samples.
pub const TRAJECTORY_REALITY_TOL: f64 = 1e-10;

/// Ratio of the largest admissible perturbation to |c| in growth protocols.
pub const MAX_SEED_RATIO: f64 = 1e-6;

/// Upper edge of the growth fitting window.
pub const FIT_WINDOW_TOP: f64 = 1e-3;

/// Least number of samples required inside the fitting window.
pub const FIT_MIN_POINTS: usize = 8;

/// Integration parameters.
#[derive(Clone, Debug)]
pub struct SimConfig {
    /// Spectral truncation of the state.
    pub k_max: usize,
    /// Grid size for the nonlinear substep; at least 2(2K + 1).
    pub n_grid: usize,
    /// Nominal time step; the effective step is trimmed to T / round(T / dt)
    /// so an integer number of steps lands exactly on the final time.
    pub dt: f64,
    /// Final time.
    pub t_final: f64,
    pub scheme: Scheme,
    /// Amplitude defining reference orbits and growth protocols.
    pub amp: Amplitude,
    /// Seed for randomized protocols built on top of this config.
    pub seed: u64,
    /// Record a sample every this many steps (the final state is always kept).
    pub sample_stride: usize,
}

impl SimConfig {
    /// Defaults: K = 64, N = 512, dt = 1e-4, T = 1, Strang, stride 100.
    pub fn for_amplitude(amp: Amplitude) -> Self {
        SimConfig {
            k_max: 64,
            n_grid: 512,
            dt: 1e-4,
            t_final: 1.0,
            scheme: Scheme::Strang,
            amp,
            seed: 0,
            sample_stride: 100,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) {
            return Err(Error::InvalidConfig(format!("dt must be positive, got {}", self.dt)));
        }
        if self.t_final < self.dt {
            return Err(Error::InvalidConfig(format!(
                "final time {} shorter than one step {}",
                self.t_final, self.dt
            )));
        }
        let required = min_grid(self.k_max);
        if self.n_grid < required {
            return Err(Error::GridTooCoarse { n: self.n_grid, required });
        }
        if self.sample_stride == 0 {
            return Err(Error::InvalidConfig("sample stride must be at least 1".into()));
        }
        Ok(())
    }
}

/// One recorded state with its conserved-quantity monitors.
#[derive(Clone, Debug)]
pub struct TrajectorySample {
    pub t: f64,
    pub field: SpectralField,
    /// H at this sample.
    pub h: f64,
    /// H₁ at this sample.
    pub h1: f64,
}

/// A time-ordered list of samples; t is strictly increasing and every field
/// stays focusing-real to working precision by construction.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
}

impl Trajectory {
    pub fn final_sample(&self) -> &TrajectorySample {
        self.samples.last().expect("trajectory holds at least the initial sample")
    }

    /// max_t |H₁(t) - H₁(0)| / (1 + |H₁(0)|).
    pub fn h1_drift(&self) -> f64 {
        let first = self.samples[0].h1;
        self.samples
            .iter()
            .map(|s| (s.h1 - first).abs())
            .fold(0.0, f64::max)
            / (1.0 + first.abs())
    }

    /// max_t |H(t) - H(0)| / (1 + |H(0)|).
    pub fn h_drift(&self) -> f64 {
        let first = self.samples[0].h;
        self.samples
            .iter()
            .map(|s| (s.h - first).abs())
            .fold(0.0, f64::max)
            / (1.0 + first.abs())
    }
}

/// Shared stepping core: state is the z component only, the partner
/// component being pinned by the reality relation of the chosen sign.
struct Stepper {
    k_max: usize,
    sign: f64,
    dt: f64,
    half_linear: Vec<Complex64>,
    grid: GridMap,
    u: Vec<Complex64>,
}

impl Stepper {
    fn new(k_max: usize, n_grid: usize, dt: f64, sign: f64) -> Self {
        let kk = k_max as i64;
        let half_linear = (-kk..=kk)
            .map(|k| {
                let w = (2.0 * std::f64::consts::PI * k as f64).powi(2);
                Complex64::from_polar(1.0, -w * dt / 2.0)
            })
            .collect();
        Stepper {
            k_max,
            sign,
            dt,
            half_linear,
            grid: GridMap::new(n_grid),
            u: vec![Complex64::new(0.0, 0.0); n_grid],
        }
    }

    fn step(&mut self, z: &mut [Complex64]) {
        for (zk, ph) in z.iter_mut().zip(&self.half_linear) {
            *zk *= ph;
        }
        self.grid.synth_into(self.k_max, z, &mut self.u);
        for v in &mut self.u {
            *v *= Complex64::from_polar(1.0, self.sign * 2.0 * v.norm_sqr() * self.dt);
        }
        self.grid.analyze_into(&self.u, self.k_max, z);
        for (zk, ph) in z.iter_mut().zip(&self.half_linear) {
            *zk *= ph;
        }
    }
}

fn field_from_z(z: &[Complex64], k_max: usize, sign: f64) -> SpectralField {
    let mut f = SpectralField::zeros(k_max);
    let kk = k_max as i64;
    for k in -kk..=kk {
        let idx = (k + kk) as usize;
        f.set_z(k, z[idx]).unwrap();
        f.set_w(k, -sign * z[(-k + kk) as usize].conj()).unwrap();
    }
    f
}

fn require_focusing(phi: &SpectralField) -> Result<()> {
    let deviation = focusing_deviation(phi);
    if deviation > TRAJECTORY_REALITY_TOL * (1.0 + phi.max_coeff()) {
        return Err(Error::NotFocusingReal { deviation });
    }
    Ok(())
}

/// One Strang step of size dt on the focusing flow.
pub fn step(phi: &SpectralField, dt: f64) -> Result<SpectralField> {
    require_focusing(phi)?;
    if !(dt > 0.0) {
        return Err(Error::InvalidConfig(format!("dt must be positive, got {dt}")));
    }
    let k_max = phi.k_max();
    let mut stepper = Stepper::new(k_max, min_grid(k_max), dt, 1.0);
    let mut z = phi.z_slice().to_vec();
    stepper.step(&mut z);
    Ok(field_from_z(&z, k_max, 1.0))
}

/// One Strang step of size dt on the defocusing flow (φ₂ = +conj φ₁).
pub fn step_defocusing(phi: &SpectralField, dt: f64) -> Result<SpectralField> {
    let deviation = defocusing_deviation(phi);
    if deviation > TRAJECTORY_REALITY_TOL * (1.0 + phi.max_coeff()) {
        return Err(Error::NotDefocusingReal { deviation });
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidConfig(format!("dt must be positive, got {dt}")));
    }
    let k_max = phi.k_max();
    let mut stepper = Stepper::new(k_max, min_grid(k_max), dt, -1.0);
    let mut z = phi.z_slice().to_vec();
    stepper.step(&mut z);
    Ok(field_from_z(&z, k_max, -1.0))
}

fn evolve_with_sign(cfg: &SimConfig, phi0: &SpectralField, sign: f64) -> Result<Trajectory> {
    cfg.validate()?;
    if phi0.k_max() != cfg.k_max {
        return Err(Error::TruncationMismatch { left: phi0.k_max(), right: cfg.k_max });
    }
    let n_steps = ((cfg.t_final / cfg.dt).round() as usize).max(1);
    let dt_eff = cfg.t_final / n_steps as f64;
    let mut stepper = Stepper::new(cfg.k_max, cfg.n_grid, dt_eff, sign);
    let mut z = phi0.z_slice().to_vec();
    let mut samples = Vec::with_capacity(n_steps / cfg.sample_stride + 2);
    let record = |z: &[Complex64], t: f64, samples: &mut Vec<TrajectorySample>| -> Result<()> {
        let field = field_from_z(z, cfg.k_max, sign);
        if !field.is_finite() {
            return Err(Error::BlowUp { t });
        }
        let h = eval_h(&field).re;
        let h1 = eval_h1(&field).re;
        samples.push(TrajectorySample { t, field, h, h1 });
        Ok(())
    };
    record(&z, 0.0, &mut samples)?;
    for i in 1..=n_steps {
        stepper.step(&mut z);
        // A NaN anywhere contaminates mode 0 through the FFT; cheap guard.
        if !z[cfg.k_max].re.is_finite() {
            return Err(Error::BlowUp { t: i as f64 * dt_eff });
        }
        if i % cfg.sample_stride == 0 || i == n_steps {
            record(&z, i as f64 * dt_eff, &mut samples)?;
        }
    }
    Ok(Trajectory { samples })
}

/// Integrate the focusing flow from φ₀ up to cfg.t_final.
pub fn evolve(cfg: &SimConfig, phi0: &SpectralField) -> Result<Trajectory> {
    require_focusing(phi0)?;
    evolve_with_sign(cfg, phi0, 1.0)
}

/// Integrate the defocusing flow from defocusing-real data.
pub fn evolve_defocusing(cfg: &SimConfig, phi0: &SpectralField) -> Result<Trajectory> {
    let deviation = defocusing_deviation(phi0);
    if deviation > TRAJECTORY_REALITY_TOL * (1.0 + phi0.max_coeff()) {
        return Err(Error::NotDefocusingReal { deviation });
    }
    evolve_with_sign(cfg, phi0, -1.0)
}

/// Result of one dynamical growth-rate measurement.
#[derive(Clone, Debug)]
pub struct GrowthMeasurement {
    pub k: i64,
    pub c_mod: f64,
    pub eps: f64,
    /// Closed-form rate 4π|k|√(|c|² - π²k²).
    pub analytic: f64,
    /// Fitted slope of log |c_F| against t.
    pub measured: f64,
    pub rel_err: f64,
    /// Number of samples inside the fitting window.
    pub window_points: usize,
    /// Time span of the fitting window.
    pub t_window: (f64, f64),
}

/// Measure the instability rate of focus-focus mode k dynamically.
pub fn growth_rate(a: &Amplitude, k: i64, eps: f64, cfg: &SimConfig) -> Result<GrowthMeasurement> {
    a.require_regular()?;
    cfg.validate()?;
    if regime_of(k, a) != Regime::FocusFocus {
        return Err(Error::NotUnstable { k, c_mod: a.modulus() });
    }
    let max_eps = MAX_SEED_RATIO * a.modulus();
    if !(eps > 0.0) || eps > max_eps {
        return Err(Error::PerturbationTooLarge { eps, max: max_eps });
    }
    let k_max = cfg.k_max;
    let quad = darboux_quad(k.unsigned_abs() as usize, a, k_max)?;
    let seed = phi_c(a, k_max).add(&quad.alpha(k).scaled(Complex64::new(eps, 0.0)))?;
    let g_ref = eigenvector(-k, EigenKind::G, a, k_max)?;
    let analytic = eigenvector(k, EigenKind::F, a, k_max)?.lambda.re;

    let n_steps = ((cfg.t_final / cfg.dt).round() as usize).max(1);
    let dt_eff = cfg.t_final / n_steps as f64;
    let mut stepper = Stepper::new(k_max, cfg.n_grid, dt_eff, 1.0);
    let mut z = seed.z_slice().to_vec();
    let idx = |j: i64| (j + k_max as i64) as usize;
    let c2 = a.modulus() * a.modulus();
    let (gz, gw) = (g_ref.vec.z(-k), g_ref.vec.w(-k));
    let mut window: Vec<(f64, f64)> = Vec::new();
    // |c_F(0)| = eps/2; the window opens one decade above the seed.
    let lower = 10.0 * eps;
    for i in 1..=n_steps {
        stepper.step(&mut z);
        let t = i as f64 * dt_eff;
        if !z[k_max].re.is_finite() {
            return Err(Error::BlowUp { t });
        }
        // Deviation from the orbit in the rotating frame, at modes ±k only:
        // delta_1^k = e^{-2i|c|^2 t} z_k, delta_2^k = e^{+2i|c|^2 t} w_k.
        let rot = Complex64::from_polar(1.0, -2.0 * c2 * t);
        let d1 = rot * z[idx(k)];
        let d2 = rot.conj() * (-z[idx(-k)].conj());
        let cf = Complex64::new(0.0, -0.5) * (d1 * gw - gz * d2);
        let p = cf.norm();
        if p >= lower && p <= FIT_WINDOW_TOP {
            window.push((t, p.ln()));
        }
        if p > FIT_WINDOW_TOP {
            break;
        }
    }
    if window.len() < FIT_MIN_POINTS {
        return Err(Error::FitWindowTooSmall { points: window.len(), needed: FIT_MIN_POINTS });
    }
    let (slope, _) = fit_line(&window);
    let rel_err = (slope - analytic).abs() / analytic;
    Ok(GrowthMeasurement {
        k,
        c_mod: a.modulus(),
        eps,
        analytic,
        measured: slope,
        rel_err,
        window_points: window.len(),
        t_window: (window[0].0, window[window.len() - 1].0),
    })
}

/// Least-squares line through (x, y) pairs; returns (slope, intercept).
pub fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    (slope, (sy - slope * sx) / n)
}

/// ‖ Φ_T(S^θ φ₀) - S^θ(Φ_T φ₀) ‖: the flow and the gauge circle commute, so
/// the defect is pure integration error.
pub fn gauge_commutation_check(cfg: &SimConfig, phi0: &SpectralField, t_gauge: f64) -> Result<f64> {
    let rotated_first = evolve(cfg, &gauge_flow(phi0, t_gauge))?;
    let rotated_last = evolve(cfg, phi0)?;
    let lhs = &rotated_first.final_sample().field;
    let rhs = gauge_flow(&rotated_last.final_sample().field, t_gauge);
    lhs.distance(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonians::gamma_c;
    use crate::phase_space::{basis_vector, reality_class, BasisKind, RealityClass};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Steep decay: the cubic generated by the nonlinear substep must be
    // negligible beyond the truncation for the exact-conservation checks.
    fn random_focusing(k_max: usize, scale: f64, rng: &mut ChaCha8Rng) -> SpectralField {
        let mut f = SpectralField::zeros(k_max);
        for k in f.modes() {
            let decay = scale * (-(k.abs() as f64)).exp();
            f.set_z(k, c(rng.gen_range(-decay..decay), rng.gen_range(-decay..decay)))
                .unwrap();
        }
        for k in f.modes() {
            let zk = f.z(-k);
            f.set_w(k, -zk.conj()).unwrap();
        }
        f
    }

    #[test]
    fn constant_orbit_is_reproduced_exactly() {
        // Both substeps are exact on the constant state, so the only error
        // is round-off even over many steps.
        let a = Amplitude::from_modulus(1.0).unwrap();
        let phi0 = phi_c(&a, 16);
        let one = step(&phi0, 1e-3).unwrap();
        assert!(one.distance(&gamma_c(1e-3, &a, 16)).unwrap() < 1e-14);
        let mut cfg = SimConfig::for_amplitude(a);
        cfg.k_max = 16;
        cfg.n_grid = 128;
        cfg.dt = 1e-3;
        cfg.t_final = 0.1;
        cfg.sample_stride = 10;
        let traj = evolve(&cfg, &phi0).unwrap();
        let expect = gamma_c(0.1, &a, 16);
        assert!(traj.final_sample().field.distance(&expect).unwrap() < 1e-12);
    }

    #[test]
    fn steps_preserve_reality_and_h1() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let phi = random_focusing(12, 0.5, &mut rng);
        let next = step(&phi, 1e-3).unwrap();
        assert_eq!(reality_class(&next, 1e-13), RealityClass::FocusingReal);
        // H1 = -sum z_k w_{-k} = sum |z_k|^2 is exactly conserved by both substeps.
        let h1_before = crate::hamiltonians::eval_h1(&phi).re;
        let h1_after = crate::hamiltonians::eval_h1(&next).re;
        assert!((h1_before - h1_after).abs() < 1e-13 * (1.0 + h1_before.abs()));
    }

    #[test]
    fn step_rejects_non_real_data() {
        let xi = basis_vector(BasisKind::Xi, 1, 4).unwrap();
        assert!(matches!(step(&xi, 1e-3), Err(Error::NotFocusingReal { .. })));
        let ok = basis_vector(BasisKind::XiPrime, 1, 4).unwrap();
        assert!(matches!(step_defocusing(&ok, 1e-3), Err(Error::NotDefocusingReal { .. })));
    }

    #[test]
    fn step_commutes_with_gauge() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let phi = random_focusing(10, 0.4, &mut rng);
        let theta = 0.93;
        let lhs = step(&gauge_flow(&phi, theta), 1e-3).unwrap();
        let rhs = gauge_flow(&step(&phi, 1e-3).unwrap(), theta);
        assert!(lhs.distance(&rhs).unwrap() < 1e-13);
    }

    #[test]
    fn short_run_conserves_monitors() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let a = Amplitude::from_modulus(1.0).unwrap();
        let mut cfg = SimConfig::for_amplitude(a);
        cfg.k_max = 16;
        cfg.n_grid = 128;
        cfg.dt = 1e-3;
        cfg.t_final = 0.05;
        cfg.sample_stride = 5;
        let phi0 = phi_c(&a, 16).add(&random_focusing(16, 0.1, &mut rng)).unwrap();
        let traj = evolve(&cfg, &phi0).unwrap();
        assert!(traj.h1_drift() < 1e-12);
        // Strang drift is C dt^2 with C near 3 for this configuration.
        assert!(traj.h_drift() < 1e-5);
        // Sample times strictly increase.
        for pair in traj.samples.windows(2) {
            assert!(pair[1].t > pair[0].t);
        }
    }

    #[test]
    fn defocusing_constant_rotates_backwards() {
        let a = Amplitude::from_modulus(1.3).unwrap();
        let mut phi = SpectralField::zeros(8);
        phi.set_z(0, a.c()).unwrap();
        phi.set_w(0, a.c().conj()).unwrap();
        let dt = 1e-3;
        let next = step_defocusing(&phi, dt).unwrap();
        let expect = a.c() * Complex64::from_polar(1.0, -2.0 * a.modulus().powi(2) * dt);
        assert!((next.z(0) - expect).norm() < 1e-14);
        assert!((next.w(0) - expect.conj()).norm() < 1e-14);
    }

    #[test]
    fn overflow_is_reported_as_blow_up() {
        let a = Amplitude::from_modulus(1.0).unwrap();
        let mut cfg = SimConfig::for_amplitude(a);
        cfg.k_max = 4;
        cfg.n_grid = 32;
        cfg.dt = 1e-3;
        cfg.t_final = 3e-3;
        cfg.sample_stride = 1;
        let mut phi0 = SpectralField::zeros(4);
        phi0.set_z(0, c(1e200, 0.0)).unwrap();
        phi0.set_w(0, c(-1e200, 0.0)).unwrap();
        assert!(matches!(evolve(&cfg, &phi0), Err(Error::BlowUp { .. })));
    }

    #[test]
    fn growth_rate_validation() {
        let a = Amplitude::from_modulus(1.0).unwrap();
        let cfg = SimConfig::for_amplitude(a);
        // No focus-focus mode below the first threshold.
        assert!(matches!(
            growth_rate(&a, 1, 1e-7, &cfg),
            Err(Error::NotUnstable { k: 1, .. })
        ));
        let a4 = Amplitude::from_modulus(4.0).unwrap();
        let cfg4 = SimConfig::for_amplitude(a4);
        assert!(matches!(
            growth_rate(&a4, 1, 1e-3, &cfg4),
            Err(Error::PerturbationTooLarge { .. })
        ));
        assert!(matches!(
            growth_rate(&a4, 2, 1e-7, &cfg4),
            Err(Error::NotUnstable { k: 2, .. })
        ));
    }

    #[test]
    fn measured_rate_matches_closed_form() {
        let a = Amplitude::from_modulus(4.0).unwrap();
        let mut cfg = SimConfig::for_amplitude(a);
        cfg.k_max = 32;
        cfg.n_grid = 256;
        let m = growth_rate(&a, 1, 4e-6, &cfg).unwrap();
        assert!(m.rel_err < 0.02, "analytic {}, measured {}", m.analytic, m.measured);
        assert!(m.window_points >= FIT_MIN_POINTS);
        let expect = 4.0 * std::f64::consts::PI * (16.0 - std::f64::consts::PI.powi(2)).sqrt();
        assert!((m.analytic - expect).abs() < 1e-12);
    }

    #[test]
    fn fit_line_recovers_exact_lines() {
        let pts: Vec<(f64, f64)> = (0..20).map(|i| (i as f64, 3.5 * i as f64 - 2.0)).collect();
        let (slope, intercept) = fit_line(&pts);
        assert!((slope - 3.5).abs() < 1e-12);
        assert!((intercept + 2.0).abs() < 1e-11);
    }
}
