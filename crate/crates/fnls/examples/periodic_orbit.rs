//! Integrating the plane-wave orbit: exactness, conservation, gauge
//! equivariance, and the second-order convergence of the splitting.
//!
//! The integrator is a Strang splitting: a half step of the linear flow
//! (an exact phase rotation e^{-4iπ²k²dt/2} per mode), a full step of the
//! nonlinear flow (an exact pointwise rotation e^{2i|u|²dt} on the grid),
//! and another linear half step. The nominal dt is trimmed so an integer
//! number of steps lands exactly on T.
//!
//! On the plane wave both substeps are individually exact, so the orbit
//! γ_c(t) is reproduced to round-off for any dt. The dt² error budget only
//! shows up once the substeps stop commuting, i.e. on perturbed data; there
//! halving dt must cut the self-difference by 4. Conservation splits the
//! same way: H₁ is conserved exactly by construction, H drifts at O(dt²).

use num_complex::Complex64;

use fnls::hamiltonians::{gamma_c, gauge_period, phi_c, Amplitude};
use fnls::normal_form::darboux_quad;
use fnls::phase_space::SpectralField;
use fnls::simulator::{evolve, gauge_commutation_check, SimConfig};

fn cfg(a: Amplitude, t_final: f64, dt: f64) -> SimConfig {
    let mut cfg = SimConfig::for_amplitude(a);
    cfg.k_max = 16;
    cfg.n_grid = 128;
    cfg.dt = dt;
    cfg.t_final = t_final;
    cfg.sample_stride = 1000;
    cfg
}

/// The plane wave plus a small disturbance spread over the low cells.
fn perturbed_start(a: &Amplitude, k_max: usize) -> fnls::Result<SpectralField> {
    let q0 = darboux_quad(0, a, k_max)?;
    let q1 = darboux_quad(1, a, k_max)?;
    let q2 = darboux_quad(2, a, k_max)?;
    let re = |x: f64| Complex64::new(x, 0.0);
    phi_c(a, k_max)
        .add(&q1.alpha(1).scaled(re(0.05)))?
        .add(&q2.beta(-2).scaled(re(0.03)))?
        .add(&q0.alpha(0).scaled(re(0.02)))
}

fn main() -> fnls::Result<()> {
    let a = Amplitude::from_modulus(4.0)?;
    let period = gauge_period(&a);
    println!("== one period of the plane-wave orbit, |c| = 4 ==");
    println!("  period π/|c|² = {period:.12}");

    let traj = evolve(&cfg(a, period, 1e-4), &phi_c(&a, 16))?;
    let end = traj.final_sample();
    let back = end.field.distance(&phi_c(&a, 16))?;
    println!("  return distance after one period: {back:.3e}");
    println!("  midpoint check against γ_c(t):");
    for s in traj.samples.iter() {
        let exact = gamma_c(s.t, &a, 16);
        println!("    t = {:<8.5} ‖φ(t) - γ_c(t)‖ = {:.3e}", s.t, s.field.distance(&exact)?);
        assert!(s.field.distance(&exact)? < 1e-11);
    }
    assert!(back < 1e-11);

    println!("\n== conservation on a perturbed start ==");
    let phi0 = perturbed_start(&a, 16)?;
    let traj = evolve(&cfg(a, 0.5, 1e-4), &phi0)?;
    println!("  relative H₁ drift: {:.3e}  (exact by construction)", traj.h1_drift());
    println!("  relative H  drift: {:.3e}  (O(dt²) splitting error)", traj.h_drift());
    assert!(traj.h1_drift() < 1e-11);
    assert!(traj.h_drift() < 1e-5);

    println!("\n== second-order self-convergence ==");
    let run = |dt: f64| -> fnls::Result<SpectralField> {
        Ok(evolve(&cfg(a, 0.25, dt), &phi0)?.final_sample().field.clone())
    };
    let coarse = run(2e-3)?;
    let medium = run(1e-3)?;
    let fine = run(5e-4)?;
    let d1 = coarse.distance(&medium)?;
    let d2 = medium.distance(&fine)?;
    println!("  ‖φ_dt - φ_dt/2‖   = {d1:.6e}   (dt = 2e-3)");
    println!("  ‖φ_dt/2 - φ_dt/4‖ = {d2:.6e}");
    println!("  ratio = {:.3}  (4 means order 2)", d1 / d2);
    assert!((d1 / d2 - 4.0).abs() < 1.0);

    println!("\n== the flow commutes with the gauge action ==");
    for t_gauge in [0.7, -1.3] {
        let dev = gauge_commutation_check(&cfg(a, 0.3, 1e-3), &phi0, t_gauge)?;
        println!("  ‖Φ_T(S^t φ) - S^t Φ_T(φ)‖ = {dev:.3e}  at t = {t_gauge}");
        assert!(dev < 1e-9);
    }

    println!("\nall claims verified");
    Ok(())
}
