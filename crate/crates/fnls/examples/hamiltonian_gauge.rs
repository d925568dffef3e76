//! The energy hierarchy on the plane-wave orbit: H, H₁, H₂, the reduced
//! energy H_c, and the two symmetries that organize them.
//!
//! The flow conserves
//!
//!   H  = Σ 4π²k² z_k w_{-k} + ∫ φ₁²φ₂²,   H₁ = -Σ z_k w_{-k},
//!   H₂ = Σ 2πk z_k w_{-k},
//!
//! and the plane wave γ_c(t) = (c e^{2i|c|²t}, -c̄ e^{-2i|c|²t}) is a relative
//! equilibrium: the full vector field there is a multiple of the gauge field,
//! X_H(φ_c) = 2|c|² X_{H₁}(φ_c), so the reduced energy H_c = H - 2|c|² H₁ has
//! a genuine critical point at φ_c. The gauge flow S^t and the twist τ_m are
//! both symplectic; the twist shears the hierarchy by
//!
//!   H ∘ τ_m = H + 4πm H₂ - 4π²m² H₁.

use num_complex::Complex64;

use fnls::hamiltonians::{
    eval_h, eval_h1, eval_h2, eval_hc, field_x_h, field_x_h1, field_x_hc, gamma_c, gauge_flow,
    gauge_period, phi_c, tau_twist, Amplitude,
};
use fnls::phase_space::{basis_vector, omega, BasisKind, SpectralField};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Focusing-real sample supported on |k| ≤ band inside truncation k_max.
fn sample_field(k_max: usize, band: i64) -> SpectralField {
    let mut f = SpectralField::zeros(k_max);
    for k in -band..=band {
        let t = k as f64;
        let env = (-0.5 * t.abs()).exp();
        f.set_z(k, c(env * (0.9 * t + 0.2).cos(), env * (1.1 * t).sin())).unwrap();
    }
    for k in -band..=band {
        let zc = f.z(-k).conj();
        f.set_w(k, -zc).unwrap();
    }
    f
}

fn main() -> fnls::Result<()> {
    let k_max = 12;
    let a = Amplitude::new(c(2.0, 0.0))?;
    let pw = phi_c(&a, k_max);

    println!("== energies on the plane wave, |c| = {} ==", a.modulus());
    let h = eval_h(&pw);
    let h1 = eval_h1(&pw);
    let h2 = eval_h2(&pw);
    let hc = eval_hc(&pw, &a);
    println!("  H   = {:+.12}   (|c|⁴ = {})", h.re, a.modulus().powi(4));
    println!("  H₁  = {:+.12}   (|c|² = {})", h1.re, a.modulus().powi(2));
    println!("  H₂  = {:+.12}", h2.re);
    println!("  H_c = {:+.12}   (H - 2|c|²H₁)", hc.re);
    assert!((h.re - 16.0).abs() < 1e-12);
    assert!((h1.re - 4.0).abs() < 1e-13);
    assert!(h2.norm() < 1e-13);
    assert!((hc.re + 16.0).abs() < 1e-12);

    println!("\n== relative equilibrium ==");
    let xh = field_x_h(&pw);
    let gauge = field_x_h1(&pw).scaled(c(2.0 * a.modulus().powi(2), 0.0));
    println!("  ‖X_H(φ_c) - 2|c|² X_H₁(φ_c)‖ = {:.3e}", xh.distance(&gauge)?);
    assert!(xh.distance(&gauge)? < 1e-12);
    let xhc = field_x_hc(&pw, &a);
    println!("  ‖X_Hc(φ_c)‖ = {:.3e}  (critical point of the reduced energy)", xhc.norm());
    assert!(xhc.norm() < 1e-12);

    let period = gauge_period(&a);
    println!("\n== orbit period ==");
    println!("  π/|c|² = {period:.12}");
    let back = gamma_c(period, &a, k_max);
    println!("  ‖γ_c(π/|c|²) - φ_c‖ = {:.3e}", back.distance(&pw)?);
    assert!(back.distance(&pw)? < 1e-14);

    println!("\n== gauge flow is symplectic and conserves every energy ==");
    // Band 8 inside K = 12 leaves room for the twists below to shift modes.
    let f = sample_field(k_max, 8);
    let g = basis_vector(BasisKind::EtaPrime, 2, k_max)?.add(&sample_field(k_max, 8))?;
    let t = 0.83;
    let sf = gauge_flow(&f, t);
    let sg = gauge_flow(&g, t);
    let before = omega(&f, &g)?;
    let after = omega(&sf, &sg)?;
    println!("  |ω(S^t f, S^t g) - ω(f, g)| = {:.3e}", (after - before).norm());
    assert!((after - before).norm() < 1e-13);
    for (name, before, after) in [
        ("H ", eval_h(&f), eval_h(&sf)),
        ("H₁", eval_h1(&f), eval_h1(&sf)),
        ("H₂", eval_h2(&f), eval_h2(&sf)),
    ] {
        println!("  {name}: drift under S^t = {:.3e}", (after - before).norm());
        assert!((after - before).norm() < 1e-12 * (1.0 + before.norm()));
    }

    println!("\n== twist shear ==");
    println!("  H(τ_m f) against H + 4πm H₂ - 4π²m² H₁:");
    let (h0, h10, h20) = (eval_h(&f), eval_h1(&f), eval_h2(&f));
    for m in [-2i64, 1, 3] {
        let tf = tau_twist(&f, m)?;
        let lhs = eval_h(&tf);
        let mf = m as f64;
        let rhs = h0 + 4.0 * std::f64::consts::PI * mf * h20
            - 4.0 * std::f64::consts::PI.powi(2) * mf * mf * h10;
        println!("    m = {m:+}: |lhs - rhs| = {:.3e}", (lhs - rhs).norm());
        assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
        // The twist also preserves ω.
        let wt = omega(&tau_twist(&f, m)?, &tau_twist(&g, m)?)?;
        assert!((wt - before).norm() < 1e-12);
    }

    println!("\nall identities hold");
    Ok(())
}
