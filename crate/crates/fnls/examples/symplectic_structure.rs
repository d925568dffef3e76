//! Tour of the phase space: truncated fields, the symplectic form, and the
//! reality slices.
//!
//! The state is a pair φ = (φ₁, φ₂) of trigonometric polynomials on the unit
//! torus, stored mode by mode as (z_k, w_k) for k = -K..K. The symplectic
//! form is
//!
//!   ω(f, g) = -i Σ_k (f₁ᵏ g₂⁻ᵏ - g₁ᵏ f₂⁻ᵏ),
//!
//! and the involution σ swaps the components with conjugation so that its
//! fixed slice w_k = -conj(z_{-k}) carries the focusing flow. The primed
//! basis ξ'_k, η'_k lives on that slice and is canonical: ω(ξ'_k, η'_l) =
//! δ_{kl}. This example builds all of it and checks the identities at
//! machine precision.

use num_complex::Complex64;

use fnls::phase_space::{
    basis_vector, l2_inner, omega, pairing, reality_class, sigma, to_grid, BasisKind,
    RealityClass, SpectralField, DEFAULT_REALITY_TOL,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A deterministic focusing-real field with a smooth spectral envelope.
fn sample_field(k_max: usize) -> SpectralField {
    let mut f = SpectralField::zeros(k_max);
    for k in -(k_max as i64)..=(k_max as i64) {
        let t = k as f64;
        let env = (-0.4 * t.abs()).exp();
        f.set_z(k, c(env * (1.3 * t).cos(), env * (0.7 * t).sin())).unwrap();
    }
    for k in -(k_max as i64)..=(k_max as i64) {
        let zc = f.z(-k).conj();
        f.set_w(k, -zc).unwrap();
    }
    f
}

fn main() -> fnls::Result<()> {
    let k_max = 8;

    println!("== canonical pairs ==");
    println!("ω(ξ'_k, η'_l) over k, l = 0..4 (should be the identity):");
    for k in 0..=4 {
        let xi = basis_vector(BasisKind::XiPrime, k, k_max)?;
        print!("  k={k}:");
        for l in 0..=4 {
            let eta = basis_vector(BasisKind::EtaPrime, l, k_max)?;
            let w = omega(&xi, &eta)?;
            print!(" {:+.1e}", w.re);
            let expect = if k == l { 1.0 } else { 0.0 };
            assert!((w - c(expect, 0.0)).norm() < 1e-14);
        }
        println!();
    }

    println!("\n== unprimed pairing ==");
    println!("ω couples ξ_k with η_(-k), value -i:");
    for k in [-3i64, 0, 2] {
        let xi = basis_vector(BasisKind::Xi, k, k_max)?;
        let eta = basis_vector(BasisKind::Eta, -k, k_max)?;
        let w = omega(&xi, &eta)?;
        println!("  ω(ξ_{k}, η_{}) = {:+.3} {:+.3}i", -k, w.re, w.im);
        assert!((w - c(0.0, -1.0)).norm() < 1e-14);
    }

    println!("\n== antisymmetry and the involution ==");
    let f = sample_field(k_max);
    let g = sigma(&basis_vector(BasisKind::XiPrime, 3, k_max)?);
    let wfg = omega(&f, &g)?;
    let wgf = omega(&g, &f)?;
    println!("  ω(f, g) = {:+.6} {:+.6}i", wfg.re, wfg.im);
    println!("  ω(g, f) = {:+.6} {:+.6}i", wgf.re, wgf.im);
    assert!((wfg + wgf).norm() < 1e-13);

    let ff = sigma(&sigma(&f));
    println!("  ‖σ²f - f‖ = {:.3e}", ff.distance(&f)?);
    assert!(ff.distance(&f)? < 1e-15);

    println!("\n== reality slices ==");
    let class = reality_class(&f, DEFAULT_REALITY_TOL);
    println!("  sample field class: {class:?}");
    assert_eq!(class, RealityClass::FocusingReal);
    // σ fixes the focusing slice pointwise.
    assert!(sigma(&f).distance(&f)? < 1e-15);
    // ω is real there, so it restricts to a genuine real symplectic form.
    let h = sample_field(k_max).scaled(c(0.3, 0.0));
    let g2 = basis_vector(BasisKind::EtaPrime, 2, k_max)?;
    let w = omega(&h, &g2)?;
    println!("  ω on the slice: {:+.6} {:+.3e}i (imaginary part vanishes)", w.re, w.im);
    assert!(w.im.abs() < 1e-13);

    println!("\n== spectral pairing vs grid quadrature ==");
    // ⟨f, g⟩ = Σ f₁ᵏg₁⁻ᵏ + f₂ᵏg₂⁻ᵏ equals ∫ f₁g₁ + f₂g₂ dx once the grid
    // resolves the product, n ≥ 2(2K+1).
    let fq = sample_field(k_max);
    let gq = sigma(&basis_vector(BasisKind::Xi, 2, k_max)?.add(&fq.scaled(c(0.11, 0.0)))?);
    let spectral = pairing(&fq, &gq)?;
    let n = 4 * (2 * k_max + 1);
    let fg = to_grid(&fq, n)?;
    let gg = to_grid(&gq, n)?;
    let mut quad = c(0.0, 0.0);
    for i in 0..n {
        quad += fg.phi1[i] * gg.phi1[i] + fg.phi2[i] * gg.phi2[i];
    }
    quad /= n as f64;
    println!("  pairing  = {:+.12} {:+.12}i", spectral.re, spectral.im);
    println!("  quadrature = {:+.12} {:+.12}i", quad.re, quad.im);
    assert!((spectral - quad).norm() < 1e-13);

    // The Hermitian product is the one that gives the norm.
    let ip = l2_inner(&fq, &fq)?;
    println!("  ⟨f, f⟩ = {:.12} vs ‖f‖² = {:.12}", ip.re, fq.norm().powi(2));
    assert!((ip.re - fq.norm().powi(2)).abs() < 1e-12 * ip.re);
    assert!(ip.im.abs() < 1e-14);

    println!("\nall identities hold");
    Ok(())
}
