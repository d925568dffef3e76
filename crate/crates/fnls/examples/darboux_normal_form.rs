//! Darboux coordinates that put the linearization into block normal form.
//!
//! Out of the eigenvector families F_k, G_k the construction assembles, cell
//! by cell, real vectors α_j, β_j on the focusing slice with
//!
//!   ω(α_i, β_j) = δ_{ij},   ω(α_i, α_j) = ω(β_i, β_j) = 0,
//!
//! and in the coordinates p_j = ω(φ, β_j), q_j = -ω(φ, α_j) the operator
//! becomes its normal block: a nilpotent 2×2 at k = 0, a hyperbolic
//! diag(λ, -λ, λ, -λ) on a focus-focus cell, two harmonic rotation blocks on
//! a center cell. The quadratic energy then collapses to
//!
//!   Q = 4|c|² p₀² - Σ_ff 8πk√(|c|²-π²k²)(p_k q_k + p_{-k} q_{-k})
//!              - Σ_center 4π|k|√(π²k²-|c|²)(p_k² + q_k²),
//!
//! with the focus integrals I_k conserved by the linear flow. High modes
//! flatten out: α_k approaches the unperturbed basis vector ξ'_k at rate
//! k⁻², which is what makes the coordinate change bounded.

use num_complex::Complex64;

use fnls::hamiltonians::Amplitude;
use fnls::normal_form::{
    darboux_quad, expand, focus_integrals, hessian_direct, hessian_normal, normal_block,
    synthesize, verify_normal_block,
};
use fnls::phase_space::{basis_vector, BasisKind, SpectralField};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sample_field(k_max: usize) -> SpectralField {
    let mut f = SpectralField::zeros(k_max);
    for k in -(k_max as i64)..=(k_max as i64) {
        let t = k as f64;
        let env = (-0.6 * t.abs()).exp();
        f.set_z(k, c(env * (0.8 * t + 0.4).cos(), env * (1.3 * t - 0.1).sin())).unwrap();
    }
    for k in -(k_max as i64)..=(k_max as i64) {
        let zc = f.z(-k).conj();
        f.set_w(k, -zc).unwrap();
    }
    f
}

fn main() -> fnls::Result<()> {
    let a = Amplitude::from_modulus(4.0)?;
    let k_max = 16;

    println!("== cells and their symplectic Gram errors, |c| = 4 ==");
    for k in 0..=4 {
        let quad = darboux_quad(k, &a, k_max)?;
        println!(
            "  cell {k}: regime {:<10} {} vectors, gram error {:.2e}",
            format!("{}", quad.regime),
            quad.vectors.len(),
            quad.gram_error()
        );
        assert!(quad.gram_error() < 1e-13);
    }

    println!("\n== normal blocks ==");
    for k in [0usize, 1, 2] {
        let block = normal_block(k, &a)?;
        println!("  k = {k} ({}):", block.regime);
        for row in &block.matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>+12.4}")).collect();
            println!("    [{}]", cells.join(" "));
        }
        let dev = verify_normal_block(k, &a, k_max)?;
        println!("    measured deviation of L_c in these coordinates: {dev:.2e}");
        assert!(dev < 1e-12);
    }

    println!("\n== round trip through Birkhoff coordinates ==");
    let phi = sample_field(k_max);
    let pt = expand(&phi, &a)?;
    let back = synthesize(&pt, &a)?;
    println!("  ‖synthesize(expand(φ)) - φ‖ = {:.3e}", back.distance(&phi)?);
    assert!(back.distance(&phi)? < 1e-10);

    println!("\n== quadratic energy in normal coordinates ==");
    // Polarization: Q(u+v) - Q(u) - Q(v) = 2 B(u, v) computed both ways.
    let u = sample_field(k_max);
    let v = basis_vector(BasisKind::XiPrime, 1, k_max)?
        .add(&basis_vector(BasisKind::EtaPrime, 3, k_max)?)?;
    let direct = hessian_direct(&u, &v, &a)?;
    let q = |f: &SpectralField| -> fnls::Result<f64> { hessian_normal(&expand(f, &a)?, &a) };
    let through_normal = 0.5 * (q(&u.add(&v)?)? - q(&u)? - q(&v)?);
    println!("  B(u,v) direct              = {direct:+.12}");
    println!("  B(u,v) via normal form     = {through_normal:+.12}");
    assert!((direct - through_normal).abs() < 1e-9 * (1.0 + direct.abs()));

    println!("\n== focus integrals of the expansion ==");
    let ints = focus_integrals(&pt, &a)?;
    for k in 0..=3i64 {
        println!("  I_{k} = {:+.6e}", ints.i(k));
    }
    // The hyperbolic cell also carries the cross integral at -k.
    println!("  I_-1 = {:+.6e}  (cross invariant of the k = 1 hyperbolic cell)", ints.i(-1));

    println!("\n== flattening of the coordinate change ==");
    println!("  k² ‖α_k - ξ'_k‖ stays bounded:");
    let wide = 64;
    for k in [4i64, 8, 16, 32] {
        let quad = darboux_quad(k as usize, &a, wide)?;
        let xi = basis_vector(BasisKind::XiPrime, k, wide)?;
        let diff = quad.alpha(k).sub(&xi)?.norm();
        println!("    k = {k:>2}: k²‖α_k - ξ'_k‖ = {:.6}", (k * k) as f64 * diff);
    }
    let d16 = darboux_quad(16, &a, wide)?.alpha(16).sub(&basis_vector(BasisKind::XiPrime, 16, wide)?)?.norm();
    let d32 = darboux_quad(32, &a, wide)?.alpha(32).sub(&basis_vector(BasisKind::XiPrime, 32, wide)?)?.norm();
    let order = (d16 / d32).log2() / (32.0f64 / 16.0).log2();
    println!("  measured decay order between k = 16 and 32: {order:.3} (expect 2)");
    assert!((order - 2.0).abs() < 0.2);

    println!("\nall identities hold");
    Ok(())
}
