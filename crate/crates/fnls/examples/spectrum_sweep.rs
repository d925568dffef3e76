//! Closed-form spectrum of the linearization L_c as the amplitude sweeps
//! across the resonance thresholds |c| = π, 2π, 3π, ...
//!
//! L_c decouples over the mode pairs (z_k, w_{-k}) into 2×2 blocks with
//! entries built from a_k = 4π²k² - 2|c|² and b = 2|c|². The block at k is
//!
//!   focus-focus for 0 < π|k| < |c|:  λ_k = ±4π|k|√(|c|² - π²k²)  (real pair)
//!   center      for π|k| > |c|:      λ_k = ±4πi|k|√(π²k² - |c|²) (imaginary)
//!   Jordan      at k = 0:            λ = 0 twice, one nilpotent block
//!
//! so each threshold crossing converts one oscillatory pair into an
//! exponential one. The example prints the sweep, verifies the assembled
//! operator against the formulas block by block, and checks the eigenvector
//! residuals and the rotation that reduces a complex amplitude to its
//! modulus.

use std::f64::consts::PI;

use num_complex::Complex64;

use fnls::hamiltonians::Amplitude;
use fnls::linearization::{
    apply_lc, apply_lc_at, eigen_residual, eigenvector, regime_of, spectrum_analytic,
    truncated_operator_check, EigenKind,
};
use fnls::phase_space::basis_vector;
use fnls::phase_space::BasisKind;

fn main() -> fnls::Result<()> {
    println!("== instability count along the amplitude axis ==");
    println!("  |c|      unstable pairs   first few regimes (k = 1, 2, 3, 4)");
    for c_mod in [0.5, 2.0, 3.5, 6.0, 9.3, 9.5, 12.8] {
        let a = Amplitude::from_modulus(c_mod)?;
        let lines = spectrum_analytic(&a, 16)?;
        let unstable = lines.iter().filter(|l| l.k > 0 && l.lambda.re > 0.0).count();
        let tags: Vec<String> =
            (1..=4).map(|k| format!("{}", regime_of(k, &a)).chars().take(2).collect()).collect();
        println!("  {c_mod:>5.2}    {unstable:^14}   {}", tags.join(" "));
        // Exactly ⌈|c|/π⌉ - 1 thresholds lie below |c|.
        assert_eq!(unstable, (c_mod / PI).ceil() as usize - 1);
    }

    let a = Amplitude::from_modulus(4.0)?;
    println!("\n== spectrum at |c| = 4 ==");
    println!("  k    λ_k                       regime");
    for l in spectrum_analytic(&a, 4)? {
        if l.k < 0 {
            continue;
        }
        println!("  {:>2}   {:>+11.6} {:+11.6}i   {}", l.k, l.lambda.re, l.lambda.im, l.regime);
    }
    let l1 = spectrum_analytic(&a, 4)?.iter().find(|l| l.k == 1).unwrap().lambda;
    let expect = 4.0 * PI * (16.0 - PI * PI).sqrt();
    println!("  closed form at k = 1: 4π√(16 - π²) = {expect:.12}");
    assert!((l1.re - expect).abs() < 1e-12 * expect);

    println!("\n== assembled operator vs closed form ==");
    for c_mod in [1.0, 4.0, 10.0] {
        let a = Amplitude::from_modulus(c_mod)?;
        let check = truncated_operator_check(&a, 32)?;
        println!(
            "  |c| = {c_mod:>4}: max relative eigenvalue deviation {:.2e}, max cross-block coupling {:.2e}",
            check.max_rel_deviation, check.max_coupling
        );
        println!(
            "             {} unstable pairs, {} center pairs",
            check.positive_real_count, check.center_count
        );
        assert!(check.max_rel_deviation < 1e-12);
        assert!(check.max_coupling < 1e-13);
    }

    println!("\n== eigenvector residuals ‖L_c v - λv‖ / |λ| ==");
    let a = Amplitude::from_modulus(4.0)?;
    for (k, kind) in [(1, EigenKind::F), (1, EigenKind::G), (-3, EigenKind::F), (5, EigenKind::G)]
    {
        let pair = eigenvector(k, kind, &a, 16)?;
        let res = eigen_residual(&pair, &a) / pair.lambda.norm();
        println!(
            "  k = {k:>2} {kind:?}: λ = {:>+10.4} {:+10.4}i, residual {:.2e}",
            pair.lambda.re, pair.lambda.im, res
        );
        assert!(res < 1e-13);
    }

    println!("\n== rotating a complex amplitude to its modulus ==");
    // S^t ∘ L_c = L_|c| ∘ S^t at t = -arg(c): the spectrum only sees |c|.
    let c = Complex64::from_polar(4.0, 0.77);
    let t = -c.arg();
    let v = basis_vector(BasisKind::XiPrime, 2, 8)?.add(&basis_vector(BasisKind::EtaPrime, 1, 8)?)?;
    let lhs = fnls::hamiltonians::gauge_flow(&apply_lc_at(&v, c), t);
    let rhs = apply_lc(&fnls::hamiltonians::gauge_flow(&v, t), &Amplitude::from_modulus(4.0)?);
    println!("  ‖S^t L_c v - L_|c| S^t v‖ = {:.3e}", lhs.distance(&rhs)?);
    assert!(lhs.distance(&rhs)? < 1e-12);

    // The excluded set is a genuine refusal, not a silent wrong answer.
    let at_pi = Amplitude::from_modulus(PI);
    match at_pi {
        Err(e) => println!("  |c| = π: {e}"),
        Ok(a) => {
            assert!(a.excluded());
            println!("  |c| = π flagged excluded: {}", a.excluded());
        }
    }

    println!("\nall identities hold");
    Ok(())
}
