//! Where the plane wave fails to be orbitally stable, and why.
//!
//! The verdict is a one-line function of the amplitude: |c| < π leaves every
//! nonzero mode oscillatory and there is no obstruction; each threshold
//! |c| = kπ crossed converts one mode pair into a real eigenvalue pair and
//! the wave is obstructed; on the thresholds themselves the 2×2 block
//! degenerates and the construction refuses a verdict rather than guessing
//! through a vanishing denominator.
//!
//! The k = 0 Jordan block is always present. It is not an instability: it is
//! the shadow of the gauge symmetry, the direction along the orbit paired
//! with the direction that changes |c|. The miniature reduced operator at
//! the end shows the same skeleton in isolation: one nilpotent cell from the
//! gauge direction and one rotation cell per center frequency, so its whole
//! spectrum is a double zero plus imaginary pairs.

use std::f64::consts::PI;

use fnls::hamiltonians::Amplitude;
use fnls::obstruction::{
    classify, ltilde_structure_demo, obstruction_report, Verdict, VERDICT_WINDOW,
};

fn main() -> fnls::Result<()> {
    println!("== verdict sweep ==");
    println!("  |c|        real pairs   verdict");
    let mut last = Verdict::NoObstruction;
    let mut flips = Vec::new();
    for i in 0..=130 {
        let c_mod = 0.1 * i as f64 + 0.05;
        let a = Amplitude::from_modulus(c_mod)?;
        let r = obstruction_report(&a, 64);
        if r.verdict != last {
            flips.push(c_mod);
            last = r.verdict;
        }
        if i % 13 == 0 {
            println!("  {c_mod:>6.2}     {:^10}   {:?}", r.real_pairs, r.verdict);
        }
    }
    println!("  verdict changed near: {flips:.2?}");
    println!("  thresholds π, 2π, 3π, 4π: [{:.2}, {:.2}, {:.2}, {:.2}]", PI, 2.0 * PI, 3.0 * PI, 4.0 * PI);
    assert_eq!(flips.len(), 1);
    assert!((flips[0] - PI).abs() < 0.1);

    println!("\n== counts at the reference amplitudes ==");
    for c_mod in [1.0, 4.0, 7.0, 10.0] {
        let a = Amplitude::from_modulus(c_mod)?;
        let r = obstruction_report(&a, 32);
        println!(
            "  |c| = {c_mod:>4}: {:?}, {} real pairs, {} center pairs below K, Jordan at 0: {}",
            r.verdict, r.real_pairs, r.imaginary_pairs_reported, r.jordan_at_zero
        );
        let expected = (c_mod / PI).ceil() as usize - 1;
        assert_eq!(r.real_pairs, expected);
        assert_eq!(
            r.verdict,
            if expected == 0 { Verdict::NoObstruction } else { Verdict::Obstructed }
        );
    }

    println!("\n== the excluded thresholds ==");
    // classify never refuses; it tags the degenerate mode instead.
    let a = Amplitude::from_modulus(2.0 * PI)?;
    println!("  at |c| = 2π (window {VERDICT_WINDOW:.0e}):");
    for l in classify(&a, 3) {
        println!("    k = {}: λ = {:+.4} {:+.4}i  {}", l.k, l.lambda.re, l.lambda.im, l.regime);
    }
    let r = obstruction_report(&a, 16);
    println!("  verdict: {:?}", r.verdict);
    assert_eq!(r.verdict, Verdict::Excluded);
    // A hair away from the threshold the verdict is decisive again.
    let near = Amplitude::from_modulus(2.0 * PI + 1e-6)?;
    assert_eq!(obstruction_report(&near, 16).verdict, Verdict::Obstructed);
    println!("  at |c| = 2π + 1e-6: {:?}", obstruction_report(&near, 16).verdict);

    println!("\n== miniature reduced operator ==");
    // One nilpotent cell, then a rotation cell per center frequency.
    let demo = ltilde_structure_demo(4, &[3.0, 2.0, 1.0])?;
    println!("  {} modes, matrix {}×{}:", demo.n_modes, demo.matrix.len(), demo.matrix.len());
    for row in &demo.matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>+8.3}")).collect();
        println!("    [{}]", cells.join(" "));
    }
    let mut eigs: Vec<_> = demo.spectrum.clone();
    eigs.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
    print!("  spectrum:");
    for e in &eigs {
        print!(" {:+.3}{:+.3}i", e.re, e.im);
    }
    println!();
    let zeros = eigs.iter().filter(|e| e.norm() < 1e-12).count();
    println!("  double zero from the Jordan block: {zeros} zero eigenvalues");
    assert_eq!(zeros, 2);
    // Eigenvalues come in ± pairs.
    for e in &eigs {
        assert!(eigs.iter().any(|f| (*f + e).norm() < 1e-10));
    }

    println!("\nall identities hold");
    Ok(())
}
