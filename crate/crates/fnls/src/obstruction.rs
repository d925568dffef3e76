//! The spectral obstruction to Birkhoff normal forms at large amplitude.
//!
//! Below the first threshold (|c| < π) every nonzero mode is a center and
//! nothing obstructs a formal normal form. Once |c| > π with |c| ∉ πZ, the
//! modes 0 < π|k| < |c| turn focus-focus: their real eigenvalue pairs
//! ±λ_k destroy the nonresonance structure a classical Birkhoff scheme
//! needs, which is the obstruction this crate reports. On the excluded set
//! |c| ∈ πZ a mode sits exactly at the transition and no verdict is issued.
//!
//! `ltilde_structure_demo` exhibits the miniature reduced operator shape
//! appearing after the resonant reduction at k = 0: one rank-one nilpotent
//! cell spanned by the Jordan direction coupled to nothing, plus one rigid
//! rotation cell per retained center mode. Its spectrum, two zeros and the
//! pairs ±iB_n, is computed blockwise by the quadratic formula.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hamiltonians::Amplitude;
use crate::linearization::{regime_of, Regime, SpectrumLine};

const PI: f64 = std::f64::consts::PI;

/// Half-width of the reporting window around πZ.
pub const VERDICT_WINDOW: f64 = 1e-9;

/// Largest mode count accepted by the reduced-operator demo.
pub const DEMO_MODE_LIMIT: usize = 8;

/// Outcome of the obstruction analysis at a given amplitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// |c| < π: all modes oscillate, no obstruction.
    NoObstruction,
    /// |c| > π, |c| ∉ πZ: at least one focus-focus pair exists.
    Obstructed,
    /// |c| within the window around πZ: transition point, no verdict.
    Excluded,
}

/// Mode-by-mode counts and the verdict at one amplitude.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub c_mod: f64,
    #[serde(rename = "K")]
    pub k_max: usize,
    /// Number of k > 0 modes with a real eigenvalue pair (focus-focus).
    pub real_pairs: usize,
    /// Number of k > 0 modes with an imaginary pair inside the truncation.
    pub imaginary_pairs_reported: usize,
    /// The k = 0 Jordan block is always present.
    pub jordan_at_zero: bool,
    pub verdict: Verdict,
}

/// The reduced-operator demo: matrix, blockwise spectrum, mode count.
#[derive(Clone, Debug)]
pub struct LtildeDemo {
    pub n_modes: usize,
    pub matrix: Vec<Vec<f64>>,
    pub spectrum: Vec<Complex64>,
}

/// Closed-form classification of modes k = 0..K at an amplitude.
///
/// Unlike `spectrum_analytic` this never refuses: on the excluded set the
/// transitioning mode is tagged `Excluded` with λ = 0.
pub fn classify(a: &Amplitude, k_max: usize) -> Vec<SpectrumLine> {
    let c2 = a.modulus() * a.modulus();
    (0..=k_max as i64)
        .map(|k| {
            let regime = regime_of(k, a);
            let disc = c2 - (PI * k as f64).powi(2);
            let lambda = match regime {
                Regime::Jordan | Regime::Excluded => Complex64::new(0.0, 0.0),
                Regime::FocusFocus => Complex64::new(4.0 * PI * k as f64 * disc.sqrt(), 0.0),
                Regime::Center => Complex64::new(0.0, 4.0 * PI * k as f64 * (-disc).sqrt()),
            };
            SpectrumLine { k, lambda, regime }
        })
        .collect()
}

/// Count regimes inside the truncation and issue the verdict.
pub fn obstruction_report(a: &Amplitude, k_max: usize) -> ObstructionReport {
    let c_mod = a.modulus();
    let nearest = (c_mod / PI).round();
    let excluded = nearest >= 1.0 && (c_mod - nearest * PI).abs() <= VERDICT_WINDOW;
    let mut real_pairs = 0;
    let mut imag_pairs = 0;
    for line in classify(a, k_max).iter().skip(1) {
        match line.regime {
            Regime::FocusFocus => real_pairs += 1,
            Regime::Center => imag_pairs += 1,
            _ => {}
        }
    }
    let verdict = if excluded {
        Verdict::Excluded
    } else if real_pairs > 0 {
        Verdict::Obstructed
    } else {
        Verdict::NoObstruction
    };
    ObstructionReport {
        c_mod,
        k_max,
        real_pairs,
        imaginary_pairs_reported: imag_pairs,
        jordan_at_zero: true,
        verdict,
    }
}

/// Build the miniature reduced operator: the rank-one nilpotent cell of the
/// Jordan direction at the sample point (p•, q•) = (1, 0), then one rotation
/// cell per center frequency B_n. `n_modes` counts all cells and must equal
/// `b.len() + 1`.
pub fn ltilde_structure_demo(n_modes: usize, b: &[f64]) -> Result<LtildeDemo> {
    if n_modes != b.len() + 1 {
        return Err(Error::InvalidConfig(format!(
            "n_modes = {} but {} center frequencies given (need n_modes - 1)",
            n_modes,
            b.len()
        )));
    }
    if n_modes > DEMO_MODE_LIMIT {
        return Err(Error::TooManyModes { requested: n_modes, max: DEMO_MODE_LIMIT });
    }
    for (i, &freq) in b.iter().enumerate() {
        if freq == 0.0 {
            return Err(Error::ZeroFrequency { index: i + 1 });
        }
    }
    let dim = 2 * n_modes;
    let mut m = vec![vec![0.0; dim]; dim];
    // Jordan cell at (p, q) = (1, 0): [[-qp, -q^2], [p^2, pq]] is rank one
    // and squares to zero.
    let (p, q) = (1.0, 0.0);
    m[0][0] = -q * p;
    m[0][1] = -q * q;
    m[1][0] = p * p;
    m[1][1] = p * q;
    for (i, &freq) in b.iter().enumerate() {
        let o = 2 * (i + 1);
        m[o][o + 1] = -freq;
        m[o + 1][o] = freq;
    }
    // Blockwise quadratic formula on the 2x2 cells.
    let mut spectrum = Vec::with_capacity(dim);
    for cell in 0..n_modes {
        let o = 2 * cell;
        let tr = m[o][o] + m[o + 1][o + 1];
        let det = m[o][o] * m[o + 1][o + 1] - m[o][o + 1] * m[o + 1][o];
        let disc = Complex64::new(tr * tr - 4.0 * det, 0.0).sqrt();
        let half = Complex64::new(tr, 0.0);
        spectrum.push((half + disc) / 2.0);
        spectrum.push((half - disc) / 2.0);
    }
    Ok(LtildeDemo { n_modes, matrix: m, spectrum })
}
