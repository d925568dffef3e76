//! Symplectic normal form of the linearization at γ_c.
//!
//! Out of the eigenvector families F, G the module assembles real Darboux
//! bases: per mode pair ±k a quadruple (α_k, β_k, α_{-k}, β_{-k}) inside the
//! focusing real subspace with ω(α_j, β_j) = δ and all other pairings zero,
//! and for k = 0 the pair (α₀, β₀) = (ξ'₀, η'₀). In the induced coordinates
//! p_k = ω(φ, β_k), q_k = ω(α_k, φ) the quadratic energy becomes
//!
//!   Q(φ) = 4|c|² p₀²
//!        - Σ_{0<πk<|c|} 8πk √(|c|² - π²k²) (p_k q_k + p_{-k} q_{-k})
//!        - Σ_{π|k|>|c|} 4π|k| √(π²k² - |c|²) (p_k² + q_k²),
//!
//! and L_c turns into the normal blocks: one nilpotent 2x2 cell at k = 0,
//! hyperbolic diag(λ, -λ, λ, -λ) cells in the focus-focus range, and
//! rotation cells in the centers. Each focus-focus pair carries the two
//! commuting integrals I_k = p_k q_k + p_{-k} q_{-k} and
//! I_{-k} = p_k q_{-k} - p_{-k} q_k of the quadratic flow.
//!
//! As k grows the Darboux vectors approach the primed basis:
//! ‖α_k - ξ'_k‖ = O(k⁻²), which is the sense in which the construction stays
//! uniformly close to a fixed basis at high frequency.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonians::Amplitude;
use crate::linearization::{apply_lc, eigenvector, regime_of, EigenKind, Regime};
use crate::phase_space::{
    basis_vector, focusing_deviation, omega_supported, BasisKind, SpectralField,
};

const PI: f64 = std::f64::consts::PI;

/// Deviation from the focusing relation tolerated by `expand`.
pub const EXPAND_REALITY_TOL: f64 = 1e-10;

/// A Darboux cell: the pair (α₀, β₀) at k = 0 or the quadruple
/// (α_k, β_k, α_{-k}, β_{-k}) at k ≥ 1, stored in that order.
#[derive(Clone, Debug)]
pub struct DarbouxQuad {
    pub k: usize,
    pub regime: Regime,
    pub vectors: Vec<SpectralField>,
}

impl DarbouxQuad {
    /// α_j for j ∈ {k, -k} (j = 0 allowed when k = 0).
    pub fn alpha(&self, j: i64) -> &SpectralField {
        match self.slot(j) {
            0 => &self.vectors[0],
            _ => &self.vectors[2],
        }
    }

    /// β_j for j ∈ {k, -k}.
    pub fn beta(&self, j: i64) -> &SpectralField {
        match self.slot(j) {
            0 => &self.vectors[1],
            _ => &self.vectors[3],
        }
    }

    fn slot(&self, j: i64) -> usize {
        if j == self.k as i64 {
            0
        } else if j == -(self.k as i64) {
            1
        } else {
            panic!("mode {j} does not belong to the cell at ±{}", self.k)
        }
    }

    /// Modes on which the cell's vectors are supported.
    pub fn support(&self) -> Vec<i64> {
        if self.k == 0 {
            vec![0]
        } else {
            vec![self.k as i64, -(self.k as i64)]
        }
    }

    /// Largest deviation of the internal ω-Gram matrix from the canonical
    /// block J (ω(α_j, β_j) = 1, all other pairings zero).
    pub fn gram_error(&self) -> f64 {
        let n = self.vectors.len();
        let support = self.support();
        let mut err = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let om = omega_supported(&self.vectors[i], &self.vectors[j], &support);
                // Canonical pairs sit at (0,1) and (2,3).
                let expect = match (i, j) {
                    (0, 1) | (2, 3) => 1.0,
                    (1, 0) | (3, 2) => -1.0,
                    _ => 0.0,
                };
                err = err.max((om - Complex64::new(expect, 0.0)).norm());
            }
        }
        err
    }
}

/// The normal-form matrix of L_c on one Darboux cell, in cell coordinates.
#[derive(Clone, Debug)]
pub struct NormalBlock {
    pub k: usize,
    pub regime: Regime,
    pub matrix: Vec<Vec<f64>>,
}

/// Real Darboux coordinates of a focusing-real field.
#[derive(Clone, Debug, PartialEq)]
pub struct BirkhoffPoint {
    k_max: usize,
    p: Vec<f64>,
    q: Vec<f64>,
}

impl BirkhoffPoint {
    /// The zero point at truncation K.
    pub fn zeros(k_max: usize) -> Self {
        let n = 2 * k_max + 1;
        BirkhoffPoint { k_max, p: vec![0.0; n], q: vec![0.0; n] }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    fn idx(&self, k: i64) -> usize {
        assert!(k.unsigned_abs() as usize <= self.k_max, "mode {k} out of range");
        (k + self.k_max as i64) as usize
    }

    pub fn p(&self, k: i64) -> f64 {
        self.p[self.idx(k)]
    }

    pub fn q(&self, k: i64) -> f64 {
        self.q[self.idx(k)]
    }

    pub fn set_p(&mut self, k: i64, v: f64) {
        let i = self.idx(k);
        self.p[i] = v;
    }

    pub fn set_q(&mut self, k: i64, v: f64) {
        let i = self.idx(k);
        self.q[i] = v;
    }

    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let k = self.k_max as i64;
        -k..=k
    }
}

/// The commuting integrals of the quadratic flow, labeled by mode.
#[derive(Clone, Debug)]
pub struct FocusIntegrals {
    k_max: usize,
    values: Vec<f64>,
}

impl FocusIntegrals {
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// I_k: at k = 0 the Jordan invariant p₀²/2; on a focus-focus pair the
    /// hyperbolic product (k > 0) and the angular combination (k < 0); in a
    /// center the action (p_k² + q_k²)/2.
    pub fn i(&self, k: i64) -> f64 {
        assert!(k.unsigned_abs() as usize <= self.k_max, "mode {k} out of range");
        self.values[(k + self.k_max as i64) as usize]
    }
}

/// Assemble the Darboux cell at mode k.
///
/// Center cells combine each eigenvector with its σ-image,
/// α = (F + σF)/2, β = (F - σF)/2i; focus-focus cells combine the two
/// expanding (resp. contracting) directions,
/// α_k = (F_k + F_{-k})/2, α_{-k} = (F_k - F_{-k})/2i and likewise β from G.
pub fn darboux_quad(k: usize, a: &Amplitude, k_max: usize) -> Result<DarbouxQuad> {
    a.require_regular()?;
    if k > k_max {
        return Err(Error::ModeOutOfRange { k: k as i64, k_max });
    }
    if k == 0 {
        return Ok(DarbouxQuad {
            k: 0,
            regime: Regime::Jordan,
            vectors: vec![
                basis_vector(BasisKind::XiPrime, 0, k_max)?,
                basis_vector(BasisKind::EtaPrime, 0, k_max)?,
            ],
        });
    }
    let ki = k as i64;
    let half = Complex64::new(0.5, 0.0);
    let inv_2i = Complex64::new(0.0, -0.5);
    let regime = regime_of(ki, a);
    let vectors = match regime {
        Regime::Center => {
            // sigma(F_j) = G_j in a center, so the pairs below are sigma-real.
            let fp = eigenvector(ki, EigenKind::F, a, k_max)?.vec;
            let gp = eigenvector(ki, EigenKind::G, a, k_max)?.vec;
            let fm = eigenvector(-ki, EigenKind::F, a, k_max)?.vec;
            let gm = eigenvector(-ki, EigenKind::G, a, k_max)?.vec;
            vec![
                fp.add(&gp)?.scaled(half),
                fp.sub(&gp)?.scaled(inv_2i),
                fm.add(&gm)?.scaled(half),
                fm.sub(&gm)?.scaled(inv_2i),
            ]
        }
        Regime::FocusFocus => {
            // sigma(F_k) = F_{-k} and sigma(G_k) = G_{-k} here.
            let fp = eigenvector(ki, EigenKind::F, a, k_max)?.vec;
            let fm = eigenvector(-ki, EigenKind::F, a, k_max)?.vec;
            let gp = eigenvector(ki, EigenKind::G, a, k_max)?.vec;
            let gm = eigenvector(-ki, EigenKind::G, a, k_max)?.vec;
            vec![
                fp.add(&fm)?.scaled(half),
                gp.add(&gm)?.scaled(half),
                fp.sub(&fm)?.scaled(inv_2i),
                gp.sub(&gm)?.scaled(inv_2i),
            ]
        }
        Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude, k >= 1"),
    };
    Ok(DarbouxQuad { k, regime, vectors })
}

/// |λ_k| of the cell at k ≥ 1.
fn cell_frequency(k: usize, a: &Amplitude) -> f64 {
    let c2 = a.modulus() * a.modulus();
    let kf = k as f64;
    4.0 * PI * kf * (c2 - PI * PI * kf * kf).abs().sqrt()
}

/// The expected normal-form matrix of L_c on the cell at k.
pub fn normal_block(k: usize, a: &Amplitude) -> Result<NormalBlock> {
    a.require_regular()?;
    if k == 0 {
        let b = 4.0 * a.modulus() * a.modulus();
        return Ok(NormalBlock {
            k: 0,
            regime: Regime::Jordan,
            matrix: vec![vec![0.0, 0.0], vec![b, 0.0]],
        });
    }
    let s = cell_frequency(k, a);
    let matrix = match regime_of(k as i64, a) {
        Regime::FocusFocus => vec![
            vec![s, 0.0, 0.0, 0.0],
            vec![0.0, -s, 0.0, 0.0],
            vec![0.0, 0.0, s, 0.0],
            vec![0.0, 0.0, 0.0, -s],
        ],
        Regime::Center => vec![
            vec![0.0, s, 0.0, 0.0],
            vec![-s, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, s],
            vec![0.0, 0.0, -s, 0.0],
        ],
        Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude, k >= 1"),
    };
    Ok(NormalBlock { k, regime: regime_of(k as i64, a), matrix })
}

/// Cell coordinates of v: pairs (p_j, q_j) = (ω(v, β_j), ω(α_j, v)) in the
/// cell's canonical order.
fn cell_coordinates(v: &SpectralField, quad: &DarbouxQuad) -> Vec<Complex64> {
    let support = quad.support();
    let mut coords = Vec::with_capacity(quad.vectors.len());
    for pair in quad.vectors.chunks(2) {
        let (alpha, beta) = (&pair[0], &pair[1]);
        coords.push(omega_supported(v, beta, &support));
        coords.push(-omega_supported(v, alpha, &support));
    }
    coords
}

/// Apply L_c to each cell vector, read the result back in cell coordinates,
/// and return the largest entry-wise deviation from `normal_block`, relative
/// to the block scale (entries grow like k², so an absolute comparison would
/// measure nothing but ulps at large k).
pub fn verify_normal_block(k: usize, a: &Amplitude, k_max: usize) -> Result<f64> {
    let quad = darboux_quad(k, a, k_max)?;
    let expected = normal_block(k, a)?;
    let scale = 1.0
        + expected
            .matrix
            .iter()
            .flatten()
            .fold(0.0_f64, |m, &e| m.max(e.abs()));
    let mut dev = 0.0_f64;
    for (j, v) in quad.vectors.iter().enumerate() {
        let lv = apply_lc(v, a);
        let coords = cell_coordinates(&lv, &quad);
        for (i, got) in coords.iter().enumerate() {
            let want = Complex64::new(expected.matrix[i][j], 0.0);
            dev = dev.max((got - want).norm());
        }
    }
    Ok(dev / scale)
}

/// Expand a focusing-real field in the Darboux basis.
pub fn expand(phi: &SpectralField, a: &Amplitude) -> Result<BirkhoffPoint> {
    a.require_regular()?;
    let deviation = focusing_deviation(phi);
    if deviation > EXPAND_REALITY_TOL * (1.0 + phi.max_coeff()) {
        return Err(Error::NotFocusingReal { deviation });
    }
    let k_max = phi.k_max();
    let mut pt = BirkhoffPoint::zeros(k_max);
    for k in 0..=k_max {
        let quad = darboux_quad(k, a, k_max)?;
        let support = quad.support();
        let js: &[i64] = if k == 0 { &[0] } else { &[k as i64, -(k as i64)] };
        for &j in js {
            // q_j = omega(alpha_j, phi) = -omega(phi, alpha_j); the sparse
            // cell vector must sit in the supported slot.
            pt.set_p(j, omega_supported(phi, quad.beta(j), &support).re);
            pt.set_q(j, -omega_supported(phi, quad.alpha(j), &support).re);
        }
    }
    Ok(pt)
}

/// Rebuild the field Σ (p_k α_k + q_k β_k) from Darboux coordinates.
pub fn synthesize(pt: &BirkhoffPoint, a: &Amplitude) -> Result<SpectralField> {
    a.require_regular()?;
    let k_max = pt.k_max();
    let mut acc = SpectralField::zeros(k_max);
    for k in 0..=k_max {
        let quad = darboux_quad(k, a, k_max)?;
        let js: &[i64] = if k == 0 { &[0] } else { &[k as i64, -(k as i64)] };
        for &j in js {
            let contrib = quad
                .alpha(j)
                .scaled(Complex64::new(pt.p(j), 0.0))
                .add(&quad.beta(j).scaled(Complex64::new(pt.q(j), 0.0)))?;
            acc = acc.add(&contrib)?;
        }
    }
    Ok(acc)
}

/// The second variation of Hᶜ at φ_c: d²Hᶜ(u, v) = ω(u, L_c v).
///
/// Real-valued on the focusing real subspace; the caller is expected to pass
/// focusing-real directions.
pub fn hessian_direct(u: &SpectralField, v: &SpectralField, a: &Amplitude) -> Result<f64> {
    Ok(crate::phase_space::omega(u, &apply_lc(v, a))?.re)
}

/// The same quadratic form written in Darboux coordinates.
pub fn hessian_normal(pt: &BirkhoffPoint, a: &Amplitude) -> Result<f64> {
    a.require_regular()?;
    let c2 = a.modulus() * a.modulus();
    let mut total = 4.0 * c2 * pt.p(0) * pt.p(0);
    for k in 1..=pt.k_max() {
        let ki = k as i64;
        let s = cell_frequency(k, a);
        match regime_of(ki, a) {
            Regime::FocusFocus => {
                total -= 2.0 * s * (pt.p(ki) * pt.q(ki) + pt.p(-ki) * pt.q(-ki));
            }
            Regime::Center => {
                total -= s
                    * (pt.p(ki) * pt.p(ki)
                        + pt.q(ki) * pt.q(ki)
                        + pt.p(-ki) * pt.p(-ki)
                        + pt.q(-ki) * pt.q(-ki));
            }
            Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude, k >= 1"),
        }
    }
    Ok(total)
}

/// Evaluate every commuting integral of the quadratic flow at a point.
pub fn focus_integrals(pt: &BirkhoffPoint, a: &Amplitude) -> Result<FocusIntegrals> {
    a.require_regular()?;
    let k_max = pt.k_max();
    let mut out = FocusIntegrals { k_max, values: vec![0.0; 2 * k_max + 1] };
    let center = |j: i64| (pt.p(j) * pt.p(j) + pt.q(j) * pt.q(j)) / 2.0;
    out.values[k_max] = pt.p(0) * pt.p(0) / 2.0;
    for k in 1..=k_max {
        let ki = k as i64;
        let (plus, minus) = match regime_of(ki, a) {
            Regime::FocusFocus => (
                pt.p(ki) * pt.q(ki) + pt.p(-ki) * pt.q(-ki),
                pt.p(ki) * pt.q(-ki) - pt.p(-ki) * pt.q(ki),
            ),
            Regime::Center => (center(ki), center(-ki)),
            Regime::Jordan | Regime::Excluded => unreachable!("regular amplitude, k >= 1"),
        };
        out.values[k_max + k] = plus;
        out.values[k_max - k] = minus;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase_space::{omega, reality_class, sobolev_norm, RealityClass};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_point(k_max: usize, rng: &mut ChaCha8Rng) -> BirkhoffPoint {
        let mut pt = BirkhoffPoint::zeros(k_max);
        for k in -(k_max as i64)..=(k_max as i64) {
            pt.set_p(k, rng.gen_range(-1.0..1.0));
            pt.set_q(k, rng.gen_range(-1.0..1.0));
        }
        pt
    }

    #[test]
    fn cells_are_real_and_canonical() {
        for c_mod in [1.0, 4.0] {
            let a = Amplitude::from_modulus(c_mod).unwrap();
            for k in 0..=6usize {
                let quad = darboux_quad(k, &a, 8).unwrap();
                assert!(quad.gram_error() < 1e-12, "c = {c_mod}, k = {k}");
                for v in &quad.vectors {
                    assert_eq!(reality_class(v, 1e-11), RealityClass::FocusingReal);
                }
            }
        }
    }

    #[test]
    fn cross_cell_pairings_vanish() {
        let a = Amplitude::from_modulus(4.0).unwrap();
        let quads: Vec<_> = (0..=5).map(|k| darboux_quad(k, &a, 6).unwrap()).collect();
        for qa in &quads {
            for qb in &quads {
                if qa.k == qb.k {
                    continue;
                }
                for u in &qa.vectors {
                    for v in &qb.vectors {
                        assert!(omega(u, v).unwrap().norm() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn normal_blocks_match_operator() {
        for c_mod in [1.0, 4.0] {
            let a = Amplitude::from_modulus(c_mod).unwrap();
            for k in 0..=8usize {
                let dev = verify_normal_block(k, &a, 12).unwrap();
                assert!(dev < 1e-11, "c = {c_mod}, k = {k}: {dev:.3e}");
            }
        }
    }

    #[test]
    fn jordan_block_values() {
        let a = Amplitude::from_modulus(2.0).unwrap();
        let block = normal_block(0, &a).unwrap();
        assert_eq!(block.matrix, vec![vec![0.0, 0.0], vec![16.0, 0.0]]);
    }

    #[test]
    fn round_trip_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let a = Amplitude::from_modulus(4.0).unwrap();
        // Point -> field -> point.
        let pt = random_point(10, &mut rng);
        let phi = synthesize(&pt, &a).unwrap();
        assert_eq!(reality_class(&phi, 1e-10), RealityClass::FocusingReal);
        let back = expand(&phi, &a).unwrap();
        for k in pt.modes() {
            assert!((pt.p(k) - back.p(k)).abs() < 1e-11, "p_{k}");
            assert!((pt.q(k) - back.q(k)).abs() < 1e-11, "q_{k}");
        }
        // Field -> point -> field.
        let mut f = SpectralField::zeros(10);
        for k in f.modes() {
            let decay = (-(k.abs() as f64) / 3.0).exp();
            f.set_z(k, c(rng.gen_range(-decay..decay), rng.gen_range(-decay..decay)))
                .unwrap();
        }
        for k in f.modes() {
            let zk = f.z(-k);
            f.set_w(k, -zk.conj()).unwrap();
        }
        let coords = expand(&f, &a).unwrap();
        let rebuilt = synthesize(&coords, &a).unwrap();
        assert!(rebuilt.distance(&f).unwrap() < 1e-11);
    }

    #[test]
    fn expand_rejects_non_real_fields() {
        let a = Amplitude::from_modulus(1.0).unwrap();
        let xi = basis_vector(BasisKind::Xi, 1, 4).unwrap();
        assert!(matches!(expand(&xi, &a), Err(Error::NotFocusingReal { .. })));
        let ex = Amplitude::from_modulus(PI).unwrap();
        let ok = basis_vector(BasisKind::XiPrime, 1, 4).unwrap();
        assert!(matches!(expand(&ok, &ex), Err(Error::ExcludedAmplitude { .. })));
    }

    #[test]
    fn hessian_direct_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = Amplitude::from_modulus(4.0).unwrap();
        let pt_u = random_point(6, &mut rng);
        let pt_v = random_point(6, &mut rng);
        let u = synthesize(&pt_u, &a).unwrap();
        let v = synthesize(&pt_v, &a).unwrap();
        let uv = hessian_direct(&u, &v, &a).unwrap();
        let vu = hessian_direct(&v, &u, &a).unwrap();
        assert!((uv - vu).abs() < 1e-9 * (1.0 + uv.abs()));
    }

    #[test]
    fn hessians_agree_through_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let a = Amplitude::from_modulus(4.0).unwrap();
        for _ in 0..5 {
            let pt = random_point(12, &mut rng);
            let phi = synthesize(&pt, &a).unwrap();
            let direct = hessian_direct(&phi, &phi, &a).unwrap();
            let normal = hessian_normal(&pt, &a).unwrap();
            assert!((direct - normal).abs() < 1e-9 * (1.0 + direct.abs()),
                "direct = {direct}, normal = {normal}");
        }
    }

    #[test]
    fn integrals_survive_the_block_flows() {
        // Exact flow of each normal block: hyperbolic stretch on focus-focus
        // cells, rotation on center cells, shear at k = 0.
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let a = Amplitude::from_modulus(4.0).unwrap();
        let k_max = 8;
        let pt = random_point(k_max, &mut rng);
        let t = 0.37;
        let mut moved = BirkhoffPoint::zeros(k_max);
        moved.set_p(0, pt.p(0));
        moved.set_q(0, pt.q(0) + 4.0 * a.modulus() * a.modulus() * pt.p(0) * t);
        for k in 1..=k_max {
            let ki = k as i64;
            let s = cell_frequency(k, &a);
            match regime_of(ki, &a) {
                Regime::FocusFocus => {
                    for j in [ki, -ki] {
                        moved.set_p(j, pt.p(j) * (s * t).exp());
                        moved.set_q(j, pt.q(j) * (-s * t).exp());
                    }
                }
                Regime::Center => {
                    for j in [ki, -ki] {
                        let (co, si) = ((s * t).cos(), (s * t).sin());
                        moved.set_p(j, pt.p(j) * co + pt.q(j) * si);
                        moved.set_q(j, -pt.p(j) * si + pt.q(j) * co);
                    }
                }
                _ => unreachable!(),
            }
        }
        let before = focus_integrals(&pt, &a).unwrap();
        let after = focus_integrals(&moved, &a).unwrap();
        for k in pt.modes() {
            assert!((before.i(k) - after.i(k)).abs() < 1e-10 * (1.0 + before.i(k).abs()),
                "I_{k}");
        }
        // The quadratic energy is a combination of the integrals.
        let qb = hessian_normal(&pt, &a).unwrap();
        let qa = hessian_normal(&moved, &a).unwrap();
        assert!((qb - qa).abs() < 1e-8 * (1.0 + qb.abs()));
    }

    #[test]
    fn cells_approach_primed_basis_quadratically() {
        let a = Amplitude::from_modulus(1.0).unwrap();
        let k_max = 64;
        let dev = |k: usize| -> f64 {
            let quad = darboux_quad(k, &a, k_max).unwrap();
            let xi = basis_vector(BasisKind::XiPrime, k as i64, k_max).unwrap();
            quad.alpha(k as i64).sub(&xi).unwrap().norm()
        };
        let d32 = dev(32);
        let d64 = dev(64);
        let ratio = d32 / d64;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
        // Deviation itself is tiny at high k.
        assert!(sobolev_norm(&darboux_quad(64, &a, k_max).unwrap().vectors[0], 0.0) < 2.0);
        assert!(d64 < 1e-4);
    }
}
