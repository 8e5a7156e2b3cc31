//! SU(2) and SU(1,1) displacement operators on the truncated Fock space.
//!
//! The SU(2) operator `D(χ) = exp(χJ₊ - χ*J₋)` conserves total photon
//! number, so it is built block-by-block over the total-number sectors and is
//! exactly unitary at any cutoff. The SU(1,1) operator
//! `D(ξ)_ab = D(ξ_a)D(ξ_b) = exp(Σ_i ξ_iK₊⁽ⁱ⁾ - ξ_i*K₋⁽ⁱ⁾)` does not
//! conserve photon number; two constructions are provided:
//!
//! - [`Su11Displacement::truncated_true`]: the top-left block of the true
//!   (infinite-space) operator, computed in a padded space. Columns lose the
//!   amplitude that leaks past the cutoff, so the matrix is unitary only up
//!   to truncation and reports that deficit.
//! - [`Su11Displacement::unitary`]: the exponential of the sharply truncated
//!   generator, exactly unitary. Preferred where spectra must be preserved
//!   (invariant operators, eigenstate propagation).
//!
//! Both displacements factor through a fixed-magnitude core conjugated by
//! number phases: `exp(|z|e^{iη}L₊ - h.c.) = e^{iηN}exp(|z|(L₊-L₋))e^{-iηN}`
//! with `N` the diagonal weight operator of the ladder pair. The phase
//! rotation is diagonal, so sweeping the phase of χ or ξ costs O(dim).

use ndarray::{Array1, Array2, ArrayView1};
use std::f64::consts::PI;

use super::expm::expm;
use super::fock::{FockSpace, OperatorMatrix};
use crate::{C64, Result};

/// A `(θ, φ)` pair defining the complex displacement argument
/// `ζ = -(θ/2) e^{-iφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisplacementParam {
    theta: f64,
    phi: f64,
}

impl DisplacementParam {
    /// Canonicalizes to `θ ≥ 0`, `φ ∈ (-π, π]`. The complex argument ζ is
    /// unchanged by canonicalization (θ → -θ absorbs into φ → φ + π).
    pub fn new(theta: f64, phi: f64) -> Self {
        let (mut theta, mut phi) = (theta, phi);
        if theta < 0.0 {
            theta = -theta;
            phi += PI;
        }
        phi = wrap_angle(phi);
        Self { theta, phi }
    }

    pub fn zero() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `ζ = -(θ/2) e^{-iφ}`, so `|ζ| = θ/2` exactly.
    pub fn zeta(&self) -> C64 {
        -C64::from_polar(self.theta / 2.0, -self.phi)
    }

    /// Unit direction `ζ/|ζ| = -e^{-iφ}`, or 1 when θ = 0.
    pub fn unit(&self) -> C64 {
        if self.theta == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            -C64::from_polar(1.0, -self.phi)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.theta == 0.0
    }

    /// Parameter of the inverse displacement, `ζ → -ζ`.
    pub fn inverse(&self) -> Self {
        Self::new(self.theta, self.phi + PI)
    }
}

/// Wrap an angle to `(-π, π]`.
pub fn wrap_angle(phi: f64) -> f64 {
    let mut p = phi.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    p
}

/// SU(2) displacement `exp(χJ₊ - χ*J₋)` stored as one dense block per
/// total-photon-number sector.
#[derive(Debug, Clone)]
pub struct Su2Displacement {
    space: FockSpace,
    chi: DisplacementParam,
    /// `blocks[n_tot]` acts on the states with `n_a + n_b = n_tot`, ordered
    /// by increasing `n_a` from `max(0, n_tot - cutoff_b)`.
    blocks: Vec<Array2<C64>>,
}

impl Su2Displacement {
    pub fn new(space: FockSpace, chi: DisplacementParam) -> Self {
        let (ca, cb) = (space.cutoff_a(), space.cutoff_b());
        let half_theta = chi.theta() / 2.0;
        let eta = chi.zeta().arg();
        let mut blocks = Vec::with_capacity(ca + cb + 1);
        for n_tot in 0..=(ca + cb) {
            let lo = n_tot.saturating_sub(cb);
            let hi = n_tot.min(ca);
            let size = hi - lo + 1;
            if chi.is_zero() {
                blocks.push(Array2::from_diag_elem(size, C64::new(1.0, 0.0)));
                continue;
            }
            // generator |χ|(J+ - J-) restricted to the sector, conjugated by
            // the diagonal phases e^{iη J0}
            let mut g = Array2::<C64>::zeros((size, size));
            for k in 0..size {
                let na = lo + k;
                let nb = n_tot - na;
                if na < hi {
                    // J+ |na, nb> -> sqrt((na+1) nb) |na+1, nb-1>
                    let w = (((na + 1) * nb) as f64).sqrt();
                    g[[k + 1, k]] += C64::new(half_theta * w, 0.0);
                    // -J- on the neighbor gives the anti-Hermitian partner
                    g[[k, k + 1]] -= C64::new(half_theta * w, 0.0);
                }
            }
            let core = expm(&g);
            let mut block = core;
            for k in 0..size {
                let na = lo + k;
                let nb = n_tot - na;
                let j0 = 0.5 * (na as f64 - nb as f64);
                let left = C64::from_polar(1.0, eta * j0);
                for m in 0..size {
                    block[[k, m]] *= left;
                }
                let right = C64::from_polar(1.0, -eta * j0);
                for m in 0..size {
                    block[[m, k]] *= right;
                }
            }
            blocks.push(block);
        }
        Self { space, chi, blocks }
    }

    pub fn chi(&self) -> DisplacementParam {
        self.chi
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    fn sector_range(&self, n_tot: usize) -> (usize, usize) {
        let lo = n_tot.saturating_sub(self.space.cutoff_b());
        let hi = n_tot.min(self.space.cutoff_a());
        (lo, hi)
    }

    /// `out = D v` (or `D† v` with `adjoint`).
    pub fn apply(&self, v: ArrayView1<C64>, adjoint: bool) -> Array1<C64> {
        let mut out = Array1::zeros(self.space.dimension());
        for (n_tot, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = self.sector_range(n_tot);
            let size = hi - lo + 1;
            for r in 0..size {
                let row_idx = self.space.index(lo + r, n_tot - (lo + r));
                let mut acc = C64::new(0.0, 0.0);
                for ccol in 0..size {
                    let col_idx = self.space.index(lo + ccol, n_tot - (lo + ccol));
                    let m = if adjoint {
                        block[[ccol, r]].conj()
                    } else {
                        block[[r, ccol]]
                    };
                    acc += m * v[col_idx];
                }
                out[row_idx] = acc;
            }
        }
        out
    }

    /// Dense matrix form.
    pub fn to_dense(&self) -> Array2<C64> {
        let d = self.space.dimension();
        let mut m = Array2::zeros((d, d));
        for (n_tot, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = self.sector_range(n_tot);
            let size = hi - lo + 1;
            for r in 0..size {
                let ri = self.space.index(lo + r, n_tot - (lo + r));
                for ccol in 0..size {
                    let ci = self.space.index(lo + ccol, n_tot - (lo + ccol));
                    m[[ri, ci]] = block[[r, ccol]];
                }
            }
        }
        m
    }

    /// `D† M D` for a dense operator, block-structured on the left and right.
    pub fn conjugate_dense(&self, m: &Array2<C64>) -> Array2<C64> {
        // T = M D, column-block by column-block, then D† T.
        let d = self.space.dimension();
        let mut t = Array2::<C64>::zeros((d, d));
        // M D: for each sector column-block of D, T[:, cols] = M[:, rows] * block
        for (n_tot, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = self.sector_range(n_tot);
            let size = hi - lo + 1;
            let idx: Vec<usize> = (0..size)
                .map(|k| self.space.index(lo + k, n_tot - (lo + k)))
                .collect();
            for (kc, &ci) in idx.iter().enumerate() {
                for row in 0..d {
                    let mut acc = C64::new(0.0, 0.0);
                    for (kr, &ri) in idx.iter().enumerate() {
                        acc += m[[row, ri]] * block[[kr, kc]];
                    }
                    t[[row, ci]] = acc;
                }
            }
        }
        // D† T: row blocks
        let mut out = Array2::<C64>::zeros((d, d));
        for (n_tot, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = self.sector_range(n_tot);
            let size = hi - lo + 1;
            let idx: Vec<usize> = (0..size)
                .map(|k| self.space.index(lo + k, n_tot - (lo + k)))
                .collect();
            for (kr, &ri) in idx.iter().enumerate() {
                for col in 0..d {
                    let mut acc = C64::new(0.0, 0.0);
                    for (km, &mi) in idx.iter().enumerate() {
                        acc += block[[km, kr]].conj() * t[[mi, col]];
                    }
                    out[[ri, col]] = acc;
                }
            }
        }
        out
    }
}

/// Single-mode squeeze matrix `exp(ξK₊ - ξ*K₋)` on `dim` levels.
///
/// `truncated_true` computes the operator in a space padded by `pad` levels
/// and keeps the top-left block, recording each column's norm deficit.
/// `unitary` exponentiates the sharply truncated generator.
fn mode_squeeze(dim: usize, xi: DisplacementParam, pad: usize) -> (Array2<C64>, Vec<f64>) {
    let big = dim + pad;
    let r = xi.theta() / 2.0;
    let psi = xi.zeta().arg();
    if r == 0.0 {
        return (
            Array2::from_diag_elem(dim, C64::new(1.0, 0.0)),
            vec![0.0; dim],
        );
    }
    // core exp(r(K+ - K-)) on the padded space, then phase conjugation
    let mut g = Array2::<C64>::zeros((big, big));
    for n in 0..big.saturating_sub(2) {
        let w = 0.5 * (((n + 1) * (n + 2)) as f64).sqrt();
        g[[n + 2, n]] += C64::new(r * w, 0.0);
        g[[n, n + 2]] -= C64::new(r * w, 0.0);
    }
    let core = expm(&g);
    let mut s = Array2::<C64>::zeros((dim, dim));
    let mut deficits = vec![0.0; dim];
    for col in 0..dim {
        let mut kept = 0.0f64;
        for row in 0..dim {
            // e^{iψ n/2} core e^{-iψ n/2}: row phase (row/2)ψ, col phase -(col/2)ψ
            let phase = C64::from_polar(1.0, 0.5 * psi * (row as f64 - col as f64));
            let val = core[[row, col]] * phase;
            s[[row, col]] = val;
            kept += val.norm_sqr();
        }
        deficits[col] = (1.0 - kept.sqrt()).max(0.0);
    }
    (s, deficits)
}

fn mode_squeeze_unitary(dim: usize, xi: DisplacementParam) -> Array2<C64> {
    let (s, _) = mode_squeeze_unpadded(dim, xi);
    s
}

fn mode_squeeze_unpadded(dim: usize, xi: DisplacementParam) -> (Array2<C64>, Vec<f64>) {
    let r = xi.theta() / 2.0;
    let psi = xi.zeta().arg();
    if r == 0.0 {
        return (
            Array2::from_diag_elem(dim, C64::new(1.0, 0.0)),
            vec![0.0; dim],
        );
    }
    let mut g = Array2::<C64>::zeros((dim, dim));
    for n in 0..dim.saturating_sub(2) {
        let w = 0.5 * (((n + 1) * (n + 2)) as f64).sqrt();
        g[[n + 2, n]] += C64::new(r * w, 0.0);
        g[[n, n + 2]] -= C64::new(r * w, 0.0);
    }
    let core = expm(&g);
    let mut s = Array2::<C64>::zeros((dim, dim));
    for col in 0..dim {
        for row in 0..dim {
            let phase = C64::from_polar(1.0, 0.5 * psi * (row as f64 - col as f64));
            s[[row, col]] = core[[row, col]] * phase;
        }
    }
    (s, vec![0.0; dim])
}

/// Default padding for the truncated-true construction. Squeeze amplitudes
/// fall off by roughly tanh(θ/2) per two levels, so 96 extra levels put the
/// retained block at machine precision for θ up to ~1.2.
pub const SQUEEZE_PAD: usize = 96;

/// Two-mode SU(1,1) displacement `D(ξ_a)D(ξ_b)` as a Kronecker pair.
#[derive(Debug, Clone)]
pub struct Su11Displacement {
    space: FockSpace,
    xi_a: DisplacementParam,
    xi_b: DisplacementParam,
    s_a: Array2<C64>,
    s_b: Array2<C64>,
    deficits_a: Vec<f64>,
    deficits_b: Vec<f64>,
}

impl Su11Displacement {
    /// True-operator block with per-column truncation deficits.
    pub fn truncated_true(
        space: FockSpace,
        xi_a: DisplacementParam,
        xi_b: DisplacementParam,
    ) -> Self {
        let (s_a, deficits_a) = mode_squeeze(space.dim_a(), xi_a, SQUEEZE_PAD);
        let (s_b, deficits_b) = mode_squeeze(space.dim_b(), xi_b, SQUEEZE_PAD);
        Self {
            space,
            xi_a,
            xi_b,
            s_a,
            s_b,
            deficits_a,
            deficits_b,
        }
    }

    /// Exactly unitary construction (exponential of the truncated generator).
    pub fn unitary(space: FockSpace, xi_a: DisplacementParam, xi_b: DisplacementParam) -> Self {
        let s_a = mode_squeeze_unitary(space.dim_a(), xi_a);
        let s_b = mode_squeeze_unitary(space.dim_b(), xi_b);
        Self {
            space,
            xi_a,
            xi_b,
            s_a,
            s_b,
            deficits_a: vec![0.0; space.dim_a()],
            deficits_b: vec![0.0; space.dim_b()],
        }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn xi_a(&self) -> DisplacementParam {
        self.xi_a
    }

    pub fn xi_b(&self) -> DisplacementParam {
        self.xi_b
    }

    pub fn mode_a_matrix(&self) -> &Array2<C64> {
        &self.s_a
    }

    pub fn mode_b_matrix(&self) -> &Array2<C64> {
        &self.s_b
    }

    /// Worst column-norm deficit over the interior subspace (truncation
    /// leakage estimate).
    pub fn leakage(&self, margin: usize) -> f64 {
        let worst = |d: &[f64], cutoff: usize| {
            d.iter()
                .take(cutoff.saturating_sub(margin) + 1)
                .fold(0.0f64, |acc, &x| acc.max(x))
        };
        let la = worst(&self.deficits_a, self.space.cutoff_a());
        let lb = worst(&self.deficits_b, self.space.cutoff_b());
        // Kronecker column norm is the product of factor norms.
        la + lb
    }

    /// Norm deficit of the column for `|n_a, n_b⟩` specifically.
    pub fn column_deficit(&self, n_a: usize, n_b: usize) -> f64 {
        self.deficits_a[n_a] + self.deficits_b[n_b]
    }

    /// `out = D v` (or `D† v`), via the reshape identity
    /// `(S_a ⊗ S_b) v = S_a V S_bᵀ` with `V` the (dim_a × dim_b) reshape.
    pub fn apply(&self, v: ArrayView1<C64>, adjoint: bool) -> Array1<C64> {
        let (da, db) = (self.space.dim_a(), self.space.dim_b());
        let vmat = v
            .to_owned()
            .into_shape_with_order((da, db))
            .expect("length matches space dimension");
        let (sa, sb);
        if adjoint {
            sa = self.s_a.t().mapv(|z| z.conj());
            sb = self.s_b.t().mapv(|z| z.conj());
        } else {
            sa = self.s_a.clone();
            sb = self.s_b.clone();
        }
        let tmp = sa.dot(&vmat);
        let out = tmp.dot(&sb.t());
        out.into_shape_with_order(da * db)
            .expect("shape preserved")
            .to_owned()
    }

    /// Dense matrix form `S_a ⊗ S_b`.
    pub fn to_dense(&self) -> Array2<C64> {
        ndarray::linalg::kron(&self.s_a, &self.s_b)
    }
}

/// Unitary `exp(χJ₊ - χ*J₋)` as a dense [`OperatorMatrix`].
///
/// Exactly unitary at any cutoff because J± conserve total photon number.
pub fn displacement_su2(space: FockSpace, chi: DisplacementParam) -> OperatorMatrix {
    let d = Su2Displacement::new(space, chi);
    OperatorMatrix::new(space, d.to_dense()).expect("dimension matches by construction")
}

/// `exp(ξ_aK₊⁽ᵃ⁾ - ξ_a*K₋⁽ᵃ⁾ + ξ_bK₊⁽ᵇ⁾ - ξ_b*K₋⁽ᵇ⁾)` as a dense matrix,
/// together with its truncation-leakage estimate at the given margin.
///
/// The factorization into `D(ξ_a)D(ξ_b)` is exact because the modes commute.
pub fn displacement_su11(
    space: FockSpace,
    xi_a: DisplacementParam,
    xi_b: DisplacementParam,
    margin: usize,
) -> Result<(OperatorMatrix, f64)> {
    let d = Su11Displacement::truncated_true(space, xi_a, xi_b);
    let leak = d.leakage(margin);
    Ok((OperatorMatrix::new(space, d.to_dense())?, leak))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su_algebra::generators::{apply_generator, GeneratorLabel, SparseOp};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn param_canonicalization_preserves_zeta() {
        let p = DisplacementParam::new(-0.7, 0.3);
        assert!(p.theta() >= 0.0);
        assert!(p.phi() > -PI && p.phi() <= PI);
        let q = DisplacementParam::new(0.7, 0.3 + PI);
        assert!((p.zeta() - q.zeta()).norm() < 1e-15);
        assert!((p.zeta().norm() - 0.35).abs() < 1e-15);
    }

    #[test]
    fn su2_zero_angle_is_identity() {
        let space = FockSpace::symmetric(4).unwrap();
        let d = displacement_su2(space, DisplacementParam::zero());
        let dim = space.dimension();
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((d.entries()[[i, j]] - c(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn su2_matches_direct_exponential_of_generator() {
        // block construction against expm of the full sparse generator
        let space = FockSpace::new(5, 4).unwrap();
        let chi = DisplacementParam::new(0.8, -1.1);
        let zeta = chi.zeta();
        let g = SparseOp::from_terms(
            space,
            &[
                (GeneratorLabel::JPlus, zeta),
                (GeneratorLabel::JMinus, -zeta.conj()),
            ],
        )
        .to_dense();
        let direct = expm(&g);
        let blocked = displacement_su2(space, chi);
        let diff = (&direct - blocked.entries())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12, "max diff {diff}");
    }

    #[test]
    fn su2_is_unitary_and_invertible() {
        let space = FockSpace::symmetric(6).unwrap();
        let chi = DisplacementParam::new(0.8, 0.3);
        let mut d = displacement_su2(space, chi);
        let dev = d.verify_unitary(1e-12, 0).unwrap();
        assert!(dev < 1e-12);
        let dinv = displacement_su2(space, chi.inverse());
        let prod = d.entries().dot(dinv.entries());
        let mut worst = 0.0f64;
        for i in 0..space.dimension() {
            for j in 0..space.dimension() {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((prod[[i, j]] - c(expect, 0.0)).norm());
            }
        }
        assert!(worst < 1e-12, "D(χ)D(-χ) deviates from 1 by {worst}");
    }

    #[test]
    fn su2_apply_agrees_with_dense() {
        let space = FockSpace::new(6, 5).unwrap();
        let chi = DisplacementParam::new(1.2, 2.0);
        let d = Su2Displacement::new(space, chi);
        let dense = d.to_dense();
        let mut v = Array1::<C64>::zeros(space.dimension());
        for (i, na, nb) in space.states() {
            v[i] = c(0.3 - 0.05 * na as f64, 0.02 * nb as f64);
        }
        let fast = d.apply(v.view(), false);
        let slow = dense.dot(&v);
        let diff = (&fast - &slow).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(diff < 1e-13);
        let fast_adj = d.apply(v.view(), true);
        let slow_adj = dense.t().mapv(|z| z.conj()).dot(&v);
        let diff = (&fast_adj - &slow_adj)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-13);
    }

    #[test]
    fn su11_identity_at_zero_angles() {
        let space = FockSpace::symmetric(5).unwrap();
        let (d, leak) = displacement_su11(
            space,
            DisplacementParam::zero(),
            DisplacementParam::zero(),
            2,
        )
        .unwrap();
        assert_eq!(leak, 0.0);
        for i in 0..space.dimension() {
            for j in 0..space.dimension() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((d.entries()[[i, j]] - c(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn squeezed_vacuum_amplitudes_match_closed_form() {
        // D(ξ_a) on |0⟩ against the analytic squeezed-vacuum expansion
        //   c_{2k} = (cosh r)^{-1/2} (e^{iψ} tanh r)^k sqrt((2k)!)/(2^k k!)
        // with ξ = r e^{iψ}.
        let space = FockSpace::new(40, 40).unwrap();
        let xi_a = DisplacementParam::new(0.5, 0.0);
        let d = Su11Displacement::truncated_true(space, xi_a, DisplacementParam::zero());
        let col = d.mode_a_matrix().column(0);
        let r = 0.25; // θ/2
        let psi = xi_a.zeta().arg();
        let mut expect = vec![C64::new(0.0, 0.0); 41];
        let pref = 1.0 / r.cosh().sqrt();
        let q = C64::from_polar(r.tanh(), psi);
        let mut qk = C64::new(1.0, 0.0);
        let mut ratio = 1.0f64; // sqrt((2k)!)/(2^k k!)
        for k in 0..=20 {
            expect[2 * k] = qk * (pref * ratio);
            qk *= q;
            let kk = (k + 1) as f64;
            ratio *= ((2.0 * kk - 1.0) * (2.0 * kk)).sqrt() / (2.0 * kk);
        }
        let mut worst = 0.0f64;
        for n in 0..=40 {
            worst = worst.max((col[n] - expect[n]).norm());
        }
        assert!(worst < 1e-12, "squeezed vacuum mismatch {worst}");
        // norm deficit far below threshold at this cutoff
        assert!(d.column_deficit(0, 0) < 1e-8);
        // parity selection: odd amplitudes vanish
        for n in (1..=39).step_by(2) {
            assert!(col[n].norm() < 1e-15);
        }
    }

    #[test]
    fn su11_factorizes_over_modes() {
        let space = FockSpace::new(24, 24).unwrap();
        let xi_a = DisplacementParam::new(0.5, 0.7);
        let xi_b = DisplacementParam::new(0.3, -0.4);
        let joint = Su11Displacement::truncated_true(space, xi_a, xi_b);
        let only_a = Su11Displacement::truncated_true(space, xi_a, DisplacementParam::zero());
        let only_b = Su11Displacement::truncated_true(space, DisplacementParam::zero(), xi_b);
        let prod = only_a.to_dense().dot(&only_b.to_dense());
        let dense = joint.to_dense();
        let keep = space.interior_indices(10).unwrap();
        let mut worst = 0.0f64;
        for &i in &keep {
            for &j in &keep {
                worst = worst.max((dense[[i, j]] - prod[[i, j]]).norm());
            }
        }
        assert!(worst < 1e-10, "factorization violated by {worst}");
    }

    #[test]
    fn unitary_construction_has_exact_column_norms() {
        let space = FockSpace::symmetric(20).unwrap();
        let d = Su11Displacement::unitary(
            space,
            DisplacementParam::new(0.6, 0.2),
            DisplacementParam::new(0.4, -0.9),
        );
        let dense = d.to_dense();
        for j in 0..space.dimension() {
            let n: f64 = dense.column(j).iter().map(|z| z.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn truncation_leakage_decays_with_cutoff() {
        let xi = DisplacementParam::new(0.8, 0.5);
        let mut last = f64::INFINITY;
        for cutoff in [20usize, 40, 60] {
            let space = FockSpace::symmetric(cutoff).unwrap();
            let d = Su11Displacement::truncated_true(space, xi, xi);
            let leak = d.leakage(10);
            assert!(
                leak < last,
                "leakage not monotone: {leak} at cutoff {cutoff} vs {last}"
            );
            last = leak;
        }
    }

    #[test]
    fn su11_apply_matches_dense_kron() {
        let space = FockSpace::new(10, 8).unwrap();
        let d = Su11Displacement::unitary(
            space,
            DisplacementParam::new(0.5, 1.0),
            DisplacementParam::new(0.2, -2.2),
        );
        let dense = d.to_dense();
        let mut v = Array1::<C64>::zeros(space.dimension());
        for (i, na, nb) in space.states() {
            v[i] = c((na as f64 * 0.21).sin(), (nb as f64 * 0.13).cos() * 0.4);
        }
        let fast = d.apply(v.view(), false);
        let slow = dense.dot(&v);
        let diff = (&fast - &slow).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(diff < 1e-12);
    }

    #[test]
    fn phase_factoring_identity_for_su2_generator() {
        // exp(χJ+ - χ*J-) must equal e^{iηJ0} exp(|χ|(J+-J-)) e^{-iηJ0}
        // with η = arg χ; exercised implicitly by the block builder, checked
        // here against the raw exponential with a complex χ.
        let space = FockSpace::new(4, 4).unwrap();
        let chi = DisplacementParam::new(0.9, 0.4);
        let zeta = chi.zeta();
        let g = SparseOp::from_terms(
            space,
            &[
                (GeneratorLabel::JPlus, zeta),
                (GeneratorLabel::JMinus, -zeta.conj()),
            ],
        )
        .to_dense();
        let direct = expm(&g);
        let d = Su2Displacement::new(space, chi).to_dense();
        let diff = (&direct - &d).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(diff < 1e-12);
        // and the ladder action sanity: J+ lowers nb, raises na
        let mut v = Array1::<C64>::zeros(space.dimension());
        v[space.index(1, 2)] = c(1.0, 0.0);
        let mut out = Array1::<C64>::zeros(space.dimension());
        apply_generator(
            GeneratorLabel::JPlus,
            space,
            v.view(),
            &mut out,
            c(1.0, 0.0),
        );
        assert!((out[space.index(2, 1)] - c(2.0, 0.0)).norm() < 1e-15);
    }
}
