//! Coefficient sets of the linear su(1,1) Hamiltonian and the mapping from
//! physical two-mode oscillator couplings.

use serde::{Deserialize, Serialize};

use crate::su_algebra::{FockSpace, GeneratorLabel, OperatorMatrix, SparseOp};
use crate::{C64, Result, Su11Error};

fn c64_to_pair(z: &C64) -> [f64; 2] {
    [z.re, z.im]
}

fn pair_to_c64(p: &[f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

/// The seven coefficients of
/// `H = α₀K₀⁽ᵃᵇ⁾ + Σ_j (α₊⁽ʲ⁾K₊⁽ʲ⁾ + α₋⁽ʲ⁾K₋⁽ʲ⁾)`, `j ∈ {a, b, ab}`.
///
/// Only the raising coefficients are stored; the lowering partners are their
/// complex conjugates, which makes the Hamiltonian Hermitian by construction.
/// `α₀` is real for the same reason.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaCoeffs {
    pub alpha0: f64,
    #[serde(
        rename = "alpha_a",
        serialize_with = "ser_c64",
        deserialize_with = "de_c64"
    )]
    pub alpha_plus_a: C64,
    #[serde(
        rename = "alpha_b",
        serialize_with = "ser_c64",
        deserialize_with = "de_c64"
    )]
    pub alpha_plus_b: C64,
    #[serde(
        rename = "alpha_ab",
        serialize_with = "ser_c64",
        deserialize_with = "de_c64"
    )]
    pub alpha_plus_ab: C64,
}

fn ser_c64<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    c64_to_pair(z).serialize(s)
}

fn de_c64<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<C64, D::Error> {
    let p = <[f64; 2]>::deserialize(d)?;
    Ok(pair_to_c64(&p))
}

impl AlphaCoeffs {
    pub fn new(alpha0: f64, alpha_plus_a: C64, alpha_plus_b: C64, alpha_plus_ab: C64) -> Self {
        Self {
            alpha0,
            alpha_plus_a,
            alpha_plus_b,
            alpha_plus_ab,
        }
    }

    /// Pure `α₀ K₀⁽ᵃᵇ⁾` oscillator.
    pub fn harmonic(alpha0: f64) -> Self {
        Self::new(alpha0, C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    pub fn alpha_minus_a(&self) -> C64 {
        self.alpha_plus_a.conj()
    }

    pub fn alpha_minus_b(&self) -> C64 {
        self.alpha_plus_b.conj()
    }

    pub fn alpha_minus_ab(&self) -> C64 {
        self.alpha_plus_ab.conj()
    }

    /// Generator terms of the Hamiltonian (conjugate partners included).
    pub fn terms(&self) -> Vec<(GeneratorLabel, C64)> {
        use GeneratorLabel::*;
        vec![
            (KZeroAB, C64::new(self.alpha0, 0.0)),
            (KPlusA, self.alpha_plus_a),
            (KMinusA, self.alpha_minus_a()),
            (KPlusB, self.alpha_plus_b),
            (KMinusB, self.alpha_minus_b()),
            (KPlusAB, self.alpha_plus_ab),
            (KMinusAB, self.alpha_minus_ab()),
        ]
    }

    pub fn to_sparse(&self, space: FockSpace) -> SparseOp {
        SparseOp::from_terms(space, &self.terms())
    }

    /// Componentwise max distance to another coefficient set.
    pub fn max_difference(&self, other: &AlphaCoeffs) -> f64 {
        (self.alpha0 - other.alpha0)
            .abs()
            .max((self.alpha_plus_a - other.alpha_plus_a).norm())
            .max((self.alpha_plus_b - other.alpha_plus_b).norm())
            .max((self.alpha_plus_ab - other.alpha_plus_ab).norm())
    }
}

/// Physical couplings of the generalized two-mode oscillator
/// `H = H₀ + Σ_i (ω_i u_i/2)(x_i p_i + p_i x_i) + s p₁p₂/(2m)
///      + √(ω₁ω₂)(u x₁p₂ + u' x₂p₁) + (ω₁ω₂/2) m v x₁x₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalOscillatorParams {
    pub omega1: f64,
    pub omega2: f64,
    pub u1: f64,
    pub u2: f64,
    pub u: f64,
    pub u_prime: f64,
    pub s: f64,
    pub v: f64,
}

/// Full coefficient set of the generalized oscillator: the su(1,1) sector
/// plus the su(2) sector `β₀J₀ + β₊J₊ + β₋J₋`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedCoeffs {
    pub alpha: AlphaCoeffs,
    pub beta0: f64,
    pub beta_plus: C64,
}

impl GeneralizedCoeffs {
    pub fn beta_minus(&self) -> C64 {
        self.beta_plus.conj()
    }

    /// All generator terms, su(2) sector included.
    pub fn terms(&self) -> Vec<(GeneratorLabel, C64)> {
        use GeneratorLabel::*;
        let mut t = self.alpha.terms();
        t.push((JZero, C64::new(self.beta0, 0.0)));
        t.push((JPlus, self.beta_plus));
        t.push((JMinus, self.beta_minus()));
        t
    }
}

/// Map physical oscillator couplings onto the generalized coefficient set:
///
/// ```text
/// α₀ = ω₁+ω₂            β₀ = ω₁-ω₂
/// α₊⁽¹⁾ = -iω₁u₁/2      α₊⁽²⁾ = -iω₂u₂/2
/// α₊⁽¹²⁾ = √(ω₁ω₂)(v-s)/8 - i(ω₂u + ω₁u')/4
/// β₊    = √(ω₁ω₂)(v+s)/8 + i(ω₂u - ω₁u')/4
/// ```
pub fn from_physical(params: &PhysicalOscillatorParams) -> Result<GeneralizedCoeffs> {
    if params.omega1 <= 0.0 || params.omega2 <= 0.0 {
        return Err(Su11Error::NonPositiveFrequency(format!(
            "ω₁ = {}, ω₂ = {}",
            params.omega1, params.omega2
        )));
    }
    let (w1, w2) = (params.omega1, params.omega2);
    let root = (w1 * w2).sqrt();
    let alpha = AlphaCoeffs::new(
        w1 + w2,
        C64::new(0.0, -0.5 * w1 * params.u1),
        C64::new(0.0, -0.5 * w2 * params.u2),
        C64::new(
            root * (params.v - params.s) / 8.0,
            -(w2 * params.u + w1 * params.u_prime) / 4.0,
        ),
    );
    Ok(GeneralizedCoeffs {
        alpha,
        beta0: w1 - w2,
        beta_plus: C64::new(
            root * (params.v + params.s) / 8.0,
            (w2 * params.u - w1 * params.u_prime) / 4.0,
        ),
    })
}

/// Tolerance below which the su(2) sector counts as absent.
pub const ISOTROPY_TOL: f64 = 1e-12;

/// Extract the pure su(1,1) coefficient set, requiring the su(2) sector to
/// vanish (isotropic case: `u = u'`, `v = -s`, `ω₁ = ω₂`).
pub fn reduce_isotropic(g: &GeneralizedCoeffs) -> Result<AlphaCoeffs> {
    if g.beta0.abs() > ISOTROPY_TOL {
        return Err(Su11Error::ResidualSu2Sector {
            coefficient: "beta0".into(),
            magnitude: g.beta0.abs(),
            tolerance: ISOTROPY_TOL,
        });
    }
    if g.beta_plus.norm() > ISOTROPY_TOL {
        return Err(Su11Error::ResidualSu2Sector {
            coefficient: "beta_plus".into(),
            magnitude: g.beta_plus.norm(),
            tolerance: ISOTROPY_TOL,
        });
    }
    Ok(g.alpha)
}

/// Assemble `H = Σ α·K` as a dense matrix, Hermitian by construction and
/// verified to 1e-12.
pub fn build_matrix(alpha: &AlphaCoeffs, space: FockSpace) -> OperatorMatrix {
    let dense = alpha.to_sparse(space).to_dense();
    OperatorMatrix::hermitian_checked(space, dense, 1e-12)
        .expect("conjugate pairing guarantees hermiticity")
}

/// Assemble the generalized-oscillator matrix including the su(2) sector.
pub fn build_generalized_matrix(g: &GeneralizedCoeffs, space: FockSpace) -> OperatorMatrix {
    let dense = SparseOp::from_terms(space, &g.terms()).to_dense();
    OperatorMatrix::hermitian_checked(space, dense, 1e-12)
        .expect("conjugate pairing guarantees hermiticity")
}
