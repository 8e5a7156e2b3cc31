//! Closed-form similarity transformations of the generators under the SU(2)
//! and SU(1,1) displacement operators.
//!
//! With `u = χ/|χ|` and `θ = 2|χ|`:
//!
//! ```text
//! D†(χ) K₋⁽ᵃ⁾ D(χ)  = (u/2)sinθ K₋⁽ᵃᵇ⁾ + ((cosθ+1)/2) K₋⁽ᵃ⁾ - (u²/2)(cosθ-1) K₋⁽ᵇ⁾
//! D†(χ) K₋⁽ᵇ⁾ D(χ)  = -(u*/2)sinθ K₋⁽ᵃᵇ⁾ - (u*²/2)(cosθ-1) K₋⁽ᵃ⁾ + ((cosθ+1)/2) K₋⁽ᵇ⁾
//! D†(χ) K₋⁽ᵃᵇ⁾ D(χ) = cosθ K₋⁽ᵃᵇ⁾ - u* sinθ K₋⁽ᵃ⁾ + u sinθ K₋⁽ᵇ⁾
//! D†(χ) K₀⁽ᵃᵇ⁾ D(χ) = K₀⁽ᵃᵇ⁾
//! ```
//!
//! and with `v_i = ξ_i/|ξ_i|`, `θ_i = 2|ξ_i|`:
//!
//! ```text
//! D†(ξ) K₊⁽ⁱ⁾ D(ξ) = v_i* sinhθ_i K₀⁽ⁱ⁾ + ((coshθ_i+1)/2) K₊⁽ⁱ⁾ + (v_i*²/2)(coshθ_i-1) K₋⁽ⁱ⁾
//! D†(ξ) K₀⁽ⁱ⁾ D(ξ) = coshθ_i K₀⁽ⁱ⁾ + (sinhθ_i/2)(v_i K₊⁽ⁱ⁾ + v_i* K₋⁽ⁱ⁾)
//! D†(ξ_a) a D(ξ_a) = cosh(θ_a/2) a + v_a sinh(θ_a/2) a†
//! ```
//!
//! Raising partners follow from `(D† K₋ D)† = D† K₊ D`. The θ → 0 limits are
//! analytic and equal the identity expansion, so they are returned directly
//! rather than evaluating `χ/|χ|` at zero.

use super::displacement::DisplacementParam;
use super::fock::FockSpace;
use super::generators::{GeneratorLabel, SparseOp};
use crate::{C64, Result, Su11Error};

/// A generator-basis expansion `Σ c_L · L`, the return type of the
/// closed-form similarity transformations.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorExpansion {
    terms: Vec<(GeneratorLabel, C64)>,
}

impl GeneratorExpansion {
    pub fn identity_on(label: GeneratorLabel) -> Self {
        Self {
            terms: vec![(label, C64::new(1.0, 0.0))],
        }
    }

    pub fn from_terms(terms: Vec<(GeneratorLabel, C64)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(GeneratorLabel, C64)] {
        &self.terms
    }

    /// Coefficient on one generator (zero when absent).
    pub fn coefficient(&self, label: GeneratorLabel) -> C64 {
        self.terms
            .iter()
            .filter(|(l, _)| *l == label)
            .map(|(_, v)| *v)
            .sum()
    }

    /// Expansion of the Hermitian adjoint, term by term.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|&(l, v)| (l.adjoint(), v.conj()))
                .collect(),
        }
    }

    pub fn to_sparse(&self, space: FockSpace) -> SparseOp {
        SparseOp::from_terms(space, &self.terms)
    }
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Expansion of `D†(χ) X D(χ)` for the SU(2) displacement.
///
/// Supported `X`: `K±⁽ᵃ⁾`, `K±⁽ᵇ⁾`, `K±⁽ᵃᵇ⁾`, `K₀⁽ᵃᵇ⁾`.
pub fn similarity_su2_closed_form(
    label: GeneratorLabel,
    chi: DisplacementParam,
) -> Result<GeneratorExpansion> {
    use GeneratorLabel::*;
    let supported = matches!(
        label,
        KPlusA | KMinusA | KPlusB | KMinusB | KPlusAB | KMinusAB | KZeroAB
    );
    if !supported {
        return Err(Su11Error::UnsupportedLabel {
            label: label.name().into(),
            operation: "SU(2) similarity transformation".into(),
        });
    }
    if label == KZeroAB {
        return Ok(GeneratorExpansion::identity_on(KZeroAB));
    }
    if chi.is_zero() {
        return Ok(GeneratorExpansion::identity_on(label));
    }

    let u = chi.zeta() / c(chi.zeta().norm());
    let theta = chi.theta();
    let (c2, s2) = (theta.cos(), theta.sin());

    let minus_expansion = |l: GeneratorLabel| -> GeneratorExpansion {
        match l {
            KMinusA => GeneratorExpansion::from_terms(vec![
                (KMinusAB, u * c(0.5 * s2)),
                (KMinusA, c(0.5 * (c2 + 1.0))),
                (KMinusB, -u * u * c(0.5 * (c2 - 1.0))),
            ]),
            KMinusB => GeneratorExpansion::from_terms(vec![
                (KMinusAB, -u.conj() * c(0.5 * s2)),
                (KMinusA, -u.conj() * u.conj() * c(0.5 * (c2 - 1.0))),
                (KMinusB, c(0.5 * (c2 + 1.0))),
            ]),
            KMinusAB => GeneratorExpansion::from_terms(vec![
                (KMinusAB, c(c2)),
                (KMinusA, -u.conj() * c(s2)),
                (KMinusB, u * c(s2)),
            ]),
            _ => unreachable!(),
        }
    };

    Ok(match label {
        KMinusA | KMinusB | KMinusAB => minus_expansion(label),
        KPlusA => minus_expansion(KMinusA).adjoint(),
        KPlusB => minus_expansion(KMinusB).adjoint(),
        KPlusAB => minus_expansion(KMinusAB).adjoint(),
        _ => unreachable!(),
    })
}

/// Expansion of `D†(ξ)_ab X D(ξ)_ab` for the two-mode SU(1,1) displacement.
///
/// Supported `X`: `K±⁽ⁱ⁾`, `K₀⁽ⁱ⁾` for `i = a, b`, and the bosonic `a`, `b`.
pub fn similarity_su11_closed_form(
    label: GeneratorLabel,
    xi_a: DisplacementParam,
    xi_b: DisplacementParam,
) -> Result<GeneratorExpansion> {
    use GeneratorLabel::*;
    let (xi, k_zero, k_plus, k_minus, lower) = match label {
        KPlusA | KMinusA | KZeroA | A => (xi_a, KZeroA, KPlusA, KMinusA, A),
        KPlusB | KMinusB | KZeroB | B => (xi_b, KZeroB, KPlusB, KMinusB, B),
        _ => {
            return Err(Su11Error::UnsupportedLabel {
                label: label.name().into(),
                operation: "SU(1,1) similarity transformation".into(),
            })
        }
    };
    if xi.is_zero() {
        return Ok(GeneratorExpansion::identity_on(label));
    }

    let v = xi.zeta() / c(xi.zeta().norm());
    let theta = xi.theta();
    let (ch, sh) = (theta.cosh(), theta.sinh());
    let half = theta / 2.0;

    let plus_expansion = GeneratorExpansion::from_terms(vec![
        (k_zero, v.conj() * c(sh)),
        (k_plus, c(0.5 * (ch + 1.0))),
        (k_minus, v.conj() * v.conj() * c(0.5 * (ch - 1.0))),
    ]);

    Ok(match label {
        KPlusA | KPlusB => plus_expansion,
        KMinusA | KMinusB => plus_expansion.adjoint(),
        KZeroA | KZeroB => GeneratorExpansion::from_terms(vec![
            (k_zero, c(ch)),
            (k_plus, v * c(0.5 * sh)),
            (k_minus, v.conj() * c(0.5 * sh)),
        ]),
        A | B => GeneratorExpansion::from_terms(vec![
            (lower, c(half.cosh())),
            (lower.adjoint(), v * c(half.sinh())),
        ]),
        _ => unreachable!(),
    })
}
