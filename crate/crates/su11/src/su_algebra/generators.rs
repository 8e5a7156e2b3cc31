//! Bosonic realizations of the su(1,1) and su(2) generators on a truncated
//! two-mode Fock space.
//!
//! Two su(1,1) realizations coexist: the cross-mode set
//! `K₊⁽ᵃᵇ⁾ = a†b†`, `K₋⁽ᵃᵇ⁾ = ba`, `K₀⁽ᵃᵇ⁾ = (a†a + b†b + 1)/2`
//! and the single-mode sets `K₊⁽ⁱ⁾ = i†²/2`, `K₋⁽ⁱ⁾ = i²/2`,
//! `K₀⁽ⁱ⁾ = (i†i + 1/2)/2` for `i = a, b`. The su(2) partner is
//! `J₊ = a†b`, `J₋ = b†a`, `J₀ = (a†a - b†b)/2`, and
//! `N_d = a†a - b†b` is the conserved mode-number difference (`N_d = 2 J₀`).

use ndarray::{Array1, Array2, ArrayView1};

use super::fock::{FockSpace, OperatorMatrix};
use crate::{C64, Result, Su11Error};

/// Labels for every operator the library can realize on the Fock basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorLabel {
    KPlusA,
    KMinusA,
    KZeroA,
    KPlusB,
    KMinusB,
    KZeroB,
    KPlusAB,
    KMinusAB,
    KZeroAB,
    JPlus,
    JMinus,
    JZero,
    NumberDiff,
    A,
    ADag,
    B,
    BDag,
}

impl GeneratorLabel {
    pub const ALL: [GeneratorLabel; 17] = [
        GeneratorLabel::KPlusA,
        GeneratorLabel::KMinusA,
        GeneratorLabel::KZeroA,
        GeneratorLabel::KPlusB,
        GeneratorLabel::KMinusB,
        GeneratorLabel::KZeroB,
        GeneratorLabel::KPlusAB,
        GeneratorLabel::KMinusAB,
        GeneratorLabel::KZeroAB,
        GeneratorLabel::JPlus,
        GeneratorLabel::JMinus,
        GeneratorLabel::JZero,
        GeneratorLabel::NumberDiff,
        GeneratorLabel::A,
        GeneratorLabel::ADag,
        GeneratorLabel::B,
        GeneratorLabel::BDag,
    ];

    /// Label of the Hermitian adjoint.
    pub fn adjoint(self) -> GeneratorLabel {
        use GeneratorLabel::*;
        match self {
            KPlusA => KMinusA,
            KMinusA => KPlusA,
            KPlusB => KMinusB,
            KMinusB => KPlusB,
            KPlusAB => KMinusAB,
            KMinusAB => KPlusAB,
            JPlus => JMinus,
            JMinus => JPlus,
            A => ADag,
            ADag => A,
            B => BDag,
            BDag => B,
            diag => diag,
        }
    }

    pub fn name(self) -> &'static str {
        use GeneratorLabel::*;
        match self {
            KPlusA => "K+(a)",
            KMinusA => "K-(a)",
            KZeroA => "K0(a)",
            KPlusB => "K+(b)",
            KMinusB => "K-(b)",
            KZeroB => "K0(b)",
            KPlusAB => "K+(ab)",
            KMinusAB => "K-(ab)",
            KZeroAB => "K0(ab)",
            JPlus => "J+",
            JMinus => "J-",
            JZero => "J0",
            NumberDiff => "N_d",
            A => "a",
            ADag => "a†",
            B => "b",
            BDag => "b†",
        }
    }
}

#[inline]
fn sqf(n: usize) -> f64 {
    (n as f64).sqrt()
}

/// Accumulate `out += scale * G v` for the labeled generator.
///
/// Runs in O(dimension); the ladder matrix elements are the usual √n factors
/// and everything above cutoff is dropped (sharp truncation).
pub fn apply_generator(
    label: GeneratorLabel,
    space: FockSpace,
    v: ArrayView1<C64>,
    out: &mut Array1<C64>,
    scale: C64,
) {
    use GeneratorLabel::*;
    let (ca, cb) = (space.cutoff_a(), space.cutoff_b());
    match label {
        KZeroAB => {
            for (i, na, nb) in space.states() {
                out[i] += scale * v[i] * (0.5 * (na + nb + 1) as f64);
            }
        }
        KZeroA => {
            for (i, na, _) in space.states() {
                out[i] += scale * v[i] * (0.5 * (na as f64 + 0.5));
            }
        }
        KZeroB => {
            for (i, _, nb) in space.states() {
                out[i] += scale * v[i] * (0.5 * (nb as f64 + 0.5));
            }
        }
        JZero => {
            for (i, na, nb) in space.states() {
                out[i] += scale * v[i] * (0.5 * (na as f64 - nb as f64));
            }
        }
        NumberDiff => {
            for (i, na, nb) in space.states() {
                out[i] += scale * v[i] * (na as f64 - nb as f64);
            }
        }
        KPlusA => {
            for (i, na, nb) in space.states() {
                if na + 2 <= ca {
                    let w = 0.5 * sqf(na + 1) * sqf(na + 2);
                    out[space.index(na + 2, nb)] += scale * v[i] * w;
                }
            }
        }
        KMinusA => {
            for (i, na, nb) in space.states() {
                if na >= 2 {
                    let w = 0.5 * sqf(na) * sqf(na - 1);
                    out[space.index(na - 2, nb)] += scale * v[i] * w;
                }
            }
        }
        KPlusB => {
            for (i, na, nb) in space.states() {
                if nb + 2 <= cb {
                    let w = 0.5 * sqf(nb + 1) * sqf(nb + 2);
                    out[space.index(na, nb + 2)] += scale * v[i] * w;
                }
            }
        }
        KMinusB => {
            for (i, na, nb) in space.states() {
                if nb >= 2 {
                    let w = 0.5 * sqf(nb) * sqf(nb - 1);
                    out[space.index(na, nb - 2)] += scale * v[i] * w;
                }
            }
        }
        KPlusAB => {
            for (i, na, nb) in space.states() {
                if na + 1 <= ca && nb + 1 <= cb {
                    let w = sqf(na + 1) * sqf(nb + 1);
                    out[space.index(na + 1, nb + 1)] += scale * v[i] * w;
                }
            }
        }
        KMinusAB => {
            for (i, na, nb) in space.states() {
                if na >= 1 && nb >= 1 {
                    let w = sqf(na) * sqf(nb);
                    out[space.index(na - 1, nb - 1)] += scale * v[i] * w;
                }
            }
        }
        JPlus => {
            for (i, na, nb) in space.states() {
                if na + 1 <= ca && nb >= 1 {
                    let w = sqf(na + 1) * sqf(nb);
                    out[space.index(na + 1, nb - 1)] += scale * v[i] * w;
                }
            }
        }
        JMinus => {
            for (i, na, nb) in space.states() {
                if na >= 1 && nb + 1 <= cb {
                    let w = sqf(na) * sqf(nb + 1);
                    out[space.index(na - 1, nb + 1)] += scale * v[i] * w;
                }
            }
        }
        A => {
            for (i, na, nb) in space.states() {
                if na >= 1 {
                    out[space.index(na - 1, nb)] += scale * v[i] * sqf(na);
                }
            }
        }
        ADag => {
            for (i, na, nb) in space.states() {
                if na + 1 <= ca {
                    out[space.index(na + 1, nb)] += scale * v[i] * sqf(na + 1);
                }
            }
        }
        B => {
            for (i, na, nb) in space.states() {
                if nb >= 1 {
                    out[space.index(na, nb - 1)] += scale * v[i] * sqf(nb);
                }
            }
        }
        BDag => {
            for (i, na, nb) in space.states() {
                if nb + 1 <= cb {
                    out[space.index(na, nb + 1)] += scale * v[i] * sqf(nb + 1);
                }
            }
        }
    }
}

/// A linear combination of generator matrices, kept in sparse triplet form.
///
/// This is the workhorse for Hamiltonian application and for comparing
/// closed-form expansions against matrix oracles without paying O(dim²).
#[derive(Debug, Clone)]
pub struct SparseOp {
    space: FockSpace,
    terms: Vec<(GeneratorLabel, C64)>,
}

impl SparseOp {
    pub fn new(space: FockSpace) -> Self {
        Self {
            space,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(space: FockSpace, terms: &[(GeneratorLabel, C64)]) -> Self {
        Self {
            space,
            terms: terms.to_vec(),
        }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn terms(&self) -> &[(GeneratorLabel, C64)] {
        &self.terms
    }

    pub fn push(&mut self, label: GeneratorLabel, coeff: C64) {
        if coeff != C64::new(0.0, 0.0) {
            self.terms.push((label, coeff));
        }
    }

    /// `out += scale * Op v`.
    pub fn accumulate(&self, v: ArrayView1<C64>, out: &mut Array1<C64>, scale: C64) {
        for &(label, coeff) in &self.terms {
            apply_generator(label, self.space, v, out, scale * coeff);
        }
    }

    /// `Op v` as a fresh vector.
    pub fn apply(&self, v: ArrayView1<C64>) -> Array1<C64> {
        let mut out = Array1::zeros(self.space.dimension());
        self.accumulate(v, &mut out, C64::new(1.0, 0.0));
        out
    }

    pub fn to_dense(&self) -> Array2<C64> {
        let d = self.space.dimension();
        let mut m = Array2::zeros((d, d));
        let mut basis = Array1::zeros(d);
        let mut col = Array1::zeros(d);
        for j in 0..d {
            basis[j] = C64::new(1.0, 0.0);
            col.fill(C64::new(0.0, 0.0));
            self.accumulate(basis.view(), &mut col, C64::new(1.0, 0.0));
            m.column_mut(j).assign(&col);
            basis[j] = C64::new(0.0, 0.0);
        }
        m
    }
}

/// Dense matrix of a single labeled generator in the fixed basis.
pub fn build_generator(space: FockSpace, label: GeneratorLabel) -> OperatorMatrix {
    let m = SparseOp::from_terms(space, &[(label, C64::new(1.0, 0.0))]).to_dense();
    OperatorMatrix::new(space, m).expect("shape is consistent by construction")
}

/// Dense matrix of a labeled generator looked up by name, for CLI use.
pub fn generator_by_name(name: &str) -> Result<GeneratorLabel> {
    GeneratorLabel::ALL
        .iter()
        .copied()
        .find(|l| l.name() == name)
        .ok_or_else(|| Su11Error::UnsupportedLabel {
            label: name.to_string(),
            operation: "generator lookup".into(),
        })
}
