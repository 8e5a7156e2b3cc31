//! Two-mode truncated Fock space and dense operators on it.

use ndarray::Array2;

use crate::{C64, Result, Su11Error};

/// Two-mode number basis truncated at `cutoff_a`, `cutoff_b` photons.
///
/// Basis ordering is row-major in `(n_a, n_b)`:
/// `index = n_a * (cutoff_b + 1) + n_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    cutoff_a: usize,
    cutoff_b: usize,
}

impl FockSpace {
    /// Both cutoffs must be at least 1.
    pub fn new(cutoff_a: usize, cutoff_b: usize) -> Result<Self> {
        if cutoff_a < 1 || cutoff_b < 1 {
            return Err(Su11Error::InvalidSpace(format!(
                "cutoffs must be >= 1, got ({cutoff_a}, {cutoff_b})"
            )));
        }
        Ok(Self { cutoff_a, cutoff_b })
    }

    /// Equal cutoff in both modes.
    pub fn symmetric(cutoff: usize) -> Result<Self> {
        Self::new(cutoff, cutoff)
    }

    pub fn cutoff_a(&self) -> usize {
        self.cutoff_a
    }

    pub fn cutoff_b(&self) -> usize {
        self.cutoff_b
    }

    /// Number of levels in mode a (`cutoff_a + 1`).
    pub fn dim_a(&self) -> usize {
        self.cutoff_a + 1
    }

    pub fn dim_b(&self) -> usize {
        self.cutoff_b + 1
    }

    /// Total dimension `(cutoff_a + 1)(cutoff_b + 1)`.
    pub fn dimension(&self) -> usize {
        self.dim_a() * self.dim_b()
    }

    /// Basis index of `|n_a, n_b⟩`.
    #[inline]
    pub fn index(&self, n_a: usize, n_b: usize) -> usize {
        debug_assert!(n_a <= self.cutoff_a && n_b <= self.cutoff_b);
        n_a * self.dim_b() + n_b
    }

    /// Occupations `(n_a, n_b)` of a basis index.
    #[inline]
    pub fn occupations(&self, index: usize) -> (usize, usize) {
        (index / self.dim_b(), index % self.dim_b())
    }

    /// Iterate `(index, n_a, n_b)` in basis order.
    pub fn states(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.dimension()).map(move |i| {
            let (na, nb) = self.occupations(i);
            (i, na, nb)
        })
    }

    /// True when both occupations sit at least `margin` levels below cutoff.
    #[inline]
    pub fn is_interior(&self, index: usize, margin: usize) -> bool {
        let (na, nb) = self.occupations(index);
        na + margin <= self.cutoff_a && nb + margin <= self.cutoff_b
    }

    /// Indices of the interior subspace for a per-mode `margin`.
    pub fn interior_indices(&self, margin: usize) -> Result<Vec<usize>> {
        if margin > self.cutoff_a.min(self.cutoff_b) {
            return Err(Su11Error::MarginTooLarge {
                margin,
                cutoff: self.cutoff_a.min(self.cutoff_b),
            });
        }
        Ok((0..self.dimension())
            .filter(|&i| self.is_interior(i, margin))
            .collect())
    }

    /// Embed this space's basis indices into a larger space (same ordering,
    /// bigger cutoffs). Returns the index map `small index -> big index`.
    pub fn embedding(&self, bigger: &FockSpace) -> Result<Vec<usize>> {
        if bigger.cutoff_a < self.cutoff_a || bigger.cutoff_b < self.cutoff_b {
            return Err(Su11Error::InvalidSpace(
                "embedding target must have cutoffs >= source".into(),
            ));
        }
        Ok(self
            .states()
            .map(|(_, na, nb)| bigger.index(na, nb))
            .collect())
    }
}

/// Dense complex matrix representing an operator on a [`FockSpace`].
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    space: FockSpace,
    entries: Array2<C64>,
    verified_hermitian: bool,
    verified_unitary: bool,
}

impl OperatorMatrix {
    /// Wrap a matrix without any verification flags.
    pub fn new(space: FockSpace, entries: Array2<C64>) -> Result<Self> {
        let d = space.dimension();
        if entries.nrows() != d || entries.ncols() != d {
            return Err(Su11Error::InvalidSpace(format!(
                "matrix shape {:?} does not match space dimension {}",
                entries.dim(),
                d
            )));
        }
        Ok(Self {
            space,
            entries,
            verified_hermitian: false,
            verified_unitary: false,
        })
    }

    pub fn zeros(space: FockSpace) -> Self {
        let d = space.dimension();
        Self {
            space,
            entries: Array2::zeros((d, d)),
            verified_hermitian: false,
            verified_unitary: false,
        }
    }

    /// Wrap a matrix, verifying `max |M - M†| < tol` and setting the flag.
    pub fn hermitian_checked(space: FockSpace, entries: Array2<C64>, tol: f64) -> Result<Self> {
        let mut op = Self::new(space, entries)?;
        let dev = op.hermiticity_deviation();
        if dev >= tol {
            return Err(Su11Error::NonHermitian {
                deviation: dev,
                tolerance: tol,
            });
        }
        op.verified_hermitian = true;
        Ok(op)
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn entries(&self) -> &Array2<C64> {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Array2<C64> {
        self.verified_hermitian = false;
        self.verified_unitary = false;
        &mut self.entries
    }

    pub fn into_entries(self) -> Array2<C64> {
        self.entries
    }

    pub fn is_verified_hermitian(&self) -> bool {
        self.verified_hermitian
    }

    pub fn is_verified_unitary(&self) -> bool {
        self.verified_unitary
    }

    /// `max_ij |M_ij - conj(M_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let m = &self.entries;
        let mut worst = 0.0f64;
        for i in 0..m.nrows() {
            for j in i..m.ncols() {
                let d = (m[[i, j]] - m[[j, i]].conj()).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// `max_ij |(M†M - 1)_ij|` restricted to interior rows and columns.
    ///
    /// Verifies unitarity where truncation cannot interfere; `margin = 0`
    /// checks the whole truncated space.
    pub fn unitarity_deviation(&self, margin: usize) -> Result<f64> {
        let keep = self.space.interior_indices(margin)?;
        let gram = self
            .entries
            .t()
            .mapv(|z| z.conj())
            .dot(&self.entries);
        let mut worst = 0.0f64;
        for &i in &keep {
            for &j in &keep {
                let expect = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                let d = (gram[[i, j]] - expect).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }

    /// Verify unitarity on the interior subspace and set the flag.
    pub fn verify_unitary(&mut self, tol: f64, margin: usize) -> Result<f64> {
        let dev = self.unitarity_deviation(margin)?;
        if dev >= tol {
            return Err(Su11Error::NonHermitian {
                deviation: dev,
                tolerance: tol,
            });
        }
        self.verified_unitary = true;
        Ok(dev)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = self.entries.t().mapv(|z| z.conj());
        t = t.as_standard_layout().to_owned();
        Self {
            space: self.space,
            entries: t,
            verified_hermitian: self.verified_hermitian,
            verified_unitary: self.verified_unitary,
        }
    }

    /// Max-magnitude entry difference against another operator, restricted to
    /// interior rows and columns.
    pub fn max_interior_difference(&self, other: &Self, margin: usize) -> Result<f64> {
        let keep = self.space.interior_indices(margin)?;
        let mut worst = 0.0f64;
        for &i in &keep {
            for &j in &keep {
                let d = (self.entries[[i, j]] - other.entries[[i, j]]).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_ordering_is_row_major_in_na_nb() {
        let space = FockSpace::new(2, 3).unwrap();
        assert_eq!(space.dimension(), 12);
        assert_eq!(space.index(0, 0), 0);
        assert_eq!(space.index(0, 3), 3);
        assert_eq!(space.index(1, 0), 4);
        assert_eq!(space.index(2, 3), 11);
        for (i, na, nb) in space.states() {
            assert_eq!(space.occupations(i), (na, nb));
        }
    }

    #[test]
    fn rejects_zero_cutoff() {
        assert!(FockSpace::new(0, 5).is_err());
        assert!(FockSpace::new(5, 0).is_err());
    }

    #[test]
    fn interior_margin_filters_top_of_ladder() {
        let space = FockSpace::symmetric(4).unwrap();
        let interior = space.interior_indices(2).unwrap();
        assert_eq!(interior.len(), 9); // n_a, n_b in 0..=2
        assert!(space.interior_indices(5).is_err());
    }

    #[test]
    fn hermitian_check_rejects_asymmetric_matrix() {
        let space = FockSpace::symmetric(1).unwrap();
        let mut m = Array2::<C64>::zeros((4, 4));
        m[[0, 1]] = C64::new(1.0, 0.0);
        assert!(OperatorMatrix::hermitian_checked(space, m.clone(), 1e-12).is_err());
        m[[1, 0]] = C64::new(1.0, 0.0);
        let op = OperatorMatrix::hermitian_checked(space, m, 1e-12).unwrap();
        assert!(op.is_verified_hermitian());
    }
}
