//! Rational subspaces in canonical form.
//!
//! A `Subspace` stores a reduced row-echelon basis (pivot columns strictly
//! increasing, pivots 1, zeros above and below each pivot), so two equal
//! subspaces are structurally equal and `PartialEq` is decidable equality.
//! These carry the central-series terms, centers, representation kernels and
//! generalized weight blocks used everywhere else.

use crate::matrix::{Matrix, RatMatrix};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes a spanning set (possibly dependent, possibly empty).
    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let m = RatMatrix::from_rows(vectors).expect("rectangular by construction");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        let id = RatMatrix::identity(ambient);
        Self::span(ambient, (0..ambient).map(|i| id.row(i).to_vec()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    ///
    /// With an RREF basis the candidate coordinates are just the entries of
    /// `v` at the pivot columns; membership is confirmed by reconstruction.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Scalar::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in rebuilt.iter_mut().zip(b) {
                *slot += &(c * x);
            }
        }
        if rebuilt == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// True when m·v stays in the subspace for every basis vector v.
    pub fn is_invariant_under(&self, m: &RatMatrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Matrix of `m` restricted to this subspace, in the canonical basis;
    /// `None` when the subspace is not invariant.
    pub fn restriction_of(&self, m: &RatMatrix) -> Option<RatMatrix> {
        let k = self.dim();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(k);
        for v in &self.basis {
            cols.push(self.coordinates(&m.apply(v))?);
        }
        Some(Matrix::from_fn(k, k, |i, j| cols[j][i].clone()))
    }

    /// Lifts coordinates in the canonical basis back to ambient coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (slot, x) in out.iter_mut().zip(b) {
                *slot += &(c * x);
            }
        }
        out
    }
}

/// Rank of the stacked bases; equals the sum of dims iff the sum is direct.
pub fn stacked_rank(spaces: &[Subspace]) -> usize {
    let Some(first) = spaces.first() else {
        return 0;
    };
    let rows: Vec<Vec<Scalar>> = spaces
        .iter()
        .flat_map(|s| s.basis().iter().cloned())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    debug_assert!(spaces.iter().all(|s| s.ambient_dim() == first.ambient_dim()));
    RatMatrix::from_rows(rows).expect("uniform ambient").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 0, 2])]);
        let b = Subspace::span(3, vec![v(&[0, 0, 1]), v(&[2, 2, 2]), v(&[1, 1, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn coordinates_and_membership() {
        let s = Subspace::span(3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert!(s.contains(&v(&[2, 3, 5])));
        assert_eq!(s.coordinates(&v(&[2, 3, 5])), Some(vec![rat!(2), rat!(3)]));
        assert!(!s.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn restriction_in_invariant_subspace() {
        // Shift matrix e1<-e2<-e3 restricted to span(e1,e2).
        let m = RatMatrix::from_rows(vec![v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, 0])]).unwrap();
        let s = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(s.is_invariant_under(&m));
        let r = s.restriction_of(&m).unwrap();
        assert_eq!(
            r,
            RatMatrix::from_rows(vec![v(&[0, 1]), v(&[0, 0])]).unwrap()
        );
        let t = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(!t.is_invariant_under(&m));
        assert!(t.restriction_of(&m).is_none());
    }

    #[test]
    fn full_space_has_standard_basis() {
        let s = Subspace::full(3);
        assert_eq!(s.basis()[0], v(&[1, 0, 0]));
        assert_eq!(s.basis()[1], v(&[0, 1, 0]));
        assert_eq!(s.basis()[2], v(&[0, 0, 1]));
    }

    #[test]
    fn stacked_rank_detects_direct_sums() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = Subspace::span(3, vec![v(&[1, 1, 0])]);
        assert_eq!(stacked_rank(&[a.clone(), b.clone()]), 3);
        assert_eq!(stacked_rank(&[a, b, c]), 3);
    }
}
