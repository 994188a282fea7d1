//! Lie algebras as validated structure-constant tensors.
//!
//! Construction checks antisymmetry and the Jacobi identity exactly and
//! reports the offending basis indices with the defect vector. On top of the
//! bracket sit the descending central series, the center, nilpotency and
//! filiformity predicates, and the model algebras: the abelian algebra and
//! the filiform model algebra with [X₁,Xᵢ] = X_{i+1}.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, RatMatrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    // c[i][j] is the coordinate vector of [X_i, X_j].
    c: Vec<Vec<Vec<Scalar>>>,
}

/// Descending central series 𝒞⁰ ⊇ 𝒞¹ ⊇ …, with 𝒞⁰ the whole algebra and
/// 𝒞^{i+1} = [g, 𝒞^i]. The list ends at the first term that is zero or
/// equal to its predecessor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralSeries {
    terms: Vec<Subspace>,
}

impl CentralSeries {
    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn stabilizes_at_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

impl LieAlgebra {
    /// Validates a full n×n×n structure-constant tensor.
    pub fn new(dim: usize, c: Vec<Vec<Vec<Scalar>>>, basis_names: Option<Vec<String>>) -> Result<Self> {
        if c.len() != dim || c.iter().any(|p| p.len() != dim) {
            return Err(Error::ShapeMismatch {
                reason: format!("structure tensor must be {dim}x{dim}x{dim}"),
            });
        }
        for plane in &c {
            for vec in plane {
                if vec.len() != dim {
                    return Err(Error::ShapeMismatch {
                        reason: format!("structure tensor must be {dim}x{dim}x{dim}"),
                    });
                }
            }
        }
        let names = match basis_names {
            Some(names) => {
                if names.len() != dim {
                    return Err(Error::ShapeMismatch {
                        reason: format!("expected {dim} basis names, got {}", names.len()),
                    });
                }
                names
            }
            None => default_names(dim),
        };
        let g = LieAlgebra {
            dim,
            basis_names: names,
            c,
        };
        g.check_antisymmetry()?;
        g.check_jacobi()?;
        Ok(g)
    }

    /// Builds from brackets listed only for i < j (0-based); the i > j side
    /// is mirrored, which removes a class of antisymmetry input errors.
    pub fn from_brackets(
        dim: usize,
        brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<Self> {
        let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for (i, j, coeffs) in brackets {
            if *i >= *j || *j >= dim {
                return Err(Error::ShapeMismatch {
                    reason: format!(
                        "bracket indices must satisfy i < j < dim, got ({}, {})",
                        i + 1,
                        j + 1
                    ),
                });
            }
            for (k, v) in coeffs {
                if *k >= dim {
                    return Err(Error::ShapeMismatch {
                        reason: format!("coefficient index {} out of range", k + 1),
                    });
                }
                c[*i][*j][*k] = &c[*i][*j][*k] + v;
                c[*j][*i][*k] = &c[*j][*i][*k] - v;
            }
        }
        Self::new(dim, c, None)
    }

    pub fn abelian(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadDimension { min: 1, got: n });
        }
        Self::from_brackets(n, &[])
    }

    /// The filiform model algebra: [X₁,Xᵢ] = X_{i+1} for 2 ≤ i ≤ n−1.
    pub fn model_filiform(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadDimension { min: 3, got: n });
        }
        let brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> = (1..n - 1)
            .map(|i| (0, i, vec![(i + 1, Scalar::one())]))
            .collect();
        Self::from_brackets(n, &brackets)
    }

    /// The three-dimensional Heisenberg algebra, [X₁,X₂] = X₃.
    pub fn heisenberg() -> Self {
        Self::model_filiform(3).expect("dimension 3 is valid")
    }

    fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let defect: Vec<Scalar> = (0..self.dim)
                    .map(|k| &self.c[i][j][k] + &self.c[j][i][k])
                    .collect();
                if defect.iter().any(|x| !x.is_zero()) {
                    return Err(Error::AntisymmetryViolation {
                        i: i + 1,
                        j: j + 1,
                        defect,
                    });
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let defect = self.jacobi_sum_basis(i, j, k);
                    if defect.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            defect,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// [Xᵢ,[Xⱼ,Xₖ]] + [Xⱼ,[Xₖ,Xᵢ]] + [Xₖ,[Xᵢ,Xⱼ]].
    fn jacobi_sum_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let t1 = self.bracket_with_basis(i, &self.c[j][k]);
        let t2 = self.bracket_with_basis(j, &self.c[k][i]);
        let t3 = self.bracket_with_basis(k, &self.c[i][j]);
        (0..self.dim)
            .map(|l| &(&t1[l] + &t2[l]) + &t3[l])
            .collect()
    }

    /// [Xᵢ, v] for a coordinate vector v.
    fn bracket_with_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (l, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                if !self.c[i][l][k].is_zero() {
                    out[k] += &(x * &self.c[i][l][k]);
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coordinate vector of [Xᵢ, Xⱼ].
    pub fn structure_constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &(&xy * &self.c[i][j][k]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of ad(Xᵢ): columns are [Xᵢ, Xⱼ].
    pub fn ad_basis(&self, i: usize) -> RatMatrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c[i][j][k].clone())
    }

    /// Matrix of ad(x) for a coordinate vector x.
    pub fn ad(&self, x: &[Scalar]) -> Result<RatMatrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        let v = m.at(k, j) + &(xi * &self.c[i][j][k]);
                        m.set(k, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Descending central series, stopping at the first repeated or zero term
    /// (which is included).
    pub fn lower_central_series(&self) -> CentralSeries {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let prev = terms.last().unwrap();
            let mut spanning = Vec::new();
            for b in 0..self.dim {
                for v in prev.basis() {
                    spanning.push(self.bracket_with_basis(b, v));
                }
            }
            let next = Subspace::span(self.dim, spanning);
            let stop = next.is_zero() || next == *prev;
            terms.push(next);
            if stop {
                break;
            }
        }
        CentralSeries { terms }
    }

    /// Z(g): kernel of the stacked adjoint equations [x, Xⱼ] = 0 for all j.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|i| self.c[i][j][k].clone()).collect());
            }
        }
        RatMatrix::from_rows(rows)
            .expect("uniform rows")
            .kernel_basis()
    }

    /// Smallest k with 𝒞^k = 0, or `None` when the series stabilizes at a
    /// nonzero term.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.stabilizes_at_zero() {
            Some(series.terms().len() - 1)
        } else {
            None
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.c
            .iter()
            .all(|p| p.iter().all(|v| v.iter().all(Scalar::is_zero)))
    }

    /// Nilpotent of maximal class: index exactly n−1 (and n ≥ 3; a
    /// two-dimensional algebra of index 1 is abelian, not filiform).
    pub fn is_filiform(&self) -> bool {
        if self.dim < 3 {
            return false;
        }
        match self.nilpotency_index() {
            Some(k) if k == self.dim - 1 => {
                // Maximal class forces dim 𝒞^i = n - i - 1 for 1 ≤ i ≤ n-1.
                let dims = self.lower_central_series().dims();
                for (i, d) in dims.iter().enumerate().skip(1) {
                    assert_eq!(*d, self.dim - i - 1, "filiform dimension profile");
                }
                true
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn abelian_line_is_valid() {
        let g = LieAlgebra::abelian(1).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.is_abelian());
        assert!(LieAlgebra::abelian(0).is_err());
    }

    #[test]
    fn heisenberg_brackets() {
        let g = LieAlgebra::heisenberg();
        let x1 = g.basis_vector(0);
        let x2 = g.basis_vector(1);
        assert_eq!(g.bracket(&x1, &x2).unwrap(), g.basis_vector(2));
        assert_eq!(g.bracket(&x1, &x1).unwrap(), vec![rat!(0); 3]);
    }

    #[test]
    fn model_filiform_bracket_table() {
        let g = LieAlgebra::model_filiform(4).unwrap();
        let x1 = g.basis_vector(0);
        let x3 = g.basis_vector(2);
        assert_eq!(g.bracket(&x1, &x3).unwrap(), g.basis_vector(3));
        assert!(LieAlgebra::model_filiform(2).is_err());
    }

    #[test]
    fn jacobi_violation_reports_defect() {
        // [X1,X2] = X3, [X1,X3] = X1: the (1,2,3) Jacobi sum equals
        // [X1,X2] = X3, hand-expanded.
        let err = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![(2, Scalar::one())]),
                (0, 2, vec![(0, Scalar::one())]),
            ],
        )
        .unwrap_err();
        match err {
            Error::JacobiViolation { i, j, k, defect } => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert_eq!(defect, vec![rat!(0), rat!(0), rat!(1)]);
            }
            other => panic!("expected JacobiViolation, got {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_violation_detected() {
        let mut c = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        c[0][1][0] = rat!(1);
        c[1][0][0] = rat!(1); // should be -1
        let err = LieAlgebra::new(2, c, None).unwrap_err();
        assert!(matches!(err, Error::AntisymmetryViolation { i: 1, j: 2, .. }));
    }

    #[test]
    fn central_series_of_abelian() {
        let g = LieAlgebra::abelian(4).unwrap();
        let s = g.lower_central_series();
        assert_eq!(s.dims(), vec![4, 0]);
        assert_eq!(g.nilpotency_index(), Some(1));
    }

    #[test]
    fn central_series_of_model_filiform() {
        for n in 3..=8 {
            let g = LieAlgebra::model_filiform(n).unwrap();
            let dims = g.lower_central_series().dims();
            let expected: Vec<usize> =
                std::iter::once(n).chain((1..n).map(|i| n - i - 1)).collect();
            assert_eq!(dims, expected);
            assert_eq!(g.nilpotency_index(), Some(n - 1));
            assert!(g.is_filiform());
        }
    }

    #[test]
    fn heisenberg_series_dims() {
        let g = LieAlgebra::heisenberg();
        assert_eq!(g.lower_central_series().dims(), vec![3, 1, 0]);
    }

    #[test]
    fn solvable_not_nilpotent() {
        // [X1,X2] = X2 stabilizes at span(X2).
        let g = LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, Scalar::one())])]).unwrap();
        let s = g.lower_central_series();
        assert_eq!(s.dims(), vec![2, 1, 1]);
        assert_eq!(g.nilpotency_index(), None);
        assert!(!g.is_filiform());
    }

    #[test]
    fn centers() {
        let g = LieAlgebra::heisenberg();
        let z = g.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&g.basis_vector(2)));

        for n in [4, 7, 10] {
            let g = LieAlgebra::model_filiform(n).unwrap();
            let z = g.center();
            assert_eq!(z.dim(), 1);
            assert!(z.contains(&g.basis_vector(n - 1)));
        }

        assert!(LieAlgebra::abelian(5).unwrap().center().is_full());
    }

    #[test]
    fn filiform_predicate_edge_cases() {
        assert!(!LieAlgebra::abelian(4).unwrap().is_filiform());
        assert!(!LieAlgebra::abelian(2).unwrap().is_filiform());
        // Heisenberg plus a central line: nilpotency index 2, not 3.
        let g = LieAlgebra::from_brackets(4, &[(0, 1, vec![(2, Scalar::one())])]).unwrap();
        assert_eq!(g.lower_central_series().dims(), vec![4, 1, 0]);
        assert!(!g.is_filiform());
        assert!(LieAlgebra::model_filiform(10).unwrap().is_filiform());
    }

    #[test]
    fn center_is_last_nonzero_series_term_for_filiform() {
        for n in 3..=8 {
            let g = LieAlgebra::model_filiform(n).unwrap();
            let series = g.lower_central_series();
            let last_nonzero = &series.terms()[series.terms().len() - 2];
            assert_eq!(*last_nonzero, g.center());
        }
    }
}
