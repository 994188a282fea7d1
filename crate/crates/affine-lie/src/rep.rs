//! Linear representations of Lie algebras as validated matrix families.
//!
//! A `Representation` stores one m×m rational matrix per basis vector and is
//! only constructible when the commutator identity
//! ρ(Xᵢ)ρ(Xⱼ) − ρ(Xⱼ)ρ(Xᵢ) = ρ([Xᵢ,Xⱼ]) holds exactly. On top of that sit
//! the kernel (faithfulness), the center-based faithfulness criterion for
//! nilpotent algebras, the generic nilpotency decision (nilpotent for *all*
//! X, decided symbolically through the characteristic polynomial of
//! Σ xᵢρ(Xᵢ)), the generalized weight decomposition, and the
//! weight-twist that turns any faithful representation of a nilpotent
//! algebra into a faithful nilpotent one.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, PolyMatrix, RatMatrix};
use crate::poly::{x_vars, MultiPoly};
use crate::scalar::Scalar;
use crate::subspace::{stacked_rank, Subspace};
use crate::{par, sampling};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    algebra: LieAlgebra,
    module_dim: usize,
    matrices: Vec<RatMatrix>,
}

impl Representation {
    /// Validates the homomorphism identity on all basis pairs; on failure the
    /// error carries the first violating pair (lexicographic) and its defect
    /// matrix.
    pub fn new(algebra: LieAlgebra, matrices: Vec<RatMatrix>) -> Result<Self> {
        let n = algebra.dim();
        if matrices.len() != n {
            return Err(Error::ShapeMismatch {
                reason: format!("expected {n} matrices, got {}", matrices.len()),
            });
        }
        let m = match matrices.first() {
            Some(first) => first.rows(),
            None => 0,
        };
        for (idx, mat) in matrices.iter().enumerate() {
            if !mat.is_square() || mat.rows() != m {
                return Err(Error::ShapeMismatch {
                    reason: format!(
                        "matrix {} is {}x{}, expected {m}x{m}",
                        idx + 1,
                        mat.rows(),
                        mat.cols()
                    ),
                });
            }
        }

        let rep = Representation {
            algebra,
            module_dim: m,
            matrices,
        };

        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let violation = par::find_first(pairs.len(), |p| {
            let (i, j) = pairs[p];
            let commutator = rep.matrices[i]
                .mul(&rep.matrices[j])
                .sub(&rep.matrices[j].mul(&rep.matrices[i]));
            let expected = rep.of_coords(rep.algebra.structure_constant(i, j));
            let defect = commutator.sub(&expected);
            if defect.is_zero() {
                None
            } else {
                Some(defect)
            }
        });
        if let Some((p, defect)) = violation {
            let (i, j) = pairs[p];
            return Err(Error::HomomorphismViolation {
                i: i + 1,
                j: j + 1,
                defect,
            });
        }
        Ok(rep)
    }

    /// The zero representation on an m-dimensional module.
    pub fn zero(algebra: LieAlgebra, module_dim: usize) -> Self {
        let n = algebra.dim();
        Representation {
            algebra,
            module_dim,
            matrices: vec![RatMatrix::zero(module_dim, module_dim); n],
        }
    }

    /// The adjoint representation (valid by the Jacobi identity).
    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        let matrices = (0..n).map(|i| algebra.ad_basis(i)).collect();
        Self::new(algebra, matrices).expect("adjoint satisfies the homomorphism identity")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[RatMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &RatMatrix {
        &self.matrices[i]
    }

    fn of_coords(&self, x: &[Scalar]) -> RatMatrix {
        let mut acc = RatMatrix::zero(self.module_dim, self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.matrices[i].scale(c));
            }
        }
        acc
    }

    /// ρ(x) = Σ xᵢ ρ(Xᵢ).
    pub fn of_element(&self, x: &[Scalar]) -> Result<RatMatrix> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra.dim(),
                got: x.len(),
            });
        }
        Ok(self.of_coords(x))
    }

    /// The generic element Σ xᵢ ρ(Xᵢ) with polynomial entries in x₁..x_n.
    pub fn generic_matrix(&self) -> PolyMatrix {
        let n = self.algebra.dim();
        let vars = x_vars(n);
        Matrix::from_fn(self.module_dim, self.module_dim, |r, c| {
            let coeffs: Vec<Scalar> = (0..n).map(|i| self.matrices[i].at(r, c).clone()).collect();
            MultiPoly::linear(vars.clone(), &coeffs)
        })
    }

    /// Kernel of x ↦ ρ(x): stack the m² linear equations Σᵢ ρ(Xᵢ)[r][c]·xᵢ = 0.
    pub fn kernel(&self) -> Subspace {
        let n = self.algebra.dim();
        let m = self.module_dim;
        let mut rows = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                rows.push((0..n).map(|i| self.matrices[i].at(r, c).clone()).collect());
            }
        }
        RatMatrix::from_rows(rows)
            .expect("uniform rows")
            .kernel_basis()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_zero()
    }

    /// Faithfulness tested on the center alone: for nilpotent algebras, ρ is
    /// faithful iff ρ(Z) ≠ 0 for every nonzero Z in Z(g).
    pub fn faithful_by_center(&self) -> Result<bool> {
        if !self.algebra.is_nilpotent() {
            return Err(Error::NotNilpotentAlgebra);
        }
        let center = self.algebra.center();
        if center.is_zero() {
            // Nilpotent algebras of dim >= 1 have nonzero centers; dim 0 only.
            return Ok(true);
        }
        let m = self.module_dim;
        let mut rows = Vec::with_capacity(m * m);
        for r in 0..m {
            for c in 0..m {
                rows.push(
                    center
                        .basis()
                        .iter()
                        .map(|z| {
                            let mut acc = Scalar::zero();
                            for (i, zi) in z.iter().enumerate() {
                                if !zi.is_zero() {
                                    acc += &(zi * self.matrices[i].at(r, c));
                                }
                            }
                            acc
                        })
                        .collect(),
                );
            }
        }
        Ok(RatMatrix::from_rows(rows)
            .expect("uniform rows")
            .kernel_basis()
            .is_zero())
    }

    /// Nilpotency for *all* X at once: det(tI − Σ xᵢρ(Xᵢ)) must equal t^m
    /// identically as a polynomial in x₁..x_n.
    pub fn is_nilpotent(&self) -> bool {
        self.generic_matrix()
            .first_nonzero_char_coeff()
            .expect("generic matrix is square")
            .is_none()
    }

    /// Samples `count` random rational elements and returns the first whose
    /// evaluated matrix is not nilpotent. Independent oracle for
    /// [`Representation::is_nilpotent`]; `None` must be the outcome whenever
    /// the symbolic verdict is "nilpotent".
    pub fn sampled_non_nilpotent_element(&self, seed: u64, count: usize) -> Option<Vec<Scalar>> {
        let samples = sampling::rational_samples(seed, count, self.algebra.dim());
        let hit = par::find_first(samples.len(), |i| {
            let mat = self.of_coords(&samples[i]);
            if mat.is_nilpotent().expect("square") {
                None
            } else {
                Some(())
            }
        });
        hit.map(|(i, ())| samples[i].clone())
    }

    /// Common refinement of the generalized eigenspace decompositions of
    /// ρ(X₁),…,ρ(X_n), processed in that fixed order.
    pub fn weight_decomposition(&self) -> Result<WeightDecomposition> {
        if !self.algebra.is_nilpotent() {
            return Err(Error::NotNilpotentAlgebra);
        }
        for (i, mat) in self.matrices.iter().enumerate() {
            let spec = mat.rational_eigenvalues()?;
            if !spec.splits_over_q {
                return Err(Error::IrrationalWeights {
                    detail: format!(
                        "characteristic polynomial of rho(X{}) does not split over Q",
                        i + 1
                    ),
                });
            }
        }

        let m = self.module_dim;
        let mut blocks: Vec<(Subspace, Vec<Scalar>)> = vec![(Subspace::full(m), Vec::new())];
        for mat in &self.matrices {
            let mut refined = Vec::new();
            for (block, weight_prefix) in &blocks {
                let restricted = block
                    .restriction_of(mat)
                    .expect("weight blocks of a nilpotent algebra are invariant");
                let spec = restricted.rational_eigenvalues()?;
                debug_assert!(spec.splits_over_q, "restriction of a split matrix splits");
                for (lambda, _) in &spec.roots {
                    let eigen = restricted
                        .generalized_eigenspace(lambda)
                        .expect("restriction is square");
                    let lifted: Vec<Vec<Scalar>> =
                        eigen.basis().iter().map(|v| block.lift(v)).collect();
                    let mut weight = weight_prefix.clone();
                    weight.push(lambda.clone());
                    refined.push((Subspace::span(m, lifted), weight));
                }
            }
            blocks = refined;
        }

        let decomposition = WeightDecomposition {
            weights: blocks.iter().map(|(_, w)| w.clone()).collect(),
            blocks: blocks.into_iter().map(|(b, _)| b).collect(),
        };
        decomposition.validate(self);
        Ok(decomposition)
    }

    /// Twists each weight block by its negated weight, producing a faithful
    /// nilpotent representation in the basis adapted to the decomposition.
    pub fn nilpotentize(&self) -> Result<Nilpotentized> {
        if !self.is_faithful() {
            return Err(Error::NotFaithful);
        }
        let decomposition = self.weight_decomposition()?;
        let m = self.module_dim;

        // Change of basis: columns are the adapted basis in old coordinates.
        let adapted: Vec<Vec<Scalar>> = decomposition
            .blocks
            .iter()
            .flat_map(|b| b.basis().iter().cloned())
            .collect();
        let basis = RatMatrix::from_fn(m, m, |r, c| adapted[c][r].clone());
        let basis_inv = basis
            .inverse()
            .expect("direct sum decomposition gives an invertible basis");

        let mut twisted = Vec::with_capacity(self.matrices.len());
        for (i, mat) in self.matrices.iter().enumerate() {
            let mut conj = basis_inv.mul(mat).mul(&basis);
            let mut offset = 0;
            for (block, weight) in decomposition.blocks.iter().zip(&decomposition.weights) {
                let lambda = &weight[i];
                if !lambda.is_zero() {
                    for d in offset..offset + block.dim() {
                        let v = conj.at(d, d) - lambda;
                        conj.set(d, d, v);
                    }
                }
                offset += block.dim();
            }
            twisted.push(conj);
        }

        let rep = Representation::new(self.algebra.clone(), twisted)
            .expect("weights vanish on brackets, so the twisted family is a representation");
        Ok(Nilpotentized {
            rep,
            change_of_basis: basis,
            decomposition,
        })
    }
}

/// Direct-sum split of the module into generalized weight blocks. Weight i is
/// the linear form with values `weights[i][j]` on the basis vector Xⱼ₊₁.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDecomposition {
    weights: Vec<Vec<Scalar>>,
    blocks: Vec<Subspace>,
}

impl WeightDecomposition {
    pub fn weights(&self) -> &[Vec<Scalar>] {
        &self.weights
    }

    pub fn blocks(&self) -> &[Subspace] {
        &self.blocks
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Subspace::dim).collect()
    }

    /// Value of weight `idx` on a coordinate vector (weights are linear forms).
    pub fn weight_value(&self, idx: usize, x: &[Scalar]) -> Scalar {
        self.weights[idx]
            .iter()
            .zip(x)
            .map(|(w, xi)| w * xi)
            .sum()
    }

    /// Checks the defining invariants against the source representation.
    /// These are guaranteed by construction; violation is a bug.
    fn validate(&self, rep: &Representation) {
        let m = rep.module_dim();
        assert_eq!(self.weights.len(), self.blocks.len());
        let total: usize = self.blocks.iter().map(Subspace::dim).sum();
        assert_eq!(total, m, "blocks must fill the module");
        assert_eq!(stacked_rank(&self.blocks), m, "sum must be direct");
        for w in &self.weights {
            assert_eq!(w.len(), rep.algebra().dim());
        }
        for (a, wa) in self.weights.iter().enumerate() {
            for wb in self.weights.iter().skip(a + 1) {
                assert_ne!(wa, wb, "weights must be pairwise distinct");
            }
        }
        for (block, weight) in self.blocks.iter().zip(&self.weights) {
            for (i, mat) in rep.matrices().iter().enumerate() {
                let restricted = block
                    .restriction_of(mat)
                    .expect("blocks must be invariant under every rho(X_i)");
                let k = restricted.rows();
                let shifted = RatMatrix::from_fn(k, k, |r, c| {
                    if r == c {
                        restricted.at(r, c) - &weight[i]
                    } else {
                        restricted.at(r, c).clone()
                    }
                });
                assert!(
                    shifted.is_nilpotent().expect("square"),
                    "rho(X_i) - lambda(X_i)·I must be nilpotent on its block"
                );
            }
        }
    }
}

/// Result of the weight twist: the nilpotent representation, the change of
/// basis (columns = adapted basis in the original coordinates), and the
/// decomposition that produced it.
#[derive(Clone, Debug)]
pub struct Nilpotentized {
    pub rep: Representation,
    pub change_of_basis: RatMatrix,
    pub decomposition: WeightDecomposition,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::heisenberg()
    }

    #[test]
    fn zero_rep_is_valid_and_unfaithful() {
        let rep = Representation::zero(LieAlgebra::abelian(2).unwrap(), 1);
        assert_eq!(rep.kernel().dim(), 2);
        assert!(!rep.is_faithful());
        assert!(rep.is_nilpotent());
    }

    #[test]
    fn adjoint_of_heisenberg() {
        let rep = Representation::adjoint(heisenberg());
        // ad X3 = 0, so the kernel is the center.
        let k = rep.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&heisenberg().basis_vector(2)));
        assert!(!rep.faithful_by_center().unwrap());
    }

    #[test]
    fn commuting_family_with_central_zero_image_is_valid() {
        // rho(X1) = rho(X2) = all-ones 2x2, rho(X3) = 0: equal matrices
        // commute and [X1,X2] = X3 maps to 0.
        let e = RatMatrix::from_fn(2, 2, |_, _| rat!(1));
        let rep = Representation::new(
            heisenberg(),
            vec![e.clone(), e, RatMatrix::zero(2, 2)],
        );
        assert!(rep.is_ok());
    }

    #[test]
    fn homomorphism_violation_carries_defect() {
        // rho(X1) = E12, rho(X2) = E21 do not commute into rho(X3) = 0.
        let mut a = RatMatrix::zero(2, 2);
        a.set(0, 1, rat!(1));
        let mut b = RatMatrix::zero(2, 2);
        b.set(1, 0, rat!(1));
        let err =
            Representation::new(heisenberg(), vec![a, b, RatMatrix::zero(2, 2)]).unwrap_err();
        match err {
            Error::HomomorphismViolation { i, j, defect } => {
                assert_eq!((i, j), (1, 2));
                assert!(!defect.is_zero());
            }
            other => panic!("expected HomomorphismViolation, got {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch_rejected() {
        let err = Representation::new(heisenberg(), vec![RatMatrix::zero(2, 2)]).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch { .. }));
    }

    #[test]
    fn faithful_by_center_requires_nilpotent() {
        let solvable =
            LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, Scalar::one())])]).unwrap();
        let rep = Representation::zero(solvable, 2);
        assert!(matches!(
            rep.faithful_by_center(),
            Err(Error::NotNilpotentAlgebra)
        ));
    }

    #[test]
    fn weight_decomposition_of_zero_rep() {
        let rep = Representation::zero(heisenberg(), 3);
        let wd = rep.weight_decomposition().unwrap();
        assert_eq!(wd.weights(), &[vec![rat!(0), rat!(0), rat!(0)]]);
        assert_eq!(wd.block_dims(), vec![3]);
    }

    #[test]
    fn irrational_weights_detected() {
        // rho(X1) is a rotation with char poly t^2 + 1 on the abelian line.
        let rot =
            RatMatrix::from_rows(vec![vec![rat!(0), rat!(-1)], vec![rat!(1), rat!(0)]]).unwrap();
        let rep = Representation::new(LieAlgebra::abelian(1).unwrap(), vec![rot]).unwrap();
        assert!(matches!(
            rep.weight_decomposition(),
            Err(Error::IrrationalWeights { .. })
        ));
    }

    #[test]
    fn nilpotentize_requires_faithful() {
        let rep = Representation::zero(heisenberg(), 2);
        assert!(matches!(rep.nilpotentize(), Err(Error::NotFaithful)));
    }

    #[test]
    fn nilpotentize_of_nilpotent_rep_is_identity() {
        // The affine rep of the zero connection on the abelian line:
        // rho(X1) = [[0,1],[0,0]], faithful and already nilpotent.
        let mut m = RatMatrix::zero(2, 2);
        m.set(0, 1, rat!(1));
        let rep = Representation::new(LieAlgebra::abelian(1).unwrap(), vec![m]).unwrap();
        assert!(rep.is_faithful());
        assert!(rep.is_nilpotent());
        let out = rep.nilpotentize().unwrap();
        assert_eq!(out.change_of_basis, RatMatrix::identity(2));
        assert_eq!(out.rep, rep);
    }

    #[test]
    fn sampled_oracle_agrees_on_zero_rep() {
        let rep = Representation::zero(heisenberg(), 3);
        assert!(rep.sampled_non_nilpotent_element(0, 50).is_none());
    }
}
