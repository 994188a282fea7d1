//! Affine connections (left-symmetric products) on a Lie algebra.
//!
//! A connection is a bilinear product ∇ stored as a coefficient tensor
//! Γ[i][j] = ∇(Xᵢ,Xⱼ) and validated exactly against the two defining
//! identities:
//!
//!   1) torsion:  ∇(X,Y) − ∇(Y,X) = [X,Y]
//!   2) flatness: ∇(X,∇(Y,Z)) − ∇(Y,∇(X,Z)) = ∇([X,Y],Z)
//!
//! From a valid connection come the left operators f_X = ∇(X,·), the right
//! operators R_X = ∇(·,X), the induced faithful (n+1)-dimensional affine
//! representation (and its inverse extraction), the completeness decision
//! (R_X nilpotent for all X, decided symbolically on the generic element),
//! and the connection induced by a symplectic form.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, PolyMatrix, RatMatrix};
use crate::poly::{x_vars, MultiPoly};
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::{par, sampling};

type Gamma = Vec<Vec<Vec<Scalar>>>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineConnection {
    algebra: LieAlgebra,
    gamma: Gamma,
}

/// First torsion violation in lexicographic (i, j) order.
fn torsion_violation(algebra: &LieAlgebra, gamma: &Gamma) -> Option<(usize, usize, Vec<Scalar>)> {
    let n = algebra.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let bracket = algebra.structure_constant(i, j);
            let defect: Vec<Scalar> = (0..n)
                .map(|k| &(&gamma[i][j][k] - &gamma[j][i][k]) - &bracket[k])
                .collect();
            if defect.iter().any(|x| !x.is_zero()) {
                return Some((i, j, defect));
            }
        }
    }
    None
}

fn flatness_defect_at(
    algebra: &LieAlgebra,
    gamma: &Gamma,
    i: usize,
    j: usize,
    k: usize,
) -> Option<Vec<Scalar>> {
    let n = algebra.dim();
    let apply = |g: &Vec<Vec<Scalar>>, v: &[Scalar]| -> Vec<Scalar> {
        // ∇(X_g, v) for the left slot fixed at a basis vector.
        let mut out = vec![Scalar::zero(); n];
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, entry) in out.iter_mut().zip(&g[l]) {
                *slot += &(c * entry);
            }
        }
        out
    };
    let lhs1 = apply(&gamma[i], &gamma[j][k]);
    let lhs2 = apply(&gamma[j], &gamma[i][k]);
    let bracket = algebra.structure_constant(i, j);
    let mut rhs = vec![Scalar::zero(); n];
    for (l, c) in bracket.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (slot, entry) in rhs.iter_mut().zip(&gamma[l][k]) {
            *slot += &(c * entry);
        }
    }
    let defect: Vec<Scalar> = (0..n)
        .map(|l| &(&lhs1[l] - &lhs2[l]) - &rhs[l])
        .collect();
    if defect.iter().any(|x| !x.is_zero()) {
        Some(defect)
    } else {
        None
    }
}

fn flatness_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut triples = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                triples.push((i, j, k));
            }
        }
    }
    triples
}

/// First flatness violation in lexicographic (i, j, k) order, sequential scan
/// with early exit. Exposed (with the parallel twin) for the bench suite.
pub fn flatness_violation_seq(
    algebra: &LieAlgebra,
    gamma: &Gamma,
) -> Option<(usize, usize, usize, Vec<Scalar>)> {
    flatness_triples(algebra.dim())
        .into_iter()
        .find_map(|(i, j, k)| {
            flatness_defect_at(algebra, gamma, i, j, k).map(|d| (i, j, k, d))
        })
}

/// Parallel twin of [`flatness_violation_seq`]: evaluates triples
/// independently, then reports the lexicographically first violation so the
/// result is identical to the sequential scan.
#[cfg(feature = "parallel")]
pub fn flatness_violation_par(
    algebra: &LieAlgebra,
    gamma: &Gamma,
) -> Option<(usize, usize, usize, Vec<Scalar>)> {
    use rayon::prelude::*;
    let triples = flatness_triples(algebra.dim());
    triples
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &(i, j, k))| {
            flatness_defect_at(algebra, gamma, i, j, k).map(|d| (idx, (i, j, k, d)))
        })
        .min_by_key(|(idx, _)| *idx)
        .map(|(_, v)| v)
}

fn flatness_violation(
    algebra: &LieAlgebra,
    gamma: &Gamma,
) -> Option<(usize, usize, usize, Vec<Scalar>)> {
    #[cfg(feature = "parallel")]
    {
        flatness_violation_par(algebra, gamma)
    }
    #[cfg(not(feature = "parallel"))]
    {
        flatness_violation_seq(algebra, gamma)
    }
}

impl AffineConnection {
    /// Validates Γ against both identities; failures carry the first
    /// violating pair/triple (lexicographic) and its exact defect vector.
    pub fn new(algebra: LieAlgebra, gamma: Gamma) -> Result<Self> {
        let n = algebra.dim();
        if gamma.len() != n
            || gamma.iter().any(|p| p.len() != n)
            || gamma.iter().flatten().any(|v| v.len() != n)
        {
            return Err(Error::ShapeMismatch {
                reason: format!("gamma tensor must be {n}x{n}x{n}"),
            });
        }
        if let Some((i, j, defect)) = torsion_violation(&algebra, &gamma) {
            return Err(Error::TorsionViolation {
                i: i + 1,
                j: j + 1,
                defect,
            });
        }
        if let Some((i, j, k, defect)) = flatness_violation(&algebra, &gamma) {
            return Err(Error::FlatnessViolation {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                defect,
            });
        }
        Ok(AffineConnection { algebra, gamma })
    }

    /// The zero product; a connection exactly when the algebra is abelian.
    pub fn zero(algebra: LieAlgebra) -> Result<Self> {
        let n = algebra.dim();
        Self::new(algebra, vec![vec![vec![Scalar::zero(); n]; n]; n])
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// ∇(Xᵢ, Xⱼ) as a coordinate vector.
    pub fn gamma(&self, i: usize, j: usize) -> &[Scalar] {
        &self.gamma[i][j]
    }

    pub fn gamma_tensor(&self) -> &Gamma {
        &self.gamma
    }

    /// ∇(x, y), bilinear in both arguments.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.algebra.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if x.len() != n { x.len() } else { y.len() },
            });
        }
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (slot, entry) in out.iter_mut().zip(&self.gamma[i][j]) {
                    *slot += &(&c * entry);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of f_Xᵢ = ∇(Xᵢ, ·).
    pub fn left_operator_basis(&self, i: usize) -> RatMatrix {
        let n = self.algebra.dim();
        Matrix::from_fn(n, n, |l, j| self.gamma[i][j][l].clone())
    }

    /// Matrix of f_x = ∇(x, ·); linear in x.
    pub fn left_operator(&self, x: &[Scalar]) -> Result<RatMatrix> {
        let n = self.algebra.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        Ok(Matrix::from_fn(n, n, |l, j| {
            let mut acc = Scalar::zero();
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    acc += &(xi * &self.gamma[i][j][l]);
                }
            }
            acc
        }))
    }

    /// Matrix of R_x = ∇(·, x): column j is ∇(Xⱼ, x).
    pub fn right_operator(&self, x: &[Scalar]) -> Result<RatMatrix> {
        let n = self.algebra.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        Ok(Matrix::from_fn(n, n, |l, j| {
            let mut acc = Scalar::zero();
            for (k, xk) in x.iter().enumerate() {
                if !xk.is_zero() {
                    acc += &(xk * &self.gamma[j][k][l]);
                }
            }
            acc
        }))
    }

    /// Generic right operator: entries are linear polynomials in x₁..x_n.
    pub fn right_operator_generic(&self) -> PolyMatrix {
        let n = self.algebra.dim();
        let vars = x_vars(n);
        Matrix::from_fn(n, n, |l, j| {
            let coeffs: Vec<Scalar> = (0..n).map(|k| self.gamma[j][k][l].clone()).collect();
            MultiPoly::linear(vars.clone(), &coeffs)
        })
    }

    /// Completeness: R_x nilpotent for every x, decided symbolically as
    /// det(tI − R_generic) = t^n. The criterion is stated for nilpotent
    /// algebras only; others are refused.
    ///
    /// When incomplete, a witness is produced by a deterministic sweep (basis
    /// vectors, then eᵢ±eⱼ, then seeded pseudorandom rationals) and certified
    /// by the nonzero characteristic-polynomial coefficient at that point.
    pub fn is_complete(&self) -> Result<Completeness> {
        self.is_complete_seeded(sampling::DEFAULT_SEED)
    }

    pub fn is_complete_seeded(&self, seed: u64) -> Result<Completeness> {
        if !self.algebra.is_nilpotent() {
            return Err(Error::NotNilpotentAlgebra);
        }
        let generic = self.right_operator_generic();
        let Some((power, coeff)) = generic
            .first_nonzero_char_coeff()
            .expect("generic right operator is square")
        else {
            return Ok(Completeness {
                complete: true,
                witness: None,
            });
        };

        let n = self.algebra.dim();
        let vars = x_vars(n);
        let mut candidates: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..n {
            candidates.push(self.algebra.basis_vector(i));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for sign in [Scalar::one(), -Scalar::one()] {
                    let mut v = self.algebra.basis_vector(i);
                    v[j] = sign;
                    candidates.push(v);
                }
            }
        }
        candidates.extend(sampling::rational_samples(seed, 1000, n));

        for x in candidates {
            let value = coeff.eval(&vars, &x);
            if !value.is_zero() {
                debug_assert!(
                    !self.right_operator(&x).unwrap().is_nilpotent().unwrap(),
                    "witness must evaluate to a non-nilpotent right operator"
                );
                return Ok(Completeness {
                    complete: false,
                    witness: Some(CompletenessWitness {
                        element: x,
                        coeff_power: power,
                        coeff_value: value,
                    }),
                });
            }
        }
        unreachable!("a nonzero coefficient polynomial evaluates nonzero on the sweep");
    }

    /// Samples `count` random elements and returns the first with a
    /// non-nilpotent right operator. Independent oracle for completeness: a
    /// hit against a "complete" verdict would be a hard failure.
    pub fn sampled_incompleteness_witness(&self, seed: u64, count: usize) -> Option<Vec<Scalar>> {
        let samples = sampling::rational_samples(seed, count, self.algebra.dim());
        let hit = par::find_first(samples.len(), |i| {
            let r = self.right_operator(&samples[i]).expect("dimension matches");
            if r.is_nilpotent().expect("square") {
                None
            } else {
                Some(())
            }
        });
        hit.map(|(i, ())| samples[i].clone())
    }

    /// The induced faithful (n+1)-dimensional representation
    /// ρ(X): (Y, t) ↦ (f_X(Y) + tX, 0), in block form [[f_Xᵢ, eᵢ], [0, 0]].
    pub fn affine_rep(&self) -> Representation {
        let n = self.algebra.dim();
        let matrices: Vec<RatMatrix> = (0..n)
            .map(|i| {
                Matrix::from_fn(n + 1, n + 1, |r, c| {
                    if r < n && c < n {
                        self.gamma[i][c][r].clone()
                    } else if r == i && c == n {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect();
        // Validity is guaranteed by the connection identities; the validator
        // still runs as an internal assertion.
        Representation::new(self.algebra.clone(), matrices)
            .expect("a valid connection induces a valid representation")
    }

    /// Inverse of [`AffineConnection::affine_rep`]: checks the block shape
    /// (module g ⊕ line, last row zero, last column of ρ(Xᵢ) equal to eᵢ) and
    /// extracts Γ, revalidating the connection identities.
    pub fn from_affine_rep(rho: &Representation) -> Result<Self> {
        check_affine_shape(rho)?;
        let algebra = rho.algebra().clone();
        let n = algebra.dim();
        let gamma: Gamma = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| rho.matrices()[i].at(k, j).clone()).collect())
                    .collect()
            })
            .collect();
        Self::new(algebra, gamma)
    }
}

/// Checks the ρ(X):(Y,t) ↦ (f_X(Y)+tX, 0) block shape: module dimension
/// n+1, zero last row, last column of ρ(Xᵢ) equal to eᵢ.
pub fn check_affine_shape(rho: &Representation) -> Result<()> {
    let n = rho.algebra().dim();
    if rho.module_dim() != n + 1 {
        return Err(Error::NotAffineShape {
            reason: format!(
                "module dimension {} is not algebra dimension {} + 1",
                rho.module_dim(),
                n
            ),
        });
    }
    for (i, mat) in rho.matrices().iter().enumerate() {
        for c in 0..=n {
            if !mat.at(n, c).is_zero() {
                return Err(Error::NotAffineShape {
                    reason: format!("rho(X{}) has a nonzero last row", i + 1),
                });
            }
        }
        for r in 0..n {
            let expected = if r == i { Scalar::one() } else { Scalar::zero() };
            if *mat.at(r, n) != expected {
                return Err(Error::NotAffineShape {
                    reason: format!("last column of rho(X{}) is not e{}", i + 1, i + 1),
                });
            }
        }
    }
    Ok(())
}

/// Completeness verdict; incomplete connections carry an explicit witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    pub witness: Option<CompletenessWitness>,
}

/// An element x with non-nilpotent R_x, certified by the nonzero coefficient
/// of t^`coeff_power` in det(tI − R_x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessWitness {
    pub element: Vec<Scalar>,
    pub coeff_power: usize,
    pub coeff_value: Scalar,
}

/// Validated symplectic structure: antisymmetric, nondegenerate, closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymplecticForm {
    algebra: LieAlgebra,
    theta: RatMatrix,
}

impl SymplecticForm {
    pub fn new(algebra: LieAlgebra, theta: RatMatrix) -> Result<Self> {
        let n = algebra.dim();
        if n % 2 != 0 {
            return Err(Error::OddDimension { dim: n });
        }
        if theta.rows() != n || theta.cols() != n {
            return Err(Error::ShapeMismatch {
                reason: format!("theta must be {n}x{n}, got {}x{}", theta.rows(), theta.cols()),
            });
        }
        for i in 0..n {
            for j in i..n {
                if !(theta.at(i, j) + theta.at(j, i)).is_zero() {
                    return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        let rank = theta.rank();
        if rank < n {
            return Err(Error::Degenerate { rank });
        }
        let form = SymplecticForm { algebra, theta };
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let defect = form.d_theta(i, j, k);
                    if !defect.is_zero() {
                        return Err(Error::NotClosed {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            defect,
                        });
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn theta(&self) -> &RatMatrix {
        &self.theta
    }

    /// θ(Xₐ, v) for a coordinate vector v.
    fn pair_basis(&self, a: usize, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (l, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc += &(self.theta.at(a, l) * c);
            }
        }
        acc
    }

    /// dθ(Xᵢ,Xⱼ,Xₖ) = θ(Xᵢ,[Xⱼ,Xₖ]) + θ(Xⱼ,[Xₖ,Xᵢ]) + θ(Xₖ,[Xᵢ,Xⱼ]).
    pub fn d_theta(&self, i: usize, j: usize, k: usize) -> Scalar {
        let t1 = self.pair_basis(i, self.algebra.structure_constant(j, k));
        let t2 = self.pair_basis(j, self.algebra.structure_constant(k, i));
        let t3 = self.pair_basis(k, self.algebra.structure_constant(i, j));
        t1 + t2 + t3
    }
}

/// Which sign of the defining relation θ(adX(Y), Z) = −θ(Y, f_X(Z)) produced
/// a connection that validates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignConvention {
    AsWritten,
    Opposite,
}

impl std::fmt::Display for SignConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignConvention::AsWritten => write!(f, "as-written"),
            SignConvention::Opposite => write!(f, "opposite-sign"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymplecticOutcome {
    pub connection: AffineConnection,
    pub convention: SignConvention,
}

/// Solves θ(adXᵢ(Y), Z) = −θ(Y, f_Xᵢ(Z)) for each f_Xᵢ (unique by
/// nondegeneracy: f_Xᵢ = −T⁻¹ adXᵢᵀ T) and assembles the connection
/// ∇(X,Y) = f_X(Y). If the as-written sign fails validation, the opposite
/// sign is tried and the convention that validated is reported.
pub fn symplectic_connection(form: &SymplecticForm) -> Result<SymplecticOutcome> {
    let algebra = form.algebra();
    let n = algebra.dim();
    let theta_inv = form
        .theta()
        .inverse()
        .expect("validated form is nondegenerate");

    let build = |sign_opposite: bool| -> Result<AffineConnection> {
        let mut gamma: Gamma = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, plane) in gamma.iter_mut().enumerate() {
            let ad_t = algebra.ad_basis(i).transpose();
            let mut f = theta_inv.mul(&ad_t).mul(form.theta());
            if !sign_opposite {
                f = f.neg();
            }
            for (j, slot) in plane.iter_mut().enumerate() {
                *slot = f.column(j);
            }
        }
        AffineConnection::new(algebra.clone(), gamma)
    };

    match build(false) {
        Ok(connection) => Ok(SymplecticOutcome {
            connection,
            convention: SignConvention::AsWritten,
        }),
        Err(first_err) => match build(true) {
            Ok(connection) => Ok(SymplecticOutcome {
                connection,
                convention: SignConvention::Opposite,
            }),
            Err(_) => Err(first_err),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::heisenberg()
    }

    #[test]
    fn zero_connection_on_abelian() {
        let c = AffineConnection::zero(LieAlgebra::abelian(3).unwrap()).unwrap();
        assert!(c.left_operator(&c.algebra().basis_vector(0)).unwrap().is_zero());
        let verdict = c.is_complete().unwrap();
        assert!(verdict.complete);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn zero_product_fails_torsion_on_heisenberg() {
        let err = AffineConnection::zero(heisenberg()).unwrap_err();
        assert!(matches!(err, Error::TorsionViolation { i: 1, j: 2, .. }));
    }

    #[test]
    fn adjoint_product_rejected_with_bracket_defect() {
        // ∇(X,Y) = [X,Y] has torsion 2[X,Y] != [X,Y]; the defect at (X1,X2)
        // is exactly [X1,X2] = X3.
        let g = heisenberg();
        let n = g.dim();
        let gamma: Gamma = (0..n)
            .map(|i| (0..n).map(|j| g.structure_constant(i, j).to_vec()).collect())
            .collect();
        let err = AffineConnection::new(g, gamma).unwrap_err();
        match err {
            Error::TorsionViolation { i, j, defect } => {
                assert_eq!((i, j), (1, 2));
                assert_eq!(defect, vec![rat!(0), rat!(0), rat!(1)]);
            }
            other => panic!("expected TorsionViolation, got {other:?}"),
        }
    }

    #[test]
    fn flatness_violation_reported_in_lex_order() {
        // Start from the zero product on the abelian algebra and break
        // flatness only: set ∇(X1,X1) = X2, ∇(X1,X2) = ... keep torsion
        // symmetric. With gamma[0][0] = e2 and gamma symmetric the torsion
        // holds; flatness needs ∇(X1,∇(X2,Z)) - ∇(X2,∇(X1,Z)) = 0.
        let g = LieAlgebra::abelian(2).unwrap();
        let mut gamma: Gamma = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        gamma[0][0][1] = rat!(1); // ∇(X1,X1) = X2
        gamma[0][1][0] = rat!(1); // ∇(X1,X2) = X1
        gamma[1][0][0] = rat!(1); // ∇(X2,X1) = X1 (keeps torsion zero)
        let err = AffineConnection::new(g.clone(), gamma.clone()).unwrap_err();
        match &err {
            Error::FlatnessViolation { i, j, k, .. } => assert_eq!((*i, *j), (1, 2)),
            other => panic!("expected FlatnessViolation, got {other:?}"),
        }
        // The seq and par scanners agree on the first violation.
        let seq = flatness_violation_seq(&g, &gamma);
        #[cfg(feature = "parallel")]
        assert_eq!(seq, flatness_violation_par(&g, &gamma));
        assert!(seq.is_some());
    }

    #[test]
    fn completeness_refuses_non_nilpotent_algebras() {
        // The affine-line structure on [X1,X2] = X2: ∇(X1,X2) = X2, rest
        // zero. Torsion and flatness hold, but the algebra is not nilpotent
        // so the completeness criterion refuses it.
        let g = LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, Scalar::one())])]).unwrap();
        let mut gamma: Gamma = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        gamma[0][1][1] = rat!(1);
        let c = AffineConnection::new(g, gamma).unwrap();
        assert!(matches!(c.is_complete(), Err(Error::NotNilpotentAlgebra)));
    }

    #[test]
    fn affine_rep_of_zero_connection_on_line() {
        let c = AffineConnection::zero(LieAlgebra::abelian(1).unwrap()).unwrap();
        let rho = c.affine_rep();
        assert_eq!(rho.module_dim(), 2);
        let m = rho.matrix(0);
        assert_eq!(*m.at(0, 1), rat!(1));
        assert!(m.at(0, 0).is_zero() && m.at(1, 0).is_zero() && m.at(1, 1).is_zero());
        assert!(rho.is_faithful());
        let back = AffineConnection::from_affine_rep(&rho).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn from_affine_rep_rejects_bad_shapes() {
        // Nonzero bottom row.
        let g = LieAlgebra::abelian(1).unwrap();
        let mut m = RatMatrix::zero(2, 2);
        m.set(0, 1, rat!(1));
        m.set(1, 0, rat!(1));
        m.set(1, 1, rat!(0));
        let rho = Representation::new(g, vec![m]).unwrap();
        assert!(matches!(
            AffineConnection::from_affine_rep(&rho),
            Err(Error::NotAffineShape { .. })
        ));
    }

    #[test]
    fn symplectic_form_validation() {
        let std2 = RatMatrix::from_rows(vec![
            vec![rat!(0), rat!(1)],
            vec![rat!(-1), rat!(0)],
        ])
        .unwrap();
        let form = SymplecticForm::new(LieAlgebra::abelian(2).unwrap(), std2.clone()).unwrap();
        let outcome = symplectic_connection(&form).unwrap();
        assert!(outcome
            .connection
            .gamma_tensor()
            .iter()
            .flatten()
            .flatten()
            .all(Scalar::is_zero));
        assert_eq!(outcome.convention, SignConvention::AsWritten);

        assert!(matches!(
            SymplecticForm::new(heisenberg(), RatMatrix::zero(3, 3)),
            Err(Error::OddDimension { dim: 3 })
        ));

        let degenerate = RatMatrix::zero(2, 2);
        assert!(matches!(
            SymplecticForm::new(LieAlgebra::abelian(2).unwrap(), degenerate),
            Err(Error::Degenerate { rank: 0 })
        ));

        let not_antisym = RatMatrix::identity(2);
        assert!(matches!(
            SymplecticForm::new(LieAlgebra::abelian(2).unwrap(), not_antisym),
            Err(Error::NotAntisymmetric { .. })
        ));
    }
}
