//! Dense matrices over an exact coefficient ring.
//!
//! `Matrix<T>` is generic over [`Ring`], instantiated in practice as
//! [`RatMatrix`] (rational entries) and [`PolyMatrix`] (multivariate
//! polynomial entries, used for generic elements Σ xᵢ·Mᵢ). Characteristic
//! polynomials are computed by the Faddeev–LeVerrier recurrence, which only
//! divides by the integers 1..n and therefore stays exact over ℚ and over
//! ℚ[x₁..x_n]; that is what lets the nilpotency-for-all-X and completeness
//! checks run symbolically instead of sampling.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Coefficient-ring interface for matrix entries.
///
/// Methods take references so big-integer values are not cloned needlessly;
/// `HEAVY` marks rings whose products are expensive enough that row-level
/// parallelism in matrix multiplication pays off.
pub trait Ring: Clone + PartialEq + Send + Sync + fmt::Debug + fmt::Display {
    const HEAVY: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact division by a nonzero integer.
    fn div_int(&self, k: i64) -> Self;
}

impl Ring for Scalar {
    const HEAVY: bool = false;

    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_int(&self, k: i64) -> Self {
        Scalar::div_int(self, k)
    }
}

impl Ring for MultiPoly {
    const HEAVY: bool = true;

    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn div_int(&self, k: i64) -> Self {
        MultiPoly::div_int(self, k)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

pub type RatMatrix = Matrix<Scalar>;
pub type PolyMatrix = Matrix<MultiPoly>;

impl<T: Ring> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch {
                    reason: format!("ragged rows: expected {c} columns, got {}", row.len()),
                });
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    fn mul_row(&self, rhs: &Self, i: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() || rhs.at(k, j).is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(rhs.at(k, j)));
            }
            out.push(acc);
        }
        out
    }

    /// Matrix product, rows computed sequentially.
    pub fn mul_seq(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            data.extend(self.mul_row(rhs, i));
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// Matrix product with rows computed in parallel.
    #[cfg(feature = "parallel")]
    pub fn mul_par(&self, rhs: &Self) -> Self {
        use rayon::prelude::*;
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let rows: Vec<Vec<T>> = (0..self.rows)
            .into_par_iter()
            .map(|i| self.mul_row(rhs, i))
            .collect();
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix product. Heavy entry rings go row-parallel when the `parallel`
    /// feature is enabled.
    pub fn mul(&self, rhs: &Self) -> Self {
        #[cfg(feature = "parallel")]
        if T::HEAVY && self.rows > 2 {
            return self.mul_par(rhs);
        }
        self.mul_seq(rhs)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add_ref(self.at(i, i));
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Coefficients of det(tI − M) in ascending powers of t (length n+1,
    /// monic), by the Faddeev–LeVerrier recurrence. Divisions are by the
    /// integers 1..n only, hence exact over any ℚ-algebra.
    pub fn char_poly_coeffs(&self) -> Result<Vec<T>> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut aux = Self::identity(n); // N_0
        for k in 1..=n {
            let m = self.mul(&aux); // M_k = A · N_{k-1}
            let a_k = m.trace().div_int(k as i64).neg_ref();
            coeffs[n - k] = a_k.clone();
            aux = m;
            for i in 0..n {
                let d = aux.at(i, i).add_ref(&a_k);
                aux.set(i, i, d); // N_k = M_k + a_k I
            }
        }
        Ok(coeffs)
    }

    /// Runs the same recurrence but stops at the first nonzero non-leading
    /// coefficient (highest power first, starting with the trace). `None`
    /// means det(tI − M) = t^n identically.
    pub fn first_nonzero_char_coeff(&self) -> Result<Option<(usize, T)>> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aux = Self::identity(n);
        for k in 1..=n {
            let m = self.mul(&aux);
            let a_k = m.trace().div_int(k as i64).neg_ref();
            if !a_k.is_zero() {
                return Ok(Some((n - k, a_k)));
            }
            // a_k = 0, so N_k = M_k.
            aux = m;
        }
        Ok(None)
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
            write!(f, "]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Rational roots of a square matrix's characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrum {
    /// Distinct rational eigenvalues with algebraic multiplicities, ascending.
    pub roots: Vec<(Scalar, usize)>,
    /// True when the multiplicities of the rational roots sum to the
    /// dimension, i.e. the characteristic polynomial splits over ℚ.
    pub splits_over_q: bool,
}

impl RationalSpectrum {
    pub fn eigenvalues(&self) -> Vec<Scalar> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

impl RatMatrix {
    /// Matrix–vector product (vectors are coordinate columns).
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, k).is_zero() {
                        acc += &(self.at(i, k) * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form and the pivot-column list. Total: any
    /// rational matrix reduces.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r >= rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = m.at(r, c).recip();
            for j in 0..cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in 0..cols {
                    let v = m.at(i, j) - &(&factor * m.at(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {v : Mv = 0} in canonical form.
    pub fn kernel_basis(&self) -> crate::subspace::Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[fc] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, fc);
            }
            basis.push(v);
        }
        crate::subspace::Subspace::span(self.cols, basis)
    }

    /// Inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        aug = red;
        Some(Matrix::from_fn(n, n, |i, j| aug.at(i, j + n).clone()))
    }

    /// Nilpotency by repeated squaring (index is at most the dimension).
    pub fn is_nilpotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(true);
        }
        let mut p = self.clone();
        let mut e = 1;
        loop {
            if p.is_zero() {
                return Ok(true);
            }
            if e >= n {
                return Ok(false);
            }
            p = p.mul(&p);
            e *= 2;
        }
    }

    /// Kernel of (M − λI)^n: the generalized eigenspace of λ.
    pub fn generalized_eigenspace(&self, lambda: &Scalar) -> Result<crate::subspace::Subspace> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let shifted = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.at(i, j) - lambda
            } else {
                self.at(i, j).clone()
            }
        });
        Ok(shifted.pow(n).kernel_basis())
    }

    /// det(tI − M) as a polynomial in the fresh variable `t`.
    pub fn char_poly(&self) -> Result<MultiPoly> {
        let coeffs = self.char_poly_coeffs()?;
        let tvars: Arc<[String]> = Arc::from(vec!["t".to_string()]);
        let terms: Vec<(Scalar, Vec<u32>)> = coeffs
            .into_iter()
            .enumerate()
            .map(|(e, c)| (c, vec![e as u32]))
            .collect();
        Ok(MultiPoly::from_terms(tvars, &terms))
    }

    /// All rational roots of the characteristic polynomial via the
    /// rational-root theorem on its primitive integer form.
    pub fn rational_eigenvalues(&self) -> Result<RationalSpectrum> {
        let coeffs = self.char_poly_coeffs()?;
        let n = self.rows;

        // Multiplicity of the root 0 = index of the first nonzero coefficient.
        let zero_mult = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("monic polynomial has a nonzero coefficient");
        let reduced: Vec<Scalar> = coeffs[zero_mult..].to_vec();

        let mut roots: Vec<(Scalar, usize)> = Vec::new();
        if zero_mult > 0 {
            roots.push((Scalar::zero(), zero_mult));
        }

        if reduced.len() > 1 {
            // Primitive integer form of the deflated polynomial.
            let mut lcm = BigInt::one();
            for c in &reduced {
                lcm = lcm.lcm(c.denom());
            }
            let ints: Vec<BigInt> = reduced
                .iter()
                .map(|c| c.numer() * &lcm / c.denom())
                .collect();
            let mut content = BigInt::zero();
            for c in &ints {
                content = content.gcd(c);
            }
            let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();

            let p_divs = divisors(ints.first().unwrap());
            let q_divs = divisors(ints.last().unwrap());
            let mut candidates: Vec<Scalar> = Vec::new();
            for p in &p_divs {
                for q in &q_divs {
                    let pos = Scalar::from_bigint(p.clone())
                        * Scalar::from_bigint(q.clone()).recip();
                    let neg = -&pos;
                    if !candidates.contains(&pos) {
                        candidates.push(pos);
                    }
                    if !candidates.contains(&neg) {
                        candidates.push(neg);
                    }
                }
            }
            candidates.sort();

            let mut current = reduced;
            for cand in candidates {
                let mut mult = 0;
                while current.len() > 1 && eval_poly(&current, &cand).is_zero() {
                    current = synthetic_div(&current, &cand);
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((cand, mult));
                }
            }
        }

        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        Ok(RationalSpectrum {
            roots,
            splits_over_q: total == n,
        })
    }
}

impl PolyMatrix {
    /// Evaluates every entry at the named point.
    pub fn eval(&self, names: &[String], values: &[Scalar]) -> RatMatrix {
        self.map(|p| p.eval(names, values))
    }

    /// det(tI − M) over the union of the entry variables and a fresh `t`
    /// (first name among t, t_, t__, … not already used).
    pub fn char_poly(&self) -> Result<MultiPoly> {
        let coeffs = self.char_poly_coeffs()?;
        let mut used: Vec<String> = Vec::new();
        for p in &self.data {
            for v in p.vars() {
                if !used.contains(v) {
                    used.push(v.clone());
                }
            }
        }
        let mut t = "t".to_string();
        while used.contains(&t) {
            t.push('_');
        }
        let tvar: Arc<[String]> = Arc::from(vec![t]);
        let mut acc = MultiPoly::zero();
        let mut tpow = MultiPoly::one();
        for c in coeffs {
            acc = acc.add(&c.mul(&tpow));
            tpow = tpow.mul(&MultiPoly::var(tvar.clone(), 0));
        }
        Ok(acc)
    }
}

/// Horner evaluation of a dense univariate polynomial (ascending coeffs).
fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divides by (t − r), assuming r is a root; returns the quotient.
fn synthetic_div(coeffs: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let n = coeffs.len();
    let mut out = vec![Scalar::zero(); n - 1];
    let mut carry = Scalar::zero();
    for i in (1..n).rev() {
        carry = &coeffs[i] + &(&carry * r);
        out[i - 1] = carry.clone();
    }
    out
}

/// Positive divisors by trial division (inputs here are small: constant and
/// leading coefficients of characteristic polynomials of the test corpus).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
    }
    divs.sort();
    divs.dedup();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::x_vars;
    use crate::rat;

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_zero_matrix() {
        let (r, pivots) = m(vec![vec![0, 0], vec![0, 0]]).rref();
        assert!(r.is_zero());
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let (r, pivots) = m(vec![vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, m(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_remark_rho_x1_rank_two() {
        // 4x4 affine matrix of the three-dimensional family at a=1, alpha=0,
        // beta=0; independent oracle: fraction-free elimination (Bareiss)
        // counting nonzero rows.
        let mat = m(vec![
            vec![1, 1, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(mat.rank(), 2);
        assert_eq!(bareiss_rank(&mat), 2);
    }

    /// Fraction-free (Bareiss) elimination over the integers; test-only rank
    /// oracle independent of rref.
    fn bareiss_rank(mat: &RatMatrix) -> usize {
        let mut lcm = BigInt::one();
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                lcm = lcm.lcm(mat.at(i, j).denom());
            }
        }
        let mut a: Vec<Vec<BigInt>> = (0..mat.rows())
            .map(|i| {
                (0..mat.cols())
                    .map(|j| mat.at(i, j).numer() * &lcm / mat.at(i, j).denom())
                    .collect()
            })
            .collect();
        let (rows, cols) = (mat.rows(), mat.cols());
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r >= rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(pr, r);
            for i in (r + 1)..rows {
                for j in (c + 1)..cols {
                    a[i][j] = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        (0..rows)
            .filter(|&i| a[i].iter().any(|x| !x.is_zero()))
            .count()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(RatMatrix::identity(3).kernel_basis().dim(), 0);
        assert_eq!(RatMatrix::zero(3, 3).kernel_basis().dim(), 3);
    }

    #[test]
    fn kernel_by_inspection() {
        let k = m(vec![vec![1, 1, 0], vec![0, 0, 0]]).kernel_basis();
        assert_eq!(k.dim(), 2);
        let b = k.basis();
        assert_eq!(b[0], vec![rat!(1), rat!(-1), rat!(0)]);
        assert_eq!(b[1], vec![rat!(0), rat!(0), rat!(1)]);
    }

    #[test]
    fn char_poly_zero_2x2() {
        let p = RatMatrix::zero(2, 2).char_poly().unwrap();
        assert_eq!(p.to_string(), "t^2");
    }

    #[test]
    fn char_poly_symbolic_a_block() {
        // [[a,a],[a,a]] with symbolic a: det(tI - m) = t^2 - 2a·t.
        let vars: Arc<[String]> = Arc::from(vec!["a".to_string()]);
        let a = MultiPoly::var(vars.clone(), 0);
        let mat = PolyMatrix::from_rows(vec![
            vec![a.clone(), a.clone()],
            vec![a.clone(), a.clone()],
        ])
        .unwrap();
        let coeffs = mat.char_poly_coeffs().unwrap();
        assert!(coeffs[0].is_zero());
        assert_eq!(coeffs[1], a.scale(&rat!(-2)));
        assert_eq!(coeffs[2], MultiPoly::one());
        let p = mat.char_poly().unwrap();
        // graded-lex over (a, t): the a·t term outranks t^2 at equal degree
        assert_eq!(p.to_string(), "-2*a*t + t^2");
    }

    #[test]
    fn char_poly_fresh_variable_avoids_collision() {
        let vars: Arc<[String]> = Arc::from(vec!["t".to_string()]);
        let t = MultiPoly::var(vars, 0);
        let mat = PolyMatrix::from_rows(vec![vec![t]]).unwrap();
        let p = mat.char_poly().unwrap();
        assert_eq!(p.to_string(), "-t + t_");
    }

    #[test]
    fn char_poly_non_square() {
        assert!(matches!(
            RatMatrix::zero(2, 3).char_poly_coeffs(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn nilpotency_checks() {
        let strict = Matrix::from_fn(4, 4, |i, j| {
            if i > j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        assert!(strict.is_nilpotent().unwrap());
        assert!(!RatMatrix::identity(3).is_nilpotent().unwrap());
    }

    #[test]
    fn generalized_eigenspaces_of_identity() {
        let id = RatMatrix::identity(3);
        assert_eq!(id.generalized_eigenspace(&rat!(1)).unwrap().dim(), 3);
        assert_eq!(id.generalized_eigenspace(&rat!(0)).unwrap().dim(), 0);
    }

    #[test]
    fn generalized_eigenspaces_of_affine_block() {
        // 4x4 matrix with eigenvalues {0 (x3), 2}: char poly t^3(t-2).
        let mat = m(vec![
            vec![1, 1, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(mat.generalized_eigenspace(&rat!(2)).unwrap().dim(), 1);
        assert_eq!(mat.generalized_eigenspace(&rat!(0)).unwrap().dim(), 3);
    }

    #[test]
    fn rational_eigenvalues_basics() {
        let spec = RatMatrix::zero(3, 3).rational_eigenvalues().unwrap();
        assert_eq!(spec.roots, vec![(rat!(0), 3)]);
        assert!(spec.splits_over_q);

        let rot = m(vec![vec![0, -1], vec![1, 0]]);
        let spec = rot.rational_eigenvalues().unwrap();
        assert!(spec.roots.is_empty());
        assert!(!spec.splits_over_q);

        let ones = m(vec![vec![1, 1], vec![1, 1]]);
        let spec = ones.rational_eigenvalues().unwrap();
        assert_eq!(spec.eigenvalues(), vec![rat!(0), rat!(2)]);
        assert!(spec.splits_over_q);
    }

    #[test]
    fn rational_eigenvalues_fractional_root() {
        // diag(1/2, -3): primitive form has non-unit leading coefficient.
        let mat = Matrix::from_rows(vec![
            vec![rat!(1 / 2), rat!(0)],
            vec![rat!(0), rat!(-3)],
        ])
        .unwrap();
        let spec = mat.rational_eigenvalues().unwrap();
        assert_eq!(spec.roots, vec![(rat!(-3), 1), (rat!(1 / 2), 1)]);
        assert!(spec.splits_over_q);
    }

    #[test]
    fn inverse_round_trip() {
        let mat = m(vec![vec![2, 1, 0], vec![1, 1, 1], vec![0, 3, 1]]);
        let inv = mat.inverse().unwrap();
        assert_eq!(mat.mul(&inv), RatMatrix::identity(3));
        assert!(m(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn generic_matrix_eval_matches_char_poly() {
        // P = x1·E11 + x2·E12; char poly t^2 - x1 t; eval at x=(3,5).
        let vars = x_vars(2);
        let p = PolyMatrix::from_rows(vec![
            vec![MultiPoly::var(vars.clone(), 0), MultiPoly::var(vars.clone(), 1)],
            vec![MultiPoly::zero(), MultiPoly::zero()],
        ])
        .unwrap();
        let coeffs = p.char_poly_coeffs().unwrap();
        assert_eq!(coeffs[1], MultiPoly::var(vars.clone(), 0).neg());
        let at = p.eval(&vars, &[rat!(3), rat!(5)]);
        assert_eq!(at, m(vec![vec![3, 5], vec![0, 0]]));
    }
}
