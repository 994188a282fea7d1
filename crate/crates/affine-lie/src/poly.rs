//! Sparse multivariate polynomials over [`Scalar`].
//!
//! A polynomial carries its own ordered variable list; terms map exponent
//! vectors (length = number of variables) to nonzero coefficients and are kept
//! in graded-lexicographic order. Binary operations align the two variable
//! lists first (union, left operand's order extended by the right's new
//! variables), so constants — in particular the canonical `zero()`/`one()`
//! with an empty variable list — combine with anything.
//!
//! This is enough ring machinery for the generic elements x₁X₁+⋯+x_nX_n that
//! the nilpotency and completeness checks feed through the characteristic
//! polynomial; there is deliberately no division or factorization here.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

/// Exponent vector with graded-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Mono(Vec<u32>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Mono, Scalar>,
}

/// Builds the standard variable list `x1..xn`.
pub fn x_vars(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Arc::from(Vec::new()),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        MultiPoly {
            vars: Arc::from(Vec::new()),
            terms,
        }
    }

    /// The single variable `vars[idx]`.
    pub fn var(vars: Arc<[String]>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(exps), Scalar::one());
        MultiPoly { vars, terms }
    }

    /// The linear form Σ coeffs[i]·vars[i].
    pub fn linear(vars: Arc<[String]>, coeffs: &[Scalar]) -> Self {
        assert_eq!(vars.len(), coeffs.len(), "coefficient count mismatch");
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u32; vars.len()];
                exps[i] = 1;
                terms.insert(Mono(exps), c.clone());
            }
        }
        MultiPoly { vars, terms }
    }

    /// Builds a polynomial from (coefficient, exponent-vector) pairs.
    pub fn from_terms(vars: Arc<[String]>, terms: &[(Scalar, Vec<u32>)]) -> Self {
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (c, exps) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(Mono(exps.clone())).or_insert_with(Scalar::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms: map }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value if the polynomial has no variable-carrying term.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order as (exponents, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Coefficient of the monomial with the given exponents (within this
    /// polynomial's own variable list).
    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        assert_eq!(exps.len(), self.vars.len());
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    /// Re-expresses the polynomial over a superset variable list.
    fn remap(&self, vars: &Arc<[String]>) -> Self {
        if Arc::ptr_eq(&self.vars, vars) || self.vars == *vars {
            return self.clone();
        }
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("remap target must contain all variables")
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; vars.len()];
            for (old_idx, &e) in m.0.iter().enumerate() {
                exps[positions[old_idx]] = e;
            }
            terms.insert(Mono(exps), c.clone());
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Aligns two polynomials onto the union of their variable lists.
    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.same_vars(other) {
            return (self.clone(), other.clone());
        }
        // Common fast path: one side is constant.
        if other.vars.is_empty() {
            return (self.clone(), other.remap(&self.vars));
        }
        if self.vars.is_empty() {
            return (self.remap(&other.vars), other.clone());
        }
        let mut union: Vec<String> = self.vars.to_vec();
        for v in other.vars.iter() {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        let union: Arc<[String]> = Arc::from(union);
        (self.remap(&union), other.remap(&union))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (m, c) in b.terms {
            let entry = a.terms.entry(m).or_insert_with(Scalar::zero);
            *entry += c;
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (a, b) = self.aligned(other);
        let mut terms: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                let entry = terms.entry(Mono(exps)).or_insert_with(Scalar::zero);
                *entry += prod;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: a.vars,
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Exact division by a nonzero integer (coefficient-wise).
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero");
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.div_int(k)))
                .collect(),
        }
    }

    /// Evaluates by variable name: `names[i]` gets `values[i]`. Every variable
    /// of this polynomial must appear in `names`.
    pub fn eval(&self, names: &[String], values: &[Scalar]) -> Scalar {
        assert_eq!(names.len(), values.len());
        let slots: Vec<&Scalar> = self
            .vars
            .iter()
            .map(|v| {
                let pos = names
                    .iter()
                    .position(|n| n == v)
                    .unwrap_or_else(|| panic!("no value supplied for variable {v}"));
                &values[pos]
            })
            .collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= slots[i];
                }
            }
            acc += t;
        }
        acc
    }
}

impl PartialEq for MultiPoly {
    /// Mathematical equality: variable lists are aligned before comparing.
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other) {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending graded-lex, leading term first.
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.vars[i]);
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn xy() -> Arc<[String]> {
        Arc::from(vec!["x".to_string(), "y".to_string()])
    }

    #[test]
    fn constants_align_with_anything() {
        let x = MultiPoly::var(xy(), 0);
        let sum = x.add(&MultiPoly::one());
        assert_eq!(sum.to_string(), "x + 1");
        assert_eq!(x.mul(&MultiPoly::zero()), MultiPoly::zero());
        assert_eq!(x.sub(&x), MultiPoly::zero());
    }

    #[test]
    fn binomial_square() {
        let x = MultiPoly::var(xy(), 0);
        let y = MultiPoly::var(xy(), 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        // graded-lex: x^2, xy, y^2
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(sq.total_degree(), 2);
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn eval_by_name_handles_reordered_vars() {
        let x = MultiPoly::var(xy(), 0);
        let y = MultiPoly::var(xy(), 1);
        let p = x.mul(&x).sub(&y.scale(&rat!(3)));
        let names = vec!["y".to_string(), "x".to_string()];
        let v = p.eval(&names, &[rat!(2), rat!(5)]);
        assert_eq!(v, rat!(19)); // 25 - 6
    }

    #[test]
    fn variable_union_keeps_left_order() {
        let x = MultiPoly::var(Arc::from(vec!["x".to_string()]), 0);
        let t = MultiPoly::var(Arc::from(vec!["t".to_string()]), 0);
        let p = x.add(&t);
        assert_eq!(p.vars(), &["x".to_string(), "t".to_string()]);
        // x and t have the same degree; graded-lex falls back to exponent
        // order, so the x-term (exps (1,0)) prints after (0,1).
        assert_eq!(p.to_string(), "x + t");
    }

    #[test]
    fn display_one_coefficients() {
        let x = MultiPoly::var(xy(), 0);
        let p = x.neg().add(&MultiPoly::constant(rat!(1 / 2)));
        assert_eq!(p.to_string(), "-x + 1/2");
    }
}
