//! File formats and canonical (de)serialization.
//!
//! All documents are JSON with a fixed shape; every scalar is the string
//! `p/q` (or `p` when the denominator is 1). Writers emit only nonzero
//! entries, sorted by index, and pretty-print with a trailing newline, so
//! write → read → write is byte-identical. Basis indices in files are
//! 1-based; algebra bracket lists require i < j (the i > j side is implied by
//! antisymmetry), while connection tensors list all pairs since no symmetry
//! holds there.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connection::AffineConnection;
use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, RatMatrix};
use crate::rep::Representation;
use crate::scalar::Scalar;

/// I/O layer error: transport, syntax, schema, or an underlying mathematical
/// validation failure (kept separate so callers can distinguish bad input
/// files from wrong mathematics).
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Math(#[from] Error),
}

pub type IoResult<T> = std::result::Result<T, IoError>;

fn parse_scalar(s: &str) -> IoResult<Scalar> {
    s.parse()
        .map_err(|e: crate::scalar::ParseScalarError| IoError::Invalid(e.to_string()))
}

fn coeff_map(v: &[Scalar]) -> BTreeMap<u32, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| ((k + 1) as u32, c.to_string()))
        .collect()
}

fn coeff_vec(map: &BTreeMap<u32, String>, dim: usize) -> IoResult<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(); dim];
    for (k, s) in map {
        let k = *k as usize;
        if k == 0 || k > dim {
            return Err(IoError::Invalid(format!(
                "coefficient index {k} out of range 1..={dim}"
            )));
        }
        v[k - 1] = parse_scalar(s)?;
    }
    Ok(v)
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: u32,
    pub j: u32,
    pub coeffs: BTreeMap<u32, String>,
}

/// Algebra document: dimension, optional basis names, brackets with i < j.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let coeffs = coeff_map(g.structure_constant(i, j));
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: (i + 1) as u32,
                        j: (j + 1) as u32,
                        coeffs,
                    });
                }
            }
        }
        let default: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
        let names = if g.basis_names() == default.as_slice() {
            None
        } else {
            Some(g.basis_names().to_vec())
        };
        AlgebraFile {
            dim: n,
            basis_names: names,
            brackets,
        }
    }

    pub fn into_algebra(&self) -> IoResult<LieAlgebra> {
        let n = self.dim;
        let mut brackets = Vec::new();
        for b in &self.brackets {
            if b.i >= b.j {
                return Err(IoError::Invalid(format!(
                    "bracket ({}, {}) must have i < j",
                    b.i, b.j
                )));
            }
            if b.j as usize > n {
                return Err(IoError::Invalid(format!(
                    "bracket index {} out of range 1..={n}",
                    b.j
                )));
            }
            let coeffs = coeff_vec(&b.coeffs, n)?;
            let pairs: Vec<(usize, Scalar)> = coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            brackets.push(((b.i - 1) as usize, (b.j - 1) as usize, pairs));
        }
        let mut g = LieAlgebra::from_brackets(n, &brackets)?;
        if let Some(names) = &self.basis_names {
            let tensor: Vec<Vec<Vec<Scalar>>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| g.structure_constant(i, j).to_vec())
                        .collect()
                })
                .collect();
            g = LieAlgebra::new(n, tensor, Some(names.clone()))?;
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct GammaEntry {
    pub i: u32,
    pub j: u32,
    pub coeffs: BTreeMap<u32, String>,
}

/// Connection document: all (i, j) pairs with a nonzero product vector.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ConnectionFile {
    pub dim: usize,
    pub gamma: Vec<GammaEntry>,
}

impl ConnectionFile {
    pub fn from_connection(c: &AffineConnection) -> Self {
        let n = c.algebra().dim();
        let mut gamma = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let coeffs = coeff_map(c.gamma(i, j));
                if !coeffs.is_empty() {
                    gamma.push(GammaEntry {
                        i: (i + 1) as u32,
                        j: (j + 1) as u32,
                        coeffs,
                    });
                }
            }
        }
        ConnectionFile { dim: n, gamma }
    }

    /// Rebuilds and validates the connection over the given algebra.
    pub fn into_connection(&self, algebra: &LieAlgebra) -> IoResult<AffineConnection> {
        let n = algebra.dim();
        if self.dim != n {
            return Err(IoError::Invalid(format!(
                "connection dimension {} does not match algebra dimension {n}",
                self.dim
            )));
        }
        let mut tensor = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for e in &self.gamma {
            let (i, j) = (e.i as usize, e.j as usize);
            if i == 0 || i > n || j == 0 || j > n {
                return Err(IoError::Invalid(format!(
                    "gamma indices ({i}, {j}) out of range 1..={n}"
                )));
            }
            tensor[i - 1][j - 1] = coeff_vec(&e.coeffs, n)?;
        }
        Ok(AffineConnection::new(algebra.clone(), tensor)?)
    }
}

/// Representation document: one matrix per basis element, row-major `p/q`.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub module_dim: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl RepFile {
    pub fn from_representation(rep: &Representation) -> Self {
        RepFile {
            module_dim: rep.module_dim(),
            matrices: rep
                .matrices()
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn into_representation(&self, algebra: &LieAlgebra) -> IoResult<Representation> {
        let m = self.module_dim;
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for (idx, rows) in self.matrices.iter().enumerate() {
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(IoError::Invalid(format!(
                    "matrix {} is not {m}x{m}",
                    idx + 1
                )));
            }
            let mut parsed = Vec::with_capacity(m);
            for row in rows {
                let mut out = Vec::with_capacity(m);
                for s in row {
                    out.push(parse_scalar(s)?);
                }
                parsed.push(out);
            }
            matrices.push(RatMatrix::from_rows(parsed)?);
        }
        Ok(Representation::new(algebra.clone(), matrices)?)
    }
}

/// Symplectic form document: the full antisymmetric matrix, row-major `p/q`.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ThetaFile {
    pub dim: usize,
    pub theta: Vec<Vec<String>>,
}

impl ThetaFile {
    pub fn from_matrix(theta: &RatMatrix) -> Self {
        ThetaFile {
            dim: theta.rows(),
            theta: (0..theta.rows())
                .map(|r| (0..theta.cols()).map(|c| theta.at(r, c).to_string()).collect())
                .collect(),
        }
    }

    pub fn into_matrix(&self) -> IoResult<RatMatrix> {
        let n = self.dim;
        if self.theta.len() != n || self.theta.iter().any(|r| r.len() != n) {
            return Err(IoError::Invalid(format!("theta is not {n}x{n}")));
        }
        let mut rows = Vec::with_capacity(n);
        for row in &self.theta {
            let mut out = Vec::with_capacity(n);
            for s in row {
                out.push(parse_scalar(s)?);
            }
            rows.push(out);
        }
        Ok(Matrix::from_rows(rows)?)
    }
}

/// Machine-readable verification report.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub n: usize,
    pub a: String,
    pub alpha: String,
    pub beta: String,
    pub all_passed: bool,
    pub checks: Vec<ReportCheck>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ReportCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl ReportFile {
    pub fn from_report(report: &crate::catalog::VerificationReport) -> Self {
        ReportFile {
            n: report.params.n,
            a: report.params.a.to_string(),
            alpha: report.params.alpha.to_string(),
            beta: report.params.beta.to_string(),
            all_passed: report.all_passed(),
            checks: report
                .checks
                .iter()
                .map(|c| ReportCheck {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

/// Canonical rendering: pretty JSON plus trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> IoResult<T> {
    serde_json::from_str(s).map_err(|e| IoError::Json(e.to_string()))
}

pub fn read_json_file<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> IoResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| IoError::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_file(path: &std::path::Path, contents: &str) -> IoResult<()> {
    std::fs::write(path, contents).map_err(|e| IoError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{heisenberg_connection, LnFamilyParams};
    use crate::rat;

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        let g = LieAlgebra::model_filiform(5).unwrap();
        let text = to_canonical_json(&AlgebraFile::from_algebra(&g));
        let parsed: AlgebraFile = from_json(&text).unwrap();
        let g2 = parsed.into_algebra().unwrap();
        assert_eq!(g, g2);
        assert_eq!(to_canonical_json(&AlgebraFile::from_algebra(&g2)), text);
    }

    #[test]
    fn algebra_file_rejects_i_ge_j() {
        let text = r#"{"dim": 3, "brackets": [{"i": 2, "j": 2, "coeffs": {"3": "1"}}]}"#;
        let parsed: AlgebraFile = from_json(text).unwrap();
        assert!(matches!(
            parsed.into_algebra(),
            Err(IoError::Invalid(_))
        ));
    }

    #[test]
    fn algebra_file_surfaces_math_errors() {
        // [X1,X2]=X3, [X1,X3]=X1 violates Jacobi.
        let text = r#"{"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 1, "j": 3, "coeffs": {"1": "1"}}
        ]}"#;
        let parsed: AlgebraFile = from_json(text).unwrap();
        assert!(matches!(
            parsed.into_algebra(),
            Err(IoError::Math(Error::JacobiViolation { .. }))
        ));
    }

    #[test]
    fn connection_round_trip_is_byte_identical() {
        let p = LnFamilyParams::new(3, rat!(1), rat!(2), rat!(3)).unwrap();
        let c = heisenberg_connection(&p).unwrap();
        let text = to_canonical_json(&ConnectionFile::from_connection(&c));
        let parsed: ConnectionFile = from_json(&text).unwrap();
        let c2 = parsed.into_connection(c.algebra()).unwrap();
        assert_eq!(c, c2);
        assert_eq!(to_canonical_json(&ConnectionFile::from_connection(&c2)), text);
    }

    #[test]
    fn rep_round_trip() {
        let p = LnFamilyParams::new(4, rat!(1 / 2), rat!(-1), rat!(0)).unwrap();
        let rep = crate::catalog::ln_representation(&p).unwrap();
        let text = to_canonical_json(&RepFile::from_representation(&rep));
        let parsed: RepFile = from_json(&text).unwrap();
        let rep2 = parsed.into_representation(rep.algebra()).unwrap();
        assert_eq!(rep, rep2);
        assert_eq!(to_canonical_json(&RepFile::from_representation(&rep2)), text);
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"dim": 1, "brackets": [], "extra": 1}"#;
        assert!(matches!(
            from_json::<AlgebraFile>(text),
            Err(IoError::Json(_))
        ));
    }

    #[test]
    fn decimal_scalars_rejected() {
        let text = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": "0.5"}}]}"#;
        let parsed: AlgebraFile = from_json(text).unwrap();
        assert!(matches!(parsed.into_algebra(), Err(IoError::Invalid(_))));
    }
}
