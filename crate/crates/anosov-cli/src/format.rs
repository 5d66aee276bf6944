//! On-disk JSON formats.
//!
//! All files are UTF-8 JSON with alphabetically sorted keys, rationals as
//! canonical strings ("p/q" in lowest terms, plain "p" for integers) and
//! 1-based basis indices, so files read naturally next to the usual
//! mathematical notation. Serialization is deterministic: the same value
//! always produces byte-identical output. Writes go through a temp file and
//! an atomic rename.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use anosov_core::hyperbolicity::Certificate;
use anosov_core::lie::LieAlgebra;
use anosov_core::matrix::Matrix;
use anosov_core::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

/// One structure-constant record: `[X_i, X_j] = … + c·X_k + …`, `i < j`,
/// all indices 1-based.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        AlgebraFile {
            name: alg.name().map(String::from),
            dim: alg.dim(),
            degrees: alg.degrees().map(<[u32]>::to_vec),
            brackets: alg
                .entries()
                .map(|(i, j, k, c)| BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, FormatError> {
        let mut entries = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.k == 0 {
                return Err(invalid(format!(
                    "bracket ({}, {}) -> {}: indices are 1-based, 0 is out of range",
                    b.i, b.j, b.k
                )));
            }
            if b.i >= b.j {
                return Err(invalid(format!(
                    "bracket ({}, {}) -> {}: requires i < j (the i > j half is implied by antisymmetry)",
                    b.i, b.j, b.k
                )));
            }
            if b.j > self.dim || b.k > self.dim {
                return Err(invalid(format!(
                    "bracket ({}, {}) -> {}: index out of range for dimension {}",
                    b.i, b.j, b.k, self.dim
                )));
            }
            let c = parse_rational(&b.c).map_err(|e| {
                invalid(format!(
                    "bracket ({}, {}) -> {}: bad coefficient `{}`: {e}",
                    b.i, b.j, b.k, b.c
                ))
            })?;
            entries.push((b.i - 1, b.j - 1, b.k - 1, c));
        }
        let mut alg = LieAlgebra::new(self.dim, entries)
            .map_err(|e| invalid(e.to_string()))?;
        if let Some(degrees) = &self.degrees {
            alg = alg
                .with_degrees(degrees.clone())
                .map_err(|e| invalid(e.to_string()))?;
        }
        if let Some(name) = &self.name {
            alg = alg.with_name(name.clone());
        }
        Ok(alg)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(name: Option<&str>, m: &Matrix) -> Self {
        MatrixFile {
            name: name.map(String::from),
            rows: matrix_rows(m),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, FormatError> {
        let rows = parse_matrix_rows(&self.rows)?;
        Matrix::from_rows(rows).map_err(|e| invalid(e.to_string()))
    }
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn parse_matrix_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>, FormatError> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_rational(s).map_err(|e| {
                        invalid(format!("matrix entry ({}, {}): `{s}`: {e}", i + 1, j + 1))
                    })
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateFlags {
    pub automorphism: bool,
    pub integral: bool,
    pub unimodular: bool,
    pub hyperbolic: bool,
    pub anosov: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Parameters {
    /// "doubling", "catalog" or "user".
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_exponents: Option<Vec<i64>>,
    /// 1-based basis order that regroups pairs by ascending degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_sorted_permutation: Option<Vec<usize>>,
}

impl Parameters {
    pub fn user() -> Self {
        Parameters {
            construction: "user".into(),
            a: None,
            catalog: None,
            block_exponents: None,
            degree_sorted_permutation: None,
        }
    }
}

/// A self-contained verdict: embeds the algebra, the matrix and every
/// computed quantity, so it can be re-verified from this file alone.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateFile {
    pub algebra: AlgebraFile,
    pub matrix: Vec<Vec<String>>,
    /// Constant term first.
    pub char_poly: Vec<String>,
    pub flags: CertificateFlags,
    pub expanding_dim: usize,
    pub contracting_dim: usize,
    /// "exact", "numeric-fallback", or "none" when not classified.
    pub classification_mode: String,
    pub parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_witnesses: Option<Vec<String>>,
}

impl CertificateFile {
    pub fn new(
        algebra: &LieAlgebra,
        matrix: &Matrix,
        cert: &Certificate,
        parameters: Parameters,
    ) -> Self {
        let witnesses: Vec<String> = cert.failures.iter().map(|w| w.to_string()).collect();
        let (expanding, contracting, mode) = match &cert.splitting {
            Some(s) => (s.expanding, s.contracting, s.mode.to_string()),
            None => (0, 0, "none".to_string()),
        };
        CertificateFile {
            algebra: AlgebraFile::from_algebra(algebra),
            matrix: matrix_rows(matrix),
            char_poly: cert.char_poly.coeffs().iter().map(format_rational).collect(),
            flags: CertificateFlags {
                automorphism: cert.automorphism,
                integral: cert.integral,
                unimodular: cert.unimodular,
                hyperbolic: cert.hyperbolic,
                anosov: cert.anosov,
            },
            expanding_dim: expanding,
            contracting_dim: contracting,
            classification_mode: mode,
            parameters,
            failure_witnesses: if witnesses.is_empty() {
                None
            } else {
                Some(witnesses)
            },
        }
    }
}

/// Canonical JSON text: alphabetically sorted keys, two-space indentation,
/// trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // Round-tripping through Value sorts object keys (its map is a BTreeMap).
    let v = serde_json::to_value(value).expect("in-memory values serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("valid JSON value");
    s.push('\n');
    s
}

/// Atomic write: temp file in the target directory, then rename.
pub fn write_canonical<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let text = to_canonical_json(value);
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|e| FormatError::Io {
            path: dir.display().to_string(),
            source: e,
        })?;
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or_else(|| Path::new(".")))
        .map_err(|e| FormatError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
    tmp.write_all(text.as_bytes()).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    tmp.persist(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        source: e.error,
    })?;
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let text = fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    serde_json::from_str(&text).map_err(|e| FormatError::Json {
        path: path.display().to_string(),
        source: e,
    })
}
