//! Rational Lie algebras presented by sparse structure constants.
//!
//! An algebra of dimension `d` stores only the bracket entries
//! `[X_i, X_j] = Σ c·X_k` for `i < j`; the `i > j` half is implied by
//! antisymmetry and the diagonal is zero by construction, so antisymmetry
//! cannot be violated by any input. The Jacobi identity is *checked*, not
//! assumed. Optionally each basis vector carries a positive integer degree;
//! a compatible grading forces every nonzero bracket to add degrees.
//!
//! Indices are 0-based here; the file formats are 1-based.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::matrix::{Matrix, MatrixError};
use crate::rational::{denominator_lcm, unit_vector, vec_zero, Int, Rational};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `(i, j) → [(k, c), …]` with `i < j`, inner lists sorted by `k`,
    /// all coefficients nonzero.
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    degrees: Option<Vec<u32>>,
    name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieError {
    ZeroDimension,
    BadBracketIndex { i: usize, j: usize, k: usize, dim: usize },
    DimensionMismatch { expected: usize, got: usize },
    BadDegreeCount { expected: usize, got: usize },
    ZeroDegree { index: usize },
    SingularBasisChange,
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::ZeroDimension => write!(f, "algebra dimension must be positive"),
            LieError::BadBracketIndex { i, j, k, dim } => write!(
                f,
                "bracket entry ({}, {}) -> {} out of range for dimension {} (need i < j, 1-based indices in 1..={})",
                i + 1, j + 1, k + 1, dim, dim
            ),
            LieError::DimensionMismatch { expected, got } => {
                write!(f, "expected a vector/matrix of size {expected}, got {got}")
            }
            LieError::BadDegreeCount { expected, got } => {
                write!(f, "expected {expected} degrees, got {got}")
            }
            LieError::ZeroDegree { index } => {
                write!(f, "degree of basis vector {} must be >= 1", index + 1)
            }
            LieError::SingularBasisChange => write!(f, "basis-change matrix is singular"),
        }
    }
}

/// First violating triple of the Jacobi identity, with the nonzero cyclic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingError {
    MissingDegrees,
    Violation { i: usize, j: usize, k: usize },
}

impl fmt::Display for GradingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingError::MissingDegrees => write!(f, "no degrees attached to the algebra"),
            GradingError::Violation { i, j, k } => write!(
                f,
                "bracket ({}, {}) -> {} does not add degrees",
                i + 1,
                j + 1,
                k + 1
            ),
        }
    }
}

impl LieAlgebra {
    /// Builds an algebra from bracket entries `(i, j, k, c)` with `i < j`.
    /// Duplicate `(i, j, k)` entries are summed; zero coefficients dropped.
    pub fn new(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= j || j >= dim || k >= dim {
                return Err(LieError::BadBracketIndex { i, j, k, dim });
            }
            if c.is_zero() {
                continue;
            }
            let slot = brackets.entry((i, j)).or_default();
            let acc = slot.entry(k).or_insert_with(Rational::zero);
            *acc += c;
            if acc.is_zero() {
                slot.remove(&k);
            }
        }
        let brackets = brackets
            .into_iter()
            .filter(|(_, terms)| !terms.is_empty())
            .map(|(key, terms)| (key, terms.into_iter().collect()))
            .collect();
        Ok(LieAlgebra {
            dim,
            brackets,
            degrees: None,
            name: None,
        })
    }

    /// The abelian algebra ℚ^dim.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, core::iter::empty()).expect("dim checked by caller")
    }

    pub fn with_degrees(mut self, degrees: Vec<u32>) -> Result<Self, LieError> {
        if degrees.len() != self.dim {
            return Err(LieError::BadDegreeCount {
                expected: self.dim,
                got: degrees.len(),
            });
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(LieError::ZeroDegree { index });
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// All stored entries `(i, j, k, c)` in deterministic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.brackets
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    /// True when every structure constant is an integer.
    pub fn has_integer_constants(&self) -> bool {
        self.entries().all(|(_, _, _, c)| c.denom().is_one())
    }

    /// `[e_i, e_j]` as a dense coefficient vector (any `i`, `j`).
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec_zero(self.dim);
        if i == j {
            return out;
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(terms) = self.brackets.get(&key) {
            for (k, c) in terms {
                out[*k] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        out
    }

    /// Bilinear extension of the structure constants to arbitrary vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec_zero(self.dim);
        for (&(i, j), terms) in &self.brackets {
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += c * &coeff;
            }
        }
        Ok(out)
    }

    /// Verifies `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0`
    /// over all `i < j < k`, returning the first violation.
    pub fn jacobi_check(&self) -> Result<(), JacobiViolation> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let ij = self.basis_bracket(i, j);
                for k in j + 1..self.dim {
                    let ek = unit_vector(self.dim, k);
                    let mut sum = self.bracket(&ij, &ek).expect("dims agree");
                    let jk = self.basis_bracket(j, k);
                    let ei = unit_vector(self.dim, i);
                    for (s, t) in sum.iter_mut().zip(self.bracket(&jk, &ei).expect("dims agree")) {
                        *s += t;
                    }
                    let ki = self.basis_bracket(k, i);
                    let ej = unit_vector(self.dim, j);
                    for (s, t) in sum.iter_mut().zip(self.bracket(&ki, &ej).expect("dims agree")) {
                        *s += t;
                    }
                    if sum.iter().any(|c| !c.is_zero()) {
                        return Err(JacobiViolation {
                            i,
                            j,
                            k,
                            residual: sum,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that every nonzero bracket adds degrees: for each stored
    /// `(i, j, k)` the degrees satisfy `deg k = deg i + deg j`.
    pub fn grading_check(&self) -> Result<(), GradingError> {
        let Some(degrees) = &self.degrees else {
            return Err(GradingError::MissingDegrees);
        };
        for (i, j, k, _) in self.entries() {
            if degrees[k] != degrees[i] + degrees[j] {
                return Err(GradingError::Violation { i, j, k });
            }
        }
        Ok(())
    }

    /// Span of all brackets `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                s.insert(&self.basis_bracket(i, j));
            }
        }
        s
    }

    /// The center `{z : [e_i, z] = 0 for all i}` via an exact kernel.
    pub fn center(&self) -> Subspace {
        // Stack the adjoint maps ad(e_i) into one (dim²)×dim matrix.
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            let mut blocks: Vec<Vec<Rational>> = (0..self.dim).map(|_| vec_zero(self.dim)).collect();
            for j in 0..self.dim {
                for (r, c) in self.basis_bracket(i, j).into_iter().enumerate() {
                    blocks[r][j] = c;
                }
            }
            rows.extend(blocks);
        }
        let stacked = Matrix::from_rows(rows).expect("rows are rectangular");
        let mut s = Subspace::zero(self.dim);
        for v in stacked.kernel() {
            s.insert(&v);
        }
        s
    }

    /// Dimensions of the lower central series `n ⊇ [n,n] ⊇ [n,[n,n]] ⊇ …`.
    pub fn lower_central_series(&self) -> CentralSeries {
        let mut dims = alloc::vec![self.dim];
        let mut current = Subspace::full(self.dim);
        loop {
            let mut next = Subspace::zero(self.dim);
            for v in current.basis() {
                for i in 0..self.dim {
                    let ei = unit_vector(self.dim, i);
                    next.insert(&self.bracket(&ei, &v).expect("dims agree"));
                }
            }
            let d = next.dim();
            dims.push(d);
            if d == 0 {
                return CentralSeries {
                    dims,
                    nilpotent: true,
                };
            }
            if d == *dims.get(dims.len() - 2).expect("at least two entries") {
                return CentralSeries {
                    dims,
                    nilpotent: false,
                };
            }
            current = next;
        }
    }

    /// Block-diagonal direct sum. Degrees concatenate when both sides carry
    /// them and are dropped otherwise.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let offset = self.dim;
        let entries = self
            .entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .chain(
                other
                    .entries()
                    .map(|(i, j, k, c)| (i + offset, j + offset, k + offset, c.clone())),
            );
        let mut sum = LieAlgebra::new(self.dim + other.dim, entries)
            .expect("offsets preserve validity");
        sum.degrees = match (&self.degrees, &other.degrees) {
            (Some(a), Some(b)) => {
                let mut d = a.clone();
                d.extend_from_slice(b);
                Some(d)
            }
            _ => None,
        };
        sum.name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(alloc::format!("{a}⊕{b}")),
            _ => None,
        };
        sum
    }

    /// Structure constants of the same algebra in the basis given by the
    /// columns of `p` (new basis vectors in old coordinates). Degree labels
    /// are tied to the old basis and are not carried over.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        if !p.is_square() || p.rows() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: p.rows(),
            });
        }
        let p_inv = match p.inverse() {
            Ok(m) => m,
            Err(MatrixError::Singular) => return Err(LieError::SingularBasisChange),
            Err(_) => unreachable!("shape already checked"),
        };
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let w = self.bracket(&cols[i], &cols[j])?;
                let coords = p_inv.mul_vec(&w).expect("dims agree");
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        let mut out = LieAlgebra::new(self.dim, entries)?;
        out.name = self.name.clone();
        Ok(out)
    }

    /// True (with a witness) when some central vector lies outside the
    /// derived subalgebra; for a nilpotent algebra this is exactly the
    /// condition for splitting off a one-dimensional abelian factor.
    pub fn abelian_factor_witness(&self) -> Option<Vec<Rational>> {
        let derived = self.derived_subalgebra();
        self.center()
            .basis()
            .into_iter()
            .find(|z| !derived.contains(z))
    }

    /// Rescales the basis uniformly by `L`, the lcm of all structure
    /// constant denominators, making every constant an integer
    /// (`X'_i = L·X_i` turns constant `c` into `L·c`). Grading and name are
    /// unchanged.
    pub fn scale_basis_to_integer(&self) -> (LieAlgebra, Int) {
        let constants: Vec<&Rational> = self.entries().map(|(_, _, _, c)| c).collect();
        let l = denominator_lcm(constants);
        let factor = Rational::from_integer(l.clone());
        let entries = self
            .entries()
            .map(|(i, j, k, c)| (i, j, k, c * &factor))
            .collect::<Vec<_>>();
        let mut scaled = LieAlgebra::new(self.dim, entries).expect("indices unchanged");
        scaled.degrees = self.degrees.clone();
        scaled.name = self.name.clone();
        (scaled, l)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "{name} (dim {})", self.dim)?;
        } else {
            writeln!(f, "Lie algebra of dimension {}", self.dim)?;
        }
        for (&(i, j), terms) in &self.brackets {
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        alloc::format!("X{}", k + 1)
                    } else {
                        alloc::format!("{}·X{}", crate::rational::format_rational(c), k + 1)
                    }
                })
                .collect();
            writeln!(f, "  [X{}, X{}] = {}", i + 1, j + 1, rhs.join(" + "))?;
        }
        Ok(())
    }
}

/// Lower central series dimensions; `nilpotent` is false when the series
/// stabilized at a nonzero dimension instead of reaching 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    pub dims: Vec<usize>,
    pub nilpotent: bool,
}

impl CentralSeries {
    /// Nilpotency step: the largest k with n^k ≠ 0, i.e. the number of
    /// nonzero entries of the series.
    pub fn step(&self) -> Option<usize> {
        self.nilpotent.then(|| self.dims.len() - 1)
    }
}
