//! Doubling a graded algebra into an algebra with an integer hyperbolic
//! automorphism.
//!
//! Given `n` with integer structure constants `m` and a grading, and an
//! integer `a ≥ 2`, the direct sum `n ⊕ n` is rewritten in the basis
//! `u_i = X_i + Y_i`, `v_i = √(a²−1)·(X_i − Y_i)` (interleaved
//! `u_1, v_1, u_2, v_2, …`). In that basis the brackets become
//!
//! ```text
//! [u_i, u_j] = m·u_k      [u_i, v_j] = m·v_k
//! [v_i, u_j] = m·v_k      [v_i, v_j] = (a²−1)·m·u_k
//! ```
//!
//! so the basis is again a ℤ-basis, and the automorphism that scales the
//! first copy by λ^deg and the second by λ^−deg (λ = a + √(a²−1), the
//! larger root of x² − 2ax + 1) becomes block diagonal with integer blocks
//! `B^deg`, `B = [[a, a²−1], [1, a]]` of determinant 1.
//!
//! We fix λ as the larger root throughout; choosing λ⁻¹ instead only swaps
//! the expanding and contracting subspaces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::lie::{JacobiViolation, LieAlgebra};
use crate::matrix::Matrix;
use crate::quadext::{QuadExt, QuadMat2};
use crate::rational::{format_rational, rat, Int, Rational};

/// Output of [`double_construction`]: the doubled algebra in the integer
/// basis, the automorphism matrix, and the block data tying them together.
#[derive(Clone, Debug)]
pub struct DoublingResult {
    /// Dimension-2d algebra in the interleaved basis; integer constants.
    pub doubled: LieAlgebra,
    /// Block-diagonal integer matrix, 2×2 block `B^deg(i)` per pair.
    pub matrix: Matrix,
    pub a: i64,
    /// Degree of each pair, i.e. the exponent of its block.
    pub block_exponents: Vec<u32>,
}

impl DoublingResult {
    /// Basis order (0-based, length 2d) that regroups the interleaved pairs
    /// by ascending degree, as the block matrix is usually displayed.
    pub fn degree_sorted_permutation(&self) -> Vec<usize> {
        let mut pairs: Vec<usize> = (0..self.block_exponents.len()).collect();
        pairs.sort_by_key(|&i| self.block_exponents[i]);
        let mut order = Vec::with_capacity(2 * pairs.len());
        for p in pairs {
            order.push(2 * p);
            order.push(2 * p + 1);
        }
        order
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoublingError {
    /// `a ≤ 1` leaves no room for 0 < λ⁻¹ < 1 < λ.
    ParameterTooSmall { a: i64 },
    MissingGrading,
    GradingViolation { i: usize, j: usize, k: usize },
    JacobiViolation(JacobiViolation),
    NonIntegerConstants,
}

impl fmt::Display for DoublingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoublingError::ParameterTooSmall { a } => {
                write!(f, "parameter a = {a} must be >= 2")
            }
            DoublingError::MissingGrading => {
                write!(f, "doubling requires a graded algebra (no degrees attached)")
            }
            DoublingError::GradingViolation { i, j, k } => write!(
                f,
                "degrees do not add on bracket ({}, {}) -> {}",
                i + 1,
                j + 1,
                k + 1
            ),
            DoublingError::JacobiViolation(v) => write!(
                f,
                "Jacobi identity fails at ({}, {}, {})",
                v.i + 1,
                v.j + 1,
                v.k + 1
            ),
            DoublingError::NonIntegerConstants => write!(
                f,
                "structure constants are not all integers; apply scale_basis_to_integer first"
            ),
        }
    }
}

/// The 2×2 block `B = [[a, a²−1], [1, a]]`; determinant a² − (a²−1) = 1.
pub fn basic_block(a: i64) -> Matrix {
    let a_int = Int::from(a);
    let d = &a_int * &a_int - 1;
    Matrix::from_rows(alloc::vec![
        alloc::vec![rat(a), Rational::from_integer(d)],
        alloc::vec![rat(1), rat(a)],
    ])
    .expect("fixed shape")
}

/// Builds the doubled algebra and its integer automorphism matrix.
pub fn double_construction(alg: &LieAlgebra, a: i64) -> Result<DoublingResult, DoublingError> {
    if a < 2 {
        return Err(DoublingError::ParameterTooSmall { a });
    }
    let Some(degrees) = alg.degrees() else {
        return Err(DoublingError::MissingGrading);
    };
    if let Err(crate::lie::GradingError::Violation { i, j, k }) = alg.grading_check() {
        return Err(DoublingError::GradingViolation { i, j, k });
    }
    if let Err(v) = alg.jacobi_check() {
        return Err(DoublingError::JacobiViolation(v));
    }
    if !alg.has_integer_constants() {
        return Err(DoublingError::NonIntegerConstants);
    }

    let d_param = Int::from(a) * Int::from(a) - 1;
    let d_rat = Rational::from_integer(d_param);
    let dim = alg.dim();
    let mut entries = Vec::with_capacity(4 * alg.entries().count());
    for (i, j, k, m) in alg.entries() {
        let (ui, vi) = (2 * i, 2 * i + 1);
        let (uj, vj) = (2 * j, 2 * j + 1);
        let (uk, vk) = (2 * k, 2 * k + 1);
        entries.push((ui, uj, uk, m.clone()));
        entries.push((ui, vj, vk, m.clone()));
        entries.push((vi, uj, vk, m.clone()));
        entries.push((vi, vj, uk, m * &d_rat));
    }
    let mut doubled =
        LieAlgebra::new(2 * dim, entries).expect("index doubling preserves validity");
    let mut doubled_degrees = Vec::with_capacity(2 * dim);
    for &deg in degrees {
        doubled_degrees.push(deg);
        doubled_degrees.push(deg);
    }
    doubled = doubled
        .with_degrees(doubled_degrees)
        .expect("length matches");
    let base: String = alg.name().map_or_else(
        || String::from("algebra"),
        String::from,
    );
    doubled = doubled.with_name(alloc::format!("double({base}, a={a})"));

    let block = basic_block(a);
    let blocks: Vec<Matrix> = degrees
        .iter()
        .map(|&deg| block.pow(i64::from(deg)).expect("square"))
        .collect();
    let matrix = Matrix::block_diagonal(&blocks);

    let result = DoublingResult {
        doubled,
        matrix,
        a,
        block_exponents: degrees.to_vec(),
    };
    // The two defining identities of the construction, checked literally.
    assert_eq!(
        result.matrix.det().expect("square"),
        Rational::one(),
        "doubling block matrix must have determinant 1"
    );
    assert!(
        verify_automorphism(&result.doubled, &result.matrix).is_ok(),
        "doubling matrix must be an automorphism of the doubled algebra"
    );
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismError {
    DimensionMismatch { expected: usize, got: usize },
    /// `M·[e_i, e_j] ≠ [M·e_i, M·e_j]`; residual is the difference.
    Violation {
        i: usize,
        j: usize,
        residual: Vec<Rational>,
    },
}

impl fmt::Display for AutomorphismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomorphismError::DimensionMismatch { expected, got } => {
                write!(f, "matrix size {got} does not match algebra dimension {expected}")
            }
            AutomorphismError::Violation { i, j, residual } => {
                let parts: Vec<String> = residual.iter().map(format_rational).collect();
                write!(
                    f,
                    "not an automorphism at pair ({}, {}): residual ({})",
                    i + 1,
                    j + 1,
                    parts.join(", ")
                )
            }
        }
    }
}

/// Checks `M·[e_i, e_j] = [M·e_i, M·e_j]` exactly for all `i < j`.
pub fn verify_automorphism(alg: &LieAlgebra, m: &Matrix) -> Result<(), AutomorphismError> {
    if !m.is_square() || m.rows() != alg.dim() {
        return Err(AutomorphismError::DimensionMismatch {
            expected: alg.dim(),
            got: m.rows(),
        });
    }
    let cols: Vec<Vec<Rational>> = (0..alg.dim()).map(|j| m.column(j)).collect();
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            let lhs = m
                .mul_vec(&alg.basis_bracket(i, j))
                .expect("dims agree");
            let rhs = alg.bracket(&cols[i], &cols[j]).expect("dims agree");
            let residual: Vec<Rational> =
                lhs.into_iter().zip(rhs).map(|(l, r)| l - r).collect();
            if residual.iter().any(|c| !c.is_zero()) {
                return Err(AutomorphismError::Violation { i, j, residual });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugationError {
    NormNotOne,
    OffBlockEntry { row: usize, col: usize },
    BlockMismatch { pair: usize },
}

impl fmt::Display for ConjugationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugationError::NormNotOne => write!(f, "λ·λ⁻¹ ≠ 1"),
            ConjugationError::OffBlockEntry { row, col } => {
                write!(f, "unexpected off-block entry at ({}, {})", row + 1, col + 1)
            }
            ConjugationError::BlockMismatch { pair } => write!(
                f,
                "conjugated diagonal block {} does not match the integer block",
                pair + 1
            ),
        }
    }
}

/// Re-derives each integer block from its eigenvalue description: working in
/// ℚ(√(a²−1)), conjugating `diag(λ^deg, λ^−deg)` by the change of basis from
/// `{X_i, Y_i}` to `{X_i + Y_i, √(a²−1)·(X_i − Y_i)}` must reproduce
/// `B^deg` exactly.
pub fn quadext_conjugation_check(result: &DoublingResult) -> Result<(), ConjugationError> {
    let d: Int = Int::from(result.a) * Int::from(result.a) - 1;
    let lambda = QuadExt::lambda(result.a);
    let lambda_inv = lambda.inverse().expect("λ is a unit");
    if &lambda * &lambda_inv != QuadExt::one(d.clone()) {
        return Err(ConjugationError::NormNotOne);
    }

    // Columns of P are u = X + Y and v = √d·(X − Y) in (X, Y) coordinates.
    let s = QuadExt::sqrt_d(d.clone());
    let one = QuadExt::one(d.clone());
    let p = QuadMat2([[one.clone(), s.clone()], [one, -&s]]);
    let p_inv = p.inverse().expect("det = −2√d ≠ 0");

    let n = result.matrix.rows();
    for row in 0..n {
        for col in 0..n {
            if row / 2 != col / 2 && !result.matrix.get(row, col).is_zero() {
                return Err(ConjugationError::OffBlockEntry { row, col });
            }
        }
    }

    for (pair, &deg) in result.block_exponents.iter().enumerate() {
        let e = i64::from(deg);
        let t = QuadMat2::diagonal(lambda.pow(e), lambda.pow(-e));
        let conjugated = p_inv.mul(&t).mul(&p);
        let block = result.matrix.submatrix(2 * pair, 2 * pair, 2, 2);
        for r in 0..2 {
            for c in 0..2 {
                let expect = QuadExt::from_rational(block.get(r, c).clone(), d.clone());
                if conjugated.0[r][c] != expect {
                    return Err(ConjugationError::BlockMismatch { pair });
                }
            }
        }
    }
    Ok(())
}

/// Dimension bound for a k-step algebra to possibly be Anosov: dim ≥ 2k+2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinDimensionLint {
    Ok {
        dim: usize,
        step: usize,
        required: usize,
    },
    /// Certification must fail: the dimension is below the bound.
    Warning {
        dim: usize,
        step: usize,
        required: usize,
    },
    NotNilpotent,
}

pub fn min_dimension_lint(alg: &LieAlgebra) -> MinDimensionLint {
    let series = alg.lower_central_series();
    let Some(step) = series.step() else {
        return MinDimensionLint::NotNilpotent;
    };
    let required = 2 * step + 2;
    if alg.dim() < required {
        MinDimensionLint::Warning {
            dim: alg.dim(),
            step,
            required,
        }
    } else {
        MinDimensionLint::Ok {
            dim: alg.dim(),
            step,
            required,
        }
    }
}
