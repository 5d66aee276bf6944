//! Generators for the example families.
//!
//! Every generator returns an exactly-presented rational Lie algebra, with
//! its grading where one exists, and — for the two families that come with
//! an explicit hyperbolic automorphism — the integer matrix as well.

use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{rat, Int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    /// filiform needs k ≥ 2.
    FiliformStep { k: u32 },
    /// the seven-dimensional family needs k ≥ 2 (k = 1 gives t = 1).
    SevenDimParameter { k: u32 },
    /// doubled-basis examples need a ≥ 2.
    ParameterTooSmall { a: i64 },
    /// free_two_step needs r ≥ 1.
    FreeCopies { r: u32 },
    NotThreeByThree { rows: usize, cols: usize },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::FiliformStep { k } => write!(f, "filiform requires k >= 2, got {k}"),
            CatalogError::SevenDimParameter { k } => {
                write!(f, "seven_dim_family requires k >= 2, got {k}")
            }
            CatalogError::ParameterTooSmall { a } => write!(f, "requires a >= 2, got {a}"),
            CatalogError::FreeCopies { r } => write!(f, "free_two_step requires r >= 1, got {r}"),
            CatalogError::NotThreeByThree { rows, cols } => {
                write!(f, "expected a 3x3 matrix, got {rows}x{cols}")
            }
        }
    }
}

/// The 3-dimensional Heisenberg algebra: [X1, X2] = X3, degrees (1, 1, 2).
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::new(3, [(0, 1, 2, rat(1))])
        .expect("fixed table")
        .with_degrees(alloc::vec![1, 1, 2])
        .expect("fixed degrees")
        .with_name("heisenberg3")
}

/// The filiform algebra of step k: dimension k+1 with
/// [X1, Xi] = X_{i+1} for 2 ≤ i ≤ k, graded by degrees (1, 1, 2, …, k).
pub fn filiform(k: u32) -> Result<LieAlgebra, CatalogError> {
    if k < 2 {
        return Err(CatalogError::FiliformStep { k });
    }
    let dim = k as usize + 1;
    let entries = (1..k as usize).map(|i| (0, i, i + 1, rat(1)));
    let mut degrees = Vec::with_capacity(dim);
    degrees.push(1u32);
    for i in 1..dim {
        degrees.push(i as u32);
    }
    Ok(LieAlgebra::new(dim, entries)
        .expect("indices in range")
        .with_degrees(degrees)
        .expect("length matches")
        .with_name(alloc::format!("filiform(k={k})")))
}

/// The rational parameter values of the seven-dimensional curve: at
/// t = 4k²/(k²+1)² both √t = 2k/(k²+1) and √(1−t) = (k²−1)/(k²+1) are
/// rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SevenDimParameters {
    pub t: Rational,
    pub sqrt_t: Rational,
    pub sqrt_one_minus_t: Rational,
}

pub fn seven_dim_parameters(k: u32) -> Result<SevenDimParameters, CatalogError> {
    if k < 2 {
        return Err(CatalogError::SevenDimParameter { k });
    }
    let kk = Int::from(k);
    let denom: Int = &kk * &kk + 1;
    let sqrt_t = Rational::new(Int::from(2u32) * &kk, denom.clone());
    let sqrt_one_minus_t = Rational::new(&kk * &kk - 1, denom);
    Ok(SevenDimParameters {
        t: &sqrt_t * &sqrt_t,
        sqrt_t,
        sqrt_one_minus_t,
    })
}

/// Member k of the seven-dimensional graded family, with each basis vector
/// in its own degree 1..7; all structure constants rational.
pub fn seven_dim_family(k: u32) -> Result<LieAlgebra, CatalogError> {
    let params = seven_dim_parameters(k)?;
    let st = params.sqrt_t;
    let s1t = params.sqrt_one_minus_t;
    let one = Rational::one();
    let entries = alloc::vec![
        (0usize, 1usize, 2usize, s1t.clone()), // [X1,X2] = √(1−t)·X3
        (0, 2, 3, one.clone()),                // [X1,X3] = X4
        (0, 3, 4, st.clone()),                 // [X1,X4] = √t·X5
        (0, 4, 5, one.clone()),                // [X1,X5] = X6
        (0, 5, 6, one.clone()),                // [X1,X6] = X7
        (1, 2, 4, one.clone()),                // [X2,X3] = X5
        (1, 3, 5, one.clone()),                // [X2,X4] = X6
        (1, 4, 6, st),                         // [X2,X5] = √t·X7
        (2, 3, 6, s1t),                        // [X3,X4] = √(1−t)·X7
    ];
    Ok(LieAlgebra::new(7, entries)
        .expect("fixed table")
        .with_degrees(alloc::vec![1, 2, 3, 4, 5, 6, 7])
        .expect("fixed degrees")
        .with_name(alloc::format!("seven_dim_family(k={k})")))
}

/// The eight-dimensional two-step algebra with a twisted pairing, already
/// written in its integer basis for the given `a`, together with the
/// automorphism matrix diag(B, B, B⁻³, B²).
///
/// The underlying bracket table is `[X1,X2] = Z1`, `[X1,X3] = Z2`,
/// `[Y1,Y2] = Z1`, `[Y1,Y3] = Z2` (the last entry corrected from a
/// misprinted duplicate pair: the stated automorphism weights
/// λ⁻¹·λ⁻¹ = λ⁻² on Z2 force `[Y1,Y3] = Z2`). The integer basis pairs X2
/// with Y3, X3 with Y2 and Z1 with Z2:
/// u = X + Y, w = √(a²−1)·(X − Y) per pair, giving weights
/// (λ, λ⁻¹, λ, λ⁻¹, λ⁻³, λ³, λ², λ⁻²) and blocks B, B, B⁻³, B².
pub fn eight_dim_example(a: i64) -> Result<(LieAlgebra, Matrix), CatalogError> {
    if a < 2 {
        return Err(CatalogError::ParameterTooSmall { a });
    }
    let d = Rational::from_integer(Int::from(a) * Int::from(a) - 1);
    // Basis order: u1, w1, u2, w2, u3, w3, z+, z−.
    let entries = alloc::vec![
        (0usize, 2usize, 6usize, rat(1)), // [u1,u2] = z+
        (0, 3, 7, rat(1)),                // [u1,w2] = z−
        (1, 2, 7, rat(1)),                // [w1,u2] = z−
        (1, 3, 6, d.clone()),             // [w1,w2] = (a²−1)·z+
        (0, 4, 6, rat(1)),                // [u1,u3] = z+
        (0, 5, 7, rat(-1)),               // [u1,w3] = −z−
        (1, 4, 7, rat(-1)),               // [w1,u3] = −z−
        (1, 5, 6, d),                     // [w1,w3] = (a²−1)·z+
    ];
    let algebra = LieAlgebra::new(8, entries)
        .expect("fixed table")
        .with_degrees(alloc::vec![1, 1, 1, 1, 1, 1, 2, 2])
        .expect("fixed degrees")
        .with_name(alloc::format!("eight_dim(a={a})"));
    let b = crate::doubling::basic_block(a);
    let matrix = Matrix::block_diagonal(&[
        b.clone(),
        b.clone(),
        b.pow(-3).expect("unimodular block"),
        b.pow(2).expect("square"),
    ]);
    Ok((algebra, matrix))
}

/// Block exponents of the eight-dimensional example's matrix.
pub const EIGHT_DIM_BLOCK_EXPONENTS: [i64; 4] = [1, 1, -3, 2];

/// The matrix of the induced map on Λ²ℚ³ in the basis
/// e1∧e2, e1∧e3, e2∧e3: entries are the 2×2 minors.
pub fn exterior_square(m: &Matrix) -> Result<Matrix, CatalogError> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(CatalogError::NotThreeByThree {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    let mut out = Matrix::zeros(3, 3);
    for (row, &(k, l)) in PAIRS.iter().enumerate() {
        for (col, &(i, j)) in PAIRS.iter().enumerate() {
            let minor = m.get(k, i) * m.get(l, j) - m.get(l, i) * m.get(k, j);
            out.set(row, col, minor);
        }
    }
    Ok(out)
}

/// The integer matrix `[[1,1,1],[1,2,2],[1,2,3]]`: symmetric, determinant
/// 1, and neither its eigenvalues nor their pairwise products have
/// modulus 1.
pub fn default_free_generator() -> Matrix {
    Matrix::from_int_rows(&[
        alloc::vec![1, 1, 1],
        alloc::vec![1, 2, 2],
        alloc::vec![1, 2, 3],
    ])
    .expect("fixed shape")
}

/// r copies of ℚ³ bracketing into one shared Λ²ℚ³:
/// [v_1 + … + v_r, w_1 + … + w_r] = v_1∧w_1 + … + v_r∧w_r,
/// with automorphism diag(A, …, A, Λ²A). Dimension 3r+3.
///
/// Callers should check det(A) = ±1 themselves; other determinants yield a
/// valid algebra whose certificate fails unimodularity.
pub fn free_two_step_sums(r: u32, a3: &Matrix) -> Result<(LieAlgebra, Matrix), CatalogError> {
    if r < 1 {
        return Err(CatalogError::FreeCopies { r });
    }
    let r = r as usize;
    let wedge = exterior_square(a3)?;
    let dim = 3 * r + 3;
    let base = 3 * r;
    let mut entries = Vec::with_capacity(3 * r);
    for s in 0..r {
        entries.push((3 * s, 3 * s + 1, base, rat(1)));
        entries.push((3 * s, 3 * s + 2, base + 1, rat(1)));
        entries.push((3 * s + 1, 3 * s + 2, base + 2, rat(1)));
    }
    let mut degrees = Vec::with_capacity(dim);
    degrees.resize(3 * r, 1u32);
    degrees.extend_from_slice(&[2, 2, 2]);
    let algebra = LieAlgebra::new(dim, entries)
        .expect("indices in range")
        .with_degrees(degrees)
        .expect("length matches")
        .with_name(alloc::format!("free_two_step(r={})", r));
    let mut blocks: Vec<Matrix> = (0..r).map(|_| a3.clone()).collect();
    blocks.push(wedge);
    Ok((algebra, Matrix::block_diagonal(&blocks)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::{double_construction, min_dimension_lint, MinDimensionLint};
    use crate::hyperbolicity::{certify, char_poly, ClassificationMode};
    use crate::poly::IntPolynomial;
    use crate::rational::ratio;

    #[test]
    fn heisenberg_is_the_expected_algebra() {
        let h = heisenberg3();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.jacobi_check(), Ok(()));
        assert_eq!(h.lower_central_series().dims, alloc::vec![3, 1, 0]);
        let result = double_construction(&h, 2).unwrap();
        let cert = certify(&result.doubled, &result.matrix).unwrap();
        assert!(cert.anosov);
        assert_eq!(result.doubled.dim(), 6);
    }

    #[test]
    fn filiform_family_shape() {
        assert!(filiform(1).is_err());
        // filiform(2) is the Heisenberg algebra up to degree labels.
        let f2 = filiform(2).unwrap();
        let entries: Vec<_> = f2.entries().map(|(i, j, k, _)| (i, j, k)).collect();
        assert_eq!(entries, alloc::vec![(0, 1, 2)]);
        assert_eq!(f2.degrees(), Some([1, 1, 2].as_slice()));

        for k in 2..=8u32 {
            let f = filiform(k).unwrap();
            assert_eq!(f.dim() as u32, k + 1);
            assert_eq!(f.jacobi_check(), Ok(()));
            assert_eq!(f.grading_check(), Ok(()));
            assert_eq!(f.lower_central_series().step(), Some(k as usize));
            let doubled = double_construction(&f, 2).unwrap();
            assert_eq!(doubled.doubled.dim() as u32, 2 * k + 2);
            assert_eq!(
                min_dimension_lint(&doubled.doubled),
                MinDimensionLint::Ok {
                    dim: (2 * k + 2) as usize,
                    step: k as usize,
                    required: (2 * k + 2) as usize
                }
            );
        }
    }

    #[test]
    fn seven_dim_parameters_are_exact_radicals() {
        let p2 = seven_dim_parameters(2).unwrap();
        assert_eq!(p2.t, ratio(16, 25));
        assert_eq!(p2.sqrt_t, ratio(4, 5));
        assert_eq!(p2.sqrt_one_minus_t, ratio(3, 5));
        let p3 = seven_dim_parameters(3).unwrap();
        assert_eq!(p3.t, ratio(9, 25));
        // t_k strictly decreases in k.
        assert!(p3.t < p2.t);
        for k in 2..=8u32 {
            let p = seven_dim_parameters(k).unwrap();
            assert_eq!(&p.sqrt_t * &p.sqrt_t, p.t);
            assert_eq!(
                &p.sqrt_one_minus_t * &p.sqrt_one_minus_t,
                Rational::one() - &p.t
            );
        }
        assert!(seven_dim_parameters(1).is_err());
    }

    #[test]
    fn seven_dim_family_brackets_and_grading() {
        let alg = seven_dim_family(2).unwrap();
        assert_eq!(alg.dim(), 7);
        assert_eq!(alg.jacobi_check(), Ok(()));
        assert_eq!(alg.grading_check(), Ok(()));
        // [X1,X2] = (3/5)·X3 and [X1,X4] = (4/5)·X5 at k = 2.
        let mut expected = crate::rational::vec_zero(7);
        expected[2] = ratio(3, 5);
        assert_eq!(
            alg.bracket(
                &crate::rational::unit_vector(7, 0),
                &crate::rational::unit_vector(7, 1)
            )
            .unwrap(),
            expected
        );
        let mut expected = crate::rational::vec_zero(7);
        expected[4] = ratio(4, 5);
        assert_eq!(
            alg.bracket(
                &crate::rational::unit_vector(7, 0),
                &crate::rational::unit_vector(7, 3)
            )
            .unwrap(),
            expected
        );
        // Scaling to integers multiplies by the lcm of denominators (5).
        let (scaled, l) = alg.scale_basis_to_integer();
        assert_eq!(l, Int::from(5));
        assert!(scaled.has_integer_constants());
        let constants: Vec<Int> = scaled
            .entries()
            .map(|(_, _, _, c)| c.numer().clone())
            .collect();
        assert!(constants.iter().all(|c| *c == Int::from(3)
            || *c == Int::from(4)
            || *c == Int::from(5)));
    }

    #[test]
    fn eight_dim_example_matches_display() {
        let (alg, m) = eight_dim_example(2).unwrap();
        assert_eq!(alg.dim(), 8);
        assert_eq!(alg.jacobi_check(), Ok(()));
        assert_eq!(alg.grading_check(), Ok(()));
        assert_eq!(alg.lower_central_series().step(), Some(2));
        // B⁻³ for a = 2.
        assert_eq!(
            m.submatrix(4, 4, 2, 2),
            Matrix::from_int_rows(&[alloc::vec![26, -45], alloc::vec![-15, 26]]).unwrap()
        );
        assert_eq!(m.det().unwrap(), Rational::one());
        let cert = certify(&alg, &m).unwrap();
        assert!(cert.anosov);
        assert_eq!(
            cert.splitting.as_ref().map(|s| s.mode),
            Some(ClassificationMode::Exact)
        );
        assert!(eight_dim_example(1).is_err());
    }

    #[test]
    fn eight_dim_blocks_match_their_eigenvalue_weights() {
        use crate::quadext::{QuadExt, QuadMat2};
        let a = 2i64;
        let (_, m) = eight_dim_example(a).unwrap();
        let d: Int = Int::from(a) * Int::from(a) - 1;
        let lambda = QuadExt::lambda(a);
        let s = QuadExt::sqrt_d(d.clone());
        let one = QuadExt::one(d.clone());
        let p = QuadMat2([[one.clone(), s.clone()], [one, -&s]]);
        let p_inv = p.inverse().unwrap();
        for (pair, &e) in EIGHT_DIM_BLOCK_EXPONENTS.iter().enumerate() {
            let t = QuadMat2::diagonal(lambda.pow(e), lambda.pow(-e));
            let conj = p_inv.mul(&t).mul(&p);
            let block = m.submatrix(2 * pair, 2 * pair, 2, 2);
            for r in 0..2 {
                for c in 0..2 {
                    assert_eq!(
                        conj.0[r][c],
                        QuadExt::from_rational(block.get(r, c).clone(), d.clone())
                    );
                }
            }
        }
    }

    #[test]
    fn exterior_square_examples() {
        assert_eq!(
            exterior_square(&Matrix::identity(3)).unwrap(),
            Matrix::identity(3)
        );
        let diag = Matrix::diagonal(&[rat(2), rat(3), rat(5)]);
        assert_eq!(
            exterior_square(&diag).unwrap(),
            Matrix::diagonal(&[rat(6), rat(10), rat(15)])
        );
        let wedge = exterior_square(&default_free_generator()).unwrap();
        assert_eq!(
            char_poly(&wedge).unwrap().integral().unwrap(),
            IntPolynomial::from_i64(&[-1, 6, -5, 1])
        );
        assert!(exterior_square(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn free_two_step_dimensions_and_certificates() {
        let a3 = default_free_generator();
        for r in 1..=3u32 {
            let (alg, m) = free_two_step_sums(r, &a3).unwrap();
            assert_eq!(alg.dim(), 3 * r as usize + 3);
            assert_eq!(alg.jacobi_check(), Ok(()));
            assert_eq!(alg.grading_check(), Ok(()));
            let cert = certify(&alg, &m).unwrap();
            assert!(cert.anosov, "free_two_step(r={r}) must certify");
        }
        assert!(free_two_step_sums(0, &a3).is_err());
    }

    #[test]
    fn free_two_step_with_non_unimodular_generator_fails_certification() {
        // det = 2: the algebra is fine, the certificate fails unimodularity.
        let a3 = Matrix::diagonal(&[rat(2), rat(1), rat(1)]);
        let (alg, m) = free_two_step_sums(1, &a3).unwrap();
        assert_eq!(alg.jacobi_check(), Ok(()));
        let cert = certify(&alg, &m).unwrap();
        assert!(cert.automorphism);
        assert!(!cert.unimodular);
        assert!(!cert.anosov);
    }

    #[test]
    fn no_catalog_algebra_has_an_abelian_factor() {
        let mut algebras = alloc::vec![heisenberg3()];
        algebras.push(filiform(4).unwrap());
        algebras.push(seven_dim_family(2).unwrap());
        algebras.push(eight_dim_example(2).unwrap().0);
        algebras.push(free_two_step_sums(2, &default_free_generator()).unwrap().0);
        for alg in &algebras {
            assert_eq!(
                alg.abelian_factor_witness(),
                None,
                "{:?} should have no abelian factor",
                alg.name()
            );
        }
    }

    #[test]
    fn graded_catalog_algebras_are_nilpotent() {
        let mut algebras = alloc::vec![heisenberg3()];
        algebras.push(filiform(5).unwrap());
        algebras.push(seven_dim_family(3).unwrap());
        algebras.push(eight_dim_example(3).unwrap().0);
        algebras.push(free_two_step_sums(1, &default_free_generator()).unwrap().0);
        for alg in &algebras {
            assert_eq!(alg.grading_check(), Ok(()));
            assert!(alg.lower_central_series().nilpotent);
        }
    }
}
