//! Exact certification of unimodular hyperbolic integer matrices.
//!
//! A matrix qualifies when its characteristic polynomial has integer
//! coefficients, constant term ±1, and no root on the complex unit circle.
//! The unit-circle exclusion is fully exact: roots at ±1 are polynomial
//! evaluations, and a conjugate pair e^{±iθ} exists precisely when the
//! transformed polynomial with roots μ + 1/μ has a real root in the open
//! interval (−2, 2) — real eigenvalues cannot land there because
//! |μ + 1/μ| ≥ 2 for real μ. Sturm sequences on a squarefree model decide
//! that exactly.
//!
//! The expanding/contracting dimension split is exact whenever the whole
//! spectrum is real (which covers every construction in [`crate::catalog`]);
//! otherwise a clearly flagged floating-point fallback counts the moduli.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::doubling::{verify_automorphism, AutomorphismError};
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, MatrixError};
use crate::poly::{interpolate, resultant, IntPolynomial, SturmChain};
use crate::rational::{rat, Int, Rational};

/// Monic characteristic polynomial, possibly with rational coefficients
/// when the matrix itself is not integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    /// Constant term first; last coefficient is 1.
    coeffs: Vec<Rational>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Integer form when every coefficient is integral.
    pub fn integral(&self) -> Option<IntPolynomial> {
        if self.coeffs.iter().all(|c| c.denom().is_one()) {
            Some(IntPolynomial::new(
                self.coeffs.iter().map(|c| c.numer().clone()).collect(),
            ))
        } else {
            None
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integral() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "(non-integral characteristic polynomial)"),
        }
    }
}

/// det(xI − M) by the Faddeev–LeVerrier recursion, exactly. Integer
/// matrices stay on an all-integer path.
pub fn char_poly(m: &Matrix) -> Result<CharPoly, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(CharPoly {
            coeffs: alloc::vec![Rational::one()],
        });
    }
    if let Some(rows) = m.to_int_rows() {
        return Ok(char_poly_int(&rows));
    }

    // M_1 = M, c_k = −tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
    let mut mk = m.clone();
    let mut coeffs_desc = alloc::vec![Rational::one()];
    for k in 1..=n {
        let ck = -(mk.trace().expect("square") / rat(k as i64));
        coeffs_desc.push(ck.clone());
        if k < n {
            let mut shifted = mk;
            for i in 0..n {
                let v = shifted.get(i, i) + &ck;
                shifted.set(i, i, v);
            }
            mk = m * &shifted;
        }
    }
    coeffs_desc.reverse();
    Ok(CharPoly {
        coeffs: coeffs_desc,
    })
}

fn char_poly_int(rows: &[Vec<Int>]) -> CharPoly {
    let n = rows.len();
    let trace = |m: &[Vec<Int>]| -> Int {
        (0..n).map(|i| m[i][i].clone()).fold(Int::zero(), |a, b| a + b)
    };
    let mul = |a: &[Vec<Int>], b: &[Vec<Int>]| -> Vec<Vec<Int>> {
        let mut out = alloc::vec![alloc::vec![Int::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if b[k][j].is_zero() {
                        continue;
                    }
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
        out
    };
    let mut mk = rows.to_vec();
    let mut coeffs_desc = alloc::vec![Rational::one()];
    for k in 1..=n {
        let t = trace(&mk);
        let (ck, rem) = (-t).div_rem(&Int::from(k));
        debug_assert!(rem.is_zero(), "Faddeev–LeVerrier traces divide exactly");
        coeffs_desc.push(Rational::from_integer(ck.clone()));
        if k < n {
            for (i, row) in mk.iter_mut().enumerate() {
                row[i] += &ck;
            }
            mk = mul(rows, &mk);
        }
    }
    coeffs_desc.reverse();
    CharPoly {
        coeffs: coeffs_desc,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyInputError {
    NotMonic,
    ZeroConstantTerm,
}

impl fmt::Display for PolyInputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyInputError::NotMonic => write!(f, "polynomial must be monic"),
            PolyInputError::ZeroConstantTerm => {
                write!(f, "zero constant term (matrix has eigenvalue 0)")
            }
        }
    }
}

/// Constant term ±1?
pub fn unimodularity_check(p: &IntPolynomial) -> Result<bool, PolyInputError> {
    if !p.is_monic() {
        return Err(PolyInputError::NotMonic);
    }
    Ok(p.constant_term().abs().is_one())
}

/// The integer polynomial r(y) with roots exactly {μ + 1/μ : p(μ) = 0},
/// computed as Res_x(p(x), x² − yx + 1) by evaluating the resultant at
/// deg(p)+1 integer nodes and interpolating exactly.
pub fn pair_transform(p: &IntPolynomial) -> Result<IntPolynomial, PolyInputError> {
    if !p.is_monic() {
        return Err(PolyInputError::NotMonic);
    }
    if p.constant_term().is_zero() {
        return Err(PolyInputError::ZeroConstantTerm);
    }
    let n = p.degree();
    let mut points = Vec::with_capacity(n + 1);
    for t in 0..=n as i64 {
        // nodes 0, 1, −1, 2, −2, …
        let y = if t % 2 == 1 { (t + 1) / 2 } else { -t / 2 };
        let q = IntPolynomial::new(alloc::vec![Int::one(), Int::from(-y), Int::one()]);
        let value = resultant(p, &q);
        points.push((rat(y), Rational::from_integer(value)));
    }
    let coeffs = interpolate(&points);
    let ints: Vec<Int> = coeffs
        .iter()
        .map(|c| {
            assert!(
                c.denom().is_one(),
                "resultant interpolation must be integral"
            );
            c.numer().clone()
        })
        .collect();
    Ok(IntPolynomial::new(ints))
}

/// Why a polynomial has a root of modulus exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitRootWitness {
    RootAtOne,
    RootAtMinusOne,
    /// Number of distinct conjugate pairs e^{±iθ}; each corresponds to a
    /// real root of the pair transform inside (−2, 2).
    ConjugatePairs(usize),
}

impl fmt::Display for UnitRootWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitRootWitness::RootAtOne => write!(f, "root at +1"),
            UnitRootWitness::RootAtMinusOne => write!(f, "root at -1"),
            UnitRootWitness::ConjugatePairs(n) => {
                write!(f, "{n} conjugate pair(s) on the unit circle")
            }
        }
    }
}

/// Exact unit-circle root detection. `Ok(None)` means no root has modulus 1.
pub fn unit_circle_root_test(
    p: &IntPolynomial,
) -> Result<Option<UnitRootWitness>, PolyInputError> {
    if !p.is_monic() {
        return Err(PolyInputError::NotMonic);
    }
    if p.constant_term().is_zero() {
        return Err(PolyInputError::ZeroConstantTerm);
    }
    if p.eval_int(&Int::one()).is_zero() {
        return Ok(Some(UnitRootWitness::RootAtOne));
    }
    if p.eval_int(&Int::from(-1)).is_zero() {
        return Ok(Some(UnitRootWitness::RootAtMinusOne));
    }
    let r = pair_transform(p)?;
    let squarefree = r.squarefree_part();
    let chain = SturmChain::new(&squarefree);
    let pairs = chain
        .count_roots_in_open(&rat(-2), &rat(2))
        .expect("±2 cannot be roots when p(±1) ≠ 0");
    if pairs > 0 {
        Ok(Some(UnitRootWitness::ConjugatePairs(pairs)))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassificationMode {
    Exact,
    NumericFallback,
}

impl fmt::Display for ClassificationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationMode::Exact => write!(f, "exact"),
            ClassificationMode::NumericFallback => write!(f, "numeric-fallback"),
        }
    }
}

/// Eigenvalue counts by modulus: |μ| > 1 expands, |μ| < 1 contracts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub expanding: usize,
    pub contracting: usize,
    pub mode: ClassificationMode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    Input(PolyInputError),
    /// Precondition violated: the polynomial has a unit-modulus root.
    UnitCircleRoot(UnitRootWitness),
    /// The numeric fallback could not classify reliably.
    NumericFailure,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Input(e) => write!(f, "{e}"),
            ClassifyError::UnitCircleRoot(w) => {
                write!(f, "cannot classify: {w}")
            }
            ClassifyError::NumericFailure => {
                write!(f, "numeric fallback failed its consistency checks")
            }
        }
    }
}

impl From<PolyInputError> for ClassifyError {
    fn from(e: PolyInputError) -> Self {
        ClassifyError::Input(e)
    }
}

/// Counts eigenvalues inside and outside the unit circle, with
/// multiplicity. Exact by Sturm counting whenever all roots are real;
/// otherwise a flagged numeric fallback.
pub fn classify_splitting(p: &IntPolynomial) -> Result<Splitting, ClassifyError> {
    if let Some(w) = unit_circle_root_test(p)? {
        return Err(ClassifyError::UnitCircleRoot(w));
    }
    let degree = p.degree();
    let decomposition = p.squarefree_decomposition();
    let mut total_real = 0usize;
    let mut inside = 0usize;
    for (factor, mult) in &decomposition {
        let chain = SturmChain::new(factor);
        total_real += mult * chain.count_real_roots();
        inside += mult
            * chain
                .count_roots_in_open(&rat(-1), &rat(1))
                .expect("±1 are not roots after the unit-circle test");
    }
    if total_real == degree {
        return Ok(Splitting {
            expanding: degree - inside,
            contracting: inside,
            mode: ClassificationMode::Exact,
        });
    }
    numeric_splitting(p).ok_or(ClassifyError::NumericFailure)
}

fn numeric_splitting(p: &IntPolynomial) -> Option<Splitting> {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| {
            let f = c.to_f64()?;
            f.is_finite().then_some(f)
        })
        .collect::<Option<_>>()?;
    let roots = crate::numeric::roots(&coeffs)?;
    let mut expanding = 0usize;
    let mut contracting = 0usize;
    let mut log_sum = 0.0f64;
    for z in &roots {
        let m = z.norm();
        log_sum += num_traits::Float::ln(m);
        if (m - 1.0).abs() <= 1e-9 {
            // Should not happen after the exact unit-circle exclusion.
            return None;
        }
        if m > 1.0 {
            expanding += 1;
        } else {
            contracting += 1;
        }
    }
    if expanding + contracting != p.degree() {
        return None;
    }
    // ∏|μ| = |p(0)| for a monic polynomial.
    let expected = num_traits::Float::ln(p.constant_term().to_f64()?.abs());
    if (log_sum - expected).abs() > 1e-6 {
        return None;
    }
    Some(Splitting {
        expanding,
        contracting,
        mode: ClassificationMode::NumericFallback,
    })
}

/// One recorded reason a certificate flag is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFailure {
    NotAutomorphism {
        i: usize,
        j: usize,
        residual: Vec<Rational>,
    },
    NonIntegralEntry {
        row: usize,
        col: usize,
    },
    NonIntegralCharPoly,
    NotUnimodular {
        constant: Int,
    },
    UnitCircleRoots(UnitRootWitness),
    SingularMatrix,
    UnclassifiedSplitting,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::NotAutomorphism { i, j, residual } => {
                let parts: Vec<alloc::string::String> = residual
                    .iter()
                    .map(crate::rational::format_rational)
                    .collect();
                write!(
                    f,
                    "automorphism identity fails at pair ({}, {}): residual ({})",
                    i + 1,
                    j + 1,
                    parts.join(", ")
                )
            }
            CertificateFailure::NonIntegralEntry { row, col } => {
                write!(f, "matrix entry ({}, {}) is not an integer", row + 1, col + 1)
            }
            CertificateFailure::NonIntegralCharPoly => {
                write!(f, "characteristic polynomial has non-integer coefficients")
            }
            CertificateFailure::NotUnimodular { constant } => {
                write!(f, "constant term of the characteristic polynomial is {constant}, not ±1")
            }
            CertificateFailure::UnitCircleRoots(w) => write!(f, "unit-circle roots: {w}"),
            CertificateFailure::SingularMatrix => write!(f, "matrix is singular (eigenvalue 0)"),
            CertificateFailure::UnclassifiedSplitting => {
                write!(f, "expanding/contracting split could not be classified")
            }
        }
    }
}

/// The full exact verdict on one `(algebra, matrix)` pair.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub char_poly: CharPoly,
    /// `M·[x,y] = [Mx, My]` holds on all basis pairs.
    pub automorphism: bool,
    /// Every matrix entry is an integer.
    pub integral: bool,
    /// Characteristic polynomial is integral with constant term ±1.
    pub unimodular: bool,
    /// Exactly established: no eigenvalue of modulus 1.
    pub hyperbolic: bool,
    /// Conjunction of the four flags above.
    pub anosov: bool,
    pub splitting: Option<Splitting>,
    pub failures: Vec<CertificateFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyShapeError {
    pub expected: usize,
    pub got: (usize, usize),
}

impl fmt::Display for CertifyShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matrix is {}x{}, expected {}x{}",
            self.got.0, self.got.1, self.expected, self.expected
        )
    }
}

/// Runs every check on the pair and records all failures; nothing short of
/// a shape mismatch is an error.
pub fn certify(alg: &LieAlgebra, m: &Matrix) -> Result<Certificate, CertifyShapeError> {
    if !m.is_square() || m.rows() != alg.dim() {
        return Err(CertifyShapeError {
            expected: alg.dim(),
            got: (m.rows(), m.cols()),
        });
    }
    let mut failures = Vec::new();

    let automorphism = match verify_automorphism(alg, m) {
        Ok(()) => true,
        Err(AutomorphismError::Violation { i, j, residual }) => {
            failures.push(CertificateFailure::NotAutomorphism { i, j, residual });
            false
        }
        Err(AutomorphismError::DimensionMismatch { .. }) => {
            unreachable!("shape checked above")
        }
    };

    let integral = m.is_integral();
    if !integral {
        'outer: for row in 0..m.rows() {
            for col in 0..m.cols() {
                if !m.get(row, col).denom().is_one() {
                    failures.push(CertificateFailure::NonIntegralEntry { row, col });
                    break 'outer;
                }
            }
        }
    }

    let cp = char_poly(m).expect("square matrix");
    let (unimodular, hyperbolic, splitting) = match cp.integral() {
        None => {
            failures.push(CertificateFailure::NonIntegralCharPoly);
            (false, false, None)
        }
        Some(ip) => {
            if ip.constant_term().is_zero() {
                failures.push(CertificateFailure::SingularMatrix);
                (false, false, None)
            } else {
                let unimodular = ip.constant_term().abs().is_one();
                if !unimodular {
                    failures.push(CertificateFailure::NotUnimodular {
                        constant: ip.constant_term().clone(),
                    });
                }
                let hyperbolic = match unit_circle_root_test(&ip).expect("checked constant term") {
                    Some(w) => {
                        failures.push(CertificateFailure::UnitCircleRoots(w));
                        false
                    }
                    None => true,
                };
                let splitting = if hyperbolic {
                    match classify_splitting(&ip) {
                        Ok(s) => Some(s),
                        Err(_) => {
                            failures.push(CertificateFailure::UnclassifiedSplitting);
                            None
                        }
                    }
                } else {
                    None
                };
                (unimodular, hyperbolic, splitting)
            }
        }
    };

    let anosov = automorphism && integral && unimodular && hyperbolic;
    Ok(Certificate {
        char_poly: cp,
        automorphism,
        integral,
        unimodular,
        hyperbolic,
        anosov,
        splitting,
        failures,
    })
}
