//! Property tests for the algebraic invariants.

use anosov_core::catalog::{default_free_generator, exterior_square, seven_dim_family};
use anosov_core::hyperbolicity::{
    classify_splitting, pair_transform, unit_circle_root_test, ClassifyError,
};
use anosov_core::matrix::Matrix;
use anosov_core::poly::IntPolynomial;
use anosov_core::rational::{rat, Int, Rational};
use anosov_core::LieAlgebra;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| Rational::new(Int::from(n), Int::from(d)))
}

fn rational_vec(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), len)
}

fn int_matrix_3x3() -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-5i64..=5, 9).prop_map(|v| {
        Matrix::from_int_rows(&[v[0..3].to_vec(), v[3..6].to_vec(), v[6..9].to_vec()]).unwrap()
    })
}

/// Unit lower × unit upper triangular product: always determinant 1.
fn invertible_matrix_3x3() -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, 6).prop_map(|v| {
        let lower = Matrix::from_int_rows(&[
            vec![1, 0, 0],
            vec![v[0], 1, 0],
            vec![v[1], v[2], 1],
        ])
        .unwrap();
        let upper = Matrix::from_int_rows(&[
            vec![1, v[3], v[4]],
            vec![0, 1, v[5]],
            vec![0, 0, 1],
        ])
        .unwrap();
        &lower * &upper
    })
}

fn monic_poly(max_degree: usize) -> impl Strategy<Value = IntPolynomial> {
    (1..=max_degree).prop_flat_map(|deg| {
        proptest::collection::vec(-9i64..=9, deg).prop_map(move |mut coeffs| {
            coeffs.push(1);
            IntPolynomial::from_i64(&coeffs)
        })
    })
}

/// Monic with constant term ±1, so the coefficient reversal is monic up to
/// a sign flip.
fn unimodular_poly(max_degree: usize) -> impl Strategy<Value = IntPolynomial> {
    (1..=max_degree).prop_flat_map(|deg| {
        (
            proptest::collection::vec(-9i64..=9, deg - 1),
            prop_oneof![Just(-1i64), Just(1i64)],
        )
            .prop_map(move |(mid, constant)| {
                let mut coeffs = vec![constant];
                coeffs.extend(mid);
                coeffs.push(1);
                IntPolynomial::from_i64(&coeffs)
            })
    })
}

fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn scale(x: &[Rational], s: &Rational) -> Vec<Rational> {
    x.iter().map(|a| a * s).collect()
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(x in rational_vec(7), y in rational_vec(7)) {
        let alg = seven_dim_family(3).unwrap();
        let xy = alg.bracket(&x, &y).unwrap();
        let yx = alg.bracket(&y, &x).unwrap();
        let sum = add(&xy, &yx);
        prop_assert!(sum.iter().all(Zero::is_zero));
    }

    #[test]
    fn bracket_is_bilinear(
        x in rational_vec(7),
        y in rational_vec(7),
        z in rational_vec(7),
        s in rational(),
    ) {
        let alg = seven_dim_family(2).unwrap();
        let lhs = alg.bracket(&add(&x, &scale(&z, &s)), &y).unwrap();
        let rhs = add(
            &alg.bracket(&x, &y).unwrap(),
            &scale(&alg.bracket(&z, &y).unwrap(), &s),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn change_of_basis_round_trip(p in invertible_matrix_3x3()) {
        let h = anosov_core::catalog::heisenberg3();
        let there = h.change_of_basis(&p).unwrap();
        let back = there.change_of_basis(&p.inverse().unwrap()).unwrap();
        let orig: Vec<_> = h.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        let round: Vec<_> = back.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        prop_assert_eq!(orig, round);
    }

    #[test]
    fn reverse_swaps_the_splitting(p in unimodular_poly(6)) {
        let rev = {
            let r = p.reverse();
            if r.leading().is_negative() { r.neg() } else { r }
        };
        let a = unit_circle_root_test(&p).unwrap();
        let b = unit_circle_root_test(&rev).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if a.is_none() {
            let sp = classify_splitting(&p).unwrap();
            let sr = classify_splitting(&rev).unwrap();
            prop_assert_eq!(sp.expanding, sr.contracting);
            prop_assert_eq!(sp.contracting, sr.expanding);
            prop_assert_eq!(sp.mode, sr.mode);
        }
    }

    #[test]
    fn pair_transform_vanishes_at_planted_roots(
        roots in proptest::collection::vec((1i64..=9).prop_flat_map(|m| prop_oneof![Just(m), Just(-m)]), 1..=4)
    ) {
        let mut p = IntPolynomial::from_i64(&[1]);
        for &m in &roots {
            p = p.mul(&IntPolynomial::from_i64(&[-m, 1]));
        }
        let r = pair_transform(&p).unwrap();
        for &m in &roots {
            let y = rat(m) + Rational::new(Int::one(), Int::from(m));
            prop_assert!(r.eval_rational(&y).is_zero());
        }
    }

    #[test]
    fn exterior_square_is_multiplicative(a in int_matrix_3x3(), b in int_matrix_3x3()) {
        let lhs = exterior_square(&(&a * &b)).unwrap();
        let rhs = &exterior_square(&a).unwrap() * &exterior_square(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
        // det(Λ²A) = det(A)² exactly.
        let d = a.det().unwrap();
        prop_assert_eq!(exterior_square(&a).unwrap().det().unwrap(), &d * &d);
    }

    #[test]
    fn scaled_bases_are_integral(
        c1 in rational().prop_filter("nonzero", |c| !c.is_zero()),
        c2 in rational().prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        let alg = LieAlgebra::new(4, [(0, 1, 2, c1), (0, 2, 3, c2)]).unwrap();
        prop_assert!(alg.jacobi_check().is_ok());
        let (scaled, l) = alg.scale_basis_to_integer();
        prop_assert!(scaled.has_integer_constants());
        // Same algebra through the explicit basis change by L·I.
        let p = Matrix::diagonal(&[
            Rational::from_integer(l.clone()),
            Rational::from_integer(l.clone()),
            Rational::from_integer(l.clone()),
            Rational::from_integer(l.clone()),
        ]);
        let via = alg.change_of_basis(&p).unwrap();
        let lhs: Vec<_> = scaled.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        let rhs: Vec<_> = via.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn splitting_counts_sum_to_degree(p in monic_poly(6)) {
        prop_assume!(!p.constant_term().is_zero());
        match classify_splitting(&p) {
            Ok(s) => prop_assert_eq!(s.expanding + s.contracting, p.degree()),
            Err(ClassifyError::UnitCircleRoot(_)) => {}
            Err(other) => return Err(TestCaseError::fail(format!("unexpected: {other:?}"))),
        }
    }
}

#[test]
fn free_generator_satisfies_wedge_identities() {
    let a = default_free_generator();
    let wedge = exterior_square(&a).unwrap();
    assert_eq!(wedge.det().unwrap(), rat(1));
    assert_eq!(
        exterior_square(&Matrix::identity(3)).unwrap(),
        Matrix::identity(3)
    );
    // Λ² of an inverse is the inverse of Λ².
    let inv = a.inverse().unwrap();
    assert_eq!(
        exterior_square(&inv).unwrap(),
        wedge.inverse().unwrap()
    );
}
