//! Floating-point polynomial roots for the flagged numeric fallback.
//!
//! Aberth–Ehrlich simultaneous iteration; good enough for the moderate
//! degrees this crate meets. The exact certification path never calls into
//! this module — it only backs the expanding/contracting split for spectra
//! with non-real eigenvalues, and its results are always labelled as
//! numeric.

use alloc::vec::Vec;

use num_complex::Complex64;

const MAX_ITER: usize = 400;
const EPS: f64 = 1e-13;

/// All complex roots of the polynomial with the given coefficients
/// (constant first, leading nonzero). `None` if the iteration fails to
/// settle or the coefficients are not finite.
pub(crate) fn roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    if coeffs.iter().any(|c| !c.is_finite()) {
        return None;
    }
    let n = coeffs.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = coeffs[n];
    if lead == 0.0 {
        return None;
    }
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();

    // Cauchy bound, then spread the guesses on a slightly irrational spiral
    // to avoid symmetric stalls.
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = core::f64::consts::TAU * (k as f64) / (n as f64) + 0.4;
            let r = radius * (0.5 + 0.5 * ((k + 1) as f64) / (n as f64));
            Complex64::from_polar(r, theta)
        })
        .collect();

    for _ in 0..MAX_ITER {
        let mut worst = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(&monic, z[k]);
            if dp.norm() == 0.0 {
                z[k] += Complex64::new(1e-6, 1e-6);
                worst = f64::INFINITY;
                continue;
            }
            let w = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() == 0.0 {
                        return None;
                    }
                    sum += diff.inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * sum;
            let correction = if denom.norm() == 0.0 { w } else { w / denom };
            z[k] -= correction;
            let scale = z[k].norm().max(1.0);
            worst = worst.max(correction.norm() / scale);
        }
        if worst < EPS {
            return Some(z);
        }
    }
    None
}

fn eval_with_derivative(monic: &[f64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in monic.iter().rev() {
        dp = dp * x + p;
        p = p * x + Complex64::new(c, 0.0);
    }
    (p, dp)
}
