//! Exact arithmetic in a real quadratic extension ℚ(√d).
//!
//! Elements are `u + v·√d` with rational `u`, `v` and a fixed positive
//! non-square integer `d`. For the doubling construction `d = a² − 1`, and
//! the unit `λ = a + √(a²−1)` has norm `λ·λ̄ = a² − (a²−1) = 1`, so its
//! inverse is the conjugate.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, rat, Int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub u: Rational,
    pub v: Rational,
    d: Int,
}

impl QuadExt {
    pub fn new(u: Rational, v: Rational, d: Int) -> Self {
        assert!(d.is_positive(), "discriminant must be positive");
        QuadExt { u, v, d }
    }

    pub fn from_rational(u: Rational, d: Int) -> Self {
        QuadExt::new(u, Rational::zero(), d)
    }

    pub fn zero(d: Int) -> Self {
        QuadExt::from_rational(Rational::zero(), d)
    }

    pub fn one(d: Int) -> Self {
        QuadExt::from_rational(Rational::one(), d)
    }

    /// √d itself.
    pub fn sqrt_d(d: Int) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    /// λ = a + √(a²−1) in ℚ(√(a²−1)).
    pub fn lambda(a: i64) -> Self {
        assert!(a >= 2, "lambda needs a >= 2");
        let d = Int::from(a) * Int::from(a) - 1;
        QuadExt::new(rat(a), Rational::one(), d)
    }

    pub fn discriminant(&self) -> &Int {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.u.clone(), -self.v.clone(), self.d.clone())
    }

    /// The field norm u² − d·v² (rational).
    pub fn norm(&self) -> Rational {
        &self.u * &self.u - Rational::from_integer(self.d.clone()) * &self.v * &self.v
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(QuadExt::new(conj.u / &n, conj.v / &n, self.d.clone()))
    }

    /// Integer power; negative exponents use the exact inverse.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inverse().expect("nonzero element")
        } else {
            self.clone()
        };
        let mut out = QuadExt::one(self.d.clone());
        let mut acc = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &acc;
            }
            k >>= 1;
            if k > 0 {
                acc = &acc * &acc;
            }
        }
        out
    }

    fn assert_same_field(&self, rhs: &Self) {
        assert_eq!(self.d, rhs.d, "mixed quadratic extensions");
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.assert_same_field(rhs);
        QuadExt::new(&self.u + &rhs.u, &self.v + &rhs.v, self.d.clone())
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.assert_same_field(rhs);
        QuadExt::new(&self.u - &rhs.u, &self.v - &rhs.v, self.d.clone())
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.u.clone(), -self.v.clone(), self.d.clone())
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.assert_same_field(rhs);
        let d = Rational::from_integer(self.d.clone());
        QuadExt::new(
            &self.u * &rhs.u + &d * &self.v * &rhs.v,
            &self.u * &rhs.v + &self.v * &rhs.u,
            self.d.clone(),
        )
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", format_rational(&self.u));
        }
        write!(
            f,
            "{} + {}·√{}",
            format_rational(&self.u),
            format_rational(&self.v),
            self.d
        )
    }
}

/// 2×2 matrix over one quadratic extension; just enough for conjugating
/// diagonal blocks into their integer form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadMat2(pub [[QuadExt; 2]; 2]);

impl QuadMat2 {
    pub fn diagonal(a: QuadExt, b: QuadExt) -> Self {
        let d = a.discriminant().clone();
        QuadMat2([
            [a, QuadExt::zero(d.clone())],
            [QuadExt::zero(d.clone()), b],
        ])
    }

    pub fn mul(&self, rhs: &QuadMat2) -> QuadMat2 {
        let mut out = QuadMat2::diagonal(
            QuadExt::zero(self.0[0][0].discriminant().clone()),
            QuadExt::zero(self.0[0][0].discriminant().clone()),
        );
        for i in 0..2 {
            for j in 0..2 {
                let s = &(&self.0[i][0] * &rhs.0[0][j]) + &(&self.0[i][1] * &rhs.0[1][j]);
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn det(&self) -> QuadExt {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }

    pub fn inverse(&self) -> Option<QuadMat2> {
        let det = self.det();
        let inv = det.inverse()?;
        Some(QuadMat2([
            [&self.0[1][1] * &inv, &(-&self.0[0][1]) * &inv],
            [&(-&self.0[1][0]) * &inv, &self.0[0][0] * &inv],
        ]))
    }
}
