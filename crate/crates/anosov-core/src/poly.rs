//! Integer polynomials: exact gcd, squarefree decomposition, Sturm
//! sequences and resultants.
//!
//! Coefficients are arbitrary-precision integers stored constant term
//! first. The remainder sequences used for gcd and Sturm chains are kept
//! fraction free: pseudo-remainders scaled back to primitive integer
//! polynomials, with signs preserved so that Sturm sign-variation counts
//! stay valid.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{Int, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    /// Constant term first; no trailing zeros; the zero polynomial is `[0]`.
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Int::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::from_i64(&[0])
    }

    pub fn constant(c: Int) -> Self {
        IntPolynomial::new(alloc::vec![c])
    }

    /// The monomial x^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.resize(n, Int::zero());
        coeffs.push(Int::one());
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().expect("coeffs nonempty")
    }

    pub fn constant_term(&self) -> &Int {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i))
                .collect(),
        )
    }

    /// Coefficient reversal x^d·p(1/x).
    pub fn reverse(&self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::new(coeffs)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            coeffs.push(a + b);
        }
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, rhs: &IntPolynomial) -> IntPolynomial {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + rhs.coeffs.len() - 1);
        coeffs.resize(self.coeffs.len() + rhs.coeffs.len() - 1, Int::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Int) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> IntPolynomial {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive with positive leading coefficient.
    fn primitive_normalized(&self) -> IntPolynomial {
        let p = self.primitive();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Pseudo-remainder: rem(lc(d)^(deg n − deg d + 1)·n, d), all integer.
    /// Requires deg n ≥ deg d and d ≠ 0.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert!(self.degree() >= d.degree());
        let lc = d.leading().clone();
        let mut rem = self.coeffs.clone();
        let dn = d.degree();
        // Eliminate from the top down; scale the remainder by lc at each step
        // so all divisions stay in the integers.
        for k in (dn..rem.len()).rev() {
            let head = rem[k].clone();
            for c in rem.iter_mut().take(k) {
                *c = &*c * &lc;
            }
            rem[k] = Int::zero();
            for j in 0..dn {
                rem[k - dn + j] -= &head * &d.coeffs[j];
            }
        }
        rem.truncate(dn.max(1));
        IntPolynomial::new(rem)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &IntPolynomial) -> IntPolynomial {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        assert!(self.degree() >= d.degree(), "inexact polynomial division");
        let mut rem = self.coeffs.clone();
        let dn = d.degree();
        let mut quot = Vec::with_capacity(self.degree() - dn + 1);
        quot.resize(self.degree() - dn + 1, Int::zero());
        for k in (dn..rem.len()).rev() {
            let (q, r) = rem[k].div_rem(d.leading());
            assert!(r.is_zero(), "inexact polynomial division");
            quot[k - dn] = q.clone();
            rem[k] = Int::zero();
            for j in 0..dn {
                rem[k - dn + j] -= &q * &d.coeffs[j];
            }
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "inexact polynomial division"
        );
        IntPolynomial::new(quot)
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_normalized();
        let mut b = rhs.primitive_normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_normalized();
            a = b;
            b = r;
            if !b.is_zero() && a.degree() < b.degree() {
                // deg drops every step; swap only defends degree-equal inputs
                core::mem::swap(&mut a, &mut b);
            }
        }
        a.primitive_normalized()
    }

    /// The squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return self.primitive_normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive_normalized();
        }
        self.primitive_normalized().div_exact(&g).primitive_normalized()
    }

    /// Yun squarefree decomposition: pairs `(factor, multiplicity)` with the
    /// factors squarefree, pairwise coprime, and
    /// `∏ factorᵉ = ±primitive(self)`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let p = self.primitive_normalized();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut out = Vec::new();
        if g.degree() == 0 {
            out.push((p, 1));
            return out;
        }
        let mut c = p.div_exact(&g);
        let mut d = dp.div_exact(&g).sub(&c.derivative());
        let mut mult = 1usize;
        while c.degree() > 0 {
            let f = c.gcd(&d);
            if f.degree() > 0 {
                out.push((f.clone(), mult));
            }
            c = c.div_exact(&f);
            d = d.div_exact(&f).sub(&c.derivative());
            mult += 1;
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Sturm chain of a squarefree polynomial. Elements are kept primitive with
/// only positive rescaling, which leaves all sign variations intact.
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointIsRoot;

impl fmt::Display for EndpointIsRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "interval endpoint is a root")
    }
}

impl SturmChain {
    /// Builds the chain for `p`, which must be squarefree.
    pub fn new(p: &IntPolynomial) -> Self {
        let p0 = p.primitive();
        let mut chain = alloc::vec![p0.clone()];
        if p0.degree() > 0 {
            chain.push(p0.derivative().primitive());
            loop {
                let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
                if b.is_zero() || a.degree() == 0 || b.degree() > a.degree() {
                    break;
                }
                // next = −rem(a, b), rescaled by a positive constant.
                let mut r = a.pseudo_rem(b);
                let delta = a.degree() - b.degree();
                if b.leading().is_negative() && delta % 2 == 0 {
                    // prem multiplied a by lc(b)^(delta+1) < 0: flip back.
                    r = r.neg();
                }
                if r.is_zero() {
                    break;
                }
                let next = r.neg().primitive();
                chain.push(next);
                if chain.last().is_some_and(|t| t.degree() == 0) {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    fn variations<F: Fn(&IntPolynomial) -> Ordering>(&self, sign_of: F) -> usize {
        let mut count = 0;
        let mut last: Option<Ordering> = None;
        for p in &self.chain {
            let s = sign_of(p);
            if s == Ordering::Equal {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        self.variations(|p| p.eval_rational(x).cmp(&Rational::zero()))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        self.variations(|p| {
            let s = p.leading().cmp(&Int::zero());
            if p.degree() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        })
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        self.variations(|p| p.leading().cmp(&Int::zero()))
    }

    /// Number of real roots in the open interval `(a, b)`; the endpoints
    /// must not be roots.
    pub fn count_roots_in_open(
        &self,
        a: &Rational,
        b: &Rational,
    ) -> Result<usize, EndpointIsRoot> {
        assert!(a < b, "empty interval");
        let p = &self.chain[0];
        if p.eval_rational(a).is_zero() || p.eval_rational(b).is_zero() {
            return Err(EndpointIsRoot);
        }
        Ok(self
            .variations_at(a)
            .checked_sub(self.variations_at(b))
            .expect("sign variations are monotone on a Sturm chain"))
    }

    /// Total number of real roots.
    pub fn count_real_roots(&self) -> usize {
        self.variations_at_neg_infinity()
            .checked_sub(self.variations_at_pos_infinity())
            .expect("sign variations are monotone on a Sturm chain")
    }
}

/// Resultant of two integer polynomials via a Euclidean remainder sequence
/// with exact rational bookkeeping of the leading-coefficient powers.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Int {
    if f.is_zero() || g.is_zero() {
        return Int::zero();
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = Rational::one();
    let mut negate = false;
    if a.degree() < b.degree() {
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            negate = !negate;
        }
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree() == 0 {
            // Res(a, c) = c^(deg a)
            let mut c = Rational::from_integer(b.leading().clone());
            let mut p = Rational::one();
            let mut e = a.degree();
            while e > 0 {
                if e & 1 == 1 {
                    p *= &c;
                }
                e >>= 1;
                if e > 0 {
                    c = &c * &c;
                }
            }
            let total = acc * p;
            let result = if total.denom().is_one() {
                total.numer().clone()
            } else {
                // The resultant of integer polynomials is an integer.
                unreachable!("resultant bookkeeping left a denominator")
            };
            return if negate { -result } else { result };
        }
        let da = a.degree();
        let db = b.degree();
        let delta = da - db;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Int::zero();
        }
        // r = lc(b)^(delta+1) · rem(a, b), and with rem = r / lc(b)^(delta+1):
        // Res(a,b) = (−1)^(da·db) lc(b)^(da − deg rem) Res(b, rem).
        let lc = Rational::from_integer(b.leading().clone());
        let up = i64::try_from(da - r.degree()).expect("small exponent");
        let down = i64::try_from((delta + 1) * db).expect("small exponent");
        acc *= pow_rational(&lc, up - down);
        if (da * db) % 2 == 1 {
            negate = !negate;
        }
        a = b;
        b = r;
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut k = e.unsigned_abs();
    let mut out = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            out *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    out
}

/// Exact polynomial interpolation through distinct nodes, Newton form.
pub fn interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    assert!(!points.is_empty());
    let n = points.len();
    // Divided differences.
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs_newton = alloc::vec![table[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let dx = &points[i + level].0 - &points[i].0;
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        table.truncate(n - level);
        coeffs_newton.push(table[0].clone());
    }
    // Expand ∑ cᵢ ∏_{j<i} (x − xⱼ) into monomial coefficients.
    let mut result = crate::rational::vec_zero(n);
    let mut basis = crate::rational::vec_zero(n);
    basis[0] = Rational::one();
    let mut basis_len = 1usize;
    for (i, c) in coeffs_newton.iter().enumerate() {
        for k in 0..basis_len {
            result[k] += c * &basis[k];
        }
        if i + 1 < n {
            // basis *= (x − xᵢ)
            let xi = &points[i].0;
            for k in (0..basis_len).rev() {
                let b = basis[k].clone();
                basis[k + 1] += &b;
                basis[k] = -(b * xi);
            }
            basis_len += 1;
        }
    }
    result
}

/// Render constant-first integer coefficients, used in a few reports.
pub fn coeffs_to_string(p: &IntPolynomial) -> String {
    use alloc::format;
    let parts: Vec<String> = p.coeffs().iter().map(|c| format!("{c}")).collect();
    format!("[{}]", parts.join(", "))
}
