//! Exact rational subspaces as fraction-free integer row spaces.
//!
//! A subspace of ℚ^n is stored as an echelonized list of primitive integer
//! rows (content 1, sorted by pivot column). Incoming rational vectors are
//! scaled to integer vectors first; elimination then uses cross
//! multiplication only, so no fractions ever appear and membership tests
//! need no tolerance.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::{denominator_lcm, Int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Echelon rows: strictly increasing pivot columns, each row primitive.
    rows: Vec<Vec<Int>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            let mut row = int_zero(ambient);
            row[i] = Int::from(1);
            s.rows.push(row);
        }
        s
    }

    pub fn from_vectors<'a>(
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a [Rational]>,
    ) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the span; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut row = clear_denominators(v);
        self.reduce_in_place(&mut row);
        match pivot_of(&row) {
            None => false,
            Some(p) => {
                make_primitive(&mut row);
                let at = self
                    .rows
                    .iter()
                    .position(|r| pivot_of(r).expect("stored rows are nonzero") > p)
                    .unwrap_or(self.rows.len());
                self.rows.insert(at, row);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut row = clear_denominators(v);
        self.reduce_in_place(&mut row);
        pivot_of(&row).is_none()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows
            .iter()
            .all(|r| other.contains(&to_rational(r)))
    }

    /// A basis of the space as rational vectors (the primitive integer rows).
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| to_rational(r)).collect()
    }

    fn reduce_in_place(&self, row: &mut [Int]) {
        for r in &self.rows {
            let p = pivot_of(r).expect("stored rows are nonzero");
            if row[p].is_zero() {
                continue;
            }
            // row := r[p]·row − row[p]·r, then strip the content.
            let a = r[p].clone();
            let b = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                *x = &*x * &a - &b * y;
            }
            strip_content(row);
        }
    }
}

fn int_zero(len: usize) -> Vec<Int> {
    let mut v = Vec::with_capacity(len);
    v.resize(len, Int::zero());
    v
}

fn pivot_of(row: &[Int]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

fn clear_denominators(v: &[Rational]) -> Vec<Int> {
    let l = denominator_lcm(v.iter());
    v.iter()
        .map(|r| r.numer() * (&l / r.denom()))
        .collect()
}

fn strip_content(row: &mut [Int]) {
    let mut g = Int::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g == Int::from(1) {
            return;
        }
    }
    if g.is_zero() || g == Int::from(1) {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

fn make_primitive(row: &mut [Int]) {
    strip_content(row);
    if let Some(p) = pivot_of(row) {
        if row[p].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

fn to_rational(row: &[Int]) -> Vec<Rational> {
    row.iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect()
}
