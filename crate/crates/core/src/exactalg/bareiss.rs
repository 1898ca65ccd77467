//! Fraction-free (Bareiss) elimination.
//!
//! Rational matrices are scaled row-by-row to integer matrices first so that
//! every intermediate value is an integer minor of the scaled matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, Matrix, Scalar};

/// Integral domain with exact division, as needed by Bareiss' recurrence.
trait ExactDomain: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// `self / rhs` where the division is known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl ExactDomain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)));
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDomain for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("Bareiss divisor is a nonzero pivot")
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Runs the Bareiss recurrence and returns the successive pivots.
///
/// Without pivoting the k-th returned value is the k×k leading principal
/// minor, and the sequence stops at the first zero minor. With pivoting
/// (first nonzero row at or below the diagonal) the last value is the
/// determinant, or zero when the matrix is singular.
fn eliminate<T: ExactDomain>(mut a: Vec<Vec<T>>, one: T, pivoting: bool) -> Vec<T> {
    let n = a.len();
    let mut prev = one;
    let mut negate = false;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = if pivoting {
                (k + 1..n).find(|&i| !a[i][k].is_zero())
            } else {
                None
            };
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => {
                    out.push(a[k][k].clone());
                    return out;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
        out.push(if negate { prev.neg() } else { prev.clone() });
    }
    out
}

/// Integer rows of `m` together with the scale factor applied to each row.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows());
    let mut scales = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let row = m.row(r);
        let lcm = row.iter().fold(BigInt::one(), |acc, s| {
            acc.lcm(s.as_rational().expect("rational entry").denom())
        });
        rows.push(
            row.iter()
                .map(|s| {
                    let q = s.as_rational().expect("rational entry");
                    q.numer() * (&lcm / q.denom())
                })
                .collect(),
        );
        scales.push(lcm);
    }
    (rows, scales)
}

fn pivots(m: &Matrix, pivoting: bool) -> Vec<Scalar> {
    match m.field() {
        Field::Rational => {
            let (rows, scales) = integer_rows(m);
            let raw = eliminate(rows, BigInt::one(), pivoting);
            // Without pivoting the k-th minor involves rows 0..=k only; with
            // pivoting only the final value (all rows) is meaningful.
            let mut out = Vec::with_capacity(raw.len());
            let mut scale = BigInt::one();
            for (k, v) in raw.into_iter().enumerate() {
                scale *= &scales[k];
                let denom = if pivoting {
                    scales.iter().product()
                } else {
                    scale.clone()
                };
                out.push(Scalar::Rational(BigRational::new(v, denom)));
            }
            out
        }
        Field::Prime(_) => {
            let rows = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
            eliminate(rows, m.field().one(), pivoting)
        }
    }
}

/// Determinant of a square matrix.
pub(super) fn determinant(m: &Matrix) -> Scalar {
    if m.rows() == 0 {
        return m.field().one();
    }
    let p = pivots(m, true);
    if p.len() < m.rows() {
        return m.field().zero();
    }
    p.into_iter().last().expect("nonempty")
}

/// Leading principal minors `det(m[..k, ..k])` for `k = 1..`, stopping after
/// the first zero.
pub(super) fn leading_minors(m: &Matrix) -> Vec<Scalar> {
    pivots(m, false)
}
