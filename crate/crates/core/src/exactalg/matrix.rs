use std::fmt;
use std::ops::Index;

use super::{bareiss, Field, Scalar, SubspaceBasis};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form with the zero rows dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for s in &row {
                field.check(s)?;
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, rows).expect("rectangular input")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self[(r, c)].clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = acc + &self[(r, k)] * &rhs[(k, c)];
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| dot(self.field, self.row(r), x))
            .collect())
    }

    /// Gauss-Jordan elimination. Pivots are taken in the leftmost column
    /// that still has a nonzero entry, from the first such row.
    pub fn echelon(&self) -> Echelon {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][c].inv().expect("nonzero pivot");
            for x in rows[next].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * p);
                }
            }
            pivots.push(c);
            next += 1;
        }
        rows.truncate(next);
        Echelon {
            matrix: Matrix::from_rows(self.field, self.cols, rows).expect("same shape"),
            pivots,
        }
    }

    /// Reduced row echelon form (zero rows dropped) and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let e = self.echelon();
        let rank = e.rank();
        (e.matrix, rank)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> SubspaceBasis {
        let e = self.echelon();
        let mut basis = Vec::new();
        let mut pivot_iter = e.pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut x = vec![self.field.zero(); self.cols];
            x[free] = self.field.one();
            for (r, &p) in e.pivots.iter().enumerate() {
                x[p] = -&e.matrix[(r, free)];
            }
            basis.push(x);
        }
        SubspaceBasis::span(self.field, self.cols, basis).expect("kernel vectors fit ambient")
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det_fraction_free(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss::determinant(self))
    }

    /// Leading principal minors of a square matrix, `k = 1, 2, ..`, ending
    /// at the first zero minor (if any).
    pub fn leading_principal_minors(&self) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss::leading_minors(self))
    }

    /// Leading `n x n` block.
    pub fn leading_block(&self, n: usize) -> Matrix {
        let rows = (0..n).map(|r| self.row(r)[..n].to_vec()).collect();
        Matrix::from_rows(self.field, n, rows).expect("block of same field")
    }
}

pub(crate) fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| acc + &(x * y))
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn rref_rank_one_rational() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), (Matrix::from_i64(q(), &[&[1, 2]]), 1));
    }

    #[test]
    fn rref_rank_one_gf2() {
        let f = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rref(), (Matrix::from_i64(f, &[&[1, 1]]), 1));
    }

    #[test]
    fn rref_pivot_choice_is_leftmost() {
        let m = Matrix::from_i64(q(), &[&[0, 0, 3], &[0, 2, 1]]);
        let e = m.echelon();
        assert_eq!(e.pivots, vec![1, 2]);
        assert_eq!(e.matrix, Matrix::from_i64(q(), &[&[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn kernel_examples() {
        let id = Matrix::identity(q(), 4);
        assert_eq!(id.kernel().dim(), 0);

        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q().from_i64(-2), q().from_i64(1)]).unwrap());

        let z = Matrix::zeros(q(), 2, 3);
        assert_eq!(z.kernel().dim(), 3);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(Matrix::identity(q(), 4).det_fraction_free().unwrap(), q().one());
        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.det_fraction_free().unwrap(), q().from_i64(-1));
        let h = Matrix::from_rows(
            q(),
            2,
            vec![
                vec![q().one(), q().ratio(1, 2).unwrap()],
                vec![q().ratio(1, 2).unwrap(), q().ratio(1, 3).unwrap()],
            ],
        )
        .unwrap();
        assert_eq!(h.det_fraction_free().unwrap(), q().ratio(1, 12).unwrap());
        let rect = Matrix::zeros(q(), 2, 3);
        assert_eq!(
            rect.det_fraction_free(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
        assert_eq!(Matrix::zeros(q(), 0, 0).det_fraction_free().unwrap(), q().one());
    }

    #[test]
    fn singular_determinants() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert!(m.det_fraction_free().unwrap().is_zero());
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_i64(f, &[&[0, 1, 2], &[0, 2, 1], &[1, 1, 1]]);
        assert!(m.det_fraction_free().unwrap().is_zero());
    }

    #[test]
    fn leading_minors_stop_at_zero() {
        let m = Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]);
        let minors = m.leading_principal_minors().unwrap();
        assert_eq!(minors, vec![q().one(), q().zero()]);
        let m = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(m.leading_principal_minors().unwrap(), vec![q().zero()]);
    }
}
