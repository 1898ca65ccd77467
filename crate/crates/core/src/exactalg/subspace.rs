use std::fmt;

use super::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored canonically as the nonzero rows of its
/// reduced row echelon form. Two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let e = Matrix::from_rows(field, ambient, vectors)?.echelon();
        Ok(SubspaceBasis {
            ambient,
            basis: e.matrix,
            pivots: e.pivots,
        })
    }

    /// Wraps rows already known to be in reduced row echelon form.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        SubspaceBasis {
            ambient: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Result<Self> {
        let rows = indices
            .iter()
            .map(|&i| unit_vector(field, ambient, i))
            .collect();
        Self::span(field, ambient, rows)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        v.iter().try_for_each(|s| self.field().check(s))
    }

    fn check_compatible(&self, other: &SubspaceBasis) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis: zero in every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(v)?;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(r)) {
                *x = &*x - &(&factor * b);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace. For an RREF basis these are the pivot entries of `v`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        let mut out = vec![self.field().zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            for (x, b) in out.iter_mut().zip(self.basis.row(r)) {
                *x = &*x + &(c * b);
            }
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::span(self.field(), self.ambient, rows)
    }

    /// Intersection by the Zassenhaus construction: row reduce `[a | a]`
    /// stacked on `[b | 0]`; rows whose left half vanishes span `a ∩ b`.
    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_compatible(other)?;
        let field = self.field();
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in self.basis_vectors() {
            let mut row = v.clone();
            row.extend(v);
            rows.push(row);
        }
        for v in other.basis_vectors() {
            let mut row = v;
            row.extend(std::iter::repeat_n(field.zero(), n));
            rows.push(row);
        }
        let e = Matrix::from_rows(field, 2 * n, rows)?.echelon();
        let inter = (0..e.rank())
            .filter(|&r| e.pivots[r] >= n)
            .map(|r| e.matrix.row(r)[n..].to_vec())
            .collect();
        Self::span(field, n, inter)
    }

    /// Quotient data for `F^n / self`.
    pub fn quotient(&self) -> Quotient<'_> {
        let complement = (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        Quotient {
            sub: self,
            complement,
        }
    }

    /// The image of this subspace under `v ↦ v[indices]`.
    pub fn restrict(&self, indices: &[usize]) -> Result<SubspaceBasis> {
        let rows = self
            .basis_vectors()
            .into_iter()
            .map(|v| indices.iter().map(|&i| v[i].clone()).collect())
            .collect();
        Self::span(self.field(), indices.len(), rows)
    }

    /// Embeds into a larger ambient space, placing coordinate `i` at
    /// `positions[i]`.
    pub fn embed(&self, ambient: usize, positions: &[usize]) -> Result<SubspaceBasis> {
        if positions.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: positions.len(),
            });
        }
        let field = self.field();
        let rows = self
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut out = vec![field.zero(); ambient];
                for (x, &p) in v.into_iter().zip(positions) {
                    out[p] = x;
                }
                out
            })
            .collect();
        Self::span(field, ambient, rows)
    }
}

/// Coset representatives for `F^n / U`: the standard basis vectors at the
/// non-pivot columns of `U`'s canonical basis.
#[derive(Clone, Debug)]
pub struct Quotient<'a> {
    sub: &'a SubspaceBasis,
    complement: Vec<usize>,
}

impl Quotient<'_> {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    pub fn representatives(&self) -> Vec<Vec<Scalar>> {
        let field = self.sub.field();
        self.complement
            .iter()
            .map(|&i| unit_vector(field, self.sub.ambient, i))
            .collect()
    }

    /// Coordinates of `v + U` with respect to the representatives.
    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let r = self.sub.reduce(v)?;
        Ok(self.complement.iter().map(|&i| r[i].clone()).collect())
    }
}

pub(crate) fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

impl fmt::Display for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

/// Default largest ambient dimension for exhaustive subspace enumeration.
pub fn default_enumeration_bound(field: Field) -> usize {
    match field {
        Field::Prime(2) => 6,
        Field::Prime(3) => 4,
        _ => 3,
    }
}

/// Every subspace of `GF(p)^n` (or only those of dimension `dim`), each
/// exactly once, in canonical RREF form.
///
/// Subspaces are generated directly as reduced echelon matrices: a choice of
/// pivot columns plus arbitrary entries in the non-pivot columns right of
/// each pivot.
pub fn enumerate_subspaces(
    field: Field,
    n: usize,
    dim: Option<usize>,
    bound: usize,
) -> Result<Vec<SubspaceBasis>> {
    let elems = field.elements().ok_or(Error::InfiniteField(field))?;
    if n > bound {
        return Err(Error::OverBound { dim: n, bound });
    }
    let dims: Vec<usize> = match dim {
        Some(k) if k > n => Vec::new(),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut out = Vec::new();
    for k in dims {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    (p + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut digits = vec![0usize; free.len()];
            loop {
                let mut m = Matrix::zeros(field, k, n);
                for (r, &p) in pivots.iter().enumerate() {
                    m.set(r, p, field.one());
                }
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    m.set(r, c, elems[d].clone());
                }
                out.push(SubspaceBasis::from_rref_unchecked(m, pivots.clone()));
                if !advance(&mut digits, elems.len()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Odometer increment; returns false after the last state.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn line(f: Field, v: &[i64]) -> SubspaceBasis {
        SubspaceBasis::span(f, v.len(), vec![v.iter().map(|&x| f.from_i64(x)).collect()]).unwrap()
    }

    #[test]
    fn sum_and_intersection_of_equal_spaces() {
        let f = gf(5);
        let a = line(f, &[1, 2, 3]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn distinct_lines_in_gf2_plane() {
        let f = gf(2);
        let a = line(f, &[1, 0]);
        let b = line(f, &[1, 1]);
        assert_eq!(a.sum(&b).unwrap(), SubspaceBasis::full(f, 2));
        assert!(a.intersection(&b).unwrap().is_zero());
    }

    #[test]
    fn quotient_by_plane() {
        let f = gf(2);
        let plane = SubspaceBasis::span(
            f,
            3,
            vec![
                vec![f.one(), f.one(), f.zero()],
                vec![f.zero(), f.one(), f.one()],
            ],
        )
        .unwrap();
        let q = plane.quotient();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.representatives().len(), 1);
        let inside = vec![f.one(), f.zero(), f.one()];
        assert!(q.project(&inside).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn mismatched_ambient_is_rejected() {
        let f = gf(2);
        let a = line(f, &[1, 0]);
        let b = line(f, &[1, 0, 0]);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomials() {
        assert_eq!(enumerate_subspaces(gf(2), 2, None, 6).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(gf(2), 3, None, 6).unwrap().len(), 16);
        assert_eq!(enumerate_subspaces(gf(3), 2, None, 4).unwrap().len(), 6);
        // 1 + 63 + 651 + 1395 + 651 + 63 + 1
        assert_eq!(enumerate_subspaces(gf(2), 6, None, 6).unwrap().len(), 2825);
        assert_eq!(enumerate_subspaces(gf(3), 3, Some(1), 4).unwrap().len(), 13);
    }

    #[test]
    fn enumeration_errors() {
        assert_eq!(
            enumerate_subspaces(Field::Rational, 2, None, 6),
            Err(Error::InfiniteField(Field::Rational))
        );
        assert_eq!(
            enumerate_subspaces(gf(2), 7, None, 6),
            Err(Error::OverBound { dim: 7, bound: 6 })
        );
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        let all = enumerate_subspaces(gf(2), 4, None, 6).unwrap();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for s in &all {
            let again = SubspaceBasis::span(s.field(), 4, s.basis_vectors()).unwrap();
            assert_eq!(&again, s);
            for v in s.basis_vectors() {
                assert!(s.contains(&v).unwrap());
            }
        }
    }

    #[test]
    fn modular_law_on_gf2_cube() {
        let all = enumerate_subspaces(gf(2), 3, None, 6).unwrap();
        for a in &all {
            for b in &all {
                let s = a.sum(b).unwrap();
                let i = a.intersection(b).unwrap();
                assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
                assert!(i.is_subspace_of(a).unwrap() && i.is_subspace_of(b).unwrap());
                assert!(a.is_subspace_of(&s).unwrap() && b.is_subspace_of(&s).unwrap());
            }
        }
    }
}
