//! Finite-dimensional commutative algebras given by structure constants.
//!
//! The basis is `e_0, .., e_{n-1}` with `e_0 = 1`, and the maximal ideal is
//! spanned by `e_1, .., e_{n-1}`. Subspaces of the algebra are expressed in
//! full `n`-dimensional coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{unit_vector, Field, Matrix, Scalar, SubspaceBasis};
use crate::ringcore::{Ideal, TripleRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedAlgebra {
    field: Field,
    dim: usize,
    /// `table[(i * dim + j) * dim + k]` is the e_k coefficient of e_i e_j.
    table: Vec<Scalar>,
}

/// First invariant a structure-constant table violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    Empty,
    NotCommutative { i: usize, j: usize },
    NotUnit { j: usize },
    UnitInMaximalIdeal { i: usize, j: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    CubeNonzero { i: usize, j: usize, k: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::Empty => write!(f, "algebra has dimension zero"),
            ValidationIssue::NotCommutative { i, j } => {
                write!(f, "e{i}·e{j} != e{j}·e{i}")
            }
            ValidationIssue::NotUnit { j } => write!(f, "e0·e{j} != e{j}"),
            ValidationIssue::UnitInMaximalIdeal { i, j } => write!(
                f,
                "e{i}·e{j} has a unit component: m is not an ideal and not nilpotent"
            ),
            ValidationIssue::NotAssociative { i, j, k } => {
                write!(f, "(e{i}·e{j})·e{k} != e{i}·(e{j}·e{k})")
            }
            ValidationIssue::CubeNonzero { i, j, k } => write!(f, "e{i}·e{j}·e{k} != 0 in m^3"),
        }
    }
}

impl PresentedAlgebra {
    /// Builds an algebra from a flat table (no validation beyond shape).
    pub fn from_table(field: Field, dim: usize, table: Vec<Scalar>) -> Result<Self> {
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        table.iter().try_for_each(|s| field.check(s))?;
        Ok(PresentedAlgebra { field, dim, table })
    }

    /// The algebra where `e_0` is the unit and all products in `m` are zero;
    /// products are then filled in with [`PresentedAlgebra::set_product`].
    pub fn with_unit(field: Field, dim: usize) -> Self {
        let mut a = PresentedAlgebra {
            field,
            dim,
            table: vec![field.zero(); dim * dim * dim],
        };
        for j in 0..dim {
            let e = unit_vector(field, dim, j);
            a.put(0, j, &e);
            a.put(j, 0, &e);
        }
        a
    }

    fn put(&mut self, i: usize, j: usize, coords: &[Scalar]) {
        let start = (i * self.dim + j) * self.dim;
        self.table[start..start + self.dim].clone_from_slice(coords);
    }

    /// Sets `e_i e_j = e_j e_i = coords`.
    pub fn set_product(&mut self, i: usize, j: usize, coords: Vec<Scalar>) -> Result<()> {
        if coords.len() != self.dim || i >= self.dim || j >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        coords.iter().try_for_each(|s| self.field.check(s))?;
        self.put(i, j, &coords);
        self.put(j, i, &coords);
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        for x in [a, b] {
            if x.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: x.len(),
                });
            }
        }
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (o, t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = &*o + &(&c * t);
                }
            }
        }
        Ok(out)
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field, self.dim, i)
    }

    /// Checks commutativity, the unit, that `m` is an ideal, associativity,
    /// and `m³ = 0`, reporting the first violation.
    pub fn validate(&self) -> std::result::Result<(), ValidationIssue> {
        let n = self.dim;
        if n == 0 {
            return Err(ValidationIssue::Empty);
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(ValidationIssue::NotCommutative { i, j });
                }
            }
        }
        for j in 0..n {
            if self.basis_product(0, j) != self.basis(j).as_slice() {
                return Err(ValidationIssue::NotUnit { j });
            }
        }
        for i in 1..n {
            for j in 1..n {
                if !self.basis_product(i, j)[0].is_zero() {
                    return Err(ValidationIssue::UnitInMaximalIdeal { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.multiply(&ij, &self.basis(k)).expect("shape");
                    let jk = self.basis_product(j, k).to_vec();
                    let right = self.multiply(&self.basis(i), &jk).expect("shape");
                    if left != right {
                        return Err(ValidationIssue::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 1..n {
                    let p = self.multiply(&ij, &self.basis(k)).expect("shape");
                    if p.iter().any(|s| !s.is_zero()) {
                        return Err(ValidationIssue::CubeNonzero { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn require_valid(&self) -> Result<()> {
        self.validate()
            .map_err(|issue| Error::InvalidAlgebra(issue.to_string()))
    }

    /// `m = span{e_1, .., e_{n-1}}`.
    pub fn maximal_ideal(&self) -> SubspaceBasis {
        let idx: Vec<usize> = (1..self.dim).collect();
        SubspaceBasis::coordinate(self.field, self.dim, &idx).expect("in range")
    }

    /// `m^k`, spanned by all k-fold products of maximal-ideal basis vectors.
    pub fn m_power(&self, k: usize) -> Result<SubspaceBasis> {
        if k == 0 {
            return Err(Error::Precondition("m_power needs k >= 1".into()));
        }
        let mut current = self.maximal_ideal();
        for _ in 1..k {
            let mut rows = Vec::new();
            for v in current.basis_vectors() {
                for i in 1..self.dim {
                    rows.push(self.multiply(&v, &self.basis(i))?);
                }
            }
            current = SubspaceBasis::span(self.field, self.dim, rows)?;
        }
        Ok(current)
    }

    pub fn is_ideal(&self, u: &SubspaceBasis) -> Result<bool> {
        if u.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient(),
            });
        }
        for v in u.basis_vectors() {
            for i in 0..self.dim {
                if !u.contains(&self.multiply(&v, &self.basis(i))?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Soc(A) = Ann(m)`.
    pub fn socle(&self) -> SubspaceBasis {
        let mut rows = Vec::new();
        for i in 1..self.dim {
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|j| self.basis_product(i, j)[k].clone()).collect());
            }
        }
        Matrix::from_rows(self.field, self.dim, rows)
            .expect("multiplication rows")
            .kernel()
    }

    /// `(I : m) ∩ m` for an ideal `I ⊆ m`.
    pub fn colon_maximal(&self, i: &SubspaceBasis) -> Result<SubspaceBasis> {
        let quotient = i.quotient();
        let mut rows = Vec::new();
        for g in 1..self.dim {
            let images: Vec<Vec<Scalar>> = (0..self.dim)
                .map(|j| quotient.project(self.basis_product(g, j)))
                .collect::<Result<_>>()?;
            for c in 0..quotient.dim() {
                rows.push(images.iter().map(|img| img[c].clone()).collect());
            }
        }
        // Restrict to m: the unit coordinate is zero.
        rows.push(self.basis(0));
        Ok(Matrix::from_rows(self.field, self.dim, rows)?.kernel())
    }

    pub(crate) fn graded_coords(&self) -> Result<GradedCoords> {
        self.require_valid()?;
        let m2 = self.m_power(2)?;
        let v_indices = (1..self.dim)
            .filter(|c| !m2.pivots().contains(c))
            .collect();
        Ok(GradedCoords { v_indices, m2 })
    }

    /// Associated graded ring `F × m/m² × m²`.
    pub fn gr(&self) -> Result<TripleRing> {
        let coords = self.graded_coords()?;
        let dim_v = coords.v_indices.len();
        let dim_w = coords.m2.dim();
        let mut ring = TripleRing::square_zero(self.field, dim_v, dim_w);
        for (a, &ia) in coords.v_indices.iter().enumerate() {
            for (b, &ib) in coords.v_indices.iter().enumerate().skip(a) {
                let prod = self.basis_product(ia, ib);
                let w = coords
                    .m2
                    .coordinates(prod)?
                    .ok_or_else(|| Error::InvalidAlgebra("product of m outside m^2".into()))?;
                ring.set_beta(a, b, w)?;
            }
        }
        Ok(ring)
    }

    /// `gr(I) = 0 × (I + m²)/m² × (I ∩ m²)` as an ideal of [`Self::gr`].
    pub fn gr_ideal(&self, i: &SubspaceBasis) -> Result<Ideal> {
        if !i.is_subspace_of(&self.maximal_ideal())? || !self.is_ideal(i)? {
            return Err(Error::NotAnIdeal);
        }
        let coords = self.graded_coords()?;
        let dim_v = coords.v_indices.len();
        let total = dim_v + coords.m2.dim();
        let mut rows = Vec::new();
        for v in i.basis_vectors() {
            let mut row = coords.v_part(&v)?;
            row.extend(std::iter::repeat_n(self.field.zero(), coords.m2.dim()));
            rows.push(row);
        }
        for w in i.intersection(&coords.m2)?.basis_vectors() {
            let mut row = vec![self.field.zero(); dim_v];
            row.extend(coords.m2.coordinates(&w)?.expect("inside m^2"));
            rows.push(row);
        }
        Ok(Ideal::from_space_unchecked(SubspaceBasis::span(
            self.field, total, rows,
        )?))
    }

    /// The idealization `F × V` with square-zero maximal ideal.
    pub fn trivial_extension(field: Field, dim_v: usize) -> Self {
        Self::with_unit(field, dim_v + 1)
    }
}

/// Coordinates relating the algebra to its associated graded ring: the
/// basis vectors `e_i` at `v_indices` represent `m/m²`, and `W` is `m²` with
/// its canonical basis.
#[derive(Clone, Debug)]
pub(crate) struct GradedCoords {
    pub v_indices: Vec<usize>,
    pub m2: SubspaceBasis,
}

impl GradedCoords {
    /// Coordinates of `a + m²` in `m/m²`.
    pub fn v_part(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        let r = self.m2.reduce(a)?;
        Ok(self.v_indices.iter().map(|&i| r[i].clone()).collect())
    }

    /// The projection of `a` onto `m²` along the representatives, in W
    /// coordinates. For `a ∈ m` this is `a - (a mod m²)`.
    pub fn w_part(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        let r = self.m2.reduce(a)?;
        let diff: Vec<Scalar> = a.iter().zip(&r).map(|(x, y)| x - y).collect();
        Ok(self.m2.coordinates(&diff)?.expect("difference lies in m^2"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `F[x]/(x³)` with basis `1, x, x²`.
    pub(crate) fn truncated_cubic(field: Field) -> PresentedAlgebra {
        let mut a = PresentedAlgebra::with_unit(field, 3);
        a.set_product(1, 1, unit_vector(field, 3, 2)).unwrap();
        a
    }

    fn span(field: Field, n: usize, rows: &[&[i64]]) -> SubspaceBasis {
        SubspaceBasis::span(
            field,
            n,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        let q = Field::Rational;
        assert_eq!(truncated_cubic(q).validate(), Ok(()));

        let mut bad = truncated_cubic(q);
        bad.set_product(1, 1, unit_vector(q, 3, 0)).unwrap();
        assert_eq!(
            bad.validate(),
            Err(ValidationIssue::UnitInMaximalIdeal { i: 1, j: 1 })
        );

        let gf2 = Field::prime(2).unwrap();
        let t = PresentedAlgebra::trivial_extension(gf2, 2);
        assert_eq!(t.validate(), Ok(()));
        assert!(t.m_power(2).unwrap().is_zero());
    }

    #[test]
    fn validation_catches_cube_and_commutativity() {
        let q = Field::Rational;
        // F[x]/(x⁴) truncated to x, x², x³: x·x³ would leave the table, so
        // make x·x = x², x·x² = x³.
        let mut a = PresentedAlgebra::with_unit(q, 4);
        a.set_product(1, 1, unit_vector(q, 4, 2)).unwrap();
        a.set_product(1, 2, unit_vector(q, 4, 3)).unwrap();
        assert_eq!(a.validate(), Err(ValidationIssue::CubeNonzero { i: 1, j: 1, k: 1 }));

        let mut table = PresentedAlgebra::with_unit(q, 3).table;
        table[(3 + 2) * 3 + 1] = q.one();
        let a = PresentedAlgebra::from_table(q, 3, table).unwrap();
        assert_eq!(a.validate(), Err(ValidationIssue::NotCommutative { i: 1, j: 2 }));
    }

    #[test]
    fn validation_catches_non_associativity() {
        let q = Field::Rational;
        // x·x = y, x·y = 0 but y·y = ... keep cube zero, break (x·x)·z vs x·(x·z).
        let mut a = PresentedAlgebra::with_unit(q, 4);
        a.set_product(1, 1, unit_vector(q, 4, 2)).unwrap();
        a.set_product(1, 3, unit_vector(q, 4, 1)).unwrap();
        assert!(matches!(
            a.validate(),
            Err(ValidationIssue::NotAssociative { .. })
        ));
    }

    #[test]
    fn m_power_examples() {
        let q = Field::Rational;
        let a = truncated_cubic(q);
        assert_eq!(a.m_power(2).unwrap(), span(q, 3, &[&[0, 0, 1]]));
        assert!(a.m_power(3).unwrap().is_zero());
        assert!(a.m_power(0).is_err());
        let t = PresentedAlgebra::trivial_extension(q, 3);
        assert!(t.m_power(2).unwrap().is_zero());
    }

    #[test]
    fn gr_examples() {
        let q = Field::Rational;
        let g = truncated_cubic(q).gr().unwrap();
        let mut expected = TripleRing::square_zero(q, 1, 1);
        expected.set_beta(0, 0, vec![q.one()]).unwrap();
        assert_eq!(g, expected);

        let t = PresentedAlgebra::trivial_extension(q, 3).gr().unwrap();
        assert_eq!(t, TripleRing::square_zero(q, 3, 0));
    }

    #[test]
    fn gr_of_two_variable_algebra() {
        // GF(2)[x, y]/(x² - y², xy, x³): basis 1, x, y, x².
        let f = Field::prime(2).unwrap();
        let mut a = PresentedAlgebra::with_unit(f, 4);
        a.set_product(1, 1, unit_vector(f, 4, 3)).unwrap();
        a.set_product(2, 2, unit_vector(f, 4, 3)).unwrap();
        assert_eq!(a.validate(), Ok(()));
        let g = a.gr().unwrap();
        assert_eq!((g.dim_v(), g.dim_w()), (2, 1));
        assert_eq!(g.beta(0, 1), g.beta(1, 0));
        assert_eq!(g.beta(0, 0), &[f.one()]);
    }

    #[test]
    fn gr_rejects_invalid() {
        let q = Field::Rational;
        let mut bad = truncated_cubic(q);
        bad.set_product(1, 1, unit_vector(q, 3, 0)).unwrap();
        assert!(matches!(bad.gr(), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn gr_ideal_examples() {
        let q = Field::Rational;
        let a = truncated_cubic(q);
        let g = a.gr().unwrap();
        assert_eq!(a.gr_ideal(&a.maximal_ideal()).unwrap(), g.maximal_ideal());
        assert_eq!(a.gr_ideal(&span(q, 3, &[&[0, 0, 1]])).unwrap(), g.w_ideal());
        assert_eq!(a.gr_ideal(&span(q, 3, &[])).unwrap(), g.zero_ideal());
        assert_eq!(a.gr_ideal(&span(q, 3, &[&[0, 1, 0]])), Err(Error::NotAnIdeal));
    }

    #[test]
    fn socle_and_colon() {
        let q = Field::Rational;
        let a = truncated_cubic(q);
        assert_eq!(a.socle(), span(q, 3, &[&[0, 0, 1]]));
        assert_eq!(a.colon_maximal(&span(q, 3, &[])).unwrap(), a.socle());
        assert_eq!(
            a.colon_maximal(&span(q, 3, &[&[0, 0, 1]])).unwrap(),
            a.maximal_ideal()
        );
    }
}
