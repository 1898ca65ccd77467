//! Finite-dimensional triple rings `S = F × V × W`.
//!
//! Multiplication is
//! `(λ1, v1, w1)(λ2, v2, w2) = (λ1λ2, λ1v2 + λ2v1, λ1w2 + λ2w1 + β(v1, v2))`
//! for a symmetric bilinear `β : V × V → W`. The maximal ideal is
//! `m = 0 × V × W` and every proper ideal is a subspace of `m`, so ideals are
//! stored as subspaces of the coordinate space `V ⊕ W` (V coordinates first).

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{unit_vector, Field, Matrix, Scalar, SubspaceBasis};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleRing {
    field: Field,
    dim_v: usize,
    dim_w: usize,
    /// `beta[(i * dim_v + j) * dim_w + k]` is the k-th W coordinate of β(v_i, v_j).
    beta: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub lambda: Scalar,
    pub v: Vec<Scalar>,
    pub w: Vec<Scalar>,
}

/// An ideal contained in the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    space: SubspaceBasis,
}

/// Result of a colon computation: either a proper ideal or the whole ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingIdeal {
    Proper(Ideal),
    Whole,
}

/// A linear functional on a subspace of `m`, given by its values on the
/// canonical (RREF) basis of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    domain: SubspaceBasis,
    coeffs: Vec<Scalar>,
}

impl TripleRing {
    /// Builds a ring from `beta[i][j]` = W-coordinates of β(v_i, v_j).
    pub fn new(field: Field, dim_v: usize, dim_w: usize, beta: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        if beta.len() != dim_v {
            return Err(Error::DimensionMismatch {
                expected: dim_v,
                found: beta.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim_v * dim_v * dim_w);
        for row in &beta {
            if row.len() != dim_v {
                return Err(Error::DimensionMismatch {
                    expected: dim_v,
                    found: row.len(),
                });
            }
            for w in row {
                if w.len() != dim_w {
                    return Err(Error::DimensionMismatch {
                        expected: dim_w,
                        found: w.len(),
                    });
                }
                for s in w {
                    field.check(s)?;
                }
                flat.extend(w.iter().cloned());
            }
        }
        let ring = TripleRing {
            field,
            dim_v,
            dim_w,
            beta: flat,
        };
        for i in 0..dim_v {
            for j in i + 1..dim_v {
                if ring.beta(i, j) != ring.beta(j, i) {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(ring)
    }

    /// The ring with `β = 0` (square-zero maximal ideal).
    pub fn square_zero(field: Field, dim_v: usize, dim_w: usize) -> Self {
        TripleRing {
            field,
            dim_v,
            dim_w,
            beta: vec![field.zero(); dim_v * dim_v * dim_w],
        }
    }

    /// Sets β(v_i, v_j) = β(v_j, v_i) = `w`.
    pub fn set_beta(&mut self, i: usize, j: usize, w: Vec<Scalar>) -> Result<()> {
        if i >= self.dim_v || j >= self.dim_v {
            return Err(Error::DimensionMismatch {
                expected: self.dim_v,
                found: i.max(j) + 1,
            });
        }
        if w.len() != self.dim_w {
            return Err(Error::DimensionMismatch {
                expected: self.dim_w,
                found: w.len(),
            });
        }
        for s in &w {
            self.field.check(s)?;
        }
        for (a, b) in [(i, j), (j, i)] {
            let start = (a * self.dim_v + b) * self.dim_w;
            self.beta[start..start + self.dim_w].clone_from_slice(&w);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    /// Dimension of `m = V ⊕ W`.
    pub fn m_dim(&self) -> usize {
        self.dim_v + self.dim_w
    }

    /// W-coordinates of β(v_i, v_j).
    pub fn beta(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim_v + j) * self.dim_w;
        &self.beta[start..start + self.dim_w]
    }

    pub fn is_square_zero(&self) -> bool {
        self.beta.iter().all(Scalar::is_zero)
    }

    /// β(x, y) for arbitrary V-vectors.
    pub fn beta_apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim_w];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, b) in out.iter_mut().zip(self.beta(i, j)) {
                    *o = &*o + &(&c * b);
                }
            }
        }
        out
    }

    /// The element `(0, 0, β(v_i, ·)(v))` written in m-coordinates: the
    /// product of `v_i` with an element of `m` whose V part is `v`.
    fn times_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let e = unit_vector(self.field, self.dim_v, i);
        let mut out = vec![self.field.zero(); self.dim_v];
        out.extend(self.beta_apply(&e, v));
        out
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            lambda: self.field.one(),
            v: vec![self.field.zero(); self.dim_v],
            w: vec![self.field.zero(); self.dim_w],
        }
    }

    /// The element of `m` with the given `V ⊕ W` coordinates.
    pub fn element_of_m(&self, coords: &[Scalar]) -> Result<RingElement> {
        if coords.len() != self.m_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.m_dim(),
                found: coords.len(),
            });
        }
        Ok(RingElement {
            lambda: self.field.zero(),
            v: coords[..self.dim_v].to_vec(),
            w: coords[self.dim_v..].to_vec(),
        })
    }

    fn check_element(&self, a: &RingElement) -> Result<()> {
        for (len, expected) in [(a.v.len(), self.dim_v), (a.w.len(), self.dim_w)] {
            if len != expected {
                return Err(Error::DimensionMismatch { expected, found: len });
            }
        }
        self.field.check(&a.lambda)?;
        a.v.iter().chain(&a.w).try_for_each(|s| self.field.check(s))
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        let scale_add = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
            x.iter()
                .zip(y)
                .map(|(p, q)| &(&a.lambda * q) + &(&b.lambda * p))
                .collect()
        };
        let v = scale_add(&a.v, &b.v);
        let mut w = scale_add(&a.w, &b.w);
        for (o, x) in w.iter_mut().zip(self.beta_apply(&a.v, &b.v)) {
            *o = &*o + &x;
        }
        Ok(RingElement {
            lambda: &a.lambda * &b.lambda,
            v,
            w,
        })
    }

    fn check_ambient(&self, u: &SubspaceBasis) -> Result<()> {
        if u.ambient() != self.m_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.m_dim(),
                found: u.ambient(),
            });
        }
        if u.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: u.field(),
            });
        }
        Ok(())
    }

    /// Whether a subspace of `m` is closed under multiplication by `S`.
    pub fn is_ideal(&self, u: &SubspaceBasis) -> Result<bool> {
        self.check_ambient(u)?;
        for g in u.basis_vectors() {
            let v = &g[..self.dim_v];
            for i in 0..self.dim_v {
                if !u.contains(&self.times_basis(i, v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn ideal(&self, u: SubspaceBasis) -> Result<Ideal> {
        if self.is_ideal(&u)? {
            Ok(Ideal { space: u })
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            space: SubspaceBasis::zero(self.field, self.m_dim()),
        }
    }

    pub fn maximal_ideal(&self) -> Ideal {
        Ideal {
            space: SubspaceBasis::full(self.field, self.m_dim()),
        }
    }

    /// `0 × 0 × W`.
    pub fn w_ideal(&self) -> Ideal {
        let idx: Vec<usize> = (self.dim_v..self.m_dim()).collect();
        Ideal {
            space: SubspaceBasis::coordinate(self.field, self.m_dim(), &idx).expect("in range"),
        }
    }

    /// The radical `V⊥ = {a ∈ V : β(V, a) = 0}` as a subspace of `V`.
    pub fn radical(&self) -> SubspaceBasis {
        let mut rows = Vec::with_capacity(self.dim_v * self.dim_w);
        for i in 0..self.dim_v {
            for k in 0..self.dim_w {
                rows.push((0..self.dim_v).map(|j| self.beta(i, j)[k].clone()).collect());
            }
        }
        Matrix::from_rows(self.field, self.dim_v, rows)
            .expect("gram rows")
            .kernel()
    }

    /// `Soc(S) = 0 × V⊥ × W`.
    pub fn socle(&self) -> Ideal {
        let radical = self.radical();
        let mut rows: Vec<Vec<Scalar>> = radical
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                v.extend(std::iter::repeat_n(self.field.zero(), self.dim_w));
                v
            })
            .collect();
        for k in 0..self.dim_w {
            rows.push(unit_vector(self.field, self.m_dim(), self.dim_v + k));
        }
        Ideal {
            space: SubspaceBasis::span(self.field, self.m_dim(), rows).expect("socle rows"),
        }
    }

    /// `m² = 0 × 0 × Im(β)`.
    pub fn radical_square(&self) -> Ideal {
        let mut rows = Vec::new();
        for i in 0..self.dim_v {
            for j in i..self.dim_v {
                let mut row = vec![self.field.zero(); self.dim_v];
                row.extend(self.beta(i, j).iter().cloned());
                rows.push(row);
            }
        }
        Ideal {
            space: SubspaceBasis::span(self.field, self.m_dim(), rows).expect("image rows"),
        }
    }

    /// `m^k` computed from products of basis elements; `m^3 = 0` always.
    pub fn m_power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::Precondition("m_power needs k >= 1".into()));
        }
        let m_basis = self.maximal_ideal().space.basis_vectors();
        let mut current = self.maximal_ideal();
        for _ in 1..k {
            let mut rows = Vec::new();
            for a in current.space.basis_vectors() {
                for b in &m_basis {
                    let p = self.multiply(&self.element_of_m(&a)?, &self.element_of_m(b)?)?;
                    let mut row = p.v;
                    row.extend(p.w);
                    rows.push(row);
                }
            }
            current = Ideal {
                space: SubspaceBasis::span(self.field, self.m_dim(), rows)?,
            };
        }
        Ok(current)
    }

    /// `S/m² = F × V × W/Im(β)` with the zero form.
    pub fn modulo_radical_square(&self) -> TripleRing {
        TripleRing::square_zero(self.field, self.dim_v, self.dim_w - self.radical_square().dim())
    }

    /// `(I : K) = {r ∈ S : K r ⊆ I}`.
    pub fn colon(&self, i: &Ideal, k: &Ideal) -> Result<RingIdeal> {
        self.check_ambient(&i.space)?;
        self.check_ambient(&k.space)?;
        if k.space.is_subspace_of(&i.space)? {
            return Ok(RingIdeal::Whole);
        }
        // No unit lies in the colon, so solve for x ∈ m with k·x ∈ I for
        // every generator k. Only the V part of x meets β.
        let quotient = i.space.quotient();
        let mut rows = Vec::new();
        for g in k.space.basis_vectors() {
            let gv = &g[..self.dim_v];
            if gv.iter().all(Scalar::is_zero) {
                continue;
            }
            let images: Vec<Vec<Scalar>> = (0..self.dim_v)
                .map(|j| {
                    let mut y = vec![self.field.zero(); self.dim_v];
                    y.extend(self.beta_apply(gv, &unit_vector(self.field, self.dim_v, j)));
                    quotient.project(&y)
                })
                .collect::<Result<_>>()?;
            for c in 0..quotient.dim() {
                let mut row: Vec<Scalar> = images.iter().map(|img| img[c].clone()).collect();
                row.extend(std::iter::repeat_n(self.field.zero(), self.dim_w));
                rows.push(row);
            }
        }
        let space = Matrix::from_rows(self.field, self.m_dim(), rows)?.kernel();
        debug_assert!(self.is_ideal(&space).unwrap_or(false));
        Ok(RingIdeal::Proper(Ideal { space }))
    }

    /// `(I : K)` where `I` may already be the whole ring.
    pub fn colon_of(&self, i: &RingIdeal, k: &Ideal) -> Result<RingIdeal> {
        match i {
            RingIdeal::Whole => Ok(RingIdeal::Whole),
            RingIdeal::Proper(i) => self.colon(i, k),
        }
    }

    /// Whether `S/I` has an essential simple socle.
    ///
    /// Every module over `S` has an essential socle, so this reduces to
    /// `dim (I : m)/I = 1`, or `I = m` where `S/I` is simple.
    pub fn is_subdirectly_irreducible(&self, i: &Ideal) -> Result<bool> {
        if i.dim() == self.m_dim() {
            return Ok(true);
        }
        match self.colon(i, &self.maximal_ideal())? {
            RingIdeal::Whole => Ok(true),
            RingIdeal::Proper(c) => Ok(c.dim() - i.dim() == 1),
        }
    }

    /// Length of `S/I`, which equals its F-dimension.
    pub fn composition_length(&self, i: &Ideal) -> usize {
        1 + self.m_dim() - i.dim()
    }

    /// `V_f = {a ∈ m : f(m a) = 0}` for a functional on the socle.
    pub fn v_f_subspace(&self, f: &Functional) -> Result<Ideal> {
        if f.domain != self.socle().space {
            return Err(Error::FunctionalDomain);
        }
        let mut rows = Vec::with_capacity(self.dim_v);
        for i in 0..self.dim_v {
            let mut row = Vec::with_capacity(self.m_dim());
            for j in 0..self.dim_v {
                let y = self.times_basis(i, &unit_vector(self.field, self.dim_v, j));
                row.push(f.eval(&y)?);
            }
            row.extend(std::iter::repeat_n(self.field.zero(), self.dim_w));
            rows.push(row);
        }
        let space = Matrix::from_rows(self.field, self.m_dim(), rows)?.kernel();
        Ok(Ideal { space })
    }
}

impl fmt::Display for TripleRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dimV={} dimW={} beta{{", self.field, self.dim_v, self.dim_w)?;
        let mut first = true;
        for i in 0..self.dim_v {
            for j in i..self.dim_v {
                let w = self.beta(i, j);
                if w.iter().all(Scalar::is_zero) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                let coords: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "{i}{j}:[{}]", coords.join(" "))?;
            }
        }
        write!(f, "}}")
    }
}

impl Ideal {
    pub(crate) fn from_space_unchecked(space: SubspaceBasis) -> Self {
        Ideal { space }
    }

    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, other: &Ideal) -> bool {
        other.space.is_subspace_of(&self.space).unwrap_or(false)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            space: self.space.sum(&other.space)?,
        })
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            space: self.space.intersection(&other.space)?,
        })
    }
}

impl RingIdeal {
    pub fn proper(&self) -> Option<&Ideal> {
        match self {
            RingIdeal::Proper(i) => Some(i),
            RingIdeal::Whole => None,
        }
    }
}

impl Functional {
    pub fn new(domain: SubspaceBasis, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                found: coeffs.len(),
            });
        }
        for c in &coeffs {
            domain.field().check(c)?;
        }
        Ok(Functional { domain, coeffs })
    }

    pub fn zero(domain: SubspaceBasis) -> Self {
        let coeffs = vec![domain.field().zero(); domain.dim()];
        Functional { domain, coeffs }
    }

    /// The functional on `domain` with kernel `kernel` (a hyperplane of the
    /// domain) and value 1 at `x`.
    pub fn with_kernel(domain: SubspaceBasis, kernel: &SubspaceBasis, x: &[Scalar]) -> Result<Self> {
        let field = domain.field();
        let coords: Vec<Vec<Scalar>> = kernel
            .basis_vectors()
            .iter()
            .map(|k| domain.coordinates(k)?.ok_or(Error::Precondition("kernel outside domain".into())))
            .collect::<Result<_>>()?;
        let annihilator = Matrix::from_rows(field, domain.dim(), coords)?.kernel();
        if annihilator.dim() != 1 {
            return Err(Error::Precondition("kernel is not a hyperplane of the domain".into()));
        }
        let phi = annihilator.basis_vectors().remove(0);
        let xc = domain
            .coordinates(x)?
            .ok_or(Error::Precondition("point outside domain".into()))?;
        let at_x = crate::exactalg::dot(field, &phi, &xc);
        let scale = at_x
            .inv()
            .ok_or(Error::Precondition("point lies in the kernel".into()))?;
        Functional::new(domain, phi.iter().map(|c| c * &scale).collect())
    }

    pub fn domain(&self) -> &SubspaceBasis {
        &self.domain
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        let c = self
            .domain
            .coordinates(x)?
            .ok_or(Error::FunctionalDomain)?;
        Ok(crate::exactalg::dot(self.domain.field(), &c, &self.coeffs))
    }

    pub fn kernel(&self) -> SubspaceBasis {
        let field = self.domain.field();
        let row = Matrix::from_rows(field, self.domain.dim(), vec![self.coeffs.clone()])
            .expect("coefficient row");
        let coords = row.kernel();
        let vectors = coords
            .basis_vectors()
            .iter()
            .map(|c| self.domain.combine(c).expect("coordinates fit"))
            .collect();
        SubspaceBasis::span(field, self.domain.ambient(), vectors).expect("kernel vectors")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    /// dimV = dimW = 1, β(v0, v0) = 1: the graded ring of F[x]/(x³).
    fn cubic(field: Field) -> TripleRing {
        let mut s = TripleRing::square_zero(field, 1, 1);
        s.set_beta(0, 0, vec![field.one()]).unwrap();
        s
    }

    /// β(v0, v0) = w0, all other pairs zero.
    fn sparse(field: Field, dim_v: usize) -> TripleRing {
        let mut s = TripleRing::square_zero(field, dim_v, 1);
        s.set_beta(0, 0, vec![field.one()]).unwrap();
        s
    }

    fn identity_gram(field: Field, dim_v: usize) -> TripleRing {
        let mut s = TripleRing::square_zero(field, dim_v, 1);
        for i in 0..dim_v {
            s.set_beta(i, i, vec![field.one()]).unwrap();
        }
        s
    }

    fn elem(field: Field, l: i64, v: &[i64], w: &[i64]) -> RingElement {
        RingElement {
            lambda: field.from_i64(l),
            v: v.iter().map(|&x| field.from_i64(x)).collect(),
            w: w.iter().map(|&x| field.from_i64(x)).collect(),
        }
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
    fn multiplication_examples() {
        let q = Field::Rational;
        let s = cubic(q);
        let a = elem(q, 3, &[2], &[5]);
        assert_eq!(s.multiply(&s.one(), &a).unwrap(), a);
        let v = elem(q, 0, &[1], &[0]);
        assert_eq!(s.multiply(&v, &v).unwrap(), elem(q, 0, &[0], &[1]));
        let w = elem(q, 0, &[0], &[1]);
        assert_eq!(s.multiply(&w, &w).unwrap(), elem(q, 0, &[0], &[0]));
        let bad = elem(q, 0, &[1, 2], &[0]);
        assert!(s.multiply(&bad, &v).is_err());
    }

    #[test]
    fn asymmetric_beta_is_rejected() {
        let q = Field::Rational;
        let beta = vec![
            vec![vec![q.zero()], vec![q.one()]],
            vec![vec![q.zero()], vec![q.zero()]],
        ];
        assert_eq!(
            TripleRing::new(q, 2, 1, beta),
            Err(Error::NotSymmetric { i: 0, j: 1 })
        );
    }

    #[test]
    fn ideal_examples() {
        let f = gf2();
        let s = cubic(f);
        assert!(s.is_ideal(s.w_ideal().space()).unwrap());
        assert!(!s.is_ideal(&span(f, 2, &[&[1, 0]])).unwrap());
        assert!(s.is_ideal(s.maximal_ideal().space()).unwrap());
        assert!(s.is_ideal(&span(f, 3, &[])).is_err());
    }

    #[test]
    fn socle_examples() {
        let q = Field::Rational;
        let flat = TripleRing::square_zero(q, 2, 1);
        assert_eq!(flat.socle(), flat.maximal_ideal());

        let s = sparse(q, 3);
        let soc = s.socle();
        assert_eq!(soc.dim(), 3);
        assert_eq!(soc.space(), &span(q, 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));

        let s = identity_gram(q, 2);
        assert_eq!(s.socle(), s.w_ideal());
    }

    #[test]
    fn radical_square_examples() {
        let q = Field::Rational;
        assert_eq!(TripleRing::square_zero(q, 2, 2).radical_square().dim(), 0);
        assert_eq!(cubic(q).radical_square(), cubic(q).w_ideal());
        let mut s = TripleRing::square_zero(q, 2, 2);
        s.set_beta(0, 1, vec![q.from_i64(3), q.zero()]).unwrap();
        assert_eq!(s.radical_square().space(), &span(q, 4, &[&[0, 0, 1, 0]]));
    }

    #[test]
    fn colon_examples() {
        let q = Field::Rational;
        let s = identity_gram(q, 2);
        let m = s.maximal_ideal();
        assert_eq!(s.colon(&s.zero_ideal(), &m).unwrap(), RingIdeal::Proper(s.socle()));
        assert_eq!(s.colon(&m, &m).unwrap(), RingIdeal::Whole);

        let c = cubic(q);
        assert_eq!(
            c.colon(&c.w_ideal(), &c.maximal_ideal()).unwrap(),
            RingIdeal::Proper(c.maximal_ideal())
        );
    }

    #[test]
    fn subdirect_irreducibility_examples() {
        let f = gf2();
        let c = cubic(f);
        assert!(c.is_subdirectly_irreducible(&c.maximal_ideal()).unwrap());
        assert!(c.is_subdirectly_irreducible(&c.zero_ideal()).unwrap());
        let flat = TripleRing::square_zero(f, 2, 1);
        assert!(!flat.is_subdirectly_irreducible(&flat.zero_ideal()).unwrap());
    }

    #[test]
    fn composition_length_examples() {
        let q = Field::Rational;
        let c = cubic(q);
        assert_eq!(c.composition_length(&c.maximal_ideal()), 1);
        assert_eq!(c.composition_length(&c.zero_ideal()), 3);
        let flat = TripleRing::square_zero(q, 3, 2);
        let line = flat.ideal(span(q, 5, &[&[1, 0, 0, 0, 0]])).unwrap();
        assert_eq!(flat.composition_length(&line), 1 + 3 + 2 - 1);
    }

    #[test]
    fn v_f_examples() {
        let q = Field::Rational;
        let s = sparse(q, 3);
        let soc = s.socle().space().clone();
        assert_eq!(
            s.v_f_subspace(&Functional::zero(soc.clone())).unwrap(),
            s.maximal_ideal()
        );
        // Dual of the W coordinate.
        let w_dual = Functional::with_kernel(
            soc.clone(),
            &span(q, 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]),
            &[q.zero(), q.zero(), q.zero(), q.one()],
        )
        .unwrap();
        assert_eq!(
            s.v_f_subspace(&w_dual).unwrap().space(),
            &span(q, 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );

        let g = identity_gram(q, 2);
        let f = Functional::new(g.socle().space().clone(), vec![q.one()]).unwrap();
        assert_eq!(g.v_f_subspace(&f).unwrap(), g.w_ideal());
    }

    #[test]
    fn functional_on_wrong_domain_is_rejected() {
        let q = Field::Rational;
        let s = sparse(q, 3);
        let f = Functional::new(s.w_ideal().space().clone(), vec![q.one()]).unwrap();
        assert_eq!(s.v_f_subspace(&f), Err(Error::FunctionalDomain));
    }

    #[test]
    fn cube_of_maximal_ideal_vanishes() {
        let f = Field::prime(3).unwrap();
        let mut s = TripleRing::square_zero(f, 2, 2);
        s.set_beta(0, 0, vec![f.one(), f.from_i64(2)]).unwrap();
        s.set_beta(0, 1, vec![f.zero(), f.one()]).unwrap();
        s.set_beta(1, 1, vec![f.from_i64(2), f.zero()]).unwrap();
        let ms: Vec<RingElement> = f
            .vectors(4)
            .unwrap()
            .into_iter()
            .map(|c| s.element_of_m(&c).unwrap())
            .collect();
        let zero = elem(f, 0, &[0, 0], &[0, 0]);
        for a in ms.iter().step_by(7) {
            for b in ms.iter().step_by(5) {
                let ab = s.multiply(a, b).unwrap();
                for c in ms.iter().step_by(11) {
                    assert_eq!(s.multiply(&ab, c).unwrap(), zero);
                }
            }
        }
    }
}
