//! Sequence-presented rings `S = F × V × F` with countably infinite `V`.
//!
//! The form on `V` is either a finite table of pair values or a Hankel rule
//! `β(v_i, v_j) = h_{i+j}`. For Hankel forms the radical `V⊥` is the kernel of
//! the infinite Hankel matrix, so `dim V/V⊥` is its rank. An infinite Hankel
//! matrix has finite rank exactly when the sequence satisfies a linear
//! recurrence (Kronecker), and the rank is then the order of the shortest
//! such recurrence.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar};

/// A sequence `h_0, h_1, ..` of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HankelSeq {
    /// Finite prefix followed by zeros.
    Explicit { field: Field, prefix: Vec<Scalar> },
    /// `h_{n+d} = Σ_{i<d} coeffs[i] h_{n+i}` with `h_0..h_{d-1} = init`.
    Recurrence {
        field: Field,
        init: Vec<Scalar>,
        coeffs: Vec<Scalar>,
    },
    /// `h_n = 1/(n+1)` over the rationals.
    Hilbert,
}

/// The bilinear form on `V = span{v_0, v_1, ..}` with values in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    /// Finitely many nonzero `β(v_i, v_j)`, keyed by `(i, j)` with `i <= j`.
    FiniteSupport {
        field: Field,
        entries: BTreeMap<(usize, usize), Scalar>,
    },
    Hankel(HankelSeq),
}

/// `F × V × F` with the given form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTriple {
    field: Field,
    form: SeqSpec,
}

/// Rank of a bilinear form, or a lower bound when only a window was examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormRank {
    Finite(usize),
    AtLeast(usize),
}

impl fmt::Display for FormRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormRank::Finite(r) => write!(f, "FiniteRank {r}"),
            FormRank::AtLeast(n) => write!(f, "AtLeast {n}"),
        }
    }
}

/// Whether the functional defining the form lies in the finite dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteDual {
    /// The largest ideal inside the kernel has this codimension.
    InFiniteDual(usize),
    NotWitnessed(usize),
}

/// `h_{n+order} = Σ coeffs[i] h_{n+i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub order: usize,
    pub coeffs: Vec<Scalar>,
}

impl HankelSeq {
    pub fn field(&self) -> Field {
        match self {
            HankelSeq::Explicit { field, .. } | HankelSeq::Recurrence { field, .. } => *field,
            HankelSeq::Hilbert => Field::Rational,
        }
    }

    pub fn constant_one(field: Field) -> Self {
        HankelSeq::Recurrence {
            field,
            init: vec![field.one()],
            coeffs: vec![field.one()],
        }
    }

    pub fn fibonacci(field: Field) -> Self {
        HankelSeq::Recurrence {
            field,
            init: vec![field.one(), field.one()],
            coeffs: vec![field.one(), field.one()],
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            HankelSeq::Explicit { field, prefix } => prefix.iter().try_for_each(|s| field.check(s)),
            HankelSeq::Recurrence { field, init, coeffs } => {
                if init.len() != coeffs.len() {
                    return Err(Error::DimensionMismatch {
                        expected: coeffs.len(),
                        found: init.len(),
                    });
                }
                init.iter().chain(coeffs).try_for_each(|s| field.check(s))
            }
            HankelSeq::Hilbert => Ok(()),
        }
    }

    /// `h_0, .., h_{n-1}`.
    pub fn terms(&self, n: usize) -> Vec<Scalar> {
        match self {
            HankelSeq::Explicit { field, prefix } => (0..n)
                .map(|i| prefix.get(i).cloned().unwrap_or_else(|| field.zero()))
                .collect(),
            HankelSeq::Recurrence { field, init, coeffs } => {
                let d = coeffs.len();
                let mut out: Vec<Scalar> = init.iter().take(n).cloned().collect();
                while out.len() < n {
                    if d == 0 {
                        out.push(field.zero());
                        continue;
                    }
                    let base = out.len() - d;
                    let next = coeffs
                        .iter()
                        .enumerate()
                        .fold(field.zero(), |acc, (i, a)| acc + &(a * &out[base + i]));
                    out.push(next);
                }
                out
            }
            HankelSeq::Hilbert => (0..n)
                .map(|i| {
                    Scalar::Rational(BigRational::new(BigInt::one(), BigInt::from(i as u64 + 1)))
                })
                .collect(),
        }
    }

    pub fn seq_value(&self, n: usize) -> Scalar {
        self.terms(n + 1).pop().expect("n + 1 terms")
    }

    /// `N × N` matrix with entry `(i, j) = h_{i+j}`.
    pub fn hankel_matrix(&self, n: usize) -> Matrix {
        let terms = self.terms(2 * n);
        let rows = (0..n).map(|i| terms[i..i + n].to_vec()).collect();
        Matrix::from_rows(self.field(), n, rows).expect("square hankel")
    }

    /// Shortest recurrence fitting `h_0..h_{window-1}` with at least one
    /// equation beyond a square system (`2·order < window`).
    pub fn minimal_recurrence(&self, window: usize) -> Option<LinearRecurrence> {
        let terms = self.terms(window);
        (0..)
            .take_while(|d| 2 * d < window)
            .find_map(|d| fit_recurrence(self.field(), &terms, d))
    }

    /// Whether every leading Hankel determinant up to `N × N` is nonzero.
    pub fn nondegeneracy_certificate(&self, n: usize) -> bool {
        let minors = self
            .hankel_matrix(n)
            .leading_principal_minors()
            .expect("square");
        minors.len() == n && minors.iter().all(|m| !m.is_zero())
    }

    /// Rank of the infinite Hankel matrix, exact for the declared variants.
    pub fn form_rank(&self, window: usize) -> FormRank {
        match self {
            HankelSeq::Explicit { prefix, .. } => {
                let len = prefix.iter().rposition(|s| !s.is_zero()).map_or(0, |p| p + 1);
                FormRank::Finite(self.hankel_matrix(len).rank())
            }
            HankelSeq::Recurrence { coeffs, .. } => {
                let d = coeffs.len();
                if d == 0 {
                    return FormRank::Finite(0);
                }
                // The sequence has linear complexity at most d, so the
                // first 2d+1 terms determine the minimal recurrence.
                let Some(rec) = self.minimal_recurrence(2 * d + 1) else {
                    return FormRank::AtLeast(window);
                };
                if self.satisfies(&rec, 4 * d + 2) {
                    FormRank::Finite(rec.order)
                } else {
                    FormRank::AtLeast(window)
                }
            }
            HankelSeq::Hilbert => {
                let r = self.hankel_matrix(window).rank();
                FormRank::AtLeast(r)
            }
        }
    }

    fn satisfies(&self, rec: &LinearRecurrence, n: usize) -> bool {
        let t = self.terms(n);
        let field = self.field();
        (rec.order..n).all(|k| {
            let base = k - rec.order;
            let pred = rec
                .coeffs
                .iter()
                .enumerate()
                .fold(field.zero(), |acc, (i, a)| acc + &(a * &t[base + i]));
            pred == t[k]
        })
    }

    /// Membership of the defining functional in the finite dual of `F[x]`.
    pub fn finite_dual_membership(&self, window: usize) -> FiniteDual {
        match self.form_rank(window) {
            FormRank::Finite(r) => FiniteDual::InFiniteDual(r),
            FormRank::AtLeast(_) => FiniteDual::NotWitnessed(window),
        }
    }
}

/// Solves `h_{n+d} = Σ a_i h_{n+i}` for all `n + d < terms.len()`.
fn fit_recurrence(field: Field, terms: &[Scalar], d: usize) -> Option<LinearRecurrence> {
    let equations = terms.len() - d;
    let rows = (0..equations)
        .map(|n| {
            let mut row = terms[n..n + d].to_vec();
            row.push(terms[n + d].clone());
            row
        })
        .collect();
    let e = Matrix::from_rows(field, d + 1, rows).ok()?.echelon();
    if e.pivots.last() == Some(&d) {
        return None;
    }
    let mut coeffs = vec![field.zero(); d];
    for (r, &p) in e.pivots.iter().enumerate() {
        coeffs[p] = e.matrix[(r, d)].clone();
    }
    Some(LinearRecurrence { order: d, coeffs })
}

/// `c_n^4 / c_{2n}` with `c_n = Π_{i=1}^{n-1} i^{n-i}`: the determinant of
/// the `n × n` Hilbert matrix.
pub fn hilbert_det_formula(n: usize) -> Scalar {
    let c = |k: usize| -> BigInt {
        (1..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i).pow((k - i) as u32))
    };
    let cn = c(n);
    Scalar::Rational(BigRational::new(cn.pow(4), c(2 * n)))
}

impl SeqSpec {
    pub fn field(&self) -> Field {
        match self {
            SeqSpec::FiniteSupport { field, .. } => *field,
            SeqSpec::Hankel(s) => s.field(),
        }
    }

    /// Builds a finite-support form from `(i, j, value)` triples; both
    /// orders of a pair may appear but must agree.
    pub fn finite_support(field: Field, pairs: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut entries: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, j, value) in pairs {
            field.check(value)?;
            let key = ((*i).min(*j), (*i).max(*j));
            if let Some(prev) = entries.get(&key) {
                if prev != value {
                    return Err(Error::NotSymmetric { i: *i, j: *j });
                }
            }
            entries.insert(key, value.clone());
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(SeqSpec::FiniteSupport { field, entries })
    }

    pub fn is_zero_form(&self) -> bool {
        match self {
            SeqSpec::FiniteSupport { entries, .. } => entries.is_empty(),
            SeqSpec::Hankel(HankelSeq::Explicit { prefix, .. }) => prefix.iter().all(Scalar::is_zero),
            SeqSpec::Hankel(HankelSeq::Recurrence { init, .. }) => init.iter().all(Scalar::is_zero),
            SeqSpec::Hankel(HankelSeq::Hilbert) => false,
        }
    }

    /// Gram matrix on `v_0..v_{n-1}`.
    pub fn gram(&self, n: usize) -> Matrix {
        match self {
            SeqSpec::FiniteSupport { field, entries } => {
                let mut m = Matrix::zeros(*field, n, n);
                for (&(i, j), v) in entries {
                    if j < n {
                        m.set(i, j, v.clone());
                        m.set(j, i, v.clone());
                    }
                }
                m
            }
            SeqSpec::Hankel(s) => s.hankel_matrix(n),
        }
    }

    /// `dim V/V⊥`: exact for finite tables and declared sequence laws; for
    /// the Hilbert sequence only a lower bound from the `window × window`
    /// block.
    pub fn form_rank(&self, window: usize) -> FormRank {
        match self {
            SeqSpec::FiniteSupport { entries, .. } => {
                let n = entries.keys().map(|&(_, j)| j + 1).max().unwrap_or(0);
                FormRank::Finite(self.gram(n).rank())
            }
            SeqSpec::Hankel(s) => s.form_rank(window),
        }
    }
}

impl SequenceTriple {
    pub fn new(field: Field, form: SeqSpec) -> Result<Self> {
        if let SeqSpec::Hankel(s) = &form {
            if matches!(s, HankelSeq::Hilbert) && field != Field::Rational {
                return Err(Error::HilbertNeedsRationals(field));
            }
            s.check()?;
        }
        if form.field() != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: form.field(),
            });
        }
        Ok(SequenceTriple { field, form })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn form(&self) -> &SeqSpec {
        &self.form
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn explicit(values: &[i64]) -> HankelSeq {
        HankelSeq::Explicit {
            field: q(),
            prefix: values.iter().map(|&x| q().from_i64(x)).collect(),
        }
    }

    #[test]
    fn seq_values() {
        assert_eq!(HankelSeq::Hilbert.seq_value(0), q().one());
        assert_eq!(HankelSeq::Hilbert.seq_value(3), q().ratio(1, 4).unwrap());
        assert_eq!(HankelSeq::constant_one(q()).seq_value(100), q().one());
        assert_eq!(HankelSeq::fibonacci(q()).seq_value(7), q().from_i64(21));
    }

    #[test]
    fn hankel_matrices() {
        let h = HankelSeq::Hilbert.hankel_matrix(2);
        let expected = Matrix::from_rows(
            q(),
            2,
            vec![
                vec![q().one(), q().ratio(1, 2).unwrap()],
                vec![q().ratio(1, 2).unwrap(), q().ratio(1, 3).unwrap()],
            ],
        )
        .unwrap();
        assert_eq!(h, expected);
        let ones = HankelSeq::constant_one(q()).hankel_matrix(3);
        assert_eq!(ones, Matrix::from_i64(q(), &[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]));
        assert_eq!(explicit(&[1]).hankel_matrix(2), Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]));
        assert_eq!(ones, ones.transpose());
    }

    #[test]
    fn hilbert_formula_spot_values() {
        assert_eq!(hilbert_det_formula(1), q().one());
        assert_eq!(hilbert_det_formula(2), q().ratio(1, 12).unwrap());
        assert_eq!(hilbert_det_formula(3), q().ratio(1, 2160).unwrap());
        // Independent cofactor values.
        assert_eq!(hilbert_det_formula(4), q().ratio(1, 6_048_000).unwrap());
        assert_eq!(hilbert_det_formula(5), q().ratio(1, 266_716_800_000).unwrap());
    }

    #[test]
    fn form_rank_examples() {
        let sparse = SeqSpec::finite_support(q(), &[(0, 0, q().one())]).unwrap();
        assert_eq!(sparse.form_rank(16), FormRank::Finite(1));
        assert_eq!(
            SeqSpec::Hankel(HankelSeq::Hilbert).form_rank(5),
            FormRank::AtLeast(5)
        );
        assert_eq!(
            SeqSpec::Hankel(HankelSeq::constant_one(q())).form_rank(16),
            FormRank::Finite(1)
        );
        assert_eq!(
            SeqSpec::Hankel(HankelSeq::fibonacci(q())).form_rank(16),
            FormRank::Finite(2)
        );
        assert_eq!(explicit(&[0, 1]).form_rank(4), FormRank::Finite(2));
        assert_eq!(explicit(&[0, 0, 0]).form_rank(4), FormRank::Finite(0));
    }

    #[test]
    fn recurrence_with_redundant_order() {
        // h_{n+2} = h_{n+1} with h = 1, 1, 1, ..: declared order 2, rank 1.
        let s = HankelSeq::Recurrence {
            field: q(),
            init: vec![q().one(), q().one()],
            coeffs: vec![q().zero(), q().one()],
        };
        assert_eq!(s.form_rank(8), FormRank::Finite(1));
        // h = 0, 1, 1, 1, ..: rank 2.
        let s = HankelSeq::Recurrence {
            field: q(),
            init: vec![q().zero(), q().one()],
            coeffs: vec![q().zero(), q().one()],
        };
        assert_eq!(s.form_rank(8), FormRank::Finite(2));
    }

    #[test]
    fn minimal_recurrences() {
        let ones = HankelSeq::constant_one(q()).minimal_recurrence(6).unwrap();
        assert_eq!(ones, LinearRecurrence { order: 1, coeffs: vec![q().one()] });
        let fib = explicit(&[1, 1, 2, 3, 5, 8]).minimal_recurrence(6).unwrap();
        assert_eq!(fib, LinearRecurrence { order: 2, coeffs: vec![q().one(), q().one()] });
        assert_eq!(HankelSeq::Hilbert.minimal_recurrence(8), None);
    }

    #[test]
    fn nondegeneracy() {
        assert!(HankelSeq::Hilbert.nondegeneracy_certificate(10));
        assert!(!explicit(&[1]).nondegeneracy_certificate(2));
        assert!(!HankelSeq::constant_one(q()).nondegeneracy_certificate(2));
    }

    #[test]
    fn finite_dual_examples() {
        assert_eq!(
            HankelSeq::constant_one(q()).finite_dual_membership(16),
            FiniteDual::InFiniteDual(1)
        );
        assert_eq!(
            HankelSeq::Hilbert.finite_dual_membership(10),
            FiniteDual::NotWitnessed(10)
        );
        assert_eq!(explicit(&[1]).finite_dual_membership(4), FiniteDual::InFiniteDual(1));
    }

    #[test]
    fn hilbert_needs_characteristic_zero() {
        let f = Field::prime(5).unwrap();
        assert_eq!(
            SequenceTriple::new(f, SeqSpec::Hankel(HankelSeq::Hilbert)),
            Err(Error::HilbertNeedsRationals(f))
        );
    }

    #[test]
    fn conflicting_finite_support_is_rejected() {
        let err = SeqSpec::finite_support(q(), &[(0, 1, q().one()), (1, 0, q().zero())]);
        assert_eq!(err, Err(Error::NotSymmetric { i: 1, j: 0 }));
    }

    #[test]
    fn gf_recurrences() {
        let f = Field::prime(2).unwrap();
        // Fibonacci mod 2: 1 1 0 1 1 0 ..; still order 2.
        let s = HankelSeq::fibonacci(f);
        assert_eq!(s.form_rank(8), FormRank::Finite(2));
    }
}
