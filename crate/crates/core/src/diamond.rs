//! Deciding whether injective hulls of simple modules are locally Artinian.
//!
//! For a cube-zero quasi-local ring the property holds iff `m/V_f` is finite
//! dimensional for every functional `f` on the socle, where
//! `V_f = {a ∈ m : f(m a) = 0}`. Finite-dimensional rings always satisfy it.
//! For `F × V × F` with a form on `V`, `m·a ⊆ 0 × 0 × Im β`, so every nonzero
//! `f` gives `m/V_f ≅ V/V⊥` and the question becomes whether the form has
//! finite rank.

use std::fmt;

use crate::algpres::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{unit_vector, Field, Matrix, Scalar, SubspaceBasis};
use crate::hankel::{hilbert_det_formula, FormRank, HankelSeq, SeqSpec, SequenceTriple};
use crate::ringcore::{Functional, TripleRing};

/// Default number of Hankel rows and columns examined.
pub const DEFAULT_WINDOW: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "HOLDS",
            Outcome::Fails => "FAILS",
            Outcome::Unknown => "UNKNOWN",
        })
    }
}

/// The structural fact a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// Square-zero maximal ideal.
    SquareZero,
    /// `R/Soc(R)` Artinian.
    SocArtinian,
    /// `m/Soc(R)` finitely generated.
    CubeZeroLocal1,
    /// `Soc(R)` finitely generated: holds iff `m/Soc(R)` is.
    CubeZeroLocal2,
    /// A factor whose graded ring is `F × V × F` with non-degenerate form.
    BadFactor,
}

impl Lemma {
    pub fn tag(self) -> &'static str {
        match self {
            Lemma::SquareZero => "squarezero",
            Lemma::SocArtinian => "soc-artinian",
            Lemma::CubeZeroLocal1 => "cube-zerolocal(1)",
            Lemma::CubeZeroLocal2 => "cube-zerolocal(2)",
            Lemma::BadFactor => "badfactor",
        }
    }
}

/// Certificate that `R` has a factor with graded ring `F × V × F`, `V`
/// infinite dimensional and the form non-degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadFactorCert {
    /// Value of the socle functional on the `W = F` generator.
    pub functional: Scalar,
    /// Rank evidence for the form `f ∘ β` on the examined window.
    pub corank: FormRank,
    pub window: usize,
    /// `det(B_k)` for `k = 1..=window`.
    pub leading_minors: Vec<Scalar>,
    /// Every `det(B_k)` is nonzero for all `k`, by a closed form.
    pub closed_form: bool,
}

impl BadFactorCert {
    /// Re-checks the stored minors: all `window` of them present and nonzero.
    pub fn nondegenerate(&self) -> bool {
        self.leading_minors.len() == self.window && self.leading_minors.iter().all(|m| !m.is_zero())
    }

    pub fn description(&self) -> String {
        format!(
            "gr(R/I) = F × V × F with V spanned by the images of v_0, v_1, ..; \
             det(B_k) != 0 for k = 1..{}{}",
            self.window,
            if self.closed_form {
                " and for every k by the closed form c_k^4/c_{2k}"
            } else {
                ""
            }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Every quotient has finite length; `length` is that of `R` itself.
    ArtinianFiniteDim { length: usize },
    /// `dim m/Soc(R)` (equivalently `dim m/V_f`) is finite.
    SocleCodimFinite(usize),
    BadFunctional(String),
    BadFactor(BadFactorCert),
    WindowExhausted(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Witness,
    pub lemma: Option<Lemma>,
}

impl Verdict {
    fn holds(witness: Witness, lemma: Option<Lemma>) -> Self {
        debug_assert!(matches!(
            witness,
            Witness::ArtinianFiniteDim { .. } | Witness::SocleCodimFinite(_)
        ));
        Verdict {
            outcome: Outcome::Holds,
            witness,
            lemma,
        }
    }

    fn fails(witness: Witness, lemma: Lemma) -> Self {
        debug_assert!(matches!(witness, Witness::BadFunctional(_) | Witness::BadFactor(_)));
        Verdict {
            outcome: Outcome::Fails,
            witness,
            lemma: Some(lemma),
        }
    }

    fn unknown(window: usize) -> Self {
        Verdict {
            outcome: Outcome::Unknown,
            witness: Witness::WindowExhausted(window),
            lemma: None,
        }
    }

    /// One-line summary, e.g. `HOLDS (cube-zerolocal(1)): dim m/Soc = 1`.
    pub fn summary(&self) -> String {
        let label = match (self.lemma, &self.witness) {
            (Some(l), _) => format!(" ({})", l.tag()),
            (None, Witness::ArtinianFiniteDim { .. }) => " (Artinian)".to_string(),
            (None, _) => String::new(),
        };
        let detail = match &self.witness {
            Witness::ArtinianFiniteDim { length } => format!("finite length {length}"),
            Witness::SocleCodimFinite(r) => format!("dim m/Soc = {r}"),
            Witness::BadFunctional(d) => d.clone(),
            Witness::BadFactor(_) => "non-degenerate F×V×F factor, rank unbounded".to_string(),
            Witness::WindowExhausted(n) => format!("window {n} exhausted"),
        };
        format!("{}{}: {}", self.outcome, label, detail)
    }
}

/// A ring in one of the supported presentations.
#[derive(Clone, Copy, Debug)]
pub enum RingRef<'a> {
    Triple(&'a TripleRing),
    Sequence(&'a SequenceTriple),
    Presented(&'a PresentedAlgebra),
}

/// Decides the property for any supported presentation.
pub fn decide_diamond(ring: RingRef<'_>, window: usize) -> Result<Verdict> {
    if window == 0 {
        return Err(Error::Precondition("window must be at least 1".into()));
    }
    match ring {
        RingRef::Triple(s) => Ok(Verdict::holds(
            Witness::ArtinianFiniteDim {
                length: 1 + s.m_dim(),
            },
            None,
        )),
        // Routed through gr so the graded code path decides.
        RingRef::Presented(a) => decide_diamond(RingRef::Triple(&a.gr()?), window),
        RingRef::Sequence(s) => {
            match v_f_corank(s, &s.field().one(), window) {
                FormRank::Finite(r) => {
                    let lemma = if r == 0 {
                        Lemma::SquareZero
                    } else {
                        Lemma::CubeZeroLocal1
                    };
                    Ok(Verdict::holds(Witness::SocleCodimFinite(r), Some(lemma)))
                }
                FormRank::AtLeast(_) => match bad_factor(s, window) {
                    Some(cert) => Ok(Verdict::fails(Witness::BadFactor(cert), Lemma::BadFactor)),
                    None => Ok(Verdict::unknown(window)),
                },
            }
        }
    }
}

/// `dim m/V_f` for the socle functional taking value `f` on `0 × 0 × F`.
pub fn v_f_corank(ring: &SequenceTriple, f: &Scalar, window: usize) -> FormRank {
    if f.is_zero() {
        return FormRank::Finite(0);
    }
    // f scales the form; the rank is unchanged.
    ring.form().form_rank(window)
}

/// Only the Hilbert sequence has a closed form proving every leading Hankel
/// determinant nonzero, so it is the only source of unconditional failures.
fn bad_factor(ring: &SequenceTriple, window: usize) -> Option<BadFactorCert> {
    let SeqSpec::Hankel(seq @ HankelSeq::Hilbert) = ring.form() else {
        return None;
    };
    let minors = seq
        .hankel_matrix(window)
        .leading_principal_minors()
        .expect("square");
    let closed_form = (1..=window).all(|k| {
        let formula = hilbert_det_formula(k);
        !formula.is_zero() && minors.get(k - 1) == Some(&formula)
    });
    let cert = BadFactorCert {
        functional: ring.field().one(),
        corank: seq.form_rank(window),
        window,
        leading_minors: minors,
        closed_form,
    };
    (cert.closed_form && cert.nondegenerate()).then_some(cert)
}

/// The certificate behind a failing verdict, if the ring fails.
pub fn find_bad_factor(ring: &SequenceTriple, window: usize) -> Result<Option<BadFactorCert>> {
    let verdict = decide_diamond(RingRef::Sequence(ring), window)?;
    Ok(match verdict.witness {
        Witness::BadFactor(cert) => Some(cert),
        _ => None,
    })
}

/// Verdicts that follow from the socle alone, tagged with the lemma used.
pub fn shortcut_lemmas(ring: RingRef<'_>) -> Result<Option<Verdict>> {
    match ring {
        RingRef::Triple(s) => Ok(Some(finite_shortcut(s.is_square_zero(), s.m_dim() - s.socle().dim(), 1 + s.m_dim()))),
        RingRef::Presented(a) => {
            a.validate()
                .map_err(|issue| Error::InvalidAlgebra(issue.to_string()))?;
            let square_zero = a.m_power(2)?.is_zero();
            let codim = a.dim() - 1 - a.socle().dim();
            Ok(Some(finite_shortcut(square_zero, codim, a.dim())))
        }
        RingRef::Sequence(s) => {
            if s.form().is_zero_form() {
                return Ok(Some(Verdict::holds(
                    Witness::SocleCodimFinite(0),
                    Some(Lemma::SquareZero),
                )));
            }
            Ok(socle_codim(s.form()).map(|codim| match codim {
                Some(r) => Verdict::holds(Witness::SocleCodimFinite(r), Some(Lemma::CubeZeroLocal1)),
                None => Verdict::fails(
                    Witness::BadFunctional(
                        "Soc = 0×0×F is one-dimensional and m/Soc ≅ V is infinite-dimensional"
                            .to_string(),
                    ),
                    Lemma::CubeZeroLocal2,
                ),
            }))
        }
    }
}

fn finite_shortcut(square_zero: bool, socle_codim: usize, length: usize) -> Verdict {
    if square_zero {
        Verdict::holds(Witness::ArtinianFiniteDim { length }, Some(Lemma::SquareZero))
    } else {
        Verdict::holds(Witness::SocleCodimFinite(socle_codim), Some(Lemma::SocArtinian))
    }
}

/// `Some(Some(r))` when `dim m/Soc = r` is known, `Some(None)` when the
/// socle is `0 × 0 × F` and `m/Soc` is infinite, `None` when undetermined.
///
/// Uses plain Gram-block ranks rather than recurrence detection, so it
/// serves as an independent route to the decision procedure's answer.
fn socle_codim(form: &SeqSpec) -> Option<Option<usize>> {
    match form {
        SeqSpec::FiniteSupport { entries, .. } => {
            let n = entries.keys().map(|&(_, j)| j + 1).max().unwrap_or(0);
            Some(Some(form.gram(n).rank()))
        }
        SeqSpec::Hankel(HankelSeq::Explicit { prefix, .. }) => Some(Some(form.gram(prefix.len()).rank())),
        // A sequence with a recurrence of order d has Hankel rank at most d,
        // attained on the leading d × d block.
        SeqSpec::Hankel(HankelSeq::Recurrence { coeffs, .. }) => {
            Some(Some(form.gram(coeffs.len()).rank()))
        }
        SeqSpec::Hankel(HankelSeq::Hilbert) => {
            // det(B_{n-1}) = c_n^4/c_{2n} is never zero, so V⊥ = 0.
            Some(None)
        }
    }
}

/// Outcome of comparing `V_f` in `gr(A)` with `gr(V_g)` in `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrEquivalenceReport {
    pub functionals: usize,
    pub failures: Vec<String>,
}

/// Functionals on a space of dimension `n` to sweep: all of them over a
/// finite field, otherwise zero, the dual basis and the all-ones functional.
pub(crate) fn functional_sweep(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    if let Some(all) = field.vectors(n) {
        return all;
    }
    let mut out = vec![vec![field.zero(); n]];
    out.extend((0..n).map(|i| unit_vector(field, n, i)));
    if n > 1 {
        out.push(vec![field.one(); n]);
    }
    out
}

/// For every swept functional `f` on `Soc(gr A)`, builds
/// `g(a) = f(0, a + m², π(a))` on `Soc(A)` and checks `V_f = gr(V_g)`.
pub fn check_gr_equivalence(a: &PresentedAlgebra) -> Result<GrEquivalenceReport> {
    if a.dim() == 1 {
        // A field: m = 0, so the only functional is zero and both sides are 0.
        a.gr()?;
        return Ok(GrEquivalenceReport {
            functionals: 1,
            failures: Vec::new(),
        });
    }
    let graded = a.gr()?;
    let coords = a.graded_coords()?;
    let field = a.field();
    let soc_a = a.socle();
    let soc_gr = graded.socle();
    let mut report = GrEquivalenceReport::default();

    if a.gr_ideal(&soc_a)? != soc_gr {
        report
            .failures
            .push(format!("gr(Soc(A)) = {} but Soc(gr A) = {}", a.gr_ideal(&soc_a)?.space(), soc_gr.space()));
        return Ok(report);
    }

    // Graded coordinates of each canonical basis vector of Soc(A).
    let soc_basis_graded: Vec<Vec<Scalar>> = soc_a
        .basis_vectors()
        .iter()
        .map(|s| {
            let mut v = coords.v_part(s)?;
            v.extend(coords.w_part(s)?);
            Ok(v)
        })
        .collect::<Result<_>>()?;

    for coeffs in functional_sweep(field, soc_gr.dim()) {
        report.functionals += 1;
        let f = Functional::new(soc_gr.space().clone(), coeffs.clone())?;
        let g_values = soc_basis_graded
            .iter()
            .map(|x| f.eval(x))
            .collect::<Result<Vec<_>>>()?;
        let g = Functional::new(soc_a.clone(), g_values)?;
        let v_g = v_g_subspace(a, &g)?;
        let lhs = graded.v_f_subspace(&f)?;
        let rhs = a.gr_ideal(&v_g)?;
        if lhs != rhs {
            report.failures.push(format!(
                "f = {:?}: V_f = {} but gr(V_g) = {}",
                coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                lhs.space(),
                rhs.space()
            ));
        }
    }
    Ok(report)
}

/// `V_g = {a ∈ m : g(m a) = 0}` in `A`, for `g` on `Soc(A)`.
pub fn v_g_subspace(a: &PresentedAlgebra, g: &Functional) -> Result<SubspaceBasis> {
    if g.domain() != &a.socle() {
        return Err(Error::FunctionalDomain);
    }
    let field = a.field();
    let n = a.dim();
    let mut rows = vec![unit_vector(field, n, 0)];
    for i in 1..n {
        let mut row = vec![field.zero()];
        for j in 1..n {
            row.push(g.eval(a.basis_product(i, j))?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(field, n, rows)?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn q() -> Field {
        Field::Rational
    }

    fn seq(form: SeqSpec) -> SequenceTriple {
        SequenceTriple::new(form.field(), form).unwrap()
    }

    fn sparse() -> SequenceTriple {
        seq(SeqSpec::finite_support(q(), &[(0, 0, q().one())]).unwrap())
    }

    fn hilbert() -> SequenceTriple {
        seq(SeqSpec::Hankel(HankelSeq::Hilbert))
    }

    fn truncated_cubic(field: Field) -> PresentedAlgebra {
        let mut a = PresentedAlgebra::with_unit(field, 3);
        a.set_product(1, 1, unit_vector(field, 3, 2)).unwrap();
        a
    }

    #[test]
    fn decide_examples() {
        let v = decide_diamond(RingRef::Sequence(&sparse()), 16).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.witness, Witness::SocleCodimFinite(1));
        assert_eq!(v.summary(), "HOLDS (cube-zerolocal(1)): dim m/Soc = 1");

        let v = decide_diamond(RingRef::Sequence(&hilbert()), 10).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert!(matches!(v.witness, Witness::BadFactor(_)));
        assert_eq!(
            v.summary(),
            "FAILS (badfactor): non-degenerate F×V×F factor, rank unbounded"
        );

        let mut s = TripleRing::square_zero(q(), 2, 1);
        s.set_beta(0, 1, vec![q().one()]).unwrap();
        let v = decide_diamond(RingRef::Triple(&s), 16).unwrap();
        assert_eq!(v.witness, Witness::ArtinianFiniteDim { length: 4 });
        assert_eq!(v.summary(), "HOLDS (Artinian): finite length 4");
    }

    #[test]
    fn zero_window_is_rejected() {
        assert!(decide_diamond(RingRef::Sequence(&sparse()), 0).is_err());
    }

    #[test]
    fn presented_algebra_goes_through_gr() {
        let v = decide_diamond(RingRef::Presented(&truncated_cubic(q())), 16).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        let mut bad = truncated_cubic(q());
        bad.set_product(1, 1, unit_vector(q(), 3, 0)).unwrap();
        assert!(matches!(
            decide_diamond(RingRef::Presented(&bad), 16),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn shortcut_examples() {
        let flat = TripleRing::square_zero(q(), 3, 2);
        let v = shortcut_lemmas(RingRef::Triple(&flat)).unwrap().unwrap();
        assert_eq!((v.outcome, v.lemma), (Outcome::Holds, Some(Lemma::SquareZero)));

        let v = shortcut_lemmas(RingRef::Sequence(&sparse())).unwrap().unwrap();
        assert_eq!(v.lemma, Some(Lemma::CubeZeroLocal1));
        assert_eq!(v.witness, Witness::SocleCodimFinite(1));

        let v = shortcut_lemmas(RingRef::Sequence(&hilbert())).unwrap().unwrap();
        assert_eq!((v.outcome, v.lemma), (Outcome::Fails, Some(Lemma::CubeZeroLocal2)));

        let zero = seq(SeqSpec::FiniteSupport {
            field: q(),
            entries: BTreeMap::new(),
        });
        let v = shortcut_lemmas(RingRef::Sequence(&zero)).unwrap().unwrap();
        assert_eq!(v.lemma, Some(Lemma::SquareZero));
        let d = decide_diamond(RingRef::Sequence(&zero), 4).unwrap();
        assert_eq!(d.witness, Witness::SocleCodimFinite(0));
    }

    #[test]
    fn corank_examples() {
        assert_eq!(v_f_corank(&hilbert(), &q().zero(), 6), FormRank::Finite(0));
        assert_eq!(v_f_corank(&hilbert(), &q().one(), 6), FormRank::AtLeast(6));
        let h0 = seq(SeqSpec::Hankel(HankelSeq::Explicit {
            field: q(),
            prefix: vec![q().one()],
        }));
        assert_eq!(v_f_corank(&h0, &q().from_i64(3), 6), FormRank::Finite(1));
    }

    #[test]
    fn bad_factor_examples() {
        let cert = find_bad_factor(&hilbert(), 8).unwrap().unwrap();
        assert!(cert.nondegenerate() && cert.closed_form);
        assert!(HankelSeq::Hilbert.nondegeneracy_certificate(cert.window));
        assert_eq!(cert.corank, FormRank::AtLeast(8));
        assert!(find_bad_factor(&sparse(), 8).unwrap().is_none());
        let ones = seq(SeqSpec::Hankel(HankelSeq::constant_one(q())));
        assert!(find_bad_factor(&ones, 8).unwrap().is_none());
    }

    #[test]
    fn gr_equivalence_on_truncated_cubic() {
        let report = check_gr_equivalence(&truncated_cubic(q())).unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert_eq!(report.functionals, 2);

        let gf2 = Field::prime(2).unwrap();
        let report = check_gr_equivalence(&truncated_cubic(gf2)).unwrap();
        assert!(report.failures.is_empty());
        assert_eq!(report.functionals, 2);

        let t = PresentedAlgebra::trivial_extension(gf2, 2);
        let report = check_gr_equivalence(&t).unwrap();
        assert!(report.failures.is_empty());
        // Soc = m has dimension 2: all four functionals.
        assert_eq!(report.functionals, 4);

        let field_itself = PresentedAlgebra::with_unit(gf2, 1);
        let report = check_gr_equivalence(&field_itself).unwrap();
        assert!(report.failures.is_empty());
        assert_eq!(report.functionals, 1);
    }

    #[test]
    fn v_g_on_truncated_cubic() {
        let a = truncated_cubic(q());
        let soc = a.socle();
        let g = Functional::new(soc.clone(), vec![q().one()]).unwrap();
        // g(x·x) = g(x²) = 1, so x ∉ V_g and V_g = (x²).
        assert_eq!(v_g_subspace(&a, &g).unwrap(), soc);
        let zero = Functional::zero(soc);
        assert_eq!(v_g_subspace(&a, &zero).unwrap(), a.maximal_ideal());
    }
}
