//! Brute-force verification of the structural lemmas over small finite
//! fields.
//!
//! Every check here enumerates ideals, functionals or elements explicitly and
//! compares against the linear-algebra routines in [`crate::ringcore`] and
//! [`crate::diamond`].

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algpres::PresentedAlgebra;
use crate::diamond::check_gr_equivalence;
use crate::error::{Error, Result};
use crate::exactalg::{default_enumeration_bound, enumerate_subspaces, unit_vector, Field, Matrix, Scalar, SubspaceBasis};
use crate::ringcore::{Functional, Ideal, RingIdeal, TripleRing};

/// Largest number of candidate tables an exhaustive algebra sweep will try.
const TABLE_SWEEP_LIMIT: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaSuite {
    Correspondence,
    Krull,
    ColonSocle,
    SquareZero,
    CompareVf,
    FiniteDual,
}

impl LemmaSuite {
    pub const ALL: [LemmaSuite; 6] = [
        LemmaSuite::Correspondence,
        LemmaSuite::Krull,
        LemmaSuite::ColonSocle,
        LemmaSuite::SquareZero,
        LemmaSuite::CompareVf,
        LemmaSuite::FiniteDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaSuite::Correspondence => "correspondence",
            LemmaSuite::Krull => "krull",
            LemmaSuite::ColonSocle => "colon-socle",
            LemmaSuite::SquareZero => "squarezero",
            LemmaSuite::CompareVf => "compare-vf",
            LemmaSuite::FiniteDual => "finite-dual",
        }
    }
}

impl fmt::Display for LemmaSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaSuite::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown lemma '{s}'")))
    }
}

/// Tally of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub lemma: LemmaSuite,
    pub rings: usize,
    pub cases: usize,
    pub failures: Vec<String>,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(lemma: LemmaSuite) -> Self {
        Report {
            lemma,
            rings: 0,
            cases: 0,
            failures: Vec::new(),
            seed: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.rings += other.rings;
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn fail(&mut self, ring: &dyn fmt::Display, msg: String) {
        self.failures.push(format!("[{ring}] {msg}"));
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "lemma={} rings={} cases={} failures={}",
            self.lemma,
            self.rings,
            self.cases,
            self.failures.len()
        );
        if let Some(seed) = self.seed {
            line.push_str(&format!(" seed={seed}"));
        }
        line
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.failures {
            writeln!(f, "FAIL {line}")?;
        }
        write!(f, "{}", self.summary_line())
    }
}

/// All ideals of `S` contained in `m`, found by filtering every subspace.
pub fn enumerate_ideals(s: &TripleRing, bound: usize) -> Result<Vec<Ideal>> {
    enumerate_subspaces(s.field(), s.m_dim(), None, bound)?
        .into_iter()
        .filter_map(|u| match s.is_ideal(&u) {
            Ok(true) => Some(Ok(Ideal::from_space_unchecked(u))),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

fn ideals_of(s: &TripleRing) -> Result<Vec<Ideal>> {
    enumerate_ideals(s, default_enumeration_bound(s.field()))
}

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}

/// A socle vector `x` with `f(x) = 1`.
fn preimage_of_one(f: &Functional) -> Result<Vec<Scalar>> {
    let basis = f.domain().basis_vectors();
    for (b, c) in basis.iter().zip(f.coeffs()) {
        if let Some(inv) = c.inv() {
            return Ok(b.iter().map(|t| t * &inv).collect());
        }
    }
    Err(Error::Precondition("functional is zero".into()))
}

/// Checks `I ↦ ker f` and `f ↦ I` between SI ideals not containing the
/// socle and nonzero socle functionals, including `V_f = Soc + I`.
pub fn verify_correspondence(s: &TripleRing) -> Result<Report> {
    let mut report = Report::new(LemmaSuite::Correspondence);
    report.rings = 1;
    let field = s.field();
    let ideals = ideals_of(s)?;
    let soc = s.socle();

    for i in &ideals {
        if i.contains(&soc) || !s.is_subdirectly_irreducible(i)? {
            continue;
        }
        report.cases += 1;
        let meet = soc.intersection(i)?;
        if soc.dim() - meet.dim() != 1 {
            report.fail(s, format!("I = {}: dim Soc/(Soc ∩ I) = {}", i.space(), soc.dim() - meet.dim()));
            continue;
        }
        let x = soc
            .space()
            .basis_vectors()
            .into_iter()
            .find(|b| !i.space().contains(b).unwrap_or(true))
            .expect("socle not inside I");
        let f = Functional::with_kernel(soc.space().clone(), meet.space(), &x)?;
        let v_f = s.v_f_subspace(&f)?;
        let expected = soc.sum(i)?;
        if v_f != expected {
            report.fail(s, format!("I = {}: V_f = {} but Soc + I = {}", i.space(), v_f.space(), expected.space()));
        }
    }

    let Some(functionals) = field.vectors(soc.dim()) else {
        return Err(Error::InfiniteField(field));
    };
    for coeffs in functionals {
        if coeffs.iter().all(Scalar::is_zero) {
            continue;
        }
        report.cases += 1;
        let f = Functional::new(soc.space().clone(), coeffs)?;
        let ker = f.kernel();
        let x = preimage_of_one(&f)?;
        let candidates: Vec<&Ideal> = ideals
            .iter()
            .filter(|i| ker.is_subspace_of(i.space()).unwrap_or(false) && !i.space().contains(&x).unwrap_or(true))
            .collect();
        let maximal: Vec<&Ideal> = candidates
            .iter()
            .filter(|i| !candidates.iter().any(|j| j.dim() > i.dim() && j.contains(i)))
            .copied()
            .collect();
        if maximal.is_empty() {
            report.fail(s, format!("f = {}: no ideal avoids x", show(f.coeffs())));
            continue;
        }
        let v_f = s.v_f_subspace(&f)?;
        for i in maximal {
            if !s.is_subdirectly_irreducible(i)? {
                report.fail(s, format!("f = {}: maximal I = {} is not SI", show(f.coeffs()), i.space()));
            }
            let meet = soc.intersection(i)?;
            if meet.space() != &ker {
                report.fail(s, format!("f = {}: I ∩ Soc = {} but ker f = {}", show(f.coeffs()), meet.space(), ker));
            }
            let expected = soc.sum(i)?;
            if v_f != expected {
                report.fail(s, format!("f = {}: V_f = {} but Soc + I = {}", show(f.coeffs()), v_f.space(), expected.space()));
            }
        }
    }
    Ok(report)
}

/// Checks `∩_n (I + m^n) = I` and `I + m^3 = I` for every ideal.
pub fn verify_krull(s: &TripleRing) -> Result<Report> {
    let mut report = Report::new(LemmaSuite::Krull);
    report.rings = 1;
    let powers = (1..=3).map(|k| s.m_power(k)).collect::<Result<Vec<_>>>()?;
    for i in ideals_of(s)? {
        report.cases += 1;
        let mut meet = s.maximal_ideal();
        for p in &powers {
            meet = meet.intersection(&i.sum(p)?)?;
        }
        if meet != i {
            report.fail(s, format!("I = {}: ∩(I + m^n) = {}", i.space(), meet.space()));
        }
        let top = i.sum(&powers[2])?;
        if top != i {
            report.fail(s, format!("I = {}: I + m^3 = {}", i.space(), top.space()));
        }
    }
    Ok(report)
}

/// `x ∈ m` with `y x ∈ I` for every product `y` of `depth` basis elements of `m`.
fn brute_colon(s: &TripleRing, i: &Ideal, depth: usize) -> Result<Vec<Vec<Scalar>>> {
    let field = s.field();
    let n = s.m_dim();
    let elements = field.vectors(n).ok_or(Error::InfiniteField(field))?;
    let to_coords = |e: crate::ringcore::RingElement| {
        let mut v = e.v;
        v.extend(e.w);
        v
    };
    let mut out = Vec::new();
    'elements: for x in elements {
        let mut layer = vec![x.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for y in &layer {
                for k in 0..n {
                    let e = s.element_of_m(&unit_vector(field, n, k))?;
                    next.push(to_coords(s.multiply(&e, &s.element_of_m(y)?)?));
                }
            }
            layer = next;
        }
        for y in &layer {
            if !i.space().contains(y)? {
                continue 'elements;
            }
        }
        out.push(x);
    }
    Ok(out)
}

fn colon_contains(c: &RingIdeal, x: &[Scalar]) -> Result<bool> {
    match c {
        RingIdeal::Whole => Ok(true),
        RingIdeal::Proper(c) => c.space().contains(x),
    }
}

fn colon_label(c: &RingIdeal) -> String {
    match c {
        RingIdeal::Whole => "S".into(),
        RingIdeal::Proper(c) => c.space().to_string(),
    }
}

/// Checks colon ideals against element enumeration, `(I:m²) = ((I:m):m)`,
/// the socle-layer length formula and the colon SI test.
pub fn verify_colon_socle(s: &TripleRing) -> Result<Report> {
    let mut report = Report::new(LemmaSuite::ColonSocle);
    report.rings = 1;
    let field = s.field();
    let order = field.order().ok_or(Error::InfiniteField(field))?;
    let m = s.maximal_ideal();
    let m2 = s.radical_square();
    let ideals = ideals_of(s)?;

    for i in &ideals {
        report.cases += 1;
        let colon_m = s.colon(i, &m)?;
        let brute_m = brute_colon(s, i, 1)?;
        check_colon(&mut report, s, i, "(I:m)", &colon_m, &brute_m, order)?;

        let colon_m2 = s.colon(i, &m2)?;
        let iterated = s.colon_of(&colon_m, &m)?;
        // m² may be generated by fewer products than m·m, so brute force uses m·m.
        let brute_m2 = brute_colon(s, i, 2)?;
        check_colon(&mut report, s, i, "(I:m²)", &iterated, &brute_m2, order)?;
        if s.m_power(2)? == m2 && colon_m2 != iterated {
            report.fail(
                s,
                format!("I = {}: (I:m²) = {} but ((I:m):m) = {}", i.space(), colon_label(&colon_m2), colon_label(&iterated)),
            );
        }

        let mut total = 0;
        let mut layer = RingIdeal::Proper(i.clone());
        for _ in 0..=s.m_dim() + 1 {
            match &layer {
                RingIdeal::Whole => break,
                RingIdeal::Proper(c) => {
                    let next = s.colon(c, &m)?;
                    total += match &next {
                        RingIdeal::Whole => 1 + s.m_dim() - c.dim(),
                        RingIdeal::Proper(n) => n.dim() - c.dim(),
                    };
                    layer = next;
                }
            }
        }
        if total != s.composition_length(i) {
            report.fail(
                s,
                format!("I = {}: socle layers sum to {total}, length is {}", i.space(), s.composition_length(i)),
            );
        }

        let strictly_larger: Vec<&Ideal> = ideals.iter().filter(|j| j.dim() > i.dim() && j.contains(i)).collect();
        let direct = match strictly_larger.split_first() {
            None => true,
            Some((first, rest)) => {
                let mut meet = (*first).clone();
                for j in rest {
                    meet = meet.intersection(j)?;
                }
                meet != *i
            }
        };
        if direct != s.is_subdirectly_irreducible(i)? {
            report.fail(s, format!("I = {}: SI by definition is {direct}, by colon is {}", i.space(), !direct));
        }
    }
    Ok(report)
}

fn check_colon(
    report: &mut Report,
    s: &TripleRing,
    i: &Ideal,
    label: &str,
    computed: &RingIdeal,
    brute: &[Vec<Scalar>],
    order: u64,
) -> Result<()> {
    let expected_count = match computed {
        // Elements of m only; a whole colon contains all of m.
        RingIdeal::Whole => order.pow(s.m_dim() as u32),
        RingIdeal::Proper(c) => order.pow(c.dim() as u32),
    };
    let mut agree = brute.len() as u64 == expected_count;
    for x in brute {
        agree &= colon_contains(computed, x)?;
    }
    if !agree {
        report.fail(
            s,
            format!("I = {}: {label} = {} disagrees with {} enumerated elements", i.space(), colon_label(computed), brute.len()),
        );
    }
    if matches!(computed, RingIdeal::Whole) && !s.maximal_ideal().space().is_subspace_of(i.space())? && label == "(I:m)" {
        report.fail(s, format!("I = {}: (I:m) is the whole ring but m ⊄ I", i.space()));
    }
    Ok(())
}

/// For square-zero `S`, every SI ideal has length 1 (`I = m`) or 2.
pub fn verify_squarezero_length(s: &TripleRing) -> Result<Report> {
    if !s.is_square_zero() {
        return Err(Error::Precondition("squarezero check needs β = 0".into()));
    }
    let mut report = Report::new(LemmaSuite::SquareZero);
    report.rings = 1;
    for i in ideals_of(s)? {
        if !s.is_subdirectly_irreducible(&i)? {
            continue;
        }
        report.cases += 1;
        let len = s.composition_length(&i);
        let ok = if i.dim() == s.m_dim() { len == 1 } else { len == 2 };
        if !ok {
            report.fail(s, format!("SI ideal {} has length {len}", i.space()));
        }
    }
    Ok(report)
}

/// Random functionals `f` on the trivial extension `F ⋉ F^dim_v`: the largest
/// ideal inside `ker f` has codimension at most 2.
pub fn verify_finite_dual_trivext(dim_v: usize, field: Field, trials: usize, seed: u64) -> Result<Report> {
    let elements = field.elements().ok_or(Error::InfiniteField(field))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let functionals: Vec<Vec<Scalar>> = (0..trials)
        .map(|_| (0..=dim_v).map(|_| elements[rng.random_range(0..elements.len())].clone()).collect())
        .collect();
    let mut report = finite_dual_over(dim_v, field, functionals)?;
    report.seed = Some(seed);
    Ok(report)
}

/// Every functional on the trivial extension `F ⋉ F^dim_v`.
pub fn verify_finite_dual_all(dim_v: usize, field: Field) -> Result<Report> {
    let functionals = field.vectors(dim_v + 1).ok_or(Error::InfiniteField(field))?;
    finite_dual_over(dim_v, field, functionals)
}

fn finite_dual_over(dim_v: usize, field: Field, functionals: Vec<Vec<Scalar>>) -> Result<Report> {
    let a = PresentedAlgebra::trivial_extension(field, dim_v);
    let n = a.dim();
    let mut report = Report::new(LemmaSuite::FiniteDual);
    report.rings = 1;
    let label = format!("{field} trivial extension dimV={dim_v}");
    for (trial, f) in functionals.into_iter().enumerate() {
        report.cases += 1;
        let codim = if f.iter().all(Scalar::is_zero) {
            0
        } else {
            let ker = Matrix::from_rows(field, n, vec![f.clone()])?.kernel();
            n - largest_ideal_inside(&a, &ker)?.dim()
        };
        if codim > 2 {
            report.fail(
                &label,
                format!("case {trial}, f = {}: largest ideal in ker f has codimension {codim}", show(&f)),
            );
        }
    }
    Ok(report)
}

/// The largest ideal of `a` contained in `ker`, found by scanning subspaces
/// of `ker` from the top dimension down. The sum of two ideals in `ker` is
/// again one, so the first hit is the unique largest.
fn largest_ideal_inside(a: &PresentedAlgebra, ker: &SubspaceBasis) -> Result<SubspaceBasis> {
    let field = a.field();
    let bound = default_enumeration_bound(field);
    for k in (0..=ker.dim()).rev() {
        for sub in enumerate_subspaces(field, ker.dim(), Some(k), bound)? {
            let vectors = sub
                .basis_vectors()
                .iter()
                .map(|c| ker.combine(c))
                .collect::<Result<Vec<_>>>()?;
            let u = SubspaceBasis::span(field, a.dim(), vectors)?;
            if a.is_ideal(&u)? {
                return Ok(u);
            }
        }
    }
    unreachable!("the zero subspace is an ideal")
}

/// Runs `V_f = gr(V_g)` for every swept functional of one algebra.
pub fn verify_compare_vf(a: &PresentedAlgebra) -> Result<Report> {
    let mut report = Report::new(LemmaSuite::CompareVf);
    report.rings = 1;
    let inner = check_gr_equivalence(a)?;
    report.cases = inner.functionals;
    let label = describe_algebra(a);
    for f in inner.failures {
        report.fail(&label, f);
    }
    Ok(report)
}

/// Compact description listing the nonzero products of `m`.
pub fn describe_algebra(a: &PresentedAlgebra) -> String {
    let mut parts = Vec::new();
    for i in 1..a.dim() {
        for j in i..a.dim() {
            let p = a.basis_product(i, j);
            if p.iter().all(Scalar::is_zero) {
                continue;
            }
            let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
            parts.push(format!("e{i}e{j}=[{}]", coords.join(" ")));
        }
    }
    format!("{} dim={} {{{}}}", a.field(), a.dim(), parts.join(", "))
}

/// Every triple ring over a finite field with `dim V <= max_v`, `dim W <= max_w`.
pub fn all_triple_rings(field: Field, max_v: usize, max_w: usize) -> Result<Vec<TripleRing>> {
    let mut out = Vec::new();
    for dv in 0..=max_v {
        for dw in 0..=max_w {
            let pairs: Vec<(usize, usize)> = (0..dv).flat_map(|i| (i..dv).map(move |j| (i, j))).collect();
            let tables = field.vectors(pairs.len() * dw).ok_or(Error::InfiniteField(field))?;
            for t in tables {
                let mut ring = TripleRing::square_zero(field, dv, dw);
                for (p, &(i, j)) in pairs.iter().enumerate() {
                    ring.set_beta(i, j, t[p * dw..(p + 1) * dw].to_vec())?;
                }
                out.push(ring);
            }
        }
    }
    Ok(out)
}

/// `count` seeded random triple rings with `dim V + dim W <= max_total`.
pub fn random_triple_rings(field: Field, max_total: usize, count: usize, seed: u64) -> Result<Vec<TripleRing>> {
    let elements = field.elements().ok_or(Error::InfiniteField(field))?;
    let shapes: Vec<(usize, usize)> = (0..=max_total)
        .flat_map(|dv| (0..=max_total - dv).map(move |dw| (dv, dw)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (dv, dw) = shapes[rng.random_range(0..shapes.len())];
        let mut ring = TripleRing::square_zero(field, dv, dw);
        for i in 0..dv {
            for j in i..dv {
                let w = (0..dw).map(|_| elements[rng.random_range(0..elements.len())].clone()).collect();
                ring.set_beta(i, j, w)?;
            }
        }
        out.push(ring);
    }
    Ok(out)
}

/// Every valid algebra of dimension `1..=max_dim` whose products `e_i e_j`
/// (`i, j >= 1`) range over all coordinate vectors.
///
/// Tables are filtered by [`PresentedAlgebra::validate`]. When the full sweep
/// exceeds a fixed budget the unit coordinate of each product is held at
/// zero, since a nonzero one is always rejected.
pub fn all_presented_algebras(field: Field, max_dim: usize) -> Result<Vec<PresentedAlgebra>> {
    let elements = field.elements().ok_or(Error::InfiniteField(field))?;
    let q = elements.len() as u64;
    let mut out = Vec::new();
    for dim in 1..=max_dim {
        let pairs: Vec<(usize, usize)> = (1..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
        let full = q.checked_pow((pairs.len() * dim) as u32).unwrap_or(u64::MAX);
        let offset = usize::from(full > TABLE_SWEEP_LIMIT);
        let width = dim - offset;
        let slots = pairs.len() * width;
        let total = q.checked_pow(slots as u32).unwrap_or(u64::MAX);
        if total > TABLE_SWEEP_LIMIT {
            return Err(Error::OverBound { dim, bound: max_dim.min(dim - 1) });
        }
        let mut digits = vec![0usize; slots];
        loop {
            let mut a = PresentedAlgebra::with_unit(field, dim);
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let mut coords = vec![field.zero(); dim];
                for c in 0..width {
                    coords[c + offset] = elements[digits[p * width + c]].clone();
                }
                a.set_product(i, j, coords)?;
            }
            if a.validate().is_ok() {
                out.push(a);
            }
            let mut pos = 0;
            while pos < slots && digits[pos] + 1 == elements.len() {
                digits[pos] = 0;
                pos += 1;
            }
            if pos == slots {
                break;
            }
            digits[pos] += 1;
        }
    }
    Ok(out)
}

/// `count` seeded random valid algebras of dimension `dim`.
///
/// Each is a graded algebra `F ⊕ V ⊕ W` with random `β`, written in a random
/// basis of `m`, so the tables are generally not block-shaped.
pub fn random_presented_algebras(field: Field, dim: usize, count: usize, seed: u64) -> Result<Vec<PresentedAlgebra>> {
    let elements = field.elements().ok_or(Error::InfiniteField(field))?;
    if dim == 0 {
        return Err(Error::Precondition("algebra dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| elements[rng.random_range(0..elements.len())].clone();
    let n = dim - 1;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dv = rng.random_range(0..=n);
        let dw = n - dv;
        // Graded basis of m: V coordinates first, then W.
        let mut graded = TripleRing::square_zero(field, dv, dw);
        for i in 0..dv {
            for j in i..dv {
                graded.set_beta(i, j, (0..dw).map(|_| pick(&mut rng)).collect())?;
            }
        }
        // Random change of basis P of m: new basis vector b_r = Σ P[r][c] e_c.
        let p_rows: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| pick(&mut rng)).collect()).collect();
        let p = Matrix::from_rows(field, n, p_rows.clone())?;
        if p.rank() < n {
            continue;
        }
        let p_inv_cols = invert(&p)?;
        let mut a = PresentedAlgebra::with_unit(field, dim);
        for r in 0..n {
            for s in r..n {
                // b_r b_s in the old basis, then expressed in the new one.
                let mut old = vec![field.zero(); n];
                for (c1, x) in p_rows[r].iter().enumerate().take(dv) {
                    for (c2, y) in p_rows[s].iter().enumerate().take(dv) {
                        let xy = x * y;
                        if xy.is_zero() {
                            continue;
                        }
                        for (o, g) in old[dv..].iter_mut().zip(graded.beta(c1, c2)) {
                            *o = &*o + &(&xy * g);
                        }
                    }
                }
                let new = p_inv_cols.mul_vec(&old)?;
                let mut coords = vec![field.zero()];
                coords.extend(new);
                a.set_product(r + 1, s + 1, coords)?;
            }
        }
        debug_assert!(a.validate().is_ok());
        out.push(a);
    }
    Ok(out)
}

/// The matrix sending old coordinates to coordinates in the basis given by
/// the rows of `p`, i.e. `(pᵀ)⁻¹`.
fn invert(p: &Matrix) -> Result<Matrix> {
    let n = p.rows();
    let field = p.field();
    let pt = p.transpose();
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = pt.row(r).to_vec();
        row.extend(unit_vector(field, n, r));
        rows.push(row);
    }
    let (rref, _) = Matrix::from_rows(field, 2 * n, rows)?.rref();
    let inv_rows = (0..n).map(|r| rref.row(r)[n..].to_vec()).collect();
    Matrix::from_rows(field, n, inv_rows)
}

fn run_on<T: Sync>(lemma: LemmaSuite, items: &[T], check: impl Fn(&T) -> Result<Report> + Sync + Send) -> Result<Report> {
    items
        .par_iter()
        .map(check)
        .collect::<Result<Vec<_>>>()
        .map(|reports| reports.into_iter().fold(Report::new(lemma), Report::merge))
}

/// Runs a triple-ring lemma over a collection of rings.
///
/// The square-zero lemma is applied to each `S/m²`.
pub fn run_triple_suite(lemma: LemmaSuite, rings: &[TripleRing]) -> Result<Report> {
    match lemma {
        LemmaSuite::Correspondence => run_on(lemma, rings, verify_correspondence),
        LemmaSuite::Krull => run_on(lemma, rings, verify_krull),
        LemmaSuite::ColonSocle => run_on(lemma, rings, verify_colon_socle),
        LemmaSuite::SquareZero => run_on(lemma, rings, |s| verify_squarezero_length(&s.modulo_radical_square())),
        LemmaSuite::CompareVf | LemmaSuite::FiniteDual => {
            Err(Error::Precondition(format!("{lemma} does not run on triple rings")))
        }
    }
}

/// Runs the compare-vf lemma over a collection of algebras.
pub fn run_algebra_suite(algebras: &[PresentedAlgebra]) -> Result<Report> {
    run_on(LemmaSuite::CompareVf, algebras, verify_compare_vf)
}
