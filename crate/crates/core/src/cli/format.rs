//! The line-oriented `.ring` text format.
//!
//! ```text
//! # GF(2)[x]/(x^3) written as its graded triple
//! ring triple
//! field GF 2
//! dimV 1
//! dimW 1
//! beta 0 0 : 1
//! ```
//!
//! See `docs/ring-format.md` for the full grammar.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algpres::PresentedAlgebra;
use crate::diamond::RingRef;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};
use crate::hankel::{HankelSeq, SeqSpec, SequenceTriple};
use crate::ringcore::TripleRing;

/// A parsed ring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Triple(TripleRing),
    Sequence(SequenceTriple),
    Presented(PresentedAlgebra),
}

impl RingSpec {
    pub fn as_ring_ref(&self) -> RingRef<'_> {
        match self {
            RingSpec::Triple(s) => RingRef::Triple(s),
            RingSpec::Sequence(s) => RingRef::Sequence(s),
            RingSpec::Presented(a) => RingRef::Presented(a),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            RingSpec::Triple(s) => s.field(),
            RingSpec::Sequence(s) => s.field(),
            RingSpec::Presented(a) => a.field(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Triple,
    Struct,
    Hankel,
}

#[derive(Clone, Copy, Debug)]
struct Loc {
    line: usize,
    column: usize,
}

impl Loc {
    fn err(self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    loc: Loc,
}

fn tokenize(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    for (byte, ch) in content.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push(Token {
                    text: &content[b..byte],
                    loc: Loc { line: line_no, column: c },
                });
            }
        } else if start.is_none() {
            start = Some((byte, column));
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &content[b..],
            loc: Loc { line: line_no, column: c },
        });
    }
    out
}

fn parse_usize(t: &Token<'_>, what: &str) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| t.loc.err(format!("expected {what}, found '{}'", t.text)))
}

fn parse_scalar_text(field: Field, text: &str, loc: Loc) -> Result<Scalar> {
    let bad = || loc.err(format!("expected a number such as 3 or -1/2, found '{text}'"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(loc.err("zero denominator"));
    }
    field
        .from_rational(BigRational::new(num, den))
        .map_err(|_| loc.err(format!("'{text}' has a denominator divisible by the characteristic")))
}

/// Accumulated directives; checked against each other as they arrive.
struct Builder {
    kind: Kind,
    ring_loc: Loc,
    field: Option<Field>,
    dim_v: Option<usize>,
    dim_w: Option<usize>,
    dim: Option<usize>,
    entries: BTreeMap<(usize, usize), Vec<Scalar>>,
    maxideal: bool,
    seq: Option<HankelSeq>,
    data_loc: Option<Loc>,
}

impl Builder {
    fn field(&self, loc: Loc) -> Result<Field> {
        self.field.ok_or_else(|| loc.err("'field' must come before this directive"))
    }

    fn need(&self, value: Option<usize>, name: &str, loc: Loc) -> Result<usize> {
        value.ok_or_else(|| loc.err(format!("'{name}' must come before this directive")))
    }

    fn set_dim(slot: &mut Option<usize>, args: &[Token<'_>], name: &str, loc: Loc) -> Result<()> {
        if slot.is_some() {
            return Err(loc.err(format!("duplicate '{name}'")));
        }
        let [t] = args else {
            return Err(loc.err(format!("'{name}' takes one number")));
        };
        *slot = Some(parse_usize(t, "a dimension")?);
        Ok(())
    }

    /// `i j : coords` shared by `beta` and `mul`.
    fn pair_entry(
        &mut self,
        args: &[Token<'_>],
        loc: Loc,
        name: &str,
        index_ok: &dyn Fn(usize) -> bool,
        width: usize,
    ) -> Result<()> {
        let field = self.field(loc)?;
        if args.len() < 3 || args[2].text != ":" {
            return Err(loc.err(format!("expected '{name} i j : coordinates'")));
        }
        let i = parse_usize(&args[0], "an index")?;
        let j = parse_usize(&args[1], "an index")?;
        for (k, t) in [(i, &args[0]), (j, &args[1])] {
            if !index_ok(k) {
                return Err(t.loc.err(format!("index {k} out of range")));
            }
        }
        let coords = args[3..]
            .iter()
            .map(|t| parse_scalar_text(field, t.text, t.loc))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != width {
            return Err(loc.err(format!("expected {width} coordinates, found {}", coords.len())));
        }
        let key = (i.min(j), i.max(j));
        if let Some(prev) = self.entries.get(&key) {
            if prev != &coords {
                return Err(args[0].loc.err(format!(
                    "entry ({i}, {j}) conflicts with the earlier ({}, {}) entry",
                    key.0, key.1
                )));
            }
        }
        self.entries.insert(key, coords);
        self.data_loc.get_or_insert(loc);
        Ok(())
    }

    fn directive(&mut self, head: &Token<'_>, args: &[Token<'_>]) -> Result<()> {
        let loc = head.loc;
        let kind = match self.kind {
            Kind::Triple => "triple",
            Kind::Struct => "struct",
            Kind::Hankel => "hankel",
        };
        let wrong_kind = || loc.err(format!("'{}' is not valid in a {kind} ring", head.text));
        match head.text {
            "ring" => Err(loc.err("duplicate 'ring'")),
            "field" => {
                if self.field.is_some() {
                    return Err(loc.err("duplicate 'field'"));
                }
                self.field = Some(match args {
                    [q] if q.text == "Q" => Field::Rational,
                    [gf, p] if gf.text == "GF" => {
                        let p: u64 = p
                            .text
                            .parse()
                            .map_err(|_| p.loc.err(format!("expected a prime, found '{}'", p.text)))?;
                        Field::prime(p).map_err(|e| args[1].loc.err(e.to_string()))?
                    }
                    _ => return Err(loc.err("expected 'field Q' or 'field GF <p>'")),
                });
                Ok(())
            }
            "dimV" if self.kind == Kind::Triple => Self::set_dim(&mut self.dim_v, args, "dimV", loc),
            "dimW" if self.kind == Kind::Triple => Self::set_dim(&mut self.dim_w, args, "dimW", loc),
            "dim" if self.kind == Kind::Struct => Self::set_dim(&mut self.dim, args, "dim", loc),
            "beta" if self.kind == Kind::Triple => {
                let dv = self.need(self.dim_v, "dimV", loc)?;
                let dw = self.need(self.dim_w, "dimW", loc)?;
                self.pair_entry(args, loc, "beta", &|k| k < dv, dw)
            }
            "beta" if self.kind == Kind::Hankel => {
                if self.seq.is_some() {
                    return Err(loc.err("'beta' and 'seq' cannot be combined"));
                }
                self.pair_entry(args, loc, "beta", &|_| true, 1)
            }
            "mul" if self.kind == Kind::Struct => {
                let n = self.need(self.dim, "dim", loc)?;
                if let Some(t) = args.first().filter(|t| t.text == "0") {
                    return Err(t.loc.err("e0 is the unit; its products are implicit"));
                }
                if args.get(1).is_some_and(|t| t.text == "0") {
                    return Err(args[1].loc.err("e0 is the unit; its products are implicit"));
                }
                self.pair_entry(args, loc, "mul", &|k| k < n, n)
            }
            "maxideal" if self.kind == Kind::Struct => {
                let n = self.need(self.dim, "dim", loc)?;
                if self.maxideal {
                    return Err(loc.err("duplicate 'maxideal'"));
                }
                let mut idx = args
                    .iter()
                    .map(|t| parse_usize(t, "an index"))
                    .collect::<Result<Vec<_>>>()?;
                idx.sort_unstable();
                if idx != (1..n).collect::<Vec<_>>() {
                    return Err(loc.err(format!("maxideal must list the indices 1..{} exactly", n.saturating_sub(1))));
                }
                self.maxideal = true;
                Ok(())
            }
            "seq" if self.kind == Kind::Hankel => {
                if self.seq.is_some() {
                    return Err(loc.err("duplicate 'seq'"));
                }
                if !self.entries.is_empty() {
                    return Err(loc.err("'beta' and 'seq' cannot be combined"));
                }
                let field = self.field(loc)?;
                self.seq = Some(parse_seq(field, args, loc)?);
                self.data_loc = Some(loc);
                Ok(())
            }
            "dimV" | "dimW" | "dim" | "beta" | "mul" | "maxideal" | "seq" => Err(wrong_kind()),
            other => Err(loc.err(format!("unknown directive '{other}'"))),
        }
    }

    fn finish(self) -> Result<RingSpec> {
        let field = self.field.ok_or_else(|| self.ring_loc.err("missing 'field'"))?;
        let at = self.data_loc.unwrap_or(self.ring_loc);
        let wrap = |e: Error| at.err(e.to_string());
        match self.kind {
            Kind::Triple => {
                let dv = self.dim_v.ok_or_else(|| self.ring_loc.err("missing 'dimV'"))?;
                let dw = self.dim_w.ok_or_else(|| self.ring_loc.err("missing 'dimW'"))?;
                let mut s = TripleRing::square_zero(field, dv, dw);
                for ((i, j), w) in self.entries {
                    s.set_beta(i, j, w).map_err(wrap)?;
                }
                Ok(RingSpec::Triple(s))
            }
            Kind::Struct => {
                let n = self.dim.ok_or_else(|| self.ring_loc.err("missing 'dim'"))?;
                if n == 0 {
                    return Err(self.ring_loc.err("dim must be at least 1"));
                }
                let mut a = PresentedAlgebra::with_unit(field, n);
                for ((i, j), c) in self.entries {
                    a.set_product(i, j, c).map_err(wrap)?;
                }
                a.validate().map_err(|issue| at.err(format!("invalid algebra: {issue}")))?;
                Ok(RingSpec::Presented(a))
            }
            Kind::Hankel => {
                let form = match self.seq {
                    Some(seq) => SeqSpec::Hankel(seq),
                    None => {
                        let pairs: Vec<(usize, usize, Scalar)> =
                            self.entries.into_iter().map(|((i, j), mut v)| (i, j, v.remove(0))).collect();
                        SeqSpec::finite_support(field, &pairs).map_err(wrap)?
                    }
                };
                Ok(RingSpec::Sequence(SequenceTriple::new(field, form).map_err(wrap)?))
            }
        }
    }
}

fn parse_seq(field: Field, args: &[Token<'_>], loc: Loc) -> Result<HankelSeq> {
    let Some((head, rest)) = args.split_first() else {
        return Err(loc.err("expected 'seq hilbert', 'seq finite ..' or 'seq recurrence ..'"));
    };
    match head.text {
        "hilbert" => {
            if let Some(t) = rest.first() {
                return Err(t.loc.err("'seq hilbert' takes no arguments"));
            }
            if field != Field::Rational {
                return Err(head.loc.err(format!("the Hilbert sequence requires field Q, not {field}")));
            }
            Ok(HankelSeq::Hilbert)
        }
        "finite" => {
            let mut values: BTreeMap<usize, Scalar> = BTreeMap::new();
            for t in rest {
                for item in t.text.split(',').filter(|s| !s.is_empty()) {
                    let (i, v) = item
                        .split_once(':')
                        .ok_or_else(|| t.loc.err(format!("expected 'index:value', found '{item}'")))?;
                    let i: usize = i
                        .parse()
                        .map_err(|_| t.loc.err(format!("expected an index, found '{i}'")))?;
                    let v = parse_scalar_text(field, v, t.loc)?;
                    if values.get(&i).is_some_and(|prev| prev != &v) {
                        return Err(t.loc.err(format!("conflicting values for h_{i}")));
                    }
                    values.insert(i, v);
                }
            }
            let len = values.keys().next_back().map_or(0, |&i| i + 1);
            let mut prefix = vec![field.zero(); len];
            for (i, v) in values {
                prefix[i] = v;
            }
            Ok(HankelSeq::Explicit { field, prefix })
        }
        "recurrence" => {
            let split = rest.iter().position(|t| t.text == "coeffs");
            let (Some(first), Some(split)) = (rest.first(), split) else {
                return Err(loc.err("expected 'seq recurrence init <terms> coeffs <terms>'"));
            };
            if first.text != "init" {
                return Err(first.loc.err("expected 'init'"));
            }
            let scalars = |ts: &[Token<'_>]| {
                ts.iter()
                    .map(|t| parse_scalar_text(field, t.text, t.loc))
                    .collect::<Result<Vec<_>>>()
            };
            let init = scalars(&rest[1..split])?;
            let coeffs = scalars(&rest[split + 1..])?;
            if init.is_empty() || init.len() != coeffs.len() {
                return Err(loc.err(format!(
                    "recurrence needs as many initial terms as coefficients (found {} and {})",
                    init.len(),
                    coeffs.len()
                )));
            }
            Ok(HankelSeq::Recurrence { field, init, coeffs })
        }
        other => Err(head.loc.err(format!("unknown sequence kind '{other}'"))),
    }
}

/// Parses a `.ring` file, reporting the first error with its location.
pub fn parse_ring(text: &str) -> Result<RingSpec> {
    let mut builder: Option<Builder> = None;
    for (n, line) in text.lines().enumerate() {
        let tokens = tokenize(line, n + 1);
        let Some((head, args)) = tokens.split_first() else {
            continue;
        };
        match &mut builder {
            None => {
                if head.text != "ring" {
                    return Err(head.loc.err("the first directive must be 'ring triple|struct|hankel'"));
                }
                let kind = match args {
                    [k] if k.text == "triple" => Kind::Triple,
                    [k] if k.text == "struct" => Kind::Struct,
                    [k] if k.text == "hankel" => Kind::Hankel,
                    _ => return Err(head.loc.err("expected 'ring triple', 'ring struct' or 'ring hankel'")),
                };
                builder = Some(Builder {
                    kind,
                    ring_loc: head.loc,
                    field: None,
                    dim_v: None,
                    dim_w: None,
                    dim: None,
                    entries: BTreeMap::new(),
                    maxideal: false,
                    seq: None,
                    data_loc: None,
                });
            }
            Some(b) => b.directive(head, args)?,
        }
    }
    builder
        .ok_or_else(|| Loc { line: 1, column: 1 }.err("missing 'ring' directive"))?
        .finish()
}

fn field_line(field: Field) -> String {
    match field {
        Field::Rational => "field Q".into(),
        Field::Prime(p) => format!("field GF {p}"),
    }
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Canonical text for a ring: fixed directive order, only nonzero entries,
/// pairs written with `i <= j`.
pub fn serialize_ring(spec: &RingSpec) -> String {
    let mut out = String::new();
    match spec {
        RingSpec::Triple(s) => {
            let _ = writeln!(out, "ring triple\n{}", field_line(s.field()));
            let _ = writeln!(out, "dimV {}\ndimW {}", s.dim_v(), s.dim_w());
            for i in 0..s.dim_v() {
                for j in i..s.dim_v() {
                    let w = s.beta(i, j);
                    if w.iter().any(|c| !c.is_zero()) {
                        let _ = writeln!(out, "beta {i} {j} : {}", join(w));
                    }
                }
            }
        }
        RingSpec::Presented(a) => {
            let _ = writeln!(out, "ring struct\n{}", field_line(a.field()));
            let _ = writeln!(out, "dim {}", a.dim());
            let idx: Vec<String> = (1..a.dim()).map(|i| i.to_string()).collect();
            let _ = writeln!(out, "{}", ["maxideal".to_string()].into_iter().chain(idx).collect::<Vec<_>>().join(" "));
            for i in 1..a.dim() {
                for j in i..a.dim() {
                    let p = a.basis_product(i, j);
                    if p.iter().any(|c| !c.is_zero()) {
                        let _ = writeln!(out, "mul {i} {j} : {}", join(p));
                    }
                }
            }
        }
        RingSpec::Sequence(s) => {
            let _ = writeln!(out, "ring hankel\n{}", field_line(s.field()));
            match s.form() {
                SeqSpec::FiniteSupport { entries, .. } => {
                    for (&(i, j), v) in entries {
                        let _ = writeln!(out, "beta {i} {j} : {v}");
                    }
                }
                SeqSpec::Hankel(HankelSeq::Hilbert) => out.push_str("seq hilbert\n"),
                SeqSpec::Hankel(HankelSeq::Explicit { prefix, .. }) => {
                    let items: Vec<String> = prefix
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| format!("{i}:{v}"))
                        .collect();
                    if !items.is_empty() {
                        let _ = writeln!(out, "seq finite {}", items.join(","));
                    }
                }
                SeqSpec::Hankel(HankelSeq::Recurrence { init, coeffs, .. }) => {
                    let _ = writeln!(out, "seq recurrence init {} coeffs {}", join(init), join(coeffs));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_loc(text: &str) -> (usize, usize, String) {
        match parse_ring(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_graded_cubic() {
        let spec = parse_ring("ring triple\nfield GF 2\ndimV 1\ndimW 1\nbeta 0 0 : 1\n").unwrap();
        let RingSpec::Triple(s) = spec else { panic!() };
        assert_eq!(s.beta(0, 0), &[Field::Prime(2).one()]);
    }

    #[test]
    fn parses_hilbert_and_sequences() {
        let spec = parse_ring("ring hankel\nfield Q\nseq hilbert\n").unwrap();
        let RingSpec::Sequence(s) = spec else { panic!() };
        assert_eq!(s.form(), &SeqSpec::Hankel(HankelSeq::Hilbert));

        let spec = parse_ring("ring hankel\nfield Q\nseq finite 0:1, 2:-1/2\n").unwrap();
        let RingSpec::Sequence(s) = spec else { panic!() };
        let q = Field::Rational;
        assert_eq!(
            s.form(),
            &SeqSpec::Hankel(HankelSeq::Explicit {
                field: q,
                prefix: vec![q.one(), q.zero(), q.ratio(-1, 2).unwrap()]
            })
        );

        let spec = parse_ring("ring hankel\nfield Q\nseq recurrence init 1 1 coeffs 1 1\n").unwrap();
        assert_eq!(spec, RingSpec::Sequence(SequenceTriple::new(q, SeqSpec::Hankel(HankelSeq::fibonacci(q))).unwrap()));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nring struct # kind\nfield Q\ndim 3\nmaxideal 1 2\nmul 1 1 : 0 0 1\n";
        let RingSpec::Presented(a) = parse_ring(text).unwrap() else { panic!() };
        assert!(a.validate().is_ok());
    }

    #[test]
    fn symmetry_conflict_is_an_error() {
        let text = "ring triple\nfield GF 2\ndimV 2\ndimW 1\nbeta 0 1 : 1\nbeta 1 0 : 0\n";
        let (line, column, message) = err_loc(text);
        assert_eq!((line, column), (6, 6));
        assert!(message.contains("conflicts"), "{message}");
    }

    #[test]
    fn errors_carry_locations() {
        assert_eq!(err_loc("ring triple\nfield GF 4\n").0, 2);
        assert_eq!(err_loc("ring triple\nfield GF 4\n").1, 10);
        let (l, c, m) = err_loc("ring triple\nfield Q\nfrobnicate 3\n");
        assert_eq!((l, c), (3, 1));
        assert!(m.contains("unknown directive"));
        let (l, c, _) = err_loc("ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 0 : 1 2\n");
        assert_eq!((l, c), (5, 1));
        let (l, c, _) = err_loc("ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 0 : x\n");
        assert_eq!((l, c), (5, 12));
        let (l, _, m) = err_loc("ring hankel\nfield GF 3\nseq hilbert\n");
        assert_eq!(l, 3);
        assert!(m.contains("requires field Q"));
        let (l, _, m) = err_loc("ring struct\nfield GF 2\ndim 2\nmul 1 1 : 1 0\n");
        assert_eq!(l, 4);
        assert!(m.contains("invalid algebra"), "{m}");
        assert_eq!(err_loc("").0, 1);
        assert_eq!(err_loc("field Q\n").0, 1);
    }

    #[test]
    fn canonical_text_round_trips() {
        let files = [
            "ring triple\nfield GF 3\ndimV 2\ndimW 2\nbeta 0 0 : 1 2\nbeta 0 1 : 0 1\n",
            "ring struct\nfield Q\ndim 3\nmaxideal 1 2\nmul 1 1 : 0 0 1\n",
            "ring struct\nfield GF 2\ndim 1\nmaxideal\n",
            "ring hankel\nfield Q\nseq hilbert\n",
            "ring hankel\nfield Q\nseq finite 0:1,3:-2/3\n",
            "ring hankel\nfield GF 5\nseq recurrence init 1 2 coeffs 4 1\n",
            "ring hankel\nfield Q\nbeta 0 0 : 1\nbeta 1 4 : 1/2\n",
        ];
        for text in files {
            let spec = parse_ring(text).unwrap();
            assert_eq!(serialize_ring(&spec), text);
            assert_eq!(parse_ring(&serialize_ring(&spec)).unwrap(), spec);
        }
    }
}
