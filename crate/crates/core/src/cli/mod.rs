//! Command-line front end.
//!
//! Exit codes: 0 = HOLDS (or success), 1 = FAILS (or failures found),
//! 2 = UNKNOWN, 3 = input error.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::diamond::{decide_diamond, shortcut_lemmas, Outcome, Verdict, Witness, DEFAULT_WINDOW};
use crate::error::{Error, Result};
use crate::exactalg::{default_enumeration_bound, enumerate_subspaces, Field, Scalar, SubspaceBasis};
use crate::hankel::{hilbert_det_formula, HankelSeq};
use crate::oracle::{
    all_presented_algebras, all_triple_rings, enumerate_ideals, random_presented_algebras, random_triple_rings,
    run_algebra_suite, run_triple_suite, verify_finite_dual_all, verify_finite_dual_trivext, LemmaSuite, Report,
};

pub use format::{parse_ring, serialize_ring, RingSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cubezero", version, about = "Exact computations for cube-zero quasi-local rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether injective hulls of simple modules are locally Artinian.
    Check {
        file: PathBuf,
        /// Hankel rows and columns to examine for sequence rings.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        /// Emit a JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Print a basis of the socle.
    Socle { file: PathBuf },
    /// Print the associated graded ring as a triple ring file.
    Gr { file: PathBuf },
    /// Count ideals and subdirectly irreducible ideals (finite fields only).
    Ideals { file: PathBuf },
    /// Brute-force a lemma suite over small rings.
    Verify {
        /// correspondence, krull, colon-socle, squarezero, compare-vf or finite-dual.
        lemma: String,
        #[arg(long, default_value = "GF2")]
        field: String,
        #[arg(long = "dimV", default_value_t = 2)]
        dim_v: usize,
        #[arg(long = "dimW", default_value_t = 2)]
        dim_w: usize,
        /// Algebra dimension for compare-vf.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Exhaustive sweep (the default).
        #[arg(long, conflicts_with = "random")]
        all: bool,
        /// Number of seeded random cases instead of a sweep.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the closed-form Hilbert determinant with elimination.
    HilbertDet { n: usize },
    /// Rank of the Hankel form of a sequence ring.
    HankelRank {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
}

/// Parses arguments and runs one command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Check { file, window, json } => cmd_check(&load(&file)?, window, json, out),
        Command::Socle { file } => cmd_socle(&load(&file)?, out),
        Command::Gr { file } => cmd_gr(&load(&file)?, out),
        Command::Ideals { file } => cmd_ideals(&load(&file)?, out),
        Command::Verify {
            lemma,
            field,
            dim_v,
            dim_w,
            dim,
            all: _,
            random,
            seed,
        } => {
            let lemma: LemmaSuite = lemma.parse()?;
            let field = parse_field_flag(&field)?;
            let report = cmd_verify(lemma, field, dim_v, dim_w, dim, random, seed)?;
            writeln!(out, "{report}").map_err(io)?;
            Ok(if report.is_ok() { EXIT_OK } else { EXIT_FAILS })
        }
        Command::HilbertDet { n } => cmd_hilbert_det(n, out),
        Command::HankelRank { file, window } => cmd_hankel_rank(&load(&file)?, window, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("write failed: {e}"))
}

fn load(path: &Path) -> Result<RingSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    parse_ring(&text).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))
}

/// `Q`, `GF2`, `GF(2)` or `GF 2`.
pub fn parse_field_flag(s: &str) -> Result<Field> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("GF")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::Precondition(format!("unknown field '{s}', expected Q or GF<p>")))?;
    Field::prime(p)
}

fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::Holds => EXIT_OK,
        Outcome::Fails => EXIT_FAILS,
        Outcome::Unknown => EXIT_UNKNOWN,
    }
}

fn witness_label(w: &Witness) -> String {
    match w {
        Witness::ArtinianFiniteDim { length } => format!("ArtinianFiniteDim(length={length})"),
        Witness::SocleCodimFinite(r) => format!("SocleCodimFinite({r})"),
        Witness::BadFunctional(d) => format!("BadFunctional({d})"),
        Witness::BadFactor(c) => format!("BadFactorCert(window={}, nondegenerate={})", c.window, c.nondegenerate()),
        Witness::WindowExhausted(n) => format!("WindowExhausted({n})"),
    }
}

fn show(v: &[Scalar]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
}

fn ring_details(spec: &RingSpec, window: usize) -> Result<Vec<String>> {
    Ok(match spec {
        RingSpec::Triple(s) => vec![
            format!("ring: {s}"),
            format!("dim Soc = {}, dim m^2 = {}", s.socle().dim(), s.radical_square().dim()),
        ],
        RingSpec::Presented(a) => {
            let g = a.gr()?;
            vec![format!("dim A = {}", a.dim()), format!("gr(A): {g}")]
        }
        RingSpec::Sequence(s) => vec![format!("form rank on window {window}: {}", s.form().form_rank(window))],
    })
}

fn verdict_details(v: &Verdict) -> Vec<String> {
    match &v.witness {
        Witness::BadFactor(c) => {
            let mut d = vec![c.description()];
            let shown: Vec<String> = c.leading_minors.iter().take(4).map(ToString::to_string).collect();
            d.push(format!(
                "det(B_k) for k = 1..{}: {}{}",
                c.window,
                shown.join(", "),
                if c.window > shown.len() { ", .." } else { "" }
            ));
            d.push(format!(
                "nondegeneracy certificate: {}",
                if c.nondegenerate() { "verified" } else { "incomplete" }
            ));
            d
        }
        _ => Vec::new(),
    }
}

fn cmd_check(spec: &RingSpec, window: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let verdict = decide_diamond(spec.as_ring_ref(), window)?;
    let shortcut = shortcut_lemmas(spec.as_ring_ref())?;
    let mut details = verdict_details(&verdict);
    details.push(match &shortcut {
        None => "shortcut: none".to_string(),
        Some(s) => format!(
            "shortcut: {} [{}]",
            s.summary(),
            if s.outcome == verdict.outcome { "agrees" } else { "DISAGREES" }
        ),
    });
    details.extend(ring_details(spec, window)?);
    if as_json {
        let doc = json!({
            "verdict": verdict.outcome.to_string(),
            "witness": witness_label(&verdict.witness),
            "lemma": verdict.lemma.map(|l| l.tag()),
            "window": window,
            "details": details,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json value")).map_err(io)?;
    } else {
        writeln!(out, "{}", verdict.summary()).map_err(io)?;
        writeln!(out, "witness: {}", witness_label(&verdict.witness)).map_err(io)?;
        writeln!(out, "window: {window}").map_err(io)?;
        for d in &details {
            writeln!(out, "{d}").map_err(io)?;
        }
    }
    Ok(exit_code(verdict.outcome))
}

fn write_basis(out: &mut dyn Write, space: &SubspaceBasis) -> Result<()> {
    for v in space.basis_vectors() {
        writeln!(out, "  {}", show(&v)).map_err(io)?;
    }
    Ok(())
}

fn cmd_socle(spec: &RingSpec, out: &mut dyn Write) -> Result<i32> {
    match spec {
        RingSpec::Triple(s) => {
            let soc = s.socle();
            let label = if soc.dim() == s.m_dim() { " (all of m)" } else { "" };
            writeln!(
                out,
                "Soc = 0 × V⊥ × W{label}: dim Soc = {}, dim m/Soc = {}",
                soc.dim(),
                s.m_dim() - soc.dim()
            )
            .map_err(io)?;
            writeln!(out, "basis in V ⊕ W coordinates:").map_err(io)?;
            write_basis(out, soc.space())?;
        }
        RingSpec::Presented(a) => {
            let soc = a.socle();
            writeln!(out, "Soc = Ann(m): dim Soc = {}, dim m/Soc = {}", soc.dim(), a.dim() - 1 - soc.dim())
                .map_err(io)?;
            writeln!(out, "basis in e_0..e_{} coordinates:", a.dim() - 1).map_err(io)?;
            write_basis(out, &soc)?;
        }
        RingSpec::Sequence(s) => {
            let rank = s.form().form_rank(DEFAULT_WINDOW);
            writeln!(out, "Soc = 0 × V⊥ × F: dim m/Soc = dim V/V⊥ = {rank}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gr(spec: &RingSpec, out: &mut dyn Write) -> Result<i32> {
    let graded = match spec {
        RingSpec::Presented(a) => RingSpec::Triple(a.gr()?),
        other => other.clone(),
    };
    write!(out, "{}", serialize_ring(&graded)).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_ideals(spec: &RingSpec, out: &mut dyn Write) -> Result<i32> {
    let rows: Vec<(SubspaceBasis, bool)> = match spec {
        RingSpec::Triple(s) => enumerate_ideals(s, default_enumeration_bound(s.field()))?
            .into_iter()
            .map(|i| Ok((i.space().clone(), s.is_subdirectly_irreducible(&i)?)))
            .collect::<Result<_>>()?,
        RingSpec::Presented(a) => {
            let n = a.dim();
            let positions: Vec<usize> = (1..n).collect();
            let mut rows = Vec::new();
            for sub in enumerate_subspaces(a.field(), n - 1, None, default_enumeration_bound(a.field()))? {
                let u = sub.embed(n, &positions)?;
                if !a.is_ideal(&u)? {
                    continue;
                }
                let si = u.dim() == n - 1 || a.colon_maximal(&u)?.dim() == u.dim() + 1;
                rows.push((u, si));
            }
            rows
        }
        RingSpec::Sequence(_) => {
            return Err(Error::Precondition("ideal enumeration needs a finite-dimensional ring".into()));
        }
    };
    let si = rows.iter().filter(|(_, s)| *s).count();
    writeln!(out, "{} ideals, {} SI", rows.len(), si).map_err(io)?;
    for (u, s) in &rows {
        let basis: Vec<String> = u.basis_vectors().iter().map(|v| show(v)).collect();
        writeln!(out, "  dim {} {{{}}}{}", u.dim(), basis.join(", "), if *s { " SI" } else { "" }).map_err(io)?;
    }
    Ok(EXIT_OK)
}

/// Runs one lemma suite; `random` switches from the exhaustive sweep to
/// seeded random cases.
pub fn cmd_verify(
    lemma: LemmaSuite,
    field: Field,
    dim_v: usize,
    dim_w: usize,
    dim: usize,
    random: Option<usize>,
    seed: u64,
) -> Result<Report> {
    if !field.is_finite() {
        return Err(Error::InfiniteField(field));
    }
    let mut report = match lemma {
        LemmaSuite::CompareVf => {
            let algebras = match random {
                Some(k) => random_presented_algebras(field, dim, k, seed)?,
                None => all_presented_algebras(field, dim)?,
            };
            run_algebra_suite(&algebras)?
        }
        LemmaSuite::FiniteDual => {
            let mut total = Report::new(lemma);
            for dv in 1..=dim_v {
                let r = match random {
                    Some(k) => verify_finite_dual_trivext(dv, field, k, seed)?,
                    None => verify_finite_dual_all(dv, field)?,
                };
                total = total.merge(r);
            }
            total
        }
        _ => {
            let rings = match random {
                Some(k) => random_triple_rings(field, dim_v + dim_w, k, seed)?,
                None => all_triple_rings(field, dim_v, dim_w)?,
            };
            run_triple_suite(lemma, &rings)?
        }
    };
    if random.is_some() {
        report.seed = Some(seed);
    }
    Ok(report)
}

fn cmd_hilbert_det(n: usize, out: &mut dyn Write) -> Result<i32> {
    if n == 0 {
        return Err(Error::Precondition("hilbert-det needs N >= 1".into()));
    }
    let formula = hilbert_det_formula(n);
    let elimination = HankelSeq::Hilbert.hankel_matrix(n).det_fraction_free()?;
    let (rel, code) = if formula == elimination { ("=", EXIT_OK) } else { ("!=", EXIT_FAILS) };
    writeln!(out, "{formula} (formula) {rel} {elimination} (elimination)").map_err(io)?;
    Ok(code)
}

fn cmd_hankel_rank(spec: &RingSpec, window: usize, out: &mut dyn Write) -> Result<i32> {
    let RingSpec::Sequence(s) = spec else {
        return Err(Error::Precondition("hankel-rank needs a 'ring hankel' file".into()));
    };
    if window == 0 {
        return Err(Error::Precondition("window must be at least 1".into()));
    }
    writeln!(out, "{}", s.form().form_rank(window)).map_err(io)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cubezero").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn field_flags() {
        assert_eq!(parse_field_flag("GF2").unwrap(), Field::Prime(2));
        assert_eq!(parse_field_flag("GF(3)").unwrap(), Field::Prime(3));
        assert_eq!(parse_field_flag("Q").unwrap(), Field::Rational);
        assert!(parse_field_flag("GF4").is_err());
        assert!(parse_field_flag("R").is_err());
    }

    #[test]
    fn hilbert_det_lines() {
        assert_eq!(run_args(&["hilbert-det", "2"]).1, "1/12 (formula) = 1/12 (elimination)\n");
        assert_eq!(run_args(&["hilbert-det", "1"]).1, "1 (formula) = 1 (elimination)\n");
        assert_eq!(run_args(&["hilbert-det", "0"]).0, EXIT_INPUT);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_args(&["verify", "krull", "--field", "GF2", "--dimV", "1", "--dimW", "1", "--all"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("lemma=krull rings=5 "), "{out}");
        assert_eq!(run_args(&["verify", "nonsense"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["verify", "krull", "--field", "Q"]).0, EXIT_INPUT);
        let (code, out, _) = run_args(&["verify", "colon-socle", "--random", "3", "--seed", "9", "--dimV", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.trim_end().ends_with("seed=9"), "{out}");
    }

    #[test]
    fn usage_errors_exit_three() {
        assert_eq!(run_args(&[]).0, EXIT_INPUT);
        assert_eq!(run_args(&["check"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["check", "/nonexistent.ring"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }
}
