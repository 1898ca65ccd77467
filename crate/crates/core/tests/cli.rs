use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn ring_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../rings")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cubezero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubezero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn out(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_ring(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("cubezero-{}-{name}.ring", std::process::id()));
    std::fs::File::create(&path)
        .and_then(|mut f| f.write_all(text.as_bytes()))
        .expect("temp file");
    path
}

#[test]
fn check_exit_codes_follow_verdicts() {
    assert_eq!(cubezero(&["check", &ring_path("sparse.ring")]).status.code(), Some(0));
    assert_eq!(cubezero(&["check", &ring_path("hilbert.ring")]).status.code(), Some(1));
    let finite = cubezero(&["check", &ring_path("gf2_cubic.ring")]);
    assert_eq!(finite.status.code(), Some(0));
    assert!(out(&finite).starts_with("HOLDS (Artinian)"));
}

#[test]
fn window_too_small_for_the_closed_form_is_still_decided() {
    let o = cubezero(&["check", "--window", "1", &ring_path("hilbert.ring")]);
    assert_eq!(o.status.code(), Some(1), "{}", out(&o));
}

#[test]
fn parse_errors_exit_three_with_location() {
    let path = temp_ring("conflict", "ring triple\nfield GF 2\ndimV 2\ndimW 1\nbeta 0 1 : 1\nbeta 1 0 : 0\n");
    let o = cubezero(&["check", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 6, column 6"), "{err}");
}

#[test]
fn json_report_has_the_documented_fields() {
    let o = cubezero(&["check", "--json", "--window", "10", &ring_path("hilbert.ring")]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid json");
    assert_eq!(doc["verdict"], "FAILS");
    assert_eq!(doc["lemma"], "badfactor");
    assert_eq!(doc["window"], 10);
    assert!(doc["witness"].as_str().unwrap().contains("nondegenerate=true"));
    assert!(doc["details"].as_array().is_some_and(|d| !d.is_empty()));

    let o = cubezero(&["check", "--json", &ring_path("gf2_cubic.ring")]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid json");
    assert_eq!(doc["verdict"], "HOLDS");
    assert!(doc["lemma"].is_null());
}

#[test]
fn socle_gr_and_ideals() {
    let zero = temp_ring("zero", "ring triple\nfield GF 3\ndimV 2\ndimW 1\n");
    let o = cubezero(&["socle", zero.to_str().unwrap()]);
    let _ = std::fs::remove_file(&zero);
    assert!(out(&o).contains("(all of m)"), "{}", out(&o));

    let o = cubezero(&["gr", &ring_path("cubic.ring")]);
    assert_eq!(out(&o), "ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 0 : 1\n");

    let o = cubezero(&["ideals", &ring_path("gf2_cubic.ring")]);
    assert!(out(&o).starts_with("3 ideals, 3 SI\n"), "{}", out(&o));
    let o = cubezero(&["ideals", &ring_path("gf3_cubic.ring")]);
    assert!(out(&o).starts_with("3 ideals, 3 SI\n"), "{}", out(&o));
    assert_eq!(cubezero(&["ideals", &ring_path("cubic.ring")]).status.code(), Some(3));
    assert_eq!(cubezero(&["ideals", &ring_path("hilbert.ring")]).status.code(), Some(3));
}

#[test]
fn hankel_rank_reports() {
    assert_eq!(out(&cubezero(&["hankel-rank", &ring_path("hilbert.ring"), "--window", "5"])), "AtLeast 5\n");
    assert_eq!(out(&cubezero(&["hankel-rank", &ring_path("fibonacci.ring")])), "FiniteRank 2\n");
    assert_eq!(cubezero(&["hankel-rank", &ring_path("cubic.ring")]).status.code(), Some(3));
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "correspondence", "--field", "GF2", "--dimV", "2", "--dimW", "1", "--all"][..],
        &["verify", "krull", "--field", "GF2", "--dimV", "2", "--dimW", "2", "--all"],
        &["verify", "compare-vf", "--field", "GF2", "--dim", "3", "--all"],
        &["verify", "finite-dual", "--field", "GF3", "--dimV", "2", "--all"],
    ] {
        let o = cubezero(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", out(&o));
        assert!(out(&o).contains("failures=0"));
    }
    assert_eq!(cubezero(&["verify", "riemann"]).status.code(), Some(3));
    assert_eq!(cubezero(&["verify", "krull", "--all", "--random", "2"]).status.code(), Some(3));
}

#[test]
fn random_verification_is_deterministic() {
    let args = ["verify", "colon-socle", "--field", "GF3", "--dimV", "2", "--dimW", "1", "--random", "6", "--seed", "42"];
    let a = out(&cubezero(&args));
    assert_eq!(a, out(&cubezero(&args)));
    assert!(a.trim_end().ends_with("seed=42"), "{a}");
}

#[test]
fn gr_output_reparses_to_the_same_verdict() {
    for name in ["cubic.ring", "gf3_cubic.ring"] {
        let gr = out(&cubezero(&["gr", &ring_path(name)]));
        let path = temp_ring(&format!("gr-{name}"), &gr);
        let a = cubezero(&["check", &ring_path(name)]);
        let b = cubezero(&["check", path.to_str().unwrap()]);
        let _ = std::fs::remove_file(&path);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(out(&a).lines().next(), out(&b).lines().next());
    }
}
