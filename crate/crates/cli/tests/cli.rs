use assert_cmd::Command;
use serde_json::Value;

fn punctual() -> Command {
    Command::cargo_bin("punctual").unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = punctual().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn worked_example_series() {
    let v = json_of(&["tangent", "x1^3, x2^2, x1*x3, x1*x2, x3^4"]);
    assert_eq!(v["positive_series"], "5T+3T^2");
    assert_eq!(v["series"]["3"], 0);
    let k = json_of(&["tangent", "x1^3, x2^2, x1*x3, x1*x2, x3^4", "--backend", "kernel"]);
    assert_eq!(v["series"], k["series"]);
}

#[test]
fn curvilinear_ideal_has_expected_dimension() {
    let v = json_of(&["tangent", "x1, x2, x3^11"]);
    assert_eq!(v["T_nonneg"], 20);
    assert_eq!(v["D"], 0);
}

#[test]
fn apolar_tangent_of_witness() {
    let v = json_of(&["tangent", "--dual", "y1^4, y2^3, y3*y4"]);
    assert_eq!(v["T_pos"], 17);
}

#[test]
fn window_restricts_series() {
    let v = json_of(&["tangent", "x1^2, x1*x2, x2^2", "--window", "0:1"]);
    let keys: Vec<&String> = v["series"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["0", "1"]);
}

#[test]
fn syzygy_backend_rejects_non_monomial() {
    punctual().args(["tangent", "x1^2 - x2^2, x1*x2", "--backend", "syzygy"]).assert().code(2);
}

#[test]
fn every_verify_check_passes() {
    for check in ["worked-example", "exceptional-ideals", "h3eq1-negligible", "counterexamples", "classified-loci", "n-bound"] {
        let v = json_of(&["verify", check]);
        assert_eq!(v["passed"], true, "{check}");
    }
}

#[test]
fn tables_match_reference() {
    let v = json_of(&["tables", "o-sequences"]);
    assert_eq!(v["match"], true);
    assert_eq!(v["tables"][0]["computed"][10], 57);
}

#[test]
fn output_is_independent_of_thread_count() {
    for format in ["json", "csv", "ascii"] {
        let a = punctual().args(["--jobs", "1", "--format", format, "tables", "n3-counts", "--kmax", "9"]).output().unwrap();
        let b = punctual().args(["--jobs", "4", "--format", format, "tables", "n3-counts", "--kmax", "9"]).output().unwrap();
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn randomized_commands_need_seed() {
    punctual().args(["regular", "--n", "2", "--k", "3"]).assert().code(2);
    punctual().args(["apolar", "--random", "3,2", "--n", "3"]).assert().code(2);
    let a = json_of(&["--seed", "7", "apolar", "--random", "3,2", "--n", "3"]);
    let b = json_of(&["--seed", "7", "apolar", "--random", "3,2", "--n", "3"]);
    assert_eq!(a, b);
}

#[test]
fn regular_map_passes_sampled_check() {
    let v = json_of(&["--seed", "3", "regular", "--n", "2", "--k", "3", "--trials", "30"]);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn too_small_map_fails_regularity() {
    // (1, x) has a 2-dimensional span, so no three points are independent.
    punctual().args(["--seed", "3", "regular", "--n", "1", "--k", "3", "--map-k", "2", "--trials", "5"]).assert().code(1);
}

#[test]
fn exit_codes() {
    punctual().args(["tangent", "x1^"]).assert().code(2);
    punctual().args(["bogus"]).assert().code(2);
    punctual().args(["--cap", "50", "enumerate", "--kind", "monomial", "--n", "3", "--k", "11"]).assert().code(3);
    punctual().args(["cache", "status"]).assert().code(2);
}

#[test]
fn oseq_counts_and_check() {
    let v = json_of(&["oseq", "--k", "11"]);
    assert_eq!(v["count"], 57);
    let c = json_of(&["oseq", "--check", "1,3,7"]);
    assert_eq!(c["o_sequence"], false);
}

#[test]
fn bounds_values() {
    assert_eq!(json_of(&["bounds", "gorenstein", "--n", "5", "--b", "5", "--s", "3"])["dimension"], 44);
    assert_eq!(json_of(&["bounds", "n-bound", "--tau", "3", "--k", "9", "--n", "5"])["N"], 71);
    let m = json_of(&["bounds", "margin", "--kind", "tau_2", "--n", "5"]);
    assert_eq!(m["margin"], 4);
    assert_eq!(m["verdict"], "violating");
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    json_of(&["--cache-dir", d, "tables", "n3-counts", "--kmax", "5"]);
    let status = json_of(&["--cache-dir", d, "cache", "status"]);
    assert_eq!(status["entries"], 15);

    // A tampered entry is reported as a mismatch by rebuild, which then repairs it.
    let path = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut entry: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    entry["value"] = Value::from(entry["value"].as_u64().unwrap() + 1000);
    std::fs::write(&path, entry.to_string()).unwrap();
    punctual().args(["--cache-dir", d, "cache", "rebuild"]).assert().code(1);
    punctual().args(["--cache-dir", d, "cache", "rebuild"]).assert().code(0);

    let cleared = json_of(&["--cache-dir", d, "cache", "clear"]);
    assert_eq!(cleared["removed"], 15);
}

#[test]
fn csv_and_ascii_formats() {
    let out = punctual().args(["--format", "csv", "oseq", "--k", "3"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "hilbert\n\"(1,1,1)\"\n\"(1,2)\"\n");
    let out = punctual().args(["--format", "ascii", "bounds", "fiber", "--n", "4", "--a", "5", "--b", "1"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "dimension\n---------\n5\n");
}
