//! End-to-end tests of the `trisurf` binary: output contracts and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn catalog_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(name)
}

fn trisurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trisurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

#[test]
fn check_reports_the_double_torus_invariants() {
    let out = trisurf(&["check", catalog_file("N4.tri").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        "combinatorial 2-manifold, orientable, χ=−2, degree-regular type 7"
    );
}

#[test]
fn check_json_is_schema_stable() {
    let out = trisurf(&["check", catalog_file("N1.tri").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["manifold"], true);
    assert_eq!(v["orientable"], true);
    assert_eq!(v["chi"], -2);
    assert_eq!(v["degree_regular_type"], 7);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["f_vector"], serde_json::json!([12, 42, 28]));
}

#[test]
fn check_rejects_a_pinched_complex_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pinch.tri");
    std::fs::write(&path, "0 1 2\n0 3 4\n").unwrap();
    let out = trisurf(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("not a combinatorial 2-manifold"));
}

#[test]
fn unparseable_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tri");
    std::fs::write(&path, "0 1\n").unwrap();
    let out = trisurf(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_file_exits_2() {
    let out = trisurf(&["check", "/nonexistent/nowhere.tri"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flag_exits_2() {
    let out = trisurf(&["check", "--frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn invariants_json_lists_shapes_level_by_level() {
    let out =
        trisurf(&["invariants", catalog_file("N5.tri").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let levels = v["G_n"].as_array().unwrap();
    assert_eq!(levels.len(), 11); // m = 0 .. n−2 for n = 12
    assert_eq!(levels[2]["n"], 2);
    assert_eq!(levels[2]["shape"], "3×P2+6×I");
    assert_eq!(levels[5]["shape"], "3×C4");
}

#[test]
fn iso_finds_a_witness_for_relabeled_copies() {
    // Relabel N2 by hand: swap the two label blocks 0..5 and 6..11.
    let text = std::fs::read_to_string(catalog_file("N2.tri")).unwrap();
    let mut lines: Vec<String> = Vec::new();
    for line in text.lines() {
        let mapped: Vec<String> = line
            .split_whitespace()
            .map(|t| {
                let v: usize = t.parse().unwrap();
                ((v + 6) % 12).to_string()
            })
            .collect();
        lines.push(mapped.join(" "));
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n2-relabeled.tri");
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();

    let out = trisurf(&[
        "iso",
        catalog_file("N2.tri").to_str().unwrap(),
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["witness"]["images"].as_array().unwrap().len(), 12);
}

#[test]
fn iso_separates_the_two_order_12_members_by_group_structure() {
    let out = trisurf(&[
        "iso",
        catalog_file("N1.tri").to_str().unwrap(),
        catalog_file("N3.tri").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("non-isomorphic"));
    assert!(text.contains("Aut structure: Cyclic(12) vs Dihedral(6)"));
}

#[test]
fn aut_reports_the_klein_four_group() {
    let out = trisurf(&["aut", catalog_file("N6.tri").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["structure"], "KleinFour");
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn dual_emits_a_7_3_map_with_12_heptagons() {
    let out = trisurf(&["dual", catalog_file("N3.tri").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.iter().all(|l| l.split_whitespace().count() == 7));

    let out = trisurf(&["dual", catalog_file("N3.tri").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 28);
    assert_eq!(v["equivelar_type"], "{7,3}");
    assert_eq!(v["chi"], -2);
    assert_eq!(v["faces"].as_array().unwrap().len(), 12);
}

#[test]
fn dual_out_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.map");
    let out = trisurf(&[
        "dual",
        catalog_file("N1.tri").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 12);
}

#[test]
fn classify_chi_minus_2_orientable_reproduces_the_shipped_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = trisurf(&[
        "classify",
        "--chi",
        "-2",
        "--orientable",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("total: 6 classes"));

    for name in ["N1", "N2", "N3", "N4", "N5", "N6"] {
        let fresh = std::fs::read(dir.path().join(format!("{name}.tri"))).unwrap();
        let shipped = std::fs::read(catalog_file(&format!("{name}.tri"))).unwrap();
        assert_eq!(fresh, shipped, "{name}.tri differs from the shipped catalog");
    }
    let fresh = std::fs::read(dir.path().join("certificates.json")).unwrap();
    let shipped = std::fs::read(catalog_file("certificates.json")).unwrap();
    assert_eq!(fresh, shipped, "certificates.json differs from the shipped catalog");
}

#[test]
fn classify_sphere_parameters_each_give_one_class() {
    let out = trisurf(&["classify", "--chi", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("(4, 3): 1 class"));
    assert!(text.contains("(6, 4): 1 class"));
    assert!(text.contains("(12, 5): 1 class"));
    assert!(text.contains("total: 3 classes"));
}

#[test]
fn classify_chi_minus_1_has_no_admissible_parameters() {
    let out = trisurf(&["classify", "--chi", "-1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["runs"].as_array().unwrap().len(), 0);
    assert_eq!(v["total_classes"], 0);
}

#[test]
fn classify_limit_truncates_and_exits_1() {
    let out = trisurf(&["classify", "--chi", "-2", "--orientable", "--limit", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("(truncated)"));
}

#[test]
fn classify_no_prune_agrees_with_default() {
    let out = trisurf(&["classify", "--chi", "-2", "--orientable", "--no-prune"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("total: 6 classes"));
}

#[test]
fn classify_jobs_flag_controls_parallelism() {
    let out = trisurf(&["classify", "--chi", "-2", "--orientable", "--jobs", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("total: 6 classes"));
}

#[test]
fn catalog_lists_all_six_members() {
    let out = trisurf(&["catalog"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    for name in ["N1", "N2", "N3", "N4", "N5", "N6"] {
        assert!(text.contains(&format!("{name}: ")), "missing {name}");
    }
}

#[test]
fn catalog_exports_one_member_as_its_shipped_face_list() {
    let out = trisurf(&["catalog", "N2"]);
    assert_eq!(code(&out), 0);
    let shipped = std::fs::read_to_string(catalog_file("N2.tri")).unwrap();
    assert_eq!(stdout(&out), shipped);
}

#[test]
fn catalog_identify_names_a_member_and_rejects_strangers() {
    let out = trisurf(&[
        "catalog",
        "--identify",
        catalog_file("N4.tri").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "N4");

    let dir = tempfile::tempdir().unwrap();
    let octa = dir.path().join("octa.tri");
    std::fs::write(
        &octa,
        "0 1 2\n0 2 3\n0 3 4\n0 4 1\n5 1 2\n5 2 3\n5 3 4\n5 4 1\n",
    )
    .unwrap();
    let out = trisurf(&["catalog", "--identify", octa.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("no catalog member matches"));
}

#[test]
fn verify_proof_confirms_all_six_subcases() {
    let out = trisurf(&["verify-proof", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        assert_eq!(r["outcome"], "verified", "subcase {} not verified", r["subcase"]);
        assert_eq!(r["faces_closed"], 28);
    }
    let pairs: Vec<(String, String)> = reports
        .iter()
        .map(|r| {
            (
                r["subcase"].as_str().unwrap().to_string(),
                r["expected"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let want = [
        ("1.1", "N1"),
        ("1.2", "N3"),
        ("2.1", "N4"),
        ("2.2", "N5"),
        ("3.1", "N6"),
        ("3.2", "N2"),
    ];
    for ((got_s, got_e), (want_s, want_e)) in pairs.iter().zip(want) {
        assert_eq!(got_s, want_s);
        assert_eq!(got_e, want_e);
    }
}
