use std::path::PathBuf;
use std::process::{Command, Output};

use toric_classes::classes::{compute_class, ClassKind};
use toric_classes::io::{parse_fan, CycleReport};

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(rel)
}

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = toric(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn path(rel: &str) -> String {
    fixture(rel).to_string_lossy().into_owned()
}

fn temp_file(name: &str, contents: &str) -> String {
    let p = std::env::temp_dir().join(format!("toric-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn info_reports_singular_cone() {
    let (code, out) = run(&["fan", "info", &path("fans/wps121.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("smooth: no"));
    assert!(out.contains("[1, 2] multiplicity 2"));
    let (code, out) = run(&["fan", "info", &path("fans/p2.json"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["smooth"], true);
    assert_eq!(v["cone_counts"], serde_json::json!([1, 3, 3]));
}

#[test]
fn class_json_round_trips() {
    let file = path("fans/wps121.json");
    let fan = parse_fan(&std::fs::read_to_string(&file).unwrap()).unwrap();
    for (kind, extra) in [
        (ClassKind::ToddLRR, vec!["--kind", "todd"]),
        (
            ClassKind::HirzebruchNormalized,
            vec!["--kind", "hirzebruch", "--normalized"],
        ),
        (ClassKind::MockHirzebruch, vec!["--kind", "mock"]),
        (ClassKind::TClass, vec!["--kind", "t-class"]),
    ] {
        let mut args = vec!["fan", "class", file.as_str(), "--format", "json"];
        args.extend(extra);
        let (code, out) = run(&args);
        assert_eq!(code, 0);
        let report = CycleReport::parse(&out).unwrap();
        assert_eq!(report.kind, kind.name());
        let expected = compute_class(&fan, kind, None, None).unwrap();
        assert_eq!(report.class(&fan).unwrap(), expected);
        assert_eq!(CycleReport::parse(&report.to_json()).unwrap(), report);
    }
}

#[test]
fn specialized_class() {
    let file = path("fans/p2.json");
    let (code, out) = run(&[
        "fan",
        "class",
        &file,
        "--kind",
        "hirzebruch",
        "--normalized",
        "--y",
        "-1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let report = CycleReport::parse(&out).unwrap();
    assert_eq!(report.y.as_deref(), Some("-1"));
    // Each orbit closure appears with coefficient 1.
    assert_eq!(report.cycle.len(), 7);
    assert!(report.cycle.iter().all(|e| e.coefficient == "1"));
    let fan = parse_fan(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let c = compute_class(&fan, ClassKind::ChernEhler, None, None).unwrap();
    assert_eq!(report.class(&fan).unwrap(), c);
}

#[test]
fn class_on_subset() {
    let sub = temp_file("subset.json", r#"{"cones": [[0], [0, 1], [0, 2]]}"#);
    let (code, out) = run(&[
        "fan",
        "class",
        &path("fans/p2.json"),
        "--kind",
        "chern",
        "--subcomplex",
        &sub,
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cone,orbit_dim,coefficient\n[0],1,1\n\"[0, 1]\",0,1\n\"[0, 2]\",0,1\n"
    );
    let bad = temp_file("not-closed.json", r#"{"cones": [[0]]}"#);
    let (code, _) = run(&[
        "fan",
        "class",
        &path("fans/p2.json"),
        "--kind",
        "chern",
        "--subcomplex",
        &bad,
    ]);
    assert_eq!(code, 1);
}

#[test]
fn verify_passes_on_fixtures() {
    for name in ["p2", "p1xp1", "wps121", "t3", "t5", "cube3", "simplex3"] {
        let (code, out) = run(&[
            "fan",
            "verify",
            &path(&format!("fans/{name}.json")),
            "--format",
            "json",
        ]);
        assert_eq!(code, 0, "{name}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["all_passed"], true, "{name}");
    }
}

#[test]
fn polytope_verbs() {
    let (code, out) = run(&["polytope", "facets", &path("polytopes/triangle.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);

    let (code, out) = run(&[
        "polytope",
        "ehrhart",
        &path("polytopes/triangle.json"),
        "--max-dilate",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "dilation,count,polynomial,residual\n0,1,1,0\n1,3,3,0\n2,6,6,0\n3,10,10,0\n"
    );

    let (code, out) = run(&[
        "polytope",
        "weighted",
        &path("polytopes/square.json"),
        "--subcomplex",
        &path("subcomplexes/square_edge.json"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("equal: yes"));

    let (code, out) = run(&["polytope", "pick", &path("polytopes/square2.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("lattice points: 9 (8 boundary, 1 interior)"));

    let (code, out) = run(&[
        "polytope",
        "hirzpoly",
        &path("polytopes/square2.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["per_p"], serde_json::json!(["9", "6", "1"]));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "fan",
        "class",
        &path("fans/cube3.json"),
        "--kind",
        "hirzebruch",
        "--format",
        "json",
    ]
    .map(String::from);
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    assert_eq!(run(&args), run(&args));
}

#[test]
fn exit_codes() {
    let p2 = path("fans/p2.json");
    assert_eq!(run(&["fan", "info", "/nonexistent/fan.json"]).0, 1);
    let broken = temp_file("broken.json", "{\"lattice_rank\": 2,");
    assert_eq!(run(&["fan", "info", &broken]).0, 1);
    assert_eq!(
        run(&["fan", "class", &p2, "--kind", "hirzebruch", "--y", "-1"]).0,
        1
    );
    assert_eq!(
        run(&["fan", "class", &p2, "--kind", "todd", "--normalized"]).0,
        1
    );
    assert_eq!(
        run(&["fan", "class", &p2, "--kind", "todd", "--y", "2"]).0,
        1
    );
    assert_eq!(run(&["fan", "class", &p2, "--kind", "nonsense"]).0, 1);
    assert_eq!(run(&["fan", "info", &p2, "--format", "csv"]).0, 1);
    assert_eq!(
        run(&["polytope", "pick", &path("polytopes/cube.json")]).0,
        3
    );
    let non_simplicial = temp_file(
        "octahedron-fan.json",
        r#"{"lattice_rank": 3, "rays": [[1,1,1],[1,-1,1],[-1,-1,1],[-1,1,1]], "max_cones": [[0,1,2,3]]}"#,
    );
    assert_eq!(
        run(&["fan", "class", &non_simplicial, "--kind", "todd"]).0,
        3
    );
    assert_eq!(run(&["--help"]).0, 0);
}
