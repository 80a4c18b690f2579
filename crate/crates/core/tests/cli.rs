use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn wehrhart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wehrhart"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_match_golden_files() {
    for name in ["simplex_2", "square", "pyramid_over_square", "octahedron"] {
        let input = data(&format!("{name}.json"));
        let o = wehrhart(&["invariants", "--input", input.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(&format!("invariants_{name}.txt")), "{name}");
    }
}

#[test]
fn invariants_json() {
    let input = data("pyramid_over_square.json");
    let o = wehrhart(&["invariants", "--input", input.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["ic_chi_y"],
        serde_json::json!([[0, 1, 1], [1, -2, 1], [2, 2, 1], [3, -1, 1]])
    );
    assert_eq!(v["signature"], serde_json::json!([0, 1]));
    assert_eq!(v["simple"], Value::Bool(false));
}

#[test]
fn corpus_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    let o = wehrhart(&["corpus", "cube", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(data("cube_3.json")).unwrap()
    );

    let o = wehrhart(&["faces", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("f-vector: (8, 12, 6, 1)"));
    assert!(stdout(&o).contains("euler characteristic: 1"));
}

#[test]
fn boundary_weights_on_the_cube() {
    let input = data("cube_3.json");
    let o = wehrhart(&[
        "weighted",
        "--input",
        input.to_str().unwrap(),
        "--weights-kind",
        "boundary",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in v["values"].as_array().unwrap() {
        assert_eq!(row["value"], row["direct"]);
    }
    // At y = 0 only the boundary faces' interior points survive.
    let e = &v["polynomial"];
    let y0 = |k: usize| -> i64 {
        e[k].as_array()
            .unwrap()
            .iter()
            .find(|t| t[0] == 0)
            .map_or(0, |t| t[1].as_i64().unwrap())
    };
    assert_eq!((y0(0), y0(1), y0(2)), (2, 0, 6));
}

#[test]
fn exit_codes() {
    let square = data("square.json");
    let square = square.to_str().unwrap();
    assert_eq!(
        wehrhart(&["check", "reciprocity", "--input", square]).status.code(),
        Some(0)
    );

    let fail = wehrhart(&[
        "check",
        "purity",
        "--input",
        square,
        "--weights-kind",
        "indicator",
        "--face",
        "0,1",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("l=0: FAIL"));
    assert!(stdout(&fail).contains("difference: -1 + y^2"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "dim": 2, "vertices": [[0,0],[1,0]"#).unwrap();
    let o = wehrhart(&["faces", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));

    assert_eq!(
        wehrhart(&["check", "nonsense", "--input", square]).status.code(),
        Some(2)
    );
    assert_eq!(wehrhart(&["faces"]).status.code(), Some(2));
    assert_eq!(
        wehrhart(&["faces", "--input", square, "--budget", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn weight_tables_warn_on_missing_faces() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    std::fs::write(
        &w,
        r#"{"kind": "table", "entries": [{"face": [0,1,2], "weight": [[0,1,1]]}]}"#,
    )
    .unwrap();
    let input = data("simplex_2.json");
    let o = wehrhart(&[
        "check",
        "oracle",
        "--input",
        input.to_str().unwrap(),
        "--weights",
        w.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.matches("missing from weight table").count(), 6);
}

#[test]
fn count_subcommand() {
    let input = data("cube_3.json");
    let o = wehrhart(&[
        "count",
        "--input",
        input.to_str().unwrap(),
        "--dilation",
        "3",
        "--mode",
        "relint",
    ]);
    assert!(stdout(&o).ends_with(": 8\n"));
    let o = wehrhart(&[
        "count",
        "--input",
        input.to_str().unwrap(),
        "--face",
        "0,1",
        "--dilation",
        "4",
    ]);
    assert!(stdout(&o).ends_with(": 5\n"));
    let o = wehrhart(&["count", "--input", input.to_str().unwrap(), "--face", "0,7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dehn_sommerville_rejects_non_simple_input() {
    let input = data("octahedron.json");
    let o = wehrhart(&["check", "dehn-sommerville", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not simple"));
}

#[test]
fn json_reports_round_trip() {
    use weighted_ehrhart::{standard_polytope, Ehrhart, FaceId, PolytopeKind, WeightFunction, WeightedEhrhartPoly};

    let square = Ehrhart::new(standard_polytope(PolytopeKind::Cube, 2).unwrap()).unwrap();
    let input = data("square.json");
    let input = input.to_str().unwrap();
    let cases = [
        (
            vec!["--weights-kind", "constant"],
            WeightFunction::constant(square.lattice()),
        ),
        (
            vec!["--weights-kind", "indicator", "--face", "0,1"],
            WeightFunction::indicator(square.lattice(), &FaceId::new(vec![0, 1])).unwrap(),
        ),
    ];
    for (flags, f) in cases {
        let mut args = vec!["weighted", "--input", input, "--format", "json"];
        args.extend(flags);
        let v: Value = serde_json::from_slice(&wehrhart(&args).stdout).unwrap();
        let parsed: WeightedEhrhartPoly = serde_json::from_value(v["polynomial"].clone()).unwrap();
        assert_eq!(parsed, square.weighted_ehrhart(&f).unwrap());
    }
}

#[test]
fn weighted_square_text() {
    let input = data("square.json");
    let o = wehrhart(&["weighted", "--input", input.to_str().unwrap(), "--lmax", "2"]);
    // (1+y)^2 (z-1)^2 + 4(1+y)(z-1) + 4
    assert_eq!(
        stdout(&o),
        "polytope: square\n\
         weights: constant\n\
         E(z, y) coefficients:\n  \
         z^0: 1 - 2y + y^2\n  \
         z^1: 2 - 2y^2\n  \
         z^2: 1 + 2y + y^2\n\
         constant term E(0, y): 1 - 2y + y^2\n\
         values:\n  \
         l=1: E = 4; direct = 4 [match]\n  \
         l=2: E = 9 + 6y + y^2; direct = 9 + 6y + y^2 [match]\n"
    );
    let o = wehrhart(&[
        "weighted",
        "--input",
        input.to_str().unwrap(),
        "--weights-kind",
        "indicator",
        "--face",
        "0,1",
    ]);
    assert!(stdout(&o).contains("  z^0: -1 - y\n  z^1: 1 + y\n"));
}

#[test]
fn corpus_sizes() {
    for (args, n) in [
        (&["corpus", "cube", "3"][..], 8),
        (&["corpus", "cross", "4"][..], 8),
        (&["corpus", "pyramid_over_square"][..], 5),
    ] {
        let v: Value = serde_json::from_slice(&wehrhart(args).stdout).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), n);
    }
    assert_eq!(wehrhart(&["corpus", "pyramid", "4"]).status.code(), Some(2));
}

#[test]
fn inline_weights() {
    let input = data("square.json");
    let o = wehrhart(&[
        "check",
        "reciprocity",
        "--input",
        input.to_str().unwrap(),
        "--weights",
        r#"{"kind": "indicator", "face": [0, 1]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("weights: inline"));
}
