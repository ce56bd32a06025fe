use homometry_cli::{run, Outcome};
use serde_json::Value;

const K2_TILING: &str = r#"{"M":{"basis":[[1,0],[0,1]]},"L":{"basis":[[6,0],[3,1]]},"T":{"points":[[0,0],[1,0],[2,0],[0,1],[1,1],[2,1]]}}"#;

fn call(args: &[&str]) -> Outcome {
    call_stdin(args, "")
}

fn call_stdin(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["homometry"];
    argv.extend_from_slice(args);
    run(argv, &mut stdin.as_bytes())
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.output).expect("output is JSON")
}

#[test]
fn wset_of_two_row_tile_has_six_vectors() {
    let o = call(&["wset", K2_TILING]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["count"], 6);
    assert_eq!(v["payload"]["vectors"].as_array().unwrap().len(), 6);
}

#[test]
fn input_is_read_from_stdin_and_files() {
    let from_stdin = call_stdin(&["wset", "-"], K2_TILING);
    let path = std::env::temp_dir().join(format!("homometry-cli-{}.json", std::process::id()));
    std::fs::write(&path, K2_TILING).unwrap();
    let from_file = call(&["wset", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_stdin, call(&["wset", K2_TILING]));
    assert_eq!(from_file, from_stdin);
}

#[test]
fn identical_sets_are_homometric() {
    let o = call(&["homometric", r#"{"K":{"points":[[0,0],[1,0],[0,3]]},"L":{"points":[[0,0],[1,0],[0,3]]}}"#]);
    assert_eq!(o.code, 0);
    assert_eq!(json(&o)["payload"]["homometric"], true);
}

#[test]
fn non_homometric_sets_report_a_differing_vector() {
    let o = call(&["homometric", r#"{"K":{"points":[[0],[1]]},"L":{"points":[[0],[2]]}}"#]);
    assert_eq!(o.code, 1);
    let v = json(&o);
    assert_eq!(v["status"], "violation");
    let w = &v["witnesses"];
    assert_ne!(w["K"], w["L"]);
}

#[test]
fn reflection_is_trivially_homometric() {
    let o = call(&["trivially-homometric", r#"{"K":{"points":[[0,0],[1,0],[0,2]]},"L":{"points":[[5,5],[4,5],[5,3]]}}"#]);
    assert_eq!(o.code, 0);
}

#[test]
fn gap_is_a_convexity_witness() {
    let o = call(&["lattice-convex", r#"{"points":[[0,0],[2,0]]}"#]);
    assert_eq!(o.code, 1);
    assert_eq!(json(&o)["witnesses"]["gap"], serde_json::json!([1, 0]));
    let coarse = call(&["lattice-convex", r#"{"points":[[0,0],[2,0]],"lattice":{"basis":[[2,0],[0,1]]}}"#]);
    assert_eq!(coarse.code, 0);
}

#[test]
fn overlapping_sum_is_a_violation() {
    let o = call(&["direct-sum", r#"{"S":{"points":[[0],[1]]},"T":{"points":[[0],[1]]}}"#]);
    assert_eq!(o.code, 1);
    assert_eq!(json(&o)["witnesses"]["point"], serde_json::json!([1]));
}

#[test]
fn rational_widths_print_as_fractions() {
    let o = call(&["width", r#"{"points":[["1/2",0],[2,0]],"direction":[1,0]}"#]);
    assert_eq!(o.code, 0);
    assert_eq!(json(&o)["payload"]["width"], "3/2");
}

#[test]
fn overlapping_tile_fails_verification() {
    let o = call(&["verify-tiling", r#"{"M":{"basis":[[1,0],[0,1]]},"L":{"basis":[[2,0],[0,1]]},"T":{"points":[[0,0],[0,1]]}}"#]);
    assert_eq!(o.code, 1);
    assert!(json(&o)["witnesses"]["reason"].is_string());
}

#[test]
fn schema_errors_carry_the_json_path() {
    let o = call(&["wset", r#"{"M":{"basis":[[1,0],[0,1]]},"L":{"basis":[[6,0],[3,1]]},"T":{"points":[[0,0],[1,"x"]]}}"#]);
    assert_eq!(o.code, 2);
    let v = json(&o);
    assert_eq!(v["status"], "error");
    assert_eq!(v["payload"]["path"], "T.points[1][1]");
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(call(&["no-such-verb"]).code, 2);
    assert_eq!(call(&["classify2d", "--det-range", "9"]).code, 2);
    assert_eq!(call(&["wset", "/nonexistent/file.json"]).code, 2);
}

#[test]
fn emitted_tiling_round_trips() {
    let o = call(&["gen-example", "planar", "--k", "2"]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    let tiling = v["payload"]["tiling"].to_string();
    let verified = call(&["verify-tiling", &tiling]);
    assert_eq!(verified.code, 0);
    let reparsed: homometry::json::TilingDoc = serde_json::from_str(&tiling).unwrap();
    assert_eq!(serde_json::to_value(&reparsed).unwrap(), v["payload"]["tiling"]);
    let s = serde_json::json!({"points": v["payload"]["S"], "lattice": v["payload"]["tiling"]["L"]}).to_string();
    let wset = call(&["wset", &tiling]);
    assert_eq!(json(&wset)["payload"]["count"], 6);
    assert_eq!(v["payload"]["nontrivial"], true);
    assert_eq!(call(&["lattice-convex", &s]).code, 0);
}

#[test]
fn counterexample_ab_has_b_without_a() {
    let v = json(&call(&["gen-example", "counterexample-ab"]));
    assert_eq!(v["payload"]["abc"]["a"], false);
    assert_eq!(v["payload"]["abc"]["b"], true);
}

#[test]
fn classification_defaults_find_one_central_class() {
    let o = call(&["classify2d"]);
    assert_eq!(o.code, 0);
    let p = &json(&o)["payload"];
    assert_eq!(p["det_range"], serde_json::json!([7, 18]));
    assert_eq!(p["q_tried"], 12759);
    assert_eq!(p["survivors"], 14);
    assert_eq!(p["noncentrally_symmetric_classes"], 0);
    assert_eq!(p["centrally_symmetric_classes"], 1);
}

#[test]
fn classification_output_is_independent_of_workers() {
    let one = call(&["classify2d", "--det-range", "7:12", "--workers", "1"]);
    let three = call(&["classify2d", "--det-range", "7:12", "--workers", "3"]);
    assert_eq!(one, three);
    let text_one = call(&["classify2d", "--det-range", "7:12", "--workers", "1", "--report", "text"]);
    let text_three = call(&["classify2d", "--det-range", "7:12", "--workers", "3", "--report", "text"]);
    assert_eq!(text_one, text_three);
}

#[test]
fn irregular_catalog_lists_every_example() {
    let v = json(&call(&["irregular-catalog"]));
    let names: Vec<&str> = v["payload"]["examples"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["line", "space", "plane-skew", "plane-box"]);
}
