use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn planar_pair_feeds_thin_directions() {
    let pair = parse(homometry_demo::planar_pair(2));
    assert_eq!(pair["nontrivial"], true);
    let w = parse(homometry_demo::thin_directions(&pair["tiling"].to_string()));
    assert_eq!(w["count"], 6);
}

#[test]
fn errors_are_json() {
    assert!(parse(homometry_demo::thin_directions("{")).get("error").is_some());
    assert!(parse(homometry_demo::planar_pair(0)).get("error").is_some());
}

#[test]
fn small_classification() {
    let r = parse(homometry_demo::classify(7, 18));
    assert_eq!(r["survivors"], 14);
    assert_eq!(r["classes"].as_array().unwrap().len(), 1);
}
