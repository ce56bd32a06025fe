//! Browser bindings. Each function returns a JSON string; errors come back as
//! `{"error": message}` so the page never has to catch exceptions.

use homometry::classify2d::{self, SearchConfig};
use homometry::constructions;
use homometry::json::{RationalRepr, TilingDoc};
use homometry::{tiling, Error, PointSet};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn points(k: &PointSet) -> Value {
    serde_json::to_value(k.iter().collect::<Vec<_>>()).expect("points serialize")
}

fn finish(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({"error": e.to_string()}).to_string(),
    }
}

/// The planar pair for parameter `k`: tile, lattice, `S`, both sums.
#[wasm_bindgen]
pub fn planar_pair(k: i32) -> String {
    finish((|| {
        let p = constructions::planar_family(k as i64, None)?;
        Ok(json!({
            "tiling": TilingDoc::from(&p.tiling),
            "S": points(&p.s),
            "sum": points(&p.sum),
            "mirrored_sum": points(&p.mirrored_sum),
            "homometric": p.is_homometric(),
            "nontrivial": p.nontrivial,
        }))
    })())
}

/// Thin directions of a tiling document.
#[wasm_bindgen]
pub fn thin_directions(tiling_json: &str) -> String {
    let doc: TilingDoc = match serde_json::from_str(tiling_json) {
        Ok(doc) => doc,
        Err(e) => return json!({"error": e.to_string()}).to_string(),
    };
    finish((|| {
        let t = doc.to_tiling()?;
        let w = tiling::w_set(t.t(), t.l())?;
        let vectors: Vec<Value> =
            w.widths.iter().map(|(u, x)| json!({"u": u, "width": RationalRepr(x.clone())})).collect();
        Ok(json!({"T": points(t.t()), "count": w.len(), "vectors": vectors}))
    })())
}

/// Planar classification over an inclusive determinant range.
#[wasm_bindgen]
pub fn classify(det_min: u32, det_max: u32) -> String {
    let config = SearchConfig { det_min: det_min as u64, det_max: det_max as u64, workers: 1, ..SearchConfig::default() };
    finish((|| {
        let r = classify2d::classify(&config)?;
        let classes: Vec<Value> = r
            .classes
            .iter()
            .map(|c| json!({"T": points(&c.representative), "members": c.members.len(), "centrally_symmetric": c.centrally_symmetric}))
            .collect();
        Ok(json!({
            "bases": r.bases.len(),
            "q_tried": r.totals.q_tried,
            "survivors": r.totals.survivors,
            "classes": classes,
        }))
    })())
}
