//! Browser demo: generate a tournament, find its arrow-simplicity with a
//! witness, delete a vertex and extend back, show the skew-Hadamard matrix.
//!
//! Everything crosses the JS boundary as `.trn` text or JSON strings. The
//! `#[wasm_bindgen]` wrappers at the bottom only convert errors; the logic
//! lives in the plain functions so it can be tested natively.

use arrowsimp::{
    arrow_simplicity_with, cheap_witnesses, dr_to_skew_hadamard, is_doubly_regular,
    lakhlifi_extend, near_regular_partition, nontrivial_module, paley_tournament, parse_trn,
    random_tournament, to_trn, ArcSet, Regularity, SearchOptions, Tournament, VertexSet,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Exact search above this order is too slow on a single browser thread.
pub const EXACT_LIMIT: usize = 20;

#[derive(Debug, Serialize)]
pub struct View {
    pub n: usize,
    /// Row-major, `matrix[i*n + j] == 1` iff `i -> j`.
    pub matrix: Vec<u8>,
    pub regularity: &'static str,
    pub doubly_regular: bool,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    /// When false, `s` is the certified upper bound `min(δ, Δ)`.
    pub exact: bool,
    pub s: usize,
    pub simple: bool,
    pub min_degree: usize,
    pub min_separators: usize,
    pub theorem_bound: usize,
    pub module: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct Extension {
    pub deleted: String,
    pub s: usize,
    /// `.trn` of the extended tournament, the new vertex labelled last.
    pub extended: Option<String>,
    pub reason: Option<String>,
}

fn parse(trn: &str) -> Result<Tournament, String> {
    parse_trn(trn).map_err(|e| e.to_string())
}

pub fn generate(kind: &str, size: u32, seed: u32) -> Result<String, String> {
    let t = match kind {
        "paley" => paley_tournament(size as u64),
        "random" => random_tournament(size as usize, seed as u64),
        other => return Err(format!("unknown kind {other:?}")),
    };
    t.map(|t| to_trn(&t)).map_err(|e| e.to_string())
}

pub fn view(trn: &str) -> Result<View, String> {
    let t = parse(trn)?;
    let n = t.n();
    let matrix = (0..n * n).map(|k| t.dominates(k / n, k % n) as u8).collect();
    let regularity = match t.regularity_class() {
        Ok(Regularity::Regular) => "regular",
        Ok(Regularity::NearRegular { .. }) => "near-regular",
        _ => "neither",
    };
    let doubly_regular = n % 4 == 3 && is_doubly_regular(&t).ok().flatten().is_some();
    Ok(View { n, matrix, regularity, doubly_regular })
}

pub fn analyze(trn: &str) -> Result<Analysis, String> {
    let t = parse(trn)?;
    let pairs = |a: &ArcSet| a.iter().collect::<Vec<_>>();
    if t.n() <= EXACT_LIMIT {
        let r = arrow_simplicity_with(&t, &SearchOptions::default()).map_err(|e| e.to_string())?;
        return Ok(Analysis {
            exact: true,
            s: r.s,
            simple: r.simple,
            min_degree: r.min_degree,
            min_separators: r.min_separators,
            theorem_bound: r.theorem_bound,
            module: r.witness_module.to_vec(),
            arcs: pairs(&r.witness_arcs),
        });
    }
    // upper bound with a certificate
    let p = t.global_minima().map_err(|e| e.to_string())?;
    let w = cheap_witnesses(&t).map_err(|e| e.to_string())?;
    let found = nontrivial_module(&t);
    let (module, arcs) = match found {
        Some(m) => (m, ArcSet::default()),
        None if w.vertex_arcs.len() <= w.pair_arcs.len() => (w.vertex_module, w.vertex_arcs),
        None => (w.pair_module, w.pair_arcs),
    };
    Ok(Analysis {
        exact: false,
        s: arcs.len(),
        simple: found.is_none(),
        min_degree: p.min_degree,
        min_separators: p.min_separators,
        theorem_bound: arrowsimp::theorem_bound(t.n()),
        module: module.to_vec(),
        arcs: pairs(&arcs),
    })
}

/// Deletes `vertex` and tries to add one vertex back so that the result is
/// doubly regular.
pub fn delete_and_extend(trn: &str, vertex: usize) -> Result<Extension, String> {
    let t = parse(trn)?;
    if vertex >= t.n() {
        return Err(format!("vertex {vertex} out of range 0..{}", t.n()));
    }
    let sub = t.delete_vertices(VertexSet::singleton(vertex)).map_err(|e| e.to_string())?;
    let deleted = to_trn(&sub);
    let s = match analyze(&deleted) {
        Ok(a) => a.s,
        Err(_) => 0,
    };
    let ext = near_regular_partition(&sub).and_then(|p| lakhlifi_extend(&sub, &p));
    Ok(match ext {
        Ok(e) => Extension { deleted, s, extended: Some(to_trn(&e)), reason: None },
        Err(e) => Extension { deleted, s, extended: None, reason: Some(e.to_string()) },
    })
}

/// The bordered skew-Hadamard matrix as row-major `+1/-1`.
pub fn hadamard(trn: &str) -> Result<Vec<i8>, String> {
    let h = dr_to_skew_hadamard(&parse(trn)?).map_err(|e| e.to_string())?;
    Ok(h.entries().concat())
}

fn js<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = generate)]
pub fn generate_js(kind: &str, size: u32, seed: u32) -> Result<String, JsError> {
    generate(kind, size, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = view)]
pub fn view_js(trn: &str) -> Result<String, JsError> {
    js(view(trn))
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(trn: &str) -> Result<String, JsError> {
    js(analyze(trn))
}

#[wasm_bindgen(js_name = deleteAndExtend)]
pub fn delete_and_extend_js(trn: &str, vertex: u32) -> Result<String, JsError> {
    js(delete_and_extend(trn, vertex as usize))
}

#[wasm_bindgen(js_name = hadamard)]
pub fn hadamard_js(trn: &str) -> Result<String, JsError> {
    js(hadamard(trn))
}
