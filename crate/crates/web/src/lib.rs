//! Browser bindings: root plots of `D_i` for family graphs, graph6 input
//! and unit-disk expansions. Each exported function returns a JSON string;
//! the `*_json` functions behind them are plain Rust and tested natively.

use indom::enumeration::{alpha, di_polynomial, gamma_i, independence_polynomial, is_well_covered};
use indom::poly::{complex_roots, is_real_rooted, min_expansion_for_unit_disk, DEFAULT_TOL};
use indom::{FamilySpec, Graph, IntPoly, RootReport};
use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the page will enumerate; keeps the tab responsive.
pub const MAX_ORDER: usize = 40;

fn guard(g: &Graph) -> Result<(), String> {
    if g.order() > MAX_ORDER {
        return Err(format!("the demo is limited to {MAX_ORDER} vertices, this graph has {}", g.order()));
    }
    Ok(())
}

fn roots_json(p: &IntPoly, report: &RootReport) -> Value {
    json!({
        "polynomial": p.to_string(),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "real_rooted": report.real_rooted,
        "converged": report.converged,
        "roots": report
            .complex_roots
            .iter()
            .map(|z| json!({"re": z.re, "im": z.im, "multiplicity": z.multiplicity}))
            .collect::<Vec<_>>(),
    })
}

/// `D_i` of a family graph and its roots. `a` and `b` fill the family's
/// parameters in order (`n`, then `m`, `q` or `k`).
pub fn family_polynomial_json(family: &str, a: usize, b: usize) -> Result<Value, String> {
    let (n, second) = if family == "k_path" || family == "generalized_friendship" { (b, a) } else { (a, b) };
    let parts;
    let parts_arg = if family == "complete_multipartite" {
        parts = vec![a, b];
        Some(parts.as_slice())
    } else {
        None
    };
    let spec = FamilySpec::from_parts(family, Some(n), Some(second), Some(second), Some(second), parts_arg)
        .map_err(|e| e.to_string())?;
    let g = spec.graph().map_err(|e| e.to_string())?;
    guard(&g)?;
    let d = di_polynomial(&g).map_err(|e| e.to_string())?;
    let report = complex_roots(&d, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let mut out = roots_json(&d, &report);
    out["graph"] = json!(spec.to_string());
    out["graph6"] = json!(g.to_graph6().map_err(|e| e.to_string())?);
    Ok(out)
}

pub fn analyze_graph6_json(text: &str) -> Result<Value, String> {
    let g = Graph::from_graph6(text.trim()).map_err(|e| e.to_string())?;
    guard(&g)?;
    let d = di_polynomial(&g).map_err(|e| e.to_string())?;
    let i = independence_polynomial(&g).map_err(|e| e.to_string())?;
    let report = complex_roots(&d, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let mut out = roots_json(&d, &report);
    out["order"] = json!(g.order());
    out["size"] = json!(g.size());
    out["independence"] = json!(i.to_string());
    out["independence_real_rooted"] = json!(is_real_rooted(&i).map_err(|e| e.to_string())?);
    out["claw_free"] = json!(g.is_claw_free());
    if g.order() > 0 {
        out["gamma_i"] = json!(gamma_i(&g).map_err(|e| e.to_string())?);
        out["alpha"] = json!(alpha(&g).map_err(|e| e.to_string())?);
        out["well_covered"] = json!(is_well_covered(&g).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// Roots of `D_i(G, r x)`, the polynomial of the graph with every vertex
/// blown up into `K_r`. `r = 0` picks the smallest `r` whose coefficients
/// are nondecreasing, which places every root in the closed unit disk.
pub fn expansion_roots_json(text: &str, r: usize) -> Result<Value, String> {
    let g = Graph::from_graph6(text.trim()).map_err(|e| e.to_string())?;
    guard(&g)?;
    let d = di_polynomial(&g).map_err(|e| e.to_string())?;
    let (r, scaled, report) = if r == 0 {
        let exp = min_expansion_for_unit_disk(&d, DEFAULT_TOL).map_err(|e| e.to_string())?;
        (exp.r, exp.scaled, exp.report)
    } else {
        let r = BigInt::from(r);
        let scaled = d.scale_arg(&r);
        let report = complex_roots(&scaled, DEFAULT_TOL).map_err(|e| e.to_string())?;
        (r, scaled, report)
    };
    let mut out = roots_json(&scaled, &report);
    out["r"] = json!(r.to_string());
    out["within_unit_disk"] = json!(report.nonzero_roots_within(1e-9));
    Ok(out)
}

fn to_js(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn family_polynomial(family: &str, a: usize, b: usize) -> Result<String, JsError> {
    to_js(family_polynomial_json(family, a, b))
}

#[wasm_bindgen]
pub fn analyze_graph6(text: &str) -> Result<String, JsError> {
    to_js(analyze_graph6_json(text))
}

#[wasm_bindgen]
pub fn expansion_roots(text: &str, r: usize) -> Result<String, JsError> {
    to_js(expansion_roots_json(text, r))
}
