//! Browser bindings: products with their twist, egg-box grids and Gram
//! ranks. Every export returns a JSON string.

use diagram_monoids::algebra::{gram_matrix, parse_rational, twist};
use diagram_monoids::monoid::egg_box;
use diagram_monoids::{Diagram, Family};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const STEP: f64 = 40.0;
const ROW: f64 = 60.0;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn x_of(i: usize) -> f64 {
    20.0 + STEP * i as f64
}

/// SVG strip for `d`, with its upper row at `top`.
fn strip(d: &Diagram, top: f64) -> String {
    let n = d.degree();
    let bottom = top + ROW;
    let mut s = String::new();
    for (a, b) in d.blocks() {
        let (pa, pb) = (a.to_signed(), b.to_signed());
        let xa = x_of(pa.unsigned_abs() as usize - 1);
        let xb = x_of(pb.unsigned_abs() as usize - 1);
        let path = match (pa > 0, pb > 0) {
            (true, true) => format!("M{xa} {top} Q{} {} {xb} {top}", (xa + xb) / 2.0, top + (xb - xa).abs() * 0.4),
            (false, false) => {
                format!("M{xa} {bottom} Q{} {} {xb} {bottom}", (xa + xb) / 2.0, bottom - (xb - xa).abs() * 0.4)
            }
            (true, false) => format!("M{xa} {top} L{xb} {bottom}"),
            (false, true) => format!("M{xb} {top} L{xa} {bottom}"),
        };
        s.push_str(&format!("<path d=\"{path}\" fill=\"none\" stroke=\"#246\" stroke-width=\"2\"/>"));
    }
    for i in 0..n {
        for y in [top, bottom] {
            s.push_str(&format!("<circle cx=\"{}\" cy=\"{y}\" r=\"4\" fill=\"#000\"/>", x_of(i)));
        }
    }
    s
}

/// One SVG image with the diagrams stacked top to bottom.
pub fn stacked_svg(ds: &[&Diagram]) -> String {
    let n = ds.first().map(|d| d.degree()).unwrap_or(0).max(1);
    let width = x_of(n - 1) + 20.0;
    let height = 20.0 + ROW * ds.len() as f64 + 20.0;
    let body: String = ds.iter().enumerate().map(|(k, d)| strip(d, 20.0 + ROW * k as f64)).collect();
    format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\">{body}</svg>")
}

pub fn multiply_json(n: usize, a: &str, b: &str) -> Result<String, String> {
    let a = Diagram::parse(a, Some(n)).map_err(err)?;
    let b = Diagram::parse(b, Some(n)).map_err(err)?;
    let p = a.multiply(&b).map_err(err)?;
    let t = twist(&a, &b).map_err(err)?;
    Ok(json!({
        "product": p.product.to_string(),
        "loops": p.loops,
        "paths": p.paths,
        "twist": t.to_string(),
        "stacked": stacked_svg(&[&a, &b]),
        "result": stacked_svg(&[&p.product]),
    })
    .to_string())
}

pub fn egg_box_json(family: &str, n: usize, r: usize) -> Result<String, String> {
    let family: Family = family.parse().map_err(err)?;
    let eb = egg_box(family, n, r).map_err(err)?;
    let cells: Vec<Vec<Value>> = eb
        .cells
        .iter()
        .zip(&eb.idempotent)
        .map(|(row, idem)| {
            row.iter()
                .zip(idem)
                .map(|(c, &e)| {
                    json!({
                        "size": c.len(),
                        "idempotent": e,
                        "elements": c.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect()
        })
        .collect();
    Ok(json!({
        "family": family.name(),
        "n": n,
        "rank": r,
        "rows": eb.rows.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "cols": eb.cols.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "cells": cells,
    })
    .to_string())
}

pub fn gram_json(n: usize, r: usize, x: &str, y: &str) -> Result<String, String> {
    let x = parse_rational(x).map_err(err)?;
    let y = parse_rational(y).map_err(err)?;
    let g = gram_matrix(n, r).map_err(err)?;
    let k = g.rank_at(&x, &y);
    let entries: Vec<Vec<String>> = g.entries.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
    Ok(json!({
        "basis": g.basis.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "entries": entries,
        "matrix_rank": k.matrix_rank,
        "radical_dim": k.radical_dim,
        "dim_l": k.dim_l,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn multiply(n: usize, a: &str, b: &str) -> Result<String, JsValue> {
    multiply_json(n, a, b).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = eggBox)]
pub fn egg_box_js(family: &str, n: usize, r: usize) -> Result<String, JsValue> {
    egg_box_json(family, n, r).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn gram(n: usize, r: usize, x: &str, y: &str) -> Result<String, JsValue> {
    gram_json(n, r, x, y).map_err(|e| JsValue::from_str(&e))
}
