//! wasm-bindgen entry points for the static page in `www/`.
//!
//! Each export returns a JSON string; the `*_json` functions are the same
//! computations with a plain `Result<String, String>` so they can be tested natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use virasoro::jantzen::{character_formula, CharacterCase};
use virasoro::scalars::{parse_rational, Rational};
use virasoro::singular::bdiz_singular;
use virasoro::verma::{c_curve, gram_matrix, kac_det_direct, VermaParams};

/// Levels above this make the page sluggish.
pub const MAX_LEVEL: u32 = 8;
pub const MAX_ORDER: u32 = 40;

fn rational(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).ok_or_else(|| format!("{name}: not a rational number: {s:?}"))
}

/// Dimension, Gram rank and Kac determinant of M(c,h) at levels 1..=max_level.
pub fn gram_ranks_json(c: &str, h: &str, max_level: u32) -> Result<String, String> {
    if !(1..=MAX_LEVEL).contains(&max_level) {
        return Err(format!("level must be in 1..={MAX_LEVEL}"));
    }
    let params = VermaParams::rational(rational("c", c)?, rational("h", h)?);
    let levels: Vec<_> = (1..=max_level)
        .map(|n| {
            let g = gram_matrix(n, &params);
            json!({
                "level": n,
                "dim": g.basis.len(),
                "rank": g.entries.rank(),
                "det": kac_det_direct(n, &params).to_string(),
            })
        })
        .collect();
    Ok(json!({ "c": c, "h": h, "levels": levels }).to_string())
}

/// Irreducible character to order q^{h+n}: `c1` selects L(1, j²), otherwise L(c_m, h_{r,s}).
pub fn character_json(c1: bool, j: &str, m: i64, r: i64, s: i64, n: u32) -> Result<String, String> {
    if n > MAX_ORDER {
        return Err(format!("order must be at most {MAX_ORDER}"));
    }
    let case = if c1 {
        let j = rational("j", j)?;
        if j < Rational::from_integer(0.into()) {
            return Err("j must be non-negative".into());
        }
        CharacterCase::C1 { j }
    } else {
        if m < 2 || !(1..m).contains(&r) || !(1..=m).contains(&s) {
            return Err("need m ≥ 2, 1 ≤ r < m, 1 ≤ s ≤ m".into());
        }
        CharacterCase::Discrete { m, r, s }
    };
    let series = character_formula(&case, n);
    Ok(json!({
        "c": case.central_charge().to_string(),
        "h": case.weight().to_string(),
        "character": series.to_json(),
    })
    .to_string())
}

/// Singular vector at level 2j+1 on the Kac curve, coefficients polynomial in t.
pub fn singular_vector_json(j: &str) -> Result<String, String> {
    let j = rational("j", j)?;
    if (j.denom() != &2.into() && !j.is_integer()) || j > Rational::from_integer(3.into()) {
        return Err("j must be a half-integer in 0..=3".into());
    }
    let v = bdiz_singular(&j).map_err(|e| e.to_string())?;
    Ok(json!({ "level": v.level(), "c": c_curve().to_string(), "vector": v.terms_json() }).to_string())
}

#[wasm_bindgen]
pub fn gram_ranks(c: &str, h: &str, max_level: u32) -> Result<String, JsError> {
    gram_ranks_json(c, h, max_level).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn character(c1: bool, j: &str, m: i32, r: i32, s: i32, n: u32) -> Result<String, JsError> {
    character_json(c1, j, m.into(), r.into(), s.into(), n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn singular_vector(j: &str) -> Result<String, JsError> {
    singular_vector_json(j).map_err(|e| JsError::new(&e))
}
