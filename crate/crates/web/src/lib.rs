//! WebAssembly bindings for the browser demo.
//!
//! Complex data crosses the boundary as flat `[re0, im0, re1, im1, ...]`
//! arrays. Each exported function wraps a plain Rust function so the logic
//! can be tested natively.

use qudit_braid::braid::{braid_matrix, verify_braid_relation};
use qudit_braid::entangle::{ghz_by_braid, ghz_closed_form, q_measure, GhzLabel};
use qudit_braid::tensor::QuditShape;
use qudit_braid::{Error, Result, DEFAULT_TOL};
use wasm_bindgen::prelude::*;

fn shape(d: usize, sites: usize) -> Result<QuditShape> {
    QuditShape::new(d, sites)
}

fn interleave<'a>(values: impl IntoIterator<Item = &'a qudit_braid::Complex64>) -> Vec<f64> {
    values.into_iter().flat_map(|z| [z.re, z.im]).collect()
}

pub fn braid_entries(d: usize, sites: usize) -> Result<Vec<f64>> {
    Ok(interleave(braid_matrix(&shape(d, sites)?)?.data()))
}

pub fn ghz_entries(d: usize, digits: &[usize], via_braid: bool) -> Result<Vec<f64>> {
    let label = GhzLabel::new(shape(d, digits.len())?, digits.to_vec())?;
    let psi = if via_braid {
        ghz_by_braid(&label)?
    } else {
        ghz_closed_form(&label)?
    };
    Ok(interleave(psi.amplitudes()))
}

/// `Q_m` of the GHZ state for every `m` from 1 to `N/2`.
pub fn ghz_q_profile(d: usize, digits: &[usize]) -> Result<Vec<f64>> {
    let label = GhzLabel::new(shape(d, digits.len())?, digits.to_vec())?;
    let psi = ghz_closed_form(&label)?;
    (1..=digits.len() / 2).map(|m| q_measure(&psi, m)).collect()
}

pub fn braid_report(d: usize, sites: usize) -> Result<String> {
    Ok(verify_braid_relation(&shape(d, sites)?, DEFAULT_TOL)?.to_json())
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn digits(k: &[u32]) -> Vec<usize> {
    k.iter().map(|&x| x as usize).collect()
}

/// Row-major braid matrix entries, interleaved.
#[wasm_bindgen(js_name = braidMatrix)]
pub fn braid_matrix_js(d: usize, sites: usize) -> std::result::Result<Vec<f64>, JsError> {
    braid_entries(d, sites).map_err(js)
}

#[wasm_bindgen(js_name = ghzState)]
pub fn ghz_state_js(
    d: usize,
    k: &[u32],
    via_braid: bool,
) -> std::result::Result<Vec<f64>, JsError> {
    ghz_entries(d, &digits(k), via_braid).map_err(js)
}

#[wasm_bindgen(js_name = ghzQProfile)]
pub fn ghz_q_profile_js(d: usize, k: &[u32]) -> std::result::Result<Vec<f64>, JsError> {
    ghz_q_profile(d, &digits(k)).map_err(js)
}

/// Braid relation and unitarity residuals as a JSON report.
#[wasm_bindgen(js_name = verifyBraid)]
pub fn verify_braid_js(d: usize, sites: usize) -> std::result::Result<String, JsError> {
    braid_report(d, sites).map_err(js)
}
