//! JSON documents for matrices and states.
//!
//! ```text
//! {"kind":"matrix","dim":n,"data":[[re,im],...]}
//! {"kind":"state","d":d,"sites":N,"amplitudes":[[re,im],...]}
//! ```
//!
//! Entries are row-major. Every float is written with 17 significant digits
//! so that a write/read cycle is bit-exact.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::tensor::{ComplexMatrix, StateVector};

fn push_float(out: &mut String, x: f64) {
    write!(out, "{x:.16e}").expect("writing to a String");
}

fn push_pairs(out: &mut String, values: &[Complex64]) {
    out.push('[');
    for (i, z) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        push_float(out, z.re);
        out.push(',');
        push_float(out, z.im);
        out.push(']');
    }
    out.push(']');
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let mut out = format!(r#"{{"kind":"matrix","dim":{},"data":"#, m.dim());
    push_pairs(&mut out, m.data());
    out.push('}');
    out
}

pub fn state_to_json(psi: &StateVector) -> String {
    let mut out = format!(
        r#"{{"kind":"state","d":{},"sites":{},"amplitudes":"#,
        psi.d(),
        psi.sites()
    );
    push_pairs(&mut out, psi.amplitudes());
    out.push('}');
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    kind: String,
    dim: usize,
    data: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    kind: String,
    d: usize,
    sites: usize,
    amplitudes: Vec<[f64; 2]>,
}

fn to_complex(pairs: Vec<[f64; 2]>) -> Vec<Complex64> {
    pairs
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect()
}

fn expect_kind(found: &str, want: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(Error::Data(format!(
            "expected kind \"{want}\", found \"{found}\""
        )))
    }
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
    expect_kind(&doc.kind, "matrix")?;
    ComplexMatrix::from_vec(doc.dim, to_complex(doc.data)).map_err(as_data_error)
}

/// Parses a state document; the norm must be within `norm_tol` of one.
pub fn state_from_json(text: &str, norm_tol: f64) -> Result<StateVector> {
    let doc: StateDoc = serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
    expect_kind(&doc.kind, "state")?;
    StateVector::with_norm_tolerance(doc.d, doc.sites, to_complex(doc.amplitudes), norm_tol)
        .map_err(as_data_error)
}

fn as_data_error(e: Error) -> Error {
    match e {
        Error::Unnormalized { .. } | Error::Data(_) => e,
        other => Error::Data(other.to_string()),
    }
}
