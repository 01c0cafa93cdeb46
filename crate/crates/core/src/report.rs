//! Serializable report types emitted by the library and the CLI.

use crate::C;
use serde::{Deserialize, Serialize};

/// Complex number serialized as `{ "re": ..., "im": ... }`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<C> for Cx {
    fn from(z: C) -> Cx {
        Cx { re: z.re, im: z.im }
    }
}

impl From<Cx> for C {
    fn from(z: Cx) -> C {
        C::new(z.re, z.im)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, Default)]
pub struct DetDiagnostics {
    /// `|prefactor|` for thm3 / `|A denominator|`-style distance; absent when
    /// not applicable.
    pub resonance_distance: Option<f64>,
    /// Discrepancy between closed forms and their quadrature cross-checks
    /// (G and E), or the oracle refinement estimate.
    pub quadrature_error_estimate: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DetReport {
    pub method: String,
    pub alpha: f64,
    pub g: Cx,
    pub e: Cx,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_or_b: Option<Cx>,
    pub value: Cx,
    pub diagnostics: DetDiagnostics,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// One record of a sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRecord {
    pub alpha: f64,
    pub method: String,
    pub det: Cx,
    pub g: Cx,
    pub e: Cx,
    pub a_or_b: Option<Cx>,
    pub resonance_distance: Option<f64>,
    pub quadrature_error_estimate: f64,
    pub time_ms: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairError {
    pub alpha: f64,
    pub method_a: String,
    pub method_b: String,
    pub abs_error: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairSlope {
    pub method_a: String,
    pub method_b: String,
    /// Fitted slope of `log |det_a - det_b|` against `alpha`.
    pub slope: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    /// Echo of the symbol spec source.
    pub spec: String,
    pub records: Vec<SweepRecord>,
    pub pair_errors: Vec<PairError>,
    pub pair_slopes: Vec<PairSlope>,
}

/// All floats in machine-readable output are printed with 17 significant
/// digits, enough for bit-for-bit round-trips.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}
