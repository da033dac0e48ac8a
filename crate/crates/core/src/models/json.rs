//! JSON model files: `{"kind": "...", "coeffs": ["..."], "meta": {...}}`.
//!
//! Coefficient order: quartic (a, b, c, d, e); form22 row-major a11..a33 with rows
//! indexed by x1^2, x1x2, x2^2 and columns by y1^2, y1y2, y2^2; cubic
//! x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3; cube s_ijk with i slowest;
//! hypercube H_ijkl with i slowest.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{normalize, Model, ModelKind, Normalized, RatModel};
use crate::error::{Error, Result};
use crate::exactnum::parse_rat;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub kind: ModelKind,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl ModelFile {
    pub fn from_model(m: &Model) -> Self {
        ModelFile { kind: m.kind(), coeffs: m.coeffs().iter().map(|c| c.to_string()).collect(), meta: None }
    }

    pub fn to_rational(&self) -> Result<RatModel> {
        let c: Vec<BigRational> = self.coeffs.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
        Model::from_coeffs(self.kind, &c)
    }

    /// Integral model with denominators cleared.
    pub fn to_model(&self) -> Result<Normalized> {
        Ok(normalize(&self.to_rational()?))
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files serialize")
    }
}

/// Serializes a model field as a model file object.
pub fn serialize_model<S: serde::Serializer>(m: &Model, s: S) -> std::result::Result<S::Ok, S::Error> {
    ModelFile::from_model(m).serialize(s)
}
