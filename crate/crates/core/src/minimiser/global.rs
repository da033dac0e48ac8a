use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{minimise_22, minimise_cube, minimise_hypercube, minimise_quartic, MinimisationReport};
use crate::error::{Error, Result};
use crate::exactnum::{Factorizer, LocalContext, TrialDivision};
use crate::invariants::discriminant;
use crate::models::{GroupElement, Model};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalReport {
    #[serde(serialize_with = "crate::models::json::serialize_model")]
    pub input: Model,
    #[serde(rename = "final", serialize_with = "crate::models::json::serialize_model")]
    pub final_model: Model,
    pub transform: GroupElement,
    #[serde(with = "crate::models::bigint_str")]
    pub delta_initial: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub delta_final: BigInt,
    /// One local report per prime with v_p(Delta) >= 12, in increasing order.
    pub local: Vec<(u64, MinimisationReport)>,
}

impl GlobalReport {
    pub fn already_minimal(&self) -> bool {
        self.local.iter().all(|(_, r)| r.already_minimal())
    }
}

/// Runs the local minimiser of the model's kind at p.
pub fn minimise_local(m: &Model, ctx: &LocalContext) -> Result<MinimisationReport> {
    match m {
        Model::Quartic(g) => minimise_quartic(g, ctx),
        Model::Form22(f) => minimise_22(f, ctx),
        Model::Cube(s) => minimise_cube(s, ctx),
        Model::Hypercube(h) => minimise_hypercube(h, ctx),
        Model::Cubic(_) => Err(Error::Unsupported("ternary cubics are not minimised here".into())),
    }
}

pub fn minimise_global(m: &Model) -> Result<GlobalReport> {
    minimise_global_with(m, &TrialDivision::default())
}

/// Minimises at every prime whose exponent in the discriminant is at least 12.
/// Each local step only involves powers of that prime and unimodular matrices, so
/// the other local valuations are untouched.
pub fn minimise_global_with(m: &Model, factorizer: &dyn Factorizer) -> Result<GlobalReport> {
    let delta = discriminant(m)?;
    if delta.is_zero() {
        return Err(Error::Singular);
    }
    let mut cur = m.clone();
    let mut g = GroupElement::identity(m.kind());
    let mut local = Vec::new();
    for (p, e) in factorizer.factor(&delta)? {
        if e < 12 {
            continue;
        }
        let ctx = LocalContext::from_bigint(p)?;
        let r = minimise_local(&cur, &ctx)?;
        g = r.transform.compose(&g)?;
        cur = r.final_model.clone();
        local.push((ctx.p_u64(), r));
    }
    let delta_final = discriminant(&cur)?;
    Ok(GlobalReport { input: m.clone(), final_model: cur, transform: g, delta_initial: delta, delta_final, local })
}
