//! Local and global minimisation with transformation tracking.
//!
//! Every step is an explicit group element; the report carries their composite
//! `g` with `act(g, input) = final`.

mod cube;
mod form22;
mod global;
mod hypercube;
mod quartic;

pub use cube::minimise_cube;
pub use form22::{minimise_22, min22_patterns_hold};
pub use global::{minimise_global, minimise_global_with, minimise_local, GlobalReport};
pub use hypercube::minimise_hypercube;
pub use quartic::minimise_quartic;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{smith_like_completion, LocalContext, QMat};
use crate::invariants::discriminant;
use crate::models::{act, GroupElement, Model};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub label: String,
    pub witness: String,
    pub v_before: i64,
    pub v_after: i64,
}

impl Step {
    pub fn reduces(&self) -> bool {
        self.v_after < self.v_before
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimisationReport {
    #[serde(serialize_with = "crate::models::json::serialize_model")]
    pub input: Model,
    #[serde(rename = "final", serialize_with = "crate::models::json::serialize_model")]
    pub final_model: Model,
    pub transform: GroupElement,
    pub steps: Vec<Step>,
    /// Passes through the main loop.
    pub iterations: usize,
    pub v_delta_initial: i64,
    pub v_delta_final: i64,
    /// Number of Delta-neutral steps preceding each level decrease: the slope for
    /// quartics, the non-content chain for (2,2)-forms, the procedure chain for
    /// cubes and the procedure (i) chain for hypercubes.
    pub chains: Vec<usize>,
}

impl MinimisationReport {
    pub fn reducing_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.reduces()).count()
    }

    pub fn already_minimal(&self) -> bool {
        self.reducing_steps() == 0
    }

    pub fn max_chain(&self) -> usize {
        self.chains.iter().copied().max().unwrap_or(0)
    }
}

/// The current model, the accumulated transformation and the trace.
#[derive(Debug, Clone)]
pub(crate) struct Tracker<'a> {
    pub ctx: &'a LocalContext,
    pub input: Model,
    pub model: Model,
    pub g: GroupElement,
    pub v: i64,
    pub steps: Vec<Step>,
    pub chains: Vec<usize>,
    pub iterations: usize,
    /// Neutral steps since the last level decrease.
    pub pending: usize,
}

impl<'a> Tracker<'a> {
    pub fn new(m: &Model, ctx: &'a LocalContext) -> Result<Self> {
        let v = vdisc(m, ctx)?;
        if !m.coeffs().iter().all(|c| ctx.val(c).at_least(0)) {
            return Err(Error::NotIntegral);
        }
        Ok(Tracker {
            ctx,
            input: m.clone(),
            model: m.clone(),
            g: GroupElement::identity(m.kind()),
            v,
            steps: Vec::new(),
            chains: Vec::new(),
            iterations: 0,
            pending: 0,
        })
    }

    /// The transformed model when it is integral.
    pub fn preview(&self, g: &GroupElement) -> Result<Option<Model>> {
        Ok(act(g, &self.model)?.to_integral())
    }

    /// Applies `g`, which must give an integral model with v(Delta) not larger.
    pub fn apply(&mut self, g: &GroupElement, label: &str, witness: String) -> Result<()> {
        let next = self
            .preview(g)?
            .ok_or_else(|| Error::Internal(format!("step '{}' left the integral models", label)))?;
        self.commit(g, next, label, witness)
    }

    pub fn commit_path(&mut self, path: Vec<Move>) -> Result<()> {
        for mv in path {
            self.commit(&mv.g, mv.next, &mv.label, mv.witness)?;
        }
        Ok(())
    }

    pub fn commit(&mut self, g: &GroupElement, next: Model, label: &str, witness: String) -> Result<()> {
        let v_after = vdisc(&next, self.ctx)?;
        if v_after > self.v {
            return Err(Error::Internal(format!("step '{}' raised v(Delta) from {} to {}", label, self.v, v_after)));
        }
        self.steps.push(Step { label: label.into(), witness, v_before: self.v, v_after });
        if v_after < self.v {
            self.chains.push(self.pending);
            self.pending = 0;
        } else {
            self.pending += 1;
        }
        self.g = g.compose(&self.g)?;
        self.model = next;
        self.v = v_after;
        Ok(())
    }

    /// Moves on to the next pass, failing once the pass count exceeds what the
    /// discriminant allows.
    pub fn tick(&mut self, per_level: usize) -> Result<()> {
        self.iterations += 1;
        let cap = (self.v.max(0) as usize / 12 + 2) * per_level + 4;
        if self.iterations > cap {
            return Err(Error::Internal(format!("iteration cap {} exceeded", cap)));
        }
        Ok(())
    }

    pub fn finish(self) -> Result<MinimisationReport> {
        debug_assert_eq!(act(&self.g, &self.input).ok().and_then(|m| m.to_integral()).as_ref(), Some(&self.model));
        let v_delta_initial = vdisc(&self.input, self.ctx)?;
        Ok(MinimisationReport {
            input: self.input,
            final_model: self.model,
            transform: self.g,
            steps: self.steps,
            iterations: self.iterations,
            v_delta_initial,
            v_delta_final: self.v,
            chains: self.chains,
        })
    }
}

pub(crate) fn vdisc(m: &Model, ctx: &LocalContext) -> Result<i64> {
    ctx.val(&discriminant(m)?).finite().ok_or(Error::Singular)
}

/// Diagonal matrix diag(p^e_1, ..., p^e_n).
pub(crate) fn pi_diag(exps: &[i64], ctx: &LocalContext) -> QMat {
    QMat::diag(exps.iter().map(|&e| ctx.pow_rat(e)).collect())
}

/// A unimodular integer matrix whose first row lifts the residue vector `v`.
pub(crate) fn first_row_matrix(v: &[u64], ctx: &LocalContext) -> Result<QMat> {
    let w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    Ok(QMat::from_int_rows(&smith_like_completion(&w, ctx)?))
}

/// The element removing a saturation defect: move the dependency to the first
/// slice, then divide that slice by p.
pub(crate) fn desaturation(kind: crate::models::ModelKind, axis: usize, v: &[u64], ctx: &LocalContext) -> Result<GroupElement> {
    let a = first_row_matrix(v, ctx)?;
    let mut exps = vec![0; v.len()];
    exps[0] = -1;
    Ok(GroupElement::single(kind, axis, pi_diag(&exps, ctx).mul(&a)))
}

/// A candidate step found by a search.
#[derive(Debug, Clone)]
pub(crate) struct Move {
    pub g: GroupElement,
    pub next: Model,
    pub v: i64,
    pub label: String,
    pub witness: String,
}

/// Depth-first search for at most `depth` moves, all Delta-neutral except
/// possibly the last (moves raising Delta are skipped), ending at a smaller discriminant or at a model accepted
/// by `done`. Moves are tried in the order `moves` lists them.
pub(crate) fn search(
    m: &Model,
    v: i64,
    depth: usize,
    moves: &dyn Fn(&Model) -> Result<Vec<Move>>,
    done: &dyn Fn(&Model) -> bool,
) -> Result<Option<Vec<Move>>> {
    if depth == 0 {
        return Ok(None);
    }
    for mv in moves(m)? {
        if mv.v > v {
            // only happens when the model is already minimal
            continue;
        }
        if mv.v < v || done(&mv.next) {
            return Ok(Some(vec![mv]));
        }
        if let Some(rest) = search(&mv.next, v, depth - 1, moves, done)? {
            let mut path = vec![mv];
            path.extend(rest);
            return Ok(Some(path));
        }
    }
    Ok(None)
}
