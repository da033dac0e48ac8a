use super::{first_row_matrix, pi_diag, MinimisationReport, Tracker};
use crate::error::{Error, Result};
use crate::exactnum::{val_min, LocalContext, QMat};
use crate::models::{BinaryQuartic, GroupElement, Model, ModelKind};
use crate::residue::repeated_root;

/// Neutral steps tried before a division; one more than the largest slope.
const MAX_SLOPE_STEPS: usize = 3;

/// Minimises a binary quartic at p by slope steps and divisions by p^2.
pub fn minimise_quartic(g: &BinaryQuartic, ctx: &LocalContext) -> Result<MinimisationReport> {
    let mut t = Tracker::new(&Model::Quartic(g.clone()), ctx)?;
    let mut saved = t.clone();
    loop {
        t.tick(MAX_SLOPE_STEPS + 1)?;
        if t.v < 12 {
            break; // level 0
        }
        let Model::Quartic(q) = &t.model else { unreachable!() };
        let v = val_min(q.coeffs.iter(), ctx.p()).finite().ok_or(Error::Singular)?;
        if v >= 2 {
            let step = GroupElement::new(ModelKind::Quartic, ctx.pow_rat(-1), vec![QMat::identity(2)])?;
            t.apply(&step, "divide by p^2", String::new())?;
            saved = t.clone();
            continue;
        }
        if t.pending >= MAX_SLOPE_STEPS {
            break;
        }
        let pv = ctx.pow(v as u32);
        let red: Vec<u64> = q.coeffs.iter().map(|c| ctx.reduce(&(c / &pv))).collect();
        let Some(root) = repeated_root(&red, ctx)? else { break };
        let m = first_row_matrix(&root, ctx)?;
        let step = GroupElement::new(ModelKind::Quartic, ctx.pow_rat(-1), vec![pi_diag(&[0, 1], ctx).mul(&m)])?;
        match t.preview(&step)? {
            Some(next) => t.commit(&step, next, "slope step", format!("multiple root ({}:{})", root[0], root[1]))?,
            None => break,
        }
    }
    if t.pending > 0 {
        // the trailing slope steps led nowhere
        saved.iterations = t.iterations;
        t = saved;
    }
    if t.chains.iter().any(|&s| s > 2) {
        return Err(Error::Internal(format!("quartic slope outside {{0,1,2}}: {:?}", t.chains)));
    }
    t.finish()
}
