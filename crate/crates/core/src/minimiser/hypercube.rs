use super::{desaturation, first_row_matrix, pi_diag, search, vdisc, MinimisationReport, Move, Tracker};
use crate::error::{Error, Result};
use crate::exactnum::{FpMatrix, LocalContext};
use crate::models::{act, form_of_pair, GroupElement, Hypercube, Model, ModelKind, PAIRS};
use crate::residue::{classify_22_residue, hypercube_defect, normalize_point, Proj1, Residue22Class};

/// Neutral steps searched per level decrease; one more than the proven bound.
const MAX_NEUTRAL: usize = 4;

pub(crate) const LABEL_I: &str = "procedure (i)";

fn unsaturated(m: &Model, ctx: &LocalContext) -> bool {
    let Model::Hypercube(h) = m else { return false };
    m.content_valuation(ctx).at_least(1) || hypercube_defect(h, ctx).is_some()
}

/// H(P, Q, ., .) as a 2x2 residue matrix indexed by the two remaining axes,
/// with P on axis `a` and Q on axis `b`.
fn contract(h: &Hypercube, (a, b): (usize, usize), p: &Proj1, q: &Proj1, ctx: &LocalContext) -> [u64; 4] {
    let rest: Vec<usize> = (0..4).filter(|&n| n != a && n != b).collect();
    std::array::from_fn(|r| {
        let mut s = 0;
        for i in 0..2 {
            for j in 0..2 {
                let mut idx = [0; 4];
                idx[a] = i;
                idx[b] = j;
                idx[rest[0]] = r >> 1;
                idx[rest[1]] = r & 1;
                let c = ctx.mul(ctx.mul(p[i], q[j]), ctx.reduce(h.get(idx)));
                s = ctx.add(s, c);
            }
        }
        s
    })
}

/// All (P, Q) with H(P, Q, ., .) = 0 mod p for the axes (a, b).
fn zero_contractions(h: &Hypercube, (a, b): (usize, usize), ctx: &LocalContext) -> Vec<(Proj1, Proj1)> {
    let p = ctx.p_u64();
    let mut out = Vec::new();
    let points = std::iter::once([1, 0]).chain((0..p).map(|t| [t, 1]));
    for pt in points {
        // the contraction is linear in Q: columns are Q = e_1, e_2
        let c1 = contract(h, (a, b), &pt, &[1, 0], ctx);
        let c2 = contract(h, (a, b), &pt, &[0, 1], ctx);
        let rows: Vec<Vec<u64>> = (0..4).map(|r| vec![c1[r], c2[r]]).collect();
        let m = FpMatrix::from_rows(&rows, ctx);
        if m.rank(ctx) == 1 {
            let k = m.kernel_vector(ctx).expect("rank one");
            out.push((pt, normalize_point([k[0], k[1]], ctx)));
        }
    }
    out
}

fn trans12_moves(m: &Model, ctx: &LocalContext) -> Result<Vec<Move>> {
    let Model::Hypercube(h) = m else { unreachable!() };
    let mut out = Vec::new();
    for (a, b) in PAIRS {
        for (p, q) in zero_contractions(h, (a, b), ctx) {
            let mut g = GroupElement::identity(ModelKind::Hypercube);
            g.mats[a] = pi_diag(&[-1, 0], ctx).mul(&first_row_matrix(&p, ctx)?);
            g.mats[b] = pi_diag(&[0, 1], ctx).mul(&first_row_matrix(&q, ctx)?);
            let Some(next) = act(&g, m)?.to_integral() else {
                return Err(Error::Internal("trans12 left the integral hypercubes".into()));
            };
            let kind = match classify_22_residue(&form_of_pair(h, a, b), ctx)? {
                Residue22Class::UniqueSingularPoint { .. } => LABEL_I,
                Residue22Class::ProductBothRepeated { .. } => "procedure (ii)",
                _ => "trans12",
            };
            let v = vdisc(&next, ctx)?;
            out.push(Move {
                g,
                next,
                v,
                label: format!("{} on axes {} and {}", kind, a + 1, b + 1),
                witness: format!("({}:{}), ({}:{})", p[0], p[1], q[0], q[1]),
            });
        }
    }
    Ok(out)
}

/// Minimises a 2x2x2x2 hypercube at p.
pub fn minimise_hypercube(h: &Hypercube, ctx: &LocalContext) -> Result<MinimisationReport> {
    let mut t = Tracker::new(&Model::Hypercube(h.clone()), ctx)?;
    loop {
        t.tick(MAX_NEUTRAL + 2)?;
        if t.v < 12 {
            break; // level 0
        }
        let Model::Hypercube(h) = t.model.clone() else { unreachable!() };
        if t.model.content_valuation(ctx).at_least(1) {
            let g = GroupElement::single(ModelKind::Hypercube, 0, pi_diag(&[-1, -1], ctx));
            t.apply(&g, "content", String::new())?;
            continue;
        }
        if let Some(def) = hypercube_defect(&h, ctx) {
            let g = desaturation(ModelKind::Hypercube, def.slicing, &def.vector, ctx)?;
            t.apply(&g, "saturation", format!("axis {} dependence {:?}", def.slicing + 1, def.vector))?;
            continue;
        }
        let moves = |m: &Model| trans12_moves(m, ctx);
        let done = |m: &Model| unsaturated(m, ctx);
        match search(&t.model, t.v, MAX_NEUTRAL, &moves, &done)? {
            Some(path) => t.commit_path(path)?,
            None => break,
        }
    }
    // count only procedure (i) steps in each chain
    let mut chains = Vec::new();
    let mut run = 0;
    for s in &t.steps {
        if s.reduces() {
            chains.push(run);
            run = 0;
        } else if s.label.starts_with(LABEL_I) {
            run += 1;
        }
    }
    t.chains = chains;
    if t.chains.iter().any(|&c| c > 2) {
        return Err(Error::Internal(format!("more than two procedure (i) steps in a row: {:?}", t.chains)));
    }
    t.finish()
}
