use num_bigint::BigInt;

use super::{desaturation, first_row_matrix, pi_diag, search, vdisc, MinimisationReport, Move, Tracker};
use crate::error::{Error, Result};
use crate::exactnum::{completion_last_row, LocalContext, QMat};
use crate::models::{act, cubics_of_cube, Cube, GroupElement, Model, ModelKind};
use crate::residue::{classify_cubic_residue, cube_axis_defect, cube_defect, Proj2, ResidueCubicClass};

/// Procedures searched per level decrease; one more than the proven bound.
const MAX_PROCEDURES: usize = 4;

/// Unimodular A with A l = e_3 mod p, so that l(x A) is a multiple of z.
fn line_matrix(l: &Proj2, ctx: &LocalContext) -> Result<QMat> {
    let w: Vec<BigInt> = l.iter().map(|&x| BigInt::from(x)).collect();
    QMat::from_int_rows(&completion_last_row(&w, ctx)?).transpose().inverse()
}

fn unsaturated(m: &Model, ctx: &LocalContext) -> bool {
    let Model::Cube(s) = m else { return false };
    m.content_valuation(ctx).at_least(1) || cube_defect(s, ctx).is_some()
}

/// Applies `[D A_i, D A_j, R]` where R restores saturation of slicing k.
fn procedure(
    s: &Cube,
    (i, j, k): (usize, usize, usize),
    (ai, aj): (QMat, QMat),
    d: &[i64],
    ctx: &LocalContext,
) -> Result<(GroupElement, Cube)> {
    let mut g = GroupElement::identity(ModelKind::Cube);
    g.mats[i] = pi_diag(d, ctx).mul(&ai);
    g.mats[j] = pi_diag(d, ctx).mul(&aj);
    let Some(Model::Cube(mut cur)) = act(&g, &Model::Cube(s.clone()))?.to_integral() else {
        return Err(Error::Internal("cube procedure left the integral cubes".into()));
    };
    while let Some(def) = cube_axis_defect(&cur, k, ctx) {
        let step = desaturation(ModelKind::Cube, k, &def.vector, ctx)?;
        let Some(Model::Cube(next)) = act(&step, &Model::Cube(cur))?.to_integral() else {
            return Err(Error::Internal("resaturation left the integral cubes".into()));
        };
        cur = next;
        g = step.compose(&g)?;
    }
    Ok((g, cur))
}

fn procedures(m: &Model, ctx: &LocalContext) -> Result<Vec<Move>> {
    let Model::Cube(s) = m else { unreachable!() };
    let fs = cubics_of_cube(s);
    let cls = fs.iter().map(|f| classify_cubic_residue(f, ctx)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (mats, d, label, witness) = match (&cls[i], &cls[j]) {
            (ResidueCubicClass::RepeatedLinearFactor { form: a }, ResidueCubicClass::RepeatedLinearFactor { form: b }) => (
                (line_matrix(a, ctx)?, line_matrix(b, ctx)?),
                [0, 0, 1],
                "procedure (i)",
                format!("lines {:?} and {:?}", a, b),
            ),
            (ResidueCubicClass::UniqueSingularPoint { point: a }, ResidueCubicClass::UniqueSingularPoint { point: b }) => (
                (first_row_matrix(a, ctx)?, first_row_matrix(b, ctx)?),
                [0, 1, 1],
                "procedure (ii)",
                format!("singular points {:?} and {:?}", a, b),
            ),
            _ => continue,
        };
        let (g, next) = procedure(s, (i, j, k), mats, &d, ctx)?;
        let next = Model::Cube(next);
        let v = vdisc(&next, ctx)?;
        out.push(Move {
            g,
            next,
            v,
            label: format!("{} on slicings {} and {}", label, i + 1, j + 1),
            witness,
        });
    }
    Ok(out)
}

/// Minimises a 3x3x3 cube at p.
pub fn minimise_cube(s: &Cube, ctx: &LocalContext) -> Result<MinimisationReport> {
    let mut t = Tracker::new(&Model::Cube(s.clone()), ctx)?;
    loop {
        t.tick(MAX_PROCEDURES + 2)?;
        if t.v < 12 {
            break; // level 0
        }
        let Model::Cube(s) = t.model.clone() else { unreachable!() };
        if t.model.content_valuation(ctx).at_least(1) {
            let g = GroupElement::single(ModelKind::Cube, 0, pi_diag(&[-1, -1, -1], ctx));
            t.apply(&g, "content", String::new())?;
            continue;
        }
        if let Some(def) = cube_defect(&s, ctx) {
            let g = desaturation(ModelKind::Cube, def.slicing, &def.vector, ctx)?;
            t.apply(&g, "saturation", format!("slicing {} dependence {:?}", def.slicing + 1, def.vector))?;
            continue;
        }
        let moves = |m: &Model| procedures(m, ctx);
        let done = |m: &Model| unsaturated(m, ctx);
        match search(&t.model, t.v, MAX_PROCEDURES, &moves, &done)? {
            Some(path) => t.commit_path(path)?,
            None => break,
        }
    }
    if t.chains.iter().any(|&c| c > 3) {
        return Err(Error::Internal(format!("cube procedure chain too long: {:?}", t.chains)));
    }
    t.finish()
}
