use super::{first_row_matrix, pi_diag, vdisc, MinimisationReport, Tracker};
use crate::error::{Error, Result};
use crate::exactnum::{LocalContext, QMat, Valuation};
use crate::models::{GroupElement, Model, ModelKind, TwoTwoForm};
use crate::residue::{classify_22_residue, Proj1, Residue22Class, Side};

/// Neutral steps tried before giving up; the proven bound is one before a
/// case (i) reduction or a content division.
const MAX_NEUTRAL: usize = 3;

/// Lower bounds on valuations (`None` marks "exactly 0") for a non-minimal form
/// with reduction x2^2 y2^2.
const PATTERNS: [[[Option<i64>; 3]; 3]; 3] = [
    [[Some(2), Some(2), Some(2)], [Some(1), Some(1), Some(1)], [Some(1), Some(1), None]],
    [[Some(2), Some(1), Some(1)], [Some(2), Some(1), Some(1)], [Some(2), Some(1), None]],
    [[Some(3), Some(2), Some(1)], [Some(2), Some(1), Some(1)], [Some(1), Some(1), None]],
];

/// True when the coefficient valuations of `f` match one of the three patterns
/// allowed for a non-minimal form with reduction x2^2 y2^2.
pub fn min22_patterns_hold(f: &TwoTwoForm, ctx: &LocalContext) -> bool {
    PATTERNS.iter().any(|pat| {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let v = ctx.val(&f.a[i][j]);
                match pat[i][j] {
                    Some(k) => v.at_least(k),
                    None => v == Valuation::Finite(0),
                }
            })
        })
    })
}

fn elem(scalar: i64, a: QMat, b: QMat, ctx: &LocalContext) -> Result<GroupElement> {
    GroupElement::new(ModelKind::Form22, ctx.pow_rat(scalar), vec![a, b])
}

fn pt(p: &Proj1) -> String {
    format!("({}:{})", p[0], p[1])
}

/// Minimises a (2,2)-form at p.
pub fn minimise_22(f: &TwoTwoForm, ctx: &LocalContext) -> Result<MinimisationReport> {
    let mut t = Tracker::new(&Model::Form22(f.clone()), ctx)?;
    let mut saved = t.clone();
    let id = || QMat::identity(2);
    loop {
        t.tick(MAX_NEUTRAL + 2)?;
        if t.v < 12 {
            break; // level 0
        }
        let Model::Form22(f) = t.model.clone() else { unreachable!() };
        if t.model.content_valuation(ctx).at_least(1) {
            t.apply(&elem(-1, id(), id(), ctx)?, "content", String::new())?;
            saved = t.clone();
            continue;
        }
        if t.pending >= MAX_NEUTRAL {
            break;
        }
        match classify_22_residue(&f, ctx)? {
            Residue22Class::ProductBothRepeated { x, y } => {
                let (a, b) = (first_row_matrix(&x, ctx)?, first_row_matrix(&y, ctx)?);
                let moved = elem(0, a.clone(), b.clone(), ctx)?;
                let candidates = [(-2, [0, 1], [0, 0]), (-2, [0, 0], [0, 1]), (-3, [0, 1], [0, 1])];
                let mut done = false;
                for (k, (s, ea, eb)) in candidates.into_iter().enumerate() {
                    let g = elem(s, pi_diag(&ea, ctx).mul(&a), pi_diag(&eb, ctx).mul(&b), ctx)?;
                    let Some(next) = t.preview(&g)? else { continue };
                    if vdisc(&next, ctx)? >= t.v {
                        continue;
                    }
                    let Some(Model::Form22(normal)) = t.preview(&moved)? else {
                        return Err(Error::Internal("unimodular move left the integral forms".into()));
                    };
                    if !min22_patterns_hold(&normal, ctx) {
                        return Err(Error::Internal("non-minimal x2^2 y2^2 form outside the valuation patterns".into()));
                    }
                    t.commit(&g, next, &format!("case (i), substitution {}", k + 1), format!("x {} y {}", pt(&x), pt(&y)))?;
                    saved = t.clone();
                    done = true;
                    break;
                }
                if !done {
                    break;
                }
            }
            Residue22Class::ProductOneRepeated { side, root } => {
                let m = pi_diag(&[0, 1], ctx).mul(&first_row_matrix(&root, ctx)?);
                let g = match side {
                    Side::X => elem(-1, m, id(), ctx)?,
                    Side::Y => elem(-1, id(), m, ctx)?,
                };
                let Some(next) = t.preview(&g)? else { break };
                let label = format!("case (ii), repeated root in {}", if side == Side::X { "x" } else { "y" });
                t.commit(&g, next, &label, pt(&root))?;
            }
            Residue22Class::UniqueSingularPoint { x, y } => {
                let a = pi_diag(&[0, 1], ctx).mul(&first_row_matrix(&x, ctx)?);
                let b = pi_diag(&[0, 1], ctx).mul(&first_row_matrix(&y, ctx)?);
                let g = elem(-2, a, b, ctx)?;
                let Some(next) = t.preview(&g)? else { break };
                t.commit(&g, next, "case (iii)", format!("singular point ({}, {})", pt(&x), pt(&y)))?;
            }
            _ => break,
        }
    }
    if t.pending > 0 {
        saved.iterations = t.iterations;
        t = saved;
    }
    if t.chains.iter().any(|&c| c > 2) {
        return Err(Error::Internal(format!("(2,2) neutral chain too long: {:?}", t.chains)));
    }
    t.finish()
}
