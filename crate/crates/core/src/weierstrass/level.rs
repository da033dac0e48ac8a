use serde::Serialize;

use super::{minimal_discriminant_valuation, MarkedPoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exactnum::{LocalContext, Valuation};
use crate::invariants::{cube_invariants, form22_invariants, hypercube_invariants};
use crate::models::Model;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    #[serde(rename = "vDelta")]
    pub v_delta_model: i64,
    #[serde(rename = "vDeltaMin")]
    pub v_delta_min: i64,
    pub kappa: i64,
    pub level: i64,
}

/// kappa(P): 0 if P is integral on a minimal model, r if v(x) = -2r there.
pub fn kappa(p: &MarkedPoint, e: &WeierstrassCurve, ctx: &LocalContext) -> Result<i64> {
    if !e.is_on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    if p.is_infinity() {
        return Err(Error::PointAtInfinity);
    }
    let min = minimal_discriminant_valuation(e, ctx)?;
    let MarkedPoint::Affine { x, y } = min.change.map_point(p) else {
        return Err(Error::PointAtInfinity);
    };
    let vx = ctx.val_rat(&x);
    let vy = ctx.val_rat(&y);
    match vx {
        Valuation::Finite(v) if v < 0 => {
            if v % 2 != 0 || vy != Valuation::Finite(3 * v / 2) {
                return Err(Error::Internal(format!("point with v(x) = {} and v(y) = {}", v, vy)));
            }
            Ok(-v / 2)
        }
        _ => Ok(0),
    }
}

fn report(v_model: Valuation, e: &WeierstrassCurve, points: &[MarkedPoint], ctx: &LocalContext) -> Result<LevelReport> {
    let v_delta_model = v_model.finite().ok_or(Error::Singular)?;
    let v_delta_min = minimal_discriminant_valuation(e, ctx)?.v_disc;
    let mut kappa_max = 0;
    for p in points {
        kappa_max = kappa_max.max(kappa(p, e, ctx)?);
    }
    let rest = v_delta_model - v_delta_min - 12 * kappa_max;
    if rest < 0 || rest % 12 != 0 {
        return Err(Error::Internal(format!(
            "level decomposition failed: v(Delta) = {}, v(Delta_E) = {}, kappa = {}",
            v_delta_model, v_delta_min, kappa_max
        )));
    }
    Ok(LevelReport { v_delta_model, v_delta_min, kappa: kappa_max, level: rest / 12 })
}

/// The level of an integral (2,2)-form, cube or hypercube at p.
pub fn level(m: &Model, ctx: &LocalContext) -> Result<LevelReport> {
    match m {
        Model::Form22(_) | Model::Cube(_) => {
            let inv = match m {
                Model::Form22(f) => form22_invariants(f)?,
                Model::Cube(s) => cube_invariants(s)?,
                _ => unreachable!(),
            };
            let md = inv.marked.as_ref().expect("marked data");
            report(ctx.val(&inv.disc), &md.curve, &[md.point()], ctx)
        }
        Model::Hypercube(h) => {
            let inv = hypercube_invariants(h)?;
            report(ctx.val(&inv.disc), &inv.short_curve(), &inv.points, ctx)
        }
        _ => Err(Error::Unsupported(format!("the level of a {} is not defined here", m.kind()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use num_bigint::BigInt;

    #[test]
    fn kappa_examples() {
        let ctx = LocalContext::new(2).unwrap();
        let e = WeierstrassCurve::from_i64([0, 0, 0, 1, 0]);
        assert_eq!(kappa(&MarkedPoint::affine(rat(0), rat(0)), &e, &ctx), Ok(0));
        assert_eq!(kappa(&MarkedPoint::Infinity, &e, &ctx), Err(Error::PointAtInfinity));
        assert_eq!(kappa(&MarkedPoint::affine(rat(1), rat(0)), &e, &ctx), Err(Error::NotOnCurve));
    }

    #[test]
    fn kappa_of_polar_point() {
        // y^2 = x^3 - 2: (3, 5) doubles to a point with x-denominator 100 = 2^2 * 5^2
        let e = WeierstrassCurve::new(0.into(), 0.into(), 0.into(), 0.into(), BigInt::from(-2));
        let p = MarkedPoint::affine(rat(3), rat(5));
        let d = e.double(&p).unwrap();
        let MarkedPoint::Affine { x, .. } = &d else { panic!() };
        assert_eq!(x.denom(), &BigInt::from(100));
        for (pr, k) in [(2u64, 1), (5, 1), (3, 0)] {
            let ctx = LocalContext::new(pr).unwrap();
            assert_eq!(kappa(&d, &e, &ctx).unwrap(), k);
        }
    }
}
