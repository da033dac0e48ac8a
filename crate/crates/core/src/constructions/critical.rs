use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::LocalContext;
use crate::invariants::discriminant;
use crate::models::{Cube, Hypercube, Model, ModelKind, TwoTwoForm};

/// Valuation constraint: `Eq(k)` means exactly k, `Ge(k)` at least k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    Eq(u32),
    Ge(u32),
}

use Val::{Eq as E, Ge as G};

/// Rows indexed by the x-monomials, columns by the y-monomials.
pub const CRITICAL_22: [[Val; 3]; 3] = [[E(2), G(2), E(1)], [G(2), G(1), G(1)], [E(1), G(1), E(0)]];

/// `[k][i][j]` constrains s_ijk.
pub const CRITICAL_CUBE: [[[Val; 3]; 3]; 3] = [
    [[G(2), E(1), G(1)], [E(1), G(1), G(1)], [G(1), G(1), E(0)]],
    [[E(1), G(1), G(1)], [G(1), G(1), E(0)], [G(1), E(0), G(0)]],
    [[G(1), G(1), E(0)], [G(1), E(0), G(0)], [E(0), G(0), G(0)]],
];

/// In the 4x4 display: row 2k+i, column 2l+j holds H_ijkl.
pub const CRITICAL_HYPERCUBE: [[Val; 4]; 4] = [
    [G(2), E(1), E(1), G(1)],
    [E(1), G(1), G(1), E(0)],
    [E(1), G(1), G(1), E(0)],
    [G(1), E(0), E(0), G(0)],
];

fn sample(v: Val, ctx: &LocalContext, rng: &mut ChaCha8Rng) -> BigInt {
    let p = ctx.p_u64() as i64;
    match v {
        E(k) => {
            let unit = rng.gen_range(1..p) + p * rng.gen_range(-2..=2);
            ctx.pow(k) * unit
        }
        G(k) => ctx.pow(k) * rng.gen_range(-2 * p..=2 * p),
    }
}

/// A random nonsingular model of the given kind whose coefficient valuations
/// follow the critical pattern; p must be at least 5.
pub fn critical_model(kind: ModelKind, p: u64, seed: u64) -> Result<Model> {
    if p < 5 {
        return Err(Error::Precondition("critical models are built for p >= 5".into()));
    }
    let ctx = LocalContext::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let m = match kind {
            ModelKind::Form22 => {
                Model::Form22(TwoTwoForm::new(CRITICAL_22.map(|r| r.map(|v| sample(v, &ctx, &mut rng)))))
            }
            ModelKind::Cube => Model::Cube(Cube::from_bilinear(
                CRITICAL_CUBE.map(|m| m.map(|r| r.map(|v| sample(v, &ctx, &mut rng)))),
            )),
            ModelKind::Hypercube => Model::Hypercube(Hypercube::from_matrix(
                &CRITICAL_HYPERCUBE.map(|r| r.map(|v| sample(v, &ctx, &mut rng))),
            )),
            _ => return Err(Error::Unsupported(format!("no critical pattern for a {}", kind))),
        };
        if !discriminant(&m)?.is_zero() {
            return Ok(m);
        }
    }
    Err(Error::Internal("no nonsingular critical model found".into()))
}
