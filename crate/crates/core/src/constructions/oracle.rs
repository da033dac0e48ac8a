use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{LocalContext, QMat};
use crate::models::{act, GroupElement, Model, ModelKind, TwoTwoForm};

/// Every admissible pair can be replaced by one of these.
pub const ORACLE_PAIRS: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub minimal: bool,
    /// (a, b, first row of the x-matrix, first row of the y-matrix) of the first
    /// admissible configuration found.
    pub witness: Option<(u32, u32, [String; 2], [String; 2])>,
    pub configurations: usize,
}

/// Unimodular matrices whose first rows run over P^1(Z/p^a).
fn lifts(a: u32, ctx: &LocalContext) -> Vec<QMat> {
    if a == 0 {
        return vec![QMat::identity(2)];
    }
    let q = ctx.pow(a);
    let p = ctx.p();
    let mut out = Vec::new();
    let mut t = BigInt::from(0);
    while t < q {
        out.push(QMat::from_int_rows(&[vec![1.into(), t.clone()], vec![0.into(), 1.into()]]));
        t += 1;
    }
    let mut s = BigInt::from(0);
    while s < q {
        out.push(QMat::from_int_rows(&[vec![s.clone(), 1.into()], vec![(-1).into(), 0.into()]]));
        s += p;
    }
    out
}

/// Decides minimality of an integral (2,2)-form by trying every pair (a, b) above
/// against every O-equivalence class that matters for it.
pub fn oracle_minimality_22(f: &TwoTwoForm, ctx: &LocalContext) -> Result<OracleVerdict> {
    let m = Model::Form22(f.clone());
    let mut configurations = 0;
    for (a, b) in ORACLE_PAIRS {
        let da = QMat::diag(vec![ctx.pow_rat(0), ctx.pow_rat(a as i64)]);
        let db = QMat::diag(vec![ctx.pow_rat(0), ctx.pow_rat(b as i64)]);
        let scalar = ctx.pow_rat(-(a as i64) - (b as i64) - 1);
        for ma in lifts(a, ctx) {
            for mb in lifts(b, ctx) {
                configurations += 1;
                let g = GroupElement::new(ModelKind::Form22, scalar.clone(), vec![da.mul(&ma), db.mul(&mb)])?;
                if act(&g, &m)?.is_integral_at(ctx) {
                    let row = |x: &QMat| [x.get(0, 0).to_string(), x.get(0, 1).to_string()];
                    return Ok(OracleVerdict {
                        minimal: false,
                        witness: Some((a, b, row(&ma), row(&mb))),
                        configurations,
                    });
                }
            }
        }
    }
    Ok(OracleVerdict { minimal: true, witness: None, configurations })
}
