use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::local::LocalContext;
use crate::error::{Error, Result};

/// Unimodular integer matrix whose first row is the primitive vector `w`.
pub fn unimodular_with_first_row(w: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = w.len();
    if n == 2 {
        let e = w[0].extended_gcd(&w[1]);
        debug_assert!(e.gcd.is_one());
        return vec![vec![w[0].clone(), w[1].clone()], vec![-e.y, e.x]];
    }
    // Column operations V with w V = e_1; the answer is V^{-1}, tracked directly
    // as the inverse row operations.
    let mut row = w.to_vec();
    let mut vinv: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for j in 1..n {
        if row[j].is_zero() {
            continue;
        }
        // [a b] [x -b/g; y a/g] = [g 0]
        let (a, b) = (row[0].clone(), row[j].clone());
        let e = a.extended_gcd(&b);
        let g = e.gcd.clone();
        let (x, y) = (e.x, e.y);
        let (bg, ag) = (&b / &g, &a / &g);
        row[0] = g;
        row[j] = BigInt::zero();
        // Inverse of the 2x2 block [[x, -bg], [y, ag]] is [[ag, bg], [-y, x]];
        // V^{-1} <- block^{-1} V^{-1} on rows 0 and j.
        let r0: Vec<BigInt> = (0..n).map(|k| &ag * &vinv[0][k] + &bg * &vinv[j][k]).collect();
        let rj: Vec<BigInt> = (0..n).map(|k| -&y * &vinv[0][k] + &x * &vinv[j][k]).collect();
        vinv[0] = r0;
        vinv[j] = rj;
    }
    if row[0].is_negative() {
        // w V = -e_1: flip the sign of the first column of V, i.e. first row of V^{-1}.
        for k in 0..n {
            vinv[0][k] = -&vinv[0][k];
        }
    }
    debug_assert_eq!(vinv[0], w.to_vec());
    vinv
}

/// Primitive integer lift of a residue direction: entries in [0, p), divided by their gcd
/// (which is prime to p, so the direction mod p is unchanged).
pub fn primitive_lift(v: &[BigInt], ctx: &LocalContext) -> Result<Vec<BigInt>> {
    let w: Vec<BigInt> = v.iter().map(|x| x.mod_floor(ctx.p())).collect();
    if w.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroModP(ctx.p().clone()));
    }
    let g = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    Ok(w.into_iter().map(|x| x / &g).collect())
}

/// Integer matrix of determinant +-1 whose first row reduces mod p to the
/// direction of `vec`.
pub fn smith_like_completion(vec: &[BigInt], ctx: &LocalContext) -> Result<Vec<Vec<BigInt>>> {
    if vec.len() < 2 {
        return Err(Error::Precondition("completion needs dimension at least 2".into()));
    }
    let w = primitive_lift(vec, ctx)?;
    Ok(unimodular_with_first_row(&w))
}

/// As [`smith_like_completion`] but with the given direction as the last row.
pub fn completion_last_row(vec: &[BigInt], ctx: &LocalContext) -> Result<Vec<Vec<BigInt>>> {
    let mut m = smith_like_completion(vec, ctx)?;
    let first = m.remove(0);
    // Moving a row from the top to the bottom is a cyclic permutation; fix the sign
    // of the determinant by negating the (new) first row when n is even.
    if m.len() % 2 == 1 {
        if let Some(r) = m.first_mut() {
            for x in r.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    m.push(first);
    Ok(m)
}
