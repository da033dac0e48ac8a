//! Level-0 models attached to a Weierstrass equation, conversions between
//! (2,2)-forms and cubes through a rational point, critical models, and the
//! brute-force oracles.

mod critical;
mod oracle;
mod weights;

pub use critical::{critical_model, CRITICAL_22, CRITICAL_CUBE, CRITICAL_HYPERCUBE};
pub use oracle::{oracle_minimality_22, OracleVerdict, ORACLE_PAIRS};
pub use weights::{enumerate_minimal_weights, symmetry_filter, CubeWeight, TAUS, WEIGHT_S_BOUND};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{unimodular_with_first_row, MPoly, QMat};
use crate::models::{act, Cube, GroupElement, Model, ModelKind, TwoTwoForm};

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// The (2,2)-form x2^2 y1^2 - x1 x2 y2^2 + x1 y1 (a1 x2 y2 + a2 x2 y1 + a3 x1 y2 + a4 x1 y1)
/// for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x with the point (0,0).
pub fn construct_22(a1: &BigInt, a2: &BigInt, a3: &BigInt, a4: &BigInt) -> TwoTwoForm {
    let z = BigInt::zero;
    TwoTwoForm::new([[a4.clone(), a3.clone(), z()], [a2.clone(), a1.clone(), int(-1)], [int(1), z(), z()]])
}

/// The cube of the bilinear forms
/// B1 = x2 y1 - x1 y2, B2 = x3 y1 + a1 x2 y1 + a3 x1 y1 - x2 y3,
/// B3 = x2 y2 + a2 x2 y1 + a4 x1 y1 - x3 y3.
pub fn construct_cube(a1: &BigInt, a2: &BigInt, a3: &BigInt, a4: &BigInt) -> Cube {
    let mut b: [[[BigInt; 3]; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero())));
    // b[k][i][j]: coefficient of x_i y_j in B_k
    b[0][1][0] = int(1);
    b[0][0][1] = int(-1);
    b[1][2][0] = int(1);
    b[1][1][0] = a1.clone();
    b[1][0][0] = a3.clone();
    b[1][1][2] = int(-1);
    b[2][1][1] = int(1);
    b[2][1][0] = a2.clone();
    b[2][0][0] = a4.clone();
    b[2][2][2] = int(-1);
    Cube::from_bilinear(b)
}

/// The point of the curve of [`construct_cube`] coming from 0_E.
pub fn construct_cube_point() -> ([BigInt; 3], [BigInt; 3]) {
    ([int(0), int(0), int(1)], [int(0), int(1), int(0)])
}

/// The cube through the point ((1:0),(1:0)) of a (2,2)-form with a11 = 0.
pub fn convert_2to3(f: &TwoTwoForm) -> Result<Cube> {
    let a = |i: usize, j: usize| f.a[i - 1][j - 1].clone();
    if !a(1, 1).is_zero() {
        return Err(Error::Precondition("conversion to a cube needs a11 = 0".into()));
    }
    let z = BigInt::zero;
    let b = [
        [[z(), int(1), z()], [int(1), a(2, 2), a(2, 3)], [z(), a(3, 2), a(3, 3)]],
        [[z(), z(), z()], [z(), a(1, 2), a(1, 3)], [int(-1), z(), z()]],
        [[z(), z(), int(-1)], [z(), a(2, 1), z()], [z(), a(3, 1), z()]],
    ];
    Ok(Cube::from_bilinear(b))
}

fn unimodular_with_last_row(w: &[BigInt]) -> Result<QMat> {
    let g = w.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    if !g.is_one() {
        return Err(Error::Precondition("point coordinates must be coprime integers".into()));
    }
    let mut m = unimodular_with_first_row(w);
    let first = m.remove(0);
    m.push(first);
    Ok(QMat::from_int_rows(&m))
}

fn bilinear(s: &Cube, k: usize, x: &[BigInt; 3], y: &[BigInt; 3]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc += s.get(i, j, k) * &x[i] * &y[j];
        }
    }
    acc
}

/// The (2,2)-form obtained by projecting the curve of `s` away from the rational
/// point `(x, y)` (integer coordinates with gcd 1).
pub fn convert_3to2(s: &Cube, x: &[BigInt; 3], y: &[BigInt; 3]) -> Result<(TwoTwoForm, GroupElement)> {
    if (0..3).any(|k| !bilinear(s, k, x, y).is_zero()) {
        return Err(Error::Precondition("the point does not lie on the curve".into()));
    }
    let mut g = GroupElement::identity(ModelKind::Cube);
    g.mats[0] = unimodular_with_last_row(x)?;
    g.mats[1] = unimodular_with_last_row(y)?;
    let Some(Model::Cube(t)) = act(&g, &Model::Cube(s.clone()))?.to_integral() else {
        return Err(Error::Internal("unimodular move left the integral cubes".into()));
    };
    // B_k = L_k(y1,y2) x3 + M_k(x1,x2) y3 + N_k(x; y); variables x1 x2 y1 y2
    let lin = |c: [BigInt; 2], v: [usize; 2]| MPoly::linear(4, &v, &c);
    let mut rows: Vec<[MPoly<BigInt>; 3]> = Vec::new();
    for k in 0..3 {
        let l = lin([t.get(2, 0, k).clone(), t.get(2, 1, k).clone()], [2, 3]);
        let m = lin([t.get(0, 2, k).clone(), t.get(1, 2, k).clone()], [0, 1]);
        let mut n = MPoly::zero(4);
        for i in 0..2 {
            for j in 0..2 {
                let mut e = vec![0; 4];
                e[i] = 1;
                e[2 + j] = 1;
                n.add_term(e, t.get(i, j, k).clone());
            }
        }
        rows.push([l, m, n]);
    }
    let det = crate::exactnum::det3(&[rows[0].clone(), rows[1].clone(), rows[2].clone()]);
    Ok((TwoTwoForm::from_poly(&det, [0, 1], [2, 3]), g))
}

#[cfg(test)]
mod tests;
