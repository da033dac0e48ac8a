use num_rational::BigRational;
use num_traits::Zero;

use super::forms::{BinaryQuartic, Cube, Hypercube, TernaryCubic, TwoTwoForm};
use super::{GroupElement, Model, RatModel};
use crate::error::{Error, Result};
use crate::exactnum::{MPoly, QMat};

/// Applies `g` to `m` exactly. Binary and ternary forms transform by substitution
/// `F(x) -> lambda F(x A)` (with lambda^2 for quartics); tensors transform by taking
/// row combinations of slices, `s'_{i..} = sum A[i][i'] s_{i'..}` in each factor.
pub fn act<T>(g: &GroupElement, m: &Model<T>) -> Result<RatModel>
where
    T: crate::exactnum::poly::Coeff + Into<BigRational>,
{
    let m: RatModel = m.map(|c| c.clone().into());
    act_rat(g, &m)
}

pub fn act_rat(g: &GroupElement, m: &RatModel) -> Result<RatModel> {
    if g.kind != m.kind() {
        return Err(Error::KindMismatch(format!("{} element applied to a {}", g.kind, m.kind())));
    }
    g.validate()?;
    let lam = &g.scalar;
    Ok(match m {
        Model::Quartic(q) => {
            let subs = linear_subs(&g.mats[0], 2, 0);
            let p = q.to_poly().substitute(&subs).scale(&(lam * lam));
            Model::Quartic(BinaryQuartic::from_poly(&p, 0, 1))
        }
        Model::Form22(f) => {
            let sa = sym2(&g.mats[0]);
            let sb = sym2(&g.mats[1]);
            let mut out = TwoTwoForm::<BigRational>::zero();
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = BigRational::zero();
                    for k in 0..3 {
                        for l in 0..3 {
                            if f.a[k][l].is_zero() {
                                continue;
                            }
                            acc += sa.get(i, k) * &f.a[k][l] * sb.get(j, l);
                        }
                    }
                    out.a[i][j] = acc * lam;
                }
            }
            Model::Form22(out)
        }
        Model::Cubic(c) => {
            let subs = linear_subs(&g.mats[0], 3, 0);
            let p = c.to_poly().substitute(&subs).scale(lam);
            Model::Cubic(TernaryCubic::from_poly(&p))
        }
        Model::Cube(c) => {
            let mut t: Vec<BigRational> = c.s.to_vec();
            for (axis, a) in g.mats.iter().enumerate() {
                t = mode_product(&t, &[3, 3, 3], axis, a);
            }
            Model::Cube(Cube::from_flat(&t))
        }
        Model::Hypercube(h) => {
            let mut t: Vec<BigRational> = h.h.to_vec();
            for (axis, a) in g.mats.iter().enumerate() {
                t = mode_product(&t, &[2, 2, 2, 2], axis, a);
            }
            Model::Hypercube(Hypercube::from_flat(&t))
        }
    })
}

/// Substitution x_j -> sum_i x_i A[i][j], i.e. the row vector x A, with the new
/// variables numbered from `offset` in a ring of `nvars` variables.
pub(crate) fn linear_subs(a: &QMat, nvars: usize, offset: usize) -> Vec<MPoly<BigRational>> {
    let n = a.size();
    (0..n)
        .map(|j| {
            let vars: Vec<usize> = (0..n).map(|i| offset + i).collect();
            let coeffs: Vec<BigRational> = (0..n).map(|i| a.get(i, j).clone()).collect();
            MPoly::linear(nvars.max(offset + n), &vars, &coeffs)
        })
        .collect()
}

/// Matrix S with (X1^2, X1X2, X2^2) = (x1^2, x1x2, x2^2) S for (X1, X2) = (x1, x2) A.
pub(crate) fn sym2(a: &QMat) -> QMat {
    let (r, s, t, u) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let two = BigRational::from_integer(2.into());
    QMat::from_rows(vec![
        vec![r * r, r * s, s * s],
        vec![&two * r * t, r * u + t * s, &two * s * u],
        vec![t * t, t * u, u * u],
    ])
}

fn mode_product(t: &[BigRational], dims: &[usize], axis: usize, a: &QMat) -> Vec<BigRational> {
    let n = dims[axis];
    let stride: usize = dims[axis + 1..].iter().product();
    let mut out = vec![BigRational::zero(); t.len()];
    for (flat, slot) in out.iter_mut().enumerate() {
        let idx = (flat / stride) % n;
        let base = flat - idx * stride;
        let mut acc = BigRational::zero();
        for k in 0..n {
            let v = &t[base + k * stride];
            if !v.is_zero() {
                acc += a.get(idx, k) * v;
            }
        }
        *slot = acc;
    }
    out
}
