//! Reductions mod p: repeated roots of binary forms, the shape of the residue
//! curve of a (2,2)-form or ternary cubic, and saturation of cubes and hypercubes.
//!
//! Projective points over F_p are normalised so that their last nonzero
//! coordinate is 1.

mod binary;

pub use binary::{poly_gcd, repeated_root};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{unimodular_with_first_row, FpMatrix, LocalContext, MPoly};
use crate::models::{Cube, Hypercube, Model, TernaryCubic, TwoTwoForm, CUBIC_MONOMIALS};

/// Default largest prime for the exhaustive search over P^1 x P^1.
pub const P1XP1_PRIME_BOUND: u64 = 1 << 16;
/// Default largest prime for the exhaustive search over P^2.
pub const P2_PRIME_BOUND: u64 = 1 << 10;
/// Overrides both bounds when set.
pub const PRIME_BOUND_ENV: &str = "G1MIN_PRIME_BOUND";

fn check_bound(ctx: &LocalContext, default: u64) -> Result<()> {
    let bound = std::env::var(PRIME_BOUND_ENV).ok().and_then(|s| s.trim().parse::<u64>().ok()).unwrap_or(default);
    if ctx.p_u64() > bound {
        return Err(Error::Unsupported(format!(
            "exhaustive residue search at p = {} exceeds the prime bound {} (set {})",
            ctx.p(),
            bound,
            PRIME_BOUND_ENV
        )));
    }
    Ok(())
}

pub type Proj1 = [u64; 2];
pub type Proj2 = [u64; 3];

/// Scales a nonzero vector so that its last nonzero entry is 1.
pub fn normalize_point<const N: usize>(v: [u64; N], ctx: &LocalContext) -> [u64; N] {
    let last = v.iter().rposition(|&x| x != 0).expect("nonzero vector");
    let inv = ctx.inv(v[last]).unwrap();
    v.map(|x| ctx.mul(x, inv))
}

/// Integer lift of a residue point (entries in [0, p)).
pub fn lift_point(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn reduce_22(f: &TwoTwoForm, ctx: &LocalContext) -> [[u64; 3]; 3] {
    f.a.clone().map(|r| r.map(|c| ctx.reduce(&c)))
}

pub fn reduce_cubic(f: &TernaryCubic, ctx: &LocalContext) -> [u64; 10] {
    f.coeffs.clone().map(|c| ctx.reduce(&c))
}

fn quad_monomials(v: Proj1, ctx: &LocalContext) -> [u64; 3] {
    [ctx.mul(v[0], v[0]), ctx.mul(v[0], v[1]), ctx.mul(v[1], v[1])]
}

/// Derivatives of (v1^2, v1 v2, v2^2) with respect to v1 and v2.
fn quad_monomial_partials(v: Proj1, ctx: &LocalContext) -> [[u64; 3]; 2] {
    [[ctx.mul(2, v[0]), v[1], 0], [0, v[0], ctx.mul(2, v[1])]]
}

fn bilinear(a: &[[u64; 3]; 3], xm: &[u64; 3], ym: &[u64; 3], ctx: &LocalContext) -> u64 {
    let mut s = 0;
    for i in 0..3 {
        for j in 0..3 {
            s = ctx.add(s, ctx.mul(a[i][j], ctx.mul(xm[i], ym[j])));
        }
    }
    s
}

/// f and its four partial derivatives all vanish at (x, y).
pub fn is_singular_22(a: &[[u64; 3]; 3], x: Proj1, y: Proj1, ctx: &LocalContext) -> bool {
    let (xm, ym) = (quad_monomials(x, ctx), quad_monomials(y, ctx));
    if bilinear(a, &xm, &ym, ctx) != 0 {
        return false;
    }
    let (dx, dy) = (quad_monomial_partials(x, ctx), quad_monomial_partials(y, ctx));
    dx.iter().all(|d| bilinear(a, d, &ym, ctx) == 0) && dy.iter().all(|d| bilinear(a, &xm, d, ctx) == 0)
}

fn p1_points(p: u64) -> impl Iterator<Item = Proj1> {
    (0..p).map(|t| [t, 1]).chain(std::iter::once([1, 0]))
}

/// Rational singular points of the residue curve, stopping once `limit` are found.
pub fn singular_points_22(a: &[[u64; 3]; 3], ctx: &LocalContext, limit: usize) -> Result<Vec<(Proj1, Proj1)>> {
    check_bound(ctx, P1XP1_PRIME_BOUND)?;
    let p = ctx.p_u64();
    let mut out = Vec::new();
    for x in p1_points(p) {
        let xm = quad_monomials(x, ctx);
        let q: Vec<u64> = (0..3).map(|j| (0..3).fold(0, |s, i| ctx.add(s, ctx.mul(a[i][j], xm[i])))).collect();
        let candidates: Vec<Proj1> = if q.iter().all(|&c| c == 0) {
            p1_points(p).collect()
        } else {
            repeated_root(&q, ctx)?.into_iter().collect()
        };
        for y in candidates {
            if is_singular_22(a, x, y, ctx) {
                out.push((x, y));
                if out.len() >= limit {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Which variable set carries the repeated factor in a product x-form times y-form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Residue22Class {
    Zero,
    /// f = c l(x)^2 m(y)^2; the witnesses are the roots of l and m.
    ProductBothRepeated { x: Proj1, y: Proj1 },
    /// f = l(x)^2 h(y) with h separable (or the same with x and y exchanged).
    ProductOneRepeated { side: Side, root: Proj1 },
    ProductNoneRepeated,
    UniqueSingularPoint { x: Proj1, y: Proj1 },
    Other,
}

impl Residue22Class {
    pub fn tag(&self) -> &'static str {
        match self {
            Residue22Class::Zero => "ZERO",
            Residue22Class::ProductBothRepeated { .. } => "PRODUCT_BOTH_REPEATED",
            Residue22Class::ProductOneRepeated { .. } => "PRODUCT_ONE_REPEATED",
            Residue22Class::ProductNoneRepeated => "PRODUCT_NONE_REPEATED",
            Residue22Class::UniqueSingularPoint { .. } => "UNIQUE_SINGULAR_POINT",
            Residue22Class::Other => "OTHER",
        }
    }
}

pub fn classify_22_residue(f: &TwoTwoForm, ctx: &LocalContext) -> Result<Residue22Class> {
    let a = reduce_22(f, ctx);
    if a.iter().flatten().all(|&c| c == 0) {
        return Ok(Residue22Class::Zero);
    }
    let m = FpMatrix::from_rows(&a.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), ctx);
    if m.rank(ctx) == 1 {
        // a = g h^T: g is any nonzero column, h any nonzero row
        let j = (0..3).find(|&j| (0..3).any(|i| a[i][j] != 0)).unwrap();
        let i = (0..3).find(|&i| a[i][j] != 0).unwrap();
        let g = [a[0][j], a[1][j], a[2][j]];
        let h = a[i];
        let rg = repeated_root(&g, ctx)?;
        let rh = repeated_root(&h, ctx)?;
        return Ok(match (rg, rh) {
            (Some(x), Some(y)) => Residue22Class::ProductBothRepeated { x, y },
            (Some(root), None) => Residue22Class::ProductOneRepeated { side: Side::X, root },
            (None, Some(root)) => Residue22Class::ProductOneRepeated { side: Side::Y, root },
            (None, None) => Residue22Class::ProductNoneRepeated,
        });
    }
    // A (2,2)-curve that is not a product and has exactly one rational singular
    // point has no other singular points over the algebraic closure.
    let pts = singular_points_22(&a, ctx, 2)?;
    Ok(match pts.as_slice() {
        [(x, y)] => Residue22Class::UniqueSingularPoint { x: *x, y: *y },
        _ => Residue22Class::Other,
    })
}

fn cubic_eval(c: &[u64; 10], pt: &Proj2, ctx: &LocalContext) -> u64 {
    let mut s = 0;
    for (m, &ck) in CUBIC_MONOMIALS.iter().zip(c) {
        if ck == 0 {
            continue;
        }
        let mut t = ck;
        for v in 0..3 {
            t = ctx.mul(t, ctx.pow_fp(pt[v], m[v] as u64));
        }
        s = ctx.add(s, t);
    }
    s
}

fn cubic_partial(c: &[u64; 10], var: usize, pt: &Proj2, ctx: &LocalContext) -> u64 {
    let mut s = 0;
    for (m, &ck) in CUBIC_MONOMIALS.iter().zip(c) {
        if ck == 0 || m[var] == 0 {
            continue;
        }
        let mut t = ctx.mul(ck, m[var] as u64);
        for v in 0..3 {
            let e = if v == var { m[v] - 1 } else { m[v] };
            t = ctx.mul(t, ctx.pow_fp(pt[v], e as u64));
        }
        s = ctx.add(s, t);
    }
    s
}

pub fn is_singular_cubic(c: &[u64; 10], pt: &Proj2, ctx: &LocalContext) -> bool {
    cubic_eval(c, pt, ctx) == 0 && (0..3).all(|v| cubic_partial(c, v, pt, ctx) == 0)
}

fn p2_points(p: u64) -> impl Iterator<Item = Proj2> {
    let affine = (0..p).flat_map(move |x| (0..p).map(move |y| [x, y, 1]));
    let line = (0..p).map(|x| [x, 1, 0]);
    affine.chain(line).chain(std::iter::once([1, 0, 0]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ResidueCubicClass {
    Zero,
    /// The coefficients (l0, l1, l2) of the linear form l0 x + l1 y + l2 z.
    RepeatedLinearFactor { form: Proj2 },
    UniqueSingularPoint { point: Proj2 },
    Other,
}

impl ResidueCubicClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ResidueCubicClass::Zero => "ZERO",
            ResidueCubicClass::RepeatedLinearFactor { .. } => "REPEATED_LINEAR_FACTOR",
            ResidueCubicClass::UniqueSingularPoint { .. } => "UNIQUE_SINGULAR_POINT",
            ResidueCubicClass::Other => "OTHER",
        }
    }
}

fn cross(a: &Proj2, b: &Proj2, ctx: &LocalContext) -> Proj2 {
    let m = |i: usize, j: usize| ctx.sub(ctx.mul(a[i], b[j]), ctx.mul(a[j], b[i]));
    [m(1, 2), m(2, 0), m(0, 1)]
}

fn dot(a: &Proj2, b: &Proj2, ctx: &LocalContext) -> u64 {
    (0..3).fold(0, |s, i| ctx.add(s, ctx.mul(a[i], b[i])))
}

pub fn classify_cubic_residue(f: &TernaryCubic, ctx: &LocalContext) -> Result<ResidueCubicClass> {
    let c = reduce_cubic(f, ctx);
    if c.iter().all(|&x| x == 0) {
        return Ok(ResidueCubicClass::Zero);
    }
    check_bound(ctx, P2_PRIME_BOUND)?;
    let sing: Vec<Proj2> = p2_points(ctx.p_u64()).filter(|pt| is_singular_cubic(&c, pt, ctx)).collect();
    match sing.len() {
        0 | 2 => Ok(ResidueCubicClass::Other),
        1 => {
            if is_triangle_with_conjugate_sides(f, &sing[0], ctx)? {
                Ok(ResidueCubicClass::Other)
            } else {
                Ok(ResidueCubicClass::UniqueSingularPoint { point: sing[0] })
            }
        }
        _ => {
            // three collinear singular points force the line to be a repeated component
            let line = cross(&sing[0], &sing[1], ctx);
            if sing.iter().all(|pt| dot(&line, pt, ctx) == 0) {
                Ok(ResidueCubicClass::RepeatedLinearFactor { form: normalize_point(line, ctx) })
            } else {
                Ok(ResidueCubicClass::Other)
            }
        }
    }
}

/// With the rational singular point moved to (1:0:0), f = x q2(y,z) + q3(y,z); the
/// curve is a triangle with a rational vertex and two conjugate vertices exactly
/// when q2 is nonzero and divides q3.
fn is_triangle_with_conjugate_sides(f: &TernaryCubic, pt: &Proj2, ctx: &LocalContext) -> Result<bool> {
    let a = unimodular_with_first_row(&lift_point(pt));
    let subs: Vec<MPoly<BigInt>> = (0..3).map(|j| MPoly::linear(3, &[0, 1, 2], &[a[0][j].clone(), a[1][j].clone(), a[2][j].clone()])).collect();
    let g = TernaryCubic::from_poly(&f.to_poly().substitute(&subs));
    let c = reduce_cubic(&g, ctx);
    if c[0] != 0 || c[1] != 0 || c[2] != 0 {
        return Err(Error::Internal("moved singular point is not singular".into()));
    }
    // q2 = a y^2 + b yz + c z^2, q3 = d y^3 + e y^2 z + f yz^2 + g z^3
    let (qa, qb, qc) = (c[3], c[4], c[5]);
    let (d, e, ff, gg) = (c[6], c[7], c[8], c[9]);
    if qa == 0 && qb == 0 && qc == 0 {
        return Ok(false);
    }
    // look for q3 = q2 (alpha y + beta z)
    let inv = |x: u64| ctx.inv(x).unwrap();
    let (alpha, beta) = if qa != 0 {
        let al = ctx.mul(d, inv(qa));
        (al, ctx.mul(ctx.sub(e, ctx.mul(qb, al)), inv(qa)))
    } else if qc != 0 {
        let be = ctx.mul(gg, inv(qc));
        (ctx.mul(ctx.sub(ff, ctx.mul(qb, be)), inv(qc)), be)
    } else {
        (ctx.mul(e, inv(qb)), ctx.mul(ff, inv(qb)))
    };
    let prod = [
        ctx.mul(qa, alpha),
        ctx.add(ctx.mul(qa, beta), ctx.mul(qb, alpha)),
        ctx.add(ctx.mul(qb, beta), ctx.mul(qc, alpha)),
        ctx.mul(qc, beta),
    ];
    Ok(prod == [d, e, ff, gg])
}

/// A slicing in which the slices are linearly dependent mod p, with the dependence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationDefect {
    /// 0-based slicing index.
    pub slicing: usize,
    /// Coefficients c with sum c_t slice_t = 0 mod p, first nonzero entry 1.
    pub vector: Vec<u64>,
}

fn defect_of(slices: &[Vec<BigInt>], slicing: usize, ctx: &LocalContext) -> Option<SaturationDefect> {
    let len = slices[0].len();
    let rows: Vec<Vec<u64>> = (0..len).map(|r| slices.iter().map(|s| ctx.reduce(&s[r])).collect()).collect();
    let v = FpMatrix::from_rows(&rows, ctx).kernel_vector(ctx)?;
    let first = v.iter().position(|&x| x != 0)?;
    let inv = ctx.inv(v[first]).unwrap();
    Some(SaturationDefect { slicing, vector: v.iter().map(|&x| ctx.mul(x, inv)).collect() })
}

/// The first slicing whose slices are dependent mod p.
pub fn saturation_defect(m: &Model, ctx: &LocalContext) -> Result<Option<SaturationDefect>> {
    match m {
        Model::Cube(s) => Ok(cube_defect(s, ctx)),
        Model::Hypercube(h) => Ok(hypercube_defect(h, ctx)),
        _ => Err(Error::KindMismatch(format!("saturation is defined for cubes and hypercubes, not a {}", m.kind()))),
    }
}

pub fn cube_defect(s: &Cube, ctx: &LocalContext) -> Option<SaturationDefect> {
    (0..3).find_map(|axis| cube_axis_defect(s, axis, ctx))
}

/// The dependence among the slices of one slicing, if any.
pub fn cube_axis_defect(s: &Cube, axis: usize, ctx: &LocalContext) -> Option<SaturationDefect> {
    let sl: Vec<Vec<BigInt>> = s.slices(axis).iter().map(|m| m.iter().flatten().cloned().collect()).collect();
    defect_of(&sl, axis, ctx)
}

pub fn hypercube_defect(h: &Hypercube, ctx: &LocalContext) -> Option<SaturationDefect> {
    (0..4).find_map(|axis| {
        let sl: Vec<Vec<BigInt>> = h.halves(axis).iter().map(|c| c.to_vec()).collect();
        defect_of(&sl, axis, ctx)
    })
}

#[cfg(test)]
mod tests;
