#![allow(dead_code)]

use g1min::exactnum::{LocalContext, QMat};
use g1min::invariants::discriminant;
use g1min::models::{act, Cube, GroupElement, Hypercube, Model, ModelKind, TwoTwoForm};
use g1min::weierstrass::{level, WeierstrassCurve};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pi_diag(exps: &[i64], ctx: &LocalContext) -> QMat {
    QMat::diag(exps.iter().map(|&e| ctx.pow_rat(e)).collect())
}

/// Product of a few random elementary matrices.
pub fn unimodular(n: usize, rng: &mut ChaCha8Rng) -> QMat {
    let mut m = QMat::identity(n);
    for _ in 0..3 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let mut e = QMat::identity(n);
        e.set(i, j, BigRational::from_integer(rng.gen_range(-3..=3).into()));
        m = e.mul(&m);
    }
    m
}

fn nonsingular(m: &Model) -> bool {
    !discriminant(m).unwrap().is_zero()
}

/// Scales by p, then applies up to three random integral moves of the form
/// [p^e, diag(p^e_i) U, ...], the inverses of the reduction steps.
pub fn raise(m: &Model, ctx: &LocalContext, rng: &mut ChaCha8Rng) -> Model {
    let kind = m.kind();
    let (sizes, has_scalar) = kind.group_shape();
    let mut cur = m.scale(ctx.p());
    for _ in 0..rng.gen_range(0..=3) {
        let mats = sizes
            .iter()
            .map(|&n| {
                let exps: Vec<i64> = (0..n).map(|_| i64::from(rng.gen_bool(0.3))).collect();
                pi_diag(&exps, ctx).mul(&unimodular(n, rng))
            })
            .collect();
        let scalar = ctx.pow_rat(i64::from(has_scalar && rng.gen_bool(0.3)));
        let g = GroupElement::new(kind, scalar, mats).unwrap();
        cur = act(&g, &cur).unwrap().to_integral().unwrap();
    }
    cur
}

/// (a1, a2, a3, a4) with |a_i| <= bound and a nonsingular curve.
pub fn random_a(bound: i64, rng: &mut ChaCha8Rng) -> [BigInt; 4] {
    loop {
        let a: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if !WeierstrassCurve::from_i64([a[0], a[1], a[2], a[3], 0]).discriminant().is_zero() {
            return a.map(BigInt::from);
        }
    }
}

/// A random nonsingular hypercube of level 0 at p, found by rejection.
pub fn level0_hypercube(ctx: &LocalContext, rng: &mut ChaCha8Rng) -> Model {
    loop {
        let h = Model::Hypercube(Hypercube::new(std::array::from_fn(|_| BigInt::from(rng.gen_range(-3..=3)))));
        if nonsingular(&h) && level(&h, ctx).unwrap().level == 0 {
            return h;
        }
    }
}

/// Random nonsingular form, made non-minimal about half the time by an inverse
/// reduction [p^(a+b+1), diag(1, p^a) U, diag(1, p^b) V].
pub fn random_22(ctx: &LocalContext, rng: &mut ChaCha8Rng) -> TwoTwoForm {
    loop {
        let m = Model::Form22(TwoTwoForm::new(std::array::from_fn(|_| {
            std::array::from_fn(|_| BigInt::from(rng.gen_range(-4..=4)))
        })));
        if !nonsingular(&m) {
            continue;
        }
        let m = if rng.gen_bool(0.5) {
            let (a, b) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            let mats = vec![pi_diag(&[0, a], ctx).mul(&unimodular(2, rng)), pi_diag(&[0, b], ctx).mul(&unimodular(2, rng))];
            let g = GroupElement::new(ModelKind::Form22, ctx.pow_rat(a + b + 1), mats).unwrap();
            act(&g, &m).unwrap().to_integral().unwrap()
        } else {
            m
        };
        let Model::Form22(f) = m else { unreachable!() };
        return f;
    }
}

/// Random nonsingular hypercube, half the time pushed through diag(1, p^e) U on
/// each axis.
pub fn random_hypercube(ctx: &LocalContext, rng: &mut ChaCha8Rng) -> Hypercube {
    loop {
        let m = Model::Hypercube(Hypercube::new(std::array::from_fn(|_| BigInt::from(rng.gen_range(-3..=3)))));
        if !nonsingular(&m) {
            continue;
        }
        let m = if rng.gen_bool(0.5) {
            let mats = (0..4).map(|_| pi_diag(&[0, i64::from(rng.gen_bool(0.5))], ctx).mul(&unimodular(2, rng))).collect();
            let g = GroupElement::new(ModelKind::Hypercube, ctx.pow_rat(0), mats).unwrap();
            act(&g, &m).unwrap().to_integral().unwrap()
        } else {
            m
        };
        let Model::Hypercube(h) = m else { unreachable!() };
        return h;
    }
}

pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// A nonsingular cube congruent to the Levi-Civita symbol mod p.
pub fn lifted_levi_civita(p: u64, rng: &mut ChaCha8Rng) -> Cube {
    loop {
        let mut s = Cube::zero();
        for f in 0..27 {
            let (i, j, k) = (f / 9, f / 3 % 3, f % 3);
            s.set(i, j, k, BigInt::from(levi_civita(i, j, k) + p as i64 * rng.gen_range(-3..=3)));
        }
        if nonsingular(&Model::Cube(s.clone())) {
            return s;
        }
    }
}

/// A nonsingular hypercube whose 4x4 matrix is the identity mod p^2.
pub fn lifted_identity(p: u64, rng: &mut ChaCha8Rng) -> Hypercube {
    let p2 = (p * p) as i64;
    loop {
        let m: [[BigInt; 4]; 4] =
            std::array::from_fn(|i| std::array::from_fn(|j| BigInt::from(i64::from(i == j) + p2 * rng.gen_range(-2..=2))));
        let h = Hypercube::from_matrix(&m);
        if nonsingular(&Model::Hypercube(h.clone())) {
            return h;
        }
    }
}
