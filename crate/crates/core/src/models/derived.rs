use super::forms::{BinaryQuartic, Cube, Hypercube, TernaryCubic, TwoTwoForm};
use crate::error::{Error, Result};
use crate::exactnum::poly::Coeff;
use crate::exactnum::{det3, MPoly};


/// Discriminant q2^2 - 4 q1 q3 of a binary quadratic in y whose coefficients are
/// binary quadratics in x, each given as (x1^2, x1x2, x2^2) coefficients.
fn discriminant_quartic<T: Coeff>(q1: [T; 3], q2: [T; 3], q3: [T; 3]) -> BinaryQuartic<T> {
    let mul = |a: &[T; 3], b: &[T; 3]| -> [T; 5] {
        let mut r: [T; 5] = std::array::from_fn(|_| T::zero());
        for i in 0..3 {
            for j in 0..3 {
                r[i + j] = r[i + j].clone() + a[i].clone() * b[j].clone();
            }
        }
        r
    };
    let sq = mul(&q2, &q2);
    let pr = mul(&q1, &q3);
    let four = T::one() + T::one() + T::one() + T::one();
    BinaryQuartic::new(std::array::from_fn(|i| sq[i].clone() - four.clone() * pr[i].clone()))
}

/// The binary quartics G1 (in x) and G2 (in y) of a (2,2)-form.
pub fn quartics_of_22<T: Coeff>(f: &TwoTwoForm<T>) -> (BinaryQuartic<T>, BinaryQuartic<T>) {
    let a = &f.a;
    let col = |j: usize| [a[0][j].clone(), a[1][j].clone(), a[2][j].clone()];
    let row = |i: usize| a[i].clone();
    (discriminant_quartic(col(0), col(1), col(2)), discriminant_quartic(row(0), row(1), row(2)))
}

/// The ternary cubics det(M^i x + N^i y + P^i z), one per slicing.
pub fn cubics_of_cube<T: Coeff>(s: &Cube<T>) -> [TernaryCubic<T>; 3] {
    std::array::from_fn(|axis| {
        let sl = s.slices(axis);
        let m: [[MPoly<T>; 3]; 3] = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                MPoly::linear(3, &[0, 1, 2], &[sl[0][a][b].clone(), sl[1][a][b].clone(), sl[2][a][b].clone()])
            })
        });
        TernaryCubic::from_poly(&det3(&m))
    })
}

/// The six (2,2)-forms and four binary quartics of a hypercube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeForms<T> {
    /// Indexed by the pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3) of variable sets;
    /// the first set of the pair carries the x-variables.
    pub f: [TwoTwoForm<T>; 6],
    /// G_1..G_4, one per variable set.
    pub g: [BinaryQuartic<T>; 4],
}

pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    PAIRS.iter().position(|&p| p == (a, b)).unwrap()
}

/// F_ab: the determinant of H viewed as a bilinear form in the two remaining sets.
pub fn form_of_pair<T: Coeff>(h: &Hypercube<T>, a: usize, b: usize) -> TwoTwoForm<T> {
    let rest: Vec<usize> = (0..4).filter(|&n| n != a && n != b).collect();
    let (c, d) = (rest[0], rest[1]);
    let entry = |kc: usize, kd: usize| {
        let mut p = MPoly::zero(4);
        for ia in 0..2 {
            for ib in 0..2 {
                let mut idx = [0; 4];
                idx[a] = ia;
                idx[b] = ib;
                idx[c] = kc;
                idx[d] = kd;
                let mut e = vec![0u32; 4];
                e[ia] = 1;
                e[2 + ib] = 1;
                p.add_term(e, h.get(idx).clone());
            }
        }
        p
    };
    let det = entry(0, 0).mul(&entry(1, 1)).sub(&entry(0, 1).mul(&entry(1, 0)));
    TwoTwoForm::from_poly(&det, [0, 1], [2, 3])
}

pub fn forms_of_hypercube<T: Coeff>(h: &Hypercube<T>) -> Result<HypercubeForms<T>> {
    let f: [TwoTwoForm<T>; 6] = std::array::from_fn(|n| form_of_pair(h, PAIRS[n].0, PAIRS[n].1));
    let quartics: Vec<(BinaryQuartic<T>, BinaryQuartic<T>)> = f.iter().map(quartics_of_22).collect();
    let mut g: Vec<BinaryQuartic<T>> = Vec::with_capacity(4);
    for set in 0..4 {
        let mut cands = Vec::new();
        for (n, &(a, b)) in PAIRS.iter().enumerate() {
            if a == set {
                cands.push(quartics[n].0.clone());
            } else if b == set {
                cands.push(quartics[n].1.clone());
            }
        }
        if cands.iter().any(|q| *q != cands[0]) {
            return Err(Error::Internal(format!("binary quartics of variable set {} disagree", set + 1)));
        }
        g.push(cands.swap_remove(0));
    }
    Ok(HypercubeForms { f, g: g.try_into().ok().unwrap() })
}
