//! Invariants of genus one models: I, J for binary quartics, c4, c6, Delta for
//! every kind, and the Weierstrass data (a-invariants, marked point, u, v) carried
//! by (2,2)-forms and cubes.

mod cubic_tables;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{
    cubics_of_cube, forms_of_hypercube, quartics_of_22, BinaryQuartic, Cube, Hypercube, Model, TernaryCubic,
    TwoTwoForm,
};
use crate::weierstrass::{MarkedPoint, WeierstrassCurve};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticInvariants {
    #[serde(with = "crate::models::bigint_str")]
    pub i: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub j: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub disc: BigInt,
}

/// The Weierstrass equation and point attached to a (2,2)-form or a cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedData {
    pub curve: WeierstrassCurve,
    #[serde(with = "crate::models::bigint_str")]
    pub xi: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub eta: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub u: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub v: BigInt,
}

impl MarkedData {
    pub fn point(&self) -> MarkedPoint {
        MarkedPoint::from_ints(&self.xi, &self.eta)
    }

    /// The marked point (3u, 108v) on Y^2 = X^3 - 27 c4 X - 54 c6.
    pub fn short_point(&self) -> MarkedPoint {
        MarkedPoint::from_ints(&(3 * &self.u), &(108 * &self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    #[serde(with = "crate::models::bigint_str")]
    pub c4: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub c6: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub disc: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked: Option<MarkedData>,
}

impl InvariantSet {
    fn plain(c4: BigInt, c6: BigInt) -> Result<Self> {
        let disc = disc_of(&c4, &c6)?;
        Ok(InvariantSet { c4, c6, disc, marked: None })
    }

    /// Y^2 = X^3 - 27 c4 X - 54 c6.
    pub fn short_curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::short(&self.c4, &self.c6)
    }
}

fn exact_div(n: &BigInt, d: i64, what: &str) -> Result<BigInt> {
    let (q, r) = n.div_rem(&BigInt::from(d));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!("{} is not divisible by {}", what, d)))
    }
}

fn disc_of(c4: &BigInt, c6: &BigInt) -> Result<BigInt> {
    exact_div(&(c4.pow(3) - c6.pow(2)), 1728, "c4^3 - c6^2")
}

fn consistency(ok: bool, what: &str) -> Result<()> {
    if cfg!(debug_assertions) && !ok {
        Err(Error::Internal(format!("inconsistent invariants: {}", what)))
    } else {
        Ok(())
    }
}

pub fn quartic_invariants(g: &BinaryQuartic) -> QuarticInvariants {
    let [a, b, c, d, e] = &g.coeffs;
    let i: BigInt = 12 * a * e - 3 * b * d + c * c;
    let j: BigInt = 72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c.pow(3);
    let num: BigInt = 4 * i.pow(3) - j.pow(2);
    debug_assert!((&num % 27u32).is_zero());
    QuarticInvariants { disc: num / 27, i, j }
}

/// Solves the b-relations for a4 and a6 and assembles the marked data.
fn marked_from(a1: BigInt, a2: BigInt, a3: BigInt, xi: BigInt, eta: BigInt, c4: &BigInt, c6: &BigInt) -> Result<MarkedData> {
    let b2: BigInt = &a1 * &a1 + 4 * &a2;
    let b4 = exact_div(&(&b2 * &b2 - c4), 24, "b2^2 - c4")?;
    let a4 = exact_div(&(&b4 - &a1 * &a3), 2, "b4 - a1 a3")?;
    let b6 = exact_div(&(-c6 - b2.pow(3) + 36 * &b2 * &b4), 216, "-c6 - b2^3 + 36 b2 b4")?;
    let a6 = exact_div(&(&b6 - &a3 * &a3), 4, "b6 - a3^2")?;
    let u = 12 * &xi + &b2;
    let v = 2 * &eta + &a1 * &xi + &a3;
    let curve = WeierstrassCurve::new(a1, a2, a3, a4, a6);
    Ok(MarkedData { curve, xi, eta, u, v })
}

pub fn form22_invariants(f: &TwoTwoForm) -> Result<InvariantSet> {
    let (g1, g2) = quartics_of_22(f);
    let q1 = quartic_invariants(&g1);
    let q2 = quartic_invariants(&g2);
    consistency(q1 == q2, "the two quartics of a (2,2)-form")?;
    let c4 = q1.i;
    let c6 = exact_div(&q1.j, 2, "J")?;
    let a = &f.a;
    let xi = &a[0][0] * &a[2][2] + &a[0][2] * &a[2][0];
    let eta = &a[0][0] * &a[1][1] * &a[2][2];
    let a1 = -a[1][1].clone();
    let a2 = -(&a[0][0] * &a[2][2] + &a[0][1] * &a[2][1] + &a[0][2] * &a[2][0] + &a[1][0] * &a[1][2]);
    let a3 = &a[0][1] * &a[1][2] * &a[2][0] + &a[0][2] * &a[1][0] * &a[2][1]
        - &a[0][0] * &a[1][2] * &a[2][1]
        - &a[0][1] * &a[1][0] * &a[2][2];
    let marked = marked_from(a1, a2, a3, xi, eta, &c4, &c6)?;
    consistency(marked.v == det3(a), "v = det(a)")?;
    let disc = disc_of(&c4, &c6)?;
    Ok(InvariantSet { c4, c6, disc, marked: Some(marked) })
}

/// (c4, c6, Delta) of a ternary cubic, scaled so that c4(xyz) = 1 and c6(xyz) = -1.
pub fn cubic_invariants(f: &TernaryCubic) -> (BigInt, BigInt, BigInt) {
    let eval = |terms: &[(i64, [u8; 10])]| -> BigInt {
        terms.iter().fold(BigInt::zero(), |acc, (c, e)| {
            let mut t = BigInt::from(*c);
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    t *= f.coeffs[k].pow(ek as u32);
                }
            }
            acc + t
        })
    };
    let c4 = eval(&cubic_tables::C4_TERMS);
    let c6 = eval(&cubic_tables::C6_TERMS);
    let disc = (c4.pow(3) - c6.pow(2)) / 1728;
    (c4, c6, disc)
}

type M3 = [[BigInt; 3]; 3];

fn det3(m: &M3) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn adj(m: &M3) -> M3 {
    let c = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let s: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let minor = &m[r[0]][s[0]] * &m[r[1]][s[1]] - &m[r[0]][s[1]] * &m[r[1]][s[0]];
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    };
    // adjugate is the transpose of the cofactor matrix
    std::array::from_fn(|i| std::array::from_fn(|j| c(j, i)))
}

fn mul(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(BigInt::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
    })
}

fn add(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

fn sub(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

fn tr(a: &M3) -> BigInt {
    &a[0][0] + &a[1][1] + &a[2][2]
}

pub fn cube_invariants(s: &Cube) -> Result<InvariantSet> {
    let cubics = cubics_of_cube(s);
    let (c4, c6, disc) = cubic_invariants(&cubics[0]);
    for f in &cubics[1..] {
        let (d4, d6, _) = cubic_invariants(f);
        consistency(d4 == c4 && d6 == c6, "the three cubics of a cube")?;
    }
    let [m, n, p] = s.slices(0);
    let an = adj(&n);
    let ap = adj(&p);
    let a = mul(&an, &m);
    let c = mul(&ap, &m);
    let b = mul(&sub(&sub(&adj(&add(&n, &p)), &an), &ap), &m);
    let ac = mul(&a, &c);
    let abc = mul(&mul(&a, &b), &c);
    let cba = mul(&mul(&c, &b), &a);
    let xi = -tr(&ac);
    let eta = -tr(&cba);
    let a1 = tr(&b);
    let a2 = tr(&ac) + tr(&a) * tr(&c) - tr(&adj(&b));
    let a3 = tr(&abc) + tr(&cba) + tr(&ac) * tr(&b);
    let marked = marked_from(a1, a2, a3, xi, eta, &c4, &c6)?;
    consistency(marked.v == tr(&abc) - tr(&cba), "v = tr(ABC) - tr(CBA)")?;
    Ok(InvariantSet { c4, c6, disc, marked: Some(marked) })
}

/// Invariants of a hypercube together with its three marked points on
/// Y^2 = X^3 - 27 c4 X - 54 c6, coming from the pairs {F12, F34}, {F13, F24}, {F14, F23}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypercubeInvariants {
    #[serde(with = "crate::models::bigint_str")]
    pub c4: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub c6: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub disc: BigInt,
    /// Invariants of F12, F13, F14, F23, F24, F34.
    pub forms: Vec<InvariantSet>,
    #[serde(skip)]
    pub points: [MarkedPoint; 3],
}

impl HypercubeInvariants {
    pub fn short_curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::short(&self.c4, &self.c6)
    }
}

/// Indices into the pair list of the complementary pairs {12,34}, {13,24}, {14,23}.
pub const COMPLEMENTARY: [(usize, usize); 3] = [(0, 5), (1, 4), (2, 3)];

pub fn hypercube_invariants(h: &Hypercube) -> Result<HypercubeInvariants> {
    let hf = forms_of_hypercube(h)?;
    let forms = hf.f.iter().map(form22_invariants).collect::<Result<Vec<_>>>()?;
    let (c4, c6, disc) = (forms[0].c4.clone(), forms[0].c6.clone(), forms[0].disc.clone());
    consistency(forms.iter().all(|s| s.c4 == c4 && s.c6 == c6), "the six forms of a hypercube")?;
    let md = |k: usize| forms[k].marked.as_ref().unwrap();
    for &(i, j) in &COMPLEMENTARY {
        consistency(md(i).u == md(j).u, "u on complementary forms")?;
    }
    let points: [MarkedPoint; 3] = std::array::from_fn(|n| md(COMPLEMENTARY[n].0).short_point());
    if !disc.is_zero() {
        let e = WeierstrassCurve::short(&c4, &c6);
        let sum = e.add(&e.add(&points[0], &points[1])?, &points[2])?;
        consistency(sum.is_infinity(), "P1 + P2 + P3 = 0")?;
    }
    Ok(HypercubeInvariants { c4, c6, disc, forms, points })
}

/// Invariants of any model; quartics report c4 = I, c6 = J/2 only when J is even, so
/// they are handled separately by [`quartic_invariants`].
pub fn invariant_set(m: &Model) -> Result<InvariantSet> {
    match m {
        Model::Quartic(_) => Err(Error::Unsupported("quartics carry I, J rather than c4, c6".into())),
        Model::Form22(f) => form22_invariants(f),
        Model::Cube(s) => cube_invariants(s),
        Model::Cubic(f) => {
            let (c4, c6, _) = cubic_invariants(f);
            InvariantSet::plain(c4, c6)
        }
        Model::Hypercube(h) => {
            let hi = hypercube_invariants(h)?;
            InvariantSet::plain(hi.c4, hi.c6)
        }
    }
}

/// Delta of any model.
pub fn discriminant(m: &Model) -> Result<BigInt> {
    match m {
        Model::Quartic(g) => Ok(quartic_invariants(g).disc),
        Model::Cubic(f) => Ok(cubic_invariants(f).2),
        Model::Hypercube(h) => {
            let hf = forms_of_hypercube(h)?;
            let q = quartic_invariants(&hf.g[0]);
            let c6 = exact_div(&q.j, 2, "J")?;
            disc_of(&q.i, &c6)
        }
        _ => Ok(invariant_set(m)?.disc),
    }
}
