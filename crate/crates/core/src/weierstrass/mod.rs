//! Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q,
//! their rational points, local minimal models and the level of a genus one model.

mod level;
mod tate;

pub use level::{kappa, level, LevelReport};
pub use tate::{minimal_discriminant_valuation, MinimalModel};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// An integral Weierstrass equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeierstrassCurve {
    #[serde(with = "crate::models::bigint_str")]
    pub a1: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub a2: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub a3: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub a4: BigInt,
    #[serde(with = "crate::models::bigint_str")]
    pub a6: BigInt,
}

impl WeierstrassCurve {
    pub fn new(a1: BigInt, a2: BigInt, a3: BigInt, a4: BigInt, a6: BigInt) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    pub fn from_i64(a: [i64; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = a.map(BigInt::from);
        Self::new(a1, a2, a3, a4, a6)
    }

    /// The curve Y^2 = X^3 - 27 c4 X - 54 c6.
    pub fn short(c4: &BigInt, c6: &BigInt) -> Self {
        Self::new(BigInt::zero(), BigInt::zero(), BigInt::zero(), -27 * c4, -54 * c6)
    }

    pub fn a_invariants(&self) -> [BigInt; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn b2(&self) -> BigInt {
        &self.a1 * &self.a1 + 4 * &self.a2
    }

    pub fn b4(&self) -> BigInt {
        2 * &self.a4 + &self.a1 * &self.a3
    }

    pub fn b6(&self) -> BigInt {
        &self.a3 * &self.a3 + 4 * &self.a6
    }

    pub fn b8(&self) -> BigInt {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    }

    pub fn c4(&self) -> BigInt {
        let b2 = self.b2();
        &b2 * &b2 - 24 * self.b4()
    }

    pub fn c6(&self) -> BigInt {
        let (b2, b4, b6) = (self.b2(), self.b4(), self.b6());
        -(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - 216 * b6
    }

    pub fn discriminant(&self) -> BigInt {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(&b2 * &b2 * &b8) - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    /// Applies x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    pub fn transform(&self, ch: &CoordChange) -> Result<WeierstrassCurve> {
        let (u, r, s, t) = (&ch.u, &ch.r, &ch.s, &ch.t);
        let [a1, a2, a3, a4, a6] = self.a_invariants().map(|a| q(&a));
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let n1 = &a1 + &two * s;
        let n2 = &a2 - s * &a1 + &three * r - s * s;
        let n3 = &a3 + r * &a1 + &two * t;
        let n4 = &a4 - s * &a3 + &two * r * &a2 - (t + r * s) * &a1 + &three * r * r - &two * s * t;
        let n6 = &a6 + r * &a4 + r * r * &a2 + r * r * r - t * &a3 - t * t - r * t * &a1;
        let pw = |k: i32| num_traits::pow(u.clone(), k as usize);
        let out = [n1 / pw(1), n2 / pw(2), n3 / pw(3), n4 / pw(4), n6 / pw(6)];
        if out.iter().any(|a| !a.is_integer()) {
            return Err(Error::NotIntegral);
        }
        let [b1, b2, b3, b4, b6] = out.map(|a| a.to_integer());
        Ok(WeierstrassCurve::new(b1, b2, b3, b4, b6))
    }

    pub fn is_on_curve(&self, p: &MarkedPoint) -> bool {
        match p {
            MarkedPoint::Infinity => true,
            MarkedPoint::Affine { x, y } => {
                let [a1, a2, a3, a4, a6] = self.a_invariants().map(|a| q(&a));
                y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
            }
        }
    }

    fn check(&self, p: &MarkedPoint) -> Result<()> {
        if self.is_on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &MarkedPoint) -> MarkedPoint {
        match p {
            MarkedPoint::Infinity => MarkedPoint::Infinity,
            MarkedPoint::Affine { x, y } => MarkedPoint::Affine {
                x: x.clone(),
                y: -y - q(&self.a1) * x - q(&self.a3),
            },
        }
    }

    pub fn add(&self, p: &MarkedPoint, r: &MarkedPoint) -> Result<MarkedPoint> {
        self.check(p)?;
        self.check(r)?;
        let ((x1, y1), (x2, y2)) = match (p, r) {
            (MarkedPoint::Infinity, _) => return Ok(r.clone()),
            (_, MarkedPoint::Infinity) => return Ok(p.clone()),
            (MarkedPoint::Affine { x: x1, y: y1 }, MarkedPoint::Affine { x: x2, y: y2 }) => ((x1, y1), (x2, y2)),
        };
        let [a1, a2, a3, a4, a6] = self.a_invariants().map(|a| q(&a));
        let (lambda, nu) = if x1 == x2 {
            let den = y1 + y2 + &a1 * x2 + &a3;
            if den.is_zero() {
                return Ok(MarkedPoint::Infinity);
            }
            let three = BigRational::from_integer(3.into());
            let two = BigRational::from_integer(2.into());
            let lam = (three * x1 * x1 + two.clone() * &a2 * x1 + &a4 - &a1 * y1) / &den;
            let nu = (-(x1 * x1 * x1) + &a4 * x1 + two * &a6 - &a3 * y1) / &den;
            (lam, nu)
        } else {
            let d = x2 - x1;
            ((y2 - y1) / &d, (y1 * x2 - y2 * x1) / &d)
        };
        let x3 = &lambda * &lambda + &a1 * &lambda - &a2 - x1 - x2;
        let y3 = -(&lambda + &a1) * &x3 - nu - a3;
        Ok(MarkedPoint::Affine { x: x3, y: y3 })
    }

    pub fn double(&self, p: &MarkedPoint) -> Result<MarkedPoint> {
        self.add(p, p)
    }

    /// n * P by double-and-add; negative n uses -P.
    pub fn mul(&self, n: i64, p: &MarkedPoint) -> Result<MarkedPoint> {
        self.check(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = MarkedPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.double(&base)?;
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

/// A rational point; the identity is its own variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MarkedPoint {
    Infinity,
    Affine { x: BigRational, y: BigRational },
}

impl MarkedPoint {
    pub fn affine(x: BigRational, y: BigRational) -> Self {
        MarkedPoint::Affine { x, y }
    }

    pub fn from_ints(x: &BigInt, y: &BigInt) -> Self {
        MarkedPoint::Affine { x: q(x), y: q(y) }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, MarkedPoint::Infinity)
    }
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedPoint::Infinity => write!(f, "O"),
            MarkedPoint::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordChange {
    pub u: BigRational,
    pub r: BigRational,
    pub s: BigRational,
    pub t: BigRational,
}

impl CoordChange {
    pub fn identity() -> Self {
        let z = BigRational::zero();
        CoordChange { u: BigRational::one(), r: z.clone(), s: z.clone(), t: z }
    }

    pub fn from_ints(u: BigInt, r: BigInt, s: BigInt, t: BigInt) -> Self {
        CoordChange { u: q(&u), r: q(&r), s: q(&s), t: q(&t) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CoordChange) -> CoordChange {
        let (u1, r1, s1, t1) = (&self.u, &self.r, &self.s, &self.t);
        let (u2, r2, s2, t2) = (&next.u, &next.r, &next.s, &next.t);
        CoordChange {
            u: u1 * u2,
            r: r1 + u1 * u1 * r2,
            s: s1 + u1 * s2,
            t: t1 + u1 * u1 * u1 * t2 + s1 * u1 * u1 * r2,
        }
    }

    /// Coordinates of `p` on the transformed curve.
    pub fn map_point(&self, p: &MarkedPoint) -> MarkedPoint {
        match p {
            MarkedPoint::Infinity => MarkedPoint::Infinity,
            MarkedPoint::Affine { x, y } => {
                let u2 = &self.u * &self.u;
                let xn = (x - &self.r) / &u2;
                let yn = (y - &self.s * &u2 * &xn - &self.t) / (&u2 * &self.u);
                MarkedPoint::Affine { x: xn, y: yn }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn standard_quantities() {
        let e = WeierstrassCurve::from_i64([0, 0, 0, 1, 0]);
        assert_eq!(e.c4(), BigInt::from(-48));
        assert_eq!(e.c6(), BigInt::from(0));
        assert_eq!(e.discriminant(), BigInt::from(-64));
        let e = WeierstrassCurve::from_i64([1, -1, 1, -3, 4]);
        assert_eq!(BigInt::from(1728) * e.discriminant(), e.c4().pow(3) - e.c6().pow(2));
        assert_eq!(4 * e.b8(), e.b2() * e.b6() - e.b4().pow(2));
    }

    #[test]
    fn group_law() {
        let e = WeierstrassCurve::from_i64([0, 0, 1, -1, 0]);
        let p = MarkedPoint::affine(rat(0), rat(0));
        assert_eq!(e.add(&p, &MarkedPoint::Infinity).unwrap(), p);
        assert!(e.add(&p, &e.neg(&p)).unwrap().is_infinity());
        let d = e.double(&p).unwrap();
        assert!(e.is_on_curve(&d));
        assert_eq!(d, MarkedPoint::affine(rat(1), rat(0)));
        let p5 = e.mul(5, &p).unwrap();
        assert!(e.is_on_curve(&p5));
        assert_eq!(e.add(&e.mul(2, &p).unwrap(), &e.mul(3, &p).unwrap()).unwrap(), p5);
        assert_eq!(e.mul(-1, &p).unwrap(), e.neg(&p));
        assert!(e.add(&MarkedPoint::affine(rat(1), rat(1)), &p).is_err());
    }

    #[test]
    fn transform_and_points() {
        let ch = CoordChange::from_ints(2.into(), 3.into(), (-1).into(), 7.into());
        let inv = CoordChange {
            u: BigRational::one() / &ch.u,
            r: -&ch.r / (&ch.u * &ch.u),
            s: -&ch.s / &ch.u,
            t: (&ch.r * &ch.s - &ch.t) / (&ch.u * &ch.u * &ch.u),
        };
        assert_eq!(ch.then(&inv), CoordChange::identity());
        let e0 = WeierstrassCurve::from_i64([0, 0, 1, -1, 0]);
        let ch = CoordChange::from_ints(1.into(), 1.into(), 2.into(), (-3).into());
        let e1 = e0.transform(&ch).unwrap();
        assert_eq!(e1.discriminant(), e0.discriminant());
        let p = MarkedPoint::affine(rat(0), rat(0));
        assert!(e1.is_on_curve(&ch.map_point(&p)));
    }
}
