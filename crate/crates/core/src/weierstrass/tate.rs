use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CoordChange, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exactnum::LocalContext;

/// A local minimal model with the change of coordinates reaching it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalModel {
    pub curve: WeierstrassCurve,
    pub change: CoordChange,
    pub v_disc: i64,
}

struct State<'a> {
    ctx: &'a LocalContext,
    e: WeierstrassCurve,
    change: CoordChange,
}

impl State<'_> {
    fn apply(&mut self, u: BigInt, r: BigInt, s: BigInt, t: BigInt) -> Result<()> {
        let ch = CoordChange::from_ints(u, r, s, t);
        self.e = self.e.transform(&ch)?;
        self.change = self.change.then(&ch);
        Ok(())
    }

    fn v(&self, n: &BigInt) -> i64 {
        self.ctx.val(n).finite().unwrap_or(i64::MAX)
    }

    fn divisible(&self, n: &BigInt, k: i64) -> bool {
        self.v(n) >= k
    }

    fn red(&self, n: &BigInt) -> u64 {
        self.ctx.reduce(n)
    }

    fn lift(&self, a: u64) -> BigInt {
        BigInt::from(a)
    }

    fn require(&self, ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Internal(format!("Tate: {} at p = {}", what, self.ctx.p())))
        }
    }
}

/// Tate's algorithm, run until a model that is minimal at p is reached.
pub fn minimal_discriminant_valuation(e: &WeierstrassCurve, ctx: &LocalContext) -> Result<MinimalModel> {
    if e.discriminant().is_zero() {
        return Err(Error::Singular);
    }
    let p = ctx.p().clone();
    let pw = ctx.p_u64();
    let mut st = State { ctx, e: e.clone(), change: CoordChange::identity() };
    let zero = BigInt::zero;
    loop {
        let vd = st.v(&st.e.discriminant());
        if vd < 12 {
            break;
        }
        // move the singular point of the reduction to (0,0)
        let (r, t) = singular_point(&st)?;
        st.apply(BigInt::one(), r, zero(), t)?;
        let e = st.e.clone();
        st.require(
            st.divisible(&e.a3, 1) && st.divisible(&e.a4, 1) && st.divisible(&e.a6, 1),
            "singular point not at origin",
        )?;
        if !st.divisible(&e.b2(), 1) {
            break; // multiplicative
        }
        if !st.divisible(&e.a6, 2) || !st.divisible(&e.b8(), 3) || !st.divisible(&e.b6(), 3) {
            break; // II, III, IV
        }
        let (s, t) = if pw == 2 {
            let s = BigInt::from(st.red(&e.a2));
            let t = &p * BigInt::from(st.red(&(&e.a6 / (&p * &p))));
            (s, t)
        } else if pw == 3 {
            (e.a1.clone(), e.a3.clone())
        } else {
            let half = st.lift(ctx.inv(2).unwrap());
            (-(&e.a1 * &half).mod_floor(&p), -(&e.a3 * &half))
        };
        st.apply(BigInt::one(), zero(), s, t)?;
        let e = st.e.clone();
        st.require(
            st.divisible(&e.a1, 1)
                && st.divisible(&e.a2, 1)
                && st.divisible(&e.a3, 2)
                && st.divisible(&e.a4, 2)
                && st.divisible(&e.a6, 3),
            "failed to reach the I0* normal form",
        )?;
        let b = st.red(&(&e.a2 / &p));
        let c = st.red(&(&e.a4 / (&p * &p)));
        let d = st.red(&(&e.a6 / (&p * &p * &p)));
        let disc = cubic_disc(b, c, d, ctx);
        if disc != 0 {
            break; // I0*
        }
        if ctx.sub(ctx.mul(b, b), ctx.mul(3 % pw, c)) != 0 {
            break; // In*
        }
        // triple root alpha of T^3 + b T^2 + c T + d
        let alpha = if pw == 3 { ctx.neg(d) } else { ctx.mul(ctx.neg(b), ctx.inv(3).unwrap()) };
        st.apply(BigInt::one(), &p * st.lift(alpha), zero(), zero())?;
        let e = st.e.clone();
        st.require(
            st.divisible(&e.a2, 2) && st.divisible(&e.a4, 3) && st.divisible(&e.a6, 4),
            "triple root not moved to 0",
        )?;
        let a32 = st.red(&(&e.a3 / (&p * &p)));
        let a64 = st.red(&(&e.a6 / ctx.pow(4)));
        if ctx.add(ctx.mul(a32, a32), ctx.mul(4 % pw, a64)) != 0 {
            break; // IV*
        }
        let beta = if pw == 2 { a64 } else { ctx.mul(ctx.neg(a32), ctx.inv(2).unwrap()) };
        st.apply(BigInt::one(), zero(), zero(), &p * &p * st.lift(beta))?;
        let e = st.e.clone();
        st.require(st.divisible(&e.a3, 3) && st.divisible(&e.a6, 5), "double root not moved to 0")?;
        if !st.divisible(&e.a4, 4) || !st.divisible(&e.a6, 6) {
            break; // III*, II*
        }
        st.apply(p.clone(), zero(), zero(), zero())?;
    }
    let v_disc = st.v(&st.e.discriminant());
    Ok(MinimalModel { curve: st.e, change: st.change, v_disc })
}

/// Integer lifts (r, t) of the singular point of the reduction.
fn singular_point(st: &State) -> Result<(BigInt, BigInt)> {
    let ctx = st.ctx;
    let pw = ctx.p_u64();
    let e = &st.e;
    let red = |n: &BigInt| ctx.reduce(n);
    let (r, t) = if pw == 2 {
        if red(&e.a1) == 0 {
            let r = red(&e.a4);
            let t = ctx.reduce(&(BigInt::from(r).pow(3) + &e.a2 * r * r + &e.a4 * r + &e.a6));
            (r, t)
        } else {
            let r = red(&e.a3);
            let t = ctx.reduce(&(BigInt::from(r * r) + &e.a4));
            (r, t)
        }
    } else if pw == 3 {
        let b2 = red(&e.b2());
        let r = if b2 == 0 { ctx.neg(red(&e.b6())) } else { ctx.neg(ctx.mul(b2, red(&e.b4()))) };
        let t = ctx.add(ctx.mul(red(&e.a1), r), red(&e.a3));
        (r, t)
    } else {
        let c4 = red(&e.c4());
        let b2 = red(&e.b2());
        let r = if c4 == 0 {
            ctx.neg(ctx.mul(b2, ctx.inv(12).unwrap()))
        } else {
            let num = ctx.add(red(&e.c6()), ctx.mul(b2, c4));
            ctx.neg(ctx.mul(num, ctx.inv(ctx.mul(12, c4)).unwrap()))
        };
        let t = ctx.neg(ctx.mul(ctx.inv(2).unwrap(), ctx.add(ctx.mul(red(&e.a1), r), red(&e.a3))));
        (r, t)
    };
    Ok((BigInt::from(r), BigInt::from(t)))
}

/// Discriminant of T^3 + b T^2 + c T + d over F_p.
fn cubic_disc(b: u64, c: u64, d: u64, ctx: &LocalContext) -> u64 {
    let (bi, ci, di) = (BigInt::from(b), BigInt::from(c), BigInt::from(d));
    let v = &bi * &bi * &ci * &ci - 4 * ci.pow(3) - 4 * bi.pow(3) * &di - 27 * &di * &di + 18 * &bi * &ci * &di;
    ctx.reduce(&v)
}
