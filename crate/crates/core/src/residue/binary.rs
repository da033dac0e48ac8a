use super::Proj1;
use crate::error::{Error, Result};
use crate::exactnum::LocalContext;

/// Polynomials over F_p as coefficient vectors, constant term first.
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn eval(a: &[u64], t: u64, ctx: &LocalContext) -> u64 {
    a.iter().rev().fold(0, |acc, &c| ctx.add(ctx.mul(acc, t), c))
}

fn derivative(a: &[u64], ctx: &LocalContext) -> Vec<u64> {
    trim(a.iter().enumerate().skip(1).map(|(k, &c)| ctx.mul(c, k as u64 % ctx.p_u64())).collect())
}

fn rem(a: &[u64], b: &[u64], ctx: &LocalContext) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = ctx.inv(*b.last().unwrap()).unwrap();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = ctx.mul(*r.last().unwrap(), lead_inv);
        for (k, &c) in b.iter().enumerate() {
            r[shift + k] = ctx.sub(r[shift + k], ctx.mul(f, c));
        }
        r = trim(r);
    }
    r
}

/// Monic gcd; the zero polynomial is the empty vector.
pub fn poly_gcd(a: &[u64], b: &[u64], ctx: &LocalContext) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, ctx);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = ctx.inv(l).unwrap();
        a.iter_mut().for_each(|c| *c = ctx.mul(*c, inv));
    }
    a
}

/// The unique multiple root in P^1(F_p) of a nonzero binary form given by its
/// coefficients of x1^d, x1^(d-1) x2, ..., x2^d, if there is exactly one multiple
/// root over the algebraic closure. Forms of degree at most 4 are supported.
pub fn repeated_root(form: &[u64], ctx: &LocalContext) -> Result<Option<Proj1>> {
    let d = form.len() - 1;
    if d > 4 {
        return Err(Error::Precondition("repeated_root supports degree at most 4".into()));
    }
    let Some(m_inf) = form.iter().position(|&c| c != 0) else {
        return Err(Error::Precondition("the zero form has no roots".into()));
    };
    // f(t, 1) as a polynomial in t: coefficient of t^j is form[d - j]
    let poly: Vec<u64> = trim((0..=d).map(|j| form[d - j]).collect());
    let mut roots: Vec<Proj1> = Vec::new();
    if m_inf >= 2 {
        roots.push([1, 0]);
    }
    let p = ctx.p_u64();
    if p < 5 {
        // in degree <= 4 every multiple root of a form with a unique one is rational
        let dp = derivative(&poly, ctx);
        for t in 0..p {
            if eval(&poly, t, ctx) == 0 && eval(&dp, t, ctx) == 0 {
                roots.push([t, 1]);
            }
        }
    } else if poly.len() >= 2 {
        let g = poly_gcd(&poly, &derivative(&poly, ctx), ctx);
        let k = g.len() - 1;
        if k >= 1 {
            // g must be (t - alpha)^k
            let alpha = ctx.mul(ctx.neg(g[k - 1]), ctx.inv(k as u64).unwrap());
            let mut power = vec![1u64];
            for _ in 0..k {
                let mut next = vec![0u64; power.len() + 1];
                for (i, &c) in power.iter().enumerate() {
                    next[i + 1] = ctx.add(next[i + 1], c);
                    next[i] = ctx.sub(next[i], ctx.mul(c, alpha));
                }
                power = next;
            }
            if power != g {
                return Ok(None);
            }
            roots.push([alpha, 1]);
        }
    }
    Ok(if roots.len() == 1 { Some(roots[0]) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let c5 = LocalContext::new(5).unwrap();
        assert_eq!(repeated_root(&[0, 0, 1], &c5), Ok(Some([1, 0])));
        assert_eq!(repeated_root(&[0, 1, 0], &c5), Ok(None));
        let c3 = LocalContext::new(3).unwrap();
        assert_eq!(repeated_root(&[1, 2, 1, 0, 0], &c3), Ok(None));
        assert!(repeated_root(&[0, 0, 0], &c5).is_err());
    }

    #[test]
    fn finds_affine_double_roots() {
        for p in [2u64, 3, 5, 7, 11] {
            let ctx = LocalContext::new(p).unwrap();
            for a in 0..p {
                let sq = [1, ctx.neg(ctx.mul(2, a)), ctx.mul(a, a)];
                assert_eq!(repeated_root(&sq, &ctx), Ok(Some([a, 1])), "p={} a={}", p, a);
                let quart = [1, ctx.neg(ctx.mul(2, a)), ctx.mul(a, a), 0, 0];
                // x1^2 (x1 - a x2)^2: two double roots unless a = 0
                let want = if a == 0 { Some([0, 1]) } else { None };
                assert_eq!(repeated_root(&quart, &ctx), Ok(want), "p={} a={}", p, a);
            }
        }
    }

    #[test]
    fn conjugate_double_roots_are_not_unique() {
        // (x1^2 + x2^2)^2 mod 7: x1^2 + x2^2 is irreducible
        let ctx = LocalContext::new(7).unwrap();
        assert_eq!(repeated_root(&[1, 0, 2, 0, 1], &ctx), Ok(None));
        // x2^4 mod 7
        assert_eq!(repeated_root(&[0, 0, 0, 0, 1], &ctx), Ok(Some([1, 0])));
        // x1^3 x2 has a triple root at (0:1) and a simple one at (1:0)
        assert_eq!(repeated_root(&[0, 1, 0, 0, 0], &ctx), Ok(Some([0, 1])));
    }
}
