use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::is_probable_prime;
use super::valuation::{val_int, val_rat, Valuation};
use crate::error::{Error, Result};

/// Residue-field computations are done in machine words; this bounds the prime.
pub const MAX_RESIDUE_PRIME: u64 = 1 << 31;

/// The local setting: the field Q_p with uniformiser p and residue field F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalContext {
    p: BigInt,
    pw: u64,
}

impl LocalContext {
    pub fn new(p: u64) -> Result<Self> {
        Self::from_bigint(BigInt::from(p))
    }

    pub fn from_bigint(p: BigInt) -> Result<Self> {
        if p < BigInt::from(2) || !is_probable_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        let pw = match p.to_u64() {
            Some(w) if w < MAX_RESIDUE_PRIME => w,
            _ => return Err(Error::PrimeTooLarge(p)),
        };
        Ok(LocalContext { p, pw })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn p_u64(&self) -> u64 {
        self.pw
    }

    pub fn val(&self, n: &BigInt) -> Valuation {
        val_int(n, &self.p)
    }

    pub fn val_rat(&self, q: &BigRational) -> Valuation {
        val_rat(q, &self.p)
    }

    /// p^k as an integer.
    pub fn pow(&self, k: u32) -> BigInt {
        num_traits::pow(self.p.clone(), k as usize)
    }

    /// p^k as a rational, for any sign of k.
    pub fn pow_rat(&self, k: i64) -> BigRational {
        let a = self.pow(k.unsigned_abs() as u32);
        if k >= 0 {
            BigRational::from_integer(a)
        } else {
            BigRational::new(BigInt::one(), a)
        }
    }

    /// Reduction of an integer into [0, p).
    pub fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&self.p).to_u64().unwrap()
    }

    /// Reduction of a p-integral rational.
    pub fn reduce_rat(&self, q: &BigRational) -> Result<u64> {
        let d = self.reduce(q.denom());
        if d == 0 {
            return Err(Error::NotIntegral);
        }
        Ok(self.mul(self.reduce(q.numer()), self.inv(d).unwrap()))
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.pw as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + self.pw as u128 - (b % self.pw) as u128) % self.pw as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.pw as u128) as u64
    }

    pub fn pow_fp(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.pw;
        a %= self.pw;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.pw;
        if a == 0 {
            None
        } else {
            Some(self.pow_fp(a, self.pw - 2))
        }
    }

    /// Square root in F_p (Tonelli-Shanks); `None` for non-residues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.pw;
        let a = a % p;
        if p == 2 || a == 0 {
            return Some(a);
        }
        if self.pow_fp(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow_fp(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow_fp(z, q);
        let mut t = self.pow_fp(a, q);
        let mut r = self.pow_fp(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow_fp(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// Symmetric lift of a residue to an integer in (-p/2, p/2].
    pub fn lift(&self, a: u64) -> BigInt {
        let a = a % self.pw;
        if a > self.pw / 2 {
            BigInt::from(a) - &self.p
        } else {
            BigInt::from(a)
        }
    }

    pub fn is_unit(&self, n: &BigInt) -> bool {
        !n.mod_floor(&self.p).is_zero()
    }

    /// Largest power of p dividing a nonzero integer, removed.
    pub fn strip(&self, n: &BigInt) -> (i64, BigInt) {
        let mut n = n.clone();
        let mut k = 0;
        if n.is_zero() {
            return (0, n);
        }
        loop {
            let (q, r) = n.div_rem(&self.p);
            if !r.is_zero() {
                return (k, n);
            }
            n = q;
            k += 1;
        }
    }

    pub fn abs_is_one(n: &BigInt) -> bool {
        n.abs().is_one()
    }
}

/// Free-function form of [`LocalContext::sqrt`].
pub fn fp_sqrt(a: u64, ctx: &LocalContext) -> Option<u64> {
    ctx.sqrt(a)
}
