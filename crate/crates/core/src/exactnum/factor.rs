use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer factorisation used by global minimisation.
pub trait Factorizer {
    /// Factor |n| (n nonzero) into ascending (prime, exponent) pairs.
    fn factor(&self, n: &BigInt) -> Result<Vec<(BigInt, u32)>>;
}

/// Trial division followed by Pollard rho, with Miller-Rabin primality checks.
#[derive(Debug, Clone)]
pub struct TrialDivision {
    pub trial_bound: u64,
    pub rho_iterations: u64,
}

impl Default for TrialDivision {
    fn default() -> Self {
        TrialDivision { trial_bound: 100_000, rho_iterations: 2_000_000 }
    }
}

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_probable_prime(n: &BigInt) -> bool {
    let n = n.abs();
    if n < BigInt::from(2) {
        return false;
    }
    for w in WITNESSES {
        let w = BigInt::from(w);
        if n == w {
            return true;
        }
        if (&n % &w).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = &n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'outer: for w in WITNESSES {
        let mut x = BigInt::from(w).modpow(&d, &n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn rho(n: &BigInt, c: u64, iters: u64) -> Option<BigInt> {
    let c = BigInt::from(c);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut x = BigInt::from(2);
    let mut y = x.clone();
    let mut d = BigInt::one();
    let mut k = 0;
    while d.is_one() {
        x = f(&x);
        y = f(&f(&y));
        d = (&x - &y).abs().gcd(n);
        k += 1;
        if k > iters {
            return None;
        }
    }
    if &d == n {
        None
    } else {
        Some(d)
    }
}

impl TrialDivision {
    fn split(&self, n: BigInt, out: &mut Vec<BigInt>) -> Result<()> {
        if n.is_one() {
            return Ok(());
        }
        if is_probable_prime(&n) {
            out.push(n);
            return Ok(());
        }
        for c in 1..20u64 {
            if let Some(d) = rho(&n, c, self.rho_iterations) {
                let q = &n / &d;
                self.split(d, out)?;
                return self.split(q, out);
            }
        }
        Err(Error::Factorisation(n))
    }
}

impl Factorizer for TrialDivision {
    fn factor(&self, n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
        if n.is_zero() {
            return Err(Error::Factorisation(n.clone()));
        }
        let mut n = n.abs();
        let mut primes = Vec::new();
        let mut d = 2u64;
        while d <= self.trial_bound {
            let bd = BigInt::from(d);
            if &bd * &bd > n {
                break;
            }
            while (&n % &bd).is_zero() {
                primes.push(bd.clone());
                n /= &bd;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        self.split(n, &mut primes)?;
        primes.sort();
        let mut out: Vec<(BigInt, u32)> = Vec::new();
        for p in primes {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        Ok(out)
    }
}

/// Convenience: the exponent of each prime as u64 where it fits.
pub fn small_prime(p: &BigInt) -> Option<u64> {
    p.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_numbers() {
        let f = TrialDivision::default();
        let r = f.factor(&BigInt::from(-2i64 * 2 * 2 * 3 * 3 * 1_000_003)).unwrap();
        assert_eq!(
            r,
            vec![(BigInt::from(2), 3), (BigInt::from(3), 2), (BigInt::from(1_000_003), 1)]
        );
        assert_eq!(f.factor(&BigInt::from(1)).unwrap(), vec![]);
    }

    #[test]
    fn rho_splits_semiprime() {
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let r = TrialDivision::default().factor(&n).unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigInt::from(65537)));
        assert!(!is_probable_prime(&BigInt::from(65535)));
        assert!(!is_probable_prime(&BigInt::from(1)));
    }
}
