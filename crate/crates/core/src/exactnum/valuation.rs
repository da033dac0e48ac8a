use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A p-adic valuation, with an explicit variant for the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// True when the valuation is at least `k` (zero counts as divisible by everything).
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

pub fn val_int(n: &BigInt, p: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

pub fn val_rat(q: &BigRational, p: &BigInt) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let a = val_int(q.numer(), p).finite().unwrap();
    let b = val_int(q.denom(), p).finite().unwrap();
    Valuation::Finite(a - b)
}

/// Minimum valuation over a list of integers (`Infinite` for the zero vector).
pub fn val_min<'a, I: IntoIterator<Item = &'a BigInt>>(it: I, p: &BigInt) -> Valuation {
    it.into_iter().map(|c| val_int(c, p)).min().unwrap_or(Valuation::Infinite)
}
