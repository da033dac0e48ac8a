use std::collections::BTreeMap;
use std::ops::Neg;

use num_traits::Num;

pub trait Coeff: Num + Clone + Neg<Output = Self> {}
impl<T: Num + Clone + Neg<Output = T>> Coeff for T {}

/// Sparse multivariate polynomial in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Coeff> MPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, T::one());
        p
    }

    /// Linear form sum_i c_i * x_{vars[i]}.
    pub fn linear(nvars: usize, vars: &[usize], coeffs: &[T]) -> Self {
        let mut p = Self::zero(nvars);
        for (&v, c) in vars.iter().zip(coeffs) {
            let mut e = vec![0; nvars];
            e[v] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c.clone() * k.clone());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.clone() * c2.clone());
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::constant(self.nvars, T::one());
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Substitute polynomial `subs[i]` (all in a common ring) for variable i.
    pub fn substitute(&self, subs: &[MPoly<T>]) -> MPoly<T> {
        let nv = subs[0].nvars;
        let mut r = MPoly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(nv, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&subs[i].pow(k));
                }
            }
            r = r.add(&t);
        }
        r
    }

    pub fn eval(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> MPoly<U> {
        let mut r = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }
}

/// Determinant of a 3x3 matrix of polynomials (cofactor expansion).
pub fn det3<T: Coeff>(m: &[[MPoly<T>; 3]; 3]) -> MPoly<T> {
    let minor = |a: usize, b: usize, c: usize, d: usize| m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][d]));
    m[0][0]
        .mul(&minor(1, 2, 2, 1))
        .sub(&m[0][1].mul(&minor(0, 2, 2, 0)))
        .add(&m[0][2].mul(&minor(0, 1, 1, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn det_of_diagonal_linear_forms() {
        let v = |i| MPoly::<BigInt>::var(3, i);
        let z = MPoly::<BigInt>::zero(3);
        let m = [[v(0), z.clone(), z.clone()], [z.clone(), v(1), z.clone()], [z.clone(), z.clone(), v(2)]];
        let d = det3(&m);
        assert_eq!(d.coeff(&[1, 1, 1]), BigInt::from(1));
        assert_eq!(d.terms().count(), 1);
    }

    #[test]
    fn substitution_composes() {
        let x = MPoly::<BigInt>::var(2, 0);
        let y = MPoly::<BigInt>::var(2, 1);
        let f = x.mul(&x).sub(&y);
        let g = f.substitute(&[x.add(&y), y.clone()]);
        assert_eq!(g.eval(&[BigInt::from(2), BigInt::from(3)]), BigInt::from(22));
    }
}
