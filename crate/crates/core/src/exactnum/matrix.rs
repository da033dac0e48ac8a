use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMat {
    n: usize,
    #[serde(with = "rat_vec")]
    data: Vec<BigRational>,
}

pub(crate) mod rat_vec {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|q| q.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| super::parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Parse "a", "-a" or "a/b" into an exact rational.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl QMat {
    pub fn identity(n: usize) -> Self {
        let mut m = QMat { n, data: vec![BigRational::zero(); n * n] };
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        QMat { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect(),
        )
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn diag(entries: Vec<BigRational>) -> Self {
        let n = entries.len();
        let mut m = QMat { n, data: vec![BigRational::zero(); n * n] };
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Permutation matrix with row i equal to e_{perm[i]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = QMat { n, data: vec![BigRational::zero(); n * n] };
        for (i, &j) in perm.iter().enumerate() {
            m.data[i * n + j] = BigRational::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        QMat { n, data: out }
    }

    pub fn scale(&self, c: &BigRational) -> QMat {
        QMat { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> QMat {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.get(j, i).clone();
            }
        }
        out
    }

    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return BigRational::zero();
            };
            if piv != c {
                for j in 0..n {
                    a.swap(piv * n + j, c * n + j);
                }
                det = -det;
            }
            let pv = a[c * n + c].clone();
            det *= &pv;
            for r in c + 1..n {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let f = &a[r * n + c] / &pv;
                for j in c..n {
                    let t = &f * &a[c * n + j];
                    a[r * n + j] -= t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<QMat> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = QMat::identity(n).data;
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r * n + c].is_zero()).ok_or(Error::NotInvertible)?;
            for j in 0..n {
                a.swap(piv * n + j, c * n + j);
                inv.swap(piv * n + j, c * n + j);
            }
            let pv = a[c * n + c].clone();
            for j in 0..n {
                a[c * n + j] /= &pv;
                inv[c * n + j] /= &pv;
            }
            for r in 0..n {
                if r == c || a[r * n + c].is_zero() {
                    continue;
                }
                let f = a[r * n + c].clone();
                for j in 0..n {
                    let t = &f * &a[c * n + j];
                    a[r * n + j] -= t;
                    let t = &f * &inv[c * n + j];
                    inv[r * n + j] -= t;
                }
            }
        }
        Ok(QMat { n, data: inv })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }
}
