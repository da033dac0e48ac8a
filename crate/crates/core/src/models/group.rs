use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ModelKind;
use crate::error::{Error, Result};
use crate::exactnum::QMat;

/// `[lambda, A_1, ..., A_n]`: a scalar (fixed to 1 for cubes and hypercubes) and one
/// invertible matrix per tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElement {
    pub kind: ModelKind,
    #[serde(with = "rat_string")]
    pub scalar: BigRational,
    pub mats: Vec<QMat>,
}

mod rat_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::exactnum::parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

impl GroupElement {
    pub fn identity(kind: ModelKind) -> Self {
        let (sizes, _) = kind.group_shape();
        GroupElement { kind, scalar: BigRational::one(), mats: sizes.iter().map(|&n| QMat::identity(n)).collect() }
    }

    pub fn new(kind: ModelKind, scalar: BigRational, mats: Vec<QMat>) -> Result<Self> {
        let g = GroupElement { kind, scalar, mats };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let (sizes, has_scalar) = self.kind.group_shape();
        if self.mats.len() != sizes.len() || self.mats.iter().zip(sizes).any(|(m, &n)| m.size() != n) {
            return Err(Error::KindMismatch(format!("matrix sizes do not fit a {}", self.kind)));
        }
        if !has_scalar && !self.scalar.is_one() {
            return Err(Error::KindMismatch(format!("{} group elements carry no scalar", self.kind)));
        }
        if self.scalar.is_zero() || self.mats.iter().any(|m| m.det().is_zero()) {
            return Err(Error::NotInvertible);
        }
        Ok(())
    }

    /// `self ∘ other`: acting by the result equals acting by `other`, then by `self`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch("composing elements of different groups".into()));
        }
        Ok(GroupElement {
            kind: self.kind,
            scalar: &self.scalar * &other.scalar,
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    pub fn inverse(&self) -> Result<GroupElement> {
        Ok(GroupElement {
            kind: self.kind,
            scalar: self.scalar.recip(),
            mats: self.mats.iter().map(|m| m.inverse()).collect::<Result<_>>()?,
        })
    }

    /// The character chi(g): scalar times the product of the determinants.
    /// An invariant of weight w scales by chi(g)^w.
    pub fn chi(&self) -> BigRational {
        self.mats.iter().fold(self.scalar.clone(), |acc, m| acc * m.det())
    }

    /// Element acting by `m` on factor `i` only.
    pub fn single(kind: ModelKind, i: usize, m: QMat) -> GroupElement {
        let mut g = Self::identity(kind);
        g.mats[i] = m;
        g
    }

    pub fn with_scalar(mut self, s: BigRational) -> GroupElement {
        self.scalar = s;
        self
    }

    /// True if every matrix is integral with unit determinant (an element of G(Z)).
    pub fn is_unimodular(&self) -> bool {
        self.scalar.is_integer()
            && self.scalar.numer().magnitude().is_one()
            && self.mats.iter().all(|m| m.is_integral() && m.det().numer().magnitude().is_one())
    }
}
