//! Model kinds, their coefficient layouts, group actions and derived forms.

mod action;
mod derived;
mod forms;
mod group;
pub mod json;

pub use action::act;
pub use derived::{cubics_of_cube, form_of_pair, forms_of_hypercube, pair_index, quartics_of_22, HypercubeForms, PAIRS};
pub use forms::{BinaryQuartic, Cube, Hypercube, TernaryCubic, TwoTwoForm, CUBIC_MONOMIALS};
pub use group::GroupElement;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::poly::Coeff;
use crate::exactnum::{LocalContext, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Quartic,
    Form22,
    Cube,
    Hypercube,
    Cubic,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Quartic => "quartic",
            ModelKind::Form22 => "form22",
            ModelKind::Cube => "cube",
            ModelKind::Hypercube => "hypercube",
            ModelKind::Cubic => "cubic",
        }
    }

    pub fn num_coeffs(self) -> usize {
        match self {
            ModelKind::Quartic => 5,
            ModelKind::Form22 => 9,
            ModelKind::Cube => 27,
            ModelKind::Hypercube => 16,
            ModelKind::Cubic => 10,
        }
    }

    /// Sizes of the matrices in a group element, and whether it carries a scalar.
    pub fn group_shape(self) -> (&'static [usize], bool) {
        match self {
            ModelKind::Quartic => (&[2], true),
            ModelKind::Form22 => (&[2, 2], true),
            ModelKind::Cube => (&[3, 3, 3], false),
            ModelKind::Hypercube => (&[2, 2, 2, 2], false),
            ModelKind::Cubic => (&[3], true),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "quartic" => ModelKind::Quartic,
            "form22" => ModelKind::Form22,
            "cube" => ModelKind::Cube,
            "hypercube" => ModelKind::Hypercube,
            "cubic" => ModelKind::Cubic,
            _ => return Err(Error::Parse(format!("unknown model kind {s:?}"))),
        })
    }
}

/// A genus one model (or one of its derived forms) of any kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Model<T = BigInt> {
    Quartic(BinaryQuartic<T>),
    Form22(TwoTwoForm<T>),
    Cube(Cube<T>),
    Hypercube(Hypercube<T>),
    Cubic(TernaryCubic<T>),
}

pub type RatModel = Model<BigRational>;

impl<T: Coeff> Model<T> {
    pub fn kind(&self) -> ModelKind {
        match self {
            Model::Quartic(_) => ModelKind::Quartic,
            Model::Form22(_) => ModelKind::Form22,
            Model::Cube(_) => ModelKind::Cube,
            Model::Hypercube(_) => ModelKind::Hypercube,
            Model::Cubic(_) => ModelKind::Cubic,
        }
    }

    /// Coefficients in the documented index order.
    pub fn coeffs(&self) -> Vec<T> {
        match self {
            Model::Quartic(q) => q.coeffs.to_vec(),
            Model::Form22(f) => f.flat(),
            Model::Cube(c) => c.s.to_vec(),
            Model::Hypercube(h) => h.h.to_vec(),
            Model::Cubic(c) => c.coeffs.to_vec(),
        }
    }

    pub fn from_coeffs(kind: ModelKind, c: &[T]) -> Result<Self> {
        if c.len() != kind.num_coeffs() {
            return Err(Error::Parse(format!(
                "{} expects {} coefficients, got {}",
                kind,
                kind.num_coeffs(),
                c.len()
            )));
        }
        Ok(match kind {
            ModelKind::Quartic => Model::Quartic(BinaryQuartic::new(std::array::from_fn(|i| c[i].clone()))),
            ModelKind::Form22 => Model::Form22(TwoTwoForm::from_flat(c)),
            ModelKind::Cube => Model::Cube(Cube::from_flat(c)),
            ModelKind::Hypercube => Model::Hypercube(Hypercube::from_flat(c)),
            ModelKind::Cubic => Model::Cubic(TernaryCubic::new(std::array::from_fn(|i| c[i].clone()))),
        })
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Model<U> {
        let c: Vec<U> = self.coeffs().iter().map(f).collect();
        Model::from_coeffs(self.kind(), &c).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }
}

impl Model<BigInt> {
    pub fn to_rational(&self) -> RatModel {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Minimum coefficient valuation v(m).
    pub fn content_valuation(&self, ctx: &LocalContext) -> Valuation {
        self.coeffs().iter().map(|c| ctx.val(c)).min().unwrap()
    }

    /// Exact multiple `k * m`.
    pub fn scale(&self, k: &BigInt) -> Model {
        self.map(|c| c * k)
    }

    /// Exact division of every coefficient by `k`; `None` if some division is inexact.
    pub fn divide_exact(&self, k: &BigInt) -> Option<Model> {
        let c = self.coeffs();
        if c.iter().any(|x| !(x % k).is_zero()) {
            return None;
        }
        Some(Model::from_coeffs(self.kind(), &c.iter().map(|x| x / k).collect::<Vec<_>>()).unwrap())
    }
}

impl RatModel {
    /// The integral model when every coefficient is an integer.
    pub fn to_integral(&self) -> Option<Model> {
        let c = self.coeffs();
        if c.iter().all(|x| x.is_integer()) {
            Some(Model::from_coeffs(self.kind(), &c.iter().map(|x| x.to_integer()).collect::<Vec<_>>()).unwrap())
        } else {
            None
        }
    }

    /// True when every coefficient is integral at p.
    pub fn is_integral_at(&self, ctx: &LocalContext) -> bool {
        self.coeffs().iter().all(|x| ctx.val_rat(x).at_least(0))
    }
}

/// Result of clearing denominators: `model = multiplier * input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub model: Model,
    pub multiplier: BigInt,
}

/// Clears denominators by multiplying by their least common multiple, which is the
/// minimal power of each prime making the model integral.
pub fn normalize(m: &RatModel) -> Normalized {
    let l = m.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = m.map(|c| c * BigRational::from_integer(l.clone()));
    Normalized { model: scaled.to_integral().expect("denominators cleared"), multiplier: l.abs() }
}

/// Serde helper writing integers as decimal strings.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map_err(serde::de::Error::custom)
    }
}
