//! Exact integer/rational arithmetic, p-adic valuations and residue-field utilities.

pub mod completion;
pub mod factor;
pub mod fpmat;
pub mod local;
pub mod matrix;
pub mod poly;
pub mod valuation;

pub use completion::{completion_last_row, smith_like_completion, unimodular_with_first_row};
pub use factor::{is_probable_prime, Factorizer, TrialDivision};
pub use fpmat::FpMatrix;
pub use local::{fp_sqrt, LocalContext};
pub use matrix::{parse_rat, QMat};
pub use poly::{det3, MPoly};
pub use valuation::{val_int, val_min, val_rat, Valuation};

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Valuation of an integer or rational at the context prime.
pub fn valuation(q: &BigRational, ctx: &LocalContext) -> Valuation {
    ctx.val_rat(q)
}
