//! The coefficient field abstraction.
//!
//! Everything in the polynomial layer is generic over [`Scalar`]. The
//! analysis layers (root classification, family conditions, the elliptic
//! curve machinery) need exact equality and only ever run over [`crate::Rat`].

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, Signed};

/// A field usable as a polynomial coefficient.
pub trait Scalar:
    Clone + Debug + Display + FromStr + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// `true` when `==` is exact, so zero tests and gcds can be trusted.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
}

impl Scalar for f32 {
    const EXACT: bool = false;
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for Rational64 {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from_i64(v).expect("i64 fits in BigInt"))
    }
}
