//! Exact rational-function analysis: "nice" rational functions whose roots,
//! poles, critical points and inflexion points are all rational.

pub mod analysis;
pub mod ec;
pub mod error;
pub mod families;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
mod serde_util;
pub mod shifted;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use analysis::{analyze, AnalysisReport, NicenessGrade};
pub use error::{Error, Result};
pub use poly::Poly;
pub use ratfunc::{RatFunc, Strictness, Warning};
pub use scalar::Scalar;
pub use shifted::ShiftedFamily;

pub type Rat = BigRational;
pub type QPoly = Poly<Rat>;
pub type QRatFunc = RatFunc<Rat>;
