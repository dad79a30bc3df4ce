//! Exact root classification: rational roots, perfect-power witnesses,
//! Cardano discriminants, and Sturm-based real-root counting and isolation.

pub mod cardano;
pub mod power;
pub mod rootset;
pub mod sturm;

pub use cardano::{cardano, CardanoData, CubicNature};
pub use power::{is_perfect_cube, is_perfect_square, rational_cbrt, rational_sqrt, PowerWitness};
pub use rootset::{
    decimal_string, isolate_real_roots, rational_roots, IrrationalRoot, RationalRoot, RootSet,
    DEFAULT_PRECISION,
};
pub use sturm::{count_real_roots, isolate, root_bound, SturmChain};

pub(crate) mod sieve;
