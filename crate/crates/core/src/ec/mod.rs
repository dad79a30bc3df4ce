//! Normal form `(x^3+bx+c)/(x^2-1)` for R32 functions with four rational
//! critical points, and the elliptic-curve search for new ones.

mod curve;
mod pipeline;
mod quartic;
mod rusin;

pub use curve::{exponent_certificate, CurvePoint, CurveSpec, ExponentCertificate};
pub use pipeline::{
    combine_and_filter, ec_search, hunt_generators, Candidate, CombineReport, Coverage, EcFilter, EcSearchOptions,
    EcSearchReport, Generator,
};
pub use quartic::{pq_parametrize, quartic_residue, w_quartic_solve, CriticalQuadruple};
pub use rusin::{
    affine_equivalent, affine_match, critical_quartic, normalize, present, recover_bc, AffineMap, Presented,
    RusinForm, DEFAULT_SCALE_BOUND,
};
