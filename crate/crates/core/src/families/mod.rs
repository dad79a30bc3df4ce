//! The catalogue of integer-parameter shapes, their niceness conditions,
//! exhaustive searches and shift-by-`n` emitters.

mod check;
mod equations;
mod params;
mod search;
mod special;

pub mod audit;

pub use check::{check, Condition, ConditionReport, ConditionRole, DiscriminantFact, Verdict, VerdictBasis};
pub use equations::{critical_equation, inflexion_equation, closed_form_discriminant, ClosedFormD};
pub use params::{FamilyId, FamilyParams};
pub use search::{r12_cplx_sixth_power_table, search, search_with, Requirement, SearchOptions};
pub use special::{
    emit_parametric, r22_general, r22_general_critical_discriminant, r22_general_inflexion_cubic,
    r22_general_inflexion_discriminant, r23_inflexion_poly, r32_general,
    r32_general_inflexion_discriminant, r32_real_critical_guarantee,
    three_inflexion_family, R32Guarantee,
};

use crate::error::Result;
use crate::{QPoly, QRatFunc};

/// The monic, integer-coefficient function of the requested shape.
pub fn build(params: &FamilyParams) -> Result<QRatFunc> {
    params.validate()?;
    let (num, den) = params.shape_polys();
    QRatFunc::strict(num, den)
}

fn lin(root: i64) -> QPoly {
    QPoly::from_i64s(&[-root, 1])
}

fn quad(c: i64, d: i64) -> QPoly {
    QPoly::from_i64s(&[d, c, 1])
}

impl FamilyParams {
    pub(crate) fn shape_polys(&self) -> (QPoly, QPoly) {
        use FamilyId::*;
        let v = &self.values;
        let x = QPoly::x();
        match self.family {
            R21Int => (&lin(v[0]) * &lin(v[1]), x),
            R21Cplx => (quad(v[0], v[1]), x),
            R12Int => (x, &lin(v[0]) * &lin(v[1])),
            R12Cplx => (x, quad(v[0], v[1])),
            R22Int => (&lin(v[0]) * &lin(v[1]), &x * &lin(v[2])),
            R22NumInt => (&x * &lin(v[0]), quad(v[1], v[2])),
            R22DenInt => (quad(v[1], v[2]), &x * &lin(v[0])),
            R22Cplx => (quad(v[0], v[1]), quad(v[2], v[3])),
            R31Int => (&(&lin(v[0]) * &lin(v[1])) * &lin(v[2]), x),
            R31Cplx => (&lin(v[0]) * &quad(v[1], v[2]), x),
            R32Int => (&(&lin(v[0]) * &lin(v[1])) * &lin(v[2]), &x * &lin(v[3])),
            R23Rusin => (QPoly::from_i64s(&[-1, 0, 1]), QPoly::from_i64s(&[v[1], v[0], 0, 1])),
        }
    }
}
