//! Depressed-cubic data and the sign of `D = (R/2)^2 + (Q/3)^3`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_util::rat_str;
use crate::{QPoly, Rat};

/// For a cubic rewritten as `t^3 + Q t + R` under `x = t + shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardanoData {
    #[serde(with = "rat_str")]
    pub q: Rat,
    #[serde(with = "rat_str")]
    pub r: Rat,
    #[serde(with = "rat_str")]
    pub d: Rat,
    #[serde(with = "rat_str")]
    pub shift: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubicNature {
    OneReal,
    ThreeDistinctReal,
    RepeatedReal,
}

impl CardanoData {
    pub fn nature(&self) -> CubicNature {
        if self.d.is_positive() {
            CubicNature::OneReal
        } else if self.d.is_negative() {
            CubicNature::ThreeDistinctReal
        } else {
            CubicNature::RepeatedReal
        }
    }

    /// Number of distinct real roots implied by the sign of `D`. A zero `D`
    /// with `Q = 0` is a triple root.
    pub fn predicted_distinct_real(&self) -> usize {
        match self.nature() {
            CubicNature::OneReal => 1,
            CubicNature::ThreeDistinctReal => 3,
            CubicNature::RepeatedReal if self.q.is_zero() => 1,
            CubicNature::RepeatedReal => 2,
        }
    }

    /// `u^3 = -R/2 +- sqrt(D)` when `D` is the square of a rational, taking
    /// the nonzero branch when one of them vanishes.
    pub fn u_cubed(&self) -> Option<Rat> {
        let s = super::power::rational_sqrt(&self.d)?;
        let half = -&self.r / Rat::from_integer(2.into());
        let plus = &half + &s;
        Some(if plus.is_zero() { half - s } else { plus })
    }
}

pub fn cardano(p: &QPoly) -> Result<CardanoData> {
    if p.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3, got: p.degree_i64() });
    }
    let m = p.monic();
    let (b, c, d) = (m.coeff(2), m.coeff(1), m.coeff(0));
    let three = Rat::from_integer(3.into());
    let q = &c - &b * &b / &three;
    let r = Rat::from_integer(2.into()) * &b * &b * &b / Rat::from_integer(27.into()) - &b * &c / &three + &d;
    let half_r = &r / Rat::from_integer(2.into());
    let third_q = &q / &three;
    let disc = &half_r * &half_r + &third_q * &third_q * &third_q;
    Ok(CardanoData { q, r, d: disc, shift: -b / three })
}
