//! Closed-form critical and inflexion equations of each family, written out
//! by hand from the quotient rule. They are cross-checked against the
//! symbolic derivative in tests and drive the cheap search sieve.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{FamilyId, FamilyParams};
use crate::serde_util::rat_str;
use crate::{QPoly, Rat};

/// Up to seven integer coefficients, low to high, kept on the stack so the
/// search loops do not allocate.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Coeffs {
    c: [i128; 7],
    len: usize,
}

impl Coeffs {
    fn from_slice(s: &[i128]) -> Self {
        let mut c = [0i128; 7];
        c[..s.len()].copy_from_slice(s);
        Coeffs { c, len: s.len() }
    }

    pub(crate) fn as_slice(&self) -> &[i128] {
        &self.c[..self.len]
    }
}

fn widen(v: &[i64]) -> [i128; 4] {
    let mut w = [0i128; 4];
    for (o, x) in w.iter_mut().zip(v) {
        *o = *x as i128;
    }
    w
}

pub(crate) fn critical_coeffs(p: &FamilyParams) -> Vec<i128> {
    critical_coeffs_of(p.family, &p.values).as_slice().to_vec()
}

pub(crate) fn inflexion_coeffs(p: &FamilyParams) -> Vec<i128> {
    inflexion_coeffs_of(p.family, &p.values).as_slice().to_vec()
}

/// Integer coefficients, low to high, with a positive leading coefficient.
pub(crate) fn critical_coeffs_of(family: FamilyId, values: &[i64]) -> Coeffs {
    use FamilyId::*;
    let v = widen(values);
    match family {
        R21Int | R12Int => Coeffs::from_slice(&[-v[0] * v[1], 0, 1]),
        R21Cplx | R12Cplx => Coeffs::from_slice(&[-v[1], 0, 1]),
        R22Int => {
            let (a, b, c) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[a * b * c, -2 * a * b, a + b - c])
        }
        R22NumInt | R22DenInt => {
            let (a, c, d) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[-a * d, 2 * d, a + c])
        }
        R22Cplx => {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            Coeffs::from_slice(&[b * c - a * d, 2 * (b - d), a - c])
        }
        R31Int => {
            let (a, b, c) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[a * b * c, 0, -(a + b + c), 2])
        }
        R31Cplx => {
            let (a, c, d) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[a * d, 0, c - a, 2])
        }
        R32Int => {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            let k = a * b + a * c - a * d + b * c - b * d - c * d;
            Coeffs::from_slice(&[-a * b * c * d, 2 * a * b * c, -k, -2 * d, 1])
        }
        R23Rusin => {
            let (b, c) = (v[0], v[1]);
            Coeffs::from_slice(&[-b, -2 * c, -(b + 3), 0, 1])
        }
    }
}

pub(crate) fn inflexion_coeffs_of(family: FamilyId, values: &[i64]) -> Coeffs {
    use FamilyId::*;
    let v = widen(values);
    match family {
        R21Int => Coeffs::from_slice(&[2 * v[0] * v[1]]),
        R21Cplx => Coeffs::from_slice(&[2 * v[1]]),
        R12Int => {
            let (a, b) = (v[0], v[1]);
            Coeffs::from_slice(&[a * b * (a + b), -3 * a * b, 0, 1])
        }
        R12Cplx => {
            let (c, d) = (v[0], v[1]);
            Coeffs::from_slice(&[-c * d, -3 * d, 0, 1])
        }
        R22Int => {
            let (a, b, c) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[-a * b * c * c, 3 * a * b * c, -3 * a * b, a + b - c])
        }
        R22NumInt => {
            let (a, c, d) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[-d * (a * c + d), -3 * a * d, 3 * d, a + c])
        }
        R22DenInt => {
            let (a, c, d) = (v[0], v[1], v[2]);
            Coeffs::from_slice(&[a * a * d, -3 * a * d, 3 * d, a + c])
        }
        R22Cplx => {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            Coeffs::from_slice(&[b * c * c - b * d - a * c * d + d * d, 3 * (b * c - a * d), 3 * (b - d), a - c])
        }
        R31Int => Coeffs::from_slice(&[-v[0] * v[1] * v[2], 0, 0, 1]),
        R31Cplx => Coeffs::from_slice(&[-v[0] * v[2], 0, 0, 1]),
        R32Int => {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            let k = a * b + a * c - a * d + b * c - b * d - c * d + d * d;
            Coeffs::from_slice(&[-a * b * c * d * d, 3 * a * b * c * d, -3 * a * b * c, k])
        }
        R23Rusin => {
            let (b, c) = (v[0], v[1]);
            Coeffs::from_slice(&[c * c - b * b, 3 * c, -3 * b, -7 * c, -3 * (b + 2), 0, 1])
        }
    }
}

pub(crate) fn to_qpoly(c: &[i128]) -> QPoly {
    QPoly::new(c.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
}

/// The family's critical equation in closed form.
pub fn critical_equation(p: &FamilyParams) -> QPoly {
    to_qpoly(&critical_coeffs(p))
}

/// The family's inflexion equation in closed form (a nonzero constant when
/// there are no inflexion points).
pub fn inflexion_equation(p: &FamilyParams) -> QPoly {
    to_qpoly(&inflexion_coeffs(p))
}

/// A closed-form Cardano discriminant for one of the family's cubics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormD {
    /// `critical` or `inflexion`.
    pub equation: String,
    pub formula: String,
    #[serde(with = "rat_str")]
    pub value: Rat,
}

fn q(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn closed_form_discriminant(p: &FamilyParams) -> Option<ClosedFormD> {
    use FamilyId::*;
    let v: Vec<Rat> = p.values.iter().map(|&x| q(x)).collect();
    let sq = |x: &Rat| x * x;
    let four = q(4);
    let (equation, formula, value) = match p.family {
        R12Int => {
            let (a, b) = (&v[0], &v[1]);
            ("inflexion", "a^2b^2(a-b)^2/4", sq(a) * sq(b) * sq(&(a - b)) / &four)
        }
        R12Cplx => {
            let (c, d) = (&v[0], &v[1]);
            ("inflexion", "d^2(c^2-4d)/4", sq(d) * (sq(c) - &four * d) / &four)
        }
        R22Int => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            let num = sq(a) * sq(b) * sq(c) * sq(&(c - a)) * sq(&(c - b));
            let den = &four * sq(&sq(&(a + b - c)));
            ("inflexion", "a^2b^2c^2(c-a)^2(c-b)^2/(4(a+b-c)^4)", num / den)
        }
        R22NumInt => {
            let (a, c, d) = (&v[0], &v[1], &v[2]);
            let k = sq(a) + a * c + d;
            let num = sq(d) * sq(&k) * (sq(c) - &four * d);
            ("inflexion", "d^2(a^2+ac+d)^2(c^2-4d)/(4(a+c)^4)", num / (&four * sq(&sq(&(a + c)))))
        }
        R22DenInt => {
            let (a, c, d) = (&v[0], &v[1], &v[2]);
            let k = sq(a) + a * c + d;
            let num = sq(a) * sq(d) * sq(&k);
            ("inflexion", "a^2d^2(a^2+ac+d)^2/(4(a+c)^4)", num / (&four * sq(&sq(&(a + c)))))
        }
        R22Cplx => {
            let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
            let k = (a - c) * (a * d - b * c) + sq(&(b - d));
            let num = (sq(c) - &four * d) * sq(&k);
            ("inflexion", "(c^2-4d)((a-c)(ad-bc)+(b-d)^2)^2/(4(a-c)^4)", num / (&four * sq(&sq(&(a - c)))))
        }
        R31Int => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            let abc = a * b * c;
            let s = a + b + c;
            let num = &abc * (q(27) * &abc - &s * &s * &s);
            ("critical", "abc(27abc-(a+b+c)^3)/(2^4 3^3)", num / q(16 * 27))
        }
        R32Int => {
            let (a, b, c, d) = (p.values[0], p.values[1], p.values[2], p.values[3]);
            let value = super::special::r32_int_inflexion_discriminant(a, b, c, d)?;
            ("inflexion", "(d-e)^2 N(d)^2 N(e)^2/(4(A(d+e)+B+d^2+de+e^2)^4) with e=0", value)
        }
        _ => return None,
    };
    Some(ClosedFormD { equation: equation.to_string(), formula: formula.to_string(), value })
}
