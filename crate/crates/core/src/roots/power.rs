//! Perfect-square and perfect-cube certificates.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::serde_util::{bigint_str, opt_bigint_str};
use crate::Rat;

/// `root^exponent == value` whenever `root` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerWitness {
    #[serde(with = "bigint_str")]
    pub value: BigInt,
    #[serde(with = "opt_bigint_str")]
    pub root: Option<BigInt>,
    pub exponent: u32,
}

impl PowerWitness {
    pub fn holds(&self) -> bool {
        self.root.is_some()
    }
}

pub fn is_perfect_square(v: &BigInt) -> PowerWitness {
    let root = if v.is_negative() {
        None
    } else {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    PowerWitness { value: v.clone(), root, exponent: 2 }
}

pub fn is_perfect_cube(v: &BigInt) -> PowerWitness {
    let r = v.cbrt();
    let root = (&r * &r * &r == *v).then_some(r);
    PowerWitness { value: v.clone(), root, exponent: 3 }
}

/// Nonnegative rational square root, if `v` is the square of a rational.
pub fn rational_sqrt(v: &Rat) -> Option<Rat> {
    if v.is_negative() {
        return None;
    }
    if v.is_zero() {
        return Some(Rat::zero());
    }
    let n = is_perfect_square(v.numer()).root?;
    let d = is_perfect_square(v.denom()).root?;
    Some(Rat::new(n, d))
}

pub fn rational_cbrt(v: &Rat) -> Option<Rat> {
    let n = is_perfect_cube(v.numer()).root?;
    let d = is_perfect_cube(v.denom()).root?;
    Some(Rat::new(n, d))
}

/// Floor square root for nonnegative `i128`.
pub fn isqrt_i128(v: i128) -> i128 {
    debug_assert!(v >= 0);
    if v < 2 {
        return v;
    }
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= v) {
        r += 1;
    }
    r
}

pub fn is_square_i128(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = isqrt_i128(v);
    (r * r == v).then_some(r)
}

pub fn is_cube_i128(v: i128) -> Option<i128> {
    let neg = v < 0;
    let a = v.unsigned_abs();
    let mut r = (a as f64).cbrt().round() as u128;
    while r.checked_pow(3).is_none_or(|c| c > a) {
        r -= 1;
    }
    while (r + 1).checked_pow(3).is_some_and(|c| c <= a) {
        r += 1;
    }
    (r.pow(3) == a).then(|| if neg { -(r as i128) } else { r as i128 })
}
