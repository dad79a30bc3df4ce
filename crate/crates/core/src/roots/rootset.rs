//! Classification of every root of a polynomial: exact rationals, isolated
//! irrational reals, and a count of complex-conjugate pairs.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::sturm::{isolate, refine, IntPoly, Refined, SturmChain};
use crate::error::{Error, Result};
use crate::serde_util::rat_str;
use crate::{QPoly, Rat};

pub const DEFAULT_PRECISION: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRoot {
    #[serde(with = "rat_str")]
    pub value: Rat,
    pub multiplicity: u32,
}

/// An irrational real root inside `(lo, hi)`; the interval holds no other
/// root and no rational root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrationalRoot {
    #[serde(with = "rat_str")]
    pub lo: Rat,
    #[serde(with = "rat_str")]
    pub hi: Rat,
    pub approx: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSet {
    pub degree: usize,
    pub rational: Vec<RationalRoot>,
    pub irrational: Vec<IrrationalRoot>,
    /// Irrational real roots counted with multiplicity.
    pub irrational_real_count: usize,
    pub complex_pair_count: usize,
}

impl RootSet {
    pub fn empty() -> Self {
        RootSet {
            degree: 0,
            rational: Vec::new(),
            irrational: Vec::new(),
            irrational_real_count: 0,
            complex_pair_count: 0,
        }
    }

    pub fn rational_values(&self) -> Vec<Rat> {
        self.rational.iter().map(|r| r.value.clone()).collect()
    }

    /// Rational roots counted with multiplicity.
    pub fn rational_count(&self) -> usize {
        self.rational.iter().map(|r| r.multiplicity as usize).sum()
    }

    pub fn distinct_real_count(&self) -> usize {
        self.rational.len() + self.irrational.len()
    }

    pub fn real_count(&self) -> usize {
        self.rational_count() + self.irrational_real_count
    }

    pub fn all_rational(&self) -> bool {
        self.degree > 0 && self.rational_count() == self.degree
    }

    pub fn has_integer_root(&self) -> bool {
        self.rational.iter().any(|r| r.value.is_integer())
    }
}

fn primitive_lead(f: &IntPoly) -> BigInt {
    f.lead().abs()
}

/// Splits the isolated roots of a square-free factor into exact rationals and
/// irrational intervals. Irrational intervals are refined below `width` when
/// one is supplied.
fn classify_factor(
    factor: &QPoly,
    width: Option<&Rat>,
) -> Result<(Vec<Rat>, Vec<(Rat, Rat)>)> {
    let f = IntPoly::from_poly(factor);
    let sturm = SturmChain::new(factor)?;
    let lead = primitive_lead(&f);
    // rational roots are k/lead for integers k, so a window narrower than
    // 1/lead holds at most one candidate
    let rational_width = Rat::new(BigInt::one(), lead.clone());
    let mut rationals = Vec::new();
    let mut irrationals = Vec::new();
    for (lo, hi) in isolate(factor)? {
        match refine(&f, &sturm, lo, hi, &rational_width) {
            Refined::Exact(r) => rationals.push(r),
            Refined::Interval(lo, hi) => {
                let scaled_hi = &hi * Rat::from_integer(lead.clone());
                let k = scaled_hi.floor();
                let cand = &k / Rat::from_integer(lead.clone());
                if cand > lo && f.sign_at(&cand) == Ordering::Equal {
                    rationals.push(cand);
                    continue;
                }
                let (lo, hi) = match width {
                    Some(w) => match refine(&f, &sturm, lo, hi, w) {
                        Refined::Interval(lo, hi) => (lo, hi),
                        Refined::Exact(r) => {
                            return Err(Error::Invariant(format!(
                                "root {r} of {factor} escaped the rational test"
                            )))
                        }
                    },
                    None => (lo, hi),
                };
                irrationals.push((lo, hi));
            }
        }
    }
    Ok((rationals, irrationals))
}

/// All rational roots with multiplicity, ascending.
pub fn rational_roots(p: &QPoly) -> Result<Vec<(Rat, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_factors()? {
        if factor.degree() == Some(1) {
            out.push((-factor.coeff(0) / factor.coeff(1), mult));
            continue;
        }
        for r in classify_factor(&factor, None)?.0 {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Full classification, with irrational roots isolated to `precision`
/// decimal digits.
pub fn isolate_real_roots(p: &QPoly, precision: u32) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    // three guard digits so the rounded midpoint is the rounded root
    let width = Rat::new(BigInt::one(), BigInt::from(10).pow(precision + 3));
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for (factor, mult) in p.squarefree_factors()? {
        if factor.degree() == Some(1) {
            rational.push(RationalRoot {
                value: -factor.coeff(0) / factor.coeff(1),
                multiplicity: mult,
            });
            continue;
        }
        let (rats, irrs) = classify_factor(&factor, Some(&width))?;
        rational.extend(rats.into_iter().map(|value| RationalRoot { value, multiplicity: mult }));
        irrational.extend(irrs.into_iter().map(|(lo, hi)| {
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            IrrationalRoot { approx: decimal_string(&mid, precision), lo, hi, multiplicity: mult }
        }));
    }
    rational.sort_by(|a, b| a.value.cmp(&b.value));
    irrational.sort_by(|a, b| a.lo.cmp(&b.lo));
    let rational_count: usize = rational.iter().map(|r| r.multiplicity as usize).sum();
    let irrational_real_count: usize = irrational.iter().map(|r| r.multiplicity as usize).sum();
    let complex = degree - rational_count - irrational_real_count;
    if complex % 2 != 0 {
        return Err(Error::Invariant(format!("odd number of non-real roots for {p}")));
    }
    Ok(RootSet {
        degree,
        rational,
        irrational,
        irrational_real_count,
        complex_pair_count: complex / 2,
    })
}

/// Fixed-point rendering rounded half away from zero: `-81.461197`.
pub fn decimal_string(x: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = x * Rat::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let (int, frac) = rounded.abs().div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits as usize));
    }
    s
}
