//! The curve `V^2 = U(U + 3(Y-Z)^2)(U + (3Y+Z)(Y+3Z))` attached to a fixed
//! pair `(Y, Z)`, with its chord-and-tangent group law.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::power::is_square_i128;
use crate::roots::is_perfect_square;
use crate::serde_util::{bigint_str, rat_str};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub y: i64,
    pub z: i64,
    /// `3(Y-Z)^2`, minus the second 2-torsion abscissa.
    #[serde(with = "bigint_str")]
    pub shift: BigInt,
    /// `(3Y+Z)(Y+3Z)`, minus the third 2-torsion abscissa.
    #[serde(with = "bigint_str")]
    pub kappa: BigInt,
    /// `r(U) = U^3 + a2 U^2 + a4 U`.
    #[serde(with = "bigint_str")]
    pub a2: BigInt,
    #[serde(with = "bigint_str")]
    pub a4: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvePoint {
    Infinity,
    Affine {
        #[serde(with = "rat_str")]
        u: Rat,
        #[serde(with = "rat_str")]
        v: Rat,
    },
}

impl CurvePoint {
    pub fn affine(u: Rat, v: Rat) -> Self {
        CurvePoint::Affine { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        CurvePoint::affine(Rat::from_integer(u.into()), Rat::from_integer(v.into()))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn u(&self) -> Option<&Rat> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { u, .. } => Some(u),
        }
    }

    /// Bit length of the larger of `U`'s numerator and denominator.
    pub fn naive_height(&self) -> u64 {
        match self {
            CurvePoint::Infinity => 0,
            CurvePoint::Affine { u, .. } => u.numer().bits().max(u.denom().bits()),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { u, v } => write!(f, "({u}, {v})"),
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

impl CurveSpec {
    /// The curve for `(Y, Z)`; rejects pairs whose three 2-torsion
    /// abscissae are not distinct.
    pub fn new(y: i64, z: i64) -> Result<Self> {
        let (yb, zb) = (big(y), big(z));
        let delta = &yb - &zb;
        let shift = big(3) * &delta * &delta;
        let kappa = (big(3) * &yb + &zb) * (&yb + big(3) * &zb);
        if delta.is_zero() {
            return Err(Error::Degenerate(format!("Y = Z = {y} gives a singular curve")));
        }
        if kappa.is_zero() || kappa == shift {
            return Err(Error::Degenerate(format!("(Y,Z) = ({y},{z}): two 2-torsion points coincide")));
        }
        let a2 = &shift + &kappa;
        let a4 = &shift * &kappa;
        Ok(CurveSpec { y, z, shift, kappa, a2, a4 })
    }

    pub fn rhs(&self, u: &Rat) -> Rat {
        let a2 = Rat::from_integer(self.a2.clone());
        let a4 = Rat::from_integer(self.a4.clone());
        ((u + a2) * u + a4) * u
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => v * v == self.rhs(u),
        }
    }

    pub fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => CurvePoint::affine(u.clone(), -v.clone()),
        }
    }

    /// Chord-and-tangent addition. Inputs are assumed on the curve; use
    /// [`CurveSpec::try_add`] for checked input.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (u1, v1, u2, v2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { u: u1, v: v1 }, CurvePoint::Affine { u: u2, v: v2 }) => (u1, v1, u2, v2),
        };
        let a2 = Rat::from_integer(self.a2.clone());
        let slope = if u1 == u2 {
            if (v1 + v2).is_zero() {
                return CurvePoint::Infinity;
            }
            let a4 = Rat::from_integer(self.a4.clone());
            (Rat::from_integer(big(3)) * u1 * u1 + Rat::from_integer(big(2)) * &a2 * u1 + a4)
                / (Rat::from_integer(big(2)) * v1)
        } else {
            (v2 - v1) / (u2 - u1)
        };
        let u3 = &slope * &slope - a2 - u1 - u2;
        let v3 = &slope * (u1 - &u3) - v1;
        CurvePoint::affine(u3, v3)
    }

    pub fn try_add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.double(&pow);
            }
        }
        acc
    }

    /// The three finite points of order two, by ascending `U`.
    pub fn two_torsion(&self) -> Vec<CurvePoint> {
        let mut us = vec![BigInt::zero(), -self.shift.clone(), -self.kappa.clone()];
        us.sort();
        us.into_iter().map(|u| CurvePoint::affine(Rat::from_integer(u), Rat::zero())).collect()
    }

    /// Infinity followed by the three 2-torsion points.
    pub fn torsion_offsets(&self) -> Vec<CurvePoint> {
        let mut out = vec![CurvePoint::Infinity];
        out.extend(self.two_torsion());
        out
    }

    /// The three seed families, `+` before `-` in each pair, labelled.
    pub fn seed_points(&self) -> Vec<(String, CurvePoint)> {
        let (y, z) = (big(self.y), big(self.z));
        let delta = &y - &z;
        let s = &y + &z;
        let seeds = [
            (&delta * &delta, big(4) * &s * &delta * &delta),
            (big(-3) * &s * &s, big(12) * &y * &z * &s),
            (big(3) * &self.kappa, big(12) * &s * &self.kappa),
        ];
        let mut out = Vec::new();
        for (i, (u, v)) in seeds.into_iter().enumerate() {
            for (sign, label) in [(1, "+"), (-1, "-")] {
                let p = CurvePoint::affine(Rat::from_integer(u.clone()), Rat::from_integer(&v * big(sign)));
                out.push((format!("seed{}{}", i + 1, label), p));
            }
        }
        out
    }

    /// `X = (V - (Y+Z)U - 3(Y+Z)(Y-Z)^2) / (2(U + 3(Y-Z)^2))`, or `None`
    /// at infinity and where the denominator vanishes.
    pub fn x_map(&self, p: &CurvePoint) -> Option<Rat> {
        let CurvePoint::Affine { u, v } = p else {
            return None;
        };
        let shift = Rat::from_integer(self.shift.clone());
        let den = Rat::from_integer(big(2)) * (u + &shift);
        if den.is_zero() {
            return None;
        }
        let s = Rat::from_integer(big(self.y + self.z));
        Some((v - &s * u - &s * &shift) / den)
    }

    fn rhs_i128(&self, u: i128) -> Option<i128> {
        let a2 = self.a2.to_i128()?;
        let a4 = self.a4.to_i128()?;
        u.checked_add(a2)?.checked_mul(u)?.checked_add(a4)?.checked_mul(u)
    }

    /// Every point with integer `U` in `[-bound, bound]`, both signs of `V`,
    /// ordered by `(U, V)`. The scan is split across `jobs` threads.
    pub fn integer_point_search(&self, bound: u64, jobs: usize) -> Vec<CurvePoint> {
        let bound = bound.min(i64::MAX as u64) as i128;
        let jobs = jobs.max(1);
        let scan = |slot: usize| {
            let mut found = Vec::new();
            let mut u = -bound + slot as i128;
            while u <= bound {
                let root = match self.rhs_i128(u) {
                    Some(r) => is_square_i128(r).map(BigInt::from),
                    None => {
                        let r = self.rhs(&Rat::from_integer(BigInt::from(u)));
                        is_perfect_square(r.numer()).root
                    }
                };
                if let Some(v) = root {
                    let ub = Rat::from_integer(BigInt::from(u));
                    if !v.is_zero() {
                        found.push(CurvePoint::affine(ub.clone(), Rat::from_integer(-v.clone())));
                    }
                    found.push(CurvePoint::affine(ub, Rat::from_integer(v)));
                }
                u += jobs as i128;
            }
            found
        };
        let mut all: Vec<CurvePoint> = if jobs == 1 {
            scan(0)
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..jobs).map(|slot| s.spawn(move || scan(slot))).collect();
                handles.into_iter().flat_map(|h| h.join().expect("scan worker panicked")).collect()
            })
        };
        all.sort();
        all
    }
}

/// Whether the seed pairs satisfy `V^2 = U(U + 3(Y-Z)^e)(U + (3Y+Z)(Y+3Z))`
/// identically in `(Y, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentCertificate {
    pub exponent: u32,
    /// One entry per seed family.
    pub identities: Vec<bool>,
    pub grid: usize,
}

/// Both sides are polynomials of degree at most 12 in each of `Y` and `Z`,
/// so agreement on a 13 by 13 grid is an identity and one miss refutes it.
pub fn exponent_certificate(exponent: u32) -> ExponentCertificate {
    const GRID: i64 = 13;
    let mut identities = vec![true; 3];
    for yi in 0..GRID {
        for zi in 0..GRID {
            let (y, z) = (big(2 * yi - 7), big(3 * zi + 11));
            let delta = &y - &z;
            let s = &y + &z;
            let kappa = (big(3) * &y + &z) * (&y + big(3) * &z);
            let shift = big(3) * num_traits::pow(delta.clone(), exponent as usize);
            let seeds = [
                (&delta * &delta, big(4) * &s * &delta * &delta),
                (big(-3) * &s * &s, big(12) * &y * &z * &s),
                (big(3) * &kappa, big(12) * &s * &kappa),
            ];
            for (i, (u, v)) in seeds.iter().enumerate() {
                if v * v != u * (u + &shift) * (u + &kappa) {
                    identities[i] = false;
                }
            }
        }
    }
    ExponentCertificate { exponent, identities, grid: GRID as usize }
}

impl ExponentCertificate {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|&b| b)
    }

    pub fn none_hold(&self) -> bool {
        self.identities.iter().all(|&b| !b)
    }
}
