//! Integer quadruples `(X, Y, Z, W)` whose ratios `Y/W, Z/W, X/W` are three
//! critical points of one normal form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rusin::{recover_bc, RusinForm};
use crate::error::{Error, Result};
use crate::roots::{is_perfect_square, rational_sqrt};
use crate::serde_util::bigint_str;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalQuadruple {
    #[serde(with = "bigint_str")]
    pub x: BigInt,
    #[serde(with = "bigint_str")]
    pub y: BigInt,
    #[serde(with = "bigint_str")]
    pub z: BigInt,
    #[serde(with = "bigint_str")]
    pub w: BigInt,
}

/// `3W^4 - (X^2+Y^2+Z^2+XY+XZ+YZ)W^2 + XYZ(X+Y+Z)`.
pub fn quartic_residue(x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) -> BigInt {
    let s = x * x + y * y + z * z + x * y + x * z + y * z;
    let w2 = w * w;
    BigInt::from(3) * &w2 * &w2 - s * &w2 + x * y * z * (x + y + z)
}

impl CriticalQuadruple {
    /// Checks the quartic relation, `W != 0` and that the four critical
    /// points are distinct.
    pub fn new(x: BigInt, y: BigInt, z: BigInt, w: BigInt) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::Degenerate("W = 0".into()));
        }
        let residue = quartic_residue(&x, &y, &z, &w);
        if !residue.is_zero() {
            return Err(Error::Degenerate(format!("({x},{y},{z},{w}) leaves residue {residue}")));
        }
        let quad = CriticalQuadruple { x, y, z, w };
        let xs = quad.critical_points();
        for i in 0..4 {
            for j in i + 1..4 {
                if xs[i] == xs[j] {
                    return Err(Error::Degenerate(format!("critical points x{} and x{} coincide", i + 1, j + 1)));
                }
            }
        }
        Ok(quad)
    }

    /// Divides out the common factor and makes `W` positive.
    pub fn reduced(&self) -> Self {
        let g = [&self.x, &self.y, &self.z]
            .into_iter()
            .fold(self.w.abs(), |g, v| num_integer::Integer::gcd(&g, v));
        let g = if self.w.is_negative() { -g } else { g };
        CriticalQuadruple { x: &self.x / &g, y: &self.y / &g, z: &self.z / &g, w: &self.w / &g }
    }

    pub fn residue(&self) -> BigInt {
        quartic_residue(&self.x, &self.y, &self.z, &self.w)
    }

    /// `x1 = Y/W`, `x2 = Z/W`, `x3 = X/W` and the fourth root, which is
    /// `-(x1+x2+x3)` because the quartic has no cubic term.
    pub fn critical_points(&self) -> [Rat; 4] {
        let r = |v: &BigInt| Rat::new(v.clone(), self.w.clone());
        let (x1, x2, x3) = (r(&self.y), r(&self.z), r(&self.x));
        let x4 = -(&x1 + &x2 + &x3);
        [x1, x2, x3, x4]
    }

    pub fn rusin_form(&self) -> Result<RusinForm> {
        let xs = self.critical_points();
        recover_bc(&xs[0], &xs[1])
    }
}

/// Every rational `W` with `3W^4 - S W^2 + P = 0`, ascending.
pub fn w_quartic_solve(x: &BigInt, y: &BigInt, z: &BigInt) -> Vec<Rat> {
    let s = x * x + y * y + z * z + x * y + x * z + y * z;
    let p = x * y * z * (x + y + z);
    let disc = &s * &s - BigInt::from(12) * &p;
    let Some(root) = is_perfect_square(&disc).root else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for sign in [1, -1] {
        let w2 = Rat::new(&s + BigInt::from(sign) * &root, BigInt::from(6));
        if let Some(w) = rational_sqrt(&w2) {
            out.push(-w.clone());
            out.push(w);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The two-parameter family of quadruples; `W^2 = Y^2+3YZ+Z^2` is checked
/// alongside the quartic relation.
pub fn pq_parametrize(p: i64, q: i64) -> Result<CriticalQuadruple> {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let p2 = &p * &p;
    let q2 = &q * &q;
    let common = &p2 - BigInt::from(2) * &p * &q + BigInt::from(2) * &q2;
    let x = &p2 * &p2 - BigInt::from(8) * &p2 * &p * &q + BigInt::from(14) * &p2 * &q2
        - BigInt::from(4) * &p * &q2 * &q
        - BigInt::from(2) * &q2 * &q2;
    let y = (BigInt::from(3) * &q2 - BigInt::from(2) * &p * &q) * &common;
    let z = (&p2 - &q2) * &common;
    let w = (&p2 - BigInt::from(3) * &p * &q + &q2) * &common;
    if &w * &w != &y * &y + BigInt::from(3) * &y * &z + &z * &z {
        return Err(Error::Invariant(format!("W^2 = Y^2+3YZ+Z^2 fails at p={p}, q={q}")));
    }
    CriticalQuadruple::new(x, y, z, w)
}
