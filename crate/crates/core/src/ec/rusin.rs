//! The normal form `(x^3+bx+c)/(x^2-1)`, the affine maps into and out of it,
//! and presentation as a monic integer R32.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::rational_roots;
use crate::serde_util::rat_str;
use crate::{QPoly, QRatFunc, Rat};

fn q(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// `y = (x^3+bx+c)/(x^2-1)` with `b+c+1 != 0` and `c-b-1 != 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RusinForm {
    #[serde(with = "rat_str")]
    pub b: Rat,
    #[serde(with = "rat_str")]
    pub c: Rat,
}

impl RusinForm {
    pub fn new(b: Rat, c: Rat) -> Result<Self> {
        if (&b + &c + Rat::one()).is_zero() || (&c - &b - Rat::one()).is_zero() {
            return Err(Error::Degenerate(format!(
                "b={b}, c={c}: the numerator vanishes at a pole (b+c+1=0 or c-b-1=0)"
            )));
        }
        Ok(RusinForm { b, c })
    }

    pub fn numerator(&self) -> QPoly {
        QPoly::new(vec![self.c.clone(), self.b.clone(), Rat::zero(), Rat::one()])
    }

    pub fn function(&self) -> QRatFunc {
        QRatFunc::new(self.numerator(), QPoly::from_i64s(&[-1, 0, 1]))
            .expect("the guards keep numerator and denominator coprime")
    }

    /// The form with `x -> -x`, `y -> -y`: same `b`, opposite `c`.
    pub fn mirror(&self) -> Self {
        RusinForm { b: self.b.clone(), c: -self.c.clone() }
    }
}

/// `z = scale x + offset` and `w = out_scale y + out_offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    #[serde(with = "rat_str")]
    pub scale: Rat,
    #[serde(with = "rat_str")]
    pub offset: Rat,
    #[serde(with = "rat_str")]
    pub out_scale: Rat,
    #[serde(with = "rat_str")]
    pub out_offset: Rat,
}

impl AffineMap {
    pub fn new(scale: Rat, offset: Rat, out_scale: Rat, out_offset: Rat) -> Result<Self> {
        if scale.is_zero() || out_scale.is_zero() {
            return Err(Error::Degenerate("affine map with zero scale".into()));
        }
        Ok(AffineMap { scale, offset, out_scale, out_offset })
    }

    pub fn identity() -> Self {
        AffineMap { scale: Rat::one(), offset: Rat::zero(), out_scale: Rat::one(), out_offset: Rat::zero() }
    }

    pub fn forward_x(&self, x: &Rat) -> Rat {
        &self.scale * x + &self.offset
    }

    pub fn inverse_x(&self, z: &Rat) -> Rat {
        (z - &self.offset) / &self.scale
    }

    pub fn forward_y(&self, y: &Rat) -> Rat {
        &self.out_scale * y + &self.out_offset
    }

    pub fn inverse_y(&self, w: &Rat) -> Rat {
        (w - &self.out_offset) / &self.out_scale
    }

    pub fn inverse(&self) -> Self {
        AffineMap {
            scale: Rat::one() / &self.scale,
            offset: -&self.offset / &self.scale,
            out_scale: Rat::one() / &self.out_scale,
            out_offset: -&self.out_offset / &self.out_scale,
        }
    }

    /// `w(z)` given `y(x)`: `w = out_scale y((z - offset)/scale) + out_offset`.
    pub fn apply(&self, f: &QRatFunc) -> QRatFunc {
        let inv_scale = Rat::one() / &self.scale;
        let shift = -&self.offset / &self.scale;
        let num = f.num().compose_affine(&inv_scale, &shift).scale(&self.out_scale);
        let den = f.den().compose_affine(&inv_scale, &shift);
        let num = &num + &den.scale(&self.out_offset);
        QRatFunc::new(num, den).expect("an affine image of a nonzero denominator is nonzero")
    }
}

/// Brings `(z^3+rz^2+sz+t)/((z-d)(z-e))` to normal form with
/// `z = ((d-e)x + d + e)/2` and `w = ((d-e)y + 3d + 3e + 2r)/2`.
pub fn normalize(d: &Rat, e: &Rat, r: &Rat, s: &Rat, t: &Rat) -> Result<(RusinForm, AffineMap)> {
    if d == e {
        return Err(Error::Degenerate("the two poles coincide (d = e)".into()));
    }
    let two = q(2);
    let lambda = (d - e) / &two;
    let mu = (d + e) / &two;
    let beta = q(3) * &mu + r;
    let map = AffineMap::new(lambda.clone(), mu.clone(), lambda.clone(), beta.clone())?;
    // y (x^2 - 1) = N(lambda x + mu)/lambda^3 - (beta/lambda)(x^2 - 1)
    let n = QPoly::new(vec![t.clone(), s.clone(), r.clone(), Rat::one()]);
    let scaled = n.compose_affine(&lambda, &mu).scale(&(Rat::one() / (&lambda * &lambda * &lambda)));
    let reduced = &scaled - &QPoly::from_i64s(&[-1, 0, 1]).scale(&(&beta / &lambda));
    if !reduced.coeff(2).is_zero() || reduced.coeff(3) != Rat::one() {
        return Err(Error::Invariant(format!("normal form numerator {reduced} is not x^3+bx+c")));
    }
    let form = RusinForm::new(reduced.coeff(1), reduced.coeff(0))?;
    Ok((form, map))
}

/// `x^4-(b+3)x^2-2cx-b`, the numerator of the derivative of the normal form.
pub fn critical_quartic(f: &RusinForm) -> QPoly {
    QPoly::new(vec![
        -f.b.clone(),
        q(-2) * &f.c,
        -(&f.b + q(3)),
        Rat::zero(),
        Rat::one(),
    ])
}

/// The unique `(b, c)` making `x1` and `x2` critical points. The linear
/// system has determinant `2(x1-x2)(x1 x2-1)`.
pub fn recover_bc(x1: &Rat, x2: &Rat) -> Result<RusinForm> {
    // b (x^2+1) + 2c x = x^4 - 3x^2
    let det = q(2) * (x1 - x2) * (x1 * x2 - Rat::one());
    if det.is_zero() {
        return Err(Error::Degenerate(format!("x1={x1}, x2={x2} give a singular system")));
    }
    let rhs = |x: &Rat| x * x * x * x - q(3) * x * x;
    let (r1, r2) = (rhs(x1), rhs(x2));
    let (a1, a2) = (x1 * x1 + Rat::one(), x2 * x2 + Rat::one());
    let (c1, c2) = (q(2) * x1, q(2) * x2);
    let b = (&r1 * &c2 - &r2 * &c1) / &det;
    let c = (&a1 * &r2 - &a2 * &r1) / &det;
    RusinForm::new(b, c)
}

/// An integer presentation of a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presented {
    pub function: QRatFunc,
    /// From the normal form's `(x, y)` to the presented `(z, w)`.
    pub map: AffineMap,
}

pub const DEFAULT_SCALE_BOUND: u64 = 1_000_000;

fn denominator_lcm(values: &[Rat]) -> BigInt {
    values.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()))
}

fn max_abs_coeff(f: &QRatFunc) -> Rat {
    f.num()
        .coeffs()
        .iter()
        .chain(f.den().coeffs())
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero)
}

fn presented_with(f: &RusinForm, lambda: &Rat, mu: &Rat) -> Result<Presented> {
    let map = AffineMap::new(lambda.clone(), mu.clone(), lambda.clone(), Rat::zero())?;
    Ok(Presented { function: map.apply(&f.function()), map })
}

/// Maps the normal form to a monic integer R32 with `z = lambda x + mu`,
/// `w = lambda y`, so zeros stay zeros. Without a hint, `lambda` is the
/// least multiple of the critical points' common denominator that clears
/// `b lambda^2` and `c lambda^3`, and `mu = -lambda` or `lambda` puts one
/// pole at 0; the smaller coefficients win, ties going to `mu = -lambda`.
pub fn present(f: &RusinForm, hint: Option<&AffineMap>) -> Result<Presented> {
    if let Some(h) = hint {
        let out = presented_with(f, &h.scale, &h.offset)?;
        let integral = out.function.num().is_integral() && out.function.den().is_integral();
        if !integral {
            return Err(Error::Degenerate(format!("hint {h:?} does not give integer coefficients")));
        }
        return Ok(out);
    }
    let crit: Vec<Rat> = rational_roots(&critical_quartic(f))?.into_iter().map(|r| r.0).collect();
    let base = Rat::from_integer(denominator_lcm(&crit));
    let mut lambda = None;
    for k in 1..=DEFAULT_SCALE_BOUND {
        let l = &base * q(k as i64);
        if (&f.b * &l * &l).is_integer() && (&f.c * &l * &l * &l).is_integer() {
            lambda = Some(l);
            break;
        }
        if l > q(DEFAULT_SCALE_BOUND as i64) {
            break;
        }
    }
    let lambda = lambda.ok_or(Error::NoClearingScale(DEFAULT_SCALE_BOUND))?;
    let neg = presented_with(f, &lambda, &-lambda.clone())?;
    let pos = presented_with(f, &lambda, &lambda)?;
    Ok(if max_abs_coeff(&pos.function) < max_abs_coeff(&neg.function) { pos } else { neg })
}

/// Whether an affine map `z -> alpha z + beta` carries `from` onto `to`
/// as sets, pairing the first two points of `from` with two points of `to`.
pub fn affine_match(from: &[Rat], to: &[Rat]) -> Option<(Rat, Rat)> {
    if from.len() != to.len() || from.len() < 2 {
        return None;
    }
    let mut target = to.to_vec();
    target.sort();
    for i in 0..to.len() {
        for j in 0..to.len() {
            if i == j || from[0] == from[1] {
                continue;
            }
            let alpha = (&to[i] - &to[j]) / (&from[0] - &from[1]);
            if alpha.is_zero() {
                continue;
            }
            let beta = &to[i] - &alpha * &from[0];
            let mut image: Vec<Rat> = from.iter().map(|x| &alpha * x + &beta).collect();
            image.sort();
            if image == target {
                return Some((alpha, beta));
            }
        }
    }
    None
}

/// Two functions are presentations of each other when one affine change of
/// `z` carries poles onto poles and critical points onto critical points.
pub fn affine_equivalent(poles_a: &[Rat], crit_a: &[Rat], poles_b: &[Rat], crit_b: &[Rat]) -> bool {
    let mut a: Vec<Rat> = poles_a.to_vec();
    a.extend_from_slice(crit_a);
    if poles_a.len() != poles_b.len() || crit_a.len() != crit_b.len() {
        return false;
    }
    // try every way of matching the poles, then demand the critical sets agree
    let n = poles_a.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let dp = &poles_a[0] - &poles_a[1.min(n - 1)];
            if dp.is_zero() {
                continue;
            }
            let alpha = (&poles_b[i] - &poles_b[j]) / dp;
            let beta = &poles_b[i] - &alpha * &poles_a[0];
            let map = |xs: &[Rat]| {
                let mut v: Vec<Rat> = xs.iter().map(|x| &alpha * x + &beta).collect();
                v.sort();
                v
            };
            let mut pb = poles_b.to_vec();
            pb.sort();
            let mut cb = crit_b.to_vec();
            cb.sort();
            if map(poles_a) == pb && map(crit_a) == cb {
                return true;
            }
        }
    }
    false
}
