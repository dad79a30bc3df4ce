//! One-off constructions: the three-inflexion families, the general R22 and
//! R32 discriminants, the R32 ordering guarantee and the R23 sextic.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{build, FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::roots::count_real_roots;
use crate::{QPoly, QRatFunc, Rat, ShiftedFamily};

fn q(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn qp(c: Vec<Rat>) -> QPoly {
    QPoly::new(c)
}

/// `x = z - n` rendering of a family member with `n` left symbolic.
pub fn emit_parametric(params: &FamilyParams, symbol: &str) -> Result<ShiftedFamily> {
    Ok(ShiftedFamily::new(&build(params)?, symbol))
}

/// Member `param` of one of the three R22 families with three rational
/// inflexion points; each is a translate of its `param = 0` member.
pub fn three_inflexion_family(which: u8, param: i64) -> Result<QRatFunc> {
    let (num, den): (&[i64], &[i64]) = match which {
        1 => (&[26, 0, 1], &[333, -30, 1]),
        2 => (&[168, 1, 1], &[301, -23, 1]),
        3 => (&[76, 0, 1], &[381, -18, 1]),
        _ => {
            return Err(Error::Domain {
                family: "three-inflexion".into(),
                reason: format!("family must be 1, 2 or 3, got {which}"),
            })
        }
    };
    let base = QRatFunc::strict(QPoly::from_i64s(num), QPoly::from_i64s(den))?;
    Ok(base.shift(&q(-param)))
}

/// `(x-p)(x-q)/((x-r)(x-s))`.
pub fn r22_general(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> Result<QRatFunc> {
    let num = QPoly::from_roots(&[p.clone(), q.clone()]);
    let den = QPoly::from_roots(&[r.clone(), s.clone()]);
    QRatFunc::strict(num, den)
}

/// `(p-r)(p-s)(q-r)(q-s)`: a quarter of the discriminant of the critical
/// quadratic, equal to the resultant of numerator and denominator.
pub fn r22_general_critical_discriminant(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> Rat {
    (p - r) * (p - s) * (q - r) * (q - s)
}

/// The inflexion cubic of [`r22_general`], derived from the second
/// derivative (it is `-1/2` times the reduced numerator).
pub fn r22_general_inflexion_cubic(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> QPoly {
    let three = Rat::from_integer(3.into());
    let c3 = p + q - r - s;
    let c2 = &three * (r * s - p * q);
    let c1 = &three * (p * (q * (r + s) - r * s) - q * r * s);
    let c0 = p * (r * s * (r + s) - q * (r * r + r * s + s * s)) + r * s * (q * (r + s) - r * s);
    qp(vec![c0, c1, c2, c3])
}

/// `(p-r)^2(p-s)^2(q-r)^2(q-s)^2(r-s)^2 / (4(p+q-r-s)^4)`; `None` when
/// `p+q = r+s`.
pub fn r22_general_inflexion_discriminant(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> Option<Rat> {
    let k = p + q - r - s;
    if k.is_zero() {
        return None;
    }
    let prod = r22_general_critical_discriminant(p, q, r, s) * (r - s);
    let k2 = &k * &k;
    Some(&prod * &prod / (Rat::from_integer(4.into()) * &k2 * &k2))
}

/// `(x^3+ax^2+bx+c)/((x-d)(x-e))`.
pub fn r32_general(a: &Rat, b: &Rat, c: &Rat, d: &Rat, e: &Rat) -> Result<QRatFunc> {
    let num = qp(vec![c.clone(), b.clone(), a.clone(), Rat::one()]);
    QRatFunc::strict(num, QPoly::from_roots(&[d.clone(), e.clone()]))
}

/// Closed-form Cardano `D` of the inflexion cubic of [`r32_general`];
/// `None` when the cubic degenerates.
pub fn r32_general_inflexion_discriminant(a: &Rat, b: &Rat, c: &Rat, d: &Rat, e: &Rat) -> Option<Rat> {
    let n = |x: &Rat| x * x * x + a * x * x + b * x + c;
    let k = a * (d + e) + b + d * d + d * e + e * e;
    if k.is_zero() {
        return None;
    }
    let (nd, ne, de) = (n(d), n(e), d - e);
    let k2 = &k * &k;
    Some(&de * &de * &nd * &nd * &ne * &ne / (Rat::from_integer(4.into()) * &k2 * &k2))
}

pub(crate) fn r32_int_inflexion_discriminant(a: i64, b: i64, c: i64, d: i64) -> Option<Rat> {
    let (a, b, c, d) = (q(a), q(b), q(c), q(d));
    let big_a = -(&a + &b + &c);
    let big_b = &a * &b + &b * &c + &c * &a;
    let big_c = -(&a * &b * &c);
    r32_general_inflexion_discriminant(&big_a, &big_b, &big_c, &d, &Rat::zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct R32Guarantee {
    /// The ordering of `a, b, c, d` and `0` that guarantees four real
    /// critical points, if one holds.
    pub ordering: Option<String>,
    /// Distinct real roots of the critical quartic, counted exactly.
    pub real_critical: usize,
}

impl R32Guarantee {
    pub fn guaranteed(&self) -> bool {
        self.ordering.is_some()
    }

    /// A guaranteed ordering must come with four real critical points.
    pub fn consistent(&self) -> bool {
        !self.guaranteed() || self.real_critical == 4
    }
}

/// Checks the three orderings `0<d<a<b<c`, `0<a<b<c<d`, `a<b<c<d<0` and
/// counts the real critical points exactly for comparison.
pub fn r32_real_critical_guarantee(params: &FamilyParams) -> Result<R32Guarantee> {
    if params.family != FamilyId::R32Int {
        return Err(Error::Domain {
            family: params.family.to_string(),
            reason: "the ordering guarantee applies to R32_INT only".into(),
        });
    }
    params.validate()?;
    let p = params.canonical();
    let (a, b, c, d) = (p.values[0], p.values[1], p.values[2], p.values[3]);
    let ordering = if 0 < d && d < a && a < b && b < c {
        Some("0<d<a<b<c")
    } else if 0 < a && a < b && b < c && c < d {
        Some("0<a<b<c<d")
    } else if a < b && b < c && c < d && d < 0 {
        Some("a<b<c<d<0")
    } else {
        None
    };
    let real_critical = count_real_roots(&super::critical_equation(&p))?;
    Ok(R32Guarantee { ordering: ordering.map(str::to_string), real_critical })
}

/// `x^6-3(b+2)x^4-7cx^3-3bx^2+3cx+c^2-b^2`, whose roots are the inflexion
/// points of `(x^2-1)/(x^3+bx+c)`.
pub fn r23_inflexion_poly(b: &Rat, c: &Rat) -> Result<QPoly> {
    if (b + c + Rat::one()).is_zero() || (c - b - Rat::one()).is_zero() {
        return Err(Error::Domain {
            family: FamilyId::R23Rusin.to_string(),
            reason: format!("b={b}, c={c} violates b+c+1 != 0 and c-b-1 != 0"),
        });
    }
    Ok(qp(vec![
        c * c - b * b,
        q(3) * c,
        q(-3) * b,
        q(-7) * c,
        q(-3) * (b + q(2)),
        Rat::zero(),
        Rat::one(),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_families_at_zero() {
        let f = three_inflexion_family(1, 0).unwrap();
        assert_eq!(f.num(), &QPoly::from_i64s(&[26, 0, 1]));
        let f = three_inflexion_family(1, 2).unwrap();
        assert_eq!(f.num(), &QPoly::from_i64s(&[30, 4, 1]));
        assert_eq!(f.den(), &QPoly::from_i64s(&[277, -26, 1]));
        assert!(three_inflexion_family(4, 0).is_err());
    }

    #[test]
    fn r23_examples() {
        let p = r23_inflexion_poly(&q(0), &q(2)).unwrap();
        assert_eq!(p, QPoly::from_i64s(&[4, 6, 0, -14, -6, 0, 1]));
        assert!(r23_inflexion_poly(&q(0), &q(-1)).is_err());
    }

    #[test]
    fn r32_orderings() {
        let g = |v: &[i64]| {
            r32_real_critical_guarantee(&FamilyParams::new(FamilyId::R32Int, v).unwrap()).unwrap()
        };
        let a = g(&[2, 3, 8, 18]);
        assert_eq!(a.ordering.as_deref(), Some("0<a<b<c<d"));
        assert_eq!(a.real_critical, 4);
        assert!(!g(&[2, 3, 8, 5]).guaranteed());
        assert_eq!(g(&[-5, -4, -3, -1]).ordering.as_deref(), Some("a<b<c<d<0"));
    }
}
