//! Reduced rational functions `num(x) / den(x)` and their derivatives.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// How strictly [`RatFunc::with_mode`] enforces the standing assumptions on
/// a "true" rational function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    /// Common factors and repeated roots are errors.
    Strict,
    /// Anything with a nonzero denominator is accepted; problems become warnings.
    Permissive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    CommonFactorCancelled { factor: String },
    RepeatedRoot { which: String, factor: String },
    DegreeSumBelowThree { m: i64, n: i64 },
    NotProperRational { m: i64, n: i64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::CommonFactorCancelled { factor } => {
                write!(f, "cancelled common factor {factor}")
            }
            Warning::RepeatedRoot { which, factor } => {
                write!(f, "{which} has a repeated factor {factor}")
            }
            Warning::DegreeSumBelowThree { m, n } => {
                write!(f, "m+n = {} < 3, critical points are not guaranteed", m + n)
            }
            Warning::NotProperRational { m, n } => {
                write!(f, "degrees (m, n) = ({m}, {n}): not a true rational function")
            }
        }
    }
}

/// A rational function with `gcd(num, den) = 1` and a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    /// Permissive construction: cancels common factors silently.
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        Self::with_mode(num, den, Strictness::Permissive).map(|(r, _)| r)
    }

    /// Strict construction for family builders.
    pub fn strict(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        Self::with_mode(num, den, Strictness::Strict).map(|(r, _)| r)
    }

    pub fn with_mode(num: Poly<T>, den: Poly<T>, mode: Strictness) -> Result<(Self, Vec<Warning>)> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut warnings = Vec::new();
        let g = if num.is_zero() { den.monic() } else { Poly::gcd(&num, &den)? };
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            if mode == Strictness::Strict {
                return Err(Error::CommonFactor(g.to_string()));
            }
            warnings.push(Warning::CommonFactorCancelled { factor: g.to_string() });
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        for (which, p) in [("numerator", &num), ("denominator", &den)] {
            if p.degree().unwrap_or(0) > 1 {
                let rep = Poly::gcd(p, &p.derivative())?;
                if !rep.is_constant() {
                    if mode == Strictness::Strict {
                        return Err(Error::RepeatedRoot { which, factor: rep.to_string() });
                    }
                    warnings.push(Warning::RepeatedRoot {
                        which: which.to_string(),
                        factor: rep.to_string(),
                    });
                }
            }
        }
        let lead = den.lead().expect("nonzero").clone();
        let (num, den) = (num.scale(&(T::one() / lead.clone())), den.monic());
        let (m, n) = (num.degree_i64(), den.degree_i64());
        if m < 1 || n < 1 {
            warnings.push(Warning::NotProperRational { m, n });
        } else if m + n < 3 {
            warnings.push(Warning::DegreeSumBelowThree { m, n });
        }
        Ok((RatFunc { num, den }, warnings))
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn eval(&self, x: &T) -> Result<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// The reduced derivative, via the quotient rule.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("square of a nonzero denominator is nonzero")
    }

    /// Numerator of `R'` after cancellation; its zeros are the critical points.
    pub fn deriv_numerator(&self) -> Poly<T> {
        self.derivative().num
    }

    /// Numerator of `R''` after cancellation; its zeros are the inflexion candidates.
    pub fn second_deriv_numerator(&self) -> Poly<T> {
        self.derivative().derivative().num
    }

    /// Substitutes `x = z - n`.
    pub fn shift(&self, n: &T) -> Self {
        RatFunc { num: self.num.shift(n), den: self.den.shift(n) }
    }

    /// `1 / R`.
    pub fn reciprocal(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn display_in(&self, var: &str) -> String {
        format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
    }
}

impl<T: Scalar> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct RatFuncRepr<T: Scalar> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> Serialize for RatFunc<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for RatFunc<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::<T>::deserialize(d)?;
        RatFunc::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}
