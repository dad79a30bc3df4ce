//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rat;

/// Coefficients are stored low-to-high; the last entry is never zero.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// Monic polynomial with the given roots, `(x - r_1)...(x - r_k)`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), T::one()])
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1, for messages and comparisons.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.lead().ok_or(Error::DivisionByZero)?.clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let c = rem[i + ddeg].clone() / dlead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Invariant(format!("{divisor} does not divide {self}")))
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }

    /// `p(scale * x + offset)`.
    pub fn compose_affine(&self, scale: &T, offset: &T) -> Self {
        let lin = Self::new(vec![offset.clone(), scale.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// Substitutes `x = z - n`, so every root moves up by `n`.
    pub fn shift(&self, n: &T) -> Self {
        self.compose_affine(&T::one(), &-n.clone())
    }

    /// Square-free decomposition `p = c * f_1 * f_2^2 * ... ` (Yun). Returns the
    /// nonconstant monic `f_i` with their multiplicities.
    pub fn squarefree_factors(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let d = self.derivative();
        let g = Self::gcd(self, &d)?;
        let mut b = self.div_exact(&g)?;
        let mut c = d.div_exact(&g)?;
        let mut e = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = Self::gcd(&b, &e)?;
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a)?;
            c = e.div_exact(&a)?;
            e = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// The product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Self> {
        Ok(self
            .squarefree_factors()?
            .into_iter()
            .fold(Self::one(), |acc, (f, _)| &acc * &f))
    }

    /// Human form in the given variable, highest power first: `x^2-5x+4`.
    pub fn display_in(&self, var: &str) -> String {
        render_terms(self.coeffs.iter().enumerate().rev(), var)
    }

    /// Human form with the lowest power first: `9-2n`.
    pub fn display_ascending_in(&self, var: &str) -> String {
        render_terms(self.coeffs.iter().enumerate(), var)
    }
}

fn render_terms<'a, T: Scalar>(terms: impl Iterator<Item = (usize, &'a T)>, var: &str) -> String {
    let mut out = String::new();
    for (power, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        let mag_str = mag.to_string();
        if power == 0 {
            out.push_str(&mag_str);
            continue;
        }
        if !mag.is_one() {
            if mag_str.contains('/') {
                out.push('(');
                out.push_str(&mag_str);
                out.push(')');
            } else {
                out.push_str(&mag_str);
            }
        }
        out.push_str(var);
        if power > 1 {
            out.push('^');
            out.push_str(&power.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

// JSON form: low-to-high list of exact coefficient strings.
impl<T: Scalar> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| {
                s.parse::<T>()
                    .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}

impl Poly<Rat> {
    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rat::from_integer).collect())
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    /// The zero polynomial maps to itself.
    pub fn primitive(&self) -> Self {
        Self::from_bigints(&self.primitive_integer_coeffs())
    }

    /// Coefficients of [`Poly::primitive`] as integers.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|l| l.is_negative()) {
            content = -content;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// Integer coefficients if every coefficient is already integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|l| l.is_one())
    }
}

impl std::str::FromStr for Poly<Rat> {
    type Err = Error;

    /// Accepts a coefficient list `[4, -5, 1]` (low to high) or a human
    /// form such as `x^2-5x+4`, `3*x^3 - (7/2)x + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::parse("polynomial", "missing closing ']'"))?;
            if inner.trim().is_empty() {
                return Ok(Poly::zero());
            }
            let coeffs = inner
                .split(',')
                .map(|c| {
                    let c = c.trim().trim_matches('"');
                    c.parse::<Rat>()
                        .map_err(|_| Error::parse("polynomial", format!("bad coefficient {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Poly::new(coeffs));
        }
        parse_human(s)
    }
}

fn parse_human(s: &str) -> Result<Poly<Rat>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::parse("polynomial", "empty input"));
    }
    let mut var: Option<char> = None;
    let mut coeffs: Vec<Rat> = Vec::new();
    let mut i = 0;
    let bad = |msg: String| Error::parse("polynomial", msg);
    while i < chars.len() {
        let mut sign = Rat::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(bad(format!("expected '+' or '-' at offset {i}")));
        }
        // coefficient
        let mut coeff: Option<Rat> = None;
        if i < chars.len() && chars[i] == '(' {
            let close = chars[i..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| bad("unbalanced '('".into()))?;
            let text: String = chars[i + 1..i + close].iter().collect();
            coeff = Some(text.parse::<Rat>().map_err(|_| bad(format!("bad coefficient {text:?}")))?);
            i += close + 1;
        } else {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            if i > start {
                let text: String = chars[start..i].iter().collect();
                coeff = Some(text.parse::<Rat>().map_err(|_| bad(format!("bad coefficient {text:?}")))?);
            }
        }
        if i < chars.len() && chars[i] == '*' {
            i += 1;
        }
        let mut power = 0usize;
        if i < chars.len() && chars[i].is_ascii_alphabetic() {
            let v = chars[i];
            match var {
                None => var = Some(v),
                Some(w) if w != v => return Err(bad(format!("mixed variables {w} and {v}"))),
                _ => {}
            }
            i += 1;
            power = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                power = text.parse().map_err(|_| bad("bad exponent".into()))?;
            }
        } else if coeff.is_none() {
            return Err(bad(format!("expected a term at offset {i}")));
        }
        let c = sign * coeff.unwrap_or_else(Rat::one);
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rat::zero());
        }
        coeffs[power] += c;
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(q(&[4, -5, 1]).derivative(), q(&[-5, 2]));
        assert!(q(&[7]).derivative().is_zero());
        assert_eq!(q(&[4160, -192, 0, 1]).derivative(), q(&[-192, 0, 3]));
    }

    #[test]
    fn gcd_cases() {
        let a = &q(&[-1, 1]) * &q(&[-4, 1]);
        assert_eq!(QPoly::gcd(&a, &q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(QPoly::gcd(&q(&[1, 0, 1]), &QPoly::x()).unwrap(), q(&[1]));
        let p = q(&[2, 4, 6]);
        assert_eq!(QPoly::gcd(&p, &QPoly::zero()).unwrap(), p.monic());
        assert_eq!(QPoly::gcd(&QPoly::zero(), &QPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = q(&[476280, 10566, 165, 1]);
        let b = q(&[108, 1]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo, q(&[4410, 57, 1]));
        assert_eq!(a.div_rem(&QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_and_parse() {
        let p = q(&[4, -5, 1]);
        assert_eq!(p.to_string(), "x^2-5x+4");
        assert_eq!("x^2-5x+4".parse::<QPoly>().unwrap(), p);
        assert_eq!("[4, -5, 1]".parse::<QPoly>().unwrap(), p);
        assert_eq!("[\"4\", \"-5\", \"1\"]".parse::<QPoly>().unwrap(), p);
        assert_eq!(q(&[9, -2]).display_ascending_in("n"), "9-2n");
        let r: QPoly = "3*z^3 - (7/2)z + 1".parse().unwrap();
        assert_eq!(r.coeffs()[1], Rat::new(BigInt::from(-7), BigInt::from(2)));
        assert_eq!(r.display_in("z"), "3z^3-(7/2)z+1");
        assert!("x^2+y".parse::<QPoly>().is_err());
        assert!("".parse::<QPoly>().is_err());
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_normalization() {
        let p = QPoly::new(vec![
            Rat::from_integer(105.into()),
            Rat::from_integer((-10).into()),
            Rat::from_integer((-15).into()),
        ]);
        assert_eq!(p.primitive(), q(&[-21, 2, 3]));
        let half = QPoly::new(vec![Rat::new(1.into(), 2.into()), Rat::new(1.into(), 3.into())]);
        assert_eq!(half.primitive(), q(&[3, 2]));
    }

    #[test]
    fn shift_moves_roots() {
        let p = QPoly::from_roots(&[Rat::from_integer(1.into()), Rat::from_integer(4.into())]);
        let n = Rat::from_integer(3.into());
        let s = p.shift(&n);
        assert!(s.eval(&Rat::from_integer(4.into())).is_zero());
        assert!(s.eval(&Rat::from_integer(7.into())).is_zero());
    }

    #[test]
    fn squarefree_factors_of_repeated() {
        // (x-1)^2 (x+2)^3 (x^2+1)
        let p = &(&q(&[-1, 1]).pow(2) * &q(&[2, 1]).pow(3)) * &q(&[1, 0, 1]);
        let f = p.scale(&Rat::from_integer(5.into())).squarefree_factors().unwrap();
        assert_eq!(f, vec![(q(&[1, 0, 1]), 1), (q(&[-1, 1]), 2), (q(&[2, 1]), 3)]);
    }

    #[test]
    fn generic_over_floats() {
        let p = Poly::<f64>::from_i64s(&[4, -5, 1]);
        assert_eq!(p.eval(&4.0), 0.0);
        assert_eq!(p.derivative(), Poly::<f64>::from_i64s(&[-5, 2]));
        let p32 = Poly::<f32>::from_i64s(&[0, 0, 1]);
        assert_eq!(p32.eval(&3.0), 9.0);
    }
}
