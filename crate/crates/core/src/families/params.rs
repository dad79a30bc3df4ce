use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    /// `(x-a)(x-b)/x`
    R21Int,
    /// `(x^2+cx+d)/x`
    R21Cplx,
    /// `x/((x-a)(x-b))`
    R12Int,
    /// `x/(x^2+cx+d)`
    R12Cplx,
    /// `(x-a)(x-b)/(x(x-c))`
    R22Int,
    /// `x(x-a)/(x^2+cx+d)`
    R22NumInt,
    /// `(x^2+cx+d)/(x(x-a))`
    R22DenInt,
    /// `(x^2+ax+b)/(x^2+cx+d)`
    R22Cplx,
    /// `(x-a)(x-b)(x-c)/x`
    R31Int,
    /// `(x-a)(x^2+cx+d)/x`
    R31Cplx,
    /// `(x-a)(x-b)(x-c)/(x(x-d))`
    R32Int,
    /// `(x^2-1)/(x^3+bx+c)`
    R23Rusin,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::R21Int,
        FamilyId::R21Cplx,
        FamilyId::R12Int,
        FamilyId::R12Cplx,
        FamilyId::R22Int,
        FamilyId::R22NumInt,
        FamilyId::R22DenInt,
        FamilyId::R22Cplx,
        FamilyId::R31Int,
        FamilyId::R31Cplx,
        FamilyId::R32Int,
        FamilyId::R23Rusin,
    ];

    pub fn id(self) -> &'static str {
        use FamilyId::*;
        match self {
            R21Int => "R21_INT",
            R21Cplx => "R21_CPLX",
            R12Int => "R12_INT",
            R12Cplx => "R12_CPLX",
            R22Int => "R22_INT",
            R22NumInt => "R22_NUMINT",
            R22DenInt => "R22_DENINT",
            R22Cplx => "R22_CPLX",
            R31Int => "R31_INT",
            R31Cplx => "R31_CPLX",
            R32Int => "R32_INT",
            R23Rusin => "R23_RUSIN",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        use FamilyId::*;
        match self {
            R21Int | R12Int => &["a", "b"],
            R21Cplx | R12Cplx => &["c", "d"],
            R22Int | R31Int => &["a", "b", "c"],
            R22NumInt | R22DenInt | R31Cplx => &["a", "c", "d"],
            R22Cplx | R32Int => &["a", "b", "c", "d"],
            R23Rusin => &["b", "c"],
        }
    }

    pub fn shape(self) -> &'static str {
        use FamilyId::*;
        match self {
            R21Int => "(x-a)(x-b)/x",
            R21Cplx => "(x^2+cx+d)/x",
            R12Int => "x/((x-a)(x-b))",
            R12Cplx => "x/(x^2+cx+d)",
            R22Int => "(x-a)(x-b)/(x(x-c))",
            R22NumInt => "x(x-a)/(x^2+cx+d)",
            R22DenInt => "(x^2+cx+d)/(x(x-a))",
            R22Cplx => "(x^2+ax+b)/(x^2+cx+d)",
            R31Int => "(x-a)(x-b)(x-c)/x",
            R31Cplx => "(x-a)(x^2+cx+d)/x",
            R32Int => "(x-a)(x-b)(x-c)/(x(x-d))",
            R23Rusin => "(x^2-1)/(x^3+bx+c)",
        }
    }

    /// Leading parameters that are interchangeable roots, stored ascending.
    pub fn symmetric_prefix(self) -> usize {
        use FamilyId::*;
        match self {
            R21Int | R12Int | R22Int => 2,
            R31Int | R32Int => 3,
            _ => 0,
        }
    }

    pub fn valid_ids() -> String {
        Self::ALL.iter().map(|f| f.id()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL.into_iter().find(|f| f.id() == norm).ok_or_else(|| {
            Error::parse("family id", format!("unknown family {s:?}; valid ids: {}", Self::valid_ids()))
        })
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

/// A family together with its integer parameters, in the order of
/// [`FamilyId::param_names`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyParams {
    pub family: FamilyId,
    pub values: Vec<i64>,
}

impl FamilyParams {
    pub fn new(family: FamilyId, values: &[i64]) -> Result<Self> {
        let names = family.param_names();
        if values.len() != names.len() {
            return Err(Error::parse(
                "parameters",
                format!("{family} takes {} values ({}), got {}", names.len(), names.join(","), values.len()),
            ));
        }
        Ok(FamilyParams { family, values: values.to_vec() })
    }

    /// Accepts `a=1,b=5,c=21` in any order, or bare values `1,5,21` in
    /// declaration order.
    pub fn parse(family: FamilyId, text: &str) -> Result<Self> {
        let names = family.param_names();
        let parts: Vec<&str> = text.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        let int = |s: &str| {
            s.trim().parse::<i64>().map_err(|_| Error::parse("parameters", format!("{s:?} is not an integer")))
        };
        if parts.iter().all(|p| !p.contains('=')) {
            let values = parts.iter().map(|p| int(p)).collect::<Result<Vec<_>>>()?;
            return Self::new(family, &values);
        }
        let mut found: BTreeMap<&str, i64> = BTreeMap::new();
        for part in parts {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::parse("parameters", format!("expected name=value, got {part:?}")))?;
            let k = k.trim();
            if !names.contains(&k) {
                return Err(Error::parse(
                    "parameters",
                    format!("{family} has no parameter {k:?} (expected {})", names.join(",")),
                ));
            }
            if found.insert(k, int(v)?).is_some() {
                return Err(Error::parse("parameters", format!("parameter {k} given twice")));
            }
        }
        let values = names
            .iter()
            .map(|n| {
                found
                    .get(n)
                    .copied()
                    .ok_or_else(|| Error::parse("parameters", format!("missing parameter {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(family, &values)
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        let i = self.family.param_names().iter().position(|n| *n == name)?;
        Some(self.values[i])
    }

    /// Interchangeable roots sorted ascending.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        out.values[..self.family.symmetric_prefix()].sort_unstable();
        out
    }

    fn domain(&self, reason: impl Into<String>) -> Error {
        Error::Domain { family: self.family.to_string(), reason: reason.into() }
    }

    pub fn validate(&self) -> Result<()> {
        use FamilyId::*;
        if self.values.len() != self.family.param_names().len() {
            return Err(self.domain("wrong number of parameters"));
        }
        let v: Vec<i128> = self.values.iter().map(|&x| x as i128).collect();
        let complex = |c: i128, d: i128, what: &str| {
            if c * c < 4 * d {
                Ok(())
            } else {
                Err(self.domain(format!("{what} must have complex roots (c^2 < 4d)")))
            }
        };
        let nonzero = |x: i128, what: &str| {
            if x != 0 {
                Ok(())
            } else {
                Err(self.domain(format!("{what} must be nonzero")))
            }
        };
        let distinct = |xs: &[i128], what: &str| {
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    if xs[i] == xs[j] {
                        return Err(self.domain(format!("{what} must be distinct")));
                    }
                }
            }
            Ok(())
        };
        match self.family {
            R21Int | R12Int => {
                nonzero(v[0], "a")?;
                nonzero(v[1], "b")?;
                distinct(&v, "a, b")
            }
            R21Cplx | R12Cplx => complex(v[0], v[1], "x^2+cx+d"),
            R22Int => {
                distinct(&[v[0], v[1], v[2], 0], "a, b, c and 0")?;
                if v[0] + v[1] == v[2] {
                    return Err(self.domain("a+b-c must be nonzero"));
                }
                Ok(())
            }
            R22NumInt | R22DenInt => {
                nonzero(v[0], "a")?;
                complex(v[1], v[2], "x^2+cx+d")?;
                nonzero(v[0] + v[1], "a+c")
            }
            R22Cplx => {
                if v[0] * v[0] >= 4 * v[1] {
                    return Err(self.domain("x^2+ax+b must have complex roots (a^2 < 4b)"));
                }
                complex(v[2], v[3], "x^2+cx+d")?;
                nonzero(v[0] - v[2], "a-c")
            }
            R31Int => distinct(&[v[0], v[1], v[2], 0], "a, b, c and 0"),
            R31Cplx => {
                nonzero(v[0], "a")?;
                complex(v[1], v[2], "x^2+cx+d")
            }
            R32Int => {
                distinct(&[v[0], v[1], v[2], 0], "a, b, c and 0")?;
                distinct(&[v[0], v[1], v[2], v[3]], "a, b, c and d")?;
                nonzero(v[3], "d")
            }
            R23Rusin => {
                let (b, c) = (v[0], v[1]);
                if b + c + 1 == 0 || c - b - 1 == 0 {
                    return Err(self.domain("requires b+c+1 != 0 and c-b-1 != 0"));
                }
                if 4 * b * b * b + 27 * c * c == 0 {
                    return Err(self.domain("x^3+bx+c has a repeated root"));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .family
            .param_names()
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    family: FamilyId,
    params: BTreeMap<String, i64>,
}

impl Serialize for FamilyParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let params = self
            .family
            .param_names()
            .iter()
            .zip(&self.values)
            .map(|(n, v)| (n.to_string(), *v))
            .collect();
        ParamsRepr { family: self.family, params }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FamilyParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ParamsRepr::deserialize(d)?;
        let text: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        FamilyParams::parse(r.family, &text.join(",")).map_err(de::Error::custom)
    }
}
