//! Printed niceness conditions with witnesses, discriminant facts, and the
//! verdicts they imply.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::equations::{critical_equation, inflexion_equation, closed_form_discriminant};
use super::{build, FamilyId, FamilyParams};
use crate::analysis::{analyze, NicenessGrade};
use crate::error::Result;
use crate::roots::{cardano, count_real_roots, is_perfect_cube, is_perfect_square, rational_roots, CubicNature};
use crate::serde_util::{opt_rat_str, rat_str};
use crate::{QPoly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionRole {
    /// Decides a verdict.
    Required,
    /// Reported for information only.
    Observed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    /// The required form, e.g. `ab(c-a)(c-b)=□`.
    pub form: String,
    pub value: String,
    pub witness: Option<String>,
    pub satisfied: bool,
    pub role: ConditionRole,
}

impl Condition {
    fn power(name: &str, form: &str, value: BigInt, exponent: u32) -> Self {
        let w = if exponent == 2 { is_perfect_square(&value) } else { is_perfect_cube(&value) };
        Condition {
            name: name.to_string(),
            form: form.to_string(),
            value: value.to_string(),
            satisfied: w.holds(),
            witness: w.root.map(|r| r.to_string()),
            role: ConditionRole::Required,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantFact {
    /// `critical` or `inflexion`.
    pub equation: String,
    pub formula: Option<String>,
    #[serde(with = "opt_rat_str")]
    pub closed_form: Option<Rat>,
    #[serde(with = "rat_str")]
    pub cardano: Rat,
    /// The closed form equals the Cardano `D` (vacuous without one).
    pub agrees: bool,
    pub nature: CubicNature,
    pub predicted_real: usize,
    /// Distinct real roots, counted exactly.
    pub certified_real: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictBasis {
    /// Decided by a closed-form square or cube condition.
    ClosedFormCondition,
    /// Decided by exact rational roots of the closed-form equation.
    ExactRoots,
    /// The equation is a nonzero constant.
    NoPoints,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub basis: VerdictBasis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub params: FamilyParams,
    pub function: String,
    pub conditions: Vec<Condition>,
    pub discriminants: Vec<DiscriminantFact>,
    /// Every critical point is rational.
    pub rational_critical: Verdict,
    /// At least one inflexion point is rational.
    pub rational_inflexion: Verdict,
    /// Recomputed from the full analysis, never from the conditions.
    pub grade: NicenessGrade,
}

impl ConditionReport {
    pub fn all_required_satisfied(&self) -> bool {
        self.conditions.iter().filter(|c| c.role == ConditionRole::Required).all(|c| c.satisfied)
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `v = alpha s^6` and `w = alpha t^6` for a common `alpha`, if possible.
fn sextic_pair(a: i64, b: i64) -> Option<(i64, i64, i64)> {
    if a == 0 || b == 0 || (a < 0) != (b < 0) {
        return None;
    }
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    let (mut s, mut t, mut alpha) = (1i64, 1i64, 1i64);
    let mut p = 2u64;
    while p * p <= x.max(y) {
        let (mut ex, mut ey) = (0u32, 0u32);
        while x % p == 0 {
            x /= p;
            ex += 1;
        }
        while y % p == 0 {
            y /= p;
            ey += 1;
        }
        if ex % 6 != ey % 6 {
            return None;
        }
        let r = ex % 6;
        let pi = p as i64;
        alpha *= pi.pow(r);
        s *= pi.pow((ex - r) / 6);
        t *= pi.pow((ey - r) / 6);
        p += 1;
    }
    // what is left is 1 or a prime to the first power
    if x != y {
        return None;
    }
    alpha *= x as i64;
    Some((if a < 0 { -alpha } else { alpha }, s, t))
}

fn conditions(p: &FamilyParams) -> Vec<Condition> {
    use FamilyId::*;
    let v: Vec<BigInt> = p.values.iter().map(|&x| big(x)).collect();
    let sq = |x: &BigInt| x * x;
    match p.family {
        R21Int => vec![Condition::power("rational critical points", "ab=□", &v[0] * &v[1], 2)],
        R21Cplx => vec![Condition::power("rational critical points", "d=□", v[1].clone(), 2)],
        R12Int => {
            let (a, b) = (&v[0], &v[1]);
            let mut out = vec![
                Condition::power("rational critical points", "ab=□", a * b, 2),
                Condition::power("rational inflexion point", "a^2b=g^3", sq(a) * b, 3),
            ];
            let sext = sextic_pair(p.values[0], p.values[1]);
            out.push(Condition {
                name: "sixth-power structure".into(),
                form: "a=αs^6, b=αt^6".into(),
                value: format!("a={a},b={b}"),
                witness: sext.map(|(al, s, t)| format!("α={al},s={s},t={t}")),
                satisfied: sext.is_some(),
                role: ConditionRole::Observed,
            });
            out
        }
        R12Cplx => {
            let d = &v[1];
            let k6 = {
                let s = is_perfect_square(d).root;
                s.and_then(|e| is_perfect_cube(&e).root)
            };
            vec![
                Condition::power("rational critical points", "d=□", d.clone(), 2),
                Condition {
                    name: "sixth power".into(),
                    form: "d=k^6".into(),
                    value: d.to_string(),
                    satisfied: k6.is_some(),
                    witness: k6.map(|k| k.to_string()),
                    role: ConditionRole::Observed,
                },
            ]
        }
        R22Int => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            vec![
                Condition::power("rational critical points", "ab(c-a)(c-b)=□", a * b * (c - a) * (c - b), 2),
                Condition::power(
                    "rational inflexion point",
                    "a^2b^2(c-a)(c-b)=f^3",
                    sq(a) * sq(b) * (c - a) * (c - b),
                    3,
                ),
            ]
        }
        R22NumInt => {
            let (a, c, d) = (&v[0], &v[1], &v[2]);
            vec![Condition::power("rational critical points", "d(a^2+ac+d)=□", d * (sq(a) + a * c + d), 2)]
        }
        R22DenInt => {
            let (a, c, d) = (&v[0], &v[1], &v[2]);
            let k = sq(a) + a * c + d;
            vec![
                Condition::power("rational critical points", "d(a^2+ac+d)=□", d * &k, 2),
                Condition::power("rational inflexion point", "d^2(a^2+ac+d)=f^3", sq(d) * &k, 3),
            ]
        }
        R22Cplx => {
            let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
            vec![Condition::power(
                "rational critical points",
                "(a-c)(ad-bc)+(b-d)^2=□",
                (a - c) * (a * d - b * c) + sq(&(b - d)),
                2,
            )]
        }
        R31Int => vec![Condition::power("rational inflexion point", "abc=f^3", &v[0] * &v[1] * &v[2], 3)],
        R31Cplx => vec![Condition::power("rational inflexion point", "ad=f^3", &v[0] * &v[2], 3)],
        R32Int | R23Rusin => Vec::new(),
    }
}

fn discriminant_fact(p: &FamilyParams, which: &str, eq: &QPoly) -> Result<Option<DiscriminantFact>> {
    if eq.degree() != Some(3) {
        return Ok(None);
    }
    let cd = cardano(eq)?;
    let closed = closed_form_discriminant(p).filter(|c| c.equation == which);
    let agrees = closed.as_ref().is_none_or(|c| c.value == cd.d);
    Ok(Some(DiscriminantFact {
        equation: which.to_string(),
        formula: closed.as_ref().map(|c| c.formula.clone()),
        closed_form: closed.map(|c| c.value),
        nature: cd.nature(),
        predicted_real: cd.predicted_distinct_real(),
        certified_real: count_real_roots(eq)?,
        cardano: cd.d,
        agrees,
    }))
}

fn find<'a>(conds: &'a [Condition], name: &str) -> Option<&'a Condition> {
    conds.iter().find(|c| c.role == ConditionRole::Required && c.name == name)
}

pub fn check(p: &FamilyParams) -> Result<ConditionReport> {
    let f = build(p)?;
    let conds = conditions(p);
    let crit = critical_equation(p);
    let infl = inflexion_equation(p);
    let mut discriminants = Vec::new();
    for (which, eq) in [("critical", &crit), ("inflexion", &infl)] {
        if let Some(fact) = discriminant_fact(p, which, eq)? {
            discriminants.push(fact);
        }
    }
    let rational_critical = match find(&conds, "rational critical points") {
        Some(c) => Verdict { holds: c.satisfied, basis: VerdictBasis::ClosedFormCondition },
        None => {
            let n: u32 = rational_roots(&crit)?.iter().map(|r| r.1).sum();
            Verdict { holds: n as usize == crit.degree().unwrap_or(0) && n > 0, basis: VerdictBasis::ExactRoots }
        }
    };
    let rational_inflexion = if infl.is_constant() {
        Verdict { holds: false, basis: VerdictBasis::NoPoints }
    } else {
        match find(&conds, "rational inflexion point") {
            Some(c) => Verdict { holds: c.satisfied, basis: VerdictBasis::ClosedFormCondition },
            None => Verdict { holds: !rational_roots(&infl)?.is_empty(), basis: VerdictBasis::ExactRoots },
        }
    };
    let grade = analyze(&f)?.grade;
    Ok(ConditionReport {
        params: p.clone(),
        function: f.to_string(),
        conditions: conds,
        discriminants,
        rational_critical,
        rational_inflexion,
        grade,
    })
}
