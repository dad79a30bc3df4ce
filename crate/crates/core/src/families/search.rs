//! Exhaustive parameter-box searches. A modular sieve on the closed-form
//! equations discards most tuples; survivors are decided exactly from the
//! symbolic derivatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::equations::{critical_coeffs_of, inflexion_coeffs_of};
use super::{build, FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::roots::rational_roots;
use crate::roots::sieve::may_have_rational_roots;
use crate::{QPoly, QRatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Requirement {
    /// Every critical point is rational (and there is at least one).
    RationalCritical,
    /// At least `count` distinct critical points that are rational, or
    /// integers when `integer` is set.
    Critical { count: usize, integer: bool },
    Inflexion { count: usize, integer: bool },
}

impl Requirement {
    /// Parses one requirement name; `rational-critical-and-inflexion`
    /// expands to two, and `none` to zero.
    pub fn parse_list(s: &str) -> Result<Vec<Requirement>> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "none" | "any" => return Ok(Vec::new()),
            "rational-critical-and-inflexion" => {
                return Ok(vec![
                    Requirement::RationalCritical,
                    Requirement::Inflexion { count: 1, integer: false },
                ])
            }
            _ => {}
        }
        s.parse().map(|r| vec![r])
    }
}

impl FromStr for Requirement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::parse(
                "requirement",
                format!(
                    "unknown requirement {s:?}; expected rational-critical, K-rational-critical, \
                     K-integer-critical, rational-inflexion, integer-inflexion, K-rational-inflexions, \
                     K-integer-inflexions, rational-critical-and-inflexion or none"
                ),
            )
        };
        let s = s.trim().to_ascii_lowercase();
        if s == "rational-critical" {
            return Ok(Requirement::RationalCritical);
        }
        let (count, rest) = match s.split_once('-') {
            Some((n, rest)) if n.chars().all(|c| c.is_ascii_digit()) => {
                (n.parse::<usize>().map_err(|_| bad())?, rest)
            }
            _ => (1, s.as_str()),
        };
        if count == 0 {
            return Err(bad());
        }
        let (kind, what) = rest.split_once('-').ok_or_else(bad)?;
        let integer = match kind {
            "rational" => false,
            "integer" => true,
            _ => return Err(bad()),
        };
        match what {
            "critical" => Ok(Requirement::Critical { count, integer }),
            "inflexion" | "inflexions" => Ok(Requirement::Inflexion { count, integer }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = |integer: bool| if integer { "integer" } else { "rational" };
        match *self {
            Requirement::RationalCritical => f.write_str("rational-critical"),
            Requirement::Critical { count, integer } => write!(f, "{count}-{}-critical", kind(integer)),
            Requirement::Inflexion { count: 1, integer } => write!(f, "{}-inflexion", kind(integer)),
            Requirement::Inflexion { count, integer } => write!(f, "{count}-{}-inflexions", kind(integer)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub bound: i64,
    pub requirements: Vec<Requirement>,
    pub jobs: usize,
}

fn sieve_passes(family: FamilyId, values: &[i64], reqs: &[Requirement]) -> bool {
    reqs.iter().all(|r| match *r {
        Requirement::RationalCritical => {
            let c = critical_coeffs_of(family, values);
            let c = c.as_slice();
            let deg = c.iter().rposition(|x| *x != 0).unwrap_or(0);
            deg >= 1 && may_have_rational_roots(c, deg, false)
        }
        Requirement::Critical { count, integer } => {
            may_have_rational_roots(critical_coeffs_of(family, values).as_slice(), count, integer)
        }
        Requirement::Inflexion { count, integer } => {
            may_have_rational_roots(inflexion_coeffs_of(family, values).as_slice(), count, integer)
        }
    })
}

fn distinct_hits(eq: &QPoly, integer: bool) -> Result<usize> {
    if eq.is_zero() || eq.is_constant() {
        return Ok(0);
    }
    Ok(rational_roots(eq)?.iter().filter(|(r, _)| !integer || r.is_integer()).count())
}

/// Decides the requirements from the symbolic derivatives of `f`.
pub(crate) fn meets(f: &QRatFunc, reqs: &[Requirement]) -> Result<bool> {
    let mut crit: Option<QPoly> = None;
    let mut infl: Option<QPoly> = None;
    for r in reqs {
        let ok = match *r {
            Requirement::RationalCritical => {
                let c = crit.get_or_insert_with(|| f.deriv_numerator());
                let deg = c.degree().unwrap_or(0);
                deg > 0 && rational_roots(c)?.iter().map(|x| x.1 as usize).sum::<usize>() == deg
            }
            Requirement::Critical { count, integer } => {
                distinct_hits(crit.get_or_insert_with(|| f.deriv_numerator()), integer)? >= count
            }
            Requirement::Inflexion { count, integer } => {
                distinct_hits(infl.get_or_insert_with(|| f.second_deriv_numerator()), integer)? >= count
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn accept(p: &FamilyParams, reqs: &[Requirement]) -> Result<bool> {
    if !sieve_passes(p.family, &p.values, reqs) || p.validate().is_err() {
        return Ok(false);
    }
    meets(&build(p)?, reqs)
}

/// Values `d` with `c^2 < 4d <= 4 bound`.
fn complex_d(c: i64, bound: i64) -> std::ops::RangeInclusive<i64> {
    (c * c / 4 + 1)..=bound
}

/// Calls `emit` for every candidate tuple with the given first coordinate.
fn enumerate(family: FamilyId, bound: i64, first: i64, emit: &mut dyn FnMut(&[i64])) {
    use FamilyId::*;
    let b = bound;
    let r = -b..=b;
    match family {
        R21Int | R12Int => {
            for y in first + 1..=b {
                emit(&[first, y]);
            }
        }
        R21Cplx => {
            for d in complex_d(first, b) {
                emit(&[first, d]);
            }
        }
        R12Cplx => {
            // d = e^2 with e up to the bound
            for e in 1..=b {
                if first * first < 4 * e * e {
                    emit(&[first, e * e]);
                }
            }
        }
        R22Int => {
            for y in first + 1..=b {
                for c in r.clone() {
                    emit(&[first, y, c]);
                }
            }
        }
        R22NumInt | R22DenInt | R31Cplx => {
            let cmax = ((4 * b) as f64).sqrt() as i64 + 1;
            for c in -cmax..=cmax {
                for d in complex_d(c, b) {
                    emit(&[first, c, d]);
                }
            }
        }
        R22Cplx => {
            let cmax = ((4 * b) as f64).sqrt() as i64 + 1;
            for bb in complex_d(first, b) {
                for c in -cmax..=cmax {
                    for d in complex_d(c, b) {
                        emit(&[first, bb, c, d]);
                    }
                }
            }
        }
        R31Int => {
            for y in first + 1..=b {
                for z in y + 1..=b {
                    emit(&[first, y, z]);
                }
            }
        }
        R32Int => {
            for y in first + 1..=b {
                for z in y + 1..=b {
                    for d in r.clone() {
                        emit(&[first, y, z, d]);
                    }
                }
            }
        }
        R23Rusin => {
            for c in r.clone() {
                emit(&[first, c]);
            }
        }
    }
}

fn first_coordinates(family: FamilyId, bound: i64) -> Vec<i64> {
    match family {
        // a^2 < 4b <= 4 bound
        FamilyId::R22Cplx => {
            let amax = ((4 * bound) as f64).sqrt() as i64 + 1;
            (-amax..=amax).filter(|a| a * a < 4 * bound).collect()
        }
        FamilyId::R21Cplx => {
            let cmax = ((4 * bound) as f64).sqrt() as i64 + 1;
            (-cmax..=cmax).filter(|c| c * c < 4 * bound && c.abs() <= bound).collect()
        }
        _ => (-bound..=bound).collect(),
    }
}

/// All in-domain tuples in the box meeting every requirement, ascending.
pub fn search(family: FamilyId, bound: i64, requirements: &[Requirement]) -> Result<Vec<FamilyParams>> {
    search_with(family, &SearchOptions { bound, requirements: requirements.to_vec(), jobs: 1 })
}

pub fn search_with(family: FamilyId, opts: &SearchOptions) -> Result<Vec<FamilyParams>> {
    if opts.bound < 1 {
        return Err(Error::Domain { family: family.to_string(), reason: "search bound must be at least 1".into() });
    }
    let firsts = first_coordinates(family, opts.bound);
    let jobs = opts.jobs.max(1).min(firsts.len().max(1));
    log::info!(
        "searching {family} over bound {} with {} first coordinates on {jobs} workers",
        opts.bound,
        firsts.len()
    );
    let worker = |slot: usize| -> Result<Vec<FamilyParams>> {
        let mut found = Vec::new();
        let mut failure = None;
        let (mut seen, mut sieved) = (0u64, 0u64);
        for first in firsts.iter().skip(slot).step_by(jobs) {
            enumerate(family, opts.bound, *first, &mut |vals| {
                if failure.is_some() {
                    return;
                }
                seen += 1;
                if !sieve_passes(family, vals, &opts.requirements) {
                    return;
                }
                sieved += 1;
                let p = FamilyParams { family, values: vals.to_vec() };
                match accept(&p, &opts.requirements) {
                    Ok(true) => found.push(p),
                    Ok(false) => {}
                    Err(e) => failure = Some(e),
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        }
        log::debug!("worker {slot}: {seen} tuples, {sieved} past the sieve, {} accepted", found.len());
        Ok(found)
    };
    let mut all = if jobs == 1 {
        worker(0)?
    } else {
        let parts: Vec<Result<Vec<FamilyParams>>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|slot| s.spawn(move || worker(slot))).collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        });
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        all
    };
    all.sort();
    all.dedup();
    log::info!("{family}: {} solutions", all.len());
    Ok(all)
}

/// Rows `(c, k, integer inflexions)` for `x/(x^2+cx+k^6)` with
/// `1 <= k <= kmax` and at least one integer inflexion point.
pub fn r12_cplx_sixth_power_table(kmax: i64) -> Result<Vec<(i64, i64, usize)>> {
    let mut rows = Vec::new();
    for k in 1..=kmax {
        let d = k.pow(6);
        let e = k.pow(3);
        for c in (-2 * e + 1)..(2 * e) {
            let p = FamilyParams { family: FamilyId::R12Cplx, values: vec![c, d] };
            let req = [Requirement::Inflexion { count: 1, integer: true }];
            if accept(&p, &req)? {
                let n = distinct_hits(&build(&p)?.second_deriv_numerator(), true)?;
                rows.push((c, k, n));
            }
        }
    }
    Ok(rows)
}
