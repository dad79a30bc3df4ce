//! Generator hunting on the curve, bounded linear combinations, and the
//! filter that turns curve points into presentable R32 candidates.

use std::collections::{BTreeMap, HashSet};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::curve::{exponent_certificate, CurvePoint, CurveSpec, ExponentCertificate};
use super::quartic::{w_quartic_solve, CriticalQuadruple};
use super::rusin::{present, Presented, RusinForm};
use crate::analysis::{analyze, AnalysisReport};
use crate::error::{Error, Result};
use crate::roots::rational_roots;
use crate::serde_util::rat_str;
use crate::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EcFilter {
    RationalZero,
    RationalInflexion,
    AnyNice,
}

impl FromStr for EcFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rational-zero" => Ok(EcFilter::RationalZero),
            "rational-inflexion" | "rational-inflection" => Ok(EcFilter::RationalInflexion),
            "any-nice" => Ok(EcFilter::AnyNice),
            _ => Err(Error::parse(
                "filter",
                format!("{s:?}; expected rational-zero, rational-inflexion or any-nice"),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub point: CurvePoint,
}

/// What the generator hunt saw and kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub point_bound: u64,
    /// Integer points of infinite-order candidates, both signs of `V`.
    pub integer_points: usize,
    pub torsion_points_found: usize,
    pub seed_points: usize,
    pub generators: Vec<Generator>,
    pub max_generators: usize,
    /// Found points lying in the searched span of the generators.
    pub explained: usize,
    /// Found points the span misses because the generator cap was reached.
    pub unexplained: Vec<String>,
    pub span_size: usize,
}

impl Coverage {
    pub fn complete(&self) -> bool {
        self.unexplained.is_empty()
    }
}

fn torsion_set(c: &CurveSpec) -> Vec<CurvePoint> {
    c.torsion_offsets()
}

/// All `n_1 G_1 + ... + n_m G_m + T` with `|n_i| <= range`.
fn span(c: &CurveSpec, gens: &[CurvePoint], range: i64) -> HashSet<CurvePoint> {
    let mut acc: HashSet<CurvePoint> = torsion_set(c).into_iter().collect();
    for g in gens {
        let multiples: Vec<CurvePoint> = (-range..=range).map(|n| c.scalar_mul(n, g)).collect();
        let mut next = HashSet::with_capacity(acc.len() * multiples.len());
        for p in &acc {
            for m in &multiples {
                next.insert(c.add(p, m));
            }
        }
        acc = next;
    }
    acc
}

/// Picks generators greedily from the seeds and the integer points, lowest
/// height first, adding a point only when the current span misses it.
pub fn hunt_generators(c: &CurveSpec, point_bound: u64, coeff_range: i64, max_generators: usize, jobs: usize) -> Coverage {
    let found = c.integer_point_search(point_bound, jobs);
    let torsion: HashSet<CurvePoint> = torsion_set(c).into_iter().collect();
    let torsion_points_found = found.iter().filter(|p| torsion.contains(*p)).count();
    let mut pool: Vec<(String, CurvePoint)> = c.seed_points();
    let seeds = pool.len();
    let seen: HashSet<CurvePoint> = pool.iter().map(|(_, p)| p.clone()).collect();
    let integer: Vec<CurvePoint> = found.into_iter().filter(|p| !torsion.contains(p)).collect();
    let integer_points = integer.len();
    for p in integer {
        if !seen.contains(&p) {
            pool.push((format!("integer point {p}"), p));
        }
    }
    pool.sort_by(|a, b| a.1.naive_height().cmp(&b.1.naive_height()).then_with(|| a.1.cmp(&b.1)));

    let mut gens: Vec<Generator> = Vec::new();
    let mut spanned = span(c, &[], coeff_range);
    let mut unexplained = Vec::new();
    let mut explained = 0;
    for (label, p) in pool {
        if spanned.contains(&p) {
            explained += 1;
            continue;
        }
        if gens.len() == max_generators {
            unexplained.push(label);
            continue;
        }
        log::debug!("generator {}: {label}", gens.len() + 1);
        gens.push(Generator { label, point: p });
        let points: Vec<CurvePoint> = gens.iter().map(|g| g.point.clone()).collect();
        spanned = span(c, &points, coeff_range);
        explained += 1;
    }
    Coverage {
        point_bound,
        integer_points,
        torsion_points_found,
        seed_points: seeds,
        span_size: 4 * (2 * coeff_range as usize + 1).pow(gens.len() as u32),
        generators: gens,
        max_generators,
        explained,
        unexplained,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub y: i64,
    pub z: i64,
    pub coefficients: Vec<i64>,
    /// `O` or the 2-torsion point added.
    pub torsion: String,
    pub point: CurvePoint,
    #[serde(with = "rat_str")]
    pub x_value: Rat,
    pub quadruple: CriticalQuadruple,
    pub form: RusinForm,
    pub presented: Presented,
    pub analysis: AnalysisReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombineReport {
    pub combinations: usize,
    /// Reason to count.
    pub skipped: BTreeMap<String, usize>,
    pub candidates: Vec<Candidate>,
}

fn passes(form: &RusinForm, filter: EcFilter) -> Result<bool> {
    let f = form.function();
    let zero = || -> Result<bool> { Ok(!rational_roots(f.num())?.is_empty()) };
    let infl = || -> Result<bool> {
        let p = f.second_deriv_numerator();
        Ok(!p.is_zero() && !rational_roots(&p)?.is_empty())
    };
    match filter {
        EcFilter::RationalZero => zero(),
        EcFilter::RationalInflexion => infl(),
        EcFilter::AnyNice => Ok(zero()? || infl()?),
    }
}

struct Found {
    index: usize,
    candidate: Candidate,
}

/// Quadruples for one `X`: every rational `W`, with all four entries scaled
/// to integers.
fn quadruples(c: &CurveSpec, x: &Rat) -> Vec<std::result::Result<CriticalQuadruple, String>> {
    let m = x.denom().clone();
    let (xi, yi, zi) = (x.numer().clone(), BigInt::from(c.y) * &m, BigInt::from(c.z) * &m);
    let ws = w_quartic_solve(&xi, &yi, &zi);
    if ws.is_empty() {
        return vec![Err("no rational W".into())];
    }
    ws.into_iter()
        .map(|w| {
            let k = w.denom().clone();
            CriticalQuadruple::new(&xi * &k, &yi * &k, &zi * &k, w.numer().clone())
                .map(|q| q.reduced())
                .map_err(|e| match e {
                    Error::Degenerate(msg) if msg.starts_with("W = 0") => "W = 0".to_string(),
                    _ => "critical points not distinct".to_string(),
                })
        })
        .collect()
}

/// Runs every coefficient vector in `[-range, range]^m` against every
/// torsion offset and keeps the forms passing `filter`, one per `(b, c)`.
pub fn combine_and_filter(
    c: &CurveSpec,
    gens: &[CurvePoint],
    coeff_range: i64,
    filter: EcFilter,
    jobs: usize,
) -> Result<CombineReport> {
    for g in gens {
        c.check(g)?;
    }
    if coeff_range < 1 {
        return Err(Error::Degenerate("coefficient range must be at least 1".into()));
    }
    let width = (2 * coeff_range + 1) as usize;
    let offsets = c.torsion_offsets();
    let multiples: Vec<Vec<CurvePoint>> =
        gens.iter().map(|g| (-coeff_range..=coeff_range).map(|n| c.scalar_mul(n, g)).collect()).collect();
    let per_offset = width.pow(gens.len() as u32);
    let total = per_offset * offsets.len();
    let jobs = jobs.max(1);

    let work = |slot: usize| -> (Vec<Found>, BTreeMap<String, usize>) {
        let mut found = Vec::new();
        let mut skipped: BTreeMap<String, usize> = BTreeMap::new();
        let mut skip = |r: &str| *skipped.entry(r.to_string()).or_default() += 1;
        let mut index = slot;
        while index < total {
            let (t, mut rest) = (index / per_offset, index % per_offset);
            let mut coefficients = Vec::with_capacity(gens.len());
            let mut q = offsets[t].clone();
            for mult in &multiples {
                let digit = rest % width;
                rest /= width;
                coefficients.push(digit as i64 - coeff_range);
                q = c.add(&q, &mult[digit]);
            }
            index += jobs;
            let Some(x) = c.x_map(&q) else {
                skip(if q.is_infinity() { "point at infinity" } else { "X undefined" });
                continue;
            };
            for quad in quadruples(c, &x) {
                let quad = match quad {
                    Ok(q) => q,
                    Err(reason) => {
                        skip(&reason);
                        continue;
                    }
                };
                let form = match quad.rusin_form() {
                    Ok(f) => f,
                    Err(Error::Degenerate(msg)) if msg.contains("singular") => {
                        skip("singular (b,c) system");
                        continue;
                    }
                    Err(_) => {
                        skip("b+c+1 = 0 or c-b-1 = 0");
                        continue;
                    }
                };
                match passes(&form, filter) {
                    Ok(true) => {}
                    Ok(false) => {
                        skip("filtered out");
                        continue;
                    }
                    Err(_) => {
                        skip("root classification failed");
                        continue;
                    }
                }
                let built = present(&form, None).and_then(|p| analyze(&p.function).map(|a| (p, a)));
                let (presented, analysis) = match built {
                    Ok(v) => v,
                    Err(e) => {
                        skip(&format!("presentation failed: {e}"));
                        continue;
                    }
                };
                let torsion = if t == 0 { "O".to_string() } else { offsets[t].to_string() };
                found.push(Found {
                    index: index - jobs,
                    candidate: Candidate {
                        y: c.y,
                        z: c.z,
                        coefficients: coefficients.clone(),
                        torsion,
                        point: q.clone(),
                        x_value: x.clone(),
                        quadruple: quad,
                        form,
                        presented,
                        analysis,
                    },
                });
            }
        }
        (found, skipped)
    };

    let parts: Vec<(Vec<Found>, BTreeMap<String, usize>)> = if jobs == 1 {
        vec![work(0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|slot| s.spawn(move || work(slot))).collect();
            handles.into_iter().map(|h| h.join().expect("combine worker panicked")).collect()
        })
    };
    let mut skipped: BTreeMap<String, usize> = BTreeMap::new();
    let mut found = Vec::new();
    for (f, s) in parts {
        found.extend(f);
        for (k, v) in s {
            *skipped.entry(k).or_default() += v;
        }
    }
    found.sort_by(|a, b| a.candidate.form.cmp(&b.candidate.form).then(a.index.cmp(&b.index)));
    let before = found.len();
    found.dedup_by(|a, b| a.candidate.form == b.candidate.form);
    if before > found.len() {
        skipped.insert("duplicate (b,c)".into(), before - found.len());
    }
    for (reason, n) in &skipped {
        log::debug!("skipped {n}: {reason}");
    }
    Ok(CombineReport { combinations: total, skipped, candidates: found.into_iter().map(|f| f.candidate).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcSearchOptions {
    pub coeff_range: i64,
    pub point_bound: u64,
    pub filter: EcFilter,
    pub jobs: usize,
    pub max_generators: usize,
}

impl Default for EcSearchOptions {
    fn default() -> Self {
        EcSearchOptions { coeff_range: 3, point_bound: 100_000, filter: EcFilter::AnyNice, jobs: 1, max_generators: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcSearchReport {
    pub curve: CurveSpec,
    pub certificate: ExponentCertificate,
    pub coverage: Coverage,
    pub combinations: usize,
    pub skipped: BTreeMap<String, usize>,
    pub candidates: Vec<Candidate>,
}

/// Generator hunt followed by the combination search.
pub fn ec_search(y: i64, z: i64, opts: &EcSearchOptions) -> Result<EcSearchReport> {
    let curve = CurveSpec::new(y, z)?;
    let coverage = hunt_generators(&curve, opts.point_bound, opts.coeff_range, opts.max_generators, opts.jobs);
    log::info!(
        "({y},{z}): {} integer points, {} generators, {} unexplained",
        coverage.integer_points,
        coverage.generators.len(),
        coverage.unexplained.len()
    );
    let gens: Vec<CurvePoint> = coverage.generators.iter().map(|g| g.point.clone()).collect();
    let combined = combine_and_filter(&curve, &gens, opts.coeff_range, opts.filter, opts.jobs)?;
    log::info!("{} combinations, {} candidates", combined.combinations, combined.candidates.len());
    Ok(EcSearchReport {
        curve,
        certificate: exponent_certificate(2),
        coverage,
        combinations: combined.combinations,
        skipped: combined.skipped,
        candidates: combined.candidates,
    })
}

