//! Text, JSON, CSV and LaTeX renderings of the reports.

use std::fmt::Write as _;

use nicerat::analysis::AnalysisReport;
use nicerat::ec::{CriticalQuadruple, EcSearchReport, Presented, RusinForm};
use nicerat::families::audit::AuditReport;
use nicerat::families::{ConditionReport, FamilyId, FamilyParams, R32Guarantee};
use nicerat::roots::RootSet;
use nicerat::{QPoly, QRatFunc, Rat, ShiftedFamily};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "JSON",
            Format::Csv => "CSV",
            Format::Latex => "LaTeX",
        }
    }
}

/// The stable JSON wrapper around every payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    /// The arguments exactly as given.
    pub input: Vec<String>,
    pub notes: Vec<String>,
    pub payload: serde_json::Value,
}

impl Envelope {
    pub fn new(command: &str, input: Vec<String>, notes: Vec<String>, payload: serde_json::Value) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            tool: "nicerat".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input,
            notes,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("an envelope of JSON values always serializes")
    }
}

fn roots_line(s: &RootSet) -> String {
    let mut parts: Vec<String> = s
        .rational
        .iter()
        .map(|r| if r.multiplicity > 1 { format!("{} (x{})", r.value, r.multiplicity) } else { r.value.to_string() })
        .collect();
    parts.extend(s.irrational.iter().map(|r| format!("~{}", r.approx)));
    let mut out = if parts.is_empty() { "none real".to_string() } else { parts.join(", ") };
    if s.complex_pair_count > 0 {
        let _ = write!(out, "; {} complex pair{}", s.complex_pair_count, plural(s.complex_pair_count));
    }
    out
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn equation_line(p: &QPoly) -> String {
    if p.is_constant() {
        format!("{p} (no solutions)")
    } else {
        format!("{p} = 0")
    }
}

pub fn analysis_text(a: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "R(x) = {}", a.function);
    let _ = writeln!(out, "zeros:      {}", roots_line(&a.zeros));
    let _ = writeln!(out, "poles:      {}", roots_line(&a.poles));
    let _ = writeln!(out, "critical:   {}", roots_line(&a.critical));
    let _ = writeln!(out, "inflexion:  {}", roots_line(&a.inflexion));
    let _ = writeln!(out, "critical equation:  {}", equation_line(&a.critical_equation));
    let _ = writeln!(out, "inflexion equation: {}", equation_line(&a.inflexion_equation));
    let c = &a.real_counts;
    let _ = writeln!(
        out,
        "real: {} zero{}, {} pole{}, {} critical point{}, {} inflexion point{}",
        c.zeros,
        plural(c.zeros),
        c.poles,
        plural(c.poles),
        c.critical,
        plural(c.critical),
        c.inflexion,
        plural(c.inflexion)
    );
    let g = &a.grade;
    let _ = writeln!(
        out,
        "rational: {} inflexion, {} critical, {} zeros and poles",
        g.rational_inflexions, g.rational_critical, g.rational_zeros_poles
    );
    let _ = writeln!(out, "shifted by n: {}", a.parametric_view);
    for w in &a.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

pub fn latex_fraction(f: &QRatFunc, var: &str) -> String {
    format!("\\frac{{{}}}{{{}}}", f.num().display_in(var), f.den().display_in(var))
}

pub fn check_text(r: &ConditionReport, guarantee: Option<&R32Guarantee>, notes: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}: R(x) = {}", r.params.family, r.params, r.function);
    for c in &r.conditions {
        let mark = if c.satisfied { "holds" } else { "fails" };
        let role = match c.role {
            nicerat::families::ConditionRole::Required => "",
            nicerat::families::ConditionRole::Observed => " (observed)",
        };
        let _ = write!(out, "  {}{}: {} = {} {}", c.name, role, c.form, c.value, mark);
        if let Some(w) = &c.witness {
            let _ = write!(out, " (root {w})");
        }
        out.push('\n');
    }
    for d in &r.discriminants {
        let _ = write!(out, "  D of the {} cubic = {}", d.equation, d.cardano);
        if let Some(f) = &d.formula {
            let _ = write!(out, " [closed form {f}: {}]", if d.agrees { "agrees" } else { "DISAGREES" });
        }
        let _ = writeln!(out, "; {} real root{} certified", d.certified_real, plural(d.certified_real));
    }
    let _ = writeln!(out, "rational critical points: {}", if r.rational_critical.holds { "yes" } else { "no" });
    let _ = writeln!(out, "rational inflexion point: {}", if r.rational_inflexion.holds { "yes" } else { "no" });
    let g = &r.grade;
    let _ = writeln!(
        out,
        "rational: {} inflexion, {} critical, {} zeros and poles",
        g.rational_inflexions, g.rational_critical, g.rational_zeros_poles
    );
    if let Some(g) = guarantee {
        match &g.ordering {
            Some(o) => {
                let _ = writeln!(out, "ordering {o} guarantees 4 real critical points ({} found)", g.real_critical);
            }
            None => {
                let _ = writeln!(out, "no guaranteeing ordering; {} real critical points", g.real_critical);
            }
        }
    }
    for n in notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn search_text(id: FamilyId, bound: i64, reqs: &[String], found: &[FamilyParams]) -> String {
    let mut out = String::new();
    let req = if reqs.is_empty() { "none".to_string() } else { reqs.join(", ") };
    let _ = writeln!(out, "{id}, bound {bound}, requiring {req}: {} tuple{}", found.len(), plural(found.len()));
    for p in found {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn search_csv(id: FamilyId, found: &[FamilyParams]) -> String {
    let mut out = id.param_names().join(",");
    out.push('\n');
    for p in found {
        let row: Vec<String> = p.values.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn shifted_point(v: &Rat, sym: &str) -> String {
    if v.is_zero() {
        format!("z={sym}")
    } else if v.is_negative() {
        format!("z={sym}-{}", -v.clone())
    } else {
        format!("z={sym}+{v}")
    }
}

fn shifted_points(s: &RootSet, sym: &str) -> Vec<String> {
    let mut out: Vec<String> = s.rational.iter().map(|r| shifted_point(&r.value, sym)).collect();
    out.extend(s.irrational.iter().map(|r| format!("z~{sym}{}{}", if r.approx.starts_with('-') { "" } else { "+" }, r.approx)));
    out
}

fn narrative(kind: &str, one: &str, s: &RootSet, sym: &str) -> String {
    let pts = shifted_points(s, sym);
    match pts.len() {
        0 => format!("no real {kind}"),
        1 => format!("a single {one} at {}", pts[0]),
        _ => format!("{kind} at {}", pts.join(", ")),
    }
}

pub fn emit_text(
    p: &FamilyParams,
    shifted: &ShiftedFamily,
    base: &AnalysisReport,
    instance: Option<&QRatFunc>,
    shift: Option<i64>,
) -> String {
    let sym = &shifted.symbol;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}: y = {}", p.family, p, shifted.to_text());
    let _ = writeln!(
        out,
        "{}, {}, {}, {}",
        narrative("roots", "root", &base.zeros, sym),
        narrative("poles", "pole", &base.poles, sym),
        narrative("critical points", "critical point", &base.critical, sym),
        narrative("points of inflexion", "point of inflexion", &base.inflexion, sym),
    );
    if let (Some(f), Some(n)) = (instance, shift) {
        let _ = writeln!(out, "at {sym}={n}: y = {}", f.display_in("z"));
    }
    out
}

pub fn audit_text(r: &AuditReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {} samples (|values| <= {}, seed {}), {} with rational critical points, {} with a rational inflexion",
        r.family, r.samples, r.max_abs, r.seed, r.critical_hits, r.inflexion_hits
    );
    let _ = writeln!(out, "{} discrepancies, {} unexplained", r.discrepancies.len(), r.unexplained());
    for d in &r.discrepancies {
        let _ = write!(out, "  {} {}: conditions say {}, analysis says {}", d.params, d.aspect, d.check_says, d.analysis_says);
        if let Some(e) = &d.explanation {
            let _ = write!(out, " ({e})");
        }
        out.push('\n');
    }
    out
}

pub fn sixth_power_text(table: &[(i64, i64, usize)]) -> String {
    let mut out = String::from("R12_CPLX with d=k^6 and an integer inflexion point\n");
    for (c, k, n) in table {
        let _ = writeln!(out, "k={k} c={c}: {n} integer inflexion point{}", plural(*n));
    }
    out
}

pub fn sixth_power_csv(table: &[(i64, i64, usize)]) -> String {
    let mut out = String::from("c,k,integer_inflexions\n");
    for (c, k, n) in table {
        let _ = writeln!(out, "{c},{k},{n}");
    }
    out
}

fn candidate_lines(out: &mut String, presented: &Presented, a: &AnalysisReport) {
    let _ = writeln!(out, "    y = {}", presented.function);
    let _ = writeln!(out, "    zeros {}; poles {}", roots_line(&a.zeros), roots_line(&a.poles));
    let _ = writeln!(out, "    critical {}; inflexion {}", roots_line(&a.critical), roots_line(&a.inflexion));
}

pub fn ec_search_text(r: &EcSearchReport) -> String {
    let c = &r.curve;
    let cov = &r.coverage;
    let mut out = String::new();
    let _ = writeln!(out, "curve for (Y,Z)=({},{}): V^2 = U^3 + {} U^2 + {} U", c.y, c.z, c.a2, c.a4);
    let _ = writeln!(
        out,
        "exponent 2 certificate: seed identities {:?} on a {}x{} grid",
        r.certificate.identities, r.certificate.grid, r.certificate.grid
    );
    let _ = writeln!(
        out,
        "integer points with |U| <= {}: {} non-torsion, {} torsion; {} seed points",
        cov.point_bound, cov.integer_points, cov.torsion_points_found, cov.seed_points
    );
    let _ = writeln!(out, "generators ({} of at most {}):", cov.generators.len(), cov.max_generators);
    for g in &cov.generators {
        if g.label.contains('(') {
            let _ = writeln!(out, "  {}", g.label);
        } else {
            let _ = writeln!(out, "  {}: {}", g.label, g.point);
        }
    }
    if cov.complete() {
        let _ = writeln!(out, "every point found lies in the searched span ({} points)", cov.explained);
    } else {
        let _ = writeln!(
            out,
            "coverage incomplete: {} points outside the span of the kept generators",
            cov.unexplained.len()
        );
    }
    let _ = writeln!(out, "{} combinations", r.combinations);
    for (reason, n) in &r.skipped {
        let _ = writeln!(out, "  skipped {n}: {reason}");
    }
    let _ = writeln!(out, "{} candidate{}", r.candidates.len(), plural(r.candidates.len()));
    for cand in &r.candidates {
        let coeffs: Vec<String> = cand.coefficients.iter().map(|n| n.to_string()).collect();
        let _ = writeln!(
            out,
            "  [{}] + {}: X={}, b={}, c={}",
            coeffs.join(","),
            cand.torsion,
            cand.x_value,
            cand.form.b,
            cand.form.c
        );
        candidate_lines(&mut out, &cand.presented, &cand.analysis);
    }
    out
}

pub fn pq_text(
    p: i64,
    q: i64,
    quad: &CriticalQuadruple,
    form: &RusinForm,
    presented: &Presented,
    a: &AnalysisReport,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "(p,q)=({p},{q}): (X,Y,Z,W)=({},{},{},{})", quad.x, quad.y, quad.z, quad.w);
    let _ = writeln!(out, "quartic residue {}", quad.residue());
    let xs: Vec<String> = quad.critical_points().iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "critical points of the normal form: {}", xs.join(", "));
    let _ = writeln!(out, "normal form: b={}, c={}", form.b, form.c);
    let _ = writeln!(out, "presented with z = {} x + {}:", presented.map.scale, presented.map.offset);
    candidate_lines(&mut out, presented, a);
    out
}

pub fn verify_text(
    form: &RusinForm,
    quartic: &QPoly,
    own: &AnalysisReport,
    presented: Option<&Presented>,
    shown: Option<&AnalysisReport>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "y = {}", form.function());
    let _ = writeln!(out, "critical quartic: {quartic} = 0");
    let _ = writeln!(out, "critical:  {}", roots_line(&own.critical));
    let _ = writeln!(out, "zeros:     {}", roots_line(&own.zeros));
    let _ = writeln!(out, "inflexion: {}", roots_line(&own.inflexion));
    match (presented, shown) {
        (Some(p), Some(a)) => {
            let _ = writeln!(out, "presented with z = {} x + {}:", p.map.scale, p.map.offset);
            candidate_lines(&mut out, p, a);
        }
        _ => {
            let _ = writeln!(out, "no integer presentation within the scale bound");
        }
    }
    out
}
