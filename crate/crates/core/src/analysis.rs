//! Exact classification of the distinguished points of a rational function.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ratfunc::Warning;
use crate::roots::{isolate_real_roots, RootSet, DEFAULT_PRECISION};
use crate::{QPoly, QRatFunc, ShiftedFamily};

/// Distinct rational points, compared lexicographically: inflexions first,
/// then critical points, then zeros and poles together.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NicenessGrade {
    pub rational_inflexions: usize,
    pub rational_critical: usize,
    pub rational_zeros_poles: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealCounts {
    pub zeros: usize,
    pub poles: usize,
    pub critical: usize,
    pub inflexion: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub function: String,
    pub num: QPoly,
    pub den: QPoly,
    pub warnings: Vec<Warning>,
    pub zeros: RootSet,
    pub poles: RootSet,
    pub critical: RootSet,
    pub inflexion: RootSet,
    /// Primitive form of the reduced numerator of `R'`.
    pub critical_equation: QPoly,
    /// Primitive form of the reduced numerator of `R''`.
    pub inflexion_equation: QPoly,
    pub real_counts: RealCounts,
    pub grade: NicenessGrade,
    pub parametric_view: String,
}

fn roots_of(p: &QPoly, precision: u32) -> Result<RootSet> {
    if p.is_zero() {
        return Ok(RootSet::empty());
    }
    isolate_real_roots(p, precision)
}

pub fn analyze(r: &QRatFunc) -> Result<AnalysisReport> {
    analyze_with(r, Vec::new(), DEFAULT_PRECISION)
}

/// Full analysis; `warnings` from construction are carried into the report.
pub fn analyze_with(r: &QRatFunc, warnings: Vec<Warning>, precision: u32) -> Result<AnalysisReport> {
    let crit = r.deriv_numerator();
    let infl = r.second_deriv_numerator();
    let zeros = roots_of(r.num(), precision)?;
    let poles = roots_of(r.den(), precision)?;
    let critical = roots_of(&crit, precision)?;
    let inflexion = roots_of(&infl, precision)?;
    let real_counts = RealCounts {
        zeros: zeros.distinct_real_count(),
        poles: poles.distinct_real_count(),
        critical: critical.distinct_real_count(),
        inflexion: inflexion.distinct_real_count(),
    };
    let grade = NicenessGrade {
        rational_inflexions: inflexion.rational.len(),
        rational_critical: critical.rational.len(),
        rational_zeros_poles: zeros.rational.len() + poles.rational.len(),
    };
    let primitive = |p: &QPoly| if p.is_zero() { p.clone() } else { p.primitive() };
    Ok(AnalysisReport {
        function: r.to_string(),
        num: r.num().clone(),
        den: r.den().clone(),
        warnings,
        zeros,
        poles,
        critical,
        inflexion,
        critical_equation: primitive(&crit),
        inflexion_equation: primitive(&infl),
        real_counts,
        grade,
        parametric_view: ShiftedFamily::new(r, "n").to_text(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn r21_example() {
        let f = QRatFunc::new(QPoly::from_i64s(&[4, -5, 1]), QPoly::x()).unwrap();
        let a = analyze(&f).unwrap();
        assert_eq!(a.critical.rational_values(), vec![r(-2, 1), r(2, 1)]);
        assert_eq!(a.real_counts.inflexion, 0);
        assert_eq!(a.inflexion_equation, QPoly::from_i64s(&[1]));
        assert_eq!(a.grade.rational_zeros_poles, 3);
    }

    #[test]
    fn example_110() {
        let f = QRatFunc::new(QPoly::from_i64s(&[476280, 10566, 165, 1]), QPoly::from_i64s(&[0, 110, 1]))
            .unwrap();
        let a = analyze(&f).unwrap();
        assert_eq!(a.zeros.rational_values(), vec![r(-108, 1)]);
        assert_eq!(a.zeros.complex_pair_count, 1);
        assert_eq!(a.critical.rational_values(), vec![r(-126, 1), r(-90, 1), r(-70, 1), r(66, 1)]);
        assert_eq!(a.inflexion.irrational.len(), 1);
        assert_eq!(a.inflexion.irrational[0].approx, "-81.460991");
    }
}
