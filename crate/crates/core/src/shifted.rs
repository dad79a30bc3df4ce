//! One-parameter families obtained from a base function by `x = z - n`.

use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{QPoly, QRatFunc, Rat};

/// `base(z - n)` with `n` kept symbolic. Each coefficient of `z^k` is itself a
/// polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedFamily {
    pub base: QRatFunc,
    pub symbol: String,
    pub variable: String,
    pub num: Vec<QPoly>,
    pub den: Vec<QPoly>,
}

impl ShiftedFamily {
    pub fn new(base: &QRatFunc, symbol: &str) -> Self {
        ShiftedFamily {
            base: base.clone(),
            symbol: symbol.to_string(),
            variable: "z".to_string(),
            num: shifted_coeffs(base.num()),
            den: shifted_coeffs(base.den()),
        }
    }

    /// The concrete function at an integer (or rational) value of the parameter.
    pub fn instantiate(&self, n: &Rat) -> QRatFunc {
        let eval = |cs: &[QPoly]| QPoly::new(cs.iter().map(|c| c.eval(n)).collect());
        QRatFunc::new(eval(&self.num), eval(&self.den)).expect("shift keeps the denominator nonzero")
    }

    pub fn numerator_text(&self) -> String {
        render_shifted(&self.num, &self.variable, &self.symbol)
    }

    pub fn denominator_text(&self) -> String {
        render_shifted(&self.den, &self.variable, &self.symbol)
    }

    pub fn to_text(&self) -> String {
        format!("({})/({})", self.numerator_text(), self.denominator_text())
    }

    pub fn to_latex(&self) -> String {
        format!("\\frac{{{}}}{{{}}}", self.numerator_text(), self.denominator_text())
    }
}

// coefficient of z^k in p(z - n) = sum_j p_j C(j, k) (-n)^(j-k)
fn shifted_coeffs(p: &QPoly) -> Vec<QPoly> {
    let deg = match p.degree() {
        Some(d) => d,
        None => return Vec::new(),
    };
    (0..=deg)
        .map(|k| {
            let mut in_n = vec![Rat::zero(); deg - k + 1];
            for j in k..=deg {
                let sign = if (j - k) % 2 == 0 { Rat::one() } else { -Rat::one() };
                let c = p.coeff(j) * Rat::from_integer(binomial(j as u64, k as u64).into()) * sign;
                in_n[j - k] = c;
            }
            QPoly::new(in_n)
        })
        .collect()
}

fn term_count(p: &QPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Renders `sum_k c_k(n) z^k` the way the families are usually displayed:
/// `z^2-(2n+5)z+n^2+5n+4`, `z^2+(9-2n)z+n^2-9n+64`.
fn render_shifted(coeffs: &[QPoly], var: &str, sym: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let zpart = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let piece = if k == 0 {
            c.display_in(sym)
        } else if term_count(c) == 1 {
            let body = c.display_in(sym);
            match body.as_str() {
                "1" => zpart.clone(),
                "-1" => format!("-{zpart}"),
                _ => format!("{body}{zpart}"),
            }
        } else {
            let all_negative = c.coeffs().iter().all(|x| x.is_zero() || x.is_negative());
            let lead_negative = c.lead().is_some_and(|l| l.is_negative());
            if all_negative {
                format!("-({}){zpart}", (-c).display_in(sym))
            } else if lead_negative {
                format!("({}){zpart}", c.display_ascending_in(sym))
            } else {
                format!("({}){zpart}", c.display_in(sym))
            }
        };
        if !out.is_empty() && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
