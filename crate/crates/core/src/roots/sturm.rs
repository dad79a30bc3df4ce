//! Exact real-root counting and isolation with Sturm chains.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{QPoly, Rat};

/// Integer coefficients, low to high, evaluated by sign only.
#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Positive multiple of `p` with coprime integer coefficients.
    pub(crate) fn from_poly(p: &QPoly) -> Self {
        let mut coeffs = p.primitive_integer_coeffs();
        if p.lead().is_some_and(|l| l.is_negative()) {
            for c in &mut coeffs {
                *c = -c.clone();
            }
        }
        IntPoly { coeffs }
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn lead(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// `q^deg * p(num/q)`, which has the sign of `p` at the point since `q > 0`.
    fn homogeneous_value(&self, x: &Rat) -> BigInt {
        let (p, q) = (x.numer(), x.denom());
        let n = self.degree();
        let mut acc = self.coeffs[n].clone();
        let mut qpow = BigInt::one();
        for i in (0..n).rev() {
            qpow *= q;
            acc = acc * p + &self.coeffs[i] * &qpow;
        }
        acc
    }

    pub(crate) fn sign_at(&self, x: &Rat) -> Ordering {
        match self.homogeneous_value(x).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    fn sign_at_infinity(&self, positive: bool) -> Ordering {
        let lead_pos = self.lead().is_positive();
        let odd = self.degree() % 2 == 1;
        if lead_pos == (positive || !odd) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` of a nonzero polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![IntPoly::from_poly(p)];
        let mut a = QPoly::from_bigints(&chain[0].coeffs);
        let mut b = a.derivative();
        while !b.is_zero() {
            let ib = IntPoly::from_poly(&b);
            let nb = QPoly::from_bigints(&ib.coeffs);
            chain.push(ib);
            let (_, r) = a.div_rem(&nb)?;
            a = nb;
            b = -r;
        }
        Ok(SturmChain { chain })
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_between(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// All distinct real roots.
    pub fn count_all(&self) -> usize {
        let neg = Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(false)));
        let pos = Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(true)));
        neg.saturating_sub(pos)
    }
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &QPoly) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_all())
}

/// A power of two strictly larger than every root's absolute value.
pub fn root_bound(p: &QPoly) -> Rat {
    let lead = match p.lead() {
        Some(l) if p.degree() != Some(0) => l.abs(),
        _ => return Rat::one(),
    };
    let deg = p.degree().unwrap();
    let cauchy = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rat::zero(), |m, c| if c > m { c } else { m })
        + Rat::one();
    let mut b = Rat::one();
    while b <= cauchy {
        b *= Rat::from_integer(2.into());
    }
    b
}

/// Disjoint half-open intervals `(lo, hi]`, one per distinct real root,
/// in increasing order.
pub fn isolate(p: &QPoly) -> Result<Vec<(Rat, Rat)>> {
    let sq = p.squarefree_part()?;
    if sq.is_constant() {
        return Ok(Vec::new());
    }
    let sturm = SturmChain::new(&sq)?;
    let b = root_bound(&sq);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b, sturm.count_all())];
    let two = Rat::from_integer(2.into());
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = sturm.count_between(&lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// What refinement of a single-root interval established.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Refined {
    Exact(Rat),
    Interval(Rat, Rat),
}

/// Narrows `(lo, hi]`, known to hold exactly one root of the square-free
/// `f`, until its width is below `width` or the root is hit exactly.
pub(crate) fn refine(
    f: &IntPoly,
    sturm: &SturmChain,
    mut lo: Rat,
    mut hi: Rat,
    width: &Rat,
) -> Refined {
    if f.sign_at(&hi) == Ordering::Equal {
        return Refined::Exact(hi);
    }
    let two = Rat::from_integer(2.into());
    let mut sign_lo = match f.sign_at(&lo) {
        Ordering::Equal => None,
        s => Some(s),
    };
    while &(&hi - &lo) >= width {
        let mid = (&lo + &hi) / &two;
        let sm = f.sign_at(&mid);
        if sm == Ordering::Equal {
            return Refined::Exact(mid);
        }
        let root_left = match sign_lo {
            Some(sl) => sl != sm,
            None => sturm.count_between(&lo, &mid) == 1,
        };
        if root_left {
            hi = mid;
        } else {
            lo = mid;
            sign_lo = Some(sm);
        }
    }
    Refined::Interval(lo, hi)
}
