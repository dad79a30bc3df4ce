//! Cheap necessary conditions for rational roots, used to prune searches
//! before any exact work. A polynomial with `k` rational roots has, after the
//! usual monic rescaling, `k` integer roots and so at least `k` linear
//! factors modulo every prime.

use std::sync::OnceLock;

const PRIMES: [i128; 10] = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// For each prime, the number of roots (with multiplicity) of every monic
/// cubic `y^3 + g2 y^2 + g1 y + g0`, indexed by `g0 + p g1 + p^2 g2`.
fn cubic_tables() -> &'static Vec<Vec<u8>> {
    static TABLES: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    TABLES.get_or_init(|| {
        PRIMES
            .iter()
            .map(|&p| {
                let n = p as usize;
                let mut t = vec![0u8; n * n * n];
                for g2 in 0..p {
                    for g1 in 0..p {
                        for g0 in 0..p {
                            let poly = vec![g0, g1, g2, 1];
                            let k = (1..=3).rev().find(|&k| linear_factors_at_least(poly.clone(), p, k)).unwrap_or(0);
                            t[(g0 + p * g1 + p * p * g2) as usize] = k as u8;
                        }
                    }
                }
                t
            })
            .collect()
    })
}

fn linear_factors_at_least(mut poly: Vec<i128>, p: i128, k: usize) -> bool {
    while poly.last() == Some(&0) {
        poly.pop();
    }
    if poly.is_empty() {
        return true;
    }
    for _ in 0..k {
        if poly.len() < 2 {
            return false;
        }
        let eval = |s: i128| poly.iter().rev().fold(0i128, |acc, c| (acc * s + c) % p);
        let root = match (0..p).find(|&s| eval(s) == 0) {
            Some(r) => r,
            None => return false,
        };
        // synthetic division by (x - root)
        let n = poly.len() - 1;
        let mut quot = vec![0i128; n];
        let mut carry = 0i128;
        for i in (0..n).rev() {
            carry = (poly[i + 1] + carry * root) % p;
            quot[i] = carry;
        }
        poly = quot;
        while poly.last() == Some(&0) {
            poly.pop();
        }
        if poly.is_empty() {
            return true;
        }
    }
    true
}

/// `false` only when `f` (integer coefficients, low to high) provably has
/// fewer than `k` rational roots counted with multiplicity, or fewer than `k`
/// integer roots when `integer_only` is set.
pub(crate) fn may_have_rational_roots(f: &[i128], k: usize, integer_only: bool) -> bool {
    let n = f.iter().rposition(|c| *c != 0).map_or(0, |i| i + 1);
    let f = &f[..n];
    if f.is_empty() {
        return true;
    }
    let deg = f.len() - 1;
    if deg < k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if deg == 2 && !integer_only {
        // exact: both roots are rational iff the discriminant is a square
        let disc = f[1].checked_mul(f[1]).zip(f[2].checked_mul(f[0]).and_then(|x| x.checked_mul(4)));
        return match disc.and_then(|(a, b)| a.checked_sub(b)) {
            Some(d) => super::power::is_square_i128(d).is_some(),
            None => true,
        };
    }
    let lead = f[deg];
    if deg == 3 && !integer_only {
        let tables = cubic_tables();
        if f.iter().all(|c| c.unsigned_abs() < 1 << 60) {
            let g: [i64; 4] = [f[0] as i64, f[1] as i64, f[2] as i64, f[3] as i64];
            return PRIMES.iter().zip(tables).all(|(&p, table)| {
                let p = p as i64;
                let a = g[3].rem_euclid(p);
                let g2 = g[2].rem_euclid(p);
                let g1 = g[1].rem_euclid(p) * a % p;
                let g0 = g[0].rem_euclid(p) * (a * a % p) % p;
                table[(g0 + p * g1 + p * p * g2) as usize] as usize >= k
            });
        }
        return PRIMES.iter().zip(tables).all(|(&p, table)| {
            let a = lead.rem_euclid(p);
            let g2 = f[2].rem_euclid(p);
            let g1 = f[1].rem_euclid(p) * a % p;
            let g0 = f[0].rem_euclid(p) * (a * a % p) % p;
            table[(g0 + p * g1 + p * p * g2) as usize] as usize >= k
        });
    }
    PRIMES.iter().all(|&p| {
        let reduced: Vec<i128> = if integer_only {
            f.iter().map(|c| c.rem_euclid(p)).collect()
        } else {
            // g(y) = lead^(deg-1) f(y / lead) is monic with integer roots lead * r
            let a = lead.rem_euclid(p);
            let mut g = vec![0i128; deg + 1];
            g[deg] = 1;
            let mut apow = 1i128;
            for i in (0..deg).rev() {
                g[i] = (f[i].rem_euclid(p) * apow) % p;
                apow = (apow * a) % p;
            }
            g
        };
        linear_factors_at_least(reduced, p, k)
    })
}
