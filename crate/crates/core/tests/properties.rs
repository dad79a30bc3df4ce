//! Seed-fixed randomized checks of the algebraic identities the library
//! relies on. Each oracle is computed independently of the code under test.

use nicerat::families::{
    self, build, check, critical_equation, inflexion_equation, closed_form_discriminant, r22_general,
    r22_general_critical_discriminant, r22_general_inflexion_cubic, r22_general_inflexion_discriminant,
    r23_inflexion_poly, r32_general, r32_general_inflexion_discriminant, r32_real_critical_guarantee, FamilyId,
    FamilyParams,
};
use nicerat::roots::{cardano, count_real_roots, rational_roots};
use nicerat::{analyze, QPoly, QRatFunc, Rat};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_rat(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    r(rng.gen_range(-span..=span), rng.gen_range(1..=span))
}

fn rand_poly(rng: &mut ChaCha8Rng, deg: usize, span: i64) -> QPoly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-span..=span)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    QPoly::from_i64s(&c)
}

fn monic(p: &QPoly) -> QPoly {
    if p.is_zero() {
        p.clone()
    } else {
        p.monic()
    }
}

fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

#[test]
fn derivative_matches_difference_quotients() {
    let mut g = rng(1);
    let mut done = 0;
    while done < 100 {
        let (dn, dd) = (g.gen_range(0..=3), g.gen_range(1..=2));
        let Ok(f) = QRatFunc::new(rand_poly(&mut g, dn, 6), rand_poly(&mut g, dd, 6)) else {
            continue;
        };
        let x = rand_rat(&mut g, 5);
        // stay a unit away from every pole so the quotients behave
        let den = f.den();
        if den.degree().unwrap_or(0) > 0 {
            let chain = nicerat::roots::SturmChain::new(den).unwrap();
            if chain.count_between(&(&x - q(1)), &(&x + q(1))) > 0 {
                continue;
            }
        }
        let d1 = f.derivative().eval(&x).unwrap();
        let d2 = f.derivative().derivative().eval(&x).unwrap();
        let fx = f.eval(&x).unwrap();
        let mut last: Option<Rat> = None;
        for k in 1..=3u32 {
            let h = r(1, 10i64.pow(k));
            let quotient = (f.eval(&(&x + &h)).unwrap() - &fx) / &h;
            let err = (&quotient - &d1).abs();
            assert!(err <= q(10) * &h * (q(1) + d1.abs() + d2.abs()), "{f} at {x}, h={h}");
            if let Some(prev) = &last {
                assert!(err <= *prev, "{f} at {x}: error grew");
            }
            last = Some(err);
        }
        // the reduced numerator differs from num'den - num den' by a constant factor only
        let full = &(&f.num().derivative() * f.den()) - &(f.num() * &f.den().derivative());
        let expected = if full.is_zero() { full } else { QRatFunc::new(full, f.den().pow(2)).unwrap().num().clone() };
        assert_eq!(monic(&expected), monic(&f.deriv_numerator()));
        done += 1;
    }
}

#[test]
fn sturm_counts_match_constructed_roots() {
    let mut g = rng(2);
    for _ in 0..500 {
        let k = g.gen_range(0..=5);
        let mut roots: Vec<i64> = (0..k).map(|_| g.gen_range(-20..=20)).collect();
        let mut p = QPoly::from_i64s(&[1]);
        for &root in &roots {
            p = &p * &QPoly::from_i64s(&[-root, 1]);
        }
        // irreducible quadratic factors add no real roots
        for _ in 0..g.gen_range(0..=2) {
            let (b, extra) = (g.gen_range(-5..=5i64), g.gen_range(1..=20i64));
            p = &p * &QPoly::from_i64s(&[b * b + extra, 2 * b, 1]);
        }
        if p.is_constant() {
            continue;
        }
        roots.sort();
        roots.dedup();
        assert_eq!(count_real_roots(&p).unwrap(), roots.len(), "{p}");
        let found: Vec<Rat> = rational_roots(&p).unwrap().into_iter().map(|x| x.0).collect();
        assert_eq!(found, roots.iter().map(|&v| q(v)).collect::<Vec<_>>());
    }
}

#[test]
fn integer_root_cubics() {
    let mut g = rng(3);
    let mut done = 0;
    while done < 100 {
        let mut rs: Vec<i64> = (0..3).map(|_| g.gen_range(-50..=50)).collect();
        rs.sort();
        if rs[0] == rs[1] || rs[1] == rs[2] {
            continue;
        }
        let p = QPoly::from_roots(&rs.iter().map(|&v| q(v)).collect::<Vec<_>>());
        assert!(cardano(&p).unwrap().d.is_negative());
        assert_eq!(count_real_roots(&p).unwrap(), 3);
        let found: Vec<Rat> = rational_roots(&p).unwrap().into_iter().map(|x| x.0).collect();
        assert_eq!(found, rs.iter().map(|&v| q(v)).collect::<Vec<_>>());
        done += 1;
    }
}

#[test]
fn rational_roots_deflate_exactly() {
    let mut g = rng(4);
    for _ in 0..300 {
        let deg = g.gen_range(1..=3);
        let mut p = rand_poly(&mut g, deg, 8);
        for _ in 0..g.gen_range(0..=3) {
            p = &p * &QPoly::new(vec![-rand_rat(&mut g, 6), q(1)]);
        }
        let roots = rational_roots(&p).unwrap();
        let mut product = QPoly::from_i64s(&[1]);
        for (root, mult) in &roots {
            product = &product * &QPoly::new(vec![-root.clone(), q(1)]).pow(*mult);
        }
        let (rest, rem) = p.div_rem(&product).unwrap();
        assert!(rem.is_zero());
        assert!(rational_roots(&rest).unwrap().is_empty() || rest.is_constant());
        assert_eq!(monic(&(&rest * &product)), monic(&p));
    }
}

fn family_sample(family: FamilyId, g: &mut ChaCha8Rng, max_abs: i64) -> FamilyParams {
    families::audit::random_params(family, max_abs, g)
}

#[test]
fn closed_form_discriminants_match_cardano() {
    use FamilyId::*;
    let mut g = rng(5);
    for family in [R12Int, R12Cplx, R22Int, R22NumInt, R22DenInt, R22Cplx, R31Int, R32Int] {
        let mut done = 0;
        while done < 300 {
            let p = family_sample(family, &mut g, 60);
            let Some(closed) = closed_form_discriminant(&p) else {
                continue;
            };
            let eq = if closed.equation == "critical" { critical_equation(&p) } else { inflexion_equation(&p) };
            if eq.degree() != Some(3) {
                continue;
            }
            assert_eq!(closed.value, cardano(&eq).unwrap().d, "{p}");
            done += 1;
        }
    }
}

#[test]
fn general_r32_and_r22_discriminants_match_cardano() {
    let mut g = rng(6);
    let mut done = 0;
    while done < 300 {
        let (a, b, c, d, e) = (
            rand_rat(&mut g, 9),
            rand_rat(&mut g, 9),
            rand_rat(&mut g, 9),
            rand_rat(&mut g, 9),
            rand_rat(&mut g, 9),
        );
        let Ok(f) = r32_general(&a, &b, &c, &d, &e) else {
            continue;
        };
        let infl = f.second_deriv_numerator();
        let Some(closed) = r32_general_inflexion_discriminant(&a, &b, &c, &d, &e) else {
            continue;
        };
        assert_eq!(closed, cardano(&infl).unwrap().d);
        done += 1;
    }
    let mut done = 0;
    while done < 300 {
        let v: Vec<Rat> = (0..4).map(|_| rand_rat(&mut g, 9)).collect();
        let Ok(f) = r22_general(&v[0], &v[1], &v[2], &v[3]) else {
            continue;
        };
        let cubic = r22_general_inflexion_cubic(&v[0], &v[1], &v[2], &v[3]);
        let Some(closed) = r22_general_inflexion_discriminant(&v[0], &v[1], &v[2], &v[3]) else {
            continue;
        };
        assert_eq!(monic(&cubic), monic(&f.second_deriv_numerator()));
        assert_eq!(closed, cardano(&cubic).unwrap().d);
        done += 1;
    }
}

/// `B^2/4 - AC` for the quadratic `num' den - num den'`, built by hand.
fn critical_quarter_discriminant(num: &QPoly, den: &QPoly) -> Rat {
    let w = &(&num.derivative() * den) - &(num * &den.derivative());
    let (a, b, c) = (w.coeff(2), w.coeff(1), w.coeff(0));
    &b * &b / q(4) - a * c
}

#[test]
fn r22_critical_discriminant_identity() {
    let mut g = rng(7);
    for _ in 0..500 {
        let v: Vec<Rat> = (0..4).map(|_| rand_rat(&mut g, 12)).collect();
        let num = QPoly::from_roots(&v[..2]);
        let den = QPoly::from_roots(&v[2..]);
        assert_eq!(
            critical_quarter_discriminant(&num, &den),
            r22_general_critical_discriminant(&v[0], &v[1], &v[2], &v[3])
        );
    }
    // complex conjugate zeros: the product becomes |N(r)| |N(s)| > 0
    for _ in 0..300 {
        let (u, extra) = (rand_rat(&mut g, 12), r(g.gen_range(1..=50), g.gen_range(1..=7)));
        let v = &u * &u / q(4) + extra;
        let num = QPoly::new(vec![v, u, q(1)]);
        let (rr, s) = (rand_rat(&mut g, 12), rand_rat(&mut g, 12));
        if rr == s {
            continue;
        }
        let den = QPoly::from_roots(&[rr.clone(), s.clone()]);
        let value = critical_quarter_discriminant(&num, &den);
        assert_eq!(value, num.eval(&rr) * num.eval(&s));
        assert!(value.is_positive());
    }
    let f = r22_general(&q(2), &q(4), &q(1), &q(3)).unwrap();
    assert_eq!(count_real_roots(&f.deriv_numerator()).unwrap(), 0);
}

#[test]
fn reciprocal_critical_sets_agree() {
    let mut g = rng(8);
    let mut done = 0;
    while done < 300 {
        let (dn, dd) = (g.gen_range(1..=3), g.gen_range(1..=3));
        let Ok(f) = QRatFunc::strict(rand_poly(&mut g, dn, 9), rand_poly(&mut g, dd, 9)) else {
            continue;
        };
        let inv = f.reciprocal().unwrap();
        assert_eq!(monic(&f.deriv_numerator()), monic(&inv.deriv_numerator()), "{f}");
        done += 1;
    }
    let f = QRatFunc::new(QPoly::from_i64s(&[4, -5, 1]), QPoly::x()).unwrap();
    let inv = f.reciprocal().unwrap();
    assert_ne!(monic(&f.second_deriv_numerator()), monic(&inv.second_deriv_numerator()));
}

#[test]
fn reduction_is_idempotent() {
    let mut g = rng(9);
    let mut done = 0;
    while done < 300 {
        let (dn, dd, df) = (g.gen_range(0..=3), g.gen_range(0..=2), g.gen_range(0..=2));
        let (num, den) = (rand_poly(&mut g, dn, 9), rand_poly(&mut g, dd, 9));
        let Ok(base) = QRatFunc::new(num.clone(), den.clone()) else {
            continue;
        };
        let factor = rand_poly(&mut g, df, 5);
        let lifted = QRatFunc::new(&num * &factor, &den * &factor).unwrap();
        assert_eq!(lifted, base);
        done += 1;
    }
}

fn random_ratfunc() -> impl Strategy<Value = QRatFunc> {
    (prop::collection::vec(-9i64..=9, 2..=4), prop::collection::vec(-9i64..=9, 2..=3)).prop_filter_map(
        "reducible or zero",
        |(n, d)| QRatFunc::new(QPoly::from_i64s(&n), QPoly::from_i64s(&d)).ok().filter(|f| !f.num().is_zero()),
    )
}

proptest! {
    #![proptest_config(config(300, 10))]

    #[test]
    fn shift_moves_every_distinguished_point(f in random_ratfunc(), n in -30i64..=30) {
        let moved = f.shift(&q(n));
        let (a, b) = (analyze(&f).unwrap(), analyze(&moved).unwrap());
        let plus = |v: Vec<Rat>| v.into_iter().map(|x| x + q(n)).collect::<Vec<_>>();
        prop_assert_eq!(plus(a.zeros.rational_values()), b.zeros.rational_values());
        prop_assert_eq!(plus(a.poles.rational_values()), b.poles.rational_values());
        prop_assert_eq!(plus(a.critical.rational_values()), b.critical.rational_values());
        prop_assert_eq!(plus(a.inflexion.rational_values()), b.inflexion.rational_values());
        prop_assert_eq!(a.real_counts, b.real_counts);
        prop_assert_eq!(a.grade, b.grade);
        let mults = |s: &nicerat::roots::RootSet| s.rational.iter().map(|r| r.multiplicity).collect::<Vec<_>>();
        prop_assert_eq!(mults(&a.critical), mults(&b.critical));
        prop_assert_eq!(mults(&a.zeros), mults(&b.zeros));
    }

    #[test]
    fn shift_composes(f in random_ratfunc(), m in -20i64..=20, n in -20i64..=20) {
        prop_assert_eq!(f.shift(&q(m)).shift(&q(n)), f.shift(&q(m + n)));
    }
}

#[test]
fn r31_inequality_and_real_counts() {
    let mut g = rng(11);
    let mut done = 0;
    while done < 200 {
        let v: Vec<i64> = (0..3).map(|_| g.gen_range(1..=60)).collect();
        let Ok(p) = FamilyParams::new(FamilyId::R31Int, &v) else {
            continue;
        };
        let (a, b, c) = (q(v[0]), q(v[1]), q(v[2]));
        let s = &a + &b + &c;
        let predicts_three = &s * &s * &s / (&a * &b * &c) > q(27);
        let three = count_real_roots(&critical_equation(&p)).unwrap() == 3;
        assert_eq!(predicts_three, three, "{p}");
        done += 1;
    }
    let mut done = 0;
    while done < 200 {
        let p = family_sample(FamilyId::R31Int, &mut g, 60);
        let d = closed_form_discriminant(&p).unwrap().value;
        let count = count_real_roots(&critical_equation(&p)).unwrap();
        let expected = if d.is_negative() {
            3
        } else if d.is_positive() {
            1
        } else {
            count
        };
        assert_eq!(count, expected, "{p}");
        done += 1;
    }
}

#[test]
fn inflexion_count_trichotomy() {
    let mut g = rng(12);
    for (family, expected) in [(FamilyId::R22Cplx, 3), (FamilyId::R22DenInt, 1)] {
        let mut done = 0;
        while done < 100 {
            let p = family_sample(family, &mut g, 40);
            let eq = inflexion_equation(&p);
            if eq.degree() != Some(3) || cardano(&eq).unwrap().d.is_zero() {
                continue;
            }
            assert_eq!(count_real_roots(&eq).unwrap(), expected, "{p}");
            done += 1;
        }
    }
}

/// Splits `|v|` into a sixth-power-free part and a sixth root.
fn sixth_split(v: i64) -> (i64, i64) {
    let (mut n, mut alpha, mut s) = (v.abs(), 1i64, 1i64);
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        alpha *= p.pow(e % 6);
        s *= p.pow(e / 6);
        p += 1;
    }
    (alpha * n, s)
}

#[test]
fn r12_int_solutions_are_sextic_multiples() {
    let is_square = |v: i128| v >= 0 && {
        let r = (v as f64).sqrt().round() as i128;
        (r - 1..=r + 1).any(|k| k >= 0 && k * k == v)
    };
    let is_cube = |v: i128| {
        let r = (v as f64).cbrt().round() as i128;
        (r - 1..=r + 1).any(|k| k * k * k == v)
    };
    let mut solutions = 0;
    for a in -1000i64..=1000 {
        for b in (a + 1)..=1000 {
            if a == 0 || b == 0 {
                continue;
            }
            let (ai, bi) = (a as i128, b as i128);
            if !(is_square(ai * bi) && is_cube(ai * ai * bi)) {
                continue;
            }
            solutions += 1;
            let ((alpha_a, s), (alpha_b, t)) = (sixth_split(a), sixth_split(b));
            assert_eq!(alpha_a, alpha_b, "({a},{b})");
            assert_eq!(a.signum(), b.signum());
            assert_eq!(a.abs(), alpha_a * s.pow(6));
            assert_eq!(b.abs(), alpha_a * t.pow(6));
            let report = check(&FamilyParams::new(FamilyId::R12Int, &[a, b]).unwrap()).unwrap();
            assert!(report.all_required_satisfied());
            assert!(report.conditions.iter().all(|c| c.satisfied), "({a},{b})");
            assert!(report.rational_inflexion.holds);
        }
    }
    assert!(solutions > 0);
}

#[test]
fn closed_form_equations_match_derivatives() {
    let mut g = rng(13);
    for family in FamilyId::ALL {
        for _ in 0..100 {
            let p = family_sample(family, &mut g, 40);
            let f = build(&p).unwrap();
            assert_eq!(monic(&critical_equation(&p)), monic(&f.deriv_numerator()), "{p}");
            assert_eq!(monic(&inflexion_equation(&p)), monic(&f.second_deriv_numerator()), "{p}");
        }
    }
}

#[test]
fn r32_orderings_guarantee_four_real_critical_points() {
    let mut g = rng(14);
    let mut done = 0;
    while done < 150 {
        let mut v: Vec<i64> = (0..4).map(|_| g.gen_range(1..=60)).collect();
        v.sort();
        v.dedup();
        if v.len() < 4 {
            continue;
        }
        let values = match done % 3 {
            0 => vec![v[1], v[2], v[3], v[0]],
            1 => vec![v[0], v[1], v[2], v[3]],
            _ => vec![-v[3], -v[2], -v[1], -v[0]],
        };
        let Ok(p) = FamilyParams::new(FamilyId::R32Int, &values) else {
            continue;
        };
        let guarantee = r32_real_critical_guarantee(&p).unwrap();
        assert!(guarantee.guaranteed(), "{p}");
        assert_eq!(guarantee.real_critical, 4, "{p}");
        done += 1;
    }
}

#[test]
fn r23_sextic_matches_second_derivative() {
    let mut g = rng(15);
    let mut done = 0;
    while done < 300 {
        let (b, c) = (rand_rat(&mut g, 15), rand_rat(&mut g, 15));
        let Ok(sextic) = r23_inflexion_poly(&b, &c) else {
            continue;
        };
        let den = QPoly::new(vec![c.clone(), b.clone(), q(0), q(1)]);
        let Ok(f) = QRatFunc::strict(QPoly::from_i64s(&[-1, 0, 1]), den) else {
            continue;
        };
        assert_eq!(monic(&sextic), monic(&f.second_deriv_numerator()), "b={b}, c={c}");
        done += 1;
    }
    assert!(r23_inflexion_poly(&q(-1), &q(0)).is_err());
}

