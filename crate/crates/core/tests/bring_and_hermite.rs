use proptest::prelude::*;
use quintic::bring::{all_roots, br, br_series, bring_polynomial, lambert_euler};
use quintic::hermite::{a_minimum, hermite_polynomial, hermite_root};
use quintic::oracle::{aberth_roots, matched_distance};
use quintic::{numeric, NumericContext};
use rug::Complex;

fn ctx() -> NumericContext {
    NumericContext::default()
}

/// `(radius, angle)` with the angle kept off the rays through branch points
/// when `clear` is set.
fn polar(max: f64, clear: bool) -> impl Strategy<Value = (f64, f64)> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(move |(r, a)| {
        let quarter = std::f64::consts::FRAC_PI_4;
        let off = (a / quarter).round() as i64 % 2 == 1 && ((a / quarter).round() * quarter - a).abs() < 0.05;
        (r, if clear && off { a + 0.1 } else { a })
    })
}

fn point(ctx: &NumericContext, (r, a): (f64, f64)) -> Complex {
    ctx.complex((r * a.cos(), r * a.sin()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn all_roots_match_the_oracle_and_vieta(z in polar(20.0, false)) {
        let ctx = ctx();
        let t = point(&ctx, z);
        let (roots, _) = all_roots(&t, &ctx).unwrap();
        let p = bring_polynomial(&t, &ctx);
        prop_assert!(matched_distance(&roots, &aberth_roots(&p, &ctx).unwrap()) < 1e-30);
        // x⁵ + x + t: Σx = 0 and Πx = -t.
        let sum = roots.iter().fold(ctx.zero(), |acc, x| acc + x);
        let prod = roots.iter().fold(ctx.one(), |acc, x| acc * x);
        prop_assert!(numeric::abs_f64(&sum) < 1e-35 * z.0.max(1.0));
        prop_assert!(numeric::dist(&prod, &Complex::with_val(ctx.prec(), -&t)) < 1e-34 * z.0.max(1.0));
    }

    #[test]
    fn conjugate_parameter_gives_conjugate_roots(z in polar(5.0, false)) {
        let ctx = ctx();
        let t = point(&ctx, z);
        let tc = Complex::with_val(ctx.prec(), t.conj_ref());
        let (a, _) = all_roots(&t, &ctx).unwrap();
        let (b, _) = all_roots(&tc, &ctx).unwrap();
        let conj: Vec<Complex> = a.iter().map(|x| Complex::with_val(ctx.prec(), x.conj_ref())).collect();
        prop_assert!(matched_distance(&conj, &b) < 1e-35);
    }

    #[test]
    fn series_agrees_with_the_lambert_route(z in polar(0.45, false)) {
        let ctx = ctx();
        let t = point(&ctx, z);
        let (series, _) = br_series(&t, &ctx).unwrap();
        // x = -t·w with w + t⁴w⁵ = 1: the (5, 1) trinomial series in a = t⁴.
        let a = numeric::powi(&t, 4);
        let w = lambert_euler(5, 1, &a, 1, &ctx).unwrap();
        let other = -Complex::with_val(ctx.prec(), &t * &w);
        prop_assert!(numeric::dist(&series, &other) < 1e-35);
    }

    #[test]
    fn continued_branch_is_the_root_that_vanishes_with_t(z in polar(10.0, true)) {
        let ctx = ctx();
        let t = point(&ctx, z);
        let x = br(&t, &ctx).unwrap();
        prop_assert!(bring_polynomial(&t, &ctx).scaled_residual(&x) < 1e-35);
        // Shrinking t along the ray must land on the small root continuously:
        // br(t) is the oracle root nearest br(0.98 t) once |t| is past the rim.
        let inner = Complex::with_val(ctx.prec(), &t * ctx.ratio(98, 100));
        let near = br(&inner, &ctx).unwrap();
        let oracle = aberth_roots(&bring_polynomial(&t, &ctx), &ctx).unwrap();
        let nearest = oracle.iter().min_by(|a, b| numeric::dist(a, &near).total_cmp(&numeric::dist(b, &near))).unwrap();
        prop_assert!(numeric::dist(nearest, &x) < 1e-30);
    }

    #[test]
    fn hermite_root_is_an_oracle_root(z in polar(6.0, false)) {
        let ctx = ctx();
        let a = point(&ctx, z);
        // Stay off the four double-root values |a| = a_min on the axes.
        let (_, a_min) = a_minimum(&ctx);
        prop_assume!((z.0 - a_min.to_f64()).abs() > 0.02);
        let x = hermite_root(&a, &ctx).unwrap().x;
        let p = hermite_polynomial(&a, &ctx);
        prop_assert!(p.scaled_residual(&x) < 1e-35);
        let oracle = aberth_roots(&p, &ctx).unwrap();
        prop_assert!(oracle.iter().any(|y| numeric::dist(y, &x) < 1e-30));
    }
}

#[test]
fn real_bring_roots_come_in_conjugate_pairs() {
    let ctx = ctx();
    let (roots, _) = all_roots(&ctx.complex(3), &ctx).unwrap();
    let real = roots.iter().filter(|x| x.imag().to_f64().abs() < 1e-35).count();
    assert_eq!(real, 1);
    let x = br(&ctx.complex(3), &ctx).unwrap();
    assert!(x.imag().to_f64().abs() < 1e-35 && x.real().to_f64() < 0.0);
}
