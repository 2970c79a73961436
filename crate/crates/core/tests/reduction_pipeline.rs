use proptest::prelude::*;
use quintic::oracle::{aberth_roots, matched_distance};
use quintic::reduction::{back_map, principal_candidates, reduce, to_bring, to_bring_jerrard, to_principal};
use quintic::{numeric, solve, Method, NumericContext, Polynomial};
use rug::Complex;

fn ctx() -> NumericContext {
    NumericContext::default()
}

/// Points of the open unit disk from polar coordinates.
fn disk() -> impl Strategy<Value = (f64, f64)> {
    (0.0..0.999f64, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| (r * a.cos(), r * a.sin()))
}

fn monic(ctx: &NumericContext, c: &[(f64, f64)]) -> Polynomial {
    let mut coeffs: Vec<Complex> = c.iter().map(|&z| ctx.complex(z)).collect();
    coeffs.push(ctx.one());
    Polynomial::new(coeffs).unwrap()
}

/// Images of `p`'s oracle roots under `map` are roots of `image`.
fn forward_residual(p: &Polynomial, map: &Polynomial, image: &Polynomial, ctx: &NumericContext) -> f64 {
    aberth_roots(p, ctx)
        .unwrap()
        .iter()
        .map(|x| image.scaled_residual(&map.eval(x)))
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn round_trip_recovers_the_oracle_roots(c in prop::collection::vec(disk(), 5)) {
        let ctx = ctx();
        let p = monic(&ctx, &c);
        let chain = reduce(&p, &ctx).unwrap();
        let reduced = aberth_roots(&chain.reduced_polynomial(), &ctx).unwrap();
        let xs = back_map(&reduced, &chain, &ctx).unwrap();
        prop_assert!(matched_distance(&xs, &aberth_roots(&p, &ctx).unwrap()) < 1e-30);
    }

    #[test]
    fn every_stage_maps_roots_to_roots(c in prop::collection::vec(disk(), 5)) {
        let ctx = ctx();
        let p = monic(&ctx, &c);
        let first = to_principal(&p, &ctx).unwrap();
        let pq = first.form.polynomial();
        if let Some(q) = &first.map {
            prop_assert!(forward_residual(&p, &q.polynomial(), &pq, &ctx) < 1e-35);
        }
        let second = to_bring_jerrard(&first.form, &ctx).unwrap();
        let bj = second.form.polynomial();
        if let Some(q) = &second.map {
            prop_assert!(forward_residual(&pq, &q.polynomial(), &bj, &ctx) < 1e-30);
        }
        let (bring, lambda) = to_bring(&second.form, &ctx).unwrap();
        // x = λy turns x⁵ + A2x + B2 into λ⁵(y⁵ + y + t).
        let prec = ctx.prec();
        for x in aberth_roots(&bj, &ctx).unwrap() {
            let y = Complex::with_val(prec, &x / &lambda);
            prop_assert!(bring.polynomial().scaled_residual(&y) < 1e-35);
        }
    }

    #[test]
    fn both_signs_of_the_quadratic_stage_eliminate(c in prop::collection::vec(disk(), 5)) {
        let ctx = ctx();
        let p = monic(&ctx, &c);
        let candidates = principal_candidates(&p, &ctx).unwrap();
        prop_assert_eq!(candidates.len(), 2);
        for stage in candidates {
            let map = stage.map.unwrap().polynomial();
            prop_assert!(forward_residual(&p, &map, &stage.form.polynomial(), &ctx) < 1e-30);
        }
    }

    #[test]
    fn solver_satisfies_vieta(c in prop::collection::vec(disk(), 5)) {
        let ctx = ctx();
        let p = monic(&ctx, &c);
        let roots = solve(&p, Method::Bring, &ctx).unwrap().roots;
        let sum = roots.iter().fold(ctx.zero(), |acc, x| acc + x);
        let product = roots.iter().fold(ctx.one(), |acc, x| acc * x);
        // Monic quintic: Σx = -c4, Πx = -c0.
        prop_assert!(numeric::dist(&sum, &Complex::with_val(ctx.prec(), -&p.coeffs()[4])) < 1e-35);
        prop_assert!(numeric::dist(&product, &Complex::with_val(ctx.prec(), -&p.coeffs()[0])) < 1e-35);
    }
}

#[test]
fn known_roots_come_back_through_every_method() {
    let ctx = ctx();
    let roots: Vec<Complex> = [(0.5, 0.25), (-1.0, 2.0), (3.0, 0.0), (0.0, -1.5), (-2.0, -0.75)]
        .iter()
        .map(|&z| ctx.complex(z))
        .collect();
    let p = Polynomial::from_roots(&ctx, &roots);
    for method in [Method::Auto, Method::Bring, Method::Hermite, Method::Oracle] {
        let sol = solve(&p, method, &ctx).unwrap();
        assert!(matched_distance(&sol.roots, &roots) < 1e-30, "{method}");
    }
}

#[test]
fn higher_precision_carries_through() {
    let ctx = NumericContext::new(80).unwrap();
    let p = monic(&ctx, &[(0.3, -0.1), (0.0, 0.7), (-0.5, 0.0), (0.2, 0.2), (0.9, 0.0)]);
    let sol = solve(&p, Method::Bring, &ctx).unwrap();
    assert!(sol.report.max_residual() < 1e-70);
    assert!(matched_distance(&sol.roots, &aberth_roots(&p, &ctx).unwrap()) < 1e-70);
}

#[test]
fn repeated_roots_are_reached_with_reduced_accuracy() {
    // (x - 1)²(x³ + 2): the double root limits every method to ~√eps.
    let ctx = ctx();
    let double = Polynomial::from_roots(&ctx, &[ctx.one(), ctx.one()]);
    let cubic = Polynomial::new(vec![ctx.complex(2), ctx.zero(), ctx.zero(), ctx.one()]).unwrap();
    let p = double.mul(&cubic);
    let sol = solve(&p, Method::Auto, &ctx).unwrap();
    let near_one = sol.roots.iter().filter(|x| numeric::dist(x, &ctx.one()) < 1e-15).count();
    assert_eq!(near_one, 2);
}
