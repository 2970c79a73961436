//! Roots of the Bring quintic `x⁵ + x + t = 0`.
//!
//! The Bring radical `BR(t)` is the root analytic at `t = 0` with
//! `BR(0) = 0`, given near the origin by
//! `-t · ₄F₃(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; -3125t⁴/256)`. The series
//! converges for `|t| < 4·5^{-5/4} ≈ 0.535`; beyond that the root is tracked
//! along the ray from the origin with predictor–corrector steps.

use rug::{Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::oracle;
use crate::poly::Polynomial;
use crate::reduction::solve_quartic;
use crate::special::{negligible, series_threshold, MAX_TERMS, SAFETY_TERMS};

/// Pure-series mode is used up to this `|t|`.
pub const SERIES_RADIUS: f64 = 0.5;
/// Where continuation starts along the ray towards `t`.
const CONTINUATION_START: f64 = 0.4;
const MAX_CONTINUATION_STEPS: usize = 20_000;
const CORRECTOR_STEPS: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootMethod {
    Series,
    NestedRadical,
    PolishedContinuation,
    /// Newton from five starts (fallback when continuation fails).
    MultiStartNewton,
    /// Simultaneous iteration on the whole quintic (fallback only).
    Simultaneous,
}

impl std::fmt::Display for RootMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RootMethod::Series => "series",
            RootMethod::NestedRadical => "nested-radical",
            RootMethod::PolishedContinuation => "polished-continuation",
            RootMethod::MultiStartNewton => "multi-start-newton",
            RootMethod::Simultaneous => "simultaneous",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesDiagnostics {
    /// Series terms, or continuation steps for [`RootMethod::PolishedContinuation`].
    pub terms_used: usize,
    pub converged: bool,
    pub method: RootMethod,
}

/// `4·5^{-5/4}`, the modulus of the four branch points of `BR`.
pub fn branch_radius(ctx: &NumericContext) -> Float {
    let five = ctx.real(5);
    let quarter: Float = five.clone().sqrt().sqrt();
    ctx.real(4) / (five * quarter)
}

/// The branch points `t_j = 4·5^{-5/4} e^{iπ(2j+1)/4}`, where `BR` meets
/// another root.
fn branch_points(ctx: &NumericContext) -> Vec<Complex> {
    let rho = branch_radius(ctx);
    (0..4)
        .map(|j| ctx.unit_root(2 * j + 1, 4) * &rho)
        .collect()
}

/// `x⁵ + x + t`.
pub fn bring_polynomial(t: &Complex, ctx: &NumericContext) -> Polynomial {
    let mut c = vec![Complex::with_val(ctx.prec(), t), ctx.one()];
    c.extend((0..3).map(|_| ctx.zero()));
    c.push(ctx.one());
    Polynomial::new(c).expect("monic")
}

/// The hypergeometric series for `BR(t)`; requires `|t| ≤ 4·5^{-5/4}`
/// (convergence is only geometric below that).
pub fn br_series(t: &Complex, ctx: &NumericContext) -> Result<(Complex, SeriesDiagnostics)> {
    let prec = ctx.prec();
    if numeric::abs(t) >= branch_radius(ctx) {
        return Err(Error::Divergence(format!(
            "Bring series diverges at |t| = {} ≥ 4·5^(-5/4)",
            numeric::abs_f64(t)
        )));
    }
    let z = -(numeric::powi(t, 4) * 3125u32) / 256u32;
    let threshold = series_threshold(ctx);
    let mut term = ctx.one();
    let mut sum = ctx.one();
    let mut quiet = 0;
    // term_{n+1}/term_n = Π(n + a_i) / (Π(n + b_j) (n + 1)) · z with
    // a = 1/5..4/5 and b = 1/2, 3/4, 5/4; written over integers.
    for n in 0..MAX_TERMS as u64 {
        let num = (5 * n + 1) * (5 * n + 2) * (5 * n + 3) * (5 * n + 4);
        let den = (2 * n + 1) * (4 * n + 3) * (4 * n + 5) * (n + 1);
        // num / 5⁴ over den / (2·4·4) = num·32 / (625·den)
        term *= &z;
        term *= Float::with_val(prec, num * 32) / Float::with_val(prec, den * 625);
        sum += &term;
        if negligible(&term, &sum, &threshold) {
            quiet += 1;
            if quiet > SAFETY_TERMS {
                let diag = SeriesDiagnostics {
                    terms_used: n as usize + 1,
                    converged: true,
                    method: RootMethod::Series,
                };
                return Ok((-(sum * t), diag));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Divergence("Bring series did not settle".into()))
}

/// `BR(t)`: the root of `x⁵ + x + t` analytic at the origin.
pub fn br(t: &Complex, ctx: &NumericContext) -> Result<Complex> {
    br_with_diagnostics(t, ctx).map(|(x, _)| x)
}

pub fn br_with_diagnostics(t: &Complex, ctx: &NumericContext) -> Result<(Complex, SeriesDiagnostics)> {
    if numeric::abs_f64(t) <= SERIES_RADIUS {
        let (x, diag) = br_series(t, ctx)?;
        let p = bring_polynomial(t, ctx);
        let polished = newton_polish(&p, &x, 8, ctx)?;
        return Ok((polished.x, diag));
    }
    continue_along_ray(t, ctx)
}

/// Track the analytic root from `0.4·t/|t|` out to `t`. Steps are capped
/// at `0.1·max(1, |t_cur|)` and at a quarter of the distance to the nearest
/// branch point; each step is an Euler predictor plus a Newton corrector
/// that must stay close to the prediction.
fn continue_along_ray(t: &Complex, ctx: &NumericContext) -> Result<(Complex, SeriesDiagnostics)> {
    let prec = ctx.prec();
    let abs_t = numeric::abs(t);
    let dir = Complex::with_val(prec, t / &abs_t);
    let start = Complex::with_val(prec, &dir * CONTINUATION_START);
    let (mut x, _) = br_series(&start, ctx)?;
    let branches = branch_points(ctx);
    let mut s = ctx.real(CONTINUATION_START);
    let mut steps = 0;
    while s < abs_t {
        steps += 1;
        if steps > MAX_CONTINUATION_STEPS {
            return Err(Error::Continuation(format!(
                "no arrival at t = {} after {MAX_CONTINUATION_STEPS} steps; use all_roots",
                numeric::complex_to_string(t, 12)
            )));
        }
        let here = Complex::with_val(prec, &dir * &s);
        let near = branches
            .iter()
            .map(|b| numeric::dist(b, &here))
            .fold(f64::INFINITY, f64::min);
        let mut h = (0.1 * s.to_f64().max(1.0)).min(0.25 * near);
        if h < 1e-12 {
            return Err(Error::Continuation(format!(
                "path to t = {} runs through a branch point of the Bring radical; use all_roots",
                numeric::complex_to_string(t, 12)
            )));
        }
        let remaining = Float::with_val(prec, &abs_t - &s).to_f64();
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        let next_s = if last { abs_t.clone() } else { Float::with_val(prec, &s + h) };
        let next_t = Complex::with_val(prec, &dir * &next_s);
        // dx/dt = -1/(5x⁴ + 1)
        let slope = -(Complex::with_val(prec, numeric::powi(&x, 4) * 5u32) + 1u32).recip();
        let dt = Complex::with_val(prec, &next_t - &here);
        let pred = Complex::with_val(prec, &x + slope * &dt);
        let corrected = correct(&pred, &next_t, ctx)?;
        let jump = numeric::dist(&corrected, &pred);
        let spacing = 0.5 * numeric::abs_f64(&x).max(0.05);
        if jump > spacing {
            return Err(Error::Continuation(format!(
                "corrector left the tracked root near t = {}",
                numeric::complex_to_string(&next_t, 12)
            )));
        }
        x = corrected;
        s = next_s;
    }
    let p = bring_polynomial(t, ctx);
    let polished = newton_polish(&p, &x, 8, ctx)?;
    Ok((
        polished.x,
        SeriesDiagnostics {
            terms_used: steps,
            converged: polished.converged,
            method: RootMethod::PolishedContinuation,
        },
    ))
}

fn correct(x0: &Complex, t: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let mut x = x0.clone();
    for _ in 0..CORRECTOR_STEPS {
        let x4 = numeric::powi(&x, 4);
        let f = Complex::with_val(prec, &x4 * &x) + &x + t;
        let df = Complex::with_val(prec, &x4 * 5u32) + 1u32;
        if numeric::is_zero(&df) {
            return Err(Error::Continuation("corrector hit a critical point".into()));
        }
        let dx = f / df;
        x -= &dx;
        if numeric::abs_f64(&dx) <= ctx.eps() * numeric::abs_f64(&x).max(1.0) {
            return Ok(x);
        }
    }
    Ok(x)
}

/// `xⁿ` for the root of `a q x^p + x^q = 1` analytic at `a = 0`, by the
/// Lambert–Euler series
/// `xⁿ = (n/q) Σ_k Γ((n+pk)/q) (-qa)^k / (Γ((n+pk)/q - k + 1) k!)`.
///
/// The Gamma ratio is formed from log-Gamma; a denominator at a Gamma pole
/// makes the term vanish.
pub fn lambert_euler(p: u32, q: u32, a: &Complex, n: u32, ctx: &NumericContext) -> Result<Complex> {
    if p == 0 || q == 0 || n == 0 {
        return Err(Error::Domain("Lambert–Euler series needs p, q, n ≥ 1".into()));
    }
    let prec = ctx.prec();
    let threshold = series_threshold(ctx);
    let mqa = Complex::with_val(prec, a * q) * -1i32;
    let mut power = ctx.one();
    let mut sum = ctx.zero();
    let mut quiet = 0;
    let mut growth = 0;
    let mut prev_abs = Float::with_val(prec, 0);
    for k in 0..MAX_TERMS as u64 {
        let num_arg = ctx.real(n as u64 + p as u64 * k) / q;
        let den_arg = Float::with_val(prec, &num_arg - k) + 1u32;
        let at_pole = den_arg <= 0 && den_arg.is_integer();
        if !at_pole {
            let (ln_num, s_num) = Float::with_val(prec, &num_arg).ln_abs_gamma();
            let (ln_den, s_den) = den_arg.clone().ln_abs_gamma();
            let (ln_fact, _) = ctx.real(k + 1).ln_abs_gamma();
            let mag = (ln_num - ln_den - ln_fact).exp();
            let negative = (s_num == std::cmp::Ordering::Less) != (s_den == std::cmp::Ordering::Less);
            let term = Complex::with_val(prec, &power * &mag);
            let term = if negative { -term } else { term };
            sum += &term;
            let ta = numeric::abs(&term);
            if negligible(&term, &sum, &threshold) {
                quiet += 1;
                if quiet > SAFETY_TERMS {
                    return Ok(sum * n / q);
                }
            } else {
                quiet = 0;
            }
            if k > 16 && ta > prev_abs {
                growth += 1;
                if growth > 64 {
                    return Err(Error::Divergence(format!(
                        "Lambert–Euler series diverges for (p, q) = ({p}, {q}) at |a| = {}",
                        numeric::abs_f64(a)
                    )));
                }
            } else {
                growth = 0;
            }
            prev_abs = ta;
        }
        power *= &mqa;
        if numeric::is_zero(&power) {
            return Ok(sum * n / q);
        }
    }
    Err(Error::Divergence("Lambert–Euler series did not settle".into()))
}

/// Fixed point of `x ← (-B - A x)^{1/5}` (principal fifth root), a root of
/// `x⁵ + A x + B` when the iteration converges.
pub fn nested_radical(a: &Complex, b: &Complex, max_iter: usize, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let mut x = numeric::nth_root(&Complex::with_val(prec, -b), 5);
    for _ in 0..max_iter {
        let next = numeric::nth_root(&(-Complex::with_val(prec, a * &x) - b), 5);
        let step = numeric::dist(&next, &x);
        x = next;
        if step <= ctx.eps() * numeric::abs_f64(&x).max(1.0) {
            let mut c = vec![Complex::with_val(prec, b), Complex::with_val(prec, a)];
            c.extend((0..3).map(|_| ctx.zero()));
            c.push(ctx.one());
            let p = Polynomial::new(c).expect("monic");
            if p.scaled_residual(&x) < ctx.tol() {
                return Ok(x);
            }
            break;
        }
    }
    Err(Error::Convergence(format!(
        "nested fifth-root iteration did not converge in {max_iter} steps"
    )))
}

/// Result of [`newton_polish`].
#[derive(Clone, Debug)]
pub struct Polished {
    pub x: Complex,
    /// Scaled residual `|p(x)| / (|lead| max(1, |x|^deg))`.
    pub residual: f64,
    /// Whether the residual reached the context tolerance.
    pub converged: bool,
}

/// Newton iteration from `x0`, keeping the best iterate seen.
pub fn newton_polish(p: &Polynomial, x0: &Complex, max_iter: usize, ctx: &NumericContext) -> Result<Polished> {
    let prec = ctx.prec();
    let mut x = Complex::with_val(prec, x0);
    let mut best = x.clone();
    let mut best_res = p.scaled_residual(&x);
    let floor = ctx.eps() * 1e-2;
    for _ in 0..max_iter {
        if best_res <= floor {
            break;
        }
        let (v, d) = p.eval_with_derivative(&x);
        if numeric::is_zero(&d) {
            if best_res < ctx.tol() {
                break;
            }
            return Err(Error::Polish(format!(
                "derivative vanishes at {}",
                numeric::complex_to_string(&x, 12)
            )));
        }
        let dx = v / d;
        x -= &dx;
        let res = p.scaled_residual(&x);
        if res < best_res {
            best_res = res;
            best = x.clone();
        }
        if numeric::abs_f64(&dx) <= ctx.eps() * 1e-2 * numeric::abs_f64(&x).max(1.0) {
            break;
        }
    }
    Ok(Polished {
        converged: best_res < ctx.tol(),
        x: best,
        residual: best_res,
    })
}

/// All five roots of `x⁵ + x + t`: the Bring radical first, the remaining
/// four from the deflated quartic, each re-polished on the full quintic.
pub fn all_roots(t: &Complex, ctx: &NumericContext) -> Result<(Vec<Complex>, RootMethod)> {
    let p = bring_polynomial(t, ctx);
    if let Ok((first, diag)) = br_with_diagnostics(t, ctx) {
        if let Some(roots) = complete_from(&p, &first, ctx)? {
            return Ok((roots, diag.method));
        }
    }
    if let Some(roots) = five_start_newton(&p, t, ctx)? {
        return Ok((roots, RootMethod::MultiStartNewton));
    }
    let roots = oracle::aberth_roots(&p, ctx)?;
    let mut out = Vec::with_capacity(5);
    for r in &roots {
        out.push(newton_polish(&p, r, 20, ctx)?.x);
    }
    Ok((out, RootMethod::Simultaneous))
}

/// Newton from the five roots of `x⁵ = -t`, slightly rotated; accepted only
/// if the five limits are distinct roots.
fn five_start_newton(p: &Polynomial, t: &Complex, ctx: &NumericContext) -> Result<Option<Vec<Complex>>> {
    let prec = ctx.prec();
    let seed = if numeric::abs_f64(t) < 1.0 { ctx.complex(-1) } else { Complex::with_val(prec, -t) };
    let tilt = ctx.unit_root(1, 40);
    let mut roots: Vec<Complex> = Vec::with_capacity(5);
    for start in numeric::all_nth_roots(&seed, 5) {
        let polished = newton_polish(p, &(start * &tilt), 200, ctx)?;
        if !polished.converged {
            return Ok(None);
        }
        let scale = numeric::abs_f64(&polished.x).max(1.0);
        if roots.iter().any(|r| numeric::dist(r, &polished.x) < ctx.sqrt_tol() * scale) {
            return Ok(None);
        }
        roots.push(polished.x);
    }
    Ok(Some(roots))
}

/// Deflate by `first`, solve the quartic, polish; `None` when the result
/// fails the residual or root-sum checks.
fn complete_from(p: &Polynomial, first: &Complex, ctx: &NumericContext) -> Result<Option<Vec<Complex>>> {
    let quartic = p.deflate(first);
    let mut roots = vec![first.clone()];
    for r in solve_quartic(&quartic) {
        roots.push(newton_polish(p, &r, 20, ctx)?.x);
    }
    let worst = roots.iter().map(|r| p.scaled_residual(r)).fold(0.0, f64::max);
    // x⁴ has coefficient zero, so the roots sum to zero.
    let sum = roots.iter().fold(ctx.zero(), |acc, r| acc + r);
    let scale = roots.iter().map(numeric::abs_f64).fold(1.0, f64::max);
    if worst < ctx.tol() && numeric::abs_f64(&sum) < ctx.sqrt_tol() * scale {
        Ok(Some(roots))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> NumericContext {
        NumericContext::default()
    }

    /// Real root of `x³ - x² + 1`, a factor of `x⁵ + x + 1`.
    fn cubic_factor_root(ctx: &NumericContext) -> Complex {
        let roots = crate::reduction::cubic_roots(&ctx.one(), &ctx.complex(-1), &ctx.zero(), &ctx.one());
        roots
            .into_iter()
            .min_by(|a, b| a.imag().clone().abs().total_cmp(&b.imag().clone().abs()))
            .unwrap()
    }

    #[test]
    fn br_at_zero_and_small_t() {
        let ctx = ctx();
        assert!(numeric::is_zero(&br(&ctx.zero(), &ctx).unwrap()));
        let t = ctx.complex(0.1);
        let (x, diag) = br_series(&t, &ctx).unwrap();
        assert!(diag.converged);
        assert!(bring_polynomial(&t, &ctx).scaled_residual(&x) < 1e-38);
        // x ≈ -t + t⁵ for small t
        assert!((x.real().to_f64() - (-0.1 + 1e-5)).abs() < 1e-8);
    }

    #[test]
    fn br_one_is_the_cubic_factor_root() {
        let ctx = ctx();
        let x = br(&ctx.one(), &ctx).unwrap();
        assert!(numeric::dist(&x, &cubic_factor_root(&ctx)) < 1e-35);
        assert!((x.real().to_f64() + 0.7548776662).abs() < 1e-9);
    }

    #[test]
    fn series_and_continuation_agree_near_the_rim() {
        let ctx = ctx();
        for t in [ctx.complex(0.45), ctx.complex((0.0, 0.48)), ctx.complex((-0.3, 0.3))] {
            let (s, _) = br_series(&t, &ctx).unwrap();
            let (c, diag) = continue_along_ray(&t, &ctx).unwrap();
            assert_eq!(diag.method, RootMethod::PolishedContinuation);
            assert!(numeric::dist(&s, &c) < 10.0 * ctx.tol());
        }
    }

    #[test]
    fn lambert_euler_quadratic() {
        let ctx = ctx();
        let tenth = ctx.ratio(1, 10);
        let x = lambert_euler(1, 2, &ctx.complex(&tenth), 1, &ctx).unwrap();
        let want = ctx.complex(ctx.ratio(101, 100).sqrt() - tenth);
        assert!(numeric::dist(&x, &want) < 1e-38);
        let one = lambert_euler(3, 4, &ctx.zero(), 1, &ctx).unwrap();
        assert!(numeric::dist(&one, &ctx.one()) < 1e-40);
    }

    #[test]
    fn lambert_euler_reproduces_br() {
        let ctx = ctx();
        let t = ctx.complex(0.2);
        // x = -t w with w + t⁴ w⁵ = 1.
        let w = lambert_euler(5, 1, &numeric::powi(&t, 4), 1, &ctx).unwrap();
        let x = -(w * &t);
        assert!(numeric::dist(&x, &br(&t, &ctx).unwrap()) < 1e-38);
    }

    #[test]
    fn nested_radical_cases() {
        let ctx = ctx();
        let x = nested_radical(&ctx.zero(), &ctx.complex(-1), 10, &ctx).unwrap();
        assert!(numeric::dist(&x, &ctx.one()) < 1e-40);
        let x = nested_radical(&ctx.one(), &ctx.complex(-3), 500, &ctx).unwrap();
        let p = Polynomial::new(vec![ctx.complex(-3), ctx.one(), ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()]).unwrap();
        assert!(p.scaled_residual(&x) < 1e-38);
    }

    #[test]
    fn newton_polish_improves() {
        let ctx = ctx();
        let p = Polynomial::new(vec![ctx.one(), ctx.zero(), ctx.complex(-1), ctx.one()]).unwrap();
        let out = newton_polish(&p, &ctx.complex(-0.75), 50, &ctx).unwrap();
        assert!(out.converged);
        assert!(numeric::dist(&out.x, &cubic_factor_root(&ctx)) < 1e-38);
    }

    #[test]
    fn all_roots_of_simple_cases() {
        let ctx = ctx();
        let (roots, _) = all_roots(&ctx.zero(), &ctx).unwrap();
        let mut want = vec![ctx.zero()];
        want.extend(numeric::all_nth_roots(&ctx.complex(-1), 4));
        assert!(oracle::matched_distance(&roots, &want) < 1e-35);
        let (roots, _) = all_roots(&ctx.one(), &ctx).unwrap();
        assert!(roots.iter().any(|r| numeric::dist(r, &cubic_factor_root(&ctx)) < 1e-35));
    }

    #[test]
    fn ray_through_a_branch_point_falls_back() {
        let ctx = ctx();
        let t = ctx.unit_root(1, 4) * Float::with_val(ctx.prec(), 2 * branch_radius(&ctx));
        assert!(matches!(br(&t, &ctx), Err(Error::Continuation(_))));
        let (roots, method) = all_roots(&t, &ctx).unwrap();
        assert_ne!(method, RootMethod::PolishedContinuation);
        let want = oracle::aberth_roots(&bring_polynomial(&t, &ctx), &ctx).unwrap();
        assert!(oracle::matched_distance(&roots, &want) < 1e-35);
    }

    #[test]
    fn large_t_root_from_the_reciprocal_series() {
        let ctx = ctx();
        let t = ctx.complex(5);
        // x = 1/(c w) with c⁵ = -1/t and w⁵ - c⁴ w⁴ = 1, i.e. a = -c⁴/5 in
        // the (p, q) = (4, 5) series.
        let c = numeric::nth_root(&(-Complex::with_val(ctx.prec(), t.clone().recip())), 5);
        let a = -(numeric::powi(&c, 4) / 5u32);
        let w = lambert_euler(4, 5, &a, 1, &ctx).unwrap();
        let x = (c * w).recip();
        let (roots, _) = all_roots(&t, &ctx).unwrap();
        assert!(roots.iter().any(|r| numeric::dist(r, &x) < 1e-35));
    }
}
