//! The fifth-degree ascent `k_r → k_{25r}`.
//!
//! Given `k_r` and `k_{r/25}`, the twelfth root `x` of `k k'/(k_d k_d')` is
//! pushed through `U*`, an `arcsinh` substitution and a cubic; one root `Y`
//! of the cubic gives `k_{25r} k'_{25r} = k_r k'_r Y⁶`, and `√Y` seeds the
//! next step. Every multivalued step is settled by the degree-5 modular
//! equation between consecutive moduli.

use rug::{Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::reduction::cubic_roots;
use crate::special::complement;

/// `X = U*(Y)`: the root of `X²/(√5Y) - √5Y/X² = (Y³ - Y⁻³)/√5` given by
/// `√(-1/(2Y²) + Y⁴/2 + √(1 + 18Y⁶ + Y¹²)/(2Y²))`.
pub fn u_star(y: &Complex, ctx: &NumericContext) -> Result<Complex> {
    if numeric::is_zero(y) {
        return Err(Error::Domain("U* is undefined at Y = 0".into()));
    }
    let prec = ctx.prec();
    let y2 = Complex::with_val(prec, y.square_ref());
    let y4 = Complex::with_val(prec, y2.square_ref());
    let y6 = Complex::with_val(prec, &y4 * &y2);
    let y12 = Complex::with_val(prec, y6.square_ref());
    let root = numeric::sqrt(&(Complex::with_val(prec, &y6 * 18u32) + &y12 + 1u32));
    // -1 + √(1 + 18Y⁶ + Y¹²) loses digits for small Y; rewrite it as
    // (18Y⁶ + Y¹²)/(1 + √…).
    let lifted = Complex::with_val(prec, &y6 * 18u32) + &y12;
    let den = Complex::with_val(prec, &root + 1u32);
    let head = if numeric::is_zero(&den) {
        root - 1u32
    } else {
        lifted / den
    };
    let inner = (head / Complex::with_val(prec, &y2 * 2u32)) + y4 / 2u32;
    Ok(numeric::sqrt(&inner))
}

/// `Y = U(X)`, the inverse of [`u_star`]. The cube root inside `h(X)` is tried
/// on all three branches; the one whose image maps back to `X` under `U*` wins.
pub fn u_fwd(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    if numeric::is_zero(x) {
        return Err(Error::Domain("U is undefined at X = 0".into()));
    }
    let prec = ctx.prec();
    let x2 = Complex::with_val(prec, x.square_ref());
    let x4 = Complex::with_val(prec, x2.square_ref());
    let x6 = Complex::with_val(prec, &x4 * &x2);
    let x12 = Complex::with_val(prec, x6.square_ref());
    let x18 = Complex::with_val(prec, &x12 * &x6);
    let s3 = ctx.sqrt_real(3);
    let disc = -(Complex::with_val(prec, &x6 * 125u32) + Complex::with_val(prec, &x12 * 22u32) + x18);
    let cube = Complex::with_val(prec, &x6 * -9i32) - 125u32 + numeric::sqrt(&disc) * s3 * 3u32;
    if numeric::is_zero(&cube) {
        return Err(Error::Branch {
            what: "U: h(X) vanishes".into(),
            residuals: vec![],
        });
    }
    let x2_3 = Complex::with_val(prec, &x2 * 3u32);
    let mut best: Option<(Complex, f64)> = None;
    let mut residuals = Vec::with_capacity(3);
    for h in numeric::all_nth_roots(&cube, 3) {
        let y2 = Complex::with_val(prec, -5) / &x2_3
            + Complex::with_val(prec, 25) / Complex::with_val(prec, &x2_3 * &h)
            + Complex::with_val(prec, &x4 / &h)
            + Complex::with_val(prec, &h / &x2_3);
        let y = numeric::sqrt(&y2);
        let res = match u_star(&y, ctx) {
            Ok(back) => numeric::rel_dist(&Complex::with_val(prec, back.square_ref()), &x2),
            Err(_) => f64::INFINITY,
        };
        residuals.push(res);
        if best.as_ref().map_or(true, |(_, r)| res < *r) {
            best = Some((y, res));
        }
    }
    match best {
        Some((y, res)) if res < ctx.sqrt_tol() => Ok(y),
        _ => Err(Error::Branch {
            what: "U (inverse of U*)".into(),
            residuals,
        }),
    }
}

/// Relative residual of `X²Y⁶ + 5Y⁴ - X⁴Y² - X² = 0`, the cleared form of
/// the relation between `X` and `Y`.
pub fn xy_relation_residual(x: &Complex, y: &Complex, ctx: &NumericContext) -> f64 {
    let prec = ctx.prec();
    let x2 = Complex::with_val(prec, x.square_ref());
    let z = Complex::with_val(prec, y.square_ref());
    let terms = [
        Complex::with_val(prec, &x2 * numeric::powi(&z, 3)),
        Complex::with_val(prec, z.square_ref()) * 5u32,
        -Complex::with_val(prec, x2.square_ref()) * &z,
        -x2.clone(),
    ];
    relative_sum(&terms)
}

/// `|Σ terms| / max |term|`.
pub(crate) fn relative_sum(terms: &[Complex]) -> f64 {
    let prec = terms[0].prec().0;
    let mut sum = Complex::new(prec);
    let mut scale = Float::new(prec);
    for t in terms {
        sum += t;
        let a = numeric::abs(t);
        if a > scale {
            scale = a;
        }
    }
    if scale.is_zero() {
        0.0
    } else {
        (numeric::abs(&sum) / scale).to_f64()
    }
}

/// `p = 2 sinh(arcsinh((11 + α)/2)/5)`.
pub fn p_from_alpha(alpha: &Complex, ctx: &NumericContext) -> Complex {
    let prec = ctx.prec();
    let y = (Complex::with_val(prec, alpha + 11u32) / 2u32).asinh();
    (y / 5u32).sinh() * 2u32
}

/// `α = -11 + 2 sinh(5 arcsinh(p/2))`, the inverse of [`p_from_alpha`].
pub fn alpha_from_p(p: &Complex, ctx: &NumericContext) -> Complex {
    let prec = ctx.prec();
    let y = (Complex::with_val(prec, p / 2u32)).asinh();
    (y * 5u32).sinh() * 2u32 - 11u32
}

/// `s = ∛((p - 1)⁵ / (11 + 6p + 6p² + p³ + p⁴))`, principal cube root.
pub fn s_from_p(p: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let mut den = Complex::with_val(prec, 1);
    for c in [1u32, 6, 6, 11] {
        den *= p;
        den += c;
    }
    // Horner above built p⁴ + p³ + 6p² + 6p + 11.
    if numeric::abs(&den) <= ctx.eps() {
        return Err(Error::Pole("s(p): 11 + 6p + 6p² + p³ + p⁴ vanishes".into()));
    }
    let num = numeric::powi(&Complex::with_val(prec, p - 1u32), 5);
    Ok(numeric::cbrt(&(num / den)))
}

/// The three roots of `Y³ + (5/s)Y² - sY - 1 = 0`.
pub fn y_roots(s: &Complex, ctx: &NumericContext) -> Result<[Complex; 3]> {
    if numeric::is_zero(s) {
        return Err(Error::Domain("the Y cubic needs s ≠ 0".into()));
    }
    let prec = ctx.prec();
    let c2 = Complex::with_val(prec, 5) / s;
    let c1 = Complex::with_val(prec, -s);
    Ok(cubic_roots(&ctx.one(), &c2, &c1, &ctx.complex(-1)))
}

/// Relative residual of the Y cubic at `y`.
pub fn y_cubic_residual(s: &Complex, y: &Complex, ctx: &NumericContext) -> f64 {
    let prec = ctx.prec();
    let y2 = Complex::with_val(prec, y.square_ref());
    relative_sum(&[
        Complex::with_val(prec, &y2 * y),
        Complex::with_val(prec, &y2 * 5u32) / s,
        -Complex::with_val(prec, s * y),
        ctx.complex(-1),
    ])
}

/// Relative residual of the degree-5 modular equation
/// `kK + k'K' + 2^{5/3}(kKk'K')^{1/3} = 1` between `k = k_r` and `K = k_{25r}`.
///
/// `k'K' - 1` is rewritten as `(k²K² - k² - K²)/(1 + k'K')`, so the residual is
/// relative to the size of the surviving terms rather than to 1; this keeps it
/// meaningful when both moduli are tiny.
pub fn quintic_modular_residual(k: &Complex, big: &Complex, ctx: &NumericContext) -> f64 {
    let prec = ctx.prec();
    let kp = complement(k);
    let bp = complement(big);
    let kk = Complex::with_val(prec, k * big);
    let pp = Complex::with_val(prec, &kp * &bp);
    let k2 = Complex::with_val(prec, k.square_ref());
    let b2 = Complex::with_val(prec, big.square_ref());
    let head = Complex::with_val(prec, kk.square_ref()) - &k2 - &b2;
    let tail = head / Complex::with_val(prec, &pp + 1u32);
    let cube = numeric::cbrt(&Complex::with_val(prec, &kk * &pp)) * two_five_thirds(prec);
    relative_sum(&[kk, tail, cube])
}

/// `2^{5/3}`.
fn two_five_thirds(prec: u32) -> Float {
    Float::with_val(prec, 32).cbrt()
}

/// `k_up = √(2κ² / (1 + √(1 - 4κ²)))` with `κ² = (k k')² Y¹²` — the
/// small root of `k² k'² = κ²` written without cancellation.
fn modulus_from_product(kappa2: &Complex, ctx: &NumericContext) -> Complex {
    let prec = ctx.prec();
    let disc = numeric::sqrt(&(Complex::with_val(prec, 1) - Complex::with_val(prec, kappa2 * 4u32)));
    numeric::sqrt(&(Complex::with_val(prec, kappa2 * 2u32) / (disc + 1u32)))
}

/// Every intermediate of one ascent step.
#[derive(Clone, Debug, Serialize)]
pub struct AscentState {
    #[serde(skip)]
    pub k_base: Complex,
    #[serde(skip)]
    pub k_down: Complex,
    #[serde(skip)]
    pub alpha: Complex,
    #[serde(skip)]
    pub p: Complex,
    #[serde(skip)]
    pub s: Complex,
    #[serde(skip)]
    pub y: Complex,
    #[serde(skip)]
    pub k_up: Complex,
    /// Degree-5 residual of each Y root, in the order the cubic solver
    /// returned them; the chosen root has the smallest.
    pub branch_residuals: Vec<f64>,
}

/// Separation demanded between the chosen Y root and the runner-up.
const BRANCH_GAP: f64 = 1e3;

struct Step {
    alpha: Complex,
    p: Complex,
    s: Complex,
    y: Complex,
    k_up: Complex,
    residuals: Vec<f64>,
}

fn step(
    x: &Complex,
    base_product: &Complex,
    k_prev: &Complex,
    ctx: &NumericContext,
) -> Result<Step> {
    let prec = ctx.prec();
    let alpha = numeric::powi(&u_star(x, ctx)?, 6);
    let p = p_from_alpha(&alpha, ctx);
    let s = s_from_p(&p, ctx)?;
    let roots = y_roots(&s, ctx)?;
    let mut scored: Vec<(Complex, Complex, f64)> = Vec::with_capacity(3);
    for y in roots {
        let y12 = numeric::powi(&y, 12);
        let kappa2 = Complex::with_val(prec, base_product * &y12);
        let k_up = modulus_from_product(&kappa2, ctx);
        let res = quintic_modular_residual(k_prev, &k_up, ctx);
        scored.push((y, k_up, res));
    }
    let residuals: Vec<f64> = scored.iter().map(|c| c.2).collect();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| residuals[a].total_cmp(&residuals[b]));
    let (best, second) = (residuals[order[0]], residuals[order[1]]);
    if !(best < ctx.sqrt_tol()) {
        return Err(Error::Branch {
            what: "Y root (degree-5 modular equation)".into(),
            residuals,
        });
    }
    if second < best.max(ctx.eps()) * BRANCH_GAP {
        return Err(Error::Precision {
            what: format!(
                "two Y roots satisfy the degree-5 modular equation alike ({best:e} vs {second:e})"
            ),
            suggested_digits: ctx.working_digits() * 3 / 2,
        });
    }
    let (y, k_up, _) = scored.swap_remove(order[0]);
    Ok(Step { alpha, p, s, y, k_up, residuals })
}

fn seed(k: &Complex, k_down: &Complex, ctx: &NumericContext) -> Result<(Complex, Complex)> {
    let prec = ctx.prec();
    let prod = Complex::with_val(prec, k * complement(k));
    let prod_down = Complex::with_val(prec, k_down * complement(k_down));
    if numeric::is_zero(&prod_down) {
        return Err(Error::Pole("the lower modulus has k·k' = 0".into()));
    }
    let x = numeric::nth_root(&Complex::with_val(prec, &prod / prod_down), 12);
    Ok((x, Complex::with_val(prec, prod.square_ref())))
}

/// `k_{25r}` from `k_r` and `k_{r/25}` with every intermediate.
pub fn psi(k_r: &Complex, k_down: &Complex, ctx: &NumericContext) -> Result<AscentState> {
    let (x, base) = seed(k_r, k_down, ctx)?;
    let st = step(&x, &base, k_r, ctx)?;
    Ok(AscentState {
        k_base: k_r.clone(),
        k_down: k_down.clone(),
        alpha: st.alpha,
        p: st.p,
        s: st.s,
        y: st.y,
        k_up: st.k_up,
        branch_residuals: st.residuals,
    })
}

/// `k_{25^j r₀}` for `j = 1..=n`, by iterating the radical map
/// `x ↦ √Y(s(p(U*(x)⁶)))` from `x₀ = (k k'/(k_d k_d'))^{1/12}` and
/// accumulating `Π Y_j¹²` against `(k_{r₀} k'_{r₀})²`.
pub fn ascend_25n(
    k_r0: &Complex,
    k_r0_down: &Complex,
    n: usize,
    ctx: &NumericContext,
) -> Result<Vec<Complex>> {
    if n == 0 {
        return Err(Error::Domain("the ascent needs n ≥ 1".into()));
    }
    let prec = ctx.prec();
    let (mut x, base) = seed(k_r0, k_r0_down, ctx)?;
    let mut product = base;
    let mut k_prev = k_r0.clone();
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let st = step(&x, &product, &k_prev, ctx).map_err(|e| match e {
            Error::Branch { what, residuals } => Error::Branch {
                what: format!("{what} at ascent step {j}"),
                residuals,
            },
            other => other,
        })?;
        if numeric::is_zero(&st.k_up) {
            return Err(Error::Precision {
                what: format!("modulus underflowed at ascent step {j}"),
                suggested_digits: ctx.working_digits() * 2,
            });
        }
        product *= numeric::powi(&st.y, 12);
        x = numeric::sqrt(&st.y);
        k_prev = Complex::with_val(prec, &st.k_up);
        out.push(st.k_up);
    }
    Ok(out)
}

/// Relative residual of Hermite's depressed sextic
/// `u⁶ - v⁶ + 5u²v²(u² - v²) + 4uv(1 - u⁴v⁴)` with `u = k_{25r}^{1/4}`, `v = k_r^{1/4}`.
pub fn depressed_residual(u: &Complex, v: &Complex, ctx: &NumericContext) -> f64 {
    let prec = ctx.prec();
    let u2 = numeric::powi(u, 2);
    let v2 = numeric::powi(v, 2);
    let uv = Complex::with_val(prec, u * v);
    relative_sum(&[
        numeric::powi(u, 6),
        -numeric::powi(v, 6),
        Complex::with_val(prec, &u2 * &v2) * 5u32 * Complex::with_val(prec, &u2 - &v2),
        Complex::with_val(prec, &uv * 4u32),
        -Complex::with_val(prec, &uv * 4u32) * numeric::powi(&uv, 4),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_dist;
    use crate::special::{modulus_from_r, singular_modulus, Nome};

    fn ctx() -> NumericContext {
        NumericContext::new(60).unwrap()
    }

    fn theta_k(ctx: &NumericContext, r: f64) -> Complex {
        singular_modulus(&Nome::from_r_f64(ctx, r).unwrap(), ctx).unwrap()
    }

    #[test]
    fn u_star_golden_example() {
        let ctx = ctx();
        let s5 = ctx.sqrt_real(5);
        let y = ctx.complex((s5.clone() - 1u32) / 2u32);
        let alpha = numeric::powi(&u_star(&y, &ctx).unwrap(), 6);
        assert!(rel_dist(&alpha, &ctx.complex(s5 - 2u32)) < 1e-55);
    }

    #[test]
    fn u_and_u_star_are_inverse() {
        let ctx = ctx();
        for x in [0.2, 0.5, 0.618, 0.9, 1.3, 2.0] {
            let x = ctx.complex(x);
            let y = u_fwd(&x, &ctx).unwrap();
            assert!(xy_relation_residual(&x, &y, &ctx) < 1e-50);
            let back = u_star(&y, &ctx).unwrap();
            assert!(rel_dist(&back, &x) < 1e-50, "x = {x}");
        }
    }

    #[test]
    fn p_alpha_round_trip() {
        let ctx = ctx();
        assert!(numeric::is_zero(&p_from_alpha(&ctx.complex(-11), &ctx)));
        for a in [-3.0, 0.236, 4.0, 40.0] {
            let a = ctx.complex(a);
            let p = p_from_alpha(&a, &ctx);
            assert!(rel_dist(&alpha_from_p(&p, &ctx), &a) < 1e-50);
        }
    }

    #[test]
    fn s_special_values() {
        let ctx = ctx();
        assert!(numeric::is_zero(&s_from_p(&ctx.one(), &ctx).unwrap()));
        let s0 = s_from_p(&ctx.zero(), &ctx).unwrap();
        let want = numeric::cbrt(&(ctx.complex(-1) / 11u32));
        assert!(rel_dist(&s0, &want) < 1e-55);
    }

    #[test]
    fn y_roots_obey_vieta() {
        let ctx = ctx();
        let s = ctx.complex((0.7, -0.2));
        let ys = y_roots(&s, &ctx).unwrap();
        let prod = Complex::with_val(ctx.prec(), &ys[0] * &ys[1]) * &ys[2];
        assert!(rel_dist(&prod, &ctx.one()) < 1e-50);
        let sum = Complex::with_val(ctx.prec(), &ys[0] + &ys[1]) + &ys[2];
        let want = -(ctx.complex(5) / &s);
        assert!(rel_dist(&sum, &want) < 1e-50);
        for y in &ys {
            assert!(y_cubic_residual(&s, y, &ctx) < 1e-50);
        }
    }

    #[test]
    fn degree5_equation_holds_for_theta_moduli() {
        let ctx = ctx();
        for r in [1.0, 2.0, 0.5] {
            let k = theta_k(&ctx, r);
            let big = theta_k(&ctx, 25.0 * r);
            assert!(quintic_modular_residual(&k, &big, &ctx) < 1e-50, "r = {r}");
            // A wrong partner fails badly.
            let wrong = theta_k(&ctx, 24.0 * r);
            assert!(quintic_modular_residual(&k, &wrong, &ctx) > 1e-6);
        }
    }

    #[test]
    fn psi_reaches_k625() {
        let ctx = ctx();
        let k25 = theta_k(&ctx, 25.0);
        let k1 = modulus_from_r(&ctx, &ctx.real(1)).unwrap().k;
        let st = psi(&k25, &k1, &ctx).unwrap();
        let want = theta_k(&ctx, 625.0);
        assert!(rel_dist(&st.k_up, &want) < 1e-40);
        assert!(numeric::abs(&st.k_up) < numeric::abs(&k25));
        assert!(y_cubic_residual(&st.s, &st.y, &ctx) < 1e-50);
        let u = numeric::nth_root(&st.k_up, 4);
        let v = numeric::nth_root(&k25, 4);
        assert!(depressed_residual(&u, &v, &ctx) < 1e-40);
        let chain = ascend_25n(&k25, &k1, 1, &ctx).unwrap();
        assert!(rel_dist(&chain[0], &st.k_up) < 1e-50);
    }

    #[test]
    fn two_ascent_steps_match_theta() {
        let ctx = NumericContext::new(120).unwrap();
        let k25 = theta_k(&ctx, 25.0);
        let k1 = theta_k(&ctx, 1.0);
        let chain = ascend_25n(&k25, &k1, 2, &ctx).unwrap();
        assert!(rel_dist(&chain[0], &theta_k(&ctx, 625.0)) < 1e-90);
        assert!(rel_dist(&chain[1], &theta_k(&ctx, 15625.0)) < 1e-90);
    }
}
