//! Hermite's elliptic solution of `x⁵ - x + a = 0`.
//!
//! With `a = 2(1 + k²) / (5^{5/4} √k k')` and `q` the nome of `k`,
//!
//! ```text
//! x = Φ(τ) / (2·5^{3/4} k^{1/4} k')
//! Φ(τ) = [m(q⁵)^{1/4} + m(q^{1/5})^{1/4}]
//!        · [φ((τ+16)/5) - φ((τ+64)/5)] · [φ((τ+32)/5) - φ((τ+48)/5)]
//! ```
//!
//! where `m(q) = θ2²/θ3²` and `φ(σ) = √(θ2/θ3)` at `q = e^{iπσ}`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use serde::Serialize;

use crate::bring::newton_polish;
use crate::error::{Error, Result};
use crate::modular::{psi, t1, t2, t3_nearest, t3_side, t4, t6, t7};
use crate::numeric::{self, NumericContext};
use crate::poly::Polynomial;
use crate::special::{agm, complement, rrcf_auto, singular_modulus, theta, theta2_inner, Nome};

/// Which side of the minimum of `a(k)` to invert on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `k` below the minimiser (large `r`, the default).
    Low,
    High,
}

/// Everything the elliptic formula used for one root.
#[derive(Clone, Debug)]
pub struct HermiteContext {
    pub a: Complex,
    pub k: Float,
    pub r: Float,
    pub tau: Complex,
    /// `φ((τ+c)/5)` for `c = 16, 64, 32, 48`.
    pub phi_values: [Complex; 4],
}

#[derive(Clone, Debug)]
pub struct HermiteRoot {
    /// Polished root of `x⁵ - x + a`.
    pub x: Complex,
    /// Scaled residual of the elliptic formula before polishing.
    pub raw_residual: f64,
    /// `+1` when the formula gave the root directly, `-1` when its negative.
    pub sign: i32,
    /// `None` for complex `a`, which is reached by tracking from a real one.
    pub context: Option<HermiteContext>,
}

/// `x⁵ - x + a`.
pub fn hermite_polynomial(a: &Complex, ctx: &NumericContext) -> Polynomial {
    let mut c = vec![Complex::with_val(ctx.prec(), a), ctx.complex(-1)];
    c.extend((0..3).map(|_| ctx.zero()));
    c.push(ctx.one());
    Polynomial::new(c).expect("monic")
}

fn five_pow(num: i32, den: u32, prec: u32) -> Float {
    let e = Float::with_val(prec, num) / den;
    Float::with_val(prec, 5).pow(e)
}

/// `a(k) = 2(1 + k²) / (5^{5/4} √k √(1 - k²))`.
pub fn a_of_modulus(k: &Float, ctx: &NumericContext) -> Float {
    let prec = ctx.prec();
    let k2 = Float::with_val(prec, k.square_ref());
    let kp = Float::with_val(prec, 1 - &k2).sqrt();
    let den = five_pow(5, 4, prec) * Float::with_val(prec, k.sqrt_ref()) * kp;
    (k2 + 1u32) * 2u32 / den
}

/// `d ln a / dk = 2k/(1+k²) - 1/(2k) + k/(1-k²)`, increasing on `(0, 1)`.
fn log_slope(k: &Float, prec: u32) -> Float {
    let k2 = Float::with_val(prec, k.square_ref());
    Float::with_val(prec, k * 2u32) / (Float::with_val(prec, &k2 + 1u32))
        - Float::with_val(prec, k * 2u32).recip()
        + Float::with_val(prec, k / Float::with_val(prec, 1 - &k2))
}

/// The minimiser `k*` of `a(k)` and the minimum `a(k*)`, which equals
/// `4·5^{-5/4}`, the value where `x⁵ - x + a` acquires a double root.
pub fn a_minimum(ctx: &NumericContext) -> (Float, Float) {
    let prec = ctx.prec();
    let (mut lo, mut hi) = (ctx.real(0.01), ctx.real(0.99));
    for _ in 0..prec + 16 {
        let mid: Float = Float::with_val(prec, &lo + &hi) / 2u32;
        if log_slope(&mid, prec).is_sign_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k: Float = Float::with_val(prec, &lo + &hi) / 2u32;
    let a = a_of_modulus(&k, ctx);
    (k, a)
}

/// Invert `a(k)` on one side of its minimum by bisection.
pub fn modulus_from_a(a: &Float, side: Side, ctx: &NumericContext) -> Result<Float> {
    let prec = ctx.prec();
    let (k_min, a_min) = a_minimum(ctx);
    if *a < a_min {
        let slack = Float::with_val(prec, &a_min - a) / &a_min;
        if slack.to_f64() > ctx.tol() {
            return Err(Error::NoModulus {
                a: numeric::real_to_string(a, 20),
                a_min: numeric::real_to_string(&a_min, 20),
            });
        }
        return Ok(k_min);
    }
    // Bisect in ln k (low side) or ln(1 - k) (high side): both ends are
    // exponentially thin for large a.
    let guess = (2.0 / (5f64.powf(1.25) * a.to_f64())).powi(2);
    let floor = (guess.max(1e-300) * 1e-3).ln().min(-10.0);
    let (mut lo, mut hi) = match side {
        Side::Low => (ctx.real(floor), Float::with_val(prec, k_min.ln_ref())),
        Side::High => (
            ctx.real(floor),
            Float::with_val(prec, Float::with_val(prec, 1 - &k_min).ln_ref()),
        ),
    };
    let k_of = |u: &Float| -> Float {
        let e = Float::with_val(prec, u.exp_ref());
        match side {
            Side::Low => e,
            Side::High => Float::with_val(prec, 1 - e),
        }
    };
    // a(k(u)) decreases as u grows on both parametrisations.
    for _ in 0..prec + 16 {
        let mid: Float = Float::with_val(prec, &lo + &hi) / 2u32;
        if a_of_modulus(&k_of(&mid), ctx) > *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(k_of(&(Float::with_val(prec, &lo + &hi) / 2u32)))
}

/// `r = (K(k')/K(k))²` and `q = e^{-π√r}` for a real modulus in `(0, 1)`.
pub fn nome_from_modulus(k: &Float, ctx: &NumericContext) -> Result<(Nome, Float)> {
    let prec = ctx.prec();
    if !(*k > 0 && *k < 1) {
        return Err(Error::Domain(format!("modulus must lie in (0, 1), got {}", k.to_f64())));
    }
    let kc = ctx.complex(k);
    let one = ctx.one();
    // K(k) = π/(2 AGM(1, k')), K(k') = π/(2 AGM(1, k)).
    let ratio = agm(&one, &complement(&kc), ctx)? / agm(&one, &kc, ctx)?;
    let r = Float::with_val(prec, ratio.real().square_ref());
    Ok((Nome::from_r(ctx, &r)?, r))
}

/// `φ(σ) = √(θ2/θ3)` at `q = e^{iπσ}`, as `√2 e^{iπσ/8} √(Σ q^{n(n+1)} / θ3)`
/// so that the eighth root of `q` follows `σ` rather than the principal
/// branch.
pub fn quarter_modulus(sigma: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let nome = Nome::from_tau(Complex::with_val(prec, sigma))?;
    let inner = theta2_inner(&nome, ctx)?;
    let t3 = theta(3, &nome, ctx)?;
    let pi = Float::with_val(prec, Constant::Pi);
    let eighth = (Complex::with_val(prec, sigma * Complex::with_val(prec, (0, pi))) / 8u32).exp();
    Ok(numeric::sqrt(&(inner / t3)) * eighth * ctx.sqrt_real(2))
}

/// Hermite's `Φ(τ)`, together with the four `φ` values.
pub fn hermite_phi_product_parts(tau: &Complex, ctx: &NumericContext) -> Result<(Complex, [Complex; 4])> {
    let prec = ctx.prec();
    let nome = Nome::from_tau(Complex::with_val(prec, tau))?;
    let up = singular_modulus(&nome.scaled(5, 1)?, ctx)?;
    let down = singular_modulus(&nome.scaled(1, 5)?, ctx)?;
    let lead = numeric::nth_root(&up, 4) + numeric::nth_root(&down, 4);
    let phi = |c: u32| quarter_modulus(&(Complex::with_val(prec, tau + c) / 5u32), ctx);
    let vals = [phi(16)?, phi(64)?, phi(32)?, phi(48)?];
    let d1 = Complex::with_val(prec, &vals[0] - &vals[1]);
    let d2 = Complex::with_val(prec, &vals[2] - &vals[3]);
    Ok((lead * d1 * d2, vals))
}

pub fn hermite_phi_product(tau: &Complex, ctx: &NumericContext) -> Result<Complex> {
    hermite_phi_product_parts(tau, ctx).map(|(p, _)| p)
}

/// The elliptic root formula for a real modulus, before any sign choice.
fn elliptic_root(k: &Float, ctx: &NumericContext) -> Result<(Complex, HermiteContext)> {
    let prec = ctx.prec();
    let (nome, r) = nome_from_modulus(k, ctx)?;
    let tau = nome.tau().cloned().expect("nome from r keeps tau");
    let (phi, phi_values) = hermite_phi_product_parts(&tau, ctx)?;
    let kp = Float::with_val(prec, 1 - Float::with_val(prec, k.square_ref())).sqrt();
    let den = five_pow(3, 4, prec) * 2u32 * Float::with_val(prec, k.sqrt_ref()).sqrt() * kp;
    let x = phi / den;
    let a = ctx.complex(a_of_modulus(k, ctx));
    Ok((
        x,
        HermiteContext {
            a,
            k: k.clone(),
            r,
            tau,
            phi_values,
        },
    ))
}

/// A root of `x⁵ - x + a`.
///
/// Real `a` with `|a| ≥ 4·5^{-5/4}` goes through the elliptic formula
/// directly (negative `a` by the odd symmetry `x → -x`). Any other `a`
/// starts from the real point `max(|a|, 1.25·a_min)` and follows the root
/// along arcs and rays that stay clear of the double-root points.
pub fn hermite_root(a: &Complex, ctx: &NumericContext) -> Result<HermiteRoot> {
    hermite_root_on_side(a, Side::Low, ctx)
}

pub fn hermite_root_on_side(a: &Complex, side: Side, ctx: &NumericContext) -> Result<HermiteRoot> {
    let prec = ctx.prec();
    let (_, a_min) = a_minimum(ctx);
    let is_real = a.imag().clone().abs().to_f64() <= ctx.tol() * numeric::abs_f64(a).max(1.0);
    let feasible = numeric::abs(a) >= a_min;
    if is_real && feasible {
        let re = Float::with_val(prec, a.real());
        let negative = re.is_sign_negative();
        let k = modulus_from_a(&Float::with_val(prec, re.abs_ref()), side, ctx)?;
        let (raw, context) = elliptic_root(&k, ctx)?;
        let p_abs = hermite_polynomial(&context.a, ctx);
        let flipped = Complex::with_val(prec, -&raw);
        let (r_plus, r_minus) = (p_abs.scaled_residual(&raw), p_abs.scaled_residual(&flipped));
        let (mut x, mut sign, raw_residual) = if r_plus <= r_minus {
            (raw, 1, r_plus)
        } else {
            (flipped, -1, r_minus)
        };
        if raw_residual > ctx.sqrt_tol() {
            return Err(Error::Branch {
                what: "Hermite root (both signs)".into(),
                residuals: vec![r_plus, r_minus],
            });
        }
        if negative {
            x = -x;
            sign = -sign;
        }
        let p = hermite_polynomial(a, ctx);
        let polished = newton_polish(&p, &x, 50, ctx)?;
        return Ok(HermiteRoot {
            x: polished.x,
            raw_residual,
            sign,
            context: Some(context),
        });
    }
    let a_min = a_min.to_f64();
    let radius = numeric::abs_f64(a);
    let theta = if radius > 0.0 { a.imag().to_f64().atan2(a.real().to_f64()) } else { 0.0 };
    let outer = radius.max(1.25 * a_min);
    let a0 = ctx.complex(outer);
    let seed = hermite_root_on_side(&a0, side, ctx)?;
    // Arc out at a safe radius, then (if needed) in along a ray midway
    // between double-root points, then round to the target.
    let mut path = Vec::new();
    if radius >= 1.25 * a_min {
        path.extend(arc(outer, 0.0, theta));
    } else {
        let quarter = std::f64::consts::FRAC_PI_4;
        let mid = ((theta - quarter) / (2.0 * quarter)).round() * 2.0 * quarter + quarter;
        path.extend(arc(outer, 0.0, mid));
        path.push((radius, mid));
        path.extend(arc(radius, mid, theta));
    }
    let mut points: Vec<Complex> = path
        .into_iter()
        .map(|(r, phi)| ctx.complex((r * phi.cos(), r * phi.sin())))
        .collect();
    points.push(a.clone());
    let mut x = seed.x;
    let mut from = a0;
    for to in points {
        x = track_root(&x, &from, &to, ctx)?;
        from = to;
    }
    let p = hermite_polynomial(a, ctx);
    let polished = newton_polish(&p, &x, 50, ctx)?;
    Ok(HermiteRoot {
        x: polished.x,
        raw_residual: seed.raw_residual,
        sign: seed.sign,
        context: None,
    })
}

/// Points `(radius, angle)` along an arc, at most `π/32` apart.
fn arc(radius: f64, from: f64, to: f64) -> Vec<(f64, f64)> {
    let n = ((to - from).abs() / (std::f64::consts::PI / 32.0)).ceil().max(1.0) as usize;
    (1..=n).map(|i| (radius, from + (to - from) * i as f64 / n as f64)).collect()
}

/// Follow a root of `x⁵ - x + a` from `a0` to `a1` along the segment,
/// keeping clear of the four double-root points `a⁴ = 256/3125`.
fn track_root(x0: &Complex, a0: &Complex, a1: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let length = numeric::dist(a0, a1);
    if length == 0.0 {
        return Ok(x0.clone());
    }
    let (_, a_min) = a_minimum(ctx);
    let branch: Vec<Complex> = (0..4).map(|j| ctx.unit_root(j, 2) * &a_min).collect();
    let dir = Complex::with_val(prec, a1 - a0) / ctx.real(length);
    let mut s = 0.0f64;
    let mut x = x0.clone();
    let mut a = a0.clone();
    while s < length {
        let near = branch.iter().map(|b| numeric::dist(b, &a)).fold(f64::INFINITY, f64::min);
        let h = (0.1 * numeric::abs_f64(&a).max(1.0)).min(0.25 * near);
        if h < 1e-12 {
            return Err(Error::Continuation(
                "path in a runs through a double root of x⁵ - x + a".into(),
            ));
        }
        s += h.min(length - s);
        let next = if s >= length {
            a1.clone()
        } else {
            Complex::with_val(prec, a0 + Complex::with_val(prec, &dir * s))
        };
        // dx/da = -1/(5x⁴ - 1)
        let slope = -(Complex::with_val(prec, numeric::powi(&x, 4) * 5u32) - 1u32).recip();
        let pred = Complex::with_val(prec, &x + slope * Complex::with_val(prec, &next - &a));
        let polished = newton_polish(&hermite_polynomial(&next, ctx), &pred, 60, ctx)?;
        if numeric::dist(&polished.x, &pred) > 0.5 * numeric::abs_f64(&x).max(0.05) {
            return Err(Error::Continuation("Newton corrector left the tracked root".into()));
        }
        x = polished.x;
        a = next;
    }
    Ok(x)
}

/// The composite-formula cross-check at one `r`. Every field is a
/// measurement; nothing here feeds the solver.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub r: f64,
    pub a: String,
    /// `|t - k_r|` with `t` from the continued fraction through T1, T2, T3.
    pub t_error: f64,
    /// `|l - k_{r/25}|` through T1, T4, T2, T3.
    pub l_error: f64,
    /// `|k_{25r} from the ascent - k_{25r} from theta|`.
    pub k_up_error: f64,
    /// `|m(-(-q)^{1/5})|` through T6, T4, T1, T2, T3 against theta.
    pub negated_modulus_error: f64,
    /// `c1` through T7, T6, T4, T1, T2, T3 against theta.
    pub c1_error: f64,
    /// Scaled residual of the elliptic formula (`Φ` as a product of `φ`).
    pub theorem_residual: f64,
    /// `Φ` in the real/imaginary-part form divided by the product form,
    /// both from theta values.
    pub alternative_ratio: [String; 2],
    /// Composite formula with every ingredient from the T-chain; best
    /// residual over `ε₀ = ±1`.
    pub composite_residual: f64,
    /// Composite formula with every ingredient from theta directly.
    pub direct_composite_residual: f64,
    pub notes: Vec<String>,
}

impl PipelineReport {
    /// The parts that are expected to hold: the chain values and the
    /// elliptic root. The composite residuals are informational.
    pub fn gates_pass(&self, ctx: &NumericContext) -> bool {
        let gate = ctx.sqrt_tol();
        [self.t_error, self.l_error, self.k_up_error, self.theorem_residual]
            .iter()
            .all(|e| *e < gate)
    }
}

/// `-4 (u + l^{1/4}) Re(c^{1/4}) Im(((1 - √(1-c1²))/(1 + √(1-c1²)))^{1/4}) / (2·5^{3/4} t^{1/4} t')`
/// with `u = k_{25r}^{1/4}`.
fn composite_root(
    t: &Complex,
    l: &Complex,
    k_up: &Complex,
    c: &Complex,
    c1: &Complex,
    ctx: &NumericContext,
) -> Complex {
    let prec = ctx.prec();
    let lead = numeric::nth_root(k_up, 4) + numeric::nth_root(l, 4);
    let re = Complex::with_val(prec, numeric::nth_root(c, 4).real());
    let w = numeric::sqrt(&(ctx.one() - Complex::with_val(prec, c1.square_ref())));
    let ratio = Complex::with_val(prec, ctx.one() - &w) / (w + 1u32);
    let im = Complex::with_val(prec, numeric::nth_root(&ratio, 4).imag());
    let phi = lead * re * im * -4i32;
    let den = Complex::with_val(prec, numeric::nth_root(t, 4) * complement(t)) * five_pow(3, 4, prec) * 2u32;
    phi / den
}

fn best_sign_residual(x: &Complex, a: &Complex, ctx: &NumericContext) -> f64 {
    let neg = Complex::with_val(ctx.prec(), -a);
    hermite_polynomial(a, ctx)
        .scaled_residual(x)
        .min(hermite_polynomial(&neg, ctx).scaled_residual(x))
}

/// Run the composite root formula at `q = e^{-π√r}`, reporting how each
/// ingredient compares with its direct theta evaluation.
pub fn main_theorem_pipeline(r: f64, ctx: &NumericContext) -> Result<PipelineReport> {
    let prec = ctx.prec();
    if !(r > 15.0 && r < 25.0) {
        return Err(Error::Domain(format!("the composite formula is stated for 15 < r < 25, got {r}")));
    }
    let mut notes = Vec::new();
    let nome = Nome::from_r(ctx, &ctx.real(r))?;
    let q = nome.q().clone();
    let v = rrcf_auto(&nome, ctx)?.v;
    let k = singular_modulus(&nome, ctx)?;
    let l_direct = singular_modulus(&nome.scaled(1, 5)?, ctx)?;
    let k_up_direct = singular_modulus(&nome.scaled(5, 1)?, ctx)?;
    // Principal fifth roots, as the formula writes them.
    let neg_fifth = -numeric::nth_root(&Complex::with_val(prec, -&q), 5);
    let c_direct = singular_modulus(&Nome::new(neg_fifth)?, ctx)?;
    let root_q = numeric::sqrt(&q);
    let c1_nome = -numeric::nth_root(&Complex::with_val(prec, -root_q), 5);
    let c1_direct = singular_modulus(&Nome::new(c1_nome)?, ctx)?;

    let w = t1(&v)?;
    let t = t3_side(&t2(&w, ctx)?, true, ctx)?.k;
    let l = t3_side(&t2(&t4(&w, ctx)?, ctx)?, false, ctx)?.k;
    let k_up = psi(&t, &l, ctx)?.k_up;
    let chain_to = |x: &Complex, target: &Complex, label: &str, notes: &mut Vec<String>| -> Option<Complex> {
        let j = t4(x, ctx).and_then(|y| t1(&y)).and_then(|y| t2(&y, ctx));
        match j.and_then(|j| t3_nearest(&j, target, ctx)) {
            Ok(c) => Some(c.k),
            Err(e) => {
                notes.push(format!("{label}: {e}"));
                None
            }
        }
    };
    let x6 = t6(&v, ctx)?;
    let c = chain_to(&x6, &c_direct, "m(-(-q)^(1/5)) chain", &mut notes);
    let x67 = t6(&t7(&v)?, ctx)?;
    let c1 = chain_to(&x67, &c1_direct, "c1 chain", &mut notes);

    let a = Complex::with_val(prec, 2u32 * (Complex::with_val(prec, k.square_ref()) + 1u32))
        / (Complex::with_val(prec, numeric::sqrt(&k) * complement(&k)) * five_pow(5, 4, prec));

    let tau = nome.tau().cloned().expect("nome from r keeps tau");
    let phi52 = hermite_phi_product(&tau, ctx)?;
    let den = Complex::with_val(prec, numeric::nth_root(&k, 4) * complement(&k)) * five_pow(3, 4, prec) * 2u32;
    let x52 = Complex::with_val(prec, &phi52 / &den);
    let theorem_residual = best_sign_residual(&x52, &a, ctx);

    let x_direct = composite_root(&k, &l_direct, &k_up_direct, &c_direct, &c1_direct, ctx);
    let direct_composite_residual = best_sign_residual(&x_direct, &a, ctx);
    let ratio = Complex::with_val(prec, &x_direct / &x52);

    let (negated_modulus_error, c1_error, composite_residual) = match (&c, &c1) {
        (Some(c), Some(c1)) => {
            let x = composite_root(&t, &l, &k_up, c, c1, ctx);
            (
                numeric::dist(c, &c_direct),
                numeric::dist(c1, &c1_direct),
                best_sign_residual(&x, &a, ctx),
            )
        }
        _ => (f64::NAN, f64::NAN, f64::NAN),
    };
    if composite_residual.is_finite() && composite_residual > ctx.sqrt_tol() {
        notes.push("the composite formula with T-chain ingredients does not give a root".into());
    }
    Ok(PipelineReport {
        r,
        a: numeric::complex_to_string(&a, 30),
        t_error: numeric::dist(&t, &k),
        l_error: numeric::dist(&l, &l_direct),
        k_up_error: numeric::dist(&k_up, &k_up_direct),
        negated_modulus_error,
        c1_error,
        theorem_residual,
        alternative_ratio: numeric::complex_to_pair(&ratio, 20),
        composite_residual,
        direct_composite_residual,
        notes,
    })
}
