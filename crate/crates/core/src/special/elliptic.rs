use rug::{Complex, Float};

use super::{negligible, series_threshold, singular_modulus, Nome, MAX_TERMS};
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};

/// Elliptic data attached to a singular parameter `r`.
#[derive(Clone, Debug)]
pub struct EllipticContext {
    pub r: Float,
    pub q: Complex,
    pub k: Complex,
    pub k_prime: Complex,
    /// `K(k')/K(k)`, equal to `√r`.
    pub ratio: Float,
}

impl EllipticContext {
    /// Build from theta constants instead of inverting the period ratio.
    /// Faster than [`modulus_from_r`] and used as its cross-check.
    pub fn from_theta(ctx: &NumericContext, r: &Float) -> Result<Self> {
        let nome = Nome::from_r(ctx, r)?;
        let k = singular_modulus(&nome, ctx)?;
        let k_prime = complement(&k);
        let ratio = period_ratio(ctx, &k, &k_prime)?;
        Ok(Self {
            r: ctx.real(r),
            q: nome.q().clone(),
            k,
            k_prime,
            ratio,
        })
    }

    pub fn nome(&self, ctx: &NumericContext) -> Result<Nome> {
        Nome::from_r(ctx, &self.r)
    }
}

/// `k' = √(1 - k²)` on the principal branch.
pub fn complement(k: &Complex) -> Complex {
    let prec = k.prec().0;
    numeric::sqrt(&Complex::with_val(prec, 1 - Complex::with_val(prec, k.square_ref())))
}

/// Arithmetic–geometric mean of `a` and `b`. For complex arguments the
/// square root is taken on the side closer to the arithmetic mean, which
/// gives the "right" AGM and the standard principal `K`.
pub fn agm(a: &Complex, b: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let mut a = Complex::with_val(prec, a);
    let mut b = Complex::with_val(prec, b);
    let threshold = series_threshold(ctx);
    for _ in 0..200 {
        let diff = Complex::with_val(prec, &a - &b);
        if negligible(&diff, &a, &threshold) {
            return Ok(a);
        }
        let next_a = Complex::with_val(prec, &a + &b) / 2;
        let mut next_b = numeric::sqrt(&Complex::with_val(prec, &a * &b));
        let minus = Complex::with_val(prec, &next_a - &next_b);
        let plus = Complex::with_val(prec, &next_a + &next_b);
        if numeric::abs(&minus) > numeric::abs(&plus) {
            next_b = -next_b;
        }
        a = next_a;
        b = next_b;
    }
    Err(Error::Convergence("AGM did not converge in 200 steps".into()))
}

/// Complete elliptic integral of the first kind, `K(x) = (π/2)·₂F₁(½,½;1;x²)`.
///
/// The hypergeometric series is used for `|x|² ≤ ½`, the AGM otherwise.
pub fn complete_k(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let x2 = Complex::with_val(prec, x.square_ref());
    if x2.imag().is_zero() && *x2.real() >= 1 {
        return if *x2.real() == 1 {
            Err(Error::Divergence("K(x) diverges at x² = 1".into()))
        } else {
            Err(Error::Domain(format!(
                "x² = {} lies on the branch cut [1, ∞)",
                x2.real().to_f64()
            )))
        };
    }
    if numeric::abs(&x2) <= 0.5 {
        k_series(&x2, ctx)
    } else {
        k_agm(&x2, ctx)
    }
}

pub(crate) fn k_series(x2: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let threshold = series_threshold(ctx);
    let mut sum = Complex::with_val(prec, 1);
    let mut term = Complex::with_val(prec, 1);
    for n in 0..MAX_TERMS as u64 {
        // ((n + ½)/(n + 1))² x²
        let num = Float::with_val(prec, 2 * n + 1).square();
        let den = Float::with_val(prec, 2 * n + 2).square();
        term *= x2;
        term *= num / den;
        sum += &term;
        if negligible(&term, &sum, &threshold) {
            return Ok(sum * ctx.pi() / 2);
        }
    }
    Err(Error::Divergence("hypergeometric series for K did not settle".into()))
}

pub(crate) fn k_agm(x2: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let kp = numeric::sqrt(&Complex::with_val(prec, 1 - x2));
    let m = agm(&Complex::with_val(prec, 1), &kp, ctx)?;
    Ok(Complex::with_val(prec, ctx.pi() / (m * 2)))
}

fn period_ratio(ctx: &NumericContext, k: &Complex, k_prime: &Complex) -> Result<Float> {
    let big = complete_k(k_prime, ctx)?;
    let small = complete_k(k, ctx)?;
    Ok(Float::with_val(ctx.prec(), (big / small).real()))
}

/// Real `K(√(1 - x²))/K(x)` for `x ∈ (0, 1)`, via AGMs only.
fn real_period_ratio(x: &Float, ctx: &NumericContext) -> Result<Float> {
    let prec = ctx.prec();
    let xp = Float::with_val(prec, 1 - Float::with_val(prec, x.square_ref())).sqrt();
    let one = Complex::with_val(prec, 1);
    // K(x) = π/(2 AGM(1, x')), K(x') = π/(2 AGM(1, x)).
    let m_x = agm(&one, &Complex::with_val(prec, &xp), ctx)?;
    let m_xp = agm(&one, &Complex::with_val(prec, x), ctx)?;
    Ok(Float::with_val(prec, (m_x / m_xp).real()))
}

/// Singular modulus from `r` by inverting the period ratio.
///
/// `K(x')/K(x) = √r` is strictly decreasing in `x`, so bisection on `ln x`
/// over `(ε, 1 - ε)` with `ε = 10^{-digits/2}` is branch-safe. For `r < 1`
/// the roles of `k` and `k'` swap: `k_r = k'_{1/r}`.
pub fn modulus_from_r(ctx: &NumericContext, r: &Float) -> Result<EllipticContext> {
    if !(r.is_finite() && r.is_sign_positive() && !r.is_zero()) {
        return Err(Error::Domain(format!("singular parameter must be positive, got {r}")));
    }
    let ctx = ctx.escalated_for(r.to_f64().max(r.to_f64().recip()))?;
    let prec = ctx.prec();
    let swap = *r < 1;
    let r_eff = if swap {
        Float::with_val(prec, r.recip_ref())
    } else {
        ctx.real(r)
    };
    let target = Float::with_val(prec, r_eff.sqrt_ref());

    // For r_eff ≥ 1 the modulus lies in (0, 1/√2]. The deepest value is
    // about 4 e^{-π√r/2}; widen the lower bound when ε would cut it off.
    let eps_digits = (ctx.working_digits() / 2) as f64;
    let deep = (4.0f64).ln() - std::f64::consts::PI * target.to_f64() / 2.0 - 5.0;
    let lo_ln = (-eps_digits * std::f64::consts::LN_10).min(deep);
    let mut lo = ctx.real(lo_ln);
    let mut hi = ctx.real(0.5).ln() / 2;
    let bits = prec as usize + 16;
    for _ in 0..bits {
        let mid: Float = Float::with_val(prec, &lo + &hi) / 2;
        let ratio = real_period_ratio(&Float::with_val(prec, mid.exp_ref()), &ctx)?;
        if ratio > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x: Float = Float::with_val(prec, &lo + &hi) / 2;
    let x = x.exp();
    let xp = Float::with_val(prec, 1 - Float::with_val(prec, x.square_ref())).sqrt();
    let (k, k_prime) = if swap { (xp, x) } else { (x, xp) };
    let k = ctx.complex(k);
    let k_prime = ctx.complex(k_prime);
    let ratio = period_ratio(&ctx, &k, &k_prime)?;
    let nome = Nome::from_r(&ctx, r)?;
    Ok(EllipticContext {
        r: ctx.real(r),
        q: nome.q().clone(),
        k,
        k_prime,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_dist;

    #[test]
    fn k_at_zero_is_half_pi() {
        let ctx = NumericContext::default();
        let k = complete_k(&ctx.zero(), &ctx).unwrap();
        assert!(rel_dist(&k, &ctx.complex(ctx.pi() / 2)) < 1e-40);
        assert!(complete_k(&ctx.one(), &ctx).is_err());
        assert!(complete_k(&ctx.complex(2), &ctx).is_err());
    }

    #[test]
    fn series_and_agm_agree_on_overlap() {
        let ctx = NumericContext::default();
        for x in [
            ctx.complex(0.6),
            ctx.complex(0.7),
            ctx.complex((0.4, 0.5)),
            ctx.complex((-0.3, -0.6)),
        ] {
            let x2 = Complex::with_val(ctx.prec(), x.square_ref());
            let a = k_series(&x2, &ctx).unwrap();
            let b = k_agm(&x2, &ctx).unwrap();
            assert!(rel_dist(&a, &b) < 1e-38, "{x}");
        }
    }

    #[test]
    fn bisection_recovers_lemniscatic_modulus() {
        let ctx = NumericContext::default();
        let ell = modulus_from_r(&ctx, &ctx.real(1)).unwrap();
        let expected = ctx.complex(ctx.real(2).sqrt().recip());
        assert!(rel_dist(&ell.k, &expected) < 1e-38);
        assert!((ell.ratio.to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn small_r_swaps_roles() {
        let ctx = NumericContext::default();
        let a = modulus_from_r(&ctx, &ctx.real(0.25)).unwrap();
        let b = modulus_from_r(&ctx, &ctx.real(4)).unwrap();
        assert!(rel_dist(&a.k, &b.k_prime) < 1e-38);
        assert!(rel_dist(&a.k_prime, &b.k) < 1e-36);
    }

    #[test]
    fn theta_and_bisection_agree() {
        let ctx = NumericContext::default();
        for r in [0.5, 2.0, 7.0, 30.0] {
            let a = modulus_from_r(&ctx, &ctx.real(r)).unwrap();
            let b = EllipticContext::from_theta(&ctx, &ctx.real(r)).unwrap();
            assert!(rel_dist(&a.k, &b.k) < 1e-36, "r = {r}");
        }
    }
}
