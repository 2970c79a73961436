use rug::Complex;

use super::{negligible, series_threshold, Nome, MAX_TERMS, SAFETY_TERMS};
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};

/// The eta product `Π_{n≥1} (1 - qⁿ)` with `q = e^{iπτ}`.
///
/// This is the bare product without the customary `q^{1/24}` prefactor; the
/// j-invariant formula in [`j_from_eta`] carries the compensating power.
pub fn dedekind_eta(tau: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let nome = Nome::from_tau(Complex::with_val(ctx.prec(), tau))?;
    eta_product(&nome, ctx)
}

pub(crate) fn eta_product(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let q = Complex::with_val(prec, nome.q());
    let threshold = series_threshold(ctx);
    let one = Complex::with_val(prec, 1);
    let mut prod = Complex::with_val(prec, 1);
    let mut qn = Complex::with_val(prec, 1);
    let mut quiet = 0;
    for _ in 0..MAX_TERMS {
        qn *= &q;
        prod *= Complex::with_val(prec, 1 - &qn);
        if negligible(&qn, &one, &threshold) {
            quiet += 1;
            if quiet > SAFETY_TERMS {
                return Ok(prod);
            }
        }
    }
    Err(Error::Divergence(format!(
        "eta product did not settle within {MAX_TERMS} factors"
    )))
}

/// `j = (f¹⁶ + 16/f⁸)³` with `f = q^{-1/24} η(τ)/η(2τ)`.
pub fn j_from_eta(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let doubled = nome.scaled(2, 1)?;
    let ratio = eta_product(nome, ctx)? / eta_product(&doubled, ctx)?;
    let f = Complex::with_val(prec, nome.power(-1, 24)) * ratio;
    let f8 = numeric::powi(&f, 8);
    let f16 = Complex::with_val(prec, f8.square_ref());
    let inner = f16 + Complex::with_val(prec, 16 / f8);
    Ok(numeric::powi(&inner, 3))
}

/// `j = 256 (k² + k'⁴)³ / (k k')⁴ = 256 (1 - λ + λ²)³ / (λ² (1 - λ)²)`, `λ = k²`.
pub fn j_from_modulus(k: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let lambda = Complex::with_val(prec, k.square_ref());
    let lp = Complex::with_val(prec, 1 - &lambda);
    let den = Complex::with_val(prec, &lambda * &lp).square();
    if numeric::abs(&den) <= ctx.eps() * ctx.eps() {
        return Err(Error::Pole(format!(
            "j-invariant has a pole at k = {}",
            numeric::complex_to_string(k, 12)
        )));
    }
    let num = Complex::with_val(prec, 1 - &lambda) + lambda.square();
    Ok(numeric::powi(&num, 3) * 256 / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_dist;
    use crate::special::singular_modulus;

    #[test]
    fn eta_tends_to_one_high_in_the_half_plane() {
        let ctx = NumericContext::default();
        let eta = dedekind_eta(&ctx.complex((0.3, 60.0)), &ctx).unwrap();
        assert!(numeric::dist(&eta, &ctx.one()) < 1e-40);
        assert!(dedekind_eta(&ctx.complex((0.3, -1.0)), &ctx).is_err());
    }

    #[test]
    fn j_from_lemniscatic_modulus() {
        let ctx = NumericContext::default();
        let k = ctx.complex(ctx.real(2).sqrt().recip());
        let j = j_from_modulus(&k, &ctx).unwrap();
        assert!(rel_dist(&j, &ctx.complex(1728)) < 1e-38);
        assert!(j_from_modulus(&ctx.one(), &ctx).is_err());
        assert!(j_from_modulus(&ctx.zero(), &ctx).is_err());
    }

    #[test]
    fn eta_route_matches_modulus_route() {
        let ctx = NumericContext::default();
        for r in [1.0, 2.0, 3.0, 4.0, 0.7] {
            let nome = Nome::from_r_f64(&ctx, r).unwrap();
            let a = j_from_eta(&nome, &ctx).unwrap();
            let b = j_from_modulus(&singular_modulus(&nome, &ctx).unwrap(), &ctx).unwrap();
            assert!(rel_dist(&a, &b) < 1e-36, "r = {r}");
        }
    }

    #[test]
    fn j_is_symmetric_in_k_and_complement() {
        let ctx = NumericContext::default();
        let k = ctx.complex((0.3, 0.2));
        let kp = crate::special::elliptic::complement(&k);
        let a = j_from_modulus(&k, &ctx).unwrap();
        let b = j_from_modulus(&kp, &ctx).unwrap();
        assert!(rel_dist(&a, &b) < 1e-37);
    }
}
