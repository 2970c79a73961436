//! Transcendental building blocks: theta functions, the singular modulus,
//! complete elliptic integrals, the Rogers–Ramanujan continued fraction,
//! the eta product and the j-invariant.

pub(crate) mod elliptic;
mod eta;
mod rrcf;
mod theta;

pub use elliptic::{agm, complement, complete_k, modulus_from_r, EllipticContext};
pub use eta::{dedekind_eta, j_from_eta, j_from_modulus};
pub use rrcf::{rrcf, rrcf_auto, rrcf_product, RrcfValue};
pub use theta::{singular_modulus, theta, theta_sums, ThetaSums};
pub(crate) use theta::theta2_inner;

use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};

/// Terms added after a series has met its truncation test.
pub(crate) const SAFETY_TERMS: usize = 8;
/// Hard cap on series length; reached only for `|q|` extremely close to 1.
pub(crate) const MAX_TERMS: usize = 200_000;

/// A nome `q` with `|q| < 1`, optionally remembering the half-period ratio
/// `τ` (with `q = e^{iπτ}`) and the singular parameter `r` (`τ = i√r`).
///
/// When `τ` is known, fractional powers of `q` are taken as `e^{iπτ·c}`, which
/// is what the modular formulas mean; otherwise the principal branch is used.
#[derive(Clone, Debug)]
pub struct Nome {
    q: Complex,
    tau: Option<Complex>,
    r: Option<Float>,
}

impl Nome {
    pub fn new(q: Complex) -> Result<Self> {
        if numeric::abs(&q) >= 1 {
            return Err(Error::Domain(format!(
                "nome must satisfy |q| < 1, got |q| = {}",
                numeric::abs_f64(&q)
            )));
        }
        Ok(Self { q, tau: None, r: None })
    }

    pub fn from_f64(ctx: &NumericContext, q: f64) -> Result<Self> {
        Self::new(ctx.complex(q))
    }

    pub fn from_tau(tau: Complex) -> Result<Self> {
        if tau.imag().is_sign_negative() || tau.imag().is_zero() {
            return Err(Error::Domain(format!(
                "tau must lie in the upper half-plane, got Im(tau) = {}",
                tau.imag().to_f64()
            )));
        }
        let prec = tau.prec().0;
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let q = Complex::with_val(prec, &tau * Complex::with_val(prec, (0, pi))).exp();
        Ok(Self { q, tau: Some(tau), r: None })
    }

    /// `q = e^{-π√r}`.
    pub fn from_r(ctx: &NumericContext, r: &Float) -> Result<Self> {
        if !(r.is_finite() && r.is_sign_positive() && !r.is_zero()) {
            return Err(Error::Domain(format!("singular parameter must be positive, got {r}")));
        }
        let tau = ctx.complex((0, ctx.real(r).sqrt()));
        let mut nome = Self::from_tau(tau)?;
        nome.r = Some(ctx.real(r));
        Ok(nome)
    }

    pub fn from_r_f64(ctx: &NumericContext, r: f64) -> Result<Self> {
        Self::from_r(ctx, &ctx.real(r))
    }

    /// `q = e^{-π√(num/den)}` with the ratio formed at full precision.
    pub fn from_r_ratio(ctx: &NumericContext, num: i64, den: i64) -> Result<Self> {
        Self::from_r(ctx, &ctx.ratio(num, den))
    }

    pub fn q(&self) -> &Complex {
        &self.q
    }

    pub fn tau(&self) -> Option<&Complex> {
        self.tau.as_ref()
    }

    pub fn r(&self) -> Option<&Float> {
        self.r.as_ref()
    }

    pub fn abs(&self) -> Float {
        numeric::abs(&self.q)
    }

    pub fn prec(&self) -> u32 {
        self.q.prec().0
    }

    /// `q^{num/den}`.
    pub fn power(&self, num: i64, den: u32) -> Complex {
        let prec = self.prec();
        match &self.tau {
            Some(tau) => {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let arg = Complex::with_val(prec, tau * Complex::with_val(prec, (0, pi)));
                (arg * num / den).exp()
            }
            None if den == 1 => {
                if num >= 0 {
                    numeric::powi(&self.q, num as u32)
                } else {
                    numeric::powi(&self.q, num.unsigned_abs() as u32).recip()
                }
            }
            None => {
                let root = numeric::nth_root(&self.q, den);
                if num >= 0 {
                    numeric::powi(&root, num as u32)
                } else {
                    numeric::powi(&root, num.unsigned_abs() as u32).recip()
                }
            }
        }
    }

    /// The nome of `τ·num/den`, i.e. `q^{num/den}` with `r` scaled by the square.
    pub fn scaled(&self, num: u32, den: u32) -> Result<Self> {
        let q = self.power(num as i64, den);
        let tau = self.tau.as_ref().map(|t| Complex::with_val(self.prec(), t * num) / den);
        let r = self
            .r
            .as_ref()
            .map(|r| Float::with_val(self.prec(), r * (num * num)) / (den * den));
        let nome = Self::new(q)?;
        Ok(Self { tau, r, ..nome })
    }

    /// The nome `-q`, i.e. `τ + 1`.
    pub fn negated(&self) -> Result<Self> {
        let q = Complex::with_val(self.prec(), -&self.q);
        let tau = self.tau.as_ref().map(|t| Complex::with_val(self.prec(), t + 1));
        let nome = Self::new(q)?;
        Ok(Self { tau, r: None, ..nome })
    }
}

/// Series cut-off: a term is negligible once it drops below this fraction of
/// the running sum. Tied to the working precision rather than the
/// acceptance tolerance so that series values carry every working digit.
pub(crate) fn series_threshold(ctx: &NumericContext) -> Float {
    ctx.real(2).pow(-(ctx.prec() as i32 - 4))
}

pub(crate) fn negligible(term: &Complex, scale: &Complex, threshold: &Float) -> bool {
    let t = numeric::abs(term);
    let s = numeric::abs(scale);
    t.is_zero() || t <= Float::with_val(s.prec(), &s * threshold)
}
