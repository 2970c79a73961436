//! Working precision, tolerances and the small complex helpers every other
//! module leans on.
//!
//! All arithmetic runs on MPFR/MPC numbers whose precision is derived from a
//! [`NumericContext`]. Multivalued elementary functions (square, cube and
//! fifth roots) always take the principal branch here; branch selection
//! beyond that lives with the callers, which test defining identities.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Complex, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest accepted working precision, in decimal digits.
pub const MIN_DIGITS: u32 = 16;
/// Largest accepted working precision; keeps `f64` tolerances representable.
pub const MAX_DIGITS: u32 = 290;
/// The CLI's default working precision.
pub const DEFAULT_DIGITS: u32 = 40;

const GUARD_BITS: u32 = 40;

/// Working precision plus the tolerance identities are judged against.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericContext {
    working_digits: u32,
    tol: f64,
}

impl Default for NumericContext {
    fn default() -> Self {
        Self::new(DEFAULT_DIGITS).expect("default digits are valid")
    }
}

impl NumericContext {
    /// Context with the default tolerance `10^(6 - digits)`.
    pub fn new(working_digits: u32) -> Result<Self> {
        if !(MIN_DIGITS..=MAX_DIGITS).contains(&working_digits) {
            return Err(Error::InvalidContext(format!(
                "working_digits must lie in {MIN_DIGITS}..={MAX_DIGITS}, got {working_digits}"
            )));
        }
        Ok(Self {
            working_digits,
            tol: default_tol(working_digits),
        })
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::InvalidContext(format!(
                "tolerance must lie in (0, 1), got {tol:e}"
            )));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn sqrt_tol(&self) -> f64 {
        self.tol.sqrt()
    }

    /// Binary precision handed to MPFR.
    pub fn prec(&self) -> u32 {
        (self.working_digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// Relative size of one unit in the last working digit.
    pub fn eps(&self) -> f64 {
        10f64.powi(-(self.working_digits as i32))
    }

    /// Same context at a different precision. A tolerance that was left at
    /// its default follows the new precision; a custom one is kept.
    pub fn with_digits(&self, digits: u32) -> Result<Self> {
        let custom = self.tol != default_tol(self.working_digits);
        let ctx = Self::new(digits)?;
        if custom {
            ctx.with_tol(self.tol)
        } else {
            Ok(ctx)
        }
    }

    /// Digits needed to resolve quantities of size `e^{-π√r}` with thirty
    /// digits to spare; only enforced for deep parameters `r ≥ 100`.
    pub fn required_digits_for(r: f64) -> u32 {
        if r < 100.0 {
            return 0;
        }
        (std::f64::consts::PI * r.sqrt() / std::f64::consts::LN_10 + 30.0).ceil() as u32
    }

    /// Raise the precision for deep nomes; never lowers it.
    pub fn escalated_for(&self, r: f64) -> Result<Self> {
        let need = Self::required_digits_for(r);
        if need > self.working_digits {
            if need > MAX_DIGITS {
                return Err(Error::Precision {
                    what: format!("parameter r = {r} needs more digits than supported"),
                    suggested_digits: need,
                });
            }
            // Keep the tolerance the caller asked for; only precision grows.
            let mut ctx = Self::new(need)?;
            ctx.tol = self.tol;
            Ok(ctx)
        } else {
            Ok(self.clone())
        }
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    pub fn complex<T>(&self, v: T) -> Complex
    where
        Complex: Assign<T>,
    {
        Complex::with_val(self.prec(), v)
    }

    pub fn zero(&self) -> Complex {
        Complex::new(self.prec())
    }

    pub fn one(&self) -> Complex {
        self.complex(1)
    }

    pub fn i(&self) -> Complex {
        self.complex((0, 1))
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), Constant::Pi)
    }

    /// `num/den` evaluated at working precision.
    pub fn ratio(&self, num: i64, den: i64) -> Float {
        self.real(num) / den
    }

    pub fn sqrt_real(&self, v: u32) -> Float {
        self.real(v).sqrt()
    }

    /// `e^{iπ·num/den}`.
    pub fn unit_root(&self, num: i64, den: i64) -> Complex {
        let angle = self.pi() * num / den;
        let (s, c) = angle.sin_cos(self.real(0));
        self.complex((c, s))
    }

    /// Parse a real decimal literal.
    pub fn parse_real(&self, s: &str) -> Result<Float> {
        let parsed = Float::parse(s.trim())
            .map_err(|e| Error::Parse(format!("bad real literal {s:?}: {e}")))?;
        Ok(self.real(parsed))
    }

    /// Parse `re`, `re,im`, `re+imi`, `re-imi` or `imi`.
    pub fn parse_complex(&self, s: &str) -> Result<Complex> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty complex literal".into()));
        }
        if let Some((re, im)) = t.split_once(',') {
            let re = self.parse_real(re.trim_start_matches(['(', '[']))?;
            let im = self.parse_real(im.trim_end_matches([')', ']']))?;
            return Ok(self.complex((re, im)));
        }
        if let Some(body) = t.strip_suffix(['i', 'j']) {
            // Split at the last sign that is not part of an exponent.
            let bytes = body.as_bytes();
            let mut cut = None;
            for idx in (1..bytes.len()).rev() {
                if (bytes[idx] == b'+' || bytes[idx] == b'-')
                    && !matches!(bytes[idx - 1], b'e' | b'E')
                {
                    cut = Some(idx);
                    break;
                }
            }
            let (re, im) = match cut {
                Some(idx) => (&body[..idx], &body[idx..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            return Ok(self.complex((self.parse_real(re)?, self.parse_real(im)?)));
        }
        Ok(self.complex(self.parse_real(&t)?))
    }
}

fn default_tol(digits: u32) -> f64 {
    10f64.powi(6 - digits as i32)
}

/// `|z|` as an MPFR float at the precision of `z`.
pub fn abs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

/// `|z|` rounded to `f64`; saturates at zero for values below `f64` range.
pub fn abs_f64(z: &Complex) -> f64 {
    abs(z).to_f64()
}

/// `|a - b|` as `f64`.
pub fn dist(a: &Complex, b: &Complex) -> f64 {
    let d = Complex::with_val(a.prec().0, a - b);
    abs_f64(&d)
}

/// `|a - b| / |b|`, or the absolute distance when `b` vanishes.
pub fn rel_dist(a: &Complex, b: &Complex) -> f64 {
    let d = Complex::with_val(a.prec().0, a - b);
    let scale = abs(b);
    if scale.is_zero() {
        abs_f64(&d)
    } else {
        (abs(&d) / scale).to_f64()
    }
}

pub fn is_zero(z: &Complex) -> bool {
    z.real().is_zero() && z.imag().is_zero()
}

/// Replace a negative-zero imaginary part by `+0` so that principal branches
/// of roots and logarithms do not depend on how a real number was produced.
fn canonical(z: &Complex) -> Complex {
    let mut w = z.clone();
    if w.imag().is_zero() {
        w.mut_imag().assign(0);
    }
    if w.real().is_zero() {
        w.mut_real().assign(0);
    }
    w
}

/// Principal square root, argument in `(-π/2, π/2]`.
pub fn sqrt(z: &Complex) -> Complex {
    canonical(z).sqrt()
}

/// Principal logarithm.
pub fn ln(z: &Complex) -> Complex {
    canonical(z).ln()
}

/// Principal `n`-th root `exp(ln z / n)`; `0` maps to `0`.
pub fn nth_root(z: &Complex, n: u32) -> Complex {
    if is_zero(z) {
        return Complex::new(z.prec());
    }
    let prec = z.prec().0;
    let w = canonical(z);
    // Real positive inputs stay exactly real.
    if w.imag().is_zero() && w.real().is_sign_positive() {
        let r = Float::with_val(prec, w.real());
        let root = if n == 2 {
            r.sqrt()
        } else if n == 3 {
            r.cbrt()
        } else {
            r.root(n)
        };
        return Complex::with_val(prec, root);
    }
    (w.ln() / n).exp()
}

/// Principal cube root.
pub fn cbrt(z: &Complex) -> Complex {
    nth_root(z, 3)
}

/// `z^w` on the principal branch.
pub fn pow(z: &Complex, w: &Complex) -> Complex {
    if is_zero(z) {
        return Complex::new(z.prec());
    }
    canonical(z).pow(w)
}

/// All `n` values of `z^{1/n}`, principal first, then successive rotations
/// by `e^{2πi/n}`.
pub fn all_nth_roots(z: &Complex, n: u32) -> Vec<Complex> {
    let prec = z.prec().0;
    let base = nth_root(z, n);
    let pi = Float::with_val(prec, Constant::Pi);
    (0..n)
        .map(|j| {
            let angle = Float::with_val(prec, &pi * (2 * j)) / n;
            let (s, c) = angle.sin_cos(Float::new(prec));
            Complex::with_val(prec, &base * Complex::with_val(prec, (c, s)))
        })
        .collect()
}

/// `z^n` for a small non-negative integer power.
pub fn powi(z: &Complex, n: u32) -> Complex {
    Complex::with_val(z.prec().0, z.pow(n))
}

/// Decimal rendering of a real number with `digits` significant digits.
pub fn real_to_string(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

/// `[re, im]` as decimal strings.
pub fn complex_to_pair(z: &Complex, digits: usize) -> [String; 2] {
    [
        real_to_string(z.real(), digits),
        real_to_string(z.imag(), digits),
    ]
}

/// Human-readable `a+bi` form.
pub fn complex_to_string(z: &Complex, digits: usize) -> String {
    let [re, im] = complex_to_pair(z, digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerance_tracks_digits() {
        let ctx = NumericContext::new(40).unwrap();
        assert_eq!(ctx.tol(), 1e-34);
        assert!(ctx.prec() >= 133);
        assert!(NumericContext::new(15).is_err());
        assert!(NumericContext::new(40).unwrap().with_tol(1.5).is_err());
    }

    #[test]
    fn deep_parameters_raise_precision() {
        let ctx = NumericContext::new(40).unwrap();
        assert_eq!(ctx.escalated_for(16.0).unwrap().working_digits(), 40);
        let deep = ctx.escalated_for(625.0).unwrap();
        // π·25/ln10 ≈ 34.1, plus the 30-digit margin.
        assert_eq!(deep.working_digits(), 65);
    }

    #[test]
    fn parses_complex_literals() {
        let ctx = NumericContext::default();
        let cases = [
            ("1.5", (1.5, 0.0)),
            ("-2-3i", (-2.0, -3.0)),
            ("1e-3+2.5e2i", (1e-3, 250.0)),
            ("-i", (0.0, -1.0)),
            ("(0.25, -4)", (0.25, -4.0)),
            ("7j", (0.0, 7.0)),
        ];
        for (text, (re, im)) in cases {
            let z = ctx.parse_complex(text).unwrap();
            assert_eq!(z.real().to_f64(), re, "{text}");
            assert_eq!(z.imag().to_f64(), im, "{text}");
        }
        assert!(ctx.parse_complex("abc").is_err());
    }

    #[test]
    fn principal_roots_ignore_signed_zero() {
        let ctx = NumericContext::default();
        let x = ctx.complex(-4);
        let mut neg = x.clone();
        neg.mut_imag().assign(-0.0);
        assert_eq!(sqrt(&x), sqrt(&neg));
        let r = sqrt(&neg);
        assert!((r.imag().to_f64() - 2.0).abs() < 1e-30);
    }

    #[test]
    fn nth_roots_rotate() {
        let ctx = NumericContext::default();
        let roots = all_nth_roots(&ctx.complex(32), 5);
        assert_eq!(roots[0].real().to_f64(), 2.0);
        for w in &roots {
            let back = powi(w, 5);
            assert!(dist(&back, &ctx.complex(32)) < 1e-35);
        }
    }
}
