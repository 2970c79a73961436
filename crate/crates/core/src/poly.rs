//! Dense univariate polynomials with complex coefficients.

use rug::ops::Pow;
use rug::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};

/// `Σ coeffs[i]·xⁱ`, coefficients in ascending degree. The leading
/// coefficient is nonzero (the zero polynomial is not representable).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    /// Trailing zero coefficients are dropped; an all-zero list is rejected.
    pub fn new(mut coeffs: Vec<Complex>) -> Result<Self> {
        while coeffs.last().is_some_and(numeric::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::Degenerate("the zero polynomial has no roots".into()));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients given from the leading term down.
    pub fn from_descending(mut coeffs: Vec<Complex>) -> Result<Self> {
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `Π (x - rᵢ)`.
    pub fn from_roots(ctx: &NumericContext, roots: &[Complex]) -> Self {
        let mut coeffs = vec![ctx.one()];
        for r in roots {
            let mut next = vec![ctx.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= Complex::with_val(ctx.prec(), c * r);
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Complex {
        self.coeffs.last().expect("nonempty by construction")
    }

    pub fn coeff(&self, i: usize) -> Option<&Complex> {
        self.coeffs.get(i)
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading().clone();
        Self {
            coeffs: self.coeffs.iter().map(|c| Complex::with_val(c.prec(), c / &lead)).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Complex) -> Complex {
        let prec = x.prec().0.max(self.leading().prec().0);
        let mut acc = Complex::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Value and first derivative in one pass.
    pub fn eval_with_derivative(&self, x: &Complex) -> (Complex, Complex) {
        let prec = x.prec().0.max(self.leading().prec().0);
        let mut p = Complex::new(prec);
        let mut dp = Complex::new(prec);
        for c in self.coeffs.iter().rev() {
            dp *= x;
            dp += &p;
            p *= x;
            p += c;
        }
        (p, dp)
    }

    /// `|p(x)| / max(1, |x|^deg)` relative to the leading coefficient — the
    /// scale-aware residual used as the solver's acceptance measure.
    pub fn scaled_residual(&self, x: &Complex) -> f64 {
        let v = self.eval(x);
        let lead = numeric::abs(self.leading());
        let xa = numeric::abs(x);
        let scale = if xa > 1 {
            xa.pow(self.degree() as u32) * lead
        } else {
            lead
        };
        (numeric::abs(&v) / scale).to_f64()
    }

    /// Quotient of synthetic division by `(x - root)`; the remainder is dropped.
    pub fn deflate(&self, root: &Complex) -> Self {
        let n = self.degree();
        if n == 0 {
            return self.clone();
        }
        let prec = root.prec().0;
        let mut q = vec![Complex::new(prec); n];
        let mut carry = Complex::new(prec);
        for i in (1..=n).rev() {
            carry = Complex::with_val(prec, &carry * root) + &self.coeffs[i];
            q[i - 1] = carry.clone();
        }
        Self { coeffs: q }
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            let prec = self.leading().prec().0;
            return Self { coeffs: vec![Complex::new(prec)] };
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Complex::with_val(c.prec(), c * i as u32))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.leading().prec().0;
        let mut out = vec![Complex::new(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += Complex::with_val(prec, a * b);
            }
        }
        Self { coeffs: out }
    }

    /// `p(x + shift)` via repeated synthetic division (Taylor shift).
    pub fn shifted(&self, shift: &Complex) -> Self {
        let prec = shift.prec().0;
        let mut c: Vec<Complex> = self.coeffs.iter().map(|x| Complex::with_val(prec, x)).collect();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = Complex::with_val(prec, &c[j + 1] * shift);
                c[j] += t;
            }
        }
        Self { coeffs: c }
    }

    /// Coefficients as `[re, im]` decimal string pairs, ascending.
    pub fn to_pairs(&self, digits: usize) -> Vec<[String; 2]> {
        self.coeffs.iter().map(|c| numeric::complex_to_pair(c, digits)).collect()
    }
}

/// Serializable mirror of a polynomial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub ascending: Vec<[String; 2]>,
}
