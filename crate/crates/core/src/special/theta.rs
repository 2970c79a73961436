use rug::Complex;

use super::{negligible, series_threshold, Nome, MAX_TERMS, SAFETY_TERMS};
use crate::error::{Error, Result};
use crate::numeric::NumericContext;

/// The three Jacobi theta constants at one nome.
#[derive(Clone, Debug)]
pub struct ThetaSums {
    pub theta2: Complex,
    pub theta3: Complex,
    pub theta4: Complex,
}

/// Jacobi theta constant `θ_index(q)` for `index ∈ {2, 3, 4}`:
///
/// * `θ2 = Σ q^{(n+1/2)²} = 2 q^{1/4} Σ_{n≥0} q^{n(n+1)}`
/// * `θ3 = Σ q^{n²}`
/// * `θ4 = Σ (-1)^n q^{n²}`
pub fn theta(index: u8, nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    match index {
        2 => theta2(nome, ctx),
        3 => theta34(nome, ctx, false),
        4 => theta34(nome, ctx, true),
        _ => Err(Error::Domain(format!(
            "theta index must be 2, 3 or 4, got {index}"
        ))),
    }
}

pub fn theta_sums(nome: &Nome, ctx: &NumericContext) -> Result<ThetaSums> {
    Ok(ThetaSums {
        theta2: theta2(nome, ctx)?,
        theta3: theta34(nome, ctx, false)?,
        theta4: theta34(nome, ctx, true)?,
    })
}

/// `k = θ2²/θ3²`.
pub fn singular_modulus(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let t2 = theta2(nome, ctx)?;
    let t3 = theta34(nome, ctx, false)?;
    Ok((t2 / t3).square())
}

/// `Σ_{n≥0} q^{n(n+1)}`; successive exponents differ by `2(n+1)`.
pub(crate) fn theta2_inner(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let q = Complex::with_val(prec, nome.q());
    let q2 = Complex::with_val(prec, q.square_ref());
    let threshold = series_threshold(ctx);
    let mut sum = Complex::with_val(prec, 1);
    let mut term = Complex::with_val(prec, 1);
    let mut step = q2.clone();
    let mut quiet = 0;
    for _ in 0..MAX_TERMS {
        term *= &step;
        step *= &q2;
        sum += &term;
        if negligible(&term, &sum, &threshold) {
            quiet += 1;
            if quiet > SAFETY_TERMS {
                return Ok(sum);
            }
        }
    }
    Err(Error::Divergence(format!(
        "theta series did not settle within {MAX_TERMS} terms"
    )))
}

fn theta2(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let inner = theta2_inner(nome, ctx)?;
    let quarter = Complex::with_val(ctx.prec(), nome.power(1, 4));
    Ok(inner * quarter * 2)
}

fn theta34(nome: &Nome, ctx: &NumericContext, alternate: bool) -> Result<Complex> {
    let prec = ctx.prec();
    let q = Complex::with_val(prec, nome.q());
    let q2 = Complex::with_val(prec, q.square_ref());
    let threshold = series_threshold(ctx);
    let one = Complex::with_val(prec, 1);
    let mut tail = Complex::new(prec);
    // q^{n²}; successive exponents differ by 2n + 1.
    let mut term = Complex::with_val(prec, 1);
    let mut step = q.clone();
    let mut quiet = 0;
    for n in 1..MAX_TERMS {
        term *= &step;
        step *= &q2;
        if alternate && n % 2 == 1 {
            tail -= &term;
        } else {
            tail += &term;
        }
        if negligible(&term, &one, &threshold) {
            quiet += 1;
            if quiet > SAFETY_TERMS {
                return Ok(tail * 2 + one);
            }
        }
    }
    Err(Error::Divergence(format!(
        "theta series did not settle within {MAX_TERMS} terms"
    )))
}
