use rug::Complex;

use super::Nome;
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};

const START_DEPTH: usize = 16;
const MAX_DEPTH: usize = 1 << 16;

/// A value of the Rogers–Ramanujan continued fraction together with its nome.
#[derive(Clone, Debug)]
pub struct RrcfValue {
    pub v: Complex,
    pub nome: Nome,
    /// Depth at which the backward recurrence was started.
    pub depth: usize,
}

/// `R(q) = q^{1/5} / (1 + q/(1 + q²/(1 + q³/(1 + …))))` by backward recurrence
/// from `depth`. The value is checked against the recurrence started at
/// twice the depth; a disagreement above the context tolerance is a
/// precision error.
pub fn rrcf(nome: &Nome, depth: usize, ctx: &NumericContext) -> Result<RrcfValue> {
    if depth == 0 {
        return Err(Error::Domain("continued-fraction depth must be positive".into()));
    }
    let v = backward(nome, depth, ctx);
    let check = backward(nome, depth * 2, ctx);
    let err = numeric::rel_dist(&v, &check);
    if err > ctx.tol() {
        return Err(Error::Precision {
            what: format!(
                "continued fraction at depth {depth} differs from depth {} by {err:e}",
                depth * 2
            ),
            suggested_digits: ctx.working_digits(),
        });
    }
    Ok(RrcfValue { v, nome: nome.clone(), depth })
}

/// `R(q)` with the depth doubled until two successive values agree to the
/// working precision.
pub fn rrcf_auto(nome: &Nome, ctx: &NumericContext) -> Result<RrcfValue> {
    let target = ctx.eps() * 1e-3;
    let mut depth = START_DEPTH;
    let mut prev = backward(nome, depth, ctx);
    while depth < MAX_DEPTH {
        depth *= 2;
        let next = backward(nome, depth, ctx);
        if numeric::rel_dist(&prev, &next) <= target {
            return Ok(RrcfValue { v: next, nome: nome.clone(), depth });
        }
        prev = next;
    }
    Err(Error::Precision {
        what: format!("continued fraction did not settle by depth {MAX_DEPTH}"),
        suggested_digits: ctx.working_digits(),
    })
}

/// `R(q) = q^{1/5} Π (1 - q^{5n-1})(1 - q^{5n-4}) / ((1 - q^{5n-2})(1 - q^{5n-3}))`,
/// the Rogers–Ramanujan product form. Factors are taken until they no longer
/// move the value at working precision.
pub fn rrcf_product(nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    let prec = ctx.prec();
    let q = nome.q();
    let eps = ctx.eps() * 1e-3;
    let mut num = Complex::with_val(prec, 1);
    let mut den = Complex::with_val(prec, 1);
    let mut qn = Complex::with_val(prec, q);
    let mut powers = vec![Complex::with_val(prec, 1)];
    for n in 1..=MAX_DEPTH {
        // powers[i] = qⁱ for i ≤ 5n
        while powers.len() <= 5 * n {
            powers.push(qn.clone());
            qn *= q;
        }
        let term = |i: usize| Complex::with_val(prec, 1) - &powers[i];
        num *= term(5 * n - 1) * term(5 * n - 4);
        den *= term(5 * n - 2) * term(5 * n - 3);
        if numeric::abs_f64(&powers[5 * n - 4]) < eps {
            return Ok(Complex::with_val(prec, nome.power(1, 5)) * num / den);
        }
    }
    Err(Error::Precision {
        what: format!("product form did not settle within {MAX_DEPTH} factors"),
        suggested_digits: ctx.working_digits(),
    })
}

fn backward(nome: &Nome, depth: usize, ctx: &NumericContext) -> Complex {
    let prec = ctx.prec();
    let q = Complex::with_val(prec, nome.q());
    let mut powers = Vec::with_capacity(depth);
    let mut p = q.clone();
    for _ in 0..depth {
        powers.push(p.clone());
        p *= &q;
    }
    let mut t = Complex::with_val(prec, 1);
    for qn in powers.iter().rev() {
        t = Complex::with_val(prec, qn / &t) + 1u32;
    }
    Complex::with_val(prec, nome.power(1, 5)) / t
}
