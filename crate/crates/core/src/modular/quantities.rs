use rug::Complex;

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::special::{negligible, series_threshold, Nome, MAX_TERMS, SAFETY_TERMS};

/// Ramanujan quantity
///
/// `R(a,b,p;q) = q^{(a-b)(a+b-p)/(2p)} Π_{n≥1} (1-q^{pn-(p-a)})(1-q^{pn-a}) / ((1-q^{pn-(p-b)})(1-q^{pn-b}))`.
///
/// `(1,2,5)` is the Rogers–Ramanujan continued fraction; `(1,3,10)` is the
/// quantity the negated-nome relations are phrased in.
pub fn ramanujan_quantity(a: u32, b: u32, p: u32, nome: &Nome, ctx: &NumericContext) -> Result<Complex> {
    if !(0 < a && a < p && 0 < b && b < p) {
        return Err(Error::Domain(format!(
            "Ramanujan quantity needs 0 < a, b < p, got ({a}, {b}, {p})"
        )));
    }
    let prec = ctx.prec();
    let q = Complex::with_val(prec, nome.q());
    let threshold = series_threshold(ctx);
    let one = ctx.one();
    let exps_num = [p - a, a];
    let exps_den = [p - b, b];
    let mut num = ctx.one();
    let mut den = ctx.one();
    // q^{p(n-1)}; each factor is 1 - q^{p(n-1)} q^{e}.
    let qp = numeric::powi(&q, p);
    let base_num: Vec<Complex> = exps_num.iter().map(|&e| numeric::powi(&q, p - e)).collect();
    let base_den: Vec<Complex> = exps_den.iter().map(|&e| numeric::powi(&q, p - e)).collect();
    let mut shift = ctx.one();
    let mut quiet = 0;
    for _ in 0..MAX_TERMS {
        let mut largest = ctx.zero();
        for (bases, acc) in [(&base_num, &mut num), (&base_den, &mut den)] {
            for b in bases.iter() {
                let t = Complex::with_val(prec, &shift * b);
                *acc *= Complex::with_val(prec, &one - &t);
                if numeric::abs(&t) > numeric::abs(&largest) {
                    largest = t;
                }
            }
        }
        if negligible(&largest, &one, &threshold) {
            quiet += 1;
            if quiet > SAFETY_TERMS {
                let (en, ed) = prefactor_exponent(a, b, p);
                return Ok(num / den * nome.power(en, ed));
            }
        }
        shift *= &qp;
    }
    Err(Error::Divergence("Ramanujan-quantity product did not settle".into()))
}

/// `(a-b)(a+b-p)/(2p)` reduced, denominator positive.
fn prefactor_exponent(a: u32, b: u32, p: u32) -> (i64, u32) {
    let num = (a as i64 - b as i64) * (a as i64 + b as i64 - p as i64);
    let den = 2 * p as i64;
    let g = gcd(num.unsigned_abs(), den as u64).max(1) as i64;
    (num / g, (den / g) as u32)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
