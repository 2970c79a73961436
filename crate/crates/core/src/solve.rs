//! End-to-end solving: reduce to Bring form, solve there, map back.

use std::fmt;
use std::str::FromStr;

use rug::Complex;
use serde::{Deserialize, Serialize};

use crate::bring::{all_roots, newton_polish};
use crate::error::{Error, Result};
use crate::hermite::hermite_root;
use crate::numeric::{self, NumericContext};
use crate::oracle::aberth_roots;
use crate::poly::Polynomial;
use crate::reduction::{back_map, reduce, solve_quartic, TransformChain};

/// Fewest digits printed for a complex value in a report; higher working
/// precision prints five guard digits beyond it.
const REPORT_DIGITS: usize = 45;

fn report_digits(ctx: &NumericContext) -> usize {
    REPORT_DIGITS.max(ctx.working_digits() as usize + 5)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Bring radicals, falling back to Hermite and then the oracle.
    #[default]
    Auto,
    Bring,
    Hermite,
    /// Simultaneous iteration on the input only; no reduction.
    Oracle,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Method::Auto),
            "bring" => Ok(Method::Bring),
            "hermite" => Ok(Method::Hermite),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Parse(format!("unknown method {s:?}; expected auto, bring, hermite or oracle"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Bring => "bring",
            Method::Hermite => "hermite",
            Method::Oracle => "oracle",
        })
    }
}

/// Serializable view of a [`TransformChain`]. Complex values are `[re, im]`
/// decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainSummary {
    pub shift: Option<[String; 2]>,
    /// `[A, B]` of `y = x² + Ax + B`.
    pub quadratic: Option<[[String; 2]; 2]>,
    /// `[k, l, m, n]` of `z = y⁴ + ky³ + ly² + my + n`.
    pub quartic: Option<[[String; 2]; 4]>,
    /// `[c2, c1, c0]`.
    pub principal: [[String; 2]; 3],
    /// `[A2, B2]`.
    pub bring_jerrard: [[String; 2]; 2],
    pub scale: Option<[String; 2]>,
    pub bring_t: Option<[String; 2]>,
    pub stage_mismatches: [f64; 2],
    pub notes: Vec<String>,
}

impl ChainSummary {
    pub fn new(chain: &TransformChain, digits: usize) -> Self {
        let pair = |z: &Complex| numeric::complex_to_pair(z, digits);
        Self {
            shift: chain.shift.as_ref().map(pair),
            quadratic: chain.quad.as_ref().map(|q| [pair(&q.a), pair(&q.b)]),
            quartic: chain.quartic.as_ref().map(|q| [pair(&q.k), pair(&q.l), pair(&q.m), pair(&q.n)]),
            principal: [
                pair(&chain.principal.c2),
                pair(&chain.principal.c1),
                pair(&chain.principal.c0),
            ],
            bring_jerrard: [pair(&chain.bring_jerrard.a2), pair(&chain.bring_jerrard.b2)],
            scale: chain.scale.as_ref().map(pair),
            bring_t: chain.bring.as_ref().map(|b| pair(&b.t)),
            stage_mismatches: chain.mismatches,
            notes: chain.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveReport {
    /// Input coefficients, ascending.
    pub coefficients: Vec<[String; 2]>,
    pub roots: Vec<[String; 2]>,
    /// `|p(x)| / max(1, |x|⁵)` for the monic input.
    pub residuals: Vec<f64>,
    pub tolerance: f64,
    pub digits: u32,
    pub method_requested: Method,
    pub method_used: String,
    pub chain: Option<ChainSummary>,
    pub diagnostics: Vec<String>,
    /// Set when some residual is at or above `tolerance`.
    pub warning: bool,
}

impl SolveReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Roots at full precision together with their report.
#[derive(Clone, Debug)]
pub struct Solution {
    pub roots: Vec<Complex>,
    pub report: SolveReport,
}

/// Solve a quintic given by ascending coefficients.
pub fn solve(p: &Polynomial, method: Method, ctx: &NumericContext) -> Result<Solution> {
    if p.degree() != 5 {
        return Err(Error::Degenerate(format!(
            "the leading coefficient vanishes: expected degree 5, got {}",
            p.degree()
        )));
    }
    let monic = p.monic();
    let mut diagnostics = Vec::new();
    let (roots, method_used, chain) = match method {
        Method::Oracle => (aberth_roots(&monic, ctx)?, "oracle".to_string(), None),
        Method::Bring => {
            let chain = stage("reduction", reduce(&monic, ctx))?;
            let (roots, used) = bring_path(&chain, ctx, &mut diagnostics)?;
            (roots, used, Some(chain))
        }
        Method::Hermite => {
            let chain = stage("reduction", reduce(&monic, ctx))?;
            let (roots, used) = hermite_path(&chain, ctx, &mut diagnostics)?;
            (roots, used, Some(chain))
        }
        Method::Auto => auto(&monic, ctx, &mut diagnostics)?,
    };
    let residuals: Vec<f64> = roots.iter().map(|x| monic.scaled_residual(x)).collect();
    let warning = residuals.iter().any(|r| *r >= ctx.tol());
    if warning {
        diagnostics.push(format!(
            "largest residual {:.3e} is not below the tolerance {:.1e}",
            residuals.iter().copied().fold(0.0, f64::max),
            ctx.tol()
        ));
    }
    let digits = report_digits(ctx);
    let report = SolveReport {
        coefficients: p.to_pairs(digits),
        roots: roots.iter().map(|x| numeric::complex_to_pair(x, digits)).collect(),
        residuals,
        tolerance: ctx.tol(),
        digits: ctx.working_digits(),
        method_requested: method,
        method_used,
        chain: chain.as_ref().map(|c| ChainSummary::new(c, digits)),
        diagnostics,
        warning,
    };
    Ok(Solution { roots, report })
}

fn stage<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Reduction(m) => Error::Reduction(format!("{name}: {m}")),
        other => Error::Reduction(format!("{name}: {other}")),
    })
}

type Found = (Vec<Complex>, String, Option<TransformChain>);

fn auto(monic: &Polynomial, ctx: &NumericContext, diagnostics: &mut Vec<String>) -> Result<Found> {
    let chain = match reduce(monic, ctx) {
        Ok(chain) => chain,
        Err(e) => {
            diagnostics.push(format!("reduction failed ({e}); using the oracle"));
            return Ok((aberth_roots(monic, ctx)?, "oracle".into(), None));
        }
    };
    let ok = |roots: &[Complex]| roots.iter().all(|x| monic.scaled_residual(x) < ctx.tol());
    match bring_path(&chain, ctx, diagnostics) {
        Ok((roots, used)) if ok(&roots) => return Ok((roots, used, Some(chain))),
        Ok(_) => diagnostics.push("bring path: residual above tolerance".into()),
        Err(e) => diagnostics.push(format!("bring path: {e}")),
    }
    match hermite_path(&chain, ctx, diagnostics) {
        Ok((roots, used)) if ok(&roots) => return Ok((roots, used, Some(chain))),
        Ok(_) => diagnostics.push("hermite path: residual above tolerance".into()),
        Err(e) => diagnostics.push(format!("hermite path: {e}")),
    }
    Ok((aberth_roots(monic, ctx)?, "oracle".into(), Some(chain)))
}

/// Roots of `x⁵ + B2` when the chain ends without a Bring form.
fn pure_fifth_roots(chain: &TransformChain, diagnostics: &mut Vec<String>) -> Vec<Complex> {
    diagnostics.push("A2 = 0: solved x⁵ = -B2 directly".into());
    let minus_b2 = Complex::with_val(chain.bring_jerrard.b2.prec(), -&chain.bring_jerrard.b2);
    numeric::all_nth_roots(&minus_b2, 5)
}

fn bring_path(chain: &TransformChain, ctx: &NumericContext, diagnostics: &mut Vec<String>) -> Result<(Vec<Complex>, String)> {
    let reduced = match &chain.bring {
        Some(b) => {
            let (roots, how) = stage("bring roots", all_roots(&b.t, ctx))?;
            diagnostics.push(format!(
                "bring form t = {} solved by {}",
                numeric::complex_to_string(&b.t, 20),
                how
            ));
            roots
        }
        None => pure_fifth_roots(chain, diagnostics),
    };
    let roots = stage("back-map", back_map(&reduced, chain, ctx))?;
    Ok((roots, "bring".into()))
}

/// `x⁵ + A2 x + B2` with `x = μy`, `μ⁴ = -A2`, becomes `y⁵ - y + a` with
/// `a = B2/μ⁵`; Hermite's formula gives one root and the quartic cofactor the
/// other four.
fn hermite_path(chain: &TransformChain, ctx: &NumericContext, diagnostics: &mut Vec<String>) -> Result<(Vec<Complex>, String)> {
    let prec = ctx.prec();
    let reduced = match &chain.scale {
        Some(lambda) => {
            let bj = &chain.bring_jerrard;
            let mu = numeric::nth_root(&Complex::with_val(prec, -&bj.a2), 4);
            let a = Complex::with_val(prec, &bj.b2 / numeric::powi(&mu, 5));
            let root = stage("hermite root", hermite_root(&a, ctx))?;
            diagnostics.push(format!(
                "hermite form a = {}: elliptic formula residual {:.3e}{}",
                numeric::complex_to_string(&a, 20),
                root.raw_residual,
                if root.context.is_none() { " (reached by tracking)" } else { "" }
            ));
            let hp = crate::hermite::hermite_polynomial(&a, ctx);
            let mut ys = vec![root.x.clone()];
            for y in solve_quartic(&hp.deflate(&root.x)) {
                let polished = newton_polish(&hp, &y, 50, ctx)?;
                ys.push(polished.x);
            }
            // Bring-form roots w = x/λ = μy/λ.
            let ratio = Complex::with_val(prec, &mu / lambda);
            ys.iter().map(|y| Complex::with_val(prec, y * &ratio)).collect()
        }
        None => pure_fifth_roots(chain, diagnostics),
    };
    let roots = stage("back-map", back_map(&reduced, chain, ctx))?;
    Ok((roots, "hermite".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::matched_distance;

    fn ctx() -> NumericContext {
        NumericContext::default()
    }

    fn poly(ctx: &NumericContext, ascending: &[i64]) -> Polynomial {
        Polynomial::new(ascending.iter().map(|&c| ctx.complex(c)).collect()).unwrap()
    }

    #[test]
    fn fifth_roots_of_unity() {
        let ctx = ctx();
        let p = poly(&ctx, &[-1, 0, 0, 0, 0, 1]);
        for method in [Method::Auto, Method::Bring, Method::Hermite, Method::Oracle] {
            let sol = solve(&p, method, &ctx).unwrap();
            let want = numeric::all_nth_roots(&ctx.one(), 5);
            assert!(matched_distance(&sol.roots, &want) < 1e-35, "{method}");
            assert!(!sol.report.warning);
        }
    }

    #[test]
    fn bring_form_with_a_cubic_factor() {
        // x⁵ + x + 1 = (x² + x + 1)(x³ - x² + 1); the real root solves the cubic.
        let ctx = ctx();
        let p = poly(&ctx, &[1, 1, 0, 0, 0, 1]);
        let cubic = poly(&ctx, &[1, 0, -1, 1]);
        for method in [Method::Bring, Method::Hermite] {
            let sol = solve(&p, method, &ctx).unwrap();
            let real = sol
                .roots
                .iter()
                .min_by(|a, b| a.imag().to_f64().abs().total_cmp(&b.imag().to_f64().abs()))
                .unwrap();
            assert!((real.real().to_f64() + 0.7548776662).abs() < 1e-9);
            assert!(cubic.scaled_residual(real) < 1e-35);
        }
    }

    #[test]
    fn expanded_integer_roots() {
        let ctx = ctx();
        let p = poly(&ctx, &[-120, 274, -225, 85, -15, 1]);
        let want: Vec<Complex> = (1..=5).map(|k| ctx.complex(k)).collect();
        for method in [Method::Auto, Method::Bring, Method::Hermite] {
            let sol = solve(&p, method, &ctx).unwrap();
            assert!(matched_distance(&sol.roots, &want) < 1e-30, "{method}");
            let want = if method == Method::Auto { Method::Bring } else { method };
            assert_eq!(sol.report.method_used, want.to_string());
        }
    }

    #[test]
    fn rejects_lower_degree() {
        let ctx = ctx();
        assert!(matches!(solve(&poly(&ctx, &[1, 0, 1]), Method::Auto, &ctx), Err(Error::Degenerate(_))));
    }

    #[test]
    fn report_carries_the_chain() {
        let ctx = ctx();
        let p = poly(&ctx, &[3, -2, 0, 1, 2, 1]);
        let sol = solve(&p, Method::Auto, &ctx).unwrap();
        assert!(sol.report.chain.is_some());
        assert_eq!(sol.report.roots.len(), 5);
        assert!(sol.report.max_residual() < 1e-30);
        assert_eq!("hermite".parse::<Method>().unwrap(), Method::Hermite);
    }
}
