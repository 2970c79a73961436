//! The full reduction of a quintic to Bring form and the map back from
//! Bring-form roots to roots of the input.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Complex;

use super::radicals::{solve_quadratic, solve_quartic};
use super::tschirnhaus::{
    root_scale, to_bring, to_bring_jerrard, to_principal, BringForm, BringJerrard, PrincipalQuintic,
    QuadraticStage, QuarticStage,
};
use crate::bring::newton_polish;
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::poly::Polynomial;

const SHIFT_ATTEMPTS: usize = 8;
const SHIFT_SEED: u64 = 0x5eed_0f_b41c;

/// Every map applied on the way from the input to Bring form.
///
/// The input `p(x)` is made monic and, if a closed form degenerates, shifted
/// to `p(x + shift)`; then `y = x² + Ax + B`, `z = y⁴ + ky³ + ly² + my + n`
/// and `z = λw` in turn.
#[derive(Clone, Debug)]
pub struct TransformChain {
    /// The monic input.
    pub original: Polynomial,
    pub shift: Option<Complex>,
    pub quad: Option<QuadraticStage>,
    pub principal: PrincipalQuintic,
    pub quartic: Option<QuarticStage>,
    pub bring_jerrard: BringJerrard,
    /// `λ = A2^{1/4}`; `None` when `A2 = 0` and no Bring form exists.
    pub scale: Option<Complex>,
    pub bring: Option<BringForm>,
    /// Image-verification mismatch of the two closed-form stages.
    pub mismatches: [f64; 2],
    /// Why shifts were taken, if any.
    pub notes: Vec<String>,
}

impl TransformChain {
    /// Roots of the final reduced form: Bring form when it exists,
    /// otherwise the Bring–Jerrard `x⁵ + B2`.
    pub fn reduced_polynomial(&self) -> Polynomial {
        match &self.bring {
            Some(b) => b.polynomial(),
            None => self.bring_jerrard.polynomial(),
        }
    }
}

/// Reduce `p` (degree 5) to Bring form, retrying with small seeded shifts
/// when a closed form degenerates or no branch verifies.
pub fn reduce(p: &Polynomial, ctx: &NumericContext) -> Result<TransformChain> {
    if p.degree() != 5 {
        return Err(Error::Domain(format!("expected a quintic, got degree {}", p.degree())));
    }
    let original = p.monic();
    let rho = root_scale(&original);
    let mut rng = ChaCha8Rng::seed_from_u64(SHIFT_SEED);
    let mut notes = Vec::new();
    let mut shift: Option<Complex> = None;
    for _ in 0..=SHIFT_ATTEMPTS {
        let working = match &shift {
            Some(d) => original.shifted(d),
            None => original.clone(),
        };
        match reduce_once(&working, ctx) {
            Ok((quad, principal, quartic, bring_jerrard, mismatches)) => {
                let (bring, scale) = match to_bring(&bring_jerrard, ctx) {
                    Some((form, lambda)) => (Some(form), Some(lambda)),
                    None => (None, None),
                };
                return Ok(TransformChain {
                    original,
                    shift,
                    quad,
                    principal,
                    quartic,
                    bring_jerrard,
                    scale,
                    bring,
                    mismatches,
                    notes,
                });
            }
            Err(e @ (Error::Degenerate(_) | Error::Branch { .. })) => {
                notes.push(e.to_string());
                let (re, im): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                shift = Some(ctx.complex((0.1 * rho * re, 0.1 * rho * im)));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!(
        "reduction failed after {SHIFT_ATTEMPTS} shifted retries: {}",
        notes.last().map(String::as_str).unwrap_or("")
    )))
}

type Reduced = (
    Option<QuadraticStage>,
    PrincipalQuintic,
    Option<QuarticStage>,
    BringJerrard,
    [f64; 2],
);

fn reduce_once(p: &Polynomial, ctx: &NumericContext) -> Result<Reduced> {
    let first = to_principal(p, ctx)?;
    let second = to_bring_jerrard(&first.form, ctx)?;
    Ok((
        first.map,
        first.form,
        second.map,
        second.form,
        [first.mismatch, second.mismatch],
    ))
}

/// Roots of the reduced form, as `TransformChain::reduced_polynomial`
/// defines it, mapped back to the roots of the original polynomial.
///
/// Each stage is undone by solving for the preimages of a root and keeping
/// the one with the smallest residual against the previous stage's
/// polynomial; candidates already taken are skipped while an unused one
/// with residual below `√tol` remains. Results are Newton-polished on the
/// original.
pub fn back_map(reduced_roots: &[Complex], chain: &TransformChain, ctx: &NumericContext) -> Result<Vec<Complex>> {
    if reduced_roots.len() != 5 {
        return Err(Error::Reduction(format!(
            "expected 5 reduced-form roots, got {}",
            reduced_roots.len()
        )));
    }
    let prec = ctx.prec();
    let bj_roots: Vec<Complex> = match &chain.scale {
        Some(lambda) => reduced_roots.iter().map(|w| Complex::with_val(prec, w * lambda)).collect(),
        None => reduced_roots.to_vec(),
    };
    let principal_poly = chain.principal.polynomial();
    let principal_roots = match &chain.quartic {
        Some(q) => undo_stage(&bj_roots, &principal_poly, ctx, |z| {
            let mut c = q.polynomial().coeffs().to_vec();
            c[0] -= z;
            solve_quartic(&Polynomial::new(c).expect("monic"))
        })?,
        None => bj_roots,
    };
    let working = match &chain.shift {
        Some(d) => chain.original.shifted(d),
        None => chain.original.clone(),
    };
    let shifted_roots = match &chain.quad {
        Some(q) => undo_stage(&principal_roots, &working, ctx, |y| {
            let c0 = Complex::with_val(prec, &q.b - y);
            solve_quadratic(&q.a, &c0).to_vec()
        })?,
        None => principal_roots,
    };
    let mut out = Vec::with_capacity(5);
    for x in shifted_roots {
        let x = match &chain.shift {
            Some(d) => x + d,
            None => x,
        };
        let polished = newton_polish(&chain.original, &x, 50, ctx)?;
        if !polished.converged {
            return Err(Error::Reduction(format!(
                "recovered root {} has residual {:.3e} after polishing",
                numeric::complex_to_string(&polished.x, 12),
                polished.residual
            )));
        }
        out.push(polished.x);
    }
    check_root_sum(&out, &chain.original, ctx)?;
    Ok(out)
}

/// For each image root, pick its best preimage against `target`.
fn undo_stage(
    images: &[Complex],
    target: &Polynomial,
    ctx: &NumericContext,
    preimages: impl Fn(&Complex) -> Vec<Complex>,
) -> Result<Vec<Complex>> {
    let gate = ctx.sqrt_tol();
    let mut chosen: Vec<Complex> = Vec::with_capacity(images.len());
    for z in images {
        let mut cands: Vec<(f64, Complex)> = preimages(z)
            .into_iter()
            .map(|x| (target.scaled_residual(&x), x))
            .collect();
        cands.sort_by(|a, b| a.0.total_cmp(&b.0));
        let taken = |x: &Complex| {
            let scale = numeric::abs_f64(x).max(1.0);
            chosen.iter().any(|c| numeric::dist(c, x) < gate * scale)
        };
        let pick = cands
            .iter()
            .find(|(r, x)| *r < gate && !taken(x))
            .or_else(|| cands.first())
            .map(|(_, x)| x.clone())
            .ok_or_else(|| Error::Reduction("stage produced no preimages".into()))?;
        let pick = if target.scaled_residual(&pick) < gate {
            pick
        } else {
            let polished = newton_polish(target, &pick, 50, ctx)?;
            if polished.residual >= gate {
                return Err(Error::Reduction(format!(
                    "no preimage of {} reaches residual √tol (best {:.3e})",
                    numeric::complex_to_string(z, 12),
                    polished.residual
                )));
            }
            polished.x
        };
        chosen.push(pick);
    }
    Ok(chosen)
}

/// The roots of a monic quintic sum to minus its x⁴ coefficient; a failed
/// match shows up here as a duplicated root.
fn check_root_sum(roots: &[Complex], monic: &Polynomial, ctx: &NumericContext) -> Result<()> {
    let sum = roots.iter().fold(ctx.zero(), |acc, r| acc + r);
    let want = -monic.coeffs()[4].clone();
    let scale = roots.iter().map(numeric::abs_f64).fold(1.0, f64::max);
    let miss = numeric::dist(&sum, &want);
    if miss > ctx.sqrt_tol() * scale {
        return Err(Error::Reduction(format!(
            "recovered roots do not sum to the x⁴ coefficient (off by {miss:.3e})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{aberth_roots, matched_distance};

    fn ctx() -> NumericContext {
        NumericContext::default()
    }

    fn roundtrip(p: &Polynomial, ctx: &NumericContext) -> Vec<Complex> {
        let chain = reduce(p, ctx).unwrap();
        let reduced = aberth_roots(&chain.reduced_polynomial(), ctx).unwrap();
        back_map(&reduced, &chain, ctx).unwrap()
    }

    #[test]
    fn integer_roots_come_back() {
        let ctx = ctx();
        let roots: Vec<Complex> = (1..=5).map(|k| ctx.complex(k)).collect();
        let p = Polynomial::from_roots(&ctx, &roots);
        assert!(matched_distance(&roundtrip(&p, &ctx), &roots) < 1e-30);
    }

    #[test]
    fn identity_chain_for_bring_form() {
        let ctx = ctx();
        let p = crate::bring::bring_polynomial(&ctx.complex(0.3), &ctx);
        let chain = reduce(&p, &ctx).unwrap();
        assert!(chain.quad.is_none() && chain.quartic.is_none() && chain.shift.is_none());
        assert_eq!(chain.scale, Some(ctx.one()));
        let ys = aberth_roots(&p, &ctx).unwrap();
        let xs = back_map(&ys, &chain, &ctx).unwrap();
        assert!(matched_distance(&xs, &ys) < 1e-38);
    }

    #[test]
    fn pure_fifth_power_has_no_bring_form() {
        let ctx = ctx();
        let roots = numeric::all_nth_roots(&ctx.complex(32), 5);
        let p = Polynomial::from_roots(&ctx, &roots);
        let chain = reduce(&p, &ctx).unwrap();
        assert!(chain.bring.is_none());
        let xs = back_map(&numeric::all_nth_roots(&ctx.complex(32), 5), &chain, &ctx).unwrap();
        assert!(matched_distance(&xs, &roots) < 1e-35);
    }

    #[test]
    fn degenerate_denominator_triggers_a_shift() {
        let ctx = ctx();
        // a = 0 with b ≠ 0 makes 4a³ - 10ab vanish.
        let p = Polynomial::new(vec![ctx.complex(1), ctx.complex(-2), ctx.complex(0.5), ctx.complex(3), ctx.zero(), ctx.one()])
            .unwrap();
        let chain = reduce(&p, &ctx).unwrap();
        assert!(chain.shift.is_some());
        assert!(!chain.notes.is_empty());
        let xs = roundtrip(&p, &ctx);
        assert!(matched_distance(&xs, &aberth_roots(&p, &ctx).unwrap()) < 1e-30);
    }

    #[test]
    fn non_monic_input() {
        let ctx = ctx();
        let roots: Vec<Complex> = [(1, 1), (2, -1), (-3, 0), (0, 2), (-1, -1)]
            .iter()
            .map(|&(re, im)| ctx.complex((re, im)))
            .collect();
        let monic = Polynomial::from_roots(&ctx, &roots);
        let c: Vec<Complex> = monic.coeffs().iter().map(|c| Complex::with_val(ctx.prec(), c * 7u32)).collect();
        let p = Polynomial::new(c).unwrap();
        assert!(matched_distance(&roundtrip(&p, &ctx), &roots) < 1e-30);
    }
}
