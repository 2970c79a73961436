//! Independent root finder used for differential testing: simultaneous
//! Aberth–Ehrlich iteration on the undeflated polynomial.
//!
//! Nothing here shares code with the reduction pipeline beyond polynomial
//! evaluation, so agreement between the two is meaningful.

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::poly::Polynomial;

const MAX_SWEEPS: usize = 1000;

/// All roots of `p` (with multiplicity) by Aberth–Ehrlich iteration.
pub fn aberth_roots(p: &Polynomial, ctx: &NumericContext) -> Result<Vec<Complex>> {
    let n = p.degree();
    if n == 0 {
        return Ok(vec![]);
    }
    let prec = ctx.prec();
    let monic = p.monic();
    let dp = monic.derivative();
    // Starting points on a circle of the Fujiwara bound radius, rotated off
    // the real axis to avoid symmetric stalls.
    let radius = fujiwara_bound(&monic);
    let mut z: Vec<Complex> = (0..n)
        .map(|j| {
            let angle = Float::with_val(prec, ctx.pi() * (2 * j as u32)) / n as u32 + 0.4f64;
            let (s, c) = angle.sin_cos(Float::new(prec));
            Complex::with_val(prec, (c * &radius, s * &radius))
        })
        .collect();
    let target = ctx.eps() * 1e-2;
    let mut done = vec![false; n];
    for _ in 0..MAX_SWEEPS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let v = monic.eval(&z[i]);
            if numeric::is_zero(&v) {
                done[i] = true;
                continue;
            }
            let d = dp.eval(&z[i]);
            let ratio = Complex::with_val(prec, &v / &d);
            let mut repulsion = Complex::new(prec);
            for j in 0..n {
                if j != i {
                    let diff = Complex::with_val(prec, &z[i] - &z[j]);
                    if !numeric::is_zero(&diff) {
                        repulsion += diff.recip();
                    }
                }
            }
            let den = Complex::with_val(prec, 1) - Complex::with_val(prec, &ratio * &repulsion);
            let step = if numeric::is_zero(&den) { ratio } else { ratio / den };
            let scale = numeric::abs_f64(&z[i]).max(1.0);
            if numeric::abs_f64(&step) <= target * scale {
                done[i] = true;
            }
            z[i] -= step;
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::Convergence(format!(
        "Aberth iteration did not settle in {MAX_SWEEPS} sweeps"
    )))
}

/// `2 max |a_{n-k}/a_n|^{1/k}`, an upper bound on root moduli.
fn fujiwara_bound(monic: &Polynomial) -> Float {
    let n = monic.degree();
    let prec = monic.leading().prec().0;
    let mut best = Float::with_val(prec, 0);
    for k in 1..=n {
        let c = numeric::abs(&monic.coeffs()[n - k]);
        if c.is_zero() {
            continue;
        }
        let root = if k == 1 { c } else { c.root(k as u32) };
        if root > best {
            best = root;
        }
    }
    if best.is_zero() {
        best = Float::with_val(prec, 1);
    }
    best * 2u32
}

/// Minimal-cost pairing of two equally long root lists. Exhaustive for up to
/// eight roots (quintics need 120 permutations); returns the maximum pair
/// distance under the best pairing.
pub fn matched_distance(a: &[Complex], b: &[Complex]) -> f64 {
    assert_eq!(a.len(), b.len(), "root lists must have equal length");
    assert!(a.len() <= 8, "exhaustive matching is limited to eight roots");
    let n = a.len();
    let d: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| numeric::dist(x, y)).collect())
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    permute(&mut perm, 0, &d, &mut best);
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, d: &[Vec<f64>], best: &mut f64) {
    if k == perm.len() {
        let cost = perm.iter().enumerate().map(|(i, &j)| d[i][j]).fold(0.0, f64::max);
        if cost < *best {
            *best = cost;
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, d, best);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_roots() {
        let ctx = NumericContext::default();
        let roots: Vec<Complex> = (1..=5).map(|k| ctx.complex(k)).collect();
        let p = Polynomial::from_roots(&ctx, &roots);
        let found = aberth_roots(&p, &ctx).unwrap();
        assert!(matched_distance(&found, &roots) < 1e-35);
    }

    #[test]
    fn unity_roots() {
        let ctx = NumericContext::default();
        let mut c = vec![ctx.complex(-1)];
        c.extend((0..4).map(|_| ctx.zero()));
        c.push(ctx.one());
        let p = Polynomial::new(c).unwrap();
        let found = aberth_roots(&p, &ctx).unwrap();
        let want = numeric::all_nth_roots(&ctx.one(), 5);
        assert!(matched_distance(&found, &want) < 1e-35);
    }

    #[test]
    fn matching_ignores_order() {
        let ctx = NumericContext::default();
        let a = [ctx.complex(1), ctx.complex(2), ctx.complex((0, 1))];
        let b = [ctx.complex((0, 1)), ctx.complex(1), ctx.complex(2)];
        assert_eq!(matched_distance(&a, &b), 0.0);
    }
}
