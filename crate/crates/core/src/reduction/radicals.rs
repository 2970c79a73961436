//! Closed-form roots of quadratics, cubics and quartics.

use rug::Complex;

use crate::numeric;
use crate::poly::Polynomial;

/// Both roots of `z² + b z + c`, computed without cancellation.
pub fn solve_quadratic(b: &Complex, c: &Complex) -> [Complex; 2] {
    let prec = b.prec().0.max(c.prec().0);
    let disc = Complex::with_val(prec, b.square_ref()) - Complex::with_val(prec, c * 4u32);
    let d = numeric::sqrt(&disc);
    // Pick the sign that adds magnitudes: Re(conj(b)·d) ≥ 0.
    let dot = Complex::with_val(prec, b.conj_ref()) * &d;
    let big = if dot.real().is_sign_negative() {
        Complex::with_val(prec, b - &d)
    } else {
        Complex::with_val(prec, b + &d)
    };
    let z1 = -big / 2u32;
    if numeric::is_zero(&z1) {
        return [z1.clone(), z1];
    }
    let z2 = Complex::with_val(prec, c / &z1);
    [z1, z2]
}

/// The three roots of `x³ = 3a·x + b`.
///
/// With `x = ∛A + ∛B`, `A + B = b` and `AB = a³`, so `A`, `B` are the roots of
/// `X² - bX + a³ = 0`. The cube roots are paired through `∛A·∛B = a`, giving
/// `x_j = ω^j ∛A + a/(ω^j ∛A)`.
pub fn solve_cubic(a: &Complex, b: &Complex) -> [Complex; 3] {
    let prec = a.prec().0.max(b.prec().0);
    let a3 = numeric::powi(a, 3);
    let nb = Complex::with_val(prec, -b);
    let [big, small] = solve_quadratic(&nb, &a3);
    let pick = if numeric::abs(&big) >= numeric::abs(&small) { big } else { small };
    if numeric::is_zero(&pick) {
        // b = 0 and a = 0: triple root at the origin.
        let z = Complex::new(prec);
        return [z.clone(), z.clone(), z];
    }
    let roots = numeric::all_nth_roots(&pick, 3);
    let mut it = roots.into_iter().map(|u| Complex::with_val(prec, a / &u) + u);
    [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
}

/// Roots of `c3 x³ + c2 x² + c1 x + c0` (`c3 ≠ 0`) through the depressed form.
pub fn cubic_roots(c3: &Complex, c2: &Complex, c1: &Complex, c0: &Complex) -> [Complex; 3] {
    let prec = c3.prec().0;
    let b2 = Complex::with_val(prec, c2 / c3);
    let b1 = Complex::with_val(prec, c1 / c3);
    let b0 = Complex::with_val(prec, c0 / c3);
    // x = y - b2/3 gives y³ + p y + q = 0, i.e. y³ = 3(-p/3) y + (-q).
    let shift = Complex::with_val(prec, &b2 / 3u32);
    let b2sq = Complex::with_val(prec, b2.square_ref());
    let p = Complex::with_val(prec, &b1 - Complex::with_val(prec, &b2sq / 3u32));
    let q = Complex::with_val(prec, numeric::powi(&b2, 3) * 2u32 / 27u32)
        - Complex::with_val(prec, &b2 * &b1) / 3u32
        + &b0;
    let a = Complex::with_val(prec, -p / 3u32);
    let b = Complex::with_val(prec, -q);
    let ys = solve_cubic(&a, &b);
    let poly = [b0, b1, b2];
    ys.map(|y| polish_monic(&poly, Complex::with_val(prec, &y - &shift), 3))
}

/// Roots of a degree-4 polynomial by Ferrari's method, each refined with a
/// few Newton steps against the input.
pub fn solve_quartic(p: &Polynomial) -> Vec<Complex> {
    assert_eq!(p.degree(), 4, "solve_quartic needs a quartic");
    let m = p.monic();
    let c = m.coeffs();
    let prec = c[4].prec().0;
    let (a, b, cc, d) = (&c[3], &c[2], &c[1], &c[0]);

    // x = y - a/4: y⁴ + P y² + Q y + R.
    let a2 = Complex::with_val(prec, a.square_ref());
    let a3 = Complex::with_val(prec, &a2 * a);
    let a4 = Complex::with_val(prec, a2.square_ref());
    let pp = Complex::with_val(prec, b - Complex::with_val(prec, &a2 * 3u32) / 8u32);
    let qq = Complex::with_val(prec, &a3 / 8u32) - Complex::with_val(prec, a * b) / 2u32 + cc;
    let rr = Complex::with_val(prec, &a4 * -3i32) / 256u32
        + Complex::with_val(prec, &a2 * b) / 16u32
        - Complex::with_val(prec, a * cc) / 4u32
        + d;
    let shift = Complex::with_val(prec, a / 4u32);

    let scale = (numeric::abs(&pp) + numeric::abs(&rr) + 1u32) >> prec;
    let ys: Vec<Complex> = if numeric::abs(&qq) <= scale {
        // Biquadratic: y² is a root of z² + P z + R.
        let mut out = Vec::with_capacity(4);
        for z in solve_quadratic(&pp, &rr) {
            let s = numeric::sqrt(&z);
            out.push(Complex::with_val(prec, -&s));
            out.push(s);
        }
        out
    } else {
        // Resolvent 8m³ + 8P m² + (2P² - 8R) m - Q² = 0; take its largest root.
        let eight = Complex::with_val(prec, 8);
        let c2 = Complex::with_val(prec, &pp * 8u32);
        let c1 = Complex::with_val(prec, pp.square_ref()) * 2u32 - Complex::with_val(prec, &rr * 8u32);
        let c0 = -Complex::with_val(prec, qq.square_ref());
        let ms = cubic_roots(&eight, &c2, &c1, &c0);
        let mres = ms
            .into_iter()
            .max_by(|x, y| numeric::abs(x).total_cmp(&numeric::abs(y)))
            .expect("three roots");
        let s = numeric::sqrt(&Complex::with_val(prec, &mres * 2u32));
        let half_p = Complex::with_val(prec, &pp / 2u32) + &mres;
        let corr = Complex::with_val(prec, &qq / Complex::with_val(prec, &s * 2u32));
        let mut out = Vec::with_capacity(4);
        // y² - s y + (P/2 + m + Q/(2s)) = 0 and y² + s y + (P/2 + m - Q/(2s)) = 0.
        let neg_s = Complex::with_val(prec, -&s);
        for (lin, cst) in [
            (neg_s, Complex::with_val(prec, &half_p + &corr)),
            (s.clone(), Complex::with_val(prec, &half_p - &corr)),
        ] {
            out.extend(solve_quadratic(&lin, &cst));
        }
        out
    };
    let poly = [d.clone(), cc.clone(), b.clone(), a.clone()];
    ys.into_iter()
        .map(|y| polish_monic(&poly, Complex::with_val(prec, &y - &shift), 3))
        .collect()
}

/// Newton steps on the monic polynomial `xⁿ + Σ low[i] xⁱ`; a step is kept
/// only if it does not increase the residual.
fn polish_monic(low: &[Complex], mut x: Complex, steps: usize) -> Complex {
    let prec = x.prec().0;
    let eval = |x: &Complex| {
        let mut p = Complex::with_val(prec, 1);
        let mut dp = Complex::new(prec);
        for c in low.iter().rev() {
            dp *= x;
            dp += &p;
            p *= x;
            p += c;
        }
        (p, dp)
    };
    let (mut p, mut dp) = eval(&x);
    for _ in 0..steps {
        if numeric::is_zero(&p) || numeric::is_zero(&dp) {
            break;
        }
        let cand = Complex::with_val(prec, &x - Complex::with_val(prec, &p / &dp));
        let (cp, cdp) = eval(&cand);
        if numeric::abs(&cp) <= numeric::abs(&p) {
            x = cand;
            p = cp;
            dp = cdp;
        } else {
            break;
        }
    }
    x
}
