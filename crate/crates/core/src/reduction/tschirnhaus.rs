//! The two Tschirnhausen stages and the Bring scaling.
//!
//! Every closed-form stage is checked against an independently computed
//! image polynomial: the power sums of the transformed roots follow from
//! Newton's identities without ever solving the quintic.

use std::borrow::Borrow;

use rug::Complex;

use super::radicals::cubic_roots;
use super::terms::{self, Term};
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::poly::Polynomial;

/// `x⁵ + c2 x² + c1 x + c0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalQuintic {
    pub c2: Complex,
    pub c1: Complex,
    pub c0: Complex,
}

/// `x⁵ + a2 x + b2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BringJerrard {
    pub a2: Complex,
    pub b2: Complex,
}

/// `x⁵ + x + t`.
#[derive(Clone, Debug, PartialEq)]
pub struct BringForm {
    pub t: Complex,
}

/// `y = x² + A x + B`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticStage {
    pub a: Complex,
    pub b: Complex,
}

/// `y = x⁴ + k x³ + l x² + m x + n`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticStage {
    pub k: Complex,
    pub l: Complex,
    pub m: Complex,
    pub n: Complex,
}

impl PrincipalQuintic {
    pub fn polynomial(&self) -> Polynomial {
        let prec = self.c2.prec().0;
        quintic(prec, [&self.c0, &self.c1, &self.c2])
    }
}

impl BringJerrard {
    pub fn polynomial(&self) -> Polynomial {
        let prec = self.a2.prec().0;
        quintic(prec, [&self.b2, &self.a2])
    }
}

impl BringForm {
    pub fn polynomial(&self) -> Polynomial {
        let prec = self.t.prec().0;
        quintic(prec, [&self.t, &Complex::with_val(prec, 1)])
    }
}

impl QuadraticStage {
    pub fn polynomial(&self) -> Polynomial {
        let prec = self.a.prec().0;
        Polynomial::new(vec![self.b.clone(), self.a.clone(), Complex::with_val(prec, 1)]).expect("monic")
    }
}

impl QuarticStage {
    pub fn polynomial(&self) -> Polynomial {
        let prec = self.k.prec().0;
        let c = vec![
            self.n.clone(),
            self.m.clone(),
            self.l.clone(),
            self.k.clone(),
            Complex::with_val(prec, 1),
        ];
        Polynomial::new(c).expect("monic")
    }
}

/// Monic quintic with the given low coefficients (ascending) and zeros above.
fn quintic(prec: u32, low: impl IntoIterator<Item = impl Borrow<Complex>>) -> Polynomial {
    let mut c: Vec<Complex> = low.into_iter().map(|z| Complex::with_val(prec, z.borrow())).collect();
    c.resize(5, Complex::new(prec));
    c.push(Complex::with_val(prec, 1));
    Polynomial::new(c).expect("monic")
}

/// Evaluate an integer-coefficient polynomial given as a term list.
pub(crate) fn eval_terms<const N: usize>(terms: &[Term<N>], vars: &[&Complex; N], prec: u32) -> Complex {
    let top = terms
        .iter()
        .flat_map(|(_, e)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    // powers[v][e] = vars[v]^e
    let powers: Vec<Vec<Complex>> = vars
        .iter()
        .map(|v| {
            let mut row = vec![Complex::with_val(prec, 1)];
            for e in 1..=top {
                let next = Complex::with_val(prec, &row[e - 1] * *v);
                row.push(next);
            }
            row
        })
        .collect();
    let mut sum = Complex::new(prec);
    for (coeff, exps) in terms {
        let mut term = Complex::with_val(prec, *coeff);
        for (v, &e) in exps.iter().enumerate() {
            if e > 0 {
                term *= &powers[v][e as usize];
            }
        }
        sum += term;
    }
    sum
}

/// Power sums `p_0 … p_count` of the roots of a monic polynomial.
pub fn power_sums(monic: &Polynomial, count: usize) -> Vec<Complex> {
    let n = monic.degree();
    let c = monic.coeffs();
    let prec = monic.leading().prec().0;
    let mut p = vec![Complex::with_val(prec, n as u32)];
    for k in 1..=count {
        // p_k + a_{n-1} p_{k-1} + … = 0, with k·a_{n-k} in place of p_0 a_{n-k}.
        let mut s = Complex::new(prec);
        for i in 1..=k.min(n) {
            let a = &c[n - i];
            if i == k {
                s += Complex::with_val(prec, a * k as u32);
            } else {
                s += Complex::with_val(prec, a * &p[k - i]);
            }
        }
        p.push(-s);
    }
    p
}

/// The monic polynomial whose roots are `T(xᵢ)` for the roots `xᵢ` of the
/// monic `p`; same degree as `p`.
pub fn image_polynomial(p: &Polynomial, transform: &Polynomial) -> Polynomial {
    let n = p.degree();
    let prec = p.leading().prec().0;
    let sums = power_sums(p, n * transform.degree());
    // Image power sums P_k = Σᵢ T(xᵢ)^k.
    let mut big = vec![Complex::with_val(prec, n as u32)];
    let mut tk = Polynomial::new(vec![Complex::with_val(prec, 1)]).expect("constant");
    for _ in 1..=n {
        tk = tk.mul(transform);
        let mut s = Complex::new(prec);
        for (j, c) in tk.coeffs().iter().enumerate() {
            s += Complex::with_val(prec, c * &sums[j]);
        }
        big.push(s);
    }
    // Elementary symmetric functions: k e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} P_i.
    let mut e = vec![Complex::with_val(prec, 1)];
    for k in 1..=n {
        let mut s = Complex::new(prec);
        for i in 1..=k {
            let t = Complex::with_val(prec, &e[k - i] * &big[i]);
            if i % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        e.push(s / k as u32);
    }
    // Π (y - yᵢ) = Σ (-1)^k e_k y^{n-k}
    let coeffs = (0..=n)
        .map(|deg| {
            let k = n - deg;
            if k % 2 == 1 {
                -e[k].clone()
            } else {
                e[k].clone()
            }
        })
        .collect();
    Polynomial::new(coeffs).expect("monic")
}

/// Root-size scale `max |c_j|^{1/(n-j)}` of a monic polynomial (at least a
/// tiny positive number so weights never vanish).
pub fn root_scale(monic: &Polynomial) -> f64 {
    let n = monic.degree();
    let mut rho: f64 = 0.0;
    for (j, c) in monic.coeffs().iter().enumerate().take(n) {
        let a = numeric::abs_f64(c);
        if a > 0.0 {
            rho = rho.max(a.powf(1.0 / (n - j) as f64));
        }
    }
    if rho > 0.0 {
        rho
    } else {
        1.0
    }
}

/// How far a candidate image is from the expected coefficients: coefficient
/// `j` of the difference divided by `ρ^{5-j}`, maximized.
fn coefficient_mismatch(image: &Polynomial, expected: &[&Complex; 5]) -> f64 {
    let rho = root_scale(image).max(root_scale(&quintic(
        image.leading().prec().0,
        expected.iter().copied(),
    )));
    (0..5)
        .map(|j| {
            let d = numeric::dist(&image.coeffs()[j], expected[j]);
            d / rho.powi(5 - j as i32)
        })
        .fold(0.0, f64::max)
}

/// Outcome of one closed-form stage: the stage itself, or `None` when the
/// input was already in the target shape, plus the verification mismatch.
#[derive(Clone, Debug)]
pub struct Stage<T, S> {
    pub form: T,
    pub map: Option<S>,
    pub mismatch: f64,
}

/// Remove the x⁴ and x³ terms with `y = x² + A x + B`. The `+` branch of
/// the square root is tried first; the first branch whose image checks out
/// wins.
pub fn to_principal(p: &Polynomial, ctx: &NumericContext) -> Result<Stage<PrincipalQuintic, QuadraticStage>> {
    let candidates = principal_candidates(p, ctx)?;
    let mut residuals = Vec::new();
    for stage in candidates {
        if stage.map.is_none() || stage.mismatch < ctx.sqrt_tol() {
            return Ok(stage);
        }
        residuals.push(stage.mismatch);
    }
    Err(Error::Branch {
        what: "quadratic Tschirnhausen transform".into(),
        residuals,
    })
}

/// Both sign branches of the quadratic stage, each with its image mismatch
/// (a single identity stage when there is nothing to remove).
pub fn principal_candidates(
    p: &Polynomial,
    ctx: &NumericContext,
) -> Result<Vec<Stage<PrincipalQuintic, QuadraticStage>>> {
    if p.degree() != 5 {
        return Err(Error::Domain(format!("expected a quintic, got degree {}", p.degree())));
    }
    let prec = ctx.prec();
    let monic = p.monic();
    let c = monic.coeffs();
    let (a, b, cc, d, e) = (&c[4], &c[3], &c[2], &c[1], &c[0]);
    let rho = root_scale(&monic);
    if numeric::abs_f64(a) <= ctx.tol() * rho && numeric::abs_f64(b) <= ctx.tol() * rho * rho {
        return Ok(vec![Stage {
            form: PrincipalQuintic {
                c2: cc.clone(),
                c1: d.clone(),
                c0: e.clone(),
            },
            map: None,
            mismatch: 0.0,
        }]);
    }
    let ab = Complex::with_val(prec, a * b);
    let a2 = Complex::with_val(prec, a.square_ref());
    let den_a = Complex::with_val(prec, numeric::powi(a, 3) * 4u32) - Complex::with_val(prec, &ab * 10u32);
    let den_b = Complex::with_val(prec, &a2 * 20u32) - Complex::with_val(prec, b * 50u32);
    let gate = ctx.sqrt_tol();
    if numeric::abs_f64(&den_a) < gate * rho.powi(3) || numeric::abs_f64(&den_b) < gate * rho * rho {
        return Err(Error::Degenerate(
            "quadratic Tschirnhausen denominators vanish (4a³ - 10ab or 20a² - 50b)".into(),
        ));
    }
    let delta1 = quadratic_stage_discriminant(a, b, cc, d, prec);
    let root = numeric::sqrt(&(delta1 * 5u32));
    let ac15 = Complex::with_val(prec, a * cc) * 15u32;
    let num_a = Complex::with_val(prec, numeric::powi(a, 4) * 4u32)
        - Complex::with_val(prec, &a2 * b) * 13u32
        + &ac15;
    let num_b = Complex::with_val(prec, &a2 * b) * 5u32 - Complex::with_val(prec, b.square_ref()) * 20u32 + &ac15;
    let mut out = Vec::with_capacity(2);
    for sign in [1i32, -1] {
        let signed = Complex::with_val(prec, &root * sign);
        let big_a = Complex::with_val(prec, &num_a + &signed) / &den_a;
        let big_b = Complex::with_val(prec, &num_b + &signed) / &den_b;
        let vars = [a, b, cc, d, e, &big_a, &big_b];
        let form = PrincipalQuintic {
            c2: eval_terms(terms::PRINCIPAL_QUADRATIC, &vars, prec),
            c1: eval_terms(terms::PRINCIPAL_LINEAR, &vars, prec),
            c0: eval_terms(terms::PRINCIPAL_CONSTANT, &vars, prec),
        };
        let stage = QuadraticStage { a: big_a, b: big_b };
        let image = image_polynomial(&monic, &stage.polynomial());
        let zero = Complex::new(prec);
        let mismatch = coefficient_mismatch(&image, &[&form.c0, &form.c1, &form.c2, &zero, &zero]);
        out.push(Stage {
            form,
            map: Some(stage),
            mismatch,
        });
    }
    Ok(out)
}

/// `Δ₁ = -3a⁴b² + 12a²b³ + 8a⁵c - 38a³bc + 45a²c² + 16a⁴d - 40a²bd`.
fn quadratic_stage_discriminant(a: &Complex, b: &Complex, c: &Complex, d: &Complex, prec: u32) -> Complex {
    const DELTA1: &[Term<4>] = &[
        (-3, [4, 2, 0, 0]),
        (12, [2, 3, 0, 0]),
        (8, [5, 0, 1, 0]),
        (-38, [3, 1, 1, 0]),
        (45, [2, 0, 2, 0]),
        (16, [4, 0, 0, 1]),
        (-40, [2, 1, 0, 1]),
    ];
    eval_terms(DELTA1, &[a, b, c, d], prec)
}

/// The quartic-stage discriminant `Δ₅` in the coefficients of
/// `x⁵ + r x² + s x + t` (`s` linear, `t` constant).
pub fn quartic_stage_discriminant(r: &Complex, s: &Complex, t: &Complex, prec: u32) -> Complex {
    const DELTA5: &[Term<3>] = &[
        (-27, [6, 2, 0]),
        (256, [2, 5, 0]),
        (108, [7, 0, 1]),
        (-1600, [3, 3, 1]),
        (2250, [4, 1, 2]),
        (3125, [2, 0, 4]),
    ];
    eval_terms(DELTA5, &[r, s, t], prec)
}

/// Remove the x² term of a principal quintic with a quartic transform.
pub fn to_bring_jerrard(
    pq: &PrincipalQuintic,
    ctx: &NumericContext,
) -> Result<Stage<BringJerrard, QuarticStage>> {
    let prec = ctx.prec();
    let (r, s, t) = (&pq.c2, &pq.c1, &pq.c0);
    let poly = pq.polynomial();
    let rho = root_scale(&poly);
    if numeric::abs_f64(r) <= ctx.tol() * rho.powi(3) {
        return Ok(Stage {
            form: BringJerrard {
                a2: s.clone(),
                b2: t.clone(),
            },
            map: None,
            mismatch: 0.0,
        });
    }
    let gate = ctx.sqrt_tol();
    let rs = Complex::with_val(prec, r * s);
    let rst = Complex::with_val(prec, &rs * t);
    let s2 = Complex::with_val(prec, s.square_ref());
    let t2 = Complex::with_val(prec, t.square_ref());
    let r3 = numeric::powi(r, 3);
    let r4 = Complex::with_val(prec, &r3 * r);
    // D = 27r⁴ - 160s³ + 300rst; every term has weight 12.
    let d = Complex::with_val(prec, &r4 * 27u32) - Complex::with_val(prec, numeric::powi(s, 3) * 160u32)
        + Complex::with_val(prec, &rst * 300u32);
    if numeric::abs_f64(&d) < gate * rho.powi(12) {
        return Err(Error::Degenerate("quartic Tschirnhausen denominator vanishes".into()));
    }
    let delta5 = quartic_stage_discriminant(r, s, t, prec);
    let root = numeric::sqrt(&(delta5 * 5u32));
    let vars3 = [r, s, t];
    let m1 = -eval_terms(terms::M1, &vars3, prec);
    let n1 = eval_terms(terms::N1, &vars3, prec);
    let m2 = eval_terms(terms::M2, &vars3, prec);
    let n2 = eval_terms(terms::N2, &vars3, prec);
    let m3 = eval_terms(terms::M3, &vars3, prec);
    let n3 = eval_terms(terms::N3, &vars3, prec);
    let rd = Complex::with_val(prec, r * &d);
    let s1 = Complex::with_val(prec, &rd * 2u32);
    let s2_den = Complex::with_val(prec, &s1 * &d);
    let s3 = Complex::with_val(prec, &rd * &d) * &d * 10u32;
    let mut residuals = Vec::new();
    for sign in [1i32, -1] {
        let sq = Complex::with_val(prec, &root * sign);
        let k = (Complex::with_val(prec, &r3 * s) * -27i32 + Complex::with_val(prec, &s2 * t) * 400u32
            - Complex::with_val(prec, r * &t2) * 375u32
            - Complex::with_val(prec, &sq * 3u32))
            / Complex::with_val(prec, &d * 2u32);
        let l = (Complex::with_val(prec, &r3 * &s2) * 18u32 - Complex::with_val(prec, &r4 * t) * 45u32
            - Complex::with_val(prec, &rs * &t2) * 250u32
            + Complex::with_val(prec, s * &sq) * 2u32)
            / &rd;
        let n = (Complex::with_val(prec, &r4 * s) * 135u32
            - Complex::with_val(prec, numeric::powi(s, 4) * 1280u32)
            + Complex::with_val(prec, Complex::with_val(prec, r * &s2) * t) * 3600u32
            - Complex::with_val(prec, Complex::with_val(prec, r.square_ref()) * &t2) * 1125u32
            - Complex::with_val(prec, Complex::with_val(prec, r * &sq) * 9u32))
            / Complex::with_val(prec, &d * 10u32);
        let x2 = (Complex::with_val(prec, &n1 * &sq) + &m1) / &s1;
        let x1 = (Complex::with_val(prec, &n2 * &sq) + &m2) / &s2_den;
        let x0 = (Complex::with_val(prec, &n3 * &sq) + &m3) / &s3;
        for m in cubic_roots(r, &x2, &x1, &x0) {
            let stage = QuarticStage {
                k: k.clone(),
                l: l.clone(),
                m,
                n: n.clone(),
            };
            let vars = [&stage.k, &stage.l, &stage.m, &stage.n, r, s, t];
            let form = BringJerrard {
                a2: eval_terms(terms::BJ_LINEAR, &vars, prec),
                b2: eval_terms(terms::BJ_CONSTANT, &vars, prec),
            };
            let image = image_polynomial(&poly, &stage.polynomial());
            let zero = Complex::new(prec);
            let mismatch = coefficient_mismatch(&image, &[&form.b2, &form.a2, &zero, &zero, &zero]);
            if mismatch < gate {
                return Ok(Stage {
                    form,
                    map: Some(stage),
                    mismatch,
                });
            }
            residuals.push(mismatch);
        }
    }
    Err(Error::Branch {
        what: "quartic Tschirnhausen transform (m root)".into(),
        residuals,
    })
}

/// Scale `x = λ y` with `λ = A2^{1/4}` (principal), giving `y⁵ + y + t` with
/// `t = B2/λ⁵`. `None` when `A2` vanishes and the roots are plain fifth roots
/// of `-B2`.
pub fn to_bring(bj: &BringJerrard, ctx: &NumericContext) -> Option<(BringForm, Complex)> {
    let rho = root_scale(&bj.polynomial());
    if numeric::abs_f64(&bj.a2) <= ctx.tol() * rho.powi(4) {
        return None;
    }
    let lambda = numeric::nth_root(&bj.a2, 4);
    let t = Complex::with_val(ctx.prec(), &bj.b2 / numeric::powi(&lambda, 5));
    Some((BringForm { t }, lambda))
}
