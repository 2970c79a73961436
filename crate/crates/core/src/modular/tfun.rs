//! The algebraic maps between values of the Rogers–Ramanujan continued
//! fraction, the j-invariant and the singular modulus.
//!
//! Several maps are closed-form roots of cubics. Each is evaluated on all
//! three cube-root branches and the branch that is analytic at `q → 0` is
//! kept; taking the principal cube root alone flips branch as soon as the
//! input picks up a tiny imaginary part.

use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::special::j_from_modulus;

fn sqrt3(prec: u32) -> Float {
    Float::with_val(prec, 3).sqrt()
}

/// `1 ± i√3`.
fn one_pm_i_sqrt3(prec: u32, plus: bool) -> Complex {
    let s = sqrt3(prec);
    Complex::with_val(prec, (1, if plus { s } else { -s }))
}

fn pick_nearest(cands: Vec<Complex>, target: &Complex) -> Complex {
    cands
        .into_iter()
        .min_by(|a, b| numeric::dist(a, target).total_cmp(&numeric::dist(b, target)))
        .expect("nonempty candidate list")
}

/// Cube roots of `radicand` on all three branches; errors when it vanishes.
fn cube_roots(radicand: &Complex, what: &str) -> Result<Vec<Complex>> {
    if numeric::is_zero(radicand) {
        return Err(Error::Branch {
            what: format!("{what}: the cube-root radicand vanishes"),
            residuals: vec![],
        });
    }
    Ok(numeric::all_nth_roots(radicand, 3))
}

/// `R(q²)` from `x = R(q)`: the root of `x w³ + x³ w² - w + x² = 0` that
/// behaves like `x²` as `q → 0`.
pub fn t1(x: &Complex) -> Result<Complex> {
    if numeric::is_zero(x) {
        return Ok(x.clone());
    }
    let prec = x.prec().0;
    let x2 = numeric::powi(x, 2);
    let x3 = Complex::with_val(prec, &x2 * x);
    let x4 = Complex::with_val(prec, x2.square_ref());
    let x6 = Complex::with_val(prec, x3.square_ref());
    let x8 = Complex::with_val(prec, x4.square_ref());
    let x9 = Complex::with_val(prec, &x8 * x);
    let x13 = Complex::with_val(prec, &x9 * &x4);
    let inner = numeric::sqrt(&(Complex::with_val(prec, &x8 * 11u32) + &x13 - &x3));
    let radicand = Complex::with_val(prec, &x4 * 18u32) + &x9 + inner * sqrt3(prec) * 3u32;
    let lin = Complex::with_val(prec, x * -3i32) - &x6;
    let mut cands = Vec::with_capacity(3);
    for c in cube_roots(&radicand, "T1")? {
        let xc6 = Complex::with_val(prec, x * &c) * 6u32;
        let a = Complex::with_val(prec, -&x2) / 3u32;
        let b = one_pm_i_sqrt3(prec, false) * &lin / &xc6;
        let d = one_pm_i_sqrt3(prec, true) * &c / Complex::with_val(prec, x * 6u32);
        cands.push(a - b + d);
    }
    Ok(pick_nearest(cands, &x2))
}

/// Klein's icosahedral formula `j = -(x²⁰ - 228x¹⁵ + 494x¹⁰ + 228x⁵ + 1)³ /
/// (x⁵ (x¹⁰ + 11x⁵ - 1)⁵)` evaluated at `x = R(q²)`.
pub fn t2(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = x.prec().0;
    let x5 = numeric::powi(x, 5);
    let x10 = Complex::with_val(prec, x5.square_ref());
    let x15 = Complex::with_val(prec, &x10 * &x5);
    let x20 = Complex::with_val(prec, x10.square_ref());
    let num = x20 - Complex::with_val(prec, &x15 * 228u32)
        + Complex::with_val(prec, &x10 * 494u32)
        + Complex::with_val(prec, &x5 * 228u32)
        + 1u32;
    let inner = Complex::with_val(prec, &x10 + Complex::with_val(prec, &x5 * 11u32)) - 1u32;
    let den = Complex::with_val(prec, &x5 * numeric::powi(&inner, 5));
    if numeric::abs(&den) <= ctx.eps() * ctx.eps() {
        return Err(Error::Pole(format!(
            "icosahedral j-formula has a pole at {}",
            numeric::complex_to_string(x, 12)
        )));
    }
    Ok(-numeric::powi(&num, 3) / den)
}

/// One of the four closed-form inverses of the modulus-to-j map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TBranch {
    T31,
    T32,
    T33,
    T34,
}

impl TBranch {
    pub const ALL: [TBranch; 4] = [TBranch::T34, TBranch::T33, TBranch::T32, TBranch::T31];

    pub fn name(self) -> &'static str {
        match self {
            TBranch::T31 => "T31",
            TBranch::T32 => "T32",
            TBranch::T33 => "T33",
            TBranch::T34 => "T34",
        }
    }
}

impl std::str::FromStr for TBranch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T31" | "1" => Ok(TBranch::T31),
            "T32" | "2" => Ok(TBranch::T32),
            "T33" | "3" => Ok(TBranch::T33),
            "T34" | "4" => Ok(TBranch::T34),
            _ => Err(Error::Parse(format!("unknown modulus branch {s:?}"))),
        }
    }
}

/// A modulus candidate from one branch with its relative j round-trip error.
#[derive(Clone, Debug)]
pub struct T3Candidate {
    pub branch: TBranch,
    pub k: Complex,
    pub residual: f64,
}

fn t3_branch(j: &Complex, branch: TBranch) -> Result<Complex> {
    let prec = j.prec().0;
    let s3 = sqrt3(prec);
    let i = Complex::with_val(prec, (0, 1));
    let j2 = Complex::with_val(prec, j.square_ref());
    let j3 = Complex::with_val(prec, &j2 * j);
    let rad = numeric::sqrt(&(Complex::with_val(prec, &j2 * 1728u32) - &j3));
    let d1 = Complex::with_val(prec, j * 884736u32) - Complex::with_val(prec, &j2 * 2304u32)
        + &j3
        + rad * Complex::with_val(prec, &s3 * 12288u32);
    if numeric::is_zero(&d1) {
        return Err(Error::Branch {
            what: "T3: the discriminant term vanishes".into(),
            residuals: vec![],
        });
    }
    let d13 = numeric::cbrt(&d1);
    let d23 = Complex::with_val(prec, d13.square_ref());
    let j_m576 = Complex::with_val(prec, j - 576u32);
    let j_m1536 = Complex::with_val(prec, j - 1536u32);
    // 6i(i + √3) and -6 - 6i√3
    let c_a = Complex::with_val(prec, &i * (Complex::with_val(prec, &i + &s3))) * 6u32;
    let c_b = Complex::with_val(prec, (-6, Float::with_val(prec, &s3 * -6i32)));
    let sixteenth = |v: Complex| numeric::sqrt(&(v / 16u32));
    let k = match branch {
        TBranch::T33 | TBranch::T34 => {
            let inner = Complex::with_val(prec, &c_a * &d1)
                + Complex::with_val(prec, &d23 * &j_m576) * 12u32
                + Complex::with_val(prec, &c_b * &d13) * &j_m1536 * j;
            let root = numeric::sqrt(&inner) / Complex::with_val(prec, &d13 * 6u32);
            if branch == TBranch::T34 {
                sixteenth(Complex::with_val(prec, 8 - root))
            } else {
                sixteenth(root + 8u32)
            }
        }
        TBranch::T31 => {
            let inner = Complex::with_val(prec, &c_b * &d1)
                + Complex::with_val(prec, &d23 * &j_m576) * 12u32
                + Complex::with_val(prec, &c_a * &d13) * &j_m1536 * j;
            let root = numeric::sqrt(&inner) / Complex::with_val(prec, &d23 * 6u32);
            sixteenth(root + 8u32)
        }
        TBranch::T32 => {
            let inner = Complex::with_val(prec, &d23 * -576i32) + &d1
                - Complex::with_val(prec, &d13 * j) * 1536u32
                + Complex::with_val(prec, &d23 * j)
                + Complex::with_val(prec, &d13 * &j2);
            let num = numeric::sqrt(
                &(Complex::with_val(prec, &d13 * 24u32) + numeric::sqrt(&inner) * &s3),
            );
            num / (Complex::with_val(prec, &d13 * &s3) * 4u32)
        }
    };
    Ok(k)
}

/// All four branch values for `j`, ranked by the relative residual of the
/// round trip `j_from_modulus(k) = j`. Ties go to the branch order
/// `T34, T33, T32, T31`.
pub fn t3_candidates(j: &Complex, ctx: &NumericContext) -> Result<Vec<T3Candidate>> {
    if numeric::is_zero(j) {
        return Err(Error::Domain("T3 is undefined at j = 0".into()));
    }
    let mut out = Vec::with_capacity(4);
    for branch in TBranch::ALL {
        let k = t3_branch(j, branch)?;
        let residual = match j_from_modulus(&k, ctx) {
            Ok(jk) => numeric::rel_dist(&jk, j),
            Err(_) => f64::INFINITY,
        };
        out.push(T3Candidate { branch, k, residual });
    }
    // Stable sort keeps branch order among residuals that agree to rounding.
    let floor = ctx.eps() * 1e4;
    out.sort_by(|a, b| a.residual.max(floor).total_cmp(&b.residual.max(floor)));
    Ok(out)
}

fn passes(c: &T3Candidate, ctx: &NumericContext) -> bool {
    c.residual < ctx.sqrt_tol()
}

fn branch_error(what: &str, cands: &[T3Candidate]) -> Error {
    Error::Branch {
        what: what.into(),
        residuals: cands.iter().map(|c| c.residual).collect(),
    }
}

/// A modulus with the given j-invariant. With `branch` the requested branch
/// is used and checked; without it the best-ranked branch is returned.
pub fn t3(j: &Complex, branch: Option<TBranch>, ctx: &NumericContext) -> Result<Complex> {
    let cands = t3_candidates(j, ctx)?;
    let chosen = match branch {
        Some(b) => cands.iter().find(|c| c.branch == b),
        None => cands.first(),
    }
    .expect("all four branches are present");
    if passes(chosen, ctx) {
        Ok(chosen.k.clone())
    } else if branch.is_some() {
        let ok: Vec<&str> = cands.iter().filter(|c| passes(c, ctx)).map(|c| c.branch.name()).collect();
        Err(Error::Branch {
            what: format!("T3 restricted to {} (branches passing here: {})", chosen.branch.name(), ok.join(", ")),
            residuals: vec![chosen.residual],
        })
    } else {
        Err(branch_error("T3 (modulus from j)", &cands))
    }
}

/// The modulus nearest `target` among the passing branches and their
/// orbits under [`modulus_orbit`] and `k → -k`; j alone does not tell these
/// apart.
pub fn t3_nearest(j: &Complex, target: &Complex, ctx: &NumericContext) -> Result<T3Candidate> {
    let cands = t3_candidates(j, ctx)?;
    cands
        .iter()
        .filter(|c| passes(c, ctx))
        .flat_map(|c| {
            modulus_orbit(&c.k).into_iter().flat_map(move |k| {
                let neg = Complex::with_val(k.prec(), -&k);
                [k, neg].map(|k| T3Candidate { branch: c.branch, k, residual: c.residual })
            })
        })
        .min_by(|a, b| numeric::dist(&a.k, target).total_cmp(&numeric::dist(&b.k, target)))
        .ok_or_else(|| branch_error("T3 (modulus from j)", &cands))
}

/// The six moduli sharing a j-invariant with `k`: square roots of the
/// orbit `λ, 1 - λ, 1/λ, 1/(1 - λ), λ/(λ - 1), (λ - 1)/λ` of `λ = k²`.
pub fn modulus_orbit(k: &Complex) -> [Complex; 6] {
    let prec = k.prec().0;
    let lam = Complex::with_val(prec, k.square_ref());
    let co = Complex::with_val(prec, 1 - &lam);
    let lam_m1 = Complex::with_val(prec, &lam - 1u32);
    [
        lam.clone(),
        co.clone(),
        Complex::with_val(prec, lam.recip_ref()),
        Complex::with_val(prec, co.recip_ref()),
        Complex::with_val(prec, &lam / &lam_m1),
        Complex::with_val(prec, &lam_m1 / &lam),
    ]
    .map(|x| numeric::sqrt(&x))
}

/// A modulus on the requested side of `1/√2`: `small = true` gives `k_r`
/// for `r > 1`, `small = false` for `r < 1`.
///
/// At real j ≥ 1728 the branches may return another member of the modulus
/// orbit (`1/k'` or `ik/k'`, say), so each passing value is expanded through
/// [`modulus_orbit`] and real members in `(0, 1)` are preferred. Without a
/// real member the passing branch values themselves are ranked by modulus.
pub fn t3_side(j: &Complex, small: bool, ctx: &NumericContext) -> Result<T3Candidate> {
    let cands = t3_candidates(j, ctx)?;
    let passing: Vec<&T3Candidate> = cands.iter().filter(|c| passes(c, ctx)).collect();
    let gate = ctx.sqrt_tol();
    let real_unit = |k: &Complex| {
        k.imag().to_f64().abs() < gate && k.real().to_f64() > 0.0 && k.real().to_f64() < 1.0
    };
    let mut pool: Vec<T3Candidate> = passing
        .iter()
        .flat_map(|c| {
            modulus_orbit(&c.k).into_iter().filter(|k| real_unit(k)).map(|k| T3Candidate {
                branch: c.branch,
                k: Complex::with_val(k.prec(), k.real()),
                residual: c.residual,
            })
        })
        .collect();
    if pool.is_empty() {
        pool = passing.into_iter().cloned().collect();
    }
    let key = |c: &T3Candidate| numeric::abs_f64(&c.k);
    let pick = if small {
        pool.into_iter().min_by(|a, b| key(a).total_cmp(&key(b)))
    } else {
        pool.into_iter().max_by(|a, b| key(a).total_cmp(&key(b)))
    };
    pick.ok_or_else(|| branch_error("T3 (modulus from j)", &cands))
}

/// `R(q^{1/5})` from `x = R(q)`: the principal fifth root of
/// `x (1 - 2x + 4x² - 3x³ + x⁴)/(1 + 3x + 4x² + 2x³ + x⁴)`.
pub fn t4(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = x.prec().0;
    let horner = |c: [i32; 5]| {
        let mut acc = Complex::with_val(prec, c[4]);
        for k in (0..4).rev() {
            acc *= x;
            acc += c[k];
        }
        acc
    };
    let num = horner([1, -2, 4, -3, 1]);
    let den = horner([1, 3, 4, 2, 1]);
    if numeric::abs(&den) <= ctx.eps() {
        return Err(Error::Pole("fifth-degree continued-fraction relation: denominator vanishes".into()));
    }
    Ok(numeric::nth_root(&(num * x / den), 5))
}

/// The modulus at the negated nome: `x/√(x² - 1)`.
pub fn t5(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = x.prec().0;
    let rad = Complex::with_val(prec, x.square_ref()) - 1u32;
    if numeric::abs(&rad) <= ctx.eps() {
        return Err(Error::Pole("x/√(x² - 1) has poles at x = ±1".into()));
    }
    Ok(Complex::with_val(prec, x / numeric::sqrt(&rad)))
}

/// Root `u` of `u³ + x³u² - xu + x⁴ = 0` that behaves like `x³` as `q → 0`,
/// i.e. the Ramanujan quantity `R(1,3,10;q)` as an algebraic function of
/// `x = R(q)` (conjectural relation).
pub fn f1(x: &Complex) -> Result<Complex> {
    if numeric::is_zero(x) {
        return Ok(x.clone());
    }
    let prec = x.prec().0;
    let x3 = numeric::powi(x, 3);
    let x4 = Complex::with_val(prec, &x3 * x);
    let x6 = Complex::with_val(prec, x3.square_ref());
    let x8 = Complex::with_val(prec, x4.square_ref());
    let x9 = Complex::with_val(prec, &x8 * x);
    let x13 = Complex::with_val(prec, &x9 * &x4);
    let inner = numeric::sqrt(&(Complex::with_val(prec, &x8 * 11u32) + &x13 - &x3));
    let radicand = inner * sqrt3(prec) * 3u32 - Complex::with_val(prec, &x4 * 18u32) - &x9;
    let lin = Complex::with_val(prec, x * -3i32) - &x6;
    let mut cands = Vec::with_capacity(3);
    for c in cube_roots(&radicand, "f1")? {
        let a = Complex::with_val(prec, -&x3) / 3u32;
        let b = one_pm_i_sqrt3(prec, false) * &lin / Complex::with_val(prec, &c * 6u32);
        let d = one_pm_i_sqrt3(prec, true) * &c / 6u32;
        cands.push(a + b - d);
    }
    Ok(pick_nearest(cands, &x3))
}

/// `R(-q)` from `x = R(q)` as `(-1)^{1/5} f1(T1(x)) / (x T1(x)²)`. Rests on a
/// conjectural identity; validated against direct evaluation, never trusted
/// on its own.
pub fn t6(x: &Complex, ctx: &NumericContext) -> Result<Complex> {
    let prec = x.prec().0;
    let w = t1(x)?;
    let den = Complex::with_val(prec, x * Complex::with_val(prec, w.square_ref()));
    if numeric::abs(&den) <= ctx.eps() * ctx.eps() {
        return Err(Error::Pole("negated-nome map: R(q)·R(q²)² vanishes".into()));
    }
    let u = f1(&w)?;
    let fifth = ctx.unit_root(1, 5);
    Ok(Complex::with_val(prec, fifth * u) / den)
}

/// `R(q^{1/2})` from `x = R(q)`: the root that behaves like `√x` as `q → 0`.
/// Inverse of [`t1`]. `x = 0` maps to its limit `0`.
pub fn t7(x: &Complex) -> Result<Complex> {
    if numeric::is_zero(x) {
        return Ok(x.clone());
    }
    let prec = x.prec().0;
    let x2 = numeric::powi(x, 2);
    let x5 = numeric::powi(x, 5);
    let x10 = Complex::with_val(prec, x5.square_ref());
    let x15 = Complex::with_val(prec, &x10 * &x5);
    let inner = numeric::sqrt(&(Complex::with_val(prec, &x10 * 11u32) + &x15 - &x5));
    let radicand = Complex::with_val(prec, 1 - Complex::with_val(prec, &x5 * 18u32))
        + inner * sqrt3(prec) * 3u32;
    let lin = Complex::with_val(prec, &x5 * 3u32) - 1u32;
    let x2_6 = Complex::with_val(prec, &x2 * 6u32);
    let mut cands = Vec::with_capacity(3);
    for c in cube_roots(&radicand, "T7")? {
        let a = Complex::with_val(prec, x2.recip_ref()) / 3u32;
        let b = one_pm_i_sqrt3(prec, true) * &lin / Complex::with_val(prec, &x2_6 * &c);
        let d = one_pm_i_sqrt3(prec, false) * &c / &x2_6;
        cands.push(-a - b + d);
    }
    Ok(pick_nearest(cands, &numeric::sqrt(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_dist;
    use crate::special::{rrcf_auto, singular_modulus, Nome};

    fn ctx() -> NumericContext {
        NumericContext::new(50).unwrap()
    }

    fn r_of(ctx: &NumericContext, q: f64) -> Complex {
        rrcf_auto(&Nome::from_f64(ctx, q).unwrap(), ctx).unwrap().v
    }

    // j = 1728 is where k and k' coincide; the closed forms are only good
    // to about half the working digits there.
    const AT_DOUBLE_POINT: f64 = 1e-24;

    #[test]
    fn t1_doubles_the_nome() {
        let ctx = ctx();
        for q in [0.01, 0.1, 0.2, 0.4] {
            let nome = Nome::from_f64(&ctx, q).unwrap();
            let got = t1(&rrcf_auto(&nome, &ctx).unwrap().v).unwrap();
            let want = rrcf_auto(&nome.scaled(2, 1).unwrap(), &ctx).unwrap().v;
            assert!(rel_dist(&got, &want) < 1e-45, "q = {q}");
        }
        assert!(numeric::is_zero(&t1(&ctx.zero()).unwrap()));
    }

    #[test]
    fn t7_halves_the_nome() {
        let ctx = ctx();
        for q in [0.01, 0.1, 0.2] {
            let nome = Nome::from_f64(&ctx, q).unwrap();
            let v = rrcf_auto(&nome, &ctx).unwrap().v;
            let half = t7(&v).unwrap();
            let want = rrcf_auto(&nome.scaled(1, 2).unwrap(), &ctx).unwrap().v;
            assert!(rel_dist(&half, &want) < 1e-44, "q = {q}");
            assert!(rel_dist(&t1(&half).unwrap(), &v) < 1e-44);
        }
    }

    #[test]
    fn t2_t1_gives_j() {
        let ctx = ctx();
        let nome = Nome::from_r_f64(&ctx, 1.0).unwrap();
        let v = rrcf_auto(&nome, &ctx).unwrap().v;
        let j = t2(&t1(&v).unwrap(), &ctx).unwrap();
        assert!(rel_dist(&j, &ctx.complex(1728)) < 1e-44);
        assert!(t2(&ctx.zero(), &ctx).is_err());
    }

    #[test]
    fn t3_recovers_known_moduli() {
        let ctx = ctx();
        let k1 = ctx.complex(ctx.real(2).sqrt().recip());
        let k = t3(&ctx.complex(1728), None, &ctx).unwrap();
        assert!(rel_dist(&k, &k1) < AT_DOUBLE_POINT);

        let k2 = ctx.complex(ctx.real(2).sqrt() - 1u32);
        let j2 = j_from_modulus(&k2, &ctx).unwrap();
        let best = t3_side(&j2, true, &ctx).unwrap();
        assert!(rel_dist(&best.k, &k2) < 1e-40);
        assert!(t3(&ctx.zero(), None, &ctx).is_err());
    }

    #[test]
    fn t4_takes_fifth_root_of_nome() {
        let ctx = ctx();
        let nome = Nome::from_r_f64(&ctx, 4.0).unwrap();
        let v = rrcf_auto(&nome, &ctx).unwrap().v;
        let down = rrcf_auto(&nome.scaled(1, 5).unwrap(), &ctx).unwrap().v;
        assert!(rel_dist(&t4(&v, &ctx).unwrap(), &down) < 1e-44);
        assert!(numeric::is_zero(&t4(&ctx.zero(), &ctx).unwrap()));
    }

    #[test]
    fn t5_is_an_involution() {
        let ctx = ctx();
        for x in [ctx.complex((0.3, 0.1)), ctx.complex(2.5), ctx.complex((-1.2, 0.7))] {
            let back = t5(&t5(&x, &ctx).unwrap(), &ctx).unwrap();
            assert!(rel_dist(&back, &x) < 1e-45, "{x}");
        }
        assert!(t5(&ctx.one(), &ctx).is_err());
    }

    #[test]
    fn t6_matches_negated_nome() {
        let ctx = ctx();
        for q in [0.05, 0.1, 0.2] {
            let got = t6(&r_of(&ctx, q), &ctx).unwrap();
            let want = rrcf_auto(&Nome::from_f64(&ctx, -q).unwrap(), &ctx).unwrap().v;
            assert!(rel_dist(&got, &want) < 1e-40, "q = {q}: {got} vs {want}");
        }
    }

    #[test]
    fn t3_t2_t1_composition_is_the_modulus() {
        let ctx = ctx();
        for r in [1.0, 2.0] {
            let nome = Nome::from_r_f64(&ctx, r).unwrap();
            let v = rrcf_auto(&nome, &ctx).unwrap().v;
            let j = t2(&t1(&v).unwrap(), &ctx).unwrap();
            let k = t3_side(&j, true, &ctx).unwrap().k;
            let want = singular_modulus(&nome, &ctx).unwrap();
            let bound = if r == 1.0 { AT_DOUBLE_POINT } else { 1e-40 };
            assert!(rel_dist(&k, &want) < bound, "r = {r}");
        }
    }
}
