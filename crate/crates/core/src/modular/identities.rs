//! Numeric validators for the modular identities the solver leans on.
//!
//! Every identity is evaluated with both sides computed independently
//! (theta series or period-ratio inversion for moduli, the continued
//! fraction or q-products for the Rogers–Ramanujan family). Conjectural
//! identities are reported but never gate anything.

use rug::Complex;
use serde::Serialize;

use super::ascent::{depressed_residual, quintic_modular_residual, relative_sum};
use super::quantities::ramanujan_quantity;
use super::tfun::t6;
use crate::error::{Error, Result};
use crate::numeric::{self, NumericContext};
use crate::special::{complement, modulus_from_r, rrcf_auto, singular_modulus, Nome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityTag {
    /// `k_{4r} = (1 - k'_r)/(1 + k'_r)`.
    ModulusQuadrupling,
    /// `√(k_r k_{9r}) + √(k'_r k'_{9r}) = 1`.
    CubicModular,
    /// `k_r k_{25r} + k'_r k'_{25r} + 2^{5/3}(k_r k_{25r} k'_r k'_{25r})^{1/3} = 1`.
    QuinticModular,
    /// Hermite's depressed sextic in `k_{25r}^{1/4}`, `k_r^{1/4}`.
    DepressedSextic,
    /// `(R(q²) - R(q)²)/(R(q²) + R(q)²) = R(q) R(q²)²`.
    RrcfDuplication,
    /// `(R(q³) - R(q)³)(1 + R(q) R(q³)³) = 3 R(q)² R(q³)²`.
    RrcfTriplication,
    /// `R(q^{1/5})⁵ = R (1 - 2R + 4R² - 3R³ + R⁴)/(1 + 3R + 4R² + 2R³ + R⁴)`.
    RrcfQuintisection,
    /// Conjectural: `u³ - uv + u²v³ + v⁴ = 0` with `u = R(1,3,10;q)`, `v = R(q)`.
    QuantityCubic,
    /// Conjectural: `u(q) |u(-q)| = u(q²)`.
    QuantityDuplication,
    /// Conjectural: the degree-11 relation between `R(q)` and `|R(-q)|`.
    NegatedNomePolynomial,
    /// Conjectural: `R(1,3,10;q) = R(q) R(q²)`.
    ProductQuantity,
    /// Conjectural: `|T6(R(q))| = |R(-q)|`.
    NegatedNomeMap,
}

impl IdentityTag {
    pub const ESTABLISHED: [IdentityTag; 7] = [
        IdentityTag::ModulusQuadrupling,
        IdentityTag::CubicModular,
        IdentityTag::QuinticModular,
        IdentityTag::DepressedSextic,
        IdentityTag::RrcfDuplication,
        IdentityTag::RrcfTriplication,
        IdentityTag::RrcfQuintisection,
    ];

    pub const CONJECTURAL: [IdentityTag; 5] = [
        IdentityTag::QuantityCubic,
        IdentityTag::QuantityDuplication,
        IdentityTag::NegatedNomePolynomial,
        IdentityTag::ProductQuantity,
        IdentityTag::NegatedNomeMap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::ModulusQuadrupling => "modulus-quadrupling",
            IdentityTag::CubicModular => "cubic-modular",
            IdentityTag::QuinticModular => "quintic-modular",
            IdentityTag::DepressedSextic => "depressed-sextic",
            IdentityTag::RrcfDuplication => "rrcf-duplication",
            IdentityTag::RrcfTriplication => "rrcf-triplication",
            IdentityTag::RrcfQuintisection => "rrcf-quintisection",
            IdentityTag::QuantityCubic => "quantity-cubic",
            IdentityTag::QuantityDuplication => "quantity-duplication",
            IdentityTag::NegatedNomePolynomial => "negated-nome-polynomial",
            IdentityTag::ProductQuantity => "product-quantity",
            IdentityTag::NegatedNomeMap => "negated-nome-map",
        }
    }

    pub fn is_conjectural(self) -> bool {
        Self::CONJECTURAL.contains(&self)
    }

    /// Whether samples are singular parameters `r` (moduli identities) or
    /// plain nomes.
    fn on_moduli(self) -> bool {
        matches!(
            self,
            IdentityTag::ModulusQuadrupling
                | IdentityTag::CubicModular
                | IdentityTag::QuinticModular
                | IdentityTag::DepressedSextic
        )
    }

    /// The sample points the validator suite uses by default.
    pub fn default_samples(self, ctx: &NumericContext) -> Result<Vec<Nome>> {
        let rs: &[f64] = match self {
            IdentityTag::ModulusQuadrupling => &[1.0, 2.0, 3.0, 5.0],
            IdentityTag::CubicModular | IdentityTag::DepressedSextic => &[1.0, 2.0],
            IdentityTag::QuinticModular => &[1.0],
            IdentityTag::RrcfDuplication
            | IdentityTag::RrcfTriplication
            | IdentityTag::RrcfQuintisection => {
                return [0.05, 0.1, 0.2].iter().map(|&q| Nome::from_f64(ctx, q)).collect();
            }
            _ => {
                return [0.03, 0.05, 0.1].iter().map(|&q| Nome::from_f64(ctx, q)).collect();
            }
        };
        rs.iter().map(|&r| Nome::from_r_f64(ctx, r)).collect()
    }
}

impl std::str::FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ESTABLISHED
            .iter()
            .chain(Self::CONJECTURAL.iter())
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// One evaluated sample.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityRow {
    pub identity: IdentityTag,
    /// `r = …` for moduli identities, `q = …` otherwise.
    pub sample: String,
    /// Relative residual; `None` when evaluation itself failed.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
    /// Conjectural rows never count as failures.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IdentityReport {
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    /// True when every non-informational row passed.
    pub fn gates_pass(&self) -> bool {
        self.rows.iter().all(|r| r.informational || r.passed)
    }

    pub fn max_residual(&self, tag: IdentityTag) -> Option<f64> {
        self.rows
            .iter()
            .filter(|r| r.identity == tag)
            .map(|r| r.residual.unwrap_or(f64::INFINITY))
            .reduce(f64::max)
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.rows.extend(other.rows);
    }
}

/// Evaluate `tag` at each sample and judge it against the context tolerance.
pub fn validate_identity(tag: IdentityTag, samples: &[Nome], ctx: &NumericContext) -> IdentityReport {
    let rows = samples
        .iter()
        .map(|nome| {
            let (residual, note) = match residual(tag, nome, ctx) {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_string())),
            };
            IdentityRow {
                identity: tag,
                sample: sample_label(nome),
                residual,
                tolerance: ctx.tol(),
                passed: residual.is_some_and(|r| r < ctx.tol()),
                informational: tag.is_conjectural(),
                note,
            }
        })
        .collect();
    IdentityReport { rows }
}

/// Every tag in `tags` at its default samples.
pub fn validate_suite(tags: &[IdentityTag], ctx: &NumericContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::default();
    for &tag in tags {
        let samples = tag.default_samples(ctx)?;
        report.extend(validate_identity(tag, &samples, ctx));
    }
    Ok(report)
}

fn sample_label(nome: &Nome) -> String {
    match nome.r() {
        Some(r) => format!("r = {}", r.to_f64()),
        None => format!("q = {}", numeric::complex_to_string(nome.q(), 6)),
    }
}

/// `k` at `τ·scale` (i.e. parameter `r·scale²`): period-ratio inversion when
/// `r` is known, theta constants otherwise.
fn modulus_at(nome: &Nome, scale: u32, ctx: &NumericContext) -> Result<Complex> {
    match nome.r() {
        Some(r) => {
            let target = ctx.real(r) * (scale * scale);
            Ok(ctx.complex(modulus_from_r(ctx, &target)?.k))
        }
        None => singular_modulus(&nome.scaled(scale, 1)?, ctx),
    }
}

fn r_at(nome: &Nome, num: u32, den: u32, ctx: &NumericContext) -> Result<Complex> {
    let scaled = if num == 1 && den == 1 {
        nome.clone()
    } else {
        nome.scaled(num, den)?
    };
    Ok(Complex::with_val(ctx.prec(), rrcf_auto(&scaled, ctx)?.v))
}

fn residual(tag: IdentityTag, nome: &Nome, ctx: &NumericContext) -> Result<f64> {
    let prec = ctx.prec();
    if tag.on_moduli() && nome.r().is_none() {
        // Moduli identities are only meaningful for real singular parameters.
        if !nome.q().imag().is_zero() {
            return Err(Error::Domain("moduli identities need a real nome".into()));
        }
    }
    match tag {
        IdentityTag::ModulusQuadrupling => {
            let k = modulus_at(nome, 1, ctx)?;
            let k4 = modulus_at(nome, 2, ctx)?;
            // (1 - k')/(1 + k') = k²/(1 + k')² without cancellation.
            let kp1 = Complex::with_val(prec, complement(&k) + 1u32);
            let rhs = Complex::with_val(prec, k.square_ref()) / kp1.square();
            Ok(numeric::rel_dist(&k4, &rhs))
        }
        IdentityTag::CubicModular => {
            let k = modulus_at(nome, 1, ctx)?;
            let k9 = modulus_at(nome, 3, ctx)?;
            let a = numeric::sqrt(&Complex::with_val(prec, &k * &k9));
            let b = numeric::sqrt(&(complement(&k) * complement(&k9)));
            Ok(numeric::rel_dist(&(a + b), &ctx.one()))
        }
        IdentityTag::QuinticModular => {
            let k = modulus_at(nome, 1, ctx)?;
            let k25 = modulus_at(nome, 5, ctx)?;
            Ok(quintic_modular_residual(&k, &k25, ctx))
        }
        IdentityTag::DepressedSextic => {
            let v = numeric::nth_root(&modulus_at(nome, 1, ctx)?, 4);
            let u = numeric::nth_root(&modulus_at(nome, 5, ctx)?, 4);
            Ok(depressed_residual(&u, &v, ctx))
        }
        IdentityTag::RrcfDuplication => {
            let r = r_at(nome, 1, 1, ctx)?;
            let r2 = r_at(nome, 2, 1, ctx)?;
            let sq = Complex::with_val(prec, r.square_ref());
            let lhs = Complex::with_val(prec, &r2 - &sq) / Complex::with_val(prec, &r2 + &sq);
            let rhs = Complex::with_val(prec, r2.square_ref()) * &r;
            Ok(numeric::rel_dist(&lhs, &rhs))
        }
        IdentityTag::RrcfTriplication => {
            let r = r_at(nome, 1, 1, ctx)?;
            let r3 = r_at(nome, 3, 1, ctx)?;
            let a = Complex::with_val(prec, &r3 - numeric::powi(&r, 3));
            let b = Complex::with_val(prec, numeric::powi(&r3, 3) * &r) + 1u32;
            let rhs = numeric::powi(&r, 2) * numeric::powi(&r3, 2) * 3u32;
            Ok(numeric::rel_dist(&(a * b), &rhs))
        }
        IdentityTag::RrcfQuintisection => {
            let r = r_at(nome, 1, 1, ctx)?;
            let r5 = r_at(nome, 1, 5, ctx)?;
            let horner = |c: [i32; 5]| {
                let mut acc = ctx.complex(c[4]);
                for k in (0..4).rev() {
                    acc *= &r;
                    acc += c[k];
                }
                acc
            };
            let rhs = horner([1, -2, 4, -3, 1]) * &r / horner([1, 3, 4, 2, 1]);
            Ok(numeric::rel_dist(&numeric::powi(&r5, 5), &rhs))
        }
        IdentityTag::QuantityCubic => {
            let u = ramanujan_quantity(1, 3, 10, nome, ctx)?;
            let v = r_at(nome, 1, 1, ctx)?;
            Ok(relative_sum(&[
                numeric::powi(&u, 3),
                -Complex::with_val(prec, &u * &v),
                numeric::powi(&u, 2) * numeric::powi(&v, 3),
                numeric::powi(&v, 4),
            ]))
        }
        IdentityTag::QuantityDuplication => {
            let u = ramanujan_quantity(1, 3, 10, nome, ctx)?;
            let u_neg = ramanujan_quantity(1, 3, 10, &nome.negated()?, ctx)?;
            let u2 = ramanujan_quantity(1, 3, 10, &nome.scaled(2, 1)?, ctx)?;
            Ok(numeric::rel_dist(&(u * numeric::abs(&u_neg)), &u2))
        }
        IdentityTag::NegatedNomePolynomial => {
            let v = r_at(nome, 1, 1, ctx)?;
            let vp = ctx.complex(numeric::abs(&rrcf_auto(&nome.negated()?, ctx)?.v));
            let w = |k: i64| ctx.unit_root(k, 5);
            let vv = |a: u32, b: u32| numeric::powi(&v, a) * numeric::powi(&vp, b);
            Ok(relative_sum(&[
                -v.clone(),
                w(1) * &vp,
                -(w(1) * vv(5, 1)),
                w(2) * vv(4, 2) * 5u32,
                -(w(3) * vv(3, 3) * 10u32),
                w(4) * vv(2, 4) * 5u32,
                vv(1, 5),
                vv(6, 5),
                -(w(1) * vv(5, 6)),
            ]))
        }
        IdentityTag::ProductQuantity => {
            let u = ramanujan_quantity(1, 3, 10, nome, ctx)?;
            let prod = r_at(nome, 1, 1, ctx)? * r_at(nome, 2, 1, ctx)?;
            Ok(numeric::rel_dist(&u, &prod))
        }
        IdentityTag::NegatedNomeMap => {
            let v = r_at(nome, 1, 1, ctx)?;
            let mapped = t6(&v, ctx)?;
            let direct = rrcf_auto(&nome.negated()?, ctx)?.v;
            Ok(numeric::rel_dist(
                &ctx.complex(numeric::abs(&mapped)),
                &ctx.complex(numeric::abs(&direct)),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn established_identities_pass_at_default_samples() {
        let ctx = NumericContext::default();
        let report = validate_suite(&IdentityTag::ESTABLISHED, &ctx).unwrap();
        for row in &report.rows {
            assert!(row.passed, "{} at {}: {:?}", row.identity.name(), row.sample, row.residual);
        }
        assert!(report.gates_pass());
    }

    #[test]
    fn conjectural_rows_are_informational() {
        let ctx = NumericContext::default();
        let report = validate_suite(&IdentityTag::CONJECTURAL, &ctx).unwrap();
        assert_eq!(report.rows.len(), 15);
        assert!(report.rows.iter().all(|r| r.informational && r.residual.is_some()));
        assert!(report.gates_pass());
    }

    #[test]
    fn theta_route_for_plain_nomes() {
        let ctx = NumericContext::default();
        let nome = Nome::from_f64(&ctx, 0.04).unwrap();
        let rep = validate_identity(IdentityTag::QuinticModular, &[nome], &ctx);
        assert!(rep.rows[0].passed, "{:?}", rep.rows[0].residual);
    }

    #[test]
    fn a_perturbed_side_fails() {
        let ctx = NumericContext::default();
        let nome = Nome::from_f64(&ctx, 0.1).unwrap();
        let r = r_at(&nome, 1, 1, &ctx).unwrap();
        let r2: Complex = r_at(&nome.scaled(2, 1).unwrap(), 1, 1, &ctx).unwrap() * 1.000001;
        let sq = Complex::with_val(ctx.prec(), r.square_ref());
        let lhs = Complex::with_val(ctx.prec(), &r2 - &sq) / Complex::with_val(ctx.prec(), &r2 + &sq);
        let rhs = Complex::with_val(ctx.prec(), r2.square_ref()) * &r;
        assert!(numeric::rel_dist(&lhs, &rhs) > 1e-8);
    }

    #[test]
    fn tags_parse_by_name() {
        for t in IdentityTag::ESTABLISHED.iter().chain(IdentityTag::CONJECTURAL.iter()) {
            assert_eq!(t.name().parse::<IdentityTag>().unwrap(), *t);
        }
        assert!("nope".parse::<IdentityTag>().is_err());
    }
}
