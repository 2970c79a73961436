use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use quintic::hermite::{main_theorem_pipeline, PipelineReport};
use quintic::modular::{t2, t3, validate_suite, IdentityReport, IdentityTag, TBranch};
use quintic::numeric::{self, NumericContext};
use quintic::special::{j_from_eta, j_from_modulus, modulus_from_r, rrcf, rrcf_auto, rrcf_product, singular_modulus, Nome};
use quintic::{solve, Error, Method, Polynomial};
use rug::{Complex, Float};

#[derive(Parser)]
#[command(name = "quintic", version, about = "Solve quintics and evaluate the modular functions behind them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    numeric: NumericArgs,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct NumericArgs {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 40)]
    digits: u32,
    /// Residual tolerance; defaults to 10^(6 - digits).
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Find all five roots of a quintic.
    Solve(SolveArgs),
    /// Evaluate k_r, R(e^{-π√r}) or j at a singular parameter r.
    Constants(ConstantsArgs),
    /// Run the numeric identity validators.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Six coefficients, leading first unless --ascending. Each is `re`,
    /// `re,im` or `re±imi`. Options go before the coefficients, since
    /// everything after the first coefficient is read as one.
    #[arg(allow_hyphen_values = true, required_unless_present = "input")]
    coefficients: Vec<String>,
    /// Coefficients are given constant term first.
    #[arg(long)]
    ascending: bool,
    #[arg(long, default_value = "auto")]
    method: Method,
    /// Read a JSON request (`{"coefficients": [[re, im], …]}`, ascending)
    /// from a file, or `-` for stdin.
    #[arg(long, conflicts_with = "coefficients")]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Constant {
    /// Singular modulus k_r.
    K,
    /// Rogers–Ramanujan continued fraction at q = e^{-π√r}.
    Rrcf,
    /// Klein's j-invariant at τ = i√r.
    J,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(value_enum)]
    name: Constant,
    /// Positive rational such as `5`, `2/3` or `0.5`.
    #[arg(allow_negative_numbers = true)]
    r: String,
    /// Fixed continued-fraction depth (default: grow until stable).
    #[arg(long)]
    depth: Option<usize>,
    /// Also recover k from j on this branch (T31..T34) and compare.
    #[arg(long)]
    branch: Option<TBranch>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Modular,
    Conjectural,
    Pipeline,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    suite: Suite,
}

#[derive(Deserialize)]
struct SolveRequest {
    /// Ascending `[re, im]` pairs.
    coefficients: Vec<[String; 2]>,
    #[serde(default)]
    method: Option<Method>,
}

#[derive(Serialize)]
struct Check {
    route: String,
    value: [String; 2],
    difference: f64,
}

#[derive(Serialize)]
struct ConstantReport {
    name: &'static str,
    r: String,
    digits: u32,
    value: [String; 2],
    route: String,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct VerifyReport {
    identities: IdentityReport,
    pipeline: Vec<PipelineReport>,
    gates_pass: bool,
}

#[derive(Serialize)]
struct ErrorReport {
    error: String,
}

/// What a run prints and how it exits: 0 when every gate passed, 1 when
/// some gate failed, 2 on an error.
struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

fn execute(cli: &Cli) -> Outcome {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = match run(cli, &mut stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            if cli.json {
                stdout.push_str(&json_text(&ErrorReport { error: e.to_string() }));
            } else {
                let _ = writeln!(stderr, "error: {e}");
            }
            2
        }
    };
    Outcome { stdout, stderr, code }
}

fn main() -> ExitCode {
    let outcome = execute(&Cli::parse());
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn context(args: &NumericArgs) -> quintic::Result<NumericContext> {
    let ctx = NumericContext::new(args.digits)?;
    match args.tol {
        Some(tol) => ctx.with_tol(tol),
        None => Ok(ctx),
    }
}

/// Ok(true) when every gate passed.
fn run(cli: &Cli, out: &mut String) -> quintic::Result<bool> {
    let ctx = context(&cli.numeric)?;
    match &cli.command {
        Command::Solve(args) => cmd_solve(args, &ctx, cli.json, out),
        Command::Constants(args) => cmd_constants(args, &ctx, cli.json, out),
        Command::Verify(args) => cmd_verify(args, &ctx, cli.json, out),
    }
}

fn cmd_solve(args: &SolveArgs, ctx: &NumericContext, json: bool, out: &mut String) -> quintic::Result<bool> {
    let (coeffs, method) = match &args.input {
        Some(path) => {
            let text = if path == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
            };
            let req: SolveRequest = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let coeffs = req
                .coefficients
                .iter()
                .map(|[re, im]| Ok(ctx.complex((ctx.parse_real(re)?, ctx.parse_real(im)?))))
                .collect::<quintic::Result<Vec<Complex>>>()?;
            (coeffs, req.method.unwrap_or(args.method))
        }
        None => {
            let mut coeffs = args
                .coefficients
                .iter()
                .map(|s| ctx.parse_complex(s))
                .collect::<quintic::Result<Vec<Complex>>>()?;
            if !args.ascending {
                coeffs.reverse();
            }
            (coeffs, args.method)
        }
    };
    if coeffs.len() != 6 {
        return Err(Error::Parse(format!("a quintic has 6 coefficients, got {}", coeffs.len())));
    }
    let p = Polynomial::new(coeffs)?;
    let report = solve(&p, method, ctx)?.report;
    if json {
        out.push_str(&json_text(&report));
    } else {
        let _ = writeln!(out, "method: {} (requested {})", report.method_used, report.method_requested);
        for (x, r) in report.roots.iter().zip(&report.residuals) {
            let _ = writeln!(out, "{:>48} {:>48}i   residual {r:.2e}", x[0], x[1]);
        }
        for d in &report.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
    }
    Ok(!report.warning)
}

/// `p/q` or a decimal; returns the value and an f64 guide for escalation.
fn parse_r(s: &str, ctx: &NumericContext) -> quintic::Result<(Float, f64)> {
    let r = match s.split_once('/') {
        Some((num, den)) => {
            let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")));
            let (num, den) = (parse(num)?, parse(den)?);
            if den == 0 {
                return Err(Error::Parse(format!("bad rational {s:?}: zero denominator")));
            }
            ctx.ratio(num, den)
        }
        None => ctx.parse_real(s)?,
    };
    if !(r.is_finite() && r.is_sign_positive() && !r.is_zero()) {
        return Err(Error::Domain(format!("r must be positive, got {s}")));
    }
    let guide = r.to_f64();
    Ok((r, guide))
}

fn cmd_constants(args: &ConstantsArgs, ctx: &NumericContext, json: bool, out: &mut String) -> quintic::Result<bool> {
    let (_, guide) = parse_r(&args.r, ctx)?;
    let ctx = &ctx.escalated_for(guide)?;
    let (r, _) = parse_r(&args.r, ctx)?;
    let digits = ctx.working_digits() as usize;
    let pair = |z: &Complex| numeric::complex_to_pair(z, digits);
    let check = |route: &str, value: &Complex, against: &Complex| Check {
        route: route.into(),
        value: pair(value),
        difference: numeric::dist(value, against),
    };
    let nome = Nome::from_r(ctx, &r)?;
    let mut checks = Vec::new();
    let (name, value, route) = match args.name {
        Constant::K => {
            let k = singular_modulus(&nome, ctx)?;
            let agm = ctx.complex(modulus_from_r(ctx, &r)?.k);
            checks.push(check("period-ratio inversion (AGM)", &agm, &k));
            ("k", k, "theta quotient θ2²/θ3²".to_string())
        }
        Constant::Rrcf => {
            let value = match args.depth {
                Some(depth) => rrcf(&nome, depth, ctx)?,
                None => rrcf_auto(&nome, ctx)?,
            };
            checks.push(check("Rogers–Ramanujan product", &rrcf_product(&nome, ctx)?, &value.v));
            let route = format!("continued fraction, backward recurrence from depth {}", value.depth);
            ("rrcf", value.v, route)
        }
        Constant::J => {
            let k = singular_modulus(&nome, ctx)?;
            let j = j_from_modulus(&k, ctx)?;
            checks.push(check("Dedekind eta quotient", &j_from_eta(&nome, ctx)?, &j));
            let r2 = rrcf_auto(&nome.scaled(2, 1)?, ctx)?.v;
            checks.push(check("icosahedral form in R(q²)", &t2(&r2, ctx)?, &j));
            ("j", j, "modulus: 256(1 - k²k'²)³/(k²k'²)²".to_string())
        }
    };
    if let Some(branch) = args.branch {
        let k = match args.name {
            Constant::K => value.clone(),
            _ => singular_modulus(&nome, ctx)?,
        };
        let recovered = t3(&j_from_modulus(&k, ctx)?, Some(branch), ctx)?;
        checks.push(check(&format!("k from j on branch {}", branch.name()), &recovered, &k));
    }
    let report = ConstantReport {
        name,
        r: args.r.clone(),
        digits: ctx.working_digits(),
        value: pair(&value),
        route,
        checks,
    };
    if json {
        out.push_str(&json_text(&report));
    } else {
        let _ = writeln!(out, "{} at r = {} ({} digits, {})", report.name, report.r, report.digits, report.route);
        let _ = writeln!(out, "  {} + {}i", report.value[0], report.value[1]);
        for c in &report.checks {
            let _ = writeln!(out, "  {}: differs by {:.2e}", c.route, c.difference);
        }
    }
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs, ctx: &NumericContext, json: bool, out: &mut String) -> quintic::Result<bool> {
    let mut tags = Vec::new();
    if matches!(args.suite, Suite::Modular | Suite::All) {
        tags.extend(IdentityTag::ESTABLISHED);
    }
    if matches!(args.suite, Suite::Conjectural | Suite::All) {
        tags.extend(IdentityTag::CONJECTURAL);
    }
    let identities = validate_suite(&tags, ctx)?;
    let mut pipeline = Vec::new();
    if matches!(args.suite, Suite::Pipeline | Suite::All) {
        for r in [16.0, 20.0, 24.0] {
            pipeline.push(main_theorem_pipeline(r, ctx)?);
        }
    }
    let gates_pass = identities.gates_pass() && pipeline.iter().all(|p| p.gates_pass(ctx));
    let report = VerifyReport { identities, pipeline, gates_pass };
    if json {
        out.push_str(&json_text(&report));
    } else {
        for row in &report.identities.rows {
            let status = match (row.informational, row.passed) {
                (true, _) => "info",
                (false, true) => "pass",
                (false, false) => "FAIL",
            };
            let residual = row.residual.map_or_else(|| "n/a".to_string(), |r| format!("{r:.2e}"));
            let _ = writeln!(out, "{status:4}  {:<24} {:<28} {residual}", row.identity.name(), row.sample);
            if let Some(note) = &row.note {
                let _ = writeln!(out, "      {note}");
            }
        }
        for p in &report.pipeline {
            let status = if p.gates_pass(ctx) { "pass" } else { "FAIL" };
            let _ = writeln!(out, 
                "{status:4}  pipeline r = {:<4} t {:.1e}  l {:.1e}  k25 {:.1e}  theorem {:.1e}  composite {:.1e}",
                p.r, p.t_error, p.l_error, p.k_up_error, p.theorem_residual, p.composite_residual
            );
            for note in &p.notes {
                let _ = writeln!(out, "      {note}");
            }
        }
        let _ = writeln!(out, "{}", if report.gates_pass { "all gates pass" } else { "some gates failed" });
    }
    Ok(report.gates_pass)
}
