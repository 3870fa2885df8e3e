//! `holoreduce` command line.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage,
//! parse or input errors.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use crate::exprio::{parse_operator, parse_polynomial, parse_rational_function, ExprError, Format};
use crate::operator::OperatorError;
use crate::polyarith::Rational;
use crate::reduction::{
    polynomial_reduce, rational_reduce, rational_reduce_auto_grow, RationalReductionResult, ReductionError,
    Side, AUTO_GROW_CAP,
};
use crate::sequences::{guess_annihilator, lookup, parse_terms, SequenceError};
use crate::verify::{
    numeric_series_check, precision_from_env, reduce_for_fixture, verify_congruence, verify_identity_exact,
    Accel, Fixture, IdentityFixture, VerifyError,
};

pub use report::{Field, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// File extension of fixture files; a derived fixture's `source` names a
/// sibling file.
pub const FIXTURE_EXT: &str = "fixture";

#[derive(Parser, Debug)]
#[command(name = "holoreduce", version, about = "Adjoint-operator reductions for holonomic sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format: text, latex or structured.
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree profile and summable-degree bounds of an operator.
    Classify {
        #[arg(long)]
        operator: String,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial reduction `p = L*(x) + r`.
    Reduce {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rational reduction through a shift-product denominator.
    RationalReduce {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        factor: String,
        #[arg(long)]
        side: Side,
        #[arg(long)]
        order: usize,
        /// Retry with larger orders, up to `order + 8`.
        #[arg(long)]
        auto_grow: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Guess an annihilator from a term file.
    Guess {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check a fixture exactly, numerically or modulo prime powers.
    Verify {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long, value_parser = ["exact", "numeric", "congruence"])]
        mode: String,
        /// Number of terms in numeric mode.
        #[arg(long = "N", default_value_t = 100_000)]
        n_terms: usize,
        /// Absolute tolerance in numeric mode.
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        #[arg(long, default_value = "average1")]
        accel: Accel,
        /// Comma-separated primes for congruence mode.
        #[arg(long, default_value = "7,13,19,31,37,43", value_delimiter = ',')]
        primes: Vec<u64>,
        /// Window length of the exact prefix checks.
        #[arg(long, default_value_t = 100)]
        window: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Terms of a catalog sequence.
    Eval {
        #[arg(long)]
        sequence: String,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Exact `sum_{n=from}^{to} r(n) F(n)` for a catalog sequence.
    Sum {
        #[arg(long)]
        sequence: String,
        /// Rational function `r(n)`.
        #[arg(long, default_value = "1")]
        multiplier: String,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[command(flatten)]
        common: Common,
    },
}

/// Command failure with its exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Math(String),
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

impl From<OperatorError> for Failure {
    fn from(e: OperatorError) -> Self {
        match e {
            OperatorError::InternalInconsistency(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Operator(o) => o.into(),
            ReductionError::IrreducibleAtThisI { .. } | ReductionError::AutoGrowExhausted { .. } => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        match e {
            SequenceError::SingularLeadingCoefficient { .. } => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Sequence(s) => s.into(),
            VerifyError::Reduction(r) => r.into(),
            VerifyError::Operator(o) => o.into(),
            VerifyError::PrecisionLoss(_)
            | VerifyError::DenominatorVanishes { .. }
            | VerifyError::NonInvertibleDenominator { .. }
            | VerifyError::ScalarNotConstant => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A report plus whether every check it describes passed.
struct Outcome {
    report: Report,
    ok: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, ok: true }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to stderr. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let format = match &cli.command {
        Command::Classify { common, .. }
        | Command::Reduce { common, .. }
        | Command::RationalReduce { common, .. }
        | Command::Guess { common, .. }
        | Command::Verify { common, .. }
        | Command::Eval { common, .. }
        | Command::Sum { common, .. } => common.format,
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            if out.write_all(outcome.report.render(format).as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_MATH
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(msg)) => {
            eprintln!("check failed: {msg}");
            EXIT_MATH
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Classify { operator, .. } => classify(&operator),
        Command::Reduce { operator, poly, .. } => reduce(&operator, &poly),
        Command::RationalReduce {
            operator,
            poly,
            factor,
            side,
            order,
            auto_grow,
            ..
        } => rational(&operator, &poly, &factor, side, order, auto_grow),
        Command::Guess {
            terms,
            start,
            max_order,
            max_deg,
            ..
        } => guess(&terms, start, max_order, max_deg),
        Command::Verify {
            fixture,
            mode,
            n_terms,
            tol,
            accel,
            primes,
            window,
            ..
        } => verify(&fixture, &mode, n_terms, tol, accel, &primes, window),
        Command::Eval { sequence, from, to, .. } => eval(&sequence, from, to.unwrap_or(from)),
        Command::Sum {
            sequence,
            multiplier,
            from,
            to,
            ..
        } => sum(&sequence, &multiplier, from, to),
    }
}

fn classify(operator: &str) -> Result<Outcome, Failure> {
    let op = parse_operator(operator)?;
    let bounds = op.summable_degree_bounds()?;
    let p = &bounds.profile;
    let mut summary = format!("degL={} CL={} upper={}", p.deg_l, p.c_l, bounds.upper);
    if let Some(lower) = bounds.lower {
        summary.push_str(&format!(" lower={lower}"));
    }
    Ok(Report::new("classify")
        .summary(summary)
        .field("operator", Field::Operator(op.clone()))
        .field("order", Field::Int(p.order as i64))
        .field("degL", Field::Int(p.deg_l))
        .field("dL", Field::Int(p.d_l as i64))
        .field("f", Field::Poly(p.fpoly.clone()))
        .field("RL", Field::Ints(p.r_l.iter().map(|&s| s as i64).collect()))
        .field("CL", Field::Int(p.c_l as i64))
        .field("degenerated", Field::Bool(p.degenerated))
        .field("strongly_nondegenerated", Field::Bool(p.strongly_nondegenerated))
        .field("upper", Field::Int(bounds.upper))
        .field("lower", bounds.lower.map_or(Field::Null, Field::Int))
        .field("witness", Field::Poly(bounds.witness))
        .into())
}

fn reduce(operator: &str, poly: &str) -> Result<Outcome, Failure> {
    let op = parse_operator(operator)?;
    let p = parse_polynomial(poly)?;
    let r = polynomial_reduce(&p, &op)?;
    Ok(Report::new("reduce")
        .field("operator", Field::Operator(op))
        .field("poly", Field::Poly(p))
        .field("remainder", Field::Poly(r.remainder))
        .field("multiplier", Field::Poly(r.multiplier))
        .field("certificate", Field::Polys(r.certificate))
        .into())
}

fn rational_fields(report: &mut Report, rr: &RationalReductionResult) {
    report.push("side", Field::Text(rr.side.to_string()));
    report.push("remainder_numer", Field::Poly(rr.remainder_numer.clone()));
    report.push("denominator", Field::Poly(rr.denominator()));
    report.push("derived_operator", Field::Operator(rr.derived_operator.clone()));
    report.push("multiplier", Field::Poly(rr.reduction.multiplier.clone()));
    report.push("certificate", Field::Polys(rr.reduction.certificate.clone()));
    report.push("degree_bound", rr.degree_bound.map_or(Field::Null, Field::Int));
}

fn rational(
    operator: &str,
    poly: &str,
    factor: &str,
    side: Side,
    order: usize,
    auto_grow: bool,
) -> Result<Outcome, Failure> {
    let op = parse_operator(operator)?;
    let p = parse_polynomial(poly)?;
    let a = parse_polynomial(factor)?;
    let mut report = Report::new("rational-reduce")
        .field("operator", Field::Operator(op.clone()))
        .field("poly", Field::Poly(p.clone()))
        .field("factor", Field::Poly(a.clone()));
    if auto_grow {
        match rational_reduce_auto_grow(&p, &op, &a, side, order) {
            Ok(g) => {
                report.push("order_requested", Field::Int(g.requested_order as i64));
                report.push("order", Field::Int(g.order_used as i64));
                rational_fields(&mut report, &g.result);
            }
            Err(ReductionError::AutoGrowExhausted { from, to }) => {
                report.push("order_requested", Field::Int(from as i64));
                report.push("cap", Field::Int(AUTO_GROW_CAP as i64));
                report.push(
                    "status",
                    Field::Text(format!("cap reached: no order in {from}..={to} reduces the remainder")),
                );
                return Ok(Outcome { report, ok: false });
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        let rr = rational_reduce(&p, &op, &a, side, order)?;
        report.push("order", Field::Int(order as i64));
        rational_fields(&mut report, &rr);
    }
    Ok(report.into())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn guess(terms: &Path, start: i64, max_order: usize, max_deg: usize) -> Result<Outcome, Failure> {
    let values = parse_terms(&read_file(terms)?)?;
    let found = guess_annihilator(&values, start, max_order, max_deg)?;
    let report = Report::new("guess")
        .field("terms", Field::Int(values.len() as i64))
        .field("start", Field::Int(start));
    Ok(match found {
        Some(op) => report
            .summary(op.to_string())
            .field("annihilator", Field::Operator(op))
            .into(),
        None => Outcome {
            report: report.summary("none").field("annihilator", Field::Null),
            ok: false,
        },
    })
}

fn identity_source(path: &Path, fix: &IdentityFixture) -> Result<IdentityFixture, Failure> {
    let Some(d) = &fix.derivation else {
        return Err(Failure::Usage(format!(
            "exact mode needs a derived fixture; '{}' has no source",
            fix.name
        )));
    };
    let dir = path.parent().unwrap_or(Path::new("."));
    let source_path = dir.join(format!("{}.{FIXTURE_EXT}", d.source));
    match Fixture::load(&source_path)? {
        Fixture::Identity(s) => Ok(s),
        Fixture::Congruence(_) => Err(Failure::Usage(format!(
            "source '{}' is not an identity fixture",
            d.source
        ))),
    }
}

fn verify(
    path: &Path,
    mode: &str,
    n_terms: usize,
    tol: f64,
    accel: Accel,
    primes: &[u64],
    window: usize,
) -> Result<Outcome, Failure> {
    let fixture = Fixture::load(path)?;
    let mut report = Report::new("verify")
        .field("fixture", Field::Text(fixture.name().to_string()))
        .field("mode", Field::Text(mode.to_string()));
    let ok = match (mode, &fixture) {
        ("exact", Fixture::Identity(fix)) => {
            let source = identity_source(path, fix)?;
            let rr = reduce_for_fixture(fix, &source)?;
            let rep = verify_identity_exact(fix, &source, &rr, window)?;
            report.push("source", Field::Text(source.name.clone()));
            report.push("scalar", Field::Rational(rep.scalar.clone()));
            report.push("remainder_numer", Field::Poly(rr.remainder_numer.clone()));
            report.push("window", Field::Int(window as i64));
            report.push("windows_hold", Field::Bool(rep.windows_hold));
            report.push("first_failure", rep.first_failure.map_or(Field::Null, Field::Int));
            report.push("target", Field::Text(fix.target.to_string()));
            report.push("derived_target", Field::Text(rep.derived_target.to_string()));
            report.push("target_matches", Field::Bool(rep.target_matches));
            rep.holds()
        }
        ("numeric", Fixture::Identity(fix)) => {
            let rep = numeric_series_check(fix, n_terms, accel, precision_from_env())?;
            let ok = rep.abs_error_f64() <= tol;
            report.push("terms", Field::Int(rep.terms as i64));
            report.push("accel", Field::Text(rep.accel.to_string()));
            report.push("precision_bits", Field::Int(rep.precision_bits as i64));
            report.push("value", Field::Text(rep.value.to_decimal(30)));
            report.push("target", Field::Text(rep.target.to_decimal(30)));
            report.push("abs_error", Field::Text(format!("{:.3e}", rep.abs_error_f64())));
            report.push("tolerance", Field::Text(format!("{tol:e}")));
            report.push("first_omitted", Field::Text(format!("{:.3e}", rep.first_omitted.to_f64())));
            report.push("underflow_at", rep.underflow_at.map_or(Field::Null, Field::Int));
            ok
        }
        ("congruence", Fixture::Congruence(fix)) => {
            let reps = verify_congruence(fix, primes)?;
            let to_i64 = |x: &num_bigint::BigInt| i64::try_from(x).unwrap_or(i64::MAX);
            report.push("target", Field::Rational(fix.target.clone()));
            report.push("modulus_power", Field::Int(fix.modulus_power as i64));
            report.push("primes", Field::Ints(reps.iter().map(|r| r.prime as i64).collect()));
            report.push("residues", Field::Ints(reps.iter().map(|r| to_i64(&r.residue)).collect()));
            report.push("expected", Field::Ints(reps.iter().map(|r| to_i64(&r.expected)).collect()));
            let failing: Vec<i64> = reps.iter().filter(|r| !r.holds).map(|r| r.prime as i64).collect();
            let ok = failing.is_empty();
            report.push("failing_primes", Field::Ints(failing));
            ok
        }
        (mode, f) => {
            let kind = match f {
                Fixture::Identity(_) => "identity",
                Fixture::Congruence(_) => "congruence",
            };
            return Err(Failure::Usage(format!("mode '{mode}' does not apply to a {kind} fixture")));
        }
    };
    report = report.summary(if ok { "PASS" } else { "FAIL" });
    Ok(Outcome { report, ok })
}

fn catalog_sequence(key: &str) -> Result<&'static crate::sequences::HolonomicSequence, Failure> {
    lookup(key)
        .map(|e| &e.sequence)
        .ok_or_else(|| SequenceError::UnknownKey(key.to_string()).into())
}

fn eval(key: &str, from: i64, to: i64) -> Result<Outcome, Failure> {
    let seq = catalog_sequence(key)?;
    if to < from {
        return Err(Failure::Usage(format!("empty range {from}..={to}")));
    }
    let values = seq.values(from, to)?;
    Ok(Report::new("eval")
        .field("sequence", Field::Text(key.to_string()))
        .field("from", Field::Int(from))
        .field("to", Field::Int(to))
        .field("values", Field::Rationals(values))
        .into())
}

fn sum(key: &str, multiplier: &str, from: i64, to: i64) -> Result<Outcome, Failure> {
    let seq = catalog_sequence(key)?;
    let r = parse_rational_function(multiplier)?;
    if to < from {
        return Err(Failure::Usage(format!("empty range {from}..={to}")));
    }
    let mut acc = Rational::zero();
    for n in from..=to {
        let v = r
            .eval(&Rational::from_integer(n.into()))
            .ok_or_else(|| Failure::Math(format!("multiplier has a pole at n = {n}")))?;
        acc += v * seq.eval(n)?;
    }
    Ok(Report::new("sum")
        .field("sequence", Field::Text(key.to_string()))
        .field("multiplier", Field::RatFn(r))
        .field("from", Field::Int(from))
        .field("to", Field::Int(to))
        .field("sum", Field::Rational(acc))
        .into())
}
