//! Command-line front end for `nashcert`.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! everything that would go to stdout and stderr, so the binary is a thin
//! wrapper and tests can drive the tool in-process.

mod args;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use nashcert::algebra::{parse_gaussian, Family, GaussianRational, MultiPoly, Var, VarSpace};
use nashcert::analytic::{parse_expr, verify_certificate, Expr, SampleRegion, VerifyReport};
use nashcert::certificates::{
    cartan_lift, merge_real_pair, split_complex, AnnihilatorCertificate, BaseData,
    CertificateDocument, Part,
};
use nashcert::elimination::resultant_wrt;
use nashcert::{AlgebraError, CertificateError, EliminationError, LabError};

pub use args::{Cli, Command, PartArg, RegionArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

/// The machine-mode document.
#[derive(Debug, Serialize)]
pub struct Document {
    pub command: Option<String>,
    pub inputs: BTreeMap<String, String>,
    pub certificates: Vec<CertificateDocument>,
    pub reports: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resultant: Option<ResultantEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit: i32,
}

#[derive(Debug, Serialize)]
pub struct ReportEntry {
    pub part: Part,
    pub expression: String,
    pub report: VerifyReport,
}

#[derive(Debug, Serialize)]
pub struct ResultantEntry {
    pub variable: String,
    pub polynomial: String,
    pub reduced: bool,
    pub derivation: Vec<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn degenerate(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DEGENERATE,
            message: message.into(),
        }
    }
}

fn algebra_code(e: &AlgebraError) -> i32 {
    match e {
        AlgebraError::Syntax { .. } => EXIT_USAGE,
        _ => EXIT_DEGENERATE,
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Self {
            code: algebra_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<EliminationError> for Failure {
    fn from(e: EliminationError) -> Self {
        let code = match &e {
            EliminationError::Algebra(a) => algebra_code(a),
            _ => EXIT_DEGENERATE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<CertificateError> for Failure {
    fn from(e: CertificateError) -> Self {
        let code = match &e {
            CertificateError::Algebra(a) => algebra_code(a),
            _ => EXIT_DEGENERATE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        let code = match &e {
            LabError::Syntax { .. }
            | LabError::UnknownIdentifier { .. }
            | LabError::InvalidRegion(_) => EXIT_USAGE,
            LabError::Algebra(a) => algebra_code(a),
            _ => EXIT_DEGENERATE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Default)]
struct Session {
    inputs: BTreeMap<String, String>,
    certificates: Vec<AnnihilatorCertificate>,
    reports: Vec<ReportEntry>,
    resultant: Option<ResultantEntry>,
}

impl Session {
    fn input(&mut self, key: &str, value: &str) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    /// Flag value, with `@path` replaced by the file's contents.
    fn text(&mut self, key: &str, value: &str) -> Result<String, Failure> {
        let text = match value.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("--{key}: cannot read {path}: {e}")))?
                .trim()
                .to_string(),
            None => value.to_string(),
        };
        self.input(key, &text);
        Ok(text)
    }

    fn verify(
        &mut self,
        cert: &mut AnnihilatorCertificate,
        expr_text: &str,
        expr: &Expr,
        region: &RegionArgs,
    ) -> Result<(), Failure> {
        let r = sample_region(region, cert.n())?;
        let report = verify_certificate(cert, expr, &r, region.count, region.tol, region.seed)?;
        cert.verification = Some(report.clone());
        self.reports.push(ReportEntry {
            part: cert.part(),
            expression: expr_text.to_string(),
            report,
        });
        Ok(())
    }
}

fn record_region(s: &mut Session, r: &RegionArgs) {
    if let Some(c) = &r.center {
        s.input("center", c);
    }
    s.input("radius", &r.radius);
    if let Some(d) = r.delta {
        s.input("delta", &d.to_string());
    }
    s.input("count", &r.count.to_string());
    s.input("tol", &r.tol.to_string());
    s.input("seed", &r.seed.to_string());
}

fn parse_radius(text: &str) -> Result<f64, Failure> {
    let bad = || Failure::usage(format!("--radius: cannot parse '{text}'"));
    let v = match text.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| bad())?;
            let b: f64 = b.trim().parse().map_err(|_| bad())?;
            a / b
        }
        None => text.trim().parse().map_err(|_| bad())?,
    };
    Ok(v)
}

fn parse_list(key: &str, text: &str) -> Result<Vec<GaussianRational>, Failure> {
    text.split(',')
        .map(|s| parse_gaussian(s.trim()).map_err(|e| Failure::usage(format!("--{key}: {e}"))))
        .collect()
}

fn sample_region(r: &RegionArgs, n: usize) -> Result<SampleRegion, Failure> {
    if r.count == 0 {
        return Err(Failure::usage("--count must be at least 1"));
    }
    if r.tol.is_nan() || r.tol <= 0.0 {
        return Err(Failure::usage("--tol must be positive"));
    }
    let center = match &r.center {
        Some(c) => parse_list("center", c)?
            .iter()
            .map(GaussianRational::to_complex64)
            .collect(),
        None => vec![Default::default(); n],
    };
    let radius = parse_radius(&r.radius)?;
    let region = match r.delta {
        Some(d) => SampleRegion::with_delta(center, radius, d),
        None => SampleRegion::new(center, radius),
    };
    Ok(region?)
}

fn parse_poly(key: &str, text: &str) -> Result<MultiPoly, Failure> {
    MultiPoly::parse(text).map_err(|e| Failure {
        code: algebra_code(&e),
        message: format!("--{key}: {e}"),
    })
}

fn into_space(key: &str, p: &MultiPoly, space: VarSpace) -> Result<MultiPoly, Failure> {
    p.embed(space)
        .map_err(|_| Failure::degenerate(format!("--{key}: {p} uses variables outside {space}")))
}

fn parse_expression(key: &str, text: &str) -> Result<Expr, Failure> {
    parse_expr(text).map_err(|e| {
        let f = Failure::from(e);
        Failure {
            code: f.code,
            message: format!("--{key}: {}", f.message),
        }
    })
}

fn parse_var(text: &str) -> Result<Var, Failure> {
    let bad = || Failure::usage(format!("--var: '{text}' is not a variable"));
    let p = MultiPoly::parse(text.trim()).map_err(|_| bad())?;
    match p.vars_used().as_slice() {
        [v] if MultiPoly::var(p.space(), *v).is_ok_and(|x| x == p) => Ok(*v),
        _ => Err(bad()),
    }
}

fn run_command(cmd: &Command, s: &mut Session) -> Result<(), Failure> {
    match cmd {
        Command::Split {
            annihilator,
            verify,
            region,
        } => {
            let text = s.text("annihilator", annihilator)?;
            let cert = AnnihilatorCertificate::new(parse_poly("annihilator", &text)?, Part::F)?;
            let expr = verify.as_ref().map(|e| s.text("verify", e)).transpose()?;
            let expr = expr
                .map(|t| parse_expression("verify", &t).map(|e| (t, e)))
                .transpose()?;
            let (mut a1, mut a2) = split_complex(&cert)?;
            if let Some((t, e)) = &expr {
                record_region(s, region);
                s.verify(&mut a1, t, e, region)?;
                s.verify(&mut a2, t, e, region)?;
            }
            s.certificates.extend([a1, a2]);
        }
        Command::Lift {
            real_annihilator,
            base,
            value,
            verify,
            region,
        } => {
            let text = s.text("real-annihilator", real_annihilator)?;
            let p = parse_poly("real-annihilator", &text)?;
            s.input("base", base);
            s.input("value", value);
            let z0 = parse_list("base", base)?;
            let w0 = parse_gaussian(value.trim())
                .map_err(|e| Failure::usage(format!("--value: {e}")))?;
            let n = p.space().n().max(z0.len());
            let expr = verify.as_ref().map(|e| s.text("verify", e)).transpose()?;
            if n > 1 && expr.is_none() {
                return Err(Failure::usage(
                    "lift with n > 1 is only reported after numeric verification; pass --verify",
                ));
            }
            let expr = expr
                .map(|t| parse_expression("verify", &t).map(|e| (t, e)))
                .transpose()?;
            let a = AnnihilatorCertificate::new(
                into_space("real-annihilator", &p, VarSpace::real(n))?,
                Part::Re,
            )?;
            let mut lifted = cartan_lift(&a, &BaseData::new(z0, w0))?;
            if let Some((t, e)) = &expr {
                record_region(s, region);
                s.verify(&mut lifted, t, e, region)?;
            }
            s.certificates.push(lifted);
        }
        Command::Merge {
            p1,
            p2,
            slice,
            verify,
            region,
        } => {
            let t1 = s.text("p1", p1)?;
            let t2 = s.text("p2", p2)?;
            let (q1, q2) = (parse_poly("p1", &t1)?, parse_poly("p2", &t2)?);
            let n = q1.space().n().max(q2.space().n());
            let slice = match slice {
                Some(text) => {
                    s.input("slice", text);
                    let values = parse_list("slice", text)?;
                    if values.iter().any(|v| !v.is_real()) {
                        return Err(Failure::usage("--slice: offsets must be real"));
                    }
                    Some(
                        values
                            .into_iter()
                            .map(|v| v.re().clone())
                            .collect::<Vec<_>>(),
                    )
                }
                None => None,
            };
            let n = n.max(slice.as_ref().map_or(0, Vec::len));
            let expr = verify.as_ref().map(|e| s.text("verify", e)).transpose()?;
            let expr = expr
                .map(|t| parse_expression("verify", &t).map(|e| (t, e)))
                .transpose()?;
            let re =
                AnnihilatorCertificate::new(into_space("p1", &q1, VarSpace::real(n))?, Part::Re)?;
            let im =
                AnnihilatorCertificate::new(into_space("p2", &q2, VarSpace::real(n))?, Part::Im)?;
            let mut merged = merge_real_pair(&re, &im, slice.as_deref())?;
            if let Some((t, e)) = &expr {
                record_region(s, region);
                s.verify(&mut merged, t, e, region)?;
            }
            s.certificates.push(merged);
        }
        Command::Resultant { p, q, var } => {
            let tp = s.text("p", p)?;
            let tq = s.text("q", q)?;
            s.input("var", var);
            let v = parse_var(var)?;
            let (a, b) = (parse_poly("p", &tp)?, parse_poly("q", &tq)?);
            let n = a.space().n().max(b.space().n()).max(v.index());
            let families: Vec<Family> = a
                .space()
                .families()
                .chain(b.space().families())
                .chain([v.family()])
                .collect();
            let space = VarSpace::new(n, &families)?;
            let r = resultant_wrt(
                &into_space("p", &a, space)?,
                &into_space("q", &b, space)?,
                v,
            )?;
            s.resultant = Some(ResultantEntry {
                variable: v.to_string(),
                polynomial: r.resultant.to_string(),
                reduced: r.reduced,
                derivation: r.steps,
            });
        }
        Command::Verify {
            certificate,
            part,
            expr,
            region,
        } => {
            let text = s.text("certificate", certificate)?;
            let part = match part {
                PartArg::F => Part::F,
                PartArg::Re => Part::Re,
                PartArg::Im => Part::Im,
            };
            s.input("part", part.name());
            let etext = s.text("expr", expr)?;
            let p = parse_poly("certificate", &text)?;
            let e = parse_expression("expr", &etext)?;
            record_region(s, region);
            let dim = region.center.as_deref().map_or(0, |c| c.split(',').count());
            let n = p.space().n().max(e.dim()).max(dim);
            let mut cert =
                AnnihilatorCertificate::new(into_space("certificate", &p, part.space(n))?, part)?;
            s.verify(&mut cert, &etext, &e, region)?;
            s.certificates.push(cert);
        }
    }
    Ok(())
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Split { .. } => "split",
        Command::Lift { .. } => "lift",
        Command::Merge { .. } => "merge",
        Command::Resultant { .. } => "resultant",
        Command::Verify { .. } => "verify",
    }
}

fn flag_name(f: &nashcert::certificates::Flag) -> String {
    serde_json::to_value(f)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn fmt_point(r: &VerifyReport) -> String {
    let Some(p) = &r.worst_point else {
        return "-".into();
    };
    let coords: Vec<String> = p
        .coords
        .iter()
        .map(|c| format!("{:.6}{:+.6}i", c.re, c.im))
        .collect();
    format!("({})", coords.join(", "))
}

fn human(s: &Session, explain: bool) -> String {
    let mut out = String::new();
    for c in &s.certificates {
        let _ = writeln!(out, "{}: {}", c.part().name(), c.poly());
        if !c.flags.is_empty() {
            let flags: Vec<String> = c.flags.iter().map(flag_name).collect();
            let _ = writeln!(out, "  flags: {}", flags.join(", "));
        }
        if explain {
            for (k, step) in c.derivation.iter().enumerate() {
                let _ = writeln!(out, "  {}. {step}", k + 1);
            }
        }
    }
    if let Some(r) = &s.resultant {
        let _ = writeln!(out, "resultant in {}: {}", r.variable, r.polynomial);
        if r.reduced {
            let _ = writeln!(out, "  flags: reduced");
        }
        if explain {
            for (k, step) in r.derivation.iter().enumerate() {
                let _ = writeln!(out, "  {}. {step}", k + 1);
            }
        }
    }
    for e in &s.reports {
        let r = &e.report;
        let _ = writeln!(
            out,
            "verify {} against {}: {} ({} points, max relative residual {:.3e}, tol {:e})",
            e.part.name(),
            e.expression,
            if r.pass { "pass" } else { "FAIL" },
            r.points_checked,
            r.max_relative_residual,
            r.tol
        );
        if !r.pass {
            let _ = writeln!(out, "  worst point: {}", fmt_point(r));
        }
    }
    out
}

fn machine(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

/// Run the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    exit: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let stderr = e.render().to_string();
            let stdout = if args.iter().any(|a| a == "--machine") {
                machine(&Document {
                    command: None,
                    inputs: BTreeMap::new(),
                    certificates: Vec::new(),
                    reports: Vec::new(),
                    resultant: None,
                    error: Some(e.kind().to_string()),
                    exit: EXIT_USAGE,
                })
            } else {
                String::new()
            };
            return Outcome {
                exit: EXIT_USAGE,
                stdout,
                stderr,
            };
        }
    };

    let mut session = Session::default();
    let result = run_command(&cli.command, &mut session);
    let (exit, error) = match result {
        Ok(()) if session.reports.iter().any(|r| !r.report.pass) => (EXIT_VERIFICATION, None),
        Ok(()) => (EXIT_OK, None),
        Err(f) => (f.code, Some(f.message)),
    };
    let mut stderr = String::new();
    if let Some(msg) = &error {
        let _ = writeln!(stderr, "error: {msg}");
    } else if exit == EXIT_VERIFICATION {
        let _ = writeln!(stderr, "error: verification failed");
    }
    let stdout = if cli.machine {
        machine(&Document {
            command: Some(command_name(&cli.command).to_string()),
            inputs: session.inputs,
            certificates: session
                .certificates
                .iter()
                .map(AnnihilatorCertificate::to_document)
                .collect(),
            reports: session.reports,
            resultant: session.resultant,
            error,
            exit,
        })
    } else if error.is_some() {
        String::new()
    } else {
        human(&session, cli.explain)
    };
    Outcome {
        exit,
        stdout,
        stderr,
    }
}
