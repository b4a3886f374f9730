use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{eval_expr, sample_points, Expr, SampleRegion};
use crate::algebra::{Assignment, CompiledPoly, ComplexPoint, Var};
use crate::certificates::{AnnihilatorCertificate, Part};
use crate::error::LabError;
use crate::exec::Execution;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub count: usize,
    pub tol: f64,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            count: 200,
            tol: 1e-8,
            seed: 0,
            exec: Execution::default(),
        }
    }
}

/// Outcome of sampling `|P(z, f(z))| / (1 + Σ|terms|)` over a region.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub points_checked: usize,
    pub max_relative_residual: f64,
    pub worst_point: Option<ComplexPoint>,
    pub pass: bool,
    pub tol: f64,
}

/// Numerically check that `cert` annihilates the function `expr`
/// (or its real/imaginary part, per the certificate's part).
pub fn verify_certificate(
    cert: &AnnihilatorCertificate,
    expr: &Expr,
    region: &SampleRegion,
    count: usize,
    tol: f64,
    seed: u64,
) -> Result<VerifyReport, LabError> {
    verify_certificate_with(
        cert,
        expr,
        region,
        &VerifyOptions {
            count,
            tol,
            seed,
            exec: Execution::default(),
        },
    )
}

pub fn verify_certificate_with(
    cert: &AnnihilatorCertificate,
    expr: &Expr,
    region: &SampleRegion,
    opts: &VerifyOptions,
) -> Result<VerifyReport, LabError> {
    let n = cert.n();
    if expr.dim() > n || region.dim() != n {
        return Err(LabError::IncompatibleSpace(format!(
            "{} certificate over {}, expression in {} variables, region of dimension {}",
            cert.part(),
            cert.space(),
            expr.dim(),
            region.dim()
        )));
    }
    let points = sample_points(region, opts.count, opts.seed, expr)?;
    let compiled = CompiledPoly::new(cert.poly());
    let part = cert.part();
    let residuals = opts.exec.map(&points, |p| {
        residual(&compiled, part, expr, p, region.delta)
    });

    let mut worst: Option<(usize, f64)> = None;
    for (k, r) in residuals.into_iter().enumerate() {
        let r = r?;
        // NaN counts as worst so it cannot hide behind a passing maximum
        let r = if r.is_nan() { f64::INFINITY } else { r };
        if worst.is_none_or(|(_, m)| r > m) {
            worst = Some((k, r));
        }
    }
    let max = worst.map_or(0.0, |(_, m)| m);
    Ok(VerifyReport {
        points_checked: points.len(),
        max_relative_residual: max,
        worst_point: worst.map(|(k, _)| points[k].clone()),
        pass: max <= opts.tol,
        tol: opts.tol,
    })
}

fn residual(
    compiled: &CompiledPoly,
    part: Part,
    expr: &Expr,
    point: &ComplexPoint,
    delta: f64,
) -> Result<f64, LabError> {
    let f = eval_expr(expr, point, delta)?.expect("sampled points are defined");
    let mut at = Assignment::new(compiled.space());
    let t = match part {
        Part::F => {
            at.set_complex(point);
            f
        }
        Part::Re => {
            at.set_real_parts(point);
            Complex64::new(f.re, 0.0)
        }
        Part::Im => {
            at.set_real_parts(point);
            Complex64::new(f.im, 0.0)
        }
    };
    at.set(Var::T, t);
    let e = compiled.eval(&at)?;
    Ok(e.value.norm() / (1.0 + e.magnitude))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::parse_expr;

    fn region(r: f64) -> SampleRegion {
        SampleRegion::new(vec![Complex64::new(0.0, 0.0)], r).unwrap()
    }

    fn check(p: &str, part: Part, e: &str) -> VerifyReport {
        let cert = AnnihilatorCertificate::parse(p, part).unwrap();
        verify_certificate(&cert, &parse_expr(e).unwrap(), &region(0.5), 200, 1e-8, 0).unwrap()
    }

    #[test]
    fn passes_on_true_certificates() {
        assert!(check("t - z1^2", Part::F, "z1^2").pass);
        assert!(check("t^2 - z1^2 - 1", Part::F, "sqrt(1 + z1^2)").pass);
        assert!(check("t - x1^2 + y1^2", Part::Re, "z1^2").pass);
        assert!(check("t - 2*x1*y1", Part::Im, "z1^2").pass);
        assert_eq!(check("t - z1", Part::F, "z1").points_checked, 200);
    }

    #[test]
    fn fails_on_wrong_function() {
        let r = check("t - z1", Part::F, "conj(z1)");
        assert!(!r.pass);
        assert!(r.max_relative_residual > 1e-3);
        assert!(r.worst_point.is_some());
    }

    #[test]
    fn sequential_matches_parallel() {
        let cert = AnnihilatorCertificate::parse("t^2 - z1^4 - z1^2", Part::F).unwrap();
        let e = parse_expr("z1*sqrt(1 + z1^2)").unwrap();
        let run = |exec| {
            verify_certificate_with(
                &cert,
                &e,
                &region(0.5),
                &VerifyOptions {
                    exec,
                    ..Default::default()
                },
            )
            .unwrap()
        };
        assert_eq!(run(Execution::Sequential), run(Execution::Parallel));
    }

    #[test]
    fn incompatible() {
        let cert = AnnihilatorCertificate::parse("t - z1", Part::F).unwrap();
        let e = parse_expr("z2").unwrap();
        assert!(matches!(
            verify_certificate(&cert, &e, &region(1.0), 10, 1e-8, 0),
            Err(LabError::IncompatibleSpace(_))
        ));
    }
}
