//! Numeric lab: algebraic-function expressions, guarded evaluation,
//! deterministic sampling and certificate verification.

mod expr;
mod sample;
mod verify;

use num_complex::Complex64;

pub use expr::{parse_expr, Expr};
pub use sample::{sample_points, SampleRegion};
pub use verify::{verify_certificate, verify_certificate_with, VerifyOptions, VerifyReport};

use crate::algebra::ComplexPoint;
use crate::error::LabError;

/// Evaluate `e` at `point` on the principal branch.
///
/// `Ok(None)` means undefined: a denominator (or the base of a negative
/// power) within `delta` of zero, or a root argument within `delta` of the
/// cut `(-∞, 0]`. With `delta = 0` only exact zeros are undefined.
pub fn eval_expr(
    e: &Expr,
    point: &ComplexPoint,
    delta: f64,
) -> Result<Option<Complex64>, LabError> {
    if e.dim() > point.dim() {
        return Err(LabError::DimensionMismatch {
            expected: e.dim(),
            got: point.dim(),
        });
    }
    Ok(eval(e, &point.coords, delta))
}

fn near_zero(v: Complex64, delta: f64) -> bool {
    v == Complex64::new(0.0, 0.0) || v.norm() < delta
}

/// Distance from `v` to `(-∞, 0]`.
fn cut_distance(v: Complex64) -> f64 {
    if v.re < 0.0 {
        v.im.abs()
    } else {
        v.norm()
    }
}

fn eval(e: &Expr, z: &[Complex64], delta: f64) -> Option<Complex64> {
    let v = match e {
        Expr::Const(c) => c.to_complex64(),
        Expr::Var(k) => z[k - 1],
        Expr::Neg(a) => -eval(a, z, delta)?,
        Expr::Add(a, b) => eval(a, z, delta)? + eval(b, z, delta)?,
        Expr::Sub(a, b) => eval(a, z, delta)? - eval(b, z, delta)?,
        Expr::Mul(a, b) => eval(a, z, delta)? * eval(b, z, delta)?,
        Expr::Div(a, b) => {
            let num = eval(a, z, delta)?;
            let den = eval(b, z, delta)?;
            if near_zero(den, delta) {
                return None;
            }
            num / den
        }
        Expr::Pow(a, k) => {
            let base = eval(a, z, delta)?;
            if *k < 0 {
                if near_zero(base, delta) {
                    return None;
                }
                base.powu(k.unsigned_abs()).inv()
            } else {
                base.powu(*k as u32)
            }
        }
        Expr::Root(k, a) => {
            let arg = eval(a, z, delta)?;
            if delta > 0.0 && cut_distance(arg) < delta {
                return None;
            }
            if arg == Complex64::new(0.0, 0.0) {
                Complex64::new(0.0, 0.0)
            } else {
                let k = f64::from(*k);
                Complex64::from_polar(arg.norm().powf(1.0 / k), arg.arg() / k)
            }
        }
        Expr::Conj(a) => eval(a, z, delta)?.conj(),
    };
    (v.re.is_finite() && v.im.is_finite()).then_some(v)
}
