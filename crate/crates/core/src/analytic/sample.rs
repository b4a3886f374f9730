use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{eval_expr, Expr};
use crate::algebra::ComplexPoint;
use crate::error::LabError;

/// Polydisc `|z_k - c_k| < radius` with a singularity guard `delta`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRegion {
    pub center: Vec<Complex64>,
    pub radius: f64,
    pub delta: f64,
}

impl SampleRegion {
    /// Guard defaults to `1e-3 · radius`.
    pub fn new(center: Vec<Complex64>, radius: f64) -> Result<Self, LabError> {
        Self::with_delta(center, radius, 1e-3 * radius)
    }

    pub fn with_delta(center: Vec<Complex64>, radius: f64, delta: f64) -> Result<Self, LabError> {
        let region = Self {
            center,
            radius,
            delta,
        };
        region.validate()?;
        Ok(region)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    fn validate(&self) -> Result<(), LabError> {
        if self.center.is_empty() {
            return Err(LabError::InvalidRegion("center has no coordinates".into()));
        }
        if self
            .center
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(LabError::InvalidRegion("center is not finite".into()));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(LabError::InvalidRegion(format!(
                "radius {} is not positive",
                self.radius
            )));
        }
        if !(self.delta.is_finite() && self.delta >= 0.0) {
            return Err(LabError::InvalidRegion(format!(
                "delta {} is negative",
                self.delta
            )));
        }
        Ok(())
    }
}

fn primes(count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    let mut c = 2;
    while out.len() < count {
        if out.iter().all(|p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let (mut inv, mut f) = (0.0, 1.0 / base as f64);
    while i > 0 {
        inv += f * (i % base) as f64;
        i /= base;
        f /= base as f64;
    }
    inv
}

/// `count` points of the region where `expr` is defined.
///
/// Points come from a Halton sequence (two bases per coordinate: radius and
/// angle) with a Cranley–Patterson rotation drawn from `seed`, so the same
/// inputs always give the same points. Fails with
/// [`LabError::HostileRegion`] if more than 90% of candidates are rejected.
pub fn sample_points(
    region: &SampleRegion,
    count: usize,
    seed: u64,
    expr: &Expr,
) -> Result<Vec<ComplexPoint>, LabError> {
    region.validate()?;
    let n = region.dim();
    if expr.dim() > n {
        return Err(LabError::DimensionMismatch {
            expected: expr.dim(),
            got: n,
        });
    }
    let bases = primes(2 * n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: Vec<f64> = (0..2 * n).map(|_| rng.gen::<f64>()).collect();

    let max_attempts = count.saturating_mul(10);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts >= max_attempts {
            return Err(LabError::HostileRegion {
                rejected: attempts - out.len(),
                attempts,
            });
        }
        attempts += 1;
        let coords = (0..n)
            .map(|k| {
                let u = (radical_inverse(attempts as u64, bases[2 * k]) + shift[2 * k]).fract();
                let v =
                    (radical_inverse(attempts as u64, bases[2 * k + 1]) + shift[2 * k + 1]).fract();
                region.center[k] + Complex64::from_polar(region.radius * u.sqrt(), TAU * v)
            })
            .collect();
        let point = ComplexPoint::new(coords).expect("finite by construction");
        if eval_expr(expr, &point, region.delta)?.is_some() {
            out.push(point);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::parse_expr;

    fn unit(n: usize) -> SampleRegion {
        SampleRegion::new(vec![Complex64::new(0.0, 0.0); n], 1.0).unwrap()
    }

    #[test]
    fn deterministic_and_inside() {
        let e = parse_expr("z1 + z2").unwrap();
        let a = sample_points(&unit(2), 50, 7, &e).unwrap();
        let b = sample_points(&unit(2), 50, 7, &e).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_points(&unit(2), 50, 8, &e).unwrap());
        assert!(a.iter().all(|p| p.coords.iter().all(|c| c.norm() < 1.0)));
    }

    #[test]
    fn skips_undefined_points() {
        let e = parse_expr("1/(z1 - 1/2)").unwrap();
        let region = SampleRegion::with_delta(vec![Complex64::new(0.0, 0.0)], 1.0, 0.3).unwrap();
        let pts = sample_points(&region, 100, 1, &e).unwrap();
        assert!(pts.iter().all(|p| (p.coords[0] - 0.5).norm() >= 0.3));
    }

    #[test]
    fn hostile_region() {
        let e = parse_expr("1/z1").unwrap();
        let region = SampleRegion::with_delta(vec![Complex64::new(0.0, 0.0)], 1.0, 2.0).unwrap();
        assert!(matches!(
            sample_points(&region, 10, 0, &e),
            Err(LabError::HostileRegion { attempts: 100, .. })
        ));
    }

    #[test]
    fn invalid_regions() {
        assert!(SampleRegion::new(vec![], 1.0).is_err());
        assert!(SampleRegion::new(vec![Complex64::new(0.0, 0.0)], 0.0).is_err());
        assert!(SampleRegion::with_delta(vec![Complex64::new(0.0, 0.0)], 1.0, -1.0).is_err());
    }
}
