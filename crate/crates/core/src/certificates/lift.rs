use num_rational::BigRational;
use num_traits::Zero;

use super::{rational, real_part, translation, AnnihilatorCertificate, BaseData, Flag, Part};
use crate::algebra::{GaussianRational, MultiPoly, Var, VarSpace};
use crate::error::CertificateError;

/// Annihilator of `f` from an annihilator `A` of `Re f` and one exact value
/// `w0 = f(z0)`.
///
/// After translating so that `f̃ = f(· + z0) − w0` vanishes at the origin,
/// `P̃(x, y, t) = Ã(x, y, t/2)` annihilates `2·Re f̃`, and
/// `Q̃(z, t) = P̃(z/2, z/(2i), t)` annihilates `f̃` itself. Factors
/// `x_k² + y_k²` lie in the kernel of that substitution and are stripped
/// first. The result is translated back.
///
/// For `n > 1` the same substitution is applied coordinatewise; those
/// certificates are flagged [`Flag::RequiresVerification`].
pub fn cartan_lift(
    cert: &AnnihilatorCertificate,
    base: &BaseData,
) -> Result<AnnihilatorCertificate, CertificateError> {
    cert.expect_part(Part::Re)?;
    let a = cert.poly();
    let n = cert.n();
    if base.z0.len() != n {
        return Err(CertificateError::BaseDimension {
            expected: n,
            got: base.z0.len(),
        });
    }
    if a.deg_in(Var::T) == 0 {
        return Err(CertificateError::Degenerate(format!(
            "{a} is free of t and annihilates no function"
        )));
    }
    let real = VarSpace::real(n);
    let complex = VarSpace::complex(n);
    let mut log = vec![format!("input annihilator of Re f: {a}")];

    // shift so the function vanishes at the origin
    let mut shifts: Vec<(Var, GaussianRational)> = Vec::new();
    for (k, z) in base.z0.iter().enumerate() {
        shifts.push((Var::X(k + 1), rational(z.re())));
        shifts.push((Var::Y(k + 1), rational(z.im())));
    }
    shifts.push((Var::T, real_part(&base.w0)));
    let shifted = a.substitute(&translation(real, &shifts), real)?;
    if !base.is_origin() {
        log.push(format!(
            "shift to base point z0 = {}, w0 = {}: {shifted}",
            fmt_point(&base.z0),
            base.w0
        ));
    }

    let half_t = MultiPoly::var(real, Var::T)?.scale(&GaussianRational::ratio(1, 2));
    let mut p = shifted
        .substitute(&[(Var::T, half_t)], real)?
        .content_normalize()?;
    log.push(format!("rescale t -> t/2 (annihilates 2 Re f): {p}"));

    let over_2i =
        GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
    let mut cartan = Vec::with_capacity(2 * n);
    for k in 1..=n {
        let z = MultiPoly::var(complex, Var::Z(k))?;
        cartan.push((Var::X(k), z.scale(&GaussianRational::ratio(1, 2))));
        cartan.push((Var::Y(k), z.scale(&over_2i)));
    }

    let mut image = p.substitute(&cartan, complex)?;
    while image.is_zero() {
        let stripped = (1..=n).find_map(|k| {
            let x = MultiPoly::var(real, Var::X(k)).ok()?;
            let y = MultiPoly::var(real, Var::Y(k)).ok()?;
            let factor = &x.pow(2) + &y.pow(2);
            p.divide_exact(&factor).ok().flatten().map(|q| (factor, q))
        });
        let Some((factor, q)) = stripped else {
            return Err(CertificateError::Degenerate(format!(
                "{p} vanishes under x -> z/2, y -> z/(2i) and has no x_k^2 + y_k^2 factor"
            )));
        };
        log.push(format!("strip degenerate factor {factor}: {q}"));
        p = q;
        image = p.substitute(&cartan, complex)?;
    }
    if image.deg_in(Var::T) == 0 {
        return Err(CertificateError::Degenerate(format!(
            "image {image} of the Cartan substitution is free of t"
        )));
    }
    let image = image.content_normalize()?;
    log.push(format!("substitute x -> z/2, y -> z/(2i): {image}"));

    let mut unshift: Vec<(Var, GaussianRational)> = base
        .z0
        .iter()
        .enumerate()
        .map(|(k, z)| (Var::Z(k + 1), -z))
        .collect();
    unshift.push((Var::T, -&base.w0));
    let q = image.substitute(&translation(complex, &unshift), complex)?;
    if !base.is_origin() {
        log.push(format!("shift back: {q}"));
    }

    let out = AnnihilatorCertificate::new(q, Part::F)?;
    log.push(format!("normalize: {}", out.poly()));
    let mut flags = Vec::new();
    if n > 1 {
        log.push("n > 1: coordinatewise substitution, validity must be checked numerically".into());
        flags.push(Flag::RequiresVerification);
    }
    Ok(out.with_log(log, flags))
}

fn fmt_point(z: &[GaussianRational]) -> String {
    let parts: Vec<String> = z.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lift(a: &str, z0: i64, w0: i64) -> Result<String, CertificateError> {
        let cert = AnnihilatorCertificate::parse(a, Part::Re)?;
        let base = BaseData::new(vec![GaussianRational::from(z0)], GaussianRational::from(w0));
        cartan_lift(&cert, &base).map(|c| c.poly().to_string())
    }

    #[test]
    fn examples() {
        assert_eq!(lift("t - x1", 0, 0).unwrap(), "t - z1");
        assert_eq!(lift("t - x1^2 + y1^2", 0, 0).unwrap(), "t - z1^2");
        assert_eq!(lift("t - x1", 1, 1).unwrap(), "t - z1");
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            lift("x1^2 + y1^2", 0, 0),
            Err(CertificateError::Degenerate(_))
        ));
        assert!(matches!(
            lift("x1^4 + 2*x1^2*y1^2 + y1^4", 3, 1),
            Err(CertificateError::Degenerate(_))
        ));
    }

    #[test]
    fn strips_spurious_factor() {
        // (x^2 + y^2)(t - x) annihilates Re z = x
        let out = lift("x1^2*t + y1^2*t - x1^3 - x1*y1^2", 0, 0).unwrap();
        assert_eq!(out, "t - z1");
    }

    #[test]
    fn imaginary_part_of_base_value_survives() {
        // Re f = x with f(0) = i: f = z + i
        let cert = AnnihilatorCertificate::parse("t - x1", Part::Re).unwrap();
        let base = BaseData::new(vec![GaussianRational::zero()], GaussianRational::i());
        let out = cartan_lift(&cert, &base).unwrap();
        assert_eq!(out.poly().to_string(), "t - z1 - i");
    }

    #[test]
    fn higher_dimension_is_flagged() {
        let cert = AnnihilatorCertificate::parse("t - x1*x2 + y1*y2", Part::Re).unwrap();
        let out = cartan_lift(&cert, &BaseData::origin(2)).unwrap();
        assert_eq!(out.poly().to_string(), "t - z1*z2");
        assert!(out.has_flag(Flag::RequiresVerification));
        assert!(matches!(
            cartan_lift(&cert, &BaseData::origin(1)),
            Err(CertificateError::BaseDimension { .. })
        ));
    }
}
