use num_traits::Zero;

use super::{imag_part, real_part, with_w, AnnihilatorCertificate, Flag, Part};
use crate::algebra::{phi, Family, GaussianRational, MultiPoly, Var, VarSpace};
use crate::elimination::resultant_wrt_with;
use crate::error::CertificateError;
use crate::exec::Execution;

/// Annihilators of `Re f` and `Im f` from an annihilator of `f`.
///
/// With `Pʳ` a real-coefficient annihilator of `f`:
/// `R₁ = Res_w(Pʳ(z, w), Pʳ(zb, t − w))` vanishes at `t = f + f̄ = 2·Re f`,
/// `R₂ = Res_w(Pʳ(z, w), Pʳ(zb, w − t))` vanishes at `t = f − f̄ = 2i·Im f`.
/// Mapping through φ and rescaling `t` gives the two real certificates.
pub fn split_complex(
    cert: &AnnihilatorCertificate,
) -> Result<(AnnihilatorCertificate, AnnihilatorCertificate), CertificateError> {
    split_complex_with(cert, Execution::default())
}

pub fn split_complex_with(
    cert: &AnnihilatorCertificate,
    exec: Execution,
) -> Result<(AnnihilatorCertificate, AnnihilatorCertificate), CertificateError> {
    cert.expect_part(Part::F)?;
    cert.require_t()?;
    let p = cert.poly();
    let n = cert.n();

    if let Some(c) = constant_root(p) {
        let re = constant_certificate(n, real_part(&c), Part::Re)?;
        let im = constant_certificate(n, imag_part(&c), Part::Im)?;
        let note = format!("input {p} is free of z and linear in t: f is the constant {c}");
        return Ok((
            re.with_log(vec![note.clone(), "Re f is constant".into()], Vec::new()),
            im.with_log(vec![note, "Im f is constant".into()], Vec::new()),
        ));
    }

    let pr = p.realify()?;
    let mut common = vec![
        format!("input annihilator of f: {p}"),
        format!("realify: P^r = {pr}"),
    ];

    let mixed = with_w(VarSpace::conjugate_pair(n));
    let w = MultiPoly::var(mixed, Var::W)?;
    let t = MultiPoly::var(mixed, Var::T)?;
    let first = pr.substitute(&[(Var::T, w.clone())], mixed)?;
    let conj_vars: Vec<(Var, MultiPoly)> = (1..=n)
        .map(|k| {
            (
                Var::Z(k),
                MultiPoly::var(mixed, Var::ZBar(k)).expect("zb in mixed space"),
            )
        })
        .collect();
    common.push(format!("P^r(z, w) = {first}"));

    let mut out = Vec::with_capacity(2);
    for part in [Part::Re, Part::Im] {
        let mut log = common.clone();
        let mut flags = Vec::new();
        let shifted = match part {
            Part::Re => &t - &w,
            _ => &w - &t,
        };
        let mut bindings = conj_vars.clone();
        bindings.push((Var::T, shifted));
        let second = pr.substitute(&bindings, mixed)?;
        log.push(match part {
            Part::Re => format!("P^r(zb, t - w) = {second}"),
            _ => format!("P^r(zb, w - t) = {second}  (annihilates -conj f)"),
        });

        let elim = resultant_wrt_with(&first, &second, Var::W, exec)?;
        log.extend(elim.steps.iter().cloned());
        if elim.reduced {
            flags.push(Flag::Reduced);
        }
        let r = elim.resultant.embed(mixed.without(Family::W))?;
        let q = phi(&r)?;
        log.push(format!("phi: Q(x, y, t) = {q}"));

        let real = VarSpace::real(n);
        let tv = MultiPoly::var(real, Var::T)?;
        let a = match part {
            Part::Re => {
                let q = q.realify()?;
                log.push(format!("realify: {q}"));
                let scaled =
                    q.substitute(&[(Var::T, tv.scale(&GaussianRational::from(2)))], real)?;
                log.push("rescale t -> 2t (Q vanishes at t = 2 Re f)".into());
                scaled
            }
            _ => {
                let two_i = GaussianRational::from_integers(0, 2);
                let scaled = q.substitute(&[(Var::T, tv.scale(&two_i))], real)?;
                log.push("rescale t -> 2i t (Q vanishes at t = 2i Im f)".into());
                let real_q = scaled.realify()?;
                log.push(format!("realify: {real_q}"));
                real_q
            }
        };
        let cert = AnnihilatorCertificate::new(a, part)?;
        log.push(format!("normalize: {}", cert.poly()));
        out.push(cert.with_log(log, flags));
    }
    let im = out.pop().expect("two certificates");
    let re = out.pop().expect("two certificates");
    Ok((re, im))
}

/// `Some(c)` when `p = a·t + b` with `a, b` constants, i.e. `f ≡ c = -b/a`.
fn constant_root(p: &MultiPoly) -> Option<GaussianRational> {
    if p.deg_in(Var::T) != 1 || p.vars_used() != [Var::T] {
        return None;
    }
    let cs = p.coeffs_in(Var::T);
    let b = cs[0].constant_value()?;
    let a = cs[1].constant_value()?;
    Some(-(&b / &a))
}

fn constant_certificate(
    n: usize,
    c: GaussianRational,
    part: Part,
) -> Result<AnnihilatorCertificate, CertificateError> {
    let space = VarSpace::real(n);
    let t = MultiPoly::var(space, Var::T)?;
    let poly = if c.is_zero() {
        t
    } else {
        &t - &MultiPoly::constant(space, c)
    };
    AnnihilatorCertificate::new(poly, part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(s: &str) -> (String, String) {
        let cert = AnnihilatorCertificate::parse(s, Part::F).unwrap();
        let (a, b) = split_complex(&cert).unwrap();
        (a.poly().to_string(), b.poly().to_string())
    }

    #[test]
    fn linear() {
        assert_eq!(split("t - z1"), ("t - x1".into(), "t - y1".into()));
    }

    #[test]
    fn square() {
        assert_eq!(
            split("t - z1^2"),
            ("t - x1^2 + y1^2".into(), "t - 2*x1*y1".into())
        );
    }

    #[test]
    fn constant_function() {
        assert_eq!(split("t - (1 + 2i)"), ("t - 1".into(), "t - 2".into()));
        assert_eq!(split("2*t - 3"), ("2*t - 3".into(), "t".into()));
    }

    #[test]
    fn square_root_gives_quartics() {
        let (a, b) = split("t^2 - z1^2 - 1");
        let a = MultiPoly::parse(&a).unwrap();
        let b = MultiPoly::parse(&b).unwrap();
        assert_eq!(a.deg_in(Var::T), 4);
        assert_eq!(b.deg_in(Var::T), 4);
        assert!(a.is_real() && b.is_real());
    }

    #[test]
    fn derivation_is_logged() {
        let cert = AnnihilatorCertificate::parse("t - z1", Part::F).unwrap();
        let (a, _) = split_complex(&cert).unwrap();
        assert!(a.derivation.iter().any(|l| l.starts_with("phi:")));
        assert!(a.derivation.iter().any(|l| l.contains("resultant")));
    }

    #[test]
    fn rejects_bad_inputs() {
        let re = AnnihilatorCertificate::parse("t - x1", Part::Re).unwrap();
        assert!(matches!(
            split_complex(&re),
            Err(CertificateError::WrongPart { .. })
        ));
        let no_t = AnnihilatorCertificate::parse("z1 - 1", Part::F).unwrap();
        assert_eq!(split_complex(&no_t), Err(CertificateError::NoTDependence));
    }
}
