use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rational, translation, with_w, AnnihilatorCertificate, Flag, Part};
use crate::algebra::{Family, GaussianRational, MultiPoly, Var, VarSpace};
use crate::elimination::resultant_wrt_with;
use crate::error::CertificateError;
use crate::exec::Execution;

/// Number of slice offsets tried before giving up.
pub const SLICE_BUDGET: usize = 32;

/// Deterministic slice offsets `y0 ∈ ℚⁿ`: the origin, then for each scalar
/// in `1, -1, 1/2, -1/2, 2, -2, 1/3, ...` the scaled unit vectors followed
/// by the scaled all-ones vector. Duplicates are dropped.
pub fn slice_candidates(n: usize) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]];
    let mut k: i64 = 1;
    while out.len() < SLICE_BUDGET {
        let scalars = [
            BigRational::from_integer(k.into()),
            BigRational::from_integer((-k).into()),
            BigRational::new(1.into(), (k + 1).into()),
            BigRational::new((-1).into(), (k + 1).into()),
        ];
        for s in scalars {
            let mut group: Vec<Vec<BigRational>> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| {
                            if i == j {
                                s.clone()
                            } else {
                                BigRational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            group.push(vec![s.clone(); n]);
            for c in group {
                if out.len() < SLICE_BUDGET && !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        k += 1;
    }
    out
}

/// Annihilator of `f = f₁ + i·f₂` from annihilators of `f₁` and `f₂`.
///
/// On the slice `y = y0`: `Q₁(z, t) = P₁(z, y0, t)` vanishes at `f₁`,
/// `Q₂(z, t) = P₂(z, y0, −i·t)` vanishes at `i·f₂`, so
/// `R = Res_w(Q₁(z, w), Q₂(z, t − w))` vanishes at `f(z + i·y0)` for real
/// `z`, and hence everywhere if `f` is holomorphic. Translating by `i·y0`
/// yields the certificate.
///
/// Holomorphy of `f` and the slice meeting the domain cannot be checked
/// symbolically, so the result is always flagged
/// [`Flag::RequiresVerification`].
pub fn merge_real_pair(
    re: &AnnihilatorCertificate,
    im: &AnnihilatorCertificate,
    slice: Option<&[BigRational]>,
) -> Result<AnnihilatorCertificate, CertificateError> {
    merge_real_pair_with(re, im, slice, Execution::default())
}

pub fn merge_real_pair_with(
    re: &AnnihilatorCertificate,
    im: &AnnihilatorCertificate,
    slice: Option<&[BigRational]>,
    exec: Execution,
) -> Result<AnnihilatorCertificate, CertificateError> {
    re.expect_part(Part::Re)?;
    im.expect_part(Part::Im)?;
    re.require_t()?;
    im.require_t()?;
    let n = re.n();
    if im.n() != n {
        return Err(crate::AlgebraError::SpaceMismatch(re.space(), im.space()).into());
    }
    if let Some(s) = slice {
        if s.len() != n {
            return Err(CertificateError::BaseDimension {
                expected: n,
                got: s.len(),
            });
        }
    }
    let candidates = match slice {
        Some(s) => vec![s.to_vec()],
        None => slice_candidates(n),
    };

    let complex = VarSpace::complex(n);
    let mut vanished = Vec::new();
    for y0 in &candidates {
        let q1 = restrict(re.poly(), y0, false)?;
        let q2 = restrict(im.poly(), y0, true)?;
        if q1.deg_in(Var::T) == 0 || q2.deg_in(Var::T) == 0 {
            vanished.push(format!("y0 = {}: Q1 = {q1}, Q2 = {q2}", fmt_slice(y0)));
            continue;
        }
        let mut log = vec![
            format!(
                "input annihilators: Re f: {}, Im f: {}",
                re.poly(),
                im.poly()
            ),
            format!("slice y = {}", fmt_slice(y0)),
            format!("Q1(z, t) = P1(z, y0, t) = {q1}"),
            format!("Q2(z, t) = P2(z, y0, -i t) = {q2}"),
        ];
        let mixed = with_w(complex);
        let w = MultiPoly::var(mixed, Var::W)?;
        let t = MultiPoly::var(mixed, Var::T)?;
        let first = q1.embed(mixed)?.substitute(&[(Var::T, w.clone())], mixed)?;
        let second = q2.embed(mixed)?.substitute(&[(Var::T, &t - &w)], mixed)?;
        let elim = resultant_wrt_with(&first, &second, Var::W, exec)?;
        log.extend(elim.steps.iter().cloned());
        let mut r = elim.resultant.embed(mixed.without(Family::W))?;

        if y0.iter().any(|c| !c.is_zero()) {
            // R annihilates z -> f(z + i y0); translate back by -i y0
            let shifts: Vec<(Var, GaussianRational)> = y0
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    (
                        Var::Z(k + 1),
                        GaussianRational::new(BigRational::zero(), -c.clone()),
                    )
                })
                .collect();
            r = r.substitute(&translation(complex, &shifts), complex)?;
            log.push(format!("translate z -> z - i y0: {r}"));
        }

        let out = AnnihilatorCertificate::new(r, Part::F)?;
        log.push(format!("normalize: {}", out.poly()));
        log.push(
            "valid only if f is holomorphic and the slice meets its domain; verify numerically"
                .into(),
        );
        let mut flags = vec![Flag::RequiresVerification];
        if elim.reduced {
            flags.push(Flag::Reduced);
        }
        return Ok(out.with_log(log, flags));
    }
    Err(CertificateError::SliceExhausted {
        attempts: candidates.len(),
        vanished,
    })
}

/// `P(z, y0, t)`, or `P(z, y0, -i t)` when `rotate` is set.
fn restrict(
    p: &MultiPoly,
    y0: &[BigRational],
    rotate: bool,
) -> Result<MultiPoly, CertificateError> {
    let n = p.space().n();
    let complex = VarSpace::complex(n);
    let mut bindings = Vec::with_capacity(2 * n + 1);
    for k in 1..=n {
        bindings.push((Var::X(k), MultiPoly::var(complex, Var::Z(k))?));
        bindings.push((
            Var::Y(k),
            MultiPoly::constant(complex, rational(&y0[k - 1])),
        ));
    }
    if rotate {
        let minus_i = GaussianRational::new(BigRational::zero(), -BigRational::one());
        bindings.push((Var::T, MultiPoly::var(complex, Var::T)?.scale(&minus_i)));
    }
    Ok(p.substitute(&bindings, complex)?)
}

fn fmt_slice(y0: &[BigRational]) -> String {
    let parts: Vec<String> = y0.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
