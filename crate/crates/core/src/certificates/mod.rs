//! Certificate pipelines between a holomorphic `f` and its real and
//! imaginary parts.
//!
//! * [`split_complex`]: annihilator of `f` → annihilators of `Re f`, `Im f`
//!   (resultant elimination followed by the `z/zb → x/y` isomorphism).
//! * [`cartan_lift`]: annihilator of `Re f` plus one exact value of `f` →
//!   annihilator of `f` (Cartan's substitution `x ↦ z/2`, `y ↦ z/(2i)`).
//! * [`merge_real_pair`]: annihilators of `Re f` and `Im f` → annihilator of
//!   `f` (restriction to a real slice, then a resultant).
//!
//! Outputs are content-normalized but not minimal: an emitted polynomial may
//! be a proper multiple of the minimal annihilator.

mod lift;
mod merge;
mod split;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use lift::cartan_lift;
pub use merge::{merge_real_pair, merge_real_pair_with, slice_candidates, SLICE_BUDGET};
pub use split::{split_complex, split_complex_with};

use crate::algebra::{Family, GaussianRational, MultiPoly, Var, VarSpace};
use crate::analytic::VerifyReport;
use crate::error::CertificateError;

/// Which function a certificate annihilates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    #[serde(rename = "f")]
    F,
    #[serde(rename = "re")]
    Re,
    #[serde(rename = "im")]
    Im,
}

impl Part {
    pub fn name(self) -> &'static str {
        match self {
            Part::F => "f",
            Part::Re => "Re f",
            Part::Im => "Im f",
        }
    }

    /// The variable space a certificate for this part lives in.
    pub fn space(self, n: usize) -> VarSpace {
        match self {
            Part::F => VarSpace::complex(n),
            Part::Re | Part::Im => VarSpace::real(n),
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    /// Symbolic validity depends on facts the pipeline cannot check; the
    /// certificate must pass numeric verification before it is trusted.
    RequiresVerification,
    /// A resultant step hit a vanishing Sylvester determinant and was
    /// recomputed after gcd reduction.
    Reduced,
}

/// A nonzero, content-normalized polynomial `P` with `P(·, part) = 0`,
/// plus the steps that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnihilatorCertificate {
    poly: MultiPoly,
    part: Part,
    pub derivation: Vec<String>,
    pub flags: Vec<Flag>,
    pub verification: Option<VerifyReport>,
}

impl AnnihilatorCertificate {
    /// Validates the variable families for `part` (and real coefficients for
    /// `Re f`/`Im f`), rebinds into the part's canonical space and
    /// normalizes.
    pub fn new(poly: MultiPoly, part: Part) -> Result<Self, CertificateError> {
        if poly.is_zero() {
            return Err(CertificateError::ZeroInput);
        }
        let space = part.space(poly.space().n());
        let poly = poly
            .embed(space)
            .map_err(|_| CertificateError::WrongSpace(space))?;
        if part != Part::F && !poly.is_real() {
            return Err(CertificateError::NotReal(part.name()));
        }
        let poly = poly.content_normalize()?;
        Ok(Self {
            poly,
            part,
            derivation: Vec::new(),
            flags: Vec::new(),
            verification: None,
        })
    }

    /// Parse canonical text and wrap it.
    pub fn parse(text: &str, part: Part) -> Result<Self, CertificateError> {
        Self::new(MultiPoly::parse(text)?, part)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn space(&self) -> VarSpace {
        self.poly.space()
    }

    pub fn n(&self) -> usize {
        self.poly.space().n()
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    pub(crate) fn with_log(mut self, derivation: Vec<String>, flags: Vec<Flag>) -> Self {
        self.derivation = derivation;
        self.flags = flags;
        self
    }

    pub fn to_document(&self) -> CertificateDocument {
        CertificateDocument {
            part: self.part,
            polynomial: self.poly.to_string(),
            derivation: self.derivation.clone(),
            flags: self.flags.clone(),
            verification: self.verification.clone(),
        }
    }

    fn expect_part(&self, expected: Part) -> Result<(), CertificateError> {
        if self.part != expected {
            return Err(CertificateError::WrongPart {
                expected: expected.name(),
                got: self.part.name(),
            });
        }
        Ok(())
    }

    fn require_t(&self) -> Result<(), CertificateError> {
        if self.poly.deg_in(Var::T) == 0 {
            return Err(CertificateError::NoTDependence);
        }
        Ok(())
    }
}

/// Machine-readable form of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub part: Part,
    pub polynomial: String,
    pub derivation: Vec<String>,
    pub flags: Vec<Flag>,
    pub verification: Option<VerifyReport>,
}

/// Base point `z0` and the exact value `w0 = f(z0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseData {
    pub z0: Vec<GaussianRational>,
    pub w0: GaussianRational,
}

impl BaseData {
    pub fn new(z0: Vec<GaussianRational>, w0: GaussianRational) -> Self {
        Self { z0, w0 }
    }

    pub fn origin(n: usize) -> Self {
        Self {
            z0: vec![GaussianRational::zero(); n],
            w0: GaussianRational::zero(),
        }
    }

    pub fn is_origin(&self) -> bool {
        self.w0.is_zero() && self.z0.iter().all(Zero::is_zero)
    }
}

/// `v ↦ v + c` for each pair, as substitution bindings into `space`.
pub(crate) fn translation(
    space: VarSpace,
    shifts: &[(Var, GaussianRational)],
) -> Vec<(Var, MultiPoly)> {
    shifts
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(v, c)| {
            let var = MultiPoly::var(space, *v).expect("variable declared by caller");
            (*v, &var + &MultiPoly::constant(space, c.clone()))
        })
        .collect()
}

pub(crate) fn real_part(c: &GaussianRational) -> GaussianRational {
    GaussianRational::real(c.re().clone())
}

pub(crate) fn imag_part(c: &GaussianRational) -> GaussianRational {
    GaussianRational::real(c.im().clone())
}

pub(crate) fn rational(r: &BigRational) -> GaussianRational {
    GaussianRational::real(r.clone())
}

/// The space `{z, zb, t, w}` or `{z, t, w}` used while eliminating `w`.
pub(crate) fn with_w(space: VarSpace) -> VarSpace {
    space.with(Family::W)
}
