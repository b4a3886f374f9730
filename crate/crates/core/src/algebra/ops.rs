//! Structural operations: substitution, conjugation, realification, the
//! `z/zb ↔ x/y` isomorphism, normalization and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::gaussian_int_gcd;
use super::{Family, GaussianRational, MultiPoly, Var, VarSpace};
use crate::error::AlgebraError;

impl MultiPoly {
    /// Compose: every bound variable is replaced by its image, every unbound
    /// variable is carried over unchanged. Images must live in `target`.
    pub fn substitute(
        &self,
        bindings: &[(Var, MultiPoly)],
        target: VarSpace,
    ) -> Result<MultiPoly, AlgebraError> {
        let src = self.space();
        if src.n() != target.n() {
            return Err(AlgebraError::SpaceMismatch(src, target));
        }
        let mut images: Vec<Option<MultiPoly>> = vec![None; src.slots()];
        for (v, image) in bindings {
            if !src.contains(*v) {
                return Err(AlgebraError::ForeignVariable {
                    var: *v,
                    space: src,
                });
            }
            if image.space() != target {
                return Err(AlgebraError::SpaceMismatch(image.space(), target));
            }
            images[src.slot(*v)] = Some(image.clone());
        }
        for v in self.vars_used() {
            let slot = src.slot(v);
            if images[slot].is_none() {
                if !target.contains(v) {
                    return Err(AlgebraError::ForeignVariable {
                        var: v,
                        space: target,
                    });
                }
                images[slot] = Some(MultiPoly::var(target, v)?);
            }
        }

        // powers[slot][e] = image^e, filled up to the largest exponent used
        let mut powers: Vec<Vec<MultiPoly>> = vec![Vec::new(); src.slots()];
        for v in self.vars_used() {
            let slot = src.slot(v);
            let base = images[slot].as_ref().expect("image assigned above");
            let deg = self.deg_in(v) as usize;
            let mut table = Vec::with_capacity(deg + 1);
            table.push(MultiPoly::one(target));
            for e in 1..=deg {
                let next = &table[e - 1] * base;
                table.push(next);
            }
            powers[slot] = table;
        }

        let mut out = MultiPoly::zero(target);
        for (m, c) in self.terms() {
            let mut term = MultiPoly::constant(target, c.clone());
            for (slot, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[slot][e as usize];
                }
            }
            for (tm, tc) in term.terms() {
                out.add_term(tm.clone(), tc.clone());
            }
        }
        Ok(out)
    }

    /// The conjugated polynomial: every coefficient conjugated, exponents
    /// untouched.
    pub fn conjugate(&self) -> MultiPoly {
        self.map_coeffs(GaussianRational::conj)
    }

    /// Divide out the Gaussian-integer content and rotate by a unit so the
    /// leading coefficient has positive real part and non-negative imaginary
    /// part (real-positive whenever a unit can achieve it).
    pub fn content_normalize(&self) -> Result<MultiPoly, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial("content_normalize"));
        }
        let scale = self
            .terms()
            .map(|(_, c)| c.denominator_lcm())
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let mut content = (BigInt::zero(), BigInt::zero());
        for (_, c) in self.terms() {
            content = gaussian_int_gcd(content, c.to_gaussian_integer(&scale));
        }
        let divisor = GaussianRational::new(
            BigRational::new(content.0, scale.clone()),
            BigRational::new(content.1, scale),
        );
        let lead = self.leading_coefficient().expect("nonzero") / &divisor;
        let divisor = &divisor * &unit_towards_first_quadrant(&lead).inv().expect("unit");
        let inv = divisor.inv().expect("content of a nonzero polynomial");
        Ok(self.scale(&inv))
    }

    /// A nonzero polynomial with real coefficients vanishing wherever `self`
    /// does: `self / c` when that is real for some scalar `c`, otherwise
    /// `self · selfᶜ`. Content-normalized either way.
    pub fn realify(&self) -> Result<MultiPoly, AlgebraError> {
        let lead = self
            .leading_coefficient()
            .ok_or(AlgebraError::ZeroPolynomial("realify"))?;
        let unit_scaled = self.scale(&lead.inv().expect("nonzero leading coefficient"));
        if unit_scaled.is_real() {
            return unit_scaled.content_normalize();
        }
        (self * &self.conjugate()).content_normalize()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.space() != divisor.space() {
            return Err(AlgebraError::SpaceMismatch(self.space(), divisor.space()));
        }
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dc_inv = dc.inv().expect("nonzero coefficient");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.space());
        while let Some((rm, rc)) = rem.leading_term() {
            let Some(qm) = rm.div(dm) else {
                return Ok(None);
            };
            let qc = rc * &dc_inv;
            let step = MultiPoly::from_terms(self.space(), [(qm, qc)]);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(Some(quot))
    }
}

/// The unit `u ∈ {1, i, -1, -i}` with `Re(u·c) > 0` and `Im(u·c) ≥ 0`.
fn unit_towards_first_quadrant(c: &GaussianRational) -> GaussianRational {
    let (re, im) = (c.re(), c.im());
    if re.is_positive() && !im.is_negative() {
        GaussianRational::from_integers(1, 0)
    } else if im.is_positive() && !re.is_positive() {
        // -i·(a+bi) = b - ai
        GaussianRational::from_integers(0, -1)
    } else if re.is_negative() && !im.is_positive() {
        GaussianRational::from_integers(-1, 0)
    } else {
        GaussianRational::from_integers(0, 1)
    }
}

fn check_families(p: &MultiPoly, allowed: &[Family], target: VarSpace) -> Result<(), AlgebraError> {
    match p
        .vars_used()
        .into_iter()
        .find(|v| !allowed.contains(&v.family()))
    {
        Some(v) => Err(AlgebraError::ForeignVariable {
            var: v,
            space: target,
        }),
        None => Ok(()),
    }
}

/// The ring isomorphism `ℂ[z, zb, t] → ℂ[x, y, t]`,
/// `z_k ↦ x_k + i·y_k`, `zb_k ↦ x_k − i·y_k`.
pub fn phi(p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    let n = p.space().n();
    check_families(
        p,
        &[Family::Z, Family::ZBar, Family::T],
        VarSpace::conjugate_pair(n),
    )?;
    let target = VarSpace::real(n);
    let i = MultiPoly::constant(target, GaussianRational::i());
    let mut bindings = Vec::new();
    for k in 1..=n {
        let x = MultiPoly::var(target, Var::X(k))?;
        let iy = &i * &MultiPoly::var(target, Var::Y(k))?;
        if p.space().has(Family::Z) {
            bindings.push((Var::Z(k), &x + &iy));
        }
        if p.space().has(Family::ZBar) {
            bindings.push((Var::ZBar(k), &x - &iy));
        }
    }
    p.substitute(&bindings, target)
}

/// Inverse of [`phi`]: `x_k ↦ (z_k + zb_k)/2`, `y_k ↦ (z_k − zb_k)/(2i)`.
pub fn phi_inverse(p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    let n = p.space().n();
    check_families(p, &[Family::X, Family::Y, Family::T], VarSpace::real(n))?;
    let target = VarSpace::conjugate_pair(n);
    let half = GaussianRational::ratio(1, 2);
    let minus_half_i =
        GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
    let mut bindings = Vec::new();
    for k in 1..=n {
        let z = MultiPoly::var(target, Var::Z(k))?;
        let zb = MultiPoly::var(target, Var::ZBar(k))?;
        if p.space().has(Family::X) {
            bindings.push((Var::X(k), (&z + &zb).scale(&half)));
        }
        if p.space().has(Family::Y) {
            bindings.push((Var::Y(k), (&z - &zb).scale(&minus_half_i)));
        }
    }
    p.substitute(&bindings, target)
}
