//! Sparse multivariate polynomials over ℚ(i).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Family, GaussianRational, Var, VarSpace};
use crate::error::AlgebraError;

/// Exponent vector in the shared slot layout of [`VarSpace`].
///
/// Ordering is a block order: `(deg_w, deg_t)` lexicographically, then graded
/// lexicographic on the spatial slots. Annihilators therefore render with
/// the highest power of `t` first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(space: &VarSpace) -> Self {
        Monomial(vec![0; space.slots()])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, slot: usize) -> u32 {
        self.0[slot]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn spatial_degree(&self) -> u32 {
        self.0[2..].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0[..2]
            .cmp(&other.0[..2])
            .then_with(|| self.spatial_degree().cmp(&other.spatial_degree()))
            .then_with(|| self.0[2..].cmp(&other.0[2..]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial bound to one [`VarSpace`]. Terms are stored without zero
/// coefficients, keyed by [`Monomial`] in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    space: VarSpace,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(space: VarSpace) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, GaussianRational::one())
    }

    pub fn constant(space: VarSpace, c: GaussianRational) -> Self {
        let mut p = Self::zero(space);
        p.add_term(Monomial::one(&space), c);
        p
    }

    pub fn var(space: VarSpace, v: Var) -> Result<Self, AlgebraError> {
        Self::monomial(space, &[(v, 1)], GaussianRational::one())
    }

    /// `c · Π v^e`.
    pub fn monomial(
        space: VarSpace,
        powers: &[(Var, u32)],
        c: GaussianRational,
    ) -> Result<Self, AlgebraError> {
        let mut m = Monomial::one(&space);
        for (v, e) in powers {
            if !space.contains(*v) {
                return Err(AlgebraError::ForeignVariable { var: *v, space });
            }
            m.0[space.slot(*v)] += e;
        }
        let mut p = Self::zero(space);
        p.add_term(m, c);
        Ok(p)
    }

    pub(crate) fn from_terms(
        space: VarSpace,
        terms: impl IntoIterator<Item = (Monomial, GaussianRational)>,
    ) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        debug_assert_eq!(m.0.len(), self.space.slots());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(GaussianRational::zero),
        )
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&GaussianRational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn deg_in(&self, v: Var) -> u32 {
        if !self.space.contains(v) {
            return 0;
        }
        let slot = self.space.slot(v);
        self.terms.keys().map(|m| m.0[slot]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.deg_in(v) > 0
    }

    pub fn uses_family(&self, family: Family) -> bool {
        let n = self.space.n();
        match family {
            Family::T => self.uses(Var::T),
            Family::W => self.uses(Var::W),
            f => (1..=n).any(|k| self.uses(Var::spatial(f, k))),
        }
    }

    /// Variables that occur with positive degree, in slot order.
    pub fn vars_used(&self) -> Vec<Var> {
        self.space
            .vars()
            .into_iter()
            .filter(|v| self.uses(*v))
            .collect()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    /// Rebind into a larger (or smaller) space of the same dimension. Fails if
    /// a used variable is missing from `target`.
    pub fn embed(&self, target: VarSpace) -> Result<Self, AlgebraError> {
        if target.n() != self.space.n() {
            return Err(AlgebraError::SpaceMismatch(self.space, target));
        }
        if let Some(v) = self.vars_used().into_iter().find(|v| !target.contains(*v)) {
            return Err(AlgebraError::ForeignVariable {
                var: v,
                space: target,
            });
        }
        Ok(Self {
            space: target,
            terms: self.terms.clone(),
        })
    }

    fn check_space(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.space != other.space {
            return Err(AlgebraError::SpaceMismatch(self.space, other.space));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_space(other)?;
        let mut out = Self::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        Self {
            space: self.space,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.space);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Self::from_terms(
            self.space,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Coefficients of `self` as a univariate polynomial in `v`; entry `k` is
    /// the coefficient of `v^k` (free of `v`, same space).
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.deg_in(v) as usize;
        let mut out = vec![Self::zero(self.space); deg + 1];
        if !self.space.contains(v) {
            out[0] = self.clone();
            return out;
        }
        let slot = self.space.slot(v);
        for (m, c) in &self.terms {
            let k = m.0[slot] as usize;
            let mut rest = m.clone();
            rest.0[slot] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(space: VarSpace, v: Var, coeffs: &[MultiPoly]) -> Self {
        let slot = space.slot(v);
        let mut out = Self::zero(space);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m = m.clone();
                m.0[slot] += k as u32;
                out.add_term(m, a.clone());
            }
        }
        out
    }

    /// Multiply by `v^k`.
    pub fn shift_in(&self, v: Var, k: u32) -> Self {
        let slot = self.space.slot(v);
        Self {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0[slot] += k;
                    (m, c.clone())
                })
                .collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    /// Panics on a space mismatch; use [`MultiPoly::checked_add`] at API
    /// boundaries.
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial space mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial space mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial space mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            space: self.space,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.space, self)
    }
}
