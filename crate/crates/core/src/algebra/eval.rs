//! Floating-point evaluation of exact polynomials.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{MultiPoly, Var, VarSpace};
use crate::error::AlgebraError;

/// Evaluation point in ℂⁿ: one coordinate per `z` variable, or per `(x, y)`
/// pair when interpreted through `x = Re z`, `y = Im z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub coords: Vec<Complex64>,
}

impl ComplexPoint {
    /// `None` if any coordinate is NaN or infinite.
    pub fn new(coords: Vec<Complex64>) -> Option<Self> {
        coords
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
            .then_some(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Values for (some of) the variables of a space.
#[derive(Clone, Debug)]
pub struct Assignment {
    space: VarSpace,
    values: Vec<Option<Complex64>>,
}

impl Assignment {
    pub fn new(space: VarSpace) -> Self {
        Self {
            space,
            values: vec![None; space.slots()],
        }
    }

    pub fn set(&mut self, v: Var, value: Complex64) -> &mut Self {
        self.values[self.space.slot(v)] = Some(value);
        self
    }

    pub fn with(mut self, v: Var, value: Complex64) -> Self {
        self.set(v, value);
        self
    }

    /// Bind `z_k` to the point's coordinates.
    pub fn set_complex(&mut self, point: &ComplexPoint) -> &mut Self {
        for (k, c) in point.coords.iter().enumerate() {
            self.set(Var::Z(k + 1), *c);
        }
        self
    }

    /// Bind `x_k = Re z_k`, `y_k = Im z_k`.
    pub fn set_real_parts(&mut self, point: &ComplexPoint) -> &mut Self {
        for (k, c) in point.coords.iter().enumerate() {
            self.set(Var::X(k + 1), Complex64::new(c.re, 0.0));
            self.set(Var::Y(k + 1), Complex64::new(c.im, 0.0));
        }
        self
    }

    pub fn get(&self, v: Var) -> Option<Complex64> {
        self.values.get(self.space.slot(v)).copied().flatten()
    }
}

/// Value together with `Σ |coefficient|·|monomial|`, the scale used for
/// relative residuals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub magnitude: f64,
}

/// A polynomial with coefficients rounded to `f64`, for repeated
/// evaluation. Rounding happens once, here.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    space: VarSpace,
    used: Vec<(Var, u32)>,
    terms: Vec<(Complex64, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    pub fn new(p: &MultiPoly) -> Self {
        let space = p.space();
        let used = p
            .vars_used()
            .into_iter()
            .map(|v| (v, p.deg_in(v)))
            .collect::<Vec<_>>();
        let terms = p
            .terms()
            .map(|(m, c)| {
                let powers = used
                    .iter()
                    .enumerate()
                    .filter_map(|(idx, (v, _))| {
                        let e = m.exp(space.slot(*v));
                        (e > 0).then_some((idx, e))
                    })
                    .collect();
                (c.to_complex64(), powers)
            })
            .collect();
        Self { space, used, terms }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn eval(&self, at: &Assignment) -> Result<Evaluation, AlgebraError> {
        // powers[idx][e] for each used variable
        let mut powers: Vec<Vec<Complex64>> = Vec::with_capacity(self.used.len());
        for (v, deg) in &self.used {
            let x = at.get(*v).ok_or(AlgebraError::UnassignedVariable(*v))?;
            let mut table = Vec::with_capacity(*deg as usize + 1);
            table.push(Complex64::new(1.0, 0.0));
            for e in 1..=*deg as usize {
                let next = table[e - 1] * x;
                table.push(next);
            }
            powers.push(table);
        }
        let mut value = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for (c, mono) in &self.terms {
            let mut term = *c;
            for (idx, e) in mono {
                term *= powers[*idx][*e as usize];
            }
            value += term;
            magnitude += term.norm();
        }
        Ok(Evaluation { value, magnitude })
    }
}

impl MultiPoly {
    pub fn eval(&self, at: &Assignment) -> Result<Evaluation, AlgebraError> {
        CompiledPoly::new(self).eval(at)
    }
}
