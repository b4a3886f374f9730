//! Resultants and gcds with respect to a distinguished variable.
//!
//! Polynomials are viewed as univariate in `v` with coefficients in the
//! remaining variables. The resultant is the determinant of the Sylvester
//! matrix, computed by fraction-free (Bareiss) elimination so that every
//! intermediate division is exact in the polynomial ring.

mod gcd;

use std::fmt;

pub use gcd::{content_in, gcd_wrt, poly_gcd, primitive_part_in};

use crate::algebra::{MultiPoly, Var};
use crate::error::EliminationError;
use crate::exec::Execution;

/// Square matrix of polynomials free of `var`. Rows `0..deg_q` hold shifted
/// copies of `p`'s coefficients (leading first), rows `deg_q..` hold `q`'s.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix {
    pub var: Var,
    pub deg_p: usize,
    pub deg_q: usize,
    pub entries: Vec<Vec<MultiPoly>>,
}

impl SylvesterMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self, exec: Execution) -> MultiPoly {
        let space = self.entries[0][0].space();
        bareiss_determinant(self.entries.clone(), space, exec)
    }
}

impl fmt::Display for SylvesterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn check_inputs(p: &MultiPoly, q: &MultiPoly) -> Result<(), EliminationError> {
    if p.is_zero() || q.is_zero() {
        return Err(EliminationError::ZeroInput);
    }
    if p.space() != q.space() {
        return Err(crate::AlgebraError::SpaceMismatch(p.space(), q.space()).into());
    }
    Ok(())
}

/// Degrees are true degrees: `coeffs_in` never returns a zero leading entry.
pub fn sylvester(
    p: &MultiPoly,
    q: &MultiPoly,
    v: Var,
) -> Result<SylvesterMatrix, EliminationError> {
    check_inputs(p, q)?;
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    if m == 0 && n == 0 {
        return Err(EliminationError::NoMatrix(v));
    }
    let size = m + n;
    let zero = MultiPoly::zero(p.space());
    let mut entries = vec![vec![zero; size]; size];
    for i in 0..n {
        for (j, c) in pc.iter().rev().enumerate() {
            entries[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in qc.iter().rev().enumerate() {
            entries[n + i][i + j] = c.clone();
        }
    }
    Ok(SylvesterMatrix {
        var: v,
        deg_p: m,
        deg_q: n,
        entries,
    })
}

/// Fraction-free Gaussian elimination; row swaps flip the sign.
fn bareiss_determinant(
    mut m: Vec<Vec<MultiPoly>>,
    space: crate::algebra::VarSpace,
    exec: Execution,
) -> MultiPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = MultiPoly::one(space);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero(space);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        let pivot_row = &m[k];
        let pivot = &pivot_row[k];
        let below = &m[k + 1..];
        let updated: Vec<Vec<MultiPoly>> = exec.map(below, |row| {
            let mut out = Vec::with_capacity(n);
            out.extend(row[..=k].iter().map(|_| MultiPoly::zero(space)));
            for j in k + 1..n {
                let num = &(&row[j] * pivot) - &(&row[k] * &pivot_row[j]);
                let q = num
                    .divide_exact(&prev)
                    .expect("same space")
                    .expect("Bareiss division is exact over an integral domain");
                out.push(q);
            }
            out
        });
        prev = m[k][k].clone();
        for (offset, row) in updated.into_iter().enumerate() {
            m[k + 1 + offset] = row;
        }
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// A nonzero resultant together with how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct EliminationResult {
    pub resultant: MultiPoly,
    /// The plain Sylvester determinant vanished and `p` was reduced by
    /// `gcd_wrt(p, q, v)` before a nonzero resultant was found.
    pub reduced: bool,
    pub steps: Vec<String>,
}

pub fn resultant_wrt(
    p: &MultiPoly,
    q: &MultiPoly,
    v: Var,
) -> Result<EliminationResult, EliminationError> {
    resultant_wrt_with(p, q, v, Execution::default())
}

/// Conventions for degenerate degrees: if `p` is free of `v` the resultant
/// is `p^deg_v(q)` (and symmetrically); if both are, it is `1`.
pub fn resultant_wrt_with(
    p: &MultiPoly,
    q: &MultiPoly,
    v: Var,
    exec: Execution,
) -> Result<EliminationResult, EliminationError> {
    check_inputs(p, q)?;
    let mut steps = Vec::new();
    if p.deg_in(v) == 0 && q.deg_in(v) == 0 {
        steps.push(format!("both inputs are free of {v}; resultant := 1"));
        return Ok(EliminationResult {
            resultant: MultiPoly::one(p.space()),
            reduced: false,
            steps,
        });
    }
    let mut p_cur = p.clone();
    let mut det = sylvester(&p_cur, q, v)?.determinant(exec);
    let mut reduced = false;
    while det.is_zero() {
        let g = gcd_wrt(&p_cur, q, v)?;
        if g.deg_in(v) == 0 {
            return Err(EliminationError::SurvivingCommonFactor(v));
        }
        p_cur = p_cur
            .divide_exact(&g)?
            .ok_or(EliminationError::SurvivingCommonFactor(v))?;
        steps.push(format!(
            "Sylvester determinant vanished; common factor {g} removed from first argument"
        ));
        reduced = true;
        det = if p_cur.deg_in(v) == 0 && q.deg_in(v) == 0 {
            MultiPoly::one(p.space())
        } else {
            sylvester(&p_cur, q, v)?.determinant(exec)
        };
    }
    steps.push(format!(
        "resultant in {v} of degree-{} and degree-{} polynomials: {det}",
        p_cur.deg_in(v),
        q.deg_in(v)
    ));
    Ok(EliminationResult {
        resultant: det,
        reduced,
        steps,
    })
}
