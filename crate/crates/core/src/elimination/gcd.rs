//! Recursive multivariate gcd by primitive polynomial remainder sequences.

use super::check_inputs;
use crate::algebra::{MultiPoly, Var};
use crate::error::EliminationError;

/// Multiply through by the leading coefficient of `b` until the degree in
/// `v` drops below `deg_v(b)`. Equals `lc(b)^k · a mod b` for some `k`; the
/// extra scalar factor is removed later by taking primitive parts.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.deg_in(v);
    let lb = b.coeffs_in(v).pop().expect("nonzero b");
    let mut r = a.clone();
    while !r.is_zero() && r.deg_in(v) >= db {
        let dr = r.deg_in(v);
        let lr = r.coeffs_in(v).pop().expect("nonzero r");
        r = &(&lb * &r) - &(&lr * &b.shift_in(v, dr - db));
    }
    r
}

/// gcd of the coefficients of `p` viewed as univariate in `v`,
/// content-normalized. `p` must be nonzero.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero(p.space());
    for c in p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()) {
        acc = poly_gcd(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

pub fn primitive_part_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content_in(p, v);
    p.divide_exact(&c)
        .expect("same space")
        .expect("content divides")
        .content_normalize()
        .expect("nonzero")
}

/// gcd of `p` and `q` over the fraction field of the variables other than
/// `v`, returned as a content-normalized polynomial primitive in `v`. Its
/// `v`-degree is positive exactly when the two share a factor involving `v`.
pub fn gcd_wrt(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, EliminationError> {
    check_inputs(p, q)?;
    if p.deg_in(v) == 0 || q.deg_in(v) == 0 {
        return Ok(MultiPoly::one(p.space()));
    }
    let (mut a, mut b) = (primitive_part_in(p, v), primitive_part_in(q, v));
    if a.deg_in(v) < b.deg_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return Ok(b);
        }
        if r.deg_in(v) == 0 {
            return Ok(MultiPoly::one(p.space()));
        }
        a = b;
        b = primitive_part_in(&r, v);
    }
}

/// Full multivariate gcd, content-normalized; `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return if q.is_zero() {
            q.clone()
        } else {
            q.content_normalize().expect("nonzero")
        };
    }
    if q.is_zero() {
        return p.content_normalize().expect("nonzero");
    }
    let Some(v) = p.vars_used().into_iter().chain(q.vars_used()).next() else {
        return MultiPoly::one(p.space());
    };
    let content = poly_gcd(&content_in(p, v), &content_in(q, v));
    let prim = gcd_wrt(p, q, v).expect("nonzero inputs in one space");
    (&content * &prim).content_normalize().expect("nonzero")
}
