//! Canonical text form of polynomials.
//!
//! ```text
//! poly     := ['-'] term (('+'|'-') term)*
//! term     := coeff ('*' monomial)? | monomial
//! coeff    := rational | rational? 'i' | '(' rational ('+'|'-') rational 'i' ')'
//! rational := integer ('/' positive-integer)?
//! monomial := var ('^' positive-integer)? ('*' var ('^' positive-integer)?)*
//! var      := 'x'k | 'y'k | 'z'k | 'zb'k | 't' | 'w'
//! ```
//!
//! Rendering follows the canonical term order, so equal polynomials always
//! render to identical strings.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Family, GaussianRational, Monomial, MultiPoly, Var, VarSpace};
use crate::error::AlgebraError;

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let space = self.space();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.re().is_negative() || (c.re().is_zero() && c.im().is_negative());
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    f.write_str("*")?;
                }
                write_monomial(f, &space, m)?;
            }
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, space: &VarSpace, m: &Monomial) -> fmt::Result {
    // spatial variables first, then t, then w
    let order = (2..space.slots()).chain([1, 0]);
    let mut first = true;
    for slot in order {
        let e = m.exp(slot);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "{}", space.var_at(slot))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

type ParsedTerm = (GaussianRational, Vec<(Var, u32)>);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Syntax {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn small_integer(&mut self) -> Result<u32, AlgebraError> {
        let start = self.pos;
        let v = self.integer()?;
        u32::try_from(v).map_err(|_| AlgebraError::Syntax {
            column: start + 1,
            message: "integer too large".into(),
        })
    }

    fn rational(&mut self) -> Result<BigRational, AlgebraError> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let den = self.integer()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    /// A rational immediately followed by `i` is imaginary; `i` must not be
    /// separated from its rational by whitespace.
    fn trailing_i(&mut self) -> bool {
        if self.src.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn coeff(&mut self) -> Result<Option<GaussianRational>, AlgebraError> {
        match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                Ok(Some(GaussianRational::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                if self.trailing_i() {
                    Ok(Some(GaussianRational::new(BigRational::zero(), r)))
                } else {
                    Ok(Some(GaussianRational::real(r)))
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let neg_re = self.eat(b'-');
                let mut re = self.rational()?;
                if neg_re {
                    re = -re;
                }
                let neg_im = if self.eat(b'-') {
                    true
                } else if self.eat(b'+') {
                    false
                } else {
                    return self.err("expected '+' or '-' inside complex coefficient");
                };
                let im = match self.peek() {
                    Some(b'i') => {
                        self.pos += 1;
                        BigRational::one()
                    }
                    _ => {
                        let r = self.rational()?;
                        if !self.trailing_i() {
                            return self.err("expected 'i' after imaginary part");
                        }
                        r
                    }
                };
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(Some(GaussianRational::new(
                    re,
                    if neg_im { -im } else { im },
                )))
            }
            _ => Ok(None),
        }
    }

    fn var(&mut self) -> Result<Option<Var>, AlgebraError> {
        let start = self.pos;
        let family = match self.peek() {
            Some(b't') => {
                self.pos += 1;
                return Ok(Some(Var::T));
            }
            Some(b'w') => {
                self.pos += 1;
                return Ok(Some(Var::W));
            }
            Some(b'x') => Family::X,
            Some(b'y') => Family::Y,
            Some(b'z') => {
                if self.src.get(self.pos + 1) == Some(&b'b') {
                    self.pos += 1;
                    Family::ZBar
                } else {
                    Family::Z
                }
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos = start;
            return self.err("variable needs a 1-based index");
        }
        let k = self.small_integer()? as usize;
        if k == 0 {
            self.pos = start;
            return self.err("variable indices start at 1");
        }
        Ok(Some(Var::spatial(family, k)))
    }

    fn monomial(&mut self) -> Result<Vec<(Var, u32)>, AlgebraError> {
        let mut out = Vec::new();
        loop {
            let Some(v) = self.var()? else {
                return self.err("expected a variable");
            };
            let e = if self.eat(b'^') {
                let e = self.small_integer()?;
                if e == 0 {
                    return self.err("exponents must be positive");
                }
                e
            } else {
                1
            };
            out.push((v, e));
            if !self.eat(b'*') {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<ParsedTerm, AlgebraError> {
        if let Some(c) = self.coeff()? {
            if self.eat(b'*') {
                return Ok((c, self.monomial()?));
            }
            return Ok((c, Vec::new()));
        }
        Ok((GaussianRational::one(), self.monomial()?))
    }

    fn poly(&mut self) -> Result<Vec<ParsedTerm>, AlgebraError> {
        let mut terms = Vec::new();
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { -c } else { c }, m));
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err(format!(
                "unexpected character '{}'",
                self.src[self.pos] as char
            ));
        }
        Ok(terms)
    }
}

fn parse_terms(text: &str) -> Result<Vec<ParsedTerm>, AlgebraError> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    p.poly()
}

fn assemble(space: VarSpace, terms: Vec<ParsedTerm>) -> Result<MultiPoly, AlgebraError> {
    let mut out = MultiPoly::zero(space);
    for (c, powers) in terms {
        let mut m = Monomial::one(&space);
        for (v, e) in powers {
            if !space.contains(v) {
                return Err(AlgebraError::ForeignVariable { var: v, space });
            }
            m.0[space.slot(v)] += e;
        }
        out.add_term(m, c);
    }
    Ok(out)
}

impl MultiPoly {
    /// Parse, inferring the smallest space that holds every variable used
    /// (`n` is the largest spatial index, at least 1).
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let terms = parse_terms(text)?;
        let mut n = 1;
        let mut families = Vec::new();
        for (_, powers) in &terms {
            for (v, _) in powers {
                n = n.max(v.index());
                families.push(v.family());
            }
        }
        assemble(VarSpace::new(n, &families)?, terms)
    }

    /// Parse into a fixed space; variables outside it are rejected.
    pub fn parse_in(text: &str, space: VarSpace) -> Result<Self, AlgebraError> {
        assemble(space, parse_terms(text)?)
    }
}

/// Parse a single coefficient in the polynomial grammar, with an optional
/// leading minus (`-1/2`, `3i`, `(1 - 2i)`).
pub fn parse_gaussian(text: &str) -> Result<GaussianRational, AlgebraError> {
    let mut p = Parser::new(text);
    let neg = p.eat(b'-');
    let Some(c) = p.coeff()? else {
        return p.err("expected a coefficient");
    };
    if p.peek().is_some() {
        return p.err("trailing input after coefficient");
    }
    Ok(if neg { -c } else { c })
}
