//! Algebraic-function expressions: AST, parser and renderer.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! exponent:= '-'? integer | '(' '-'? integer ')'
//! atom    := integer | integer 'i' | 'i' | 'z'k | '(' expr ')'
//!          | 'sqrt' '(' expr ')' | 'root' '(' integer ',' expr ')' | 'conj' '(' expr ')'
//! ```
//!
//! Arithmetic on constants is folded while parsing, so `1/2` and `1 + 2i`
//! become single constant nodes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::GaussianRational;
use crate::error::LabError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(GaussianRational),
    /// `z_k`, 1-based.
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    /// Principal `k`-th root, `k ≥ 2`.
    Root(u32, Box<Expr>),
    Conj(Box<Expr>),
}

const TRANSCENDENTAL: &[&str] = &[
    "exp", "log", "ln", "sin", "cos", "tan", "sinh", "cosh", "tanh", "asin", "acos", "atan", "pow",
];

impl Expr {
    /// False iff the tree contains a `conj` node.
    pub fn is_holomorphic(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var(_) => true,
            Expr::Conj(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Root(_, a) => a.is_holomorphic(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.is_holomorphic() && b.is_holomorphic()
            }
        }
    }

    /// Largest variable index used (0 for constant expressions).
    pub fn dim(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(k) => *k,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Root(_, a) | Expr::Conj(a) => a.dim(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.dim().max(b.dim())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn fold_neg(a: Expr) -> Expr {
    match a {
        Expr::Const(c) => Expr::Const(-c),
        a => Expr::Neg(Box::new(a)),
    }
}

fn fold_binary(op: u8, a: Expr, b: Expr) -> Result<Expr, &'static str> {
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        return match op {
            b'+' => Ok(Expr::Const(x + y)),
            b'-' => Ok(Expr::Const(x - y)),
            b'*' => Ok(Expr::Const(x * y)),
            _ => match y.inv() {
                Some(inv) => Ok(Expr::Const(x * &inv)),
                None => Err("division by the constant zero"),
            },
        };
    }
    let (a, b) = (Box::new(a), Box::new(b));
    Ok(match op {
        b'+' => Expr::Add(a, b),
        b'-' => Expr::Sub(a, b),
        b'*' => Expr::Mul(a, b),
        _ => Expr::Div(a, b),
    })
}

fn fold_pow(a: Expr, k: i32) -> Result<Expr, &'static str> {
    if let Expr::Const(c) = &a {
        let p = c.pow(k.unsigned_abs());
        return if k >= 0 {
            Ok(Expr::Const(p))
        } else {
            p.inv()
                .map(Expr::Const)
                .ok_or("negative power of the constant zero")
        };
    }
    Ok(Expr::Pow(Box::new(a), k))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Imag(BigInt),
    Ident(String),
    Sym(u8),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, LabError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let (mut i, mut line, mut line_start) = (0, 1, 0);
    while i < bytes.len() {
        let c = bytes[i];
        let column = i - line_start + 1;
        if c == b'\n' {
            line += 1;
            line_start = i + 1;
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = text[start..i].parse().expect("digits");
            if bytes.get(i) == Some(&b'i')
                && !bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric())
            {
                i += 1;
                out.push(Token {
                    tok: Tok::Imag(v),
                    line,
                    column,
                });
            } else {
                out.push(Token {
                    tok: Tok::Int(v),
                    line,
                    column,
                });
            }
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(text[start..i].to_string()),
                line,
                column,
            });
        } else if b"+-*/^(),".contains(&c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line,
                column,
            });
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(LabError::Syntax {
                line,
                column,
                message: format!("unexpected character '{ch}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, LabError> {
        let (line, column) = self.here();
        Err(LabError::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), LabError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn fold<T>(&self, r: Result<T, &'static str>, at: (usize, usize)) -> Result<T, LabError> {
        r.map_err(|m| LabError::Syntax {
            line: at.0,
            column: at.1,
            message: m.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, LabError> {
        let mut lhs = self.term()?;
        loop {
            let at = self.here();
            let op = if self.eat(b'+') {
                b'+'
            } else if self.eat(b'-') {
                b'-'
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = self.fold(fold_binary(op, lhs, rhs), at)?;
        }
    }

    fn term(&mut self) -> Result<Expr, LabError> {
        let mut lhs = self.unary()?;
        loop {
            let at = self.here();
            let op = if self.eat(b'*') {
                b'*'
            } else if self.eat(b'/') {
                b'/'
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = self.fold(fold_binary(op, lhs, rhs), at)?;
        }
    }

    fn unary(&mut self) -> Result<Expr, LabError> {
        if self.eat(b'-') {
            return Ok(fold_neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, LabError> {
        let base = self.atom()?;
        let at = self.here();
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let k = self.small_int()?;
        if paren {
            self.expect(b')')?;
        }
        let k = i32::try_from(k).map_err(|_| LabError::Syntax {
            line: at.0,
            column: at.1,
            message: "exponent too large".into(),
        })?;
        self.fold(fold_pow(base, if neg { -k } else { k }), at)
    }

    fn small_int(&mut self) -> Result<u32, LabError> {
        match self.peek() {
            Some(Tok::Int(v)) => match u32::try_from(v) {
                Ok(k) => {
                    self.pos += 1;
                    Ok(k)
                }
                Err(_) => self.err("integer too large"),
            },
            _ => self.err("expected an integer"),
        }
    }

    fn call_arg(&mut self) -> Result<Expr, LabError> {
        let e = self.expr()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, LabError> {
        let Some(tok) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok.tok {
            Tok::Int(v) => Ok(Expr::Const(GaussianRational::real(
                BigRational::from_integer(v),
            ))),
            Tok::Imag(v) => Ok(Expr::Const(GaussianRational::new(
                BigRational::zero(),
                BigRational::from_integer(v),
            ))),
            Tok::Sym(b'(') => self.call_arg(),
            Tok::Sym(c) => {
                self.pos -= 1;
                self.err(format!("unexpected '{}'", c as char))
            }
            Tok::Ident(name) => self.ident(name, tok.line, tok.column),
        }
    }

    fn ident(&mut self, name: String, line: usize, column: usize) -> Result<Expr, LabError> {
        if name == "i" {
            return Ok(Expr::Const(GaussianRational::i()));
        }
        if let Some(idx) = name.strip_prefix('z') {
            if let Ok(k) = idx.parse::<usize>() {
                if k >= 1 && !idx.starts_with('0') {
                    return Ok(Expr::Var(k));
                }
            }
        }
        match name.as_str() {
            "sqrt" => {
                self.expect(b'(')?;
                Ok(Expr::Root(2, Box::new(self.call_arg()?)))
            }
            "conj" => {
                self.expect(b'(')?;
                Ok(Expr::Conj(Box::new(self.call_arg()?)))
            }
            "root" => {
                self.expect(b'(')?;
                let k = self.small_int()?;
                if k < 2 {
                    self.pos -= 1;
                    return self.err("root order must be at least 2");
                }
                self.expect(b',')?;
                Ok(Expr::Root(k, Box::new(self.call_arg()?)))
            }
            n if TRANSCENDENTAL.contains(&n) => Err(LabError::Syntax {
                line,
                column,
                message: format!("'{n}' is transcendental; only algebraic operations are allowed"),
            }),
            _ => Err(LabError::UnknownIdentifier { name, line, column }),
        }
    }
}

/// Parse an expression. Errors carry 1-based line and column.
pub fn parse_expr(text: &str) -> Result<Expr, LabError> {
    let toks = lex(text)?;
    let last_line = text.lines().count().max(1);
    let last_col = text.lines().last().map_or(0, str::len) + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end: (last_line, last_col),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

fn write_rational_im(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}i", r.numer())
    } else {
        write!(f, "{}i/{}", r.numer(), r.denom())
    }
}

fn write_const(f: &mut fmt::Formatter<'_>, c: &GaussianRational) -> fmt::Result {
    let (re, im) = (c.re(), c.im());
    if im.is_zero() {
        return if re.is_integer() && !re.is_negative() {
            write!(f, "{re}")
        } else {
            write!(f, "({re})")
        };
    }
    if re.is_zero() {
        if im.is_integer() && im.is_positive() {
            return write_rational_im(f, im);
        }
        f.write_str("(")?;
        if im.is_negative() {
            f.write_str("-")?;
        }
        write_rational_im(f, &im.abs())?;
        return f.write_str(")");
    }
    write!(f, "({re} {} ", if im.is_negative() { '-' } else { '+' })?;
    write_rational_im(f, &im.abs())?;
    f.write_str(")")
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
    if e.precedence() < min_prec {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Renders with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, b: &Expr, op: &str, prec: u8| {
            write_child(f, a, prec)?;
            write!(f, " {op} ")?;
            write_child(f, b, prec + 1)
        };
        match self {
            Expr::Const(c) => write_const(f, c),
            Expr::Var(k) => write!(f, "z{k}"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, 3)
            }
            Expr::Add(a, b) => binary(f, a, b, "+", 1),
            Expr::Sub(a, b) => binary(f, a, b, "-", 1),
            Expr::Mul(a, b) => binary(f, a, b, "*", 2),
            Expr::Div(a, b) => binary(f, a, b, "/", 2),
            Expr::Pow(a, k) => {
                write_child(f, a, 5)?;
                write!(f, "^{k}")
            }
            Expr::Root(2, a) => write!(f, "sqrt({a})"),
            Expr::Root(k, a) => write!(f, "root({k}, {a})"),
            Expr::Conj(a) => write!(f, "conj({a})"),
        }
    }
}
