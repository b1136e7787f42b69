//! Expression grammar for mixed polynomials and its canonical printer.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number | param | var | '(' expr ')' | factor '^' uint
//! var    := 'z' uint | '~z' uint          ('~' marks the conjugate)
//! number := integer | integer '/' integer | decimal
//! param  := identifier
//! ```
//!
//! The identifier `i` is reserved for the imaginary unit. Variables are
//! one-based (`z1`, `z2`). The printer emits the same grammar, so printing
//! and re-parsing is the identity on canonical forms.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::{fmt_abs_ratio, ExactComplex};
use crate::error::{Error, Result};
use crate::mixedpoly::MixedPolynomial;

pub type Bindings = BTreeMap<String, ExactComplex>;

/// Parses `text` with variables named `z1, z2, …`.
///
/// The ambient dimension is the largest variable index used, but at least 2.
pub fn parse(text: &str, bindings: &Bindings) -> Result<MixedPolynomial> {
    parse_with(text, bindings, 'z', None)
}

/// Like [`parse`] with a custom variable letter (`u` for chart coordinates)
/// and an optional fixed ambient dimension.
pub fn parse_with(
    text: &str,
    bindings: &Bindings,
    prefix: char,
    dim: Option<usize>,
) -> Result<MixedPolynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, prefix: prefix as u8 };
    let ast = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    let used = ast.max_var();
    let n = match dim {
        Some(d) if used > d => {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!("variable index {used} exceeds dimension {d}"),
            })
        }
        Some(d) => d,
        None => used.max(2),
    };
    ast.eval(n, bindings)
}

#[derive(Debug)]
enum Ast {
    Num(ExactComplex),
    Var { index: usize, conj: bool },
    Param(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    fn max_var(&self) -> usize {
        match self {
            Ast::Var { index, .. } => *index,
            Ast::Num(_) | Ast::Param(_) => 0,
            Ast::Neg(a) | Ast::Pow(a, _) => a.max_var(),
            Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn eval(&self, n: usize, bindings: &Bindings) -> Result<MixedPolynomial> {
        Ok(match self {
            Ast::Num(c) => MixedPolynomial::constant(n, c.clone()),
            Ast::Var { index, conj } => MixedPolynomial::variable(n, index - 1, *conj),
            Ast::Param(name) => match bindings.get(name) {
                Some(c) => MixedPolynomial::constant(n, c.clone()),
                None if name == "i" => MixedPolynomial::constant(n, ExactComplex::i()),
                None => return Err(Error::UnboundParameter(name.clone())),
            },
            Ast::Neg(a) => -a.eval(n, bindings)?,
            Ast::Add(a, b) => a.eval(n, bindings)? + b.eval(n, bindings)?,
            Ast::Sub(a, b) => a.eval(n, bindings)? - b.eval(n, bindings)?,
            Ast::Mul(a, b) => a.eval(n, bindings)? * b.eval(n, bindings)?,
            Ast::Pow(a, k) => a.eval(n, bindings)?.pow(*k),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    prefix: u8,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_owned() }
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

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent(self.pos));
            }
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            base = Ast::Pow(Box::new(base), k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'~') => {
                self.pos += 1;
                if self.src.get(self.pos) != Some(&self.prefix) {
                    return Err(self.err("expected a variable after `~`"));
                }
                self.pos += 1;
                let index = self.var_index()?;
                Ok(Ast::Var { index, conj: true })
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let ident = &self.src[start..self.pos];
                if ident[0] == self.prefix
                    && ident.len() > 1
                    && ident[1..].iter().all(u8::is_ascii_digit)
                {
                    self.pos = start + 1;
                    let index = self.var_index()?;
                    return Ok(Ast::Var { index, conj: false });
                }
                let name = core::str::from_utf8(ident).expect("ascii identifier").to_string();
                Ok(Ast::Param(name))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn var_index(&mut self) -> Result<usize> {
        let at = self.pos;
        let k = self.uint()?;
        if k == 0 {
            return Err(Error::Syntax { pos: at, msg: "variables are numbered from 1".into() });
        }
        usize::try_from(k).map_err(|_| self.err("variable index too large"))
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let d = self.digits();
        if d.is_empty() {
            return Err(self.err("expected an unsigned integer"));
        }
        let s = core::str::from_utf8(d).expect("ascii digits");
        s.parse::<u64>().map_err(|_| self.err("integer too large"))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let d = self.digits();
        if d.is_empty() {
            return Err(self.err("expected digits"));
        }
        let s = core::str::from_utf8(d).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digit string"))
    }

    fn number(&mut self) -> Result<Ast> {
        let int = self.bigint()?;
        let value = match self.src.get(self.pos) {
            Some(b'.') => {
                self.pos += 1;
                let d = self.digits();
                if d.is_empty() {
                    return Err(self.err("expected digits after `.`"));
                }
                let scale = BigInt::from(10u32).pow(d.len() as u32);
                let frac: BigInt = core::str::from_utf8(d).unwrap().parse().unwrap();
                BigRational::new(int * &scale + frac, scale)
            }
            _ => {
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.bigint()?;
                    if den.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    BigRational::new(int, den)
                } else {
                    self.pos = save;
                    BigRational::from_integer(int)
                }
            }
        };
        Ok(Ast::Num(ExactComplex::real(value)))
    }
}

/// Canonical printer; obtained from [`MixedPolynomial::display`].
pub struct Display<'a> {
    poly: &'a MixedPolynomial,
    prefix: char,
}

impl MixedPolynomial {
    /// Prints with variables `z1, z2, …`.
    pub fn display(&self) -> Display<'_> {
        Display { poly: self, prefix: 'z' }
    }

    /// Prints with a custom variable letter, e.g. `u` for chart coordinates.
    pub fn display_as(&self, prefix: char) -> Display<'_> {
        Display { poly: self, prefix }
    }
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display(), f)
    }
}

fn is_negative(c: &ExactComplex) -> bool {
    (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
}

fn fmt_magnitude(c: &ExactComplex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // c is real or purely imaginary here, with non-negative sign
    if c.im.is_zero() {
        fmt_abs_ratio(&c.re, f)
    } else if c.im.abs().is_one() {
        f.write_str("i")
    } else {
        fmt_abs_ratio(&c.im, f)?;
        f.write_str("*i")
    }
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, t) in terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for j in 0..t.exps.dim() {
                for (k, bar) in [(t.exps.nu[j], ""), (t.exps.mu[j], "~")] {
                    match k {
                        0 => {}
                        1 => factors.push(format!("{bar}{}{}", self.prefix, j + 1)),
                        _ => factors.push(format!("{bar}{}{}^{k}", self.prefix, j + 1)),
                    }
                }
            }
            let c = &t.coeff;
            let mixed = !c.re.is_zero() && !c.im.is_zero();
            let neg = !mixed && is_negative(c);
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = !mixed && c.im.is_zero() && c.re.abs().is_one();
            if mixed {
                write!(f, "{c}")?;
            } else if !(unit && !factors.is_empty()) {
                if neg {
                    fmt_magnitude(&-c, f)?;
                } else {
                    fmt_magnitude(c, f)?;
                }
            } else {
                f.write_str(&factors.join("*"))?;
                continue;
            }
            if !factors.is_empty() {
                f.write_str("*")?;
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn b() -> Bindings {
        Bindings::new()
    }

    #[test]
    fn parses_case_iv() {
        let f = parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", &b()).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(
            f.to_string(),
            "z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2"
        );
    }

    #[test]
    fn parses_zero() {
        let f = parse("0", &b()).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.n(), 2);
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn expands_with_bound_parameter() {
        let mut bind = b();
        bind.insert("k".into(), ExactComplex::from_int(3));
        let f = parse("(z2 - z1^2)*(z2 - 2*z1^2)*(z2 - k*z1^2)", &bind).unwrap();
        assert_eq!(f.to_string(), "z2^3 - 6*z1^2*z2^2 + 11*z1^4*z2 - 6*z1^6");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("z1 +", &b()), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("k*z1", &b()), Err(Error::UnboundParameter(k)) if k == "k"));
        assert!(matches!(parse("z1^-2", &b()), Err(Error::NegativeExponent(_))));
        assert!(matches!(parse("z0", &b()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0", &b()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(z1", &b()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn numbers() {
        let f = parse("2.5*z1 + 3/4*~z1 - 0.125", &b()).unwrap();
        assert_eq!(f.to_string(), "-1/8 + 5/2*z1 + 3/4*~z1");
        let g = parse("(1 - 2*i)*z1 - i*z2 + 2*i", &b()).unwrap();
        let again = parse(&g.to_string(), &b()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn chart_variables() {
        let f = parse_with("u2^2*~u2 - 6*u2*~u2 + 11*u2 - 6", &b(), 'u', Some(2)).unwrap();
        assert_eq!(f.display_as('u').to_string(), "u2^2*~u2 - 6*u2*~u2 + 11*u2 - 6");
        let g = parse_with(
            "1 - 6*u1*u2^2 + 11*u1*~u1*u2^2*~u2^2 - 6*u1^2*~u1*u2^4*~u2^2",
            &b(),
            'u',
            None,
        )
        .unwrap();
        assert_eq!(
            g.display_as('u').to_string(),
            "1 - 6*u1*u2^2 + 11*u1*~u1*u2^2*~u2^2 - 6*u1^2*~u1*u2^4*~u2^2"
        );
    }
}
