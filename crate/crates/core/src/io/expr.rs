//! Rational-function expressions: integers, declared variables, `t` for the
//! coefficient-field generator, `+ - * / ^` and parentheses.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::funcfield::{FuncField, RatFunc};

/// Guards against runaway polynomial growth.
pub const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(parse_error(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn parse_error(column: usize, message: String) -> Error {
    Error::Parse { line: 1, column, message }
}

struct Parser<'a> {
    ff: &'a FuncField,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    allow_t: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, c)| c)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = self.ff.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = self.ff.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = self.ff.mul(&acc, &self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.column();
                self.pos += 1;
                let d = self.unary()?;
                acc = self.ff.div(&acc, &d).map_err(|_| parse_error(col, "division by zero".into()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.ff.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.column();
            let e = self.exponent()?;
            if e > MAX_EXPONENT && base.as_constant().is_none() {
                return Err(parse_error(col, format!("exponent exceeds {MAX_EXPONENT}")));
            }
            return Ok(self.ff.pow(&base, e));
        }
        Ok(base)
    }

    /// Nonnegative integer exponent, itself possibly a right-nested power.
    fn exponent(&mut self) -> Result<u64> {
        let col = self.column();
        let base = match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                s.parse::<u64>().map_err(|_| parse_error(col, "exponent too large".into()))?
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.exponent()?;
                if !self.eat(')') {
                    return Err(parse_error(self.column(), "expected ')'".into()));
                }
                e
            }
            _ => return Err(parse_error(col, "expected a nonnegative integer exponent".into())),
        };
        if self.eat('^') {
            let e = self.exponent()?;
            let e = u32::try_from(e).map_err(|_| parse_error(col, "exponent too large".into()))?;
            return base.checked_pow(e).ok_or_else(|| parse_error(col, "exponent too large".into()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let p = self.ff.coeff_field().p();
                let r = s.bytes().fold(0u64, |acc, d| (acc * 10 + u64::from(d - b'0')) % p);
                Ok(self.ff.from_int(r as i64))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ff.var_names().iter().position(|v| *v == name) {
                    Ok(self.ff.var(i))
                } else if name == "t" && self.allow_t {
                    Ok(self.ff.constant(self.ff.coeff_field().generator()))
                } else {
                    Err(parse_error(col, format!("unknown identifier '{name}'")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_error(self.column(), "expected ')'".into()));
                }
                Ok(v)
            }
            Some(Tok::Op(c)) => Err(parse_error(col, format!("unexpected '{c}'"))),
            None => Err(parse_error(col, "unexpected end of expression".into())),
        }
    }
}

/// Parses one entry. Columns in errors count characters from 1.
pub fn parse_expr(src: &str, ff: &FuncField) -> Result<RatFunc> {
    let toks = lex(src)?;
    let allow_t = ff.coeff_field().degree() > 1;
    let mut parser = Parser { ff, toks, pos: 0, end: src.chars().count() + 1, allow_t };
    let v = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parse_error(parser.column(), "unexpected trailing input".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn f4x() -> FuncField {
        FuncField::new(Gf::with_degree(2, 2).unwrap(), vec!["X".into()]).unwrap()
    }

    #[test]
    fn polynomial_with_extension_coefficients() {
        let ff = f4x();
        let r = parse_expr("X^2 + t*X + 1", &ff).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(ff.format(&r), "X^2 + t*X + 1");
    }

    #[test]
    fn reciprocal_is_normalized() {
        let ff = FuncField::new(Gf::prime(2).unwrap(), vec!["X".into()]).unwrap();
        let r = parse_expr("1/(X*(X+1))", &ff).unwrap();
        assert_eq!(ff.format(&r), "1/(X^2 + X)");
    }

    #[test]
    fn precedence() {
        let ff = FuncField::new(Gf::prime(7).unwrap(), vec!["X".into(), "Y".into()]).unwrap();
        let a = parse_expr("-X^2", &ff).unwrap();
        let b = parse_expr("0 - (X*X)", &ff).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_expr("2^3^2", &ff).unwrap(), ff.from_int(512));
        assert_eq!(parse_expr("X - Y - X", &ff).unwrap(), ff.neg(&ff.var(1)));
        assert_eq!(parse_expr("X / Y * Y", &ff).unwrap(), ff.var(0));
        assert_eq!(parse_expr("15", &ff).unwrap(), ff.one());
    }

    #[test]
    fn errors_carry_columns() {
        let ff = FuncField::new(Gf::prime(3).unwrap(), vec!["X".into()]).unwrap();
        let col = |s: &str| match parse_expr(s, &ff) {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(col("X + t"), 5);
        assert_eq!(col("X ^ -1"), 5);
        assert_eq!(col("(X + 1"), 7);
        assert_eq!(col("1/(X-X)"), 2);
        assert_eq!(col("X $"), 3);
        assert_eq!(col("X X"), 3);
    }
}
