//! Parser for scalar literals: integers, fractions, and rational expressions
//! in the single indeterminate `t` (function-field backend only).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | 't' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Backend, Scalar, ScalarError};

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    backend: Backend,
}

pub fn parse_scalar(input: &str, backend: Backend) -> Result<Scalar, ScalarError> {
    let mut parser = Parser {
        input,
        bytes: input.as_bytes(),
        pos: 0,
        backend,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error(format!("unexpected `{}`", &input[parser.pos..])));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("exponent must be a non-negative integer"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.input[start..self.pos]
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Scalar::indeterminate(self.backend)
                    .ok_or_else(|| self.error("`t` is only available in the ratfunc field"))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().to_string();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(self.integer(n))
            }
            Some(c) => Err(self.error(format!("unexpected character `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&self, n: BigInt) -> Scalar {
        match self.backend {
            Backend::Rational => Scalar::Rational(n.into()),
            Backend::RationalFunction { p } => {
                let r = n % BigInt::from(p);
                let r: i64 = r.try_into().expect("residue fits");
                Scalar::from_int(self.backend, r)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F3: Backend = Backend::RationalFunction { p: 3 };

    #[test]
    fn rationals() {
        assert_eq!(
            parse_scalar("2", Backend::Rational).unwrap().to_string(),
            "2"
        );
        assert_eq!(
            parse_scalar("6/4", Backend::Rational).unwrap().to_string(),
            "3/2"
        );
        assert_eq!(
            parse_scalar("-1/3", Backend::Rational).unwrap().to_string(),
            "-1/3"
        );
        assert!(parse_scalar("t", Backend::Rational).is_err());
        assert!(parse_scalar("1/0", Backend::Rational).is_err());
        assert!(parse_scalar("1/", Backend::Rational).is_err());
        assert!(parse_scalar("2x", Backend::Rational).is_err());
    }

    #[test]
    fn rational_functions() {
        assert_eq!(parse_scalar("(t+1)/t", F3).unwrap().to_string(), "(t+1)/t");
        assert_eq!(parse_scalar("4*t", F3).unwrap().to_string(), "t");
        assert_eq!(parse_scalar("t^2 - 1", F3).unwrap().to_string(), "t^2+2");
        assert_eq!(
            parse_scalar("(t^2+2)/(t+1)", F3).unwrap().to_string(),
            "t+2"
        );
        assert!(parse_scalar("1/3", F3).is_err());
        assert!(parse_scalar("s", F3).is_err());
    }
}
