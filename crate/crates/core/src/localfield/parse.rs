//! Scalar literals: integers, `t`, `+ - * / ^` and parentheses.

use super::{LocalFieldError, LocalScalar, PrimeConfig};

pub fn scalar_parse(text: &str, cfg: PrimeConfig) -> Result<LocalScalar, LocalFieldError> {
    let tokens = tokenize(text, cfg)?;
    let mut parser = Parser { tokens, pos: 0, cfg };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    /// Integer literal, already reduced mod p; the raw digits are kept for exponents.
    Int {
        residue: u32,
        raw: Option<i64>,
    },
    T,
    Op(char),
    Open,
    Close,
}

fn tokenize(text: &str, cfg: PrimeConfig) -> Result<Vec<Token>, LocalFieldError> {
    let p = cfg.p() as u64;
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let mut residue = c.to_digit(10).unwrap() as u64 % p;
                let mut raw: Option<i64> = Some(c.to_digit(10).unwrap() as i64);
                while let Some(&(_, d)) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    residue = (residue * 10 + v as u64) % p;
                    raw = raw
                        .and_then(|r| r.checked_mul(10))
                        .and_then(|r| r.checked_add(v as i64));
                    chars.next();
                }
                out.push(Token::Int {
                    residue: residue as u32,
                    raw,
                });
            }
            't' => out.push(Token::T),
            '+' | '-' | '*' | '/' | '^' => out.push(Token::Op(c)),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            other => {
                return Err(LocalFieldError::Parse {
                    input: text.to_string(),
                    message: format!("unexpected character {other:?} at offset {i}"),
                })
            }
        }
    }
    if out.is_empty() {
        return Err(LocalFieldError::Parse {
            input: text.to_string(),
            message: "empty expression".into(),
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    cfg: PrimeConfig,
}

impl Parser {
    fn error(&self, message: &str) -> LocalFieldError {
        LocalFieldError::Parse {
            input: format!("{:?}", self.tokens),
            message: format!("{message} (token {})", self.pos),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LocalScalar, LocalFieldError> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LocalScalar, LocalFieldError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).ok_or(LocalFieldError::DivisionByZero)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LocalScalar, LocalFieldError> {
        if self.eat_op('-') {
            return Ok(-self.unary()?);
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<LocalScalar, LocalFieldError> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let negative = self.eat_op('-');
        let exp = match self.peek() {
            Some(Token::Int { raw: Some(r), .. }) => *r,
            _ => return Err(self.error("expected integer exponent")),
        };
        self.pos += 1;
        let exp = if negative { -exp } else { exp };
        if exp < 0 && base.is_zero() {
            return Err(LocalFieldError::DivisionByZero);
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<LocalScalar, LocalFieldError> {
        match self.peek().cloned() {
            Some(Token::Int { residue, .. }) => {
                self.pos += 1;
                Ok(LocalScalar::from_int(residue as i64, self.cfg))
            }
            Some(Token::T) => {
                self.pos += 1;
                Ok(LocalScalar::t(self.cfg))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected integer, 't' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::FpPoly;

    fn cfg(p: u32) -> PrimeConfig {
        PrimeConfig::new(p).unwrap()
    }

    #[test]
    fn already_reduced_fraction() {
        let x = scalar_parse("t^2/(1+t)", cfg(2)).unwrap();
        assert_eq!(x.numerator(), &FpPoly::from_coeffs(vec![0, 0, 1], 2));
        assert_eq!(x.denominator(), &FpPoly::from_coeffs(vec![1, 1], 2));
    }

    #[test]
    fn integers_reduce_mod_p() {
        assert!(scalar_parse("2/2", cfg(3)).unwrap().is_one());
        assert!(scalar_parse("10", cfg(5)).unwrap().is_zero());
        assert_eq!(scalar_parse("-1", cfg(3)).unwrap().as_constant(), Some(2));
    }

    #[test]
    fn common_factor_cancels() {
        // (t^2 - t)/t = t - 1 = t + 2 over F_3; checked against polynomial division
        let x = scalar_parse("(t^2-t)/t", cfg(3)).unwrap();
        let num = FpPoly::from_coeffs(vec![0, 2, 1], 3);
        let (q, r) = num.div_rem(&FpPoly::monomial(1, 1, 3));
        assert!(r.is_zero());
        assert_eq!(x.numerator(), &q);
        assert!(x.denominator().is_one());
        assert_eq!(x.numerator(), &FpPoly::from_coeffs(vec![2, 1], 3));
    }

    #[test]
    fn negative_exponents_and_whitespace() {
        let a = scalar_parse(" 1 + t ^ -2 ", cfg(5)).unwrap();
        let b = scalar_parse("(t^2+1)/t^2", cfg(5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            scalar_parse("1/(3)", cfg(3)),
            Err(LocalFieldError::DivisionByZero)
        ));
        assert!(matches!(
            scalar_parse("1/(t-t)", cfg(3)),
            Err(LocalFieldError::DivisionByZero)
        ));
        assert!(scalar_parse("", cfg(3)).is_err());
        assert!(scalar_parse("t+", cfg(3)).is_err());
        assert!(scalar_parse("(t", cfg(3)).is_err());
        assert!(scalar_parse("x", cfg(3)).is_err());
        assert!(scalar_parse("t^t", cfg(3)).is_err());
    }
}
