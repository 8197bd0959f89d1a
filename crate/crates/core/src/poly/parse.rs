//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ['/' INT] | VAR ['^' INT] | '(' expr ')'
//! ```
//!
//! `INT '/' INT` is a rational literal so that printed polynomials with
//! fractional coefficients parse back.

use super::{Monomial, PolyError, Polynomial, Ring};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Var(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Var(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(PolyError::Syntax {
                    pos: start,
                    expected: "a term".into(),
                    found: format!("character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.offset(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<String, PolyError> {
        match self.peek() {
            Tok::Int(_) => match self.bump() {
                Tok::Int(s) => Ok(s),
                _ => unreachable!(),
            },
            Tok::Minus => Err(PolyError::NegativeExponent { pos: self.offset() }),
            _ => Err(self.error("an integer")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let lit = if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.offset();
                    let d = match self.peek() {
                        Tok::Int(_) => self.integer()?,
                        _ => return Err(self.error("an integer")),
                    };
                    let r: Rational = format!("{n}/{d}").parse().map_err(|_| PolyError::Syntax {
                        pos,
                        expected: "a nonzero denominator".into(),
                        found: d.clone(),
                    })?;
                    r
                } else {
                    n.parse().expect("digits")
                };
                Ok(Polynomial::constant(self.ring, lit))
            }
            Tok::Var(name) => {
                let pos = self.offset();
                self.bump();
                let v = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| PolyError::UnknownVariableAt { name: name.clone(), pos })?;
                let mut exp: u32 = 1;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let pos = self.offset();
                    let s = self.integer()?;
                    exp = s
                        .parse::<u16>()
                        .map_err(|_| PolyError::Syntax {
                            pos,
                            expected: "an exponent below 65536".into(),
                            found: s.clone(),
                        })? as u32;
                }
                let mut exps = vec![0u16; self.ring.arity()];
                exps[v] = exp as u16;
                Ok(Polynomial::from_sorted(
                    self.ring,
                    vec![super::Term::new(Rational::one(), Monomial::from_exponents(&exps))],
                ))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("an integer, identifier or `(`")),
        }
    }
}

/// Parses `source` into a canonical polynomial of `ring`.
pub fn parse_poly(source: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let toks = lex(source)?;
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("`+`, `-`, `*` or end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r() -> Ring {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn basic_example() {
        let ring = Ring::grevlex(&["x", "y"]).unwrap();
        let f = parse_poly("x^2*y - 3*y + 1", &ring).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.degrees(), vec![3, 1, 0]);
        assert!(parse_poly("0", &ring).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        match parse_poly("x + w", &r()) {
            Err(PolyError::UnknownVariableAt { name, pos }) => {
                assert_eq!(name, "w");
                assert_eq!(pos, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_poly("x^-1", &r()),
            Err(PolyError::NegativeExponent { pos: 2 })
        ));
        match parse_poly("x + * y", &r()) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("(x + y", &r()), Err(PolyError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_poly("x y", &r()), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("x $ y", &r()), Err(PolyError::Syntax { pos: 2, .. })));
        assert!(parse_poly("1/0*x", &r()).is_err());
        // unary minus is only allowed at the head of an expression
        assert!(parse_poly("x * -y", &r()).is_err());
        assert!(parse_poly("x * (-y)", &r()).is_ok());
    }

    #[test]
    fn parse_trees_agree() {
        let a = parse_poly("(x + y)*(x - y)", &r()).unwrap();
        let b = parse_poly("x^2 - y^2", &r()).unwrap();
        let c = parse_poly("-(y*y) + x*x", &r()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.terms(), c.terms());
    }

    fn arb_expr() -> impl Strategy<Value = String> {
        let leaf = prop_oneof![
            (0u32..7).prop_map(|n| n.to_string()),
            prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(String::from),
            (prop_oneof![Just("x"), Just("y"), Just("z")], 0u32..4).prop_map(|(v, e)| format!("{v}^{e}")),
        ];
        leaf.prop_recursive(3, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
                inner.prop_map(|a| format!("(-({a}))")),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(src in arb_expr()) {
            let f = parse_poly(&src, &r()).unwrap();
            let printed = f.to_string();
            let g = parse_poly(&printed, &r()).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), printed);
        }
    }
}
