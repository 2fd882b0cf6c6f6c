//! Parser for algebra expressions such as `Z^-2*Y^3*T1` or
//! `(T1+1)*(T1+a*b)`.
//!
//! Grammar:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? integer)?
//! atom    := integer | q | a | b | c | d | generator | '(' sum ')'
//! ```
//!
//! Division and negative powers are only allowed on scalars, except that
//! `Y^-n` and `Z^-n` stand for inverse powers.

use std::fmt;

use daha_core::ncalg::{Alphabet, Element, Letter};
use daha_core::params::ParamValues;
use daha_core::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}, found {}", self.position, self.expected.join(" | "), self.found)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push((i, Tok::Int(s.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_alphanumeric()) {
                s.push(d);
                chars.next();
            }
            out.push((i, Tok::Ident(s)));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Sym(ch)));
            chars.next();
        } else {
            return Err(ParseError {
                position: i,
                expected: vec!["operator".into(), "operand".into()],
                found: format!("`{ch}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn generators(alphabet: Alphabet) -> &'static [(&'static str, Letter)] {
    match alphabet {
        Alphabet::Daha => &[
            ("T1", Letter::T1),
            ("Y", Letter::Y),
            ("Yi", Letter::Yi),
            ("Z", Letter::Z),
            ("Zi", Letter::Zi),
        ],
        Alphabet::Aw => &[("K0", Letter::K0), ("K1", Letter::K1), ("T1", Letter::T1)],
    }
}

const PARAMS: [&str; 5] = ["q", "a", "b", "c", "d"];

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    alphabet: Alphabet,
    values: &'a ParamValues,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn operand_names(&self) -> Vec<&'static str> {
        let mut v = vec!["integer", "`(`", "`-`"];
        v.extend(PARAMS);
        v.extend(generators(self.alphabet).iter().map(|(n, _)| *n));
        v
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if *self.peek() == Tok::Sym('/') {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.unary()?;
                let inv = as_scalar(&rhs).and_then(|s| s.inv().ok()).ok_or_else(|| ParseError {
                    position: at,
                    expected: vec!["nonzero scalar divisor".into()],
                    found: "a divisor with generators or zero".into(),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Element, ParseError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        let (base, letter) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let Tok::Int(n) = self.peek().clone() else {
            return self.error(&["integer exponent"]);
        };
        let at = self.offset();
        self.pos += 1;
        let e: u32 = (&n).try_into().map_err(|_| ParseError {
            position: at,
            expected: vec!["exponent below 2^32".into()],
            found: n.to_string(),
        })?;
        if !negative {
            return Ok(base.pow(e));
        }
        let fail = |what: &str| ParseError {
            position: at,
            expected: vec!["nonnegative exponent".into()],
            found: format!("negative exponent on {what}"),
        };
        if let Some(x) = letter {
            let inv = x.inverse().ok_or_else(|| fail(x.name()))?;
            return Ok(Element::word(self.alphabet, &vec![inv; e as usize]).expect("letter in alphabet"));
        }
        let s = as_scalar(&base).ok_or_else(|| fail("a non-scalar"))?;
        let s = s.inv().map_err(|_| fail("zero"))?;
        Ok(Element::scalar(self.alphabet, s.pow(e as i32).expect("nonzero")))
    }

    fn atom(&mut self) -> Result<(Element, Option<Letter>), ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                let r = BigRational::from_integer(n);
                Ok((Element::scalar(self.alphabet, Scalar::rational(&r)), None))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return self.error(&["`)`", "`+`", "`-`", "`*`", "`/`"]);
                }
                Ok((e, None))
            }
            Tok::Ident(name) => {
                let v = self.values;
                let param = match name.as_str() {
                    "q" => Some(&v.q),
                    "a" => Some(&v.a),
                    "b" => Some(&v.b),
                    "c" => Some(&v.c),
                    "d" => Some(&v.d),
                    _ => None,
                };
                if let Some(p) = param {
                    self.pos += 1;
                    return Ok((Element::scalar(self.alphabet, p.clone()), None));
                }
                match generators(self.alphabet).iter().find(|(n, _)| *n == name) {
                    Some(&(_, x)) => {
                        self.pos += 1;
                        Ok((Element::word(self.alphabet, &[x]).expect("letter in alphabet"), Some(x)))
                    }
                    None => self.error(&self.operand_names()),
                }
            }
            _ => self.error(&self.operand_names()),
        }
    }
}

fn as_scalar(e: &Element) -> Option<Scalar> {
    if e.is_zero() {
        return Some(Scalar::zero());
    }
    match e.terms().iter().next() {
        Some((w, c)) if e.len() == 1 && w.is_empty() => Some(c.clone()),
        _ => None,
    }
}

/// Parses `text` with the parameters as indeterminates.
pub fn parse_expression(text: &str, alphabet: Alphabet) -> Result<Element, ParseError> {
    parse_expression_with(text, alphabet, &ParamValues::symbolic())
}

/// Parses `text`, reading the parameter names as the given values.
pub fn parse_expression_with(text: &str, alphabet: Alphabet, values: &ParamValues) -> Result<Element, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, alphabet, values };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return p.error(&["`+`", "`-`", "`*`", "`/`", "end of input"]);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use daha_core::Var;
    use Letter::*;

    fn sym(v: Var) -> Scalar {
        Scalar::var(v)
    }

    #[test]
    fn single_words() {
        assert_eq!(parse_expression("T1*Z", Alphabet::Daha).unwrap(), Element::daha(&[T1, Z]));
        assert_eq!(
            parse_expression("Z^-2*Y^3*T1", Alphabet::Daha).unwrap(),
            Element::daha(&[Zi, Zi, Y, Y, Y, T1])
        );
        assert_eq!(parse_expression("Yi^-1", Alphabet::Daha).unwrap(), Element::daha(&[Y]));
        assert_eq!(parse_expression("K0*K1^2", Alphabet::Aw).unwrap(), Element::aw(&[K0, K1, K1]));
    }

    #[test]
    fn products_distribute() {
        let e = parse_expression("(T1+1)*(T1+a*b)", Alphabet::Daha).unwrap();
        let ab = sym(Var::A).mul(&sym(Var::B));
        let mut expect = Element::daha(&[T1, T1]);
        expect.add_term(vec![T1], ab.add(&Scalar::one()));
        expect.add_term(vec![], ab);
        assert_eq!(e, expect);
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn scalar_arithmetic() {
        let e = parse_expression("(q - 1/q)^2 / 3 * Z - -2", Alphabet::Daha).unwrap();
        let q = sym(Var::Q);
        let c = q.sub(&q.inv().unwrap()).pow(2).unwrap().div(&Scalar::int(3)).unwrap();
        let mut expect = Element::scalar(Alphabet::Daha, Scalar::int(2));
        expect.add_term(vec![Z], c);
        assert_eq!(e, expect);
        assert_eq!(
            parse_expression("a^-2", Alphabet::Aw).unwrap(),
            Element::scalar(Alphabet::Aw, sym(Var::A).pow(-2).unwrap())
        );
    }

    #[test]
    fn specialized_values() {
        let v = ParamValues::at_point(&[2, 3, 5, 7, 11].map(|n| BigRational::from_integer(n.into())));
        let e = parse_expression_with("a*b*Z", Alphabet::Daha, &v).unwrap();
        assert_eq!(e, Element::term(Alphabet::Daha, &[Z], Scalar::int(15)).unwrap());
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse_expression("T1*K0", Alphabet::Daha).unwrap_err();
        assert_eq!(err.position, 3);
        assert!(err.expected.contains(&"Zi".to_string()));
        let err = parse_expression("T1^-1", Alphabet::Daha).unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_expression("(Y+1", Alphabet::Daha).unwrap_err();
        assert_eq!((err.position, err.found.as_str()), (4, "end of input"));
        assert!(err.expected.contains(&"`)`".to_string()));
        let err = parse_expression("Z/Y", Alphabet::Daha).unwrap_err();
        assert_eq!(err.position, 1);
        assert_eq!(parse_expression("Y Z", Alphabet::Daha).unwrap_err().position, 2);
        assert_eq!(parse_expression("Y % Z", Alphabet::Daha).unwrap_err().position, 2);
        assert!(parse_expression("1/0", Alphabet::Daha).is_err());
    }
}
