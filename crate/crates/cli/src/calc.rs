//! A small calculator over elements.
//!
//! ```text
//! expr   := term ("*" term)*
//! term   := atom ("^" power)*
//! power  := "-"? integer | atom
//! atom   := name | cycles | rules | "(" expr ")"
//! name   := alpha | beta | zeta | delta | alpha_prime | delta_prime | id
//! cycles := "(" word* ")" ( "(" word* ")" )*
//! rules  := "{" word "->" word ("," word "->" word)* "}"
//! ```
//!
//! `x^k` is a power and `x^y` is the conjugate `y⁻¹xy`. A `(` opens a group
//! when the next non-blank character is a letter, `(` or `{`, and a cycle
//! otherwise. Products act left to right.

use num_bigint::BigInt;
use num_traits::Signed;

use thompson_core::perms::{alpha, alpha_prime, beta, delta, delta_prime, zeta};
use thompson_core::text::{format_cycles, format_word, parse_cycles, parse_word};
use thompson_core::{CycleDecomposition, Element, Signature};

use crate::format::normalized;

#[derive(thiserror::Error, Debug)]
pub enum CalcError {
    #[error("{message} at offset {offset}")]
    Syntax { message: String, offset: usize },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Core(#[from] thompson_core::Error),
}

pub type Result<T, E = CalcError> = std::result::Result<T, E>;

/// Evaluates an expression in the group with signature `sig`.
pub fn evaluate(sig: &Signature, input: &str) -> Result<Element> {
    let mut p = Parser { sig, src: input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Cycle notation when the element is a permutation, otherwise a rule
/// literal; either form is accepted back by [`evaluate`].
pub fn format_element(g: &Element) -> String {
    let sig = g.signature();
    if let Some(cycles) = g.cycles() {
        return format_cycles(&sig, &cycles);
    }
    let g = normalized(g);
    let rules: Vec<String> = g
        .rules()
        .iter()
        .map(|(d, r)| format!("{} -> {}", format_word(&sig, d), format_word(&sig, r)))
        .collect();
    // Words of arity above ten contain commas themselves.
    let sep = if sig.alphabet() > 10 { "; " } else { ", " };
    format!("{{{}}}", rules.join(sep))
}

/// The named generator `name` for `sig`.
pub fn named(sig: &Signature, name: &str) -> Result<Element> {
    let c: CycleDecomposition = match name {
        "id" => CycleDecomposition::identity(*sig),
        "alpha" => alpha(&sig.ambient())?,
        "beta" => beta(&sig.ambient())?,
        "zeta" => zeta(&sig.ambient())?,
        "delta" => delta(sig),
        "alpha_prime" => alpha_prime(higman_arity(sig)?)?,
        "delta_prime" => delta_prime(higman_arity(sig)?)?,
        _ => return Err(CalcError::UnknownName(name.to_string())),
    };
    Ok(c.to_element().with_signature(*sig)?)
}

fn higman_arity(sig: &Signature) -> Result<u32> {
    if sig.is_higman() {
        Ok(sig.arity())
    } else {
        Err(thompson_core::Error::NotHigman.into())
    }
}

struct Parser<'a> {
    sig: &'a Signature,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> CalcError {
        CalcError::Syntax { message: message.to_string(), offset: self.pos }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        while self.eat('*') {
            acc = acc.compose(&self.term()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.atom()?;
        while self.eat('^') {
            match self.peek() {
                Some(c) if c == '-' || c.is_ascii_digit() => {
                    let e = self.integer()?;
                    let g = if e.is_negative() { acc.invert() } else { acc };
                    let mag = e.magnitude();
                    acc = g.power(mag);
                }
                _ => {
                    let y = self.atom()?;
                    acc = acc.conjugate(&y)?;
                }
            }
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut end = start;
        for (i, c) in self.rest().char_indices() {
            if c.is_ascii_digit() || (i == 0 && c == '-') {
                end = start + i + 1;
            } else {
                break;
            }
        }
        let text = &self.src[start..end];
        let n = text.parse::<BigInt>().map_err(|_| self.error("expected an integer"))?;
        self.pos = end;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Element> {
        match self.peek() {
            Some('(') => {
                let after = self.rest()[1..].trim_start().chars().next();
                if matches!(after, Some(c) if (c.is_alphabetic() && c != 'ε') || c == '(' || c == '{') {
                    self.pos += 1;
                    let e = self.expr()?;
                    if !self.eat(')') {
                        return Err(self.error("expected ')'"));
                    }
                    Ok(e)
                } else {
                    self.cycles()
                }
            }
            Some('{') => self.rules(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self
                    .rest()
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.rest().len());
                self.pos += len;
                named(self.sig, &self.src[start..start + len])
            }
            _ => Err(self.error("expected an element")),
        }
    }

    fn cycles(&mut self) -> Result<Element> {
        let start = self.pos;
        while self.peek() == Some('(') {
            let close = self.rest().find(')').ok_or_else(|| self.error("unclosed cycle"))?;
            self.pos += close + 1;
        }
        let text = &self.src[start..self.pos];
        Ok(parse_cycles(self.sig, text)?.to_element())
    }

    fn rules(&mut self) -> Result<Element> {
        self.pos += 1;
        let close = self.rest().find('}').ok_or_else(|| self.error("unclosed rule list"))?;
        let body = &self.rest()[..close];
        let mut rules = Vec::new();
        let sep = if body.contains(';') { ';' } else { ',' };
        for item in split_top_level(body, sep) {
            if item.trim().is_empty() {
                continue;
            }
            let (d, r) = item.split_once("->").ok_or_else(|| self.error("expected 'd -> r'"))?;
            rules.push((parse_word(self.sig, d)?, parse_word(self.sig, r)?));
        }
        self.pos += close + 1;
        Ok(Element::new(*self.sig, rules)?)
    }
}

/// Splits on `sep` outside brackets, so Brin words like `[0,1]` survive.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2() -> Signature {
        Signature::higman(2).unwrap()
    }

    #[test]
    fn alpha_cubed_is_a_transposition() {
        let g = evaluate(&v2(), "alpha^3").unwrap();
        assert_eq!(format_element(&g), "(000 001)");
    }

    #[test]
    fn conjugation_and_inverse() {
        let sig = v2();
        let g = evaluate(&sig, "(00 01)^(01 1)").unwrap();
        assert!(g.equals(&evaluate(&sig, "(00 1)").unwrap()).unwrap());
        let h = evaluate(&sig, "alpha * alpha^-1").unwrap();
        assert!(h.is_identity());
        assert_eq!(format_element(&h), "()");
        let k = evaluate(&sig, "(beta * alpha)^2").unwrap();
        let want = evaluate(&sig, "beta*alpha*beta*alpha").unwrap();
        assert!(k.equals(&want).unwrap());
    }

    #[test]
    fn rule_literals_round_trip() {
        let sig = v2();
        let g = evaluate(&sig, "{00 -> 0, 01 -> 10, 1 -> 11}").unwrap();
        assert!(g.cycles().is_none());
        let text = format_element(&g);
        assert!(evaluate(&sig, &text).unwrap().equals(&g).unwrap());

        let b2 = Signature::brin(2).unwrap();
        let g = evaluate(&b2, "{[0,] -> [00,], [1,] -> [01,], [,] -> [,]}");
        assert!(g.is_err());
        let g = evaluate(&b2, "{[0,] -> [0,0], [1,0] -> [0,1], [1,1] -> [1,]}").unwrap();
        let text = format_element(&g);
        assert!(evaluate(&b2, &text).unwrap().equals(&g).unwrap());
    }

    #[test]
    fn syntax_errors_are_reported() {
        let sig = v2();
        assert!(matches!(evaluate(&sig, "alpha *"), Err(CalcError::Syntax { .. })));
        assert!(matches!(evaluate(&sig, "gamma"), Err(CalcError::UnknownName(_))));
        assert!(evaluate(&sig, "(00 0)").is_err());
        assert!(evaluate(&sig, "alpha beta").is_err());
    }
}
