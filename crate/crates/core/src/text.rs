//! Text forms of words, points and cycle notation.
//!
//! Higman words are digit strings (`0110`) when the arity is at most 10 and
//! comma-separated decimal digits (`10,3,0`) otherwise; `ε` or the empty
//! string is the root. Brin words are bracketed coordinate lists such as
//! `[01,1]` (quotes around coordinates are accepted). Cycles are written as in
//! `(000 001)(10 110 111)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perms::CycleDecomposition;
use crate::point::{PeriodicPoint, PeriodicSequence};
use crate::words::{Signature, Word};

fn parse_digits(sig: &Signature, s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    let s = s.strip_prefix('"').and_then(|t| t.strip_suffix('"')).unwrap_or(s);
    if s.is_empty() || s == "ε" {
        return Ok(Vec::new());
    }
    let alphabet = sig.alphabet();
    let bad = || Error::Parse(format!("invalid word {:?}", s));
    let digits: Vec<u32> = if alphabet > 10 || s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    if digits.iter().any(|&d| d >= alphabet) {
        return Err(bad());
    }
    Ok(digits.into_iter().map(|d| d as u8).collect())
}

fn format_digits(sig: &Signature, digits: &[u8]) -> String {
    if sig.alphabet() > 10 {
        digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    } else {
        digits.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

pub fn parse_word(sig: &Signature, s: &str) -> Result<Word> {
    let s = s.trim();
    if sig.is_higman() {
        return Ok(Word::from_digits(parse_digits(sig, s)?));
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..] around {:?}", s)))?;
    let coords: Vec<Vec<u8>> = inner
        .split(',')
        .map(|c| parse_digits(sig, c))
        .collect::<Result<_>>()?;
    let w = Word::from_coords(coords);
    sig.validate_word(&w)?;
    Ok(w)
}

/// Text of one coordinate of a word, without any brackets.
pub fn format_coord(sig: &Signature, digits: &[u8]) -> String {
    format_digits(sig, digits)
}

pub fn format_word(sig: &Signature, w: &Word) -> String {
    if sig.is_higman() {
        let s = format_digits(sig, w.coord(0));
        return if s.is_empty() { "ε".into() } else { s };
    }
    let parts: Vec<String> = w.coords().iter().map(|c| format_digits(sig, c)).collect();
    format!("[{}]", parts.join(","))
}

/// Parses `(w w …)(w w …)…`; the empty string or `()` is the identity.
pub fn parse_cycles(sig: &Signature, s: &str) -> Result<CycleDecomposition> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {:?}", rest)))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed cycle".into()))?;
        let cycle: Vec<Word> = split_words(&body[..close])
            .map(|t| parse_word(sig, t))
            .collect::<Result<_>>()?;
        if cycle.len() == 1 {
            return Err(Error::Parse("a cycle needs at least two words".into()));
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    CycleDecomposition::new(*sig, cycles)
}

/// Splits on whitespace that is not inside brackets.
fn split_words(s: &str) -> impl Iterator<Item = &str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out.into_iter()
}

pub fn format_cycles(sig: &Signature, cycles: &[Vec<Word>]) -> String {
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| {
            let words: Vec<String> = c.iter().map(|w| format_word(sig, w)).collect();
            format!("({})", words.join(" "))
        })
        .collect()
}

fn parse_sequence(sig: &Signature, s: &str) -> Result<PeriodicSequence> {
    let s = s.trim();
    let open = s
        .find('(')
        .ok_or_else(|| Error::Parse(format!("expected pre(period) in {:?}", s)))?;
    let period = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("unclosed period in {:?}", s)))?;
    PeriodicSequence::new(parse_digits(sig, &s[..open])?, parse_digits(sig, period)?)
}

/// Parses `110(10)` (Higman) or `[0(1), (01)]` (Brin).
pub fn parse_point(sig: &Signature, s: &str) -> Result<PeriodicPoint> {
    let s = s.trim();
    let coords = if sig.is_higman() {
        alloc::vec![parse_sequence(sig, s)?]
    } else {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] around {:?}", s)))?;
        inner.split(',').map(|c| parse_sequence(sig, c)).collect::<Result<_>>()?
    };
    let p = PeriodicPoint::new(coords);
    p.validate(sig)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trips() {
        let v2 = Signature::higman(2).unwrap();
        let w = parse_word(&v2, "0110").unwrap();
        assert_eq!(format_word(&v2, &w), "0110");
        let v12 = Signature::higman(12).unwrap();
        let w = parse_word(&v12, "10,3,0").unwrap();
        assert_eq!(w.coord(0), &[10, 3, 0]);
        assert_eq!(format_word(&v12, &w), "10,3,0");
        let b2 = Signature::brin(2).unwrap();
        let w = parse_word(&b2, "[\"01\",\"\"]").unwrap();
        assert_eq!(format_word(&b2, &w), "[01,]");
        assert_eq!(parse_word(&b2, "[01,]").unwrap(), w);
        assert!(parse_word(&v2, "012").is_err());
        assert!(parse_word(&b2, "[0]").is_err());
    }

    #[test]
    fn cycle_round_trips() {
        let v2 = Signature::higman(2).unwrap();
        let c = parse_cycles(&v2, "(000 001)(10 110 111)").unwrap();
        assert_eq!(format_cycles(&v2, c.cycles()), "(000 001)(10 110 111)");
        assert!(parse_cycles(&v2, "(0 01)").is_err());
        assert!(parse_cycles(&v2, "(0)").is_err());
        assert!(parse_cycles(&v2, "").unwrap().cycles().is_empty());
        let b2 = Signature::brin(2).unwrap();
        let c = parse_cycles(&b2, "([0,0] [1,1])").unwrap();
        assert_eq!(c.cycles()[0].len(), 2);
    }

    #[test]
    fn point_parsing() {
        let v2 = Signature::higman(2).unwrap();
        let p = parse_point(&v2, "110(10)").unwrap();
        assert_eq!(alloc::format!("{}", p), "1(10)");
    }
}
