//! Rewriting transpositions and 3-cycles as products of conjugates of a
//! restricted generating family, and splitting double transpositions.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::perms::CycleDecomposition;
use crate::words::{self, Signature, Word};

/// An expression over generators indexed by words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(Word),
    Inverse(Box<Expr>),
    Product(Vec<Expr>),
    /// `base^{c_1 c_2 …}`.
    Conjugate(Box<Expr>, Vec<Expr>),
}

impl Expr {
    fn conj(base: Expr, by: Vec<Expr>) -> Expr {
        Expr::Conjugate(Box::new(base), by)
    }

    /// Evaluates the expression, mapping `Gen(z)` through `gen`.
    pub fn evaluate<F>(&self, sig: &Signature, gen: &F) -> Result<Element>
    where
        F: Fn(&Word) -> Result<Element>,
    {
        match self {
            Expr::Gen(z) => gen(z),
            Expr::Inverse(e) => Ok(e.evaluate(sig, gen)?.invert()),
            Expr::Product(factors) => {
                let mut acc = Element::identity(*sig);
                for f in factors {
                    acc = acc.compose(&f.evaluate(sig, gen)?)?;
                }
                Ok(acc)
            }
            Expr::Conjugate(base, by) => {
                let mut acc = base.evaluate(sig, gen)?;
                for c in by {
                    acc = acc.conjugate(&c.evaluate(sig, gen)?)?;
                }
                Ok(acc)
            }
        }
    }

    /// Generator words in order of appearance.
    pub fn generators(&self) -> Vec<&Word> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a Word>) {
        match self {
            Expr::Gen(z) => out.push(z),
            Expr::Inverse(e) => e.collect(out),
            Expr::Product(fs) => fs.iter().for_each(|f| f.collect(out)),
            Expr::Conjugate(b, by) => {
                b.collect(out);
                by.iter().for_each(|f| f.collect(out));
            }
        }
    }
}

/// The element `(u0 z)`.
pub fn transposition_generator(sig: &Signature, u0: &Word, z: &Word) -> Result<Element> {
    Ok(CycleDecomposition::new(*sig, vec![vec![u0.clone(), z.clone()]])?.to_element())
}

/// The element `(u0 u1 z)`.
pub fn three_cycle_generator(sig: &Signature, u0: &Word, u1: &Word, z: &Word) -> Result<Element> {
    Ok(CycleDecomposition::new(*sig, vec![vec![u0.clone(), u1.clone(), z.clone()]])?.to_element())
}

/// Depth-`k` prefix of `w` and the remaining suffix.
fn split_at(w: &Word, k: usize) -> (Word, Word) {
    let head = w.truncate(k);
    let tail = w.strip_prefix(&head).expect("truncation is a prefix");
    (head, tail)
}

/// Least word of uniform depth `k` outside `avoid`.
fn least_outside(sig: &Signature, k: usize, avoid: &[&Word]) -> Result<Word> {
    let size = sig
        .level_size(k as u32)
        .ok_or(Error::Precondition("level too large"))?;
    (0..size)
        .map(|i| words::nary_expansion(sig, i, k as u32).expect("index in range"))
        .find(|x| !avoid.contains(&x))
        .ok_or(Error::Precondition("no spare word at this depth"))
}

fn check_generator_word(sig: &Signature, k: usize, w: &Word) -> Result<()> {
    sig.validate_word(w)?;
    if w.depth() < k {
        return Err(Error::Precondition("word shorter than the generator depth"));
    }
    Ok(())
}

/// `(v w)` as an expression over the generators `(u0 z)` with `u0 ⊥ z` and
/// `|z| ≥ |u0|`.
///
/// If neither `v` nor `w` starts with `u0`, `(v w) = (u0 v)^{(u0 w)}`.
/// Otherwise every word starting with `u0` has that prefix replaced by `x`,
/// the least depth-`k` word other than `u0` and the prefixes of `v`, `w`,
/// and the result is conjugated by `(u0 x)`, which maps `x` back to `u0`.
pub fn express_transposition(sig: &Signature, u0: &Word, v: &Word, w: &Word) -> Result<Expr> {
    let k = u0.depth();
    if k < 2 || !u0.is_uniform_depth(k) {
        return Err(Error::Precondition("u0 must have uniform depth at least 2"));
    }
    check_generator_word(sig, k, v)?;
    check_generator_word(sig, k, w)?;
    if !v.incomparable(w) {
        return Err(Error::NotAntichain);
    }
    let (v1, v2) = split_at(v, k);
    let (w1, w2) = split_at(w, k);
    if v1 != *u0 && w1 != *u0 {
        return Ok(Expr::conj(Expr::Gen(v.clone()), vec![Expr::Gen(w.clone())]));
    }
    let x = least_outside(sig, k, &[u0, &v1, &w1])?;
    let lift = |head: &Word, tail: &Word, orig: &Word| {
        if head == u0 {
            x.concat(tail)
        } else {
            orig.clone()
        }
    };
    let v_ = lift(&v1, &v2, v);
    let w_ = lift(&w1, &w2, w);
    Ok(Expr::conj(
        Expr::Gen(v_),
        vec![Expr::Gen(w_), Expr::Gen(x)],
    ))
}

/// `(v w z)` as an expression over the generators `(u0 u1 t)` with `t`
/// incomparable with `u0`, `u1` and `|t| ≥ k`.
///
/// With no prefix in `{u0, u1}`, `(v w z) = (u0 u1 z)^{(u0 u1 w)(u0 u1 v)}`.
/// Otherwise the cycle is rotated and the roles of `u0`, `u1` possibly
/// exchanged (`(u1 u0 t) = (u0 u1 t)⁻¹`) so that the first word starts with
/// the first role, and the second word starts with the second role when
/// both occur. Prefixes equal to the first (second) role are replaced by
/// `x` (`y`), the least spare depth-`k` words, and the cycle with no
/// matching prefix is conjugated back by `(a b x)` (and `(a b y)` before it).
pub fn express_three_cycle(
    sig: &Signature,
    u0: &Word,
    u1: &Word,
    v: &Word,
    w: &Word,
    z: &Word,
) -> Result<Expr> {
    if !sig.is_higman() || sig.alphabet() % 2 == 0 {
        return Err(Error::Precondition("three-cycle rewriting needs an odd Higman arity"));
    }
    let k = u0.depth();
    if k < 2 || !u0.is_uniform_depth(k) || !u1.is_uniform_depth(k) || u0 == u1 {
        return Err(Error::Precondition("u0, u1 must be distinct words of one depth at least 2"));
    }
    for t in [v, w, z] {
        check_generator_word(sig, k, t)?;
    }
    if !words::is_antichain(sig, &[v.clone(), w.clone(), z.clone()]) {
        return Err(Error::NotAntichain);
    }
    let cycle = [v.clone(), w.clone(), z.clone()];
    let heads: Vec<Word> = cycle.iter().map(|t| t.truncate(k)).collect();
    let has0 = heads.contains(u0);
    let has1 = heads.contains(u1);

    // Generator (a b t) for roles (a, b).
    let gen = |swap: bool, t: Word| {
        if swap {
            Expr::Inverse(Box::new(Expr::Gen(t)))
        } else {
            Expr::Gen(t)
        }
    };
    let base = |swap: bool, p: &Word, q: &Word, r: &Word| {
        Expr::conj(gen(swap, r.clone()), vec![gen(swap, q.clone()), gen(swap, p.clone())])
    };

    if !has0 && !has1 {
        return Ok(base(false, v, w, z));
    }
    // Pick rotation and roles.
    let mut choice = None;
    'search: for rot in 0..3 {
        for swap in [false, true] {
            let (a, b) = if swap { (u1, u0) } else { (u0, u1) };
            let h = |i: usize| &heads[(rot + i) % 3];
            let ok = if has0 && has1 {
                h(0) == a && h(1) == b
            } else {
                h(0) == a
            };
            if ok {
                choice = Some((rot, swap));
                break 'search;
            }
        }
    }
    let (rot, swap) = choice.expect("some rotation matches");
    let (a, b) = if swap { (u1, u0) } else { (u0, u1) };
    let avoid: Vec<&Word> = [u0, u1].into_iter().chain(heads.iter()).collect();
    let x = least_outside(sig, k, &avoid)?;
    let mut avoid_y = avoid.clone();
    avoid_y.push(&x);
    let y = if has0 && has1 { Some(least_outside(sig, k, &avoid_y)?) } else { None };
    let lifted: Vec<Word> = (0..3)
        .map(|i| {
            let t = &cycle[(rot + i) % 3];
            let (head, tail) = split_at(t, k);
            if head == *a {
                x.concat(&tail)
            } else if head == *b {
                y.as_ref().expect("second role occurs").concat(&tail)
            } else {
                t.clone()
            }
        })
        .collect();
    let mut by = vec![gen(swap, lifted[1].clone()), gen(swap, lifted[0].clone())];
    if let Some(y) = y {
        by.push(gen(swap, y));
    }
    by.push(gen(swap, x));
    Ok(Expr::conj(gen(swap, lifted[2].clone()), by))
}

/// A product of two disjoint transpositions `(a b)(c d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTransposition {
    pub first: (Word, Word),
    pub second: (Word, Word),
}

impl DoubleTransposition {
    pub fn to_element(&self, sig: &Signature) -> Result<Element> {
        Ok(CycleDecomposition::new(
            *sig,
            vec![
                vec![self.first.0.clone(), self.first.1.clone()],
                vec![self.second.0.clone(), self.second.1.clone()],
            ],
        )?
        .to_element())
    }
}

const MAX_SPLIT_DEPTH: u32 = 8;

/// Writes `(u1 v1)(u2 v2)` as a product of `n^k` double transpositions with
/// pairwise incomparable supports.
///
/// `k` is the least depth for which suffixes `x1`, `x2` exist making `u1x1`,
/// `v1x1`, `u2x2`, `v2x2` pairwise incomparable (lexicographically least
/// pair). The product is
/// `∏_{x≠x1}(u1x v1x) · (u1x1 v1x1)(u2x2 v2x2) · ∏_{x≠x2}(u2x v2x)`
/// with the outer products paired off consecutively.
pub fn double_transposition_split(
    sig: &Signature,
    u1: &Word,
    v1: &Word,
    u2: &Word,
    v2: &Word,
) -> Result<Vec<DoubleTransposition>> {
    if !sig.is_higman() || sig.alphabet() % 2 == 0 {
        return Err(Error::Precondition("double transposition split needs an odd Higman arity"));
    }
    for t in [u1, v1, u2, v2] {
        sig.validate_word(t)?;
    }
    if !u1.incomparable(v1) || !u2.incomparable(v2) {
        return Err(Error::NotAntichain);
    }
    for k in 0..=MAX_SPLIT_DEPTH {
        let level = words::level(sig, k)?;
        for x1 in &level {
            for x2 in &level {
                let four = [u1.concat(x1), v1.concat(x1), u2.concat(x2), v2.concat(x2)];
                if !words::is_antichain(sig, &four) {
                    continue;
                }
                let mut out = Vec::with_capacity(level.len());
                let pair_up = |u: &Word, v: &Word, skip: &Word, out: &mut Vec<DoubleTransposition>| {
                    let rest: Vec<&Word> = level.iter().filter(|x| *x != skip).collect();
                    for pair in rest.chunks(2) {
                        out.push(DoubleTransposition {
                            first: (u.concat(pair[0]), v.concat(pair[0])),
                            second: (u.concat(pair[1]), v.concat(pair[1])),
                        });
                    }
                };
                pair_up(u1, v1, x1, &mut out);
                let [a, b, c, d] = four;
                out.push(DoubleTransposition { first: (a, b), second: (c, d) });
                pair_up(u2, v2, x2, &mut out);
                return Ok(out);
            }
        }
    }
    Err(Error::Precondition("no separating suffixes within the depth limit"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_cycles, parse_word};

    fn w(sig: &Signature, s: &str) -> Word {
        parse_word(sig, s).unwrap()
    }

    fn target(sig: &Signature, cycles: &str) -> Element {
        parse_cycles(sig, cycles).unwrap().to_element()
    }

    fn eval_transposition(sig: &Signature, u0: &Word, e: &Expr) -> Element {
        e.evaluate(sig, &|z: &Word| transposition_generator(sig, u0, z)).unwrap()
    }

    #[test]
    fn transposition_cases() {
        let v2 = Signature::higman(2).unwrap();
        let u0 = w(&v2, "00");
        let e = express_transposition(&v2, &u0, &w(&v2, "100"), &w(&v2, "110")).unwrap();
        assert_eq!(e, Expr::conj(Expr::Gen(w(&v2, "100")), vec![Expr::Gen(w(&v2, "110"))]));
        assert!(eval_transposition(&v2, &u0, &e).equals(&target(&v2, "(100 110)")).unwrap());

        let e = express_transposition(&v2, &u0, &w(&v2, "000"), &w(&v2, "001")).unwrap();
        assert_eq!(e.generators().last().copied(), Some(&w(&v2, "01")));
        assert!(eval_transposition(&v2, &u0, &e).equals(&target(&v2, "(000 001)")).unwrap());

        let e = express_transposition(&v2, &u0, &w(&v2, "000"), &w(&v2, "100")).unwrap();
        assert_eq!(e.generators().last().copied(), Some(&w(&v2, "01")));
        assert!(eval_transposition(&v2, &u0, &e).equals(&target(&v2, "(000 100)")).unwrap());

        let e = express_transposition(&v2, &u0, &w(&v2, "010"), &w(&v2, "001")).unwrap();
        assert_eq!(e.generators().last().copied(), Some(&w(&v2, "10")));
        assert!(eval_transposition(&v2, &u0, &e).equals(&target(&v2, "(010 001)")).unwrap());
    }

    #[test]
    fn transposition_preconditions() {
        let v2 = Signature::higman(2).unwrap();
        assert!(express_transposition(&v2, &w(&v2, "0"), &w(&v2, "10"), &w(&v2, "11")).is_err());
        assert!(express_transposition(&v2, &w(&v2, "00"), &w(&v2, "1"), &w(&v2, "01")).is_err());
        assert!(express_transposition(&v2, &w(&v2, "00"), &w(&v2, "10"), &w(&v2, "100")).is_err());
    }

    #[test]
    fn three_cycle_cases() {
        let v3 = Signature::higman(3).unwrap();
        let u0 = w(&v3, "00");
        let u1 = w(&v3, "01");
        let gen = |z: &Word| three_cycle_generator(&v3, &u0, &u1, z);
        let cases = [
            ("100", "110", "120"),
            ("000", "110", "120"),
            ("110", "000", "120"),
            ("010", "110", "120"),
            ("000", "001", "002"),
            ("000", "001", "120"),
            ("000", "120", "001"),
            ("000", "010", "120"),
            ("000", "010", "011"),
            ("010", "000", "001"),
            ("000", "012", "010"),
            ("011", "000", "120"),
        ];
        for (a, b, c) in cases {
            let e = express_three_cycle(&v3, &u0, &u1, &w(&v3, a), &w(&v3, b), &w(&v3, c)).unwrap();
            let got = e.evaluate(&v3, &gen).unwrap();
            let want = target(&v3, &alloc::format!("({a} {b} {c})"));
            assert!(got.equals(&want).unwrap(), "({a} {b} {c}) via {e:?}");
        }
    }

    #[test]
    fn double_transposition_examples() {
        let v3 = Signature::higman(3).unwrap();
        let parts =
            double_transposition_split(&v3, &w(&v3, "0"), &w(&v3, "1"), &w(&v3, "0"), &w(&v3, "2")).unwrap();
        assert_eq!(parts.len(), 3);
        let mut acc = Element::identity(v3);
        for p in &parts {
            acc = acc.compose(&p.to_element(&v3).unwrap()).unwrap();
        }
        assert!(acc.equals(&target(&v3, "(0 1)").compose(&target(&v3, "(0 2)")).unwrap()).unwrap());

        let parts =
            double_transposition_split(&v3, &w(&v3, "00"), &w(&v3, "01"), &w(&v3, "1"), &w(&v3, "2")).unwrap();
        assert_eq!(
            parts,
            vec![DoubleTransposition {
                first: (w(&v3, "00"), w(&v3, "01")),
                second: (w(&v3, "1"), w(&v3, "2")),
            }]
        );
    }
}
