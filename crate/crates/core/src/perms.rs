//! Permutations in cycle notation and the named generators.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::element::{Element, Parity};
use crate::error::{Error, Result};
use crate::primes::{choose_primes, PrimePair};
use crate::words::{self, extend_to_basis, nary_expansion, Signature, Word};

/// Disjoint cycles of pairwise incomparable words.
///
/// Stored canonically: each cycle starts at its least word and cycles are
/// sorted by that word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    sig: Signature,
    cycles: Vec<Vec<Word>>,
}

/// Parity together with whether it is an invariant of the element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub parity: Parity,
    /// True for odd-arity Higman signatures, where parity does not depend on
    /// the basis used; otherwise the value is relative to the stored support.
    pub invariant: bool,
}

impl CycleDecomposition {
    pub fn new(sig: Signature, cycles: Vec<Vec<Word>>) -> Result<Self> {
        let mut support = Vec::new();
        for c in &cycles {
            if c.len() < 2 {
                return Err(Error::Precondition("cycles must have length at least 2"));
            }
            for w in c {
                sig.validate_word(w)?;
                support.push(w.clone());
            }
        }
        if !words::is_antichain(&sig, &support) {
            return Err(Error::NotAntichain);
        }
        Ok(Self::canonical(sig, cycles))
    }

    fn canonical(sig: Signature, cycles: Vec<Vec<Word>>) -> Self {
        let mut cycles: Vec<Vec<Word>> = cycles
            .into_iter()
            .filter(|c| c.len() >= 2)
            .map(|mut c| {
                let min = (0..c.len()).min_by(|&a, &b| c[a].cmp(&c[b])).expect("nonempty");
                c.rotate_left(min);
                c
            })
            .collect();
        cycles.sort();
        CycleDecomposition { sig, cycles }
    }

    pub fn identity(sig: Signature) -> Self {
        CycleDecomposition {
            sig,
            cycles: Vec::new(),
        }
    }

    /// The cycle decomposition of a finite-order element.
    pub fn from_element(g: &Element) -> Option<Self> {
        Some(Self::canonical(g.signature(), g.cycles()?))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn cycles(&self) -> &[Vec<Word>] {
        &self.cycles
    }

    pub fn support(&self) -> Vec<Word> {
        self.cycles.iter().flatten().cloned().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn to_element(&self) -> Element {
        let support = self.support();
        let basis = extend_to_basis(&self.sig, &support).expect("support is an antichain");
        let mut rules: Vec<(Word, Word)> = Vec::with_capacity(basis.len());
        for c in &self.cycles {
            for (i, w) in c.iter().enumerate() {
                rules.push((w.clone(), c[(i + 1) % c.len()].clone()));
            }
        }
        rules.sort();
        let fixed: Vec<(Word, Word)> = basis
            .words()
            .iter()
            .filter(|w| rules.binary_search_by(|(d, _)| d.cmp(w)).is_err())
            .map(|w| (w.clone(), w.clone()))
            .collect();
        rules.extend(fixed);
        Element::from_rules_unchecked(self.sig, rules)
    }

    pub fn order(&self) -> BigUint {
        self.cycles
            .iter()
            .fold(BigUint::from(1u32), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    pub fn parity(&self) -> ParityReport {
        let odd = self.cycles.iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1;
        ParityReport {
            parity: Parity::from_odd(odd),
            invariant: self.sig.is_higman() && self.sig.alphabet() % 2 == 1,
        }
    }

    /// The decomposition of `g_[u]`: every word prefixed by `u`.
    pub fn localize(&self, u: &Word) -> Self {
        CycleDecomposition {
            sig: self.sig,
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|w| u.concat(w)).collect())
                .collect(),
        }
    }

    /// Union of the cycles of two decompositions with disjoint supports.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let mut cycles = self.cycles.clone();
        cycles.extend(other.cycles.iter().cloned());
        Self::new(self.sig, cycles)
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(
            self.sig,
            self.cycles
                .iter()
                .map(|c| c.iter().rev().cloned().collect())
                .collect(),
        )
    }

    /// The same cycles viewed under another signature with the same words.
    pub fn with_signature(&self, sig: Signature) -> Result<Self> {
        if !self.sig.same_space(&sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(CycleDecomposition {
            sig,
            cycles: self.cycles.clone(),
        })
    }
}

fn transposition(sig: Signature, a: Word, b: Word) -> Element {
    CycleDecomposition::new(sig, vec![vec![a, b]])
        .expect("incomparable words")
        .to_element()
}

fn product_cycles(sig: Signature, factors: &[Element]) -> CycleDecomposition {
    let mut acc = Element::identity(sig);
    for f in factors {
        acc = acc.compose(f).expect("same signature");
    }
    CycleDecomposition::from_element(&acc).expect("finite products of transpositions have finite order")
}

/// `δ = ∏_a (0 1a)` for Higman signatures, multiplied left to right, which
/// is the `(n+1)`-cycle `(0 10 … 1(n−1))`.
///
/// For `mV` the product `∏_i (0 1.0_i)(0 1.1_i)` taken literally is not a
/// permutation once `m ≥ 2` (the words `1.0_i` and `1.1_j` overlap), so the
/// two children in direction `i` are taken inside the `i`-th piece `d_i` of a
/// comb splitting the bold `1` along the first coordinate:
/// `d_i = 1.(1^{i−1}0)_1` for `i < m` and `d_m = 1.1^{m−1}_1`. The result is
/// the `(2m+1)`-cycle `(0 d_1.0_1 d_1.1_1 … d_m.0_m d_m.1_m)`, which for
/// `m = 1` is `(0 10 11)`.
pub fn delta(sig: &Signature) -> CycleDecomposition {
    let sig = sig.ambient();
    let zero = if sig.is_higman() {
        Word::from_digits(vec![0])
    } else {
        Word::uniform(sig.dims(), 0, 1)
    };
    let targets: Vec<Word> = if sig.is_higman() {
        (0..sig.alphabet()).map(|a| Word::from_digits(vec![1, a as u8])).collect()
    } else {
        let m = sig.dims();
        let mut piece = Word::uniform(m, 1, 1);
        let mut out = Vec::with_capacity(2 * m);
        for i in 0..m {
            let d = if i + 1 < m { piece.child(0, 0) } else { piece.clone() };
            out.push(d.child(i, 0));
            out.push(d.child(i, 1));
            piece = piece.child(0, 1);
        }
        out
    };
    let factors: Vec<Element> = targets
        .into_iter()
        .map(|t| transposition(sig, zero.clone(), t))
        .collect();
    product_cycles(sig, &factors)
}

/// `δ' = δ (0 2)` for odd `n`.
pub fn delta_prime(n: u32) -> Result<CycleDecomposition> {
    if n % 2 == 0 {
        return Err(Error::EvenArity);
    }
    let sig = Signature::higman(n)?;
    let d = delta(&sig).to_element();
    let t = transposition(sig, Word::from_digits(vec![0]), Word::from_digits(vec![2]));
    Ok(product_cycles(sig, &[d, t]))
}

/// The word `a_i`: the expansion of `i` with `k` digits per coordinate.
fn a(sig: &Signature, i: u64, k: u32) -> Word {
    nary_expansion(sig, i, k).expect("index in range")
}

fn check_length(sig: &Signature, d: u64, k: u32) -> Result<()> {
    match sig.level_size(k) {
        Some(size) if size >= d => Ok(()),
        Some(_) => Err(Error::LengthTooSmall { d, k }),
        None => Ok(()),
    }
}

/// `σ(d,k) = (a_0 a_1 … a_{d−1})`.
pub fn sigma(sig: &Signature, d: u64, k: u32) -> Result<CycleDecomposition> {
    check_length(sig, d, k)?;
    let cycle: Vec<Word> = (0..d).map(|i| a(sig, i, k)).collect();
    Ok(CycleDecomposition::canonical(*sig, vec![cycle]))
}

/// `τ(d,k) = (a_{N−d+1} … a_N)` with `N = |X^(k)| − 1`.
pub fn tau(sig: &Signature, d: u64, k: u32) -> Result<CycleDecomposition> {
    check_length(sig, d, k)?;
    let n = sig.level_size(k).ok_or(Error::Precondition("level too large"))? - 1;
    let cycle: Vec<Word> = (n + 1 - d..=n).map(|i| a(sig, i, k)).collect();
    Ok(CycleDecomposition::canonical(*sig, vec![cycle]))
}

pub fn zeta(sig: &Signature) -> Result<CycleDecomposition> {
    let len = match choose_primes(sig)?.p {
        Some(p) => p,
        None => 8u64.pow(sig.arity()) / 4,
    };
    sigma(sig, len, 3)
}

pub fn beta(sig: &Signature) -> Result<CycleDecomposition> {
    let PrimePair { q, .. } = choose_primes(sig)?;
    tau(sig, q, 3)
}

/// The word at which `δ` is localized inside `α`: `n−1`, or bold `1`.
pub fn alpha_anchor(sig: &Signature) -> Word {
    if sig.is_higman() {
        Word::from_digits(vec![(sig.alphabet() - 1) as u8])
    } else {
        Word::uniform(sig.dims(), 1, 1)
    }
}

/// `α = δ_[n−1] ζ` (Higman) or `δ_[1] ζ` (Brin). The two factors have
/// disjoint supports, so `α` is the union of their cycles.
pub fn alpha(sig: &Signature) -> Result<CycleDecomposition> {
    let d = delta(sig).localize(&alpha_anchor(sig));
    zeta(sig)?.disjoint_union(&d.with_signature(*sig)?)
}

/// `α' = δ'_[n−1] ζ` for odd `n`.
pub fn alpha_prime(n: u32) -> Result<CycleDecomposition> {
    let sig = Signature::higman(n)?;
    let d = delta_prime(n)?.localize(&alpha_anchor(&sig));
    zeta(&sig)?.disjoint_union(&d)
}

/// Lexicographically least word of uniform depth `k` whose cylinder `g`
/// fixes pointwise.
pub fn fixed_word(g: &Element, k: u32) -> Result<Word> {
    let sig = g.signature();
    let size = sig.level_size(k).ok_or(Error::NoFixedWord { depth: k })?;
    (0..size)
        .map(|i| a(&sig, i, k))
        .find(|w| g.fixes_cylinder(w))
        .ok_or(Error::NoFixedWord { depth: k })
}
