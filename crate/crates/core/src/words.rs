//! Signatures, finite addresses in Cantor space, and bases.
//!
//! A Higman signature `V_n` works over the single alphabet `{0,…,n-1}`; a Brin
//! signature `mV` works over `m`-tuples of binary words. Both are handled
//! uniformly as `dims`-tuples of words over an alphabet of size `alphabet`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index::CylinderIndex;

/// Largest Brin dimension accepted.
pub const MAX_BRIN_DIMENSION: u32 = 32;
/// Largest Higman arity accepted (digits are stored as bytes).
pub const MAX_HIGMAN_ARITY: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The Higman–Thompson group `V_n`.
    Higman,
    /// The derived subgroup `V_n'` (odd `n` only).
    HigmanDerived,
    /// The Brin–Thompson group `mV`.
    Brin,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Higman => "Vn",
            Family::HigmanDerived => "VnPrime",
            Family::Brin => "mV",
        }
    }
}

/// Which group an address or element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    family: Family,
    arity: u32,
}

impl Signature {
    pub fn new(family: Family, arity: u32) -> Result<Self> {
        let ok = match family {
            Family::Higman => (2..=MAX_HIGMAN_ARITY).contains(&arity),
            Family::HigmanDerived => (3..=MAX_HIGMAN_ARITY).contains(&arity) && arity % 2 == 1,
            Family::Brin => (1..=MAX_BRIN_DIMENSION).contains(&arity),
        };
        if ok {
            Ok(Signature { family, arity })
        } else {
            Err(Error::InvalidArity {
                family: family.name(),
                arity,
            })
        }
    }

    pub fn higman(n: u32) -> Result<Self> {
        Self::new(Family::Higman, n)
    }

    pub fn higman_derived(n: u32) -> Result<Self> {
        Self::new(Family::HigmanDerived, n)
    }

    pub fn brin(m: u32) -> Result<Self> {
        Self::new(Family::Brin, m)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn is_brin(&self) -> bool {
        self.family == Family::Brin
    }

    pub fn is_higman(&self) -> bool {
        !self.is_brin()
    }

    /// Number of coordinates of a word: `m` for `mV`, otherwise 1.
    pub fn dims(&self) -> usize {
        match self.family {
            Family::Brin => self.arity as usize,
            _ => 1,
        }
    }

    /// Size of the digit alphabet: `n` for `V_n`/`V_n'`, 2 for `mV`.
    pub fn alphabet(&self) -> u32 {
        match self.family {
            Family::Brin => 2,
            _ => self.arity,
        }
    }

    /// The same words and arithmetic, viewed in the ambient group `V_n`.
    pub fn ambient(&self) -> Signature {
        match self.family {
            Family::HigmanDerived => Signature {
                family: Family::Higman,
                arity: self.arity,
            },
            _ => *self,
        }
    }

    /// Whether `other` uses the same addresses (`V_n` and `V_n'` share them).
    pub fn same_space(&self, other: &Signature) -> bool {
        self.ambient() == other.ambient()
    }

    /// Number of words of uniform depth `k`, if it fits in a `u64`.
    pub fn level_size(&self, k: u32) -> Option<u64> {
        let exp = k.checked_mul(self.dims() as u32)?;
        (self.alphabet() as u64).checked_pow(exp)
    }

    pub fn validate_word(&self, w: &Word) -> Result<()> {
        if w.dims() != self.dims() {
            return Err(Error::SignatureMismatch);
        }
        let a = self.alphabet();
        if w.coords.iter().flatten().any(|&d| d as u32 >= a) {
            return Err(Error::InvalidWord {
                word: alloc::format!("{:?}", w),
            });
        }
        Ok(())
    }

    pub fn root(&self) -> Word {
        Word::root(self.dims())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Higman => write!(f, "V_{}", self.arity),
            Family::HigmanDerived => write!(f, "V_{}'", self.arity),
            Family::Brin => write!(f, "{}V", self.arity),
        }
    }
}

/// A finite address: one digit sequence per coordinate.
///
/// Ordering is lexicographic by coordinate, which for a single coordinate is
/// the left-to-right leaf order of a tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    coords: Vec<Vec<u8>>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |f: &mut fmt::Formatter<'_>, c: &[u8]| -> fmt::Result {
            if c.is_empty() {
                return write!(f, "ε");
            }
            let wide = c.iter().any(|&d| d >= 10);
            for (i, d) in c.iter().enumerate() {
                if wide && i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", d)?;
            }
            Ok(())
        };
        if self.coords.len() == 1 {
            return show(f, &self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            show(f, c)?;
        }
        write!(f, ")")
    }
}

impl Word {
    pub fn root(dims: usize) -> Self {
        Word {
            coords: vec![Vec::new(); dims],
        }
    }

    /// A single-coordinate word.
    pub fn from_digits<D: Into<Vec<u8>>>(digits: D) -> Self {
        Word {
            coords: vec![digits.into()],
        }
    }

    pub fn from_coords(coords: Vec<Vec<u8>>) -> Self {
        Word { coords }
    }

    /// The word with `len` copies of `digit` in every coordinate.
    pub fn uniform(dims: usize, digit: u8, len: usize) -> Self {
        Word {
            coords: vec![vec![digit; len]; dims],
        }
    }

    pub fn dims(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &[u8] {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Vec<u8>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Vec<u8>> {
        self.coords
    }

    /// `|u|`: the minimum coordinate length.
    pub fn depth(&self) -> usize {
        self.coords.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.coords.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_len(&self) -> usize {
        self.coords.iter().map(Vec::len).sum()
    }

    pub fn is_root(&self) -> bool {
        self.coords.iter().all(Vec::is_empty)
    }

    pub fn is_uniform_depth(&self, k: usize) -> bool {
        self.coords.iter().all(|c| c.len() == k)
    }

    /// Whether the cylinder of `self` contains the cylinder of `other`, i.e.
    /// every coordinate of `self` is a prefix of the matching coordinate.
    pub fn contains(&self, other: &Word) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| b.starts_with(a))
    }

    pub fn comparable(&self, other: &Word) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a.starts_with(b) || b.starts_with(a))
    }

    /// `u ⊥ v`: the two cylinders are disjoint.
    pub fn incomparable(&self, other: &Word) -> bool {
        !self.comparable(other)
    }

    /// The intersection of two cylinders, when nonempty.
    pub fn meet(&self, other: &Word) -> Option<Word> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if b.starts_with(a) {
                coords.push(b.clone());
            } else if a.starts_with(b) {
                coords.push(a.clone());
            } else {
                return None;
            }
        }
        Some(Word { coords })
    }

    /// Componentwise concatenation `u.v`.
    pub fn concat(&self, suffix: &Word) -> Word {
        Word {
            coords: self
                .coords
                .iter()
                .zip(&suffix.coords)
                .map(|(a, b)| {
                    let mut c = Vec::with_capacity(a.len() + b.len());
                    c.extend_from_slice(a);
                    c.extend_from_slice(b);
                    c
                })
                .collect(),
        }
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for (a, p) in self.coords.iter().zip(&prefix.coords) {
            coords.push(a.strip_prefix(p.as_slice())?.to_vec());
        }
        Some(Word { coords })
    }

    /// Appends `digit` to coordinate `coord`.
    pub fn child(&self, coord: usize, digit: u8) -> Word {
        let mut w = self.clone();
        w.coords[coord].push(digit);
        w
    }

    /// Drops the last digit of coordinate `coord` (no-op when empty).
    pub fn parent(&self, coord: usize) -> Word {
        let mut w = self.clone();
        w.coords[coord].pop();
        w
    }

    /// Appends `digit` to every coordinate (`u.a` with a bold letter).
    pub fn child_all(&self, digit: u8) -> Word {
        let mut w = self.clone();
        for c in &mut w.coords {
            c.push(digit);
        }
        w
    }

    /// Truncates every coordinate to at most `k` digits.
    pub fn truncate(&self, k: usize) -> Word {
        Word {
            coords: self.coords.iter().map(|c| c[..c.len().min(k)].to_vec()).collect(),
        }
    }
}

/// `u` is an initial segment of `v`. For Brin words this is checked in every
/// coordinate, i.e. the cylinder of `u` contains the cylinder of `v`.
pub fn is_prefix(sig: &Signature, u: &Word, v: &Word) -> Result<bool> {
    sig.validate_word(u)?;
    sig.validate_word(v)?;
    Ok(u.contains(v))
}

pub fn incomparable(sig: &Signature, u: &Word, v: &Word) -> Result<bool> {
    sig.validate_word(u)?;
    sig.validate_word(v)?;
    Ok(u.incomparable(v))
}

pub(crate) fn is_antichain(sig: &Signature, words: &[Word]) -> bool {
    if sig.dims() == 1 {
        let mut sorted: Vec<&Word> = words.iter().collect();
        sorted.sort();
        return sorted.windows(2).all(|w| !w[0].contains(w[1]));
    }
    let index = CylinderIndex::build(sig.dims(), sig.alphabet() as usize, words);
    words.iter().enumerate().all(|(i, w)| {
        let mut ok = true;
        index.for_each_meeting(w, |j| {
            if j as usize != i {
                ok = false;
            }
        });
        ok
    })
}

/// Exact test that the cylinder measures sum to one.
pub(crate) fn measure_is_one(sig: &Signature, words: &[Word]) -> bool {
    if words.is_empty() {
        return false;
    }
    let dims = sig.dims();
    let max_len = words.iter().map(Word::max_len).max().unwrap_or(0);
    let total = (dims * max_len) as u32;
    let base = BigUint::from(sig.alphabet());
    let mut sum = BigUint::zero();
    for w in words {
        sum += base.pow(total - w.total_len() as u32);
    }
    sum == base.pow(total)
}

pub fn is_basis(sig: &Signature, words: &[Word]) -> Result<bool> {
    for w in words {
        sig.validate_word(w)?;
    }
    Ok(is_antichain(sig, words) && measure_is_one(sig, words))
}

/// A finite set of words whose cylinders partition the space, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    sig: Signature,
    words: Vec<Word>,
}

impl Basis {
    pub fn new(sig: Signature, mut words: Vec<Word>) -> Result<Self> {
        if !is_basis(&sig, &words)? {
            return Err(Error::NotBasis);
        }
        words.sort();
        Ok(Basis { sig, words })
    }

    pub(crate) fn from_sorted_unchecked(sig: Signature, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        Basis { sig, words }
    }

    pub fn root(sig: Signature) -> Self {
        Basis {
            sig,
            words: vec![sig.root()],
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Whether every word of `self` lies inside some word of `coarser`.
    pub fn refines(&self, coarser: &Basis) -> bool {
        let index = CylinderIndex::build(
            self.sig.dims(),
            self.sig.alphabet() as usize,
            &coarser.words,
        );
        self.words.iter().all(|w| {
            let hits = index.meeting(w);
            hits.len() == 1 && coarser.words[hits[0] as usize].contains(w)
        })
    }
}

/// Completes a set of pairwise incomparable words to a basis.
///
/// The space is split recursively: a cylinder meeting no input word is kept
/// as a new basis word, a cylinder inside an input word is covered by it, and
/// any other cylinder is split in the lowest coordinate along which some
/// meeting input word is longer. Afterwards full sibling families of new
/// words are merged greedily (lowest coordinate first, lexicographic scan).
pub fn extend_to_basis(sig: &Signature, antichain: &[Word]) -> Result<Basis> {
    for w in antichain {
        sig.validate_word(w)?;
    }
    if !is_antichain(sig, antichain) {
        return Err(Error::NotAntichain);
    }
    let mut words: Vec<Word> = antichain.to_vec();
    words.extend(complement(sig, &sig.root(), antichain));
    words.sort();
    Ok(Basis::from_sorted_unchecked(*sig, words))
}

/// Words that together with `antichain` (all meeting `cylinder`) partition
/// `cylinder`. The antichain is assumed valid.
pub(crate) fn complement(sig: &Signature, cylinder: &Word, antichain: &[Word]) -> Vec<Word> {
    let alphabet = sig.alphabet();
    let mut free = Vec::new();
    let meeting: Vec<&Word> = antichain.iter().filter(|w| w.comparable(cylinder)).collect();
    split_free(cylinder.clone(), &meeting, alphabet, &mut free);
    merge_free(sig, free)
}

fn split_free(c: Word, inputs: &[&Word], alphabet: u32, out: &mut Vec<Word>) {
    if inputs.is_empty() {
        out.push(c);
        return;
    }
    if inputs.iter().any(|w| w.contains(&c)) {
        return;
    }
    let coord = (0..c.dims())
        .find(|&i| inputs.iter().any(|w| w.coord(i).len() > c.coord(i).len()))
        .expect("some input is strictly inside the cylinder");
    for d in 0..alphabet {
        let child = c.child(coord, d as u8);
        let sub: Vec<&Word> = inputs.iter().copied().filter(|w| w.comparable(&child)).collect();
        split_free(child, &sub, alphabet, out);
    }
}

fn merge_free(sig: &Signature, free: Vec<Word>) -> Vec<Word> {
    let alphabet = sig.alphabet();
    let mut set: BTreeSet<Word> = free.into_iter().collect();
    loop {
        let mut merged = None;
        'scan: for coord in 0..sig.dims() {
            for w in set.iter() {
                let c = w.coord(coord);
                if c.last() != Some(&0) {
                    continue;
                }
                let parent = w.parent(coord);
                if (1..alphabet).all(|d| set.contains(&parent.child(coord, d as u8))) {
                    merged = Some((parent, coord));
                    break 'scan;
                }
            }
        }
        match merged {
            Some((parent, coord)) => {
                for d in 0..alphabet {
                    set.remove(&parent.child(coord, d as u8));
                }
                set.insert(parent);
            }
            None => break,
        }
    }
    set.into_iter().collect()
}

/// All nonempty intersections `a ⊓ b` with `a ∈ A` and `b ∈ B`.
pub fn common_refinement(a: &Basis, b: &Basis) -> Result<Basis> {
    if a.sig != b.sig {
        return Err(Error::SignatureMismatch);
    }
    let sig = a.sig;
    let index = CylinderIndex::build(sig.dims(), sig.alphabet() as usize, &b.words);
    let mut out = Vec::new();
    for w in &a.words {
        index.for_each_meeting(w, |j| {
            out.push(w.meet(&b.words[j as usize]).expect("indexed words meet"));
        });
    }
    out.sort();
    Ok(Basis::from_sorted_unchecked(sig, out))
}

/// The expansion of `i` with exactly `k` digits per coordinate: `k` base-`n`
/// digits for Higman signatures; for `mV`, the `mk`-bit binary expansion cut
/// into `m` consecutive blocks of length `k`, block `j` becoming coordinate `j`.
pub fn nary_expansion(sig: &Signature, i: u64, k: u32) -> Result<Word> {
    let dims = sig.dims();
    let total = k as usize * dims;
    let out_of_range = || Error::IndexOutOfRange {
        index: i,
        digits: total as u32,
    };
    if let Some(size) = sig.level_size(k) {
        if i >= size {
            return Err(out_of_range());
        }
    }
    let base = sig.alphabet() as u64;
    let mut digits = vec![0u8; total];
    let mut rest = i;
    for slot in digits.iter_mut().rev() {
        *slot = (rest % base) as u8;
        rest /= base;
    }
    if rest != 0 {
        return Err(out_of_range());
    }
    let coords = digits.chunks(k.max(1) as usize).map(<[u8]>::to_vec).collect::<Vec<_>>();
    let coords = if k == 0 { vec![Vec::new(); dims] } else { coords };
    Ok(Word { coords })
}

/// Inverse of [`nary_expansion`] for a word of uniform depth `k`.
pub fn word_index(sig: &Signature, w: &Word, k: u32) -> Option<u64> {
    if w.dims() != sig.dims() || !w.is_uniform_depth(k as usize) {
        return None;
    }
    let base = sig.alphabet() as u64;
    let mut acc: u64 = 0;
    for &d in w.coords.iter().flatten() {
        acc = acc.checked_mul(base)?.checked_add(d as u64)?;
    }
    Some(acc)
}

/// All words of uniform depth `k`, in index order.
pub fn level(sig: &Signature, k: u32) -> Result<Vec<Word>> {
    let size = sig
        .level_size(k)
        .ok_or(Error::Precondition("level too large"))?;
    (0..size).map(|i| nary_expansion(sig, i, k)).collect()
}

/// Smallest `k` with `alphabet^(dims·k) ≥ d`.
pub fn digits_needed(sig: &Signature, d: u64) -> u32 {
    let mut k = 0u32;
    while sig.level_size(k).is_some_and(|s| s < d) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        Word::from_digits(s.bytes().map(|b| b - b'0').collect::<Vec<_>>())
    }

    fn bw(cs: &[&str]) -> Word {
        Word::from_coords(cs.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect())
    }

    #[test]
    fn prefix_examples() {
        let v2 = Signature::higman(2).unwrap();
        assert!(is_prefix(&v2, &w("10"), &w("1010")).unwrap());
        assert!(is_prefix(&v2, &w("10"), &w("10")).unwrap());
        assert!(!is_prefix(&v2, &w("11"), &w("1010")).unwrap());
    }

    #[test]
    fn incomparable_examples() {
        let v2 = Signature::higman(2).unwrap();
        assert!(incomparable(&v2, &w("00"), &w("01")).unwrap());
        assert!(!incomparable(&v2, &w("0"), &w("01")).unwrap());
        let b2 = Signature::brin(2).unwrap();
        assert!(!incomparable(&b2, &bw(&["0", "11"]), &bw(&["00", "1"])).unwrap());
        assert!(incomparable(&b2, &bw(&["0", "1"]), &bw(&["1", "1"])).unwrap());
    }

    #[test]
    fn mismatched_signature_is_an_error() {
        let v2 = Signature::higman(2).unwrap();
        assert_eq!(
            incomparable(&v2, &bw(&["0", "1"]), &w("0")),
            Err(Error::SignatureMismatch)
        );
        assert!(is_prefix(&v2, &w("2"), &w("0")).is_err());
    }

    #[test]
    fn basis_examples() {
        let v2 = Signature::higman(2).unwrap();
        assert!(is_basis(&v2, &[w("00"), w("01"), w("1")]).unwrap());
        assert!(!is_basis(&v2, &[w("00"), w("1")]).unwrap());
        assert!(!is_basis(&v2, &[w("0"), w("01"), w("1")]).unwrap());
        let v3 = Signature::higman(3).unwrap();
        assert!(is_basis(&v3, &[w("0"), w("1"), w("2")]).unwrap());
        let b2 = Signature::brin(2).unwrap();
        assert!(is_basis(&b2, &[bw(&["0", ""]), bw(&["1", "0"]), bw(&["1", "1"])]).unwrap());
    }

    #[test]
    fn extend_examples() {
        let v2 = Signature::higman(2).unwrap();
        let b = extend_to_basis(&v2, &[w("00"), w("01")]).unwrap();
        assert_eq!(b.words(), &[w("00"), w("01"), w("1")]);
        let b = extend_to_basis(&v2, &[w("0"), w("1")]).unwrap();
        assert_eq!(b.words(), &[w("0"), w("1")]);
        let b1 = Signature::brin(2).unwrap();
        let b = extend_to_basis(&b1, &[bw(&["0", ""])]).unwrap();
        assert_eq!(b.words(), &[bw(&["0", ""]), bw(&["1", ""])]);
        assert_eq!(
            extend_to_basis(&v2, &[w("0"), w("01")]),
            Err(Error::NotAntichain)
        );
    }

    #[test]
    fn extend_handles_non_guillotine_antichain() {
        // No coordinate cut separates these three boxes.
        let b3 = Signature::brin(3).unwrap();
        let input = vec![bw(&["", "0", "0"]), bw(&["0", "", "1"]), bw(&["1", "1", ""])];
        let b = extend_to_basis(&b3, &input).unwrap();
        assert!(is_basis(&b3, b.words()).unwrap());
        for x in &input {
            assert!(b.contains(x));
        }
    }

    #[test]
    fn refinement_examples() {
        let v2 = Signature::higman(2).unwrap();
        let a = Basis::new(v2, vec![w("0"), w("1")]).unwrap();
        let b = Basis::new(v2, vec![w("00"), w("01"), w("1")]).unwrap();
        assert_eq!(common_refinement(&a, &b).unwrap(), b);
        let a = Basis::new(v2, vec![w("0"), w("10"), w("11")]).unwrap();
        let r = common_refinement(&a, &b).unwrap();
        assert_eq!(r.words(), &[w("00"), w("01"), w("10"), w("11")]);
        assert!(r.refines(&a) && r.refines(&b));
        let a = Basis::new(v2, vec![w("0"), w("1")]).unwrap();
        assert_eq!(common_refinement(&a, &a).unwrap(), a);
    }

    #[test]
    fn expansion_examples() {
        let v2 = Signature::higman(2).unwrap();
        assert_eq!(nary_expansion(&v2, 6, 3).unwrap(), w("110"));
        let v3 = Signature::higman(3).unwrap();
        assert_eq!(nary_expansion(&v3, 5, 2).unwrap(), w("12"));
        let b2 = Signature::brin(2).unwrap();
        assert_eq!(nary_expansion(&b2, 9, 2).unwrap(), bw(&["10", "01"]));
        assert!(matches!(
            nary_expansion(&v2, 8, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(word_index(&b2, &bw(&["10", "01"]), 2), Some(9));
        assert_eq!(nary_expansion(&v2, 0, 0).unwrap(), w(""));
    }

    #[test]
    fn digits_needed_matches_ceiling_log() {
        let v2 = Signature::higman(2).unwrap();
        assert_eq!(digits_needed(&v2, 1), 0);
        assert_eq!(digits_needed(&v2, 4), 2);
        assert_eq!(digits_needed(&v2, 10), 4);
        let b3 = Signature::brin(3).unwrap();
        assert_eq!(digits_needed(&b3, 396), 3);
    }

    #[test]
    fn derived_signature_requires_odd_arity() {
        assert!(Signature::higman_derived(4).is_err());
        assert!(Signature::higman_derived(3).is_ok());
        assert!(Signature::higman(1).is_err());
        assert!(Signature::brin(0).is_err());
    }
}
