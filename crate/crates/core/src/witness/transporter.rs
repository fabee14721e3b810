//! Elements supported in a cylinder that carry given cylinders to given
//! targets.

use alloc::format;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::words::{self, Signature, Word};

/// An element of `G_[u]` mapping each cylinder `s` onto `t` by the prefix
/// rule `s → t`, for the given `(s, t)` pairs.
///
/// Both sides are completed to bases of `u`, the smaller completion is split
/// (least unpinned word of minimal depth first) until the sizes agree, and
/// the unpinned words are matched in lexicographic order. With `even`, the
/// result is made to have even leaf parity (odd Higman arity only) by
/// splitting one unpinned rule and swapping two of its children.
pub fn transporter(sig: &Signature, pairs: &[(Word, Word)], u: &Word, even: bool) -> Result<Element> {
    sig.validate_word(u)?;
    for (s, t) in pairs {
        for w in [s, t] {
            sig.validate_word(w)?;
            if !u.contains(w) {
                return Err(Error::OutsideCylinder {
                    word: format!("{:?}", w),
                    cylinder: format!("{:?}", u),
                });
            }
        }
    }
    if even && (sig.is_brin() || sig.alphabet() % 2 == 0) {
        return Err(Error::Precondition("parity constraint needs an odd Higman arity"));
    }
    let sources: Vec<Word> = pairs.iter().map(|(s, _)| s.clone()).collect();
    let targets: Vec<Word> = pairs.iter().map(|(_, t)| t.clone()).collect();
    if !words::is_antichain(sig, &sources) || !words::is_antichain(sig, &targets) {
        return Err(Error::NotAntichain);
    }
    let mut free_s = words::complement(sig, u, &sources);
    let mut free_t = words::complement(sig, u, &targets);
    while free_s.len() != free_t.len() {
        let smaller = if free_s.len() < free_t.len() { &mut free_s } else { &mut free_t };
        split_least(sig, smaller)?;
    }
    free_s.sort();
    free_t.sort();

    let mut rules: Vec<(Word, Word)> = pairs.to_vec();
    let first_free = rules.len();
    let free_count = free_s.len();
    rules.extend(free_s.into_iter().zip(free_t));
    for w in words::complement(sig, &sig.root(), core::slice::from_ref(u)) {
        rules.push((w.clone(), w));
    }
    let mut g = Element::new(*sig, rules.clone())?;
    if even && !g.leaf_parity()?.is_even() {
        if free_count == 0 {
            return Err(Error::Precondition("no free cylinder for the parity fix"));
        }
        let (d, r) = rules.remove(first_free);
        let n = sig.alphabet() as u8;
        let mut children: Vec<(Word, Word)> =
            (0..n).map(|a| (d.child(0, a), r.child(0, a))).collect();
        let swapped = children[1].1.clone();
        children[1].1 = core::mem::replace(&mut children[0].1, swapped);
        rules.extend(children);
        g = Element::new(*sig, rules)?;
        debug_assert!(g.leaf_parity()?.is_even());
    }
    Ok(g)
}

/// Splits the least word of minimal total length in one level (coordinate 0
/// for Brin signatures).
fn split_least(sig: &Signature, words: &mut Vec<Word>) -> Result<()> {
    let (i, _) = words
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.total_len().cmp(&b.total_len()).then_with(|| a.cmp(b)))
        .ok_or(Error::Precondition("cylinder is covered by pinned words"))?;
    let w = words.swap_remove(i);
    for a in 0..sig.alphabet() {
        words.push(w.child(0, a as u8));
    }
    Ok(())
}
