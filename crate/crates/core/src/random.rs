//! Random words, bases, elements and points for testing and fuzzing.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::element::Element;
use crate::perms::CycleDecomposition;
use crate::point::{PeriodicPoint, PeriodicSequence};
use crate::words::{Basis, Signature, Word};

/// A basis obtained from the root by `splits` random leaf splits (one
/// coordinate at a time for Brin signatures).
pub fn random_basis<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, splits: usize) -> Basis {
    let mut leaves = alloc::vec![sig.root()];
    for _ in 0..splits {
        let i = rng.gen_range(0..leaves.len());
        let leaf = leaves.swap_remove(i);
        let coord = rng.gen_range(0..sig.dims());
        for a in 0..sig.alphabet() {
            leaves.push(leaf.child(coord, a as u8));
        }
    }
    leaves.sort();
    Basis::new(*sig, leaves).expect("splitting preserves bases")
}

/// A random element given by two random bases of `splits` splits each and a
/// random bijection. For `V_n'` the bijection is made even.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, splits: usize) -> Element {
    let domain = random_basis(rng, sig, splits);
    let mut range = random_basis(rng, sig, splits).into_words();
    range.shuffle(rng);
    let mut g = Element::from_basis_map(&domain, &range).expect("equal sizes");
    if sig.family() == crate::words::Family::HigmanDerived
        && !g.in_derived_subgroup().expect("odd Higman arity")
    {
        range.swap(0, 1);
        g = Element::from_basis_map(&domain, &range).expect("equal sizes");
    }
    g
}

/// A random element other than the identity.
pub fn random_nontrivial<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, splits: usize) -> Element {
    let splits = splits.max(1);
    loop {
        let g = random_element(rng, sig, splits);
        if !g.is_identity() {
            return g;
        }
    }
}

/// Random disjoint cycles on words of a random basis.
pub fn random_cycles<R: Rng + ?Sized>(
    rng: &mut R,
    sig: &Signature,
    splits: usize,
    max_cycles: usize,
) -> CycleDecomposition {
    let mut words = random_basis(rng, sig, splits.max(1)).into_words();
    words.shuffle(rng);
    let mut cycles = Vec::new();
    let mut rest = &words[..];
    for _ in 0..max_cycles {
        if rest.len() < 2 {
            break;
        }
        let len = rng.gen_range(2..=rest.len().min(5));
        cycles.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    CycleDecomposition::new(*sig, cycles).expect("basis words are incomparable")
}

/// A random word with at most `max_len` digits per coordinate.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, max_len: usize) -> Word {
    let coords = (0..sig.dims())
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| rng.gen_range(0..sig.alphabet()) as u8).collect()
        })
        .collect();
    Word::from_coords(coords)
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, max_len: usize) -> PeriodicPoint {
    let coords = (0..sig.dims())
        .map(|_| {
            let pre_len = rng.gen_range(0..=max_len);
            let per_len = rng.gen_range(1..=max_len.max(1));
            let mut digits = |len| (0..len).map(|_| rng.gen_range(0..sig.alphabet()) as u8).collect::<Vec<_>>();
            let pre = digits(pre_len);
            let period = digits(per_len);
            PeriodicSequence::new(pre, period).expect("nonempty period")
        })
        .collect();
    PeriodicPoint::new(coords)
}
