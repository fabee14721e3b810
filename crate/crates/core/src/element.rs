//! Group elements as prefix-exchange maps between two bases.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::index::CylinderIndex;
use crate::words::{self, Basis, Signature, Word};

/// Upper bound on refinement rounds when searching for a permutation form.
const PERMUTATION_ROUNDS: usize = 256;
/// Upper bound on basis size when searching for a permutation form.
const PERMUTATION_SIZE: usize = 1 << 20;

/// A bijection between two bases, acting by `(d.w)g = (r.w)` for each rule
/// `d → r`. Rules are kept sorted by domain word.
///
/// Two elements can act identically while having different rules, so there
/// is deliberately no `PartialEq`; use [`Element::equals`].
#[derive(Clone, Debug)]
pub struct Element {
    sig: Signature,
    rules: Vec<(Word, Word)>,
}

/// Sign of a permutation, or of an element of `V_n` for odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl Element {
    pub fn identity(sig: Signature) -> Self {
        Element {
            sig,
            rules: vec![(sig.root(), sig.root())],
        }
    }

    /// Builds an element from rules `domain → range`, checking that both sides
    /// are bases and that no word repeats.
    pub fn new(sig: Signature, mut rules: Vec<(Word, Word)>) -> Result<Self> {
        for (d, r) in &rules {
            sig.validate_word(d)?;
            sig.validate_word(r)?;
        }
        rules.sort();
        let domain: Vec<Word> = rules.iter().map(|(d, _)| d.clone()).collect();
        let range: Vec<Word> = rules.iter().map(|(_, r)| r.clone()).collect();
        if !words::is_basis(&sig, &domain)? || !words::is_basis(&sig, &range)? {
            return Err(Error::InvalidRules);
        }
        Ok(Element { sig, rules })
    }

    /// Builds an element from rules already known to form a basis pair.
    pub(crate) fn from_rules_unchecked(sig: Signature, mut rules: Vec<(Word, Word)>) -> Self {
        rules.sort_unstable();
        Element { sig, rules }
    }

    /// The permutation of `basis` sending each word to `image(word)`.
    pub fn from_basis_map(basis: &Basis, images: &[Word]) -> Result<Self> {
        let rules = basis.words().iter().cloned().zip(images.iter().cloned()).collect();
        Element::new(basis.signature(), rules)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// The same map regarded as an element of the group with signature `sig`
    /// (used to move between `V_n` and `V_n'`).
    pub fn with_signature(mut self, sig: Signature) -> Result<Self> {
        if !self.sig.same_space(&sig) {
            return Err(Error::SignatureMismatch);
        }
        self.sig = sig;
        Ok(self)
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        &self.rules
    }

    pub fn domain(&self) -> Basis {
        Basis::from_sorted_unchecked(self.sig, self.rules.iter().map(|(d, _)| d.clone()).collect())
    }

    pub fn range(&self) -> Basis {
        let mut r: Vec<Word> = self.rules.iter().map(|(_, r)| r.clone()).collect();
        r.sort_unstable();
        Basis::from_sorted_unchecked(self.sig, r)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.sig.same_space(&other.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    fn domain_index(&self) -> CylinderIndex {
        CylinderIndex::build(
            self.sig.dims(),
            self.sig.alphabet() as usize,
            self.rules.iter().map(|(d, _)| d),
        )
    }

    /// Index of the rule whose domain word contains `w`, if any.
    fn rule_containing(&self, w: &Word) -> Option<usize> {
        if self.sig.dims() == 1 {
            let pos = match self.rules.binary_search_by(|(d, _)| d.cmp(w)) {
                Ok(i) => return Some(i),
                Err(0) => return None,
                Err(i) => i - 1,
            };
            return self.rules[pos].0.contains(w).then_some(pos);
        }
        self.rules.iter().position(|(d, _)| d.contains(w))
    }

    /// The image of the cylinder `w` when it lies inside one domain word.
    pub fn apply_word(&self, w: &Word) -> Option<Word> {
        let i = self.rule_containing(w)?;
        let (d, r) = &self.rules[i];
        Some(r.concat(&w.strip_prefix(d)?))
    }

    /// Calls `f(piece, image)` for each nonempty intersection of `w` with a
    /// domain word.
    fn for_each_piece<F: FnMut(Word, Word)>(&self, index: Option<&CylinderIndex>, w: &Word, mut f: F) {
        let mut visit = |j: usize| {
            let (d, r) = &self.rules[j];
            if let Some(c) = d.meet(w) {
                let image = r.concat(&c.strip_prefix(d).expect("meet lies inside d"));
                f(c, image);
            }
        };
        match index {
            Some(ix) => ix.for_each_meeting(w, |j| visit(j as usize)),
            None => (0..self.rules.len()).for_each(visit),
        }
    }

    pub fn invert(&self) -> Element {
        let rules = self.rules.iter().map(|(d, r)| (r.clone(), d.clone())).collect();
        Element::from_rules_unchecked(self.sig, rules)
    }

    /// `self` followed by `other`, without merging rules afterwards.
    pub(crate) fn compose_raw(&self, other: &Element) -> Element {
        let index = other.domain_index();
        let mut rules = Vec::with_capacity(self.rules.len().max(other.rules.len()));
        for (a, b) in &self.rules {
            index.for_each_meeting(b, |j| {
                let (d, e) = &other.rules[j as usize];
                let c = b.meet(d).expect("indexed words meet");
                let pre = a.concat(&c.strip_prefix(b).expect("c inside b"));
                let post = e.concat(&c.strip_prefix(d).expect("c inside d"));
                rules.push((pre, post));
            });
        }
        Element::from_rules_unchecked(self.sig, rules)
    }

    /// The product `self · other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.compose_raw(other).simplify())
    }

    /// `y⁻¹ · self · y`.
    pub fn conjugate(&self, y: &Element) -> Result<Element> {
        y.invert().compose(self)?.compose(y)
    }

    /// Whether both elements act identically on the whole space.
    pub fn equals(&self, other: &Element) -> Result<bool> {
        self.check_same(other)?;
        let index = other.domain_index();
        for (a, b) in &self.rules {
            let mut same = true;
            index.for_each_meeting(a, |j| {
                if !same {
                    return;
                }
                let (d, e) = &other.rules[j as usize];
                let c = a.meet(d).expect("indexed words meet");
                let mine = b.concat(&c.strip_prefix(a).expect("c inside a"));
                let theirs = e.concat(&c.strip_prefix(d).expect("c inside d"));
                same = mine == theirs;
            });
            if !same {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_identity(&self) -> bool {
        self.rules.iter().all(|(d, r)| d == r)
    }

    /// Merges sibling families `p.c_0 → q.c_0, …` (children along one
    /// coordinate) into `p → q` until none applies.
    ///
    /// For Higman signatures the result is the unique minimal basis pair. For
    /// Brin signatures the result depends on the merge order and no
    /// minimality is claimed.
    pub fn simplify(&self) -> Element {
        let alphabet = self.sig.alphabet();
        let dims = self.sig.dims();
        let mut map: BTreeMap<Word, Word> = self.rules.iter().cloned().collect();
        let mut work: Vec<Word> = self.rules.iter().map(|(d, _)| d.clone()).rev().collect();
        while let Some(w) = work.pop() {
            let Some(r) = map.get(&w) else { continue };
            let mut merged = None;
            for i in 0..dims {
                let (Some(&dl), Some(&rl)) = (w.coord(i).last(), r.coord(i).last()) else {
                    continue;
                };
                if dl != rl {
                    continue;
                }
                let parent = w.parent(i);
                let target = r.parent(i);
                let family = (0..alphabet).all(|a| {
                    map.get(&parent.child(i, a as u8))
                        .is_some_and(|img| *img == target.child(i, a as u8))
                });
                if family {
                    merged = Some((parent, target, i));
                    break;
                }
            }
            if let Some((parent, target, i)) = merged {
                for a in 0..alphabet {
                    map.remove(&parent.child(i, a as u8));
                }
                map.insert(parent.clone(), target);
                work.push(parent);
            }
        }
        Element {
            sig: self.sig,
            rules: map.into_iter().collect(),
        }
    }

    /// The minimal basis pair of a `V_n` element.
    pub fn reduce(&self) -> Result<Element> {
        if self.sig.is_brin() {
            return Err(Error::NotHigman);
        }
        Ok(self.simplify())
    }

    /// `self^e` for a nonnegative exponent.
    pub fn power(&self, e: &BigUint) -> Element {
        if e.is_zero() {
            return Element::identity(self.sig);
        }
        if let Some(perm) = self.permutation_on_own_domain() {
            return perm.power(e).to_element(self.sig).simplify();
        }
        let mut result: Option<Element> = None;
        let mut base = self.simplify();
        let bits = e.bits();
        for bit in 0..bits {
            if e.bit(bit) {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.compose_raw(&base).simplify(),
                });
            }
            if bit + 1 < bits {
                base = base.compose_raw(&base).simplify();
            }
        }
        result.expect("e is nonzero")
    }

    pub fn pow(&self, e: u64) -> Element {
        self.power(&BigUint::from(e))
    }

    /// When the domain and range bases coincide, the induced permutation.
    fn permutation_on_own_domain(&self) -> Option<BasisPermutation> {
        let domain: Vec<Word> = self.rules.iter().map(|(d, _)| d.clone()).collect();
        let mut images = Vec::with_capacity(domain.len());
        for (_, r) in &self.rules {
            images.push(domain.binary_search(r).ok()? as u32);
        }
        Some(BasisPermutation { words: domain, images })
    }

    /// `g_[u]`: a copy of `g` acting inside the cylinder `u`, identity
    /// elsewhere.
    pub fn localize(&self, u: &Word) -> Result<Element> {
        self.sig.validate_word(u)?;
        let mut rules: Vec<(Word, Word)> =
            self.rules.iter().map(|(d, r)| (u.concat(d), u.concat(r))).collect();
        for w in words::complement(&self.sig, &self.sig.root(), core::slice::from_ref(u)) {
            rules.push((w.clone(), w));
        }
        Ok(Element::from_rules_unchecked(self.sig, rules).simplify())
    }

    /// `g` acts as the identity on the cylinder `u`.
    pub fn fixes_cylinder(&self, u: &Word) -> bool {
        let mut fixed = true;
        self.for_each_piece(None, u, |c, image| fixed &= c == image);
        fixed
    }

    /// `g` acts as the identity outside the cylinder `u`, i.e. `g ∈ G_[u]`.
    pub fn is_localized_in(&self, u: &Word) -> bool {
        self.rules.iter().all(|(d, r)| u.contains(d) || d == r)
    }

    /// When `g` maps the cylinder `u` onto a cylinder by the prefix rule
    /// `u.w ↦ t.w`, the word `t`.
    pub fn cylinder_image(&self, u: &Word) -> Option<Word> {
        if let Some(t) = self.apply_word(u) {
            return Some(t);
        }
        let mut target: Option<Word> = None;
        let mut ok = true;
        self.for_each_piece(None, u, |c, image| {
            if !ok {
                return;
            }
            let suffix = c.strip_prefix(u).expect("piece lies inside u");
            let mut t = Vec::with_capacity(image.dims());
            for (img, suf) in image.coords().iter().zip(suffix.coords()) {
                match img.strip_suffix(suf.as_slice()) {
                    Some(p) => t.push(p.to_vec()),
                    None => {
                        ok = false;
                        return;
                    }
                }
            }
            let t = Word::from_coords(t);
            match &target {
                None => target = Some(t),
                Some(prev) => ok = *prev == t,
            }
        });
        if ok {
            target
        } else {
            None
        }
    }

    /// Domain words moved by the simplified pair. This over-approximates the
    /// support and is only a pre-filter.
    pub fn moved_cylinder_upper(&self) -> Vec<Word> {
        self.simplify()
            .rules
            .into_iter()
            .filter(|(d, r)| d != r)
            .map(|(d, _)| d)
            .collect()
    }

    /// A basis permuted by the element, if one is found by refining the
    /// domain by its successive images. Succeeds exactly for elements of
    /// finite order (within the configured round and size limits).
    pub(crate) fn permutation_form(&self) -> Option<BasisPermutation> {
        let mut current = self.simplify();
        // Merging can split a cycle across levels, so the rules as given are
        // tried too before refining.
        if let Some(p) = current.permutation_on_own_domain().or_else(|| self.permutation_on_own_domain()) {
            return Some(p);
        }
        if current.has_wandering_cylinder() {
            return None;
        }
        for _ in 0..PERMUTATION_ROUNDS {
            if let Some(p) = current.permutation_on_own_domain() {
                return Some(p);
            }
            // A cylinder sent strictly inside or around itself never returns.
            if current.rules.len() > PERMUTATION_SIZE
                || current.rules.iter().any(|(d, r)| d != r && d.comparable(r))
            {
                return None;
            }
            // A ⊓ Ag: every new word lies inside a domain word.
            let combined = words::common_refinement(&current.domain(), &current.range()).ok()?;
            let rules = combined
                .into_words()
                .into_iter()
                .map(|w| {
                    let img = current.apply_word(&w).expect("refines the domain");
                    (w, img)
                })
                .collect();
            current = Element { sig: self.sig, rules };
        }
        None
    }

    /// Whether some domain word has an orbit reaching a cylinder strictly
    /// inside or around an earlier one, which rules out finite order.
    fn has_wandering_cylinder(&self) -> bool {
        let cap = 2 * self.rules.len() + 2;
        let mut seen = BTreeSet::new();
        for (d, _) in &self.rules {
            if seen.contains(d) {
                continue;
            }
            let mut orbit = vec![d.clone()];
            let mut w = d.clone();
            for _ in 0..cap {
                match self.apply_word(&w) {
                    Some(next) => w = next,
                    None => break,
                }
                if orbit.iter().any(|u| *u != w && u.comparable(&w)) {
                    return true;
                }
                if orbit.contains(&w) {
                    break;
                }
                orbit.push(w.clone());
            }
            seen.extend(orbit);
        }
        false
    }

    /// Disjoint cycles of a finite-order element on some permuted basis.
    pub fn cycles(&self) -> Option<Vec<Vec<Word>>> {
        Some(self.permutation_form()?.cycles())
    }

    /// Order of the element when it has finite order.
    pub fn order(&self) -> Option<BigUint> {
        let cycles = self.cycles()?;
        let mut acc = BigUint::from(1u32);
        for c in &cycles {
            acc = acc.lcm(&BigUint::from(c.len()));
        }
        Some(acc)
    }

    /// Sign of the position permutation induced on the leaves of the domain
    /// tree (in left-to-right order) by the rules. For odd `n` this is a
    /// homomorphism `V_n → {±1}` whose kernel is `V_n'`.
    pub fn leaf_parity(&self) -> Result<Parity> {
        if self.sig.is_brin() {
            return Err(Error::NotHigman);
        }
        if self.sig.alphabet() % 2 == 0 {
            return Err(Error::EvenArity);
        }
        let mut range: Vec<&Word> = self.rules.iter().map(|(_, r)| r).collect();
        range.sort_unstable();
        let positions: Vec<u32> = self
            .rules
            .iter()
            .map(|(_, r)| range.binary_search(&r).expect("range word present") as u32)
            .collect();
        Ok(permutation_parity(&positions))
    }

    /// Whether the element lies in `V_n'` (odd `n`).
    pub fn in_derived_subgroup(&self) -> Result<bool> {
        Ok(self.leaf_parity()?.is_even())
    }

    /// Number of domain words inside cylinder `u` that are moved.
    pub fn moves_inside(&self, u: &Word) -> bool {
        let mut moved = false;
        self.for_each_piece(None, u, |c, image| moved |= c != image);
        moved
    }

    /// Words on which `self` and `other` are compared when refining both.
    pub fn refine_with(&self, other: &Element) -> Result<Basis> {
        self.check_same(other)?;
        words::common_refinement(&self.domain(), &other.domain())
    }
}

/// Parity of a permutation given by images of `0..n`.
pub fn permutation_parity(images: &[u32]) -> Parity {
    let mut seen = vec![false; images.len()];
    let mut odd = false;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i] as usize;
            len += 1;
        }
        odd ^= len % 2 == 0;
    }
    Parity::from_odd(odd)
}

/// A permutation of the words of a basis.
#[derive(Clone, Debug)]
pub(crate) struct BasisPermutation {
    pub(crate) words: Vec<Word>,
    pub(crate) images: Vec<u32>,
}

impl BasisPermutation {
    pub(crate) fn cycles(&self) -> Vec<Vec<Word>> {
        let mut seen = vec![false; self.words.len()];
        let mut out = Vec::new();
        for start in 0..self.words.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(self.words[i].clone());
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub(crate) fn power(&self, e: &BigUint) -> BasisPermutation {
        let n = self.words.len();
        let mut images = vec![0u32; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i] as usize;
            }
            let len = cycle.len();
            let shift = (e % BigUint::from(len)).to_usize().expect("reduced below len");
            for (pos, &w) in cycle.iter().enumerate() {
                images[w] = cycle[(pos + shift) % len] as u32;
            }
        }
        BasisPermutation {
            words: self.words.clone(),
            images,
        }
    }

    pub(crate) fn to_element(&self, sig: Signature) -> Element {
        let rules = self
            .words
            .iter()
            .zip(&self.images)
            .map(|(w, &i)| (w.clone(), self.words[i as usize].clone()))
            .collect();
        Element { sig, rules }
    }
}

/// Distinct domain words of a set of elements (used to test disjointness).
pub fn moved_words(elements: &[Element]) -> BTreeSet<Word> {
    elements.iter().flat_map(Element::moved_cylinder_upper).collect()
}
