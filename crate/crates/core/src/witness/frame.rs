//! A displaced cylinder and the basis built around it.

use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::words::{extend_to_basis, Word};

/// The basis `{u, v, w_1, …, w_ℓ}` where `g` maps the cylinder `u` onto the
/// disjoint cylinder `v` by the prefix rule `u → v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub u: Word,
    pub v: Word,
    pub links: Vec<Word>,
}

impl Frame {
    /// `u`, `v`, then the links in order.
    pub fn basis(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.links.len() + 2);
        out.push(self.u.clone());
        out.push(self.v.clone());
        out.extend(self.links.iter().cloned());
        out
    }
}

/// A word `u` with `u ⊥ ug`, on which `g` acts by a prefix rule.
///
/// Takes the lexicographically first moved rule `d ↦ r` of the simplified
/// pair. If `d ⊥ r` this is `d`; otherwise `d` is extended by one letter in
/// a coordinate where `d` and `r` differ: if the longer of the two continues
/// with `a` past the shorter, append the least `b ≠ a`.
pub fn displaced_word(g: &Element) -> Result<Word> {
    let reduced = g.simplify();
    let (d, r) = reduced
        .rules()
        .iter()
        .find(|(d, r)| d != r)
        .ok_or(Error::Trivial)?;
    if d.incomparable(r) {
        return Ok(d.clone());
    }
    let i = (0..d.dims())
        .find(|&i| d.coord(i) != r.coord(i))
        .expect("moved rule differs in some coordinate");
    let (short, long) = if d.coord(i).len() < r.coord(i).len() {
        (d.coord(i), r.coord(i))
    } else {
        (r.coord(i), d.coord(i))
    };
    let a = long[short.len()];
    let b = if a == 0 { 1 } else { 0 };
    Ok(d.child(i, b))
}

pub fn build_frame(g: &Element) -> Result<Frame> {
    let u = displaced_word(g)?;
    let v = g.cylinder_image(&u).expect("displaced word lies inside one rule");
    debug_assert!(u.incomparable(&v));
    let sig = g.signature();
    let basis = extend_to_basis(&sig, &[u.clone(), v.clone()])?;
    let links = basis
        .into_words()
        .into_iter()
        .filter(|w| *w != u && *w != v)
        .collect();
    Ok(Frame { u, v, links })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_cycles, parse_word};
    use crate::words::Signature;

    fn w(sig: &Signature, s: &str) -> Word {
        parse_word(sig, s).unwrap()
    }

    #[test]
    fn transposition_frame() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
        let f = build_frame(&g).unwrap();
        assert_eq!(f.u, w(&v2, "00"));
        assert_eq!(f.v, w(&v2, "01"));
        assert_eq!(f.links, alloc::vec![w(&v2, "1")]);
    }

    #[test]
    fn swap_frame_has_no_links() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(0 1)").unwrap().to_element();
        let f = build_frame(&g).unwrap();
        assert_eq!((f.u.clone(), f.v.clone()), (w(&v2, "0"), w(&v2, "1")));
        assert!(f.links.is_empty());
        let v3 = Signature::higman(3).unwrap();
        let g = parse_cycles(&v3, "(0 1)").unwrap().to_element();
        assert_eq!(build_frame(&g).unwrap().basis(), alloc::vec![w(&v3, "0"), w(&v3, "1"), w(&v3, "2")]);
    }

    #[test]
    fn comparable_image_is_adjusted() {
        let v2 = Signature::higman(2).unwrap();
        let g = Element::new(
            v2,
            alloc::vec![(w(&v2, "0"), w(&v2, "00")), (w(&v2, "10"), w(&v2, "01")), (w(&v2, "11"), w(&v2, "1"))],
        )
        .unwrap();
        let u = displaced_word(&g).unwrap();
        assert_eq!(u, w(&v2, "01"));
        assert!(u.incomparable(&g.cylinder_image(&u).unwrap()));
        // The inverse has 00 ↦ 0 first: the image is the shorter word.
        let u = displaced_word(&g.invert()).unwrap();
        assert_eq!(u, w(&v2, "001"));
        assert!(u.incomparable(&g.invert().cylinder_image(&u).unwrap()));
        assert_eq!(displaced_word(&Element::identity(v2)), Err(Error::Trivial));
    }

    #[test]
    fn brin_adjustment() {
        let b2 = Signature::brin(2).unwrap();
        let h = Element::new(
            b2,
            alloc::vec![
                (w(&b2, "[0,]"), w(&b2, "[00,]")),
                (w(&b2, "[10,]"), w(&b2, "[01,]")),
                (w(&b2, "[11,]"), w(&b2, "[1,]")),
            ],
        )
        .unwrap();
        let u = displaced_word(&h).unwrap();
        assert_eq!(u, w(&b2, "[01,]"));
        assert!(u.incomparable(&h.cylinder_image(&u).unwrap()));
    }
}
