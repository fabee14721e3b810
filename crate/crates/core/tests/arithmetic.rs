use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thompson_core::random::{random_cycles, random_element, random_point};
use thompson_core::text::{format_cycles, parse_cycles, parse_point, parse_word};
use thompson_core::words::{common_refinement, extend_to_basis, is_basis};
use thompson_core::{CycleDecomposition, Element, Signature, Word};

fn signatures() -> Vec<Signature> {
    vec![
        Signature::higman(2).unwrap(),
        Signature::higman(3).unwrap(),
        Signature::higman(4).unwrap(),
        Signature::higman_derived(3).unwrap(),
        Signature::brin(1).unwrap(),
        Signature::brin(2).unwrap(),
        Signature::brin(3).unwrap(),
    ]
}

fn sig_strategy() -> impl Strategy<Value = Signature> {
    proptest::sample::select(signatures())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn el(sig: &Signature, rules: &[(&str, &str)]) -> Element {
    let rules = rules
        .iter()
        .map(|(a, b)| (parse_word(sig, a).unwrap(), parse_word(sig, b).unwrap()))
        .collect();
    Element::new(*sig, rules).unwrap()
}

/// Replaces one rule `d → r` by its `n` children `d.a → r.a`.
fn expand_rule(g: &Element, i: usize, coord: usize) -> Element {
    let sig = g.signature();
    let mut rules = g.rules().to_vec();
    let (d, r) = rules.remove(i);
    for a in 0..sig.alphabet() {
        rules.push((d.child(coord, a as u8), r.child(coord, a as u8)));
    }
    Element::new(sig, rules).unwrap()
}

#[test]
fn point_action_goldens() {
    let v2 = Signature::higman(2).unwrap();
    let alpha = parse_cycles(&v2, "(000 001)(10 110 111)").unwrap().to_element();
    let beta = parse_cycles(&v2, "(001 010 011 100 101 110 111)").unwrap().to_element();
    let gamma = el(&v2, &[("00", "0"), ("01", "10"), ("1", "11")]);
    let x = parse_point(&v2, "(10)").unwrap();
    assert_eq!(x.apply(&alpha).unwrap(), parse_point(&v2, "110(10)").unwrap());
    assert_eq!(x.apply(&beta).unwrap(), parse_point(&v2, "110(01)").unwrap());
    assert_eq!(x.apply(&gamma).unwrap(), parse_point(&v2, "11(01)").unwrap());
}

#[test]
fn inverse_of_the_figure_element() {
    let v2 = Signature::higman(2).unwrap();
    let gamma = el(&v2, &[("00", "0"), ("01", "10"), ("1", "11")]);
    let inv = el(&v2, &[("0", "00"), ("10", "01"), ("11", "1")]);
    assert!(gamma.invert().equals(&inv).unwrap());
    assert!(gamma.compose(&inv).unwrap().is_identity());
}

#[test]
fn reduce_is_unique_on_expanded_pairs() {
    let mut r = rng(7);
    for n in 2..=5 {
        let sig = Signature::higman(n).unwrap();
        for _ in 0..40 {
            let g = random_element(&mut r, &sig, 5);
            let mut h = g.clone();
            for step in 0..3 {
                h = expand_rule(&h, (step * 7) % h.len(), 0);
            }
            assert!(g.equals(&h).unwrap());
            assert_eq!(g.reduce().unwrap().rules(), h.reduce().unwrap().rules());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn composition_is_associative(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_element(&mut r, &sig, 4);
        let g = random_element(&mut r, &sig, 4);
        let h = random_element(&mut r, &sig, 4);
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
    }

    #[test]
    fn inverses_cancel(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_element(&mut r, &sig, 5);
        prop_assert!(g.compose(&g.invert()).unwrap().is_identity());
        prop_assert!(g.invert().compose(&g).unwrap().is_identity());
        prop_assert!(g.invert().invert().equals(&g).unwrap());
    }

    #[test]
    fn equality_survives_expansion(sig in sig_strategy(), seed in any::<u64>(), coord in 0usize..3) {
        let mut r = rng(seed);
        let g = random_element(&mut r, &sig, 4);
        let coord = coord % sig.dims();
        let h = expand_rule(&g, seed as usize % g.len(), coord);
        prop_assert!(g.equals(&h).unwrap());
        prop_assert!(h.equals(&g).unwrap());
        prop_assert!(g.simplify().equals(&h.simplify()).unwrap());
    }

    #[test]
    fn action_on_points_respects_composition(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_element(&mut r, &sig, 4);
        let g = random_element(&mut r, &sig, 4);
        let x = random_point(&mut r, &sig, 4);
        let lhs = x.apply(&f.compose(&g).unwrap()).unwrap();
        let rhs = x.apply(&f).unwrap().apply(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn localization_is_a_homomorphism(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_element(&mut r, &sig, 3);
        let g = random_element(&mut r, &sig, 3);
        let u = thompson_core::random::random_word(&mut r, &sig, 2);
        let lhs = f.compose(&g).unwrap().localize(&u).unwrap();
        let rhs = f.localize(&u).unwrap().compose(&g.localize(&u).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        prop_assert!(lhs.is_localized_in(&u));
    }

    #[test]
    fn cycles_round_trip(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_cycles(&mut r, &sig, 6, 3);
        let g = c.to_element();
        let back = CycleDecomposition::from_element(&g).unwrap();
        prop_assert!(back.to_element().equals(&g).unwrap());
        prop_assert_eq!(g.order().unwrap(), c.order());
        let text = format_cycles(&sig, c.cycles());
        prop_assert_eq!(parse_cycles(&sig, &text).unwrap(), c);
    }

    #[test]
    fn powers_agree_with_repeated_products(sig in sig_strategy(), seed in any::<u64>(), e in 0u64..12) {
        let mut r = rng(seed);
        let c = random_cycles(&mut r, &sig, 5, 2);
        let g = c.to_element();
        let mut acc = Element::identity(sig);
        for _ in 0..e {
            acc = acc.compose(&g).unwrap();
        }
        prop_assert!(g.pow(e).equals(&acc).unwrap());
    }

    #[test]
    fn completion_and_refinement_are_bases(sig in sig_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = thompson_core::random::random_basis(&mut r, &sig, 5);
        let b = thompson_core::random::random_basis(&mut r, &sig, 5);
        let common = common_refinement(&a, &b).unwrap();
        prop_assert!(common.refines(&a) && common.refines(&b));
        let some: Vec<Word> = a.words().iter().step_by(2).cloned().collect();
        let full = extend_to_basis(&sig, &some).unwrap();
        prop_assert!(is_basis(&sig, full.words()).unwrap());
        prop_assert!(some.iter().all(|w| full.contains(w)));
    }

    #[test]
    fn leaf_parity_is_a_homomorphism(n in proptest::sample::select(vec![3u32, 5, 7]), seed in any::<u64>()) {
        let sig = Signature::higman(n).unwrap();
        let mut r = rng(seed);
        let f = random_element(&mut r, &sig, 4);
        let g = random_element(&mut r, &sig, 4);
        let fg = f.compose(&g).unwrap();
        let expected = f.leaf_parity().unwrap().is_even() == g.leaf_parity().unwrap().is_even();
        prop_assert_eq!(fg.leaf_parity().unwrap().is_even(), expected);
        let h = expand_rule(&f, 0, 0);
        prop_assert_eq!(h.leaf_parity().unwrap(), f.leaf_parity().unwrap());
    }
}
