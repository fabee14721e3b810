use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thompson_core::random::{random_nontrivial, random_point, random_word};
use thompson_core::text::parse_cycles;
use thompson_core::witness::certificate::Step;
use thompson_core::witness::rewrite::{three_cycle_generator, transposition_generator};
use thompson_core::witness::{
    build_partner, double_transposition_split, express_three_cycle, express_transposition, verify_certificate, Expr,
};
use thompson_core::{Element, PeriodicPoint, Signature, Word};

/// Applies an expression to a point one generator at a time, without
/// multiplying elements.
fn apply_expr(e: &Expr, x: &PeriodicPoint, gen: &dyn Fn(&Word) -> Element, inverse: bool) -> PeriodicPoint {
    match e {
        Expr::Gen(z) => {
            let g = gen(z);
            x.apply(&if inverse { g.invert() } else { g }).unwrap()
        }
        Expr::Inverse(inner) => apply_expr(inner, x, gen, !inverse),
        Expr::Product(fs) => {
            let mut y = x.clone();
            if inverse {
                for f in fs.iter().rev() {
                    y = apply_expr(f, &y, gen, true);
                }
            } else {
                for f in fs {
                    y = apply_expr(f, &y, gen, false);
                }
            }
            y
        }
        Expr::Conjugate(base, by) => {
            let mut y = x.clone();
            for c in by.iter().rev() {
                y = apply_expr(c, &y, gen, true);
            }
            y = apply_expr(base, &y, gen, inverse);
            for c in by {
                y = apply_expr(c, &y, gen, false);
            }
            y
        }
    }
}

/// Points starting with each of the given words, plus random points.
fn sample_points(r: &mut ChaCha8Rng, sig: &Signature, words: &[&Word]) -> Vec<PeriodicPoint> {
    let mut out = Vec::new();
    for w in words {
        for _ in 0..3 {
            let tail = random_point(r, sig, 3);
            let mut pre = w.coord(0).to_vec();
            pre.extend_from_slice(tail.coords()[0].preperiod());
            out.push(PeriodicPoint::higman(&pre, tail.coords()[0].period()).unwrap());
        }
    }
    for _ in 0..6 {
        out.push(random_point(r, sig, 5));
    }
    out
}

fn agree_on_points(
    r: &mut ChaCha8Rng,
    sig: &Signature,
    e: &Expr,
    gen: &dyn Fn(&Word) -> Element,
    want: &Element,
    words: &[&Word],
) {
    for x in sample_points(r, sig, words) {
        assert_eq!(apply_expr(e, &x, gen, false), x.apply(want).unwrap(), "at {x}");
    }
}

fn cycle(sig: &Signature, words: &[&Word]) -> Element {
    thompson_core::CycleDecomposition::new(*sig, vec![words.iter().map(|w| (*w).clone()).collect()])
        .unwrap()
        .to_element()
}

fn word_near(r: &mut ChaCha8Rng, sig: &Signature, anchors: &[&Word], min: usize, max: usize) -> Word {
    let len = r.gen_range(min..=max);
    let mut w = if r.gen_bool(0.6) {
        anchors[r.gen_range(0..anchors.len())].clone()
    } else {
        Word::root(1)
    };
    while w.depth() < len {
        w = w.child(0, r.gen_range(0..sig.alphabet()) as u8);
    }
    w
}

fn level_word(r: &mut ChaCha8Rng, sig: &Signature, k: usize) -> Word {
    let mut w = Word::root(1);
    for _ in 0..k {
        w = w.child(0, r.gen_range(0..sig.alphabet()) as u8);
    }
    w
}

#[test]
fn transposition_rewriting_on_random_instances() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 100 {
        let sig = Signature::higman(r.gen_range(2..=4)).unwrap();
        let u0 = level_word(&mut r, &sig, 2);
        let v = word_near(&mut r, &sig, &[&u0], 2, 4);
        let w = word_near(&mut r, &sig, &[&u0], 2, 4);
        if !v.incomparable(&w) {
            continue;
        }
        let e = express_transposition(&sig, &u0, &v, &w).unwrap();
        let got = e.evaluate(&sig, &|z: &Word| transposition_generator(&sig, &u0, z)).unwrap();
        let want = cycle(&sig, &[&v, &w]);
        assert!(got.equals(&want).unwrap());
        let gen = |z: &Word| cycle(&sig, &[&u0, z]);
        agree_on_points(&mut r, &sig, &e, &gen, &want, &[&u0, &v, &w]);
        done += 1;
    }
}

#[test]
fn three_cycle_rewriting_on_random_instances() {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    let mut done = 0;
    while done < 100 {
        let sig = Signature::higman(if r.gen_bool(0.5) { 3 } else { 5 }).unwrap();
        let u0 = level_word(&mut r, &sig, 2);
        let u1 = level_word(&mut r, &sig, 2);
        if u0 == u1 {
            continue;
        }
        let ws: Vec<Word> = (0..3).map(|_| word_near(&mut r, &sig, &[&u0, &u1], 2, 4)).collect();
        if !(ws[0].incomparable(&ws[1]) && ws[0].incomparable(&ws[2]) && ws[1].incomparable(&ws[2])) {
            continue;
        }
        let e = express_three_cycle(&sig, &u0, &u1, &ws[0], &ws[1], &ws[2]).unwrap();
        let got = e.evaluate(&sig, &|z: &Word| three_cycle_generator(&sig, &u0, &u1, z)).unwrap();
        let want = cycle(&sig, &[&ws[0], &ws[1], &ws[2]]);
        assert!(got.equals(&want).unwrap(), "{ws:?} with {u0:?} {u1:?}");
        let gen = |z: &Word| cycle(&sig, &[&u0, &u1, z]);
        agree_on_points(&mut r, &sig, &e, &gen, &want, &[&u0, &u1, &ws[0], &ws[1], &ws[2]]);
        done += 1;
    }
}

#[test]
fn double_transposition_split_on_random_instances() {
    let mut r = ChaCha8Rng::seed_from_u64(13);
    let mut done = 0;
    while done < 100 {
        let sig = Signature::higman(if r.gen_bool(0.5) { 3 } else { 5 }).unwrap();
        let ws: Vec<Word> = (0..4).map(|_| random_word(&mut r, &sig, 2)).collect();
        if !(ws[0].incomparable(&ws[1]) && ws[2].incomparable(&ws[3])) {
            continue;
        }
        let parts = double_transposition_split(&sig, &ws[0], &ws[1], &ws[2], &ws[3]).unwrap();
        let k = (parts.len() as f64).log(sig.alphabet() as f64).round() as u32;
        assert_eq!(parts.len() as u64, (sig.alphabet() as u64).pow(k));
        let mut acc = Element::identity(sig);
        for p in &parts {
            acc = acc.compose(&p.to_element(&sig).unwrap()).unwrap();
        }
        let want = cycle(&sig, &[&ws[0], &ws[1]]).compose(&cycle(&sig, &[&ws[2], &ws[3]])).unwrap();
        assert!(acc.equals(&want).unwrap());
        done += 1;
    }
}

fn flavors() -> Vec<Signature> {
    vec![
        Signature::higman(2).unwrap(),
        Signature::higman(3).unwrap(),
        Signature::higman(4).unwrap(),
        Signature::higman_derived(3).unwrap(),
        Signature::brin(1).unwrap(),
        Signature::brin(2).unwrap(),
    ]
}

fn check_parts(g: &Element, sig: &Signature) {
    let p = build_partner(g, sig).unwrap();
    let parts = &p.parts;
    let factors = parts.factors();
    let mut product = Element::identity(*sig);
    for f in &factors {
        product = product.compose(f).unwrap();
    }
    assert!(product.equals(&p.h).unwrap());
    for (i, a) in factors.iter().enumerate() {
        assert_eq!(a.order().unwrap(), parts.orders[i]);
        for b in &factors[i + 1..] {
            assert!(a.compose(b).unwrap().equals(&b.compose(a).unwrap()).unwrap());
        }
        for o in &parts.orders[i + 1..] {
            assert!(parts.orders[i].gcd(o).is_one());
        }
        assert!(p.h.power(&parts.exponents[i]).equals(a).unwrap());
    }
    for (z, &prime) in parts.z.iter().zip(&parts.primes) {
        let cycles = z.cycles().unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len() as u64, prime);
    }
    let report = verify_certificate(&p.certificate);
    assert!(report.passed(), "{sig}: {:?} {:?}", report.first_failure(), report.global);
}

#[test]
fn partner_invariants_on_random_elements() {
    let mut r = ChaCha8Rng::seed_from_u64(14);
    for sig in flavors() {
        for _ in 0..12 {
            let g = random_nontrivial(&mut r, &sig, 4);
            check_parts(&g, &sig);
        }
    }
}

#[test]
fn example_4_1_link_targets() {
    let v2 = Signature::higman(2).unwrap();
    let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
    let p = build_partner(&g, &v2).unwrap();
    let orders: Vec<BigUint> = [6u32, 7, 5, 11].iter().map(|&o| BigUint::from(o)).collect();
    assert_eq!(p.parts.orders, orders);
    let claims: Vec<&Element> = p
        .certificate
        .steps
        .iter()
        .filter_map(Step::value)
        .collect();
    for target in ["(000 01)", "(000 1)"] {
        let want = parse_cycles(&v2, target).unwrap().to_element();
        assert!(claims.iter().any(|c| c.equals(&want).unwrap()), "{target}");
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let v2 = Signature::higman(2).unwrap();
    let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
    let cert = build_partner(&g, &v2).unwrap().certificate;

    let mut bad = cert.clone();
    if let Step::PowerExtract { exponent, .. } = &mut bad.steps[0] {
        *exponent += 1u32;
    }
    let report = verify_certificate(&bad);
    assert!(!report.passed());
    assert_eq!(report.first_failure().unwrap().index, 0);

    let mut bad = cert.clone();
    let i = bad
        .steps
        .iter()
        .rposition(|s| matches!(s, Step::LocalizedMember { .. }))
        .unwrap();
    if let Step::LocalizedMember { element, .. } = &mut bad.steps[i] {
        *element = parse_cycles(&v2, "(000 1)").unwrap().to_element();
    }
    let report = verify_certificate(&bad);
    assert!(!report.passed());
    assert_eq!(report.first_failure().unwrap().index, i);

    let mut bad = cert;
    if let Some(Step::CitedClosure { links, .. }) = bad.steps.last_mut() {
        links.pop();
    }
    let report = verify_certificate(&bad);
    assert!(!report.passed());
    assert_eq!(report.first_failure().unwrap().kind, "CitedClosure");
}
