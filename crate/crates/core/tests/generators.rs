use num_bigint::BigUint;

use thompson_core::permgroup::{project_level, verify_lemma_2_8, GroupClass, PermGroup};
use thompson_core::perms::{alpha, alpha_prime, beta, delta, delta_prime, zeta};
use thompson_core::primes::{choose_primes, is_prime};
use thompson_core::Signature;

#[test]
fn delta_cycle_lengths() {
    for n in 2..=12 {
        let sig = Signature::higman(n).unwrap();
        let d = delta(&sig);
        assert_eq!(d.cycles().len(), 1);
        assert_eq!(d.cycles()[0].len(), n as usize + 1);
        if n % 2 == 1 {
            let d = delta_prime(n).unwrap();
            assert_eq!(d.cycles().len(), 1);
            assert_eq!(d.cycles()[0].len(), n as usize + 2);
        }
    }
    for m in 1..=4 {
        let d = delta(&Signature::brin(m).unwrap());
        assert_eq!(d.cycles().len(), 1);
        assert_eq!(d.cycles()[0].len(), 2 * m as usize + 1);
    }
}

#[test]
fn primes_lie_in_their_ranges() {
    for n in 2..=12u64 {
        let pair = choose_primes(&Signature::higman(n as u32).unwrap()).unwrap();
        let n3 = n.pow(3);
        let p = pair.p.unwrap();
        assert!(is_prime(p) && is_prime(pair.q));
        if n == 2 {
            assert_eq!(p, 2);
        } else {
            assert!(4 * p >= n3 && 2 * p < n3, "n = {n}: p = {p}");
        }
        assert!(4 * pair.q > 3 * n3 && pair.q < n3, "n = {n}: q = {}", pair.q);
    }
    let pair = choose_primes(&Signature::higman(3).unwrap()).unwrap();
    assert_eq!((pair.p, pair.q), (Some(7), 23));
    for m in 1..=4u32 {
        let q = choose_primes(&Signature::brin(m).unwrap()).unwrap().q;
        let e = 8u64.pow(m);
        assert!(is_prime(q) && 4 * q > 3 * e && q < e);
    }
}

#[test]
fn generator_orders() {
    let v2 = Signature::higman(2).unwrap();
    assert_eq!(alpha(&v2).unwrap().order(), BigUint::from(6u32));
    assert_eq!(beta(&v2).unwrap().order(), BigUint::from(7u32));
    let v3 = Signature::higman(3).unwrap();
    assert_eq!(alpha(&v3).unwrap().order(), BigUint::from(28u32));
    assert_eq!(alpha_prime(3).unwrap().order(), BigUint::from(35u32));
    let b2 = Signature::brin(2).unwrap();
    assert_eq!(alpha(&b2).unwrap().order(), BigUint::from(80u32));
}

#[test]
fn lemma_2_8_small_degrees() {
    for n in 7..=12 {
        for a in 2..n {
            for b in a..n {
                assert!(verify_lemma_2_8(n, a, b).unwrap(), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn level_three_projections_contain_the_alternating_group() {
    let cases = [
        (Signature::higman(2).unwrap(), GroupClass::Symmetric),
        (Signature::higman(3).unwrap(), GroupClass::Alternating),
        (Signature::brin(1).unwrap(), GroupClass::Symmetric),
    ];
    for (sig, class) in cases {
        let z = project_level(&zeta(&sig).unwrap(), 3).unwrap();
        let b = project_level(&beta(&sig).unwrap(), 3).unwrap();
        let g = PermGroup::new(z.degree(), vec![z, b]).unwrap();
        assert!(g.verify_chain());
        assert_eq!(g.classify(), class, "{sig}");
    }
}
