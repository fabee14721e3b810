//! Randomized end-to-end runs of the partner construction.

use num_integer::Integer;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use thompson_core::random::random_nontrivial;
use thompson_core::text::format_cycles;
use thompson_core::witness::{build_partner, verify_certificate, Partner};
use thompson_core::{Element, Signature};

use crate::calc::format_element;

/// Number of random splits used to grow each fuzz element.
pub const FUZZ_SPLITS: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct FuzzFailure {
    pub case: usize,
    pub element: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzSummary {
    pub family: String,
    pub cases: usize,
    pub seed: u64,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn eq(a: &Element, b: &Element) -> bool {
    a.equals(b).unwrap_or(false)
}

/// Rechecks the structure of a partner: the factors multiply to `h`, commute
/// pairwise, have the recorded pairwise coprime orders, are recovered from `h`
/// by their exponents, the `z_i` are single cycles of prime length, and the
/// certificate verifies.
pub fn check_partner(p: &Partner) -> Result<(), String> {
    let parts = &p.parts;
    let factors = parts.factors();
    let sig = p.h.signature();
    let mut product = Element::identity(sig);
    for f in &factors {
        product = product.compose(f).map_err(|e| e.to_string())?;
    }
    check(eq(&product, &p.h), "factors do not multiply to h")?;
    for (i, a) in factors.iter().enumerate() {
        check(a.order().as_ref() == Some(&parts.orders[i]), "factor order mismatch")?;
        for b in &factors[i + 1..] {
            let ab = a.compose(b).map_err(|e| e.to_string())?;
            let ba = b.compose(a).map_err(|e| e.to_string())?;
            check(eq(&ab, &ba), "factors do not commute")?;
        }
        for o in &parts.orders[i + 1..] {
            check(parts.orders[i].gcd(o).is_one(), "factor orders are not coprime")?;
        }
        check(eq(&p.h.power(&parts.exponents[i]), a), "exponent does not recover its factor")?;
    }
    for (z, &prime) in parts.z.iter().zip(&parts.primes) {
        let cycles = z.cycles().ok_or("z is not a permutation")?;
        check(cycles.len() == 1 && cycles[0].len() as u64 == prime, "z is not a prime-length cycle")?;
    }
    let report = verify_certificate(&p.certificate);
    if !report.passed() {
        let why = match report.first_failure() {
            Some(v) => format!("certificate step {} ({}) failed: {}", v.index, v.kind, v.detail.clone().unwrap_or_default()),
            None => format!("certificate rejected: {}", report.global.join("; ")),
        };
        return Err(why);
    }
    Ok(())
}

fn describe(g: &Element) -> String {
    match g.cycles() {
        Some(c) => format_cycles(&g.signature(), &c),
        None => format_element(g),
    }
}

/// Element number `case` of the run with the given seed.
pub fn fuzz_element(sig: &Signature, seed: u64, case: usize) -> Element {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    random_nontrivial(&mut rng, sig, FUZZ_SPLITS)
}

/// Builds and checks partners for `cases` random nontrivial elements, in
/// parallel. Elements are drawn per case, so results do not depend on the
/// thread count.
pub fn fuzz(sig: &Signature, cases: usize, seed: u64) -> FuzzSummary {
    let failures = (0..cases)
        .into_par_iter()
        .filter_map(|case| {
            let g = fuzz_element(sig, seed, case);
            let outcome = build_partner(&g, sig)
                .map_err(|e| e.to_string())
                .and_then(|p| check_partner(&p));
            outcome.err().map(|reason| FuzzFailure { case, element: describe(&g), reason })
        })
        .collect();
    FuzzSummary { family: sig.to_string(), cases, seed, failures }
}
