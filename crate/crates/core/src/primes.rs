//! Primality and the prime choices behind the named generators.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{Family, Signature};

/// Deterministic primality by trial division; the arguments used here stay
/// far below the range where this is slow.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes below `limit`.
pub fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit.max(2)];
    let mut out = Vec::new();
    for i in 2..limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j < limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Smallest prime `p` with `lo ≤ p < hi`.
pub fn smallest_prime_in(lo: u64, hi: u64) -> Option<u64> {
    (lo..hi).find(|&p| is_prime(p))
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut p = n + 1;
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// The primes fixing the cycle lengths of the generators: `ζ` has length
/// `p` (Higman families) and `β` has length `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePair {
    /// `None` for Brin signatures, where `ζ` has length `8^m / 4`.
    pub p: Option<u64>,
    pub q: u64,
}

/// Largest Brin dimension for which `8^m` fits comfortably in a `u64`.
pub const MAX_PRIME_DIMENSION: u32 = 20;

/// `p = 2` when `n = 2`, else the smallest prime in `[n³/4, n³/2)`; `q` is
/// the smallest prime in `(3n³/4, n³)`, or in `(3·8^m/4, 8^m)` for `mV`.
pub fn choose_primes(sig: &Signature) -> Result<PrimePair> {
    match sig.family() {
        Family::Higman | Family::HigmanDerived => {
            let n3 = (sig.arity() as u64).pow(3);
            let p = if sig.arity() == 2 {
                2
            } else {
                // ceil(n³/4) ≤ p < n³/2
                smallest_prime_in(n3.div_ceil(4), n3.div_ceil(2)).expect("Bertrand-type range")
            };
            let q = smallest_prime_in(3 * n3 / 4 + 1, n3).expect("Bertrand-type range");
            Ok(PrimePair { p: Some(p), q })
        }
        Family::Brin => {
            if sig.arity() > MAX_PRIME_DIMENSION {
                return Err(Error::Precondition("Brin dimension too large for prime selection"));
            }
            let e = 8u64.pow(sig.arity());
            let q = smallest_prime_in(3 * e / 4 + 1, e).expect("Bertrand-type range");
            Ok(PrimePair { p: None, q })
        }
    }
}
