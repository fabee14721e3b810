//! The generating partner `h = x y z_0 ⋯ z_ℓ` of a nontrivial element and
//! its certificate.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::perms::{self, CycleDecomposition};
use crate::primes::{self, choose_primes};
use crate::words::{self, Family, Signature, Word};

use super::certificate::{expected_link, zero_child, Certificate, Citation, Membership, Step, Term};
use super::frame::{build_frame, Frame};
use super::transporter::transporter;

/// The pieces of the partner.
#[derive(Clone, Debug)]
pub struct PartnerParts {
    pub frame: Frame,
    /// `α_[u]` (or `α'_[u]`).
    pub x: Element,
    /// `β_[v]`.
    pub y: Element,
    /// `z_0, …, z_ℓ`, each a `p_i`-cycle.
    pub z: Vec<Element>,
    /// Depth-3 fixed words of `α` (or `α'`) and of `β`.
    pub a: Word,
    pub b: Word,
    /// `u_i = u.a.u_i'`.
    pub branches: Vec<Word>,
    /// `p_0, …, p_ℓ`.
    pub primes: Vec<u64>,
    /// Orders of `x`, `y`, `z_0`, …, `z_ℓ`.
    pub orders: Vec<BigUint>,
    /// Exponents `e` with `h^e` equal to the corresponding factor.
    pub exponents: Vec<BigUint>,
    pub h: Element,
}

impl PartnerParts {
    /// `x`, `y`, `z_0`, …, `z_ℓ` in order.
    pub fn factors(&self) -> Vec<&Element> {
        let mut out = vec![&self.x, &self.y];
        out.extend(self.z.iter());
        out
    }

    /// The order of `h`.
    pub fn order(&self) -> BigUint {
        self.orders.iter().fold(BigUint::one(), |acc, o| acc.lcm(o))
    }
}

#[derive(Clone, Debug)]
pub struct Partner {
    pub h: Element,
    pub parts: PartnerParts,
    pub certificate: Certificate,
}

/// `e ≡ 1 (mod o_j)` and `e ≡ 0 (mod o_i)` for `i ≠ j`, for pairwise
/// coprime orders.
pub fn crt_exponents(orders: &[BigUint]) -> Result<Vec<BigUint>> {
    let total: BigUint = orders.iter().product();
    orders
        .iter()
        .map(|o| {
            if o.is_one() {
                return Ok(BigUint::zero());
            }
            let rest = &total / o;
            let inv = (&rest % o)
                .modinv(o)
                .ok_or(Error::Precondition("factor orders are not pairwise coprime"))?;
            Ok((rest * inv) % &total)
        })
        .collect()
}

/// Digits of `i` in base `alphabet`, exactly `len` of them.
fn branch_suffix(sig: &Signature, i: u64, len: u32) -> Word {
    let base = sig.alphabet() as u64;
    let mut digits = vec![0u8; len as usize];
    let mut rest = i;
    for d in digits.iter_mut().rev() {
        *d = (rest % base) as u8;
        rest /= base;
    }
    let mut coords = vec![Vec::new(); sig.dims()];
    coords[0] = digits;
    Word::from_coords(coords)
}

fn cycle_element(sig: &Signature, cycle: Vec<Word>) -> Result<Element> {
    Ok(CycleDecomposition::new(*sig, vec![cycle])?.to_element())
}

/// Builds the partner of `g` in the group named by `flavor`.
pub fn build_partner(g: &Element, flavor: &Signature) -> Result<Partner> {
    if !g.signature().same_space(flavor) {
        return Err(Error::SignatureMismatch);
    }
    let sig = *flavor;
    let g = g.clone().with_signature(sig)?;
    let derived = sig.family() == Family::HigmanDerived;
    if derived && !g.in_derived_subgroup()? {
        return Err(Error::FlavorMismatch);
    }
    let frame = build_frame(&g)?;
    let (u, v) = (frame.u.clone(), frame.v.clone());

    let alpha = match sig.family() {
        Family::HigmanDerived => perms::alpha_prime(sig.arity())?.with_signature(sig)?,
        _ => perms::alpha(&sig)?,
    };
    let beta = perms::beta(&sig)?;
    let q = choose_primes(&sig)?.q;
    let a = perms::fixed_word(&alpha.to_element(), 3)?;
    let b = perms::fixed_word(&beta.to_element(), 3)?;
    let x_cycles = alpha.localize(&u);
    let y_cycles = beta.localize(&v);
    let x_order = x_cycles.order();

    let ell = frame.links.len();
    let mut suffix_len = 0u32;
    while (sig.alphabet() as u64).pow(suffix_len) < ell as u64 + 1 {
        suffix_len += 1;
    }
    let branches: Vec<Word> = (0..=ell)
        .map(|i| u.concat(&a).concat(&branch_suffix(&sig, i as u64, suffix_len)))
        .collect();

    let mut p0 = 5u64;
    while (&x_order % p0).is_zero() || p0 == q {
        p0 = primes::next_prime(p0);
    }
    let mut prime_list = vec![p0];
    let mut last = q.max(p0);
    for _ in 0..ell {
        last = primes::next_prime(last);
        prime_list.push(last);
    }

    // Targets: w_0 = vb, then the links.
    let targets: Vec<Word> = core::iter::once(v.concat(&b)).chain(frame.links.iter().cloned()).collect();
    let mut z_cycles = Vec::with_capacity(ell + 1);
    let mut digit_lens = Vec::with_capacity(ell + 1);
    for i in 0..=ell {
        let p = prime_list[i];
        let k = words::digits_needed(&sig, p - 1);
        let mut cycle: Vec<Word> = (0..p - 1)
            .map(|j| Ok(branches[i].concat(&words::nary_expansion(&sig, j, k)?)))
            .collect::<Result<_>>()?;
        cycle.push(targets[i].clone());
        z_cycles.push(cycle);
        digit_lens.push(k);
    }

    let mut all_cycles: Vec<Vec<Word>> = x_cycles.cycles().to_vec();
    all_cycles.extend(y_cycles.cycles().iter().cloned());
    all_cycles.extend(z_cycles.iter().cloned());
    let h = CycleDecomposition::new(sig, all_cycles)?.to_element();

    let x = x_cycles.to_element();
    let y = y_cycles.to_element();
    let z: Vec<Element> = z_cycles
        .iter()
        .map(|c| cycle_element(&sig, c.clone()))
        .collect::<Result<_>>()?;
    let mut orders = vec![x_order, BigUint::from(q)];
    orders.extend(prime_list.iter().map(|&p| BigUint::from(p)));
    let exponents = crt_exponents(&orders)?;

    let parts = PartnerParts {
        frame,
        x,
        y,
        z,
        a,
        b,
        branches,
        primes: prime_list,
        orders,
        exponents,
        h: h.clone(),
    };
    let certificate = certify(&g, &h, &parts, &digit_lens)?;
    Ok(Partner { h, parts, certificate })
}

struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn push(&mut self, step: Step) -> usize {
        self.steps.push(step);
        self.steps.len() - 1
    }

    fn member(&mut self, element: Element, cylinder: &Word, justification: Membership) -> usize {
        self.push(Step::LocalizedMember {
            element,
            cylinder: cylinder.clone(),
            justification,
        })
    }
}

fn certify(g: &Element, h: &Element, parts: &PartnerParts, digit_lens: &[u32]) -> Result<Certificate> {
    let sig = g.signature();
    let derived = sig.family() == Family::HigmanDerived;
    let (u, v) = (&parts.frame.u, &parts.frame.v);
    let u0 = zero_child(&sig, u);
    let u1 = u.child(0, 1);
    let mut cert = Builder { steps: Vec::new() };

    let factor_steps: Vec<usize> = parts
        .factors()
        .into_iter()
        .zip(&parts.exponents)
        .map(|(f, e)| {
            cert.push(Step::PowerExtract {
                exponent: e.clone(),
                claim: f.clone(),
            })
        })
        .collect();
    let (x_step, y_step) = (factor_steps[0], factor_steps[1]);
    let z_steps = &factor_steps[2..];

    let beta_u = perms::beta(&sig)?.localize(u).to_element();
    let beta_step = cert.push(Step::ConjugateBy {
        base: Term::step(y_step),
        by: vec![Term::g().inv()],
        claim: beta_u,
    });
    let seed = cert.member(
        parts.x.clone(),
        u,
        Membership::Seed {
            citation: Citation::generation(sig.family()),
            alpha: Term::step(x_step),
            beta: Term::step(beta_step),
        },
    );

    // Link generators for w_0 = vb and for every link word.
    let targets: Vec<Word> =
        core::iter::once(v.concat(&parts.b)).chain(parts.frame.links.iter().cloned()).collect();
    let mut link_steps = Vec::with_capacity(targets.len());
    for (i, w) in targets.iter().enumerate() {
        let p = parts.primes[i];
        let k = digit_lens[i];
        let branch = &parts.branches[i];
        let first = branch.concat(&words::nary_expansion(&sig, 0, k)?);
        let cycle_len = if derived { p - 2 } else { p - 1 };
        let s = perms::sigma(&sig, cycle_len, k)?.localize(branch).to_element();
        let s_step = cert.member(s, u, Membership::Within { seed });
        let (reduced, pairs) = if derived {
            let last = branch.concat(&words::nary_expansion(&sig, p - 2, k)?);
            (
                cycle_element(&sig, vec![first.clone(), last.clone(), w.clone()])?,
                vec![(first, u0.clone()), (last, u1.clone())],
            )
        } else {
            (
                cycle_element(&sig, vec![first.clone(), w.clone()])?,
                vec![(first, u0.clone())],
            )
        };
        let t_step = cert.push(Step::ProductOf {
            factors: vec![Term::step(s_step).inv(), Term::step(z_steps[i])],
            claim: reduced,
        });
        let chi = transporter(&sig, &pairs, u, derived)?;
        let chi_step = cert.member(chi, u, Membership::Within { seed });
        link_steps.push(cert.push(Step::ConjugateBy {
            base: Term::step(t_step),
            by: vec![Term::step(chi_step)],
            claim: expected_link(&sig, u, w)?,
        }));
    }

    // The bridge (u0 v), or (u0 u1 v), as a product over one-letter suffixes.
    let wb = v.concat(&parts.b);
    let mut bridge_parts = Vec::new();
    for c in words::level(&sig, 1)? {
        let mut pairs = vec![(u0.clone(), u0.concat(&c))];
        if derived {
            pairs.push((u1.clone(), u1.concat(&c)));
        }
        let phi = transporter(&sig, &pairs, u, derived)?;
        let phi_step = cert.member(phi, u, Membership::Within { seed });
        let psi = transporter(&sig, &[(wb.clone(), v.concat(&c))], v, derived)?;
        let psi_step = cert.member(psi, v, Membership::Conjugate { seed, by: Term::g() });
        let mut cycle = vec![u0.concat(&c)];
        if derived {
            cycle.push(u1.concat(&c));
        }
        cycle.push(v.concat(&c));
        bridge_parts.push(cert.push(Step::ConjugateBy {
            base: Term::step(link_steps[0]),
            by: vec![Term::step(phi_step), Term::step(psi_step)],
            claim: cycle_element(&sig, cycle)?,
        }));
    }
    let bridge = cert.push(Step::ProductOf {
        factors: bridge_parts.into_iter().map(Term::step).collect(),
        claim: expected_link(&sig, u, v)?,
    });

    let conclusion = Citation::closure(sig.family());
    let mut links = vec![Term::step(bridge)];
    links.extend(link_steps[1..].iter().map(|&i| Term::step(i)));
    cert.push(Step::CitedClosure {
        citation: conclusion,
        basis: parts.frame.basis(),
        seed,
        links,
    });
    Ok(Certificate {
        signature: sig,
        g: g.clone(),
        h: h.clone(),
        steps: cert.steps,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_cycles;
    use crate::witness::certificate::verify_certificate;

    #[test]
    fn crt_small() {
        let orders: Vec<BigUint> = [6u32, 7, 5, 11].iter().map(|&o| BigUint::from(o)).collect();
        let e = crt_exponents(&orders).unwrap();
        assert_eq!(e[0], BigUint::from(385u32));
        for (j, ej) in e.iter().enumerate() {
            for (i, o) in orders.iter().enumerate() {
                let r = ej % o;
                assert_eq!(r, if i == j { BigUint::one() } else { BigUint::zero() });
            }
        }
    }

    #[test]
    fn transposition_in_binary_group() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(00 01)").unwrap().to_element();
        let p = build_partner(&g, &v2).unwrap();
        let orders: Vec<u64> = p.parts.orders.iter().map(|o| o.try_into().unwrap()).collect();
        assert_eq!(orders, vec![6, 7, 5, 11]);
        assert_eq!(p.parts.order(), BigUint::from(2310u32));
        assert_eq!(p.parts.exponents[0], BigUint::from(385u32));
        assert!(p.h.power(&p.parts.exponents[0]).equals(&p.parts.x).unwrap());
        let report = verify_certificate(&p.certificate);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn swap_has_a_single_cycle_factor() {
        let v2 = Signature::higman(2).unwrap();
        let g = parse_cycles(&v2, "(0 1)").unwrap().to_element();
        let p = build_partner(&g, &v2).unwrap();
        assert_eq!(p.parts.z.len(), 1);
        assert!(verify_certificate(&p.certificate).passed());
    }

    #[test]
    fn other_flavors() {
        for sig in [
            Signature::higman(3).unwrap(),
            Signature::higman_derived(3).unwrap(),
            Signature::brin(1).unwrap(),
            Signature::brin(2).unwrap(),
        ] {
            let g = crate::text::parse_cycles(&sig, if sig.is_brin() { "([00] [01])" } else { "(0 1 2)" })
                .unwrap_or_else(|_| parse_cycles(&sig, "([00,] [01,])").unwrap())
                .to_element();
            let p = build_partner(&g, &sig).unwrap();
            let report = verify_certificate(&p.certificate);
            assert!(report.passed(), "{sig}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn odd_element_is_rejected_for_the_derived_group() {
        let sig = Signature::higman_derived(3).unwrap();
        let g = parse_cycles(&sig.ambient(), "(0 1)").unwrap().to_element();
        assert!(matches!(build_partner(&g, &sig), Err(Error::FlavorMismatch)));
        let id = Element::identity(sig);
        assert!(matches!(build_partner(&id, &sig), Err(Error::Trivial)));
    }
}
